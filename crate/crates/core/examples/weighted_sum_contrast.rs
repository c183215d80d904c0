//! A weighted-sum ranking next to the dominance order: agreement on the
//! pairs dominance decides, and a rank reversal that dominance cannot have.
//!
//! ```text
//! cargo run -p qualdom --example weighted_sum_contrast
//! ```

use qualdom::io::{parse_problem, parse_weights};
use qualdom::prelude::*;

const BUILDING: &str = include_str!("../tests/fixtures/building_design.json");
const REVERSAL: &str = include_str!("../tests/fixtures/rank_reversal.json");
const REVERSAL_WEIGHTS: &str = include_str!("../tests/fixtures/rank_reversal_weights.json");

fn main() -> Result<(), Error> {
    // Pollution is interval-valued, so it has no weighted-sum reading;
    // compare on the other two attributes.
    let mut building = parse_problem(BUILDING)?;
    building.importance.clear();
    let pollution = building.attribute_index("Pollution").expect("fixture has Pollution");
    building.attributes.remove(pollution);
    for alt in &mut building.alternatives {
        alt.values.remove(pollution);
    }
    let w = WeightVector::uniform(building.attributes.len())?;
    let ranking = weighted_sum_rank(&building, &w)?;
    let g = dominance_graph(&building)?;
    for &i in &ranking.order {
        println!("{:<10} {:.3}", building.alternatives[i].id, ranking.scores[i]);
    }
    let report = consistency_report(&ranking.order, &g)?;
    let metrics = agreement_metrics(&ranking.order, &g)?;
    println!(
        "dominance pairs {}, inverted {}, decided {:.0}% of all pairs",
        report.total_reference_pairs,
        report.violated_pairs.len(),
        metrics.decided_ratio * 100.0
    );
    println!();

    let p = parse_problem(REVERSAL)?;
    let w = parse_weights(REVERSAL_WEIGHTS, &p)?;
    let full = weighted_sum_rank(&p, &w)?;
    let order: Vec<&str> = full.order.iter().map(|&i| p.alternatives[i].id.as_str()).collect();
    println!("weighted sum over A, B, C: {}", order.join(" > "));
    for r in rank_reversal_probe(&p, &w)? {
        for (x, y) in &r.reversed_pairs {
            println!("removing {} flips {x} > {y}", r.removed_alternative);
        }
    }
    let g = dominance_graph(&p)?;
    let edges: Vec<String> =
        g.edges.iter().map(|e| format!("{} ≻ {}", g.alternatives[e.winner], g.alternatives[e.loser])).collect();
    println!("dominance edges, with or without any third alternative: {}", edges.join(", "));
    Ok(())
}

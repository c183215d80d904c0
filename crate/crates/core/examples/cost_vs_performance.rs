//! Two alternatives that trade cost against performance, with cost stated
//! as more important.
//!
//! ```text
//! cargo run -p qualdom --example cost_vs_performance
//! ```

use qualdom::prelude::*;

fn main() -> Result<(), Error> {
    let problem = Problem::new(
        vec![
            Attribute::new("Cost", ValueDomain::Numeric { direction: Direction::Minimize }),
            Attribute::new("Perf", ValueDomain::ordinal(["low", "med", "high"])),
        ],
        vec![
            Alternative::new("A", vec![Value::Number(10.0), Value::level("low")]),
            Alternative::new("B", vec![Value::Number(20.0), Value::level("high")]),
        ],
        vec![(0, 1)],
    );
    let engine = DominanceEngine::new(&problem)?;

    for (a, b) in [(0, 1), (1, 0)] {
        print!("{}", engine.explain(a, b)?);
        println!();
    }

    // Without the importance statement the two are a plain trade-off.
    let unranked = Problem { importance: vec![], ..problem.clone() };
    let g = dominance_graph(&unranked)?;
    let maximal: Vec<&str> = g.maximal_set().into_iter().map(|i| g.alternatives[i].as_str()).collect();
    println!("without Cost over Perf: {} dominance edges, maximal: {}", g.edges.len(), maximal.join(", "));
    Ok(())
}

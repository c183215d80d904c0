//! Why the shape of the importance relation matters. With an interval order
//! the dominance relation is always a strict partial order. With the 2+2
//! pattern (a over b, c over d, nothing else) transitivity can fail; this
//! example searches random instances for such a failure and prints it.
//!
//! ```text
//! cargo run -p qualdom --example importance_classes
//! ```

use qualdom::prelude::*;
use qualdom::synth::{random_interval_order, random_problem, SynthConfig};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() -> Result<(), Error> {
    let mut rng = StdRng::seed_from_u64(7);

    let mut checked = 0;
    for _ in 0..500 {
        let importance = random_interval_order(&mut rng, 4);
        let p = random_problem(&mut rng, &SynthConfig::numeric(8, 4), importance);
        assert!(dominance_graph(&p)?.is_spo());
        checked += 1;
    }
    println!("interval-ordered importance: {checked}/{checked} dominance graphs are strict partial orders");

    let two_plus_two = vec![(0, 1), (2, 3)];
    for attempt in 1..=20_000 {
        let p = random_problem(&mut rng, &SynthConfig::numeric(3, 4), two_plus_two.clone());
        let g = dominance_graph(&p)?;
        let Err(violation) = g.spo else { continue };
        println!("2+2 importance: attempt {attempt} gives a dominance graph that is not a strict partial order");
        println!("  {violation}");
        for alt in &p.alternatives {
            let values: Vec<String> = alt.values.iter().map(Value::to_string).collect();
            println!("  {}: {}", alt.id, values.join(", "));
        }
        let directions: Vec<String> = p
            .attributes
            .iter()
            .map(|a| match a.domain {
                ValueDomain::Numeric { direction: Direction::Minimize } => format!("{} min", a.name),
                _ => format!("{} max", a.name),
            })
            .collect();
        println!("  attributes: {} (X0 over X1, X2 over X3)", directions.join(", "));
        for e in &g.edges {
            println!(
                "  {} ≻ {} via {}",
                g.alternatives[e.winner], g.alternatives[e.loser], g.attributes[e.witnesses[0]]
            );
        }
        return Ok(());
    }
    println!("2+2 importance: no violation found in 20000 attempts");
    Ok(())
}

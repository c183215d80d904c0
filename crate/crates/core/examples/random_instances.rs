//! Generate random problems and compare the optimized kernel with the
//! literal quantifier evaluation, timing both.
//!
//! ```text
//! cargo run --release -p qualdom --example random_instances [n] [m]
//! ```

use std::time::Instant;

use qualdom::prelude::*;
use qualdom::synth::{random_interval_order, random_problem, SynthConfig};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() -> Result<(), Error> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("sizes are integers"));
    let n = args.next().unwrap_or(300);
    let m = args.next().unwrap_or(12);
    let mut rng = StdRng::seed_from_u64(1);
    let importance = random_interval_order(&mut rng, m);
    let cfg = SynthConfig::mixed(&mut rng, n, m);
    let p = random_problem(&mut rng, &cfg, importance);
    let engine = DominanceEngine::new(&p)?;
    println!("n={n} m={m}, importance class {}", engine.importance_class());

    let start = Instant::now();
    let g = engine.graph();
    println!("kernel (parallel): {} edges in {:.2?}", g.edges.len(), start.elapsed());
    let start = Instant::now();
    let seq = engine.graph_sequential();
    println!("kernel (sequential): {} edges in {:.2?}", seq.edges.len(), start.elapsed());

    let start = Instant::now();
    let mut naive_edges = 0;
    for a in 0..n {
        for b in 0..n {
            let naive = engine.naive_dominates(a, b)?;
            assert_eq!(naive.is_some(), g.contains(a, b));
            naive_edges += usize::from(naive.is_some());
        }
    }
    println!("naive quantifier loops: {naive_edges} edges in {:.2?}", start.elapsed());
    println!("strict partial order: {}, maximal set size {}", g.is_spo(), g.maximal_set().len());
    Ok(())
}

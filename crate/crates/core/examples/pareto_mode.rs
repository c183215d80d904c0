//! With no importance statements the dominance relation is Pareto dominance.
//! Prints the maximal set and the layered ranking.
//!
//! ```text
//! cargo run -p qualdom --example pareto_mode
//! ```

use qualdom::prelude::*;

fn main() -> Result<(), Error> {
    let max = || ValueDomain::Numeric { direction: Direction::Maximize };
    let points = [
        ("p", [4.0, 1.0]),
        ("q", [3.0, 3.0]),
        ("r", [1.0, 4.0]),
        ("s", [2.0, 2.0]),
        ("t", [1.0, 1.0]),
        ("u", [3.0, 1.0]),
    ];
    let problem = Problem::new(
        vec![Attribute::new("x", max()), Attribute::new("y", max())],
        points.iter().map(|(id, v)| Alternative::new(*id, v.iter().map(|&x| Value::Number(x)).collect())).collect(),
        vec![],
    );

    let g = dominance_graph(&problem)?;
    let name = |i: usize| g.alternatives[i].as_str();
    for e in &g.edges {
        println!("{} ≻ {}", name(e.winner), name(e.loser));
    }
    let front: Vec<&str> = g.maximal_set().into_iter().map(name).collect();
    println!("front: {}", front.join(", "));
    for (i, layer) in g.layered_ranking()?.layers.iter().enumerate() {
        let ids: Vec<&str> = layer.iter().map(|&x| name(x)).collect();
        println!("layer {i}: {}", ids.join(", "));
    }
    Ok(())
}

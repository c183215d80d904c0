//! Export a dominance graph as Graphviz DOT, either with every edge or as a
//! Hasse diagram. Pipe the output to `dot -Tsvg`.
//!
//! ```text
//! cargo run -p qualdom --example hasse_export [full]
//! ```

use qualdom::io::{export_dominance_dot, parse_problem, DotMode};
use qualdom::prelude::*;

const BUILDING: &str = include_str!("../tests/fixtures/building_design.json");

fn main() -> Result<(), Error> {
    let mode = match std::env::args().nth(1).as_deref() {
        Some("full") => DotMode::Full,
        _ => DotMode::Hasse,
    };
    let problem = parse_problem(BUILDING)?;
    let g = dominance_graph(&problem)?;
    print!("{}", export_dominance_dot(&g, mode)?);
    Ok(())
}

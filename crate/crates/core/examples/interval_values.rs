//! Interval-valued attributes: one range beats another only when it lies
//! entirely on the better side. Overlapping ranges are incomparable and
//! block dominance.
//!
//! ```text
//! cargo run -p qualdom --example interval_values
//! ```

use qualdom::prelude::*;

fn main() -> Result<(), Error> {
    let emissions = ValueDomain::Interval { direction: Direction::Minimize };
    let pairs =
        [((2.0, 4.0), (5.0, 9.0)), ((2.0, 6.0), (5.0, 9.0)), ((3.0, 3.0), (3.0, 3.0)), ((7.0, 8.0), (1.0, 2.0))];
    for ((a_lo, a_hi), (b_lo, b_hi)) in pairs {
        let outcome = value_compare(&emissions, &Value::range(a_lo, a_hi), &Value::range(b_lo, b_hi))?;
        println!("[{a_lo}, {a_hi}] vs [{b_lo}, {b_hi}] (minimize): {outcome}");
    }
    println!();

    let problem = Problem::new(
        vec![
            Attribute::new("Emissions", emissions),
            Attribute::new("Comfort", ValueDomain::ordinal(["poor", "fair", "good"])),
        ],
        vec![
            Alternative::new("Heat pump", vec![Value::range(1.0, 3.0), Value::level("good")]),
            Alternative::new("Gas boiler", vec![Value::range(6.0, 8.0), Value::level("good")]),
            Alternative::new("Pellet stove", vec![Value::range(2.0, 7.0), Value::level("fair")]),
        ],
        vec![],
    );
    let engine = DominanceEngine::new(&problem)?;
    print!("{}", engine.explain(0, 1)?);
    println!();
    print!("{}", engine.explain(0, 2)?);
    Ok(())
}

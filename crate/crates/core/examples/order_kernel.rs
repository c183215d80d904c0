//! The finite-relation toolkit on its own: closure, axiom checks with
//! counterexamples, classification and transitive reduction.
//!
//! ```text
//! cargo run -p qualdom --example order_kernel
//! ```

use qualdom::prelude::*;

fn show(label: &str, r: &Relation) {
    let pairs: Vec<String> = r.pairs().map(|(i, j)| format!("{i}>{j}")).collect();
    println!("{label}: {{{}}}", pairs.join(", "));
}

fn main() -> Result<(), Error> {
    let chain = Relation::from_pairs(4, [(0, 1), (1, 2), (2, 3)])?;
    show("stated", &chain);
    match check_spo(&chain) {
        Ok(()) => println!("stated relation is a strict partial order"),
        Err(v) => println!("stated relation fails: {v}"),
    }
    let closed = transitive_closure(&chain);
    show("closed", &closed);
    println!("class: {}", classify(&closed));
    show("reduced", &transitive_reduction(&closed)?);
    println!();

    // a ▷ b and c ▷ d with nothing else: the smallest non-interval order
    let two_plus_two = Relation::from_pairs(4, [(0, 1), (2, 3)])?;
    println!("2+2 class: {}", classify(&two_plus_two));
    if let Err(v) = is_interval_order(&two_plus_two) {
        println!("  {v}");
    }
    let weak = Relation::from_pairs(4, [(0, 2), (0, 3), (1, 2), (1, 3)])?;
    println!("two tiers class: {}", classify(&weak));
    let cyclic = Relation::from_pairs(3, [(0, 1), (1, 2), (2, 0)])?;
    println!("3-cycle class: {}", classify(&cyclic));
    Ok(())
}

//! Qualitative dominance for multi-criteria decisions.
//!
//! Alternatives are compared attribute by attribute using intra-attribute
//! preferences (ordinal scales, numbers, or interval ranges) and a possibly
//! incomplete relative-importance relation over attributes. The result is a
//! dominance relation over alternatives in which every edge names the
//! attribute that certifies it.
//!
//! ```
//! use qualdom::prelude::*;
//!
//! let problem = Problem::new(
//!     vec![
//!         Attribute::new("Cost", ValueDomain::Numeric { direction: Direction::Minimize }),
//!         Attribute::new("Perf", ValueDomain::ordinal(["low", "med", "high"])),
//!     ],
//!     vec![
//!         Alternative::new("A", vec![Value::Number(10.0), Value::level("low")]),
//!         Alternative::new("B", vec![Value::Number(20.0), Value::level("high")]),
//!     ],
//!     vec![(0, 1)], // Cost is more important than Perf
//! );
//! let engine = DominanceEngine::new(&problem).unwrap();
//! let witness = engine.dominates(0, 1).unwrap().unwrap();
//! assert_eq!(problem.attributes[witness.attribute].name, "Cost");
//! ```
//!
//! Modules:
//! - [`model`]: problems, value domains, validation.
//! - [`order`]: finite relations, closure/reduction, order classification.
//! - [`dominance`]: the dominance engine, maximal sets, layers, explanations.
//! - [`diagnostics`]: weighted-sum baseline, consistency and rank reversal.
//! - [`io`]: JSON problem files, weights, DOT export.
//! - [`cli`] and [`service`]: command line and HTTP front ends.

pub mod cli;
pub mod diagnostics;
pub mod dominance;
pub mod error;
pub mod io;
pub mod model;
pub mod order;
pub mod service;
pub mod synth;

pub use error::Error;

pub mod prelude {
    pub use crate::diagnostics::{
        agreement_metrics, consistency_report, rank_reversal_probe, weighted_sum_rank, WeightVector,
    };
    pub use crate::dominance::{
        dominance_graph, layered_ranking, maximal_set, DominanceEngine, DominanceGraph, Explanation, RankLayers,
        Witness,
    };
    pub use crate::error::Error;
    pub use crate::model::{
        validate_problem, value_compare, Alternative, Attribute, Direction, OrderingOutcome, Problem, Value,
        ValueDomain,
    };
    pub use crate::order::{
        check_spo, classify, is_interval_order, is_linear_extension, transitive_closure, transitive_reduction,
        Classification, Relation,
    };
}

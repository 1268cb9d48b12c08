//! Combinatorics of special representations of finite Coxeter groups:
//! symbols and beta-sets, the duality involution, adjacency of special
//! representations with its `W'` labels, the recursive description of the
//! adjacency relation through truncated induction, and the tabulated data
//! for the exceptional and noncrystallographic types.

pub mod adjacency;
pub mod betasets;
pub mod classical;
pub mod cli;
pub mod coxeter;
pub mod duality;
pub mod error;
pub mod exceptional;
pub mod graph;
pub mod induction;
pub mod rep;
pub mod report;
pub mod suites;
pub mod symbols;

pub use classical::{Classical, ClassicalClass};
pub use coxeter::{parse_type, CompositeType, CoxeterLabel};
pub use error::{Error, Result};
pub use rep::{SpecialRep, SplitCopy, TabulatedRep};

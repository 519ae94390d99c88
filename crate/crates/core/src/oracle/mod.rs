//! Independent evidence: similarity through cyclic decompositions,
//! bounded-height reverser search, and symbolic rank-one obstructions.

mod rcf;
mod search;
mod symbolic;

pub use rcf::{cyclic_invariant_factors, rcf_similar};
pub use search::{anticommutant_involutions, coefficient_pool, search_reverser, SearchOutcome};
pub use symbolic::{so2_obstruction, sp1_involution_obstruction, Check, ProofRecord};

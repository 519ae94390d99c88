//! Reality of semisimple elements: per-group decisions and explicit
//! reversers, first on canonical forms and then on arbitrary elements by
//! conjugation.

mod decide;
mod general;
mod verdict;
mod witness;

pub use decide::{decide_semisimple, nonzero_multiplicities_even};
pub use general::{eigenspaces, form_reverser, witness_general_semisimple};
pub(crate) use general::{orthogonal_basis, symplectic_basis};
pub use verdict::{RealityVerdict, Reason, ReverserCertificate, Tri};
pub use witness::witness_semisimple;

//! Classical algebras and groups: contexts, membership, canonical
//! semisimple forms, centralizers and anticommutants.

mod canonical;
mod context;
pub mod forms;
mod membership;

pub use canonical::{build_canonical, CanonicalData, CanonicalSemisimple};
pub use context::{Algebra, Group, LieContext};
pub(crate) use membership::combine;
pub use membership::{
    algebra_basis, algebra_member, centralizer_algebra, centralizer_within, group_member,
    is_group_involution, reverser_linear_space,
};

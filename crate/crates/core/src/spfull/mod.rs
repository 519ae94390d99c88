//! Reversers for arbitrary elements of sp(n): sl2-triples, chain data, and
//! the product of a nilpotent-reversing `σ` with a semisimple-reversing `τ`.

mod chains;
mod reverse;
mod triple;

pub use chains::{
    build_sigma, build_tau, chain_decomposition, restrict_semisimple, ChainBlock,
    SymplecticChainData,
};
pub use reverse::reverse_full;
pub use triple::{sl2_triple, sl2_triple_within, Sl2Triple};

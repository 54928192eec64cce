//! Exact combinatorics of θ-stable parabolic subalgebras for the irreducible
//! Hermitian symmetric pairs.

pub mod cycles;
pub mod dynkin;
pub mod error;
pub mod exactla;
pub mod levi;
pub mod parabolic;
pub mod poset;
pub mod rootsys;
pub mod tables;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/root-systems.md")]
    mod root_systems {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/levi.md")]
    mod levi {}
    #[doc = include_str!("../../../book/src/cycles.md")]
    mod cycles {}
    #[doc = include_str!("../../../book/src/tables.md")]
    mod tables {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

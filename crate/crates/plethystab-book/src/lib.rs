//! The guide chapters from `book/`, compiled as doc-tests.
//!
//! Each module below embeds one chapter, so `cargo test --workspace` runs
//! every `rust` snippet in the guide and the prose cannot drift from the
//! library. Render the human version with `mdbook build book/`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/partitions.md")]
pub mod partitions {}

#[doc = include_str!("../../../book/src/tableaux.md")]
pub mod tableaux {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/counting.md")]
pub mod counting {}

#[doc = include_str!("../../../book/src/coefficients.md")]
pub mod coefficients {}

#[doc = include_str!("../../../book/src/stability.md")]
pub mod stability {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

//! Plethysm coefficients of Schur functions by exact lattice-point counting.
//!
//! The central objects are the h-plethysm coefficients
//! `b(λ, μ, ν) = ⟨h_λ[s_μ], h_ν⟩`, computed as the number of non-negative
//! integer matrices with prescribed row sums and weighted column sums
//! (see [`lattice`]), and the plethysm coefficients
//! `a(λ, μ, ν) = ⟨s_λ[s_μ], s_ν⟩`, recovered from the `b` values through a
//! signed Jacobi-Trudi double sum (see [`coeff`]).
//!
//! Everything is cross-checked against a slow but independent route: sparse
//! polynomials over a monomial alphabet (see [`poly`]). The [`stability`]
//! module evaluates four one-parameter families of coefficients, detects
//! their plateaus empirically, and compares explicit stabilization bounds.
//!
//! Modules:
//! - [`seq`]: integer sequences, partitions, Jacobi-Trudi offsets
//! - [`tableau`]: semistandard tableaux, weight matrices, Gelfand-Tsetlin patterns
//! - [`poly`]: the monomial-alphabet oracle and Schur decomposition
//! - [`lattice`]: the matrix-counting model for `b` coefficients
//! - [`coeff`]: `b` and `a` coefficients and full Schur expansions
//! - [`stability`]: stability families, bounds, and reports
//! - [`sweep`]: bulk self-checks used by the test suite and the CLI

pub mod coeff;
pub mod lattice;
pub mod poly;
pub mod seq;
pub mod stability;
pub mod sweep;
pub mod tableau;

mod error;

pub use coeff::{a_coeff, a_coeff_with_stats, b_coeff, schur_expand, PlethysmQuery, TermStats};
pub use error::Error;
pub use lattice::{count_points, enumerate_points, vanishing_precheck, CountingMatrix};
pub use poly::{
    coeff, h_plethysm_poly, s_plethysm_poly, schur_decompose, schur_poly, MonomialPoly,
    SchurExpansion,
};
pub use seq::{dominance_leq, jt_offsets, partitions_of, IntSeq, Partition, Sign, SignedOffset};
pub use stability::{
    family_term, literature_bound, our_bound, run_report, Family, FamilySpec, StabilityReport,
    Which,
};
pub use tableau::{
    enumerate_ssyt, from_gt, tau_r1, tau_r2, tau_r2_preimage, to_gt, weight_matrix, GTPattern,
    Tableau, WeightMatrix,
};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

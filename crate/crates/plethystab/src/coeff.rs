//! Plethysm coefficients from lattice counts.
//!
//! - [`b_coeff`]: the coefficient of `x^ν` in `h_λ[s_μ]`, via point counting
//! - [`a_coeff`]: the multiplicity of `s_ν` in `s_λ[s_μ]`, via the signed
//!   double sum `Σ_{σ,τ} ε(σ)ε(τ)·b(λ+ω(σ), μ, ν+ω(τ))` over two symmetric
//!   groups of sizes `ℓ(λ)` and `ℓ(ν)`
//! - [`schur_expand`]: the full expansion of `s_λ[s_μ]`
//!
//! Terms whose shifted sequence picks up a negative entry are pruned before
//! any counting; the surviving `b` values are memoized on sorted sequences
//! (both arguments of `b` are invariant under permuting their entries).

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::lattice::count_points;
use crate::poly::SchurExpansion;
use crate::seq::{jt_offsets, partitions_of, IntSeq, Partition};

/// One plethysm multiplicity question: `⟨s_λ[s_μ], s_ν⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlethysmQuery {
    /// Outer shape `λ`.
    pub lambda: Partition,
    /// Inner shape `μ`.
    pub mu: Partition,
    /// Target shape `ν`; the coefficient vanishes unless `|λ|·|μ| = |ν|`.
    pub nu: Partition,
}

impl PlethysmQuery {
    /// Bundles the three shapes of a query.
    pub fn new(lambda: Partition, mu: Partition, nu: Partition) -> Self {
        PlethysmQuery { lambda, mu, nu }
    }
}

/// How much of the signed double sum was actually counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TermStats {
    /// Pairs `(σ,τ)` whose shifted sequences stayed non-negative.
    pub evaluated: u64,
    /// Pairs skipped because a shifted entry went negative.
    pub pruned: u64,
}

/// The coefficient of `x^ν` in `h_λ[s_μ]`: zero on negative entries or a
/// weight mismatch, otherwise a lattice-point count over
/// `max(length(λ), length(ν))` variables. Zero parts of `λ` contribute the
/// empty factor `h_0 = 1`.
pub fn b_coeff(lambda: &IntSeq, mu: &Partition, nu: &IntSeq) -> BigInt {
    if lambda.entries().iter().any(|&e| e < 0) || nu.entries().iter().any(|&e| e < 0) {
        return BigInt::zero();
    }
    if lambda.sum() * mu.weight() != nu.sum() {
        return BigInt::zero();
    }
    let n = lambda.len().max(nu.len());
    count_points(lambda, mu, nu, n)
}

/// Sorts entries in decreasing order and drops zeros; `None` if any entry is
/// negative. Both arguments of `b` may be normalized this way.
fn sorted_surviving(seq: &IntSeq) -> Option<Vec<i64>> {
    if seq.entries().iter().any(|&e| e < 0) {
        return None;
    }
    let mut v: Vec<i64> = seq.entries().iter().copied().filter(|&e| e != 0).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Some(v)
}

/// Memoized `b` values for a fixed inner shape, keyed on sorted sequences.
struct BCache<'a> {
    mu: &'a Partition,
    map: Mutex<HashMap<(Vec<i64>, Vec<i64>), BigInt>>,
}

impl<'a> BCache<'a> {
    fn new(mu: &'a Partition) -> Self {
        BCache {
            mu,
            map: Mutex::new(HashMap::new()),
        }
    }

    /// `b` for pre-normalized (sorted, trimmed, non-negative) sequences.
    fn b_sorted(&self, lam: &[i64], nu: &[i64]) -> BigInt {
        let key = (lam.to_vec(), nu.to_vec());
        if let Some(v) = self.map.lock().unwrap().get(&key) {
            return v.clone();
        }
        let n = lam.len().max(nu.len());
        let val = count_points(
            &IntSeq::new(lam.to_vec()),
            self.mu,
            &IntSeq::new(nu.to_vec()),
            n,
        );
        self.map.lock().unwrap().insert(key, val.clone());
        val
    }
}

fn factorial_u128(n: usize) -> u128 {
    (1..=n as u128).product::<u128>().max(1)
}

/// The signed double sum behind [`a_coeff`], sharing a `b` memo.
fn a_coeff_inner(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    cache: &BCache<'_>,
) -> (BigInt, TermStats) {
    if lambda.weight() * mu.weight() != nu.weight() {
        return (BigInt::zero(), TermStats::default());
    }
    let lam = lambda.trim();
    let nut = nu.trim();

    let lam_terms: Vec<(i64, Vec<i64>)> = jt_offsets(lam.fake_len())
        .filter_map(|so| {
            let shifted = lam.as_seq().add(&so.offset);
            sorted_surviving(&shifted).map(|v| (so.sign.as_i64(), v))
        })
        .collect();
    let nu_terms: Vec<(i64, Vec<i64>)> = jt_offsets(nut.fake_len())
        .filter_map(|so| {
            let shifted = nut.as_seq().add(&so.offset);
            sorted_surviving(&shifted).map(|v| (so.sign.as_i64(), v))
        })
        .collect();

    let evaluated = (lam_terms.len() as u64) * (nu_terms.len() as u64);
    let all_pairs = factorial_u128(lam.fake_len()) * factorial_u128(nut.fake_len());
    let pruned = (all_pairs - evaluated as u128) as u64;

    let total: BigInt = lam_terms
        .par_iter()
        .map(|(sign_l, l)| {
            let mut acc = BigInt::zero();
            for (sign_n, v) in &nu_terms {
                let b = cache.b_sorted(l, v);
                if sign_l * sign_n > 0 {
                    acc += b;
                } else {
                    acc -= b;
                }
            }
            acc
        })
        .sum();

    assert!(
        total >= BigInt::zero(),
        "internal assertion: negative multiplicity {total} for lambda=({lambda}) mu=({mu}) nu=({nu})"
    );
    (total, TermStats { evaluated, pruned })
}

/// The plethysm coefficient `⟨s_λ[s_μ], s_ν⟩`, always non-negative.
///
/// Panics if the signed sum comes out negative, which would indicate a bug
/// in the counting engine rather than bad input.
pub fn a_coeff(query: &PlethysmQuery) -> BigInt {
    a_coeff_with_stats(query).0
}

/// [`a_coeff`] plus counts of evaluated and pruned `(σ,τ)` pairs.
pub fn a_coeff_with_stats(query: &PlethysmQuery) -> (BigInt, TermStats) {
    let cache = BCache::new(&query.mu);
    a_coeff_inner(&query.lambda, &query.mu, &query.nu, &cache)
}

/// The full Schur expansion of `s_λ[s_μ]` over `nvars` variables: candidate
/// targets are the partitions of `|λ|·|μ|` with at most `nvars` parts.
pub fn schur_expand_with_vars(lambda: &Partition, mu: &Partition, nvars: usize) -> SchurExpansion {
    let degree: i64 = (lambda.weight() * mu.weight())
        .try_into()
        .expect("expansion degree must fit in i64");
    let cache = BCache::new(mu);
    let pairs: Vec<(Partition, BigInt)> = partitions_of(degree, nvars)
        .into_par_iter()
        .map(|nu| {
            let (a, _) = a_coeff_inner(lambda, mu, &nu, &cache);
            (nu, a)
        })
        .collect();
    SchurExpansion::from_pairs(pairs)
}

/// [`schur_expand_with_vars`] with `|λ|·|μ|` variables, enough for every
/// partition of that weight.
pub fn schur_expand(lambda: &Partition, mu: &Partition) -> SchurExpansion {
    let degree: i64 = (lambda.weight() * mu.weight())
        .try_into()
        .expect("expansion degree must fit in i64");
    schur_expand_with_vars(lambda, mu, degree.max(0) as usize)
}

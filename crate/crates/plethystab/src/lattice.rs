//! Exact counting and enumeration of the matrix set behind `b` coefficients.
//!
//! A point is an `N × k` matrix of non-negative integers, columns indexed by
//! the tableaux of `t(μ,N)`, subject to:
//! - row `i` sums to `λ_i` (zero-padded),
//! - for each letter `j`, the weighted column sum `Σ_{i,T} m_{iT}·ρ_j(T)`
//!   equals `ν_j`.
//!
//! The number of such matrices is the coefficient of `x^ν` in `h_λ[s_μ]`,
//! which the test suite verifies against the polynomial oracle.
//!
//! Provides [`vanishing_precheck`] (sound necessary conditions only),
//! [`count_points`], and [`enumerate_points`] with a configurable cap.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::seq::{IntSeq, Partition};
use crate::tableau::weight_matrix;
use crate::{Error, Result};

/// Default cap on the number of matrices [`enumerate_points`] will return.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// One solution matrix: `N` rows, one column per tableau of `t(μ,N)` in
/// enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CountingMatrix {
    rows: Vec<Vec<i64>>,
}

impl CountingMatrix {
    /// The matrix rows; `rows()[i][t]` is the multiplicity of tableau `t`
    /// in row `i`.
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Re-verifies both defining conditions against raw data: row `i` sums to
    /// `λ_i` and the weighted column sums hit `ν`. Independent of the search.
    pub fn satisfies(&self, lambda: &IntSeq, mu: &Partition, nu: &IntSeq, n: usize) -> bool {
        let weights = weight_matrix(mu, n);
        if self.rows.len() != n {
            return false;
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != weights.len() {
                return false;
            }
            if row.iter().any(|&m| m < 0) {
                return false;
            }
            if row.iter().sum::<i64>() != lambda.entry_or_zero(i) {
                return false;
            }
        }
        for j in 0..n {
            let total: i64 = self
                .rows
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(weights.rows())
                        .map(|(&m, w)| m * w.entries()[j])
                        .sum::<i64>()
                })
                .sum();
            if total != nu.entry_or_zero(j) {
                return false;
            }
        }
        true
    }

    /// JSON form: array of rows.
    pub fn to_json(&self) -> Value {
        json!(self.rows)
    }
}

/// Sound necessary conditions for a nonzero count: `false` only when the
/// count is provably zero, `true` otherwise.
///
/// Screens: no `ν` entry is negative; every `ν_j` is at most `|λ|·μ_1` (a
/// letter fills at most one box per column of a tableau); and each prefix
/// `ν_1+⋯+ν_t` is at most `|λ|·(μ_1+⋯+μ_t)` (letters `≤ t` fit in the first
/// `t` rows).
pub fn vanishing_precheck(lambda: &IntSeq, mu: &Partition, nu: &IntSeq, n: usize) -> bool {
    debug_assert!(n >= nu.len());
    let lambda_weight: i128 = lambda.sum();
    if nu.entries().iter().any(|&e| e < 0) {
        return false;
    }
    let cap = lambda_weight * mu.first() as i128;
    if nu.entries().iter().any(|&e| e as i128 > cap) {
        return false;
    }
    let mut nu_prefix = 0i128;
    let mut mu_prefix = 0i128;
    for t in 0..n {
        nu_prefix += nu.entry_or_zero(t) as i128;
        mu_prefix += mu.part_or_zero(t) as i128;
        if nu_prefix > lambda_weight * mu_prefix {
            return false;
        }
    }
    true
}

/// Shared depth-first search over row assignments.
///
/// `rows` holds the (positive) row sums to distribute, `weights` the tableau
/// weight vectors in search order. Calls `on_leaf` with the filled row
/// assignments; a `false` return aborts the walk.
struct Search<'a> {
    weights: &'a [Vec<i64>],
    row_sums: &'a [i64],
    suffix_max: Vec<Vec<i64>>,
    n: usize,
}

impl<'a> Search<'a> {
    fn new(weights: &'a [Vec<i64>], row_sums: &'a [i64], n: usize) -> Self {
        // suffix_max[j][t] = max weight of letter t+1 over columns j..
        let k = weights.len();
        let mut suffix_max = vec![vec![0i64; n]; k + 1];
        for j in (0..k).rev() {
            for t in 0..n {
                suffix_max[j][t] = suffix_max[j + 1][t].max(weights[j][t]);
            }
        }
        Search {
            weights,
            row_sums,
            suffix_max,
            n,
        }
    }

    fn run(
        &self,
        remaining: &mut Vec<i64>,
        assignment: &mut Vec<Vec<i64>>,
        mut row: usize,
        mut col: usize,
        mut row_left: i64,
        on_leaf: &mut impl FnMut(&[Vec<i64>]) -> bool,
    ) -> bool {
        // Zero assignments advance iteratively; only positive multiplicities
        // recurse. Each recursion consumes a unit of some row sum, so the
        // stack depth is bounded by the total weight, not the column count.
        let k = self.weights.len();
        loop {
            if row == self.row_sums.len() {
                if remaining.iter().all(|&r| r == 0) {
                    return on_leaf(assignment);
                }
                return true;
            }
            if col == k {
                if row_left == 0 {
                    row += 1;
                    col = 0;
                    row_left = self.row_sums.get(row).copied().unwrap_or(0);
                    continue;
                }
                return true;
            }
            // Capacity prune: the rest of this row plus all later rows must
            // be able to reach every remaining coordinate.
            let later_units: i64 = self.row_sums[row + 1..].iter().sum();
            for t in 0..self.n {
                let reach =
                    row_left * self.suffix_max[col][t] + later_units * self.suffix_max[0][t];
                if reach < remaining[t] {
                    return true;
                }
            }
            let w = &self.weights[col];
            let mut max_m = row_left;
            for t in 0..self.n {
                if w[t] > 0 {
                    max_m = max_m.min(remaining[t] / w[t]);
                }
            }
            for m in 1..=max_m {
                for t in 0..self.n {
                    remaining[t] -= w[t];
                }
                assignment[row][col] = m;
                let keep_going =
                    self.run(remaining, assignment, row, col + 1, row_left - m, on_leaf);
                if !keep_going {
                    // Roll back before unwinding.
                    for t in 0..self.n {
                        remaining[t] += m * w[t];
                    }
                    assignment[row][col] = 0;
                    return false;
                }
            }
            if max_m > 0 {
                for t in 0..self.n {
                    remaining[t] += max_m * w[t];
                }
                assignment[row][col] = 0;
            }
            col += 1;
        }
    }
}

/// Runs the depth-first search, feeding each solution to `on_leaf` as
/// `(active row index, assignment rows over sorted columns)`.
fn search_points(
    lambda: &IntSeq,
    mu: &Partition,
    nu: &IntSeq,
    n: usize,
    on_leaf: &mut impl FnMut(&[usize], &[usize], &[Vec<i64>]) -> bool,
) {
    assert!(
        n >= lambda.len() && n >= nu.len(),
        "alphabet must cover the stored lengths of lambda and nu"
    );
    if lambda.entries().iter().any(|&e| e < 0) {
        return;
    }
    if lambda.sum() * mu.weight() != nu.sum() {
        return;
    }
    if !vanishing_precheck(lambda, mu, nu, n) {
        return;
    }

    // Columns in decreasing lexicographic weight order puts the superstandard
    // tableau first, which makes the capacity prune bite early.
    let matrix = weight_matrix(mu, n);
    let mut col_order: Vec<usize> = (0..matrix.len()).collect();
    col_order.sort_by(|&a, &b| matrix.rows()[b].cmp(&matrix.rows()[a]));
    let weights: Vec<Vec<i64>> = col_order
        .iter()
        .map(|&j| matrix.rows()[j].entries().to_vec())
        .collect();

    // Larger rows first: they are the most constrained.
    let mut active: Vec<usize> = (0..lambda.len())
        .filter(|&i| lambda.entries()[i] > 0)
        .collect();
    active.sort_by_key(|&i| -lambda.entries()[i]);
    let row_sums: Vec<i64> = active.iter().map(|&i| lambda.entries()[i]).collect();

    let mut remaining: Vec<i64> = (0..n).map(|j| nu.entry_or_zero(j)).collect();
    let mut assignment = vec![vec![0i64; weights.len()]; row_sums.len()];
    let search = Search::new(&weights, &row_sums, n);
    let first_left = row_sums.first().copied().unwrap_or(0);
    search.run(
        &mut remaining,
        &mut assignment,
        0,
        0,
        first_left,
        &mut |assignment| on_leaf(&active, &col_order, assignment),
    );
}

/// The exact number of solution matrices, equal to the coefficient of `x^ν`
/// in `h_λ[s_μ]` over `n` variables. Zero when `|λ|·|μ| ≠ |ν|`, when a `λ`
/// entry is negative, or when the precheck proves vanishing.
pub fn count_points(lambda: &IntSeq, mu: &Partition, nu: &IntSeq, n: usize) -> BigInt {
    let mut count: u128 = 0;
    search_points(lambda, mu, nu, n, &mut |_, _, _| {
        count += 1;
        true
    });
    BigInt::from(count)
}

/// All solution matrices in a deterministic (lexicographic) order, columns in
/// tableau enumeration order; errors once more than `cap` are found.
pub fn enumerate_points_with_cap(
    lambda: &IntSeq,
    mu: &Partition,
    nu: &IntSeq,
    n: usize,
    cap: usize,
) -> Result<Vec<CountingMatrix>> {
    let k = weight_matrix(mu, n).len();
    let mut out: Vec<CountingMatrix> = Vec::new();
    let mut overflowed = false;
    search_points(lambda, mu, nu, n, &mut |active, col_order, assignment| {
        if out.len() == cap {
            overflowed = true;
            return false;
        }
        let mut rows = vec![vec![0i64; k]; n];
        for (r, &i) in active.iter().enumerate() {
            for (c, &j) in col_order.iter().enumerate() {
                rows[i][j] = assignment[r][c];
            }
        }
        out.push(CountingMatrix { rows });
        true
    });
    if overflowed {
        return Err(Error::EnumerationTooLarge { cap });
    }
    out.sort();
    Ok(out)
}

/// [`enumerate_points_with_cap`] with the default cap of one million points.
pub fn enumerate_points(
    lambda: &IntSeq,
    mu: &Partition,
    nu: &IntSeq,
    n: usize,
) -> Result<Vec<CountingMatrix>> {
    enumerate_points_with_cap(lambda, mu, nu, n, DEFAULT_ENUMERATION_CAP)
}

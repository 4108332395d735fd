//! Semistandard Young tableaux, weight matrices, Gelfand-Tsetlin patterns,
//! and the row-prepending stability maps.
//!
//! Provides:
//! - [`enumerate_ssyt`] and [`for_each_ssyt_weight`]: the set `t(μ,N)` of
//!   semistandard tableaux of shape `μ` with entries in `{1..N}`, in
//!   lexicographic order on the row-reading word (superstandard first)
//! - [`weight_matrix`]: the matrix `P_{μ,N}` whose row for tableau `T` is the
//!   letter-multiplicity vector `ρ(T)`
//! - [`to_gt`] / [`from_gt`]: the bijection with Gelfand-Tsetlin patterns,
//!   where `x_{ij}` counts entries `≤ i` in row `j`
//! - [`tau_r1`] / [`tau_r2`]: injective maps that prepend boxes on the left
//!   of each row, and [`tau_r2_preimage`] which inverts them when possible

use serde_json::{json, Value};

use crate::seq::{IntSeq, Partition};
use crate::{Error, Result};

/// A semistandard Young tableau: rows weakly increase, columns strictly
/// increase, entries lie in `{1..alphabet}`.
///
/// The shape is stored without trailing zeros, so two tableaux are equal
/// exactly when their rows and alphabet agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<i64>>,
    alphabet: usize,
}

impl Tableau {
    /// Validates row data as a semistandard tableau over `{1..alphabet}`.
    pub fn new(rows: Vec<Vec<i64>>, alphabet: usize) -> Result<Tableau> {
        let lengths: Vec<i64> = rows.iter().map(|r| r.len() as i64).collect();
        for w in lengths.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidTableau {
                    reason: format!("row lengths {} < {} must not increase", w[0], w[1]),
                });
            }
        }
        if lengths.last() == Some(&0) {
            return Err(Error::InvalidTableau {
                reason: "empty trailing row".into(),
            });
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if e < 1 || e > alphabet as i64 {
                    return Err(Error::InvalidTableau {
                        reason: format!("entry {e} outside alphabet 1..{alphabet}"),
                    });
                }
                if c > 0 && row[c - 1] > e {
                    return Err(Error::InvalidTableau {
                        reason: format!("row {} decreases at column {}", r + 1, c + 1),
                    });
                }
                if r > 0 && rows[r - 1][c] >= e {
                    return Err(Error::InvalidTableau {
                        reason: format!("column {} not strictly increasing at row {}", c + 1, r + 1),
                    });
                }
            }
        }
        let shape = Partition::new(lengths).expect("row lengths checked weakly decreasing");
        Ok(Tableau {
            shape,
            rows,
            alphabet,
        })
    }

    /// The superstandard tableau of the shape: row `i` filled with `i`.
    /// `None` when the shape has more nonzero rows than the alphabet.
    pub fn superstandard(shape: &Partition, alphabet: usize) -> Option<Tableau> {
        let trimmed = shape.trim();
        if trimmed.fake_len() > alphabet {
            return None;
        }
        let rows: Vec<Vec<i64>> = trimmed
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| vec![i as i64 + 1; len as usize])
            .collect();
        Some(Tableau {
            shape: trimmed,
            rows,
            alphabet,
        })
    }

    /// The shape, without trailing zeros.
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// The rows, top first.
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// The alphabet size `N`.
    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    /// Concatenation of the rows, top row first.
    pub fn reading_word(&self) -> Vec<i64> {
        self.rows.iter().flatten().copied().collect()
    }

    /// The weight `ρ(T)`: entry `j` counts occurrences of letter `j+1`.
    /// Always has length `alphabet`.
    pub fn weight(&self) -> IntSeq {
        let mut counts = vec![0i64; self.alphabet];
        for &e in self.rows.iter().flatten() {
            counts[(e - 1) as usize] += 1;
        }
        IntSeq::new(counts)
    }

    /// JSON form `{"shape":[...],"rows":[[...],...]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "shape": self.shape.parts(),
            "rows": self.rows,
        })
    }
}

/// The weight matrix `P_{μ,N}`: one row `ρ(T)` per tableau of `t(μ,N)`,
/// in enumeration order. Distinct tableaux may repeat a weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMatrix {
    shape: Partition,
    alphabet: usize,
    rows: Vec<IntSeq>,
}

impl WeightMatrix {
    /// The rows `ρ(T)`, each of length `alphabet`.
    pub fn rows(&self) -> &[IntSeq] {
        &self.rows
    }

    /// The shape `μ`.
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// The alphabet size `N`.
    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    /// Number of tableaux, i.e. of rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// True when `t(μ,N)` is empty.
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// JSON form: array of length-`N` rows.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| json!(r.entries()))
                .collect(),
        )
    }
}

/// Walks all semistandard fillings in reading-word order, cell by cell.
fn fill_cells(
    shape: &[i64],
    alphabet: i64,
    r: usize,
    c: usize,
    rows: &mut Vec<Vec<i64>>,
    weight: &mut Vec<i64>,
    emit: &mut impl FnMut(&[Vec<i64>], &[i64]),
) {
    if r == shape.len() {
        emit(rows, weight);
        return;
    }
    if c == shape[r] as usize {
        fill_cells(shape, alphabet, r + 1, 0, rows, weight, emit);
        return;
    }
    let mut lo = if c > 0 { rows[r][c - 1] } else { 1 };
    if r > 0 {
        lo = lo.max(rows[r - 1][c] + 1);
    }
    for v in lo..=alphabet {
        rows[r].push(v);
        weight[(v - 1) as usize] += 1;
        fill_cells(shape, alphabet, r, c + 1, rows, weight, emit);
        weight[(v - 1) as usize] -= 1;
        rows[r].pop();
    }
}

/// Calls `f` with the weight vector of every tableau in `t(shape, alphabet)`,
/// in the same order as [`enumerate_ssyt`], without materializing tableaux.
pub fn for_each_ssyt_weight(shape: &Partition, alphabet: usize, mut f: impl FnMut(&[i64])) {
    let trimmed = shape.trim();
    if trimmed.fake_len() > alphabet {
        return;
    }
    let parts = trimmed.parts().to_vec();
    let mut rows: Vec<Vec<i64>> = parts.iter().map(|&p| Vec::with_capacity(p as usize)).collect();
    let mut weight = vec![0i64; alphabet];
    fill_cells(
        &parts,
        alphabet as i64,
        0,
        0,
        &mut rows,
        &mut weight,
        &mut |_, w| f(w),
    );
}

/// All of `t(shape, alphabet)` in lexicographic order on the row-reading word
/// (top row first). Empty when the shape has more nonzero rows than letters.
pub fn enumerate_ssyt(shape: &Partition, alphabet: usize) -> Vec<Tableau> {
    let trimmed = shape.trim();
    if trimmed.fake_len() > alphabet {
        return Vec::new();
    }
    let parts = trimmed.parts().to_vec();
    let mut rows: Vec<Vec<i64>> = parts.iter().map(|&p| Vec::with_capacity(p as usize)).collect();
    let mut weight = vec![0i64; alphabet];
    let mut out = Vec::new();
    fill_cells(
        &parts,
        alphabet as i64,
        0,
        0,
        &mut rows,
        &mut weight,
        &mut |rows, _| {
            out.push(Tableau {
                shape: trimmed.clone(),
                rows: rows.to_vec(),
                alphabet,
            });
        },
    );
    out
}

/// The matrix `P_{μ,N}` of tableau weights, rows in enumeration order.
pub fn weight_matrix(shape: &Partition, alphabet: usize) -> WeightMatrix {
    let mut rows = Vec::new();
    for_each_ssyt_weight(shape, alphabet, |w| rows.push(IntSeq::new(w.to_vec())));
    WeightMatrix {
        shape: shape.trim(),
        alphabet,
        rows,
    }
}

/// A triangular array stored top row first: `rows[0]` has length `n` down to
/// `rows[n-1]` of length 1. Entry `x_{ij}` (1-based: `i` counts from the
/// bottom, `j` along the row) lives at `rows[n-i][j-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GTPattern {
    /// Rows of the triangle, top (longest) row first.
    pub rows: Vec<Vec<i64>>,
}

impl GTPattern {
    /// Checks triangularity, non-negativity, and interlacing
    /// `x_{i+1,j+1} ≤ x_{ij} ≤ x_{i+1,j}`.
    pub fn validate(&self) -> Result<()> {
        let n = self.rows.len();
        for (r, row) in self.rows.iter().enumerate() {
            if row.len() != n - r {
                return Err(Error::NotGtPattern {
                    reason: format!("row {} has length {}, expected {}", r + 1, row.len(), n - r),
                });
            }
            for &e in row {
                if e < 0 {
                    return Err(Error::NotGtPattern {
                        reason: format!("negative entry {e}"),
                    });
                }
            }
        }
        for r in 0..n.saturating_sub(1) {
            let upper = &self.rows[r];
            let lower = &self.rows[r + 1];
            for j in 0..lower.len() {
                if !(upper[j + 1] <= lower[j] && lower[j] <= upper[j]) {
                    return Err(Error::NotGtPattern {
                        reason: format!(
                            "rows {} and {} fail interlacing at position {}",
                            r + 1,
                            r + 2,
                            j + 1
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    /// JSON form: array of rows, top row first.
    pub fn to_json(&self) -> Value {
        Value::Array(self.rows.iter().map(|r| json!(r)).collect())
    }
}

/// The Gelfand-Tsetlin pattern of a tableau: `x_{ij}` is the number of
/// entries `≤ i` in row `j`, with the top stored row `x_{N,·}` equal to the
/// shape padded to length `N`.
pub fn to_gt(t: &Tableau) -> GTPattern {
    let n = t.alphabet();
    let mut rows = Vec::with_capacity(n);
    for i in (1..=n).rev() {
        let mut row = Vec::with_capacity(i);
        for j in 0..i {
            let count = t
                .rows()
                .get(j)
                .map_or(0, |tr| tr.iter().filter(|&&e| e <= i as i64).count());
            row.push(count as i64);
        }
        rows.push(row);
    }
    let g = GTPattern { rows };
    debug_assert!(g.validate().is_ok());
    g
}

/// Inverts [`to_gt`]: row `j` of the tableau receives `x_{ij} - x_{i-1,j}`
/// copies of the letter `i`. Fails on arrays that do not interlace.
pub fn from_gt(g: &GTPattern) -> Result<Tableau> {
    g.validate()?;
    let n = g.rows.len();
    let entry = |i: usize, j: usize| -> i64 {
        // x_{ij} = rows[n-i][j], defined for 1 ≤ j ≤ i; zero outside.
        if i >= 1 && j < i {
            g.rows[n - i][j]
        } else {
            0
        }
    };
    let mut rows = Vec::new();
    for j in 0..n {
        let mut row = Vec::new();
        for i in j + 1..=n {
            let count = entry(i, j) - entry(i - 1, j);
            debug_assert!(count >= 0, "interlacing bounds letter counts");
            for _ in 0..count {
                row.push(i as i64);
            }
        }
        if row.is_empty() {
            break;
        }
        rows.push(row);
    }
    Ok(Tableau::new(rows, n).expect("GT bijection must produce a valid tableau"))
}

/// Prepends a single box labelled 1 to the first row.
pub fn tau_r1(t: &Tableau) -> Tableau {
    let mut rows = t.rows().to_vec();
    if rows.is_empty() {
        rows.push(vec![1]);
    } else {
        rows[0].insert(0, 1);
    }
    Tableau::new(rows, t.alphabet()).expect("prepending a 1 preserves semistandardness")
}

/// Prepends `π_i` boxes labelled `i` to row `i`. The nonzero rows of `π` must
/// not outnumber the rows of the tableau.
pub fn tau_r2(t: &Tableau, pi: &Partition) -> Result<Tableau> {
    let pi = pi.trim();
    if pi.fake_len() > t.rows().len() {
        return Err(Error::CannotAppend {
            reason: format!(
                "pi has {} nonzero rows but the tableau has {}",
                pi.fake_len(),
                t.rows().len()
            ),
        });
    }
    let mut rows = t.rows().to_vec();
    for (i, &p) in pi.parts().iter().enumerate() {
        let letter = i as i64 + 1;
        rows[i].splice(0..0, std::iter::repeat(letter).take(p as usize));
    }
    Ok(Tableau::new(rows, t.alphabet()).expect("prefix boxes preserve semistandardness"))
}

/// Inverts [`tau_r2`] through the pattern shift `x_{ij} ↦ x_{ij} - π_j`:
/// returns the unique preimage, or `None` when the shifted array is not a
/// valid pattern (a "new" tableau).
pub fn tau_r2_preimage(t: &Tableau, pi: &Partition) -> Option<Tableau> {
    let g = to_gt(t);
    let shifted = GTPattern {
        rows: g
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(j, &x)| x - pi.part_or_zero(j))
                    .collect()
            })
            .collect(),
    };
    if shifted.validate().is_err() {
        return None;
    }
    Some(from_gt(&shifted).expect("validated pattern inverts"))
}

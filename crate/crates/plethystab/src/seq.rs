//! Integer sequences, partitions, and Jacobi-Trudi offsets.
//!
//! Provides:
//! - [`IntSeq`]: finite integer sequences; trailing zeros are significant,
//!   so a sequence carries its stored (fake) length
//! - [`Partition`]: weakly decreasing sequences of non-negative integers
//! - [`SignedOffset`] and [`jt_offsets`]: the signed shifts `ω(σ)_j = σ(j) - j`
//!   appearing in the Jacobi-Trudi expansion of a Schur function in the
//!   complete homogeneous basis
//! - [`dominance_leq`] and [`partitions_of`]
//!
//! Entries are `i64`; weights and norms are returned as `i128` so that
//! products like `|λ|·‖μ‖` cannot overflow at any enumerable scale.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use itertools::Itertools;

use crate::{Error, Result};

/// A finite integer sequence; the stored length counts trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntSeq {
    entries: Vec<i64>,
}

impl IntSeq {
    /// Wraps a vector of integers as a sequence.
    pub fn new(entries: Vec<i64>) -> Self {
        IntSeq { entries }
    }

    /// The entries as a slice.
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Stored length, including trailing zeros.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// True when the stored length is zero.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry at `i` (0-based), or zero past the stored length.
    pub fn entry_or_zero(&self, i: usize) -> i64 {
        self.entries.get(i).copied().unwrap_or(0)
    }

    /// Sum of all entries.
    pub fn sum(&self) -> i128 {
        self.entries.iter().map(|&e| e as i128).sum()
    }

    /// Extends with zeros to length `len`; refuses to shorten.
    pub fn pad(&self, len: usize) -> Result<IntSeq> {
        if len < self.entries.len() {
            return Err(Error::CannotTruncate {
                seq: self.to_string(),
                len: self.entries.len(),
                requested: len,
            });
        }
        let mut entries = self.entries.clone();
        entries.resize(len, 0);
        Ok(IntSeq { entries })
    }

    /// Entrywise sum; the shorter operand is zero-padded.
    pub fn add(&self, other: &IntSeq) -> IntSeq {
        let len = self.len().max(other.len());
        let entries = (0..len)
            .map(|i| self.entry_or_zero(i) + other.entry_or_zero(i))
            .collect();
        IntSeq { entries }
    }

    /// Entrywise multiple by `n`.
    pub fn scale(&self, n: i64) -> IntSeq {
        IntSeq {
            entries: self.entries.iter().map(|&e| n * e).collect(),
        }
    }

    /// The first `N - 1` prefix sums `(a_1, a_1+a_2, …, a_1+⋯+a_{N-1})`.
    pub fn cumulative(&self) -> IntSeq {
        let mut entries = Vec::with_capacity(self.len().saturating_sub(1));
        let mut acc = 0i64;
        for &e in self.entries.iter().take(self.len().saturating_sub(1)) {
            acc += e;
            entries.push(acc);
        }
        IntSeq { entries }
    }

    /// The norm `‖a‖ = Σ_j (N - j)·a_j` (1-based j, N the stored length),
    /// equal to the sum of the cumulative entries.
    pub fn seq_norm(&self) -> i128 {
        let n = self.len() as i128;
        self.entries
            .iter()
            .enumerate()
            .map(|(i, &e)| (n - 1 - i as i128) * e as i128)
            .sum()
    }
}

impl fmt::Display for IntSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.entries.iter().join(","))
    }
}

impl FromStr for IntSeq {
    type Err = Error;

    /// Parses comma-separated integers; an empty string is the empty sequence.
    fn from_str(s: &str) -> Result<IntSeq> {
        if s.trim().is_empty() {
            return Ok(IntSeq::new(Vec::new()));
        }
        let mut entries = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let value = token.parse::<i64>().map_err(|_| Error::InvalidSequence {
                reason: "not an integer".into(),
                token: token.to_string(),
            })?;
            entries.push(value);
        }
        Ok(IntSeq::new(entries))
    }
}

impl From<&[i64]> for IntSeq {
    fn from(entries: &[i64]) -> Self {
        IntSeq::new(entries.to_vec())
    }
}

impl<const K: usize> From<[i64; K]> for IntSeq {
    fn from(entries: [i64; K]) -> Self {
        IntSeq::new(entries.to_vec())
    }
}

/// A weakly decreasing sequence of non-negative integers.
///
/// Trailing zeros are stored, so `(2,1)` and `(2,1,0)` are different values
/// with the same nonzero parts; see [`Partition::fake_len`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    /// Validates and wraps a part list.
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        for (i, &p) in parts.iter().enumerate() {
            if p < 0 {
                return Err(Error::InvalidPartition {
                    reason: "parts must be non-negative".into(),
                    token: p.to_string(),
                });
            }
            if i > 0 && parts[i - 1] < p {
                return Err(Error::InvalidPartition {
                    reason: "parts must be weakly decreasing".into(),
                    token: p.to_string(),
                });
            }
        }
        Ok(Partition { parts })
    }

    /// The parts as a slice.
    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// Weight `|λ|`: the sum of the parts.
    pub fn weight(&self) -> i128 {
        self.parts.iter().map(|&p| p as i128).sum()
    }

    /// Length `ℓ(λ)`: the number of nonzero parts.
    pub fn nonzero_len(&self) -> usize {
        self.parts.iter().filter(|&&p| p != 0).count()
    }

    /// Fake length `ℓℓ(λ)`: the stored length, counting trailing zeros.
    pub fn fake_len(&self) -> usize {
        self.parts.len()
    }

    /// True when no parts are stored.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// First part, or zero for the empty partition.
    pub fn first(&self) -> i64 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part at `i` (0-based), or zero past the stored length.
    pub fn part_or_zero(&self, i: usize) -> i64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Weight of everything but the first part: `|λ̄| = |λ| - λ_1`.
    pub fn rest_weight(&self) -> i128 {
        self.weight() - self.first() as i128
    }

    /// Copy with trailing zeros removed.
    pub fn trim(&self) -> Partition {
        let end = self
            .parts
            .iter()
            .rposition(|&p| p != 0)
            .map_or(0, |i| i + 1);
        Partition {
            parts: self.parts[..end].to_vec(),
        }
    }

    /// Copy extended with zeros to fake length `len`; refuses to shorten.
    pub fn pad(&self, len: usize) -> Result<Partition> {
        let padded = self.as_seq().pad(len)?;
        Ok(Partition {
            parts: padded.entries,
        })
    }

    /// The parts viewed as an [`IntSeq`].
    pub fn as_seq(&self) -> IntSeq {
        IntSeq::new(self.parts.clone())
    }

    /// Display form wrapped in parentheses, e.g. `(2,1)`; empty is `()`.
    pub fn bracketed(&self) -> String {
        format!("({self})")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts.iter().join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated parts; an empty string is the empty partition.
    fn from_str(s: &str) -> Result<Partition> {
        let seq = IntSeq::from_str(s)?;
        Partition::new(seq.entries)
    }
}

impl TryFrom<IntSeq> for Partition {
    type Error = Error;

    fn try_from(seq: IntSeq) -> Result<Partition> {
        Partition::new(seq.entries)
    }
}

/// Sign of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    /// Even permutation, `+1`.
    Plus,
    /// Odd permutation, `-1`.
    Minus,
}

impl Sign {
    /// The sign as `+1` or `-1`.
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// Sign of a permutation given as a sequence of distinct values.
    pub fn of_permutation(perm: &[usize]) -> Sign {
        let mut inversions = 0usize;
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// One term of the Jacobi-Trudi expansion: the offset `ω(σ)` and the sign `ε(σ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedOffset {
    /// The shift `ω(σ)_j = σ(j) - j`, stored at length `N`.
    pub offset: IntSeq,
    /// The sign `ε(σ)`.
    pub sign: Sign,
}

/// All `N!` signed offsets `(ω(σ), ε(σ))` for `σ` ranging over `S_N`.
///
/// Permutations are visited in lexicographic order, so the identity (offset
/// all zeros, sign `+1`) comes first. `N = 0` yields the single empty offset.
pub fn jt_offsets(n: usize) -> impl Iterator<Item = SignedOffset> {
    (1..=n).permutations(n).map(move |perm| {
        let offset = IntSeq::new(
            perm.iter()
                .enumerate()
                .map(|(j, &sigma_j)| sigma_j as i64 - (j as i64 + 1))
                .collect(),
        );
        SignedOffset {
            offset,
            sign: Sign::of_permutation(&perm),
        }
    })
}

/// Dominance order: true iff every prefix sum of `a` is at most the
/// corresponding prefix sum of `b`. Requires `|a| = |b|`.
pub fn dominance_leq(a: &Partition, b: &Partition) -> Result<bool> {
    if a.weight() != b.weight() {
        return Err(Error::IncomparableWeights {
            left: a.to_string(),
            left_weight: a.weight(),
            right: b.to_string(),
            right_weight: b.weight(),
        });
    }
    let len = a.fake_len().max(b.fake_len());
    let mut prefix_a = 0i128;
    let mut prefix_b = 0i128;
    for i in 0..len {
        prefix_a += a.part_or_zero(i) as i128;
        prefix_b += b.part_or_zero(i) as i128;
        if prefix_a > prefix_b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All partitions of `n` with at most `max_len` parts, in reverse-lexicographic
/// order (largest first part first). Parts are emitted without trailing zeros.
pub fn partitions_of(n: i64, max_len: usize) -> Vec<Partition> {
    fn go(n: i64, max_part: i64, slots: usize, current: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        if slots == 0 {
            return;
        }
        // First part at least ceil(n / slots), else the rest cannot absorb n.
        let low = (n + slots as i64 - 1) / slots as i64;
        let high = max_part.min(n);
        let mut p = high;
        while p >= low {
            current.push(p);
            go(n - p, p, slots - 1, current, out);
            current.pop();
            p -= 1;
        }
    }

    let mut out = Vec::new();
    if n < 0 {
        return out;
    }
    let mut current = Vec::new();
    go(n, n, max_len, &mut current, &mut out);
    if n == 0 {
        // go() pushes the empty partition once regardless of max_len.
        debug_assert_eq!(out.len(), 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(entries: &[i64]) -> IntSeq {
        IntSeq::new(entries.to_vec())
    }

    fn part(parts: &[i64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn pad_extends_with_zeros() {
        assert_eq!(seq(&[2, 1]).pad(4).unwrap(), seq(&[2, 1, 0, 0]));
        assert_eq!(seq(&[]).pad(2).unwrap(), seq(&[0, 0]));
        assert_eq!(seq(&[3]).pad(1).unwrap(), seq(&[3]));
    }

    #[test]
    fn pad_refuses_to_truncate() {
        let err = seq(&[2, 1]).pad(1).unwrap_err();
        assert!(err.to_string().contains("cannot truncate"));
    }

    #[test]
    fn add_and_scale_are_entrywise_with_padding() {
        assert_eq!(seq(&[2, 1]).add(&seq(&[1])), seq(&[3, 1]));
        assert_eq!(seq(&[2, 1]).scale(3), seq(&[6, 3]));
        assert_eq!(seq(&[1, 1]).add(&seq(&[0, 0, 0])), seq(&[1, 1, 0]));
    }

    #[test]
    fn cumulative_gives_proper_prefix_sums() {
        assert_eq!(seq(&[2, 1, 1]).cumulative(), seq(&[2, 3]));
        assert_eq!(seq(&[2, 1, 1, 0, 0]).cumulative(), seq(&[2, 3, 4, 4]));
        assert_eq!(seq(&[]).cumulative(), seq(&[]));
        assert_eq!(seq(&[5]).cumulative(), seq(&[]));
    }

    #[test]
    fn seq_norm_matches_worked_values() {
        assert_eq!(seq(&[2, 1, 1]).seq_norm(), 5);
        assert_eq!(seq(&[2, 1, 1, 0, 0]).seq_norm(), 13);
        assert_eq!(seq(&[]).seq_norm(), 0);
    }

    #[test]
    fn seq_norm_is_sum_of_cumulative() {
        let samples = [
            seq(&[2, 1, 1]),
            seq(&[2, 1, 1, 0, 0]),
            seq(&[0, -1, 3, 2]),
            seq(&[7]),
            seq(&[]),
        ];
        for s in samples {
            assert_eq!(s.seq_norm(), s.cumulative().sum());
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&part(&[1, 1, 1]), &part(&[3])).unwrap());
        assert!(dominance_leq(&part(&[2, 1]), &part(&[2, 1])).unwrap());
        assert!(dominance_leq(&part(&[2, 2]), &part(&[3, 1])).unwrap());
        assert!(!dominance_leq(&part(&[3, 1]), &part(&[2, 2])).unwrap());
    }

    #[test]
    fn dominance_requires_equal_weights() {
        let err = dominance_leq(&part(&[2]), &part(&[3])).unwrap_err();
        assert!(err.to_string().contains("incomparable weights"));
    }

    #[test]
    fn jt_offsets_small_cases() {
        let n1: Vec<_> = jt_offsets(1).collect();
        assert_eq!(n1.len(), 1);
        assert_eq!(n1[0].offset, seq(&[0]));
        assert_eq!(n1[0].sign, Sign::Plus);

        let n2: Vec<_> = jt_offsets(2).collect();
        assert_eq!(n2.len(), 2);
        assert_eq!(n2[0].offset, seq(&[0, 0]));
        assert_eq!(n2[0].sign, Sign::Plus);
        assert_eq!(n2[1].offset, seq(&[1, -1]));
        assert_eq!(n2[1].sign, Sign::Minus);

        let n0: Vec<_> = jt_offsets(0).collect();
        assert_eq!(n0.len(), 1);
        assert_eq!(n0[0].offset, seq(&[]));
        assert_eq!(n0[0].sign, Sign::Plus);
    }

    #[test]
    fn jt_offsets_signs_cancel_and_identity_is_first() {
        let n3: Vec<_> = jt_offsets(3).collect();
        assert_eq!(n3.len(), 6);
        assert_eq!(n3[0].offset, seq(&[0, 0, 0]));
        let signed_sum: i64 = n3.iter().map(|so| so.sign.as_i64()).sum();
        assert_eq!(signed_sum, 0);
    }

    #[test]
    fn jt_offsets_entries_shift_to_a_permutation() {
        for n in 0..=5usize {
            let mut seen = Vec::new();
            for so in jt_offsets(n) {
                assert_eq!(so.offset.len(), n);
                let mut values: Vec<i64> = so
                    .offset
                    .entries()
                    .iter()
                    .enumerate()
                    .map(|(j, &w)| w + j as i64 + 1)
                    .collect();
                values.sort_unstable();
                assert_eq!(values, (1..=n as i64).collect::<Vec<_>>());
                assert_eq!(so.offset.sum(), 0);
                seen.push(so.offset.entries().to_vec());
            }
            let count = seen.len();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), count, "offsets must be distinct");
            assert_eq!(count, (1..=n).product::<usize>().max(1));
        }
    }

    #[test]
    fn partitions_of_examples() {
        let got: Vec<String> = partitions_of(4, 2).iter().map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["4", "3,1", "2,2"]);
        let got: Vec<String> = partitions_of(3, 3).iter().map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["3", "2,1", "1,1,1"]);
        assert_eq!(partitions_of(0, 3), vec![part(&[])]);
        assert!(partitions_of(3, 0).is_empty());
    }

    #[test]
    fn partitions_of_is_reverse_lexicographic_and_valid() {
        for n in 0..=9 {
            for max_len in 1..=4 {
                let list = partitions_of(n, max_len);
                for p in &list {
                    assert_eq!(p.weight(), n as i128);
                    assert!(p.fake_len() <= max_len);
                    assert!(p.parts().iter().all(|&x| x > 0));
                }
                for w in list.windows(2) {
                    assert!(w[0].parts() > w[1].parts(), "not reverse-lexicographic");
                }
            }
        }
    }

    #[test]
    fn partition_accessors() {
        let p = part(&[2, 1, 1, 0, 0]);
        assert_eq!(p.weight(), 4);
        assert_eq!(p.nonzero_len(), 3);
        assert_eq!(p.fake_len(), 5);
        assert_eq!(p.first(), 2);
        assert_eq!(p.rest_weight(), 2);
        assert_eq!(p.trim(), part(&[2, 1, 1]));
        assert_eq!(p.bracketed(), "(2,1,1,0,0)");
        assert_eq!(part(&[]).bracketed(), "()");
    }

    #[test]
    fn partition_rejects_bad_parts() {
        let err = Partition::new(vec![1, 2]).unwrap_err();
        assert!(err.to_string().contains("weakly decreasing"));
        assert!(err.to_string().contains('2'));
        let err = Partition::new(vec![2, -1]).unwrap_err();
        assert!(err.to_string().contains("non-negative"));
    }

    #[test]
    fn parse_and_display_round_trip() {
        let p: Partition = "4,2,1".parse().unwrap();
        assert_eq!(p, part(&[4, 2, 1]));
        assert_eq!(p.to_string(), "4,2,1");
        let empty: Partition = "".parse().unwrap();
        assert_eq!(empty, part(&[]));
        let s: IntSeq = " 2 , -1 ".parse().unwrap();
        assert_eq!(s, seq(&[2, -1]));

        let err = "2,x".parse::<IntSeq>().unwrap_err();
        assert!(err.to_string().contains('x'));
        let err = "1,2".parse::<Partition>().unwrap_err();
        assert!(err.to_string().contains("invalid partition"));
    }
}

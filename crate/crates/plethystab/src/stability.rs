//! Stability families and their plateau bounds.
//!
//! Four one-parameter families of coefficient sequences, each provably
//! eventually constant:
//!
//! - `P1`: `(λ+(n), μ, ν+(n·|μ|))` — grow the first part of `λ`
//! - `Q1`: `(λ+(n), μ, ν+n·μ)` — grow `λ` and stretch `ν` along `μ`
//! - `R1`: `(λ, μ+(n), ν+(n·|λ|))` — grow the first part of `μ`
//! - `R2`: `(λ, μ+n·π, ν+n·|λ|·π)` — stretch `μ` along a direction `π`
//!
//! [`run_report`] evaluates a window of terms, locates the empirical plateau,
//! and prints it next to two analytic thresholds: [`our_bound`] (the counting
//! argument) and [`literature_bound`] (earlier published bounds), both
//! normalized to "the sequence is constant for `n ≥ B`" so the numbers are
//! directly comparable.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;
use rayon::prelude::*;

use crate::coeff::{a_coeff, b_coeff, PlethysmQuery};
use crate::error::Error;
use crate::seq::Partition;
use crate::Result;

/// Exact rational threshold type used by the bounds.
pub type Rat = Ratio<i128>;

/// The four stability families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Grow the first part of the outer shape.
    P1,
    /// Grow the outer shape while stretching the target along the inner one.
    Q1,
    /// Grow the first part of the inner shape.
    R1,
    /// Stretch the inner shape along a direction `π`.
    R2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::P1 => "P1",
            Family::Q1 => "Q1",
            Family::R1 => "R1",
            Family::R2 => "R2",
        };
        f.write_str(name)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "P1" => Ok(Family::P1),
            "Q1" => Ok(Family::Q1),
            "R1" => Ok(Family::R1),
            "R2" => Ok(Family::R2),
            _ => Err(Error::InvalidFamily {
                reason: format!("unknown family {s:?}, expected one of P1, Q1, R1, R2"),
            }),
        }
    }
}

/// Which coefficient sequence a report tracks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Which {
    /// The Schur-expansion multiplicity `a`.
    A,
    /// The monomial coefficient `b` of `h_λ[s_μ]`.
    B,
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::A => "a",
            Which::B => "b",
        })
    }
}

impl FromStr for Which {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(Which::A),
            "b" => Ok(Which::B),
            _ => Err(Error::InvalidFamily {
                reason: format!("unknown coefficient kind {s:?}, expected a or b"),
            }),
        }
    }
}

/// One stability instance: a family plus its base shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    family: Family,
    lambda: Partition,
    mu: Partition,
    nu: Partition,
    pi: Option<Partition>,
}

impl FamilySpec {
    /// Validates a stability instance: the base triple must satisfy
    /// `|λ|·|μ| = |ν|`, and `R2` needs a nonempty direction `π` (the other
    /// families drop any `π` they are given).
    pub fn new(
        family: Family,
        lambda: Partition,
        mu: Partition,
        nu: Partition,
        pi: Option<Partition>,
    ) -> Result<Self> {
        let expected = lambda.weight() * mu.weight();
        if expected != nu.weight() {
            return Err(Error::InvalidFamily {
                reason: format!(
                    "weight mismatch: |lambda|*|mu| = {expected} but |nu| = {}",
                    nu.weight()
                ),
            });
        }
        let pi = match family {
            Family::R2 => match pi {
                Some(p) if p.nonzero_len() > 0 => Some(p.trim()),
                _ => {
                    return Err(Error::InvalidFamily {
                        reason: "family R2 needs a nonempty direction pi".to_string(),
                    })
                }
            },
            _ => None,
        };
        Ok(FamilySpec {
            family,
            lambda,
            mu,
            nu,
            pi,
        })
    }

    /// The family tag.
    pub fn family(&self) -> Family {
        self.family
    }

    /// The base outer shape.
    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    /// The base inner shape.
    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// The base target shape.
    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    /// The stretch direction; present exactly for `R2`.
    pub fn pi(&self) -> Option<&Partition> {
        self.pi.as_ref()
    }

    /// The shapes at step `n` of the family.
    pub fn shifted_triple(&self, n: i64) -> (Partition, Partition, Partition) {
        assert!(n >= 0, "stability families are indexed by n >= 0");
        let n = n as i128;
        match self.family {
            Family::P1 => (
                add_first(&self.lambda, n),
                self.mu.clone(),
                add_first(&self.nu, n * self.mu.weight()),
            ),
            Family::Q1 => (
                add_first(&self.lambda, n),
                self.mu.clone(),
                add_scaled(&self.nu, &self.mu, n),
            ),
            Family::R1 => (
                self.lambda.clone(),
                add_first(&self.mu, n),
                add_first(&self.nu, n * self.lambda.weight()),
            ),
            Family::R2 => {
                let pi = self.pi.as_ref().expect("R2 specs always carry pi");
                (
                    self.lambda.clone(),
                    add_scaled(&self.mu, pi, n),
                    add_scaled(&self.nu, pi, n * self.lambda.weight()),
                )
            }
        }
    }
}

/// `p` with `amount` added to its first part.
fn add_first(p: &Partition, amount: i128) -> Partition {
    if amount == 0 {
        return p.clone();
    }
    let mut parts = p.parts().to_vec();
    if parts.is_empty() {
        parts.push(0);
    }
    let first = parts[0] as i128 + amount;
    parts[0] = i64::try_from(first).expect("shifted part must fit in i64");
    Partition::new(parts).expect("adding to the first part keeps a partition")
}

/// `p + factor·q`, padding the shorter shape with zeros.
fn add_scaled(p: &Partition, q: &Partition, factor: i128) -> Partition {
    let len = p.fake_len().max(q.fake_len());
    let parts: Vec<i64> = (0..len)
        .map(|i| {
            let v = p.part_or_zero(i) as i128 + factor * q.part_or_zero(i) as i128;
            i64::try_from(v).expect("shifted part must fit in i64")
        })
        .collect();
    Partition::new(parts).expect("a non-negative combination of partitions is a partition")
}

/// The `n`-th term of the chosen coefficient sequence.
pub fn family_term(spec: &FamilySpec, n: i64, which: Which) -> BigInt {
    let (lambda, mu, nu) = spec.shifted_triple(n);
    match which {
        Which::B => b_coeff(&lambda.as_seq(), &mu, &nu.as_seq()),
        Which::A => a_coeff(&PlethysmQuery::new(lambda, mu, nu)),
    }
}

/// Sequence norm of `p` padded to `len` entries.
fn padded_norm(p: &Partition, len: usize) -> i128 {
    p.as_seq()
        .pad(len)
        .expect("padding to the maximum fake length cannot shrink")
        .seq_norm()
}

/// The counting-argument threshold: the sequence is constant for
/// `n ≥ our_bound(spec)` (with the zero limit in the vanishing `P1` case).
pub fn our_bound(spec: &FamilySpec) -> Rat {
    let lambda = &spec.lambda;
    let mu = &spec.mu;
    let nu = &spec.nu;
    match spec.family {
        Family::P1 => {
            let m = mu.trim();
            if m.nonzero_len() <= 1 {
                Rat::from_integer(nu.rest_weight() - lambda.first() as i128)
            } else {
                let num = m.first() as i128 * lambda.weight() - nu.first() as i128;
                let den = m.rest_weight();
                Rat::from_integer(num.div_euclid(den) + 1)
            }
        }
        Family::Q1 => {
            let len = lambda.fake_len().max(mu.fake_len()).max(nu.fake_len());
            let b = lambda.weight() * padded_norm(mu, len)
                - padded_norm(nu, len)
                - lambda.first() as i128;
            Rat::from_integer(b)
        }
        Family::R1 => {
            let b = mu.first() as i128 * (lambda.weight() - 1) + mu.part_or_zero(1) as i128
                - nu.first() as i128;
            Rat::from_integer(b)
        }
        Family::R2 => {
            let (interlacing, nonneg) =
                r2_components(spec, |prefix| (1 + prefix).max(0)).expect("spec is R2");
            max_bound(interlacing, nonneg)
        }
    }
}

/// Previously published thresholds on the same "constant for `n ≥ B`" scale,
/// or `None` where no comparable bound exists for the instance.
pub fn literature_bound(spec: &FamilySpec) -> Option<Rat> {
    let lambda = &spec.lambda;
    let mu = &spec.mu;
    let nu = &spec.nu;
    match spec.family {
        Family::P1 => {
            let m = mu.trim();
            if m.nonzero_len() > 1 {
                let frac = Rat::new(nu.rest_weight() * m.weight(), m.rest_weight());
                Some(frac - Rat::from_integer(nu.first() as i128))
            } else if m.weight() == 0 {
                None
            } else {
                let lam_rest = lambda.rest_weight();
                let lam2 = lambda.part_or_zero(1) as i128;
                let nu1 = nu.first() as i128;
                let t1 = lam_rest + lam2 - 2 - nu1.div_euclid(m.weight());
                let t2 = lam2 - 1 + nu.rest_weight() - (lam_rest + nu1).div_euclid(m.weight());
                Some(Rat::from_integer(t1.max(t2)))
            }
        }
        Family::Q1 => {
            let len = mu.fake_len().max(nu.fake_len());
            let l1: i128 = (0..len)
                .map(|j| {
                    (lambda.weight() * mu.part_or_zero(j) as i128 - nu.part_or_zero(j) as i128)
                        .abs()
                })
                .sum();
            Some(Rat::from_integer(
                lambda.part_or_zero(1) as i128 - lambda.weight() + l1,
            ))
        }
        Family::R1 => {
            if lambda.weight() == 0 {
                return None;
            }
            let nu1 = nu.first() as i128;
            let b = lambda.weight() * mu.first() as i128 + mu.part_or_zero(1) as i128
                - nu1
                - 1
                - nu1.div_euclid(lambda.weight());
            Some(Rat::from_integer(b))
        }
        Family::R2 => {
            let (interlacing, nonneg) = r2_components(spec, |prefix| prefix).expect("spec is R2");
            Some(max_bound(interlacing, nonneg))
        }
    }
}

fn max_bound(a: Option<Rat>, b: Option<Rat>) -> Rat {
    match (a, b) {
        (Some(x), Some(y)) => x.max(y),
        (Some(x), None) | (None, Some(x)) => x,
        (None, None) => Rat::zero(),
    }
}

/// The two `R2` constraint maxima, parameterized by the shift constant
/// `c_j = c_of(Σ_{i≤j}(|λ|·μ_i − ν_i))`:
///
/// - interlacing, over `j` with `π_j > π_{j+1}`: `(μ_{j+1} − μ_j + c_j)/(π_j − π_{j+1})`
/// - non-negativity, over `i` with `π_i > 0`: `(c_i − μ_i)/π_i`
fn r2_components(
    spec: &FamilySpec,
    c_of: impl Fn(i128) -> i128,
) -> Result<(Option<Rat>, Option<Rat>)> {
    let pi = spec.pi().ok_or_else(|| Error::InvalidFamily {
        reason: format!("family {} has no direction pi", spec.family),
    })?;
    let lambda_weight = spec.lambda.weight();
    let mu = &spec.mu;
    let nu = &spec.nu;

    let mut interlacing: Option<Rat> = None;
    let mut nonneg: Option<Rat> = None;
    let mut prefix: i128 = 0;
    for j in 0..pi.nonzero_len() {
        prefix += lambda_weight * mu.part_or_zero(j) as i128 - nu.part_or_zero(j) as i128;
        let c = c_of(prefix);
        let pj = pi.part_or_zero(j) as i128;
        let pj1 = pi.part_or_zero(j + 1) as i128;
        if pj > pj1 {
            let cand = Rat::new(mu.part_or_zero(j + 1) as i128 - mu.part_or_zero(j) as i128 + c,
                pj - pj1);
            interlacing = Some(interlacing.map_or(cand, |m| m.max(cand)));
        }
        if pj > 0 {
            let cand = Rat::new(c - mu.part_or_zero(j) as i128, pj);
            nonneg = Some(nonneg.map_or(cand, |m| m.max(cand)));
        }
    }
    Ok((interlacing, nonneg))
}

/// The two `R2` constraint maxima behind [`our_bound`] (interlacing first,
/// then non-negativity), so callers can flag instances where they differ.
pub fn r2_bound_components(spec: &FamilySpec) -> Result<(Option<Rat>, Option<Rat>)> {
    if spec.family != Family::R2 {
        return Err(Error::InvalidFamily {
            reason: format!("bound components only exist for R2, got {}", spec.family),
        });
    }
    r2_components(spec, |prefix| (1 + prefix).max(0))
}

/// A window of family terms with plateau detection and both thresholds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    /// The instance the report describes.
    pub spec: FamilySpec,
    /// Which coefficient sequence was evaluated.
    pub which: Which,
    /// Terms for `n = 0..=n_max`.
    pub values: Vec<BigInt>,
    /// First index of the final constant run, when that run has at least
    /// three terms beyond it inside the window.
    pub empirical_index: Option<i64>,
    /// Threshold from the counting argument.
    pub our_bound: Rat,
    /// Threshold from earlier published bounds, when one applies.
    pub literature_bound: Option<Rat>,
    /// The stable value, when the window certified a plateau.
    pub limit: Option<BigInt>,
}

impl StabilityReport {
    /// Where the certification window starts: `max(⌈our_bound⌉, 0)`.
    pub fn window_start(&self) -> i64 {
        ceil_clamped(&self.our_bound)
    }

    /// Canonical JSON form of the report. Values and the limit are decimal
    /// strings; bounds render as exact rationals; a window too short to
    /// certify a plateau reports `"not stabilized in window"` and a null
    /// limit.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        map.insert("family".into(), self.spec.family().to_string().into());
        map.insert("lambda".into(), parts_json(self.spec.lambda()));
        map.insert("mu".into(), parts_json(self.spec.mu()));
        map.insert("nu".into(), parts_json(self.spec.nu()));
        let pi_json = match self.spec.pi() {
            Some(pi) => parts_json(pi),
            None => serde_json::Value::Array(Vec::new()),
        };
        map.insert("pi".into(), pi_json);
        map.insert("which".into(), self.which.to_string().into());
        map.insert(
            "values".into(),
            self.values
                .iter()
                .map(|v| serde_json::Value::String(v.to_string()))
                .collect(),
        );
        let empirical = match self.empirical_index {
            Some(k) => serde_json::Value::from(k),
            None => serde_json::Value::String("not stabilized in window".into()),
        };
        map.insert("empirical_index".into(), empirical);
        map.insert("our_bound".into(), self.our_bound.to_string().into());
        let lit = match &self.literature_bound {
            Some(r) => serde_json::Value::String(r.to_string()),
            None => serde_json::Value::String("n/a".into()),
        };
        map.insert("literature_bound".into(), lit);
        let limit = match &self.limit {
            Some(v) => serde_json::Value::String(v.to_string()),
            None => serde_json::Value::Null,
        };
        map.insert("limit".into(), limit);
        serde_json::Value::Object(map)
    }
}

fn parts_json(p: &Partition) -> serde_json::Value {
    serde_json::Value::Array(
        p.parts()
            .iter()
            .map(|&x| serde_json::Value::from(x))
            .collect(),
    )
}

fn ceil_clamped(bound: &Rat) -> i64 {
    let c = bound.ceil().to_integer().max(0);
    i64::try_from(c).expect("window start must fit in i64")
}

/// Evaluates `values[0..=n_max]` in parallel and assembles the report.
///
/// The window must reach three terms past the (clamped) bound so a plateau
/// starting there can be certified; otherwise this asks for a larger
/// `n_max`. The empirical index is the start of the final constant run,
/// reported only when the run extends at least three terms beyond it.
pub fn run_report(spec: &FamilySpec, n_max: i64, which: Which) -> Result<StabilityReport> {
    let bound = our_bound(spec);
    let needed = ceil_clamped(&bound) + 3;
    if n_max < needed {
        return Err(Error::IncreaseNMax {
            needed,
            got: n_max,
        });
    }
    let ns: Vec<i64> = (0..=n_max).collect();
    let values: Vec<BigInt> = ns
        .into_par_iter()
        .map(|n| family_term(spec, n, which))
        .collect();

    let last = values.last().expect("window is never empty");
    let mut n0 = values.len() - 1;
    while n0 > 0 && values[n0 - 1] == *last {
        n0 -= 1;
    }
    let empirical_index = if values.len() - 1 - n0 >= 3 {
        Some(n0 as i64)
    } else {
        None
    };
    let limit = empirical_index.map(|_| last.clone());

    Ok(StabilityReport {
        spec: spec.clone(),
        which,
        values,
        empirical_index,
        our_bound: bound,
        literature_bound: literature_bound(spec),
        limit,
    })
}

/// Convenience constructor used by tests and the sweep: parses shapes from
/// comma-separated strings.
pub fn spec_from_parts(
    family: Family,
    lambda: &[i64],
    mu: &[i64],
    nu: &[i64],
    pi: Option<&[i64]>,
) -> Result<FamilySpec> {
    let pi = match pi {
        Some(p) => Some(Partition::new(p.to_vec())?),
        None => None,
    };
    FamilySpec::new(
        family,
        Partition::new(lambda.to_vec())?,
        Partition::new(mu.to_vec())?,
        Partition::new(nu.to_vec())?,
        pi,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i128) -> Rat {
        Rat::from_integer(n)
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn bigs(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| big(v)).collect()
    }

    #[test]
    fn family_and_which_round_trip_through_strings() {
        for f in [Family::P1, Family::Q1, Family::R1, Family::R2] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert_eq!("r2".parse::<Family>().unwrap(), Family::R2);
        assert!("P3".parse::<Family>().is_err());
        assert_eq!("a".parse::<Which>().unwrap(), Which::A);
        assert_eq!("B".parse::<Which>().unwrap(), Which::B);
        assert!("c".parse::<Which>().is_err());
    }

    #[test]
    fn spec_validation_rejects_bad_input() {
        let err = spec_from_parts(Family::Q1, &[1], &[2], &[3], None).unwrap_err();
        assert!(err.to_string().contains("weight mismatch"));
        let err = spec_from_parts(Family::R2, &[1], &[1], &[1], None).unwrap_err();
        assert!(err.to_string().contains("nonempty direction"));
        let err = spec_from_parts(Family::R2, &[1], &[1], &[1], Some(&[0])).unwrap_err();
        assert!(err.to_string().contains("nonempty direction"));
    }

    #[test]
    fn non_r2_families_drop_pi() {
        let spec = spec_from_parts(Family::Q1, &[1], &[1], &[1], Some(&[2, 1])).unwrap();
        assert_eq!(spec.pi(), None);
    }

    #[test]
    fn shifted_triples_follow_the_family_definitions() {
        let spec = spec_from_parts(Family::P1, &[2, 1], &[2], &[4, 2], None).unwrap();
        let (l, m, v) = spec.shifted_triple(3);
        assert_eq!(l.parts(), &[5, 1]);
        assert_eq!(m.parts(), &[2]);
        assert_eq!(v.parts(), &[10, 2]);

        let spec = spec_from_parts(Family::Q1, &[2, 1], &[2], &[4, 2], None).unwrap();
        let (l, _, v) = spec.shifted_triple(2);
        assert_eq!(l.parts(), &[4, 1]);
        assert_eq!(v.parts(), &[8, 2]);

        let spec = spec_from_parts(Family::R1, &[2], &[2, 1], &[4, 2], None).unwrap();
        let (l, m, v) = spec.shifted_triple(2);
        assert_eq!(l.parts(), &[2]);
        assert_eq!(m.parts(), &[4, 1]);
        assert_eq!(v.parts(), &[8, 2]);

        let spec = spec_from_parts(Family::R2, &[2], &[2, 1], &[4, 2], Some(&[1, 1])).unwrap();
        let (_, m, v) = spec.shifted_triple(2);
        assert_eq!(m.parts(), &[4, 3]);
        assert_eq!(v.parts(), &[8, 6]);
    }

    #[test]
    fn q1_unit_instance_is_constant_from_zero() {
        let spec = spec_from_parts(Family::Q1, &[1], &[1], &[1], None).unwrap();
        assert_eq!(our_bound(&spec), rat(-1));
        assert_eq!(literature_bound(&spec), Some(rat(-1)));
        let report = run_report(&spec, 5, Which::B).unwrap();
        assert_eq!(report.values, bigs(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(report.empirical_index, Some(0));
        assert_eq!(report.limit, Some(big(1)));
        assert_eq!(report.window_start(), 0);
    }

    #[test]
    fn q1_single_row_example_stays_at_one() {
        let spec = spec_from_parts(Family::Q1, &[1], &[2], &[2], None).unwrap();
        let report = run_report(&spec, 5, Which::B).unwrap();
        assert_eq!(report.values, bigs(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(report.empirical_index, Some(0));
    }

    #[test]
    fn p1_with_two_inner_rows_vanishes_past_the_bound() {
        let spec = spec_from_parts(Family::P1, &[1], &[1, 1], &[1, 1], None).unwrap();
        assert_eq!(our_bound(&spec), rat(1));
        assert_eq!(literature_bound(&spec), Some(rat(1)));
        let report = run_report(&spec, 4, Which::B).unwrap();
        assert_eq!(report.values, bigs(&[1, 0, 0, 0, 0]));
        assert_eq!(report.empirical_index, Some(1));
        assert_eq!(report.limit, Some(big(0)));
    }

    #[test]
    fn p1_single_inner_row_is_constant() {
        let spec = spec_from_parts(Family::P1, &[1], &[2], &[2], None).unwrap();
        assert_eq!(our_bound(&spec), rat(-1));
        assert_eq!(literature_bound(&spec), Some(rat(-2)));
        let report = run_report(&spec, 5, Which::B).unwrap();
        assert_eq!(report.values, bigs(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(report.empirical_index, Some(0));
    }

    #[test]
    fn r1_kostka_instance_is_constant() {
        let spec = spec_from_parts(Family::R1, &[1], &[2, 1], &[2, 1], None).unwrap();
        assert_eq!(our_bound(&spec), rat(-1));
        assert_eq!(literature_bound(&spec), Some(rat(-2)));
        let report = run_report(&spec, 5, Which::B).unwrap();
        assert_eq!(report.values, bigs(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(report.empirical_index, Some(0));
        assert_eq!(report.limit, Some(big(1)));
    }

    #[test]
    fn r1_literature_example_value() {
        let spec = spec_from_parts(Family::R1, &[2], &[1], &[2], None).unwrap();
        assert_eq!(literature_bound(&spec), Some(rat(-2)));
    }

    #[test]
    fn r2_bound_takes_both_constraint_families() {
        let spec = spec_from_parts(Family::R2, &[2], &[2, 1], &[4, 2], Some(&[1, 1])).unwrap();
        let (interlacing, nonneg) = r2_bound_components(&spec).unwrap();
        assert_eq!(interlacing, Some(Rat::zero()));
        assert_eq!(nonneg, Some(Rat::zero()));
        assert_eq!(our_bound(&spec), rat(0));
        assert_eq!(literature_bound(&spec), Some(rat(-1)));
        let report = run_report(&spec, 5, Which::B).unwrap();
        assert_eq!(report.values, bigs(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(report.empirical_index, Some(0));
    }

    #[test]
    fn r2_components_require_r2() {
        let spec = spec_from_parts(Family::R1, &[1], &[2, 1], &[2, 1], None).unwrap();
        assert!(r2_bound_components(&spec).is_err());
    }

    #[test]
    fn r2_along_a_single_row_matches_r1() {
        let r1 = spec_from_parts(Family::R1, &[1], &[2, 1], &[2, 1], None).unwrap();
        let r2 = spec_from_parts(Family::R2, &[1], &[2, 1], &[2, 1], Some(&[1])).unwrap();
        for n in 0..6 {
            assert_eq!(
                family_term(&r1, n, Which::B),
                family_term(&r2, n, Which::B),
                "n={n}"
            );
        }
        assert_eq!(our_bound(&r2), our_bound(&r1) + rat(1));
        let rep1 = run_report(&r1, 6, Which::B).unwrap();
        let rep2 = run_report(&r2, 6, Which::B).unwrap();
        assert_eq!(rep1.values, rep2.values);
        assert_eq!(rep1.empirical_index, rep2.empirical_index);
        assert_eq!(rep1.limit, rep2.limit);
    }

    #[test]
    fn q1_two_row_instance_counts_four_matrices() {
        let spec = spec_from_parts(Family::Q1, &[2, 1], &[2], &[4, 2], None).unwrap();
        assert_eq!(our_bound(&spec), rat(0));
        assert_eq!(literature_bound(&spec), Some(rat(2)));
        let report = run_report(&spec, 5, Which::B).unwrap();
        assert_eq!(report.values, bigs(&[4, 4, 4, 4, 4, 4]));
        assert_eq!(report.empirical_index, Some(0));
        assert_eq!(report.limit, Some(big(4)));
    }

    #[test]
    fn q1_schur_sequence_is_monotone_here() {
        let spec = spec_from_parts(Family::Q1, &[2, 1], &[2], &[4, 2], None).unwrap();
        let report = run_report(&spec, 4, Which::A).unwrap();
        assert_eq!(report.values[0], big(1));
        for w in report.values.windows(2) {
            assert!(w[0] <= w[1], "a-sequence must be non-decreasing");
        }
    }

    #[test]
    fn too_small_windows_are_rejected() {
        let spec = spec_from_parts(Family::P1, &[1], &[1, 1], &[1, 1], None).unwrap();
        let err = run_report(&spec, 3, Which::B).unwrap_err();
        assert!(err.to_string().contains("increase n_max"));
        assert_eq!(
            err,
            Error::IncreaseNMax {
                needed: 4,
                got: 3
            }
        );
    }

    #[test]
    fn report_serializes_with_fixed_key_order() {
        let spec = spec_from_parts(Family::Q1, &[1], &[1], &[1], None).unwrap();
        let report = run_report(&spec, 3, Which::B).unwrap();
        let json = serde_json::to_string(&report.to_json()).unwrap();
        assert_eq!(
            json,
            "{\"family\":\"Q1\",\"lambda\":[1],\"mu\":[1],\"nu\":[1],\"pi\":[],\
             \"which\":\"b\",\"values\":[\"1\",\"1\",\"1\",\"1\"],\"empirical_index\":0,\
             \"our_bound\":\"-1\",\"literature_bound\":\"-1\",\"limit\":\"1\"}"
        );
    }

    #[test]
    fn short_plateaus_are_not_certified() {
        let spec = spec_from_parts(Family::P1, &[1], &[1, 1], &[1, 1], None).unwrap();
        let mut report = run_report(&spec, 4, Which::B).unwrap();
        // Reuse the report plumbing on a truncated window: the final run
        // (three zeros) has only two terms beyond its start.
        report.values.truncate(4);
        let json = super::StabilityReport {
            empirical_index: None,
            limit: None,
            ..report
        }
        .to_json();
        assert_eq!(
            json.get("empirical_index").unwrap(),
            &serde_json::Value::String("not stabilized in window".into())
        );
        assert_eq!(json.get("limit").unwrap(), &serde_json::Value::Null);
    }
}

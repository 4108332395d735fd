//! Brute-force oracle: sparse polynomials over a monomial alphabet.
//!
//! Provides:
//! - [`MonomialPoly`]: exponent-vector-to-coefficient maps with exact
//!   big-integer coefficients
//! - [`schur_poly`]: the Schur polynomial as a sum of tableau-weight monomials
//! - [`h_plethysm_poly`] and [`s_plethysm_poly`]: plethysms computed directly
//!   on the alphabet of tableau monomials
//! - [`schur_decompose`]: expansion into Schur polynomials by leading-term
//!   subtraction
//!
//! This route is slow but independent of the lattice-counting engine, which
//! makes it the reference in equivalence tests.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::seq::{IntSeq, Partition};
use crate::tableau::{for_each_ssyt_weight, weight_matrix};
use crate::{Error, Result};

/// A sparse polynomial: exponent vectors of fixed length `nvars` mapped to
/// nonzero big-integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl MonomialPoly {
    /// The zero polynomial in `nvars` variables.
    pub fn zero(nvars: usize) -> Self {
        MonomialPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1 in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        let mut p = MonomialPoly::zero(nvars);
        p.add_term(vec![0; nvars], BigInt::one());
        p
    }

    /// Number of variables.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Stored terms in lexicographic key order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True when no terms are stored.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients, i.e. the evaluation at `x_i = 1`.
    pub fn coefficient_mass(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Adds `coef` to the term `exp`, dropping the entry if it cancels.
    pub fn add_term(&mut self, exp: Vec<i64>, coef: BigInt) {
        debug_assert_eq!(exp.len(), self.nvars);
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `factor` times `other` into `self`.
    pub fn add_scaled(&mut self, other: &MonomialPoly, factor: &BigInt) {
        assert_eq!(self.nvars, other.nvars, "variable counts must agree");
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c * factor);
        }
    }

    /// Sparse product of two polynomials in the same variables.
    pub fn mul(&self, other: &MonomialPoly) -> MonomialPoly {
        assert_eq!(self.nvars, other.nvars, "variable counts must agree");
        let mut out = MonomialPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exp, c1 * c2);
            }
        }
        out
    }

    /// Largest stored exponent vector in lexicographic order.
    fn lex_greatest(&self) -> Option<(&Vec<i64>, &BigInt)> {
        self.terms.last_key_value()
    }

    /// JSON form `{"nvars":N,"terms":[{"exp":[...],"coef":"<decimal>"}]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| json!({"exp": e, "coef": c.to_string()}))
            .collect();
        json!({"nvars": self.nvars, "terms": terms})
    }
}

/// An integer combination of Schur functions, keyed by trimmed partitions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    /// The empty (zero) expansion.
    pub fn new() -> Self {
        SchurExpansion::default()
    }

    /// Builds an expansion from coefficient pairs, dropping zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Partition, BigInt)>) -> Self {
        let mut out = SchurExpansion::new();
        for (p, c) in pairs {
            out.add(p, c);
        }
        out
    }

    /// Adds `coef` to the multiplicity of `s_ν`, dropping cancelled entries.
    pub fn add(&mut self, nu: Partition, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        let key = nu.trim();
        let entry = self.terms.entry(key).or_default();
        *entry += coef;
        if entry.is_zero() {
            // Re-borrow to remove the cancelled key.
            let key = nu.trim();
            self.terms.remove(&key);
        }
    }

    /// Multiplicity of `s_ν` (zero when absent); trailing zeros ignored.
    pub fn get(&self, nu: &Partition) -> BigInt {
        self.terms.get(&nu.trim()).cloned().unwrap_or_default()
    }

    /// Entries in reverse-lexicographic partition order (largest first).
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter().rev()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True when the expansion is zero.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// JSON object keyed by bracketed partitions in reverse-lexicographic
    /// order, coefficients as decimal strings, e.g. `{"(4)":"1","(2,2)":"1"}`.
    pub fn to_json(&self) -> Value {
        let mut map = serde_json::Map::new();
        for (nu, c) in self.iter() {
            map.insert(nu.bracketed(), Value::String(c.to_string()));
        }
        Value::Object(map)
    }
}

/// The Schur polynomial `s_μ(x_1..x_N)`: one monomial `x^{ρ(T)}` per tableau.
pub fn schur_poly(mu: &Partition, nvars: usize) -> MonomialPoly {
    let mut p = MonomialPoly::zero(nvars);
    for_each_ssyt_weight(mu, nvars, |w| p.add_term(w.to_vec(), BigInt::one()));
    p
}

/// Complete homogeneous sums over the tableau-monomial alphabet with a memo
/// on (remaining degree, first usable tableau index).
struct HAlphabet {
    weights: Vec<Vec<i64>>,
    nvars: usize,
    memo: HashMap<(i64, usize), Rc<MonomialPoly>>,
}

impl HAlphabet {
    fn new(mu: &Partition, nvars: usize) -> Self {
        let weights = weight_matrix(mu, nvars)
            .rows()
            .iter()
            .map(|r| r.entries().to_vec())
            .collect();
        HAlphabet {
            weights,
            nvars,
            memo: HashMap::new(),
        }
    }

    /// Sum over multisets of `degree` tableaux drawn from index `from` on.
    fn h(&mut self, degree: i64, from: usize) -> Rc<MonomialPoly> {
        if let Some(p) = self.memo.get(&(degree, from)) {
            return Rc::clone(p);
        }
        let result = if from == self.weights.len() {
            if degree == 0 {
                MonomialPoly::one(self.nvars)
            } else {
                MonomialPoly::zero(self.nvars)
            }
        } else {
            let mut acc = MonomialPoly::zero(self.nvars);
            for m in 0..=degree {
                let rest = self.h(degree - m, from + 1);
                if rest.is_zero() {
                    continue;
                }
                let step: Vec<i64> = self.weights[from].iter().map(|&w| w * m).collect();
                for (e, c) in &rest.terms {
                    let exp: Vec<i64> = e.iter().zip(&step).map(|(a, b)| a + b).collect();
                    acc.add_term(exp, c.clone());
                }
            }
            acc
        };
        let rc = Rc::new(result);
        self.memo.insert((degree, from), Rc::clone(&rc));
        rc
    }
}

/// The monomial expansion of `h_λ[s_μ]` in `nvars` variables, computed as the
/// product over parts `λ_i` of complete homogeneous sums of the tableau
/// monomials of `t(μ, nvars)`. Entries of `λ` must be non-negative.
pub fn h_plethysm_poly(lambda: &IntSeq, mu: &Partition, nvars: usize) -> Result<MonomialPoly> {
    if let Some(&bad) = lambda.entries().iter().find(|&&e| e < 0) {
        return Err(Error::NegativePart { part: bad });
    }
    let mut alphabet = HAlphabet::new(mu, nvars);
    let mut acc = MonomialPoly::one(nvars);
    for &part in lambda.entries() {
        if part == 0 {
            continue;
        }
        let factor = alphabet.h(part, 0);
        acc = acc.mul(&factor);
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// The monomial expansion of `s_λ[s_μ]` in `nvars` variables: a sum over
/// tableaux of shape `λ` filled from the alphabet of tableau monomials of
/// `t(μ, nvars)`.
pub fn s_plethysm_poly(lambda: &Partition, mu: &Partition, nvars: usize) -> MonomialPoly {
    let inner: Vec<Vec<i64>> = weight_matrix(mu, nvars)
        .rows()
        .iter()
        .map(|r| r.entries().to_vec())
        .collect();
    let k = inner.len();
    let mut p = MonomialPoly::zero(nvars);
    for_each_ssyt_weight(lambda, k, |mult| {
        let mut exp = vec![0i64; nvars];
        for (j, &m) in mult.iter().enumerate() {
            if m == 0 {
                continue;
            }
            for (x, w) in exp.iter_mut().zip(&inner[j]) {
                *x += m * w;
            }
        }
        p.add_term(exp, BigInt::one());
    });
    p
}

/// The coefficient of `x^ν` in `p`; zero for absent terms, negative entries,
/// or nonzero entries beyond the variable count.
pub fn coeff(p: &MonomialPoly, nu: &IntSeq) -> BigInt {
    let mut exp = vec![0i64; p.nvars];
    for (i, &e) in nu.entries().iter().enumerate() {
        if e < 0 {
            return BigInt::zero();
        }
        if i >= p.nvars {
            if e != 0 {
                return BigInt::zero();
            }
            continue;
        }
        exp[i] = e;
    }
    p.terms.get(&exp).cloned().unwrap_or_default()
}

/// Expands a symmetric polynomial as an integer combination of Schur
/// polynomials by repeatedly subtracting the Schur polynomial of the
/// lexicographically greatest exponent.
pub fn schur_decompose(p: &MonomialPoly) -> Result<SchurExpansion> {
    let mut rem = p.clone();
    let mut out = SchurExpansion::new();
    while let Some((exp, c)) = rem.lex_greatest() {
        let exp = exp.clone();
        let c = c.clone();
        let nu = match Partition::new(exp.clone()) {
            Ok(nu) => nu,
            Err(_) => {
                return Err(Error::NotSymmetric {
                    reason: format!("leading exponent {exp:?} is not a partition"),
                })
            }
        };
        let schur = schur_poly(&nu, p.nvars);
        rem.add_scaled(&schur, &(-c.clone()));
        if let Some((next, _)) = rem.lex_greatest() {
            if *next >= exp {
                return Err(Error::NotSymmetric {
                    reason: "subtraction did not lower the leading exponent".into(),
                });
            }
        }
        out.add(nu, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn part(parts: &[i64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn seq(entries: &[i64]) -> IntSeq {
        IntSeq::new(entries.to_vec())
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn schur_poly_of_a_row_is_the_tableau_sum() {
        let p = schur_poly(&part(&[2]), 3);
        assert_eq!(p.num_terms(), 6);
        assert_eq!(p.coefficient_mass(), big(6));
        assert_eq!(coeff(&p, &seq(&[1, 1, 0])), big(1));
        assert_eq!(coeff(&p, &seq(&[2, 0, 0])), big(1));
    }

    #[test]
    fn schur_poly_edge_cases() {
        let p = schur_poly(&part(&[1]), 2);
        assert_eq!(coeff(&p, &seq(&[1, 0])), big(1));
        assert_eq!(coeff(&p, &seq(&[0, 1])), big(1));
        assert_eq!(p.num_terms(), 2);
        assert!(schur_poly(&part(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn h_plethysm_of_a_single_box_is_the_schur_polynomial() {
        let lhs = h_plethysm_poly(&seq(&[1]), &part(&[2, 1]), 3).unwrap();
        assert_eq!(lhs, schur_poly(&part(&[2, 1]), 3));
    }

    #[test]
    fn h_plethysm_worked_coefficients() {
        let p = h_plethysm_poly(&seq(&[2]), &part(&[2]), 2).unwrap();
        assert_eq!(coeff(&p, &seq(&[2, 2])), big(2));

        let p = h_plethysm_poly(&seq(&[1]), &part(&[2, 1]), 3).unwrap();
        assert_eq!(coeff(&p, &seq(&[1, 1, 1])), big(2));

        let p = h_plethysm_poly(&seq(&[3]), &part(&[3, 1]), 3).unwrap();
        assert_eq!(coeff(&p, &seq(&[4, 4, 4])), big(38));
    }

    #[test]
    fn h_plethysm_of_degree_zero_is_one() {
        let p = h_plethysm_poly(&seq(&[0]), &part(&[2, 1]), 3).unwrap();
        assert_eq!(p, MonomialPoly::one(3));
        let p = h_plethysm_poly(&seq(&[]), &part(&[2]), 2).unwrap();
        assert_eq!(p, MonomialPoly::one(2));
    }

    #[test]
    fn h_plethysm_rejects_negative_parts() {
        let err = h_plethysm_poly(&seq(&[2, -1]), &part(&[1]), 2).unwrap_err();
        assert!(err
            .to_string()
            .contains("use zero-extension semantics at caller"));
    }

    #[test]
    fn h_plethysm_is_homogeneous_and_symmetric() {
        let lambda = seq(&[2, 1]);
        let mu = part(&[2]);
        let p = h_plethysm_poly(&lambda, &mu, 3).unwrap();
        let degree: i128 = lambda.sum() * mu.weight();
        for (e, c) in p.terms() {
            assert_eq!(e.iter().map(|&x| x as i128).sum::<i128>(), degree);
            let mut sorted = e.to_vec();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(coeff(&p, &IntSeq::new(sorted)), c.clone());
        }
    }

    #[test]
    fn s_plethysm_worked_coefficients() {
        let p = s_plethysm_poly(&part(&[2]), &part(&[1, 1]), 4);
        assert_eq!(coeff(&p, &seq(&[1, 1, 1, 1])), big(3));

        let p = s_plethysm_poly(&part(&[1, 1]), &part(&[2]), 3);
        assert_eq!(coeff(&p, &seq(&[3, 1, 0])), big(1));

        let p = s_plethysm_poly(&part(&[1]), &part(&[2, 1]), 3);
        assert_eq!(p, schur_poly(&part(&[2, 1]), 3));
    }

    #[test]
    fn s_plethysm_mass_counts_outer_tableaux() {
        // t((2),3) has 6 tableaux, so the outer shape (2) draws from 6 letters.
        let p = s_plethysm_poly(&part(&[2]), &part(&[2]), 3);
        assert_eq!(p.coefficient_mass(), big(21)); // |t((2),6)| = C(7,2)
    }

    #[test]
    fn schur_decompose_recovers_schur_input() {
        let p = schur_poly(&part(&[3, 1]), 4);
        let e = schur_decompose(&p).unwrap();
        assert_eq!(e, SchurExpansion::from_pairs([(part(&[3, 1]), big(1))]));
    }

    #[test]
    fn schur_decompose_classical_plethysms() {
        let e = schur_decompose(&s_plethysm_poly(&part(&[2]), &part(&[2]), 4)).unwrap();
        assert_eq!(
            e,
            SchurExpansion::from_pairs([(part(&[4]), big(1)), (part(&[2, 2]), big(1))])
        );

        let e = schur_decompose(&s_plethysm_poly(&part(&[1, 1]), &part(&[2]), 4)).unwrap();
        assert_eq!(e, SchurExpansion::from_pairs([(part(&[3, 1]), big(1))]));

        let e = schur_decompose(&s_plethysm_poly(&part(&[2]), &part(&[1, 1]), 4)).unwrap();
        assert_eq!(
            e,
            SchurExpansion::from_pairs([
                (part(&[2, 2]), big(1)),
                (part(&[1, 1, 1, 1]), big(1))
            ])
        );
    }

    #[test]
    fn schur_decompose_zero_and_roundtrip() {
        assert!(schur_decompose(&MonomialPoly::zero(3)).unwrap().is_empty());

        let mut p = MonomialPoly::zero(3);
        p.add_scaled(&schur_poly(&part(&[2, 1]), 3), &big(2));
        p.add_scaled(&schur_poly(&part(&[1, 1, 1]), 3), &big(5));
        let e = schur_decompose(&p).unwrap();
        assert_eq!(
            e,
            SchurExpansion::from_pairs([
                (part(&[2, 1]), big(2)),
                (part(&[1, 1, 1]), big(5))
            ])
        );
    }

    #[test]
    fn schur_decompose_rejects_asymmetric_input() {
        let mut p = MonomialPoly::zero(2);
        p.add_term(vec![1, 0], big(1));
        let err = schur_decompose(&p).unwrap_err();
        assert!(err.to_string().contains("not a symmetric polynomial"));
    }

    #[test]
    fn coeff_handles_padding_and_negatives() {
        let p = schur_poly(&part(&[2]), 3);
        assert_eq!(coeff(&p, &seq(&[2])), big(1));
        assert_eq!(coeff(&p, &seq(&[2, 0, 0, 0, 0])), big(1));
        assert_eq!(coeff(&p, &seq(&[2, 0, 0, 1])), big(0));
        assert_eq!(coeff(&p, &seq(&[-1, 2, 1])), big(0));
    }

    #[test]
    fn json_forms_are_canonical() {
        let p = schur_poly(&part(&[1]), 2);
        assert_eq!(
            p.to_json().to_string(),
            r#"{"nvars":2,"terms":[{"exp":[0,1],"coef":"1"},{"exp":[1,0],"coef":"1"}]}"#
        );
        let e = SchurExpansion::from_pairs([(part(&[2, 2]), big(1)), (part(&[4]), big(1))]);
        assert_eq!(e.to_json().to_string(), r#"{"(4)":"1","(2,2)":"1"}"#);
    }

    #[test]
    fn expansion_lookup_ignores_trailing_zeros() {
        let e = SchurExpansion::from_pairs([(part(&[2, 2]), big(7))]);
        assert_eq!(e.get(&Partition::from_str("2,2,0").unwrap()), big(7));
        assert_eq!(e.get(&part(&[2, 1])), big(0));
    }
}

//! Property sweeps: systematic cross-checks over bounded shape ranges.
//!
//! Each sweep grinds through every instance in its range and returns a
//! [`PropertyResult`] listing the instances visited and any failures:
//!
//! - the counting engine against the polynomial oracle (`b` and `a` level)
//! - non-negativity and the unit inner shape identity
//! - plateau, vanishing, and monotonicity claims for the stability families
//! - structural invariants of offsets, weight enumeration, patterns, τ-maps
//!
//! Ranges follow the shipped verification gate: oracle sweeps are capped by
//! `max_product`, stability windows extend `n_pad` terms past each bound, and
//! the structural sweeps use fixed exhaustive ranges. `sample`/`seed` allow
//! deterministic subsampling for quick smoke runs; acceptance runs leave
//! `sample` unset and visit everything.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;
use rayon::prelude::*;

use crate::coeff::{a_coeff, schur_expand, PlethysmQuery};
use crate::lattice::count_points;
use crate::poly::{coeff, h_plethysm_poly, s_plethysm_poly, schur_decompose};
use crate::seq::{jt_offsets, partitions_of, Partition};
use crate::stability::{family_term, our_bound, run_report, Family, FamilySpec, Which};
use crate::tableau::{enumerate_ssyt, from_gt, tau_r1, tau_r2, tau_r2_preimage, to_gt, weight_matrix};

/// Knobs for the sweep ranges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    /// Cap on `|λ|·|μ|` for the oracle sweeps.
    pub max_product: i64,
    /// Terms checked past each stability bound (at least 3 are used).
    pub n_pad: i64,
    /// Keep roughly one in `s` instances when set; keep everything when not.
    pub sample: Option<u64>,
    /// Stream selector for the deterministic subsampling.
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_product: 8,
            n_pad: 4,
            sample: None,
            seed: 0,
        }
    }
}

/// Outcome of one property sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    /// Property identifier, stable across runs.
    pub name: String,
    /// Instances actually checked (after any sampling).
    pub instances: u64,
    /// One message per failing instance, in enumeration order.
    pub failures: Vec<String>,
}

impl PropertyResult {
    fn new(name: &str, instances: u64, failures: Vec<String>) -> Self {
        PropertyResult {
            name: name.to_string(),
            instances,
            failures,
        }
    }

    /// True when no instance failed.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// One-line summary, `PASS`/`FAIL` first.
    pub fn line(&self) -> String {
        if self.passed() {
            format!("PASS {} ({} instances)", self.name, self.instances)
        } else {
            format!(
                "FAIL {} ({} of {} instances; first: {})",
                self.name,
                self.failures.len(),
                self.instances,
                self.failures[0]
            )
        }
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic keep/skip decision for instance `index`.
fn keep(cfg: &SweepConfig, index: u64) -> bool {
    match cfg.sample {
        None | Some(0) | Some(1) => true,
        Some(s) => splitmix64(cfg.seed ^ index) % s == 0,
    }
}

fn sampled<T>(cfg: &SweepConfig, items: Vec<T>) -> Vec<T> {
    if cfg.sample.is_none() {
        return items;
    }
    items
        .into_iter()
        .enumerate()
        .filter(|(i, _)| keep(cfg, *i as u64))
        .map(|(_, item)| item)
        .collect()
}

fn gather<T: Sync>(
    items: &[T],
    check: impl Fn(&T) -> (u64, Vec<String>) + Send + Sync,
) -> (u64, Vec<String>) {
    let parts: Vec<(u64, Vec<String>)> = items.par_iter().map(check).collect();
    let mut instances = 0;
    let mut failures = Vec::new();
    for (n, f) in parts {
        instances += n;
        failures.extend(f);
    }
    (instances, failures)
}

/// `(λ, μ)` pairs with `1 ≤ |λ|·|μ| ≤ cap`; parts capped at `max_parts`
/// when given, unbounded otherwise.
fn shape_pairs(cap: i64, max_parts: Option<usize>) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for lw in 1..=cap {
        let llen = max_parts.unwrap_or(lw as usize);
        for lambda in partitions_of(lw, llen) {
            for mw in 1..=cap / lw {
                let mlen = max_parts.unwrap_or(mw as usize);
                for mu in partitions_of(mw, mlen) {
                    out.push((lambda.clone(), mu.clone()));
                }
            }
        }
    }
    out
}

/// Counting engine versus the polynomial oracle on the `b` level: every
/// monomial coefficient of `h_λ[s_μ]` in up to four variables, shapes up to
/// four parts, `|λ|·|μ| ≤ max_product`.
pub fn sweep_b_oracle(cfg: &SweepConfig) -> PropertyResult {
    let mut triples = Vec::new();
    for (lambda, mu) in shape_pairs(cfg.max_product, Some(4)) {
        for n in 1..=4usize {
            triples.push((lambda.clone(), mu.clone(), n));
        }
    }
    let triples = sampled(cfg, triples);
    let (instances, failures) = gather(&triples, |(lambda, mu, n)| {
        let n = *n;
        let poly = h_plethysm_poly(&lambda.as_seq(), mu, n).expect("partitions are non-negative");
        let degree = (lambda.weight() * mu.weight()) as i64;
        let mut checked = 0;
        let mut fails = Vec::new();
        for nu in partitions_of(degree, n) {
            let nvars = n.max(lambda.nonzero_len());
            let padded = nu.as_seq().pad(nvars).expect("padding never shrinks");
            let got = count_points(&lambda.as_seq(), mu, &padded, nvars);
            let want = coeff(&poly, &nu.as_seq());
            checked += 1;
            if got != want {
                fails.push(format!(
                    "b for lambda={} mu={} nu={} N={n}: counted {got}, oracle {want}",
                    lambda.bracketed(),
                    mu.bracketed(),
                    nu.bracketed()
                ));
            }
        }
        (checked, fails)
    });
    PropertyResult::new("b-oracle-equivalence", instances, failures)
}

/// Signed counting route versus decomposing the oracle polynomial on the `a`
/// level: full Schur expansions for every `|λ|·|μ| ≤ max_product`, all part
/// counts, in `|λ|·|μ|` variables.
pub fn sweep_a_oracle(cfg: &SweepConfig) -> PropertyResult {
    let pairs = sampled(cfg, shape_pairs(cfg.max_product, None));
    let (instances, failures) = gather(&pairs, |(lambda, mu)| {
        let d = (lambda.weight() * mu.weight()) as usize;
        let direct = schur_expand(lambda, mu);
        let poly = s_plethysm_poly(lambda, mu, d);
        let fails = match schur_decompose(&poly) {
            Ok(oracle) if oracle == direct => Vec::new(),
            Ok(oracle) => vec![format!(
                "expansion of lambda={} mu={}: counted {} terms, oracle {} terms, or coefficients differ",
                lambda.bracketed(),
                mu.bracketed(),
                direct.len(),
                oracle.len()
            )],
            Err(e) => vec![format!(
                "oracle decomposition failed for lambda={} mu={}: {e}",
                lambda.bracketed(),
                mu.bracketed()
            )],
        };
        (1, fails)
    });
    PropertyResult::new("a-oracle-equivalence", instances, failures)
}

/// `s_λ[s_(1)] = s_λ`: the expansion multiplicity is `1` exactly at `ν = λ`,
/// for all `|λ| ≤ 6` (and every candidate `ν` of the same weight). The
/// coefficient routine also asserts non-negativity on every call it serves
/// across all sweeps.
pub fn sweep_nonneg_identity(cfg: &SweepConfig) -> PropertyResult {
    let unit = Partition::new(vec![1]).expect("unit shape");
    let mut pairs = Vec::new();
    for w in 0..=6i64 {
        let len = (w as usize).max(1);
        for lambda in partitions_of(w, len) {
            for nu in partitions_of(w, len) {
                pairs.push((lambda.clone(), nu));
            }
        }
    }
    let pairs = sampled(cfg, pairs);
    let (instances, failures) = gather(&pairs, |(lambda, nu)| {
        let expected = if lambda == nu {
            BigInt::from(1)
        } else {
            BigInt::zero()
        };
        let got = a_coeff(&PlethysmQuery::new(lambda.clone(), unit.clone(), nu.clone()));
        let fails = if got == expected {
            Vec::new()
        } else {
            vec![format!(
                "a for lambda={} mu=(1) nu={}: got {got}, expected {expected}",
                lambda.bracketed(),
                nu.bracketed()
            )]
        };
        (1, fails)
    });
    PropertyResult::new("unit-inner-identity", instances, failures)
}

/// Every family instance with `|λ|, |μ| ≤ 3`, shapes up to three parts, and
/// for `R2` the directions `(1)`, `(2)`, `(1,1)`, `(2,1)`.
fn stability_specs(family: Family) -> Vec<FamilySpec> {
    let directions: &[&[i64]] = &[&[1], &[2], &[1, 1], &[2, 1]];
    let mut out = Vec::new();
    for lw in 1..=3i64 {
        for lambda in partitions_of(lw, 3) {
            for mw in 1..=3i64 {
                for mu in partitions_of(mw, 3) {
                    for nu in partitions_of(lw * mw, 3) {
                        if family == Family::R2 {
                            for pi in directions {
                                let pi = Partition::new(pi.to_vec()).expect("fixed direction");
                                out.push(
                                    FamilySpec::new(
                                        family,
                                        lambda.clone(),
                                        mu.clone(),
                                        nu.clone(),
                                        Some(pi),
                                    )
                                    .expect("weights match by construction"),
                                );
                            }
                        } else {
                            out.push(
                                FamilySpec::new(family, lambda.clone(), mu.clone(), nu.clone(), None)
                                    .expect("weights match by construction"),
                            );
                        }
                    }
                }
            }
        }
    }
    out
}

fn window_end(spec: &FamilySpec, cfg: &SweepConfig) -> i64 {
    let start = our_bound(spec).ceil().to_integer().max(0);
    i64::try_from(start).expect("bound fits in i64") + cfg.n_pad.max(3)
}

fn describe(spec: &FamilySpec) -> String {
    let pi = match spec.pi() {
        Some(p) => format!(" pi={}", p.bracketed()),
        None => String::new(),
    };
    format!(
        "{} lambda={} mu={} nu={}{pi}",
        spec.family(),
        spec.lambda().bracketed(),
        spec.mu().bracketed(),
        spec.nu().bracketed()
    )
}

/// Plateau claim for all four families: the `b`-sequence is constant from
/// `max(⌈our_bound⌉, 0)` through the end of the window.
pub fn sweep_stability(cfg: &SweepConfig) -> PropertyResult {
    let mut specs = Vec::new();
    for family in [Family::P1, Family::Q1, Family::R1, Family::R2] {
        specs.extend(stability_specs(family));
    }
    let specs = sampled(cfg, specs);
    let (instances, failures) = gather(&specs, |spec| {
        let fails = match run_report(spec, window_end(spec, cfg), Which::B) {
            Ok(report) => {
                let start = report.window_start() as usize;
                let tail = &report.values[start..];
                if tail.windows(2).all(|w| w[0] == w[1]) {
                    Vec::new()
                } else {
                    vec![format!(
                        "{}: values {:?} not constant from index {start}",
                        describe(spec),
                        report.values
                    )]
                }
            }
            Err(e) => vec![format!("{}: {e}", describe(spec))],
        };
        (1, fails)
    });
    PropertyResult::new("stability-plateaus", instances, failures)
}

/// Vanishing claim: for `P1` with at least two inner rows, terms are exactly
/// zero for every `n` strictly past `(μ_1·|λ| − ν_1)/|μ̄|`.
pub fn sweep_p1_vanishing(cfg: &SweepConfig) -> PropertyResult {
    let specs: Vec<FamilySpec> = stability_specs(Family::P1)
        .into_iter()
        .filter(|s| s.mu().nonzero_len() > 1)
        .collect();
    let specs = sampled(cfg, specs);
    let (instances, failures) = gather(&specs, |spec| {
        let mu = spec.mu().trim();
        let threshold = Ratio::<i128>::new(
            mu.first() as i128 * spec.lambda().weight() - spec.nu().first() as i128,
            mu.rest_weight(),
        );
        let mut fails = Vec::new();
        for n in 0..=window_end(spec, cfg) {
            if Ratio::from_integer(n as i128) > threshold {
                let term = family_term(spec, n, Which::B);
                if !term.is_zero() {
                    fails.push(format!(
                        "{}: term at n={n} is {term}, expected 0 past {threshold}",
                        describe(spec)
                    ));
                }
            }
        }
        (1, fails)
    });
    PropertyResult::new("p1-vanishing", instances, failures)
}

/// Monotonicity claim: `Q1` Schur-multiplicity sequences never decrease over
/// the sweep window.
pub fn sweep_q1_monotonicity(cfg: &SweepConfig) -> PropertyResult {
    let specs = sampled(cfg, stability_specs(Family::Q1));
    let (instances, failures) = gather(&specs, |spec| {
        let end = window_end(spec, cfg);
        let values: Vec<BigInt> = (0..=end)
            .map(|n| family_term(spec, n, Which::A))
            .collect();
        let fails = match values.windows(2).position(|w| w[0] > w[1]) {
            None => Vec::new(),
            Some(i) => vec![format!(
                "{}: a-sequence decreases at n={}: {:?}",
                describe(spec),
                i,
                values
            )],
        };
        (1, fails)
    });
    PropertyResult::new("q1-monotonicity", instances, failures)
}

/// Signed-offset invariants, exhaustively for up to six rows: offsets sum to
/// zero (weight preservation), the shifted values are a permutation of
/// `1..=N`, and the minimum over all offsets of the first entry, of every
/// prefix sum, and of the sequence norm is exactly zero.
pub fn sweep_offset_properties(_cfg: &SweepConfig) -> PropertyResult {
    let mut instances = 0;
    let mut failures = Vec::new();
    for n in 0..=6usize {
        let offsets: Vec<_> = jt_offsets(n).collect();
        let mut min_first: Option<i64> = None;
        let mut min_prefix = vec![i64::MAX; n];
        let mut min_norm: Option<i128> = None;
        for so in &offsets {
            instances += 1;
            let entries = so.offset.entries();
            if so.offset.sum() != 0 {
                failures.push(format!("offset {:?} at N={n} has nonzero sum", entries));
            }
            let mut shifted: Vec<i64> = entries
                .iter()
                .enumerate()
                .map(|(j, &w)| w + j as i64 + 1)
                .collect();
            shifted.sort_unstable();
            if shifted != (1..=n as i64).collect::<Vec<_>>() {
                failures.push(format!(
                    "offset {:?} at N={n} is not a permutation shift",
                    entries
                ));
            }
            if n > 0 {
                min_first = Some(min_first.map_or(entries[0], |m| m.min(entries[0])));
            }
            let mut prefix = 0;
            for (j, &w) in entries.iter().enumerate() {
                prefix += w;
                min_prefix[j] = min_prefix[j].min(prefix);
            }
            let norm = so.offset.seq_norm();
            min_norm = Some(min_norm.map_or(norm, |m| m.min(norm)));
        }
        if n > 0 {
            if min_first != Some(0) {
                failures.push(format!("minimum first offset entry at N={n} is {min_first:?}"));
            }
            if min_prefix.iter().any(|&m| m != 0) {
                failures.push(format!("minimum prefix sums at N={n} are {min_prefix:?}"));
            }
            if min_norm != Some(0) {
                failures.push(format!("minimum offset norm at N={n} is {min_norm:?}"));
            }
        }
    }
    PropertyResult::new("offset-invariants", instances, failures)
}

/// Superstandard maximality for `|μ| ≤ 6`, alphabets up to 4: the first
/// enumerated weight is `μ` itself, it occurs exactly once, every weight is
/// prefix-dominated by `μ`, and every other weight has strictly smaller norm.
pub fn sweep_superstandard(_cfg: &SweepConfig) -> PropertyResult {
    let mut instances = 0;
    let mut failures = Vec::new();
    for n in 1..=4usize {
        for w in 1..=6i64 {
            for mu in partitions_of(w, n) {
                let target = mu.as_seq().pad(n).expect("padding never shrinks");
                let target_norm = target.seq_norm();
                let rows = weight_matrix(&mu, n);
                if rows.is_empty() {
                    continue;
                }
                if rows.rows()[0] != target {
                    failures.push(format!(
                        "first weight of shape {} alphabet {n} is {}, expected {}",
                        mu.bracketed(),
                        rows.rows()[0],
                        target
                    ));
                }
                let mut target_count = 0;
                for rho in rows.rows() {
                    instances += 1;
                    if *rho == target {
                        target_count += 1;
                        continue;
                    }
                    let mut mu_prefix = 0i64;
                    let mut rho_prefix = 0i64;
                    for t in 0..n {
                        mu_prefix += mu.part_or_zero(t);
                        rho_prefix += rho.entry_or_zero(t);
                        if rho_prefix > mu_prefix {
                            failures.push(format!(
                                "weight {} of shape {} alphabet {n} escapes the prefix bound at {t}",
                                rho,
                                mu.bracketed()
                            ));
                            break;
                        }
                    }
                    if rho.seq_norm() > target_norm - 1 {
                        failures.push(format!(
                            "weight {} of shape {} alphabet {n} has norm {} >= top norm {}",
                            rho,
                            mu.bracketed(),
                            rho.seq_norm(),
                            target_norm
                        ));
                    }
                }
                if target_count != 1 {
                    failures.push(format!(
                        "shape {} alphabet {n}: top weight occurs {target_count} times",
                        mu.bracketed()
                    ));
                }
            }
        }
    }
    PropertyResult::new("superstandard-maximality", instances, failures)
}

/// Pattern bijection roundtrip for all tableaux with `|shape| ≤ 6`,
/// alphabets up to 4.
pub fn sweep_gt_roundtrip(_cfg: &SweepConfig) -> PropertyResult {
    let mut instances = 0;
    let mut failures = Vec::new();
    for n in 1..=4usize {
        for w in 1..=6i64 {
            for shape in partitions_of(w, n) {
                for t in enumerate_ssyt(&shape, n) {
                    instances += 1;
                    let pattern = to_gt(&t);
                    if let Err(e) = pattern.validate() {
                        failures.push(format!(
                            "pattern of {:?} (alphabet {n}) is invalid: {e}",
                            t.rows()
                        ));
                        continue;
                    }
                    match from_gt(&pattern) {
                        Ok(back) if back == t => {}
                        Ok(back) => failures.push(format!(
                            "roundtrip of {:?} (alphabet {n}) gave {:?}",
                            t.rows(),
                            back.rows()
                        )),
                        Err(e) => failures.push(format!(
                            "roundtrip of {:?} (alphabet {n}) failed: {e}",
                            t.rows()
                        )),
                    }
                }
            }
        }
    }
    PropertyResult::new("gt-roundtrip", instances, failures)
}

/// Row-insertion maps for `|μ| ≤ 6`, alphabets up to 4: τ adds the promised
/// letters to the weight, lands in the grown shape, is injective, and the
/// pattern-shift preimage inverts it.
pub fn sweep_tau_maps(_cfg: &SweepConfig) -> PropertyResult {
    let directions: &[&[i64]] = &[&[1], &[1, 1], &[2, 1]];
    let mut instances = 0;
    let mut failures = Vec::new();
    for n in 1..=4usize {
        for w in 1..=6i64 {
            for mu in partitions_of(w, n) {
                let tableaux = enumerate_ssyt(&mu, n);

                let mut images = std::collections::BTreeSet::new();
                for t in &tableaux {
                    instances += 1;
                    let image = tau_r1(t);
                    let mut want = t.weight().entries().to_vec();
                    want[0] += 1;
                    if image.weight().entries() != want {
                        failures.push(format!(
                            "first-row insertion on {:?} shifted weight to {}",
                            t.rows(),
                            image.weight()
                        ));
                    }
                    if image.shape().first() != mu.first() + 1 {
                        failures.push(format!(
                            "first-row insertion on {:?} gave shape {}",
                            t.rows(),
                            image.shape().bracketed()
                        ));
                    }
                    images.insert(image);
                }
                if images.len() != tableaux.len() {
                    failures.push(format!(
                        "first-row insertion is not injective on shape {} alphabet {n}",
                        mu.bracketed()
                    ));
                }

                for pi_parts in directions {
                    let pi = Partition::new(pi_parts.to_vec()).expect("fixed direction");
                    if pi.nonzero_len() > mu.nonzero_len() {
                        continue;
                    }
                    for t in &tableaux {
                        instances += 1;
                        let image = match tau_r2(t, &pi) {
                            Ok(image) => image,
                            Err(e) => {
                                failures.push(format!(
                                    "insertion along {} on {:?} failed: {e}",
                                    pi.bracketed(),
                                    t.rows()
                                ));
                                continue;
                            }
                        };
                        let mut want = t.weight().entries().to_vec();
                        for (i, &p) in pi.parts().iter().enumerate() {
                            want[i] += p;
                        }
                        if image.weight().entries() != want {
                            failures.push(format!(
                                "insertion along {} on {:?} shifted weight to {}",
                                pi.bracketed(),
                                t.rows(),
                                image.weight()
                            ));
                        }
                        match tau_r2_preimage(&image, &pi) {
                            Some(back) if back == *t => {}
                            other => failures.push(format!(
                                "insertion along {} on {:?} does not invert: {other:?}",
                                pi.bracketed(),
                                t.rows()
                            )),
                        }
                    }
                }
            }
        }
    }
    PropertyResult::new("tau-maps", instances, failures)
}

/// Runs every sweep in a fixed order.
pub fn run_all(cfg: &SweepConfig) -> Vec<PropertyResult> {
    vec![
        sweep_b_oracle(cfg),
        sweep_a_oracle(cfg),
        sweep_nonneg_identity(cfg),
        sweep_stability(cfg),
        sweep_p1_vanishing(cfg),
        sweep_q1_monotonicity(cfg),
        sweep_offset_properties(cfg),
        sweep_superstandard(cfg),
        sweep_gt_roundtrip(cfg),
        sweep_tau_maps(cfg),
    ]
}

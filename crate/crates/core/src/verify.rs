//! Sweep that checks the exact invariants of `G_n^r` against the closed
//! forms, the involution split of the Laplacian spectrum, and the spectral
//! estimates, for many deletion sets.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::closed_form;
use crate::error::Result;
use crate::exact::{self, InvariantReport};
use crate::graph::{cycle, prism_family, Graph, PrismSpec};
use crate::render;
use crate::spectral::{self, DenseMatrix};

/// Entry-wise tolerance for eigenvalue multiset comparisons.
pub const SPECTRUM_TOL: f64 = 1e-8;
/// Relative tolerance between spectral and exact values.
pub const SPECTRAL_REL_TOL: f64 = 1e-6;
/// Random deletion sets drawn per `(n, r)` above the exhaustive range.
pub const RANDOM_SUBSETS_PER_R: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub exhaustive_d_max: usize,
    pub seed: u64,
    pub threads: Option<usize>,
    /// Test hook: perturbs the quadratic coefficient of the Kf formula so
    /// the sweep must report mismatches.
    pub sabotage: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 20,
            exhaustive_d_max: 8,
            seed: 0,
            threads: None,
            sabotage: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mismatch {
    pub n: usize,
    pub deleted: Vec<usize>,
    pub invariant: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifySummary {
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifySummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Deletion sets swept for one `n`: every subset when `n <= exhaustive_d_max`,
/// otherwise [`RANDOM_SUBSETS_PER_R`] seeded draws for each `r`.
pub fn deletion_sets(n: usize, exhaustive_d_max: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    if n <= exhaustive_d_max {
        return (0u64..1 << n)
            .map(|mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
            .collect();
    }
    let mut out = Vec::new();
    for r in 0..=n {
        for _ in 0..RANDOM_SUBSETS_PER_R {
            let mut d: Vec<usize> = sample(rng, n, r).into_iter().map(|i| i + 1).collect();
            d.sort_unstable();
            out.push(d);
        }
    }
    out
}

/// `r` distinct 1-based vertical-edge labels out of `1..=n`.
pub fn random_deletion(n: usize, r: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut d: Vec<usize> = sample(&mut rng, n, r).into_iter().map(|i| i + 1).collect();
    d.sort_unstable();
    d
}

fn relative_gap(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

fn max_entry_gap(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Outcome of the block-split checks on one family member.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitCheck {
    /// `L_A == 2 L(C_n)` exactly.
    pub block_a_is_twice_cycle: bool,
    /// `L_S` diagonal, entries in {4, 6}, with exactly `r` fours.
    pub block_s_diagonal_ok: bool,
    /// Diagonal of `L_12` equals `4 - d_i`.
    pub cross_diagonal_ok: bool,
    /// Max gap between the sorted full spectrum and the sorted union of
    /// the block spectra.
    pub split_gap: f64,
    /// Max gap between the full spectrum and `{0} ∪ {2α_i} ∪ {s_i}`.
    pub predicted_gap: f64,
    /// Same as `split_gap` for the normalized Laplacian, when `r = 0`.
    pub normalized_gap: Option<f64>,
}

impl SplitCheck {
    pub fn passes(&self) -> bool {
        self.block_a_is_twice_cycle
            && self.block_s_diagonal_ok
            && self.cross_diagonal_ok
            && self.split_gap <= SPECTRUM_TOL
            && self.predicted_gap <= SPECTRUM_TOL
            && self.normalized_gap.is_none_or(|g| g <= SPECTRUM_TOL)
    }
}

pub fn split_check(spec: &PrismSpec) -> Result<SplitCheck> {
    let g = prism_family(spec);
    let n = spec.n();
    let sigma = spec.involution();
    let split = spectral::involution_split(&g, &sigma)?;

    let twice_cycle = spectral::laplacian(&cycle(n)?).scaled(2);
    let s_diag = split.block_s.diagonal();
    let s_is_diagonal = split.block_s == DenseMatrix::from_fn(n, |i, j| if i == j { s_diag[i] } else { 0 });
    let fours = s_diag.iter().filter(|&&s| s == 4).count();
    let s_values_ok = s_diag.iter().all(|&s| s == 4 || s == 6) && fours == spec.r();
    let deg = g.degrees();
    let cross_ok = split
        .block_12
        .diagonal()
        .iter()
        .zip(&split.half)
        .all(|(&t, &v)| t == 4 - deg[v] as i64);

    let full = spectral::eigenvalues_sym(&spectral::laplacian(&g).to_f64())?;
    let split_gap = max_entry_gap(&full, &split.combined_eigenvalues());

    let alpha = spectral::cycle_spectrum(n)?;
    let mut predicted: Vec<f64> = vec![0.0];
    predicted.extend(alpha[..n - 1].iter().map(|a| 2.0 * a));
    predicted.extend(s_diag.iter().map(|&s| s as f64));
    predicted.sort_by(f64::total_cmp);
    let predicted_gap = max_entry_gap(&full, &predicted);

    let normalized_gap = if spec.r() == 0 {
        let nsplit = spectral::involution_split_normalized(&g, &sigma)?;
        let nfull = spectral::eigenvalues_sym(&spectral::normalized_laplacian_f(&g)?)?;
        Some(max_entry_gap(&nfull, &nsplit.combined_eigenvalues()))
    } else {
        None
    };

    Ok(SplitCheck {
        block_a_is_twice_cycle: split.block_a == twice_cycle,
        block_s_diagonal_ok: s_is_diagonal && s_values_ok,
        cross_diagonal_ok: cross_ok,
        split_gap,
        predicted_gap,
        normalized_gap,
    })
}

/// Relative gaps between the spectral estimates and the exact values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralAgreement {
    pub kf: f64,
    pub kf_star: f64,
    pub tree_count: f64,
}

impl SpectralAgreement {
    pub fn passes(&self) -> bool {
        self.kf <= SPECTRAL_REL_TOL
            && self.kf_star <= SPECTRAL_REL_TOL
            && self.tree_count <= SPECTRAL_REL_TOL
    }
}

pub fn spectral_agreement(g: &Graph, exact: &InvariantReport) -> Result<SpectralAgreement> {
    let s = spectral::spectral_report(g)?;
    let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
    Ok(SpectralAgreement {
        kf: relative_gap(s.kf, f(&exact.kf.value)),
        kf_star: relative_gap(s.kf_star, f(&exact.kf_star.value)),
        tree_count: s.tree_count.relative_error(&exact.tree_count.value),
    })
}

#[derive(Debug, Clone)]
struct CaseOutcome {
    n: usize,
    r: usize,
    passed: usize,
    mismatches: Vec<Mismatch>,
    kf: BigRational,
    tau: BigInt,
    wiener: BigInt,
}

fn sabotaged_kf(n: usize, r: usize) -> BigRational {
    let n = BigInt::from(n);
    let num = &n * &n * &n + BigInt::from(5) * &n * &n + (BigInt::from(2 * r) - 1) * &n;
    BigRational::new(num, 12.into())
}

fn check_case(spec: &PrismSpec, sabotage: bool) -> Result<CaseOutcome> {
    let (n, r) = (spec.n(), spec.r());
    let deleted: Vec<usize> = spec.deleted().iter().copied().collect();
    let g = prism_family(spec);
    let report = exact::full_report(&g)?;

    let mut passed = 0;
    let mut mismatches = Vec::new();
    let mut record = |ok: bool, invariant: &str, expected: String, got: String| {
        if ok {
            passed += 1;
        } else {
            mismatches.push(Mismatch {
                n,
                deleted: deleted.clone(),
                invariant: invariant.to_string(),
                expected,
                got,
            });
        }
    };

    let kf_expected = if sabotage { sabotaged_kf(n, r) } else { closed_form::kf_grn(n, r)? };
    let kf = &report.kf.value;
    record(*kf == kf_expected, "kf", render::rational(&kf_expected), render::rational(kf));

    let tau_expected = closed_form::tau_grn(n, r)?;
    let tau = &report.tree_count.value;
    record(*tau == tau_expected, "tau", tau_expected.to_string(), tau.to_string());

    let w_expected = closed_form::wiener_grn(n, r)?;
    let w = &report.wiener.value;
    record(*w == w_expected, "wiener", w_expected.to_string(), w.to_string());

    if r == 0 {
        let ks_expected = closed_form::kf_star_gn(n)?;
        let ks = &report.kf_star.value;
        record(*ks == ks_expected, "kf_star", render::rational(&ks_expected), render::rational(ks));
        let gut_expected = closed_form::gutman_gn(n)?;
        let gut = &report.gutman.value;
        record(*gut == gut_expected, "gutman", gut_expected.to_string(), gut.to_string());
    }

    let split = split_check(spec)?;
    record(split.block_a_is_twice_cycle, "split.block_a", "2 L(C_n)".into(), "differs".into());
    record(split.block_s_diagonal_ok, "split.block_s", format!("diag with {r} fours"), "differs".into());
    record(split.cross_diagonal_ok, "split.cross_diagonal", "4 - d_i".into(), "differs".into());
    let tol = format!("<= {SPECTRUM_TOL:e}");
    record(split.split_gap <= SPECTRUM_TOL, "split.spectrum", tol.clone(), format!("{:e}", split.split_gap));
    record(split.predicted_gap <= SPECTRUM_TOL, "split.predicted", tol.clone(), format!("{:e}", split.predicted_gap));
    if let Some(gap) = split.normalized_gap {
        record(gap <= SPECTRUM_TOL, "split.normalized", tol, format!("{gap:e}"));
    }

    let agree = spectral_agreement(&g, &report)?;
    let rel = format!("<= {SPECTRAL_REL_TOL:e}");
    record(agree.kf <= SPECTRAL_REL_TOL, "spectral.kf", rel.clone(), format!("{:e}", agree.kf));
    record(agree.kf_star <= SPECTRAL_REL_TOL, "spectral.kf_star", rel.clone(), format!("{:e}", agree.kf_star));
    record(agree.tree_count <= SPECTRAL_REL_TOL, "spectral.tau", rel, format!("{:e}", agree.tree_count));

    Ok(CaseOutcome {
        n,
        r,
        passed,
        mismatches,
        kf: report.kf.value,
        tau: report.tree_count.value,
        wiener: report.wiener.value,
    })
}

/// All `(n, D)` cases of a sweep, in a fixed order.
pub fn sweep_cases(config: &VerifyConfig) -> Result<Vec<PrismSpec>> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut cases = Vec::new();
    for n in 3..=config.n_max {
        for d in deletion_sets(n, config.exhaustive_d_max, &mut rng) {
            cases.push(PrismSpec::new(n, d)?);
        }
    }
    Ok(cases)
}

/// Runs the full sweep. Cases run in parallel; the summary is independent
/// of scheduling.
pub fn run(config: &VerifyConfig) -> Result<VerifySummary> {
    let cases = sweep_cases(config)?;
    let work = || -> Result<Vec<CaseOutcome>> {
        cases
            .par_iter()
            .map(|spec| check_case(spec, config.sabotage))
            .collect()
    };
    let outcomes = match config.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| crate::Error::InvalidParameter(e.to_string()))?
            .install(work)?,
        None => work()?,
    };

    let mut summary = VerifySummary {
        cases: outcomes.len(),
        ..Default::default()
    };
    // Choice-independence: within each (n, r) every deletion set must give
    // the same Kf, τ and W.
    let mut first: BTreeMap<(usize, usize), (Vec<usize>, &CaseOutcome)> = BTreeMap::new();
    for (spec, outcome) in cases.iter().zip(&outcomes) {
        summary.passed += outcome.passed;
        summary.mismatches.extend(outcome.mismatches.iter().cloned());
        let deleted: Vec<usize> = spec.deleted().iter().copied().collect();
        match first.get(&(outcome.n, outcome.r)) {
            None => {
                first.insert((outcome.n, outcome.r), (deleted, outcome));
            }
            Some((base_d, base)) => {
                let same = base.kf == outcome.kf && base.tau == outcome.tau && base.wiener == outcome.wiener;
                if same {
                    summary.passed += 1;
                } else {
                    summary.mismatches.push(Mismatch {
                        n: outcome.n,
                        deleted,
                        invariant: "choice-independence".into(),
                        expected: format!("same as D = {base_d:?}"),
                        got: format!(
                            "kf {}, tau {}, wiener {}",
                            render::rational(&outcome.kf),
                            outcome.tau,
                            outcome.wiener
                        ),
                    });
                }
            }
        }
    }
    summary.mismatches.sort();
    summary.failed = summary.mismatches.len();
    Ok(summary)
}

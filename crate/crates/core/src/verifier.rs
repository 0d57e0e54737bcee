//! Checks each spectral claim about `And(k)` for a range of `k`.
//!
//! Every claim is evaluated on the closed-form spectrum and, when the graph
//! is small enough, cross-checked against the Jacobi oracle run on the
//! explicit adjacency matrix. A disagreement is a `fail` verdict, never a
//! panic or an early return, so one bad `k` does not hide the others.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::circulant::{adjacency_matrix, andrasfai, CirculantGraph};
use crate::closed_form::{spectrum_closed_form, Spectrum};
use crate::error::{Error, Result};
use crate::multiplicity::{pair_multiplicities_with, MultiplicityTable};
use crate::oracle::{cluster_distinct, compare_spectra, default_threshold, jacobi_eigenvalues, OracleResult};
use crate::prediction::{gcd_certificate, predict, SpectralPrediction};
use crate::spectrum_io::{round_sig, MACHINE_SIG_DIGITS};
use crate::{TOL_CLUSTER, TOL_SYM};

/// Default largest `n` handed to the oracle.
pub const DEFAULT_ORACLE_LIMIT: usize = 600;

/// Allowed gap between `Σ x_l²` and `n·k`, per vertex.
pub const FROBENIUS_TOL_PER_VERTEX: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimId {
    DistinctCount,
    SmallestLocation,
    SecondLargestLocation,
    MinusOne,
    PlusOne,
    Palindrome,
    GcdCertificate,
}

impl ClaimId {
    pub const ALL: [ClaimId; 7] = [
        Self::DistinctCount,
        Self::SmallestLocation,
        Self::SecondLargestLocation,
        Self::MinusOne,
        Self::PlusOne,
        Self::Palindrome,
        Self::GcdCertificate,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::DistinctCount => "distinct_count",
            Self::SmallestLocation => "smallest_location",
            Self::SecondLargestLocation => "second_largest_location",
            Self::MinusOne => "minus_one",
            Self::PlusOne => "plus_one",
            Self::Palindrome => "palindrome",
            Self::GcdCertificate => "gcd_certificate",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| Error::Parse(format!("unknown claim {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictStatus {
    Pass,
    Fail,
    /// The data contradicts a sentence of the source text that is known to be wrong.
    ErratumDetected,
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::ErratumDetected => "erratum_detected",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremVerdict {
    pub claim: ClaimId,
    pub k: usize,
    pub status: VerdictStatus,
    pub predicted: Value,
    pub observed: Value,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub tol_sym: f64,
    pub tol_cluster: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { tol_sym: TOL_SYM, tol_cluster: TOL_CLUSTER }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol_sym > 0.0 && self.tol_cluster > 0.0) {
            return Err(Error::InvalidParameter("tolerances must be positive".into()));
        }
        if self.tol_sym > self.tol_cluster {
            return Err(Error::InvalidParameter(format!(
                "tol_sym ({}) must not exceed tol_cluster ({})",
                self.tol_sym, self.tol_cluster
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepOptions {
    /// The oracle runs only when `3k - 1 <= oracle_limit`; 0 disables it.
    pub oracle_limit: usize,
    pub tolerances: Tolerances,
    /// Deliberately corrupts the prediction for one claim. Only useful for
    /// exercising the failure path of callers.
    pub falsify: Option<ClaimId>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self { oracle_limit: DEFAULT_ORACLE_LIMIT, tolerances: Tolerances::default(), falsify: None }
    }
}

struct OracleView {
    result: OracleResult,
    clusters: Vec<(f64, usize)>,
    max_abs_dev: f64,
}

/// Everything the claim checks share for one `k`: the graph, its prediction,
/// the closed-form spectrum with its pairing table and, when `n` is within the
/// oracle limit, the Jacobi result.
pub struct Analysis {
    k: usize,
    n: usize,
    graph: CirculantGraph,
    prediction: SpectralPrediction,
    spectrum: Spectrum,
    table: MultiplicityTable,
    oracle: Option<std::result::Result<OracleView, String>>,
    tol: Tolerances,
    falsify: Option<ClaimId>,
}

impl Analysis {
    pub fn new(k: usize, options: &SweepOptions) -> Result<Self> {
        let prediction = predict(k)?;
        let graph = andrasfai(k)?;
        let spectrum = spectrum_closed_form(k)?;
        let tol = options.tolerances;
        let table = pair_multiplicities_with(&spectrum, tol.tol_cluster);
        let n = graph.n();
        let oracle = (n <= options.oracle_limit).then(|| {
            let dense = adjacency_matrix(&graph).to_dense();
            jacobi_eigenvalues(&dense, default_threshold(n))
                .and_then(|result| {
                    let max_abs_dev = compare_spectra(&spectrum, &result)?.max_abs_dev;
                    let clusters = cluster_distinct(&result.sorted_values, tol.tol_cluster);
                    Ok(OracleView { result, clusters, max_abs_dev })
                })
                .map_err(|e| e.to_string())
        });
        Ok(Self { k, n, graph, prediction, spectrum, table, oracle, tol, falsify: options.falsify })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graph(&self) -> &CirculantGraph {
        &self.graph
    }

    pub fn prediction(&self) -> &SpectralPrediction {
        &self.prediction
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn table(&self) -> &MultiplicityTable {
        &self.table
    }

    /// `None` when the oracle was not run, `Some(Err(_))` when it failed.
    pub fn oracle(&self) -> Option<std::result::Result<&OracleResult, &str>> {
        self.oracle.as_ref().map(|o| o.as_ref().map(|v| &v.result).map_err(String::as_str))
    }

    /// Oracle eigenvalues clustered at `tol_cluster`, ascending.
    pub fn oracle_clusters(&self) -> Option<&[(f64, usize)]> {
        match &self.oracle {
            Some(Ok(view)) => Some(&view.clusters),
            _ => None,
        }
    }

    fn falsified(&self, claim: ClaimId) -> bool {
        self.falsify == Some(claim)
    }

    fn verdict(&self, claim: ClaimId, ok: bool, predicted: Value, observed: Value, detail: String) -> TheoremVerdict {
        TheoremVerdict {
            claim,
            k: self.k,
            status: if ok { VerdictStatus::Pass } else { VerdictStatus::Fail },
            predicted,
            observed,
            detail,
        }
    }

    fn x(&self, l: usize) -> f64 {
        self.spectrum.values[l]
    }

    /// Indices `l` with `|x_l - target| <= tol_cluster`.
    fn indices_near(&self, target: f64) -> Vec<usize> {
        (0..self.n).filter(|&l| (self.x(l) - target).abs() <= self.tol.tol_cluster).collect()
    }

    /// Multiplicity of `target` in the oracle spectrum, when the oracle ran.
    fn oracle_multiplicity_near(&self, target: f64) -> Option<std::result::Result<usize, String>> {
        self.oracle.as_ref().map(|o| {
            o.as_ref()
                .map(|view| {
                    view.clusters.iter().filter(|(v, _)| (v - target).abs() <= self.tol.tol_cluster).map(|c| c.1).sum()
                })
                .map_err(Clone::clone)
        })
    }

    fn distinct_count(&self) -> TheoremVerdict {
        let claim = ClaimId::DistinctCount;
        let mut predicted_count = self.prediction.distinct_count;
        if self.falsified(claim) {
            predicted_count += 1;
        }
        let structural = self.table.distinct_count();
        let coincidences = self.table.accidental_coincidences();
        let pattern_ok = andrasfai_pattern_holds(&self.table, self.n);

        let mut ok = structural == predicted_count && coincidences == 0 && pattern_ok;
        let mut detail = format!(
            "pairing gives {structural} classes, {coincidences} accidental coincidences, pattern {}",
            if pattern_ok { "ok" } else { "broken" }
        );
        let oracle_count = match &self.oracle {
            None => {
                detail.push_str("; oracle skipped");
                Value::Null
            }
            Some(Err(e)) => {
                ok = false;
                write!(detail, "; oracle failed: {e}").unwrap();
                Value::Null
            }
            Some(Ok(view)) => {
                let count = view.clusters.len();
                ok &= count == predicted_count;
                write!(detail, "; oracle clustering gives {count}").unwrap();
                json!(count)
            }
        };
        self.verdict(
            claim,
            ok,
            json!({
                "distinct_count": predicted_count,
                "singletons": if self.k % 2 == 1 { json!([0, self.n / 2]) } else { json!([0]) },
            }),
            json!({
                "structural_count": structural,
                "oracle_count": oracle_count,
                "accidental_coincidences": coincidences,
                "pattern_ok": pattern_ok,
            }),
            detail,
        )
    }

    fn smallest_location(&self) -> TheoremVerdict {
        let claim = ClaimId::SmallestLocation;
        let (mut a, mut b) = self.prediction.smallest_indices;
        if self.falsified(claim) {
            (a, b) = self.prediction.second_largest_indices;
        }
        let expected: Vec<usize> = BTreeSet::from([a, b]).into_iter().collect();
        let argmin = self.spectrum.argmin_set(self.tol.tol_cluster);
        let value = self.x(a);
        let mut ok = argmin == expected;
        let mut detail = format!("argmin {argmin:?}, expected {expected:?}");
        let oracle_min = match &self.oracle {
            None => {
                detail.push_str("; oracle skipped");
                Value::Null
            }
            Some(Err(e)) => {
                ok = false;
                write!(detail, "; oracle failed: {e}").unwrap();
                Value::Null
            }
            Some(Ok(view)) => {
                let min = view.result.sorted_values[0];
                let dev = (value - min).abs();
                ok &= dev < self.tol.tol_cluster;
                write!(detail, "; |x_{a} - oracle min| = {dev:.3e}").unwrap();
                json!(r(min))
            }
        };
        self.verdict(
            claim,
            ok,
            json!({ "indices": expected }),
            json!({ "argmin": argmin, "value": r(value), "oracle_min": oracle_min }),
            detail,
        )
    }

    fn second_largest_location(&self) -> TheoremVerdict {
        let claim = ClaimId::SecondLargestLocation;
        let (mut a, mut b) = self.prediction.second_largest_indices;
        if self.falsified(claim) {
            (a, b) = self.prediction.smallest_indices;
        }
        let expected: Vec<usize> = BTreeSet::from([a, b]).into_iter().collect();
        let argmax = self.spectrum.argmax_nontrivial_set(self.tol.tol_cluster);
        let value = self.x(a);
        let connected = self.graph.is_connected();
        let mut ok = argmax == expected && connected;
        let mut detail = format!(
            "argmax over l >= 1 {argmax:?}, expected {expected:?}, graph {}",
            if connected { "connected" } else { "disconnected" }
        );
        let (distinct, counted) = match &self.oracle {
            None => {
                detail.push_str("; oracle skipped");
                (Value::Null, Value::Null)
            }
            Some(Err(e)) => {
                ok = false;
                write!(detail, "; oracle failed: {e}").unwrap();
                (Value::Null, Value::Null)
            }
            Some(Ok(view)) => {
                let c = &view.clusters;
                // Largest value strictly below the top cluster, and λ_1 counted with multiplicity.
                let second_distinct = c.len().checked_sub(2).map(|i| c[i].0);
                let lambda_1 = view.result.sorted_values.iter().rev().nth(1).copied();
                match second_distinct {
                    Some(v) => {
                        let dev = (value - v).abs();
                        let top_simple = c.last().map(|t| t.1) == Some(1);
                        ok &= dev < self.tol.tol_cluster && top_simple;
                        write!(detail, "; |x_{a} - oracle second distinct| = {dev:.3e}").unwrap();
                        if !top_simple {
                            detail.push_str("; top eigenvalue is not simple");
                        }
                    }
                    None => {
                        ok = false;
                        detail.push_str("; oracle spectrum has a single distinct value");
                    }
                }
                (json!(second_distinct.map(r)), json!(lambda_1.map(r)))
            }
        };
        self.verdict(
            claim,
            ok,
            json!({ "indices": expected }),
            json!({
                "argmax_nontrivial": argmax,
                "value": r(value),
                "connected": connected,
                "oracle_second_distinct": distinct,
                "oracle_lambda_1": counted,
            }),
            detail,
        )
    }

    fn minus_one(&self) -> TheoremVerdict {
        let claim = ClaimId::MinusOne;
        let mut expected = self.prediction.minus_one_expected;
        if self.falsified(claim) {
            expected = !expected;
        }
        let indices = self.indices_near(-1.0);
        let present = !indices.is_empty();
        let mut ok = present == expected;
        let mut detail = format!("-1 at indices {indices:?}, expected {}", if expected { "present" } else { "absent" });

        let multiplicity = match self.oracle_multiplicity_near(-1.0) {
            None => Some(indices.len()),
            Some(Ok(m)) => Some(m),
            Some(Err(e)) => {
                ok = false;
                write!(detail, "; oracle failed: {e}").unwrap();
                None
            }
        };
        if present && expected {
            let witness = self.prediction.minus_one_witness;
            let at_witness = witness.map(|w| (self.x(w) + 1.0).abs() < self.tol.tol_sym);
            ok &= witness.map(|w| vec![w]) == Some(indices.clone()) && at_witness == Some(true);
            ok &= multiplicity == Some(1);
            if let Some(m) = multiplicity {
                write!(detail, "; multiplicity {m}").unwrap();
            }
        }
        self.verdict(
            claim,
            ok,
            json!({
                "present": expected,
                "index": if expected { json!(self.prediction.minus_one_witness) } else { Value::Null },
                "multiplicity": if expected { 1 } else { 0 },
            }),
            json!({ "present": present, "indices": indices, "multiplicity": multiplicity }),
            detail,
        )
    }

    fn plus_one(&self) -> TheoremVerdict {
        let claim = ClaimId::PlusOne;
        let mut expected = self.prediction.plus_one_expected;
        if self.falsified(claim) {
            expected = !expected;
        }
        let indices = self.indices_near(1.0);
        let present = !indices.is_empty();
        let mut detail = format!("+1 at indices {indices:?}, expected {}", if expected { "present" } else { "absent" });
        let mut oracle_failed = false;
        let multiplicity = match self.oracle_multiplicity_near(1.0) {
            None => Some(indices.len()),
            Some(Ok(m)) => Some(m),
            Some(Err(e)) => {
                oracle_failed = true;
                write!(detail, "; oracle failed: {e}").unwrap();
                None
            }
        };

        let status = if oracle_failed || present != expected {
            VerdictStatus::Fail
        } else if !present {
            VerdictStatus::Pass
        } else {
            let orbit = self.prediction.plus_one_indices().map(|(a, b)| vec![a, b]);
            let at_witness =
                self.prediction.plus_one_witness.is_some_and(|w| (self.x(w) - 1.0).abs() < self.tol.tol_sym);
            if orbit != Some(indices.clone()) || !at_witness {
                VerdictStatus::Fail
            } else {
                match multiplicity {
                    Some(1) => VerdictStatus::Pass,
                    Some(2) => {
                        detail.push_str(
                            "; observed multiplicity 2 on the orbit {n/4, 3n/4}, \
                             contradicting the stated multiplicity 1 (cf. And(3): x_2 = x_6 = 1)",
                        );
                        VerdictStatus::ErratumDetected
                    }
                    _ => VerdictStatus::Fail,
                }
            }
        };
        TheoremVerdict {
            claim,
            k: self.k,
            status,
            predicted: json!({
                "present": expected,
                "indices": if expected { json!(self.prediction.plus_one_indices()) } else { Value::Null },
                "stated_multiplicity": if expected { 1 } else { 0 },
                "structural_multiplicity": if expected { 2 } else { 0 },
            }),
            observed: json!({ "present": present, "indices": indices, "multiplicity": multiplicity }),
            detail,
        }
    }

    fn palindrome(&self) -> TheoremVerdict {
        let claim = ClaimId::Palindrome;
        let n = self.n;
        // The falsified variant pairs l with n - 1 - l instead of n - l.
        let shift = usize::from(self.falsified(claim));
        let defect = (1..n).map(|l| (self.x(l) - self.x((2 * n - l - shift) % n)).abs()).fold(0.0, f64::max);
        let x0_exact = self.x(0) == self.k as f64;
        let trace = self.spectrum.trace();
        let frob_gap = (self.spectrum.sum_of_squares() - (n * self.k) as f64).abs();
        let ok = defect < self.tol.tol_sym
            && x0_exact
            && trace.abs() < n as f64 * self.tol.tol_sym
            && frob_gap < n as f64 * FROBENIUS_TOL_PER_VERTEX;
        self.verdict(
            claim,
            ok,
            json!({ "max_defect_below": self.tol.tol_sym, "x0": self.k, "trace": 0.0, "sum_of_squares": n * self.k }),
            json!({ "max_defect": r(defect), "x0": self.x(0), "trace": r(trace), "sum_of_squares_gap": r(frob_gap) }),
            format!("max |x_l - x_(n-l)| = {defect:.3e}, x_0 exact: {x0_exact}, trace {trace:.3e}"),
        )
    }

    fn gcd(&self) -> TheoremVerdict {
        let claim = ClaimId::GcdCertificate;
        let mut expect_nontrivial = self.k % 2 == 1;
        if self.falsified(claim) {
            expect_nontrivial = !expect_nontrivial;
        }
        match gcd_certificate(self.k) {
            Ok(cert) => {
                let nontrivial = cert.g > 1;
                let ok = nontrivial == expect_nontrivial && cert.a_equation_holds != Some(false);
                self.verdict(
                    claim,
                    ok,
                    json!({ "g_gt_1": expect_nontrivial, "identity": "4 = g(3 s2 - s1)" }),
                    serde_json::to_value(cert).expect("certificate serializes"),
                    format!("gcd({}, {}) = {}", self.n, self.k + 1, cert.g),
                )
            }
            Err(e) => self.verdict(claim, false, Value::Null, Value::Null, e.to_string()),
        }
    }

    /// All seven verdicts, in [`ClaimId::ALL`] order.
    pub fn verdicts(&self) -> Vec<TheoremVerdict> {
        vec![
            self.distinct_count(),
            self.smallest_location(),
            self.second_largest_location(),
            self.minus_one(),
            self.plus_one(),
            self.palindrome(),
            self.gcd(),
        ]
    }

    /// Smallest gap between distinct closed-form eigenvalue classes.
    pub fn min_gap(&self) -> f64 {
        let mut values: Vec<f64> = self.table.classes.iter().map(|c| c.value).collect();
        values.sort_by(f64::total_cmp);
        values.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min)
    }
}

fn r(x: f64) -> f64 {
    round_sig(x, MACHINE_SIG_DIGITS)
}

/// `{0}` alone, `{n/2}` alone when `n` is even, every other class a pair `{l, n - l}`.
fn andrasfai_pattern_holds(table: &MultiplicityTable, n: usize) -> bool {
    table.classes.iter().all(|c| match c.members.as_slice() {
        [0] => true,
        [h] => 2 * h == n,
        [l, m] => l + m == n,
        _ => false,
    }) && table.classes.iter().filter(|c| c.multiplicity == 1).count() == 1 + usize::from(n.is_multiple_of(2))
}

fn options_with_oracle(use_oracle: bool) -> SweepOptions {
    SweepOptions { oracle_limit: if use_oracle { usize::MAX } else { 0 }, ..SweepOptions::default() }
}

/// Distinct-count claim for one `k`: pairing, optional oracle clustering, multiplicity pattern.
pub fn verify_distinct_count(k: usize, use_oracle: bool) -> Result<TheoremVerdict> {
    Ok(Analysis::new(k, &options_with_oracle(use_oracle))?.distinct_count())
}

/// `(smallest_location, second_largest_location)` for one `k`.
pub fn verify_extremes(k: usize, use_oracle: bool) -> Result<(TheoremVerdict, TheoremVerdict)> {
    let inst = Analysis::new(k, &options_with_oracle(use_oracle))?;
    Ok((inst.smallest_location(), inst.second_largest_location()))
}

/// `(minus_one, plus_one)` for one `k`.
pub fn verify_plus_minus_one(k: usize, use_oracle: bool) -> Result<(TheoremVerdict, TheoremVerdict)> {
    let inst = Analysis::new(k, &options_with_oracle(use_oracle))?;
    Ok((inst.minus_one(), inst.plus_one()))
}

/// All seven claims for one `k`, in [`ClaimId::ALL`] order.
pub fn verify_k(k: usize, options: &SweepOptions) -> Result<Vec<TheoremVerdict>> {
    Ok(Analysis::new(k, options)?.verdicts())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub k_range: (usize, usize),
    pub verdicts: Vec<TheoremVerdict>,
    /// Smallest gap between distinct closed-form eigenvalues over the sweep.
    pub min_gap: f64,
    /// Largest sorted closed-form vs oracle deviation over the sweep (0 when the oracle never ran).
    pub oracle_max_dev: f64,
    /// Set when `min_gap` does not clear `tol_cluster`.
    pub tolerance_review: bool,
    pub wall_time: f64,
}

impl SweepReport {
    pub fn count(&self, status: VerdictStatus) -> usize {
        self.verdicts.iter().filter(|v| v.status == status).count()
    }

    pub fn all_passed(&self) -> bool {
        self.count(VerdictStatus::Fail) == 0
    }

    /// 0 when nothing failed (errata included), 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn verdict(&self, k: usize, claim: ClaimId) -> Option<&TheoremVerdict> {
        self.verdicts.iter().find(|v| v.k == k && v.claim == claim)
    }

    pub fn to_json(&self) -> Result<String> {
        let mut doc = serde_json::to_value(self)?;
        doc["k_range"] = json!([self.k_range.0, self.k_range.1]);
        doc["min_gap"] = json!(r(self.min_gap));
        doc["oracle_max_dev"] = json!(r(self.oracle_max_dev));
        let mut out = serde_json::to_string_pretty(&doc)?;
        out.push('\n');
        Ok(out)
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("{:>5}  {:<24} {:<17} detail\n", "k", "claim", "status");
        for v in &self.verdicts {
            writeln!(out, "{:>5}  {:<24} {:<17} {}", v.k, v.claim.as_str(), v.status.to_string(), v.detail).unwrap();
        }
        writeln!(
            out,
            "\n{} verdicts: {} pass, {} erratum_detected, {} fail; min gap {:.3e}; oracle max dev {:.3e}",
            self.verdicts.len(),
            self.count(VerdictStatus::Pass),
            self.count(VerdictStatus::ErratumDetected),
            self.count(VerdictStatus::Fail),
            self.min_gap,
            self.oracle_max_dev
        )
        .unwrap();
        out
    }
}

pub fn run_sweep(k_min: usize, k_max: usize, oracle_limit: usize) -> Result<SweepReport> {
    run_sweep_with(k_min, k_max, &SweepOptions { oracle_limit, ..SweepOptions::default() })
}

/// Verifies every claim for `k_min..=k_max`. Verdicts are ordered by `k`, then claim.
pub fn run_sweep_with(k_min: usize, k_max: usize, options: &SweepOptions) -> Result<SweepReport> {
    if k_min < 2 {
        return Err(Error::InvalidParameter(format!("sweep requires k >= 2, got k_min = {k_min}")));
    }
    if k_min > k_max {
        return Err(Error::InvalidParameter(format!("empty range: k_min = {k_min} > k_max = {k_max}")));
    }
    options.tolerances.validate()?;
    let start = Instant::now();
    let analyses: Vec<Analysis> =
        (k_min..=k_max).into_par_iter().map(|k| Analysis::new(k, options)).collect::<Result<_>>()?;
    let mut report = SweepReport::assemble(&analyses, options.tolerances);
    report.wall_time = start.elapsed().as_secs_f64();
    Ok(report)
}

impl SweepReport {
    /// Builds a report from per-`k` analyses, which must cover a contiguous
    /// ascending range. `wall_time` is left at 0.
    pub fn assemble(analyses: &[Analysis], tolerances: Tolerances) -> Self {
        let k_range = (analyses.first().map_or(0, |a| a.k), analyses.last().map_or(0, |a| a.k));
        let mut verdicts = Vec::with_capacity(analyses.len() * ClaimId::ALL.len());
        let mut min_gap = f64::INFINITY;
        let mut oracle_max_dev: f64 = 0.0;
        for a in analyses {
            verdicts.extend(a.verdicts());
            min_gap = min_gap.min(a.min_gap());
            if let Some(Ok(view)) = &a.oracle {
                oracle_max_dev = oracle_max_dev.max(view.max_abs_dev);
            }
        }
        Self {
            k_range,
            verdicts,
            min_gap,
            oracle_max_dev,
            tolerance_review: min_gap <= tolerances.tol_cluster,
            wall_time: 0.0,
        }
    }
}

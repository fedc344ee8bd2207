//! Verification harness: each check runs one composed oracle on one case
//! and returns a report with enough detail to reproduce a failure.

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::character::CharacterRing;
use crate::error::{Error, Result};
use crate::fusion::{compare_with_verlinde, fusion_reduce};
use crate::ideal::{derive_fusion_ideal, derive_kernel, theorem1_generators, Classification};
use crate::lattice::truncated_ideal_equality;
use crate::root_data::{Family, LieType, RootDatum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Oracle,
    Vanish,
    Ideal,
    Pipeline,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::Oracle, Check::Vanish, Check::Ideal, Check::Pipeline];

    pub fn name(&self) -> &'static str {
        match self {
            Check::Oracle => "oracle",
            Check::Vanish => "vanish",
            Check::Ideal => "ideal",
            Check::Pipeline => "pipeline",
        }
    }
}

impl std::str::FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub lie_type: LieType,
    pub level: i64,
    pub check: Check,
}

impl Case {
    pub fn new(code: &str, level: i64, check: Check) -> Self {
        Case { lie_type: code.parse().expect("valid type code"), level, check }
    }

    pub fn id(&self) -> String {
        format!("{}/k={}/{}", self.lie_type.code(), self.level, self.check.name())
    }

    /// Command line reproducing this case alone.
    pub fn reproduce(&self) -> String {
        format!("fusionring verify {} --level {} --check {}", self.lie_type.code(), self.level, self.check.name())
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub case: Case,
    pub status: Status,
    pub details: Value,
    /// Set on failure: a concrete offending datum.
    pub counterexample: Option<String>,
    pub seconds: f64,
}

impl VerifyReport {
    fn new(case: &Case, status: Status, details: Value, counterexample: Option<String>, start: Instant) -> Self {
        let counterexample = match (status, counterexample) {
            (Status::Fail, None) => Some("no datum recorded".into()),
            (_, c) => c,
        };
        VerifyReport { case: case.clone(), status, details, counterexample, seconds: start.elapsed().as_secs_f64() }
    }

    fn skipped(case: &Case, reason: String, start: Instant) -> Self {
        VerifyReport::new(case, Status::Skipped, json!({ "reason": reason }), None, start)
    }

    /// Deterministic JSON; wall time is left out so reruns are byte-identical.
    pub fn to_json(&self) -> Value {
        json!({
            "case": self.case.id(),
            "type": self.case.lie_type.code(),
            "level": self.case.level,
            "check": self.case.check.name(),
            "status": self.status.to_string(),
            "details": self.details,
            "counterexample": self.counterexample,
            "reproduce": self.case.reproduce(),
        })
    }

    pub fn tsv_line(&self) -> String {
        let mut s = format!("{}\t{}\t{}", self.case.id(), self.status, self.details);
        if let Some(c) = &self.counterexample {
            s.push('\t');
            s.push_str(c);
            s.push('\t');
            s.push_str(&self.case.reproduce());
        }
        s
    }
}

/// Options shared by all checks.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub tolerance: f64,
    /// Truncation bound for the lattice check; defaults to k + 2h∨ + 2.
    pub bound: Option<i64>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { tolerance: 1e-6, bound: None }
    }
}

fn ring_for(t: LieType) -> Result<CharacterRing> {
    Ok(CharacterRing::new(Arc::new(RootDatum::new(t)?)))
}

fn skip_or_fail(case: &Case, e: Error, start: Instant) -> VerifyReport {
    match e {
        Error::BelowBound { .. } | Error::Capacity { .. } | Error::Unsupported(_) => {
            VerifyReport::skipped(case, e.to_string(), start)
        }
        e => VerifyReport::new(case, Status::Fail, json!({ "error": e.to_string() }), Some(e.to_string()), start),
    }
}

/// Every closed-form generator reduces to zero in F_k.
pub fn verify_vanish(ring: &CharacterRing, case: &Case) -> VerifyReport {
    let start = Instant::now();
    let d = ring.datum();
    let gens = match theorem1_generators(ring, case.level, false) {
        Ok(g) => g,
        Err(e) => return skip_or_fail(case, e, start),
    };
    for g in &gens.generators {
        match fusion_reduce(d, g, case.level) {
            Ok(r) if r.is_zero() => {}
            Ok(r) => {
                let cx = format!("{} reduces to {:?}", g.display(d), r.sorted_terms(d));
                return VerifyReport::new(case, Status::Fail, json!({ "generators": gens.len() }), Some(cx), start);
            }
            Err(e) => return skip_or_fail(case, e, start),
        }
    }
    VerifyReport::new(case, Status::Pass, json!({ "generators": gens.len() }), None, start)
}

/// Two-sided truncated lattice comparison of closed-form and classical generators.
pub fn verify_ideal_equality(ring: &CharacterRing, case: &Case, opts: &VerifyOptions) -> VerifyReport {
    let start = Instant::now();
    let d = ring.datum();
    let k = case.level;
    if d.rank() > 3 || k > 4 {
        return VerifyReport::skipped(case, "lattice check limited to rank ≤ 3 and k ≤ 4".into(), start);
    }
    let big_l = opts.bound.unwrap_or(k + 2 * d.dual_coxeter() + 2);
    let gens = match theorem1_generators(ring, k, false) {
        Ok(g) => g,
        Err(e) => return skip_or_fail(case, e, start),
    };
    match truncated_ideal_equality(ring, &gens, k, big_l) {
        Ok(rep) => {
            let status = if rep.passed() { Status::Pass } else { Status::Fail };
            let cx = rep.counterexample.clone().or_else(|| {
                (rep.quotient_rank != rep.alcove_size)
                    .then(|| format!("quotient rank {} but alcove size {}", rep.quotient_rank, rep.alcove_size))
            });
            VerifyReport::new(case, status, rep.to_json(), cx, start)
        }
        Err(e) => skip_or_fail(case, e, start),
    }
}

/// Level statistics of the E8 derivation at even and odd level.
pub fn e8_statistics(ring: &CharacterRing, k: i64) -> Result<Value> {
    let (_, kernel) = derive_kernel(ring, k)?;
    Ok(match &kernel.orthogonal {
        None => json!({
            "singular": kernel.count(|c| *c == Classification::Singular),
            "paired": kernel.count(|c| matches!(c, Classification::Paired { .. })),
        }),
        Some(s) => json!({
            "projected": s.projected,
            "projected_singular": s.projected_in_basis,
            "reflecting": s.reflecting,
            "above": s.above,
            "below": s.below,
            "pairs": s.pairs,
        }),
    })
}

/// Expected E8 statistics at the parity of k.
pub fn e8_expected(k: i64) -> Value {
    if k % 2 == 0 {
        json!({ "singular": 8, "paired": 112 })
    } else {
        json!({ "projected": 54, "projected_singular": 44, "reflecting": 35, "above": 120, "below": 76, "pairs": 161 })
    }
}

/// Derived generators equal the closed-form list as a multiset.
pub fn verify_pipeline(ring: &CharacterRing, case: &Case) -> VerifyReport {
    let start = Instant::now();
    let d = ring.datum();
    let k = case.level;
    let table = match theorem1_generators(ring, k, false) {
        Ok(g) => g,
        Err(e) => return skip_or_fail(case, e, start),
    };
    let derived = match derive_fusion_ideal(ring, k) {
        Ok(g) => g,
        Err(e) => return skip_or_fail(case, e, start),
    };
    let (only_derived, only_table) = derived.difference(&table);
    let mut details = json!({
        "derived": derived.len(),
        "table": table.len(),
        "only_derived": only_derived.len(),
        "only_table": only_table.len(),
    });
    let mut cx = only_derived
        .first()
        .map(|g| format!("derived only: {}", g.display(d)))
        .or_else(|| only_table.first().map(|g| format!("table only: {}", g.display(d))));
    let mut ok = derived.same_multiset(&table, d);
    if d.lie_type().family == Family::E && d.rank() == 8 {
        match e8_statistics(ring, k) {
            Ok(stats) => {
                let expected = e8_expected(k);
                if stats != expected {
                    ok = false;
                    cx.get_or_insert_with(|| format!("statistics {stats} differ from {expected}"));
                }
                details["statistics"] = stats;
            }
            Err(e) => return skip_or_fail(case, e, start),
        }
    }
    VerifyReport::new(case, if ok { Status::Pass } else { Status::Fail }, details, cx, start)
}

/// Kac–Walton structure constants agree with the Verlinde formula.
pub fn verify_oracle(ring: &CharacterRing, case: &Case, opts: &VerifyOptions) -> VerifyReport {
    let start = Instant::now();
    match compare_with_verlinde(ring, case.level, opts.tolerance) {
        Ok(c) => {
            let ok = c.mismatches.is_empty() && c.max_residual < opts.tolerance && c.unitarity_residual < 1e-9;
            let cx = c.mismatches.first().map(|(f, v)| {
                format!("N({},{};{}) = {} but Verlinde gives {v}", f.lambda, f.mu, f.nu, f.value)
            });
            let details = json!({
                "coefficients": c.coefficients,
                "mismatches": c.mismatches.len(),
                "residual_below_tolerance": c.max_residual < opts.tolerance,
                "unitary": c.unitarity_residual < 1e-9,
            });
            let cx = cx.or_else(|| (!ok).then(|| format!("residual {:e}", c.max_residual.max(c.unitarity_residual))));
            VerifyReport::new(case, if ok { Status::Pass } else { Status::Fail }, details, cx, start)
        }
        Err(e) => skip_or_fail(case, e, start),
    }
}

pub fn run_case(case: &Case, opts: &VerifyOptions) -> VerifyReport {
    let start = Instant::now();
    let ring = match ring_for(case.lie_type) {
        Ok(r) => r,
        Err(e) => return skip_or_fail(case, e, start),
    };
    match case.check {
        Check::Oracle => verify_oracle(&ring, case, opts),
        Check::Vanish => verify_vanish(&ring, case),
        Check::Ideal => verify_ideal_equality(&ring, case, opts),
        Check::Pipeline => verify_pipeline(&ring, case),
    }
}

/// Runs cases in parallel; reports come back in case order.
pub fn run_cases(cases: &[Case], opts: &VerifyOptions) -> Vec<VerifyReport> {
    cases.par_iter().map(|c| run_case(c, opts)).collect()
}

/// Tier 0 runs in seconds, tier 1 in minutes; tier 2 adds E7 vanishing and E8.
pub fn tier_cases(tier: u8) -> Vec<Case> {
    let mut out = Vec::new();
    let mut add = |code: &str, ks: &[i64], checks: &[Check]| {
        for &k in ks {
            for &c in checks {
                out.push(Case::new(code, k, c));
            }
        }
    };
    use Check::*;
    add("A1", &[1, 2, 3, 4], &[Oracle, Vanish, Ideal, Pipeline]);
    add("A2", &[1, 2, 3], &[Oracle, Vanish, Ideal, Pipeline]);
    add("C2", &[1, 2, 3], &[Oracle, Vanish, Ideal, Pipeline]);
    add("G2", &[1, 2, 3], &[Oracle, Vanish, Ideal, Pipeline]);
    if tier >= 1 {
        add("A3", &[1, 2, 3, 4], &[Oracle, Vanish, Pipeline]);
        add("A4", &[1, 2, 3], &[Vanish, Pipeline]);
        add("C3", &[1, 2, 3], &[Vanish, Pipeline]);
        add("B3", &[1, 2], &[Oracle, Vanish, Ideal, Pipeline]);
        add("B4", &[1, 2, 3], &[Vanish, Pipeline]);
        add("D4", &[1, 2, 3], &[Oracle, Vanish, Pipeline]);
        add("F4", &[6, 7], &[Vanish, Pipeline]);
        add("E6", &[2, 3], &[Vanish, Pipeline]);
    }
    if tier >= 2 {
        add("E7", &[4, 5], &[Vanish, Pipeline]);
        add("E8", &[20, 21], &[Pipeline]);
    }
    out
}

/// All four checks for one (type, level).
pub fn all_checks(t: LieType, k: i64) -> Vec<Case> {
    Check::ALL.iter().map(|&check| Case { lie_type: t, level: k, check }).collect()
}

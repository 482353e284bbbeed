use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::analyze::{analyze, AnalyzeOptions};
use super::instance::{FatPointEntry, InputSpec, InstanceSpec};
use super::report::{Certificate, CheckRecord, CheckStatus};
use crate::error::{Error, ErrorClass, Result};
use crate::groebner::{artinian_cm_test, CmVerdict};
use crate::invariants::fiber_ideal;
use crate::matforms::{conjugate, minors_ideal, rational_points, ConjugationAction, LinearMatrix};
use crate::linalg::ScalarMatrix;
use crate::ring::PolyRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteLevel {
    Fast,
    Full,
}

impl SuiteLevel {
    pub fn max_n(self) -> usize {
        match self {
            SuiteLevel::Fast => 5,
            SuiteLevel::Full => 7,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    /// Every check passes or is skipped.
    AllPass,
    /// The analysis stops at the standing hypotheses.
    HypothesisViolation,
    /// The special fiber is not Cohen-Macaulay for two seeds and
    /// `I_4(phi)` has at least two rational minimal primes.
    NotCmFiber,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub n: usize,
    pub instance: InstanceSpec,
    pub expect: Expectation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseOutcome {
    pub name: String,
    pub n: usize,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub level: SuiteLevel,
    pub tallies: BTreeMap<String, Tally>,
    pub cases: Vec<CaseOutcome>,
}

impl SuiteSummary {
    pub fn all_passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }

    /// One line per check name, then the failing cases.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (name, t) in &self.tallies {
            out.push_str(&format!("{name:<28} pass {:>4}  fail {:>3}  skip {:>3}\n", t.pass, t.fail, t.skip));
        }
        for c in self.cases.iter().filter(|c| !c.passed) {
            out.push_str(&format!("FAILED {}", c.name));
            if let Some(e) = &c.error {
                out.push_str(&format!(": {e}"));
            }
            out.push('\n');
            for r in c.checks.iter().filter(|r| r.status == CheckStatus::Fail) {
                out.push_str(&format!("  {r}\n"));
            }
        }
        let passed = self.cases.iter().filter(|c| c.passed).count();
        out.push_str(&format!("{passed}/{} fixtures passed\n", self.cases.len()));
        out
    }
}

/// Words in `{x, y}` of length `len` using both letters, in lexicographic order.
pub fn basic_sequences(len: usize) -> Vec<String> {
    (0..1u32 << len)
        .map(|bits| {
            (0..len)
                .map(|i| if bits >> (len - 1 - i) & 1 == 0 { 'x' } else { 'y' })
                .collect::<String>()
        })
        .filter(|s| s.contains('x') && s.contains('y'))
        .collect()
}

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn fixture(name: String, n: usize, input: InputSpec, expect: Expectation) -> Fixture {
    Fixture {
        name,
        n,
        instance: InstanceSpec::new(input),
        expect,
    }
}

/// Arrangement fixtures with their number of lines.
pub const ARRANGEMENTS: &[&[&str]] = &[
    &["x", "y", "z"],
    &["x", "y", "x+y", "z"],
    &["x", "y+z", "y-z", "y"],
    &["x", "y", "z", "x+y+z"],
    &["x", "y", "y+z", "y-z", "y+2*z"],
    &["x", "y", "z", "x+y+z", "x-y+2*z"],
    &["x", "y", "z", "x+y", "x+z"],
    &["x", "y", "z", "x+y+z", "x-y+2*z", "x+2*y-z"],
    &["x", "y", "y+z", "y-z", "y+2*z", "y-2*z"],
    &["x", "y", "z", "x+y+z", "x-y+2*z", "x+2*y-z", "2*x-y-z"],
    &["x", "y", "y+z", "y-z", "y+2*z", "y-2*z", "2*y+z"],
];

/// The fixture corpus of a level, in a fixed order.
pub fn fixtures(level: SuiteLevel) -> Result<Vec<Fixture>> {
    let max_n = level.max_n();
    let mut out = Vec::new();
    for len in 2..max_n {
        for letters in basic_sequences(len) {
            let expect = if letters == "xyxxyy" {
                Expectation::NotCmFiber
            } else {
                Expectation::AllPass
            };
            out.push(fixture(
                format!("sequence {letters}"),
                len + 1,
                InputSpec::Sequence { letters },
                expect,
            ));
        }
    }
    let ring = PolyRing::xyz(crate::field::FieldSpec::Rational);
    for n in 4..=max_n.min(6) {
        for r in 1..n {
            let polys = crate::families::lan_remark_family(&ring, n, r)?
                .iter()
                .map(|g| g.to_string())
                .collect();
            out.push(fixture(
                format!("remark family n={n} r={r}"),
                n,
                InputSpec::Generators { polys },
                Expectation::AllPass,
            ));
        }
    }
    for forms in ARRANGEMENTS.iter().filter(|f| f.len() <= max_n) {
        out.push(fixture(
            format!("arrangement {{{}}}", forms.join(", ")),
            forms.len(),
            InputSpec::Arrangement { forms: strings(forms) },
            Expectation::AllPass,
        ));
    }
    let point = |prime: &[&str], mult| FatPointEntry {
        prime: strings(prime),
        mult,
    };
    out.push(fixture(
        "fat points (x,y)^2 (x,z) (y,z) (x+y,z)".into(),
        4,
        InputSpec::FatPoints {
            points: vec![
                point(&["x", "y"], 2),
                point(&["x", "z"], 1),
                point(&["y", "z"], 1),
                point(&["x+y", "z"], 1),
            ],
        },
        Expectation::AllPass,
    ));
    out.push(fixture(
        "fat points (x,y)^2".into(),
        3,
        InputSpec::FatPoints {
            points: vec![point(&["x", "y"], 2)],
        },
        Expectation::HypothesisViolation,
    ));
    let phi = crate::families::monomial_family(&crate::families::BasicEntrySequence::new("xyy")?)?.phi;
    out.push(fixture(
        "conjugated xyy".into(),
        4,
        InputSpec::Matrix {
            rows: conjugated_sample(&phi)?.to_strings(),
        },
        Expectation::AllPass,
    ));
    Ok(out)
}

/// A fixed non-trivial conjugate of `phi`.
fn conjugated_sample(phi: &LinearMatrix) -> Result<LinearMatrix> {
    let f = phi.ring().field();
    let n = phi.nrows();
    let m = phi.ncols();
    let shear = |k: usize| {
        let mut s = ScalarMatrix::identity(f, k);
        for i in 0..k - 1 {
            s.set(i, i + 1, f.from_int(i as i64 + 1));
        }
        s
    };
    let action = ConjugationAction {
        coord_change: ScalarMatrix::from_ints(f, &[vec![1, 1, 0], vec![0, 1, 2], vec![1, 0, 1]]),
        row_op: shear(n).transpose(),
        col_op: shear(m),
    };
    conjugate(phi, &action)
}

fn run_fixture(fx: &Fixture) -> CaseOutcome {
    let mut outcome = CaseOutcome {
        name: fx.name.clone(),
        n: fx.n,
        passed: false,
        checks: Vec::new(),
        error: None,
    };
    match (analyze(&fx.instance, &AnalyzeOptions::default()), fx.expect) {
        (Err(e), Expectation::HypothesisViolation) => {
            let ok = e.class() == ErrorClass::Hypothesis;
            outcome.checks.push(CheckRecord::verdict(
                "hypothesis_flagged",
                ok,
                e.to_string(),
                Certificate::Verdict {
                    computed: format!("{:?}", e.class()).to_lowercase(),
                    expected: "hypothesis".into(),
                },
            ));
            outcome.passed = ok;
        }
        (Err(e), _) => outcome.error = Some(e.to_string()),
        (Ok(report), expect) => {
            outcome.checks = report.checks;
            match expect {
                Expectation::AllPass => {}
                Expectation::HypothesisViolation => outcome.checks.push(CheckRecord::verdict(
                    "hypothesis_flagged",
                    false,
                    "analysis accepted the input",
                    Certificate::Verdict {
                        computed: "accepted".into(),
                        expected: "hypothesis".into(),
                    },
                )),
                Expectation::NotCmFiber => match non_cm_regression(&fx.instance) {
                    Ok(c) => outcome.checks.push(c),
                    Err(e) => outcome.error = Some(e.to_string()),
                },
            }
            outcome.passed = outcome.error.is_none() && outcome.checks.iter().all(|c| c.status != CheckStatus::Fail);
        }
    }
    outcome
}

fn non_cm_regression(inst: &InstanceSpec) -> Result<CheckRecord> {
    let InputSpec::Sequence { letters } = &inst.input else {
        return Err(Error::Internal("regression fixture must be a sequence".into()));
    };
    let phi = crate::families::monomial_family(&crate::families::BasicEntrySequence::new(letters)?)?.phi;
    let q = fiber_ideal(&phi)?;
    let verdicts = [0, 1]
        .iter()
        .map(|&s| Ok(artinian_cm_test(&q, s)?.verdict))
        .collect::<Result<Vec<_>>>()?;
    let primes = rational_points(&minors_ideal(&phi, 4)?)?.len();
    Ok(CheckRecord::verdict(
        "non_cm_regression",
        verdicts.iter().all(|&v| v == CmVerdict::NotCm) && primes >= 2,
        "special fiber is not Cohen-Macaulay and I_4(phi) has two rational minimal primes",
        Certificate::Values {
            computed: vec![
                (verdicts[0] == CmVerdict::NotCm) as i64,
                (verdicts[1] == CmVerdict::NotCm) as i64,
                primes as i64,
            ],
            expected: vec![1, 1, 2],
        },
    ))
}

/// Runs the fixture corpus; fixtures are analyzed in parallel and reported
/// in corpus order.
pub fn verify_suite(level: SuiteLevel) -> Result<SuiteSummary> {
    let cases: Vec<CaseOutcome> = fixtures(level)?.par_iter().map(run_fixture).collect();
    let mut tallies: BTreeMap<String, Tally> = BTreeMap::new();
    for c in &cases {
        if c.error.is_some() {
            tallies.entry("error".into()).or_default().fail += 1;
        }
        for r in &c.checks {
            let t = tallies.entry(r.name.clone()).or_default();
            match r.status {
                CheckStatus::Pass => t.pass += 1,
                CheckStatus::Fail => t.fail += 1,
                CheckStatus::Skip => t.skip += 1,
            }
        }
    }
    Ok(SuiteSummary { level, tallies, cases })
}

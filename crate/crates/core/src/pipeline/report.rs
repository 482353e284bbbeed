use std::fmt;

use serde::{Deserialize, Serialize};

use super::instance::InstanceSpec;
use crate::error::{Error, Result};
use crate::groebner::HilbertData;
use crate::invariants::{
    BirationalityData, DepthZeroSquare, FiberTypeCheck, LocalData, ReductionReport, UniversalPrime,
};
use crate::matforms::{ActionStrings, OneGenericity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

/// Evidence behind a pass or fail verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Reduced-basis digests of the two ideals compared.
    GbHash { computed: String, expected: String },
    Dimension { computed: i64, expected: i64 },
    /// Values compared entrywise.
    Values { computed: Vec<i64>, expected: Vec<i64> },
    /// A polynomial witnessing the verdict, or the empty string when no
    /// witness exists.
    Witness { polynomial: String },
    Verdict { computed: String, expected: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: CheckStatus,
    pub reason: String,
    pub certificate: Option<Certificate>,
}

impl CheckRecord {
    pub fn verdict(name: &str, ok: bool, reason: impl Into<String>, certificate: Certificate) -> CheckRecord {
        CheckRecord {
            name: name.to_string(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            reason: reason.into(),
            certificate: Some(certificate),
        }
    }

    pub fn skip(name: &str, reason: impl Into<String>) -> CheckRecord {
        CheckRecord {
            name: name.to_string(),
            status: CheckStatus::Skip,
            reason: reason.into(),
            certificate: None,
        }
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skip => "SKIP",
        };
        write!(f, "[{tag}] {}: {}", self.name, self.reason)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub instance: InstanceSpec,
    pub n: usize,
    /// Presentation matrix used for the analysis.
    pub phi: Vec<Vec<String>>,
    /// Signed maximal minors of `phi`.
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualSection {
    pub b: Vec<Vec<String>>,
    pub canonical_u: Option<usize>,
    pub canonical_phi: Option<Vec<Vec<String>>>,
    pub b_prime: Option<Vec<Vec<String>>>,
    pub action: Option<ActionStrings>,
    /// Fiber ideal of the canonical form, when it was compared with `I_2(B')`.
    pub canonical_fiber: Option<IdealSection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSection {
    pub generators: Vec<String>,
    pub gb_hash: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberSection {
    pub ideal: IdealSection,
    pub hilbert: HilbertData,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReesSection {
    pub ideal: IdealSection,
    pub saturated_by: usize,
    pub cross_check: Option<bool>,
    pub dim: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TimingEntry {
    pub stage: String,
    pub seconds: f64,
}

/// Everything one analysis computed, in a fixed field order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: InputEcho,
    pub heights: Option<Vec<usize>>,
    pub u: Option<usize>,
    pub local_profiles: Option<Vec<LocalData>>,
    pub universal_prime: Option<UniversalPrime>,
    pub jacobian_dual: Option<DualSection>,
    pub one_generic: Option<OneGenericity>,
    pub fiber: Option<FiberSection>,
    pub rees: Option<ReesSection>,
    pub fiber_type: Option<FiberTypeCheck>,
    pub birationality: Option<BirationalityData>,
    pub depth_zero_square: Option<DepthZeroSquare>,
    pub reduction: Option<ReductionReport>,
    pub checks: Vec<CheckRecord>,
    /// Wall-clock timings; only filled on request so that reports stay
    /// byte-identical across runs by default.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Vec<TimingEntry>>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<AnalysisReport> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.failed_checks().next().is_none()
    }

    /// Short human-readable summary.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let inst = &self.input.instance;
        out.push_str(&format!("input: {} (n = {})\n", inst.input.kind(), self.input.n));
        if let Some(h) = &self.heights {
            out.push_str(&format!("heights of I_t(phi): {h:?}\n"));
        }
        if let Some(u) = self.u {
            out.push_str(&format!("u = {u}\n"));
        }
        if let Some(f) = &self.fiber {
            out.push_str(&format!(
                "fiber: {} generators, dim {}, multiplicity {}\n",
                f.ideal.generators.len(),
                f.hilbert.dim,
                f.hilbert.multiplicity
            ));
        }
        if let Some(ft) = &self.fiber_type {
            out.push_str(&format!("fiber type: {}\n", ft.fiber_type));
        }
        if let Some(r) = &self.reduction {
            let rn = r.reduction_number.map_or("n/a".to_string(), |v| v.to_string());
            out.push_str(&format!("fiber CM: {:?}, reduction number: {rn}\n", r.fiber_cm));
        }
        for c in &self.checks {
            out.push_str(&format!("{c}\n"));
        }
        out
    }
}

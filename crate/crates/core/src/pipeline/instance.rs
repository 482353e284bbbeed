use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ring::PolyRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldConfig {
    Rational,
    Prime(u64),
}

impl FieldConfig {
    pub fn spec(&self) -> Result<FieldSpec> {
        match *self {
            FieldConfig::Rational => Ok(FieldSpec::Rational),
            FieldConfig::Prime(p) => FieldSpec::prime(p),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingConfig {
    pub field: FieldConfig,
}

impl Default for RingConfig {
    fn default() -> RingConfig {
        RingConfig {
            field: FieldConfig::Rational,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FatPointEntry {
    pub prime: Vec<String>,
    pub mult: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum InputSpec {
    Matrix { rows: Vec<Vec<String>> },
    Sequence { letters: String },
    Arrangement { forms: Vec<String> },
    FatPoints { points: Vec<FatPointEntry> },
    Generators { polys: Vec<String> },
}

impl InputSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            InputSpec::Matrix { .. } => "matrix",
            InputSpec::Sequence { .. } => "sequence",
            InputSpec::Arrangement { .. } => "arrangement",
            InputSpec::FatPoints { .. } => "fat_points",
            InputSpec::Generators { .. } => "generators",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Task {
    All,
    Chaos,
    JacobianDual,
    OneGeneric,
    Fiber,
    Rees,
    FiberType,
    Birationality,
    Depth,
    Reduction,
    HilbertCrossCheck,
}

impl Task {
    pub const EACH: [Task; 10] = [
        Task::Chaos,
        Task::JacobianDual,
        Task::OneGeneric,
        Task::Fiber,
        Task::Rees,
        Task::FiberType,
        Task::Birationality,
        Task::Depth,
        Task::Reduction,
        Task::HilbertCrossCheck,
    ];

    pub fn parse(s: &str) -> Result<Task> {
        serde_json::from_value(serde_json::Value::String(s.trim().to_string()))
            .map_err(|_| Error::Schema(format!("unknown task `{s}`")))
    }
}

fn default_tasks() -> Vec<Task> {
    vec![Task::All]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    #[serde(default)]
    pub ring: RingConfig,
    pub input: InputSpec,
    #[serde(default = "default_tasks")]
    pub tasks: Vec<Task>,
    #[serde(default)]
    pub seed: u64,
}

impl InstanceSpec {
    pub fn new(input: InputSpec) -> InstanceSpec {
        InstanceSpec {
            ring: RingConfig::default(),
            input,
            tasks: default_tasks(),
            seed: 0,
        }
    }

    pub fn from_json(text: &str) -> Result<InstanceSpec> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance serializes")
    }

    pub fn ring(&self) -> Result<Arc<PolyRing>> {
        Ok(PolyRing::xyz(self.ring.field.spec()?))
    }

    /// Whether `task` was requested, directly or through `all`.
    pub fn wants(&self, task: Task) -> bool {
        self.tasks.iter().any(|&t| t == Task::All || t == task)
    }
}

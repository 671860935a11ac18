//! Campaign reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::io::{IdealSpec, Rat, RingSpec};

/// Everything needed to rerun one campaign instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub seed: u64,
    pub ring: RingSpec,
    pub ideals: Vec<IdealSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Rat>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, i64>,
    /// A command line that reruns exactly this instance.
    pub replay: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    Counterexample,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub kind: FailureKind,
    pub detail: String,
    pub instance: InstanceRecord,
}

/// `failures` is empty exactly when `passes == instances`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub campaign: String,
    pub instances: usize,
    pub passes: usize,
    pub failures: Vec<Failure>,
    pub wall_ms: u64,
}

impl CampaignReport {
    pub fn counterexamples(&self) -> usize {
        self.failures.iter().filter(|f| f.kind == FailureKind::Counterexample).count()
    }

    pub fn inconclusive(&self) -> usize {
        self.failures.iter().filter(|f| f.kind == FailureKind::Inconclusive).count()
    }

    /// 0 all pass, 1 a counterexample, 2 only inconclusive instances.
    pub fn exit_code(&self) -> u8 {
        if self.counterexamples() > 0 {
            1
        } else if self.inconclusive() > 0 {
            2
        } else {
            0
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}: {}/{} passed ({} counterexamples, {} inconclusive) in {} ms\n",
            self.campaign,
            self.passes,
            self.instances,
            self.counterexamples(),
            self.inconclusive(),
            self.wall_ms
        );
        for f in &self.failures {
            out.push_str(&format!(
                "  #{} {:?}: {}\n    replay: {}\n",
                f.instance.index, f.kind, f.detail, f.instance.replay
            ));
        }
        out
    }
}

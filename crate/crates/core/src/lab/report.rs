use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

/// The statements checked by the suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// For `d > 0`: `c(2) = 1` iff `ZB` uniserial iff `D` cyclic and `e = 1`.
    UniserialCenter,
    /// Cyclic `D`: `c = (1, e, 1, ..., 1)`, `LL = (p^d-1)/e + 1`,
    /// `k = (p^d-1)/e + e`, `l = e`.
    CyclicDefect,
    /// `(lambda-1)/e + 1 <= LL(F[Z(D)]^N) <= LL(ZB)`.
    FixedPointBound,
    /// `(p^m+p-2)/(p-1) <= LL(F[Z(D)]^N) <= LL(ZB)` with the witness `a^t != 0`.
    ExponentBound,
    /// `(p^m+p-2)/(p-1) <= k - l + 1 <= k`, and `p + 2 <= k` when `m >= 2`.
    CharacterBound,
    /// `LL(ZB) <= p^d`.
    LoewyUpperBound,
    /// `2 sqrt(p-1) <= k(B)` for `d > 0`; report-only.
    SqrtScan,
    /// `LL(Z(F M_{p^d})) = p^{d-2} < (p^{d-1}+p-2)/(p-1)`.
    ModularGroup,
    /// `Z(F[D ⋊ I]) = F[D]^I ⊕ Γ` with `Γ` the defect-zero class sums, `Γ^2 = 0`.
    DefectZeroComplement,
    /// Sufficient conditions on `e`, the Loewy layers, `l(B)` and `Z(D)`,
    /// and the bounds they imply.
    SufficientConditions,
    /// Class and Brauer character counts of `F_p^2 ⋊ (2.S4 × C_x)`.
    FrobeniusCounts,
    /// `sum k(B)`, `sum l(B)`, `c(1) = 1`, `d = 0 <=> k = 1 <=> LL = 1`, `lambda` formula.
    BlockInvariants,
}

impl Claim {
    pub const ALL: [Claim; 12] = [
        Claim::UniserialCenter,
        Claim::CyclicDefect,
        Claim::FixedPointBound,
        Claim::ExponentBound,
        Claim::CharacterBound,
        Claim::LoewyUpperBound,
        Claim::SqrtScan,
        Claim::ModularGroup,
        Claim::DefectZeroComplement,
        Claim::SufficientConditions,
        Claim::FrobeniusCounts,
        Claim::BlockInvariants,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::UniserialCenter => "uniserial_center",
            Claim::CyclicDefect => "cyclic_defect",
            Claim::FixedPointBound => "fixed_point_bound",
            Claim::ExponentBound => "exponent_bound",
            Claim::CharacterBound => "character_bound",
            Claim::LoewyUpperBound => "loewy_upper_bound",
            Claim::SqrtScan => "sqrt_scan",
            Claim::ModularGroup => "modular_group",
            Claim::DefectZeroComplement => "defect_zero_complement",
            Claim::SufficientConditions => "sufficient_conditions",
            Claim::FrobeniusCounts => "frobenius_counts",
            Claim::BlockInvariants => "block_invariants",
        }
    }

    pub fn severity(self) -> Severity {
        match self {
            Claim::SqrtScan => Severity::ReportOnly,
            _ => Severity::Gate,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Whether a failing check fails the run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    Gate,
    ReportOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped { reason: String },
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn skipped(reason: impl Into<String>) -> Self {
        Verdict::Skipped { reason: reason.into() }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped { .. } => "skipped",
        }
    }
}

/// One check on one instance; `values` holds every integer the verdict
/// depends on (booleans as 0/1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: Claim,
    pub group: String,
    pub p: u32,
    pub block: Option<usize>,
    pub severity: Severity,
    pub values: IndexMap<String, i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn new(claim: Claim, group: impl Into<String>, p: u32, block: Option<usize>) -> Self {
        VerificationReport {
            claim,
            group: group.into(),
            p,
            block,
            severity: claim.severity(),
            values: IndexMap::new(),
            note: None,
            verdict: Verdict::Pass,
        }
    }

    pub fn value(mut self, name: &str, v: impl TryInto<i64>) -> Self {
        self.values.insert(name.to_string(), v.try_into().unwrap_or(i64::MAX));
        self
    }

    pub fn flag(self, name: &str, v: bool) -> Self {
        self.value(name, v as i64)
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn verdict(mut self, verdict: Verdict) -> Self {
        self.verdict = verdict;
        self
    }

    pub fn is_gate_failure(&self) -> bool {
        self.verdict == Verdict::Fail && self.severity == Severity::Gate
    }
}

/// Per-block row of an instance report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSummary {
    pub index: usize,
    pub principal: bool,
    pub defect: u32,
    pub defect_group_order: u64,
    pub defect_group_cyclic: bool,
    /// Invariant factors of `Z(D)`.
    pub center_type: Vec<u64>,
    pub m: u32,
    pub r: usize,
    pub e: usize,
    pub k: usize,
    /// `None` when the full group algebra exceeds the cap.
    pub l: Option<usize>,
    pub loewy_length: usize,
    pub codims: Vec<usize>,
    pub fixed_point_loewy_length: usize,
    pub lambda: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub group: String,
    pub name: String,
    pub order: usize,
    pub p: u32,
    pub s: u32,
    /// The subgroup over which root blocks are taken.
    pub root_base: String,
    pub blocks: Vec<BlockSummary>,
    pub checks: Vec<VerificationReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Settings echoed into every suite report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: String,
    pub group: Option<String>,
    pub p: Option<u32>,
    pub max_order: usize,
    pub full_algebra_cap: usize,
    pub large: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            command: "verify".into(),
            group: None,
            p: None,
            max_order: 200,
            full_algebra_cap: crate::block::DEFAULT_FULL_ALGEBRA_CAP,
            large: false,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCounts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    /// Failures of report-only checks, included in `fail`.
    pub report_only_fail: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub tool_version: String,
    pub config: RunConfig,
    pub instances: Vec<InstanceReport>,
}

impl SuiteReport {
    pub fn checks(&self) -> impl Iterator<Item = &VerificationReport> {
        self.instances.iter().flat_map(|i| i.checks.iter())
    }

    pub fn counts(&self) -> CheckCounts {
        let mut c = CheckCounts { errors: self.instances.iter().filter(|i| i.error.is_some()).count(), ..Default::default() };
        for r in self.checks() {
            match r.verdict {
                Verdict::Pass => c.pass += 1,
                Verdict::Fail => {
                    c.fail += 1;
                    if r.severity == Severity::ReportOnly {
                        c.report_only_fail += 1;
                    }
                }
                Verdict::Skipped { .. } => c.skipped += 1,
            }
        }
        c
    }

    /// No gate check failed and every instance was analyzed.
    pub fn passed(&self) -> bool {
        self.instances.iter().all(|i| i.error.is_none()) && !self.checks().any(|r| r.is_gate_failure())
    }
}

//! The JSON report format shared by `verify` and `sweep`.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    RejectedInput,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::RejectedInput => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::RejectedInput => "REJECTED",
        })
    }
}

/// How an equality verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Equality {
    /// Exact comparison of tables or lattice elements.
    Exact,
    /// Equal interpretations under every trial environment.
    IndistinguishableUnderTrials,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema_version: u32,
    pub encodings_version: u32,
    pub check: String,
    pub instance: String,
    pub params: Map<String, Value>,
    pub verdict: Verdict,
    /// Number of individual equalities established.
    pub cases: u64,
    pub equality: Equality,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    pub seed: u64,
    pub elapsed_ms: u64,
}

impl CheckReport {
    pub fn new(check: &str, instance: &str, params: Map<String, Value>, seed: u64) -> Self {
        CheckReport {
            schema_version: SCHEMA_VERSION,
            encodings_version: bicc::finset::ENCODINGS_VERSION,
            check: check.to_string(),
            instance: instance.to_string(),
            params,
            verdict: Verdict::Pass,
            cases: 0,
            equality: Equality::Exact,
            counterexample: None,
            seed,
            elapsed_ms: 0,
        }
    }

    /// Marks the report failed. The counterexample is stamped with the seed
    /// and encodings version so it can be replayed on its own.
    pub fn fail(&mut self, counterexample: Value) {
        self.verdict = Verdict::Fail;
        self.counterexample = Some(self.stamped(counterexample));
    }

    pub fn reject(&mut self, reason: Value) {
        self.verdict = Verdict::RejectedInput;
        self.counterexample = Some(self.stamped(reason));
    }

    fn stamped(&self, value: Value) -> Value {
        let mut obj = match value {
            Value::Object(m) => m,
            other => {
                let mut m = Map::new();
                m.insert("detail".into(), other);
                m
            }
        };
        obj.insert("seed".into(), json!(self.seed));
        obj.insert("encodings_version".into(), json!(self.encodings_version));
        Value::Object(obj)
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// One-line human summary.
    pub fn line(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={}", compact(v))).collect();
        let how = match self.equality {
            Equality::Exact => "exact",
            Equality::IndistinguishableUnderTrials => "indistinguishable under trials",
        };
        format!(
            "{} {} [{}] {} ({} cases, {how}, {} ms)",
            self.verdict,
            self.check,
            self.instance,
            params.join(" "),
            self.cases,
            self.elapsed_ms
        )
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub rejected_input: usize,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Self {
        let mut s = Summary {
            total: reports.len(),
            ..Summary::default()
        };
        for r in reports {
            match r.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::RejectedInput => s.rejected_input += 1,
            }
        }
        s
    }

    pub fn verdict(&self) -> Verdict {
        if self.rejected_input > 0 {
            Verdict::RejectedInput
        } else if self.fail > 0 {
            Verdict::Fail
        } else {
            Verdict::Pass
        }
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} checks: {} passed, {} failed, {} rejected",
            self.total, self.pass, self.fail, self.rejected_input
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema_version: u32,
    pub reports: Vec<CheckReport>,
    pub summary: Summary,
}

impl SweepReport {
    pub fn new(reports: Vec<CheckReport>) -> Self {
        let summary = Summary::of(&reports);
        SweepReport {
            schema_version: SCHEMA_VERSION,
            reports,
            summary,
        }
    }
}

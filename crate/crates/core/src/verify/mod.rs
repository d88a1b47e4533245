//! Finite-instance checkers for the structure theorems on inner and symmetric
//! automorphisms. Each checker runs seeded random trials plus the explicit witness
//! elements, and records every failed expectation as a witness.
//!
//! Every checker also has a mutation mode that corrupts one hypothesis; a mutated
//! run must report `fail`.

mod aut_l2;
mod corollary;
mod inner_metabelian;
mod inner_nilpotent;
mod lemma;
mod phi;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

pub use aut_l2::verify_aut_l2;
pub use corollary::verify_corollary_f2;
pub use inner_metabelian::verify_inner_metabelian;
pub use inner_nilpotent::verify_inner_nilpotent;
pub use lemma::verify_lemma_linear;
pub use phi::{verify_phi_l2c, PHI_RANDOM_TRIALS};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    ThmMetabelian,
    LemmaLinear,
    ThmNilpotent,
    AutL2,
    CorF2,
    PhiL2c,
}

impl Target {
    pub const ALL: [Target; 6] = [
        Target::ThmMetabelian,
        Target::LemmaLinear,
        Target::ThmNilpotent,
        Target::AutL2,
        Target::CorF2,
        Target::PhiL2c,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Target::ThmMetabelian => "thm-metabelian",
            Target::LemmaLinear => "lemma-linear",
            Target::ThmNilpotent => "thm-nilpotent",
            Target::AutL2 => "aut-l2",
            Target::CorF2 => "cor-f2",
            Target::PhiL2c => "phi-l2c",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown verification target `{s}`")))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub rank: Option<usize>,
    pub class: Option<usize>,
    pub dmax: Option<usize>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
    #[serde(default)]
    pub mutation: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A failed expectation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub input: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub target: Target,
    pub params: Params,
    pub status: Status,
    pub checks_run: usize,
    pub witnesses: Vec<Witness>,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// One header line, then one line per witness and note.
impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.params;
        write!(f, "{}", self.target)?;
        for (key, value) in [("rank", p.rank), ("class", p.class), ("dmax", p.dmax), ("trials", p.trials)] {
            if let Some(v) = value {
                write!(f, " {key}={v}")?;
            }
        }
        if let Some(seed) = p.seed {
            write!(f, " seed={seed}")?;
        }
        if p.mutation {
            write!(f, " mutation")?;
        }
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, ": {status} ({} checks, {} ms)", self.checks_run, self.elapsed_ms)?;
        for w in &self.witnesses {
            write!(f, "\n  witness: input: {} | expected: {} | got: {}", w.input, w.expected, w.got)?;
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        Ok(())
    }
}

/// Accumulates checks for one report.
pub(crate) struct Recorder {
    target: Target,
    params: Params,
    checks: usize,
    witnesses: Vec<Witness>,
    notes: Vec<String>,
    start: Instant,
}

impl Recorder {
    pub(crate) fn new(target: Target, params: Params) -> Self {
        Self { target, params, checks: 0, witnesses: Vec::new(), notes: Vec::new(), start: Instant::now() }
    }

    /// Counts a check; on failure records the witness built by `witness`.
    pub(crate) fn check<F>(&mut self, ok: bool, witness: F) -> bool
    where
        F: FnOnce() -> (String, String, String),
    {
        self.checks += 1;
        if !ok {
            let (input, expected, got) = witness();
            self.witnesses.push(Witness { input, expected, got });
        }
        ok
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub(crate) fn finish(self) -> VerificationReport {
        let status = if self.witnesses.is_empty() { Status::Pass } else { Status::Fail };
        VerificationReport {
            target: self.target,
            params: self.params,
            status,
            checks_run: self.checks,
            witnesses: self.witnesses,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
            notes: self.notes,
        }
    }
}

pub(crate) fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidSpec(msg.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_witnesses() {
        let mut r = Recorder::new(Target::LemmaLinear, Params::default());
        r.check(true, || unreachable!());
        let report = r.finish();
        assert!(report.passed());
        assert_eq!(report.checks_run, 1);

        let mut r = Recorder::new(Target::LemmaLinear, Params::default());
        r.check(false, || ("i".into(), "e".into(), "g".into()));
        let report = r.finish();
        assert_eq!(report.status, Status::Fail);
        assert_eq!(report.witnesses.len(), 1);
    }

    #[test]
    fn json_keys() {
        let report = Recorder::new(Target::PhiL2c, Params { class: Some(4), ..Params::default() }).finish();
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        for key in ["target", "params", "status", "checks_run", "witnesses", "elapsed_ms"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["target"], "phi-l2c");
        assert_eq!(v["status"], "pass");
        assert_eq!(v["params"]["class"], 4);
    }

    #[test]
    fn target_round_trip() {
        for t in Target::ALL {
            assert_eq!(t.as_str().parse::<Target>().unwrap(), t);
        }
        assert!("nope".parse::<Target>().is_err());
    }
}

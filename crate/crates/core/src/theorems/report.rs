//! Machine-readable verdicts for claim checks.

use serde::{Deserialize, Serialize};

use crate::algebra::{FiniteGroup, GroupSubset};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::spectra::{compare, Spectrum, CROSS_CHECK_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    /// The instance is outside the claim's hypotheses.
    Skipped,
}

/// The data that made a check fail.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// First adjacency entry where two graphs that should coincide differ.
    Adjacency { identity: String, row: usize, col: usize },
    /// Two spectra whose comparison went the wrong way.
    Spectrum {
        context: String,
        expected_isospectral: bool,
        /// `None` when the sizes differ.
        residual: Option<f64>,
        unmatched: Option<(f64, f64)>,
    },
    /// A boolean property with the wrong value.
    Property { context: String },
    /// A computation that should have succeeded raised an error.
    Error { message: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub instance: String,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn failed(&self) -> bool {
        self.outcome == Outcome::Fail
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    pub fn from_json_line(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// `G S={…}` with element labels.
pub fn describe(group: &FiniteGroup, s: &GroupSubset) -> String {
    format!("{} S={}", group.label(), describe_set(group, s))
}

pub fn describe_set(group: &FiniteGroup, s: &GroupSubset) -> String {
    let labels: Vec<&str> = s.members().iter().map(|&g| group.element_label(g)).collect();
    format!("{{{}}}", labels.join(","))
}

/// Accumulates assertions; the first failure becomes the witness.
pub(crate) struct Check {
    claim_id: String,
    instance: String,
    witness: Option<Witness>,
    skipped: bool,
    notes: Vec<String>,
}

impl Check {
    pub fn new(claim_id: &str, instance: impl Into<String>) -> Self {
        Self { claim_id: claim_id.into(), instance: instance.into(), witness: None, skipped: false, notes: Vec::new() }
    }

    pub fn fail(&mut self, w: Witness) {
        self.witness.get_or_insert(w);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn skip(&mut self, reason: impl Into<String>) {
        self.skipped = true;
        self.notes.push(reason.into());
    }

    pub fn expect(&mut self, cond: bool, context: impl FnOnce() -> String) {
        if !cond {
            self.fail(Witness::Property { context: context() });
        }
    }

    pub fn same_graph(&mut self, identity: &str, a: &Graph, b: &Graph) {
        if a.n() != b.n() {
            self.fail(Witness::Property { context: format!("{identity}: {} vs {} vertices", a.n(), b.n()) });
        } else if let Some((row, col)) = a.first_difference(b) {
            self.fail(Witness::Adjacency { identity: identity.into(), row, col });
        }
    }

    /// Asserts that `a` and `b` are (or are not) isospectral; returns the verdict.
    pub fn spectra(&mut self, context: &str, a: &Spectrum, b: &Spectrum, expect_iso: bool) -> bool {
        let c = compare(a, b, CROSS_CHECK_TOL);
        if c.isospectral != expect_iso {
            self.fail(Witness::Spectrum {
                context: context.into(),
                expected_isospectral: expect_iso,
                residual: c.max_residual.is_finite().then_some(c.max_residual),
                unmatched: c.unmatched,
            });
        }
        c.isospectral
    }

    /// Runs `body`; an error becomes a failure witness.
    pub fn run(mut self, body: impl FnOnce(&mut Self) -> Result<()>) -> VerificationReport {
        if let Err(e) = body(&mut self) {
            self.fail(Witness::Error { message: e.to_string() });
        }
        self.finish()
    }

    pub fn finish(self) -> VerificationReport {
        let outcome = if self.witness.is_some() {
            Outcome::Fail
        } else if self.skipped {
            Outcome::Skipped
        } else {
            Outcome::Pass
        };
        VerificationReport {
            claim_id: self.claim_id,
            instance: self.instance,
            outcome,
            witness: self.witness,
            notes: self.notes,
            seed: None,
        }
    }
}

//! Per-tuple verdicts for named claims.

/// Outcome of checking one claim at one parameter tuple.
///
/// `Confirmed` for an open conjecture means "no counterexample in the stated
/// range", never "proven".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Confirmed,
    /// A counterexample was found; the report carries its witness.
    Refuted,
    /// The search budget ran out before the range was exhausted.
    BudgetExceeded,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Confirmed => "CONFIRMED",
            Verdict::Refuted => "REFUTED",
            Verdict::BudgetExceeded => "BUDGET_EXCEEDED",
        }
    }
}

/// One verdict for one claim at one parameter tuple.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    /// Claim identifier, e.g. `ak-eq63` or `conj-j1`.
    pub claim: String,
    /// The parameter tuple the claim was instantiated at.
    pub params: Vec<i64>,
    pub verdict: Verdict,
    /// Serialized witness families; always present when refuted.
    pub witness: Option<String>,
    /// Wall-clock seconds spent on this tuple. Not part of the deterministic
    /// output surface; renderers omit it unless timings were requested.
    pub elapsed: f64,
}

impl VerificationReport {
    pub fn confirmed(claim: &str, params: Vec<i64>) -> Self {
        Self {
            claim: claim.to_string(),
            params,
            verdict: Verdict::Confirmed,
            witness: None,
            elapsed: 0.0,
        }
    }

    pub fn refuted(claim: &str, params: Vec<i64>, witness: String) -> Self {
        Self {
            claim: claim.to_string(),
            params,
            verdict: Verdict::Refuted,
            witness: Some(witness),
            elapsed: 0.0,
        }
    }

    pub fn budget_exceeded(claim: &str, params: Vec<i64>) -> Self {
        Self {
            claim: claim.to_string(),
            params,
            verdict: Verdict::BudgetExceeded,
            witness: None,
            elapsed: 0.0,
        }
    }
}

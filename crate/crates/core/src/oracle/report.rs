use serde::Serialize;

/// Tolerance for closed-form scalar and vector problems.
pub const VECTOR_TOLERANCE: f64 = 1e-12;

/// Tolerance for spectral problems, where two SVDs with ~1e-10 error compose.
pub const SPECTRAL_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Outcome of comparing a candidate minimizer with a pool of competitors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub candidate_objective: f64,
    pub best_competitor_objective: f64,
    /// `best_competitor_objective − candidate_objective`.
    pub margin: f64,
    pub competitors_tested: usize,
    pub tolerance: f64,
    pub verdict: Verdict,
}

impl OracleReport {
    /// Pass iff the candidate objective is finite and `margin ≥ −tolerance`.
    pub fn new(
        candidate_objective: f64,
        best_competitor_objective: f64,
        competitors_tested: usize,
        tolerance: f64,
    ) -> Self {
        let margin = best_competitor_objective - candidate_objective;
        let pass = candidate_objective.is_finite() && margin >= -tolerance;
        OracleReport {
            candidate_objective,
            best_competitor_objective,
            margin,
            competitors_tested,
            tolerance,
            verdict: if pass { Verdict::Pass } else { Verdict::Fail },
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Running minimum over competitor objectives.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Tally {
    pub best: f64,
    pub count: usize,
}

impl Tally {
    pub fn new() -> Self {
        Tally { best: f64::INFINITY, count: 0 }
    }

    pub fn push(&mut self, objective: f64) {
        self.count += 1;
        if objective < self.best || objective.is_nan() {
            self.best = objective;
        }
    }

    pub fn report(self, candidate_objective: f64, tolerance: f64) -> OracleReport {
        OracleReport::new(candidate_objective, self.best, self.count, tolerance)
    }
}

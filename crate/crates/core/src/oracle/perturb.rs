//! Random-perturbation audit of a claimed minimizer.

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::oracle::random::random_direction;
use crate::oracle::report::{OracleReport, Tally};
use crate::oracle::rng::{stream, OracleRng};
use crate::scalar::Scalar;

/// Stream offset for feasible-point draws, disjoint from perturbation trials.
const FEASIBLE_STREAM: u64 = 1 << 40;

/// Samples `candidate + Δ` with `‖Δ‖_F = radius·r`, `r ~ U(0, 1]`, in a
/// uniformly random direction and reports the best objective found.
///
/// For constrained problems the objective should return `+∞` outside the
/// feasible set; [`run_with_feasible`](Self::run_with_feasible) additionally
/// draws competitors from a feasible-point generator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerturbationCheck {
    trials: usize,
    radius: f64,
    tolerance: f64,
    seed: u64,
}

impl PerturbationCheck {
    pub const MIN_TRIALS: usize = 100;

    pub fn new(trials: usize, radius: f64, tolerance: f64, seed: u64) -> Result<Self> {
        if trials < Self::MIN_TRIALS {
            return Err(Error::Domain(format!(
                "perturbation check needs at least {} trials, got {trials}",
                Self::MIN_TRIALS
            )));
        }
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::Domain(format!("radius must be positive, got {radius}")));
        }
        Ok(PerturbationCheck { trials, radius, tolerance, seed })
    }

    pub fn run<T, F>(&self, candidate: &DenseMatrix<T>, objective: F) -> OracleReport
    where
        T: Scalar,
        F: Fn(&DenseMatrix<T>) -> T,
    {
        let mut tally = Tally::new();
        self.perturb(candidate, &objective, &mut tally);
        tally.report(objective(candidate).as_f64(), self.tolerance)
    }

    pub fn run_with_feasible<T, F, G>(
        &self,
        candidate: &DenseMatrix<T>,
        objective: F,
        feasible: G,
        feasible_draws: usize,
    ) -> OracleReport
    where
        T: Scalar,
        F: Fn(&DenseMatrix<T>) -> T,
        G: Fn(&mut OracleRng) -> DenseMatrix<T>,
    {
        let mut tally = Tally::new();
        self.perturb(candidate, &objective, &mut tally);
        for j in 0..feasible_draws {
            let mut rng = stream(self.seed, FEASIBLE_STREAM + j as u64);
            tally.push(objective(&feasible(&mut rng)).as_f64());
        }
        tally.report(objective(candidate).as_f64(), self.tolerance)
    }

    fn perturb<T, F>(&self, candidate: &DenseMatrix<T>, objective: &F, tally: &mut Tally)
    where
        T: Scalar,
        F: Fn(&DenseMatrix<T>) -> T,
    {
        let (m, n) = candidate.shape();
        for i in 0..self.trials {
            let mut rng = stream(self.seed, i as u64);
            let dir = random_direction::<T>(&mut rng, m, n);
            let r = 1.0 - rng.gen::<f64>();
            let delta = dir.scale(T::lit(self.radius * r));
            let point = candidate.add(&delta).expect("same shape");
            tally.push(objective(&point).as_f64());
        }
    }
}

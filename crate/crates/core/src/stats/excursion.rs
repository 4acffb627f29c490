//! Excursions of `W^α(s) = W(s) + αs - s²/2` above its running minimum.
//!
//! The path is simulated by an Euler scheme on a grid of step `h`. A record
//! time is a grid point where the path drops strictly below every earlier
//! value; an excursion is the stretch between two consecutive record times
//! that are more than one grid step apart, and its length is that gap.
//! This is the continuum analogue of reading component sizes off the gaps
//! between successive minima of the exploration walk.

use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::seed::rng_from_seed;

/// Default Euler step.
pub const DEFAULT_GRID_STEP: f64 = 1e-3;

/// Horizon past which the parabolic drift makes new long excursions negligible.
pub fn default_horizon(alpha: f64) -> f64 {
    f64::max(15.0, 6.0 + 3.0 * alpha)
}

/// Streaming record-minimum tracker over a path sampled on a uniform grid.
#[derive(Debug, Clone)]
pub struct ExcursionTracker {
    step: usize,
    last_record: usize,
    minimum: f64,
    lengths_in_steps: Vec<usize>,
    renewal_steps: usize,
}

impl ExcursionTracker {
    /// Starts a path at value `start` at grid index 0.
    pub fn new(start: f64) -> Self {
        Self {
            step: 0,
            last_record: 0,
            minimum: start,
            lengths_in_steps: Vec::new(),
            renewal_steps: 0,
        }
    }

    /// Feeds the value at the next grid point.
    pub fn push(&mut self, value: f64) {
        self.step += 1;
        if value < self.minimum {
            self.minimum = value;
            let gap = self.step - self.last_record;
            if gap > 1 {
                self.lengths_in_steps.push(gap);
            } else {
                self.renewal_steps += 1;
            }
            self.last_record = self.step;
        }
    }

    pub fn finish(self, grid_step: f64) -> ExcursionDecomposition {
        ExcursionDecomposition {
            grid_step,
            lengths: self.lengths_in_steps.iter().map(|&g| g as f64 * grid_step).collect(),
            renewal_steps: self.renewal_steps,
            open_tail: (self.step - self.last_record) as f64 * grid_step,
            total_steps: self.step,
        }
    }
}

/// Partition of a sampled path into closed excursions, single-step
/// record renewals, and the open stretch after the last record.
#[derive(Debug, Clone, PartialEq)]
pub struct ExcursionDecomposition {
    pub grid_step: f64,
    /// Closed excursion lengths in path order.
    pub lengths: Vec<f64>,
    pub renewal_steps: usize,
    pub open_tail: f64,
    pub total_steps: usize,
}

impl ExcursionDecomposition {
    pub fn from_path(path: &[f64], grid_step: f64) -> Self {
        let mut tracker = ExcursionTracker::new(path.first().copied().unwrap_or(0.0));
        for &v in path.iter().skip(1) {
            tracker.push(v);
        }
        tracker.finish(grid_step)
    }

    /// The `r` longest closed excursions, descending.
    pub fn longest(&self, r: usize) -> Vec<f64> {
        let mut l = self.lengths.clone();
        l.sort_by(|a, b| b.total_cmp(a));
        l.truncate(r);
        l
    }
}

/// Ordered excursion lengths of one simulated path.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExcursionSample {
    pub alpha: f64,
    /// `|γ_1| ≥ |γ_2| ≥ …`, the top `r`.
    pub ordered_lengths: Vec<f64>,
    pub grid_step: f64,
}

/// Simulates `W^α` on `[0, horizon]` and returns its `r` longest excursions.
///
/// Fails if the path is still inside an excursion at the horizon and that
/// open excursion is already long enough to enter the top `r`.
pub fn simulate_excursions(alpha: f64, grid_step: f64, horizon: f64, r: usize, seed: u64) -> Result<ExcursionSample> {
    if !(grid_step > 0.0) || !grid_step.is_finite() {
        return domain("grid_step", grid_step, "must be positive");
    }
    if !alpha.is_finite() {
        return domain("alpha", alpha, "must be finite");
    }
    if !(horizon > alpha) || !horizon.is_finite() {
        return domain("horizon", horizon, "must exceed alpha so the drift turns negative");
    }
    if r == 0 {
        return domain("r", r, "must be at least 1");
    }
    let steps = (horizon / grid_step).round() as usize;
    let sqrt_h = grid_step.sqrt();
    let mut rng = rng_from_seed(seed);
    let mut tracker = ExcursionTracker::new(0.0);
    let mut w = 0.0;
    for j in 0..steps {
        let s = j as f64 * grid_step;
        let z: f64 = StandardNormal.sample(&mut rng);
        w += (alpha - s) * grid_step + sqrt_h * z;
        tracker.push(w);
    }
    let dec = tracker.finish(grid_step);
    let top = dec.longest(r);
    let threshold = if top.len() < r { grid_step } else { top[r - 1] };
    if dec.open_tail >= threshold && dec.open_tail > grid_step {
        return Err(Error::HorizonTooShort {
            horizon,
            open_for: dec.open_tail,
        });
    }
    Ok(ExcursionSample {
        alpha,
        ordered_lengths: top,
        grid_step,
    })
}

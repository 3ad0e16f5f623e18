//! A minimal study/trial optimization engine.
//!
//! A [`Study`] runs an objective over a fixed number of trials. Parameters
//! are declared on the fly through the suggest API: the first `n_startup`
//! trials sample uniformly at random, later trials sample from the
//! Tree-structured Parzen Estimator over the completed history. Everything
//! is deterministic under a fixed seed.

mod tpe;

pub use tpe::tpe_sample;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rng::rng_from_seed;

/// Random trials before the TPE model engages.
pub const DEFAULT_N_STARTUP: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Direction {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ParamValue {
    Real(f64),
    Int(i64),
}

impl ParamValue {
    pub fn as_f64(self) -> f64 {
        match self {
            ParamValue::Real(v) => v,
            ParamValue::Int(v) => v as f64,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            ParamValue::Real(v) => v.round() as i64,
            ParamValue::Int(v) => v,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum ParamRange {
    Real { low: f64, high: f64 },
    Int { low: i64, high: i64 },
}

/// The ranges seen so far, keyed by parameter name in first-use order.
#[derive(Debug, Clone, Default, Serialize)]
pub struct SearchSpace {
    params: Vec<(String, ParamRange)>,
}

impl SearchSpace {
    fn register(&mut self, name: &str, range: ParamRange) -> Result<()> {
        match self.params.iter().find(|(n, _)| n == name) {
            None => {
                self.params.push((name.to_string(), range));
                Ok(())
            }
            Some((_, existing)) if *existing == range => Ok(()),
            Some(_) => Err(Error::InvalidRange {
                name: name.to_string(),
                low: f64::NAN,
                high: f64::NAN,
            }),
        }
    }

    pub fn params(&self) -> &[(String, ParamRange)] {
        &self.params
    }
}

/// A completed objective evaluation.
#[derive(Debug, Clone, Serialize)]
pub struct Trial {
    pub index: usize,
    pub params: Vec<(String, ParamValue)>,
    pub objective: f64,
}

impl Trial {
    pub fn param(&self, name: &str) -> Option<ParamValue> {
        self.params
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| *v)
    }
}

/// Suggest-side view of the trial being executed.
pub struct ActiveTrial<'a> {
    index: usize,
    params: Vec<(String, ParamValue)>,
    study: &'a mut StudyState,
}

struct StudyState {
    rng: ChaCha8Rng,
    completed: Vec<Trial>,
    space: SearchSpace,
    n_startup: usize,
}

impl ActiveTrial<'_> {
    pub fn index(&self) -> usize {
        self.index
    }

    /// Uniform real parameter over `[low, high]`.
    pub fn suggest_f64(&mut self, name: &str, low: f64, high: f64) -> Result<f64> {
        if low.is_nan() || high.is_nan() || low >= high {
            return Err(Error::InvalidRange {
                name: name.to_string(),
                low,
                high,
            });
        }
        self.check_duplicate(name)?;
        self.study
            .space
            .register(name, ParamRange::Real { low, high })?;
        let value = if self.use_startup(name) {
            self.study.rng.random_range(low..=high)
        } else {
            let history = self.history_for(name);
            tpe_sample(
                &history,
                low,
                high,
                tpe::GAMMA,
                tpe::N_CANDIDATES,
                &mut self.study.rng,
            )?
        };
        self.params
            .push((name.to_string(), ParamValue::Real(value)));
        Ok(value)
    }

    /// Integer parameter over the inclusive range `[low, high]`. TPE models
    /// it on the real line and rounds to the nearest in-range integer.
    pub fn suggest_int(&mut self, name: &str, low: i64, high: i64) -> Result<i64> {
        if low >= high {
            return Err(Error::InvalidRange {
                name: name.to_string(),
                low: low as f64,
                high: high as f64,
            });
        }
        self.check_duplicate(name)?;
        self.study
            .space
            .register(name, ParamRange::Int { low, high })?;
        let value = if self.use_startup(name) {
            self.study.rng.random_range(low..=high)
        } else {
            let history = self.history_for(name);
            let real = tpe_sample(
                &history,
                low as f64,
                high as f64,
                tpe::GAMMA,
                tpe::N_CANDIDATES,
                &mut self.study.rng,
            )?;
            (real.round() as i64).clamp(low, high)
        };
        self.params.push((name.to_string(), ParamValue::Int(value)));
        Ok(value)
    }

    fn check_duplicate(&self, name: &str) -> Result<()> {
        if self.params.iter().any(|(n, _)| n == name) {
            return Err(Error::DuplicateParameterName {
                name: name.to_string(),
            });
        }
        Ok(())
    }

    /// Startup trials and parameters with thin history sample uniformly.
    fn use_startup(&self, name: &str) -> bool {
        self.index < self.study.n_startup
            || self
                .study
                .completed
                .iter()
                .filter(|t| t.param(name).is_some())
                .count()
                < 2
    }

    fn history_for(&self, name: &str) -> Vec<(f64, f64)> {
        self.study
            .completed
            .iter()
            .filter_map(|t| t.param(name).map(|v| (v.as_f64(), t.objective)))
            .collect()
    }
}

/// An optimization study: direction, history, sampler state.
pub struct Study {
    direction: Direction,
    seed: u64,
    state: StudyState,
}

impl Study {
    pub fn new(direction: Direction, seed: u64) -> Self {
        Self {
            direction,
            seed,
            state: StudyState {
                rng: rng_from_seed(seed),
                completed: Vec::new(),
                space: SearchSpace::default(),
                n_startup: DEFAULT_N_STARTUP,
            },
        }
    }

    pub fn minimize(seed: u64) -> Self {
        Self::new(Direction::Minimize, seed)
    }

    pub fn maximize(seed: u64) -> Self {
        Self::new(Direction::Maximize, seed)
    }

    /// Overrides the number of startup trials. Setting this at or above the
    /// trial budget turns the study into pure random search.
    pub fn with_startup_trials(mut self, n: usize) -> Self {
        self.state.n_startup = n.max(1);
        self
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn trials(&self) -> &[Trial] {
        &self.state.completed
    }

    pub fn search_space(&self) -> &SearchSpace {
        &self.state.space
    }

    /// Runs the objective for `n_trials` sequential trials and returns the
    /// best completed trial.
    pub fn run<F>(&mut self, n_trials: usize, mut objective: F) -> Result<Trial>
    where
        F: FnMut(&mut ActiveTrial) -> Result<f64>,
    {
        if n_trials == 0 {
            return Err(Error::EmptyInput);
        }
        for _ in 0..n_trials {
            let index = self.state.completed.len();
            let mut trial = ActiveTrial {
                index,
                params: Vec::new(),
                study: &mut self.state,
            };
            let raw = objective(&mut trial).map_err(|e| Error::ObjectiveFailure {
                trial: index,
                source: Box::new(e),
            })?;
            if !raw.is_finite() {
                return Err(Error::NonFiniteObjective { trial: index });
            }
            // The sampler minimizes; flip the sign for maximize studies.
            let objective_value = match self.direction {
                Direction::Minimize => raw,
                Direction::Maximize => -raw,
            };
            let params = std::mem::take(&mut trial.params);
            self.state.completed.push(Trial {
                index,
                params,
                objective: objective_value,
            });
        }
        Ok(self.best_trial().expect("ran at least one trial"))
    }

    /// Best completed trial; ties resolve to the earliest.
    pub fn best_trial(&self) -> Option<Trial> {
        self.state
            .completed
            .iter()
            .min_by(|a, b| a.objective.total_cmp(&b.objective))
            .map(|t| Trial {
                index: t.index,
                params: t.params.clone(),
                objective: match self.direction {
                    Direction::Minimize => t.objective,
                    Direction::Maximize => -t.objective,
                },
            })
    }

    /// History (trial index, params, objective) as a JSON document.
    pub fn history_json(&self) -> String {
        #[derive(Serialize)]
        struct Row<'a> {
            index: usize,
            params: &'a [(String, ParamValue)],
            objective: f64,
        }
        let sign = match self.direction {
            Direction::Minimize => 1.0,
            Direction::Maximize => -1.0,
        };
        let rows: Vec<Row> = self
            .state
            .completed
            .iter()
            .map(|t| Row {
                index: t.index,
                params: &t.params,
                objective: sign * t.objective,
            })
            .collect();
        serde_json::to_string_pretty(&rows).expect("history serializes")
    }
}

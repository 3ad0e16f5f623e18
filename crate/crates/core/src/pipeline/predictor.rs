//! A from-scratch single-layer gated recurrent predictor.
//!
//! One recurrent cell with forget/input/output gates and a tanh candidate,
//! feeding a width-1 affine head. Training is full backpropagation through
//! time over each window, one window per optimizer step (batch size 1), with
//! adaptive-moment updates and global gradient-norm clipping at 1.0.

use serde::{Deserialize, Serialize};

use crate::analysis::{metrics, Metrics};
use crate::error::{Error, Result};
use crate::pipeline::window::SupervisedSet;
use crate::rng::rng_from_seed;
use rand::seq::SliceRandom;
use rand::Rng;

/// Hyperparameters of the recurrent predictor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PredictorConfig {
    /// Hidden-state width, 2..=64.
    pub units: usize,
    /// Window length fed to the network.
    pub input_data_points: usize,
    pub learning_rate: f64,
    pub epochs: usize,
    pub seed: u64,
}

impl PredictorConfig {
    /// Checks the invariants against the dataset the config will be used on.
    /// The window must stay under 30% of the dataset so the test split can
    /// still produce predictions.
    pub fn validate(&self, dataset_len: usize) -> Result<()> {
        if !(2..=64).contains(&self.units) {
            return Err(Error::InvalidRange {
                name: "units".into(),
                low: 2.0,
                high: 64.0,
            });
        }
        let cap = (3 * dataset_len) / 10;
        if self.input_data_points == 0 || self.input_data_points >= cap.max(1) {
            return Err(Error::WindowTooLarge {
                window: self.input_data_points,
                len: dataset_len,
            });
        }
        if self.epochs == 0 || self.learning_rate.is_nan() || self.learning_rate <= 0.0 {
            return Err(Error::InvalidRange {
                name: "learning_rate".into(),
                low: 0.0,
                high: f64::INFINITY,
            });
        }
        Ok(())
    }
}

/// Anything that maps a window of recent values to a next-value prediction.
pub trait Forecaster {
    fn window_len(&self) -> usize;
    fn predict_next(&self, window: &[f64]) -> Result<f64>;
}

/// Predictions for a batch of windows.
pub fn predict<F: Forecaster + ?Sized>(model: &F, windows: &[Vec<f64>]) -> Result<Vec<f64>> {
    windows.iter().map(|w| model.predict_next(w)).collect()
}

/// Metrics of a forecaster against a supervised set.
pub fn evaluate<F: Forecaster + ?Sized>(model: &F, set: &SupervisedSet) -> Result<Metrics> {
    let predictions = predict(model, &set.inputs)?;
    metrics(&predictions, &set.targets)
}

// Gate order within the flat parameter vector.
const GATE_I: usize = 0;
const GATE_F: usize = 1;
const GATE_G: usize = 2;
const GATE_O: usize = 3;

/// Offsets into the flat parameter vector: wx[4H] | b[4H] | wh[4H*H] | wy[H] | by.
#[derive(Clone, Copy)]
struct Layout {
    h: usize,
}

impl Layout {
    fn wx(&self, gate: usize, j: usize) -> usize {
        gate * self.h + j
    }
    fn b(&self, gate: usize, j: usize) -> usize {
        4 * self.h + gate * self.h + j
    }
    fn wh_row(&self, gate: usize, j: usize) -> usize {
        8 * self.h + (gate * self.h + j) * self.h
    }
    fn wy(&self, j: usize) -> usize {
        8 * self.h + 4 * self.h * self.h + j
    }
    fn by(&self) -> usize {
        8 * self.h + 4 * self.h * self.h + self.h
    }
    fn len(&self) -> usize {
        8 * self.h + 4 * self.h * self.h + self.h + 1
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RecurrentPredictor {
    pub units: usize,
    pub window: usize,
    /// Flat parameter vector; see `Layout`.
    params: Vec<f64>,
    /// Mean training loss per epoch.
    pub loss_history: Vec<f64>,
}

impl Forecaster for RecurrentPredictor {
    fn window_len(&self) -> usize {
        self.window
    }

    fn predict_next(&self, window: &[f64]) -> Result<f64> {
        if window.len() != self.window {
            return Err(Error::WindowWidthMismatch {
                expected: self.window,
                got: window.len(),
            });
        }
        let mut scratch = Scratch::new(self.units, window.len());
        Ok(forward(&self.params, self.units, window, &mut scratch))
    }
}

/// Per-timestep activations kept for backpropagation.
struct Scratch {
    pre: Vec<f64>,     // 4H gate pre-activations (current step)
    gates: Vec<f64>,   // T x 4H post-activation gates
    cells: Vec<f64>,   // T x H cell states
    tanh_c: Vec<f64>,  // T x H
    hidden: Vec<f64>,  // T x H
}

impl Scratch {
    fn new(h: usize, t: usize) -> Self {
        Self {
            pre: vec![0.0; 4 * h],
            gates: vec![0.0; t * 4 * h],
            cells: vec![0.0; t * h],
            tanh_c: vec![0.0; t * h],
            hidden: vec![0.0; t * h],
        }
    }

    fn ensure(&mut self, h: usize, t: usize) {
        self.pre.resize(4 * h, 0.0);
        self.gates.resize(t * 4 * h, 0.0);
        self.cells.resize(t * h, 0.0);
        self.tanh_c.resize(t * h, 0.0);
        self.hidden.resize(t * h, 0.0);
    }
}

fn sigmoid(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

/// Runs the cell over a window and returns the head output. Activations for
/// every step are left in `scratch` for the backward pass.
fn forward(params: &[f64], h: usize, window: &[f64], scratch: &mut Scratch) -> f64 {
    let layout = Layout { h };
    let t_len = window.len();
    scratch.ensure(h, t_len);
    let zero = vec![0.0; h];

    for (t, &x) in window.iter().enumerate() {
        let h_prev: &[f64] = if t == 0 {
            &zero
        } else {
            &scratch.hidden[(t - 1) * h..t * h]
        };
        for gate in 0..4 {
            for j in 0..h {
                let row = &params[layout.wh_row(gate, j)..layout.wh_row(gate, j) + h];
                let rec: f64 = row.iter().zip(h_prev).map(|(w, hp)| w * hp).sum();
                scratch.pre[gate * h + j] =
                    params[layout.wx(gate, j)] * x + params[layout.b(gate, j)] + rec;
            }
        }
        for j in 0..h {
            let i_g = sigmoid(scratch.pre[GATE_I * h + j]);
            let f_g = sigmoid(scratch.pre[GATE_F * h + j]);
            let g_g = scratch.pre[GATE_G * h + j].tanh();
            let o_g = sigmoid(scratch.pre[GATE_O * h + j]);
            let c_prev = if t == 0 { 0.0 } else { scratch.cells[(t - 1) * h + j] };
            let c = f_g * c_prev + i_g * g_g;
            let tc = c.tanh();
            let base = t * 4 * h;
            scratch.gates[base + GATE_I * h + j] = i_g;
            scratch.gates[base + GATE_F * h + j] = f_g;
            scratch.gates[base + GATE_G * h + j] = g_g;
            scratch.gates[base + GATE_O * h + j] = o_g;
            scratch.cells[t * h + j] = c;
            scratch.tanh_c[t * h + j] = tc;
            scratch.hidden[t * h + j] = o_g * tc;
        }
    }

    let h_last = &scratch.hidden[(t_len - 1) * h..t_len * h];
    let wy = &params[layout.wy(0)..layout.wy(0) + h];
    wy.iter().zip(h_last).map(|(w, hv)| w * hv).sum::<f64>() + params[layout.by()]
}

/// Backpropagation through time for one window. Returns the squared error.
fn backward(
    params: &[f64],
    grads: &mut [f64],
    h: usize,
    window: &[f64],
    target: f64,
    scratch: &Scratch,
    prediction: f64,
) -> f64 {
    let layout = Layout { h };
    let t_len = window.len();
    let err = prediction - target;
    let dy = 2.0 * err;

    let h_last = &scratch.hidden[(t_len - 1) * h..t_len * h];
    for j in 0..h {
        grads[layout.wy(j)] += dy * h_last[j];
    }
    grads[layout.by()] += dy;

    let mut dh: Vec<f64> = (0..h).map(|j| dy * params[layout.wy(j)]).collect();
    let mut dc = vec![0.0; h];
    let mut da = vec![0.0; 4 * h];
    let mut dh_prev = vec![0.0; h];

    for t in (0..t_len).rev() {
        let base = t * 4 * h;
        let x = window[t];
        for j in 0..h {
            let i_g = scratch.gates[base + GATE_I * h + j];
            let f_g = scratch.gates[base + GATE_F * h + j];
            let g_g = scratch.gates[base + GATE_G * h + j];
            let o_g = scratch.gates[base + GATE_O * h + j];
            let tc = scratch.tanh_c[t * h + j];
            let c_prev = if t == 0 { 0.0 } else { scratch.cells[(t - 1) * h + j] };

            let d_o = dh[j] * tc;
            let dcj = dc[j] + dh[j] * o_g * (1.0 - tc * tc);
            let d_f = dcj * c_prev;
            let d_i = dcj * g_g;
            let d_g = dcj * i_g;

            da[GATE_I * h + j] = d_i * i_g * (1.0 - i_g);
            da[GATE_F * h + j] = d_f * f_g * (1.0 - f_g);
            da[GATE_G * h + j] = d_g * (1.0 - g_g * g_g);
            da[GATE_O * h + j] = d_o * o_g * (1.0 - o_g);
            dc[j] = dcj * f_g;
        }

        let h_prev: Option<&[f64]> = (t > 0).then(|| &scratch.hidden[(t - 1) * h..t * h]);
        dh_prev.fill(0.0);
        for gate in 0..4 {
            for j in 0..h {
                let a = da[gate * h + j];
                grads[layout.wx(gate, j)] += a * x;
                grads[layout.b(gate, j)] += a;
                if let Some(hp) = h_prev {
                    let row_at = layout.wh_row(gate, j);
                    let (grow, wrow) = (
                        &mut grads[row_at..row_at + h],
                        &params[row_at..row_at + h],
                    );
                    for k in 0..h {
                        grow[k] += a * hp[k];
                        dh_prev[k] += wrow[k] * a;
                    }
                }
            }
        }
        std::mem::swap(&mut dh, &mut dh_prev);
    }
    err * err
}

/// Trains the recurrent predictor on a supervised set.
pub fn train_predictor(
    train: &SupervisedSet,
    config: &PredictorConfig,
) -> Result<RecurrentPredictor> {
    if train.is_empty() {
        return Err(Error::EmptyInput);
    }
    if config.input_data_points != train.window {
        return Err(Error::WindowWidthMismatch {
            expected: config.input_data_points,
            got: train.window,
        });
    }
    if !(2..=64).contains(&config.units) {
        return Err(Error::InvalidRange {
            name: "units".into(),
            low: 2.0,
            high: 64.0,
        });
    }

    let h = config.units;
    let layout = Layout { h };
    let mut rng = rng_from_seed(config.seed);
    let scale = 1.0 / (h as f64).sqrt();
    let mut params: Vec<f64> = (0..layout.len())
        .map(|_| rng.random_range(-scale..scale))
        .collect();
    // forget-gate bias starts open so early gradients flow through time
    for j in 0..h {
        params[layout.b(GATE_F, j)] = 1.0;
    }
    params[layout.by()] = 0.0;

    let mut grads = vec![0.0; layout.len()];
    let mut adam_m = vec![0.0; layout.len()];
    let mut adam_v = vec![0.0; layout.len()];
    let mut step = 0u64;
    let mut scratch = Scratch::new(h, train.window);
    let mut loss_history = Vec::with_capacity(config.epochs);
    let mut order: Vec<usize> = (0..train.len()).collect();

    const BETA1: f64 = 0.9;
    const BETA2: f64 = 0.999;
    const EPS: f64 = 1e-8;
    const CLIP: f64 = 1.0;

    for epoch in 0..config.epochs {
        // Visit windows in a fresh order every epoch. Interpolated series
        // make consecutive windows nearly identical; without shuffling the
        // correlated gradient runs stall the adaptive-moment updates.
        order.shuffle(&mut rng);
        let mut epoch_loss = 0.0;
        for &idx in &order {
            let (window, target) = (&train.inputs[idx], train.targets[idx]);
            let prediction = forward(&params, h, window, &mut scratch);
            grads.fill(0.0);
            epoch_loss += backward(&params, &mut grads, h, window, target, &scratch, prediction);

            let norm: f64 = grads.iter().map(|g| g * g).sum::<f64>().sqrt();
            if !norm.is_finite() {
                return Err(Error::NonFiniteLoss { epoch });
            }
            if norm > CLIP {
                let scale = CLIP / norm;
                for g in grads.iter_mut() {
                    *g *= scale;
                }
            }

            step += 1;
            let bc1 = 1.0 - BETA1.powi(step as i32);
            let bc2 = 1.0 - BETA2.powi(step as i32);
            for (p, (g, (m, v))) in params
                .iter_mut()
                .zip(grads.iter().zip(adam_m.iter_mut().zip(adam_v.iter_mut())))
            {
                *m = BETA1 * *m + (1.0 - BETA1) * g;
                *v = BETA2 * *v + (1.0 - BETA2) * g * g;
                *p -= config.learning_rate * (*m / bc1) / ((*v / bc2).sqrt() + EPS);
            }
        }
        let mean_loss = epoch_loss / train.len() as f64;
        if !mean_loss.is_finite() {
            return Err(Error::NonFiniteLoss { epoch });
        }
        loss_history.push(mean_loss);
    }

    Ok(RecurrentPredictor {
        units: h,
        window: train.window,
        params,
        loss_history,
    })
}

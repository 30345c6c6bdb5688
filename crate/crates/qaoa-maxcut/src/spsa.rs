//! Simultaneous perturbation stochastic approximation.
//!
//! SPSA maximizes a noisy objective with exactly two evaluations per
//! iteration, however many parameters there are. Every iteration perturbs
//! all 2p angles at once by a random sign vector of magnitude c_i, estimates
//! a gradient from the two objective values, and steps by a_i along it. Both
//! magnitudes decay as the run progresses:
//!
//! ```text
//! a_i = a_start / (i + 1)^decay
//! c_i = max(c_start / (i + 1)^decay, c_floor)
//! ```
//!
//! The floor keeps the two-sided divisor in the gradient estimate away from
//! zero in long runs.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::maxcut::ScoredBitstring;
use crate::qaoa::{Evaluation, QaoaParams};

/// Run hyperparameters for one optimization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpsaConfig {
    /// Number of optimization iterations; each costs two evaluations.
    pub n_iterations: usize,
    /// Initial step size a_0.
    pub a_start: f64,
    /// Initial perturbation magnitude c_0.
    pub c_start: f64,
    /// Shared decay exponent for both gain sequences.
    pub decay: f64,
    /// Lower bound on the perturbation magnitude.
    pub c_floor: f64,
    /// Parameters initialize uniformly in [-init_half_range, init_half_range].
    pub init_half_range: f64,
    /// Master RNG seed; fixes the whole run.
    pub seed: u64,
}

impl Default for SpsaConfig {
    fn default() -> Self {
        SpsaConfig {
            n_iterations: 100,
            a_start: 0.25,
            c_start: 0.25,
            decay: 0.5,
            c_floor: 0.01,
            init_half_range: 0.1,
            seed: 42,
        }
    }
}

impl SpsaConfig {
    pub fn validate(&self) -> Result<(), Error> {
        fn check(ok: bool, message: &str) -> Result<(), Error> {
            if ok {
                Ok(())
            } else {
                Err(Error::InvalidConfig(message.into()))
            }
        }
        check(self.n_iterations >= 1, "n_iterations must be at least 1")?;
        check(
            self.a_start.is_finite() && self.a_start > 0.0,
            "a_start must be positive",
        )?;
        check(
            self.c_start.is_finite() && self.c_start > 0.0,
            "c_start must be positive",
        )?;
        check(
            self.decay.is_finite() && self.decay >= 0.0,
            "decay must be non-negative",
        )?;
        check(
            self.c_floor.is_finite() && self.c_floor > 0.0,
            "c_floor must be positive",
        )?;
        check(
            self.init_half_range.is_finite() && self.init_half_range >= 0.0,
            "init_half_range must be non-negative",
        )?;
        Ok(())
    }
}

/// Precomputed per-iteration step sizes and perturbation magnitudes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GainSchedule {
    a: Vec<f64>,
    c: Vec<f64>,
}

impl GainSchedule {
    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn c(&self) -> &[f64] {
        &self.c
    }
}

/// Evaluate both gain sequences for every iteration of `config`.
pub fn gain_schedule(config: &SpsaConfig) -> Result<GainSchedule, Error> {
    config.validate()?;
    let mut a = Vec::with_capacity(config.n_iterations);
    let mut c = Vec::with_capacity(config.n_iterations);
    for i in 0..config.n_iterations {
        let scale = ((i + 1) as f64).powf(config.decay);
        a.push(config.a_start / scale);
        c.push((config.c_start / scale).max(config.c_floor));
    }
    Ok(GainSchedule { a, c })
}

/// The signed perturbation applied to each angle in one iteration. Every
/// entry is +c_i or -c_i.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Perturbation {
    delta_gammas: Vec<f64>,
    delta_betas: Vec<f64>,
}

impl Perturbation {
    pub fn delta_gammas(&self) -> &[f64] {
        &self.delta_gammas
    }

    pub fn delta_betas(&self) -> &[f64] {
        &self.delta_betas
    }

    /// All 2p entries as one flat vector, gammas first.
    pub fn flatten(&self) -> Vec<f64> {
        self.delta_gammas
            .iter()
            .chain(&self.delta_betas)
            .copied()
            .collect()
    }
}

/// Draw random starting angles, each uniform in [-half_range, half_range].
pub fn init_params<R: Rng + ?Sized>(
    p: usize,
    half_range: f64,
    rng: &mut R,
) -> Result<QaoaParams, Error> {
    if p == 0 {
        return Err(Error::InvalidParams("depth p must be at least 1".into()));
    }
    if !half_range.is_finite() || half_range < 0.0 {
        return Err(Error::InvalidConfig(
            "init_half_range must be non-negative".into(),
        ));
    }
    let mut draw = |_| rng.random_range(-half_range..=half_range);
    let gammas: Vec<f64> = (0..p).map(&mut draw).collect();
    let betas: Vec<f64> = (0..p).map(&mut draw).collect();
    QaoaParams::new(gammas, betas)
}

fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    if rng.random_bool(0.5) {
        1.0
    } else {
        -1.0
    }
}

/// Perturb every angle by an independent random sign times `c_i`, giving
/// the plus and minus parameter vectors evaluated this iteration.
pub fn perturb<R: Rng + ?Sized>(
    params: &QaoaParams,
    c_i: f64,
    rng: &mut R,
) -> Result<(QaoaParams, QaoaParams, Perturbation), Error> {
    debug_assert!(c_i.is_finite() && c_i > 0.0);
    let delta = Perturbation {
        delta_gammas: (0..params.depth()).map(|_| random_sign(rng) * c_i).collect(),
        delta_betas: (0..params.depth()).map(|_| random_sign(rng) * c_i).collect(),
    };
    let shift = |xs: &[f64], ds: &[f64], sign: f64| -> Vec<f64> {
        xs.iter().zip(ds).map(|(x, d)| x + sign * d).collect()
    };
    let plus = QaoaParams::new(
        shift(params.gammas(), &delta.delta_gammas, 1.0),
        shift(params.betas(), &delta.delta_betas, 1.0),
    )?;
    let minus = QaoaParams::new(
        shift(params.gammas(), &delta.delta_gammas, -1.0),
        shift(params.betas(), &delta.delta_betas, -1.0),
    )?;
    Ok((plus, minus, delta))
}

/// Two-evaluation gradient estimate: component j is
/// (f_plus - f_minus) / (2 delta_j), gammas first.
pub fn gradient_estimate(
    f_plus: f64,
    f_minus: f64,
    delta: &Perturbation,
) -> Result<Vec<f64>, Error> {
    let diff = f_plus - f_minus;
    delta
        .flatten()
        .into_iter()
        .enumerate()
        .map(|(j, d)| {
            if d == 0.0 {
                Err(Error::ZeroPerturbation(j))
            } else {
                Ok(diff / (2.0 * d))
            }
        })
        .collect()
}

/// Ascent step: add a_i times the gradient to every angle.
pub fn update_params(
    params: &QaoaParams,
    a_i: f64,
    gradient: &[f64],
) -> Result<QaoaParams, Error> {
    let p = params.depth();
    if gradient.len() != 2 * p {
        return Err(Error::GradientLength {
            got: gradient.len(),
            expected: 2 * p,
        });
    }
    let gammas = params
        .gammas()
        .iter()
        .zip(&gradient[..p])
        .map(|(x, g)| x + a_i * g)
        .collect();
    let betas = params
        .betas()
        .iter()
        .zip(&gradient[p..])
        .map(|(x, g)| x + a_i * g)
        .collect();
    QaoaParams::new(gammas, betas)
}

/// Everything recorded about one optimization iteration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IterationRecord {
    /// Zero-based iteration index.
    pub iteration: usize,
    pub a: f64,
    pub c: f64,
    pub f_plus: f64,
    pub f_minus: f64,
    /// Estimated gradient, gammas first.
    pub gradient: Vec<f64>,
    /// Parameters after this iteration's update.
    pub params: QaoaParams,
}

/// Full record of an optimization run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpsaTrace {
    pub initial_params: QaoaParams,
    pub iterations: Vec<IterationRecord>,
    pub final_params: QaoaParams,
    /// Highest-scoring bitstring observed across every sample set the
    /// objective drew; `None` when the objective never samples.
    pub best_observed: Option<ScoredBitstring>,
}

/// Run the full SPSA loop against an objective.
///
/// The objective receives the candidate parameters and a dedicated RNG
/// stream; each iteration's plus and minus evaluations get independent
/// streams derived from the master seed, so the trace is reproducible
/// regardless of how many draws an evaluation consumes.
pub fn optimize<F>(p: usize, config: &SpsaConfig, objective: F) -> Result<SpsaTrace, Error>
where
    F: FnMut(&QaoaParams, &mut ChaCha8Rng) -> Result<Evaluation, Error>,
{
    optimize_with(p, config, objective, |_| {})
}

/// [`optimize`] with a per-iteration observer, called as each record is
/// produced (the CLI streams its log from this).
pub fn optimize_with<F, O>(
    p: usize,
    config: &SpsaConfig,
    mut objective: F,
    mut on_iteration: O,
) -> Result<SpsaTrace, Error>
where
    F: FnMut(&QaoaParams, &mut ChaCha8Rng) -> Result<Evaluation, Error>,
    O: FnMut(&IterationRecord),
{
    config.validate()?;
    let schedule = gain_schedule(config)?;
    let mut master = ChaCha8Rng::seed_from_u64(config.seed);
    let initial_params = init_params(p, config.init_half_range, &mut master)?;

    let mut params = initial_params.clone();
    let mut best: Option<ScoredBitstring> = None;
    let mut iterations = Vec::with_capacity(config.n_iterations);
    for i in 0..config.n_iterations {
        let (plus, minus, delta) = perturb(&params, schedule.c()[i], &mut master)?;
        let mut plus_rng = ChaCha8Rng::seed_from_u64(master.next_u64());
        let mut minus_rng = ChaCha8Rng::seed_from_u64(master.next_u64());
        let eval_plus = objective(&plus, &mut plus_rng)?;
        let eval_minus = objective(&minus, &mut minus_rng)?;
        for observed in [&eval_plus.best_sample, &eval_minus.best_sample]
            .into_iter()
            .flatten()
        {
            if best.as_ref().is_none_or(|b| observed.score > b.score) {
                best = Some(observed.clone());
            }
        }
        let gradient = gradient_estimate(eval_plus.value, eval_minus.value, &delta)?;
        params = update_params(&params, schedule.a()[i], &gradient)?;
        let record = IterationRecord {
            iteration: i,
            a: schedule.a()[i],
            c: schedule.c()[i],
            f_plus: eval_plus.value,
            f_minus: eval_minus.value,
            gradient,
            params: params.clone(),
        };
        on_iteration(&record);
        iterations.push(record);
    }
    Ok(SpsaTrace {
        initial_params,
        iterations,
        final_params: params,
        best_observed: best,
    })
}

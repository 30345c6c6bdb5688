//! The QAOA circuit for Max-Cut and its expectation value.
//!
//! The circuit layout is fixed by the graph: one Hadamard layer, then `p`
//! stages of a cost layer (a CNOT, Rz(gamma), CNOT block per edge) followed
//! by a mixer layer (Rx(2 beta) on every qubit). Measuring the resulting
//! state gives a distribution over colorings whose average cut score is the
//! objective the optimizer maximizes.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::maxcut::{Graph, ScoredBitstring};
use crate::statevector::{Gate1Q, SampleSet, StateVector};

/// The 2p classical angles driving a depth-p circuit: one gamma (cost
/// layer) and one beta (mixer layer) per stage.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QaoaParams {
    gammas: Vec<f64>,
    betas: Vec<f64>,
}

impl QaoaParams {
    /// Build a parameter set; gamma and beta must have the same nonzero
    /// length and contain only finite values.
    pub fn new(gammas: Vec<f64>, betas: Vec<f64>) -> Result<Self, Error> {
        if gammas.is_empty() || gammas.len() != betas.len() {
            return Err(Error::InvalidParams(format!(
                "need equal nonzero gamma/beta counts, got {} and {}",
                gammas.len(),
                betas.len()
            )));
        }
        if gammas.iter().chain(&betas).any(|x| !x.is_finite()) {
            return Err(Error::InvalidParams("angles must be finite".into()));
        }
        Ok(QaoaParams { gammas, betas })
    }

    /// All-zero angles at depth `p`; the circuit then reduces to the
    /// Hadamard layer alone.
    pub fn zeros(p: usize) -> Result<Self, Error> {
        QaoaParams::new(vec![0.0; p], vec![0.0; p])
    }

    /// Circuit depth p.
    pub fn depth(&self) -> usize {
        self.gammas.len()
    }

    pub fn gammas(&self) -> &[f64] {
        &self.gammas
    }

    pub fn betas(&self) -> &[f64] {
        &self.betas
    }

    /// The 2p angles as one flat vector, gammas first.
    pub fn flatten(&self) -> Vec<f64> {
        self.gammas.iter().chain(&self.betas).copied().collect()
    }
}

/// Build and run the circuit for `graph` at the given angles, returning the
/// final register state.
pub fn run_circuit(graph: &Graph, params: &QaoaParams) -> Result<StateVector, Error> {
    let n = graph.n_vertices();
    let mut state = StateVector::new_zero(n)?;
    let h = Gate1Q::hadamard();
    for q in 0..n {
        state.apply_1q(&h, q)?;
    }
    for stage in 0..params.depth() {
        let rz = Gate1Q::rz(params.gammas()[stage])?;
        for &(u, v) in graph.edges() {
            state.apply_cnot(u, v)?;
            state.apply_1q(&rz, v)?;
            state.apply_cnot(u, v)?;
        }
        let rx = Gate1Q::rx(2.0 * params.betas()[stage])?;
        for q in 0..n {
            state.apply_1q(&rx, q)?;
        }
    }
    Ok(state)
}

/// Exact expectation of the cut score under the circuit's full output
/// distribution. No sampling noise; used as an oracle and for `--exact`.
pub fn exact_expectation_value(graph: &Graph, params: &QaoaParams) -> Result<f64, Error> {
    graph.exact_expectation(&run_circuit(graph, params)?.probabilities())
}

/// Run the circuit and measure it `n_samples` times.
pub fn sample_circuit<R: Rng + ?Sized>(
    graph: &Graph,
    params: &QaoaParams,
    n_samples: usize,
    rng: &mut R,
) -> Result<SampleSet, Error> {
    run_circuit(graph, params)?.sample(n_samples, rng)
}

/// Monte Carlo estimate of the expectation from `n_samples` measurements.
pub fn estimate_expectation<R: Rng + ?Sized>(
    graph: &Graph,
    params: &QaoaParams,
    n_samples: usize,
    rng: &mut R,
) -> Result<f64, Error> {
    graph.sample_expectation(&sample_circuit(graph, params, n_samples, rng)?)
}

/// One objective evaluation as seen by the optimizer: the scalar value plus
/// the best bitstring observed while computing it (absent for noiseless
/// objectives that never sample).
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub value: f64,
    pub best_sample: Option<ScoredBitstring>,
}

/// Objective that estimates the expectation from a fresh sample set on
/// every call, reporting the best bitstring it saw.
pub fn sampled_objective(
    graph: &Graph,
    n_samples: usize,
) -> impl Fn(&QaoaParams, &mut ChaCha8Rng) -> Result<Evaluation, Error> + '_ {
    move |params, rng| {
        let samples = sample_circuit(graph, params, n_samples, rng)?;
        Ok(Evaluation {
            value: graph.sample_expectation(&samples)?,
            best_sample: graph.best_sampled(&samples)?,
        })
    }
}

/// Objective that computes the exact expectation; deterministic, never
/// observes a bitstring.
pub fn exact_objective(
    graph: &Graph,
) -> impl Fn(&QaoaParams, &mut ChaCha8Rng) -> Result<Evaluation, Error> + '_ {
    move |params, _rng| {
        Ok(Evaluation {
            value: exact_expectation_value(graph, params)?,
            best_sample: None,
        })
    }
}

//! Max-Cut via QAOA, trained with SPSA, simulated on a dense state vector.
//!
//! Everything runs in-process: the quantum circuit is simulated exactly with
//! 2^n complex amplitudes, measurement outcomes are drawn from its output
//! distribution, and the classical optimizer only ever sees noisy objective
//! values, the way it would against real hardware.
//!
//! The crate splits along those lines:
//!
//! - [`statevector`]: the n-qubit register and its gate kernels.
//! - [`maxcut`]: graphs, bitstring scoring, expectation values, and an
//!   exhaustive oracle for small instances.
//! - [`qaoa`]: circuit construction and exact or sampled expectations.
//! - [`spsa`]: the two-evaluation stochastic optimizer and its run trace.
//! - [`cli`]: the `solve` / `brute` / `evaluate` command-line front end.
//!
//! Start with the runnable examples (`cargo run --example solve_ring`) or
//! drive the library directly:
//!
//! ```
//! use qaoa_maxcut::{optimize, sampled_objective, Graph, SpsaConfig};
//!
//! // The four-vertex ring; its maximum cut is 4.
//! let graph = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)])?;
//! let config = SpsaConfig {
//!     n_iterations: 5,
//!     seed: 1,
//!     ..SpsaConfig::default()
//! };
//! let trace = optimize(2, &config, sampled_objective(&graph, 500))?;
//! let best = trace.best_observed.expect("sampled run observes bitstrings");
//! assert!(best.score <= graph.n_edges());
//! # Ok::<(), qaoa_maxcut::Error>(())
//! ```

pub mod cli;
pub mod error;
pub mod maxcut;
pub mod qaoa;
pub mod spsa;
pub mod statevector;

pub use error::Error;
pub use maxcut::{Bitstring, Graph, ScoredBitstring};
pub use qaoa::{
    estimate_expectation, exact_expectation_value, exact_objective, run_circuit, sample_circuit,
    sampled_objective, Evaluation, QaoaParams,
};
pub use spsa::{
    gain_schedule, init_params, optimize, optimize_with, GainSchedule, IterationRecord,
    Perturbation, SpsaConfig, SpsaTrace,
};
pub use statevector::{Gate1Q, SampleSet, StateVector};

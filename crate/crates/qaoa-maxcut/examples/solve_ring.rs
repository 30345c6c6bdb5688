//! End-to-end solve of the four-vertex ring.
//!
//! Runs the full pipeline: random initial angles, 100 SPSA iterations with
//! 10000 measurements per objective evaluation, then a final readout of the
//! trained circuit, compared against the exhaustive optimum.
//!
//! Run with: cargo run --release --example solve_ring

use qaoa_maxcut::{optimize_with, sampled_objective, Graph, SpsaConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), qaoa_maxcut::Error> {
    let graph = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)])?;
    let config = SpsaConfig {
        n_iterations: 100,
        seed: 1,
        ..SpsaConfig::default()
    };
    let depth = 2;
    let n_samples = 10_000;

    println!(
        "ring graph: {} vertices, {} edges, depth p = {depth}",
        graph.n_vertices(),
        graph.n_edges()
    );

    let trace = optimize_with(
        depth,
        &config,
        sampled_objective(&graph, n_samples),
        |record| {
            if record.iteration % 10 == 0 {
                println!(
                    "Iteration: {} Exp(+): {} Exp(-): {}",
                    record.iteration, record.f_plus, record.f_minus
                );
            }
        },
    )?;

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(1));
    let final_samples =
        qaoa_maxcut::sample_circuit(&graph, &trace.final_params, n_samples, &mut rng)?;
    let final_expectation = graph.sample_expectation(&final_samples)?;

    println!();
    println!("final gammas: {:?}", trace.final_params.gammas());
    println!("final betas:  {:?}", trace.final_params.betas());
    println!("final sampled expectation: {final_expectation:.4}");
    if let Some(best) = &trace.best_observed {
        println!("best observed bitstring: {} (cut {})", best.bitstring, best.score);
    }

    let (max_score, argmax) = graph.brute_force_max()?;
    let rendered: Vec<String> = argmax.iter().map(|b| b.to_string()).collect();
    println!("exhaustive optimum: {max_score} ({})", rendered.join(" "));
    Ok(())
}

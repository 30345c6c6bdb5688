//! Sampled expectation estimates converging to the exact value.
//!
//! The simulator gives us the full output distribution, so the exact
//! expectation is available as a reference; a hardware run only ever sees
//! the sampled estimate. This prints both for growing shot counts.
//!
//! Run with: cargo run --release --example exact_vs_sampled

use qaoa_maxcut::{estimate_expectation, exact_expectation_value, Graph, QaoaParams};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), qaoa_maxcut::Error> {
    let graph = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)])?;
    let params = QaoaParams::new(vec![1.2], vec![-0.4])?;

    let exact = exact_expectation_value(&graph, &params)?;
    println!("exact expectation: {exact:.6}\n");
    println!("{:>10} {:>12} {:>12}", "samples", "estimate", "|error|");
    for exponent in 1..=6 {
        let n_samples = 10usize.pow(exponent);
        let mut rng = ChaCha8Rng::seed_from_u64(exponent as u64);
        let estimate = estimate_expectation(&graph, &params, n_samples, &mut rng)?;
        println!(
            "{n_samples:>10} {estimate:>12.6} {:>12.6}",
            (estimate - exact).abs()
        );
    }
    Ok(())
}

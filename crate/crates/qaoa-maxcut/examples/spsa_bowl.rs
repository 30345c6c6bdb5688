//! The SPSA optimizer in isolation, on a smooth concave bowl.
//!
//! No quantum circuit here: the objective is -(gamma - 1)^2 - (beta - 1)^2,
//! maximized at (1, 1). Useful for watching the gain schedules and the
//! two-evaluation gradient estimate do their job on a problem whose answer
//! is obvious.
//!
//! Run with: cargo run --example spsa_bowl

use qaoa_maxcut::{optimize_with, Evaluation, QaoaParams, SpsaConfig};
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), qaoa_maxcut::Error> {
    let bowl = |params: &QaoaParams, _rng: &mut ChaCha8Rng| {
        let g = params.gammas()[0];
        let b = params.betas()[0];
        Ok(Evaluation {
            value: -(g - 1.0).powi(2) - (b - 1.0).powi(2),
            best_sample: None,
        })
    };

    let config = SpsaConfig {
        n_iterations: 200,
        seed: 3,
        ..SpsaConfig::default()
    };
    println!("maximizing -(g-1)^2 - (b-1)^2 from a random start near (0, 0)\n");
    println!("{:>5} {:>9} {:>9} {:>10} {:>10}", "iter", "a", "c", "gamma", "beta");
    let trace = optimize_with(1, &config, bowl, |record| {
        if record.iteration % 20 == 0 || record.iteration == 199 {
            println!(
                "{:>5} {:>9.5} {:>9.5} {:>10.5} {:>10.5}",
                record.iteration,
                record.a,
                record.c,
                record.params.gammas()[0],
                record.params.betas()[0]
            );
        }
    })?;

    let g = trace.final_params.gammas()[0];
    let b = trace.final_params.betas()[0];
    println!("\nfinal point: ({g:.5}, {b:.5}), optimum is (1, 1)");
    println!(
        "distance from optimum: {:.5}",
        ((g - 1.0).powi(2) + (b - 1.0).powi(2)).sqrt()
    );
    Ok(())
}

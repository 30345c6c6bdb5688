//! ASCII map of the depth-1 expectation landscape for the four-vertex ring.
//!
//! Scans a (gamma, beta) grid and shades each cell by the exact expectation
//! value. The optimizer is climbing exactly this surface (through sampling
//! noise); at depth 1 its peak sits at 3.0 of a possible 4.
//!
//! Run with: cargo run --release --example landscape

use qaoa_maxcut::{exact_expectation_value, Graph, QaoaParams};

const SHADES: &[u8] = b" .:-=+*#%@";

fn main() -> Result<(), qaoa_maxcut::Error> {
    let graph = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)])?;
    let steps = 41;
    let half = std::f64::consts::PI;

    println!("gamma in [-pi, pi] left to right, beta in [-pi, pi] top to bottom\n");
    for row in 0..steps {
        let beta = -half + 2.0 * half * row as f64 / (steps - 1) as f64;
        let mut line = String::new();
        for col in 0..steps {
            let gamma = -half + 2.0 * half * col as f64 / (steps - 1) as f64;
            let params = QaoaParams::new(vec![gamma], vec![beta])?;
            let value = exact_expectation_value(&graph, &params)?;
            let shade = (value / graph.n_edges() as f64 * (SHADES.len() - 1) as f64)
                .round() as usize;
            line.push(SHADES[shade.min(SHADES.len() - 1)] as char);
        }
        println!("{line}");
    }

    // Finer scan off-screen to locate the actual peak.
    let fine = 161;
    let mut peak = f64::MIN;
    let mut peak_point = (0.0, 0.0);
    for row in 0..fine {
        let beta = -half + 2.0 * half * row as f64 / (fine - 1) as f64;
        for col in 0..fine {
            let gamma = -half + 2.0 * half * col as f64 / (fine - 1) as f64;
            let params = QaoaParams::new(vec![gamma], vec![beta])?;
            let value = exact_expectation_value(&graph, &params)?;
            if value > peak {
                peak = value;
                peak_point = (gamma, beta);
            }
        }
    }
    println!(
        "\npeak: {peak:.4} at gamma = {:.3}, beta = {:.3}",
        peak_point.0, peak_point.1
    );
    Ok(())
}

//! Tour of the dense simulator: gates, amplitudes, probabilities, sampling.
//!
//! Run with: cargo run --example statevector_basics

use qaoa_maxcut::{Bitstring, Gate1Q, StateVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), qaoa_maxcut::Error> {
    // Two qubits start in |00>.
    let mut state = StateVector::new_zero(2)?;
    println!("fresh register: {:?}", state.amplitudes());

    // Hadamard on qubit 0 splits the amplitude.
    state.apply_1q(&Gate1Q::hadamard(), 0)?;
    println!("after H on qubit 0: {:?}", state.amplitudes());

    // CNOT entangles the pair: (|00> + |11>)/sqrt(2).
    state.apply_cnot(0, 1)?;
    println!("after CNOT(0 -> 1): {:?}", state.amplitudes());
    println!("probabilities: {:?}", state.probabilities());

    // Only 00 and 11 ever show up when we measure.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let samples = state.sample(1000, &mut rng)?;
    println!("\n1000 measurements:");
    for (index, count) in samples.iter() {
        println!("  {}: {count}", Bitstring::from_index(index, 2));
    }

    // Rotations compose additively; two quarter turns are a half turn.
    let mut a = StateVector::new_zero(1)?;
    a.apply_1q(&Gate1Q::rx(std::f64::consts::FRAC_PI_2)?, 0)?;
    a.apply_1q(&Gate1Q::rx(std::f64::consts::FRAC_PI_2)?, 0)?;
    let mut b = StateVector::new_zero(1)?;
    b.apply_1q(&Gate1Q::rx(std::f64::consts::PI)?, 0)?;
    println!("\nrx(pi/2) twice: {:?}", a.amplitudes());
    println!("rx(pi) once:    {:?}", b.amplitudes());
    Ok(())
}

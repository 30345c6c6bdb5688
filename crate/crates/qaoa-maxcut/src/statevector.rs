//! Dense state-vector simulation of an n-qubit register.
//!
//! The register is a vector of 2^n complex amplitudes. Bit `i` of a basis
//! index holds the value of qubit `i`, with qubit 0 in the least significant
//! bit, so basis index 6 on three qubits is the assignment
//! `z0 = 0, z1 = 1, z2 = 1`.
//!
//! Gates are applied in place by walking amplitude pairs with bit masks;
//! nothing is ever materialized as a 2^n x 2^n matrix.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::distr::weighted::WeightedIndex;
use rand::prelude::*;

use crate::error::Error;

/// Largest register the dense simulator will allocate (2^24 amplitudes).
pub const MAX_QUBITS: usize = 24;

/// A single-qubit gate as a 2x2 complex matrix.
///
/// Constructors cover the gate set needed here: Hadamard and the x/z
/// rotations. All of them produce unitary matrices by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gate1Q {
    matrix: [[Complex64; 2]; 2],
}

impl Gate1Q {
    /// Hadamard: (1/sqrt(2)) [[1, 1], [1, -1]].
    pub fn hadamard() -> Self {
        let f = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Gate1Q {
            matrix: [[f, f], [f, -f]],
        }
    }

    /// Rotation about the x axis:
    /// [[cos(theta/2), -i sin(theta/2)], [-i sin(theta/2), cos(theta/2)]].
    pub fn rx(theta: f64) -> Result<Self, Error> {
        if !theta.is_finite() {
            return Err(Error::NonFiniteAngle(theta));
        }
        let cos = Complex64::new((theta / 2.0).cos(), 0.0);
        let misin = Complex64::new(0.0, -(theta / 2.0).sin());
        Ok(Gate1Q {
            matrix: [[cos, misin], [misin, cos]],
        })
    }

    /// Rotation about the z axis: diag(e^{-i phi/2}, e^{+i phi/2}).
    pub fn rz(phi: f64) -> Result<Self, Error> {
        if !phi.is_finite() {
            return Err(Error::NonFiniteAngle(phi));
        }
        let zero = Complex64::new(0.0, 0.0);
        Ok(Gate1Q {
            matrix: [
                [Complex64::from_polar(1.0, -phi / 2.0), zero],
                [zero, Complex64::from_polar(1.0, phi / 2.0)],
            ],
        })
    }

    /// The matrix entries, row major.
    pub fn matrix(&self) -> &[[Complex64; 2]; 2] {
        &self.matrix
    }
}

/// The full quantum state of an n-qubit register.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// A fresh register in |00...0>: amplitude 1 at basis index 0.
    ///
    /// Fails for `n_qubits = 0` and for registers past [`MAX_QUBITS`], where
    /// the dense representation stops being reasonable.
    pub fn new_zero(n_qubits: usize) -> Result<Self, Error> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::QubitCount {
                n: n_qubits,
                max: MAX_QUBITS,
            });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amplitudes[0] = Complex64::new(1.0, 0.0);
        Ok(StateVector {
            n_qubits,
            amplitudes,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    /// The 2^n complex amplitudes, indexed by basis state.
    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Sum of |amplitude|^2; 1 for any normalized state.
    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    fn check_qubit(&self, index: usize) -> Result<(), Error> {
        if index >= self.n_qubits {
            return Err(Error::QubitIndex {
                index,
                n_qubits: self.n_qubits,
            });
        }
        Ok(())
    }

    /// Apply a single-qubit gate to `target`.
    ///
    /// Walks every amplitude pair that differs only in the target bit and
    /// replaces it with the gate-matrix product.
    pub fn apply_1q(&mut self, gate: &Gate1Q, target: usize) -> Result<(), Error> {
        self.check_qubit(target)?;
        let [[m00, m01], [m10, m11]] = *gate.matrix();
        let step = 1 << target;
        for base in (0..self.amplitudes.len()).step_by(2 * step) {
            for offset in 0..step {
                let lo = base + offset; // target bit 0
                let hi = lo | step; // target bit 1
                let a = self.amplitudes[lo];
                let b = self.amplitudes[hi];
                self.amplitudes[lo] = m00 * a + m01 * b;
                self.amplitudes[hi] = m10 * a + m11 * b;
            }
        }
        Ok(())
    }

    /// Apply CNOT: flip `target` wherever the control bit is set.
    pub fn apply_cnot(&mut self, control: usize, target: usize) -> Result<(), Error> {
        self.check_qubit(control)?;
        self.check_qubit(target)?;
        if control == target {
            return Err(Error::ControlEqualsTarget(control));
        }
        let control_mask = 1 << control;
        let target_mask = 1 << target;
        for k in 0..self.amplitudes.len() {
            // Visit each swapped pair once, from its target-bit-0 side.
            if k & control_mask != 0 && k & target_mask == 0 {
                self.amplitudes.swap(k, k | target_mask);
            }
        }
        Ok(())
    }

    /// Measurement distribution: entry k is |amplitude_k|^2.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Draw `n_samples` independent measurements of the whole register.
    pub fn sample<R: Rng + ?Sized>(
        &self,
        n_samples: usize,
        rng: &mut R,
    ) -> Result<SampleSet, Error> {
        if n_samples == 0 {
            return Err(Error::ZeroSamples);
        }
        let dist = WeightedIndex::new(self.probabilities())
            .expect("normalized state has valid sampling weights");
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        for _ in 0..n_samples {
            *counts.entry(dist.sample(rng)).or_insert(0) += 1;
        }
        Ok(SampleSet {
            n_qubits: self.n_qubits,
            counts,
        })
    }
}

/// Histogram of measured basis states: basis index -> observation count.
///
/// Keys are basis indices under the same bit convention as [`StateVector`];
/// rendering them as bitstrings is the concern of callers that know about
/// graphs and colorings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleSet {
    n_qubits: usize,
    counts: BTreeMap<usize, u64>,
}

impl SampleSet {
    /// Build a sample set from explicit (index, count) pairs.
    ///
    /// Duplicate indices are merged; zero counts are dropped.
    pub fn from_index_counts(
        n_qubits: usize,
        entries: impl IntoIterator<Item = (usize, u64)>,
    ) -> Result<Self, Error> {
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        for (index, count) in entries {
            if n_qubits >= usize::BITS as usize || index >> n_qubits != 0 {
                return Err(Error::BasisIndex { index, n_qubits });
            }
            if count > 0 {
                *counts.entry(index).or_insert(0) += count;
            }
        }
        Ok(SampleSet { n_qubits, counts })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    /// Total number of observations.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Observations of one basis index.
    pub fn count(&self, index: usize) -> u64 {
        self.counts.get(&index).copied().unwrap_or(0)
    }

    /// Number of distinct basis states observed.
    pub fn n_distinct(&self) -> usize {
        self.counts.len()
    }

    /// Iterate (basis index, count) in index order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().map(|(&k, &v)| (k, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand_chacha::ChaCha8Rng;

    const TOL: f64 = 1e-10;

    fn assert_close(a: Complex64, b: Complex64) {
        assert!((a - b).norm() < TOL, "{a} != {b}");
    }

    /// A random normalized state, built without any gate kernels.
    fn random_state(n_qubits: usize, rng: &mut ChaCha8Rng) -> StateVector {
        let mut state = StateVector::new_zero(n_qubits).unwrap();
        for amp in &mut state.amplitudes {
            *amp = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        }
        let norm = state.norm_sqr().sqrt();
        for amp in &mut state.amplitudes {
            *amp /= norm;
        }
        state
    }

    #[test]
    fn zero_state_single_qubit() {
        let state = StateVector::new_zero(1).unwrap();
        assert_eq!(state.amplitudes(), &[
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0)
        ]);
    }

    #[test]
    fn zero_state_four_qubits() {
        let state = StateVector::new_zero(4).unwrap();
        assert_eq!(state.amplitudes().len(), 16);
        assert_eq!(state.amplitudes()[0], Complex64::new(1.0, 0.0));
        for amp in &state.amplitudes()[1..] {
            assert_eq!(*amp, Complex64::new(0.0, 0.0));
        }
    }

    #[test]
    fn zero_qubits_rejected() {
        assert!(matches!(
            StateVector::new_zero(0),
            Err(Error::QubitCount { n: 0, .. })
        ));
        assert!(matches!(
            StateVector::new_zero(MAX_QUBITS + 1),
            Err(Error::QubitCount { .. })
        ));
    }

    #[test]
    fn zero_rotations_are_identity() {
        for gate in [Gate1Q::rz(0.0).unwrap(), Gate1Q::rx(0.0).unwrap()] {
            let m = gate.matrix();
            assert_close(m[0][0], Complex64::new(1.0, 0.0));
            assert_close(m[0][1], Complex64::new(0.0, 0.0));
            assert_close(m[1][0], Complex64::new(0.0, 0.0));
            assert_close(m[1][1], Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn non_finite_angles_rejected() {
        assert!(matches!(Gate1Q::rx(f64::NAN), Err(Error::NonFiniteAngle(_))));
        assert!(matches!(
            Gate1Q::rz(f64::INFINITY),
            Err(Error::NonFiniteAngle(_))
        ));
    }

    #[test]
    fn hadamard_on_zero() {
        let mut state = StateVector::new_zero(1).unwrap();
        state.apply_1q(&Gate1Q::hadamard(), 0).unwrap();
        let f = std::f64::consts::FRAC_1_SQRT_2;
        assert_close(state.amplitudes()[0], Complex64::new(f, 0.0));
        assert_close(state.amplitudes()[1], Complex64::new(f, 0.0));
    }

    #[test]
    fn hadamard_twice_restores_zero() {
        let mut state = StateVector::new_zero(3).unwrap();
        let h = Gate1Q::hadamard();
        for q in 0..3 {
            state.apply_1q(&h, q).unwrap();
        }
        for q in 0..3 {
            state.apply_1q(&h, q).unwrap();
        }
        assert_close(state.amplitudes()[0], Complex64::new(1.0, 0.0));
        for amp in &state.amplitudes()[1..] {
            assert_close(*amp, Complex64::new(0.0, 0.0));
        }
    }

    #[test]
    fn hadamard_layer_gives_uniform_superposition() {
        let mut state = StateVector::new_zero(4).unwrap();
        let h = Gate1Q::hadamard();
        for q in 0..4 {
            state.apply_1q(&h, q).unwrap();
        }
        for amp in state.amplitudes() {
            assert_close(*amp, Complex64::new(0.25, 0.0));
        }
    }

    #[test]
    fn rz_preserves_magnitudes() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut state = random_state(3, &mut rng);
        let before: Vec<f64> = state.probabilities();
        state.apply_1q(&Gate1Q::rz(0.37).unwrap(), 1).unwrap();
        for (p, q) in before.iter().zip(state.probabilities()) {
            assert!((p - q).abs() < TOL);
        }
    }

    #[test]
    fn gate_target_out_of_range() {
        let mut state = StateVector::new_zero(2).unwrap();
        assert!(matches!(
            state.apply_1q(&Gate1Q::hadamard(), 2),
            Err(Error::QubitIndex {
                index: 2,
                n_qubits: 2
            })
        ));
    }

    #[test]
    fn cnot_truth_table() {
        // Basis index 1 is z0 = 1; CNOT(0 -> 1) must send it to index 3.
        let mut state = StateVector::new_zero(2).unwrap();
        state.amplitudes.swap(0, 1);
        state.apply_cnot(0, 1).unwrap();
        assert_close(state.amplitudes()[3], Complex64::new(1.0, 0.0));
        assert_close(state.amplitudes()[1], Complex64::new(0.0, 0.0));
    }

    #[test]
    fn cnot_leaves_zero_control_alone() {
        let mut state = StateVector::new_zero(2).unwrap();
        state.apply_cnot(0, 1).unwrap();
        assert_close(state.amplitudes()[0], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn cnot_argument_errors() {
        let mut state = StateVector::new_zero(2).unwrap();
        assert!(matches!(
            state.apply_cnot(1, 1),
            Err(Error::ControlEqualsTarget(1))
        ));
        assert!(matches!(
            state.apply_cnot(0, 5),
            Err(Error::QubitIndex { .. })
        ));
    }

    #[test]
    fn probabilities_of_zero_state() {
        let state = StateVector::new_zero(1).unwrap();
        assert_eq!(state.probabilities(), vec![1.0, 0.0]);
    }

    #[test]
    fn sample_deterministic_state() {
        let state = StateVector::new_zero(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let samples = state.sample(100, &mut rng).unwrap();
        assert_eq!(samples.total(), 100);
        assert_eq!(samples.count(0), 100);
        assert_eq!(samples.n_distinct(), 1);
    }

    #[test]
    fn sample_zero_shots_rejected() {
        let state = StateVector::new_zero(1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(matches!(state.sample(0, &mut rng), Err(Error::ZeroSamples)));
    }

    #[test]
    fn sample_uniform_counts_within_five_sigma() {
        let mut state = StateVector::new_zero(2).unwrap();
        let h = Gate1Q::hadamard();
        state.apply_1q(&h, 0).unwrap();
        state.apply_1q(&h, 1).unwrap();
        let n = 1_000_000usize;
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let samples = state.sample(n, &mut rng).unwrap();
        assert_eq!(samples.total(), n as u64);
        let expected = n as f64 / 4.0;
        let sigma = (n as f64 * 0.25 * 0.75).sqrt();
        for k in 0..4 {
            let count = samples.count(k) as f64;
            assert!(
                (count - expected).abs() < 5.0 * sigma,
                "count[{k}] = {count} too far from {expected}"
            );
        }
    }

    #[test]
    fn sample_set_rejects_out_of_range_index() {
        assert!(matches!(
            SampleSet::from_index_counts(2, [(4, 1)]),
            Err(Error::BasisIndex { .. })
        ));
    }

    proptest! {
        #[test]
        fn rotation_gates_are_unitary(theta in -10.0f64..10.0) {
            for gate in [Gate1Q::rx(theta).unwrap(), Gate1Q::rz(theta).unwrap(), Gate1Q::hadamard()] {
                let m = gate.matrix();
                // G†G = I entrywise.
                for i in 0..2 {
                    for j in 0..2 {
                        let entry = m[0][i].conj() * m[0][j] + m[1][i].conj() * m[1][j];
                        let expected = if i == j { 1.0 } else { 0.0 };
                        prop_assert!((entry - expected).norm() < TOL);
                    }
                }
            }
        }

        #[test]
        fn random_circuit_preserves_norm(seed in 0u64..500) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut state = random_state(4, &mut rng);
            for _ in 0..50 {
                match rng.random_range(0..4) {
                    0 => state.apply_1q(&Gate1Q::hadamard(), rng.random_range(0..4)).unwrap(),
                    1 => state.apply_1q(&Gate1Q::rx(rng.random_range(-6.3..6.3)).unwrap(), rng.random_range(0..4)).unwrap(),
                    2 => state.apply_1q(&Gate1Q::rz(rng.random_range(-6.3..6.3)).unwrap(), rng.random_range(0..4)).unwrap(),
                    _ => {
                        let c = rng.random_range(0..4);
                        let mut t = rng.random_range(0..4);
                        while t == c { t = rng.random_range(0..4); }
                        state.apply_cnot(c, t).unwrap();
                    }
                }
            }
            prop_assert!((state.norm_sqr() - 1.0).abs() < TOL);
        }

        #[test]
        fn hadamard_and_cnot_self_inverse(seed in 0u64..200) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let original = random_state(3, &mut rng);

            let mut state = original.clone();
            let q = rng.random_range(0..3);
            state.apply_1q(&Gate1Q::hadamard(), q).unwrap();
            state.apply_1q(&Gate1Q::hadamard(), q).unwrap();
            for (a, b) in state.amplitudes().iter().zip(original.amplitudes()) {
                prop_assert!((a - b).norm() < TOL);
            }

            let mut state = original.clone();
            let c = rng.random_range(0..3);
            let mut t = rng.random_range(0..3);
            while t == c { t = rng.random_range(0..3); }
            state.apply_cnot(c, t).unwrap();
            state.apply_cnot(c, t).unwrap();
            for (a, b) in state.amplitudes().iter().zip(original.amplitudes()) {
                prop_assert!((a - b).norm() < TOL);
            }
        }

        #[test]
        fn rotations_compose_additively(a in -6.3f64..6.3, b in -6.3f64..6.3, seed in 0u64..100) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let original = random_state(2, &mut rng);

            let mut split = original.clone();
            split.apply_1q(&Gate1Q::rz(a).unwrap(), 0).unwrap();
            split.apply_1q(&Gate1Q::rz(b).unwrap(), 0).unwrap();
            let mut joined = original.clone();
            joined.apply_1q(&Gate1Q::rz(a + b).unwrap(), 0).unwrap();
            for (x, y) in split.amplitudes().iter().zip(joined.amplitudes()) {
                prop_assert!((x - y).norm() < TOL);
            }

            let mut split = original.clone();
            split.apply_1q(&Gate1Q::rx(a).unwrap(), 1).unwrap();
            split.apply_1q(&Gate1Q::rx(b).unwrap(), 1).unwrap();
            let mut joined = original;
            joined.apply_1q(&Gate1Q::rx(a + b).unwrap(), 1).unwrap();
            for (x, y) in split.amplitudes().iter().zip(joined.amplitudes()) {
                prop_assert!((x - y).norm() < TOL);
            }
        }

        #[test]
        fn controlled_phase_block_is_diagonal(gamma in -6.3f64..6.3, seed in 0u64..100) {
            // CNOT, Rz on the target, CNOT only rotates phases.
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut state = random_state(3, &mut rng);
            let before = state.probabilities();
            state.apply_cnot(0, 2).unwrap();
            state.apply_1q(&Gate1Q::rz(gamma).unwrap(), 2).unwrap();
            state.apply_cnot(0, 2).unwrap();
            for (p, q) in before.iter().zip(state.probabilities()) {
                prop_assert!((p - q).abs() < TOL);
            }
        }

        #[test]
        fn sample_counts_sum_to_n(seed in 0u64..50, n_samples in 1usize..2000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let state = random_state(3, &mut rng);
            let samples = state.sample(n_samples, &mut rng).unwrap();
            prop_assert_eq!(samples.total(), n_samples as u64);
        }
    }
}

//! Dense statevector register with exact gate application and projective
//! measurement.
//!
//! Ordering contract: the qubit with label 0 is the *most significant* bit
//! of the amplitude index, so the basis ket |q0 q1 … q(n−1)⟩ maps to the
//! integer formed by reading its bits left to right. A four-qubit amplitude
//! at index 6 is therefore the coefficient of |0110⟩.
//!
//! Statevectors are immutable values: every operation returns a fresh
//! register, so instances can be shared freely across threads. Measurement
//! sampling takes the random source as an argument; deterministic projection
//! variants exist for exhaustive branch enumeration.

use num_complex::Complex;
use rand::Rng;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Complex amplitude over the crate's scalar abstraction.
pub type Amp<T> = Complex<T>;

/// Largest register size the dense representation accepts.
pub const MAX_QUBITS: usize = 16;

/// One gate from the fixed set used by the protocols.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GateOp {
    H(usize),
    X(usize),
    Y(usize),
    Z(usize),
    Cnot { control: usize, target: usize },
    Cz { control: usize, target: usize },
}

impl GateOp {
    /// Qubit labels the gate acts on, control first.
    pub fn targets(&self) -> Vec<usize> {
        match *self {
            GateOp::H(q) | GateOp::X(q) | GateOp::Y(q) | GateOp::Z(q) => vec![q],
            GateOp::Cnot { control, target } | GateOp::Cz { control, target } => {
                vec![control, target]
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GateOp::H(_) => "H",
            GateOp::X(_) => "X",
            GateOp::Y(_) => "Y",
            GateOp::Z(_) => "Z",
            GateOp::Cnot { .. } => "CNOT",
            GateOp::Cz { .. } => "CZ",
        }
    }
}

/// An orthonormal measurement basis over `k` qubits: `2^k` vectors of
/// dimension `2^k`, validated on construction.
#[derive(Clone, Debug)]
pub struct MeasurementBasis<T: Real> {
    num_qubits: usize,
    vectors: Vec<Vec<Amp<T>>>,
}

impl<T: Real> MeasurementBasis<T> {
    /// Builds the basis, checking vector count, dimension and orthonormality
    /// (Gram matrix within `NORM_TOL` of the identity).
    pub fn new(num_qubits: usize, vectors: Vec<Vec<Amp<T>>>) -> Result<Self> {
        let dim = 1usize << num_qubits;
        if vectors.len() != dim {
            return Err(Error::AmplitudeLength {
                got: vectors.len(),
                expected: dim,
            });
        }
        for v in &vectors {
            if v.len() != dim {
                return Err(Error::AmplitudeLength {
                    got: v.len(),
                    expected: dim,
                });
            }
        }
        let basis = MeasurementBasis {
            num_qubits,
            vectors,
        };
        let (i, j, dev) = basis.worst_gram_entry();
        if dev > T::NORM_TOL {
            return Err(Error::NotOrthonormal {
                i,
                j,
                deviation: dev.to_f64_lossy(),
            });
        }
        Ok(basis)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vector(&self, index: usize) -> Result<&[Amp<T>]> {
        self.vectors
            .get(index)
            .map(Vec::as_slice)
            .ok_or(Error::OutcomeOutOfRange {
                index,
                size: self.vectors.len(),
            })
    }

    pub fn vectors(&self) -> &[Vec<Amp<T>>] {
        &self.vectors
    }

    /// Largest deviation of the Gram matrix from the identity, with the
    /// offending index pair.
    pub fn worst_gram_entry(&self) -> (usize, usize, T) {
        let mut worst = (0, 0, T::zero());
        for i in 0..self.vectors.len() {
            for j in i..self.vectors.len() {
                let mut inner = Complex::new(T::zero(), T::zero());
                for (a, b) in self.vectors[i].iter().zip(&self.vectors[j]) {
                    inner = inner + a.conj() * *b;
                }
                let target = if i == j { T::one() } else { T::zero() };
                let dev = (inner - Complex::new(target, T::zero())).norm();
                if dev > worst.2 {
                    worst = (i, j, dev);
                }
            }
        }
        worst
    }
}

/// Dense register of `2^num_qubits` complex amplitudes.
///
/// Zero-qubit registers (a single unit amplitude) arise as remainders after
/// all qubits have been measured away and are valid values.
#[derive(Clone, Debug, PartialEq)]
pub struct Statevector<T: Real> {
    num_qubits: usize,
    amps: Vec<Amp<T>>,
}

impl<T: Real> Statevector<T> {
    /// |0…0⟩ on `n` qubits, `1 ≤ n ≤ 16`.
    pub fn zero_state(n: usize) -> Result<Self> {
        Self::basis_state(n, 0)
    }

    /// Computational basis state |index⟩ on `n` qubits.
    pub fn basis_state(n: usize, index: usize) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::QubitCount(n));
        }
        let dim = 1usize << n;
        if index >= dim {
            return Err(Error::OutcomeOutOfRange { index, size: dim });
        }
        let mut amps = vec![Complex::new(T::zero(), T::zero()); dim];
        amps[index] = Complex::new(T::one(), T::zero());
        Ok(Statevector {
            num_qubits: n,
            amps,
        })
    }

    /// Wraps an amplitude vector, checking length, finiteness and unit norm.
    pub fn from_amplitudes(n: usize, amps: Vec<Amp<T>>) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::QubitCount(n));
        }
        if amps.len() != (1usize << n) {
            return Err(Error::AmplitudeLength {
                got: amps.len(),
                expected: 1usize << n,
            });
        }
        for (i, a) in amps.iter().enumerate() {
            if !a.re.is_finite() || !a.im.is_finite() {
                return Err(Error::NonFiniteAmplitude(i));
            }
        }
        let state = Statevector {
            num_qubits: n,
            amps,
        };
        let norm = state.norm();
        if (norm - T::one()).abs() > T::NORM_TOL {
            return Err(Error::NotNormalized {
                norm: norm.to_f64_lossy(),
            });
        }
        Ok(state)
    }

    /// Haar-agnostic random state: independent standard-Gaussian real and
    /// imaginary parts per amplitude, then normalized.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::QubitCount(n));
        }
        let dim = 1usize << n;
        let mut amps = Vec::with_capacity(dim);
        for _ in 0..dim {
            let re: f64 = rng.sample(rand_distr::StandardNormal);
            let im: f64 = rng.sample(rand_distr::StandardNormal);
            amps.push(Complex::new(T::from_f64(re), T::from_f64(im)));
        }
        let mut state = Statevector {
            num_qubits: n,
            amps,
        };
        let norm = state.norm();
        for a in &mut state.amps {
            *a = a.unscale(norm);
        }
        Ok(state)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amps(&self) -> &[Amp<T>] {
        &self.amps
    }

    pub fn amp(&self, index: usize) -> Amp<T> {
        self.amps[index]
    }

    pub fn norm(&self) -> T {
        self.amps
            .iter()
            .fold(T::zero(), |acc, a| acc + a.norm_sqr())
            .sqrt()
    }

    /// Bit mask of qubit `q` under the MSB-first ordering contract.
    fn mask(&self, q: usize) -> Result<usize> {
        if q >= self.num_qubits {
            return Err(Error::QubitOutOfRange {
                label: q,
                num_qubits: self.num_qubits,
            });
        }
        Ok(1usize << (self.num_qubits - 1 - q))
    }

    /// Applies one gate, returning the new state.
    pub fn apply(&self, op: GateOp) -> Result<Self> {
        let mut out = self.clone();
        match op {
            GateOp::H(q) => {
                let m = self.mask(q)?;
                let f = T::from_f64(std::f64::consts::FRAC_1_SQRT_2);
                for i in 0..out.amps.len() {
                    if i & m == 0 {
                        let a = out.amps[i];
                        let b = out.amps[i | m];
                        out.amps[i] = (a + b).scale(f);
                        out.amps[i | m] = (a - b).scale(f);
                    }
                }
            }
            GateOp::X(q) => {
                let m = self.mask(q)?;
                for i in 0..out.amps.len() {
                    if i & m == 0 {
                        out.amps.swap(i, i | m);
                    }
                }
            }
            GateOp::Y(q) => {
                let m = self.mask(q)?;
                let im = Complex::new(T::zero(), T::one());
                for i in 0..out.amps.len() {
                    if i & m == 0 {
                        let a = out.amps[i];
                        let b = out.amps[i | m];
                        out.amps[i] = -im * b;
                        out.amps[i | m] = im * a;
                    }
                }
            }
            GateOp::Z(q) => {
                let m = self.mask(q)?;
                for (i, a) in out.amps.iter_mut().enumerate() {
                    if i & m != 0 {
                        *a = -*a;
                    }
                }
            }
            GateOp::Cnot { control, target } => {
                if control == target {
                    return Err(Error::DuplicateQubit(control));
                }
                let mc = self.mask(control)?;
                let mt = self.mask(target)?;
                for i in 0..out.amps.len() {
                    if i & mc != 0 && i & mt == 0 {
                        out.amps.swap(i, i | mt);
                    }
                }
            }
            GateOp::Cz { control, target } => {
                if control == target {
                    return Err(Error::DuplicateQubit(control));
                }
                let mc = self.mask(control)?;
                let mt = self.mask(target)?;
                for (i, a) in out.amps.iter_mut().enumerate() {
                    if i & mc != 0 && i & mt != 0 {
                        *a = -*a;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Applies an arbitrary single-qubit matrix `[[u00, u01], [u10, u11]]`.
    pub fn apply_single(&self, q: usize, u: [[Amp<T>; 2]; 2]) -> Result<Self> {
        let m = self.mask(q)?;
        let mut out = self.clone();
        for i in 0..out.amps.len() {
            if i & m == 0 {
                let a = out.amps[i];
                let b = out.amps[i | m];
                out.amps[i] = u[0][0] * a + u[0][1] * b;
                out.amps[i | m] = u[1][0] * a + u[1][1] * b;
            }
        }
        Ok(out)
    }

    /// Probability that qubit `q` reads the given bit.
    pub fn bit_probability(&self, q: usize, bit: u8) -> Result<T> {
        let m = self.mask(q)?;
        let want = if bit == 0 { 0 } else { m };
        Ok(self
            .amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i & m == want)
            .fold(T::zero(), |acc, (_, a)| acc + a.norm_sqr()))
    }

    /// Deterministic single-qubit projection: collapses qubit `q` onto
    /// `bit` in place (the qubit stays in the register) and returns the
    /// branch probability together with the renormalized state.
    pub fn project_qubit(&self, q: usize, bit: u8) -> Result<(T, Self)> {
        if bit > 1 {
            return Err(Error::InvalidArgument(format!(
                "bit must be 0 or 1, got {bit}"
            )));
        }
        let m = self.mask(q)?;
        let want = if bit == 0 { 0 } else { m };
        let p = self.bit_probability(q, bit)?;
        if p < T::BRANCH_EPS {
            return Err(Error::ImpossibleBranch {
                probability: p.to_f64_lossy(),
            });
        }
        let scale = T::one() / p.sqrt();
        let mut out = self.clone();
        for (i, a) in out.amps.iter_mut().enumerate() {
            if i & m == want {
                *a = a.scale(scale);
            } else {
                *a = Complex::new(T::zero(), T::zero());
            }
        }
        Ok((p, out))
    }

    /// Samples a computational-basis measurement of qubit `q` with Born
    /// probabilities, collapsing in place.
    pub fn measure_qubit<R: Rng + ?Sized>(&self, q: usize, rng: &mut R) -> Result<(u8, Self)> {
        let p0 = self.bit_probability(q, 0)?;
        let bit = if rng.random::<f64>() < p0.to_f64_lossy() {
            0
        } else {
            1
        };
        let (_, state) = self.project_qubit(q, bit)?;
        Ok((bit, state))
    }

    /// Unnormalized remainder of projecting `qubits` onto `vector`.
    ///
    /// `qubits` are read MSB-first into the vector's index; remaining qubits
    /// keep their relative order in the remainder.
    fn project_raw(&self, qubits: &[usize], vector: &[Amp<T>]) -> Result<Vec<Amp<T>>> {
        for (pos, &q) in qubits.iter().enumerate() {
            self.mask(q)?;
            if qubits[..pos].contains(&q) {
                return Err(Error::DuplicateQubit(q));
            }
        }
        let rest: Vec<usize> = (0..self.num_qubits)
            .filter(|q| !qubits.contains(q))
            .collect();
        let mut remainder =
            vec![Complex::new(T::zero(), T::zero()); 1usize << rest.len()];
        for (i, amp) in self.amps.iter().enumerate() {
            let mut k = 0usize;
            for &q in qubits {
                let bit = (i >> (self.num_qubits - 1 - q)) & 1;
                k = (k << 1) | bit;
            }
            let mut j = 0usize;
            for &q in &rest {
                let bit = (i >> (self.num_qubits - 1 - q)) & 1;
                j = (j << 1) | bit;
            }
            remainder[j] = remainder[j] + vector[k].conj() * *amp;
        }
        Ok(remainder)
    }

    /// Born probability of every outcome of `basis` measured on `qubits`.
    pub fn outcome_probabilities(
        &self,
        qubits: &[usize],
        basis: &MeasurementBasis<T>,
    ) -> Result<Vec<T>> {
        if qubits.len() != basis.num_qubits() {
            return Err(Error::InvalidArgument(format!(
                "basis spans {} qubits but {} labels were given",
                basis.num_qubits(),
                qubits.len()
            )));
        }
        basis
            .vectors()
            .iter()
            .map(|v| {
                let r = self.project_raw(qubits, v)?;
                Ok(r.iter().fold(T::zero(), |acc, a| acc + a.norm_sqr()))
            })
            .collect()
    }

    /// Projects `qubits` onto the indexed basis outcome. The measured qubits
    /// are removed from the register; remaining qubits keep their relative
    /// order. Returns the Born probability and the renormalized remainder.
    pub fn project_in_basis(
        &self,
        qubits: &[usize],
        basis: &MeasurementBasis<T>,
        outcome: usize,
    ) -> Result<(T, Self)> {
        if qubits.len() != basis.num_qubits() {
            return Err(Error::InvalidArgument(format!(
                "basis spans {} qubits but {} labels were given",
                basis.num_qubits(),
                qubits.len()
            )));
        }
        let vector = basis.vector(outcome)?;
        let mut remainder = self.project_raw(qubits, vector)?;
        let p = remainder
            .iter()
            .fold(T::zero(), |acc, a| acc + a.norm_sqr());
        if p < T::BRANCH_EPS {
            return Err(Error::ImpossibleBranch {
                probability: p.to_f64_lossy(),
            });
        }
        let scale = T::one() / p.sqrt();
        for a in &mut remainder {
            *a = a.scale(scale);
        }
        Ok((
            p,
            Statevector {
                num_qubits: self.num_qubits - qubits.len(),
                amps: remainder,
            },
        ))
    }

    /// Inner product ⟨self|other⟩.
    pub fn inner(&self, other: &Self) -> Result<Amp<T>> {
        if self.num_qubits != other.num_qubits {
            return Err(Error::DimensionMismatch {
                left: self.num_qubits,
                right: other.num_qubits,
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| {
                acc + a.conj() * *b
            }))
    }

    /// |⟨self|other⟩|²: insensitive to global phase by construction.
    pub fn fidelity_up_to_phase(&self, other: &Self) -> Result<T> {
        Ok(self.inner(other)?.norm_sqr())
    }

    /// Largest amplitude-wise difference to another state (no phase
    /// alignment); both registers must have the same size.
    pub fn max_amp_diff(&self, other: &Self) -> Result<T> {
        if self.num_qubits != other.num_qubits {
            return Err(Error::DimensionMismatch {
                left: self.num_qubits,
                right: other.num_qubits,
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .fold(T::zero(), |acc, (a, b)| acc.max((a - b).norm())))
    }

    /// Reindexes amplitudes so that the listed qubits become the register
    /// order: position `i` of the result holds the qubit `order[i]`.
    pub fn permute_qubits(&self, order: &[usize]) -> Result<Self> {
        let n = self.num_qubits;
        let mut seen = vec![false; n];
        if order.len() != n || !order.iter().all(|&q| q < n && !std::mem::replace(&mut seen[q], true)) {
            return Err(Error::InvalidPermutation {
                expected: n,
                got: order.to_vec(),
            });
        }
        let mut amps = vec![Complex::new(T::zero(), T::zero()); self.amps.len()];
        for (i, amp) in self.amps.iter().enumerate() {
            let mut j = 0usize;
            for &q in order {
                let bit = (i >> (n - 1 - q)) & 1;
                j = (j << 1) | bit;
            }
            amps[j] = *amp;
        }
        Ok(Statevector {
            num_qubits: n,
            amps,
        })
    }

    /// Tensor product; `self`'s qubits come first (most significant).
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let n = self.num_qubits + other.num_qubits;
        if n > MAX_QUBITS {
            return Err(Error::QubitCount(n));
        }
        let mut amps = Vec::with_capacity(self.amps.len() * other.amps.len());
        for a in &self.amps {
            for b in &other.amps {
                amps.push(*a * *b);
            }
        }
        Ok(Statevector {
            num_qubits: n,
            amps,
        })
    }

    /// Appends one qubit in state |bit⟩ at the end of the register.
    pub fn append_qubit(&self, bit: u8) -> Result<Self> {
        self.tensor(&Statevector::basis_state(1, bit as usize)?)
    }

    /// Reduced density matrix over the `keep` qubits (listed order becomes
    /// the row/column bit order, MSB first).
    pub fn reduced_density(&self, keep: &[usize]) -> Result<Vec<Vec<Amp<T>>>> {
        for (pos, &q) in keep.iter().enumerate() {
            self.mask(q)?;
            if keep[..pos].contains(&q) {
                return Err(Error::DuplicateQubit(q));
            }
        }
        let rest: Vec<usize> = (0..self.num_qubits)
            .filter(|q| !keep.contains(q))
            .collect();
        let kdim = 1usize << keep.len();
        let rdim = 1usize << rest.len();
        // m[r][j] = ψ(keep=r, rest=j); ρ = m · m†
        let mut m = vec![vec![Complex::new(T::zero(), T::zero()); rdim]; kdim];
        for (i, amp) in self.amps.iter().enumerate() {
            let mut r = 0usize;
            for &q in keep {
                r = (r << 1) | ((i >> (self.num_qubits - 1 - q)) & 1);
            }
            let mut j = 0usize;
            for &q in &rest {
                j = (j << 1) | ((i >> (self.num_qubits - 1 - q)) & 1);
            }
            m[r][j] = *amp;
        }
        let mut rho = vec![vec![Complex::new(T::zero(), T::zero()); kdim]; kdim];
        for r in 0..kdim {
            for c in 0..kdim {
                let mut acc = Complex::new(T::zero(), T::zero());
                for j in 0..rdim {
                    acc = acc + m[r][j] * m[c][j].conj();
                }
                rho[r][c] = acc;
            }
        }
        Ok(rho)
    }
}

/// Computational basis over one qubit: {|0⟩, |1⟩}.
pub fn computational_basis_1q<T: Real>() -> MeasurementBasis<T> {
    let zero = Complex::new(T::zero(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    MeasurementBasis::new(1, vec![vec![one, zero], vec![zero, one]])
        .expect("computational basis is orthonormal")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type Sv = Statevector<f64>;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn zero_state_examples() {
        let s = Sv::zero_state(1).unwrap();
        assert_eq!(s.amps(), &[c(1.0, 0.0), c(0.0, 0.0)]);

        let s = Sv::zero_state(3).unwrap();
        assert_eq!(s.amps().len(), 8);
        assert_eq!(s.amp(0), c(1.0, 0.0));
        assert!(s.amps()[1..].iter().all(|a| a.norm() == 0.0));

        assert!(matches!(Sv::zero_state(0), Err(Error::QubitCount(0))));
        assert!(matches!(Sv::zero_state(17), Err(Error::QubitCount(17))));
    }

    #[test]
    fn hadamard_on_zero() {
        let s = Sv::zero_state(1).unwrap().apply(GateOp::H(0)).unwrap();
        let f = std::f64::consts::FRAC_1_SQRT_2;
        assert!((s.amp(0).re - f).abs() < 1e-15);
        assert!((s.amp(1).re - f).abs() < 1e-15);
    }

    #[test]
    fn cnot_on_basis_state() {
        // CNOT(control 0, target 1) maps |10⟩ to |11⟩.
        let s = Sv::basis_state(2, 0b10)
            .unwrap()
            .apply(GateOp::Cnot {
                control: 0,
                target: 1,
            })
            .unwrap();
        assert!((s.amp(0b11).re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn z_twice_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let s = Sv::random(3, &mut rng).unwrap();
        let back = s.apply(GateOp::Z(1)).unwrap().apply(GateOp::Z(1)).unwrap();
        assert!(s.max_amp_diff(&back).unwrap() < 1e-12);
    }

    #[test]
    fn gate_target_out_of_range() {
        let s = Sv::zero_state(2).unwrap();
        assert!(matches!(
            s.apply(GateOp::X(2)),
            Err(Error::QubitOutOfRange { label: 2, .. })
        ));
        assert!(matches!(
            s.apply(GateOp::Cnot {
                control: 1,
                target: 1
            }),
            Err(Error::DuplicateQubit(1))
        ));
    }

    #[test]
    fn project_qubit_on_plus_state() {
        let s = Sv::zero_state(1).unwrap().apply(GateOp::H(0)).unwrap();
        let (p, collapsed) = s.project_qubit(0, 0).unwrap();
        assert!((p - 0.5).abs() < 1e-12);
        assert!((collapsed.amp(0).re - 1.0).abs() < 1e-12);
        assert!(collapsed.amp(1).norm() < 1e-12);
    }

    #[test]
    fn project_qubit_impossible_branch() {
        let s = Sv::basis_state(1, 1).unwrap();
        assert!(matches!(
            s.project_qubit(0, 0),
            Err(Error::ImpossibleBranch { .. })
        ));
    }

    #[test]
    fn bell_projection_leaves_empty_remainder() {
        // |⟨Φ+|00⟩|² = 1/2 and the remainder register is empty.
        let f = std::f64::consts::FRAC_1_SQRT_2;
        let bell = MeasurementBasis::new(
            2,
            vec![
                vec![c(f, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(f, 0.0)],
                vec![c(0.0, 0.0), c(f, 0.0), c(f, 0.0), c(0.0, 0.0)],
                vec![c(f, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-f, 0.0)],
                vec![c(0.0, 0.0), c(f, 0.0), c(-f, 0.0), c(0.0, 0.0)],
            ],
        )
        .unwrap();
        let s = Sv::zero_state(2).unwrap();
        let (p, rest) = s.project_in_basis(&[0, 1], &bell, 0).unwrap();
        assert!((p - 0.5).abs() < 1e-12);
        assert_eq!(rest.num_qubits(), 0);
        assert_eq!(rest.amps().len(), 1);
        assert!((rest.amp(0).norm() - 1.0).abs() < 1e-12);

        assert!(matches!(
            s.project_in_basis(&[0, 1], &bell, 4),
            Err(Error::OutcomeOutOfRange { index: 4, size: 4 })
        ));
    }

    #[test]
    fn non_orthonormal_basis_rejected() {
        let err = MeasurementBasis::<f64>::new(
            1,
            vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(1.0, 0.0), c(0.0, 0.0)]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotOrthonormal { .. }));
    }

    #[test]
    fn fidelity_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let s = Sv::random(2, &mut rng).unwrap();
        assert!((s.fidelity_up_to_phase(&s).unwrap() - 1.0).abs() < 1e-12);

        let neg = Sv::from_amplitudes(2, s.amps().iter().map(|a| -a).collect()).unwrap();
        assert!((s.fidelity_up_to_phase(&neg).unwrap() - 1.0).abs() < 1e-12);

        let zero = Sv::basis_state(1, 0).unwrap();
        let one = Sv::basis_state(1, 1).unwrap();
        assert!(zero.fidelity_up_to_phase(&one).unwrap() < 1e-15);

        assert!(matches!(
            zero.fidelity_up_to_phase(&s),
            Err(Error::DimensionMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn permutation_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let s = Sv::random(3, &mut rng).unwrap();
        let same = s.permute_qubits(&[0, 1, 2]).unwrap();
        assert!(s.max_amp_diff(&same).unwrap() == 0.0);

        // swap on |01⟩ gives |10⟩
        let s01 = Sv::basis_state(2, 0b01).unwrap();
        let swapped = s01.permute_qubits(&[1, 0]).unwrap();
        assert!((swapped.amp(0b10).re - 1.0).abs() < 1e-15);

        // permutation then inverse round-trips
        let order = [2usize, 0, 1];
        let mut inverse = [0usize; 3];
        for (pos, &q) in order.iter().enumerate() {
            inverse[q] = pos;
        }
        let back = s
            .permute_qubits(&order)
            .unwrap()
            .permute_qubits(&inverse)
            .unwrap();
        assert!(s.max_amp_diff(&back).unwrap() < 1e-12);

        assert!(matches!(
            s.permute_qubits(&[0, 0, 1]),
            Err(Error::InvalidPermutation { .. })
        ));
    }

    #[test]
    fn tensor_orders_self_first() {
        let one = Sv::basis_state(1, 1).unwrap();
        let zero = Sv::basis_state(1, 0).unwrap();
        let ten = one.tensor(&zero).unwrap();
        assert!((ten.amp(0b10).re - 1.0).abs() < 1e-15);
    }

    fn random_state(seed: u64, n: usize) -> Sv {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Sv::random(n, &mut rng).unwrap()
    }

    fn gate_from(choice: u8, q1: usize, q2: usize) -> GateOp {
        match choice % 6 {
            0 => GateOp::H(q1),
            1 => GateOp::X(q1),
            2 => GateOp::Y(q1),
            3 => GateOp::Z(q1),
            4 => GateOp::Cnot {
                control: q1,
                target: q2,
            },
            _ => GateOp::Cz {
                control: q1,
                target: q2,
            },
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        // Norm preservation across the whole gate set.
        #[test]
        fn gates_preserve_norm(seed: u64, n in 2usize..5, choice: u8, a in 0usize..4, b in 0usize..4) {
            let q1 = a % n;
            let q2 = (a + 1 + b % (n - 1)) % n;
            let s = random_state(seed, n);
            let t = s.apply(gate_from(choice, q1, q2)).unwrap();
            prop_assert!((t.norm() - 1.0).abs() < 1e-10);
        }
    }

    proptest! {
        // Every gate in the set squares to the identity.
        #[test]
        fn gates_are_involutions(seed: u64, n in 2usize..5, choice in 0u8..6, a in 0usize..4, b in 0usize..4) {
            let q1 = a % n;
            let q2 = (a + 1 + b % (n - 1)) % n;
            let g = gate_from(choice, q1, q2);
            let s = random_state(seed, n);
            let back = s.apply(g).unwrap().apply(g).unwrap();
            prop_assert!(s.max_amp_diff(&back).unwrap() < 1e-12);
        }

        // Outcome probabilities over any orthonormal basis sum to one.
        #[test]
        fn measurement_is_complete(seed: u64, n in 2usize..5) {
            let s = random_state(seed, n);
            let basis = bell_like_basis(seed);
            let probs = s.outcome_probabilities(&[0, n - 1], &basis).unwrap();
            let total: f64 = probs.iter().sum();
            prop_assert!((total - 1.0).abs() < 1e-10);
        }

        // Projection branches over one qubit exhaust the state.
        #[test]
        fn qubit_branches_sum_to_one(seed: u64, n in 1usize..5, q in 0usize..4) {
            let q = q % n;
            let s = random_state(seed, n);
            let p0 = s.bit_probability(q, 0).unwrap();
            let p1 = s.bit_probability(q, 1).unwrap();
            prop_assert!((p0 + p1 - 1.0).abs() < 1e-10);
        }
    }

    /// A randomly rotated two-qubit orthonormal basis.
    fn bell_like_basis(seed: u64) -> MeasurementBasis<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xbead);
        // Start from the computational basis expressed as one 4-qubit-state
        // register per vector, and rotate all vectors with the same circuit.
        let mut vectors = Vec::new();
        let ops = [
            GateOp::H(0),
            GateOp::Cnot {
                control: 0,
                target: 1,
            },
            GateOp::H(1),
            GateOp::Cz {
                control: 1,
                target: 0,
            },
        ];
        let keep: Vec<GateOp> = ops
            .iter()
            .copied()
            .filter(|_| rng.random::<bool>())
            .collect();
        for idx in 0..4 {
            let mut v = Sv::basis_state(2, idx).unwrap();
            for op in &keep {
                v = v.apply(*op).unwrap();
            }
            vectors.push(v.amps().to_vec());
        }
        MeasurementBasis::new(2, vectors).unwrap()
    }
}

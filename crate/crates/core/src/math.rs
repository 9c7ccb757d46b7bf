//! Small dense linear-algebra helpers.

use num_complex::Complex;

use crate::scalar::Real;

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.
///
/// The input is given row-major as `matrix[row][col]`; only densities and
/// other small (≤ 16×16) Hermitian matrices are expected here. Returned
/// eigenvalues are sorted ascending.
pub fn hermitian_eigenvalues<T: Real>(matrix: &[Vec<Complex<T>>]) -> Vec<T> {
    let n = matrix.len();
    debug_assert!(matrix.iter().all(|row| row.len() == n));
    let mut a: Vec<Vec<Complex<T>>> = matrix.to_vec();
    let eps = T::AMP_TOL * T::from_f64(0.01);
    let two = T::from_f64(2.0);

    for _sweep in 0..100 {
        let mut off = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off = off + a[p][q].norm_sqr();
            }
        }
        if off.sqrt() < eps {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                let mag = apq.norm();
                if mag < eps {
                    continue;
                }
                // Factor the phase out of a[p][q], then eliminate the real
                // off-diagonal with a standard symmetric Jacobi rotation.
                let phase = apq.unscale(mag);
                let alpha = a[p][p].re;
                let beta = a[q][q].re;
                let theta = (beta - alpha) / (two * mag);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;

                // J is the identity except for the (p,q) plane:
                //   J[p][p] = c            J[p][q] = s
                //   J[q][p] = -s·conj(ph)  J[q][q] = c·conj(ph)
                let v = phase.conj().scale(s);
                let w = phase.conj().scale(c);
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = akp.scale(c) - akq * v;
                    a[k][q] = akp.scale(s) + akq * w;
                }
                let vr = phase.scale(s);
                let wr = phase.scale(c);
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = apk.scale(c) - aqk * vr;
                    a[q][k] = apk.scale(s) + aqk * wr;
                }
                a[p][q] = Complex::new(T::zero(), T::zero());
                a[q][p] = Complex::new(T::zero(), T::zero());
            }
        }
    }

    let mut eigs: Vec<T> = (0..n).map(|i| a[i][i].re).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    eigs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn diagonal_matrix_is_its_own_spectrum() {
        let m = vec![
            vec![c(3.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(-1.0, 0.0)],
        ];
        let e = hermitian_eigenvalues(&m);
        assert!((e[0] + 1.0).abs() < 1e-12);
        assert!((e[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn pauli_x_and_y_have_unit_spectrum() {
        let x = vec![
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        ];
        let y = vec![
            vec![c(0.0, 0.0), c(0.0, -1.0)],
            vec![c(0.0, 1.0), c(0.0, 0.0)],
        ];
        for m in [x, y] {
            let e = hermitian_eigenvalues(&m);
            assert!((e[0] + 1.0).abs() < 1e-12);
            assert!((e[1] - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn known_4x4_spectrum() {
        // (Z ⊗ Z + X ⊗ I) has eigenvalues ±√2 each twice.
        let mut m = vec![vec![c(0.0, 0.0); 4]; 4];
        for (i, zz) in [1.0, -1.0, -1.0, 1.0].iter().enumerate() {
            m[i][i] = c(*zz, 0.0);
        }
        for i in 0..4 {
            m[i][i ^ 2] += c(1.0, 0.0);
        }
        let e = hermitian_eigenvalues(&m);
        let r = 2.0_f64.sqrt();
        for (got, want) in e.iter().zip([-r, -r, r, r]) {
            assert!((got - want).abs() < 1e-12, "got {got}, want {want}");
        }
    }
}

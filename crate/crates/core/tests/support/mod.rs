//! Brute-force negativity shared by the oracle and acceptance tests: cyclic
//! Jacobi rotations on the real embedding of the partial transpose.

use num_complex::Complex64;

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
#[allow(clippy::needless_range_loop)]
fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).collect()
}

/// Negativity from the 8×8 real embedding [[Re, −Im], [Im, Re]] of ρ^{T₂};
/// each eigenvalue appears twice.
#[allow(clippy::needless_range_loop)]
pub fn brute_force_negativity(rho: &[[Complex64; 4]; 4]) -> f64 {
    let mut pt = [[Complex64::new(0.0, 0.0); 4]; 4];
    for a1 in 0..2 {
        for a2 in 0..2 {
            for b1 in 0..2 {
                for b2 in 0..2 {
                    pt[2 * a1 + a2][2 * b1 + b2] = rho[2 * a1 + b2][2 * b1 + a2];
                }
            }
        }
    }
    let mut big = vec![vec![0.0; 8]; 8];
    for i in 0..4 {
        for j in 0..4 {
            big[i][j] = pt[i][j].re;
            big[i][j + 4] = -pt[i][j].im;
            big[i + 4][j] = pt[i][j].im;
            big[i + 4][j + 4] = pt[i][j].re;
        }
    }
    let trace_norm: f64 = jacobi_eigenvalues(big).iter().map(|l| l.abs()).sum::<f64>() / 2.0;
    (trace_norm - 1.0) / 2.0
}


//! Conjugate gradients for Hermitian positive definite operators given as
//! closures over flat complex vectors.

use num_complex::Complex64;

pub struct CgOutcome {
    pub solution: Vec<Complex64>,
    pub iterations: usize,
    pub relative_residual: f64,
    pub converged: bool,
}

fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x * y.conj()).sum()
}

fn norm(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// Solve `A x = b` for Hermitian positive definite `A`. Returns the best
/// iterate even when the tolerance is not reached within `max_iter`.
pub fn solve<F>(apply: F, b: &[Complex64], tol: f64, max_iter: usize) -> CgOutcome
where
    F: Fn(&[Complex64]) -> Vec<Complex64>,
{
    let b_norm = norm(b);
    if b_norm == 0.0 {
        return CgOutcome {
            solution: vec![Complex64::default(); b.len()],
            iterations: 0,
            relative_residual: 0.0,
            converged: true,
        };
    }
    let mut x = vec![Complex64::default(); b.len()];
    let mut r = b.to_vec();
    let mut p = r.clone();
    let mut rho = dot(&r, &r).re;
    let mut iterations = 0;
    while iterations < max_iter {
        if rho.sqrt() <= tol * b_norm {
            break;
        }
        let ap = apply(&p);
        let alpha = rho / dot(&p, &ap).re;
        for i in 0..x.len() {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        let rho_next = dot(&r, &r).re;
        let beta = rho_next / rho;
        for i in 0..p.len() {
            p[i] = r[i] + beta * p[i];
        }
        rho = rho_next;
        iterations += 1;
    }
    let relative_residual = rho.sqrt() / b_norm;
    CgOutcome {
        solution: x,
        iterations,
        relative_residual,
        converged: relative_residual <= tol,
    }
}

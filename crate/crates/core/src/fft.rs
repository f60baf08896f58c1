//! Thin wrappers around rustfft: centered transforms on symmetric index
//! ranges and in-place 2D transforms.
//!
//! A length-`M` vector with `M = 2h+1` odd is indexed by `k in [-h, h]`,
//! stored at position `k + h`. The centered DFT
//! `X(k) = sum_j c(j) exp(-2 pi i j k / M)` reduces exactly to a standard
//! DFT after rotating indices modulo `M`, because `jk mod M` only depends on
//! `j mod M` and `k mod M`; no phase correction is required.

use ndarray::Array2;
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

type PlanKey = (usize, bool);

fn plan_cache() -> &'static Mutex<HashMap<PlanKey, Arc<dyn Fft<f64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<PlanKey, Arc<dyn Fft<f64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Plan (or fetch) a forward/inverse FFT of the given length.
pub fn plan(len: usize, inverse: bool) -> Arc<dyn Fft<f64>> {
    let mut cache = plan_cache().lock().unwrap();
    cache
        .entry((len, inverse))
        .or_insert_with(|| {
            let mut planner = FftPlanner::new();
            if inverse {
                planner.plan_fft_inverse(len)
            } else {
                planner.plan_fft_forward(len)
            }
        })
        .clone()
}

/// Unnormalized forward FFT, in place.
pub fn fft_inplace(data: &mut [Complex64]) {
    plan(data.len(), false).process(data);
}

/// Unnormalized inverse FFT (no 1/M scaling), in place.
pub fn ifft_inplace(data: &mut [Complex64]) {
    plan(data.len(), true).process(data);
}

/// Centered DFT of odd length: `X(k) = sum_{j=-h}^{h} c(j) e^{-2pi i jk/M}`.
pub fn centered_dft(c: &[Complex64]) -> Vec<Complex64> {
    let m = c.len();
    debug_assert!(m % 2 == 1);
    let h = m / 2;
    let mut buf = vec![Complex64::default(); m];
    // scatter c(j) (stored at j+h) to position j mod M
    for (p, &v) in c.iter().enumerate() {
        let j = p as i64 - h as i64;
        buf[j.rem_euclid(m as i64) as usize] = v;
    }
    fft_inplace(&mut buf);
    let mut out = vec![Complex64::default(); m];
    for (p, slot) in out.iter_mut().enumerate() {
        let k = p as i64 - h as i64;
        *slot = buf[k.rem_euclid(m as i64) as usize];
    }
    out
}

/// Adjoint of [`centered_dft`]: `Y(j) = sum_k c(k) e^{+2pi i jk/M}` (the
/// unnormalized centered inverse DFT).
pub fn centered_dft_adjoint(c: &[Complex64]) -> Vec<Complex64> {
    let m = c.len();
    debug_assert!(m % 2 == 1);
    let h = m / 2;
    let mut buf = vec![Complex64::default(); m];
    for (p, &v) in c.iter().enumerate() {
        let k = p as i64 - h as i64;
        buf[k.rem_euclid(m as i64) as usize] = v;
    }
    ifft_inplace(&mut buf);
    let mut out = vec![Complex64::default(); m];
    for (p, slot) in out.iter_mut().enumerate() {
        let j = p as i64 - h as i64;
        *slot = buf[j.rem_euclid(m as i64) as usize];
    }
    out
}

/// Unnormalized forward 2D FFT over both axes of a matrix, in place.
pub fn fft2_inplace(a: &mut Array2<Complex64>) {
    let (rows, cols) = a.dim();
    let row_plan = plan(cols, false);
    let mut scratch = vec![Complex64::default(); cols];
    for mut r in a.rows_mut() {
        for (i, v) in r.iter().enumerate() {
            scratch[i] = *v;
        }
        row_plan.process(&mut scratch);
        for (i, v) in r.iter_mut().enumerate() {
            *v = scratch[i];
        }
    }
    let col_plan = plan(rows, false);
    let mut scratch = vec![Complex64::default(); rows];
    for mut c in a.columns_mut() {
        for (i, v) in c.iter().enumerate() {
            scratch[i] = *v;
        }
        col_plan.process(&mut scratch);
        for (i, v) in c.iter_mut().enumerate() {
            *v = scratch[i];
        }
    }
}

/// Unnormalized inverse 2D FFT (no scaling), in place.
pub fn ifft2_inplace(a: &mut Array2<Complex64>) {
    let (rows, cols) = a.dim();
    let row_plan = plan(cols, true);
    let mut scratch = vec![Complex64::default(); cols];
    for mut r in a.rows_mut() {
        for (i, v) in r.iter().enumerate() {
            scratch[i] = *v;
        }
        row_plan.process(&mut scratch);
        for (i, v) in r.iter_mut().enumerate() {
            *v = scratch[i];
        }
    }
    let col_plan = plan(rows, true);
    let mut scratch = vec![Complex64::default(); rows];
    for mut c in a.columns_mut() {
        for (i, v) in c.iter().enumerate() {
            scratch[i] = *v;
        }
        col_plan.process(&mut scratch);
        for (i, v) in c.iter_mut().enumerate() {
            *v = scratch[i];
        }
    }
}

/// Normalized inverse 2D FFT (scales by 1/(rows*cols)).
pub fn ifft2_normalized(a: &mut Array2<Complex64>) {
    let scale = 1.0 / (a.len() as f64);
    ifft2_inplace(a);
    a.mapv_inplace(|v| v * scale);
}

pub fn next_pow2(n: usize) -> usize {
    let mut p = 1;
    while p < n {
        p <<= 1;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::CounterRng;
    use std::f64::consts::PI;

    fn direct_centered(c: &[Complex64], sign: f64) -> Vec<Complex64> {
        let m = c.len() as i64;
        let h = m / 2;
        (0..m)
            .map(|p| {
                let k = p - h;
                (0..m)
                    .map(|q| {
                        let j = q - h;
                        let phase = sign * 2.0 * PI * (j * k) as f64 / m as f64;
                        c[q as usize] * Complex64::new(phase.cos(), phase.sin())
                    })
                    .sum()
            })
            .collect()
    }

    #[test]
    fn centered_dft_matches_direct_sum() {
        let mut rng = CounterRng::new(11);
        for &m in &[5usize, 9, 17, 33] {
            let c: Vec<Complex64> = (0..m)
                .map(|_| Complex64::new(rng.normal(), rng.normal()))
                .collect();
            let fast = centered_dft(&c);
            let slow = direct_centered(&c, -1.0);
            for (a, b) in fast.iter().zip(&slow) {
                assert!((a - b).norm() < 1e-11, "m={m}");
            }
            let fast_adj = centered_dft_adjoint(&c);
            let slow_adj = direct_centered(&c, 1.0);
            for (a, b) in fast_adj.iter().zip(&slow_adj) {
                assert!((a - b).norm() < 1e-11, "adjoint m={m}");
            }
        }
    }

    #[test]
    fn fft2_roundtrip() {
        let mut rng = CounterRng::new(3);
        let mut a = Array2::from_shape_fn((6, 10), |_| Complex64::new(rng.normal(), rng.normal()));
        let orig = a.clone();
        fft2_inplace(&mut a);
        ifft2_normalized(&mut a);
        for (x, y) in a.iter().zip(orig.iter()) {
            assert!((x - y).norm() < 1e-12);
        }
    }
}

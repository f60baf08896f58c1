//! 1D fractional Fourier transform and symmetric zero padding.
//!
//! For an odd length `M = N+1` and indices `j, k in [-N/2, N/2]`, the
//! transform is `F(k) = sum_j c(j) exp(-2 pi i j k alpha)`. The product
//! `jk` factors as `(j^2 + k^2 - (j-k)^2) / 2`, which turns the sum into a
//! chirp-modulated convolution evaluated with zero-padded cyclic FFTs of
//! length `>= 2M - 1`. At `alpha = 1/M` this is the unaliased DFT.

use crate::error::{Error, Result};
use crate::fft;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::Arc;

/// `exp(i pi x)` with the argument reduced modulo 2 first, so large `j^2
/// alpha` products do not lose phase accuracy.
#[inline]
fn cis_pi(x: f64) -> Complex64 {
    let r = x - 2.0 * (x / 2.0).round();
    Complex64::new((PI * r).cos(), (PI * r).sin())
}

/// Reusable plan for a fixed `(length, alpha)` pair.
#[derive(Clone)]
pub struct FrftPlan {
    len: usize,
    alpha: f64,
    /// e^{-i pi j^2 alpha} for j in [-h, h], at position j + h.
    pre_chirp: Vec<Complex64>,
    /// FFT of the wrapped filter e^{+i pi m^2 alpha}.
    filter_hat: Vec<Complex64>,
    conv_len: usize,
    fwd: Arc<dyn rustfft::Fft<f64>>,
    inv: Arc<dyn rustfft::Fft<f64>>,
}

impl FrftPlan {
    pub fn new(len: usize, alpha: f64) -> Result<Self> {
        if len % 2 == 0 {
            return Err(Error::InvalidSize(format!("frft length {len} must be odd")));
        }
        let h = (len / 2) as i64;
        let pre_chirp: Vec<Complex64> = (-h..=h)
            .map(|j| cis_pi(-((j * j) as f64) * alpha))
            .collect();
        let conv_len = fft::next_pow2(2 * len - 1);
        let mut filter = vec![Complex64::default(); conv_len];
        for m in -(len as i64 - 1)..=(len as i64 - 1) {
            let idx = m.rem_euclid(conv_len as i64) as usize;
            filter[idx] = cis_pi(((m * m) as f64) * alpha);
        }
        let fwd = fft::plan(conv_len, false);
        let inv = fft::plan(conv_len, true);
        fwd.process(&mut filter);
        Ok(FrftPlan {
            len,
            alpha,
            pre_chirp,
            filter_hat: filter,
            conv_len,
            fwd,
            inv,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Apply the plan to one vector of matching length.
    pub fn apply(&self, c: &[Complex64]) -> Result<Vec<Complex64>> {
        if c.len() != self.len {
            return Err(Error::ShapeMismatch(format!(
                "frft input length {} does not match plan length {}",
                c.len(),
                self.len
            )));
        }
        let mut buf = vec![Complex64::default(); self.conv_len];
        for (p, &v) in c.iter().enumerate() {
            buf[p] = v * self.pre_chirp[p];
        }
        self.fwd.process(&mut buf);
        for (b, f) in buf.iter_mut().zip(self.filter_hat.iter()) {
            *b *= f;
        }
        self.inv.process(&mut buf);
        let scale = 1.0 / self.conv_len as f64;
        Ok((0..self.len)
            .map(|p| buf[p] * self.pre_chirp[p] * scale)
            .collect())
    }
}

/// One-shot fractional Fourier transform.
pub fn frft(c: &[Complex64], alpha: f64) -> Result<Vec<Complex64>> {
    FrftPlan::new(c.len(), alpha)?.apply(c)
}

/// Adjoint transform; equals `frft(c, -alpha)`.
pub fn frft_adjoint(c: &[Complex64], alpha: f64) -> Result<Vec<Complex64>> {
    frft(c, -alpha)
}

/// Direct O(M^2) evaluation; the oracle against which the fast path is
/// verified.
pub fn frft_direct(c: &[Complex64], alpha: f64) -> Result<Vec<Complex64>> {
    if c.len() % 2 == 0 {
        return Err(Error::InvalidSize(format!("frft length {} must be odd", c.len())));
    }
    let h = (c.len() / 2) as i64;
    Ok((-h..=h)
        .map(|k| {
            (-h..=h)
                .map(|j| {
                    let phase = -2.0 * ((j * k) as f64) * alpha;
                    c[(j + h) as usize] * cis_pi(phase)
                })
                .sum()
        })
        .collect())
}

/// Symmetric zero padding `E_{m,N}`: the input occupies `k in [-N/2, N/2-1]`
/// inside the odd-length output index range `[-m/2, m/2]`.
pub fn pad(c: &[Complex64], m: usize) -> Result<Vec<Complex64>> {
    let n = c.len();
    if n % 2 != 0 {
        return Err(Error::InvalidSize(format!("pad input length {n} must be even")));
    }
    if m % 2 == 0 || m <= n {
        return Err(Error::InvalidSize(format!("pad target {m} must be odd and exceed {n}")));
    }
    let mut out = vec![Complex64::default(); m];
    let offset = m / 2 - n / 2;
    out[offset..offset + n].copy_from_slice(c);
    Ok(out)
}

/// Adjoint of [`pad`]: restriction to the central window `[-N/2, N/2-1]`.
pub fn pad_adjoint(c: &[Complex64], n: usize) -> Result<Vec<Complex64>> {
    let m = c.len();
    if n % 2 != 0 || m % 2 == 0 || m <= n {
        return Err(Error::ShapeMismatch(format!(
            "pad_adjoint from length {m} to {n} needs m odd, n even, m > n"
        )));
    }
    let offset = m / 2 - n / 2;
    Ok(c[offset..offset + n].to_vec())
}

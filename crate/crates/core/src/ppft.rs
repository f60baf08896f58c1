//! Pseudo-polar Fourier transform: brute-force oracle, fast cascade, and the
//! exact adjoint of the fast cascade.
//!
//! With `m0 = 2(RN+1)/R`, the transform at a sector-2 point reduces to
//! `sum_u (sum_v I(u,v) e^{-2pi i v n/(RN+1)}) e^{-2pi i u l alpha_n}` with
//! `alpha_n = -2n/((RN+1)N)`; sector 1 is the same cascade on the transposed
//! image. The fast path pads columns to length `RN+1`, applies the centered
//! FFT, pads rows to `N+1`, then applies one fractional transform per radial
//! index.

use crate::error::{Error, Result};
use crate::fft;
use crate::frft::{self, FrftPlan};
use crate::grid::{PPGridParams, Sector};
use crate::image::{ComplexImage, RealImage};
use crate::pparray::PPArray;
use ndarray::Array2;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Reusable plan: the per-`n` fractional-transform step sizes plus cached
/// FFT plans for the two lengths the cascade needs.
pub struct PpftPlan {
    params: PPGridParams,
    /// Fractional plans indexed by `n + RN/2`; `alpha_{-n} = -alpha_n`.
    frft_plans: Vec<FrftPlan>,
}

impl PpftPlan {
    pub fn new(params: PPGridParams) -> Result<Self> {
        let rn = params.rn_half();
        let denom = (params.rows() * params.n()) as f64;
        let frft_plans = (-rn..=rn)
            .map(|n| FrftPlan::new(params.cols(), -2.0 * n as f64 / denom))
            .collect::<Result<Vec<_>>>()?;
        Ok(PpftPlan { params, frft_plans })
    }

    pub fn params(&self) -> PPGridParams {
        self.params
    }

    pub fn alpha(&self, n: i64) -> f64 {
        self.frft_plans[(n + self.params.rn_half()) as usize].alpha()
    }

    fn frft_plan(&self, n: i64) -> &FrftPlan {
        &self.frft_plans[(n + self.params.rn_half()) as usize]
    }
}

/// Direct O(N^4) evaluation of the transform on every stored grid index;
/// serves as the oracle for the fast path.
pub fn ppft_direct(image: &RealImage, params: PPGridParams) -> Result<PPArray> {
    if image.n() != params.n() {
        return Err(Error::ShapeMismatch(format!(
            "image side {} does not match grid N={}",
            image.n(),
            params.n()
        )));
    }
    let mut out = PPArray::zeros(params);
    let half = params.n_half();
    // exponent at a grid point: (u w1 + v w2) / m0; both terms are integer
    // multiples of 1/(N(RN+1))
    let denom = (params.rows() * params.n()) as f64;
    for sector in [Sector::One, Sector::Two] {
        for (n, l) in params.sector_indices() {
            let mut acc = Complex64::default();
            for u in -half..half {
                for v in -half..half {
                    // sector 1: (u w1 + v w2)/m0 = (-2unl + vnN) / (N(RN+1))
                    let numer = match sector {
                        Sector::One => -2 * u * n * l + v * n * params.n() as i64,
                        Sector::Two => u * n * params.n() as i64 - 2 * v * n * l,
                    };
                    let phase = -2.0 * PI * numer as f64 / denom;
                    acc += image.at(u, v) * Complex64::new(phase.cos(), phase.sin());
                }
            }
            out.set(sector, n, l, acc);
        }
    }
    Ok(out)
}

/// One sector of the fast cascade: columns of `data` are padded to `RN+1`
/// and transformed, rows padded to `N+1`, then each radial row gets its
/// fractional transform.
fn sector_forward(data: &Array2<Complex64>, plan: &PpftPlan) -> Result<Array2<Complex64>> {
    let p = plan.params;
    let n = p.n();
    let rows = p.rows();
    let cols = p.cols();
    // step 1: pad each column (v direction) to RN+1 and centered-DFT it;
    // intermediate T is indexed [u][n_idx]
    let mut t = Array2::<Complex64>::zeros((n, rows));
    let mut col = Vec::with_capacity(n);
    for u in 0..n {
        col.clear();
        col.extend(data.row(u).iter().copied());
        let padded = frft::pad(&col, rows)?;
        let hat = fft::centered_dft(&padded);
        for (k, v) in hat.into_iter().enumerate() {
            t[(u, k)] = v;
        }
    }
    // steps 2-3: for each radial index, pad the u-vector to N+1 and apply
    // the fractional transform, landing on the angular index l
    let mut out = Array2::<Complex64>::zeros((rows, cols));
    let mut uvec = Vec::with_capacity(n);
    for k in 0..rows {
        let n_signed = k as i64 - p.rn_half();
        uvec.clear();
        uvec.extend((0..n).map(|u| t[(u, k)]));
        let padded = frft::pad(&uvec, cols)?;
        let hat = plan.frft_plan(n_signed).apply(&padded)?;
        for (c, v) in hat.into_iter().enumerate() {
            out[(k, c)] = v;
        }
    }
    Ok(out)
}

/// Adjoint of [`sector_forward`] with respect to plain entrywise inner
/// products, built operator by operator in reverse.
fn sector_adjoint(sector: &Array2<Complex64>, plan: &PpftPlan) -> Result<Array2<Complex64>> {
    let p = plan.params;
    let n = p.n();
    let rows = p.rows();
    // reverse steps 2-3
    let mut t = Array2::<Complex64>::zeros((n, rows));
    let mut lvec = Vec::with_capacity(p.cols());
    for k in 0..rows {
        let n_signed = k as i64 - p.rn_half();
        lvec.clear();
        lvec.extend(sector.row(k).iter().copied());
        // adjoint of the fractional transform is the transform at -alpha
        let back = frft::frft(&lvec, -plan.alpha(n_signed))?;
        let trimmed = frft::pad_adjoint(&back, n)?;
        for (u, v) in trimmed.into_iter().enumerate() {
            t[(u, k)] = v;
        }
    }
    // reverse step 1
    let mut out = Array2::<Complex64>::zeros((n, n));
    let mut nvec = Vec::with_capacity(rows);
    for u in 0..n {
        nvec.clear();
        nvec.extend(t.row(u).iter().copied());
        let back = fft::centered_dft_adjoint(&nvec);
        let trimmed = frft::pad_adjoint(&back, n)?;
        for (v, val) in trimmed.into_iter().enumerate() {
            out[(u, v)] = val;
        }
    }
    Ok(out)
}

/// Fast pseudo-polar Fourier transform, `O(R N^2 log N)`.
pub fn ppft_fast(image: &RealImage, plan: &PpftPlan) -> Result<PPArray> {
    ppft_fast_complex(&image.to_complex(), plan)
}

/// Fast transform of a complex image (the iterative solvers need this).
pub fn ppft_fast_complex(image: &ComplexImage, plan: &PpftPlan) -> Result<PPArray> {
    let p = plan.params;
    if image.n() != p.n() {
        return Err(Error::ShapeMismatch(format!(
            "image side {} does not match grid N={}",
            image.n(),
            p.n()
        )));
    }
    // sector 2 runs the cascade on the image itself (radial index couples to
    // u); sector 1 runs it on the transpose
    let sector2 = sector_forward(image.array(), plan)?;
    let transposed = image.array().t().to_owned();
    let sector1 = sector_forward(&transposed, plan)?;
    PPArray::from_sectors(p, sector1, sector2)
}

/// Exact adjoint of [`ppft_fast`] with respect to the stored (multiset)
/// inner product on the grid and the entrywise inner product on images.
pub fn ppft_adjoint(values: &PPArray, plan: &PpftPlan) -> Result<ComplexImage> {
    let p = plan.params;
    if values.params() != p {
        return Err(Error::ShapeMismatch("grid parameters do not match plan".into()));
    }
    let from2 = sector_adjoint(values.sector(Sector::Two), plan)?;
    let from1 = sector_adjoint(values.sector(Sector::One), plan)?;
    ComplexImage::from_array(&from2 + &from1.t())
}

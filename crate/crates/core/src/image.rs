//! Square images with centered indices `u, v in [-n/2, n/2 - 1]`.

use crate::error::{Error, Result};
use crate::rng::CounterRng;
use ndarray::Array2;
use num_complex::Complex64;

/// Real N x N sample array, row-major with the first axis indexed by `u`.
#[derive(Debug, Clone, PartialEq)]
pub struct RealImage {
    n: usize,
    data: Array2<f64>,
}

impl RealImage {
    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 || n % 2 != 0 {
            return Err(Error::InvalidSize(format!("image side {n} must be even and positive")));
        }
        Ok(RealImage { n, data: Array2::zeros((n, n)) })
    }

    pub fn from_array(data: Array2<f64>) -> Result<Self> {
        let (r, c) = data.dim();
        if r != c || r == 0 || r % 2 != 0 {
            return Err(Error::InvalidSize(format!("image shape {r}x{c} must be square with even side")));
        }
        Ok(RealImage { n: r, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn array(&self) -> &Array2<f64> {
        &self.data
    }

    pub fn array_mut(&mut self) -> &mut Array2<f64> {
        &mut self.data
    }

    /// Access by centered coordinates.
    #[inline]
    pub fn at(&self, u: i64, v: i64) -> f64 {
        let h = (self.n / 2) as i64;
        self.data[((u + h) as usize, (v + h) as usize)]
    }

    #[inline]
    pub fn set(&mut self, u: i64, v: i64, value: f64) {
        let h = (self.n / 2) as i64;
        self.data[((u + h) as usize, (v + h) as usize)] = value;
    }

    pub fn random_normal(n: usize, rng: &mut CounterRng) -> Result<Self> {
        let mut img = RealImage::zeros(n)?;
        for x in img.data.iter_mut() {
            *x = rng.normal();
        }
        Ok(img)
    }

    pub fn random_uniform(n: usize, rng: &mut CounterRng) -> Result<Self> {
        let mut img = RealImage::zeros(n)?;
        for x in img.data.iter_mut() {
            *x = rng.uniform();
        }
        Ok(img)
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn to_complex(&self) -> ComplexImage {
        ComplexImage {
            n: self.n,
            data: self.data.mapv(|x| Complex64::new(x, 0.0)),
        }
    }
}

/// Complex-valued image of the same layout; adjoint transforms and iterative
/// solvers work here and take the real part at the end.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexImage {
    n: usize,
    data: Array2<Complex64>,
}

impl ComplexImage {
    pub fn zeros(n: usize) -> Self {
        ComplexImage { n, data: Array2::zeros((n, n)) }
    }

    pub fn from_array(data: Array2<Complex64>) -> Result<Self> {
        let (r, c) = data.dim();
        if r != c || r == 0 || r % 2 != 0 {
            return Err(Error::InvalidSize(format!("image shape {r}x{c} must be square with even side")));
        }
        Ok(ComplexImage { n: r, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn array(&self) -> &Array2<Complex64> {
        &self.data
    }

    pub fn array_mut(&mut self) -> &mut Array2<Complex64> {
        &mut self.data
    }

    #[inline]
    pub fn at(&self, u: i64, v: i64) -> Complex64 {
        let h = (self.n / 2) as i64;
        self.data[((u + h) as usize, (v + h) as usize)]
    }

    #[inline]
    pub fn set(&mut self, u: i64, v: i64, value: Complex64) {
        let h = (self.n / 2) as i64;
        self.data[((u + h) as usize, (v + h) as usize)] = value;
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn inner(&self, other: &ComplexImage) -> Complex64 {
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a * b.conj())
            .sum()
    }

    /// Real part as a [`RealImage`]; also returns the l2 norm of the
    /// discarded imaginary part as a diagnostic.
    pub fn into_real(self) -> (RealImage, f64) {
        let imag_norm = self.data.iter().map(|x| x.im * x.im).sum::<f64>().sqrt();
        let real = RealImage {
            n: self.n,
            data: self.data.mapv(|x| x.re),
        };
        (real, imag_norm)
    }
}

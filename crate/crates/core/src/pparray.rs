//! Complex values stored on the oversampled pseudo-polar grid.
//!
//! Both sectors are stored in full, duplicates included: seam points live in
//! two slots and the center in `2(N+1)` slots. Two inner products matter:
//!
//! * [`PPArray::inner_stored`] sums over every stored slot. The fast
//!   transform and its adjoint are an exact adjoint pair with respect to it.
//! * [`PPArray::inner_points`] weights each slot by `1/multiplicity`, so it
//!   sums every distinct grid point once. The shearlet windowing is an
//!   isometry with respect to it.

use crate::error::{Error, Result};
use crate::grid::{PPGridParams, Sector};
use crate::rng::CounterRng;
use ndarray::Array2;
use num_complex::Complex64;

#[derive(Debug, Clone)]
pub struct PPArray {
    params: PPGridParams,
    sector1: Array2<Complex64>,
    sector2: Array2<Complex64>,
}

impl PPArray {
    pub fn zeros(params: PPGridParams) -> Self {
        let shape = (params.rows(), params.cols());
        PPArray {
            params,
            sector1: Array2::zeros(shape),
            sector2: Array2::zeros(shape),
        }
    }

    pub fn from_sectors(
        params: PPGridParams,
        sector1: Array2<Complex64>,
        sector2: Array2<Complex64>,
    ) -> Result<Self> {
        let shape = (params.rows(), params.cols());
        if sector1.dim() != shape || sector2.dim() != shape {
            return Err(Error::ShapeMismatch(format!(
                "sector shapes {:?}/{:?} do not match grid {:?}",
                sector1.dim(),
                sector2.dim(),
                shape
            )));
        }
        Ok(PPArray { params, sector1, sector2 })
    }

    pub fn params(&self) -> PPGridParams {
        self.params
    }

    pub fn sector(&self, s: Sector) -> &Array2<Complex64> {
        match s {
            Sector::One => &self.sector1,
            Sector::Two => &self.sector2,
        }
    }

    pub fn sector_mut(&mut self, s: Sector) -> &mut Array2<Complex64> {
        match s {
            Sector::One => &mut self.sector1,
            Sector::Two => &mut self.sector2,
        }
    }

    /// Row/column position of the signed index pair.
    #[inline]
    pub fn slot(&self, n: i64, l: i64) -> (usize, usize) {
        (
            (n + self.params.rn_half()) as usize,
            (l + self.params.n_half()) as usize,
        )
    }

    #[inline]
    pub fn at(&self, s: Sector, n: i64, l: i64) -> Complex64 {
        let (r, c) = self.slot(n, l);
        self.sector(s)[(r, c)]
    }

    #[inline]
    pub fn set(&mut self, s: Sector, n: i64, l: i64, value: Complex64) {
        let (r, c) = self.slot(n, l);
        self.sector_mut(s)[(r, c)] = value;
    }

    /// Inner product over every stored slot, duplicates included.
    pub fn inner_stored(&self, other: &PPArray) -> Complex64 {
        let dot = |a: &Array2<Complex64>, b: &Array2<Complex64>| -> Complex64 {
            a.iter().zip(b.iter()).map(|(x, y)| x * y.conj()).sum()
        };
        dot(&self.sector1, &other.sector1) + dot(&self.sector2, &other.sector2)
    }

    pub fn norm_stored(&self) -> f64 {
        self.inner_stored(self).re.max(0.0).sqrt()
    }

    /// Inner product over distinct grid points (slots weighted by the
    /// reciprocal multiplicity). For seam-consistent arrays this equals the
    /// inner product of the underlying grid functions.
    pub fn inner_points(&self, other: &PPArray) -> Complex64 {
        let mut acc = Complex64::default();
        for s in [Sector::One, Sector::Two] {
            for (n, l) in self.params.sector_indices() {
                let w = 1.0 / self.params.multiplicity(s, n, l).unwrap() as f64;
                acc += self.at(s, n, l) * other.at(s, n, l).conj() * w;
            }
        }
        acc
    }

    pub fn norm_points(&self) -> f64 {
        self.inner_points(self).re.max(0.0).sqrt()
    }

    /// Largest disagreement between stored copies of the same grid point.
    pub fn seam_inconsistency(&self) -> f64 {
        let p = self.params;
        let mut worst: f64 = 0.0;
        // center: all copies against sector 1, l = 0
        let c0 = self.at(Sector::One, 0, 0);
        for s in [Sector::One, Sector::Two] {
            for l in -p.n_half()..=p.n_half() {
                worst = worst.max((self.at(s, 0, l) - c0).norm());
            }
        }
        // seams: sector 1 (n, +-N/2) pairs with sector 2 at (n or -n, -+N/2)
        let nh = p.n_half();
        for n in -p.rn_half()..=p.rn_half() {
            if n == 0 {
                continue;
            }
            let a = (self.at(Sector::One, n, -nh) - self.at(Sector::Two, n, -nh)).norm();
            let b = (self.at(Sector::One, n, nh) - self.at(Sector::Two, -n, nh)).norm();
            worst = worst.max(a).max(b);
        }
        worst
    }

    pub fn is_seam_consistent(&self, tol: f64) -> bool {
        self.seam_inconsistency() <= tol
    }

    /// Random grid function: one value per distinct point, duplicated into
    /// every stored slot, so the result is seam-consistent by construction.
    pub fn random_consistent(params: PPGridParams, rng: &mut CounterRng) -> PPArray {
        let mut a = PPArray::zeros(params);
        let nh = params.n_half();
        let center = Complex64::new(rng.normal(), rng.normal());
        for s in [Sector::One, Sector::Two] {
            for (n, l) in params.sector_indices() {
                if n == 0 {
                    a.set(s, n, l, center);
                } else {
                    a.set(s, n, l, Complex64::new(rng.normal(), rng.normal()));
                }
            }
        }
        // overwrite one copy of every seam pair with the other
        for n in -params.rn_half()..=params.rn_half() {
            if n == 0 {
                continue;
            }
            let main_diag = a.at(Sector::One, n, -nh);
            a.set(Sector::Two, n, -nh, main_diag);
            let anti_diag = a.at(Sector::One, n, nh);
            a.set(Sector::Two, -n, nh, anti_diag);
        }
        a
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> PPArray {
        PPArray {
            params: self.params,
            sector1: self.sector1.mapv(&f),
            sector2: self.sector2.mapv(&f),
        }
    }

    pub fn add(&self, other: &PPArray) -> PPArray {
        PPArray {
            params: self.params,
            sector1: &self.sector1 + &other.sector1,
            sector2: &self.sector2 + &other.sector2,
        }
    }

    pub fn sub(&self, other: &PPArray) -> PPArray {
        PPArray {
            params: self.params,
            sector1: &self.sector1 - &other.sector1,
            sector2: &self.sector2 - &other.sector2,
        }
    }

    pub fn scale(&self, c: Complex64) -> PPArray {
        self.map(|v| v * c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_consistent_is_consistent() {
        let params = PPGridParams::new(8, 4).unwrap();
        let mut rng = CounterRng::new(5);
        let a = PPArray::random_consistent(params, &mut rng);
        assert!(a.is_seam_consistent(0.0));
    }

    #[test]
    fn point_norm_counts_each_point_once() {
        let params = PPGridParams::new(4, 2).unwrap();
        let mut rng = CounterRng::new(9);
        let a = PPArray::random_consistent(params, &mut rng);
        // sum |value|^2 over deduplicated points, computed independently
        let mut seen = std::collections::HashSet::new();
        let mut sum = 0.0;
        for s in [Sector::One, Sector::Two] {
            for (n, l) in params.sector_indices() {
                if seen.insert(params.point_exact(s, n, l).unwrap()) {
                    sum += a.at(s, n, l).norm_sqr();
                }
            }
        }
        assert!((a.norm_points().powi(2) - sum).abs() < 1e-9 * sum);
        assert!(a.norm_stored() > a.norm_points());
    }

    #[test]
    fn inconsistency_detected() {
        let params = PPGridParams::new(4, 2).unwrap();
        let mut rng = CounterRng::new(1);
        let mut a = PPArray::random_consistent(params, &mut rng);
        assert!(a.is_seam_consistent(1e-15));
        let nh = params.n_half();
        let v = a.at(Sector::One, 2, nh);
        a.set(Sector::One, 2, nh, v + Complex64::new(1.0, 0.0));
        assert!(!a.is_seam_consistent(0.5));
    }
}

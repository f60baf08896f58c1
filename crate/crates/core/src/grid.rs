//! Geometry of the oversampled pseudo-polar grid.
//!
//! The grid is the union of two quasi-polar sectors. Sector 1 maps index
//! `(n, l)` to `(-(2n/R)(2l/N), 2n/R)`, sector 2 to `(2n/R, -(2n/R)(2l/N))`,
//! with `n in [-RN/2, RN/2]` and `l in [-N/2, N/2]`. The union is not
//! disjoint: the center `(0,0)` appears `N+1` times per sector and the two
//! diagonal seam lines appear in both sectors.

use crate::error::{Error, Result};

/// Grid parameters: image side `n` (even), radial oversampling `r` (even).
/// The frequency scale constant is `m0 = 2(RN+1)/R`; only the combinations
/// `n/(RN+1)` and `2nl/((RN+1)N)` ever enter exponents, so `m0` is kept
/// symbolic rather than stored as a float.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PPGridParams {
    n: usize,
    r: usize,
}

/// Which sector of the grid an index pair refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sector {
    One,
    Two,
}

impl Sector {
    pub fn id(self) -> u8 {
        match self {
            Sector::One => 1,
            Sector::Two => 2,
        }
    }

    pub fn other(self) -> Sector {
        match self {
            Sector::One => Sector::Two,
            Sector::Two => Sector::One,
        }
    }
}

/// Classification flags of a stored grid index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointClass {
    pub center: bool,
    pub seam: bool,
    pub boundary: bool,
}

impl PointClass {
    pub fn interior(&self) -> bool {
        !self.center && !self.seam && !self.boundary
    }
}

impl PPGridParams {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if n == 0 || n % 2 != 0 {
            return Err(Error::InvalidSize(format!("grid N={n} must be even and positive")));
        }
        if r == 0 || r % 2 != 0 {
            return Err(Error::InvalidSize(format!("oversampling R={r} must be even and positive")));
        }
        Ok(PPGridParams { n, r })
    }

    /// Default radial oversampling R = 8.
    pub fn with_default_oversampling(n: usize) -> Result<Self> {
        PPGridParams::new(n, 8)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Radial half-extent: `n` ranges over `[-rn_half, rn_half]`.
    pub fn rn_half(&self) -> i64 {
        (self.r * self.n / 2) as i64
    }

    /// Angular half-extent: `l` ranges over `[-n_half, n_half]`.
    pub fn n_half(&self) -> i64 {
        (self.n / 2) as i64
    }

    /// Rows per sector, `RN + 1`.
    pub fn rows(&self) -> usize {
        self.r * self.n + 1
    }

    /// Columns per sector, `N + 1`.
    pub fn cols(&self) -> usize {
        self.n + 1
    }

    pub fn check_index(&self, sector: Sector, n: i64, l: i64) -> Result<()> {
        if n.abs() > self.rn_half() || l.abs() > self.n_half() {
            return Err(Error::IndexOutOfRange { sector: sector.id(), n, l });
        }
        Ok(())
    }

    /// Frequency coordinates of a stored index.
    pub fn point(&self, sector: Sector, n: i64, l: i64) -> Result<(f64, f64)> {
        self.check_index(sector, n, l)?;
        let radial = 2.0 * n as f64 / self.r as f64;
        let sheared = -radial * (2.0 * l as f64 / self.n as f64);
        Ok(match sector {
            Sector::One => (sheared, radial),
            Sector::Two => (radial, sheared),
        })
    }

    /// Exact integer coordinates at the common denominator `RN`:
    /// sector 1 gives `(-4nl, 2nN)`, sector 2 gives `(2nN, -4nl)`. Two stored
    /// indices refer to the same grid point iff these keys agree.
    pub fn point_exact(&self, sector: Sector, n: i64, l: i64) -> Result<(i64, i64)> {
        self.check_index(sector, n, l)?;
        let radial = 2 * n * self.n as i64;
        let sheared = -4 * n * l;
        Ok(match sector {
            Sector::One => (sheared, radial),
            Sector::Two => (radial, sheared),
        })
    }

    pub fn classify(&self, sector: Sector, n: i64, l: i64) -> Result<PointClass> {
        self.check_index(sector, n, l)?;
        Ok(PointClass {
            center: n == 0,
            seam: n != 0 && l.abs() == self.n_half(),
            boundary: n.abs() == self.rn_half(),
        })
    }

    /// How many stored indices map onto the same grid point.
    pub fn multiplicity(&self, sector: Sector, n: i64, l: i64) -> Result<usize> {
        let class = self.classify(sector, n, l)?;
        Ok(if class.center {
            2 * (self.n + 1)
        } else if class.seam {
            2
        } else {
            1
        })
    }

    /// Normalization `C` compensating the storage redundancy; it satisfies
    /// `C^2 * multiplicity = 1` at every stored index.
    pub fn c_norm(&self, sector: Sector, n: i64, l: i64) -> Result<f64> {
        Ok(1.0 / (self.multiplicity(sector, n, l)? as f64).sqrt())
    }

    /// Iterate all stored indices of one sector.
    pub fn sector_indices(&self) -> impl Iterator<Item = (i64, i64)> {
        let rn = self.rn_half();
        let nh = self.n_half();
        (-rn..=rn).flat_map(move |n| (-nh..=nh).map(move |l| (n, l)))
    }

    /// Number of stored indices on both sectors.
    pub fn stored_len(&self) -> usize {
        2 * self.rows() * self.cols()
    }

    /// Number of distinct grid points: stored indices minus center and seam
    /// duplicates. Each of the 2RN distinct seam points is stored once per
    /// sector; the center is stored N+1 times per sector.
    pub fn distinct_len(&self) -> usize {
        let center_duplicates = 2 * (self.n + 1) - 1;
        let seam_duplicates = 2 * self.r * self.n;
        self.stored_len() - center_duplicates - seam_duplicates
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn point_formula_examples() {
        let p = PPGridParams::new(4, 4).unwrap();
        // center: n = 0 annihilates both coordinates
        for l in -2..=2 {
            assert_eq!(p.point(Sector::One, 0, l).unwrap(), (0.0, 0.0));
        }
        assert_eq!(p.point(Sector::One, 2, 1).unwrap(), (-0.5, 1.0));
        assert_eq!(p.point(Sector::Two, -2, -2).unwrap(), (-1.0, -1.0));
        assert!(p.point(Sector::One, 9, 0).is_err());
    }

    #[test]
    fn classification() {
        let p = PPGridParams::new(8, 4).unwrap();
        assert!(p.classify(Sector::One, 0, 3).unwrap().center);
        let seam = p.classify(Sector::One, 5, 4).unwrap();
        assert!(seam.seam && !seam.center && !seam.boundary);
        let b = p.classify(Sector::Two, p.rn_half(), 0).unwrap();
        assert!(b.boundary && !b.seam);
        // boundary and seam may hold together
        let bs = p.classify(Sector::Two, p.rn_half(), 4).unwrap();
        assert!(bs.boundary && bs.seam);
        assert!(p.classify(Sector::One, 1, 1).unwrap().interior());
    }

    #[test]
    fn stored_count_small_grid() {
        let p = PPGridParams::new(4, 4).unwrap();
        assert_eq!(p.rows() * p.cols(), 17 * 5);
        assert_eq!(p.stored_len(), 170);
    }

    #[test]
    fn multiplicities_match_deduplication() {
        for (n, r) in [(4usize, 4usize), (4, 2), (8, 4)] {
            let p = PPGridParams::new(n, r).unwrap();
            let mut distinct = HashSet::new();
            let mut inv_mult_sum = 0.0;
            for sector in [Sector::One, Sector::Two] {
                for (n_i, l_i) in p.sector_indices() {
                    distinct.insert(p.point_exact(sector, n_i, l_i).unwrap());
                    inv_mult_sum += 1.0 / p.multiplicity(sector, n_i, l_i).unwrap() as f64;
                }
            }
            assert_eq!(distinct.len(), p.distinct_len(), "N={n} R={r}");
            assert!((inv_mult_sum - distinct.len() as f64).abs() < 1e-9, "N={n} R={r}");
        }
    }

    #[test]
    fn center_copies_all_map_to_origin() {
        let p = PPGridParams::new(4, 4).unwrap();
        let mut copies = 0;
        for sector in [Sector::One, Sector::Two] {
            for (n_i, l_i) in p.sector_indices() {
                if p.point_exact(sector, n_i, l_i).unwrap() == (0, 0) {
                    copies += 1;
                    assert_eq!(n_i, 0);
                }
            }
        }
        assert_eq!(copies, 2 * (p.n() + 1));
    }

    #[test]
    fn sectors_are_coordinate_swaps() {
        let p = PPGridParams::new(4, 2).unwrap();
        let s1: HashSet<_> = p
            .sector_indices()
            .map(|(n, l)| p.point_exact(Sector::One, n, l).unwrap())
            .collect();
        let s2_swapped: HashSet<_> = p
            .sector_indices()
            .map(|(n, l)| {
                let (x, y) = p.point_exact(Sector::Two, n, l).unwrap();
                (y, x)
            })
            .collect();
        assert_eq!(s1, s2_swapped);
    }

    #[test]
    fn points_stay_in_square() {
        let p = PPGridParams::new(8, 2).unwrap();
        for sector in [Sector::One, Sector::Two] {
            for (n, l) in p.sector_indices() {
                let (x, y) = p.point(sector, n, l).unwrap();
                assert!(x.abs() <= p.n() as f64 + 1e-12);
                assert!(y.abs() <= p.n() as f64 + 1e-12);
            }
        }
    }
}

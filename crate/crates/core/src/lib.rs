//! Digital shearlet transforms and a quantitative performance harness.
//!
//! Three transforms are provided:
//!
//! * [`fdst`] — band-limited shearlets realized in the frequency domain:
//!   a pseudo-polar Fourier transform ([`ppft`]), density-compensation
//!   weighting ([`weights`]), and Meyer-window subband decomposition
//!   ([`windows`]) that forms a Parseval frame on the grid.
//! * [`dsst`] — compactly supported separable shearlets built from a
//!   conjugate-quadrature filter pair ([`cqf`]), a digital shear operator,
//!   and an anisotropic wavelet transform, inverted by conjugate gradients.
//! * [`dnst`] — compactly supported non-separable shearlets as a bank of
//!   fan-filtered convolution kernels with exact dual-filter reconstruction.
//!
//! The [`measures`] module quantifies both transforms with eight
//! reproducible measures (algebraic exactness, isometry, tightness,
//! space-frequency localization, shear invariance, speed, geometric
//! exactness, thresholding stability), and [`io`] holds the binary file
//! formats used by the command-line tools.

pub mod cg;
pub mod cqf;
pub mod dnst;
pub mod dsst;
pub mod error;
pub mod fdst;
pub mod fft;
pub mod frft;
pub mod grid;
pub mod image;
pub mod io;
pub mod measures;
pub mod pparray;
pub mod ppft;
pub mod rng;
pub mod weights;
pub mod windows;

pub use error::{Error, Result};
pub use grid::{PPGridParams, PointClass, Sector};
pub use image::{ComplexImage, RealImage};
pub use pparray::PPArray;

//! Special functions behind the SU(2) and SU(1,1) matrix elements.

pub mod gamma;
pub mod hypergeometric;
pub mod jacobi;
pub mod su11;
pub mod wigner;

pub use gamma::{gamma, ln_factorial, ln_gamma_real, log_gamma};
pub use hypergeometric::{hyp2f1, hyp2f1_real};
pub use jacobi::jacobi;
pub use su11::{bargmann_b, bargmann_b_continued, c_function, l_function, Series, Su11Args};
pub use wigner::{dmatrix, s_factor, wigner_d, wigner_oracle, DMatrix, WignerDArgs};

/// Complex values used throughout the SU(1,1) functions.
pub type ComplexValue = num_complex::Complex64;

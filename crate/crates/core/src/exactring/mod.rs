//! Exact arithmetic: `Z[x]`, `Q(x)`, determinants, and the `p_i` sequence.

mod det;
mod matrix;
mod poly;
mod pseq;
mod ratfunc;
mod scalar;

pub use det::{bareiss_det, bareiss_det_int, det_by_evaluation, evaluation_point, interpolate};
pub use matrix::Matrix;
pub use poly::IntPoly;
pub use pseq::{check_p_identities, p, PSequence};
pub use ratfunc::RatFunc;
pub use scalar::Scalar;

//! Exact computations in the Temperley-Lieb algebra `TL_n(x)`.
//!
//! Diagrams and their composition, Murphy cellular bases, cell modules and
//! their Gram matrices, Jucys-Murphy elements and their spectra, seminormal
//! bases over `Q(x)`, and Gram determinants by three independent routes.

pub mod cellmod;
pub mod cli;
pub mod diagrams;
pub mod error;
pub mod exactring;
pub mod gramdet;
pub mod jucys;
pub mod murphy;
pub mod report;
pub mod seminormal;
pub mod tableaux;

pub use error::Error;
pub use report::Report;

pub type Result<T> = std::result::Result<T, Error>;

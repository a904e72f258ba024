//! Extended (p,q)-Mittag-Leffler functions and their companions.
//!
//! The crate evaluates
//!
//! * the Prabhakar, Shukla-Prajapati, one-parameter extended and
//!   two-parameter extended Mittag-Leffler functions ([`mlcore`]),
//! * classical and extended beta functions ([`extbeta`]),
//! * Wright generalized hypergeometric series and the closed-form Mellin
//!   transform in the extension parameters ([`wright`]),
//! * the same Mellin transform by direct quadrature ([`transforms`]),
//! * classical and extended Riemann-Liouville operators ([`fracderiv`]),
//!
//! and ships a harness ([`verifier`]) that checks every identity linking
//! them by independent numerical routes. All arithmetic is real `f64`.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod extbeta;
pub mod fracderiv;
pub mod mlcore;
pub mod numcore;
pub mod transforms;
pub mod verifier;
pub mod wright;

pub use error::{Error, Result};
pub use mlcore::MLParams;
pub use numcore::{EvalResult, QuadConfig, Scheme, SeriesConfig, Status};

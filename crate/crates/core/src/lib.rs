//! Exact combinatorics for the representation theory of SO(p,q):
//! half-integer weight arithmetic, dominance orders, restricted root data,
//! K-type parametrizations, degenerate-principal-series constituent
//! tables, Young-diagram weighted Dynkin data, the lowest-degree K-type
//! correspondence of the dual pair, a decay-exponent calculus, and a
//! replayable engine certifying the unitarity of a family of
//! Langlands-Vogan parameters.
//!
//! All arithmetic is exact (half-integers stored doubled); the single
//! floating-point entry point is [`dps::fn_eval`], a diagnostic.
//!
//! ```
//! use sopq::certify::{certify, verify, ArthurInput};
//! use sopq::rootdata::Signature;
//! use sopq::young::{validate_diagram, Flavor};
//!
//! let diagram = validate_diagram(vec![1, 3], Flavor::Orthogonal)?;
//! let input = ArthurInput::with_trivial_sigma(Signature::new(3, 3), diagram)?;
//! let cert = certify(&input)?;
//! assert!(cert.verdict.is_certified());
//! assert!(verify(&cert).ok);
//! # Ok::<(), sopq::Error>(())
//! ```

pub mod certify;
pub mod dps;
pub mod error;
pub mod growth;
pub mod ktypes;
pub mod rootdata;
pub mod theta;
pub mod weights;
pub mod young;

pub use error::{Error, Result};
pub use weights::{HalfInt, HalfIntVec};

//! Exact arithmetic and freeness checkers for two-generator groups of
//! Heisenberg translations acting on complex and quaternionic hyperbolic
//! 2-space.
//!
//! The complex path works in `Q(sqrt2)(i)` with arbitrary-precision
//! rationals, so identities such as `tr(A B) = 3 + 16 Re(mu) + 16 |mu|^2`
//! or `(AB)^3 = I` at `mu = -3/4` are decided exactly. The quaternionic path
//! uses `f64` with explicit tolerances.
//!
//! ```
//! use heisfree::freeness::{check_free_main, generator_pair, identity_word_search};
//! use heisfree::scalars::ExactComplex;
//!
//! let mu = ExactComplex::from_ratios((-3, 4), (0, 1));
//! assert!(!check_free_main(&mu).is_certified_free());
//! let w = identity_word_search(&generator_pair(mu), 6).unwrap().unwrap();
//! assert_eq!(w.to_string(), "ABABAB");
//! ```

pub mod cartan;
pub mod cli;
pub mod freeness;
pub mod heisenberg;
pub mod hermitian;
pub mod scalars;

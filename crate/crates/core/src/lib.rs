//! Catalan-like numbers from weight sequences `(σ, τ)` and exact, bounded
//! certificates that they are Stieltjes moment sequences.
//!
//! The numbers are read off the recursive matrix
//! `r_{n+1,k} = r_{n,k-1} + s_k r_{n,k} + t_{k+1} r_{n,k+1}` ([`recursive`]).
//! Three independent routes produce them: the recurrence, weighted Motzkin
//! path enumeration, and generating-function series ([`series`]). The
//! certificates are total positivity of the tridiagonal coefficient matrix
//! ([`jacobi`]) and nonnegativity of both Hankel determinant families
//! ([`hankel`]), all computed in exact rational arithmetic ([`exact`]).
//!
//! ```
//! use moments_core::{catalog_lookup, catalan_like, hankel::{stieltjes_check, MomentSequence}};
//!
//! let bell = catalog_lookup("bell").unwrap();
//! let terms = catalan_like(&bell.sigma, &bell.tau, 5).unwrap();
//! assert_eq!(terms.iter().map(|t| t.to_string()).collect::<Vec<_>>(), ["1", "1", "2", "5", "15", "52"]);
//!
//! let seq = MomentSequence::from_recurrence(&bell.sigma, &bell.tau, 17).unwrap();
//! assert!(stieltjes_check(&seq, 8).unwrap().passed());
//! ```

pub mod error;
pub mod exact;
pub mod hankel;
pub mod jacobi;
pub mod recursive;
pub mod seqspec;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{det_bareiss, det_cofactor, DenseMatrix, Rational};
pub use recursive::{build_recursive, catalan_like, motzkin_oracle, RecursiveMatrix};
pub use seqspec::{catalog, catalog_lookup, CatalogEntry, SequenceSpec, TailRule};

//! Exact combinatorial machinery relating the Seifert manifolds
//! `Σ(n,p,q,l)`, cyclically presented groups `G_n(w)`, (1,1)-knots
//! `K(a,b,c,r)` and Dunwoody face-pairing diagrams.
//!
//! Everything here is exact: free-group words carry arbitrary-precision
//! exponents, homology goes through a certified Smith normal form and
//! Alexander polynomials are computed over `Z[t, t^-1]`.

pub mod dunwoody;
pub mod foxcalc;
pub mod freegroup;
pub mod homology;
pub mod knots11;
pub mod params;
pub mod poly;
pub mod presentations;
pub mod unionfind;

pub use freegroup::{ExponentVector, FreeWord, Syllable, WordError};
pub use params::{ConstraintViolation, SeifertParams};

//! Exact classification of bipartite Hermitian operators as positive
//! semidefinite, block-positive or not block-positive.

pub mod families;
pub mod groebner;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod quartic;
pub mod qudit;
pub mod scalar;
pub mod sweep;
pub mod witness;

pub use poly::{Domain, RationalInterval, UniPoly};
pub use matrix::BipartiteHermitian;
pub use scalar::{GaussRational, QuadSurd, Rational, Sign};
pub use witness::{classify, ProductCertificate, Side, Verdict};

/// Polynomial with rational coefficients.
pub type RatPoly = UniPoly<Rational>;
/// Polynomial with coefficients in `Q(√D)`.
pub type SurdPoly = UniPoly<QuadSurd>;

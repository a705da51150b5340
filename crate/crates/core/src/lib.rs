//! Exact commutative algebra at desk scale.
//!
//! * [`rings`]: `Z`, `Q`, `Z/n`, `F_p`, ring-law checking, quotients of `Z`.
//! * [`int_ideals`]: ideals of `Z` and `Z/n`, primality two ways, chains.
//! * [`poly`]: sparse multivariate polynomials, parsing and formatting.
//! * [`poly_ideals`]: certified bounded-degree ideal membership.
//! * [`varieties`]: `V` and `I` over `F_p`, decomposition, primality.
//! * [`raster`]: sign-change plots of real plane curves.
//! * [`cli`]: the `idealkit` command line.

pub mod cli;
pub mod error;
pub mod int_ideals;
pub mod linalg;
pub mod poly;
pub mod poly_ideals;
pub mod raster;
pub mod rings;
pub mod varieties;

pub use error::{Error, Result};
pub use int_ideals::{IntIdeal, ZnIdeal};
pub use poly::{Degree, Monomial, MonomialOrder, PolyRing, Polynomial};
pub use poly_ideals::{IdealComparison, IdealPresentation, MembershipCertificate};
pub use rings::{Domain, RingElement};
pub use varieties::PointSet;

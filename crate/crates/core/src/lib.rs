//! Exact symbolic computation kernel for generalized partial-slice monogenic
//! function theory over real alternative *-algebras.
//!
//! Everything here runs on arbitrary-precision rationals: algebras are given by
//! basis multiplication tables (negative-definite Clifford algebras and the
//! octonions), functions are polynomials with algebra-valued coefficients, and
//! every theorem of the theory (Cauchy-Kovalevskaya extensions, the Fueter-Sce
//! map, operator identities, kernel relations) becomes an exactly checkable
//! polynomial identity.
//!
//! Module map:
//! - [`algebra`]: multiplication tables, *-involution, trace/norm, cone and
//!   sphere predicates, hypercomplex settings and rational sphere points.
//! - [`poly`]: multivariate polynomials with algebra coefficients,
//!   non-associative products with explicit association trees, derivatives,
//!   evaluation, reflection.
//! - [`stem`]: the even-odd stem representation of generalized partial-slice
//!   functions, materialization/extraction, partial parts, spherical parts,
//!   and the representation formula.
//! - [`operators`]: Dirac operators and their (p,q) splits, Laplacian, slice
//!   Dirac, spherical Dirac, radial iterates, Cauchy-Riemann/Vekua checks.
//! - [`extensions`]: the three Cauchy-Kovalevskaya extensions, Fueter
//!   variables and Fueter polynomials.
//! - [`fueter_sce`]: the Fueter-Sce map on stems and the commutative-diagram
//!   verifiers tying it to the extensions.
//! - [`kernels`]: Kelvin-type functions (polynomial over a power of |x|),
//!   Cauchy kernels and the poly-monogenic family.
//! - [`verify`]: seeded randomized law suites producing deterministic JSON
//!   reports; used by the CLI and the acceptance tests.

pub mod algebra;
pub mod error;
pub mod extensions;
pub mod fueter_sce;
pub mod json;
pub mod kernels;
pub mod operators;
pub mod par;
pub mod poly;
pub mod rational;
pub mod rng;
pub mod stem;
pub mod verify;

pub use algebra::{Algebra, AlgebraElement, AlgebraKind, Setting, SpherePoint};
pub use error::{Error, Result};
pub use poly::{AmbientPoly, AssocTree, Monomial};
pub use rational::Rat;
pub use stem::StemPair;

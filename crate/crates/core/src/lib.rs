//! Exact Alexander-polynomial invariants of finitely presented groups,
//! cyclic covers, rational norm balls and medley realization certificates.

pub mod alexander;
pub mod cover;
pub mod error;
pub mod families;
pub mod fixture;
pub mod intmat;
pub mod laurent;
pub mod lp;
pub mod medley;
pub mod polytope;
pub mod presentation;
pub mod rational;
pub mod verify;

pub use error::{Error, Result};
pub use laurent::{CanonicalForm, Covector, ExponentVector, LaurentPoly};
pub use presentation::{parse_presentation, AbelianizationData, Presentation, Word};

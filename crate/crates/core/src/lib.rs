//! Generalized numerical semigroups: submonoids of `N^d` with finite
//! complement.
//!
//! A semigroup is stored by its holes. On top of that the crate computes
//! invariants and structural flags, builds thickenings, translates monomial
//! semigroups to monomial ideals, walks the semigroup tree and checks
//! Wilf-type inequalities in bulk.

pub mod enumeration;
pub mod error;
pub mod families;
pub mod gns;
pub mod io;
pub mod monomial;
pub mod order;
pub mod point;
pub mod report;
pub mod sweep;
pub mod thickening;
pub mod wilf;

pub use error::{GnsError, Result};
pub use gns::{Classification, Gns, InvariantRecord, Restriction};
pub use monomial::MonomialIdeal;
pub use order::{MonomialOrder, OrderKind};
pub use point::Point;

//! Finite categories, flow sums and flow products, Kan extensions of
//! finite-set-valued diagrams, and base-change verification for lax squares.

pub mod basechange;
pub mod category;
pub mod error;
pub mod flow;
pub mod functor;
pub mod migration;
pub mod quiver;
pub mod random;
pub mod report;
pub mod setfunctor;
pub mod suite;
pub mod text;
pub mod workspace;

pub use category::{
    checked, connected_components, opposite, validate_category, CatRef, CategoryBuilder, FinCategory, Morphism,
};
pub use error::{Error, Result};
pub use flow::{Cospan, LaxSquare, Span};
pub use functor::{disjoint_union, validate_cat_nat_trans, validate_functor, CatFunctor, CatNatTrans};
pub use quiver::{free_on_acyclic_quiver, Quiver};
pub use report::{Law, ValidationReport, Violation};
pub use setfunctor::{validate_set_functor, validate_set_nat_trans, SetFunctor, SetNatTrans};

//! Pullback and Kan extensions of finite-set-valued diagrams.

pub mod kan;
pub mod limits;
pub mod nat;

pub use kan::{
    counit_left, counit_right, kan_composite_comparison, left_kan, left_kan_data, left_kan_nat, pullback, pullback_nat,
    reindex, right_kan, right_kan_data, right_kan_nat, right_kan_via_opposite, unit_left, unit_right, LeftKan,
    RightKan,
};
pub use limits::{colimit, limit, Colimit, Limit};
pub use nat::*;

//! Flow products, flow sums, flows of a functor at an object, and the
//! opfibration and cofinality checks.

pub mod fibration;
pub mod product;
pub mod slice;
pub mod square;
pub mod sum;

pub use fibration::{is_cocartesian, is_cofinal, is_opfibration, CofinalityVerdict, OpfibrationVerdict};
pub use product::{fibre_product, flow_product, flow_product_mediator, FibreProduct, FlowProduct};
pub use slice::{fiber, flow_from, flow_to, induced_flow_functor, Comma, Fibre};
pub use square::{Cospan, LaxSquare, Span};
pub use sum::{flow_sum, flow_sum_mediator, FlowSum, FlowSumWord};

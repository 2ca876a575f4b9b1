//! Base-change transformations of lax squares, their exactness checks,
//! pasting, and the span algebra.

pub mod base_change;
pub mod paste;
pub mod span;
pub mod verify;

pub use base_change::{base_change_left, base_change_left_alt, base_change_right, is_iso, mate, IsoVerdict};
pub use paste::{check_pasting_lemma, paste};
pub use span::{
    check_flow_adjunction, check_span_functoriality, span_action, span_associator, span_compose,
    span_functoriality_comparison, Associator, FlowAdjunctionCheck, FunctorialityCheck, SpanComposite,
};
pub use verify::{
    is_fibre_product_square, verify_opfibration_case, verify_square, Direction, Directions, ExactnessReport,
    SampleVerdict, Witness,
};

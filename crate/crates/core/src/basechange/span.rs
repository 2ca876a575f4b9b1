//! Composition of spans of categories through flow products, the induced
//! action on set functors, and the flow sum / flow product adjunction.

use serde::Serialize;

use crate::basechange::base_change::base_change_left;
use crate::error::{Error, Result};
use crate::flow::product::{flow_product, flow_product_mediator, FlowProduct};
use crate::flow::square::{Cospan, LaxSquare, Span};
use crate::flow::sum::flow_sum;
use crate::functor::{enumerate_functors, is_bijection, same_category, CatFunctor};
use crate::migration::kan::{kan_composite_comparison, left_kan, left_kan_nat, pullback};
use crate::setfunctor::{validate_set_nat_trans, SetFunctor, SetNatTrans};

/// A composite span with the flow product it goes through.
#[derive(Debug, Clone)]
pub struct SpanComposite {
    pub span: Span,
    pub flow: FlowProduct,
}

/// `(A ← B → C) ; (C ← D → E)` is `A ← B ↓_C D → E`.
pub fn span_compose(first: &Span, second: &Span) -> Result<SpanComposite> {
    if !same_category(first.right.target(), second.left.target()) {
        return Err(Error::shape(format!(
            "spans do not meet: `{}` ends in `{}`, `{}` starts in `{}`",
            first.right.name(),
            first.right.target().name(),
            second.left.name(),
            second.left.target().name()
        )));
    }
    let flow = flow_product(&first.right, &second.left)?;
    let left = first.left.after(flow.square.s())?;
    let right = second.right.after(flow.square.t())?;
    Ok(SpanComposite {
        span: Span::new(left, right)?,
        flow,
    })
}

/// `Σ_right Δ_left F` for `F` on the left foot.
pub fn span_action(span: &Span, functor: &SetFunctor) -> Result<SetFunctor> {
    left_kan(&span.right, &pullback(&span.left, functor)?)
}

/// The comparison `act(first ; second) F ⇒ act(second) act(first) F`, built
/// from the Kan composite map and the base change of the middle flow-product
/// square.
pub fn span_functoriality_comparison(first: &Span, second: &Span, functor: &SetFunctor) -> Result<SetNatTrans> {
    let composite = span_compose(first, second)?;
    let square = &composite.flow.square;
    let on_b = pullback(&first.left, functor)?;
    let on_apex = pullback(square.s(), &on_b)?;
    let regroup = kan_composite_comparison(square.t(), &second.right, &on_apex)?;
    let middle = left_kan_nat(&second.right, &base_change_left(square, &on_b)?)?;
    regroup.then(&middle)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FunctorialityCheck {
    /// The comparison starts at `act(first ; second) F` and ends at
    /// `act(second) act(first) F`, elementwise.
    pub endpoints: bool,
    pub natural: bool,
    pub iso: bool,
}

impl FunctorialityCheck {
    pub fn holds(&self) -> bool {
        self.endpoints && self.natural && self.iso
    }
}

pub fn check_span_functoriality(first: &Span, second: &Span, functor: &SetFunctor) -> Result<FunctorialityCheck> {
    let eta = span_functoriality_comparison(first, second, functor)?;
    let composite = span_compose(first, second)?;
    let whole = span_action(&composite.span, functor)?;
    let stepwise = span_action(second, &span_action(first, functor)?)?;
    Ok(FunctorialityCheck {
        endpoints: eta.source().same_data(&whole) && eta.target().same_data(&stepwise),
        natural: validate_set_nat_trans(&eta).is_empty(),
        iso: eta.first_non_bijective().is_none(),
    })
}

/// The canonical comparison between the apexes of `(s1 ; s2) ; s3` and
/// `s1 ; (s2 ; s3)`.
#[derive(Debug, Clone)]
pub struct Associator {
    pub comparison: CatFunctor,
    pub left: SpanComposite,
    pub right: SpanComposite,
}

impl Associator {
    pub fn is_isomorphism(&self) -> bool {
        self.comparison.is_isomorphism()
    }

    /// The comparison commutes with the outer legs.
    pub fn preserves_legs(&self) -> bool {
        let over =
            |a: &CatFunctor, b: &CatFunctor| b.after(&self.comparison).map(|c| c.agrees_with(a)).unwrap_or(false);
        over(&self.left.span.left, &self.right.span.left) && over(&self.left.span.right, &self.right.span.right)
    }
}

pub fn span_associator(s1: &Span, s2: &Span, s3: &Span) -> Result<Associator> {
    let p12 = span_compose(s1, s2)?;
    let left = span_compose(&p12.span, s3)?;
    let p23 = span_compose(s2, s3)?;
    let right = span_compose(s1, &p23.span)?;

    // An object ((b, d, η), x, ζ) of the left apex goes to (d, x, ζ) ...
    let l = &left.flow.square;
    let inner_s = p12.flow.square.t().after(l.s())?;
    let inner = LaxSquare::new(
        "assoc-inner",
        inner_s,
        l.t().clone(),
        s2.right.clone(),
        s3.left.clone(),
        l.alpha().components().to_vec(),
    )?;
    let m1 = flow_product_mediator(&inner, &p23.flow)?;
    // ... and then to (b, (d, x, ζ), η).
    let outer_s = p12.flow.square.s().after(l.s())?;
    let components = (0..l.a().object_count())
        .map(|x| p12.flow.square.alpha().component(l.s().obj(x)))
        .collect();
    let outer = LaxSquare::new(
        "assoc-outer",
        outer_s,
        m1,
        s1.right.clone(),
        s2.left.after(p23.flow.square.s())?,
        components,
    )?;
    let comparison = flow_product_mediator(&outer, &right.flow)?.renamed("assoc");
    Ok(Associator {
        comparison,
        left,
        right,
    })
}

/// Morphism counts on both sides of the flow sum / flow product adjunction
/// for one span and one cospan over the same feet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlowAdjunctionCheck {
    /// Functors `h` out of the flow sum with `h∘inl = f` and `h∘inr = g`.
    pub cospan_morphisms: usize,
    /// Functors `k` into the flow product with `s'∘k = s` and `t'∘k = t`.
    pub span_morphisms: usize,
    pub bijection: bool,
}

/// For a span `C ← A → B` and a cospan `C → D ← B`, checks that
/// `h ↦ mediator(h α)` is a bijection from cospan morphisms out of the flow
/// sum to span morphisms into the flow product.
pub fn check_flow_adjunction(span: &Span, cospan: &Cospan, cap: u64) -> Result<FlowAdjunctionCheck> {
    let (s, t) = (&span.right, &span.left);
    let (f, g) = (&cospan.right, &cospan.left);
    if !same_category(s.target(), f.source()) || !same_category(t.target(), g.source()) {
        return Err(Error::shape("span and cospan do not share their feet"));
    }
    let fs = flow_sum(s, t)?;
    let fp = flow_product(f, g)?;
    let sum = fs.category();
    let (inl, inr) = (fs.square.f(), fs.square.g());

    let mut fixed_objects = vec![None; sum.object_count()];
    let mut fixed_morphisms = vec![None; sum.morphism_count()];
    for b in 0..f.source().object_count() {
        fixed_objects[inl.obj(b)] = Some(f.obj(b));
    }
    for c in 0..g.source().object_count() {
        fixed_objects[inr.obj(c)] = Some(g.obj(c));
    }
    for m in 0..f.source().morphism_count() {
        fixed_morphisms[inl.mor(m)] = Some(f.mor(m));
    }
    for m in 0..g.source().morphism_count() {
        fixed_morphisms[inr.mor(m)] = Some(g.mor(m));
    }
    let cospan_side = enumerate_functors("h", sum, f.target(), &fixed_objects, &fixed_morphisms, cap)?;

    let a = s.source();
    let free_objects = vec![None; a.object_count()];
    let free_morphisms = vec![None; a.morphism_count()];
    let span_side: Vec<CatFunctor> = enumerate_functors("k", a, fp.category(), &free_objects, &free_morphisms, cap)?
        .into_iter()
        .filter(|k| {
            fp.square.s().after(k).map(|x| x.agrees_with(s)).unwrap_or(false)
                && fp.square.t().after(k).map(|x| x.agrees_with(t)).unwrap_or(false)
        })
        .collect();

    let mut image = Vec::with_capacity(cospan_side.len());
    for h in &cospan_side {
        let components = fs.square.alpha().components().iter().map(|&c| h.mor(c)).collect();
        let sq = LaxSquare::new("transpose", s.clone(), t.clone(), f.clone(), g.clone(), components)?;
        let k = flow_product_mediator(&sq, &fp)?;
        match span_side.iter().position(|x| x.agrees_with(&k)) {
            Some(i) => image.push(i),
            None => {
                return Ok(FlowAdjunctionCheck {
                    cospan_morphisms: cospan_side.len(),
                    span_morphisms: span_side.len(),
                    bijection: false,
                })
            }
        }
    }
    Ok(FlowAdjunctionCheck {
        cospan_morphisms: cospan_side.len(),
        span_morphisms: span_side.len(),
        bijection: is_bijection(&image, span_side.len()),
    })
}

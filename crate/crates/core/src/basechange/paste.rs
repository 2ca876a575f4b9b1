//! Horizontal pasting of lax squares and the pasting law for base change.

use crate::basechange::base_change::base_change_left;
use crate::error::{Error, Result};
use crate::flow::square::LaxSquare;
use crate::migration::kan::{pullback, pullback_nat};
use crate::setfunctor::SetFunctor;

/// Pastes `left` (`k : E → A`, `l : E → F`, `t : A → C`, `r : F → C`) onto
/// `right` (`s : A → B`, `t : A → C`, `f : B → D`, `g : C → D`) along the
/// shared `t`. The outer square has `s∘k`, `l`, `f`, `g∘r` and components
/// `g(α_left(e)) ∘ α_right(k e)`.
pub fn paste(left: &LaxSquare, right: &LaxSquare) -> Result<LaxSquare> {
    if !left.f().agrees_with(right.t()) {
        return Err(Error::shape(format!(
            "cannot paste `{}` onto `{}`: `{}` is not `{}`",
            left.name(),
            right.name(),
            left.f().name(),
            right.t().name()
        )));
    }
    let d = right.d();
    let k = left.s();
    let components = (0..left.a().object_count())
        .map(|e| {
            d.comp(
                right.g().mor(left.alpha().component(e)),
                right.alpha().component(k.obj(e)),
            )
        })
        .collect();
    LaxSquare::new(
        format!("{}|{}", left.name(), right.name()),
        right.s().after(k)?,
        left.t().clone(),
        right.f().clone(),
        right.g().after(left.g())?,
        components,
    )
}

/// Whether the base change of the pasted square equals, elementwise, the
/// composite `Δ_r(base change of right at F) ∘ (base change of left at Δ_s F)`.
pub fn check_pasting_lemma(left: &LaxSquare, right: &LaxSquare, functor: &SetFunctor) -> Result<bool> {
    let outer = paste(left, right)?;
    let whole = base_change_left(&outer, functor)?;
    let first = base_change_left(left, &pullback(right.s(), functor)?)?;
    let second = pullback_nat(left.g(), &base_change_left(right, functor)?)?;
    Ok(whole.same_data(&first.then(&second)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{CatRef, CategoryBuilder, FinCategory};
    use crate::flow::product::flow_product;
    use crate::functor::CatFunctor;
    use std::sync::Arc;

    fn two() -> CatRef {
        let mut b = CategoryBuilder::new("2", ["0", "1"]);
        b.arrow("u", 0, 1);
        Arc::new(b.build().unwrap())
    }

    #[test]
    fn identity_squares_paste_trivially() {
        let t = two();
        let id = LaxSquare::identity(&t);
        let fp = flow_product(&CatFunctor::identity(&t), &CatFunctor::point_at(&t, 1)).unwrap();
        let sq = fp.square;
        // An identity square on the left must share `t`.
        let left = LaxSquare::identity(sq.a());
        let left = LaxSquare::new(
            "left",
            left.s().clone(),
            sq.t().clone(),
            sq.t().clone(),
            CatFunctor::identity(sq.c()),
            (0..sq.a().object_count())
                .map(|x| sq.c().identity(sq.t().obj(x)))
                .collect(),
        )
        .unwrap();
        assert!(paste(&left, &sq).unwrap().agrees_with(&sq));
        let f = SetFunctor::constant("F", t.clone(), vec!["x".into()]).unwrap();
        assert!(check_pasting_lemma(&left, &sq, &f).unwrap());
        assert!(check_pasting_lemma(&id, &id, &f).unwrap());
    }

    #[test]
    fn mismatched_edges() {
        let t = two();
        let point: CatRef = Arc::new(FinCategory::point());
        assert!(paste(&LaxSquare::identity(&t), &LaxSquare::identity(&point)).is_err());
    }
}

//! The base-change transformations of a lax square.

use serde::Serialize;

use crate::error::Result;
use crate::flow::square::LaxSquare;
use crate::migration::kan::{
    counit_left, counit_right, left_kan, left_kan_data, left_kan_nat, pullback, pullback_nat, reindex, right_kan,
    right_kan_data, unit_left,
};
use crate::setfunctor::{SetFunctor, SetNatTrans};

/// `Σ_t Δ_s F ⇒ Δ_g Σ_f F` for `F` on `B`, as the composite
/// `Σ_t Δ_s ⇒ Σ_t Δ_s Δ_f Σ_f ⇒ Σ_t Δ_t Δ_g Σ_f ⇒ Δ_g Σ_f`.
pub fn base_change_left(sq: &LaxSquare, functor: &SetFunctor) -> Result<SetNatTrans> {
    let unit = unit_left(sq.f(), functor)?;
    let sigma_f = left_kan(sq.f(), functor)?;
    let inner = pullback_nat(sq.s(), &unit)?.then(&reindex(sq.alpha(), &sigma_f)?)?;
    let counit = counit_left(sq.t(), &pullback(sq.g(), &sigma_f)?)?;
    left_kan_nat(sq.t(), &inner)?.then(&counit)
}

/// The mate `Σ_g Σ_t H ⇒ Σ_f Σ_s H` of the square at `H` on `A`: the class of
/// `[h at (a, ψ)] at (c, δ)` goes to the class of `[h at (a, id)] at
/// (s a, δ∘g(ψ)∘α_a)`.
pub fn mate(sq: &LaxSquare, h: &SetFunctor) -> Result<SetNatTrans> {
    let (b_cat, d_cat) = (sq.b(), sq.d());
    let sigma_t = left_kan_data(sq.t(), h)?;
    let source = left_kan_data(sq.g(), &sigma_t.functor)?;
    let sigma_s = left_kan_data(sq.s(), h)?;
    let target = left_kan_data(sq.f(), &sigma_s.functor)?;
    let components = (0..d_cat.object_count())
        .map(|d| {
            source
                .representatives(d)
                .into_iter()
                .map(|(outer, k)| {
                    let (c, delta) = source.flows[d].objects[outer];
                    let (inner, e) = sigma_t.representatives(c)[k];
                    let (a, psi) = sigma_t.flows[c].objects[inner];
                    let b = sq.s().obj(a);
                    let eta = d_cat.comp(delta, d_cat.comp(sq.g().mor(psi), sq.alpha().component(a)));
                    let inner_class = sigma_s.class(b, a, b_cat.identity(b), e);
                    target.class(d, b, eta, inner_class)
                })
                .collect()
        })
        .collect();
    SetNatTrans::new(source.functor, target.functor, components)
}

/// The same transformation as [`base_change_left`], written through the mate:
/// `Σ_t Δ_s ⇒ Δ_g Σ_g Σ_t Δ_s ⇒ Δ_g Σ_f Σ_s Δ_s ⇒ Δ_g Σ_f`.
pub fn base_change_left_alt(sq: &LaxSquare, functor: &SetFunctor) -> Result<SetNatTrans> {
    let delta_s = pullback(sq.s(), functor)?;
    let sigma_t = left_kan(sq.t(), &delta_s)?;
    let unit = unit_left(sq.g(), &sigma_t)?;
    let beta = pullback_nat(sq.g(), &mate(sq, &delta_s)?)?;
    let counit = pullback_nat(sq.g(), &left_kan_nat(sq.f(), &counit_left(sq.s(), functor)?)?)?;
    unit.then(&beta)?.then(&counit)
}

/// `Δ_f Π_g G ⇒ Π_s Δ_t G` for `G` on `C`, as the composite
/// `Δ_f Π_g ⇒ Π_s Δ_s Δ_f Π_g ⇒ Π_s Δ_t Δ_g Π_g ⇒ Π_s Δ_t`.
///
/// The middle functors are families of families, so the composite is
/// followed one element at a time instead of being built as three
/// transformations: the unit sends `x` to `(Π_g G(f φ) x)` over `b ↓ s`, the
/// reindexing applies `Π_g G(α_a)` at each node and the counit reads each
/// entry at `(t a, id)`.
pub fn base_change_right(sq: &LaxSquare, g: &SetFunctor) -> Result<SetNatTrans> {
    let pi_g = right_kan(sq.g(), g)?;
    let source = pullback(sq.f(), &pi_g)?;
    let counit = counit_right(sq.g(), g)?;
    let target = right_kan_data(sq.s(), &pullback(sq.t(), g)?)?;
    let components = (0..sq.b().object_count())
        .map(|b| {
            (0..source.size(b))
                .map(|x| {
                    let family: Vec<usize> = target.flows[b]
                        .objects
                        .iter()
                        .map(|&(a, phi)| {
                            let at_s = source.apply(phi, x);
                            let at_t = pi_g.apply(sq.alpha().component(a), at_s);
                            counit.component(sq.t().obj(a))[at_t]
                        })
                        .collect();
                    target
                        .family(b, &family)
                        .expect("the composite lands in compatible families")
                })
                .collect()
        })
        .collect();
    SetNatTrans::new(source, target.functor, components)
}

/// Whether every component is a bijection, with the first failing object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoVerdict {
    pub iso: bool,
    pub failing: Option<usize>,
}

pub fn is_iso(eta: &SetNatTrans) -> IsoVerdict {
    let failing = eta.first_non_bijective();
    IsoVerdict {
        iso: failing.is_none(),
        failing,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{CatRef, CategoryBuilder, FinCategory};
    use crate::flow::product::flow_product;
    use crate::functor::CatFunctor;
    use crate::migration::kan::{counit_left as eps, left_kan_nat as sigma_nat, pullback_nat as delta_nat};
    use crate::setfunctor::validate_set_nat_trans;
    use std::sync::Arc;

    /// The right base change built as three whole transformations.
    fn materialized_right(sq: &LaxSquare, g: &SetFunctor) -> SetNatTrans {
        use crate::migration::kan::{right_kan_nat, unit_right};
        let pi_g = right_kan(sq.g(), g).unwrap();
        let unit = unit_right(sq.s(), &pullback(sq.f(), &pi_g).unwrap()).unwrap();
        let middle = right_kan_nat(sq.s(), &reindex(sq.alpha(), &pi_g).unwrap()).unwrap();
        let last = right_kan_nat(
            sq.s(),
            &pullback_nat(sq.t(), &counit_right(sq.g(), g).unwrap()).unwrap(),
        )
        .unwrap();
        unit.then(&middle).unwrap().then(&last).unwrap()
    }

    #[test]
    fn right_base_change_matches_the_materialized_composite() {
        use crate::random::{random_set_functor, random_square, rng, Bounds};
        let bounds = Bounds {
            max_objects: 2,
            max_edges: 2,
            max_set_size: 2,
        };
        for seed in 0..40 {
            let mut r = rng(seed, 9);
            let sq = random_square(&mut r, "sq", bounds).unwrap();
            let g = random_set_functor(&mut r, "G", sq.c(), 2);
            assert!(base_change_right(&sq, &g)
                .unwrap()
                .same_data(&materialized_right(&sq, &g)));
        }
    }

    fn labels(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    fn two() -> CatRef {
        let mut b = CategoryBuilder::new("2", ["0", "1"]);
        b.arrow("u", 0, 1);
        Arc::new(b.build().unwrap())
    }

    fn point() -> CatRef {
        Arc::new(FinCategory::point())
    }

    /// `f : * → 2` at 0, `g : * → 2` at 1, apex empty.
    fn empty_pullback_square() -> LaxSquare {
        let t = two();
        let empty: CatRef = Arc::new(FinCategory::empty());
        let s = CatFunctor::new("s", empty.clone(), point(), vec![], vec![]).unwrap();
        let u = CatFunctor::new("t", empty, point(), vec![], vec![]).unwrap();
        LaxSquare::new(
            "empty",
            s,
            u,
            CatFunctor::point_at(&t, 0),
            CatFunctor::point_at(&t, 1),
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn identity_square_is_exact() {
        let t = two();
        let sq = LaxSquare::identity(&t);
        let f =
            SetFunctor::from_generators("F", t, vec![labels(&["x", "y"]), labels(&["z"])], &[(2, vec![0, 0])]).unwrap();
        for eta in [
            base_change_left(&sq, &f).unwrap(),
            base_change_left_alt(&sq, &f).unwrap(),
            base_change_right(&sq, &f).unwrap(),
        ] {
            assert!(validate_set_nat_trans(&eta).is_empty());
            assert!(is_iso(&eta).iso);
        }
    }

    #[test]
    fn empty_pullback_fails_and_flow_product_repairs_it() {
        let sq = empty_pullback_square();
        let one = SetFunctor::constant("F", point(), labels(&["*"])).unwrap();
        let left = base_change_left(&sq, &one).unwrap();
        assert_eq!(left.source().size(0), 0);
        assert_eq!(left.target().size(0), 1);
        assert_eq!(
            is_iso(&left),
            IsoVerdict {
                iso: false,
                failing: Some(0)
            }
        );
        // Both sides of the right base change are a point at `1`; two
        // elements tell them apart.
        assert!(is_iso(&base_change_right(&sq, &one).unwrap()).iso);
        let pair = SetFunctor::constant("G", point(), labels(&["p", "q"])).unwrap();
        let right = base_change_right(&sq, &pair).unwrap();
        assert_eq!((right.source().size(0), right.target().size(0)), (2, 1));
        assert!(!is_iso(&right).iso);
        assert!(is_iso(&base_change_right(&flow_product(sq.f(), sq.g()).unwrap().square, &pair).unwrap()).iso);

        let fp = flow_product(sq.f(), sq.g()).unwrap();
        let left = base_change_left(&fp.square, &one).unwrap();
        assert_eq!(left.component(0), &[0]);
        assert!(left.same_data(&base_change_left_alt(&fp.square, &one).unwrap()));
        assert!(is_iso(&base_change_right(&fp.square, &one).unwrap()).iso);
    }

    /// The mate as the full composite of units and counits.
    fn chained_mate(sq: &LaxSquare, h: &SetFunctor) -> SetNatTrans {
        let sigma_s = left_kan(sq.s(), h).unwrap();
        let sigma_fs = left_kan(sq.f(), &sigma_s).unwrap();
        let inner = unit_left(sq.s(), h)
            .unwrap()
            .then(&delta_nat(sq.s(), &unit_left(sq.f(), &sigma_s).unwrap()).unwrap())
            .unwrap()
            .then(&reindex(sq.alpha(), &sigma_fs).unwrap())
            .unwrap();
        let on_c = sigma_nat(sq.t(), &inner)
            .unwrap()
            .then(&eps(sq.t(), &pullback(sq.g(), &sigma_fs).unwrap()).unwrap())
            .unwrap();
        sigma_nat(sq.g(), &on_c)
            .unwrap()
            .then(&eps(sq.g(), &sigma_fs).unwrap())
            .unwrap()
    }

    #[test]
    fn direct_mate_matches_the_chain() {
        let t = two();
        let fp = flow_product(&CatFunctor::identity(&t), &CatFunctor::identity(&t)).unwrap();
        let a = fp.category().clone();
        let h = SetFunctor::constant("H", a, labels(&["p", "q"])).unwrap();
        assert!(mate(&fp.square, &h).unwrap().same_data(&chained_mate(&fp.square, &h)));
        let sq = empty_pullback_square();
        let h = SetFunctor::new("H", sq.a().clone(), vec![], vec![]).unwrap();
        assert!(mate(&sq, &h).unwrap().same_data(&chained_mate(&sq, &h)));
    }
}

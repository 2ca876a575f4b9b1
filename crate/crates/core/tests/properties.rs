//! Invariants of the constructions on seeded random inputs.

use std::collections::BTreeSet;

use proptest::prelude::*;

use flowcat::basechange::{base_change_left, base_change_left_alt, base_change_right, is_iso, verify_square};
use flowcat::basechange::{Directions, SampleVerdict};
use flowcat::flow::{fibre_product, flow_from, flow_product, flow_sum, flow_to, is_opfibration};
use flowcat::functor::validate_cat_nat_trans;
use flowcat::migration::{counit_left, left_kan, pullback, right_kan, right_kan_via_opposite, unit_left, unit_right};
use flowcat::random::{
    random_category, random_cospan, random_functor, random_set_functor, random_span, random_square, rng, Bounds,
};
use flowcat::text::{emit_catfun, emit_fincat, emit_laxsq, emit_setfun};
use flowcat::workspace::Workspace;
use flowcat::{
    connected_components, opposite, validate_category, validate_functor, validate_set_functor, validate_set_nat_trans,
    CatFunctor, CatRef, SetFunctor,
};

fn bounds() -> Bounds {
    Bounds::default()
}

fn category(seed: u64, name: &str) -> CatRef {
    random_category(&mut rng(seed, 0), name, &name.to_lowercase(), bounds())
}

/// Random `f : A → B` with `F` on `A` and `G` on `B`.
fn instance(seed: u64) -> (CatFunctor, SetFunctor, SetFunctor) {
    let mut r = rng(seed, 1);
    let a = random_category(&mut r, "A", "a", bounds());
    let b = random_category(&mut r, "B", "b", bounds());
    let f = random_functor(&mut r, "f", &a, &b).unwrap();
    let x = random_set_functor(&mut r, "F", &a, 3);
    let y = random_set_functor(&mut r, "G", &b, 3);
    (f, x, y)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_entities_validate(seed in any::<u64>()) {
        let (f, x, y) = instance(seed);
        prop_assert!(validate_category(f.source()).is_empty());
        prop_assert!(validate_category(f.target()).is_empty());
        prop_assert!(validate_functor(&f).is_empty());
        prop_assert!(validate_set_functor(&x).is_empty());
        prop_assert!(validate_set_functor(&y).is_empty());
        let sq = random_square(&mut rng(seed, 2), "sq", bounds()).unwrap();
        prop_assert!(validate_cat_nat_trans(sq.alpha()).is_empty());
    }

    #[test]
    fn opposite_is_an_involution(seed in any::<u64>()) {
        let c = category(seed, "C");
        let op = opposite(&c);
        prop_assert!(validate_category(&op).is_empty());
        prop_assert_eq!(&opposite(&op), &*c);
        prop_assert_eq!(connected_components(&op), connected_components(&c));
    }

    #[test]
    fn components_partition_the_objects(seed in any::<u64>()) {
        let c = category(seed, "C");
        let blocks = connected_components(&c);
        let all: BTreeSet<usize> = blocks.iter().flatten().copied().collect();
        prop_assert_eq!(all.len(), c.object_count());
        prop_assert_eq!(blocks.iter().map(Vec::len).sum::<usize>(), c.object_count());
        for m in 0..c.morphism_count() {
            let block = |x: usize| blocks.iter().position(|b| b.contains(&x));
            prop_assert_eq!(block(c.source(m)), block(c.target(m)));
        }
    }

    #[test]
    fn text_round_trips(seed in any::<u64>()) {
        let (f, x, _) = instance(seed);
        let sq = random_square(&mut rng(seed, 3), "sq", bounds()).unwrap();
        let mut texts = vec![emit_fincat(f.source()), emit_fincat(f.target())];
        for c in [sq.a(), sq.b(), sq.c(), sq.d()] {
            let text = emit_fincat(c);
            if !texts.contains(&text) {
                texts.push(text);
            }
        }
        let mut ws = Workspace::new();
        let mut functors = vec![emit_catfun(&f)];
        functors.extend([sq.s(), sq.t(), sq.f(), sq.g()].map(emit_catfun));
        for (i, text) in texts.iter().chain(&functors).chain([&emit_setfun(&x), &emit_laxsq(&sq)]).enumerate() {
            // Names shared between the instance and the square are skipped.
            let _ = ws.load_text(&format!("entity-{i}"), text);
        }
        let a = ws.category("A").unwrap();
        prop_assert_eq!(emit_fincat(a), emit_fincat(f.source()));
        prop_assert_eq!(&**a, &**f.source());
        prop_assert!(ws.functor("f").unwrap().agrees_with(&f));
        let y = ws.set_functor("F").unwrap();
        prop_assert!(y.same_data(&x));
        prop_assert_eq!(emit_setfun(y), emit_setfun(&x));
    }

    #[test]
    fn pullback_is_functorial(seed in any::<u64>()) {
        let mut r = rng(seed, 4);
        let a = random_category(&mut r, "A", "a", bounds());
        let b = random_category(&mut r, "B", "b", bounds());
        let c = random_category(&mut r, "C", "c", bounds());
        let f = random_functor(&mut r, "f", &a, &b).unwrap();
        let g = random_functor(&mut r, "g", &b, &c).unwrap();
        let x = random_set_functor(&mut r, "X", &c, 3);
        let once = pullback(&g.after(&f).unwrap(), &x).unwrap();
        let twice = pullback(&f, &pullback(&g, &x).unwrap()).unwrap();
        prop_assert!(once.same_data(&twice));
    }

    #[test]
    fn kan_extensions_are_functors_with_natural_units(seed in any::<u64>()) {
        let (f, x, y) = instance(seed);
        let sigma = left_kan(&f, &x).unwrap();
        let pi = right_kan(&f, &x).unwrap();
        prop_assert!(validate_set_functor(&sigma).is_empty());
        prop_assert!(validate_set_functor(&pi).is_empty());
        for eta in [unit_left(&f, &x).unwrap(), counit_left(&f, &y).unwrap(), unit_right(&f, &y).unwrap()] {
            prop_assert!(validate_set_nat_trans(&eta).is_empty());
        }
    }

    #[test]
    fn right_kan_agrees_with_the_opposite_route(seed in any::<u64>()) {
        let (f, x, _) = instance(seed);
        let direct = right_kan(&f, &x).unwrap();
        let dual = right_kan_via_opposite(&f, &x).unwrap();
        for d in 0..f.target().object_count() {
            prop_assert_eq!(direct.size(d), dual.size(d));
        }
    }

    #[test]
    fn left_kan_along_an_identity_reproduces_sizes(seed in any::<u64>()) {
        let (f, x, _) = instance(seed);
        let id = CatFunctor::identity(f.source());
        let sigma = left_kan(&id, &x).unwrap();
        for a in 0..id.source().object_count() {
            prop_assert_eq!(sigma.size(a), x.size(a));
        }
    }

    #[test]
    fn flow_product_square_is_valid_and_exact(seed in any::<u64>()) {
        let mut r = rng(seed, 5);
        let cospan = random_cospan(&mut r, bounds());
        let (f, g) = (&cospan.right, &cospan.left);
        let fp = flow_product(f, g).unwrap();
        prop_assert!(validate_category(fp.category()).is_empty());
        prop_assert!(validate_cat_nat_trans(fp.square.alpha()).is_empty());
        prop_assert!(is_opfibration(fp.square.t()).holds);
        let fib = fibre_product(f, g).unwrap();
        prop_assert!(fib.inclusion.is_injective_on_objects());
        prop_assert!(fib.category().object_count() <= fp.category().object_count());
        let x = random_set_functor(&mut r, "X", f.source(), 3);
        let eta = base_change_left(&fp.square, &x).unwrap();
        prop_assert!(is_iso(&eta).iso);
        prop_assert!(base_change_left_alt(&fp.square, &x).unwrap().same_data(&eta));
        let y = random_set_functor(&mut r, "Y", g.source(), 3);
        prop_assert!(is_iso(&base_change_right(&fp.square, &y).unwrap()).iso);
    }

    #[test]
    fn flow_sum_has_no_arrows_back(seed in any::<u64>()) {
        let span = random_span(&mut rng(seed, 6), bounds());
        let fs = flow_sum(&span.right, &span.left).unwrap();
        let (b, c) = (span.right.target(), span.left.target());
        let sum = fs.category();
        prop_assert!(validate_category(sum).is_empty());
        prop_assert_eq!(sum.object_count(), b.object_count() + c.object_count());
        let (inl, inr) = (fs.square.f(), fs.square.g());
        for y in 0..c.object_count() {
            for x in 0..b.object_count() {
                prop_assert!(sum.hom(inr.obj(y), inl.obj(x)).is_empty());
            }
        }
        for (i, &w) in fs.words.iter().enumerate() {
            prop_assert!(fs.words_equal(w, fs.words[fs.representatives[fs.word_class[i]]]).unwrap());
        }
    }

    #[test]
    fn slices_project_onto_the_source(seed in any::<u64>()) {
        let (f, _, _) = instance(seed);
        for d in 0..f.target().object_count() {
            let to = flow_to(&f, d).unwrap();
            let from = flow_from(&f, d).unwrap();
            let count = |hom: &dyn Fn(usize) -> usize| (0..f.source().object_count()).map(hom).sum::<usize>();
            prop_assert_eq!(to.category.object_count(), count(&|a| f.target().hom(f.obj(a), d).len()));
            prop_assert_eq!(from.category.object_count(), count(&|a| f.target().hom(d, f.obj(a)).len()));
            prop_assert!(validate_functor(&to.projection).is_empty());
            prop_assert!(validate_functor(&from.projection).is_empty());
        }
    }

    #[test]
    fn failure_witnesses_reverify(seed in any::<u64>()) {
        let mut r = rng(seed, 7);
        let sq = random_square(&mut r, "sq", bounds()).unwrap();
        let samples: Vec<SetFunctor> = (0..4).map(|i| random_set_functor(&mut r, &format!("F{i}"), sq.b(), 3)).collect();
        let report = verify_square(&sq, &samples, Directions::Left).unwrap();
        let bad: Vec<&SampleVerdict> = report.failures().collect();
        for v in bad {
            prop_assert!(v.witness.as_ref().unwrap().reverifies());
        }
    }
}

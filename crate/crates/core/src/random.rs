//! Seeded generators for small categories, functors, set functors and lax
//! squares.
//!
//! Every generator draws from a caller-provided [`ChaCha8Rng`]; [`rng`]
//! derives independent streams from one seed so that cases can be produced
//! in any order.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::category::{checked, fill_by_composition, CatRef};
use crate::error::Result;
use crate::flow::product::flow_product;
use crate::flow::square::{Cospan, LaxSquare, Span};
use crate::functor::{enumerate_cat_nat_trans, validate_functor, CatFunctor};
use crate::quiver::{free_on_acyclic_quiver, Quiver};
use crate::setfunctor::{validate_set_functor, SetFunctor};

/// Stream `stream` of the generator seeded with `seed`.
pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_objects: usize,
    pub max_edges: usize,
    pub max_set_size: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_objects: 3,
            max_edges: 4,
            max_set_size: 4,
        }
    }
}

const ATTEMPTS: usize = 64;

/// An acyclic quiver with `1..=max_objects` vertices and up to `max_edges`
/// edges, parallel edges allowed. Vertices are `<prefix>0`, `<prefix>1`, ...
/// and edges `<prefix>e0`, ...
pub fn random_quiver(rng: &mut ChaCha8Rng, name: &str, prefix: &str, bounds: Bounds) -> Quiver {
    let n = rng.gen_range(1..=bounds.max_objects.max(1));
    let vertices = (0..n).map(|i| format!("{prefix}{i}")).collect();
    let mut q = Quiver::new(name, vertices);
    if n < 2 {
        return q;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for e in 0..rng.gen_range(0..=bounds.max_edges) {
        let i = rng.gen_range(0..n - 1);
        let j = rng.gen_range(i + 1..n);
        q = q.edge(format!("{prefix}e{e}"), order[i], order[j]);
    }
    q
}

/// The free category on a [`random_quiver`].
pub fn random_category(rng: &mut ChaCha8Rng, name: &str, prefix: &str, bounds: Bounds) -> CatRef {
    let q = random_quiver(rng, name, prefix, bounds);
    checked(free_on_acyclic_quiver(&q).expect("random quivers are acyclic")).expect("free categories are valid")
}

/// A functor `source → target` with random object images and random images
/// of the irreducible arrows, extended by composition. Falls back to a
/// constant functor when no draw closes up. `None` iff `target` is empty and
/// `source` is not.
pub fn random_functor(rng: &mut ChaCha8Rng, name: &str, source: &CatRef, target: &CatRef) -> Option<CatFunctor> {
    if target.object_count() == 0 {
        return (source.object_count() == 0)
            .then(|| CatFunctor::new(name, source.clone(), target.clone(), vec![], vec![]).ok())
            .flatten();
    }
    let generators = source.irreducible_morphisms();
    for _ in 0..ATTEMPTS {
        let objects: Vec<usize> = (0..source.object_count())
            .map(|_| rng.gen_range(0..target.object_count()))
            .collect();
        let mut arrows = vec![None; source.morphism_count()];
        for x in 0..source.object_count() {
            arrows[source.identity(x)] = Some(target.identity(objects[x]));
        }
        let mut ok = true;
        for &m in &generators {
            let hom = target.hom(objects[source.source(m)], objects[source.target(m)]);
            if hom.is_empty() {
                ok = false;
                break;
            }
            arrows[m] = Some(hom[rng.gen_range(0..hom.len())]);
        }
        if !ok {
            continue;
        }
        fill_by_composition(source, &mut arrows, |&g, &f| target.compose(g, f));
        let Some(arrows) = arrows.into_iter().collect::<Option<Vec<_>>>() else {
            continue;
        };
        let f = CatFunctor::new(name, source.clone(), target.clone(), objects, arrows).ok()?;
        if validate_functor(&f).is_empty() {
            return Some(f);
        }
    }
    let x = rng.gen_range(0..target.object_count());
    Some(CatFunctor::constant(source, target, x).renamed(name))
}

/// A set functor with sets of size at most `max_size`, labelled `e0`, `e1`,
/// ..., and random maps on the irreducible arrows. Falls back to the
/// constant singleton when no draw closes up.
pub fn random_set_functor(rng: &mut ChaCha8Rng, name: &str, shape: &CatRef, max_size: usize) -> SetFunctor {
    let generators = shape.irreducible_morphisms();
    for _ in 0..ATTEMPTS {
        let mut sizes: Vec<usize> = (0..shape.object_count()).map(|_| rng.gen_range(0..=max_size)).collect();
        // An arrow out of a non-empty set needs a non-empty target.
        let mut changed = true;
        while changed {
            changed = false;
            for m in 0..shape.morphism_count() {
                let (x, y) = (shape.source(m), shape.target(m));
                if sizes[x] > 0 && sizes[y] == 0 {
                    sizes[y] = 1;
                    changed = true;
                }
            }
        }
        let mut maps: Vec<Option<Vec<usize>>> = vec![None; shape.morphism_count()];
        for x in 0..shape.object_count() {
            maps[shape.identity(x)] = Some((0..sizes[x]).collect());
        }
        for &m in &generators {
            let (x, y) = (shape.source(m), shape.target(m));
            maps[m] = Some((0..sizes[x]).map(|_| rng.gen_range(0..sizes[y])).collect());
        }
        fill_by_composition(shape, &mut maps, |g, f| f.iter().map(|&e| g.get(e).copied()).collect());
        let Some(maps) = maps.into_iter().collect::<Option<Vec<_>>>() else {
            continue;
        };
        let sets = sizes
            .iter()
            .map(|&k| (0..k).map(|i| format!("e{i}")).collect())
            .collect();
        let Ok(f) = SetFunctor::new(name, shape.clone(), sets, maps) else {
            continue;
        };
        if validate_set_functor(&f).is_empty() {
            return f;
        }
    }
    SetFunctor::constant(name, shape.clone(), vec!["e0".to_string()]).expect("constant functors are valid")
}

/// `count` random set functors named `<prefix>0`, `<prefix>1`, ...
pub fn random_samples(
    rng: &mut ChaCha8Rng,
    prefix: &str,
    shape: &CatRef,
    count: usize,
    max_size: usize,
) -> Vec<SetFunctor> {
    (0..count)
        .map(|i| random_set_functor(rng, &format!("{prefix}{i}"), shape, max_size))
        .collect()
}

fn functor_into(rng: &mut ChaCha8Rng, name: &str, prefix: &str, target: &CatRef, bounds: Bounds) -> CatFunctor {
    // Every random category is non-empty, so a functor into it exists.
    let source = random_category(rng, &prefix.to_uppercase(), prefix, bounds);
    random_functor(rng, name, &source, target).expect("targets are non-empty")
}

/// A cospan `f : B → D ← C : g` of random categories.
pub fn random_cospan(rng: &mut ChaCha8Rng, bounds: Bounds) -> Cospan {
    let d = random_category(rng, "D", "d", bounds);
    let f = functor_into(rng, "f", "b", &d, bounds);
    let g = functor_into(rng, "g", "c", &d, bounds);
    Cospan::new(g, f).expect("both legs end in D")
}

/// A span `B ← A → C` with legs `s` and `t`.
pub fn random_span(rng: &mut ChaCha8Rng, bounds: Bounds) -> Span {
    let a = random_category(rng, "A", "a", bounds);
    let b = random_category(rng, "B", "b", bounds);
    let c = random_category(rng, "C", "c", bounds);
    let s = random_functor(rng, "s", &a, &b).expect("B is non-empty");
    let t = random_functor(rng, "t", &a, &c).expect("C is non-empty");
    Span::new(t, s).expect("both legs start in A")
}

/// A lax square whose right edge is `f`. The other edges are random and the
/// transformation is drawn from every one satisfying naturality; draws with
/// none are rejected. After too many rejections the flow-product square of
/// `f` and the last `g` is used, which always exists.
pub fn random_square_over(rng: &mut ChaCha8Rng, name: &str, f: &CatFunctor, bounds: Bounds) -> Result<LaxSquare> {
    let (b, d) = (f.source(), f.target());
    let mut last_g = None;
    for _ in 0..ATTEMPTS {
        let c = random_category(rng, "C", "c", bounds);
        let g = random_functor(rng, "g", &c, d).expect("the target of f is non-empty");
        let a = random_category(rng, "A", "a", bounds);
        let (Some(s), Some(t)) = (random_functor(rng, "s", &a, b), random_functor(rng, "t", &a, &c)) else {
            continue;
        };
        let candidates = enumerate_cat_nat_trans(&f.after(&s)?, &g.after(&t)?, 256);
        if let Some(alpha) = candidates.get(rng.gen_range(0..candidates.len().max(1))) {
            return LaxSquare::new(name, s, t, f.clone(), g, alpha.components().to_vec());
        }
        last_g = Some(g);
    }
    let g = last_g.expect("at least one attempt is made");
    Ok(flow_product(f, &g)?.square.renamed(name))
}

/// A random lax square.
pub fn random_square(rng: &mut ChaCha8Rng, name: &str, bounds: Bounds) -> Result<LaxSquare> {
    let d = random_category(rng, "D", "d", bounds);
    let f = functor_into(rng, "f", "b", &d, bounds);
    random_square_over(rng, name, &f, bounds)
}

/// Two squares that can be pasted: the right edge of `left` is the left
/// edge `t` of `right`.
pub fn random_pasteable_pair(rng: &mut ChaCha8Rng, bounds: Bounds) -> Result<(LaxSquare, LaxSquare)> {
    let right = random_square(rng, "right", bounds)?;
    let left = random_square_over(rng, "left", right.t(), bounds)?;
    Ok((left, right))
}

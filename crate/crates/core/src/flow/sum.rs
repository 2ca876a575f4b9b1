//! Flow sums (co-comma categories): the disjoint union of the feet of a span
//! with one new arrow `s(a) → t(a)` per apex object, hom-words taken modulo
//! hammock equivalence.

use std::collections::HashMap;
use std::sync::Arc;

use petgraph::unionfind::UnionFind;

use crate::category::CatRef;
use crate::error::{Error, Result};
use crate::flow::square::LaxSquare;
use crate::functor::{disjoint_union_builder, same_category, CatFunctor};

/// A generating word `ψ a φ` for a cross morphism `b → c`: `φ : b → s(a)` in
/// `B`, `ψ : t(a) → c` in `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlowSumWord {
    pub phi: usize,
    pub a: usize,
    pub psi: usize,
}

/// The flow sum of `s : A → B` and `t : A → C` with its canonical square
/// (`f = inl`, `g = inr`).
#[derive(Debug, Clone)]
pub struct FlowSum {
    pub square: LaxSquare,
    /// Every word, in lexicographic order.
    pub words: Vec<FlowSumWord>,
    /// Class index of each word.
    pub word_class: Vec<usize>,
    /// Representative word of each class; classes are ordered by it.
    pub representatives: Vec<usize>,
    /// Morphism of the flow sum for each class.
    pub class_morphism: Vec<usize>,
    word_index: HashMap<FlowSumWord, usize>,
    morphism_class: HashMap<usize, usize>,
}

impl FlowSum {
    pub fn category(&self) -> &CatRef {
        self.square.d()
    }

    pub fn s(&self) -> &CatFunctor {
        self.square.s()
    }

    pub fn t(&self) -> &CatFunctor {
        self.square.t()
    }

    pub fn word(&self, phi: usize, a: usize, psi: usize) -> Option<usize> {
        self.word_index.get(&FlowSumWord { phi, a, psi }).copied()
    }

    /// The cross morphism a word stands for.
    pub fn class_of(&self, w: FlowSumWord) -> Result<usize> {
        let i = self
            .word_index
            .get(&w)
            .ok_or_else(|| Error::shape(format!("{w:?} is not a well-typed word")))?;
        Ok(self.class_morphism[self.word_class[*i]])
    }

    /// The class of a cross morphism of the flow sum, if it is one.
    pub fn class_of_morphism(&self, m: usize) -> Option<usize> {
        self.morphism_class.get(&m).copied()
    }

    /// Endpoints `(b, c)` of a word.
    pub fn endpoints(&self, w: FlowSumWord) -> (usize, usize) {
        (self.s().target().source(w.phi), self.t().target().target(w.psi))
    }

    /// Whether two words with the same endpoints name the same morphism.
    pub fn words_equal(&self, w1: FlowSumWord, w2: FlowSumWord) -> Result<bool> {
        if self.endpoints(w1) != self.endpoints(w2) {
            return Err(Error::shape(format!("{w1:?} and {w2:?} have different endpoints")));
        }
        Ok(self.class_of(w1)? == self.class_of(w2)?)
    }

    /// Precomposition with `β` in `B` and postcomposition with `γ` in `C`.
    pub fn act(&self, gamma: usize, w: FlowSumWord, beta: usize) -> FlowSumWord {
        let (b_cat, c_cat) = (self.s().target(), self.t().target());
        FlowSumWord {
            phi: b_cat.comp(w.phi, beta),
            a: w.a,
            psi: c_cat.comp(gamma, w.psi),
        }
    }

    /// A triple `(γ, w, β)` for which the composite `γ w β` depends on the
    /// chosen word in the class of `w`, if any.
    pub fn composition_witness(&self) -> Option<(usize, FlowSumWord, usize)> {
        let (b_cat, c_cat) = (self.s().target(), self.t().target());
        let mut first_of_class: Vec<Option<FlowSumWord>> = vec![None; self.representatives.len()];
        for (i, &w) in self.words.iter().enumerate() {
            let class = self.word_class[i];
            let Some(rep) = first_of_class[class] else {
                first_of_class[class] = Some(w);
                continue;
            };
            let (b, c) = self.endpoints(w);
            for &beta in b_cat.incoming(b) {
                for &gamma in c_cat.outgoing(c) {
                    let x = self.class_of(self.act(gamma, w, beta)).ok()?;
                    let y = self.class_of(self.act(gamma, rep, beta)).ok()?;
                    if x != y {
                        return Some((gamma, w, beta));
                    }
                }
            }
        }
        None
    }
}

fn check_span(s: &CatFunctor, t: &CatFunctor) -> Result<()> {
    if !same_category(s.source(), t.source()) {
        return Err(Error::structural(format!(
            "`{}` and `{}` do not form a span: sources `{}` and `{}` differ",
            s.name(),
            t.name(),
            s.source().name(),
            t.source().name()
        )));
    }
    Ok(())
}

pub fn flow_sum(s: &CatFunctor, t: &CatFunctor) -> Result<FlowSum> {
    check_span(s, t)?;
    let (a_cat, b_cat, c_cat) = (s.source(), s.target(), t.target());

    let mut words = Vec::new();
    for a in 0..a_cat.object_count() {
        for &phi in b_cat.incoming(s.obj(a)) {
            for &psi in c_cat.outgoing(t.obj(a)) {
                words.push(FlowSumWord { phi, a, psi });
            }
        }
    }
    words.sort();
    let word_index: HashMap<FlowSumWord, usize> = words.iter().enumerate().map(|(i, &w)| (w, i)).collect();

    // One hammock step per (θ : a → a', φ into s(a), ψ' out of t(a')):
    // (φ, a, ψ'∘t(θ)) ~ (s(θ)∘φ, a', ψ').
    let mut uf = UnionFind::<usize>::new(words.len());
    for theta in 0..a_cat.morphism_count() {
        if a_cat.is_identity(theta) {
            continue;
        }
        let (a, a2) = (a_cat.source(theta), a_cat.target(theta));
        for &phi in b_cat.incoming(s.obj(a)) {
            for &psi2 in c_cat.outgoing(t.obj(a2)) {
                let left = FlowSumWord {
                    phi,
                    a,
                    psi: c_cat.comp(psi2, t.mor(theta)),
                };
                let right = FlowSumWord {
                    phi: b_cat.comp(s.mor(theta), phi),
                    a: a2,
                    psi: psi2,
                };
                uf.union(word_index[&left], word_index[&right]);
            }
        }
    }

    // Words are sorted, so the first word met in each class is its least.
    let mut class_of_root: HashMap<usize, usize> = HashMap::new();
    let mut representatives = Vec::new();
    let mut word_class = Vec::with_capacity(words.len());
    for i in 0..words.len() {
        let root = uf.find_mut(i);
        let class = *class_of_root.entry(root).or_insert_with(|| {
            representatives.push(i);
            representatives.len() - 1
        });
        word_class.push(class);
    }

    let name = format!("{}+{}", b_cat.name(), c_cat.name());
    let (mut builder, inl_map, inr_map) = disjoint_union_builder(name, b_cat, c_cat);
    let nb = b_cat.object_count();
    let mut class_morphism = Vec::with_capacity(representatives.len());
    for &r in &representatives {
        let w = words[r];
        let label = format!(
            "W({},{},{})",
            b_cat.morphism_name(w.phi),
            a_cat.object_name(w.a),
            c_cat.morphism_name(w.psi)
        );
        let (b, c) = (b_cat.source(w.phi), c_cat.target(w.psi));
        class_morphism.push(builder.arrow(label, b, nb + c));
    }
    let class_at = |w: FlowSumWord| class_morphism[word_class[word_index[&w]]];
    for &r in &representatives {
        let w = words[r];
        let (b, c) = (b_cat.source(w.phi), c_cat.target(w.psi));
        let cross = class_at(w);
        for &beta in b_cat.incoming(b) {
            if b_cat.is_identity(beta) {
                continue;
            }
            let pre = FlowSumWord {
                phi: b_cat.comp(w.phi, beta),
                ..w
            };
            builder.compose(cross, inl_map[beta], class_at(pre));
        }
        for &gamma in c_cat.outgoing(c) {
            if c_cat.is_identity(gamma) {
                continue;
            }
            let post = FlowSumWord {
                psi: c_cat.comp(gamma, w.psi),
                ..w
            };
            builder.compose(inr_map[gamma], cross, class_at(post));
        }
    }
    let category: CatRef = Arc::new(builder.build().expect("flow sums are well formed"));

    let inl = CatFunctor::new("inl", b_cat.clone(), category.clone(), (0..nb).collect(), inl_map)?;
    let inr = CatFunctor::new(
        "inr",
        c_cat.clone(),
        category.clone(),
        (nb..nb + c_cat.object_count()).collect(),
        inr_map,
    )?;
    let components = (0..a_cat.object_count())
        .map(|a| {
            class_at(FlowSumWord {
                phi: b_cat.identity(s.obj(a)),
                a,
                psi: c_cat.identity(t.obj(a)),
            })
        })
        .collect();
    let square = LaxSquare::new(
        format!("flow-sum[{}]", category.name()),
        s.clone(),
        t.clone(),
        inl,
        inr,
        components,
    )?;
    let morphism_class = class_morphism.iter().enumerate().map(|(k, &m)| (m, k)).collect();
    Ok(FlowSum {
        square,
        words,
        word_class,
        representatives,
        class_morphism,
        word_index,
        morphism_class,
    })
}

/// The functor out of the flow sum induced by a square over its span:
/// `inl(m) ↦ f(m)`, `inr(m) ↦ g(m)`, `[φ, a, ψ] ↦ g(ψ)∘α_a∘f(φ)`.
///
/// Fails if the formula is not constant on some hammock class, which cannot
/// happen for a valid square.
pub fn flow_sum_mediator(sq: &LaxSquare, fs: &FlowSum) -> Result<CatFunctor> {
    if !sq.s().agrees_with(fs.s()) || !sq.t().agrees_with(fs.t()) {
        return Err(Error::shape(format!(
            "square `{}` is not over the span of `{}`",
            sq.name(),
            fs.category().name()
        )));
    }
    let (b_cat, c_cat, d) = (sq.b(), sq.c(), sq.d());
    let fs_cat = fs.category();
    let nb = b_cat.object_count();
    let object_map: Vec<usize> = (0..nb)
        .map(|b| sq.f().obj(b))
        .chain((0..c_cat.object_count()).map(|c| sq.g().obj(c)))
        .collect();
    let mut morphism_map = vec![usize::MAX; fs_cat.morphism_count()];
    let (inl, inr) = (fs.square.f(), fs.square.g());
    for m in 0..b_cat.morphism_count() {
        morphism_map[inl.mor(m)] = sq.f().mor(m);
    }
    for m in 0..c_cat.morphism_count() {
        morphism_map[inr.mor(m)] = sq.g().mor(m);
    }
    for (i, &w) in fs.words.iter().enumerate() {
        let image = d.comp(sq.g().mor(w.psi), d.comp(sq.alpha().component(w.a), sq.f().mor(w.phi)));
        let target = &mut morphism_map[fs.class_morphism[fs.word_class[i]]];
        if *target == usize::MAX {
            *target = image;
        } else if *target != image {
            return Err(Error::Invalid {
                kind: "lax square",
                name: sq.name().to_string(),
                details: "mediator is not constant on a hammock class".into(),
            });
        }
    }
    CatFunctor::new(
        format!("med[{}]", sq.name()),
        fs_cat.clone(),
        d.clone(),
        object_map,
        morphism_map,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{validate_category, CategoryBuilder, FinCategory};
    use crate::functor::{disjoint_union, validate_functor};

    fn two() -> CatRef {
        let mut b = CategoryBuilder::new("2", ["0", "1"]);
        b.arrow("u", 0, 1);
        Arc::new(b.build().unwrap())
    }

    fn point() -> CatRef {
        Arc::new(FinCategory::point())
    }

    fn cross_count(fs: &FlowSum) -> usize {
        fs.representatives.len()
    }

    #[test]
    fn empty_apex_is_the_disjoint_union() {
        let empty: CatRef = Arc::new(FinCategory::empty());
        let t = two();
        let s = CatFunctor::new("s", empty.clone(), t.clone(), vec![], vec![]).unwrap();
        let u = CatFunctor::new("t", empty, point(), vec![], vec![]).unwrap();
        let fs = flow_sum(&s, &u).unwrap();
        let (du, _, _) = disjoint_union(&t, &point());
        assert!(fs.category().structurally_equal(&du));
        assert_eq!(cross_count(&fs), 0);
    }

    #[test]
    fn point_span_gives_the_interval() {
        let p = point();
        let id = CatFunctor::identity(&p);
        let fs = flow_sum(&id, &id).unwrap();
        assert_eq!(fs.category().object_count(), 2);
        assert_eq!(fs.category().morphism_count(), 3);
        assert_eq!(fs.category().morphism_name(2), "W(id_*,*,id_*)");
    }

    #[test]
    fn hammock_merges_the_two_words() {
        let t = two();
        let p = point();
        let c = CatFunctor::constant(&t, &p, 0);
        let fs = flow_sum(&c, &c).unwrap();
        assert_eq!(cross_count(&fs), 1);
        assert_eq!(fs.category().morphism_count(), 3);
        assert!(fs.words_equal(fs.words[0], fs.words[1]).unwrap());
        assert!(validate_category(fs.category()).is_empty());
        assert!(fs.composition_witness().is_none());
    }

    #[test]
    fn discrete_apex_keeps_parallel_arrows() {
        let disc: CatRef = Arc::new(CategoryBuilder::new("D", ["a1", "a2"]).build().unwrap());
        let p = point();
        let c = CatFunctor::constant(&disc, &p, 0);
        let fs = flow_sum(&c, &c).unwrap();
        assert_eq!(cross_count(&fs), 2);
        assert!(!fs.words_equal(fs.words[0], fs.words[1]).unwrap());
    }

    #[test]
    fn mediators() {
        let t = two();
        let p = point();
        let c = CatFunctor::constant(&t, &p, 0);
        let fs = flow_sum(&c, &c).unwrap();
        let med = flow_sum_mediator(&fs.square, &fs).unwrap();
        assert!(med.agrees_with(&CatFunctor::identity(fs.category())));

        let id = CatFunctor::identity(&p);
        let fs = flow_sum(&id, &id).unwrap();
        let sq = LaxSquare::new(
            "u",
            id.clone(),
            id,
            CatFunctor::point_at(&t, 0),
            CatFunctor::point_at(&t, 1),
            vec![2],
        )
        .unwrap();
        let med = flow_sum_mediator(&sq, &fs).unwrap();
        assert!(validate_functor(&med).is_empty());
        assert_eq!(med.mor(2), 2);
    }

    #[test]
    fn mismatched_span() {
        let t = two();
        let err = flow_sum(&CatFunctor::identity(&t), &CatFunctor::identity(&point())).unwrap_err();
        assert!(matches!(err, Error::Structural(_)));
    }
}

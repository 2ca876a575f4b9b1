//! Flow products (comma categories) and fibre products over a cospan.

use std::collections::HashMap;
use std::sync::Arc;

use crate::category::{CatRef, CategoryBuilder};
use crate::error::{Error, Result};
use crate::flow::square::LaxSquare;
use crate::functor::{full_subcategory, same_category, CatFunctor};

/// The flow product of `f : B → D` and `g : C → D` with its canonical square.
///
/// Objects are triples `(b, c, η : f(b) → g(c))`, ordered by `b`, then `c`,
/// then `η` in hom-set order, and named `T(<b>,<c>,<eta>)`. Morphisms are
/// pairs `(φ, ψ)` named `P(<phi>,<psi>)`; when several morphisms share a pair
/// the name carries the endpoint components as `P(<phi>,<psi>|<eta>,<eta'>)`.
#[derive(Debug, Clone)]
pub struct FlowProduct {
    pub square: LaxSquare,
    pub triples: Vec<(usize, usize, usize)>,
    /// `(φ, ψ)` of every morphism, identities included.
    pub pairs: Vec<(usize, usize)>,
    triple_index: HashMap<(usize, usize, usize), usize>,
    edge_index: HashMap<(usize, usize, usize, usize), usize>,
}

impl FlowProduct {
    pub fn category(&self) -> &CatRef {
        self.square.a()
    }

    pub fn object(&self, b: usize, c: usize, eta: usize) -> Option<usize> {
        self.triple_index.get(&(b, c, eta)).copied()
    }

    /// The morphism from object `i` to object `j` over `(φ, ψ)`.
    pub fn morphism(&self, i: usize, j: usize, phi: usize, psi: usize) -> Option<usize> {
        self.edge_index.get(&(i, j, phi, psi)).copied()
    }
}

fn check_cospan(f: &CatFunctor, g: &CatFunctor) -> Result<()> {
    if !same_category(f.target(), g.target()) {
        return Err(Error::structural(format!(
            "`{}` and `{}` do not form a cospan: targets `{}` and `{}` differ",
            f.name(),
            g.name(),
            f.target().name(),
            g.target().name()
        )));
    }
    Ok(())
}

pub fn flow_product(f: &CatFunctor, g: &CatFunctor) -> Result<FlowProduct> {
    check_cospan(f, g)?;
    let (b_cat, c_cat, d_cat) = (f.source(), g.source(), f.target());
    let mut triples = Vec::new();
    for b in 0..b_cat.object_count() {
        for c in 0..c_cat.object_count() {
            for &eta in d_cat.hom(f.obj(b), g.obj(c)) {
                triples.push((b, c, eta));
            }
        }
    }
    let triple_index: HashMap<(usize, usize, usize), usize> =
        triples.iter().enumerate().map(|(i, &t)| (t, i)).collect();

    // Non-identity morphisms as (source, target, φ, ψ).
    let mut edges = Vec::new();
    for (i, &(b, c, eta)) in triples.iter().enumerate() {
        for &phi in b_cat.outgoing(b) {
            for &psi in c_cat.outgoing(c) {
                if b_cat.is_identity(phi) && c_cat.is_identity(psi) {
                    continue;
                }
                let rhs = d_cat.comp(g.mor(psi), eta);
                let (b2, c2) = (b_cat.target(phi), c_cat.target(psi));
                for &eta2 in d_cat.hom(f.obj(b2), g.obj(c2)) {
                    if d_cat.comp(eta2, f.mor(phi)) == rhs {
                        edges.push((i, triple_index[&(b2, c2, eta2)], phi, psi));
                    }
                }
            }
        }
    }

    let name = format!("{}|{}", f.name(), g.name());
    let object_names = triples.iter().map(|&(b, c, eta)| {
        format!(
            "T({},{},{})",
            b_cat.object_name(b),
            c_cat.object_name(c),
            d_cat.morphism_name(eta)
        )
    });
    let mut builder = CategoryBuilder::new(name, object_names);
    let mut uses: HashMap<(usize, usize), usize> = HashMap::new();
    for &(_, _, phi, psi) in &edges {
        *uses.entry((phi, psi)).or_default() += 1;
    }
    let mut edge_index = HashMap::new();
    let mut pairs = Vec::with_capacity(triples.len() + edges.len());
    for (i, &(b, c, _)) in triples.iter().enumerate() {
        let pair = (b_cat.identity(b), c_cat.identity(c));
        edge_index.insert((i, i, pair.0, pair.1), i);
        pairs.push(pair);
    }
    for &(i, j, phi, psi) in &edges {
        let base = format!("{},{}", b_cat.morphism_name(phi), c_cat.morphism_name(psi));
        let label = if uses[&(phi, psi)] == 1 {
            format!("P({base})")
        } else {
            format!(
                "P({base}|{},{})",
                d_cat.morphism_name(triples[i].2),
                d_cat.morphism_name(triples[j].2)
            )
        };
        edge_index.insert((i, j, phi, psi), builder.arrow(label, i, j));
        pairs.push((phi, psi));
    }
    for &(i, j, phi, psi) in &edges {
        for &(j2, k, phi2, psi2) in &edges {
            if j2 != j {
                continue;
            }
            let h = edge_index[&(i, k, b_cat.comp(phi2, phi), c_cat.comp(psi2, psi))];
            builder.compose(edge_index[&(j, k, phi2, psi2)], edge_index[&(i, j, phi, psi)], h);
        }
    }
    let category: CatRef = Arc::new(builder.build().expect("flow products are well formed"));

    let s = CatFunctor::new(
        "s",
        category.clone(),
        b_cat.clone(),
        triples.iter().map(|t| t.0).collect(),
        pairs.iter().map(|p| p.0).collect(),
    )?;
    let t = CatFunctor::new(
        "t",
        category.clone(),
        c_cat.clone(),
        triples.iter().map(|t| t.1).collect(),
        pairs.iter().map(|p| p.1).collect(),
    )?;
    let components = triples.iter().map(|t| t.2).collect();
    let square = LaxSquare::new(
        format!("flow-product[{}]", category.name()),
        s,
        t,
        f.clone(),
        g.clone(),
        components,
    )?;
    Ok(FlowProduct {
        square,
        triples,
        pairs,
        triple_index,
        edge_index,
    })
}

/// The strict fibre product as the full subcategory of the flow product on
/// triples whose component is an identity.
#[derive(Debug, Clone)]
pub struct FibreProduct {
    /// Square over the same cospan with identity components.
    pub square: LaxSquare,
    pub inclusion: CatFunctor,
    pub flow: FlowProduct,
}

impl FibreProduct {
    pub fn category(&self) -> &CatRef {
        self.square.a()
    }
}

pub fn fibre_product(f: &CatFunctor, g: &CatFunctor) -> Result<FibreProduct> {
    let flow = flow_product(f, g)?;
    let d = f.target();
    let keep: Vec<usize> = (0..flow.triples.len())
        .filter(|&i| d.is_identity(flow.triples[i].2))
        .collect();
    let name = format!("{}x{}", f.name(), g.name());
    let (category, inclusion) = full_subcategory(name, flow.category(), &keep);
    let s = flow.square.s().after(&inclusion)?.renamed("p");
    let t = flow.square.t().after(&inclusion)?.renamed("q");
    let components = keep.iter().map(|&i| flow.triples[i].2).collect();
    let square = LaxSquare::new(
        format!("fibre-product[{}]", category.name()),
        s,
        t,
        f.clone(),
        g.clone(),
        components,
    )?;
    Ok(FibreProduct {
        square,
        inclusion,
        flow,
    })
}

/// The functor `A → B ↓ C` induced by a square over the cospan of `fp`:
/// `a ↦ (s a, t a, α_a)`, `θ ↦ (s θ, t θ)`.
pub fn flow_product_mediator(sq: &LaxSquare, fp: &FlowProduct) -> Result<CatFunctor> {
    if !sq.f().agrees_with(fp.square.f()) || !sq.g().agrees_with(fp.square.g()) {
        return Err(Error::shape(format!(
            "square `{}` is not over the cospan of `{}`",
            sq.name(),
            fp.category().name()
        )));
    }
    let a = sq.a();
    let object_map: Vec<usize> = (0..a.object_count())
        .map(|x| {
            fp.object(sq.s().obj(x), sq.t().obj(x), sq.alpha().component(x))
                .expect("every component is a flow product object")
        })
        .collect();
    let morphism_map = (0..a.morphism_count())
        .map(|m| {
            let (i, j) = (object_map[a.source(m)], object_map[a.target(m)]);
            fp.morphism(i, j, sq.s().mor(m), sq.t().mor(m))
                .expect("naturality makes every pair a flow product morphism")
        })
        .collect();
    CatFunctor::new(
        format!("med[{}]", sq.name()),
        a.clone(),
        fp.category().clone(),
        object_map,
        morphism_map,
    )
}

//! Flows (slices and coslices) and fibres of a functor at an object.

use std::collections::HashMap;
use std::sync::Arc;

use petgraph::unionfind::UnionFind;

use crate::category::{CatRef, CategoryBuilder};
use crate::error::{Error, Result};
use crate::flow::square::LaxSquare;
use crate::functor::CatFunctor;

/// Which comma a [`CommaShape`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `f ↓ d`: objects `(b, η : f(b) → d)`.
    To,
    /// `d ↓ f`: objects `(b, η : d → f(b))`.
    From,
}

/// The combinatorial data of `f ↓ d` or `d ↓ f` without names.
///
/// `edges` lists the non-identity morphisms as `(source node, target node,
/// underlying morphism)`.
#[derive(Debug, Clone)]
pub struct CommaShape {
    pub direction: Direction,
    pub at: usize,
    pub objects: Vec<(usize, usize)>,
    pub edges: Vec<(usize, usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl CommaShape {
    pub fn from_parts(
        direction: Direction,
        at: usize,
        objects: Vec<(usize, usize)>,
        edges: Vec<(usize, usize, usize)>,
    ) -> Self {
        let index = objects.iter().enumerate().map(|(i, &o)| (o, i)).collect();
        CommaShape {
            direction,
            at,
            objects,
            edges,
            index,
        }
    }

    pub fn node(&self, b: usize, eta: usize) -> Option<usize> {
        self.index.get(&(b, eta)).copied()
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// Number of zigzag components of the comma.
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::<usize>::new(self.objects.len());
        let mut count = self.objects.len();
        for &(i, j, _) in &self.edges {
            if uf.union(i, j) {
                count -= 1;
            }
        }
        count
    }
}

/// Objects and morphisms of `f ↓ d`.
pub fn comma_to_shape(f: &CatFunctor, d: usize) -> CommaShape {
    let (b_cat, d_cat) = (f.source(), f.target());
    let mut objects = Vec::new();
    let mut by_base: Vec<Vec<usize>> = vec![Vec::new(); b_cat.object_count()];
    for b in 0..b_cat.object_count() {
        for &eta in d_cat.hom(f.obj(b), d) {
            by_base[b].push(objects.len());
            objects.push((b, eta));
        }
    }
    let mut edges = Vec::new();
    for (i, &(b, eta)) in objects.iter().enumerate() {
        for &phi in b_cat.outgoing(b) {
            if b_cat.is_identity(phi) {
                continue;
            }
            let fphi = f.mor(phi);
            for &j in &by_base[b_cat.target(phi)] {
                if d_cat.comp(objects[j].1, fphi) == eta {
                    edges.push((i, j, phi));
                }
            }
        }
    }
    let index = objects.iter().enumerate().map(|(i, &o)| (o, i)).collect();
    CommaShape {
        direction: Direction::To,
        at: d,
        objects,
        edges,
        index,
    }
}

/// Objects and morphisms of `d ↓ f`.
pub fn comma_from_shape(f: &CatFunctor, d: usize) -> CommaShape {
    let (b_cat, d_cat) = (f.source(), f.target());
    let mut objects = Vec::new();
    for b in 0..b_cat.object_count() {
        for &eta in d_cat.hom(d, f.obj(b)) {
            objects.push((b, eta));
        }
    }
    let index: HashMap<(usize, usize), usize> = objects.iter().enumerate().map(|(i, &o)| (o, i)).collect();
    let mut edges = Vec::new();
    for (i, &(b, eta)) in objects.iter().enumerate() {
        for &phi in b_cat.outgoing(b) {
            if b_cat.is_identity(phi) {
                continue;
            }
            let eta2 = d_cat.comp(f.mor(phi), eta);
            if let Some(&j) = index.get(&(b_cat.target(phi), eta2)) {
                edges.push((i, j, phi));
            }
        }
    }
    CommaShape {
        direction: Direction::From,
        at: d,
        objects,
        edges,
        index,
    }
}

/// A materialized flow `f ↓ d` or `d ↓ f` with its projection to the source
/// of `f`.
///
/// Objects are named `T(<b>,<eta>)` and morphisms `P(<phi>)`; when several
/// morphisms share an underlying `phi`, the names carry the endpoint
/// components as `P(<phi>|<eta>,<eta'>)`.
#[derive(Debug, Clone)]
pub struct Comma {
    pub shape: CommaShape,
    pub category: CatRef,
    pub projection: CatFunctor,
    edge_index: HashMap<(usize, usize, usize), usize>,
}

impl Comma {
    /// Morphism of the comma from node `i` to node `j` over `phi`.
    pub fn morphism(&self, i: usize, j: usize, phi: usize) -> Option<usize> {
        self.edge_index.get(&(i, j, phi)).copied()
    }

    pub fn node(&self, b: usize, eta: usize) -> Option<usize> {
        self.shape.node(b, eta)
    }
}

fn materialize(f: &CatFunctor, shape: CommaShape, name: String) -> Comma {
    let (b_cat, d_cat) = (f.source(), f.target());
    let objects = shape
        .objects
        .iter()
        .map(|&(b, eta)| format!("T({},{})", b_cat.object_name(b), d_cat.morphism_name(eta)));
    let mut builder = CategoryBuilder::new(name, objects);
    let mut uses: HashMap<usize, usize> = HashMap::new();
    for &(_, _, phi) in &shape.edges {
        *uses.entry(phi).or_default() += 1;
    }
    let mut edge_index = HashMap::new();
    let mut arrows = Vec::with_capacity(shape.objects.len() + shape.edges.len());
    for (i, &(b, _)) in shape.objects.iter().enumerate() {
        edge_index.insert((i, i, b_cat.identity(b)), i);
        arrows.push(b_cat.identity(b));
    }
    for &(i, j, phi) in &shape.edges {
        let label = if uses[&phi] == 1 {
            format!("P({})", b_cat.morphism_name(phi))
        } else {
            format!(
                "P({}|{},{})",
                b_cat.morphism_name(phi),
                d_cat.morphism_name(shape.objects[i].1),
                d_cat.morphism_name(shape.objects[j].1)
            )
        };
        let id = builder.arrow(label, i, j);
        edge_index.insert((i, j, phi), id);
        arrows.push(phi);
    }
    for &(i, j, phi) in &shape.edges {
        for &(j2, k, psi) in &shape.edges {
            if j2 != j {
                continue;
            }
            let composite = b_cat.comp(psi, phi);
            let h = edge_index[&(i, k, composite)];
            builder.compose(edge_index[&(j, k, psi)], edge_index[&(i, j, phi)], h);
        }
    }
    let category = Arc::new(builder.build().expect("flow categories are well formed"));
    let projection = CatFunctor::new(
        format!("proj[{}]", category.name()),
        category.clone(),
        f.source().clone(),
        shape.objects.iter().map(|&(b, _)| b).collect(),
        arrows,
    )
    .expect("projection resolves");
    Comma {
        shape,
        category,
        projection,
        edge_index,
    }
}

/// The flow of `f` to `d`, i.e. the slice `f ↓ d`.
pub fn flow_to(f: &CatFunctor, d: usize) -> Result<Comma> {
    check_object(f, d)?;
    let name = format!("{}/{}", f.name(), f.target().object_name(d));
    Ok(materialize(f, comma_to_shape(f, d), name))
}

/// The flow of `f` from `d`, i.e. the coslice `d ↓ f`.
pub fn flow_from(f: &CatFunctor, d: usize) -> Result<Comma> {
    check_object(f, d)?;
    let name = format!("{}\\{}", f.target().object_name(d), f.name());
    Ok(materialize(f, comma_from_shape(f, d), name))
}

fn check_object(f: &CatFunctor, d: usize) -> Result<()> {
    if d >= f.target().object_count() {
        return Err(Error::UnknownObject {
            name: d.to_string(),
            context: f.target().name().to_string(),
        });
    }
    Ok(())
}

/// The strict fibre `f⁻¹(d)` with its full inclusion into `f ↓ d`.
#[derive(Debug, Clone)]
pub struct Fibre {
    pub category: CatRef,
    pub inclusion: CatFunctor,
    pub flow: Comma,
    /// Object of the source of `f` for each fibre object.
    pub objects: Vec<usize>,
}

pub fn fiber(f: &CatFunctor, d: usize) -> Result<Fibre> {
    let flow = flow_to(f, d)?;
    let (b_cat, d_cat) = (f.source(), f.target());
    let id_d = d_cat.identity(d);
    let objects: Vec<usize> = (0..b_cat.object_count()).filter(|&x| f.obj(x) == d).collect();
    let mut local = vec![usize::MAX; b_cat.object_count()];
    for (i, &x) in objects.iter().enumerate() {
        local[x] = i;
    }
    let name = format!("{}^-1({})", f.name(), d_cat.object_name(d));
    let mut builder = CategoryBuilder::new(name, objects.iter().map(|&x| b_cat.object_name(x).to_string()));
    let mut mor_local = vec![usize::MAX; b_cat.morphism_count()];
    let mut under = Vec::new();
    for (i, &x) in objects.iter().enumerate() {
        mor_local[b_cat.identity(x)] = i;
        under.push(b_cat.identity(x));
    }
    for m in 0..b_cat.morphism_count() {
        if b_cat.is_identity(m) || f.mor(m) != id_d {
            continue;
        }
        mor_local[m] = builder.arrow(b_cat.morphism_name(m), local[b_cat.source(m)], local[b_cat.target(m)]);
        under.push(m);
    }
    for (g, h, k) in b_cat.composition_entries() {
        if b_cat.is_identity(g) || b_cat.is_identity(h) {
            continue;
        }
        if mor_local[g] != usize::MAX && mor_local[h] != usize::MAX {
            builder.compose(mor_local[g], mor_local[h], mor_local[k]);
        }
    }
    let category = Arc::new(builder.build()?);
    let object_map = objects
        .iter()
        .map(|&x| flow.node(x, id_d).expect("fibre objects lie over the identity"))
        .collect::<Vec<_>>();
    let morphism_map = under
        .iter()
        .map(|&m| {
            let (i, j) = (local[b_cat.source(m)], local[b_cat.target(m)]);
            flow.morphism(object_map[i], object_map[j], m)
                .expect("fibre morphisms lie over the identity")
        })
        .collect();
    let inclusion = CatFunctor::new(
        format!("incl[{}]", category.name()),
        category.clone(),
        flow.category.clone(),
        object_map,
        morphism_map,
    )?;
    Ok(Fibre {
        category,
        inclusion,
        flow,
        objects,
    })
}

/// For a square with `α : f∘s ⇒ g∘t` and an object `c` of `C`, the functor
/// `t ↓ c → f ↓ g(c)` sending `(a, η)` to `(s a, g(η)∘α_a)` and `θ` to `s θ`.
pub fn induced_flow_functor(sq: &LaxSquare, c: usize) -> Result<(Comma, Comma, CatFunctor)> {
    let from = flow_to(sq.t(), c)?;
    let to = flow_to(sq.f(), sq.g().obj(c))?;
    let d = sq.d();
    let object_map: Vec<usize> = from
        .shape
        .objects
        .iter()
        .map(|&(a, eta)| {
            let b = sq.s().obj(a);
            let eta2 = d.comp(sq.g().mor(eta), sq.alpha().component(a));
            to.node(b, eta2).expect("component lands in the target flow")
        })
        .collect();
    let a_cat = sq.a();
    let morphism_map = (0..from.category.morphism_count())
        .map(|m| {
            let theta = from.projection.mor(m);
            let (i, j) = (from.category.source(m), from.category.target(m));
            let phi = sq.s().mor(theta);
            debug_assert!(a_cat.source(theta) == from.shape.objects[i].0);
            to.morphism(object_map[i], object_map[j], phi)
                .expect("naturality of the square transports flow morphisms")
        })
        .collect();
    let functor = CatFunctor::new(
        format!("flow[{}]", sq.name()),
        from.category.clone(),
        to.category.clone(),
        object_map,
        morphism_map,
    )?;
    Ok((from, to, functor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{validate_category, FinCategory};
    use crate::functor::validate_functor;

    fn two() -> CatRef {
        let mut b = CategoryBuilder::new("2", ["0", "1"]);
        b.arrow("u", 0, 1);
        Arc::new(b.build().unwrap())
    }

    fn point_at(c: &CatRef, x: usize) -> CatFunctor {
        CatFunctor::point_at(c, x)
    }

    #[test]
    fn slice_of_the_interval_over_its_top() {
        let t = two();
        let flow = flow_to(&CatFunctor::identity(&t), 1).unwrap();
        let c = &flow.category;
        assert_eq!(c.objects(), &["T(0,u)".to_string(), "T(1,id_1)".to_string()]);
        assert_eq!(c.morphism_count(), 3);
        assert!(validate_category(c).is_empty());
        assert!(validate_functor(&flow.projection).is_empty());
    }

    #[test]
    fn slice_over_terminal_is_the_source() {
        let t = two();
        let point = Arc::new(FinCategory::point());
        let to_point = CatFunctor::constant(&t, &point, 0);
        let flow = flow_to(&to_point, 0).unwrap();
        assert!(flow.projection.is_isomorphism());
        let flow = flow_to(&CatFunctor::identity(&t), 1).unwrap();
        assert!(flow.projection.is_isomorphism());
    }

    #[test]
    fn point_into_interval_flows() {
        let t = two();
        let at0 = point_at(&t, 0);
        let to1 = flow_to(&at0, 1).unwrap();
        assert_eq!(to1.category.objects(), &["T(*,u)".to_string()]);
        assert_eq!(to1.category.morphism_count(), 1);

        let at1 = point_at(&t, 1);
        let from0 = flow_from(&at1, 0).unwrap();
        assert_eq!(from0.category.object_count(), 1);
        let from1 = flow_from(&at0, 1).unwrap();
        assert_eq!(from1.category.object_count(), 0);

        let coslice = flow_from(&CatFunctor::identity(&t), 0).unwrap();
        assert_eq!(
            coslice.category.objects(),
            &["T(0,id_0)".to_string(), "T(1,u)".to_string()]
        );
    }

    #[test]
    fn fibres() {
        let t = two();
        let fib = fiber(&CatFunctor::identity(&t), 1).unwrap();
        assert_eq!(fib.category.object_count(), 1);
        assert_eq!(fib.category.morphism_count(), 1);
        let fib = fiber(&point_at(&t, 0), 1).unwrap();
        assert_eq!(fib.category.object_count(), 0);
        assert!(fiber(&point_at(&t, 0), 7).is_err());
    }
}

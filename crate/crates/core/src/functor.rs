//! Functors between finite categories and natural transformations between
//! them.

use std::sync::Arc;

use crate::category::{opposite, CatRef, CategoryBuilder, FinCategory};
use crate::error::{Error, Result};
use crate::report::{Law, ValidationReport};

/// Equality of shared categories, short-circuiting on pointer identity.
pub fn same_category(a: &CatRef, b: &CatRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Debug, Clone)]
pub struct CatFunctor {
    name: String,
    source: CatRef,
    target: CatRef,
    object_map: Vec<usize>,
    morphism_map: Vec<usize>,
}

impl CatFunctor {
    pub fn new(
        name: impl Into<String>,
        source: CatRef,
        target: CatRef,
        object_map: Vec<usize>,
        morphism_map: Vec<usize>,
    ) -> Result<Self> {
        let name = name.into();
        if object_map.len() != source.object_count() || morphism_map.len() != source.morphism_count() {
            return Err(Error::structural(format!(
                "functor `{name}` does not map every object and morphism of `{}`",
                source.name()
            )));
        }
        if object_map.iter().any(|&x| x >= target.object_count())
            || morphism_map.iter().any(|&m| m >= target.morphism_count())
        {
            return Err(Error::structural(format!(
                "functor `{name}` maps into ids outside `{}`",
                target.name()
            )));
        }
        Ok(CatFunctor {
            name,
            source,
            target,
            object_map,
            morphism_map,
        })
    }

    /// Builds a functor from name pairs. Identities not listed are sent to the
    /// identity of the image object.
    pub fn from_names(
        name: impl Into<String>,
        source: CatRef,
        target: CatRef,
        objects: &[(&str, &str)],
        arrows: &[(&str, &str)],
    ) -> Result<Self> {
        let name = name.into();
        let mut object_map = vec![None; source.object_count()];
        for (x, y) in objects {
            object_map[source.require_object(x)?] = Some(target.require_object(y)?);
        }
        let object_map: Vec<usize> = object_map
            .into_iter()
            .enumerate()
            .map(|(i, o)| {
                o.ok_or_else(|| {
                    Error::structural(format!(
                        "functor `{name}` leaves object `{}` unmapped",
                        source.object_name(i)
                    ))
                })
            })
            .collect::<Result<_>>()?;
        let mut morphism_map = vec![None; source.morphism_count()];
        for x in 0..source.object_count() {
            morphism_map[source.identity(x)] = Some(target.identity(object_map[x]));
        }
        for (m, k) in arrows {
            morphism_map[source.require_morphism(m)?] = Some(target.require_morphism(k)?);
        }
        let morphism_map: Vec<usize> = morphism_map
            .into_iter()
            .enumerate()
            .map(|(i, o)| {
                o.ok_or_else(|| {
                    Error::structural(format!(
                        "functor `{name}` leaves arrow `{}` unmapped",
                        source.morphism_name(i)
                    ))
                })
            })
            .collect::<Result<_>>()?;
        CatFunctor::new(name, source, target, object_map, morphism_map)
    }

    pub fn identity(c: &CatRef) -> Self {
        CatFunctor {
            name: format!("id[{}]", c.name()),
            source: c.clone(),
            target: c.clone(),
            object_map: (0..c.object_count()).collect(),
            morphism_map: (0..c.morphism_count()).collect(),
        }
    }

    /// The functor collapsing `source` onto the object `x` of `target`.
    pub fn constant(source: &CatRef, target: &CatRef, x: usize) -> Self {
        CatFunctor {
            name: format!("const[{}]", target.object_name(x)),
            source: source.clone(),
            target: target.clone(),
            object_map: vec![x; source.object_count()],
            morphism_map: vec![target.identity(x); source.morphism_count()],
        }
    }

    /// The functor from the point picking out `x`.
    pub fn point_at(target: &CatRef, x: usize) -> Self {
        let point = Arc::new(FinCategory::point());
        let mut f = CatFunctor::constant(&point, target, x);
        f.name = target.object_name(x).to_string();
        f
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn source(&self) -> &CatRef {
        &self.source
    }

    pub fn target(&self) -> &CatRef {
        &self.target
    }

    pub fn object_map(&self) -> &[usize] {
        &self.object_map
    }

    pub fn morphism_map(&self) -> &[usize] {
        &self.morphism_map
    }

    pub fn obj(&self, x: usize) -> usize {
        self.object_map[x]
    }

    pub fn mor(&self, m: usize) -> usize {
        self.morphism_map[m]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &CatFunctor) -> Result<CatFunctor> {
        if !same_category(first.target(), self.source()) {
            return Err(Error::shape(format!(
                "cannot compose `{}` after `{}`: `{}` is not `{}`",
                self.name,
                first.name,
                first.target.name(),
                self.source.name()
            )));
        }
        Ok(CatFunctor {
            name: format!("{}.{}", self.name, first.name),
            source: first.source.clone(),
            target: self.target.clone(),
            object_map: first.object_map.iter().map(|&x| self.object_map[x]).collect(),
            morphism_map: first.morphism_map.iter().map(|&m| self.morphism_map[m]).collect(),
        })
    }

    /// Same categories and same maps; the name is ignored.
    pub fn agrees_with(&self, other: &CatFunctor) -> bool {
        same_category(&self.source, &other.source)
            && same_category(&self.target, &other.target)
            && self.object_map == other.object_map
            && self.morphism_map == other.morphism_map
    }

    /// Bijective on objects and on morphisms.
    pub fn is_isomorphism(&self) -> bool {
        is_bijection(&self.object_map, self.target.object_count())
            && is_bijection(&self.morphism_map, self.target.morphism_count())
    }

    pub fn is_injective_on_objects(&self) -> bool {
        let mut seen = vec![false; self.target.object_count()];
        self.object_map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    /// The same maps between the opposite categories.
    pub fn opposite(&self) -> CatFunctor {
        CatFunctor {
            name: format!("{}^op", self.name),
            source: Arc::new(opposite(&self.source)),
            target: Arc::new(opposite(&self.target)),
            object_map: self.object_map.clone(),
            morphism_map: self.morphism_map.clone(),
        }
    }
}

pub(crate) fn is_bijection(map: &[usize], codomain: usize) -> bool {
    if map.len() != codomain {
        return false;
    }
    let mut seen = vec![false; codomain];
    map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
}

/// Checks that a functor preserves endpoints, identities and composition.
pub fn validate_functor(functor: &CatFunctor) -> ValidationReport {
    let (src, tgt) = (functor.source(), functor.target());
    let mut report = ValidationReport::default();
    let sname = |m: usize| src.morphism_name(m).to_string();
    for m in 0..src.morphism_count() {
        let k = functor.mor(m);
        if tgt.source(k) != functor.obj(src.source(m)) || tgt.target(k) != functor.obj(src.target(m)) {
            report.push(
                Law::PreservesEndpoints,
                vec![sname(m), tgt.morphism_name(k).to_string()],
                format!(
                    "`{}` : `{}` -> `{}` is sent to `{}` : `{}` -> `{}`",
                    sname(m),
                    src.object_name(src.source(m)),
                    src.object_name(src.target(m)),
                    tgt.morphism_name(k),
                    tgt.object_name(tgt.source(k)),
                    tgt.object_name(tgt.target(k))
                ),
            );
        }
    }
    for x in 0..src.object_count() {
        let image = functor.mor(src.identity(x));
        if image != tgt.identity(functor.obj(x)) {
            report.push(
                Law::PreservesIdentity,
                vec![src.object_name(x).to_string()],
                format!(
                    "identity of `{}` is sent to `{}`",
                    src.object_name(x),
                    tgt.morphism_name(image)
                ),
            );
        }
    }
    for (g, f, h) in src.composition_entries() {
        if src.is_identity(g) || src.is_identity(f) {
            continue;
        }
        if tgt.compose(functor.mor(g), functor.mor(f)) != Some(functor.mor(h)) {
            report.push(
                Law::PreservesComposition,
                vec![sname(g), sname(f)],
                format!(
                    "image of `{}` . `{}` is not the composite of the images",
                    sname(g),
                    sname(f)
                ),
            );
        }
    }
    report
}

/// Validates a functor and reports the first failure as an error.
pub fn checked_functor(functor: CatFunctor) -> Result<CatFunctor> {
    let report = validate_functor(&functor);
    if report.is_empty() {
        Ok(functor)
    } else {
        Err(Error::Invalid {
            kind: "functor",
            name: functor.name().to_string(),
            details: report.to_string(),
        })
    }
}

/// Enumerates every functor `source → target` agreeing with the given
/// partial assignment.
///
/// Aborts with [`Error::CapExceeded`] once more than `cap` search nodes
/// have been visited.
pub fn enumerate_functors(
    name_prefix: &str,
    source: &CatRef,
    target: &CatRef,
    fixed_objects: &[Option<usize>],
    fixed_morphisms: &[Option<usize>],
    cap: u64,
) -> Result<Vec<CatFunctor>> {
    let n = source.object_count();
    let m = source.morphism_count();
    if fixed_objects.len() != n || fixed_morphisms.len() != m {
        return Err(Error::shape("partial assignment does not match the source category"));
    }
    let mut search = FunctorSearch {
        source,
        target,
        fixed_morphisms,
        cap,
        nodes: 0,
        found: Vec::new(),
    };
    let mut objects = vec![usize::MAX; n];
    search.objects(0, fixed_objects, &mut objects)?;
    Ok(search
        .found
        .into_iter()
        .enumerate()
        .map(|(i, (o, mm))| CatFunctor {
            name: format!("{name_prefix}{i}"),
            source: source.clone(),
            target: target.clone(),
            object_map: o,
            morphism_map: mm,
        })
        .collect())
}

struct FunctorSearch<'a> {
    source: &'a CatRef,
    target: &'a CatRef,
    fixed_morphisms: &'a [Option<usize>],
    cap: u64,
    nodes: u64,
    found: Vec<(Vec<usize>, Vec<usize>)>,
}

impl FunctorSearch<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::CapExceeded {
                estimate: self.nodes as f64,
                cap: self.cap,
            });
        }
        Ok(())
    }

    fn objects(&mut self, i: usize, fixed: &[Option<usize>], objects: &mut Vec<usize>) -> Result<()> {
        if i == objects.len() {
            return self.morphisms(objects);
        }
        let candidates: Vec<usize> = match fixed[i] {
            Some(y) => vec![y],
            None => (0..self.target.object_count()).collect(),
        };
        'next: for y in candidates {
            self.tick()?;
            objects[i] = y;
            // Every morphism between assigned objects needs a candidate image.
            for &mor in self.source.outgoing(i).iter().chain(self.source.incoming(i)) {
                let (s, t) = (self.source.source(mor), self.source.target(mor));
                if s > i || t > i {
                    continue;
                }
                let hom = self.target.hom(objects[s], objects[t]);
                let ok = match self.fixed_morphisms[mor] {
                    Some(k) => hom.contains(&k),
                    None => !hom.is_empty(),
                };
                if !ok {
                    continue 'next;
                }
            }
            self.objects(i + 1, fixed, objects)?;
        }
        objects[i] = usize::MAX;
        Ok(())
    }

    fn morphisms(&mut self, objects: &[usize]) -> Result<()> {
        let src = self.source;
        let m = src.morphism_count();
        let mut order: Vec<usize> = (0..m).filter(|&k| !src.is_identity(k)).collect();
        order.sort_by_key(|&k| (self.fixed_morphisms[k].is_none(), k));
        let mut rank = vec![0usize; m];
        for (r, &k) in order.iter().enumerate() {
            rank[k] = r + 1;
        }
        // Composition entries become checkable once their last member is set.
        let mut checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); order.len() + 1];
        for (g, f, h) in src.composition_entries() {
            let last = rank[g].max(rank[f]).max(rank[h]);
            checks[last].push((g, f, h));
        }
        let mut map: Vec<usize> = vec![usize::MAX; m];
        for x in 0..src.object_count() {
            map[src.identity(x)] = self.target.identity(objects[x]);
        }
        for &(g, f, h) in &checks[0] {
            if self.target.compose(map[g], map[f]) != Some(map[h]) {
                return Ok(());
            }
        }
        self.assign(0, &order, &checks, objects, &mut map)
    }

    fn assign(
        &mut self,
        r: usize,
        order: &[usize],
        checks: &[Vec<(usize, usize, usize)>],
        objects: &[usize],
        map: &mut Vec<usize>,
    ) -> Result<()> {
        if r == order.len() {
            self.found.push((objects.to_vec(), map.clone()));
            return Ok(());
        }
        let k = order[r];
        let hom = self
            .target
            .hom(objects[self.source.source(k)], objects[self.source.target(k)])
            .to_vec();
        for candidate in hom {
            if let Some(fixed) = self.fixed_morphisms[k] {
                if fixed != candidate {
                    continue;
                }
            }
            self.tick()?;
            map[k] = candidate;
            let ok = checks[r + 1]
                .iter()
                .all(|&(g, f, h)| self.target.compose(map[g], map[f]) == Some(map[h]));
            if ok {
                self.assign(r + 1, order, checks, objects, map)?;
            }
        }
        map[k] = usize::MAX;
        Ok(())
    }
}

/// A natural transformation between functors of finite categories.
#[derive(Debug, Clone)]
pub struct CatNatTrans {
    source: CatFunctor,
    target: CatFunctor,
    components: Vec<usize>,
}

impl CatNatTrans {
    pub fn new(source: CatFunctor, target: CatFunctor, components: Vec<usize>) -> Result<Self> {
        if !same_category(source.source(), target.source()) || !same_category(source.target(), target.target()) {
            return Err(Error::shape(format!(
                "`{}` and `{}` are not parallel",
                source.name(),
                target.name()
            )));
        }
        if components.len() != source.source().object_count()
            || components.iter().any(|&c| c >= source.target().morphism_count())
        {
            return Err(Error::structural("natural transformation components do not resolve"));
        }
        Ok(CatNatTrans {
            source,
            target,
            components,
        })
    }

    pub fn identity(functor: &CatFunctor) -> Self {
        let t = functor.target();
        CatNatTrans {
            source: functor.clone(),
            target: functor.clone(),
            components: functor.object_map().iter().map(|&y| t.identity(y)).collect(),
        }
    }

    pub fn source(&self) -> &CatFunctor {
        &self.source
    }

    pub fn target(&self) -> &CatFunctor {
        &self.target
    }

    pub fn components(&self) -> &[usize] {
        &self.components
    }

    pub fn component(&self, x: usize) -> usize {
        self.components[x]
    }

    /// `α k`: precompose with `k`.
    pub fn whisker_right(&self, k: &CatFunctor) -> Result<CatNatTrans> {
        Ok(CatNatTrans {
            source: self.source.after(k)?,
            target: self.target.after(k)?,
            components: k.object_map().iter().map(|&x| self.components[x]).collect(),
        })
    }

    /// `h α`: postcompose with `h`.
    pub fn whisker_left(&self, h: &CatFunctor) -> Result<CatNatTrans> {
        Ok(CatNatTrans {
            source: h.after(&self.source)?,
            target: h.after(&self.target)?,
            components: self.components.iter().map(|&c| h.mor(c)).collect(),
        })
    }

    /// Pointwise `after ∘ self`.
    pub fn then(&self, after: &CatNatTrans) -> Result<CatNatTrans> {
        if !self.target.agrees_with(&after.source) {
            return Err(Error::shape("natural transformations are not composable"));
        }
        let d = self.source.target();
        let components = self
            .components
            .iter()
            .zip(&after.components)
            .map(|(&a, &b)| d.comp(b, a))
            .collect();
        Ok(CatNatTrans {
            source: self.source.clone(),
            target: after.target.clone(),
            components,
        })
    }

    pub fn is_identity(&self) -> bool {
        let d = self.source.target();
        self.components.iter().all(|&c| d.is_identity(c))
    }
}

/// Checks component endpoints and naturality squares.
pub fn validate_cat_nat_trans(alpha: &CatNatTrans) -> ValidationReport {
    let (f, g) = (alpha.source(), alpha.target());
    let (a, d) = (f.source(), f.target());
    let mut report = ValidationReport::default();
    for x in 0..a.object_count() {
        let c = alpha.component(x);
        if d.source(c) != f.obj(x) || d.target(c) != g.obj(x) {
            report.push(
                Law::ComponentEndpoints,
                vec![a.object_name(x).to_string(), d.morphism_name(c).to_string()],
                format!(
                    "component `{}` at `{}` does not go from `{}` to `{}`",
                    d.morphism_name(c),
                    a.object_name(x),
                    d.object_name(f.obj(x)),
                    d.object_name(g.obj(x))
                ),
            );
        }
    }
    if !report.is_empty() {
        return report;
    }
    for m in 0..a.morphism_count() {
        let (x, y) = (a.source(m), a.target(m));
        let lhs = d.compose(alpha.component(y), f.mor(m));
        let rhs = d.compose(g.mor(m), alpha.component(x));
        if lhs.is_none() || lhs != rhs {
            report.push(
                Law::Naturality,
                vec![a.morphism_name(m).to_string()],
                format!("naturality square at `{}` does not commute", a.morphism_name(m)),
            );
        }
    }
    report
}

/// Every natural transformation `source ⇒ target`, in lexicographic order of
/// component tuples, stopping after `limit` results.
pub fn enumerate_cat_nat_trans(source: &CatFunctor, target: &CatFunctor, limit: usize) -> Vec<CatNatTrans> {
    let a = source.source().clone();
    let d = source.target().clone();
    let n = a.object_count();
    let mut out = Vec::new();
    let mut comps = vec![usize::MAX; n];

    fn go(
        i: usize,
        a: &FinCategory,
        d: &FinCategory,
        source: &CatFunctor,
        target: &CatFunctor,
        comps: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if i == comps.len() {
            out.push(comps.clone());
            return;
        }
        for &c in d.hom(source.obj(i), target.obj(i)) {
            comps[i] = c;
            let ok = a.outgoing(i).iter().chain(a.incoming(i)).all(|&m| {
                let (x, y) = (a.source(m), a.target(m));
                if x > i || y > i {
                    return true;
                }
                d.compose(comps[y], source.mor(m)) == d.compose(target.mor(m), comps[x])
            });
            if ok {
                go(i + 1, a, d, source, target, comps, out, limit);
            }
        }
        comps[i] = usize::MAX;
    }

    if !same_category(source.source(), target.source()) || !same_category(source.target(), target.target()) {
        return Vec::new();
    }
    let mut raw = Vec::new();
    go(0, &a, &d, source, target, &mut comps, &mut raw, limit);
    out.extend(raw.into_iter().map(|components| CatNatTrans {
        source: source.clone(),
        target: target.clone(),
        components,
    }));
    out
}

/// The full subcategory on `objects` (kept in the given order) with its
/// inclusion. Morphism names are kept.
pub fn full_subcategory(name: impl Into<String>, c: &CatRef, objects: &[usize]) -> (CatRef, CatFunctor) {
    let name = name.into();
    let mut local = vec![usize::MAX; c.object_count()];
    for (i, &x) in objects.iter().enumerate() {
        local[x] = i;
    }
    let mut builder = CategoryBuilder::new(name.clone(), objects.iter().map(|&x| c.object_name(x).to_string()));
    let mut mor_local = vec![usize::MAX; c.morphism_count()];
    let mut under: Vec<usize> = objects.iter().map(|&x| c.identity(x)).collect();
    for (i, &x) in objects.iter().enumerate() {
        mor_local[c.identity(x)] = i;
    }
    for m in 0..c.morphism_count() {
        let (x, y) = (c.source(m), c.target(m));
        if c.is_identity(m) || local[x] == usize::MAX || local[y] == usize::MAX {
            continue;
        }
        mor_local[m] = builder.arrow(c.morphism_name(m), local[x], local[y]);
        under.push(m);
    }
    for (g, f, h) in c.composition_entries() {
        if c.is_identity(g) || c.is_identity(f) {
            continue;
        }
        if mor_local[g] != usize::MAX && mor_local[f] != usize::MAX {
            builder.compose(mor_local[g], mor_local[f], mor_local[h]);
        }
    }
    let sub = Arc::new(builder.build().expect("full subcategories are well formed"));
    let inclusion = CatFunctor {
        name: format!("incl[{name}]"),
        source: sub.clone(),
        target: c.clone(),
        object_map: objects.to_vec(),
        morphism_map: under,
    };
    (sub, inclusion)
}

/// Tagged disjoint union with its two inclusions.
///
/// Objects are `inl(b)` then `inr(c)`; non-identity morphisms are `inl(m)`
/// then `inr(m)`.
pub fn disjoint_union(b: &CatRef, c: &CatRef) -> (CatRef, CatFunctor, CatFunctor) {
    let (builder, inl, inr) = disjoint_union_builder(format!("{}+{}", b.name(), c.name()), b, c);
    let sum = Arc::new(builder.build().expect("disjoint union is well formed"));
    let left = CatFunctor::new("inl", b.clone(), sum.clone(), (0..b.object_count()).collect(), inl)
        .expect("inclusion resolves");
    let right = CatFunctor::new(
        "inr",
        c.clone(),
        sum.clone(),
        (b.object_count()..b.object_count() + c.object_count()).collect(),
        inr,
    )
    .expect("inclusion resolves");
    (sum, left, right)
}

/// Builder holding `b ⊔ c` plus the morphism maps of the two inclusions.
pub(crate) fn disjoint_union_builder(
    name: String,
    b: &FinCategory,
    c: &FinCategory,
) -> (CategoryBuilder, Vec<usize>, Vec<usize>) {
    let objects = b
        .objects()
        .iter()
        .map(|o| format!("inl({o})"))
        .chain(c.objects().iter().map(|o| format!("inr({o})")));
    let mut builder = CategoryBuilder::new(name, objects);
    let nb = b.object_count();
    let mut inl = vec![0; b.morphism_count()];
    let mut inr = vec![0; c.morphism_count()];
    for m in 0..b.morphism_count() {
        inl[m] = if b.is_identity(m) {
            b.source(m)
        } else {
            builder.arrow(format!("inl({})", b.morphism_name(m)), b.source(m), b.target(m))
        };
    }
    for m in 0..c.morphism_count() {
        inr[m] = if c.is_identity(m) {
            nb + c.source(m)
        } else {
            builder.arrow(
                format!("inr({})", c.morphism_name(m)),
                nb + c.source(m),
                nb + c.target(m),
            )
        };
    }
    for (g, f, h) in b.composition_entries() {
        if !b.is_identity(g) && !b.is_identity(f) {
            builder.compose(inl[g], inl[f], inl[h]);
        }
    }
    for (g, f, h) in c.composition_entries() {
        if !c.is_identity(g) && !c.is_identity(f) {
            builder.compose(inr[g], inr[f], inr[h]);
        }
    }
    (builder, inl, inr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::validate_category;

    fn two() -> CatRef {
        let mut b = CategoryBuilder::new("2", ["0", "1"]);
        b.arrow("u", 0, 1);
        Arc::new(b.build().unwrap())
    }

    #[test]
    fn identity_and_constant_functors_are_valid() {
        let t = two();
        assert!(validate_functor(&CatFunctor::identity(&t)).is_empty());
        let point = Arc::new(FinCategory::point());
        assert!(validate_functor(&CatFunctor::constant(&t, &point, 0)).is_empty());
    }

    #[test]
    fn endpoint_violation_is_reported() {
        let t = two();
        let f =
            CatFunctor::from_names("bad", t.clone(), t.clone(), &[("0", "0"), ("1", "1")], &[("u", "id_0")]).unwrap();
        let report = validate_functor(&f);
        assert_eq!(report.count(Law::PreservesEndpoints), 1, "{report}");
    }

    #[test]
    fn composition_is_associative_on_the_nose() {
        let t = two();
        let id = CatFunctor::identity(&t);
        let swap_ends = CatFunctor::constant(&t, &t, 1);
        let a = swap_ends.after(&id).unwrap().after(&id).unwrap();
        let b = swap_ends.after(&id.after(&id).unwrap()).unwrap();
        assert!(a.agrees_with(&b));
        assert!(validate_functor(&a).is_empty());
    }

    #[test]
    fn disjoint_unions() {
        let point = Arc::new(FinCategory::point());
        let (s, l, r) = disjoint_union(&point, &point);
        assert_eq!((s.object_count(), s.morphism_count()), (2, 2));
        assert!(validate_functor(&l).is_empty() && validate_functor(&r).is_empty());

        let t = two();
        let (s, _, _) = disjoint_union(&t, &t);
        assert_eq!((s.object_count(), s.morphism_count()), (4, 6));
        assert!(validate_category(&s).is_empty());

        let empty = Arc::new(FinCategory::empty());
        let (s, _, r) = disjoint_union(&empty, &t);
        assert_eq!((s.object_count(), s.morphism_count()), (2, 3));
        assert!(r.is_isomorphism());
    }

    #[test]
    fn functor_enumeration_into_the_interval() {
        let t = two();
        let all = enumerate_functors("h", &t, &t, &[None, None], &[None; 3], 1000).unwrap();
        // monotone maps {0,1} -> {0,1}: 00, 01, 11
        assert_eq!(all.len(), 3);
        assert!(all.iter().all(|f| validate_functor(f).is_empty()));
        let err = enumerate_functors("h", &t, &t, &[None, None], &[None; 3], 2).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn nat_trans_between_constants() {
        let t = two();
        let c0 = CatFunctor::constant(&t, &t, 0);
        let c1 = CatFunctor::constant(&t, &t, 1);
        let found = enumerate_cat_nat_trans(&c0, &c1, 10);
        assert_eq!(found.len(), 1);
        assert!(validate_cat_nat_trans(&found[0]).is_empty());
        assert!(enumerate_cat_nat_trans(&c1, &c0, 10).is_empty());
    }
}

//! Finite-set-valued functors and natural transformations between them.

use std::collections::HashSet;

use crate::category::{CatRef, FinCategory};
use crate::error::{Error, Result};
use crate::functor::{is_bijection, same_category};
use crate::report::{Law, ValidationReport};

/// A functor from a finite category to finite sets.
///
/// Elements are labelled; `maps[m][i]` is the index in the target set of the
/// image of element `i` of the source set. Identities carry explicit maps.
#[derive(Debug, Clone, PartialEq)]
pub struct SetFunctor {
    name: String,
    shape: CatRef,
    sets: Vec<Vec<String>>,
    maps: Vec<Vec<usize>>,
}

pub(crate) fn check_label(label: &str) -> Result<()> {
    let mut depth = 0i32;
    for ch in label.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            break;
        }
    }
    if label.is_empty()
        || depth != 0
        || label.contains("->")
        || label.chars().any(|c| c.is_whitespace() || matches!(c, '#' | '{' | '}'))
    {
        return Err(Error::structural(format!("bad element label `{label}`")));
    }
    Ok(())
}

impl SetFunctor {
    pub fn new(name: impl Into<String>, shape: CatRef, sets: Vec<Vec<String>>, maps: Vec<Vec<usize>>) -> Result<Self> {
        let name = name.into();
        if sets.len() != shape.object_count() || maps.len() != shape.morphism_count() {
            return Err(Error::structural(format!(
                "set functor `{name}` does not cover `{}`",
                shape.name()
            )));
        }
        for set in &sets {
            let mut seen = HashSet::new();
            for label in set {
                check_label(label)?;
                if !seen.insert(label.as_str()) {
                    return Err(Error::structural(format!("duplicate element `{label}` in `{name}`")));
                }
            }
        }
        for (m, map) in maps.iter().enumerate() {
            let (x, y) = (shape.source(m), shape.target(m));
            if map.len() != sets[x].len() || map.iter().any(|&e| e >= sets[y].len()) {
                return Err(Error::structural(format!(
                    "map of `{}` in `{name}` is not a function between the assigned sets",
                    shape.morphism_name(m)
                )));
            }
        }
        Ok(SetFunctor {
            name,
            shape,
            sets,
            maps,
        })
    }

    /// Extends generator maps to every morphism by closing under composition.
    pub fn from_generators(
        name: impl Into<String>,
        shape: CatRef,
        sets: Vec<Vec<String>>,
        generators: &[(usize, Vec<usize>)],
    ) -> Result<Self> {
        let name = name.into();
        let mut maps: Vec<Option<Vec<usize>>> = vec![None; shape.morphism_count()];
        for x in 0..shape.object_count() {
            maps[shape.identity(x)] = Some((0..sets.get(x).map_or(0, Vec::len)).collect());
        }
        for (m, map) in generators {
            maps[*m] = Some(map.clone());
        }
        let entries = shape.composition_entries();
        let mut changed = true;
        while changed {
            changed = false;
            for &(g, f, h) in &entries {
                let (Some(mg), Some(mf)) = (&maps[g], &maps[f]) else {
                    continue;
                };
                if mf.iter().any(|&e| e >= mg.len()) {
                    return Err(Error::structural(format!("generator maps of `{name}` do not compose")));
                }
                let composite: Vec<usize> = mf.iter().map(|&e| mg[e]).collect();
                match &maps[h] {
                    Some(existing) if *existing != composite => {
                        return Err(Error::Invalid {
                            kind: "set functor",
                            name,
                            details: format!("generators disagree on `{}`", shape.morphism_name(h)),
                        })
                    }
                    Some(_) => {}
                    None => {
                        maps[h] = Some(composite);
                        changed = true;
                    }
                }
            }
        }
        let maps = maps
            .into_iter()
            .enumerate()
            .map(|(m, map)| {
                map.ok_or_else(|| {
                    Error::structural(format!("`{}` is not generated in `{name}`", shape.morphism_name(m)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SetFunctor::new(name, shape, sets, maps)
    }

    /// The functor with the same set everywhere and identity maps.
    pub fn constant(name: impl Into<String>, shape: CatRef, labels: Vec<String>) -> Result<Self> {
        let sets = vec![labels.clone(); shape.object_count()];
        let maps = vec![(0..labels.len()).collect(); shape.morphism_count()];
        SetFunctor::new(name, shape, sets, maps)
    }

    /// `hom(d, -)`, with elements labelled by morphism names.
    pub fn corepresentable(shape: CatRef, d: usize) -> Self {
        let c: &FinCategory = &shape;
        let sets: Vec<Vec<usize>> = (0..c.object_count()).map(|e| c.hom(d, e).to_vec()).collect();
        let maps = (0..c.morphism_count())
            .map(|m| {
                let y = c.target(m);
                sets[c.source(m)]
                    .iter()
                    .map(|&k| {
                        let mk = c.comp(m, k);
                        sets[y]
                            .iter()
                            .position(|&z| z == mk)
                            .expect("composite lies in the hom-set")
                    })
                    .collect()
            })
            .collect();
        let labels = sets
            .iter()
            .map(|s| s.iter().map(|&k| c.morphism_name(k).to_string()).collect())
            .collect();
        SetFunctor {
            name: format!("hom({},-)", c.object_name(d)),
            shape,
            sets: labels,
            maps,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn shape(&self) -> &CatRef {
        &self.shape
    }

    pub fn sets(&self) -> &[Vec<String>] {
        &self.sets
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn set(&self, x: usize) -> &[String] {
        &self.sets[x]
    }

    pub fn size(&self, x: usize) -> usize {
        self.sets[x].len()
    }

    pub fn map(&self, m: usize) -> &[usize] {
        &self.maps[m]
    }

    pub fn apply(&self, m: usize, e: usize) -> usize {
        self.maps[m][e]
    }

    /// Equality of shape, sets and maps, ignoring the name.
    pub fn same_data(&self, other: &SetFunctor) -> bool {
        same_category(&self.shape, &other.shape) && self.sets == other.sets && self.maps == other.maps
    }

    pub fn total_size(&self) -> usize {
        self.sets.iter().map(Vec::len).sum()
    }
}

/// Checks identity and composition preservation.
pub fn validate_set_functor(functor: &SetFunctor) -> ValidationReport {
    let c = functor.shape();
    let mut report = ValidationReport::default();
    for x in 0..c.object_count() {
        let id = functor.map(c.identity(x));
        if id.iter().enumerate().any(|(i, &j)| i != j) {
            report.push(
                Law::PreservesIdentity,
                vec![c.object_name(x).to_string()],
                format!("identity of `{}` is not sent to an identity function", c.object_name(x)),
            );
        }
    }
    for (g, f, h) in c.composition_entries() {
        let composite: Vec<usize> = functor.map(f).iter().map(|&e| functor.apply(g, e)).collect();
        if composite != functor.map(h) {
            report.push(
                Law::PreservesComposition,
                vec![c.morphism_name(g).to_string(), c.morphism_name(f).to_string()],
                format!(
                    "map of `{}` differs from the composite of `{}` and `{}`",
                    c.morphism_name(h),
                    c.morphism_name(g),
                    c.morphism_name(f)
                ),
            );
        }
    }
    report
}

/// A natural transformation between set functors on the same shape.
#[derive(Debug, Clone, PartialEq)]
pub struct SetNatTrans {
    source: SetFunctor,
    target: SetFunctor,
    components: Vec<Vec<usize>>,
}

impl SetNatTrans {
    pub fn new(source: SetFunctor, target: SetFunctor, components: Vec<Vec<usize>>) -> Result<Self> {
        if !same_category(source.shape(), target.shape()) {
            return Err(Error::shape(format!(
                "`{}` and `{}` have different shapes",
                source.name(),
                target.name()
            )));
        }
        if components.len() != source.shape().object_count() {
            return Err(Error::structural("natural transformation misses components"));
        }
        for (x, comp) in components.iter().enumerate() {
            if comp.len() != source.size(x) || comp.iter().any(|&e| e >= target.size(x)) {
                return Err(Error::structural(format!(
                    "component at `{}` is not a function",
                    source.shape().object_name(x)
                )));
            }
        }
        Ok(SetNatTrans {
            source,
            target,
            components,
        })
    }

    pub fn identity(functor: &SetFunctor) -> Self {
        SetNatTrans {
            source: functor.clone(),
            target: functor.clone(),
            components: functor.sets().iter().map(|s| (0..s.len()).collect()).collect(),
        }
    }

    pub fn source(&self) -> &SetFunctor {
        &self.source
    }

    pub fn target(&self) -> &SetFunctor {
        &self.target
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component(&self, x: usize) -> &[usize] {
        &self.components[x]
    }

    /// Vertical composite `after ∘ self`. The middle functors must agree
    /// elementwise.
    pub fn then(&self, after: &SetNatTrans) -> Result<SetNatTrans> {
        if !self.target.same_data(&after.source) {
            return Err(Error::shape(format!(
                "cannot compose: `{}` differs from `{}`",
                self.target.name(),
                after.source.name()
            )));
        }
        let components = self
            .components
            .iter()
            .zip(&after.components)
            .map(|(a, b)| a.iter().map(|&e| b[e]).collect())
            .collect();
        Ok(SetNatTrans {
            source: self.source.clone(),
            target: after.target.clone(),
            components,
        })
    }

    /// Equality of endpoints and components, ignoring names.
    pub fn same_data(&self, other: &SetNatTrans) -> bool {
        self.source.same_data(&other.source)
            && self.target.same_data(&other.target)
            && self.components == other.components
    }

    /// The first object whose component is not a bijection.
    pub fn first_non_bijective(&self) -> Option<usize> {
        (0..self.components.len()).find(|&x| !is_bijection(&self.components[x], self.target.size(x)))
    }
}

/// Checks every naturality square elementwise.
pub fn validate_set_nat_trans(eta: &SetNatTrans) -> ValidationReport {
    let (f, g) = (eta.source(), eta.target());
    let c = f.shape();
    let mut report = ValidationReport::default();
    for m in 0..c.morphism_count() {
        let (x, y) = (c.source(m), c.target(m));
        let bad = (0..f.size(x)).find(|&e| eta.component(y)[f.apply(m, e)] != g.apply(m, eta.component(x)[e]));
        if let Some(e) = bad {
            report.push(
                Law::Naturality,
                vec![c.morphism_name(m).to_string(), f.set(x)[e].clone()],
                format!("square at `{}` fails on element `{}`", c.morphism_name(m), f.set(x)[e]),
            );
        }
    }
    report
}

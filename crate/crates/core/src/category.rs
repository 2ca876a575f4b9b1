//! Finite categories with explicit composition tables.
//!
//! Objects and morphisms are interned strings mapped to dense indices. Every
//! object carries an explicit identity morphism named `id_<object>`; the
//! builders and parsers synthesize these, and identities always occupy the
//! first morphism indices, in object order.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::report::{Law, ValidationReport};

/// Shared handle to an immutable category.
pub type CatRef = Arc<FinCategory>;

const UNDEFINED: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite category given extensionally.
///
/// Composition is stored per object `x` as a table indexed by
/// (outgoing morphism of `x`, incoming morphism of `x`), so only composable
/// pairs have a slot. A slot may be undefined; [`validate_category`] reports
/// that as a law violation.
#[derive(Debug, Clone)]
pub struct FinCategory {
    name: String,
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    incoming: Vec<Vec<usize>>,
    outgoing: Vec<Vec<usize>>,
    in_pos: Vec<usize>,
    out_pos: Vec<usize>,
    table: Vec<Vec<u32>>,
    homs: HashMap<(usize, usize), Vec<usize>>,
    object_index: HashMap<String, usize>,
    morphism_index: HashMap<String, usize>,
}

impl PartialEq for FinCategory {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identities == other.identities
            && self.table == other.table
    }
}

impl Eq for FinCategory {}

pub(crate) fn check_id(name: &str, what: &str) -> Result<()> {
    if name.is_empty()
        || name
            .chars()
            .any(|c| c.is_whitespace() || c == '#' || c == '{' || c == '}')
    {
        return Err(Error::structural(format!(
            "{what} id `{name}` must be non-empty and free of whitespace, `#`, `{{` and `}}`"
        )));
    }
    Ok(())
}

/// Name of the identity morphism at `object`.
pub fn identity_name(object: &str) -> String {
    format!("id_{object}")
}

impl FinCategory {
    /// Assembles a category from raw parts, checking only that every id
    /// resolves and that composition entries sit on composable pairs.
    ///
    /// `compose` lists `(second, first, composite)` triples.
    pub fn from_parts(
        name: impl Into<String>,
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self> {
        let name = name.into();
        let n = objects.len();
        let m = morphisms.len();

        let mut object_index = HashMap::with_capacity(n);
        for (i, o) in objects.iter().enumerate() {
            check_id(o, "object")?;
            if object_index.insert(o.clone(), i).is_some() {
                return Err(Error::structural(format!("duplicate object `{o}` in `{name}`")));
            }
        }
        let mut morphism_index = HashMap::with_capacity(m);
        for (i, mor) in morphisms.iter().enumerate() {
            check_id(&mor.name, "morphism")?;
            if mor.source >= n || mor.target >= n {
                return Err(Error::structural(format!(
                    "morphism `{}` in `{name}` has an unresolved endpoint",
                    mor.name
                )));
            }
            if morphism_index.insert(mor.name.clone(), i).is_some() {
                return Err(Error::structural(format!(
                    "duplicate morphism `{}` in `{name}`",
                    mor.name
                )));
            }
        }
        if identities.len() != n {
            return Err(Error::structural(format!(
                "`{name}` lists {} identities for {n} objects",
                identities.len()
            )));
        }
        if let Some(&bad) = identities.iter().find(|&&i| i >= m) {
            return Err(Error::structural(format!(
                "identity index {bad} out of range in `{name}`"
            )));
        }

        let mut incoming = vec![Vec::new(); n];
        let mut outgoing = vec![Vec::new(); n];
        let mut in_pos = vec![0; m];
        let mut out_pos = vec![0; m];
        let mut homs: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, mor) in morphisms.iter().enumerate() {
            in_pos[i] = incoming[mor.target].len();
            incoming[mor.target].push(i);
            out_pos[i] = outgoing[mor.source].len();
            outgoing[mor.source].push(i);
            homs.entry((mor.source, mor.target)).or_default().push(i);
        }
        let mut table: Vec<Vec<u32>> = (0..n)
            .map(|x| vec![UNDEFINED; incoming[x].len() * outgoing[x].len()])
            .collect();

        for (g, f, h) in compose {
            if g >= m || f >= m || h >= m {
                return Err(Error::structural(format!(
                    "composition entry ({g}, {f}, {h}) out of range in `{name}`"
                )));
            }
            let x = morphisms[f].target;
            if morphisms[g].source != x {
                return Err(Error::structural(format!(
                    "`{}` . `{}` is not composable in `{name}`",
                    morphisms[g].name, morphisms[f].name
                )));
            }
            let slot = &mut table[x][out_pos[g] * incoming[x].len() + in_pos[f]];
            if *slot != UNDEFINED && *slot as usize != h {
                return Err(Error::structural(format!(
                    "conflicting composites for `{}` . `{}` in `{name}`",
                    morphisms[g].name, morphisms[f].name
                )));
            }
            *slot = h as u32;
        }

        Ok(FinCategory {
            name,
            objects,
            morphisms,
            identities,
            incoming,
            outgoing,
            in_pos,
            out_pos,
            table,
            homs,
            object_index,
            morphism_index,
        })
    }

    /// The terminal category with one object `*`.
    pub fn point() -> Self {
        CategoryBuilder::new("1", ["*"]).build().expect("point is well formed")
    }

    /// The category with no objects.
    pub fn empty() -> Self {
        CategoryBuilder::new("0", Vec::<String>::new())
            .build()
            .expect("empty category is well formed")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        let mut c = self.clone();
        c.name = name.into();
        c
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn object_name(&self, x: usize) -> &str {
        &self.objects[x]
    }

    pub fn morphism_name(&self, m: usize) -> &str {
        &self.morphisms[m].name
    }

    pub fn object_id(&self, name: &str) -> Option<usize> {
        self.object_index.get(name).copied()
    }

    pub fn morphism_id(&self, name: &str) -> Option<usize> {
        self.morphism_index.get(name).copied()
    }

    pub fn require_object(&self, name: &str) -> Result<usize> {
        self.object_id(name).ok_or_else(|| Error::UnknownObject {
            name: name.to_string(),
            context: self.name.clone(),
        })
    }

    pub fn require_morphism(&self, name: &str) -> Result<usize> {
        self.morphism_id(name).ok_or_else(|| Error::UnknownMorphism {
            name: name.to_string(),
            context: self.name.clone(),
        })
    }

    pub fn source(&self, m: usize) -> usize {
        self.morphisms[m].source
    }

    pub fn target(&self, m: usize) -> usize {
        self.morphisms[m].target
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn is_identity(&self, m: usize) -> bool {
        self.identities[self.morphisms[m].source] == m
    }

    /// Morphisms into `x`, in index order.
    pub fn incoming(&self, x: usize) -> &[usize] {
        &self.incoming[x]
    }

    /// Morphisms out of `x`, in index order.
    pub fn outgoing(&self, x: usize) -> &[usize] {
        &self.outgoing[x]
    }

    pub fn hom(&self, x: usize, y: usize) -> &[usize] {
        self.homs.get(&(x, y)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `g ∘ f`, or `None` when the pair is not composable or the table has
    /// no entry for it.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        let x = self.morphisms[f].target;
        if self.morphisms[g].source != x {
            return None;
        }
        let v = self.table[x][self.out_pos[g] * self.incoming[x].len() + self.in_pos[f]];
        (v != UNDEFINED).then_some(v as usize)
    }

    /// `g ∘ f` in a valid category.
    ///
    /// Panics if the pair is not composable.
    pub fn comp(&self, g: usize, f: usize) -> usize {
        self.compose(g, f).unwrap_or_else(|| {
            panic!(
                "`{}` . `{}` undefined in `{}`",
                self.morphisms[g].name, self.morphisms[f].name, self.name
            )
        })
    }

    /// All defined `(second, first, composite)` entries in a stable order.
    pub fn composition_entries(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.objects.len() {
            for &g in &self.outgoing[x] {
                for &f in &self.incoming[x] {
                    if let Some(h) = self.compose(g, f) {
                        out.push((g, f, h));
                    }
                }
            }
        }
        out
    }

    /// Non-identity morphisms that are not a composite of two non-identity
    /// morphisms. In a finite category with no non-trivial endomorphism
    /// loops these generate everything.
    pub fn irreducible_morphisms(&self) -> Vec<usize> {
        let mut reducible = vec![false; self.morphisms.len()];
        for (g, f, h) in self.composition_entries() {
            if !self.is_identity(g) && !self.is_identity(f) {
                reducible[h] = true;
            }
        }
        (0..self.morphisms.len())
            .filter(|&m| !self.is_identity(m) && !reducible[m])
            .collect()
    }

    /// Same category with a different name, sharing nothing.
    pub fn structurally_equal(&self, other: &FinCategory) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identities == other.identities
            && self.table == other.table
    }
}

/// Incremental construction of a category whose objects are known up front.
///
/// Morphism indices returned by [`CategoryBuilder::arrow`] are final: the
/// identities occupy `0..objects.len()` and arrows follow in insertion order.
#[derive(Debug, Clone)]
pub struct CategoryBuilder {
    name: String,
    objects: Vec<String>,
    arrows: Vec<Morphism>,
    compose: Vec<(usize, usize, usize)>,
    fill_identity_laws: bool,
}

impl CategoryBuilder {
    pub fn new<S: Into<String>>(name: impl Into<String>, objects: impl IntoIterator<Item = S>) -> Self {
        CategoryBuilder {
            name: name.into(),
            objects: objects.into_iter().map(Into::into).collect(),
            arrows: Vec::new(),
            compose: Vec::new(),
            fill_identity_laws: true,
        }
    }

    /// Like [`CategoryBuilder::new`], but composites with identities are not
    /// synthesized; every table entry must be given explicitly.
    pub fn raw<S: Into<String>>(name: impl Into<String>, objects: impl IntoIterator<Item = S>) -> Self {
        CategoryBuilder {
            fill_identity_laws: false,
            ..Self::new(name, objects)
        }
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn identity(&self, x: usize) -> usize {
        x
    }

    pub fn arrow(&mut self, name: impl Into<String>, source: usize, target: usize) -> usize {
        self.arrows.push(Morphism {
            name: name.into(),
            source,
            target,
        });
        self.objects.len() + self.arrows.len() - 1
    }

    /// Records `second ∘ first = composite`.
    pub fn compose(&mut self, second: usize, first: usize, composite: usize) -> &mut Self {
        self.compose.push((second, first, composite));
        self
    }

    pub fn build(self) -> Result<FinCategory> {
        let n = self.objects.len();
        let mut morphisms: Vec<Morphism> = self
            .objects
            .iter()
            .enumerate()
            .map(|(i, o)| Morphism {
                name: identity_name(o),
                source: i,
                target: i,
            })
            .collect();
        morphisms.extend(self.arrows);
        let mut compose = self.compose;
        if self.fill_identity_laws {
            let given: HashSet<(usize, usize)> = compose.iter().map(|&(g, f, _)| (g, f)).collect();
            for (i, mor) in morphisms.iter().enumerate() {
                if mor.source >= n || mor.target >= n {
                    continue;
                }
                if !given.contains(&(mor.target, i)) {
                    compose.push((mor.target, i, i));
                }
                if i >= n && !given.contains(&(i, mor.source)) {
                    compose.push((i, mor.source, i));
                }
            }
        }
        FinCategory::from_parts(self.name, self.objects, morphisms, (0..n).collect(), compose)
    }
}

/// Checks identity, totality and associativity laws.
///
/// A missing composite with an identity is reported once, as the identity
/// law it breaks; totality is only checked on pairs of non-identities.
pub fn validate_category(c: &FinCategory) -> ValidationReport {
    let mut report = ValidationReport::default();
    let name = |m: usize| c.morphism_name(m).to_string();

    for x in 0..c.object_count() {
        let id = c.identity(x);
        if c.source(id) != x || c.target(id) != x {
            report.push(
                Law::IdentityEndpoints,
                vec![c.object_name(x).to_string(), name(id)],
                format!(
                    "identity `{}` of `{}` is not an endomorphism of it",
                    name(id),
                    c.object_name(x)
                ),
            );
        }
    }

    for m in 0..c.morphism_count() {
        let left = c.identity(c.target(m));
        match c.compose(left, m) {
            Some(h) if h == m => {}
            got => report.push(
                Law::LeftIdentity,
                vec![name(left), name(m)],
                format!(
                    "`{}` . `{}` is {}, expected `{}`",
                    name(left),
                    name(m),
                    describe(c, got),
                    name(m)
                ),
            ),
        }
        let right = c.identity(c.source(m));
        match c.compose(m, right) {
            Some(h) if h == m => {}
            got => report.push(
                Law::RightIdentity,
                vec![name(m), name(right)],
                format!(
                    "`{}` . `{}` is {}, expected `{}`",
                    name(m),
                    name(right),
                    describe(c, got),
                    name(m)
                ),
            ),
        }
    }

    let non_id = |m: usize| !c.is_identity(m);
    for x in 0..c.object_count() {
        for &g in c.outgoing(x).iter().filter(|&&g| non_id(g)) {
            for &f in c.incoming(x).iter().filter(|&&f| non_id(f)) {
                match c.compose(g, f) {
                    None => report.push(
                        Law::Totality,
                        vec![name(g), name(f)],
                        format!("`{}` . `{}` is undefined", name(g), name(f)),
                    ),
                    Some(h) if c.source(h) != c.source(f) || c.target(h) != c.target(g) => report.push(
                        Law::CompositeEndpoints,
                        vec![name(g), name(f), name(h)],
                        format!("`{}` . `{}` = `{}` has the wrong endpoints", name(g), name(f), name(h)),
                    ),
                    Some(_) => {}
                }
            }
        }
    }

    for f in (0..c.morphism_count()).filter(|&f| non_id(f)) {
        for &g in c.outgoing(c.target(f)).iter().filter(|&&g| non_id(g)) {
            let Some(gf) = c.compose(g, f) else { continue };
            for &h in c.outgoing(c.target(g)).iter().filter(|&&h| non_id(h)) {
                let Some(hg) = c.compose(h, g) else { continue };
                let (Some(l), Some(r)) = (c.compose(h, gf), c.compose(hg, f)) else {
                    continue;
                };
                if l != r {
                    report.push(
                        Law::Associativity,
                        vec![name(h), name(g), name(f)],
                        format!(
                            "`{}` . (`{}` . `{}`) = `{}` but (`{}` . `{}`) . `{}` = `{}`",
                            name(h),
                            name(g),
                            name(f),
                            name(l),
                            name(h),
                            name(g),
                            name(f),
                            name(r)
                        ),
                    );
                }
            }
        }
    }
    report
}

fn describe(c: &FinCategory, m: Option<usize>) -> String {
    match m {
        Some(h) => format!("`{}`", c.morphism_name(h)),
        None => "undefined".to_string(),
    }
}

/// Fills unset entries of a per-morphism assignment from composites of set
/// ones until nothing changes. Entries already set are never overwritten.
pub(crate) fn fill_by_composition<T>(c: &FinCategory, values: &mut [Option<T>], compose: impl Fn(&T, &T) -> Option<T>) {
    let entries = c.composition_entries();
    let mut changed = true;
    while changed {
        changed = false;
        for &(g, f, h) in &entries {
            if values[h].is_some() {
                continue;
            }
            if let (Some(vg), Some(vf)) = (&values[g], &values[f]) {
                if let Some(v) = compose(vg, vf) {
                    values[h] = Some(v);
                    changed = true;
                }
            }
        }
    }
}

/// Validates and wraps a category, turning any violation into an error.
pub fn checked(c: FinCategory) -> Result<CatRef> {
    let report = validate_category(&c);
    if report.is_empty() {
        Ok(Arc::new(c))
    } else {
        Err(Error::Invalid {
            kind: "category",
            name: c.name().to_string(),
            details: report.to_string(),
        })
    }
}

/// Name of the opposite of a category called `name`.
pub fn opposite_name(name: &str) -> String {
    match name.strip_suffix("^op") {
        Some(base) => base.to_string(),
        None => format!("{name}^op"),
    }
}

/// The opposite category: same ids, endpoints swapped, composition reversed.
/// Applying it twice returns an equal category.
pub fn opposite(c: &FinCategory) -> FinCategory {
    let morphisms = c
        .morphisms()
        .iter()
        .map(|m| Morphism {
            name: m.name.clone(),
            source: m.target,
            target: m.source,
        })
        .collect();
    let entries = c.composition_entries().into_iter().map(|(g, f, h)| (f, g, h));
    FinCategory::from_parts(
        opposite_name(c.name()),
        c.objects().to_vec(),
        morphisms,
        c.identities().to_vec(),
        entries,
    )
    .expect("opposite of a well-formed category is well formed")
}

/// Partition of the objects into zigzag-connected blocks.
///
/// Blocks are ordered by their least object and sorted internally.
pub fn connected_components(c: &FinCategory) -> Vec<Vec<usize>> {
    let n = c.object_count();
    let mut uf = UnionFind::<usize>::new(n);
    for m in c.morphisms() {
        uf.union(m.source, m.target);
    }
    let mut block_of_root: HashMap<usize, usize> = HashMap::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        let root = uf.find_mut(x);
        let b = *block_of_root.entry(root).or_insert_with(|| {
            blocks.push(Vec::new());
            blocks.len() - 1
        });
        blocks[b].push(x);
    }
    blocks
}

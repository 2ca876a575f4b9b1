//! Colimits and limits of finite-set-valued diagrams.

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;

use crate::setfunctor::SetFunctor;

/// A diagram of finite sets indexed by a finite graph. Nodes carry a display
/// name and their element labels; edges carry the function they induce.
pub(crate) struct Diagram<'a> {
    pub nodes: Vec<(String, &'a [String])>,
    pub edges: Vec<(usize, usize, &'a [usize])>,
}

impl<'a> Diagram<'a> {
    /// The non-identity morphisms of the shape of `F` as a diagram.
    pub fn of(functor: &'a SetFunctor) -> Self {
        let c = functor.shape();
        let nodes = (0..c.object_count())
            .map(|x| (c.object_name(x).to_string(), functor.set(x)))
            .collect();
        let edges = (0..c.morphism_count())
            .filter(|&m| !c.is_identity(m))
            .map(|m| (c.source(m), c.target(m), functor.map(m)))
            .collect();
        Diagram { nodes, edges }
    }
}

/// Quotient classes of the disjoint union of a diagram.
pub(crate) struct Classes {
    pub labels: Vec<String>,
    /// `legs[node][element]` is the class of that element.
    pub legs: Vec<Vec<usize>>,
}

/// Classes are numbered by their least `(node, element)` member and labelled
/// `K(<node>,<element>)` after it.
pub(crate) fn colimit_of(diagram: &Diagram) -> Classes {
    let mut offset = Vec::with_capacity(diagram.nodes.len());
    let mut total = 0;
    for (_, set) in &diagram.nodes {
        offset.push(total);
        total += set.len();
    }
    let mut uf = UnionFind::<usize>::new(total);
    for &(i, j, map) in &diagram.edges {
        for (e, &e2) in map.iter().enumerate() {
            uf.union(offset[i] + e, offset[j] + e2);
        }
    }
    let mut class_of_root = HashMap::new();
    let mut labels = Vec::new();
    let mut legs = Vec::with_capacity(diagram.nodes.len());
    for (i, (name, set)) in diagram.nodes.iter().enumerate() {
        let mut leg = Vec::with_capacity(set.len());
        for (e, label) in set.iter().enumerate() {
            let root = uf.find_mut(offset[i] + e);
            let class = *class_of_root.entry(root).or_insert_with(|| {
                labels.push(format!("K({name},{label})"));
                labels.len() - 1
            });
            leg.push(class);
        }
        legs.push(leg);
    }
    Classes { labels, legs }
}

/// Compatible families of a diagram.
pub(crate) struct Families {
    pub labels: Vec<String>,
    /// Element index at each node, in lexicographic order of the tuples.
    pub families: Vec<Vec<usize>>,
    pub index: HashMap<Vec<usize>, usize>,
}

/// Families are enumerated node by node; a node reached by an edge from an
/// earlier node has its value forced, so only free nodes branch.
pub(crate) fn limit_of(diagram: &Diagram) -> Families {
    let n = diagram.nodes.len();
    let mut checks: Vec<Vec<(usize, usize, &[usize])>> = vec![Vec::new(); n];
    let mut forced: Vec<Option<(usize, &[usize])>> = vec![None; n];
    for &(i, j, map) in &diagram.edges {
        checks[i.max(j)].push((i, j, map));
        if i < j && forced[j].is_none() {
            forced[j] = Some((i, map));
        }
    }
    let mut families = Vec::new();
    let mut current = vec![0usize; n];
    extend(0, diagram, &checks, &forced, &mut current, &mut families);
    families.sort();
    let labels = families
        .iter()
        .map(|fam| {
            let parts: Vec<&str> = fam
                .iter()
                .enumerate()
                .map(|(i, &e)| diagram.nodes[i].1[e].as_str())
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let index = families.iter().enumerate().map(|(k, f)| (f.clone(), k)).collect();
    Families {
        labels,
        families,
        index,
    }
}

fn extend(
    i: usize,
    diagram: &Diagram,
    checks: &[Vec<(usize, usize, &[usize])>],
    forced: &[Option<(usize, &[usize])>],
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if i == current.len() {
        out.push(current.clone());
        return;
    }
    let candidates: Vec<usize> = match forced[i] {
        Some((j, map)) => vec![map[current[j]]],
        None => (0..diagram.nodes[i].1.len()).collect(),
    };
    for e in candidates {
        current[i] = e;
        if checks[i].iter().all(|&(x, y, map)| map[current[x]] == current[y]) {
            extend(i + 1, diagram, checks, forced, current, out);
        }
    }
}

/// Colimit of a set functor with its cocone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colimit {
    pub apex: Vec<String>,
    /// `legs[x][e]`: the class of element `e` of `F(x)`.
    pub legs: Vec<Vec<usize>>,
}

impl Colimit {
    pub fn is_cocone(&self, functor: &SetFunctor) -> bool {
        let c = functor.shape();
        (0..c.morphism_count()).all(|m| {
            let (x, y) = (c.source(m), c.target(m));
            (0..functor.size(x)).all(|e| self.legs[y][functor.apply(m, e)] == self.legs[x][e])
        })
    }
}

pub fn colimit(functor: &SetFunctor) -> Colimit {
    let classes = colimit_of(&Diagram::of(functor));
    Colimit {
        apex: classes.labels,
        legs: classes.legs,
    }
}

/// Limit of a set functor as the set of compatible families, with its cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limit {
    pub apex: Vec<String>,
    /// `families[k][x]`: the element at `x` of family `k`; also the legs.
    pub families: Vec<Vec<usize>>,
}

impl Limit {
    pub fn leg(&self, x: usize) -> Vec<usize> {
        self.families.iter().map(|f| f[x]).collect()
    }

    pub fn is_cone(&self, functor: &SetFunctor) -> bool {
        let c = functor.shape();
        (0..c.morphism_count()).all(|m| {
            let (x, y) = (c.source(m), c.target(m));
            self.families.iter().all(|f| functor.apply(m, f[x]) == f[y])
        })
    }
}

pub fn limit(functor: &SetFunctor) -> Limit {
    let families = limit_of(&Diagram::of(functor));
    Limit {
        apex: families.labels,
        families: families.families,
    }
}

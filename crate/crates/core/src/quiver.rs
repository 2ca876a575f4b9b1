//! Directed multigraphs and the free category on an acyclic one.

use std::collections::HashMap;

use crate::category::{CategoryBuilder, FinCategory};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub name: String,
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
}

impl Quiver {
    pub fn new(name: impl Into<String>, vertices: Vec<String>) -> Self {
        Quiver {
            name: name.into(),
            vertices,
            edges: Vec::new(),
        }
    }

    pub fn edge(mut self, name: impl Into<String>, source: usize, target: usize) -> Self {
        self.edges.push(Edge {
            name: name.into(),
            source,
            target,
        });
        self
    }

    /// Kahn's algorithm; `None` iff there is a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut indegree = vec![0usize; n];
        for e in &self.edges {
            indegree[e.target] += 1;
        }
        let mut ready: Vec<usize> = (0..n).rev().filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for e in self.edges.iter().filter(|e| e.source == v) {
                indegree[e.target] -= 1;
                if indegree[e.target] == 0 {
                    ready.push(e.target);
                }
            }
        }
        (order.len() == n).then_some(order)
    }
}

/// Name of the morphism for a path of edges, written in composition order
/// (`e2.e1` for `e1` followed by `e2`).
fn path_name(q: &Quiver, path: &[usize]) -> String {
    path.iter()
        .rev()
        .map(|&e| q.edges[e].name.as_str())
        .collect::<Vec<_>>()
        .join(".")
}

/// The free category on an acyclic quiver: morphisms are directed paths,
/// composition is concatenation.
///
/// Non-identity morphisms are ordered by path length, then by edge sequence,
/// so the edges keep their indices right after the identities.
pub fn free_on_acyclic_quiver(q: &Quiver) -> Result<FinCategory> {
    let n = q.vertices.len();
    if let Some(e) = q.edges.iter().find(|e| e.source >= n || e.target >= n) {
        return Err(Error::structural(format!(
            "edge `{}` of `{}` has an unresolved endpoint",
            e.name, q.name
        )));
    }
    if q.topological_order().is_none() {
        return Err(Error::CyclicQuiver(q.name.clone()));
    }

    let mut out_edges = vec![Vec::new(); n];
    for (i, e) in q.edges.iter().enumerate() {
        out_edges[e.source].push(i);
    }
    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<Vec<usize>> = q.edges.iter().enumerate().map(|(i, _)| vec![i]).collect();
    while let Some(p) = stack.pop() {
        let end = q.edges[*p.last().unwrap()].target;
        for &e in &out_edges[end] {
            let mut longer = p.clone();
            longer.push(e);
            stack.push(longer);
        }
        paths.push(p);
    }
    paths.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    let mut b = CategoryBuilder::new(q.name.clone(), q.vertices.clone());
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    for p in &paths {
        let src = q.edges[p[0]].source;
        let tgt = q.edges[*p.last().unwrap()].target;
        let id = b.arrow(path_name(q, p), src, tgt);
        index.insert(p.clone(), id);
    }
    for first in &paths {
        let end = q.edges[*first.last().unwrap()].target;
        for second in paths.iter().filter(|p| q.edges[p[0]].source == end) {
            let mut joined = first.clone();
            joined.extend_from_slice(second);
            b.compose(index[second], index[first], index[&joined]);
        }
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::validate_category;

    fn v(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn single_vertex_is_the_point() {
        let c = free_on_acyclic_quiver(&Quiver::new("1", v(&["*"]))).unwrap();
        assert_eq!(c.object_count(), 1);
        assert_eq!(c.morphism_count(), 1);
    }

    #[test]
    fn one_edge_is_the_interval() {
        let c = free_on_acyclic_quiver(&Quiver::new("2", v(&["x", "y"])).edge("e", 0, 1)).unwrap();
        assert_eq!(c.morphism_count(), 3);
        assert!(validate_category(&c).is_empty());
    }

    #[test]
    fn chain_of_two_has_six_morphisms() {
        let q = Quiver::new("3", v(&["x", "y", "z"])).edge("f", 0, 1).edge("g", 1, 2);
        let c = free_on_acyclic_quiver(&q).unwrap();
        assert_eq!(c.morphism_count(), 6);
        let gf = c.morphism_id("g.f").unwrap();
        assert_eq!(c.comp(4, 3), gf);
        assert!(validate_category(&c).is_empty());
    }

    #[test]
    fn cycles_are_rejected() {
        let q = Quiver::new("loop", v(&["x"])).edge("l", 0, 0);
        assert_eq!(free_on_acyclic_quiver(&q), Err(Error::CyclicQuiver("loop".into())));
        let q = Quiver::new("cyc", v(&["x", "y"])).edge("a", 0, 1).edge("b", 1, 0);
        assert!(free_on_acyclic_quiver(&q).is_err());
    }
}

//! Brute-force oracles that read categories and set functors only through
//! their raw tables. Nothing here calls the library's constructions.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use flowcat::{CatFunctor, FinCategory, SetFunctor, SetNatTrans};

/// A set-valued functor as plain tables: sizes per object, maps per
/// morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub sizes: Vec<usize>,
    pub maps: Vec<Vec<usize>>,
}

impl Table {
    pub fn of(f: &SetFunctor) -> Table {
        Table {
            sizes: (0..f.shape().object_count()).map(|x| f.size(x)).collect(),
            maps: f.maps().to_vec(),
        }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }

    /// Class index of each element, numbered by first appearance.
    fn classes(&mut self) -> (Vec<usize>, usize) {
        let mut number = HashMap::new();
        let n = self.0.len();
        let out = (0..n)
            .map(|x| {
                let r = self.find(x);
                let next = number.len();
                *number.entry(r).or_insert(next)
            })
            .collect();
        (out, number.len())
    }
}

/// `F ∘ f` for `F` on the target of `f`.
pub fn pullback(f: &CatFunctor, x: &Table) -> Table {
    let a = f.source();
    Table {
        sizes: (0..a.object_count()).map(|o| x.sizes[f.obj(o)]).collect(),
        maps: (0..a.morphism_count()).map(|m| x.maps[f.mor(m)].clone()).collect(),
    }
}

/// Left Kan extension along `f`, as the quotient of the triples
/// `(b, η : f b → d, e ∈ F b)` by `(b, η' ∘ f φ, e) ~ (b', η', F φ e)`.
pub fn left_kan(f: &CatFunctor, x: &Table) -> Table {
    let (b, d) = (f.source(), f.target());
    let mut sizes = Vec::new();
    // class of (b, η, e) at each d
    let mut class: Vec<HashMap<(usize, usize, usize), usize>> = Vec::new();
    for dd in 0..d.object_count() {
        let mut elems = Vec::new();
        for bb in 0..b.object_count() {
            for &eta in d.hom(f.obj(bb), dd) {
                for e in 0..x.sizes[bb] {
                    elems.push((bb, eta, e));
                }
            }
        }
        let index: HashMap<_, _> = elems.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let mut uf = UnionFind::new(elems.len());
        for (i, &(bb, eta, e)) in elems.iter().enumerate() {
            for &phi in b.outgoing(bb) {
                let b2 = b.target(phi);
                for &eta2 in d.hom(f.obj(b2), dd) {
                    if d.compose(eta2, f.mor(phi)) == Some(eta) {
                        uf.union(i, index[&(b2, eta2, x.maps[phi][e])]);
                    }
                }
            }
        }
        let (cls, n) = uf.classes();
        sizes.push(n);
        class.push(elems.iter().zip(cls).map(|(&t, c)| (t, c)).collect());
    }
    let maps = (0..d.morphism_count())
        .map(|delta| {
            let (d0, d1) = (d.source(delta), d.target(delta));
            let mut map = vec![usize::MAX; sizes[d0]];
            for (&(bb, eta, e), &c) in &class[d0] {
                map[c] = class[d1][&(bb, d.comp(delta, eta), e)];
            }
            map
        })
        .collect();
    Table { sizes, maps }
}

/// Right Kan extension along `f`: compatible families indexed by
/// `(a, η : d → f a)`.
pub fn right_kan(f: &CatFunctor, x: &Table) -> Table {
    let (a, d) = (f.source(), f.target());
    let mut nodes = Vec::new();
    let mut families = Vec::new();
    for dd in 0..d.object_count() {
        let mut here = Vec::new();
        for aa in 0..a.object_count() {
            for &eta in d.hom(dd, f.obj(aa)) {
                here.push((aa, eta));
            }
        }
        let mut found = Vec::new();
        extend_family(a, d, f, x, &here, &mut found);
        nodes.push(here);
        families.push(found);
    }
    let index: Vec<HashMap<&Vec<usize>, usize>> = families
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, v)| (v, i)).collect())
        .collect();
    let maps = (0..d.morphism_count())
        .map(|delta| {
            let (d0, d1) = (d.source(delta), d.target(delta));
            let position: HashMap<(usize, usize), usize> = nodes[d0].iter().enumerate().map(|(i, &n)| (n, i)).collect();
            families[d0]
                .iter()
                .map(|fam| {
                    let image: Vec<usize> = nodes[d1]
                        .iter()
                        .map(|&(aa, eta)| fam[position[&(aa, d.comp(eta, delta))]])
                        .collect();
                    index[d1][&image]
                })
                .collect()
        })
        .collect();
    Table {
        sizes: families.iter().map(Vec::len).collect(),
        maps,
    }
}

/// Every compatible family over `nodes`, by backtracking. Each node is
/// checked against the arrows linking it to itself and to earlier nodes.
fn extend_family(
    a: &FinCategory,
    d: &FinCategory,
    f: &CatFunctor,
    x: &Table,
    nodes: &[(usize, usize)],
    found: &mut Vec<Vec<usize>>,
) {
    // (earlier node j, arrow, whether it runs from j to k)
    let links: Vec<Vec<(usize, usize, bool)>> = (0..nodes.len())
        .map(|k| {
            let (ak, etak) = nodes[k];
            let mut out = Vec::new();
            for (j, &(aj, etaj)) in nodes[..=k].iter().enumerate() {
                for &phi in a.hom(aj, ak) {
                    if d.compose(f.mor(phi), etaj) == Some(etak) {
                        out.push((j, phi, true));
                    }
                }
                if j == k {
                    continue;
                }
                for &phi in a.hom(ak, aj) {
                    if d.compose(f.mor(phi), etak) == Some(etaj) {
                        out.push((j, phi, false));
                    }
                }
            }
            out
        })
        .collect();
    let mut current = Vec::with_capacity(nodes.len());
    search(nodes, x, &links, &mut current, found);
}

fn search(
    nodes: &[(usize, usize)],
    x: &Table,
    links: &[Vec<(usize, usize, bool)>],
    current: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    let k = current.len();
    if k == nodes.len() {
        found.push(current.clone());
        return;
    }
    for v in 0..x.sizes[nodes[k].0] {
        let ok = links[k].iter().all(|&(j, phi, forward)| {
            let other = if j == k { v } else { current[j] };
            if forward {
                x.maps[phi][other] == v
            } else {
                x.maps[phi][v] == other
            }
        });
        if ok {
            current.push(v);
            search(nodes, x, links, current, found);
            current.pop();
        }
    }
}

/// Number of connected components of a set functor's category of elements.
pub fn colimit_size(c: &FinCategory, x: &Table) -> usize {
    let mut offset = vec![0; c.object_count() + 1];
    for o in 0..c.object_count() {
        offset[o + 1] = offset[o] + x.sizes[o];
    }
    let mut uf = UnionFind::new(offset[c.object_count()]);
    for m in 0..c.morphism_count() {
        let (s, t) = (c.source(m), c.target(m));
        for e in 0..x.sizes[s] {
            uf.union(offset[s] + e, offset[t] + x.maps[m][e]);
        }
    }
    uf.classes().1
}

/// Number of natural transformations `x ⇒ y`, by trying every tuple of
/// component functions.
pub fn nat_count(c: &FinCategory, x: &Table, y: &Table) -> usize {
    let objects = c.object_count();
    // Every function x_o → y_o, per object.
    let functions: Vec<Vec<Vec<usize>>> = (0..objects)
        .map(|o| {
            let mut all = vec![Vec::new()];
            for _ in 0..x.sizes[o] {
                all = all
                    .into_iter()
                    .flat_map(|prefix: Vec<usize>| {
                        (0..y.sizes[o]).map(move |v| {
                            let mut p = prefix.clone();
                            p.push(v);
                            p
                        })
                    })
                    .collect();
            }
            all
        })
        .collect();
    let mut count = 0;
    let mut choice = vec![0usize; objects];
    if functions.iter().any(Vec::is_empty) {
        return 0;
    }
    loop {
        let natural = (0..c.morphism_count()).all(|m| {
            let (s, t) = (c.source(m), c.target(m));
            (0..x.sizes[s]).all(|e| functions[t][choice[t]][x.maps[m][e]] == y.maps[m][functions[s][choice[s]][e]])
        });
        count += natural as usize;
        let mut i = 0;
        loop {
            if i == objects {
                return count;
            }
            choice[i] += 1;
            if choice[i] < functions[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Connected components of the coslice `d ↓ f`.
pub fn coslice_components(f: &CatFunctor, d: usize) -> usize {
    let (a, t) = (f.source(), f.target());
    let mut nodes = Vec::new();
    for x in 0..a.object_count() {
        for &eta in t.hom(d, f.obj(x)) {
            nodes.push((x, eta));
        }
    }
    let index: HashMap<_, _> = nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();
    let mut uf = UnionFind::new(nodes.len());
    for (i, &(x, eta)) in nodes.iter().enumerate() {
        for &phi in a.outgoing(x) {
            uf.union(i, index[&(a.target(phi), t.comp(f.mor(phi), eta))]);
        }
    }
    uf.classes().1
}

/// Every component of `eta` is a bijection.
pub fn bijective(eta: &SetNatTrans) -> bool {
    eta.components().iter().enumerate().all(|(x, map)| {
        let n = eta.target().size(x);
        let image: HashSet<usize> = map.iter().copied().collect();
        map.len() == n && image.len() == n
    })
}

/// Naturality squares of `eta`, checked elementwise.
pub fn natural(eta: &SetNatTrans) -> bool {
    let c = eta.source().shape();
    (0..c.morphism_count()).all(|m| {
        let (s, t) = (c.source(m), c.target(m));
        (0..eta.source().size(s))
            .all(|e| eta.component(t)[eta.source().apply(m, e)] == eta.target().apply(m, eta.component(s)[e]))
    })
}

pub fn sizes(f: &SetFunctor) -> Vec<usize> {
    (0..f.shape().object_count()).map(|x| f.size(x)).collect()
}

/// `f` is an opfibration straight from the definition: every arrow out of
/// an image has a lift through which every other arrow over a factorisation
/// factors uniquely.
pub fn opfibration(f: &CatFunctor) -> bool {
    let (e, b) = (f.source(), f.target());
    let cocartesian = |phi: usize| {
        let (x, y) = (e.source(phi), e.target(phi));
        (0..e.object_count()).all(|z| {
            e.hom(x, z).iter().all(|&psi| {
                b.hom(f.obj(y), f.obj(z)).iter().all(|&gamma| {
                    if b.compose(gamma, f.mor(phi)) != Some(f.mor(psi)) {
                        return true;
                    }
                    let fillers = e
                        .hom(y, z)
                        .iter()
                        .filter(|&&chi| f.mor(chi) == gamma && e.compose(chi, phi) == Some(psi))
                        .count();
                    fillers == 1
                })
            })
        })
    };
    (0..e.object_count()).all(|x| {
        b.outgoing(f.obj(x))
            .iter()
            .all(|&beta| e.outgoing(x).iter().any(|&phi| f.mor(phi) == beta && cocartesian(phi)))
    })
}

/// Object and morphism counts of the comma category of `f : B → D` and
/// `g : C → D`.
pub fn comma_counts(f: &CatFunctor, g: &CatFunctor) -> (usize, usize) {
    let (b, c, d) = (f.source(), g.source(), f.target());
    let mut objects = Vec::new();
    for x in 0..b.object_count() {
        for y in 0..c.object_count() {
            for &eta in d.hom(f.obj(x), g.obj(y)) {
                objects.push((x, y, eta));
            }
        }
    }
    let mut morphisms = 0;
    for &(x, y, eta) in &objects {
        for &(x2, y2, eta2) in &objects {
            for &phi in b.hom(x, x2) {
                for &psi in c.hom(y, y2) {
                    if d.compose(eta2, f.mor(phi)) == d.compose(g.mor(psi), eta) {
                        morphisms += 1;
                    }
                }
            }
        }
    }
    (objects.len(), morphisms)
}

/// A flow-sum word `(φ : b → s a, a, ψ : t a → c)`.
pub type Word = (usize, usize, usize);

/// Words reachable from `w` by single steps
/// `(φ, a, ψ' ∘ t θ) ~ (s θ ∘ φ, a', ψ')` in either direction.
pub fn hammock_closure(s: &CatFunctor, t: &CatFunctor, w: Word) -> HashSet<Word> {
    let (a, b, c) = (s.source(), s.target(), t.target());
    let mut seen = HashSet::from([w]);
    let mut queue = VecDeque::from([w]);
    while let Some((phi, x, psi)) = queue.pop_front() {
        let mut next = Vec::new();
        for &theta in a.outgoing(x) {
            let x2 = a.target(theta);
            for &psi2 in c.hom(t.obj(x2), c.target(psi)) {
                if c.compose(psi2, t.mor(theta)) == Some(psi) {
                    next.push((b.comp(s.mor(theta), phi), x2, psi2));
                }
            }
        }
        for &theta in a.incoming(x) {
            let x0 = a.source(theta);
            for &phi0 in b.hom(b.source(phi), s.obj(x0)) {
                if b.compose(s.mor(theta), phi0) == Some(phi) {
                    next.push((phi0, x0, c.comp(psi, t.mor(theta))));
                }
            }
        }
        for n in next {
            if seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen
}

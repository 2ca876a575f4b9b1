//! Pullback and pointwise Kan extensions of set functors, with the units and
//! counits of `Σ_f ⊣ Δ_f ⊣ Π_f`.

use std::collections::HashMap;

use crate::category::CatRef;
use crate::error::{Error, Result};
use crate::flow::slice::{comma_from_shape, comma_to_shape, CommaShape, Direction};
use crate::functor::{same_category, CatFunctor, CatNatTrans};
use crate::migration::limits::{colimit_of, limit_of, Diagram};
use crate::setfunctor::{SetFunctor, SetNatTrans};

fn require_shape(functor: &SetFunctor, expected: &CatRef, what: &str) -> Result<()> {
    if !same_category(functor.shape(), expected) {
        return Err(Error::shape(format!(
            "{what}: `{}` lives on `{}`, expected `{}`",
            functor.name(),
            functor.shape().name(),
            expected.name()
        )));
    }
    Ok(())
}

/// `Δ_f G = G∘f`.
pub fn pullback(f: &CatFunctor, g: &SetFunctor) -> Result<SetFunctor> {
    require_shape(g, f.target(), "pullback")?;
    let a = f.source();
    let sets = (0..a.object_count()).map(|x| g.set(f.obj(x)).to_vec()).collect();
    let maps = (0..a.morphism_count()).map(|m| g.map(f.mor(m)).to_vec()).collect();
    SetFunctor::new(format!("delta[{}]({})", f.name(), g.name()), a.clone(), sets, maps)
}

/// `Δ_f η`.
pub fn pullback_nat(f: &CatFunctor, eta: &SetNatTrans) -> Result<SetNatTrans> {
    let source = pullback(f, eta.source())?;
    let target = pullback(f, eta.target())?;
    let components = f.object_map().iter().map(|&y| eta.component(y).to_vec()).collect();
    SetNatTrans::new(source, target, components)
}

/// `G(α) : Δ_h G ⇒ Δ_k G` for `α : h ⇒ k`.
pub fn reindex(alpha: &CatNatTrans, g: &SetFunctor) -> Result<SetNatTrans> {
    let source = pullback(alpha.source(), g)?;
    let target = pullback(alpha.target(), g)?;
    let components = alpha.components().iter().map(|&c| g.map(c).to_vec()).collect();
    SetNatTrans::new(source, target, components)
}

fn flow_node_name(f: &CatFunctor, shape: &CommaShape, i: usize) -> String {
    let (b, eta) = shape.objects[i];
    format!("T({},{})", f.source().object_name(b), f.target().morphism_name(eta))
}

/// `Σ_f F` with the colimit data at each object of the target.
#[derive(Debug, Clone)]
pub struct LeftKan {
    pub functor: SetFunctor,
    /// `f ↓ d` for each `d`.
    pub flows: Vec<CommaShape>,
    /// `legs[d][node][e]`: the class of element `e` at that node of `f ↓ d`.
    pub legs: Vec<Vec<Vec<usize>>>,
}

impl LeftKan {
    /// Class in `Σ_f F(d)` of the element `e ∈ F(b)` sitting at `(b, η)`.
    pub fn class(&self, d: usize, b: usize, eta: usize, e: usize) -> usize {
        let node = self.flows[d].node(b, eta).expect("(b, η) is an object of the flow");
        self.legs[d][node][e]
    }

    /// The least `(node, element)` of each class at `d`.
    pub fn representatives(&self, d: usize) -> Vec<(usize, usize)> {
        representatives(&self.legs[d], self.functor.size(d))
    }
}

pub fn left_kan_data(f: &CatFunctor, functor: &SetFunctor) -> Result<LeftKan> {
    require_shape(functor, f.source(), "left Kan extension")?;
    let d_cat = f.target();
    let mut flows = Vec::with_capacity(d_cat.object_count());
    let mut legs = Vec::with_capacity(d_cat.object_count());
    let mut sets = Vec::with_capacity(d_cat.object_count());
    for d in 0..d_cat.object_count() {
        let shape = comma_to_shape(f, d);
        let diagram = Diagram {
            nodes: (0..shape.len())
                .map(|i| (flow_node_name(f, &shape, i), functor.set(shape.objects[i].0)))
                .collect(),
            edges: shape
                .edges
                .iter()
                .map(|&(i, j, phi)| (i, j, functor.map(phi)))
                .collect(),
        };
        let classes = colimit_of(&diagram);
        sets.push(classes.labels);
        legs.push(classes.legs);
        flows.push(shape);
    }
    // δ : d → d' sends the class of (e at (b, η)) to the class of (e at (b, δ∘η)).
    let maps = (0..d_cat.morphism_count())
        .map(|delta| {
            let (d, d2) = (d_cat.source(delta), d_cat.target(delta));
            representatives(&legs[d], sets[d].len())
                .into_iter()
                .map(|(node, e)| {
                    let (b, eta) = flows[d].objects[node];
                    let node2 = flows[d2]
                        .node(b, d_cat.comp(delta, eta))
                        .expect("postcomposite is a flow object");
                    legs[d2][node2][e]
                })
                .collect()
        })
        .collect();
    let functor = SetFunctor::new(
        format!("sigma[{}]({})", f.name(), functor.name()),
        d_cat.clone(),
        sets,
        maps,
    )?;
    Ok(LeftKan { functor, flows, legs })
}

fn representatives(legs: &[Vec<usize>], classes: usize) -> Vec<(usize, usize)> {
    let mut reps = vec![None; classes];
    for (node, leg) in legs.iter().enumerate() {
        for (e, &class) in leg.iter().enumerate() {
            reps[class].get_or_insert((node, e));
        }
    }
    reps.into_iter().map(|r| r.expect("classes are inhabited")).collect()
}

/// `Σ_f F`, computed pointwise as colimits over `f ↓ d`.
pub fn left_kan(f: &CatFunctor, functor: &SetFunctor) -> Result<SetFunctor> {
    Ok(left_kan_data(f, functor)?.functor)
}

/// `Π_f F` with the limit data at each object of the target.
#[derive(Debug, Clone)]
pub struct RightKan {
    pub functor: SetFunctor,
    /// `d ↓ f` for each `d`.
    pub flows: Vec<CommaShape>,
    /// `families[d][k][node]`: the element at `node` of family `k`.
    pub families: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

impl RightKan {
    pub fn family(&self, d: usize, family: &[usize]) -> Option<usize> {
        self.index[d].get(family).copied()
    }
}

fn right_kan_from_flows(f: &CatFunctor, functor: &SetFunctor, flows: Vec<CommaShape>) -> Result<RightKan> {
    let d_cat = f.target();
    let mut sets = Vec::with_capacity(flows.len());
    let mut families = Vec::with_capacity(flows.len());
    let mut index = Vec::with_capacity(flows.len());
    for shape in &flows {
        let diagram = Diagram {
            nodes: (0..shape.len())
                .map(|i| (flow_node_name(f, shape, i), functor.set(shape.objects[i].0)))
                .collect(),
            edges: shape
                .edges
                .iter()
                .map(|&(i, j, phi)| (i, j, functor.map(phi)))
                .collect(),
        };
        let fams = limit_of(&diagram);
        sets.push(fams.labels);
        families.push(fams.families);
        index.push(fams.index);
    }
    // δ : d → d' sends (x_(b,η)) to the family (x_(b, η'∘δ)) at (b, η').
    let maps = (0..d_cat.morphism_count())
        .map(|delta| {
            let (d, d2) = (d_cat.source(delta), d_cat.target(delta));
            families[d]
                .iter()
                .map(|fam| {
                    let image: Vec<usize> = flows[d2]
                        .objects
                        .iter()
                        .map(|&(b, eta2)| {
                            let node = flows[d]
                                .node(b, d_cat.comp(eta2, delta))
                                .expect("precomposite is a flow object");
                            fam[node]
                        })
                        .collect();
                    index[d2][&image]
                })
                .collect()
        })
        .collect();
    let functor = SetFunctor::new(
        format!("pi[{}]({})", f.name(), functor.name()),
        d_cat.clone(),
        sets,
        maps,
    )?;
    Ok(RightKan {
        functor,
        flows,
        families,
        index,
    })
}

pub fn right_kan_data(f: &CatFunctor, functor: &SetFunctor) -> Result<RightKan> {
    require_shape(functor, f.source(), "right Kan extension")?;
    let flows = (0..f.target().object_count()).map(|d| comma_from_shape(f, d)).collect();
    right_kan_from_flows(f, functor, flows)
}

/// `Π_f F`, computed pointwise as limits over `d ↓ f`.
pub fn right_kan(f: &CatFunctor, functor: &SetFunctor) -> Result<SetFunctor> {
    Ok(right_kan_data(f, functor)?.functor)
}

/// `Π_f F` with each `d ↓ f` obtained as the opposite of `f^op ↓ d`.
pub fn right_kan_via_opposite(f: &CatFunctor, functor: &SetFunctor) -> Result<SetFunctor> {
    require_shape(functor, f.source(), "right Kan extension")?;
    let f_op = f.opposite();
    let flows = (0..f.target().object_count())
        .map(|d| {
            let slice = comma_to_shape(&f_op, d);
            let edges = slice.edges.iter().map(|&(i, j, phi)| (j, i, phi)).collect();
            CommaShape::from_parts(Direction::From, d, slice.objects, edges)
        })
        .collect();
    Ok(right_kan_from_flows(f, functor, flows)?.functor)
}

/// `Σ_f η`.
pub fn left_kan_nat(f: &CatFunctor, eta: &SetNatTrans) -> Result<SetNatTrans> {
    let source = left_kan_data(f, eta.source())?;
    let target = left_kan_data(f, eta.target())?;
    let components = sigma_components(&source, &target, eta);
    SetNatTrans::new(source.functor, target.functor, components)
}

pub(crate) fn sigma_components(source: &LeftKan, target: &LeftKan, eta: &SetNatTrans) -> Vec<Vec<usize>> {
    (0..source.flows.len())
        .map(|d| {
            source
                .representatives(d)
                .into_iter()
                .map(|(node, e)| target.legs[d][node][eta.component(source.flows[d].objects[node].0)[e]])
                .collect()
        })
        .collect()
}

/// `Π_f η`.
pub fn right_kan_nat(f: &CatFunctor, eta: &SetNatTrans) -> Result<SetNatTrans> {
    let source = right_kan_data(f, eta.source())?;
    let target = right_kan_data(f, eta.target())?;
    let components = pi_components(&source, &target, eta);
    SetNatTrans::new(source.functor, target.functor, components)
}

pub(crate) fn pi_components(source: &RightKan, target: &RightKan, eta: &SetNatTrans) -> Vec<Vec<usize>> {
    (0..source.flows.len())
        .map(|d| {
            source.families[d]
                .iter()
                .map(|fam| {
                    let image: Vec<usize> = fam
                        .iter()
                        .enumerate()
                        .map(|(node, &x)| eta.component(source.flows[d].objects[node].0)[x])
                        .collect();
                    target
                        .family(d, &image)
                        .expect("images of compatible families are compatible")
                })
                .collect()
        })
        .collect()
}

/// `F ⇒ Δ_f Σ_f F`: `x ∈ F(b)` goes to its class at `(b, id)`.
pub fn unit_left(f: &CatFunctor, functor: &SetFunctor) -> Result<SetNatTrans> {
    let kan = left_kan_data(f, functor)?;
    let d_cat = f.target();
    let components = (0..f.source().object_count())
        .map(|b| {
            let d = f.obj(b);
            (0..functor.size(b))
                .map(|x| kan.class(d, b, d_cat.identity(d), x))
                .collect()
        })
        .collect();
    SetNatTrans::new(functor.clone(), pullback(f, &kan.functor)?, components)
}

/// `Σ_f Δ_f G ⇒ G`: the class of `y` at `(b, η)` goes to `G(η)(y)`.
pub fn counit_left(f: &CatFunctor, g: &SetFunctor) -> Result<SetNatTrans> {
    let pulled = pullback(f, g)?;
    let kan = left_kan_data(f, &pulled)?;
    let components = (0..f.target().object_count())
        .map(|d| {
            representatives(&kan.legs[d], kan.functor.size(d))
                .into_iter()
                .map(|(node, y)| g.apply(kan.flows[d].objects[node].1, y))
                .collect()
        })
        .collect();
    SetNatTrans::new(kan.functor, g.clone(), components)
}

/// `G ⇒ Π_f Δ_f G`: `y ∈ G(d)` goes to the family `(G(η)(y))` over `d ↓ f`.
pub fn unit_right(f: &CatFunctor, g: &SetFunctor) -> Result<SetNatTrans> {
    let pulled = pullback(f, g)?;
    let kan = right_kan_data(f, &pulled)?;
    let components = (0..f.target().object_count())
        .map(|d| {
            (0..g.size(d))
                .map(|y| {
                    let fam: Vec<usize> = kan.flows[d].objects.iter().map(|&(_, eta)| g.apply(eta, y)).collect();
                    kan.family(d, &fam).expect("transported elements are compatible")
                })
                .collect()
        })
        .collect();
    SetNatTrans::new(g.clone(), kan.functor, components)
}

/// `Δ_f Π_f F ⇒ F`: a family over `f(b) ↓ f` goes to its entry at `(b, id)`.
pub fn counit_right(f: &CatFunctor, functor: &SetFunctor) -> Result<SetNatTrans> {
    let kan = right_kan_data(f, functor)?;
    let d_cat = f.target();
    let components = (0..f.source().object_count())
        .map(|b| {
            let d = f.obj(b);
            let node = kan.flows[d]
                .node(b, d_cat.identity(d))
                .expect("(b, id) is a flow object");
            kan.families[d].iter().map(|fam| fam[node]).collect()
        })
        .collect();
    SetNatTrans::new(pullback(f, &kan.functor)?, functor.clone(), components)
}

/// The canonical map `Σ_{g∘f} F ⇒ Σ_g Σ_f F`, sending the class of `x` at
/// `(a, η)` to the class of `[x at (a, id)]` at `(f a, η)`.
pub fn kan_composite_comparison(f: &CatFunctor, g: &CatFunctor, functor: &SetFunctor) -> Result<SetNatTrans> {
    let gf = g.after(f)?;
    let whole = left_kan_data(&gf, functor)?;
    let inner = left_kan_data(f, functor)?;
    let outer = left_kan_data(g, &inner.functor)?;
    let b_cat = f.target();
    let components = (0..g.target().object_count())
        .map(|c| {
            representatives(&whole.legs[c], whole.functor.size(c))
                .into_iter()
                .map(|(node, x)| {
                    let (a, eta) = whole.flows[c].objects[node];
                    let b = f.obj(a);
                    let inner_class = inner.class(b, a, b_cat.identity(b), x);
                    outer.class(c, b, eta, inner_class)
                })
                .collect()
        })
        .collect();
    SetNatTrans::new(whole.functor, outer.functor, components)
}

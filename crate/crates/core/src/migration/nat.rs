//! Enumeration of natural transformations between set functors, and the
//! adjunction and cofinality checks built on it.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::functor::{is_bijection, same_category, CatFunctor};
use crate::migration::kan::{
    counit_left, counit_right, left_kan_data, pi_components, pullback, pullback_nat, right_kan_data, sigma_components,
    unit_left, unit_right,
};
use crate::migration::limits::colimit;
use crate::setfunctor::{SetFunctor, SetNatTrans};

pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;

/// Cap on candidate families, overridable through `FLOWCAT_ENUM_CAP`.
pub fn enum_cap() -> u64 {
    std::env::var("FLOWCAT_ENUM_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUM_CAP)
}

/// `∏_x |G(x)|^|F(x)|`, the number of unconstrained component families.
pub fn candidate_count(source: &SetFunctor, target: &SetFunctor) -> f64 {
    (0..source.shape().object_count())
        .map(|x| (target.size(x) as f64).powi(source.size(x) as i32))
        .product()
}

/// Every natural transformation `F ⇒ G`, in lexicographic order of the
/// flattened components. Refuses when the candidate count exceeds `cap`.
pub fn enumerate_nat_trans(source: &SetFunctor, target: &SetFunctor, cap: u64) -> Result<Vec<SetNatTrans>> {
    if !same_category(source.shape(), target.shape()) {
        return Err(Error::shape(format!(
            "`{}` and `{}` have different shapes",
            source.name(),
            target.name()
        )));
    }
    let estimate = candidate_count(source, target);
    if estimate > cap as f64 {
        return Err(Error::CapExceeded { estimate, cap });
    }
    let c = source.shape();
    let mut slots = Vec::new();
    let mut slot_of: HashMap<(usize, usize), usize> = HashMap::new();
    for x in 0..c.object_count() {
        for e in 0..source.size(x) {
            slot_of.insert((x, e), slots.len());
            slots.push((x, e));
        }
    }
    // Naturality at (m, e) relates slot (x, e) and slot (y, F(m)(e)); it is
    // checked once both are filled.
    let mut checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); slots.len()];
    for m in 0..c.morphism_count() {
        if c.is_identity(m) {
            continue;
        }
        let (x, y) = (c.source(m), c.target(m));
        for e in 0..source.size(x) {
            let i = slot_of[&(x, e)];
            let j = slot_of[&(y, source.apply(m, e))];
            checks[i.max(j)].push((m, i, j));
        }
    }
    let mut values = vec![0usize; slots.len()];
    let mut found = Vec::new();
    search(0, &slots, &checks, target, &mut values, &mut found);
    found
        .into_iter()
        .map(|values| {
            let mut components: Vec<Vec<usize>> = (0..c.object_count())
                .map(|x| Vec::with_capacity(source.size(x)))
                .collect();
            for (k, &(x, _)) in slots.iter().enumerate() {
                components[x].push(values[k]);
            }
            SetNatTrans::new(source.clone(), target.clone(), components)
        })
        .collect()
}

fn search(
    k: usize,
    slots: &[(usize, usize)],
    checks: &[Vec<(usize, usize, usize)>],
    target: &SetFunctor,
    values: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    if k == slots.len() {
        found.push(values.clone());
        return;
    }
    for v in 0..target.size(slots[k].0) {
        values[k] = v;
        if checks[k]
            .iter()
            .all(|&(m, i, j)| target.apply(m, values[i]) == values[j])
        {
            search(k + 1, slots, checks, target, values, found);
        }
    }
}

/// Outcome of comparing the two sides of an adjunction on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjunctionCheck {
    pub left: usize,
    pub right: usize,
    /// The transpose maps left to right and the inverse transpose undoes it
    /// on both sides.
    pub inverse: bool,
}

impl AdjunctionCheck {
    pub fn holds(&self) -> bool {
        self.left == self.right && self.inverse
    }
}

fn two_sided_inverse(
    left: &[SetNatTrans],
    right: &[SetNatTrans],
    forward: impl Fn(&SetNatTrans) -> Result<SetNatTrans>,
    backward: impl Fn(&SetNatTrans) -> Result<SetNatTrans>,
) -> Result<bool> {
    let right_index: HashMap<&[Vec<usize>], usize> =
        right.iter().enumerate().map(|(i, t)| (t.components(), i)).collect();
    let mut hit = vec![false; right.len()];
    for phi in left {
        let psi = forward(phi)?;
        let Some(&i) = right_index.get(psi.components()) else {
            return Ok(false);
        };
        if std::mem::replace(&mut hit[i], true) || !backward(&psi)?.same_data(phi) {
            return Ok(false);
        }
    }
    for psi in right {
        if !forward(&backward(psi)?)?.same_data(psi) {
            return Ok(false);
        }
    }
    Ok(hit.iter().all(|&h| h))
}

/// `Nat(Σ_f F, G) ≅ Nat(F, Δ_f G)` on one instance, `F` on the source of
/// `f` and `G` on its target.
pub fn check_left_adjunction(
    f: &CatFunctor,
    functor: &SetFunctor,
    g: &SetFunctor,
    cap: u64,
) -> Result<AdjunctionCheck> {
    let sigma = left_kan_data(f, functor)?;
    let delta_g = pullback(f, g)?;
    let left = enumerate_nat_trans(&sigma.functor, g, cap)?;
    let right = enumerate_nat_trans(functor, &delta_g, cap)?;
    let unit = unit_left(f, functor)?;
    let counit = counit_left(f, g)?;
    let sigma_delta = left_kan_data(f, &delta_g)?;
    let inverse = two_sided_inverse(
        &left,
        &right,
        |phi| unit.then(&pullback_nat(f, phi)?),
        |psi| {
            let components = sigma_components(&sigma, &sigma_delta, psi);
            SetNatTrans::new(sigma.functor.clone(), sigma_delta.functor.clone(), components)?.then(&counit)
        },
    )?;
    Ok(AdjunctionCheck {
        left: left.len(),
        right: right.len(),
        inverse,
    })
}

/// `Nat(Δ_f G, F) ≅ Nat(G, Π_f F)` on one instance, `G` on the target of
/// `f` and `F` on its source.
pub fn check_right_adjunction(
    f: &CatFunctor,
    g: &SetFunctor,
    functor: &SetFunctor,
    cap: u64,
) -> Result<AdjunctionCheck> {
    let pi = right_kan_data(f, functor)?;
    let delta_g = pullback(f, g)?;
    let left = enumerate_nat_trans(&delta_g, functor, cap)?;
    let right = enumerate_nat_trans(g, &pi.functor, cap)?;
    let unit = unit_right(f, g)?;
    let counit = counit_right(f, functor)?;
    let pi_delta = right_kan_data(f, &delta_g)?;
    let inverse = two_sided_inverse(
        &left,
        &right,
        |phi| {
            let components = pi_components(&pi_delta, &pi, phi);
            unit.then(&SetNatTrans::new(
                pi_delta.functor.clone(),
                pi.functor.clone(),
                components,
            )?)
        },
        |psi| pullback_nat(f, psi)?.then(&counit),
    )?;
    Ok(AdjunctionCheck {
        left: left.len(),
        right: right.len(),
        inverse,
    })
}

/// The map `colim Δ_f F → colim F` induced by the colimit cocone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColimitComparison {
    pub map: Vec<usize>,
    pub target_size: usize,
}

impl ColimitComparison {
    pub fn is_bijective(&self) -> bool {
        is_bijection(&self.map, self.target_size)
    }
}

pub fn colimit_comparison(f: &CatFunctor, functor: &SetFunctor) -> Result<ColimitComparison> {
    let pulled = pullback(f, functor)?;
    let small = colimit(&pulled);
    let big = colimit(functor);
    let mut map = vec![usize::MAX; small.apex.len()];
    for (x, leg) in small.legs.iter().enumerate() {
        for (e, &class) in leg.iter().enumerate() {
            map[class] = big.legs[f.obj(x)][e];
        }
    }
    Ok(ColimitComparison {
        map,
        target_size: big.apex.len(),
    })
}

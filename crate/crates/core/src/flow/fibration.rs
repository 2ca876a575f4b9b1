//! Cocartesian morphisms, opfibrations and cofinal functors, decided by
//! exhaustive enumeration.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flow::slice::comma_from_shape;
use crate::functor::CatFunctor;

/// Whether `phi : a → a'` is `f`-cocartesian: every `φ' : a → x` with
/// `f(φ') = ψ∘f(φ)` factors as `ψ̃∘φ` for exactly one `ψ̃` over `ψ`.
pub fn is_cocartesian(f: &CatFunctor, phi: usize) -> Result<bool> {
    let a_cat = f.source();
    if phi >= a_cat.morphism_count() {
        return Err(Error::UnknownMorphism {
            name: phi.to_string(),
            context: a_cat.name().to_string(),
        });
    }
    Ok(cocartesian(f, phi))
}

fn cocartesian(f: &CatFunctor, phi: usize) -> bool {
    let (a_cat, b_cat) = (f.source(), f.target());
    let (a, a2) = (a_cat.source(phi), a_cat.target(phi));
    let fphi = f.mor(phi);
    for &phi2 in a_cat.outgoing(a) {
        let x = a_cat.target(phi2);
        for &psi in b_cat.hom(f.obj(a2), f.obj(x)) {
            if b_cat.comp(psi, fphi) != f.mor(phi2) {
                continue;
            }
            let lifts = a_cat
                .hom(a2, x)
                .iter()
                .filter(|&&lift| f.mor(lift) == psi && a_cat.comp(lift, phi) == phi2)
                .count();
            if lifts != 1 {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpfibrationVerdict {
    pub holds: bool,
    /// `(a, β : f(a) → y)` ↦ the lowest-index cocartesian lift of `β` at `a`.
    pub lifts: BTreeMap<(usize, usize), usize>,
    /// The first `(a, β)` without a cocartesian lift.
    pub missing: Option<(usize, usize)>,
}

pub fn is_opfibration(f: &CatFunctor) -> OpfibrationVerdict {
    let (a_cat, b_cat) = (f.source(), f.target());
    let is_cc: Vec<bool> = (0..a_cat.morphism_count()).map(|m| cocartesian(f, m)).collect();
    let mut lifts = BTreeMap::new();
    let mut missing = None;
    'objects: for a in 0..a_cat.object_count() {
        for &beta in b_cat.outgoing(f.obj(a)) {
            let lift = a_cat
                .outgoing(a)
                .iter()
                .copied()
                .filter(|&m| f.mor(m) == beta && is_cc[m])
                .min();
            match lift {
                Some(m) => {
                    lifts.insert((a, beta), m);
                }
                None => {
                    missing = Some((a, beta));
                    break 'objects;
                }
            }
        }
    }
    OpfibrationVerdict {
        holds: missing.is_none(),
        lifts,
        missing,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CofinalityVerdict {
    pub holds: bool,
    /// Number of connected components of `d ↓ f` for each object `d`.
    pub components: Vec<usize>,
}

impl CofinalityVerdict {
    /// The first object whose coslice is empty or disconnected.
    pub fn witness(&self) -> Option<usize> {
        self.components.iter().position(|&n| n != 1)
    }
}

pub fn is_cofinal(f: &CatFunctor) -> CofinalityVerdict {
    let components: Vec<usize> = (0..f.target().object_count())
        .map(|d| comma_from_shape(f, d).component_count())
        .collect();
    CofinalityVerdict {
        holds: components.iter().all(|&n| n == 1),
        components,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{CatRef, CategoryBuilder, FinCategory};
    use std::sync::Arc;

    fn two() -> CatRef {
        let mut b = CategoryBuilder::new("2", ["0", "1"]);
        b.arrow("u", 0, 1);
        Arc::new(b.build().unwrap())
    }

    #[test]
    fn identities_are_cocartesian() {
        let t = two();
        let id = CatFunctor::identity(&t);
        for m in 0..3 {
            assert!(is_cocartesian(&id, m).unwrap());
        }
        assert!(is_opfibration(&id).holds);
        assert!(is_cocartesian(&id, 9).is_err());
    }

    #[test]
    fn parallel_pair_to_point() {
        let mut b = CategoryBuilder::new("P", ["p", "q"]);
        let alpha = b.arrow("alpha", 0, 1);
        b.arrow("beta", 0, 1);
        let pp: CatRef = Arc::new(b.build().unwrap());
        let point: CatRef = Arc::new(FinCategory::point());
        let f = CatFunctor::constant(&pp, &point, 0);
        assert!(!is_cocartesian(&f, alpha).unwrap());
        assert!(is_cocartesian(&f, 0).unwrap());
    }

    #[test]
    fn point_into_interval_is_not_an_opfibration() {
        let t = two();
        let v = is_opfibration(&CatFunctor::point_at(&t, 0));
        assert!(!v.holds);
        assert_eq!(v.missing, Some((0, 2)));
    }

    #[test]
    fn cofinality_of_inclusions() {
        let t = two();
        assert!(is_cofinal(&CatFunctor::identity(&t)).holds);
        assert!(is_cofinal(&CatFunctor::point_at(&t, 1)).holds);
        let v = is_cofinal(&CatFunctor::point_at(&t, 0));
        assert!(!v.holds);
        assert_eq!(v.components, vec![1, 0]);
        assert_eq!(v.witness(), Some(1));
    }
}

//! Sampled exactness checks for lax squares.

use serde::Serialize;

use crate::basechange::base_change::{base_change_left, base_change_right};
use crate::error::{Error, Result};
use crate::flow::fibration::is_opfibration;
use crate::flow::product::{fibre_product, flow_product_mediator};
use crate::flow::square::LaxSquare;
use crate::functor::{is_bijection, same_category};
use crate::setfunctor::{SetFunctor, SetNatTrans};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Directions {
    Left,
    Right,
    Both,
}

impl Directions {
    fn includes(self, d: Direction) -> bool {
        matches!(
            (self, d),
            (Directions::Both, _) | (Directions::Left, Direction::Left) | (Directions::Right, Direction::Right)
        )
    }
}

/// A component that is not a bijection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub object: String,
    pub source_size: usize,
    pub target_size: usize,
    /// Image of each source element.
    pub images: Vec<usize>,
}

impl Witness {
    fn of(eta: &SetNatTrans) -> Option<Witness> {
        let x = eta.first_non_bijective()?;
        Some(Witness {
            object: eta.source().shape().object_name(x).to_string(),
            source_size: eta.source().size(x),
            target_size: eta.target().size(x),
            images: eta.component(x).to_vec(),
        })
    }

    /// Whether the recorded component is really not a bijection.
    pub fn reverifies(&self) -> bool {
        !is_bijection(&self.images, self.target_size) && self.images.len() == self.source_size
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleVerdict {
    pub sample: usize,
    pub direction: Direction,
    pub iso: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub square: String,
    pub verdicts: Vec<SampleVerdict>,
    /// Samples that matched no requested direction.
    pub skipped: Vec<String>,
}

impl ExactnessReport {
    pub fn all_iso(&self) -> bool {
        self.verdicts.iter().all(|v| v.iso)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SampleVerdict> {
        self.verdicts.iter().filter(|v| !v.iso)
    }
}

/// Runs the requested base changes on every sample whose shape fits: `B`
/// for the left direction, `C` for the right one.
pub fn verify_square(sq: &LaxSquare, samples: &[SetFunctor], directions: Directions) -> Result<ExactnessReport> {
    let mut verdicts = Vec::new();
    let mut skipped = Vec::new();
    for (i, sample) in samples.iter().enumerate() {
        let mut used = false;
        for direction in [Direction::Left, Direction::Right] {
            let foot = match direction {
                Direction::Left => sq.b(),
                Direction::Right => sq.c(),
            };
            if !directions.includes(direction) || !same_category(sample.shape(), foot) {
                continue;
            }
            used = true;
            let eta = match direction {
                Direction::Left => base_change_left(sq, sample)?,
                Direction::Right => base_change_right(sq, sample)?,
            };
            let witness = Witness::of(&eta);
            verdicts.push(SampleVerdict {
                sample: i,
                direction,
                iso: witness.is_none(),
                witness,
            });
        }
        if !used {
            skipped.push(format!(
                "sample {i} (`{}` on `{}`) fits no requested direction",
                sample.name(),
                sample.shape().name()
            ));
        }
    }
    Ok(ExactnessReport {
        square: sq.name().to_string(),
        verdicts,
        skipped,
    })
}

/// Whether `sq` is a strict fibre-product square: identity components and
/// the mediator into the flow product is an isomorphism onto the fibre
/// product.
pub fn is_fibre_product_square(sq: &LaxSquare) -> Result<bool> {
    if !sq.alpha().is_identity() {
        return Ok(false);
    }
    let fib = fibre_product(sq.f(), sq.g())?;
    let med = flow_product_mediator(sq, &fib.flow)?;
    let onto = |map: &[usize], image: &[usize], total: usize| {
        let mut position = vec![usize::MAX; total];
        for (i, &y) in image.iter().enumerate() {
            position[y] = i;
        }
        let local: Vec<usize> = map.iter().map(|&y| position[y]).collect();
        local.iter().all(|&y| y != usize::MAX) && is_bijection(&local, image.len())
    };
    let fp = fib.flow.category();
    Ok(onto(med.object_map(), fib.inclusion.object_map(), fp.object_count())
        && onto(med.morphism_map(), fib.inclusion.morphism_map(), fp.morphism_count()))
}

/// Left exactness of a fibre-product square whose `f` is an opfibration.
/// Squares outside that case are refused, not failed.
pub fn verify_opfibration_case(sq: &LaxSquare, samples: &[SetFunctor]) -> Result<ExactnessReport> {
    if !is_fibre_product_square(sq)? {
        return Err(Error::Refused(format!(
            "`{}` is not a strict fibre-product square",
            sq.name()
        )));
    }
    let verdict = is_opfibration(sq.f());
    if let Some((a, beta)) = verdict.missing {
        return Err(Error::Refused(format!(
            "`{}` is not an opfibration: `{}` out of the image of `{}` has no cocartesian lift",
            sq.f().name(),
            sq.d().morphism_name(beta),
            sq.b().object_name(a)
        )));
    }
    verify_square(sq, samples, Directions::Left)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{CatRef, CategoryBuilder, FinCategory};
    use crate::flow::product::flow_product;
    use crate::functor::CatFunctor;
    use std::sync::Arc;

    fn two() -> CatRef {
        let mut b = CategoryBuilder::new("2", ["0", "1"]);
        b.arrow("u", 0, 1);
        Arc::new(b.build().unwrap())
    }

    fn point() -> CatRef {
        Arc::new(FinCategory::point())
    }

    #[test]
    fn failure_square_has_a_reverifying_witness() {
        let t = two();
        let fib = fibre_product(&CatFunctor::point_at(&t, 0), &CatFunctor::point_at(&t, 1)).unwrap();
        let one = SetFunctor::constant("F", point(), vec!["*".into()]).unwrap();
        let report = verify_square(&fib.square, &[one], Directions::Both).unwrap();
        assert_eq!(report.verdicts.len(), 2);
        assert!(!report.all_iso());
        for v in report.failures() {
            let w = v.witness.as_ref().unwrap();
            assert_eq!(w.object, "*");
            assert!(w.reverifies());
        }
    }

    #[test]
    fn mismatched_samples_are_skipped() {
        let t = two();
        let fp = flow_product(&CatFunctor::point_at(&t, 0), &CatFunctor::point_at(&t, 1)).unwrap();
        let g = SetFunctor::constant("G", t, vec!["x".into()]).unwrap();
        let report = verify_square(&fp.square, &[g], Directions::Both).unwrap();
        assert!(report.verdicts.is_empty());
        assert_eq!(report.skipped.len(), 1);
    }

    #[test]
    fn opfibration_case_refusals() {
        let t = two();
        let id = CatFunctor::identity(&t);
        let fib = fibre_product(&id, &id).unwrap();
        let g = SetFunctor::constant("G", t.clone(), vec!["x".into(), "y".into()]).unwrap();
        assert!(verify_opfibration_case(&fib.square, &[g]).unwrap().all_iso());

        let p = point();
        let fib = fibre_product(&CatFunctor::point_at(&t, 0), &CatFunctor::identity(&t)).unwrap();
        let f = SetFunctor::constant("F", p, vec!["x".into()]).unwrap();
        assert!(matches!(
            verify_opfibration_case(&fib.square, &[f.clone()]),
            Err(Error::Refused(_))
        ));

        let fp = flow_product(&CatFunctor::point_at(&t, 0), &CatFunctor::point_at(&t, 1)).unwrap();
        assert!(matches!(
            verify_opfibration_case(&fp.square, &[f]),
            Err(Error::Refused(_))
        ));
    }
}

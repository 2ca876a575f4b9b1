//! The seeded exactness suite: canonical flow-product and flow-sum squares
//! over random cospans and spans, which must be exact, and the empty
//! fibre-product square, which must not be.

use std::sync::Arc;

use serde::Serialize;

use crate::basechange::verify::{verify_square, Directions, ExactnessReport};
use crate::category::{CatRef, CategoryBuilder, FinCategory};
use crate::error::Result;
use crate::flow::product::flow_product;
use crate::flow::square::LaxSquare;
use crate::flow::sum::flow_sum;
use crate::functor::CatFunctor;
use crate::random::{random_cospan, random_samples, random_span, rng, Bounds};
use crate::setfunctor::SetFunctor;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Squares per family.
    pub squares: usize,
    /// Sampled functors per foot and square.
    pub samples: usize,
    pub bounds: Bounds,
    pub directions: Directions,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            squares: 100,
            samples: 20,
            bounds: Bounds::default(),
            directions: Directions::Both,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    FlowProduct,
    FlowSum,
    /// Expected to fail.
    EmptyPullback,
}

/// A square and the samples it is checked on: functors on `B` first, then on
/// `C`.
#[derive(Debug, Clone)]
pub struct Case {
    pub family: Family,
    pub index: usize,
    pub square: LaxSquare,
    pub samples: Vec<SetFunctor>,
}

const PRODUCT_STREAM: u64 = 1 << 32;
const SUM_STREAM: u64 = 2 << 32;
const SAMPLE_OFFSET: u64 = 1 << 31;

fn samples_for(sq: &LaxSquare, seed: u64, stream: u64, config: &SuiteConfig) -> Vec<SetFunctor> {
    let mut r = rng(seed, stream + SAMPLE_OFFSET);
    let max = config.bounds.max_set_size;
    let mut out = random_samples(&mut r, "F", sq.b(), config.samples, max);
    out.extend(random_samples(&mut r, "G", sq.c(), config.samples, max));
    out
}

/// The canonical flow-product square of random cospan number `index`.
pub fn flow_product_case(config: &SuiteConfig, index: usize) -> Result<Case> {
    let stream = PRODUCT_STREAM + index as u64;
    let cospan = random_cospan(&mut rng(config.seed, stream), config.bounds);
    let square = flow_product(&cospan.right, &cospan.left)?
        .square
        .renamed(format!("flow-product-{index}"));
    let samples = samples_for(&square, config.seed, stream, config);
    Ok(Case {
        family: Family::FlowProduct,
        index,
        square,
        samples,
    })
}

/// The canonical flow-sum square of random span number `index`.
pub fn flow_sum_case(config: &SuiteConfig, index: usize) -> Result<Case> {
    let stream = SUM_STREAM + index as u64;
    let span = random_span(&mut rng(config.seed, stream), config.bounds);
    let square = flow_sum(&span.right, &span.left)?
        .square
        .renamed(format!("flow-sum-{index}"));
    let samples = samples_for(&square, config.seed, stream, config);
    Ok(Case {
        family: Family::FlowSum,
        index,
        square,
        samples,
    })
}

/// The fibre product of `f : * → 2` at `0` and `g : * → 2` at `1`: the apex
/// is empty, so the square commutes strictly but is not exact.
pub fn empty_pullback_square() -> LaxSquare {
    let mut two = CategoryBuilder::new("2", ["0", "1"]);
    two.arrow("u", 0, 1);
    let two: CatRef = Arc::new(two.build().expect("2 is a category"));
    let point: CatRef = Arc::new(FinCategory::point());
    let empty: CatRef = Arc::new(FinCategory::empty());
    let s = CatFunctor::new("s", empty.clone(), point.clone(), vec![], vec![]).expect("empty functor");
    let t = CatFunctor::new("t", empty, point, vec![], vec![]).expect("empty functor");
    let f = CatFunctor::point_at(&two, 0).renamed("f");
    let g = CatFunctor::point_at(&two, 1).renamed("g");
    LaxSquare::new("empty-pullback", s, t, f, g, vec![]).expect("the square commutes vacuously")
}

/// The empty fibre-product square with the singleton on both feet.
pub fn empty_pullback_case() -> Case {
    let square = empty_pullback_square();
    let one = |name: &str, c: &CatRef| SetFunctor::constant(name, c.clone(), vec!["*".to_string()]).expect("singleton");
    let samples = vec![one("F", square.b()), one("G", square.c())];
    Case {
        family: Family::EmptyPullback,
        index: 0,
        square,
        samples,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub family: Family,
    pub index: usize,
    pub report: ExactnessReport,
}

impl CaseReport {
    /// Exact squares are all iso; the empty-pullback square must fail on its
    /// left sample with a witness that reverifies.
    pub fn as_expected(&self) -> bool {
        match self.family {
            Family::EmptyPullback => self
                .report
                .failures()
                .any(|v| v.witness.as_ref().is_some_and(|w| w.reverifies())),
            _ => self.report.all_iso(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub cases: Vec<CaseReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(CaseReport::as_expected)
    }
}

pub fn check_case(case: &Case, directions: Directions) -> Result<CaseReport> {
    Ok(CaseReport {
        family: case.family,
        index: case.index,
        report: verify_square(&case.square, &case.samples, directions)?,
    })
}

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let mut cases = Vec::with_capacity(2 * config.squares + 1);
    for i in 0..config.squares {
        cases.push(check_case(&flow_product_case(config, i)?, config.directions)?);
    }
    for i in 0..config.squares {
        cases.push(check_case(&flow_sum_case(config, i)?, config.directions)?);
    }
    cases.push(check_case(&empty_pullback_case(), config.directions)?);
    Ok(SuiteReport { cases })
}

//! Spans, cospans and lax squares.

use crate::category::CatRef;
use crate::error::{Error, Result};
use crate::functor::{same_category, validate_cat_nat_trans, CatFunctor, CatNatTrans};

/// `C ← A → B`: `left : A → C`, `right : A → B`.
#[derive(Debug, Clone)]
pub struct Span {
    pub left: CatFunctor,
    pub right: CatFunctor,
}

impl Span {
    pub fn new(left: CatFunctor, right: CatFunctor) -> Result<Self> {
        if !same_category(left.source(), right.source()) {
            return Err(Error::structural(format!(
                "span legs `{}` and `{}` do not share a source",
                left.name(),
                right.name()
            )));
        }
        Ok(Span { left, right })
    }

    pub fn apex(&self) -> &CatRef {
        self.left.source()
    }
}

/// `C → D ← B`: `left : C → D`, `right : B → D`.
#[derive(Debug, Clone)]
pub struct Cospan {
    pub left: CatFunctor,
    pub right: CatFunctor,
}

impl Cospan {
    pub fn new(left: CatFunctor, right: CatFunctor) -> Result<Self> {
        if !same_category(left.target(), right.target()) {
            return Err(Error::structural(format!(
                "cospan legs `{}` and `{}` do not share a target",
                left.name(),
                right.name()
            )));
        }
        Ok(Cospan { left, right })
    }

    pub fn apex(&self) -> &CatRef {
        self.left.target()
    }
}

/// A square
///
/// ```text
///      s
///   A ───> B
///   │      │
///  t│  ⇒α  │f
///   v      v
///   C ───> D
///      g
/// ```
///
/// with `α : f∘s ⇒ g∘t`.
#[derive(Debug, Clone)]
pub struct LaxSquare {
    name: String,
    s: CatFunctor,
    t: CatFunctor,
    f: CatFunctor,
    g: CatFunctor,
    alpha: CatNatTrans,
}

impl LaxSquare {
    pub fn new(
        name: impl Into<String>,
        s: CatFunctor,
        t: CatFunctor,
        f: CatFunctor,
        g: CatFunctor,
        components: Vec<usize>,
    ) -> Result<Self> {
        let name = name.into();
        let boundary = [
            (s.source(), t.source(), "sources of s and t"),
            (s.target(), f.source(), "target of s and source of f"),
            (t.target(), g.source(), "target of t and source of g"),
            (f.target(), g.target(), "targets of f and g"),
        ];
        for (x, y, what) in boundary {
            if !same_category(x, y) {
                return Err(Error::structural(format!(
                    "square `{name}`: {what} differ (`{}` vs `{}`)",
                    x.name(),
                    y.name()
                )));
            }
        }
        let alpha = CatNatTrans::new(f.after(&s)?, g.after(&t)?, components)?;
        let report = validate_cat_nat_trans(&alpha);
        if !report.is_empty() {
            return Err(Error::Invalid {
                kind: "lax square",
                name,
                details: report.to_string(),
            });
        }
        Ok(LaxSquare {
            name,
            s,
            t,
            f,
            g,
            alpha,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn s(&self) -> &CatFunctor {
        &self.s
    }

    pub fn t(&self) -> &CatFunctor {
        &self.t
    }

    pub fn f(&self) -> &CatFunctor {
        &self.f
    }

    pub fn g(&self) -> &CatFunctor {
        &self.g
    }

    pub fn alpha(&self) -> &CatNatTrans {
        &self.alpha
    }

    pub fn a(&self) -> &CatRef {
        self.s.source()
    }

    pub fn b(&self) -> &CatRef {
        self.s.target()
    }

    pub fn c(&self) -> &CatRef {
        self.t.target()
    }

    pub fn d(&self) -> &CatRef {
        self.f.target()
    }

    pub fn span(&self) -> Span {
        Span {
            left: self.t.clone(),
            right: self.s.clone(),
        }
    }

    pub fn cospan(&self) -> Cospan {
        Cospan {
            left: self.g.clone(),
            right: self.f.clone(),
        }
    }

    /// The square with every functor the identity of `c`.
    pub fn identity(c: &CatRef) -> Self {
        let id = CatFunctor::identity(c);
        let components = (0..c.object_count()).map(|x| c.identity(x)).collect();
        LaxSquare::new(
            format!("id[{}]", c.name()),
            id.clone(),
            id.clone(),
            id.clone(),
            id,
            components,
        )
        .expect("identity square is valid")
    }

    /// Same four functors and components, ignoring names.
    pub fn agrees_with(&self, other: &LaxSquare) -> bool {
        self.s.agrees_with(&other.s)
            && self.t.agrees_with(&other.t)
            && self.f.agrees_with(&other.f)
            && self.g.agrees_with(&other.g)
            && self.alpha.components() == other.alpha.components()
    }
}

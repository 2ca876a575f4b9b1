use std::fmt;

use serde::Serialize;

/// The law a [`Violation`] breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    IdentityEndpoints,
    LeftIdentity,
    RightIdentity,
    Totality,
    CompositeEndpoints,
    Associativity,
    PreservesEndpoints,
    PreservesIdentity,
    PreservesComposition,
    ComponentEndpoints,
    Naturality,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::IdentityEndpoints => "identity endpoints",
            Law::LeftIdentity => "left identity",
            Law::RightIdentity => "right identity",
            Law::Totality => "totality",
            Law::CompositeEndpoints => "composite endpoints",
            Law::Associativity => "associativity",
            Law::PreservesEndpoints => "source/target preservation",
            Law::PreservesIdentity => "identity preservation",
            Law::PreservesComposition => "composition preservation",
            Law::ComponentEndpoints => "component endpoints",
            Law::Naturality => "naturality",
        };
        f.write_str(s)
    }
}

/// One broken law, with the ids that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: Law,
    /// Names of the objects or morphisms involved, in the order they appear
    /// in `detail`.
    pub witnesses: Vec<String>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.law, self.detail)
    }
}

/// Result of a law check; empty iff every law holds.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn count(&self, law: Law) -> usize {
        self.violations.iter().filter(|v| v.law == law).count()
    }

    pub(crate) fn push(&mut self, law: Law, witnesses: Vec<String>, detail: String) {
        self.violations.push(Violation { law, witnesses, detail });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

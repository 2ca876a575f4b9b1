//! A registry of named entities loaded from text files, with the file and
//! line each came from.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::Serialize;

use crate::category::{validate_category, CatRef};
use crate::error::{Error, Result};
use crate::flow::square::LaxSquare;
use crate::functor::{validate_functor, CatFunctor};
use crate::report::{Law, Violation};
use crate::setfunctor::{validate_set_functor, SetFunctor};
use crate::text::{first_keyword, parse_catfun, parse_fincat, parse_laxsq, parse_setfun, SourceMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Category,
    Functor,
    SetFunctor,
    Square,
}

impl Kind {
    pub fn of_keyword(keyword: &str) -> Option<Kind> {
        Some(match keyword {
            "category" => Kind::Category,
            "functor" => Kind::Functor,
            "setfunctor" => Kind::SetFunctor,
            "laxsquare" => Kind::Square,
            _ => return None,
        })
    }

    pub fn label(self) -> &'static str {
        match self {
            Kind::Category => "category",
            Kind::Functor => "functor",
            Kind::SetFunctor => "set functor",
            Kind::Square => "lax square",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub file: String,
    pub line: usize,
}

#[derive(Debug, Clone)]
pub struct Entry<T> {
    pub value: T,
    pub provenance: Provenance,
    pub lines: SourceMap,
}

/// A broken law found while loading; the entity is not registered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LoadIssue {
    pub kind: Kind,
    pub name: String,
    pub file: String,
    pub line: usize,
    pub violation: Violation,
}

/// What loading one file produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Loaded {
    pub kind: Kind,
    pub name: String,
    pub file: String,
    pub issues: Vec<LoadIssue>,
}

impl Loaded {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

#[derive(Debug, Clone, Default)]
pub struct Workspace {
    categories: BTreeMap<String, Entry<CatRef>>,
    functors: BTreeMap<String, Entry<CatFunctor>>,
    set_functors: BTreeMap<String, Entry<SetFunctor>>,
    squares: BTreeMap<String, Entry<LaxSquare>>,
}

fn duplicate(kind: Kind, name: &str, file: &str, line: usize, first: &Provenance) -> Error {
    Error::Parse {
        file: file.to_string(),
        line,
        message: format!(
            "{} `{name}` is already defined at {}:{}",
            kind.label(),
            first.file,
            first.line
        ),
    }
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    /// Loads files in dependency order (categories, functors, set functors,
    /// squares), keeping the given order within each kind.
    pub fn load_paths<P: AsRef<Path>>(&mut self, paths: &[P]) -> Result<Vec<Loaded>> {
        let mut files = Vec::with_capacity(paths.len());
        for p in paths {
            let p = p.as_ref();
            let file = p.display().to_string();
            let text = std::fs::read_to_string(p).map_err(|e| Error::Parse {
                file: file.clone(),
                line: 0,
                message: e.to_string(),
            })?;
            let kind = first_keyword(&text)
                .and_then(Kind::of_keyword)
                .ok_or_else(|| Error::Parse {
                    file: file.clone(),
                    line: 1,
                    message: "expected `category`, `functor`, `setfunctor` or `laxsquare`".to_string(),
                })?;
            files.push((kind, file, text));
        }
        files.sort_by_key(|(kind, _, _)| *kind);
        files.iter().map(|(_, file, text)| self.load_text(file, text)).collect()
    }

    /// Parses one entity and registers it if it passes validation. Parse
    /// errors are errors; broken laws come back as issues.
    pub fn load_text(&mut self, file: &str, text: &str) -> Result<Loaded> {
        let kind = first_keyword(text)
            .and_then(Kind::of_keyword)
            .ok_or_else(|| Error::Parse {
                file: file.to_string(),
                line: 1,
                message: "expected `category`, `functor`, `setfunctor` or `laxsquare`".to_string(),
            })?;
        let categories = |n: &str| self.categories.get(n).map(|e| e.value.clone());
        let functors = |n: &str| self.functors.get(n).map(|e| e.value.clone());
        let issues = |name: &str, lines: &SourceMap, violations: Vec<Violation>| -> Vec<LoadIssue> {
            violations
                .into_iter()
                .map(|v| LoadIssue {
                    kind,
                    name: name.to_string(),
                    file: file.to_string(),
                    line: lines.locate(&v),
                    violation: v,
                })
                .collect()
        };
        let (name, found) = match kind {
            Kind::Category => {
                let parsed = parse_fincat(file, text)?;
                let name = parsed.category.name().to_string();
                let found = issues(&name, &parsed.lines, validate_category(&parsed.category).violations);
                if let Some(e) = self.categories.get(&name) {
                    return Err(duplicate(kind, &name, file, parsed.lines.header, &e.provenance));
                }
                if found.is_empty() {
                    self.categories
                        .insert(name.clone(), entry(Arc::new(parsed.category), file, parsed.lines));
                }
                (name, found)
            }
            Kind::Functor => {
                let (f, lines) = parse_catfun(file, text, &categories)?;
                let name = f.name().to_string();
                let found = issues(&name, &lines, validate_functor(&f).violations);
                if let Some(e) = self.functors.get(&name) {
                    return Err(duplicate(kind, &name, file, lines.header, &e.provenance));
                }
                if found.is_empty() {
                    self.functors.insert(name.clone(), entry(f, file, lines));
                }
                (name, found)
            }
            Kind::SetFunctor => {
                let (f, lines) = parse_setfun(file, text, &categories)?;
                let name = f.name().to_string();
                let found = issues(&name, &lines, validate_set_functor(&f).violations);
                if let Some(e) = self.set_functors.get(&name) {
                    return Err(duplicate(kind, &name, file, lines.header, &e.provenance));
                }
                if found.is_empty() {
                    self.set_functors.insert(name.clone(), entry(f, file, lines));
                }
                (name, found)
            }
            Kind::Square => match parse_laxsq(file, text, &functors) {
                Ok((sq, lines)) => {
                    let name = sq.name().to_string();
                    if let Some(e) = self.squares.get(&name) {
                        return Err(duplicate(kind, &name, file, lines.header, &e.provenance));
                    }
                    self.squares.insert(name.clone(), entry(sq, file, lines));
                    (name, Vec::new())
                }
                Err(Error::Invalid { name, details, .. }) => {
                    let line = first_line_of(text);
                    let issue = LoadIssue {
                        kind,
                        name: name.clone(),
                        file: file.to_string(),
                        line,
                        violation: Violation {
                            law: Law::Naturality,
                            witnesses: Vec::new(),
                            detail: details,
                        },
                    };
                    (name, vec![issue])
                }
                Err(e) => return Err(e),
            },
        };
        Ok(Loaded {
            kind,
            name,
            file: file.to_string(),
            issues: found,
        })
    }

    pub fn category(&self, name: &str) -> Result<&CatRef> {
        get(&self.categories, Kind::Category, name)
    }

    pub fn functor(&self, name: &str) -> Result<&CatFunctor> {
        get(&self.functors, Kind::Functor, name)
    }

    pub fn set_functor(&self, name: &str) -> Result<&SetFunctor> {
        get(&self.set_functors, Kind::SetFunctor, name)
    }

    pub fn square(&self, name: &str) -> Result<&LaxSquare> {
        get(&self.squares, Kind::Square, name)
    }

    pub fn provenance(&self, kind: Kind, name: &str) -> Option<&Provenance> {
        match kind {
            Kind::Category => self.categories.get(name).map(|e| &e.provenance),
            Kind::Functor => self.functors.get(name).map(|e| &e.provenance),
            Kind::SetFunctor => self.set_functors.get(name).map(|e| &e.provenance),
            Kind::Square => self.squares.get(name).map(|e| &e.provenance),
        }
    }

    pub fn categories(&self) -> impl Iterator<Item = &CatRef> {
        self.categories.values().map(|e| &e.value)
    }

    pub fn functors(&self) -> impl Iterator<Item = &CatFunctor> {
        self.functors.values().map(|e| &e.value)
    }

    pub fn set_functors(&self) -> impl Iterator<Item = &SetFunctor> {
        self.set_functors.values().map(|e| &e.value)
    }

    pub fn squares(&self) -> impl Iterator<Item = &LaxSquare> {
        self.squares.values().map(|e| &e.value)
    }
}

fn entry<T>(value: T, file: &str, lines: SourceMap) -> Entry<T> {
    Entry {
        value,
        provenance: Provenance {
            file: file.to_string(),
            line: lines.header,
        },
        lines,
    }
}

fn get<'a, T>(map: &'a BTreeMap<String, Entry<T>>, kind: Kind, name: &str) -> Result<&'a T> {
    map.get(name).map(|e| &e.value).ok_or_else(|| Error::UnknownEntity {
        kind: kind.label(),
        name: name.to_string(),
    })
}

fn first_line_of(text: &str) -> usize {
    text.lines()
        .position(|l| !l.split('#').next().unwrap_or("").trim().is_empty())
        .map_or(1, |i| i + 1)
}

//! Line-oriented text formats.
//!
//! ```text
//! category 2                     functor f : 2 -> 3
//! object 0                       object 0 |-> a
//! object 1                       arrow u |-> ab
//! arrow u : 0 -> 1
//! compose v . u = vu             setfunctor F on 2
//!                                object 0 |-> { x, y }
//! laxsquare sq                   arrow u |-> { x -> z, y -> z }
//! categories A B C D
//! span s t
//! cospan f g
//! alpha
//! component a = m
//! ```
//!
//! `#` starts a comment. Identities are implicit and named `id_<object>`;
//! composites with identities are synthesized. In functor and set functor
//! files, arrows that are composites of listed ones may be left out.

use std::collections::HashMap;
use std::fmt::Write;

use crate::category::{fill_by_composition, identity_name, CatRef, CategoryBuilder, FinCategory};
use crate::error::{Error, Result};
use crate::flow::square::LaxSquare;
use crate::functor::CatFunctor;
use crate::report::Violation;
use crate::setfunctor::SetFunctor;

/// Where the ids of one parsed entity were declared.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SourceMap {
    pub header: usize,
    ids: HashMap<String, usize>,
    pairs: HashMap<(String, String), usize>,
}

impl SourceMap {
    fn new(header: usize) -> Self {
        SourceMap {
            header,
            ..Default::default()
        }
    }

    pub fn line_of(&self, id: &str) -> Option<usize> {
        self.ids.get(id).copied()
    }

    /// Best line for a law violation: the `compose` line of a pair of its
    /// witnesses, else the declaration of the first declared witness, else
    /// the header.
    pub fn locate(&self, v: &Violation) -> usize {
        let w = &v.witnesses;
        for i in 0..w.len() {
            for j in 0..w.len() {
                if let Some(&l) = self.pairs.get(&(w[i].clone(), w[j].clone())) {
                    return l;
                }
            }
        }
        w.iter().find_map(|x| self.line_of(x)).unwrap_or(self.header)
    }
}

fn parse_error(file: &str, line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        file: file.to_string(),
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// The first keyword of a file, which names its kind.
pub fn first_keyword(text: &str) -> Option<&str> {
    content_lines(text)
        .next()
        .and_then(|(_, l)| l.split_whitespace().next())
}

fn header<'a>(file: &str, text: &'a str, keyword: &str) -> Result<(usize, Vec<&'a str>)> {
    let (n, l) = content_lines(text)
        .next()
        .ok_or_else(|| parse_error(file, 1, format!("empty file, expected `{keyword} ...`")))?;
    let tokens: Vec<&str> = l.split_whitespace().collect();
    if tokens[0] != keyword {
        return Err(parse_error(
            file,
            n,
            format!("expected `{keyword}`, found `{}`", tokens[0]),
        ));
    }
    Ok((n, tokens))
}

fn body(text: &str) -> impl Iterator<Item = (usize, &str)> {
    content_lines(text).skip(1)
}

/// Splits at commas outside parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    let last = s[start..].trim();
    if !last.is_empty() || !out.is_empty() {
        out.push(last);
    }
    out
}

/// The contents of `{ ... }`.
fn braced<'a>(file: &str, line: usize, s: &'a str) -> Result<&'a str> {
    s.trim()
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| parse_error(file, line, format!("expected `{{ ... }}`, found `{}`", s.trim())))
}

/// `<kw> <id> |-> <rest>`.
fn maps_to<'a>(file: &str, line: usize, l: &'a str) -> Result<(&'a str, &'a str)> {
    let (lhs, rhs) = l
        .split_once("|->")
        .ok_or_else(|| parse_error(file, line, "expected `|->`"))?;
    let lhs: Vec<&str> = lhs.split_whitespace().collect();
    if lhs.len() != 2 {
        return Err(parse_error(file, line, "expected a single id before `|->`"));
    }
    Ok((lhs[1], rhs.trim()))
}

/// A parsed category, possibly breaking category laws.
#[derive(Debug, Clone)]
pub struct ParsedCategory {
    pub category: FinCategory,
    pub lines: SourceMap,
}

pub fn parse_fincat(file: &str, text: &str) -> Result<ParsedCategory> {
    let (h, tokens) = header(file, text, "category")?;
    if tokens.len() != 2 {
        return Err(parse_error(file, h, "expected `category <name>`"));
    }
    let mut map = SourceMap::new(h);
    let mut objects: Vec<String> = Vec::new();
    let mut arrows: Vec<(String, String, String, usize)> = Vec::new();
    let mut composes: Vec<([String; 3], usize)> = Vec::new();
    let mut declared: [HashMap<String, usize>; 2] = Default::default();
    for (n, l) in body(text) {
        let t: Vec<&str> = l.split_whitespace().collect();
        match t.as_slice() {
            ["object", x] => {
                if let Some(first) = declared[0].insert(x.to_string(), n) {
                    return Err(parse_error(file, n, format!("duplicate object `{x}`, first declared on line {first}")));
                }
                map.ids.insert(x.to_string(), n);
                objects.push(x.to_string());
            }
            ["arrow", m, ":", x, "->", y] => {
                if let Some(first) = declared[1].insert(m.to_string(), n) {
                    return Err(parse_error(file, n, format!("duplicate arrow `{m}`, first declared on line {first}")));
                }
                map.ids.insert(m.to_string(), n);
                arrows.push((m.to_string(), x.to_string(), y.to_string(), n));
            }
            ["compose", g, ".", f, "=", h] => composes.push(([g.to_string(), f.to_string(), h.to_string()], n)),
            _ => {
                return Err(parse_error(
                    file,
                    n,
                    format!("cannot read `{l}`; expected `object <id>`, `arrow <id> : <src> -> <tgt>` or `compose <g> . <f> = <h>`"),
                ))
            }
        }
    }

    let object_index: HashMap<&str, usize> = objects.iter().enumerate().map(|(i, o)| (o.as_str(), i)).collect();
    let mut builder = CategoryBuilder::new(tokens[1], objects.iter().cloned());
    let mut morphism_index: HashMap<String, usize> = HashMap::new();
    let mut endpoints: Vec<(usize, usize)> = Vec::new();
    for (i, o) in objects.iter().enumerate() {
        let id = identity_name(o);
        if let Some(&l) = declared[1].get(&id) {
            return Err(parse_error(
                file,
                l,
                format!("`{id}` is reserved for the identity of `{o}`"),
            ));
        }
        morphism_index.insert(id, i);
        endpoints.push((i, i));
    }
    for (m, x, y, n) in &arrows {
        let resolve = |o: &str| {
            object_index
                .get(o)
                .copied()
                .ok_or_else(|| parse_error(file, *n, format!("unknown object `{o}`")))
        };
        let (x, y) = (resolve(x)?, resolve(y)?);
        morphism_index.insert(m.clone(), builder.arrow(m.clone(), x, y));
        endpoints.push((x, y));
    }
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    for ([g, f, h], n) in &composes {
        let resolve = |m: &str| {
            morphism_index
                .get(m)
                .copied()
                .ok_or_else(|| parse_error(file, *n, format!("unknown arrow `{m}`")))
        };
        let (gi, fi, hi) = (resolve(g)?, resolve(f)?, resolve(h)?);
        if endpoints[fi].1 != endpoints[gi].0 {
            return Err(parse_error(file, *n, format!("`{g}` . `{f}` is not a composable pair")));
        }
        if let Some(first) = seen.insert((gi, fi), *n) {
            return Err(parse_error(
                file,
                *n,
                format!("`{g}` . `{f}` already defined on line {first}"),
            ));
        }
        map.pairs.insert((g.clone(), f.clone()), *n);
        builder.compose(gi, fi, hi);
    }
    let category = builder.build().map_err(|e| parse_error(file, h, e.to_string()))?;
    Ok(ParsedCategory { category, lines: map })
}

pub fn emit_fincat(c: &FinCategory) -> String {
    let mut out = format!("category {}\n", c.name());
    for o in c.objects() {
        writeln!(out, "object {o}").unwrap();
    }
    for m in 0..c.morphism_count() {
        if !c.is_identity(m) {
            let mor = &c.morphisms()[m];
            writeln!(
                out,
                "arrow {} : {} -> {}",
                mor.name,
                c.object_name(mor.source),
                c.object_name(mor.target)
            )
            .unwrap();
        }
    }
    let mut entries: Vec<_> = c
        .composition_entries()
        .into_iter()
        .filter(|&(g, f, _)| !c.is_identity(g) && !c.is_identity(f))
        .collect();
    entries.sort_unstable();
    for (g, f, h) in entries {
        writeln!(
            out,
            "compose {} . {} = {}",
            c.morphism_name(g),
            c.morphism_name(f),
            c.morphism_name(h)
        )
        .unwrap();
    }
    out
}

fn lookup<T>(file: &str, line: usize, kind: &str, name: &str, found: Option<T>) -> Result<T> {
    found.ok_or_else(|| parse_error(file, line, format!("unknown {kind} `{name}`")))
}

/// A functor file, read against already loaded categories. The result may
/// break functor laws; only ids and mappings are checked here.
pub fn parse_catfun(
    file: &str,
    text: &str,
    categories: &dyn Fn(&str) -> Option<CatRef>,
) -> Result<(CatFunctor, SourceMap)> {
    let (h, t) = header(file, text, "functor")?;
    let (name, src, tgt) = match t.as_slice() {
        [_, name, ":", a, "->", b] => (*name, *a, *b),
        _ => return Err(parse_error(file, h, "expected `functor <name> : <source> -> <target>`")),
    };
    let source = lookup(file, h, "category", src, categories(src))?;
    let target = lookup(file, h, "category", tgt, categories(tgt))?;
    let mut map = SourceMap::new(h);
    let mut objects = vec![None; source.object_count()];
    let mut arrows = vec![None; source.morphism_count()];
    for (n, l) in body(text) {
        let (x, y) = maps_to(file, n, l)?;
        map.ids.insert(x.to_string(), n);
        let twice = || parse_error(file, n, format!("`{x}` is mapped twice"));
        if l.starts_with("object") {
            let i = lookup(file, n, "object", x, source.object_id(x))?;
            if objects[i]
                .replace(lookup(file, n, "object", y, target.object_id(y))?)
                .is_some()
            {
                return Err(twice());
            }
        } else if l.starts_with("arrow") {
            let i = lookup(file, n, "arrow", x, source.morphism_id(x))?;
            if arrows[i]
                .replace(lookup(file, n, "arrow", y, target.morphism_id(y))?)
                .is_some()
            {
                return Err(twice());
            }
        } else {
            return Err(parse_error(
                file,
                n,
                "expected `object <x> |-> <y>` or `arrow <f> |-> <k>`",
            ));
        }
    }
    let objects: Vec<usize> = objects
        .into_iter()
        .enumerate()
        .map(|(i, y)| {
            y.ok_or_else(|| parse_error(file, h, format!("object `{}` is not mapped", source.object_name(i))))
        })
        .collect::<Result<_>>()?;
    for x in 0..source.object_count() {
        let id = source.identity(x);
        arrows[id].get_or_insert(target.identity(objects[x]));
    }
    fill_by_composition(&source, &mut arrows, |&g, &f| target.compose(g, f));
    let arrows: Vec<usize> = arrows
        .into_iter()
        .enumerate()
        .map(|(i, k)| {
            k.ok_or_else(|| {
                parse_error(
                    file,
                    h,
                    format!(
                        "arrow `{}` is neither mapped nor a composite of mapped arrows",
                        source.morphism_name(i)
                    ),
                )
            })
        })
        .collect::<Result<_>>()?;
    let functor =
        CatFunctor::new(name, source, target, objects, arrows).map_err(|e| parse_error(file, h, e.to_string()))?;
    Ok((functor, map))
}

pub fn emit_catfun(f: &CatFunctor) -> String {
    let (a, b) = (f.source(), f.target());
    let mut out = format!("functor {} : {} -> {}\n", f.name(), a.name(), b.name());
    for x in 0..a.object_count() {
        writeln!(out, "object {} |-> {}", a.object_name(x), b.object_name(f.obj(x))).unwrap();
    }
    for m in 0..a.morphism_count() {
        if !a.is_identity(m) {
            writeln!(out, "arrow {} |-> {}", a.morphism_name(m), b.morphism_name(f.mor(m))).unwrap();
        }
    }
    out
}

/// A set functor file, read against already loaded categories.
pub fn parse_setfun(
    file: &str,
    text: &str,
    categories: &dyn Fn(&str) -> Option<CatRef>,
) -> Result<(SetFunctor, SourceMap)> {
    let (h, t) = header(file, text, "setfunctor")?;
    let (name, shape_name) = match t.as_slice() {
        [_, name, "on", c] => (*name, *c),
        _ => return Err(parse_error(file, h, "expected `setfunctor <name> on <category>`")),
    };
    let shape = lookup(file, h, "category", shape_name, categories(shape_name))?;
    let mut map = SourceMap::new(h);
    let mut sets: Vec<Option<Vec<String>>> = vec![None; shape.object_count()];
    let mut pending: Vec<(usize, usize, Vec<(String, String)>)> = Vec::new();
    let mut arrow_seen = vec![false; shape.morphism_count()];
    for (n, l) in body(text) {
        let (x, rhs) = maps_to(file, n, l)?;
        map.ids.insert(x.to_string(), n);
        let twice = || parse_error(file, n, format!("`{x}` is mapped twice"));
        let inner = braced(file, n, rhs)?;
        if l.starts_with("object") {
            let i = lookup(file, n, "object", x, shape.object_id(x))?;
            let labels: Vec<String> = split_top_level(inner).into_iter().map(str::to_string).collect();
            if sets[i].replace(labels).is_some() {
                return Err(twice());
            }
        } else if l.starts_with("arrow") {
            let m = lookup(file, n, "arrow", x, shape.morphism_id(x))?;
            if std::mem::replace(&mut arrow_seen[m], true) {
                return Err(twice());
            }
            let pairs = split_top_level(inner)
                .into_iter()
                .map(|e| {
                    e.split_once("->")
                        .map(|(a, b)| (a.trim().to_string(), b.trim().to_string()))
                        .ok_or_else(|| parse_error(file, n, format!("expected `<element> -> <element>`, found `{e}`")))
                })
                .collect::<Result<_>>()?;
            pending.push((m, n, pairs));
        } else {
            return Err(parse_error(
                file,
                n,
                "expected `object <x> |-> { ... }` or `arrow <f> |-> { ... }`",
            ));
        }
    }
    let sets: Vec<Vec<String>> = sets
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.ok_or_else(|| parse_error(file, h, format!("object `{}` has no set", shape.object_name(i)))))
        .collect::<Result<_>>()?;
    let index: Vec<HashMap<&str, usize>> = sets
        .iter()
        .map(|s| s.iter().enumerate().map(|(i, e)| (e.as_str(), i)).collect())
        .collect();
    let mut maps: Vec<Option<Vec<usize>>> = vec![None; shape.morphism_count()];
    for (m, n, pairs) in pending {
        let (x, y) = (shape.source(m), shape.target(m));
        let mut image = vec![None; sets[x].len()];
        for (a, b) in &pairs {
            let i = lookup(file, n, "element", a, index[x].get(a.as_str()).copied())?;
            let j = lookup(file, n, "element", b, index[y].get(b.as_str()).copied())?;
            if image[i].replace(j).is_some() {
                return Err(parse_error(file, n, format!("`{a}` is mapped twice")));
            }
        }
        let image: Vec<usize> = image
            .into_iter()
            .enumerate()
            .map(|(i, j)| j.ok_or_else(|| parse_error(file, n, format!("`{}` is not mapped", sets[x][i]))))
            .collect::<Result<_>>()?;
        maps[m] = Some(image);
    }
    for x in 0..shape.object_count() {
        maps[shape.identity(x)].get_or_insert_with(|| (0..sets[x].len()).collect());
    }
    fill_by_composition(&shape, &mut maps, |g, f| f.iter().map(|&e| g.get(e).copied()).collect());
    let maps: Vec<Vec<usize>> = maps
        .into_iter()
        .enumerate()
        .map(|(m, map)| {
            map.ok_or_else(|| {
                parse_error(
                    file,
                    h,
                    format!(
                        "arrow `{}` is neither mapped nor a composite of mapped arrows",
                        shape.morphism_name(m)
                    ),
                )
            })
        })
        .collect::<Result<_>>()?;
    let functor = SetFunctor::new(name, shape, sets, maps).map_err(|e| parse_error(file, h, e.to_string()))?;
    Ok((functor, map))
}

pub fn emit_setfun(f: &SetFunctor) -> String {
    let c = f.shape();
    let mut out = format!("setfunctor {} on {}\n", f.name(), c.name());
    for x in 0..c.object_count() {
        writeln!(out, "object {} |-> {}", c.object_name(x), braces(&f.set(x).join(", "))).unwrap();
    }
    for m in 0..c.morphism_count() {
        if c.is_identity(m) {
            continue;
        }
        let (x, y) = (c.source(m), c.target(m));
        let pairs: Vec<String> = f
            .map(m)
            .iter()
            .enumerate()
            .map(|(i, &j)| format!("{} -> {}", f.set(x)[i], f.set(y)[j]))
            .collect();
        writeln!(out, "arrow {} |-> {}", c.morphism_name(m), braces(&pairs.join(", "))).unwrap();
    }
    out
}

fn braces(items: &str) -> String {
    if items.is_empty() {
        "{ }".to_string()
    } else {
        format!("{{ {items} }}")
    }
}

/// A lax square file, read against already loaded functors. A square whose
/// components break naturality is an [`Error::Invalid`], not a parse error.
pub fn parse_laxsq(
    file: &str,
    text: &str,
    functors: &dyn Fn(&str) -> Option<CatFunctor>,
) -> Result<(LaxSquare, SourceMap)> {
    let (h, head) = header(file, text, "laxsquare")?;
    if head.len() != 2 {
        return Err(parse_error(file, h, "expected `laxsquare <name>`"));
    }
    let mut map = SourceMap::new(h);
    let mut categories: Option<(Vec<String>, usize)> = None;
    let mut span = None;
    let mut cospan = None;
    let mut in_alpha = false;
    let mut components: Vec<(String, String, usize)> = Vec::new();
    for (n, l) in body(text) {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        match tokens.as_slice() {
            ["categories", a, b, c, d] if !in_alpha => {
                categories = Some(([a, b, c, d].map(|x| x.to_string()).to_vec(), n));
            }
            ["span", s, t] if !in_alpha => {
                let s = lookup(file, n, "functor", s, functors(s))?;
                let t = lookup(file, n, "functor", t, functors(t))?;
                span = Some((s, t));
            }
            ["cospan", f, g] if !in_alpha => {
                let f = lookup(file, n, "functor", f, functors(f))?;
                let g = lookup(file, n, "functor", g, functors(g))?;
                cospan = Some((f, g));
            }
            ["alpha"] if !in_alpha => in_alpha = true,
            ["component", a, "=", m] if in_alpha => {
                if map.ids.insert(a.to_string(), n).is_some() {
                    return Err(parse_error(file, n, format!("component at `{a}` given twice")));
                }
                components.push((a.to_string(), m.to_string(), n));
            }
            _ => {
                return Err(parse_error(
                    file,
                    n,
                    format!(
                        "cannot read `{l}`; expected `categories`, `span`, `cospan`, `alpha` or `component <a> = <m>`"
                    ),
                ))
            }
        }
    }
    let (s, t) = span.ok_or_else(|| parse_error(file, h, "missing `span <s> <t>`"))?;
    let (f, g) = cospan.ok_or_else(|| parse_error(file, h, "missing `cospan <f> <g>`"))?;
    if let Some((names, n)) = categories {
        let actual = [
            s.source().name(),
            s.target().name(),
            t.target().name(),
            f.target().name(),
        ];
        if names.iter().zip(actual).any(|(a, b)| a != b) {
            return Err(parse_error(
                file,
                n,
                format!("categories do not match the functors, which give {}", actual.join(" ")),
            ));
        }
    }
    let (a, d) = (s.source().clone(), f.target().clone());
    let mut comps = vec![None; a.object_count()];
    for (x, m, n) in &components {
        let i = lookup(file, *n, "object", x, a.object_id(x))?;
        comps[i] = Some(lookup(file, *n, "arrow", m, d.morphism_id(m))?);
    }
    let comps: Vec<usize> = comps
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.ok_or_else(|| parse_error(file, h, format!("no component at `{}`", a.object_name(i)))))
        .collect::<Result<_>>()?;
    let square = LaxSquare::new(head[1], s, t, f, g, comps).map_err(|e| match e {
        Error::Invalid { .. } => e,
        other => parse_error(file, h, other.to_string()),
    })?;
    Ok((square, map))
}

pub fn emit_laxsq(sq: &LaxSquare) -> String {
    let mut out = format!("laxsquare {}\n", sq.name());
    writeln!(
        out,
        "categories {} {} {} {}",
        sq.a().name(),
        sq.b().name(),
        sq.c().name(),
        sq.d().name()
    )
    .unwrap();
    writeln!(out, "span {} {}", sq.s().name(), sq.t().name()).unwrap();
    writeln!(out, "cospan {} {}", sq.f().name(), sq.g().name()).unwrap();
    out.push_str("alpha\n");
    for x in 0..sq.a().object_count() {
        writeln!(
            out,
            "component {} = {}",
            sq.a().object_name(x),
            sq.d().morphism_name(sq.alpha().component(x))
        )
        .unwrap();
    }
    out
}

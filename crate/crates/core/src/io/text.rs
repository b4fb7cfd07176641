//! Line-oriented text formats for relations, posets, semilattices and graphs.

use crate::demorgan::{Kind, UGraph, UnaryAlgebra};
use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::jsl::Jsl;
use crate::poset::Poset;
use crate::rel::Rel;

struct Line<'a> {
    no: usize,
    key: &'a str,
    args: Vec<&'a str>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn lines<'a>(text: &'a str, keys: &[&str]) -> Result<Vec<Line<'a>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = content.split_once(':').ok_or_else(|| parse_error(no, "expected `key: values`"))?;
        let key = key.trim();
        if !keys.contains(&key) {
            return Err(parse_error(no, format!("unknown directive `{key}`")));
        }
        out.push(Line { no, key, args: rest.split_whitespace().collect() });
    }
    Ok(out)
}

/// The unique header line `key: ...`, as a carrier.
fn header(lines: &[Line], key: &str) -> Result<FinSet> {
    let mut found = lines.iter().filter(|l| l.key == key);
    let first = found.next().ok_or_else(|| parse_error(0, format!("missing `{key}:` line")))?;
    if let Some(dup) = found.next() {
        return Err(parse_error(dup.no, format!("duplicate `{key}:` line")));
    }
    FinSet::new(first.args.iter().copied()).map_err(|e| parse_error(first.no, e.to_string()))
}

fn pairs(lines: &[Line], key: &str, left: &FinSet, right: &FinSet) -> Result<Vec<(usize, usize)>> {
    lines
        .iter()
        .filter(|l| l.key == key)
        .map(|l| {
            if l.args.len() != 2 {
                return Err(parse_error(l.no, format!("`{key}:` expects 2 tokens, found {}", l.args.len())));
            }
            let find = |set: &FinSet, tok: &str| set.index_of(tok).ok_or_else(|| parse_error(l.no, format!("unknown element `{tok}`")));
            Ok((find(left, l.args[0])?, find(right, l.args[1])?))
        })
        .collect()
}

pub fn parse_rel(text: &str) -> Result<Rel> {
    let lines = lines(text, &["source", "target", "pair"])?;
    let (s, t) = (header(&lines, "source")?, header(&lines, "target")?);
    let p = pairs(&lines, "pair", &s, &t)?;
    Ok(Rel::from_pairs(s, t, p))
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let lines = lines(text, &["elements", "leq"])?;
    let e = header(&lines, "elements")?;
    let p = pairs(&lines, "leq", &e, &e)?;
    Poset::from_generators(e, &p)
}

/// The order part of a `.jsl` file; `sigma:` and `kind:` lines are accepted and ignored.
pub fn parse_jsl(text: &str) -> Result<Jsl> {
    let lines = lines(text, &["elements", "leq", "sigma", "kind"])?;
    jsl_of(&lines)
}

fn jsl_of(lines: &[Line]) -> Result<Jsl> {
    let e = header(lines, "elements")?;
    let p = pairs(lines, "leq", &e, &e)?;
    Jsl::from_poset(Poset::from_generators(e, &p)?)
}

/// A `.jsl` file with one `sigma: a b` line per element. `kind:` defaults to `sai`.
pub fn parse_unary_algebra(text: &str) -> Result<UnaryAlgebra> {
    let lines = lines(text, &["elements", "leq", "sigma", "kind"])?;
    let q = jsl_of(&lines)?;
    let mut kinds = lines.iter().filter(|l| l.key == "kind");
    let kind = match kinds.next() {
        None => Kind::Sai,
        Some(l) => {
            if let Some(dup) = kinds.next() {
                return Err(parse_error(dup.no, "duplicate `kind:` line"));
            }
            match l.args.as_slice() {
                [k] => k.parse().map_err(|e: Error| parse_error(l.no, e.to_string()))?,
                _ => return Err(parse_error(l.no, "`kind:` expects 1 token")),
            }
        }
    };
    let mut sigma = vec![None; q.len()];
    for (a, b) in pairs(&lines, "sigma", q.carrier(), q.carrier())? {
        if sigma[a].replace(b).is_some_and(|old| old != b) {
            return Err(parse_error(0, format!("sigma defined twice at `{}`", q.name(a))));
        }
    }
    let sigma = sigma
        .into_iter()
        .enumerate()
        .map(|(a, b)| b.ok_or_else(|| parse_error(0, format!("sigma undefined at `{}`", q.name(a)))))
        .collect::<Result<Vec<_>>>()?;
    UnaryAlgebra::new(q, sigma, kind)
}

pub fn parse_ug(text: &str) -> Result<UGraph> {
    let lines = lines(text, &["vertices", "edge"])?;
    let v = header(&lines, "vertices")?;
    let p = pairs(&lines, "edge", &v, &v)?;
    Ok(UGraph::from_edges(v, p))
}

fn names(set: &FinSet) -> String {
    set.names().join(" ")
}

fn head(key: &str, set: &FinSet) -> String {
    if set.is_empty() {
        format!("{key}:\n")
    } else {
        format!("{key}: {}\n", names(set))
    }
}

pub fn serialize_rel(r: &Rel) -> String {
    let mut out = head("source", r.source()) + &head("target", r.target());
    for (a, b) in r.pairs() {
        out += &format!("pair: {} {}\n", r.source().name(a), r.target().name(b));
    }
    out
}

/// Elements followed by the covering pairs.
pub fn serialize_poset(p: &Poset) -> String {
    let mut out = head("elements", p.carrier());
    for (a, b) in p.covers().pairs() {
        out += &format!("leq: {} {}\n", p.carrier().name(a), p.carrier().name(b));
    }
    out
}

pub fn serialize_jsl(q: &Jsl) -> String {
    serialize_poset(q.poset())
}

pub fn serialize_unary_algebra(alg: &UnaryAlgebra) -> String {
    let q = alg.base();
    let mut out = serialize_jsl(q);
    out += &format!("kind: {}\n", alg.kind().to_string().to_lowercase());
    for x in 0..q.len() {
        out += &format!("sigma: {} {}\n", q.name(x), q.name(alg.apply(x)));
    }
    out
}

pub fn serialize_ug(g: &UGraph) -> String {
    let mut out = head("vertices", g.vertices());
    for (a, b) in g.edges().pairs().into_iter().filter(|(a, b)| a <= b) {
        out += &format!("edge: {} {}\n", g.vertices().name(a), g.vertices().name(b));
    }
    out
}

//! Text formats, Graphviz and JSON output, random instances and property suites.

pub mod check;
pub mod dot;
pub mod generate;
pub mod json;
pub mod text;

use std::fmt;
use std::str::FromStr;

use crate::demorgan::{UGraph, UnaryAlgebra};
use crate::dep::DepMorphism;
use crate::error::Error;
use crate::jsl::Jsl;
use crate::poset::Poset;
use crate::rel::Rel;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Dot,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format, Error> {
        match s {
            "text" => Ok(Format::Text),
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse { line: 0, message: format!("unknown format `{other}`") }),
        }
    }
}

/// Anything a command can print.
#[derive(Clone, Debug)]
pub enum Value {
    Rel(Rel),
    Poset(Poset),
    Jsl(Jsl),
    Algebra(UnaryAlgebra),
    Graph(UGraph),
    Dep(DepMorphism),
}

impl Value {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => match self {
                Value::Rel(r) => text::serialize_rel(r),
                Value::Poset(p) => text::serialize_poset(p),
                Value::Jsl(q) => text::serialize_jsl(q),
                Value::Algebra(a) => text::serialize_unary_algebra(a),
                Value::Graph(g) => text::serialize_ug(g),
                Value::Dep(d) => {
                    let mut out = text::serialize_rel(d.rel());
                    for (label, c) in [("minus", d.minus()), ("plus", d.plus())] {
                        for (a, b) in c.pairs() {
                            out += &format!("# {label}: {} {}\n", c.source().name(a), c.target().name(b));
                        }
                    }
                    out
                }
            },
            Format::Dot => match self {
                Value::Rel(r) => dot::bipartite(r),
                Value::Poset(p) => dot::hasse(p),
                Value::Jsl(q) => dot::hasse(q.poset()),
                Value::Algebra(a) => dot::unary_algebra(a),
                Value::Graph(g) => dot::ugraph(g),
                Value::Dep(d) => dot::bipartite(d.rel()),
            },
            Format::Json => {
                let v = match self {
                    Value::Rel(r) => json::rel(r),
                    Value::Poset(p) => json::poset(p),
                    Value::Jsl(q) => json::jsl(q),
                    Value::Algebra(a) => json::unary_algebra(a),
                    Value::Graph(g) => json::ugraph(g),
                    Value::Dep(d) => json::dep(d),
                };
                serde_json::to_string_pretty(&v).expect("values serialize") + "\n"
            }
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Format::Text))
    }
}

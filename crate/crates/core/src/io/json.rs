//! JSON output. Keys are emitted in sorted order.

use serde_json::{json, Value};

use crate::demorgan::{UGraph, UnaryAlgebra};
use crate::dep::DepMorphism;
use crate::jsl::Jsl;
use crate::poset::Poset;
use crate::rel::Rel;

fn pair_list(r: &Rel) -> Value {
    r.pairs().into_iter().map(|(a, b)| json!([r.source().name(a), r.target().name(b)])).collect()
}

pub fn rel(r: &Rel) -> Value {
    json!({ "source": r.source().names(), "target": r.target().names(), "pairs": pair_list(r) })
}

pub fn poset(p: &Poset) -> Value {
    json!({ "elements": p.carrier().names(), "covers": pair_list(&p.covers()) })
}

pub fn jsl(q: &Jsl) -> Value {
    let names = |xs: Vec<usize>| xs.into_iter().map(|x| q.name(x).to_string()).collect::<Vec<_>>();
    json!({
        "elements": q.carrier().names(),
        "covers": pair_list(&q.poset().covers()),
        "bottom": q.name(q.bottom()),
        "top": q.name(q.top()),
        "join_irreducibles": names(q.ji_list()),
        "meet_irreducibles": names(q.mi_list()),
    })
}

pub fn unary_algebra(alg: &UnaryAlgebra) -> Value {
    let q = alg.base();
    let mut v = jsl(q);
    v["kind"] = json!(alg.kind().to_string());
    v["sigma"] = (0..q.len()).map(|x| json!([q.name(x), q.name(alg.apply(x))])).collect();
    v
}

pub fn ugraph(g: &UGraph) -> Value {
    let edges: Value = g
        .edges()
        .pairs()
        .into_iter()
        .filter(|(a, b)| a <= b)
        .map(|(a, b)| json!([g.vertices().name(a), g.vertices().name(b)]))
        .collect();
    json!({ "vertices": g.vertices().names(), "edges": edges })
}

pub fn dep(r: &DepMorphism) -> Value {
    json!({ "relation": rel(r.rel()), "minus": rel(r.minus()), "plus": rel(r.plus()) })
}

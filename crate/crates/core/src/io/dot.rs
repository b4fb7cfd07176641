//! Graphviz output: Hasse diagrams, bipartite relations and undirected graphs.

use crate::demorgan::{UGraph, UnaryAlgebra};
use crate::poset::Poset;
use crate::rel::Rel;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Covering pairs only, drawn bottom to top.
pub fn hasse(p: &Poset) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for x in 0..p.len() {
        out += &format!("  {};\n", quote(p.carrier().name(x)));
    }
    for (a, b) in p.covers().pairs() {
        out += &format!("  {} -> {} [arrowhead=none];\n", quote(p.carrier().name(a)), quote(p.carrier().name(b)));
    }
    out + "}\n"
}

/// The Hasse diagram with `σ` drawn as dashed arrows.
pub fn unary_algebra(alg: &UnaryAlgebra) -> String {
    let q = alg.base();
    let mut out = hasse(q.poset());
    out.truncate(out.len() - 2);
    for x in 0..q.len() {
        out += &format!("  {} -> {} [style=dashed, constraint=false];\n", quote(q.name(x)), quote(q.name(alg.apply(x))));
    }
    out + "}\n"
}

/// Sources on the left, targets on the right.
pub fn bipartite(r: &Rel) -> String {
    let mut out = String::from("graph bipartite {\n  rankdir=LR;\n");
    out += "  subgraph cluster_source {\n    label=\"source\";\n";
    for a in 0..r.source().len() {
        out += &format!("    s{a} [label={}];\n", quote(r.source().name(a)));
    }
    out += "  }\n  subgraph cluster_target {\n    label=\"target\";\n";
    for b in 0..r.target().len() {
        out += &format!("    t{b} [label={}];\n", quote(r.target().name(b)));
    }
    out += "  }\n";
    for (a, b) in r.pairs() {
        out += &format!("  s{a} -- t{b};\n");
    }
    out + "}\n"
}

pub fn ugraph(g: &UGraph) -> String {
    let mut out = String::from("graph ug {\n");
    for v in 0..g.len() {
        out += &format!("  {};\n", quote(g.vertices().name(v)));
    }
    for (a, b) in g.edges().pairs().into_iter().filter(|(a, b)| a <= b) {
        out += &format!("  {} -- {};\n", quote(g.vertices().name(a)), quote(g.vertices().name(b)));
    }
    out + "}\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::{pirr_obj, Opens};
    use crate::finset::FinSet;
    use crate::jsl::Jsl;

    fn count(dot: &str, needle: &str) -> usize {
        dot.lines().filter(|l| l.contains(needle)).count()
    }

    #[test]
    fn single_element() {
        let d = hasse(Jsl::chain(1).poset());
        assert_eq!(count(&d, "->"), 0);
        assert_eq!(count(&d, ";") - 2, 1);
    }

    #[test]
    fn diamond_of_opens() {
        let g = Rel::from_pairs(FinSet::numbered("g", 2), FinSet::numbered("h", 2), [(0, 0), (1, 1)]);
        let opens = Opens::of(&g);
        let d = hasse(opens.jsl().poset());
        assert_eq!(opens.jsl().len(), 4);
        assert_eq!(count(&d, "->"), 4);
        assert_eq!(d.lines().filter(|l| l.trim_start().starts_with('"') && !l.contains("->")).count(), 4);
    }

    #[test]
    fn bipartite_pirr_of_chain() {
        let d = bipartite(&pirr_obj(&Jsl::chain(3)));
        assert_eq!(count(&d, "[label="), 4);
        assert_eq!(count(&d, " -- "), 3);
    }

    #[test]
    fn deterministic() {
        let g = UGraph::complete(4);
        assert_eq!(ugraph(&g), ugraph(&g.clone()));
        assert_eq!(count(&ugraph(&g), " -- "), 6);
    }
}

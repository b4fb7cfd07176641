//! Semilattices with an order-reversing operation, and their graph-side descriptions.

use std::fmt;
use std::str::FromStr;

use crate::dep::DepMorphism;
use crate::equivalence::{open_mor_between, partial_iso, pirr_obj, red_iso, rep_iso, Opens};
use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::jsl::{hom, Jsl, JslMorphism};
use crate::rel::Rel;
use crate::subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// `x ≤ σσx`
    Saj,
    /// `σσx ≤ x`
    Sam,
    /// `σσx = x`
    Sai,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Saj => "SAJ",
            Kind::Sam => "SAM",
            Kind::Sai => "SAI",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        match s.to_ascii_uppercase().as_str() {
            "SAJ" => Ok(Kind::Saj),
            "SAM" => Ok(Kind::Sam),
            "SAI" => Ok(Kind::Sai),
            other => Err(Error::KindMismatch { expected: "SAJ, SAM or SAI".into(), found: other.into() }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnaryAlgebra {
    base: Jsl,
    sigma: Vec<usize>,
    kind: Kind,
}

fn axiom(name: &str, witness: String) -> Error {
    Error::Axiom { axiom: name.into(), witness }
}

/// Checks the equational axioms of `kind`, reporting the first violation.
pub fn check_axioms(base: &Jsl, sigma: &[usize], kind: Kind) -> Result<()> {
    let n = base.len();
    if sigma.len() != n || sigma.iter().any(|&y| y >= n) {
        return Err(axiom("totality", format!("sigma has {} entries over {} elements", sigma.len(), n)));
    }
    let name = |x: usize| base.name(x).to_string();
    for x in 0..n {
        for y in 0..n {
            if !base.leq(sigma[base.join(x, y)], sigma[x]) {
                return Err(axiom("Rev", format!("σ({} ∨ {}) ≰ σ({})", name(x), name(y), name(x))));
            }
        }
        let ss = sigma[sigma[x]];
        let ok = match kind {
            Kind::Saj => base.leq(x, ss),
            Kind::Sam => base.leq(ss, x),
            Kind::Sai => ss == x,
        };
        if !ok {
            let rule = match kind {
                Kind::Saj => "Ex",
                Kind::Sam => "Cx",
                Kind::Sai => "Inv",
            };
            return Err(axiom(rule, format!("x = {}, σσx = {}", name(x), name(ss))));
        }
    }
    Ok(())
}

fn self_adjoint(base: &Jsl, sigma: &[usize], kind: Kind) -> bool {
    let n = base.len();
    let saj = || (0..n).all(|a| (0..n).all(|b| base.leq(b, sigma[a]) == base.leq(a, sigma[b])));
    let sam = || (0..n).all(|a| (0..n).all(|b| base.leq(sigma[a], b) == base.leq(sigma[b], a)));
    match kind {
        Kind::Saj => saj(),
        Kind::Sam => sam(),
        Kind::Sai => saj() && sam() && {
            let mut seen = subset::empty(n);
            sigma.iter().for_each(|&y| seen.insert(y));
            seen.count_ones(..) == n
        },
    }
}

pub fn check_unary_algebra(base: Jsl, sigma: Vec<usize>, kind: Kind) -> Result<UnaryAlgebra> {
    check_axioms(&base, &sigma, kind)?;
    if !self_adjoint(&base, &sigma, kind) {
        return Err(Error::NotSelfAdjoint(format!("{kind} axioms hold but σ is not self-adjoint")));
    }
    Ok(UnaryAlgebra { base, sigma, kind })
}

impl UnaryAlgebra {
    pub fn new(base: Jsl, sigma: Vec<usize>, kind: Kind) -> Result<UnaryAlgebra> {
        check_unary_algebra(base, sigma, kind)
    }

    pub fn from_named(base: Jsl, pairs: &[(&str, &str)], kind: Kind) -> Result<UnaryAlgebra> {
        let mut sigma = vec![usize::MAX; base.len()];
        for (a, b) in pairs {
            let x = base.carrier().require(a)?;
            sigma[x] = base.carrier().require(b)?;
        }
        if let Some(x) = sigma.iter().position(|&y| y == usize::MAX) {
            return Err(axiom("totality", format!("σ({}) is undefined", base.name(x))));
        }
        UnaryAlgebra::new(base, sigma, kind)
    }

    pub fn base(&self) -> &Jsl {
        &self.base
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn apply(&self, x: usize) -> usize {
        self.sigma[x]
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// The same algebra viewed in a weaker kind.
    pub fn with_kind(&self, kind: Kind) -> Result<UnaryAlgebra> {
        UnaryAlgebra::new(self.base.clone(), self.sigma.clone(), kind)
    }

    pub fn require_kind(&self, kind: Kind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::KindMismatch { expected: kind.to_string(), found: self.kind.to_string() });
        }
        Ok(())
    }

    /// `σ : Q → Q^op`.
    pub fn sigma_join(&self) -> Result<JslMorphism> {
        JslMorphism::new(self.base.clone(), self.base.op(), self.sigma.clone())
    }

    /// `σ : Q^op → Q`.
    pub fn sigma_meet(&self) -> Result<JslMorphism> {
        JslMorphism::new(self.base.op(), self.base.clone(), self.sigma.clone())
    }

    pub fn is_homomorphism(&self, other: &UnaryAlgebra, f: &JslMorphism) -> bool {
        f.dom() == &self.base && f.cod() == &other.base && (0..self.base.len()).all(|x| f.apply(self.sigma[x]) == other.sigma[f.apply(x)])
    }

    pub fn homomorphisms(&self, other: &UnaryAlgebra) -> Vec<JslMorphism> {
        hom(&self.base, &other.base).into_iter().filter(|f| self.is_homomorphism(other, f)).collect()
    }

    /// An order isomorphism commuting with `σ`, if one exists.
    pub fn isomorphism(&self, other: &UnaryAlgebra) -> Option<Vec<usize>> {
        let n = self.base.len();
        if n != other.base.len() {
            return None;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if iso_search(0, self, other, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }
}

fn degree(j: &Jsl, x: usize) -> (usize, usize) {
    (j.up_set(x).count_ones(..), j.down_set(x).count_ones(..))
}

fn iso_search(k: usize, a: &UnaryAlgebra, b: &UnaryAlgebra, map: &mut [usize], used: &mut [bool]) -> bool {
    let n = map.len();
    if k == n {
        return (0..n).all(|x| map[a.sigma[x]] == b.sigma[map[x]]);
    }
    for y in 0..n {
        if used[y] || degree(&a.base, k) != degree(&b.base, y) {
            continue;
        }
        let order_ok = (0..k).all(|x| a.base.leq(x, k) == b.base.leq(map[x], y) && a.base.leq(k, x) == b.base.leq(y, map[x]));
        let sigma_ok = (0..=k).all(|x| {
            let sx = a.sigma[x];
            let (fx, fsx) = (if x == k { y } else { map[x] }, if sx == k { y } else { map[sx] });
            sx > k || fsx == b.sigma[fx]
        });
        if !order_ok || !sigma_ok {
            continue;
        }
        map[k] = y;
        used[y] = true;
        if iso_search(k + 1, a, b, map, used) {
            return true;
        }
        used[y] = false;
    }
    map[k] = usize::MAX;
    false
}

/// Every `σ` of the given kind on `base`.
pub fn unary_structures(base: &Jsl, kind: Kind) -> Vec<UnaryAlgebra> {
    // σ is a morphism Q → Q^op for SAJ and SAI, Q^op → Q for SAM
    let maps = match kind {
        Kind::Saj | Kind::Sai => hom(base, &base.op()),
        Kind::Sam => hom(&base.op(), base),
    };
    maps.into_iter().filter_map(|f| UnaryAlgebra::new(base.clone(), f.map().to_vec(), kind).ok()).collect()
}

/// A finite set of vertices with a symmetric edge relation; loops are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UGraph {
    edges: Rel,
}

fn check_symmetric(e: &Rel) -> Result<()> {
    for (a, b) in e.pairs() {
        if !e.contains(b, a) {
            return Err(Error::NotSymmetric(e.source().name(a).into(), e.target().name(b).into()));
        }
    }
    Ok(())
}

impl UGraph {
    pub fn new(edges: Rel) -> Result<UGraph> {
        if !edges.source().same(edges.target()) {
            return Err(Error::TypeMismatch("edges must relate a vertex set to itself".into()));
        }
        check_symmetric(&edges)?;
        Ok(UGraph { edges })
    }

    pub fn from_edges(vertices: FinSet, pairs: impl IntoIterator<Item = (usize, usize)>) -> UGraph {
        let mut e = Rel::empty(vertices.clone(), vertices);
        for (a, b) in pairs {
            e.insert(a, b);
            e.insert(b, a);
        }
        UGraph { edges: e }
    }

    /// `K_n` without loops.
    pub fn complete(n: usize) -> UGraph {
        let v = FinSet::numbered("v", n);
        UGraph { edges: Rel::from_fn(v.clone(), v, |a, b| a != b) }
    }

    /// Vertices `1..=n` with `x – y` whenever `x + y > n`.
    pub fn chain(n: usize) -> UGraph {
        let v = FinSet::new((1..=n).map(|i| i.to_string())).expect("distinct");
        UGraph { edges: Rel::from_fn(v.clone(), v, |a, b| a + b + 2 > n) }
    }

    pub fn vertices(&self) -> &FinSet {
        self.edges.source()
    }

    pub fn edges(&self) -> &Rel {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.edges.contains(a, b)
    }

    pub fn is_reduced(&self) -> bool {
        self.edges.is_reduced()
    }
}

/// A classical isomorphism: a vertex bijection preserving and reflecting edges.
pub fn graph_isomorphism(g1: &UGraph, g2: &UGraph) -> Option<Vec<usize>> {
    let n = g1.len();
    if n != g2.len() || g1.edges.pair_count() != g2.edges.pair_count() {
        return None;
    }
    let profile = |g: &UGraph, v: usize| {
        let mut ds: Vec<usize> = g.edges.row(v).ones().map(|u| g.edges.row(u).count_ones(..)).collect();
        ds.sort_unstable();
        (g.edges.row(v).count_ones(..), g.adjacent(v, v), ds)
    };
    let p1: Vec<_> = (0..n).map(|v| profile(g1, v)).collect();
    let p2: Vec<_> = (0..n).map(|v| profile(g2, v)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(p1[v].0));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(k: usize, order: &[usize], g1: &UGraph, g2: &UGraph, ok: &dyn Fn(usize, usize) -> bool, map: &mut [usize], used: &mut [bool]) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        for w in 0..map.len() {
            if used[w] || !ok(v, w) {
                continue;
            }
            if order[..k].iter().all(|&u| g1.adjacent(u, v) == g2.adjacent(map[u], w)) {
                map[v] = w;
                used[w] = true;
                if go(k + 1, order, g1, g2, ok, map, used) {
                    return true;
                }
                used[w] = false;
            }
        }
        map[v] = usize::MAX;
        false
    }
    let ok = |v: usize, w: usize| p1[v] == p2[w];
    if go(0, &order, g1, g2, &ok, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Graph isomorphism between reduced graphs; these are exactly the UG-isomorphisms up to relabelling.
pub fn reduced_graph_iso(g1: &UGraph, g2: &UGraph) -> Result<Option<Vec<usize>>> {
    if !g1.is_reduced() || !g2.is_reduced() {
        return Err(Error::NotReduced);
    }
    Ok(graph_isomorphism(g1, g2))
}

/// `R↑ = E₂↑ ∘ R̆↓ ∘ E₁↑` on every subset of `V₁`.
pub fn ug_morphism_check(r: &Rel, g1: &UGraph, g2: &UGraph) -> bool {
    if !r.source().same(g1.vertices()) || !r.target().same(g2.vertices()) {
        return false;
    }
    let rc = r.converse();
    subset::all_subsets(g1.len()).all(|x| r.up(&x) == g2.edges.up(&rc.down(&g1.edges.up(&x))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    J,
    M,
}

/// An object of `UG_j` (`e` on the sources of `g`) or `UG_m` (`e` on the targets).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UgPair {
    g: Rel,
    e: Rel,
    side: Side,
}

pub fn ug_pair_check(g: &Rel, e: &Rel, side: Side) -> Result<UgPair> {
    let carrier = match side {
        Side::J => g.source(),
        Side::M => g.target(),
    };
    if !e.source().same(carrier) || !e.target().same(carrier) {
        return Err(Error::TypeMismatch(format!("edges must live on the {} carrier", if side == Side::J { "source" } else { "target" })));
    }
    check_symmetric(e)?;
    // every row of e must be an open set of ğ (side j) or of g (side m)
    let basis = match side {
        Side::J => g.converse(),
        Side::M => g.clone(),
    };
    for v in 0..e.source().len() {
        if &basis.interior(e.row(v)) != e.row(v) {
            return Err(Error::Factorization(format!("row of {} is not a union of neighbourhoods", e.source().name(v))));
        }
    }
    Ok(UgPair { g: g.clone(), e: e.clone(), side })
}

impl UgPair {
    pub fn g(&self) -> &Rel {
        &self.g
    }

    pub fn e(&self) -> &Rel {
        &self.e
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// `e` as a self-adjoint Dep morphism `G → Ğ` (side j) or `Ğ → G` (side m).
    pub fn as_dep(&self) -> DepMorphism {
        let (dom, cod) = match self.side {
            Side::J => (self.g.clone(), self.g.converse()),
            Side::M => (self.g.converse(), self.g.clone()),
        };
        DepMorphism::new(self.e.clone(), dom, cod).expect("validated pair")
    }

    /// `E₋ = E₊ = complement(complement(E) ; G)`, for side j.
    pub fn component(&self) -> Rel {
        let g = match self.side {
            Side::J => self.g.clone(),
            Side::M => self.g.converse(),
        };
        self.e.complement().compose(&g).expect("types match").complement()
    }

    pub fn is_morphism(&self, r: &Rel, other: &UgPair) -> bool {
        if self.side != other.side {
            return false;
        }
        let Ok(dep) = DepMorphism::new(r.clone(), self.g.clone(), other.g.clone()) else {
            return false;
        };
        let subsets = || subset::all_subsets(self.g.source().len());
        match self.side {
            Side::J => {
                let e2r = other.as_dep().compose(&dep.dual()).expect("types match");
                subsets().all(|x| r.up(&self.e.down(&x)) == other.g.up(&e2r.rel().down(&x)))
            }
            Side::M => {
                let re1 = dep.dual().compose(&self.as_dep()).expect("types match");
                subsets().all(|x| other.e.down(&r.up(&x)) == re1.rel().down(&self.g.up(&x)))
            }
        }
    }
}

/// `Open_g(V, E) = (Open E, X ↦ E[X̄])`.
pub fn open_g(graph: &UGraph) -> (UnaryAlgebra, Opens) {
    let opens = Opens::of(&graph.edges);
    let sigma = opens
        .sets()
        .iter()
        .map(|x| opens.elem(&graph.edges.up(&subset::complement(x))).expect("images are open"))
        .collect();
    let alg = UnaryAlgebra::new(opens.jsl().clone(), sigma, Kind::Sai).expect("Open_g yields a De Morgan algebra");
    (alg, opens)
}

/// `Pirr_g(Q, σ) = (J(Q), j1 – j2 ⟺ j2 ≰ σ(j1))`.
pub fn pirr_g(alg: &UnaryAlgebra) -> Result<UGraph> {
    alg.require_kind(Kind::Sai)?;
    let q = alg.base();
    let ji = q.ji_list();
    let v = FinSet::new(ji.iter().map(|&j| q.name(j).to_string()))?;
    UGraph::new(Rel::from_fn(v.clone(), v, |a, b| !q.leq(ji[b], alg.apply(ji[a]))))
}

pub fn open_g_mor(r: &Rel, g1: &UGraph, g2: &UGraph) -> Result<JslMorphism> {
    if !ug_morphism_check(r, g1, g2) {
        return Err(Error::NotDepMorphism("relation is not a UG morphism".into()));
    }
    let dep = DepMorphism::new(r.clone(), g1.edges.clone(), g2.edges.clone())?;
    Ok(open_mor_between(&dep, &Opens::of(&g1.edges), &Opens::of(&g2.edges)))
}

/// `Pirr_g f = Pirr(σ₂ ∘ f)` on `J(Q) × J(R)`.
pub fn pirr_g_mor(f: &JslMorphism, a1: &UnaryAlgebra, a2: &UnaryAlgebra) -> Result<Rel> {
    if !a1.is_homomorphism(a2, f) {
        return Err(Error::NotAMorphism("map does not commute with σ".into()));
    }
    let (g1, g2) = (pirr_g(a1)?, pirr_g(a2)?);
    let (jq, jr) = (a1.base().ji_list(), a2.base().ji_list());
    let r = a2.base();
    Ok(Rel::from_fn(g1.vertices().clone(), g2.vertices().clone(), |a, b| !r.leq(jr[b], a2.apply(f.apply(jq[a])))))
}

/// `grep(q) = { j : j ≰ σ(q) }` into `Open_g(Pirr_g(Q, σ))`, with its inverse `Y ↦ σ(⋁(J \ Y))`.
pub fn grep_iso(alg: &UnaryAlgebra) -> Result<(JslMorphism, JslMorphism, UnaryAlgebra)> {
    let graph = pirr_g(alg)?;
    let (target, opens) = open_g(&graph);
    let q = alg.base();
    let ji = q.ji_list();
    let k = ji.len();
    let there: Vec<usize> = (0..q.len())
        .map(|x| opens.elem(&subset::from_indices(k, (0..k).filter(|&a| !q.leq(ji[a], alg.apply(x))))).expect("grep lands in the opens"))
        .collect();
    let back: Vec<usize> = opens
        .sets()
        .iter()
        .map(|y| alg.apply(q.join_all((0..k).filter(|&a| !y.contains(a)).map(|a| ji[a]))))
        .collect();
    let f = JslMorphism::new(q.clone(), target.base().clone(), there)?;
    let g = JslMorphism::new(target.base().clone(), q.clone(), back)?;
    Ok((f, g, target))
}

/// `gred = ∈ : (V, E) → Pirr_g(Open_g(V, E))` and its inverse `∋`.
pub fn gred_iso(graph: &UGraph) -> (DepMorphism, DepMorphism, UGraph) {
    let (alg, opens) = open_g(graph);
    let target = pirr_g(&alg).expect("De Morgan algebra");
    let ji = alg.base().ji_list();
    let membership = Rel::from_fn(graph.vertices().clone(), target.vertices().clone(), |v, a| opens.set(ji[a]).contains(v));
    let there = DepMorphism::new(membership.clone(), graph.edges.clone(), target.edges.clone()).expect("gred is a morphism");
    let back = DepMorphism::new(membership.converse(), target.edges.clone(), graph.edges.clone()).expect("gred inverse is a morphism");
    (there, back, target)
}

/// `Open_j(G, E) = (Open G, ∂_G⁻¹ ∘ Open E)`.
pub fn open_j(pair: &UgPair) -> Result<(UnaryAlgebra, Opens)> {
    if pair.side != Side::J {
        return Err(Error::KindMismatch { expected: "UG_j".into(), found: "UG_m".into() });
    }
    let (og, ogc) = (Opens::of(&pair.g), Opens::of(&pair.g.converse()));
    let over = open_mor_between(&pair.as_dep(), &og, &ogc);
    let (_, dinv) = partial_iso(&pair.g);
    let sigma = (0..og.sets().len()).map(|i| dinv.apply(over.apply(i))).collect();
    Ok((UnaryAlgebra::new(og.jsl().clone(), sigma, Kind::Saj)?, og))
}

/// `Open_m(G, E) = (Open G, Open E ∘ ∂_G)`.
pub fn open_m(pair: &UgPair) -> Result<(UnaryAlgebra, Opens)> {
    if pair.side != Side::M {
        return Err(Error::KindMismatch { expected: "UG_m".into(), found: "UG_j".into() });
    }
    let (og, ogc) = (Opens::of(&pair.g), Opens::of(&pair.g.converse()));
    let over = open_mor_between(&pair.as_dep(), &ogc, &og);
    let (d, _) = partial_iso(&pair.g);
    let sigma = (0..og.sets().len()).map(|i| over.apply(d.apply(i))).collect();
    Ok((UnaryAlgebra::new(og.jsl().clone(), sigma, Kind::Sam)?, og))
}

/// `Pirr_j(Q, σ) = (Pirr Q, Pirr σ)` with `σ : Q → Q^op`.
pub fn pirr_j(alg: &UnaryAlgebra) -> Result<UgPair> {
    if alg.kind == Kind::Sam {
        return Err(Error::KindMismatch { expected: "SAJ".into(), found: "SAM".into() });
    }
    let q = alg.base();
    let ji = q.ji_list();
    let g = pirr_obj(q);
    let e = Rel::from_fn(g.source().clone(), g.source().clone(), |a, b| !q.leq(ji[b], alg.apply(ji[a])));
    ug_pair_check(&g, &e, Side::J)
}

/// `Pirr_m(Q, σ) = (Pirr Q, Pirr σ)` with `σ : Q^op → Q`.
pub fn pirr_m(alg: &UnaryAlgebra) -> Result<UgPair> {
    if alg.kind == Kind::Saj {
        return Err(Error::KindMismatch { expected: "SAM".into(), found: "SAJ".into() });
    }
    let q = alg.base();
    let mi = q.mi_list();
    let g = pirr_obj(q);
    let e = Rel::from_fn(g.target().clone(), g.target().clone(), |a, b| !q.leq(alg.apply(mi[a]), mi[b]));
    ug_pair_check(&g, &e, Side::M)
}

/// `jrep = rep`, checked to commute with the two unary operations.
pub fn jrep_iso(alg: &UnaryAlgebra) -> Result<(JslMorphism, JslMorphism, UnaryAlgebra)> {
    let pair = pirr_j(alg)?;
    let (target, _) = open_j(&pair)?;
    let (rep, inv, _) = rep_iso(alg.base());
    if !alg.with_kind(Kind::Saj)?.is_homomorphism(&target, &rep) {
        return Err(Error::NotAMorphism("rep does not commute with σ".into()));
    }
    Ok((rep, inv, target))
}

/// `jred = red_G`, between `(G, E)` and `Pirr_j(Open_j(G, E))`.
pub fn jred_iso(pair: &UgPair) -> Result<(DepMorphism, DepMorphism, UgPair)> {
    let (alg, _) = open_j(pair)?;
    let target = pirr_j(&alg)?;
    let (red, inv) = red_iso(&pair.g);
    if !pair.is_morphism(red.rel(), &target) || !target.is_morphism(inv.rel(), pair) {
        return Err(Error::NotAMorphism("red does not respect the edges".into()));
    }
    Ok((red, inv, target))
}

/// The symmetric relation `R = { (a, b) : ↑^{a,b} ≤ σ }` with `σ = ⋁ { ↑^{a,b} : R(a, b) }`.
pub fn decompose_self_adjoint_tight(q: &Jsl, sigma: &[usize]) -> Result<Rel> {
    let f = JslMorphism::new(q.clone(), q.op(), sigma.to_vec())?;
    if f.adjoint().map() != f.map() {
        return Err(Error::NotSelfAdjoint(f.describe()));
    }
    let n = q.len();
    // ↑^{a,b} ≤ σ in JSL[Q, Q^op] ⟺ σ(x) ≤ b whenever x ≰ a
    let r = Rel::from_fn(q.carrier().clone(), q.carrier().clone(), |a, b| (0..n).all(|x| q.leq(x, a) || q.leq(sigma[x], b)));
    if compose_symmetric(q, &r)?.map() != sigma {
        return Err(Error::NotTight(f.describe()));
    }
    Ok(r)
}

/// `⋁ { ↑^{a,b} : R(a, b) } : Q → Q^op` for symmetric `R`.
pub fn compose_symmetric(q: &Jsl, r: &Rel) -> Result<JslMorphism> {
    if !r.is_symmetric() {
        return Err(Error::NotSymmetric("relation".into(), "its converse".into()));
    }
    let op = q.op();
    let mut f = JslMorphism::bottom(q, &op);
    for (a, b) in r.pairs() {
        f = f.join(&JslMorphism::special_up(q, &op, a, b));
    }
    Ok(f)
}

/// `(P Z, ¬ ∘ θ↑)` for an involution `θ` on `Z`.
pub fn boolean_sai(z: &FinSet, theta: &[usize]) -> Result<UnaryAlgebra> {
    let rel = Rel::from_fn(z.clone(), z.clone(), |a, b| theta[a] == b);
    boolean_with(z, &rel, Kind::Sai)
}

/// `(P Z, ¬ ∘ R↑)` for a symmetric `R` on `Z`.
pub fn boolean_saj(z: &FinSet, r: &Rel) -> Result<UnaryAlgebra> {
    boolean_with(z, r, Kind::Saj)
}

fn boolean_with(z: &FinSet, r: &Rel, kind: Kind) -> Result<UnaryAlgebra> {
    let p = Opens::powerset(z);
    let sigma = p.sets().iter().map(|s| p.elem(&subset::complement(&r.up(s))).expect("powerset")).collect();
    UnaryAlgebra::new(p.jsl().clone(), sigma, kind)
}

/// The one-generated free algebra of each kind, generated by the element named `x`.
pub fn free_one_generated(kind: Kind) -> UnaryAlgebra {
    let (names, covers, sigma): (&[&str], &[(&str, &str)], &[(&str, &str)]) = match kind {
        Kind::Sai => (
            &["⊥", "σ(x∨σx)", "x", "σx", "x∨σx", "σ⊥"],
            &[("⊥", "σ(x∨σx)"), ("σ(x∨σx)", "x"), ("σ(x∨σx)", "σx"), ("x", "x∨σx"), ("σx", "x∨σx"), ("x∨σx", "σ⊥")],
            &[("⊥", "σ⊥"), ("σ⊥", "⊥"), ("x", "σx"), ("σx", "x"), ("x∨σx", "σ(x∨σx)"), ("σ(x∨σx)", "x∨σx")],
        ),
        Kind::Saj => (
            &[
                "⊥", "x", "σσ⊥", "x∨σσ⊥", "σ(x∨σx)", "x∨σ(x∨σx)", "σx", "σσx", "x∨σx", "σx∨σσx", "σσ(x∨σx)", "σ⊥",
            ],
            &[
                ("⊥", "x"),
                ("⊥", "σσ⊥"),
                ("x", "x∨σσ⊥"),
                ("σσ⊥", "x∨σσ⊥"),
                ("σσ⊥", "σ(x∨σx)"),
                ("x∨σσ⊥", "x∨σ(x∨σx)"),
                ("σ(x∨σx)", "x∨σ(x∨σx)"),
                ("σ(x∨σx)", "σx"),
                ("x∨σ(x∨σx)", "σσx"),
                ("x∨σ(x∨σx)", "x∨σx"),
                ("σx", "x∨σx"),
                ("σσx", "σx∨σσx"),
                ("x∨σx", "σx∨σσx"),
                ("σx∨σσx", "σσ(x∨σx)"),
                ("σσ(x∨σx)", "σ⊥"),
            ],
            &[
                ("⊥", "σ⊥"),
                ("x", "σx"),
                ("σσ⊥", "σ⊥"),
                ("x∨σσ⊥", "σx"),
                ("σ(x∨σx)", "σσ(x∨σx)"),
                ("x∨σ(x∨σx)", "σx"),
                ("σx", "σσx"),
                ("σσx", "σx"),
                ("x∨σx", "σ(x∨σx)"),
                ("σx∨σσx", "σ(x∨σx)"),
                ("σσ(x∨σx)", "σ(x∨σx)"),
                ("σ⊥", "σσ⊥"),
            ],
        ),
        Kind::Sam => (
            &["⊥", "σ(x∨σx)", "σx", "σσx", "σσ(x∨σx)", "x", "σ⊥", "x∨σx", "x∨σ⊥"],
            &[
                ("⊥", "σ(x∨σx)"),
                ("σ(x∨σx)", "σx"),
                ("σ(x∨σx)", "σσx"),
                ("σx", "σσ(x∨σx)"),
                ("σσx", "σσ(x∨σx)"),
                ("σσx", "x"),
                ("σσ(x∨σx)", "σ⊥"),
                ("σσ(x∨σx)", "x∨σx"),
                ("x", "x∨σx"),
                ("σ⊥", "x∨σ⊥"),
                ("x∨σx", "x∨σ⊥"),
            ],
            &[
                ("⊥", "σ⊥"),
                ("σ⊥", "⊥"),
                ("x", "σx"),
                ("σx", "σσx"),
                ("σσx", "σx"),
                ("x∨σx", "σ(x∨σx)"),
                ("σ(x∨σx)", "σσ(x∨σx)"),
                ("σσ(x∨σx)", "σ(x∨σx)"),
                ("x∨σ⊥", "⊥"),
            ],
        ),
    };
    let carrier = FinSet::new(names.iter().copied()).expect("distinct names");
    let idx = |s: &str| carrier.index_of(s).expect("fixture name");
    let gens: Vec<(usize, usize)> = covers.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
    let order = crate::poset::Poset::from_generators(carrier.clone(), &gens).expect("fixture order");
    let base = Jsl::from_poset(order).expect("fixture lattice");
    UnaryAlgebra::from_named(base, sigma, kind).expect("fixture satisfies its axioms")
}

//! Passing between relations and semilattices: open-set lattices, irreducible
//! relations, and the isomorphisms relating them.

use std::collections::HashMap;

use crate::dep::DepMorphism;
use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::jsl::{Jsl, JslMorphism};
use crate::poset::Poset;
use crate::rel::Rel;
use crate::subset::{self, Subset};

/// A union-closed family of subsets of `universe`, as a semilattice under ⊆.
/// Element `i` of the semilattice is `sets[i]`; sets are kept in lexicographic order.
#[derive(Clone, Debug)]
pub struct Opens {
    jsl: Jsl,
    universe: FinSet,
    sets: Vec<Subset>,
    index: HashMap<Subset, usize>,
}

impl Opens {
    pub fn new(universe: FinSet, mut sets: Vec<Subset>) -> Result<Opens> {
        subset::sort_lex(&mut sets);
        sets.dedup();
        let jsl = Jsl::from_family(&universe, &sets)?;
        let index = sets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        Ok(Opens { jsl, universe, sets, index })
    }

    /// `Open G`: all images `G[X]`.
    pub fn of(g: &Rel) -> Opens {
        Opens::new(g.target().clone(), g.open_sets()).expect("open sets form a lattice")
    }

    pub fn powerset(z: &FinSet) -> Opens {
        Opens::of(&Rel::identity(z.clone()))
    }

    pub fn jsl(&self) -> &Jsl {
        &self.jsl
    }

    pub fn universe(&self) -> &FinSet {
        &self.universe
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> &Subset {
        &self.sets[i]
    }

    pub fn elem(&self, s: &Subset) -> Option<usize> {
        self.index.get(s).copied()
    }

    fn must(&self, s: &Subset) -> usize {
        self.elem(s).unwrap_or_else(|| panic!("{} is not in the family", self.universe.subset_name(s)))
    }
}

pub fn open_obj(g: &Rel) -> Opens {
    Opens::of(g)
}

/// `Open R = λY. R₊˘[Y]`.
pub fn open_mor(r: &DepMorphism) -> JslMorphism {
    open_mor_between(r, &Opens::of(r.dom()), &Opens::of(r.cod()))
}

pub fn open_mor_between(r: &DepMorphism, dom: &Opens, cod: &Opens) -> JslMorphism {
    let map = dom.sets().iter().map(|y| cod.must(&r.open_map(y))).collect();
    JslMorphism::new(dom.jsl().clone(), cod.jsl().clone(), map).expect("Open R preserves unions")
}

fn ji_set(q: &Jsl) -> FinSet {
    FinSet::new(q.ji_list().into_iter().map(|j| q.name(j).to_string())).expect("distinct")
}

fn mi_set(q: &Jsl) -> FinSet {
    FinSet::new(q.mi_list().into_iter().map(|m| q.name(m).to_string())).expect("distinct")
}

/// `≰` restricted to `J(Q) × M(Q)`.
pub fn pirr_obj(q: &Jsl) -> Rel {
    let (ji, mi) = (q.ji_list(), q.mi_list());
    Rel::from_fn(ji_set(q), mi_set(q), |a, b| !q.leq(ji[a], mi[b]))
}

/// `Pirr f = { (j, m) : f(j) ≰ m }`.
pub fn pirr_mor(f: &JslMorphism) -> DepMorphism {
    let (q, r) = (f.dom(), f.cod());
    let (ji, mi) = (q.ji_list(), r.mi_list());
    let rel = Rel::from_fn(ji_set(q), mi_set(r), |a, b| !r.leq(f.apply(ji[a]), mi[b]));
    DepMorphism::new(rel, pirr_obj(q), pirr_obj(r)).expect("Pirr f is a morphism")
}

/// `≰_Q` on the whole carrier.
pub fn nleq_obj(q: &Jsl) -> Rel {
    Rel::from_fn(q.carrier().clone(), q.carrier().clone(), |a, b| !q.leq(a, b))
}

/// `{ (q, r) : f(q) ≰ r }`.
pub fn nleq_mor(f: &JslMorphism) -> DepMorphism {
    let r = f.cod();
    let rel = Rel::from_fn(f.dom().carrier().clone(), r.carrier().clone(), |a, b| !r.leq(f.apply(a), b));
    DepMorphism::new(rel, nleq_obj(f.dom()), nleq_obj(r)).expect("Nleq f is a morphism")
}

/// `ℰ : Pirr Q → ≰_Q` and its inverse `≰_Q → Pirr Q`.
pub fn e_iso(q: &Jsl) -> (DepMorphism, DepMorphism) {
    let (ji, mi) = (q.ji_list(), q.mi_list());
    let (pirr, nleq) = (pirr_obj(q), nleq_obj(q));
    let e = Rel::from_fn(ji_set(q), q.carrier().clone(), |a, x| !q.leq(ji[a], x));
    let inv = Rel::from_fn(q.carrier().clone(), mi_set(q), |x, b| !q.leq(x, mi[b]));
    (
        DepMorphism::new(e, pirr.clone(), nleq.clone()).expect("E is a morphism"),
        DepMorphism::new(inv, nleq, pirr).expect("E inverse is a morphism"),
    )
}

/// `rep_Q(q) = { m : q ≰ m }` into `Open(Pirr Q)`, with its inverse `Y ↦ ⋀(M \ Y)`.
pub fn rep_iso(q: &Jsl) -> (JslMorphism, JslMorphism, Opens) {
    let opens = Opens::of(&pirr_obj(q));
    let mi = q.mi_list();
    let rep_set = |x: usize| subset::from_indices(mi.len(), (0..mi.len()).filter(|&b| !q.leq(x, mi[b])));
    let map = (0..q.len()).map(|x| opens.must(&rep_set(x))).collect();
    let rep = JslMorphism::new(q.clone(), opens.jsl().clone(), map).expect("rep is a morphism");
    let back = opens
        .sets()
        .iter()
        .map(|y| q.meet_all((0..mi.len()).filter(|&b| !y.contains(b)).map(|b| mi[b])))
        .collect();
    let inv = JslMorphism::new(opens.jsl().clone(), q.clone(), back).expect("rep inverse is a morphism");
    (rep, inv, opens)
}

/// `red_G = { (g_s, Y) : G[g_s] ⊈ Y } : G → Pirr(Open G)` and its inverse `∈˘`.
pub fn red_iso(g: &Rel) -> (DepMorphism, DepMorphism) {
    let opens = Opens::of(g);
    let o = opens.jsl();
    let (ji, mi) = (o.ji_list(), o.mi_list());
    let pirr = pirr_obj(o);
    let red = Rel::from_fn(g.source().clone(), pirr.target().clone(), |gs, b| !g.row(gs).is_subset(opens.set(mi[b])));
    let inv = Rel::from_fn(pirr.source().clone(), g.target().clone(), |a, gt| opens.set(ji[a]).contains(gt));
    (
        DepMorphism::new(red, g.clone(), pirr.clone()).expect("red is a morphism"),
        DepMorphism::new(inv, pirr, g.clone()).expect("red inverse is a morphism"),
    )
}

/// The component relations of `red_G` and `red_G⁻¹` in closed form:
/// `((red)₋, (red)₊, (red⁻¹)₋, (red⁻¹)₊)`.
pub fn red_components(g: &Rel) -> (Rel, Rel, Rel, Rel) {
    let opens = Opens::of(g);
    let o = opens.jsl();
    let (ji, mi) = (o.ji_list(), o.mi_list());
    let pirr = pirr_obj(o);
    let (js, ms) = (pirr.source().clone(), pirr.target().clone());
    let m = g.target().len();
    let minus = Rel::from_fn(g.source().clone(), js.clone(), |gs, a| opens.set(ji[a]).is_subset(g.row(gs)));
    let plus = Rel::from_fn(ms.clone(), g.target().clone(), |b, gt| !opens.set(mi[b]).contains(gt));
    let inv_minus = Rel::from_fn(js, g.source().clone(), |a, gs| g.row(gs).is_subset(opens.set(ji[a])));
    let inv_plus = Rel::from_fn(g.target().clone(), ms, |gt, b| {
        g.interior(&subset::complement(&subset::singleton(m, gt))).is_subset(opens.set(mi[b]))
    });
    (minus, plus, inv_minus, inv_plus)
}

/// The Dep morphism `R(g_s, h_t) ⟺ h_t ∈ f(G[g_s])` with `Open R = f`.
pub fn full_inverse(f: &JslMorphism, g: &Rel, h: &Rel) -> Result<DepMorphism> {
    let (og, oh) = (Opens::of(g), Opens::of(h));
    if f.dom() != og.jsl() || f.cod() != oh.jsl() {
        return Err(Error::TypeMismatch("morphism is not between the open-set lattices".into()));
    }
    let rows = (0..g.source().len()).map(|gs| oh.set(f.apply(og.must(g.row(gs)))).clone()).collect();
    DepMorphism::new(Rel::from_rows(g.source().clone(), h.target().clone(), rows), g.clone(), h.clone())
}

/// `∂_G(X) = Ğ[X̄] : (Open G)^op → Open Ğ` and its inverse `Y ↦ G[Ȳ]`.
pub fn partial_iso(g: &Rel) -> (JslMorphism, JslMorphism) {
    let (og, ogc) = (Opens::of(g), Opens::of(&g.converse()));
    let gc = g.converse();
    let there = og.sets().iter().map(|x| ogc.must(&gc.up(&subset::complement(x)))).collect();
    let back = ogc.sets().iter().map(|y| og.must(&g.up(&subset::complement(y)))).collect();
    (
        JslMorphism::new(og.jsl().op(), ogc.jsl().clone(), there).expect("partial is a morphism"),
        JslMorphism::new(ogc.jsl().clone(), og.jsl().op(), back).expect("partial inverse is a morphism"),
    )
}

/// `e_Q(q) = { m : q ≰ m } : Q ↣ P M(Q)`.
pub fn canonical_embed(q: &Jsl) -> (JslMorphism, Opens) {
    let pm = Opens::powerset(&mi_set(q));
    let mi = q.mi_list();
    let map = (0..q.len())
        .map(|x| pm.must(&subset::from_indices(mi.len(), (0..mi.len()).filter(|&b| !q.leq(x, mi[b])))))
        .collect();
    (JslMorphism::new(q.clone(), pm.jsl().clone(), map).expect("e is a morphism"), pm)
}

/// `σ_Q(S) = ⋁S : P J(Q) ↠ Q`.
pub fn canonical_quotient(q: &Jsl) -> (JslMorphism, Opens) {
    let pj = Opens::powerset(&ji_set(q));
    let ji = q.ji_list();
    let map = pj.sets().iter().map(|s| q.join_all(s.ones().map(|a| ji[a]))).collect();
    (JslMorphism::new(pj.jsl().clone(), q.clone(), map).expect("sigma is a morphism"), pj)
}

/// `Jf = { (z, j) : j ≤ f({z}) }` for `f : P Z → Q`.
pub fn tight_extend_left(f: &JslMorphism, pz: &Opens) -> Result<Rel> {
    if f.dom() != pz.jsl() || pz.sets().len() != 1 << pz.universe().len() {
        return Err(Error::TypeMismatch("domain is not the given powerset".into()));
    }
    let q = f.cod();
    let ji = q.ji_list();
    let n = pz.universe().len();
    Ok(Rel::from_fn(pz.universe().clone(), ji_set(q), |z, a| q.leq(ji[a], f.apply(pz.must(&subset::singleton(n, z))))))
}

/// `Mf = { (m, z) : f_*(z̄) ≤ m }` for `f : Q → P Z`.
pub fn tight_extend_right(f: &JslMorphism, pz: &Opens) -> Result<Rel> {
    if f.cod() != pz.jsl() || pz.sets().len() != 1 << pz.universe().len() {
        return Err(Error::TypeMismatch("codomain is not the given powerset".into()));
    }
    let q = f.dom();
    let adj = f.adjoint();
    let mi = q.mi_list();
    let n = pz.universe().len();
    Ok(Rel::from_fn(mi_set(q), pz.universe().clone(), |b, z| {
        let cz = subset::complement(&subset::singleton(n, z));
        q.leq(adj.apply(pz.must(&cz)), mi[b])
    }))
}

/// `DeMc P = Open(≰_P)` with the embedding `e_P(x) = ≰_P[x]`.
pub fn dm_completion(p: &Poset) -> (Opens, Vec<usize>) {
    let nleq = p.leq_rel().complement();
    let opens = Opens::of(&nleq);
    let e = (0..p.len()).map(|x| opens.must(nleq.row(x))).collect();
    (opens, e)
}

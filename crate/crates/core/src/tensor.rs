//! Tensor products of semilattices, tight tensors, and the synchronous product of relations.

use std::collections::{HashMap, VecDeque};

use crate::dep::DepMorphism;
use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::jsl::{hom, HomSemilattice, Jsl, JslMorphism};
use crate::rel::Rel;
use crate::subset::{self, Subset};

/// Largest `|Q|·|R|` for which every bi-ideal is enumerated.
pub const TENSOR_CELL_LIMIT: usize = 20;

/// A subset of `Q × R`, with `(a, b)` stored at cell `a·|R| + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiIdeal {
    left: Jsl,
    right: Jsl,
    cells: Subset,
}

impl BiIdeal {
    pub fn new(left: Jsl, right: Jsl, cells: Subset) -> Result<BiIdeal> {
        if !is_bi_ideal(&cells, &left, &right) {
            return Err(Error::TypeMismatch("cells do not form a bi-ideal".into()));
        }
        Ok(BiIdeal { left, right, cells })
    }

    pub fn cells(&self) -> &Subset {
        &self.cells
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.cells.contains(a * self.right.len() + b)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.right.len();
        self.cells.ones().map(|c| (c / n, c % n)).collect()
    }
}

pub fn cell_set(q: &Jsl, r: &Jsl, pairs: impl IntoIterator<Item = (usize, usize)>) -> Subset {
    subset::from_indices(q.len() * r.len(), pairs.into_iter().map(|(a, b)| a * r.len() + b))
}

fn bottom_cross(q: &Jsl, r: &Jsl) -> Subset {
    let (qb, rb) = (q.bottom(), r.bottom());
    cell_set(q, r, (0..r.len()).map(|b| (qb, b)).chain((0..q.len()).map(|a| (a, rb))))
}

pub fn is_bi_ideal(s: &Subset, q: &Jsl, r: &Jsl) -> bool {
    let n = r.len();
    if s.len() != q.len() * n || !bottom_cross(q, r).is_subset(s) {
        return false;
    }
    let has = |a: usize, b: usize| s.contains(a * n + b);
    for c in s.ones() {
        let (a, b) = (c / n, c % n);
        for a2 in q.down_set(a).ones() {
            for b2 in r.down_set(b).ones() {
                if !has(a2, b2) {
                    return false;
                }
            }
        }
        for c2 in s.ones() {
            let (a2, b2) = (c2 / n, c2 % n);
            if b2 == b && !has(q.join(a, a2), b) {
                return false;
            }
            if a2 == a && !has(a, r.join(b, b2)) {
                return false;
            }
        }
    }
    true
}

/// The least bi-ideal containing `seed`.
pub fn bi_ideal_generated(seed: &Subset, q: &Jsl, r: &Jsl) -> BiIdeal {
    let n = r.len();
    let mut s = seed.clone();
    s.union_with(&bottom_cross(q, r));
    loop {
        let before = s.count_ones(..);
        let cells: Vec<usize> = s.ones().collect();
        for &c in &cells {
            for &c2 in &cells {
                let (a, b, a2, b2) = (c / n, c % n, c2 / n, c2 % n);
                if b == b2 {
                    s.insert(q.join(a, a2) * n + b);
                }
                if a == a2 {
                    s.insert(a * n + r.join(b, b2));
                }
            }
        }
        let cells: Vec<usize> = s.ones().collect();
        for c in cells {
            for a2 in q.down_set(c / n).ones() {
                for b2 in r.down_set(c % n).ones() {
                    s.insert(a2 * n + b2);
                }
            }
        }
        if s.count_ones(..) == before {
            return BiIdeal { left: q.clone(), right: r.clone(), cells: s };
        }
    }
}

/// `Q ⊗ R` as the semilattice of bi-ideals under inclusion.
#[derive(Clone, Debug)]
pub struct Tensor {
    left: Jsl,
    right: Jsl,
    jsl: Jsl,
    ideals: Vec<Subset>,
    index: HashMap<Subset, usize>,
    beta: Vec<usize>,
}

pub fn tensor(q: &Jsl, r: &Jsl) -> Result<Tensor> {
    let cells = q.len() * r.len();
    if cells > TENSOR_CELL_LIMIT {
        return Err(Error::TooLarge(format!("tensor with {cells} cells exceeds {TENSOR_CELL_LIMIT}")));
    }
    let gens: Vec<Subset> = (0..cells)
        .map(|c| bi_ideal_generated(&subset::singleton(cells, c), q, r).cells)
        .collect();
    let bottom = bi_ideal_generated(&subset::empty(cells), q, r).cells;
    let mut ideals = vec![bottom.clone()];
    let mut seen: HashMap<Subset, usize> = HashMap::from([(bottom, 0)]);
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for g in &gens {
            let mut u = ideals[i].clone();
            u.union_with(g);
            let next = bi_ideal_generated(&u, q, r).cells;
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), ideals.len());
                queue.push_back(ideals.len());
                ideals.push(next);
            }
        }
    }
    subset::sort_lex(&mut ideals);
    let index: HashMap<Subset, usize> = ideals.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let names = FinSet::new(ideals.iter().map(|s| ideal_name(s, q, r)))?;
    let jsl = Jsl::from_fn(names, |a, b| ideals[a].is_subset(&ideals[b]))?;
    let beta = gens.iter().map(|g| index[g]).collect();
    Ok(Tensor { left: q.clone(), right: r.clone(), jsl, ideals, index, beta })
}

fn ideal_name(s: &Subset, q: &Jsl, r: &Jsl) -> String {
    let n = r.len();
    let (qb, rb) = (q.bottom(), r.bottom());
    let cells: Vec<(usize, usize)> = s.ones().map(|c| (c / n, c % n)).filter(|&(a, b)| a != qb && b != rb).collect();
    let maximal: Vec<String> = cells
        .iter()
        .filter(|&&(a, b)| !cells.iter().any(|&(a2, b2)| (a2, b2) != (a, b) && q.leq(a, a2) && r.leq(b, b2)))
        .map(|&(a, b)| format!("{}⊗{}", q.name(a), r.name(b)))
        .collect();
    format!("<{}>", maximal.join(","))
}

impl Tensor {
    pub fn jsl(&self) -> &Jsl {
        &self.jsl
    }

    pub fn left(&self) -> &Jsl {
        &self.left
    }

    pub fn right(&self) -> &Jsl {
        &self.right
    }

    pub fn ideal(&self, i: usize) -> BiIdeal {
        BiIdeal { left: self.left.clone(), right: self.right.clone(), cells: self.ideals[i].clone() }
    }

    pub fn elem(&self, s: &Subset) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// `β(a, b)`, the bi-ideal generated by `(a, b)`.
    pub fn beta(&self, a: usize, b: usize) -> usize {
        self.beta[a * self.right.len() + b]
    }

    /// `β_g = g ∘ β`, as a table indexed by cells.
    pub fn bimorphism_of(&self, g: &JslMorphism) -> Vec<usize> {
        self.beta.iter().map(|&t| g.apply(t)).collect()
    }

    /// The unique morphism `f` with `f ∘ β = beta`.
    pub fn extend(&self, s: &Jsl, beta: &[usize]) -> Result<JslMorphism> {
        check_bilinear(beta, &self.left, &self.right, s)?;
        let map = self.ideals.iter().map(|cells| s.join_all(cells.ones().map(|c| beta[c]))).collect();
        JslMorphism::new(self.jsl.clone(), s.clone(), map)
    }
}

pub fn extend_bimorphism(beta: &[usize], q: &Jsl, r: &Jsl, s: &Jsl) -> Result<JslMorphism> {
    tensor(q, r)?.extend(s, beta)
}

/// Checks that a table `Q × R → S` preserves joins in each argument.
pub fn check_bilinear(beta: &[usize], q: &Jsl, r: &Jsl, s: &Jsl) -> Result<()> {
    let n = r.len();
    if beta.len() != q.len() * n || beta.iter().any(|&x| x >= s.len()) {
        return Err(Error::NotBilinear("table has the wrong shape".into()));
    }
    let at = |a: usize, b: usize| beta[a * n + b];
    let fail = |what: String| Err(Error::NotBilinear(what));
    for a in 0..q.len() {
        if at(a, r.bottom()) != s.bottom() {
            return fail(format!("({},{}) is not sent to bottom", q.name(a), r.name(r.bottom())));
        }
        for a2 in 0..q.len() {
            for b in 0..n {
                if at(q.join(a, a2), b) != s.join(at(a, b), at(a2, b)) {
                    return fail(format!("left join {} ∨ {} at {}", q.name(a), q.name(a2), r.name(b)));
                }
            }
        }
    }
    for b in 0..n {
        if at(q.bottom(), b) != s.bottom() {
            return fail(format!("({},{}) is not sent to bottom", q.name(q.bottom()), r.name(b)));
        }
        for b2 in 0..n {
            for a in 0..q.len() {
                if at(a, r.join(b, b2)) != s.join(at(a, b), at(a, b2)) {
                    return fail(format!("right join {} ∨ {} at {}", r.name(b), r.name(b2), q.name(a)));
                }
            }
        }
    }
    Ok(())
}

/// The tight morphisms `q → r` as a sub-semilattice of the hom-set.
pub fn tight_hom(q: &Jsl, r: &Jsl) -> HomSemilattice {
    let tight = hom(q, r).into_iter().filter(JslMorphism::is_tight).collect();
    HomSemilattice::from_morphisms(r, tight).expect("tight morphisms are closed under joins")
}

/// `Q ⊗_t R = Tight[Q^op, R]`.
pub fn tight_tensor(q: &Jsl, r: &Jsl) -> HomSemilattice {
    tight_hom(&q.op(), r)
}

/// `β^t(q0, r0) = ↑^{q0,r0} : Q^op → R`.
pub fn tight_beta(q: &Jsl, r: &Jsl, q0: usize, r0: usize) -> JslMorphism {
    JslMorphism::special_up(&q.op(), r, q0, r0)
}

/// `((a,c),(b,d)) ⟺ g(a,b) ∧ h(c,d)`, carriers in lexicographic order.
pub fn sync_product(g: &Rel, h: &Rel) -> Rel {
    let m = h.source().len();
    let k = h.target().len();
    Rel::from_fn(g.source().product(h.source()), g.target().product(h.target()), |x, y| {
        g.contains(x / m, y / k) && h.contains(x % m, y % k)
    })
}

pub fn sync_on_morphisms(r: &DepMorphism, s: &DepMorphism) -> Result<DepMorphism> {
    DepMorphism::new(
        sync_product(r.rel(), s.rel()),
        sync_product(r.dom(), s.dom()),
        sync_product(r.cod(), s.cod()),
    )
}

/// The relabelling `Pirr(Q ⊗_t R) ≅ Pirr Q ⊙ Pirr R` sending `↑^{j1,j2}` to `(j1,j2)`
/// and `↓^{m1,m2}` to `(m1,m2)`.
pub fn ts_iso(q: &Jsl, r: &Jsl) -> Result<DepMorphism> {
    let t = tight_tensor(q, r);
    let pirr_t = crate::equivalence::pirr_obj(&t.jsl);
    let (jq, jr, mq, mr) = (q.ji_list(), r.ji_list(), q.mi_list(), r.mi_list());
    let (t_ji, t_mi) = (t.jsl.ji_list(), t.jsl.mi_list());
    let mut ups = Vec::new();
    for (x, &j1) in jq.iter().enumerate() {
        for (y, &j2) in jr.iter().enumerate() {
            ups.push((x, y, tight_beta(q, r, j1, j2)));
        }
    }
    let mut downs = Vec::new();
    for (x, &m1) in mq.iter().enumerate() {
        for (y, &m2) in mr.iter().enumerate() {
            downs.push((x, y, JslMorphism::special_down(&q.op(), r, m1, m2)));
        }
    }
    let f = assign(&t, &t_ji, ups, jr.len())?;
    let g = assign(&t, &t_mi, downs, mr.len())?;
    let sync = sync_product(&crate::equivalence::pirr_obj(q), &crate::equivalence::pirr_obj(r));
    DepMorphism::bipartite_iso(&pirr_t, &sync, &f, &g)
}

fn assign(t: &HomSemilattice, elems: &[usize], named: Vec<(usize, usize, JslMorphism)>, width: usize) -> Result<Vec<usize>> {
    if named.len() != elems.len() {
        return Err(Error::Factorization(format!("{} irreducibles but {} generators", elems.len(), named.len())));
    }
    let mut out = vec![usize::MAX; elems.len()];
    for (x, y, f) in named {
        let i = t.index_of(&f).ok_or_else(|| Error::Factorization(format!("{} is not tight", f.describe())))?;
        let pos = elems
            .iter()
            .position(|&e| e == i)
            .ok_or_else(|| Error::Factorization(format!("{} is not irreducible", f.describe())))?;
        if out[pos] != usize::MAX {
            return Err(Error::Factorization(format!("{} arises twice", f.describe())));
        }
        out[pos] = x * width + y;
    }
    Ok(out)
}

/// `ν : (Q^op ⊗_t R^op)^op → Q ⊗_t R` and its inverse.
pub fn nu_iso(q: &Jsl, r: &Jsl) -> Result<(JslMorphism, JslMorphism)> {
    let src = tight_tensor(&q.op(), &r.op());
    let dst = tight_tensor(q, r);
    let jr = r.ji_list();
    let mr = r.mi_list();
    let forward = src
        .morphisms
        .iter()
        .map(|f| {
            let adj = f.adjoint();
            let g = JslMorphism::from_fn(q.op(), r.clone(), |x| {
                r.join_all(jr.iter().copied().filter(|&j| !q.leq(adj.apply(j), x)))
            })?;
            dst.index_of(&g).ok_or_else(|| Error::NotTight(g.describe()))
        })
        .collect::<Result<Vec<_>>>()?;
    let backward = dst
        .morphisms
        .iter()
        .map(|g| {
            let adj = g.adjoint();
            let f = JslMorphism::from_fn(q.clone(), r.op(), |x| {
                r.meet_all(mr.iter().copied().filter(|&m| !q.leq(x, adj.apply(m))))
            })?;
            src.index_of(&f).ok_or_else(|| Error::NotTight(f.describe()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((
        JslMorphism::new(src.jsl.op(), dst.jsl.clone(), forward)?,
        JslMorphism::new(dst.jsl.clone(), src.jsl.op(), backward)?,
    ))
}

fn check_index(i: usize, carrier: &FinSet) -> Result<()> {
    if i >= carrier.len() {
        return Err(Error::OutOfCarrier { element: i.to_string(), carrier: format!("{carrier:?}") });
    }
    Ok(())
}

fn product_rel(src: &FinSet, tgt: &FinSet, xs: &Subset, ys: &Subset) -> Rel {
    Rel::from_fn(src.clone(), tgt.clone(), |a, b| xs.contains(a) && ys.contains(b))
}

/// `Ğ[g_t] × H[h_s] : G → H`.
pub fn basic_biclique(g: &Rel, h: &Rel, gt: usize, hs: usize) -> Result<DepMorphism> {
    check_index(gt, g.target())?;
    check_index(hs, h.source())?;
    let rel = product_rel(g.source(), h.target(), &g.column(gt), h.row(hs));
    DepMorphism::new(rel, g.clone(), h.clone())
}

/// `in_Ğ(ḡ_s) × H[H_s] ∪ Ğ[G_t] × in_H(h̄_t) : G → H`.
pub fn basic_independent(g: &Rel, h: &Rel, gs: usize, ht: usize) -> Result<DepMorphism> {
    check_index(gs, g.source())?;
    check_index(ht, h.target())?;
    let gc = g.converse();
    let (n, m) = (g.source().len(), h.target().len());
    let left = gc.interior(&subset::complement(&subset::singleton(n, gs)));
    let right = h.interior(&subset::complement(&subset::singleton(m, ht)));
    let used_src = gc.up(&subset::full(g.target().len()));
    let used_tgt = h.up(&subset::full(h.source().len()));
    let rel = product_rel(g.source(), h.target(), &left, &used_tgt)
        .union(&product_rel(g.source(), h.target(), &used_src, &right))
        .expect("same type");
    DepMorphism::new(rel, g.clone(), h.clone())
}

/// The largest morphism `G → H`, namely `Ğ[G_t] × H[H_s]`.
pub fn top_dep(g: &Rel, h: &Rel) -> DepMorphism {
    let used_src = g.converse().up(&subset::full(g.target().len()));
    let used_tgt = h.up(&subset::full(h.source().len()));
    DepMorphism::new(product_rel(g.source(), h.target(), &used_src, &used_tgt), g.clone(), h.clone())
        .expect("the full biclique is a morphism")
}

/// Whether `r` is the union of the basic bicliques it contains.
pub fn is_tight_dep(r: &DepMorphism) -> bool {
    let (g, h) = (r.dom(), r.cod());
    let mut union = Rel::empty(g.source().clone(), h.target().clone());
    for gt in 0..g.target().len() {
        for hs in 0..h.source().len() {
            let b = product_rel(g.source(), h.target(), &g.column(gt), h.row(hs));
            if b.is_subset(r.rel()) {
                union = union.union(&b).expect("same type");
            }
        }
    }
    &union == r.rel()
}

/// Re-tuples a tight `G ⊙ H → I` into a tight `G → Ȟ ⊙ I`.
pub fn rtup(r: &DepMorphism, g: &Rel, h: &Rel, i: &Rel) -> Result<DepMorphism> {
    if r.dom() != &sync_product(g, h) || r.cod() != i {
        return Err(Error::TypeMismatch("morphism is not of type G ⊙ H → I".into()));
    }
    if !is_tight_dep(r) {
        return Err(Error::NotTight("re-tupling needs a tight morphism".into()));
    }
    let cod = sync_product(&h.converse(), i);
    let (hs, it) = (h.source().len(), i.target().len());
    let rel = Rel::from_fn(g.source().clone(), cod.target().clone(), |a, y| r.rel().contains(a * hs + y / it, y % it));
    DepMorphism::new(rel, g.clone(), cod)
}

/// Inverse of [`rtup`].
pub fn rtup_inverse(s: &DepMorphism, g: &Rel, h: &Rel, i: &Rel) -> Result<DepMorphism> {
    if s.dom() != g || s.cod() != &sync_product(&h.converse(), i) {
        return Err(Error::TypeMismatch("morphism is not of type G → Ȟ ⊙ I".into()));
    }
    if !is_tight_dep(s) {
        return Err(Error::NotTight("re-tupling needs a tight morphism".into()));
    }
    let dom = sync_product(g, h);
    let (hs, it) = (h.source().len(), i.target().len());
    let rel = Rel::from_fn(dom.source().clone(), i.target().clone(), |x, b| s.rel().contains(x / hs, (x % hs) * it + b));
    DepMorphism::new(rel, dom, i.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dep::dep_hom;
    use crate::equivalence::{open_mor, pirr_obj, Opens};
    use crate::jsl::enumerate::lattices_up_to;
    use proptest::prelude::*;

    fn all_bi_ideals(q: &Jsl, r: &Jsl) -> Vec<Subset> {
        let n = q.len() * r.len();
        subset::all_subsets(n).into_iter().filter(|s| is_bi_ideal(s, q, r)).collect()
    }

    fn arb_rel(max: usize, src: &'static str, tgt: &'static str) -> impl Strategy<Value = Rel> {
        (0..=max, 0..=max).prop_flat_map(move |(n, m)| {
            proptest::collection::vec(any::<bool>(), n * m)
                .prop_map(move |bits| Rel::from_fn(FinSet::numbered(src, n), FinSet::numbered(tgt, m), |a, b| bits[a * m + b]))
        })
    }

    fn total(g: &Rel) -> bool {
        g.rows().iter().all(|r| r.count_ones(..) > 0) && (0..g.target().len()).all(|b| g.column(b).count_ones(..) > 0)
    }

    fn lattices() -> Vec<Jsl> {
        lattices_up_to(4)
    }

    #[test]
    fn bi_ideal_extremes() {
        for q in &lattices() {
            for r in &lattices() {
                let n = q.len() * r.len();
                assert!(is_bi_ideal(&bottom_cross(q, r), q, r));
                assert!(is_bi_ideal(&subset::full(n), q, r));
                assert_eq!(bi_ideal_generated(&subset::empty(n), q, r).cells, bottom_cross(q, r));
                assert_eq!(bi_ideal_generated(&subset::full(n), q, r).cells, subset::full(n));
            }
        }
    }

    #[test]
    fn principal_down_set_need_not_be_bi_ideal() {
        let (q, r) = (Jsl::chain(3), Jsl::chain(2));
        let down = cell_set(&q, &r, [(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert!(!is_bi_ideal(&down, &q, &r));
        let mut found = false;
        for q in &lattices() {
            for r in &lattices() {
                for a in 0..q.len() {
                    for b in 0..r.len() {
                        let (da, db) = (q.down_set(a), r.down_set(b));
                        let cells = cell_set(q, r, da.ones().flat_map(|x| db.ones().map(move |y| (x, y))));
                        found |= !is_bi_ideal(&cells, q, r);
                    }
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn generated_is_least_over_small_pairs() {
        let small: Vec<Jsl> = lattices_up_to(3);
        for q in &small {
            for r in &small {
                let ideals = all_bi_ideals(q, r);
                for seed in subset::all_subsets(q.len() * r.len()) {
                    let mut meet = subset::full(seed.len());
                    for b in ideals.iter().filter(|b| seed.is_subset(b)) {
                        meet.intersect_with(b);
                    }
                    assert_eq!(bi_ideal_generated(&seed, q, r).cells, meet);
                }
            }
        }
    }

    #[test]
    fn tensor_enumerates_every_bi_ideal() {
        let small: Vec<Jsl> = lattices_up_to(3).into_iter().chain([Jsl::powerset(&FinSet::range(2))]).collect();
        for q in &small {
            for r in &small {
                if q.len() * r.len() > 12 {
                    continue;
                }
                let t = tensor(q, r).unwrap();
                let mut ideals = all_bi_ideals(q, r);
                subset::sort_lex(&mut ideals);
                assert_eq!(t.ideals, ideals);
            }
        }
    }

    #[test]
    fn tensor_guard() {
        let big = Jsl::chain(5);
        assert!(matches!(tensor(&big, &big), Err(Error::TooLarge(_))));
    }

    #[test]
    fn tensor_counts_and_unit() {
        let two = Jsl::chain(2);
        for q in &lattices() {
            assert!(tensor(&two, q).unwrap().jsl().is_isomorphic(q));
            for r in &lattices() {
                let t = tensor(q, r).unwrap();
                assert_eq!(t.jsl().join_irreducibles().count_ones(..), q.ji_list().len() * r.ji_list().len());
                if q.is_distributive() && r.is_distributive() {
                    assert!(t.jsl().is_distributive());
                }
                assert!(t.jsl().is_isomorphic(tensor(r, q).unwrap().jsl()));
            }
        }
    }

    #[test]
    fn beta_is_almost_an_order_embedding() {
        for q in &lattices() {
            for r in &lattices() {
                let t = tensor(q, r).unwrap();
                let beta: Vec<usize> = (0..q.len() * r.len()).map(|c| t.beta(c / r.len(), c % r.len())).collect();
                check_bilinear(&beta, q, r, t.jsl()).unwrap();
                let nonbottom: Vec<(usize, usize)> = (0..q.len())
                    .flat_map(|a| (0..r.len()).map(move |b| (a, b)))
                    .filter(|&(a, b)| a != q.bottom() && b != r.bottom())
                    .collect();
                for &(a1, b1) in &nonbottom {
                    for &(a2, b2) in &nonbottom {
                        let lhs = t.jsl().leq(t.beta(a1, b1), t.beta(a2, b2));
                        assert_eq!(lhs, q.leq(a1, a2) && r.leq(b1, b2));
                    }
                }
            }
        }
    }

    #[test]
    fn universality_round_trips() {
        let small = lattices_up_to(3);
        for q in &small {
            for r in &small {
                let t = tensor(q, r).unwrap();
                let beta: Vec<usize> = (0..q.len() * r.len()).map(|c| t.beta(c / r.len(), c % r.len())).collect();
                assert_eq!(t.extend(t.jsl(), &beta).unwrap(), JslMorphism::identity(t.jsl()));
                for s in &small {
                    for g in hom(t.jsl(), s) {
                        let bg = t.bimorphism_of(&g);
                        let f = t.extend(s, &bg).unwrap();
                        assert_eq!(f, g);
                        // the value on a bi-ideal is the join over its irreducible pairs
                        for i in 0..t.jsl().len() {
                            let b = t.ideal(i);
                            let via_irr = s.join_all(
                                q.ji_list().into_iter().flat_map(|j1| r.ji_list().into_iter().map(move |j2| (j1, j2)))
                                    .filter(|&(j1, j2)| b.contains(j1, j2))
                                    .map(|(j1, j2)| bg[j1 * r.len() + j2]),
                            );
                            assert_eq!(f.apply(i), via_irr);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn non_bilinear_is_rejected() {
        let two = Jsl::chain(2);
        let err = extend_bimorphism(&[0, 0, 0, 0], &two, &two, &two).map(|_| ());
        assert!(err.is_ok());
        assert!(matches!(extend_bimorphism(&[0, 1, 0, 1], &two, &two, &two), Err(Error::NotBilinear(_))));
        assert!(matches!(extend_bimorphism(&[0, 0], &two, &two, &two), Err(Error::NotBilinear(_))));
    }

    #[test]
    fn tight_tensor_counts() {
        for q in &lattices() {
            for r in &lattices() {
                let t = tight_tensor(q, r);
                assert_eq!(t.jsl.ji_list().len(), q.ji_list().len() * r.ji_list().len());
                assert_eq!(t.jsl.mi_list().len(), q.mi_list().len() * r.mi_list().len());
                if q.is_distributive() || r.is_distributive() {
                    assert_eq!(tight_hom(q, r).morphisms.len(), hom(q, r).len());
                }
                if q.is_distributive() && r.is_distributive() {
                    assert!(t.jsl.is_isomorphic(tensor(q, r).unwrap().jsl()));
                }
            }
        }
    }

    #[test]
    fn tight_part_of_m3_endomorphisms() {
        let m3 = Jsl::m3();
        let tight = tight_hom(&m3, &m3);
        assert_eq!(tight.jsl.ji_list().len(), 9);
        assert!(tight.index_of(&JslMorphism::identity(&m3)).is_none());
    }

    #[test]
    fn distributive_tensor_is_down_sets_of_products() {
        let (c2, c3) = (Jsl::chain(2), Jsl::chain(3));
        let square = Jsl::powerset(&FinSet::range(2));
        for (q, r) in [(&c2, &c3), (&c3, &c3), (&square, &c2), (&square, &square)] {
            let t = tensor(q, r).unwrap();
            let (jq, jr) = (q.ji_list(), r.ji_list());
            let k = jr.len();
            let prod = crate::poset::Poset::from_fn(FinSet::range(jq.len() * k), |x, y| {
                q.leq(jq[x / k], jq[y / k]) && r.leq(jr[x % k], jr[y % k])
            })
            .unwrap();
            let restrict = |i: usize| {
                let b = t.ideal(i);
                subset::from_indices(jq.len() * k, (0..jq.len() * k).filter(|&x| b.contains(jq[x / k], jr[x % k])))
            };
            let mut images: Vec<Subset> = (0..t.jsl().len()).map(restrict).collect();
            for (x, &j1) in jq.iter().enumerate() {
                for (y, &j2) in jr.iter().enumerate() {
                    let expected = subset::from_indices(jq.len() * k, (0..jq.len() * k).filter(|&z| prod.leq(z, x * k + y)));
                    assert_eq!(restrict(t.beta(j1, j2)), expected);
                }
            }
            assert!(images.iter().all(|s| prod.is_down_set(s)));
            subset::sort_lex(&mut images);
            images.dedup();
            assert_eq!(images.len(), prod.down_sets().len());
        }
    }

    #[test]
    fn sync_examples() {
        let x = FinSet::new(["a", "b"]).unwrap();
        let y = FinSet::new(["c", "d", "e"]).unwrap();
        let prod = sync_product(&Rel::identity(x.clone()), &Rel::identity(y.clone()));
        assert_eq!(prod, Rel::identity(x.product(&y)));
        assert_eq!(prod.source().name(1), "(a,d)");
    }

    #[test]
    fn ts_iso_on_chains_of_two() {
        let two = Jsl::chain(2);
        let iso = ts_iso(&two, &two).unwrap();
        assert_eq!(iso.dom().source().len(), 1);
        assert_eq!(iso.cod().target().len(), 1);
        assert!(iso.is_iso());
    }

    #[test]
    fn ts_iso_small_lattices() {
        for q in &lattices() {
            for r in &lattices() {
                let iso = ts_iso(q, r).unwrap();
                assert!(iso.is_iso());
                let (pq, pr) = (pirr_obj(q), pirr_obj(r));
                assert_eq!(iso.dom().pair_count(), pq.pair_count() * pr.pair_count());
                let (sq, sr) = (&pq, &pr);
                let sync = sync_product(sq, sr);
                let f: Vec<usize> = (0..iso.dom().source().len())
                    .map(|a| (0..sync.source().len()).find(|&x| iso.rel().row(a) == sync.row(x)).unwrap())
                    .collect();
                let expected = Rel::from_fn(iso.minus().source().clone(), sync.source().clone(), |a, x| sync.row(x).is_subset(sync.row(f[a])));
                assert_eq!(iso.minus(), &expected);
            }
        }
    }

    #[test]
    fn nu_round_trips_and_generators() {
        let small: Vec<Jsl> = lattices_up_to(4).into_iter().chain([Jsl::m3()]).collect();
        for q in &small {
            for r in &small {
                if q.len() * r.len() > 16 {
                    continue;
                }
                let (nu, inv) = nu_iso(q, r).unwrap();
                assert_eq!(nu.then(&inv).unwrap(), JslMorphism::identity(nu.dom()));
                assert_eq!(inv.then(&nu).unwrap(), JslMorphism::identity(nu.cod()));
                let src = tight_tensor(&q.op(), &r.op());
                let dst = tight_tensor(q, r);
                for j1 in q.ji_list() {
                    for j2 in r.ji_list() {
                        let down = JslMorphism::special_down(q, &r.op(), j1, j2);
                        let up = tight_beta(q, r, j1, j2);
                        let i = src.index_of(&down).expect("generator is tight");
                        assert_eq!(nu.apply(i), dst.index_of(&up).unwrap());
                    }
                }
                let (nu_op, _) = nu_iso(&q.op(), &r.op()).unwrap();
                assert_eq!(nu_op.map(), inv.map());
            }
        }
    }

    #[test]
    fn index_errors() {
        let g = Rel::identity(FinSet::range(2));
        assert!(matches!(basic_biclique(&g, &g, 2, 0), Err(Error::OutOfCarrier { .. })));
        assert!(matches!(basic_independent(&g, &g, 0, 5), Err(Error::OutOfCarrier { .. })));
    }

    proptest! {
        #[test]
        fn biclique_and_independent_laws(g in arb_rel(3, "g", "x"), h in arb_rel(3, "h", "y")) {
            let (og, oh) = (Opens::of(&g), Opens::of(&h));
            let top = top_dep(&g, &h);
            let homs = dep_hom(&g, &h).unwrap();
            for gt in 0..g.target().len() {
                for hs in 0..h.source().len() {
                    let b = basic_biclique(&g, &h, gt, hs).unwrap();
                    prop_assert!(is_tight_dep(&b));
                    let inner = g.interior(&subset::complement(&subset::singleton(g.target().len(), gt)));
                    let expected = JslMorphism::special_up(og.jsl(), oh.jsl(), og.elem(&inner).unwrap(), oh.elem(h.row(hs)).unwrap());
                    prop_assert_eq!(open_mor(&b), expected);
                    prop_assert_eq!(b.dual(), basic_biclique(&h.converse(), &g.converse(), hs, gt).unwrap());
                }
            }
            for gs in 0..g.source().len() {
                for ht in 0..h.target().len() {
                    let d = basic_independent(&g, &h, gs, ht).unwrap();
                    prop_assert!(is_tight_dep(&d));
                    let cl_g = g.cl(&subset::singleton(g.source().len(), gs));
                    let cl_h = h.converse().cl(&subset::singleton(h.target().len(), ht));
                    let cut = product_rel(g.source(), h.target(), &cl_g, &cl_h).complement();
                    prop_assert_eq!(d.rel(), &top.rel().intersection(&cut).unwrap());
                    let inner = h.interior(&subset::complement(&subset::singleton(h.target().len(), ht)));
                    let expected = JslMorphism::special_down(og.jsl(), oh.jsl(), og.elem(g.row(gs)).unwrap(), oh.elem(&inner).unwrap());
                    prop_assert_eq!(open_mor(&d), expected);
                    prop_assert_eq!(d.dual(), basic_independent(&h.converse(), &g.converse(), ht, gs).unwrap());
                    for r in &homs {
                        prop_assert_eq!(r.rel().is_subset(d.rel()), !r.rel().contains(gs, ht));
                    }
                }
            }
            for r in &homs {
                prop_assert_eq!(is_tight_dep(r), open_mor(r).is_tight());
            }
        }

        #[test]
        fn sync_bicliques_and_reducedness(g in arb_rel(3, "g", "x"), h in arb_rel(3, "h", "y")) {
            let s = sync_product(&g, &h);
            let (m, k) = (h.source().len(), h.target().len());
            for x in 0..s.source().len() {
                let hr = h.row(x % m);
                let expected: Vec<usize> = g.row(x / m).ones().flat_map(|a| hr.ones().map(move |b| a * k + b)).collect();
                prop_assert_eq!(s.row(x).ones().collect::<Vec<_>>(), expected);
            }
            let nonempty = [g.source().len(), g.target().len(), h.source().len(), h.target().len()].iter().all(|&n| n > 0);
            if nonempty {
                prop_assert_eq!(s.is_reduced(), g.is_reduced() && h.is_reduced());
            }
        }

        #[test]
        fn sync_is_functorial_and_keeps_monos(g in arb_rel(3, "g", "x"), h in arb_rel(3, "h", "y")) {
            let gg = sync_on_morphisms(&DepMorphism::identity(&g), &DepMorphism::identity(&h)).unwrap();
            prop_assert_eq!(gg, DepMorphism::identity(&sync_product(&g, &h)));
            let homs = dep_hom(&g, &g).unwrap();
            for r in homs.iter().take(6) {
                for s in dep_hom(&h, &h).unwrap().iter().take(6) {
                    let rs = sync_on_morphisms(r, s).unwrap();
                    let (sm, sp) = (sync_product(r.minus(), s.minus()), sync_product(r.plus(), s.plus()));
                    prop_assert!(sm.is_subset(rs.minus()) && sp.is_subset(rs.plus()));
                    if total(&g) && total(&h) {
                        prop_assert_eq!(rs.minus(), &sm);
                        prop_assert_eq!(rs.plus(), &sp);
                    }
                    if r.is_mono() && s.is_mono() {
                        prop_assert!(rs.is_mono());
                    }
                }
            }
        }

        #[test]
        fn rtup_round_trips(g in arb_rel(2, "g", "x"), h in arb_rel(2, "h", "y"), i in arb_rel(2, "i", "z")) {
            let gh = sync_product(&g, &h);
            let hi = sync_product(&h.converse(), &i);
            let left: Vec<DepMorphism> = dep_hom(&gh, &i).unwrap().into_iter().filter(is_tight_dep).collect();
            let right: Vec<DepMorphism> = dep_hom(&g, &hi).unwrap().into_iter().filter(is_tight_dep).collect();
            prop_assert_eq!(left.len(), right.len());
            let empty = DepMorphism::empty(&gh, &i);
            prop_assert!(rtup(&empty, &g, &h, &i).unwrap().rel().is_empty());
            for r in &left {
                let s = rtup(r, &g, &h, &i).unwrap();
                prop_assert!(right.contains(&s));
                prop_assert_eq!(&rtup_inverse(&s, &g, &h, &i).unwrap(), r);
                for r2 in &left {
                    let u = r.union(r2).unwrap();
                    prop_assert_eq!(rtup(&u, &g, &h, &i).unwrap(), s.union(&rtup(r2, &g, &h, &i).unwrap()).unwrap());
                }
            }
            for gt in 0..gh.target().len() {
                for is in 0..i.source().len() {
                    let b = basic_biclique(&gh, &i, gt, is).unwrap();
                    let (xt, yt) = (gt / h.target().len(), gt % h.target().len());
                    let expected = basic_biclique(&g, &hi, xt, yt * i.source().len() + is).unwrap();
                    prop_assert_eq!(rtup(&b, &g, &h, &i).unwrap(), expected);
                }
            }
        }
    }
}

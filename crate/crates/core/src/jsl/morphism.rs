use std::fmt;

use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::jsl::Jsl;
use crate::subset::{self, Subset};

/// A map preserving the bottom and binary joins.
#[derive(Clone, PartialEq, Eq)]
pub struct JslMorphism {
    dom: Jsl,
    cod: Jsl,
    map: Vec<usize>,
}

impl JslMorphism {
    pub fn new(dom: Jsl, cod: Jsl, map: Vec<usize>) -> Result<JslMorphism> {
        if map.len() != dom.len() {
            return Err(Error::TypeMismatch(format!("map has {} entries for {} elements", map.len(), dom.len())));
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= cod.len()) {
            return Err(Error::OutOfCarrier { element: bad.to_string(), carrier: cod.carrier().names().join(",") });
        }
        if map[dom.bottom()] != cod.bottom() {
            return Err(Error::NotAMorphism(format!("{} is not sent to the bottom", dom.name(dom.bottom()))));
        }
        let n = dom.len();
        for a in 0..n {
            for b in (a + 1)..n {
                if map[dom.join(a, b)] != cod.join(map[a], map[b]) {
                    return Err(Error::NotAMorphism(format!("join of ({}, {}) is not preserved", dom.name(a), dom.name(b))));
                }
            }
        }
        Ok(JslMorphism { dom, cod, map })
    }

    pub fn from_fn(dom: Jsl, cod: Jsl, f: impl Fn(usize) -> usize) -> Result<JslMorphism> {
        let map = (0..dom.len()).map(f).collect();
        JslMorphism::new(dom, cod, map)
    }

    /// Builds from element names, `pairs` listing `(x, f(x))` for every `x`.
    pub fn from_named(dom: Jsl, cod: Jsl, pairs: &[(&str, &str)]) -> Result<JslMorphism> {
        let mut map = vec![usize::MAX; dom.len()];
        for (x, y) in pairs {
            map[dom.carrier().require(x)?] = cod.carrier().require(y)?;
        }
        if let Some(x) = map.iter().position(|&y| y == usize::MAX) {
            return Err(Error::NotAMorphism(format!("no image for {}", dom.name(x))));
        }
        JslMorphism::new(dom, cod, map)
    }

    pub fn identity(q: &Jsl) -> JslMorphism {
        JslMorphism { dom: q.clone(), cod: q.clone(), map: (0..q.len()).collect() }
    }

    /// The constantly-bottom morphism.
    pub fn bottom(dom: &Jsl, cod: &Jsl) -> JslMorphism {
        JslMorphism { dom: dom.clone(), cod: cod.clone(), map: vec![cod.bottom(); dom.len()] }
    }

    pub fn dom(&self) -> &Jsl {
        &self.dom
    }

    pub fn cod(&self) -> &Jsl {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `g ∘ self`
    pub fn then(&self, g: &JslMorphism) -> Result<JslMorphism> {
        if self.cod != g.dom {
            return Err(Error::TypeMismatch("codomain does not match domain".into()));
        }
        Ok(JslMorphism { dom: self.dom.clone(), cod: g.cod.clone(), map: self.map.iter().map(|&y| g.map[y]).collect() })
    }

    /// `f_*(r) = ⋁{ q : f(q) ≤ r }`, a morphism `cod^op -> dom^op`.
    pub fn adjoint(&self) -> JslMorphism {
        let (q, r) = (&self.dom, &self.cod);
        let map = (0..r.len()).map(|y| q.join_all((0..q.len()).filter(|&x| r.leq(self.map[x], y)))).collect();
        JslMorphism { dom: r.op(), cod: q.op(), map }
    }

    pub fn image(&self) -> Subset {
        subset::from_indices(self.cod.len(), self.map.iter().copied())
    }

    pub fn is_mono(&self) -> bool {
        self.image().count_ones(..) == self.dom.len()
    }

    pub fn is_epi(&self) -> bool {
        self.image().count_ones(..) == self.cod.len()
    }

    /// `J(cod) ⊆ f[J(dom)]`
    pub fn hits_join_irreducibles(&self) -> bool {
        let hit = subset::from_indices(self.cod.len(), self.dom.join_irreducibles().ones().map(|j| self.map[j]));
        self.cod.join_irreducibles().is_subset(&hit)
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono() && self.is_epi()
    }

    pub fn inverse(&self) -> Option<JslMorphism> {
        if !self.is_iso() {
            return None;
        }
        let mut inv = vec![0; self.cod.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Some(JslMorphism { dom: self.cod.clone(), cod: self.dom.clone(), map: inv })
    }

    /// Pointwise order.
    pub fn leq(&self, other: &JslMorphism) -> bool {
        self.map.iter().zip(&other.map).all(|(&a, &b)| self.cod.leq(a, b))
    }

    /// Pointwise join.
    pub fn join(&self, other: &JslMorphism) -> JslMorphism {
        let map = self.map.iter().zip(&other.map).map(|(&a, &b)| self.cod.join(a, b)).collect();
        JslMorphism { dom: self.dom.clone(), cod: self.cod.clone(), map }
    }

    /// `x ↦ ⊥` if `x ≤ q0`, else `r0`.
    pub fn special_up(q: &Jsl, r: &Jsl, q0: usize, r0: usize) -> JslMorphism {
        let map = (0..q.len()).map(|x| if q.leq(x, q0) { r.bottom() } else { r0 }).collect();
        JslMorphism { dom: q.clone(), cod: r.clone(), map }
    }

    /// `⊥ ↦ ⊥`, `x ↦ r0` for `⊥ < x ≤ q0`, everything else to the top.
    pub fn special_down(q: &Jsl, r: &Jsl, q0: usize, r0: usize) -> JslMorphism {
        let map = (0..q.len())
            .map(|x| {
                if x == q.bottom() {
                    r.bottom()
                } else if q.leq(x, q0) {
                    r0
                } else {
                    r.top()
                }
            })
            .collect();
        JslMorphism { dom: q.clone(), cod: r.clone(), map }
    }

    /// All `(m, j) ∈ M(dom) × J(cod)` with `↑^{m,j} ≤ f`.
    pub fn tight_witness(&self) -> Vec<(usize, usize)> {
        let (q, r) = (&self.dom, &self.cod);
        let mut w = Vec::new();
        for m in q.meet_irreducibles().ones() {
            for j in r.join_irreducibles().ones() {
                if (0..q.len()).all(|x| q.leq(x, m) || r.leq(j, self.map[x])) {
                    w.push((m, j));
                }
            }
        }
        w
    }

    /// The witness set when `f` is the join of the `↑^{m,j}` below it.
    pub fn tight_decomposition(&self) -> Option<Vec<(usize, usize)>> {
        let w = self.tight_witness();
        let (q, r) = (&self.dom, &self.cod);
        let joined = (0..q.len()).all(|x| r.join_all(w.iter().filter(|&&(m, _)| !q.leq(x, m)).map(|&(_, j)| j)) == self.map[x]);
        joined.then_some(w)
    }

    pub fn is_tight(&self) -> bool {
        self.tight_decomposition().is_some()
    }

    pub fn describe(&self) -> String {
        let parts: Vec<String> = (0..self.dom.len()).map(|x| format!("{}->{}", self.dom.name(x), self.cod.name(self.map[x]))).collect();
        parts.join(" ")
    }
}

impl fmt::Debug for JslMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "JslMorphism[{}]", self.describe())
    }
}

/// Every morphism `q -> r`, found by assigning monotone images to `J(q)`.
pub fn hom(q: &Jsl, r: &Jsl) -> Vec<JslMorphism> {
    let mut ji = q.ji_list();
    ji.sort_by_key(|&j| q.down_set(j).count_ones(..));
    let below: Vec<Subset> = (0..q.len()).map(|x| q.ji_below(x)).collect();
    let mut images = vec![usize::MAX; q.len()];
    let mut out = Vec::new();
    assign(0, &ji, q, r, &below, &mut images, &mut out);
    out
}

fn assign(k: usize, ji: &[usize], q: &Jsl, r: &Jsl, below: &[Subset], images: &mut Vec<usize>, out: &mut Vec<JslMorphism>) {
    if k == ji.len() {
        let map: Vec<usize> = (0..q.len()).map(|x| r.join_all(below[x].ones().map(|j| images[j]))).collect();
        let n = q.len();
        let ok = (0..n).all(|a| (a + 1..n).all(|b| map[q.join(a, b)] == r.join(map[a], map[b])));
        if ok {
            out.push(JslMorphism { dom: q.clone(), cod: r.clone(), map });
        }
        return;
    }
    let j = ji[k];
    // every smaller irreducible is assigned already
    let floor = r.join_all(ji[..k].iter().filter(|&&i| q.leq(i, j)).map(|&i| images[i]));
    for y in r.up_set(floor).ones() {
        images[j] = y;
        assign(k + 1, ji, q, r, below, images, out);
    }
    images[j] = usize::MAX;
}

/// `JSL[q, r]` under the pointwise order, with the morphism for each element.
#[derive(Clone, Debug)]
pub struct HomSemilattice {
    pub jsl: Jsl,
    pub morphisms: Vec<JslMorphism>,
}

impl HomSemilattice {
    pub fn index_of(&self, f: &JslMorphism) -> Option<usize> {
        self.morphisms.iter().position(|g| g.map == f.map)
    }
}

pub fn hom_semilattice(q: &Jsl, r: &Jsl) -> HomSemilattice {
    HomSemilattice::from_morphisms(r, hom(q, r)).expect("hom-set is a join-semilattice")
}

impl HomSemilattice {
    /// A join-closed family of morphisms into `r`, ordered pointwise.
    pub fn from_morphisms(r: &Jsl, morphisms: Vec<JslMorphism>) -> Result<HomSemilattice> {
        let names = FinSet::new(morphisms.iter().map(|f| {
            let imgs: Vec<&str> = f.map.iter().map(|&y| r.name(y)).collect();
            format!("[{}]", imgs.join(","))
        }))?;
        let jsl = Jsl::from_fn(names, |a, b| morphisms[a].leq(&morphisms[b]))?;
        Ok(HomSemilattice { jsl, morphisms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jsl::enumerate::lattices_up_to;
    use proptest::prelude::*;

    fn brute_hom(q: &Jsl, r: &Jsl) -> Vec<Vec<usize>> {
        let n = q.len();
        let mut out = Vec::new();
        let total = r.len().pow(n as u32);
        for code in 0..total {
            let map: Vec<usize> = (0..n).map(|i| code / r.len().pow(i as u32) % r.len()).collect();
            if JslMorphism::new(q.clone(), r.clone(), map.clone()).is_ok() {
                out.push(map);
            }
        }
        out.sort();
        out
    }

    fn small() -> Vec<Jsl> {
        lattices_up_to(4).into_iter().chain([Jsl::m3(), Jsl::n5()]).collect()
    }

    #[test]
    fn rejects_non_morphism() {
        let c = Jsl::chain(3);
        assert!(matches!(JslMorphism::new(c.clone(), c.clone(), vec![1, 1, 2]), Err(Error::NotAMorphism(_))));
        let m3 = Jsl::m3();
        let err = JslMorphism::new(m3.clone(), m3.clone(), vec![0, 1, 1, 3, 4]).unwrap_err();
        assert!(matches!(err, Error::NotAMorphism(_)));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for q in small() {
            for r in small() {
                let mut got: Vec<Vec<usize>> = hom(&q, &r).into_iter().map(|f| f.map).collect();
                got.sort();
                assert_eq!(got, brute_hom(&q, &r));
            }
        }
    }

    #[test]
    fn hom_from_two_counts_elements() {
        let two = Jsl::chain(2);
        for q in small() {
            assert_eq!(hom(&two, &q).len(), q.len());
        }
    }

    #[test]
    fn adjoint_of_identity() {
        let m3 = Jsl::m3();
        let id = JslMorphism::identity(&m3);
        assert_eq!(id.adjoint(), JslMorphism::identity(&m3.op()));
    }

    #[test]
    fn adjoint_of_image_is_preimage() {
        let x = FinSet::new(["a", "b", "c"]).unwrap();
        let y = FinSet::new(["u", "v"]).unwrap();
        let f = [0usize, 0, 1];
        let (px, py) = (Jsl::powerset(&x), Jsl::powerset(&y));
        let set_of = |p: &Jsl, u: &FinSet, i: usize| {
            let name = p.name(i);
            let inner = &name[1..name.len() - 1];
            let names: Vec<&str> = if inner.is_empty() { vec![] } else { inner.split(',').collect() };
            u.subset(&names).unwrap()
        };
        let find = |p: &Jsl, u: &FinSet, s: &Subset| p.index_of(&u.subset_name(s)).unwrap();
        let image = JslMorphism::from_fn(px.clone(), py.clone(), |i| {
            let s = set_of(&px, &x, i);
            find(&py, &y, &subset::from_indices(2, s.ones().map(|a| f[a])))
        })
        .unwrap();
        let adj = image.adjoint();
        for v in 0..py.len() {
            let t = set_of(&py, &y, v);
            let pre = subset::from_indices(3, (0..3).filter(|&a| t.contains(f[a])));
            assert_eq!(adj.apply(v), find(&px, &x, &pre));
        }
    }

    #[test]
    fn special_morphism_laws() {
        for q in small() {
            for r in small() {
                let bot = JslMorphism::bottom(&q, &r);
                assert_eq!(JslMorphism::special_up(&q, &r, q.top(), r.bottom()), bot);
                assert_eq!(JslMorphism::special_down(&q, &r, q.top(), r.bottom()), bot);
                let homs = hom_semilattice(&q, &r);
                let top = &homs.morphisms[homs.jsl.top()];
                for r0 in 0..r.len() {
                    assert_eq!(&JslMorphism::special_down(&q, &r, q.bottom(), r0), top);
                }
                for q0 in 0..q.len() {
                    for r0 in 0..r.len() {
                        let up = JslMorphism::special_up(&q, &r, q0, r0);
                        assert!(JslMorphism::new(q.clone(), r.clone(), up.map.clone()).is_ok());
                        for q1 in 0..q.len() {
                            for r1 in 0..r.len() {
                                let down = JslMorphism::special_down(&q, &r, q1, r1);
                                assert!(JslMorphism::new(q.clone(), r.clone(), down.map.clone()).is_ok());
                                assert_eq!(up.leq(&down), q.leq(q1, q0) || r.leq(r0, r1));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn m3_identity_is_not_tight() {
        let m3 = Jsl::m3();
        assert!(!JslMorphism::identity(&m3).is_tight());
        assert!(JslMorphism::identity(&Jsl::chain(4)).is_tight());
        assert!(JslMorphism::bottom(&m3, &m3).is_tight());
    }

    #[test]
    fn tight_matches_generated_joins() {
        for q in small() {
            for r in small() {
                let ups: Vec<JslMorphism> = q
                    .meet_irreducibles()
                    .ones()
                    .flat_map(|m| r.join_irreducibles().ones().map(move |j| (m, j)))
                    .map(|(m, j)| JslMorphism::special_up(&q, &r, m, j))
                    .collect();
                let mut joins = vec![JslMorphism::bottom(&q, &r)];
                let mut i = 0;
                while i < joins.len() {
                    for u in &ups {
                        let g = joins[i].join(u);
                        if !joins.contains(&g) {
                            joins.push(g);
                        }
                    }
                    i += 1;
                }
                for f in hom(&q, &r) {
                    assert_eq!(f.is_tight(), joins.contains(&f), "{f:?}");
                }
            }
        }
    }

    #[test]
    fn into_or_out_of_boolean_is_tight() {
        let b = Jsl::powerset(&FinSet::range(2));
        for q in small() {
            assert!(hom(&q, &b).iter().all(JslMorphism::is_tight));
            assert!(hom(&b, &q).iter().all(JslMorphism::is_tight));
        }
    }

    #[test]
    fn hom_meet_is_not_pointwise() {
        let m3 = Jsl::m3();
        let hs = hom_semilattice(&m3, &m3);
        // killing one atom while fixing the rest does not preserve x1 ∨ x2
        assert!(JslMorphism::new(m3.clone(), m3.clone(), vec![0, 0, 2, 3, 4]).is_err());
        assert!(JslMorphism::new(m3.clone(), m3.clone(), vec![0, 1, 2, 0, 4]).is_err());
        let f1 = JslMorphism::special_up(&m3, &m3, 1, 2);
        let f3 = JslMorphism::special_up(&m3, &m3, 3, 2);
        let g = hs.jsl.meet(hs.index_of(&f1).unwrap(), hs.index_of(&f3).unwrap());
        assert_eq!(hs.morphisms[g], JslMorphism::bottom(&m3, &m3));
        let pointwise: Vec<usize> = (0..5).map(|x| m3.meet(f1.apply(x), f3.apply(x))).collect();
        assert_eq!(pointwise[2], 2);
    }

    proptest! {
        #[test]
        fn adjunction_and_involution(a in 0usize..64, b in 0usize..64, pick in 0usize..10_000) {
            let all = small();
            let (q, r) = (&all[a % all.len()], &all[b % all.len()]);
            let homs = hom(q, r);
            let f = &homs[pick % homs.len()];
            let adj = f.adjoint();
            prop_assert!(JslMorphism::new(adj.dom().clone(), adj.cod().clone(), adj.map().to_vec()).is_ok());
            for x in 0..q.len() {
                for y in 0..r.len() {
                    prop_assert_eq!(r.leq(f.apply(x), y), q.leq(x, adj.apply(y)));
                }
            }
            prop_assert_eq!(&adj.adjoint(), f);
            prop_assert_eq!(f.is_mono(), adj.is_epi());
            prop_assert_eq!(f.is_epi(), f.hits_join_irreducibles());
        }

        #[test]
        fn tight_closed_under_composition_and_join(a in 0usize..64, b in 0usize..64, c in 0usize..64, p1 in 0usize..10_000, p2 in 0usize..10_000, p3 in 0usize..10_000) {
            let all = small();
            let (q, r, s) = (&all[a % all.len()], &all[b % all.len()], &all[c % all.len()]);
            let qr = hom(q, r);
            let rs = hom(r, s);
            let f = &qr[p1 % qr.len()];
            let g = &rs[p2 % rs.len()];
            let f2 = &qr[p3 % qr.len()];
            if f.is_tight() {
                prop_assert!(f.then(g).unwrap().is_tight());
                if f2.is_tight() {
                    prop_assert!(f.join(f2).is_tight());
                }
            }
            if g.is_tight() {
                prop_assert!(f.then(g).unwrap().is_tight());
            }
        }
    }
}

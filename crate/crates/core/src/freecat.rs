//! Free posets, join-semilattices, distributive lattices and boolean algebras, and Birkhoff duality.

use crate::equivalence::Opens;
use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::jsl::{Jsl, JslMorphism};
use crate::poset::Poset;
use crate::subset::{self, Subset};

/// Capabilities of a lattice beyond its joins.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flags {
    pub distributive: bool,
    pub boolean: bool,
}

/// A finite lattice with validated capability flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    jsl: Jsl,
    flags: Flags,
}

impl Lattice {
    pub fn new(jsl: Jsl) -> Lattice {
        let distributive = jsl.is_distributive();
        let boolean = distributive && jsl.len() == 1 << jsl.ji_list().len();
        Lattice { jsl, flags: Flags { distributive, boolean } }
    }

    pub fn distributive(jsl: Jsl) -> Result<Lattice> {
        let l = Lattice::new(jsl);
        if !l.flags.distributive {
            return Err(Error::NotDistributive);
        }
        Ok(l)
    }

    pub fn boolean(jsl: Jsl) -> Result<Lattice> {
        let l = Lattice::new(jsl);
        if !l.flags.boolean {
            return Err(Error::NotBoolean);
        }
        Ok(l)
    }

    pub fn jsl(&self) -> &Jsl {
        &self.jsl
    }

    pub fn flags(&self) -> Flags {
        self.flags
    }

    pub fn is_distributive(&self) -> bool {
        self.flags.distributive
    }

    pub fn is_boolean(&self) -> bool {
        self.flags.boolean
    }
}

/// Preserves binary meets and the top as well as joins.
pub fn is_lattice_hom(f: &JslMorphism) -> bool {
    let (q, r) = (f.dom(), f.cod());
    let n = q.len();
    f.apply(q.top()) == r.top() && (0..n).all(|a| (0..n).all(|b| f.apply(q.meet(a, b)) == r.meet(f.apply(a), f.apply(b))))
}

/// `(X, Δ)`.
pub fn free_poset(x: &FinSet) -> Poset {
    Poset::discrete(x.clone())
}

/// The unit `X → U(X, Δ)`, the identity function.
pub fn poset_unit(x: &FinSet) -> Vec<usize> {
    (0..x.len()).collect()
}

/// The counit `(U P, Δ) → P`, the identity on carriers.
pub fn poset_counit(p: &Poset) -> (Poset, Vec<usize>) {
    (free_poset(p.carrier()), (0..p.len()).collect())
}

/// The down-set lattice of a poset with `η(p) = ↓p`.
#[derive(Clone, Debug)]
pub struct FreeJsl {
    poset: Poset,
    opens: Opens,
    unit: Vec<usize>,
}

pub fn free_jsl(p: &Poset) -> FreeJsl {
    let opens = Opens::new(p.carrier().clone(), p.down_sets()).expect("down-sets are union closed");
    let unit = (0..p.len()).map(|x| opens.elem(&p.down_set(x)).expect("principal down-sets")).collect();
    FreeJsl { poset: p.clone(), opens, unit }
}

impl FreeJsl {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn jsl(&self) -> &Jsl {
        self.opens.jsl()
    }

    pub fn opens(&self) -> &Opens {
        &self.opens
    }

    pub fn unit(&self) -> &[usize] {
        &self.unit
    }

    /// The unique morphism `S ↦ ⋁ f[S]` restricting to the monotone map `f` along `η`.
    pub fn extend(&self, q: &Jsl, f: &[usize]) -> Result<JslMorphism> {
        if !self.poset.is_monotone(q.poset(), f) {
            return Err(Error::NotAMorphism("map is not monotone".into()));
        }
        let map = self.opens.sets().iter().map(|s| q.join_all(s.ones().map(|x| f[x]))).collect();
        JslMorphism::new(self.jsl().clone(), q.clone(), map)
    }
}

/// `ε_Q : F_∨(U Q) → Q`, `S ↦ ⋁ S`.
pub fn jsl_counit(q: &Jsl) -> (FreeJsl, JslMorphism) {
    let free = free_jsl(q.poset());
    let id: Vec<usize> = (0..q.len()).collect();
    let eps = free.extend(q, &id).expect("identity is monotone");
    (free, eps)
}

/// `F_∨ f : S ↦ ↓ f[S]`.
pub fn free_jsl_map(f: &[usize], from: &FreeJsl, to: &FreeJsl) -> Result<JslMorphism> {
    if !from.poset.is_monotone(&to.poset, f) {
        return Err(Error::NotAMorphism("map is not monotone".into()));
    }
    let n = to.poset.len();
    let map = from
        .opens
        .sets()
        .iter()
        .map(|s| to.opens.elem(&to.poset.down_closure(&subset::from_indices(n, s.ones().map(|x| f[x])))).expect("down-closed"))
        .collect();
    JslMorphism::new(from.jsl().clone(), to.jsl().clone(), map)
}

/// The down-sets of a join-semilattice under `∪, ∩` with `η(a) = Q \ ↑a`.
#[derive(Clone, Debug)]
pub struct FreeDl {
    base: Jsl,
    opens: Opens,
    unit: JslMorphism,
}

pub fn free_dl(q: &Jsl) -> FreeDl {
    let opens = Opens::new(q.carrier().clone(), q.poset().down_sets()).expect("down-sets are union closed");
    let map = (0..q.len()).map(|a| opens.elem(&subset::complement(q.up_set(a))).expect("complement of an up-set")).collect();
    let unit = JslMorphism::new(q.clone(), opens.jsl().clone(), map).expect("η preserves joins");
    FreeDl { base: q.clone(), opens, unit }
}

impl FreeDl {
    pub fn base(&self) -> &Jsl {
        &self.base
    }

    pub fn lattice(&self) -> Lattice {
        Lattice::distributive(self.opens.jsl().clone()).expect("down-set lattices are distributive")
    }

    pub fn jsl(&self) -> &Jsl {
        self.opens.jsl()
    }

    pub fn opens(&self) -> &Opens {
        &self.opens
    }

    pub fn unit(&self) -> &JslMorphism {
        &self.unit
    }

    /// The lattice morphism `ε_D ∘ F f` extending `f : Q → U D` along `η`.
    pub fn extend(&self, d: &Lattice, f: &JslMorphism) -> Result<JslMorphism> {
        let (free_d, eps) = dl_counit(d)?;
        free_dl_map(f, self, &free_d)?.then(&eps)
    }
}

/// `ε_D : F(U D) → D`, `S ↦ ⋀ (M(D) \ S)`.
pub fn dl_counit(d: &Lattice) -> Result<(FreeDl, JslMorphism)> {
    if !d.is_distributive() {
        return Err(Error::NotDistributive);
    }
    let q = d.jsl();
    let free = free_dl(q);
    let mi = q.mi_list();
    let map = free.opens.sets().iter().map(|s| q.meet_all(mi.iter().copied().filter(|&m| !s.contains(m)))).collect();
    let eps = JslMorphism::new(free.jsl().clone(), q.clone(), map)?;
    Ok((free, eps))
}

/// `F f : S ↦ f_*⁻¹(S)` for a join-semilattice morphism `f : Q → R`.
pub fn free_dl_map(f: &JslMorphism, from: &FreeDl, to: &FreeDl) -> Result<JslMorphism> {
    if f.dom() != &from.base || f.cod() != &to.base {
        return Err(Error::TypeMismatch("morphism does not match the free lattices".into()));
    }
    let lower = f.adjoint();
    let n = to.base.len();
    let map = from
        .opens
        .sets()
        .iter()
        .map(|s| to.opens.elem(&subset::from_indices(n, (0..n).filter(|&r| s.contains(lower.apply(r))))).expect("preimage of a down-set"))
        .collect();
    JslMorphism::new(from.jsl().clone(), to.jsl().clone(), map)
}

/// The power set of `J(D)` with `η(a) = J(D) ∩ ↓a`.
#[derive(Clone, Debug)]
pub struct FreeBa {
    base: Lattice,
    opens: Opens,
    unit: JslMorphism,
}

pub fn free_ba(d: &Lattice) -> Result<FreeBa> {
    if !d.is_distributive() {
        return Err(Error::NotDistributive);
    }
    let q = d.jsl();
    let ji = q.ji_list();
    let names = FinSet::new(ji.iter().map(|&j| q.name(j).to_string()))?;
    let opens = Opens::powerset(&names);
    let k = ji.len();
    let map = (0..q.len())
        .map(|a| opens.elem(&subset::from_indices(k, (0..k).filter(|&i| q.leq(ji[i], a)))).expect("every subset is present"))
        .collect();
    let unit = JslMorphism::new(q.clone(), opens.jsl().clone(), map)?;
    Ok(FreeBa { base: d.clone(), opens, unit })
}

impl FreeBa {
    pub fn base(&self) -> &Lattice {
        &self.base
    }

    pub fn lattice(&self) -> Lattice {
        Lattice::boolean(self.opens.jsl().clone()).expect("power sets are boolean")
    }

    pub fn jsl(&self) -> &Jsl {
        self.opens.jsl()
    }

    pub fn opens(&self) -> &Opens {
        &self.opens
    }

    pub fn unit(&self) -> &JslMorphism {
        &self.unit
    }

    /// The boolean morphism `ε_B ∘ F f` extending the lattice morphism `f : D → U B` along `η`.
    pub fn extend(&self, b: &Lattice, f: &JslMorphism) -> Result<JslMorphism> {
        let (free_b, eps) = ba_counit(b)?;
        free_ba_map(f, self, &free_b)?.then(&eps)
    }
}

/// `ε_B : P J(B) → B`, `S ↦ ⋁ S`.
pub fn ba_counit(b: &Lattice) -> Result<(FreeBa, JslMorphism)> {
    if !b.is_boolean() {
        return Err(Error::NotBoolean);
    }
    let free = free_ba(b)?;
    let q = b.jsl();
    let ji = q.ji_list();
    let map = free.opens.sets().iter().map(|s| q.join_all(s.ones().map(|i| ji[i]))).collect();
    let eps = JslMorphism::new(free.jsl().clone(), q.clone(), map)?;
    Ok((free, eps))
}

/// `j ↦ ⋀ { d : j ≤ f(d) }`, sending `J(E)` to `J(D)` for a lattice morphism `f : D → E`.
pub fn prime_filter_generators(f: &JslMorphism) -> Result<Vec<usize>> {
    if !is_lattice_hom(f) {
        return Err(Error::NotAMorphism(format!("{} is not a lattice morphism", f.describe())));
    }
    let (d, e) = (f.dom(), f.cod());
    let jd = d.ji_list();
    e.ji_list()
        .into_iter()
        .map(|j| {
            let g = d.meet_all((0..d.len()).filter(|&x| e.leq(j, f.apply(x))));
            jd.iter().position(|&x| x == g).ok_or_else(|| Error::NotDistributive)
        })
        .collect()
}

/// `F f : S ↦ { e ∈ J(E) : φ(e) ∈ S }` with `φ` from [`prime_filter_generators`].
pub fn free_ba_map(f: &JslMorphism, from: &FreeBa, to: &FreeBa) -> Result<JslMorphism> {
    if f.dom() != from.base.jsl() || f.cod() != to.base.jsl() {
        return Err(Error::TypeMismatch("morphism does not match the free algebras".into()));
    }
    let phi = prime_filter_generators(f)?;
    let k = phi.len();
    let map = from
        .opens
        .sets()
        .iter()
        .map(|s| to.opens.elem(&subset::from_indices(k, (0..k).filter(|&e| s.contains(phi[e])))).expect("every subset is present"))
        .collect();
    JslMorphism::new(from.jsl().clone(), to.jsl().clone(), map)
}

/// The up-sets of `P` under `∪, ∩`.
pub fn birkhoff_up(p: &Poset) -> (Lattice, Opens) {
    let opens = Opens::new(p.carrier().clone(), p.up_sets()).expect("up-sets are union closed");
    (Lattice::distributive(opens.jsl().clone()).expect("up-set lattices are distributive"), opens)
}

/// `(J(D), ≥)`.
pub fn birkhoff_ji(d: &Lattice) -> Result<Poset> {
    if !d.is_distributive() {
        return Err(Error::NotDistributive);
    }
    let q = d.jsl();
    let ji = q.ji_list();
    let names = FinSet::new(ji.iter().map(|&j| q.name(j).to_string()))?;
    Poset::from_fn(names, |a, b| q.leq(ji[b], ji[a]))
}

/// `α_P(p) = ↑p`, as an index into `birkhoff_ji(birkhoff_up(P))`.
pub fn birkhoff_alpha(p: &Poset) -> Vec<usize> {
    let (l, opens) = birkhoff_up(p);
    let ji = l.jsl().ji_list();
    (0..p.len())
        .map(|x| {
            let e = opens.elem(p.up_set(x)).expect("principal up-sets");
            ji.iter().position(|&j| j == e).expect("principal up-sets are join-irreducible")
        })
        .collect()
}

/// `β_D(d) = J(D) ∩ ↓d`, into `birkhoff_up(birkhoff_ji(D))`.
pub fn birkhoff_beta(d: &Lattice) -> Result<JslMorphism> {
    let poset = birkhoff_ji(d)?;
    let (up, opens) = birkhoff_up(&poset);
    let q = d.jsl();
    let ji = q.ji_list();
    let k = ji.len();
    let map = (0..q.len())
        .map(|x| opens.elem(&subset::from_indices(k, (0..k).filter(|&i| q.leq(ji[i], x)))).expect("down-sets of D are up-sets of the reversed order"))
        .collect();
    JslMorphism::new(q.clone(), up.jsl().clone(), map)
}

/// `Up f : U ↦ f⁻¹(U)`, from up-sets of the codomain to up-sets of the domain.
pub fn birkhoff_up_map(f: &[usize], p: &Poset, p2: &Poset) -> Result<JslMorphism> {
    if !p.is_monotone(p2, f) {
        return Err(Error::NotAMorphism("map is not monotone".into()));
    }
    let (l, opens) = birkhoff_up(p);
    let (l2, opens2) = birkhoff_up(p2);
    let n = p.len();
    let map = opens2
        .sets()
        .iter()
        .map(|u: &Subset| opens.elem(&subset::from_indices(n, (0..n).filter(|&x| u.contains(f[x])))).expect("preimage of an up-set"))
        .collect();
    JslMorphism::new(l2.jsl().clone(), l.jsl().clone(), map)
}

/// The atoms of a boolean algebra.
pub fn atoms(b: &Lattice) -> Result<FinSet> {
    if !b.is_boolean() {
        return Err(Error::NotBoolean);
    }
    FinSet::new(b.jsl().ji_list().into_iter().map(|j| b.jsl().name(j).to_string()))
}

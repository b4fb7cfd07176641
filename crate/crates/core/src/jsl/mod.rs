//! Finite join-semilattices (equivalently, finite lattices).

mod congruence;
pub mod enumerate;
mod morphism;

use std::fmt;
use std::sync::Arc;

pub use congruence::{congruence_lattice, congruences, subalgebras, Congruence, Subalgebra, CONGRUENCE_LIMIT};
pub use morphism::{hom, hom_semilattice, HomSemilattice, JslMorphism};

use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::poset::Poset;
use crate::subset::{self, Subset};

/// A finite join-semilattice with cached join and meet tables.
#[derive(Clone)]
pub struct Jsl {
    inner: Arc<Tables>,
}

struct Tables {
    order: Poset,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
    ji: Subset,
    mi: Subset,
}

impl Jsl {
    pub fn from_poset(order: Poset) -> Result<Jsl> {
        let n = order.len();
        let all = subset::full(n);
        let bottom = order.least_in(&all).ok_or(Error::NoBottom)?;
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let ub = subset::intersection(order.up_set(a), order.up_set(b));
                let c = order.least_in(&ub).ok_or_else(|| {
                    let c = order.carrier();
                    Error::NoJoin(c.name(a).to_string(), c.name(b).to_string())
                })?;
                join[a * n + b] = c;
                join[b * n + a] = c;
            }
        }
        let top = order.greatest_in(&all).expect("finite join-semilattice has a top");
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let lb = subset::intersection(&order.down_set(a), &order.down_set(b));
                let c = order.greatest_in(&lb).expect("bounded lattice has meets");
                meet[a * n + b] = c;
                meet[b * n + a] = c;
            }
        }
        let covers = order.covers();
        let ji = subset::from_indices(n, (0..n).filter(|&x| covers.column(x).count_ones(..) == 1));
        let mi = subset::from_indices(n, (0..n).filter(|&x| covers.row(x).count_ones(..) == 1));
        Ok(Jsl { inner: Arc::new(Tables { order, join, meet, bottom, top, ji, mi }) })
    }

    pub fn from_fn(carrier: FinSet, leq: impl Fn(usize, usize) -> bool) -> Result<Jsl> {
        Jsl::from_poset(Poset::from_fn(carrier, leq)?)
    }

    /// A family of subsets ordered by inclusion. Elements are named by the sets.
    pub fn from_family(universe: &FinSet, family: &[Subset]) -> Result<Jsl> {
        let names = FinSet::new(family.iter().map(|s| universe.subset_name(s)))?;
        Jsl::from_fn(names, |a, b| family[a].is_subset(&family[b]))
    }

    /// Like `from_family` but with caller supplied element names.
    pub fn from_named_family(names: FinSet, family: &[Subset]) -> Result<Jsl> {
        Jsl::from_fn(names, |a, b| family[a].is_subset(&family[b]))
    }

    pub fn powerset(universe: &FinSet) -> Jsl {
        let mut family: Vec<Subset> = subset::all_subsets(universe.len()).collect();
        subset::sort_lex(&mut family);
        Jsl::from_family(universe, &family).expect("powerset is a lattice")
    }

    /// `0 < 1 < ... < n-1`
    pub fn chain(n: usize) -> Jsl {
        Jsl::from_poset(Poset::chain(n)).expect("nonempty chain")
    }

    /// Bottom, three atoms and a top.
    pub fn m3() -> Jsl {
        let c = FinSet::new(["bot", "x1", "x2", "x3", "top"]).unwrap();
        Jsl::from_fn(c, |a, b| a == b || a == 0 || b == 4).unwrap()
    }

    /// The pentagon `bot < a < b < top`, `bot < c < top`.
    pub fn n5() -> Jsl {
        let c = FinSet::new(["bot", "a", "b", "c", "top"]).unwrap();
        let p = Poset::from_generators(c, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        Jsl::from_poset(p).unwrap()
    }

    pub fn poset(&self) -> &Poset {
        &self.inner.order
    }

    pub fn carrier(&self) -> &FinSet {
        self.inner.order.carrier()
    }

    pub fn len(&self) -> usize {
        self.inner.order.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn name(&self, x: usize) -> &str {
        self.carrier().name(x)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.carrier().index_of(name)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.inner.order.leq(a, b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.inner.order.lt(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.inner.join[a * self.len() + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.inner.meet[a * self.len() + b]
    }

    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.bottom(), |acc, x| self.join(acc, x))
    }

    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.top(), |acc, x| self.meet(acc, x))
    }

    pub fn bottom(&self) -> usize {
        self.inner.bottom
    }

    pub fn top(&self) -> usize {
        self.inner.top
    }

    /// Join-irreducibles: elements covering exactly one element.
    pub fn join_irreducibles(&self) -> &Subset {
        &self.inner.ji
    }

    /// Meet-irreducibles: elements covered by exactly one element.
    pub fn meet_irreducibles(&self) -> &Subset {
        &self.inner.mi
    }

    pub fn ji_list(&self) -> Vec<usize> {
        self.inner.ji.ones().collect()
    }

    pub fn mi_list(&self) -> Vec<usize> {
        self.inner.mi.ones().collect()
    }

    /// `J ∩ ↓q`
    pub fn ji_below(&self, q: usize) -> Subset {
        subset::intersection(&self.inner.ji, &self.inner.order.down_set(q))
    }

    /// `M ∩ ↑q`
    pub fn mi_above(&self, q: usize) -> Subset {
        subset::intersection(&self.inner.mi, self.inner.order.up_set(q))
    }

    pub fn up_set(&self, q: usize) -> &Subset {
        self.inner.order.up_set(q)
    }

    pub fn down_set(&self, q: usize) -> Subset {
        self.inner.order.down_set(q)
    }

    /// The order dual, whose join is the meet of `self`.
    pub fn op(&self) -> Jsl {
        let t = &self.inner;
        Jsl {
            inner: Arc::new(Tables {
                order: t.order.dual(),
                join: t.meet.clone(),
                meet: t.join.clone(),
                bottom: t.top,
                top: t.bottom,
                ji: t.mi.clone(),
                mi: t.ji.clone(),
            }),
        }
    }

    /// Every join-irreducible is join-prime.
    pub fn is_distributive(&self) -> bool {
        let n = self.len();
        self.inner.ji.ones().all(|j| {
            (0..n).all(|x| (0..n).all(|y| !self.leq(j, self.join(x, y)) || self.leq(j, x) || self.leq(j, y)))
        })
    }

    /// `j ↦ ⋁{ d : j ≰ d }` as pairs `(j, τ(j))`, in the order of `ji_list`.
    pub fn tau(&self) -> Result<Vec<(usize, usize)>> {
        if !self.is_distributive() {
            return Err(Error::NotDistributive);
        }
        let n = self.len();
        Ok(self.inner.ji.ones().map(|j| (j, self.join_all((0..n).filter(|&d| !self.leq(j, d))))).collect())
    }

    /// `m ↦ ⋀(Q \ ↓m)`
    pub fn tau_inverse(&self, m: usize) -> usize {
        let n = self.len();
        self.meet_all((0..n).filter(|&q| !self.leq(q, m)))
    }

    /// Finds an order isomorphism `self -> other`.
    pub fn isomorphism(&self, other: &Jsl) -> Option<Vec<usize>> {
        self.poset().isomorphism(other.poset())
    }

    pub fn is_isomorphic(&self, other: &Jsl) -> bool {
        self.isomorphism(other).is_some()
    }
}

impl PartialEq for Jsl {
    fn eq(&self, other: &Jsl) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.order == other.inner.order
    }
}

impl Eq for Jsl {}

impl fmt::Debug for Jsl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.poset().covers();
        let covers: Vec<String> = c.pairs().into_iter().map(|(a, b)| format!("{}<{}", self.name(a), self.name(b))).collect();
        write!(f, "Jsl[{}]", covers.join(" "))
    }
}

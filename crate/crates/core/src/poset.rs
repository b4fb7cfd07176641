use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::rel::Rel;
use crate::subset::{self, Subset};

/// A finite partial order. `leq` is stored reflexively and transitively closed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poset {
    carrier: FinSet,
    leq: Rel,
}

impl Poset {
    /// Closes the generating pairs reflexively and transitively.
    pub fn from_generators(carrier: FinSet, pairs: &[(usize, usize)]) -> Result<Poset> {
        let n = carrier.len();
        let generators = Rel::from_pairs(carrier.clone(), carrier.clone(), pairs.iter().copied());
        let mut reach = Vec::with_capacity(n);
        for a in 0..n {
            reach.push(reachable(&generators, a));
        }
        let leq = Rel::from_rows(carrier.clone(), carrier.clone(), reach);
        for a in 0..n {
            for b in (a + 1)..n {
                if leq.contains(a, b) && leq.contains(b, a) {
                    let mut cycle = path(&generators, a, b);
                    cycle.extend(path(&generators, b, a).into_iter().skip(1));
                    return Err(Error::Cycle(cycle.into_iter().map(|i| carrier.name(i).to_string()).collect()));
                }
            }
        }
        Ok(Poset { carrier, leq })
    }

    /// Takes an already closed order relation and validates it.
    pub fn from_leq(leq: Rel) -> Result<Poset> {
        if leq.source() != leq.target() {
            return Err(Error::TypeMismatch("order relation must be an endorelation".into()));
        }
        let c = leq.source().clone();
        let n = c.len();
        for a in 0..n {
            if !leq.contains(a, a) {
                return Err(Error::NotAnOrder(format!("{} is not below itself", c.name(a))));
            }
            for b in 0..n {
                if a != b && leq.contains(a, b) && leq.contains(b, a) {
                    return Err(Error::Cycle(vec![c.name(a).into(), c.name(b).into(), c.name(a).into()]));
                }
                if leq.contains(a, b) && !leq.row(b).is_subset(leq.row(a)) {
                    return Err(Error::NotAnOrder(format!("not transitive through {} <= {}", c.name(a), c.name(b))));
                }
            }
        }
        Ok(Poset { carrier: c, leq })
    }

    pub fn from_fn(carrier: FinSet, leq: impl Fn(usize, usize) -> bool) -> Result<Poset> {
        Poset::from_leq(Rel::from_fn(carrier.clone(), carrier, leq))
    }

    pub fn discrete(carrier: FinSet) -> Poset {
        Poset { leq: Rel::identity(carrier.clone()), carrier }
    }

    pub fn chain(n: usize) -> Poset {
        Poset::from_fn(FinSet::range(n), |a, b| a <= b).expect("chain")
    }

    pub fn carrier(&self) -> &FinSet {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn leq_rel(&self) -> &Rel {
        &self.leq
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq.contains(a, b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// `{ b : a <= b }`
    pub fn up_set(&self, a: usize) -> &Subset {
        self.leq.row(a)
    }

    /// `{ b : b <= a }`
    pub fn down_set(&self, a: usize) -> Subset {
        self.leq.column(a)
    }

    pub fn up_closure(&self, s: &Subset) -> Subset {
        self.leq.up(s)
    }

    pub fn down_closure(&self, s: &Subset) -> Subset {
        self.leq.converse().up(s)
    }

    pub fn is_down_set(&self, s: &Subset) -> bool {
        self.down_closure(s) == *s
    }

    pub fn is_up_set(&self, s: &Subset) -> bool {
        self.up_closure(s) == *s
    }

    /// All down-closed subsets, sorted lexicographically.
    pub fn down_sets(&self) -> Vec<Subset> {
        self.leq.converse().open_sets()
    }

    pub fn up_sets(&self) -> Vec<Subset> {
        self.leq.open_sets()
    }

    pub fn dual(&self) -> Poset {
        Poset { carrier: self.carrier.clone(), leq: self.leq.converse() }
    }

    /// The covering relation: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Rel {
        let n = self.len();
        Rel::from_fn(self.carrier.clone(), self.carrier.clone(), |a, b| {
            self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b))
        })
    }

    pub fn is_monotone(&self, other: &Poset, map: &[usize]) -> bool {
        (0..self.len()).all(|a| self.up_set(a).ones().all(|b| other.leq(map[a], map[b])))
    }

    /// Least element of `s` if one exists.
    pub fn least_in(&self, s: &Subset) -> Option<usize> {
        s.ones().find(|&a| s.ones().all(|b| self.leq(a, b)))
    }

    pub fn greatest_in(&self, s: &Subset) -> Option<usize> {
        s.ones().find(|&a| s.ones().all(|b| self.leq(b, a)))
    }

    /// Common upper bounds of a subset.
    pub fn upper_bounds(&self, s: &Subset) -> Subset {
        self.leq.polarity_up(s)
    }

    pub fn lower_bounds(&self, s: &Subset) -> Subset {
        self.leq.converse().polarity_up(s)
    }

    /// Supremum of `s` when it exists in the poset.
    pub fn supremum(&self, s: &Subset) -> Option<usize> {
        self.least_in(&self.upper_bounds(s))
    }

    pub fn infimum(&self, s: &Subset) -> Option<usize> {
        self.greatest_in(&self.lower_bounds(s))
    }

    /// A linear extension (every element appears after everything below it).
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&a| self.down_set(a).count_ones(..));
        order
    }

    /// Finds an order isomorphism `self -> other` if one exists.
    pub fn isomorphism(&self, other: &Poset) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() {
            return None;
        }
        let sig = |p: &Poset, a: usize| (p.down_set(a).count_ones(..), p.up_set(a).count_ones(..));
        let order = self.linear_extension();
        let mut map = vec![usize::MAX; n];
        let mut used = subset::empty(n);
        fn go(
            k: usize,
            order: &[usize],
            p: &Poset,
            q: &Poset,
            map: &mut Vec<usize>,
            used: &mut Subset,
            sig: &dyn Fn(&Poset, usize) -> (usize, usize),
        ) -> bool {
            if k == order.len() {
                return true;
            }
            let a = order[k];
            for b in 0..q.len() {
                if used.contains(b) || sig(p, a) != sig(q, b) {
                    continue;
                }
                let ok = order[..k].iter().all(|&c| p.leq(c, a) == q.leq(map[c], b) && p.leq(a, c) == q.leq(b, map[c]));
                if ok {
                    map[a] = b;
                    used.insert(b);
                    if go(k + 1, order, p, q, map, used, sig) {
                        return true;
                    }
                    used.set(b, false);
                    map[a] = usize::MAX;
                }
            }
            false
        }
        if go(0, &order, self, other, &mut map, &mut used, &sig) {
            Some(map)
        } else {
            None
        }
    }
}

fn reachable(r: &Rel, a: usize) -> Subset {
    let mut seen = subset::singleton(r.source().len(), a);
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        for y in r.row(x).ones() {
            if !seen.put(y) {
                queue.push_back(y);
            }
        }
    }
    seen
}

fn path(r: &Rel, from: usize, to: usize) -> Vec<usize> {
    let n = r.source().len();
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::from([from]);
    prev[from] = from;
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for y in r.row(x).ones() {
            if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut out = vec![to];
    let mut cur = to;
    while cur != from {
        cur = prev[cur];
        out.push(cur);
    }
    out.reverse();
    out
}

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::jsl::Jsl;
use crate::rel::Rel;
use crate::subset::{self, Subset};

/// Largest semilattice whose congruences and subalgebras are enumerated.
pub const CONGRUENCE_LIMIT: usize = 8;

/// An equivalence relation compatible with joins, stored as class representatives.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Congruence {
    base: Jsl,
    class: Vec<usize>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.0[hi] = lo;
        true
    }
}

impl Congruence {
    /// Validates the relation as an equivalence closed under `x~y ⇒ x∨z ~ y∨z`.
    pub fn new(base: &Jsl, rel: &Rel) -> Result<Congruence> {
        let n = base.len();
        for a in 0..n {
            if !rel.contains(a, a) {
                return Err(Error::InvalidSubalgebra(format!("not reflexive at {}", base.name(a))));
            }
            for b in 0..n {
                if rel.contains(a, b) && !rel.contains(b, a) {
                    return Err(Error::NotSymmetric(base.name(a).into(), base.name(b).into()));
                }
                if rel.contains(a, b) && rel.row(b) != rel.row(a) {
                    return Err(Error::InvalidSubalgebra(format!("not transitive at ({}, {})", base.name(a), base.name(b))));
                }
                if rel.contains(a, b) {
                    if let Some(z) = (0..n).find(|&z| !rel.contains(base.join(a, z), base.join(b, z))) {
                        return Err(Error::InvalidSubalgebra(format!(
                            "({}, {}) related but not after joining {}",
                            base.name(a),
                            base.name(b),
                            base.name(z)
                        )));
                    }
                }
            }
        }
        let class = (0..n).map(|a| rel.row(a).ones().next().expect("reflexive")).collect();
        Ok(Congruence { base: base.clone(), class })
    }

    /// Least congruence containing every pair.
    pub fn generated(base: &Jsl, pairs: &[(usize, usize)]) -> Congruence {
        let n = base.len();
        let mut uf = UnionFind((0..n).collect());
        for &(a, b) in pairs {
            uf.union(a, b);
        }
        loop {
            let mut changed = false;
            for a in 0..n {
                for b in (a + 1)..n {
                    if uf.find(a) != uf.find(b) {
                        continue;
                    }
                    for z in 0..n {
                        changed |= uf.union(base.join(a, z), base.join(b, z));
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let class = (0..n).map(|a| uf.find(a)).collect();
        Congruence { base: base.clone(), class }
    }

    pub fn principal(base: &Jsl, a: usize, b: usize) -> Congruence {
        Congruence::generated(base, &[(a, b)])
    }

    pub fn identity(base: &Jsl) -> Congruence {
        Congruence { base: base.clone(), class: (0..base.len()).collect() }
    }

    pub fn full(base: &Jsl) -> Congruence {
        Congruence { base: base.clone(), class: vec![0; base.len()] }
    }

    pub fn base(&self) -> &Jsl {
        &self.base
    }

    pub fn relates(&self, a: usize, b: usize) -> bool {
        self.class[a] == self.class[b]
    }

    pub fn rel(&self) -> Rel {
        let c = self.base.carrier().clone();
        Rel::from_fn(c.clone(), c, |a, b| self.relates(a, b))
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.base.len();
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| a < b && self.relates(a, b)).collect()
    }

    /// Classes ordered by their least index.
    pub fn classes(&self) -> Vec<Subset> {
        let n = self.base.len();
        let mut reps: Vec<usize> = self.class.clone();
        reps.sort_unstable();
        reps.dedup();
        reps.into_iter().map(|r| subset::from_indices(n, (0..n).filter(|&x| self.class[x] == r))).collect()
    }

    pub fn leq(&self, other: &Congruence) -> bool {
        let n = self.base.len();
        (0..n).all(|a| other.relates(a, self.class[a]))
    }

    pub fn join(&self, other: &Congruence) -> Congruence {
        let mut pairs = self.pairs();
        pairs.extend(other.pairs());
        Congruence::generated(&self.base, &pairs)
    }

    pub fn name(&self) -> String {
        self.classes().iter().map(|c| self.base.carrier().subset_name(c)).collect()
    }

    /// `{ ⋁[q] : q ∈ Q }` as a subalgebra of `Q^op`.
    pub fn to_subalgebra(&self) -> Subalgebra {
        let n = self.base.len();
        let tops = subset::from_indices(n, self.classes().iter().map(|c| self.base.join_all(c.ones())));
        Subalgebra { base: self.base.op(), set: tops }
    }
}

/// A subset containing the bottom and closed under binary joins.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subalgebra {
    base: Jsl,
    set: Subset,
}

impl Subalgebra {
    pub fn new(base: &Jsl, set: Subset) -> Result<Subalgebra> {
        if !set.contains(base.bottom()) {
            return Err(Error::InvalidSubalgebra(format!("bottom {} missing", base.name(base.bottom()))));
        }
        for a in set.ones() {
            for b in set.ones() {
                if !set.contains(base.join(a, b)) {
                    return Err(Error::InvalidSubalgebra(format!("join of ({}, {}) missing", base.name(a), base.name(b))));
                }
            }
        }
        Ok(Subalgebra { base: base.clone(), set })
    }

    pub fn base(&self) -> &Jsl {
        &self.base
    }

    pub fn set(&self) -> &Subset {
        &self.set
    }

    /// The subalgebra as a semilattice in its own right.
    pub fn as_jsl(&self) -> Jsl {
        let elems: Vec<usize> = self.set.ones().collect();
        let names = FinSet::new(elems.iter().map(|&x| self.base.name(x).to_string())).expect("names are distinct");
        Jsl::from_fn(names, |a, b| self.base.leq(elems[a], elems[b])).expect("subalgebra is a semilattice")
    }

    /// For a subalgebra `S` of `Q^op`: `q1 ~ q2 ⟺ ∀s∈S (q1 ≤ s ⟺ q2 ≤ s)` on `Q`.
    pub fn to_congruence(&self) -> Congruence {
        let q = self.base.op();
        let n = q.len();
        let sig: Vec<Subset> = (0..n).map(|x| subset::intersection(q.up_set(x), &self.set)).collect();
        let class = (0..n).map(|a| (0..n).find(|&b| sig[b] == sig[a]).unwrap()).collect();
        Congruence { base: q, class }
    }
}

fn guard(q: &Jsl, limit: usize) -> Result<()> {
    if q.len() > limit {
        return Err(Error::TooLarge(format!("{} elements, limit {limit}", q.len())));
    }
    Ok(())
}

/// All congruences: join-closure of the principal ones, starting from the identity.
pub fn congruences(q: &Jsl) -> Result<Vec<Congruence>> {
    congruences_bounded(q, CONGRUENCE_LIMIT)
}

pub fn congruences_bounded(q: &Jsl, limit: usize) -> Result<Vec<Congruence>> {
    guard(q, limit)?;
    let n = q.len();
    let mut principal: Vec<Congruence> = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let c = Congruence::principal(q, a, b);
            if !principal.contains(&c) {
                principal.push(c);
            }
        }
    }
    let mut all = vec![Congruence::identity(q)];
    let mut seen: HashSet<Vec<usize>> = all.iter().map(|c| c.class.clone()).collect();
    let mut i = 0;
    while i < all.len() {
        for p in &principal {
            let c = all[i].join(p);
            if seen.insert(c.class.clone()) {
                all.push(c);
            }
        }
        i += 1;
    }
    Ok(all)
}

/// The congruence lattice ordered by inclusion, with the congruence at each index.
pub fn congruence_lattice(q: &Jsl) -> Result<(Jsl, Vec<Congruence>)> {
    let all = congruences(q)?;
    let names = FinSet::new(all.iter().map(Congruence::name))?;
    let lat = Jsl::from_fn(names, |a, b| all[a].leq(&all[b]))?;
    Ok((lat, all))
}

/// All subalgebras, in binary counting order of their subsets.
pub fn subalgebras(q: &Jsl) -> Result<Vec<Subalgebra>> {
    guard(q, 2 * CONGRUENCE_LIMIT)?;
    Ok(subset::all_subsets(q.len()).filter_map(|s| Subalgebra::new(q, s).ok()).collect())
}

//! Binary relations between finite sets and their operator calculus.
//!
//! A relation is a dense boolean matrix, one bitset row per source element.
//! Subsets passed to the operators must have the width of the relevant carrier.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::subset::{self, Subset};

#[derive(Clone, PartialEq, Eq)]
pub struct Rel {
    source: FinSet,
    target: FinSet,
    rows: Vec<Subset>,
}

impl Rel {
    pub fn empty(source: FinSet, target: FinSet) -> Self {
        let rows = vec![subset::empty(target.len()); source.len()];
        Rel { source, target, rows }
    }

    pub fn full(source: FinSet, target: FinSet) -> Self {
        let rows = vec![subset::full(target.len()); source.len()];
        Rel { source, target, rows }
    }

    pub fn identity(carrier: FinSet) -> Self {
        Rel::from_fn(carrier.clone(), carrier, |a, b| a == b)
    }

    pub fn from_fn(source: FinSet, target: FinSet, f: impl Fn(usize, usize) -> bool) -> Self {
        let n = target.len();
        let rows = (0..source.len())
            .map(|a| subset::from_indices(n, (0..n).filter(|&b| f(a, b))))
            .collect();
        Rel { source, target, rows }
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(source: FinSet, target: FinSet, pairs: I) -> Self {
        let mut r = Rel::empty(source, target);
        for (a, b) in pairs {
            r.insert(a, b);
        }
        r
    }

    pub fn from_rows(source: FinSet, target: FinSet, rows: Vec<Subset>) -> Self {
        assert_eq!(rows.len(), source.len());
        debug_assert!(rows.iter().all(|r| r.len() == target.len()));
        Rel { source, target, rows }
    }

    pub fn from_named_pairs<S: AsRef<str>>(source: FinSet, target: FinSet, pairs: &[(S, S)]) -> Result<Self> {
        let mut r = Rel::empty(source, target);
        for (a, b) in pairs {
            let a = r.source.require(a.as_ref())?;
            let b = r.target.require(b.as_ref())?;
            r.insert(a, b);
        }
        Ok(r)
    }

    pub fn source(&self) -> &FinSet {
        &self.source
    }

    pub fn target(&self) -> &FinSet {
        &self.target
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        self.rows[a].insert(b);
    }

    pub fn remove(&mut self, a: usize, b: usize) {
        self.rows[a].set(b, false);
    }

    /// The image `R[a]` of a single source element.
    pub fn row(&self, a: usize) -> &Subset {
        &self.rows[a]
    }

    pub fn rows(&self) -> &[Subset] {
        &self.rows
    }

    pub fn column(&self, b: usize) -> Subset {
        subset::from_indices(self.source.len(), (0..self.source.len()).filter(|&a| self.contains(a, b)))
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.ones().map(move |b| (a, b)))
            .collect()
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|r| r.is_clear())
    }

    pub fn same_type(&self, other: &Rel) -> bool {
        self.source == other.source && self.target == other.target
    }

    fn check_same_type(&self, other: &Rel) -> Result<()> {
        if self.same_type(other) {
            Ok(())
        } else {
            Err(Error::TypeMismatch(format!(
                "{:?}x{:?} vs {:?}x{:?}",
                self.source, self.target, other.source, other.target
            )))
        }
    }

    pub fn converse(&self) -> Rel {
        Rel::from_fn(self.target.clone(), self.source.clone(), |b, a| self.contains(a, b))
    }

    pub fn complement(&self) -> Rel {
        let rows = self.rows.iter().map(subset::complement).collect();
        Rel { source: self.source.clone(), target: self.target.clone(), rows }
    }

    /// Relational composite `self ; other`.
    pub fn compose(&self, other: &Rel) -> Result<Rel> {
        if self.target != other.source {
            return Err(Error::TypeMismatch(format!(
                "cannot compose through {:?} and {:?}",
                self.target, other.source
            )));
        }
        let rows = self.rows.iter().map(|row| other.up(row)).collect();
        Ok(Rel { source: self.source.clone(), target: other.target.clone(), rows })
    }

    pub fn union(&self, other: &Rel) -> Result<Rel> {
        self.check_same_type(other)?;
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| subset::union(a, b)).collect();
        Ok(Rel { source: self.source.clone(), target: self.target.clone(), rows })
    }

    pub fn intersection(&self, other: &Rel) -> Result<Rel> {
        self.check_same_type(other)?;
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| subset::intersection(a, b)).collect();
        Ok(Rel { source: self.source.clone(), target: self.target.clone(), rows })
    }

    pub fn is_subset(&self, other: &Rel) -> bool {
        self.same_type(other) && self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b))
    }

    pub fn is_symmetric(&self) -> bool {
        self.source == self.target && self.pairs().into_iter().all(|(a, b)| self.contains(b, a))
    }

    /// Image `R[X]`.
    pub fn up(&self, x: &Subset) -> Subset {
        debug_assert_eq!(x.len(), self.source.len());
        let mut out = subset::empty(self.target.len());
        for a in x.ones() {
            out.union_with(&self.rows[a]);
        }
        out
    }

    /// `{ a : R[a] ⊆ Y }`, the largest subset whose image lies in `Y`.
    pub fn down(&self, y: &Subset) -> Subset {
        debug_assert_eq!(y.len(), self.target.len());
        subset::from_indices(self.source.len(), (0..self.source.len()).filter(|&a| self.rows[a].is_subset(y)))
    }

    pub fn up_checked(&self, x: &Subset) -> Result<Subset> {
        self.check_width(x, &self.source)?;
        Ok(self.up(x))
    }

    pub fn down_checked(&self, y: &Subset) -> Result<Subset> {
        self.check_width(y, &self.target)?;
        Ok(self.down(y))
    }

    fn check_width(&self, s: &Subset, carrier: &FinSet) -> Result<()> {
        if s.len() == carrier.len() {
            Ok(())
        } else {
            Err(Error::OutOfCarrier {
                element: format!("subset of width {}", s.len()),
                carrier: carrier.names().join(","),
            })
        }
    }

    /// Closure operator on source subsets: down after up.
    pub fn cl(&self, x: &Subset) -> Subset {
        self.down(&self.up(x))
    }

    /// Interior operator on target subsets: up after down.
    pub fn interior(&self, y: &Subset) -> Subset {
        self.up(&self.down(y))
    }

    /// `⋂_{x ∈ X} R[x]`, the whole target when `X` is empty.
    pub fn polarity_up(&self, x: &Subset) -> Subset {
        let mut out = subset::full(self.target.len());
        for a in x.ones() {
            out.intersect_with(&self.rows[a]);
        }
        out
    }

    /// `{ a : Y ⊆ R[a] }`.
    pub fn polarity_down(&self, y: &Subset) -> Subset {
        subset::from_indices(self.source.len(), (0..self.source.len()).filter(|&a| y.is_subset(&self.rows[a])))
    }

    /// All images `R[S]`, sorted lexicographically.
    pub fn open_sets(&self) -> Vec<Subset> {
        let mut seen: HashSet<Subset> = HashSet::new();
        let mut out = vec![subset::empty(self.target.len())];
        seen.insert(out[0].clone());
        for row in &self.rows {
            let mut fresh = Vec::new();
            for s in &out {
                let u = subset::union(s, row);
                if seen.insert(u.clone()) {
                    fresh.push(u);
                }
            }
            out.extend(fresh);
        }
        subset::sort_lex(&mut out);
        out
    }

    /// All sets `R↓(Y)`, sorted lexicographically.
    pub fn closed_sets(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = self.open_sets().iter().map(|y| self.down(y)).collect();
        subset::sort_lex(&mut out);
        out.dedup();
        out
    }

    /// No row is the union of other rows (in particular no row is empty and no
    /// two rows coincide), and the same holds for columns.
    pub fn is_reduced(&self) -> bool {
        rows_irredundant(&self.rows) && rows_irredundant(&self.converse().rows)
    }

    /// No empty row and no empty column.
    pub fn is_strict(&self) -> bool {
        self.rows.iter().all(|r| !r.is_clear()) && (0..self.target.len()).all(|b| !self.column(b).is_clear())
    }

    /// Domain/codomain restriction to the given source and target indices.
    pub fn restrict(&self, sources: &[usize], targets: &[usize]) -> Rel {
        let src = FinSet::new(sources.iter().map(|&a| self.source.name(a).to_string())).expect("distinct");
        let tgt = FinSet::new(targets.iter().map(|&b| self.target.name(b).to_string())).expect("distinct");
        Rel::from_fn(src, tgt, |i, j| self.contains(sources[i], targets[j]))
    }

    /// Bijections `(f, g)` on sources and targets with `R(a,b) ⟺ S(f a, g b)`.
    pub fn bipartite_isomorphism(&self, other: &Rel) -> Option<(Vec<usize>, Vec<usize>)> {
        let (n, m) = (self.source.len(), self.target.len());
        if n != other.source.len() || m != other.target.len() || self.pair_count() != other.pair_count() {
            return None;
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| std::cmp::Reverse(self.rows[a].count_ones(..)));
        let mut f = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if !self.match_rows(other, &order, 0, &mut f, &mut used) {
            return None;
        }
        let g = column_matching(self, other, &f)?;
        Some((f, g))
    }

    fn match_rows(&self, other: &Rel, order: &[usize], k: usize, f: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if k == order.len() {
            return column_matching(self, other, f).is_some();
        }
        let a = order[k];
        for b in 0..other.source.len() {
            if used[b] || self.rows[a].count_ones(..) != other.rows[b].count_ones(..) {
                continue;
            }
            f[a] = b;
            used[b] = true;
            if column_signatures_agree(self, other, &order[..=k], f) && self.match_rows(other, order, k + 1, f, used) {
                return true;
            }
            used[b] = false;
        }
        f[a] = usize::MAX;
        false
    }
}

/// Columns projected onto the assigned rows must agree as multisets.
fn column_signatures_agree(r: &Rel, s: &Rel, assigned: &[usize], f: &[usize]) -> bool {
    let sig = |rel: &Rel, rows: &[usize]| {
        let mut cols: Vec<Vec<bool>> = (0..rel.target.len()).map(|b| rows.iter().map(|&a| rel.contains(a, b)).collect()).collect();
        cols.sort();
        cols
    };
    let image: Vec<usize> = assigned.iter().map(|&a| f[a]).collect();
    sig(r, assigned) == sig(s, &image)
}

fn column_matching(r: &Rel, s: &Rel, f: &[usize]) -> Option<Vec<usize>> {
    let n = r.source.len();
    let mut taken = vec![false; s.target.len()];
    let mut g = Vec::with_capacity(r.target.len());
    for b in 0..r.target.len() {
        let want: Vec<bool> = (0..n).map(|a| r.contains(a, b)).collect();
        let c = (0..s.target.len()).find(|&c| !taken[c] && (0..n).all(|a| s.contains(f[a], c) == want[a]))?;
        taken[c] = true;
        g.push(c);
    }
    Some(g)
}

fn rows_irredundant(rows: &[Subset]) -> bool {
    rows.iter().enumerate().all(|(x, row)| {
        let mut below = subset::empty(row.len());
        for (y, other) in rows.iter().enumerate() {
            if y != x && other.is_subset(row) {
                below.union_with(other);
            }
        }
        below != *row
    })
}

impl fmt::Debug for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .pairs()
            .into_iter()
            .map(|(a, b)| format!("({},{})", self.source.name(a), self.target.name(b)))
            .collect();
        write!(f, "Rel[{:?} -> {:?}: {}]", self.source, self.target, pairs.join(" "))
    }
}

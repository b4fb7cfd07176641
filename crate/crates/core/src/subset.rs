//! Subsets of a canonically indexed carrier, stored as fixed-width bitsets.

use std::cmp::Ordering;

use fixedbitset::FixedBitSet;

pub type Subset = FixedBitSet;

pub fn empty(n: usize) -> Subset {
    FixedBitSet::with_capacity(n)
}

pub fn full(n: usize) -> Subset {
    let mut s = FixedBitSet::with_capacity(n);
    s.insert_range(..);
    s
}

pub fn singleton(n: usize, i: usize) -> Subset {
    let mut s = FixedBitSet::with_capacity(n);
    s.insert(i);
    s
}

pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, items: I) -> Subset {
    let mut s = FixedBitSet::with_capacity(n);
    for i in items {
        s.insert(i);
    }
    s
}

pub fn complement(s: &Subset) -> Subset {
    let mut c = s.clone();
    c.toggle_range(..);
    c
}

pub fn union(a: &Subset, b: &Subset) -> Subset {
    let mut u = a.clone();
    u.union_with(b);
    u
}

pub fn intersection(a: &Subset, b: &Subset) -> Subset {
    let mut u = a.clone();
    u.intersect_with(b);
    u
}

pub fn elements(s: &Subset) -> Vec<usize> {
    s.ones().collect()
}

/// Lexicographic order on the sorted index lists.
pub fn lex_cmp(a: &Subset, b: &Subset) -> Ordering {
    a.ones().cmp(b.ones())
}

pub fn sort_lex(family: &mut [Subset]) {
    family.sort_by(lex_cmp);
}

/// Every subset of an `n`-element carrier, in binary counting order.
pub fn all_subsets(n: usize) -> impl Iterator<Item = Subset> {
    assert!(n < 31, "subset enumeration over {n} elements");
    (0u32..(1u32 << n)).map(move |bits| from_indices(n, (0..n).filter(|i| bits >> i & 1 == 1)))
}

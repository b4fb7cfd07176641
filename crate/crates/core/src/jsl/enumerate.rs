//! Exhaustive enumeration of small lattices up to isomorphism.

use crate::finset::FinSet;
use crate::jsl::Jsl;
use crate::poset::Poset;

/// All lattices with exactly `n` elements, one per isomorphism class.
///
/// Candidates are orders on `0..n` extending the index order with `0` least
/// and `n-1` greatest, so every class is hit by some labelling.
pub fn lattices_of_size(n: usize) -> Vec<Jsl> {
    assert!(n <= 7, "lattice enumeration is limited to 7 elements");
    if n == 0 {
        return Vec::new();
    }
    if n <= 2 {
        return vec![Jsl::chain(n)];
    }
    let middle: Vec<(usize, usize)> = (1..n - 1).flat_map(|a| (a + 1..n - 1).map(move |b| (a, b))).collect();
    let mut found: Vec<Jsl> = Vec::new();
    for bits in 0u32..(1 << middle.len()) {
        let mut rel = vec![vec![false; n]; n];
        for a in 0..n {
            rel[a][a] = true;
            rel[0][a] = true;
            rel[a][n - 1] = true;
        }
        for (k, &(a, b)) in middle.iter().enumerate() {
            if bits >> k & 1 == 1 {
                rel[a][b] = true;
            }
        }
        let transitive = (0..n).all(|a| (0..n).all(|b| !rel[a][b] || (0..n).all(|c| !rel[b][c] || rel[a][c])));
        if !transitive {
            continue;
        }
        let Ok(p) = Poset::from_fn(FinSet::range(n), |a, b| rel[a][b]) else { continue };
        let Ok(q) = Jsl::from_poset(p) else { continue };
        if !found.iter().any(|f| f.is_isomorphic(&q)) {
            found.push(q);
        }
    }
    found
}

/// All lattices with `1..=n` elements up to isomorphism, smallest first.
pub fn lattices_up_to(n: usize) -> Vec<Jsl> {
    (1..=n).flat_map(lattices_of_size).collect()
}

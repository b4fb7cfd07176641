//! Seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::demorgan::UGraph;
use crate::dep::DepMorphism;
use crate::equivalence::dm_completion;
use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::jsl::Jsl;
use crate::poset::Poset;
use crate::rel::Rel;

/// Attempts made by [`Generator::jsl`] before giving up.
pub const JSL_RETRIES: usize = 64;

/// A deterministic stream of instances.
pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(seed: u64) -> Generator {
        Generator { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn size(&mut self, min: usize, max: usize) -> usize {
        if max <= min {
            min
        } else {
            self.rng.gen_range(min..=max)
        }
    }

    pub fn coin(&mut self, p: f64) -> bool {
        p > 0.0 && self.rng.gen_bool(p.min(1.0))
    }

    pub fn rel_between(&mut self, source: FinSet, target: FinSet, density: f64) -> Rel {
        let mut r = Rel::empty(source, target);
        for a in 0..r.source().len() {
            for b in 0..r.target().len() {
                if self.coin(density) {
                    r.insert(a, b);
                }
            }
        }
        r
    }

    /// Carriers of size `0..=max_src` and `0..=max_tgt`.
    pub fn rel(&mut self, max_src: usize, max_tgt: usize, density: f64) -> Rel {
        let (n, m) = (self.size(0, max_src), self.size(0, max_tgt));
        self.rel_between(FinSet::numbered("s", n), FinSet::numbered("t", m), density)
    }

    /// Like [`Generator::rel`] with at least one source and one target.
    pub fn nonempty_rel(&mut self, max_src: usize, max_tgt: usize, density: f64) -> Rel {
        let (n, m) = (self.size(1, max_src), self.size(1, max_tgt));
        self.rel_between(FinSet::numbered("s", n), FinSet::numbered("t", m), density)
    }

    /// A random order: pairs `a < b` along a shuffled linear order, then closed.
    pub fn poset(&mut self, min: usize, max: usize) -> Poset {
        let n = self.size(min, max);
        let mut order: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            order.swap(i, self.rng.gen_range(0..=i));
        }
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.coin(0.4) {
                    pairs.push((order[i], order[j]));
                }
            }
        }
        Poset::from_generators(FinSet::numbered("p", n), &pairs).expect("pairs follow a linear order")
    }

    /// The join closure (Dedekind-MacNeille completion) of a random poset, kept when it fits.
    pub fn jsl(&mut self, max_size: usize) -> Result<Jsl> {
        for _ in 0..JSL_RETRIES {
            if max_size == 0 {
                break;
            }
            let p = self.poset(1, max_size);
            let (opens, _) = dm_completion(&p);
            let k = opens.jsl().len();
            if k <= max_size {
                return Jsl::from_fn(FinSet::numbered("q", k), |a, b| opens.jsl().leq(a, b));
            }
        }
        Err(Error::GenerationExhausted(JSL_RETRIES))
    }

    pub fn ug(&mut self, max_v: usize) -> UGraph {
        let n = self.size(0, max_v);
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in a..n {
                if self.coin(0.5) {
                    pairs.push((a, b));
                }
            }
        }
        UGraph::from_edges(FinSet::numbered("v", n), pairs)
    }

    /// `G ; X ; H` for random `G, X, H`, which always factors through both sides.
    pub fn dep_morphism(&mut self, max: usize) -> DepMorphism {
        let g = self.rel(max, max, 0.5);
        let h = self.rel(max, max, 0.5);
        let x = self.rel_between(g.target().clone(), h.source().clone(), 0.4);
        let r = g.compose(&x).and_then(|gx| gx.compose(&h)).expect("types match");
        DepMorphism::new(r, g, h).expect("G;X;H is a Dep morphism")
    }
}

pub fn gen_rel(seed: u64, max_src: usize, max_tgt: usize, density: f64) -> Rel {
    Generator::new(seed).rel(max_src, max_tgt, density)
}

pub fn gen_jsl(seed: u64, max_size: usize) -> Result<Jsl> {
    Generator::new(seed).jsl(max_size)
}

pub fn gen_ug(seed: u64, max_v: usize) -> UGraph {
    Generator::new(seed).ug(max_v)
}

//! Morphisms between relations: `R : G → H` factoring as `R₋ ; H = R = G ; R₊˘`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::rel::Rel;
use crate::subset::{self, Subset};

/// Largest `|source| · |target|` for exhaustive hom-set enumeration.
pub const HOM_LIMIT: usize = 20;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DepMorphism {
    dom: Rel,
    cod: Rel,
    rel: Rel,
    minus: Rel,
    plus: Rel,
}

/// `minus(gs, hs) ⟺ H[hs] ⊆ R[gs]`, `plus(ht, gt) ⟺ Ğ[gt] ⊆ R̆[ht]`.
pub fn components(rel: &Rel, dom: &Rel, cod: &Rel) -> (Rel, Rel) {
    let minus = Rel::from_fn(dom.source().clone(), cod.source().clone(), |gs, hs| cod.row(hs).is_subset(rel.row(gs)));
    let rc = rel.converse();
    let gc = dom.converse();
    let plus = Rel::from_fn(cod.target().clone(), dom.target().clone(), |ht, gt| gc.row(gt).is_subset(rc.row(ht)));
    (minus, plus)
}

fn check_typed(rel: &Rel, dom: &Rel, cod: &Rel) -> Result<()> {
    if rel.source() != dom.source() || rel.target() != cod.target() {
        return Err(Error::TypeMismatch(format!(
            "relation {:?} -> {:?} does not go from {:?} to {:?}",
            rel.source(),
            rel.target(),
            dom.source(),
            cod.target()
        )));
    }
    Ok(())
}

impl DepMorphism {
    /// Validates `R↑ ∘ cl_G = R↑ = in_H ∘ R↑` by checking that the maximum
    /// witnesses reproduce `R`.
    pub fn new(rel: Rel, dom: Rel, cod: Rel) -> Result<DepMorphism> {
        check_typed(&rel, &dom, &cod)?;
        let (minus, plus) = components(&rel, &dom, &cod);
        let left = minus.compose(&cod)?;
        if let Some(gs) = (0..rel.source().len()).find(|&gs| left.row(gs) != rel.row(gs)) {
            return Err(Error::NotDepMorphism(format!(
                "R[{{{}}}] is not open in the codomain",
                rel.source().name(gs)
            )));
        }
        let right = dom.compose(&plus.converse())?;
        if let Some(ht) = (0..rel.target().len()).find(|&ht| right.column(ht) != rel.column(ht)) {
            return Err(Error::NotDepMorphism(format!(
                "the column of {} is not closed in the domain",
                rel.target().name(ht)
            )));
        }
        Ok(DepMorphism { dom, cod, rel, minus, plus })
    }

    /// The identity on `G` is `G` itself.
    pub fn identity(g: &Rel) -> DepMorphism {
        DepMorphism::new(g.clone(), g.clone(), g.clone()).expect("identity")
    }

    pub fn empty(dom: &Rel, cod: &Rel) -> DepMorphism {
        let rel = Rel::empty(dom.source().clone(), cod.target().clone());
        DepMorphism::new(rel, dom.clone(), cod.clone()).expect("empty relation is a morphism")
    }

    /// The morphism induced by bijections `f` on sources and `g` on targets with `G(a,b) ⟺ H(f a, g b)`.
    pub fn bipartite_iso(dom: &Rel, cod: &Rel, f: &[usize], g: &[usize]) -> Result<DepMorphism> {
        let ok = (0..dom.source().len()).all(|a| (0..dom.target().len()).all(|b| dom.contains(a, b) == cod.contains(f[a], g[b])));
        if !ok {
            return Err(Error::NotDepMorphism("bijections do not preserve the relation".into()));
        }
        let rel = Rel::from_fn(dom.source().clone(), cod.target().clone(), |a, hb| cod.contains(f[a], hb));
        DepMorphism::new(rel, dom.clone(), cod.clone())
    }

    pub fn dom(&self) -> &Rel {
        &self.dom
    }

    pub fn cod(&self) -> &Rel {
        &self.cod
    }

    pub fn rel(&self) -> &Rel {
        &self.rel
    }

    pub fn minus(&self) -> &Rel {
        &self.minus
    }

    pub fn plus(&self) -> &Rel {
        &self.plus
    }

    /// `self ; other`, with relation `R₋ ; S`.
    pub fn compose(&self, other: &DepMorphism) -> Result<DepMorphism> {
        if self.cod != other.dom {
            return Err(Error::TypeMismatch("codomain does not match domain".into()));
        }
        let rel = self.minus.compose(&other.rel)?;
        DepMorphism::new(rel, self.dom.clone(), other.cod.clone())
    }

    /// `Ȟ → Ğ` with the converse relation and swapped components.
    pub fn dual(&self) -> DepMorphism {
        DepMorphism {
            dom: self.cod.converse(),
            cod: self.dom.converse(),
            rel: self.rel.converse(),
            minus: self.plus.clone(),
            plus: self.minus.clone(),
        }
    }

    pub fn union(&self, other: &DepMorphism) -> Result<DepMorphism> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::TypeMismatch("morphisms have different types".into()));
        }
        DepMorphism::new(self.rel.union(&other.rel)?, self.dom.clone(), self.cod.clone())
    }

    /// `cl_R = cl_G`, compared through the closed sets.
    pub fn is_mono(&self) -> bool {
        self.rel.closed_sets() == self.dom.closed_sets()
    }

    /// `in_R = in_H`, compared through the open sets.
    pub fn is_epi(&self) -> bool {
        self.rel.open_sets() == self.cod.open_sets()
    }

    /// The action on open sets, `Y ↦ R₊˘[Y]`.
    pub fn open_map(&self, y: &Subset) -> Subset {
        self.plus.converse().up(y)
    }

    pub fn is_open_injective(&self) -> bool {
        let opens = self.dom.open_sets();
        let mut images: Vec<Subset> = opens.iter().map(|y| self.open_map(y)).collect();
        subset::sort_lex(&mut images);
        images.dedup();
        images.len() == opens.len()
    }

    pub fn is_open_surjective(&self) -> bool {
        let mut images: Vec<Subset> = self.dom.open_sets().iter().map(|y| self.open_map(y)).collect();
        subset::sort_lex(&mut images);
        images.dedup();
        images == self.cod.open_sets()
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono() && self.is_epi()
    }

    /// The inverse built from the inverse of the action on open sets.
    pub fn inverse(&self) -> Option<DepMorphism> {
        if !self.is_open_injective() || !self.is_open_surjective() {
            return None;
        }
        let back: HashMap<Subset, Subset> = self.dom.open_sets().into_iter().map(|y| (self.open_map(&y), y)).collect();
        let (g, h) = (&self.dom, &self.cod);
        let rows: Vec<Subset> = (0..h.source().len()).map(|hs| back[h.row(hs)].clone()).collect();
        let rel = Rel::from_rows(h.source().clone(), g.target().clone(), rows);
        let inv = DepMorphism::new(rel, h.clone(), g.clone()).ok()?;
        let there = self.compose(&inv).ok()?;
        let back_again = inv.compose(self).ok()?;
        (there.rel == *g && back_again.rel == *h).then_some(inv)
    }

    /// The operator equation checked on every source subset (exponential).
    pub fn satisfies_operator_equation(rel: &Rel, dom: &Rel, cod: &Rel) -> bool {
        subset::all_subsets(dom.source().len()).all(|x| {
            let img = rel.up(&x);
            rel.up(&dom.cl(&x)) == img && cod.interior(&img) == img
        })
    }
}

/// Every Dep morphism `dom → cod`, by filtering all relations.
pub fn dep_hom(dom: &Rel, cod: &Rel) -> Result<Vec<DepMorphism>> {
    let (n, m) = (dom.source().len(), cod.target().len());
    if n * m > HOM_LIMIT {
        return Err(Error::TooLarge(format!("{n}x{m} relations, limit {HOM_LIMIT} cells")));
    }
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << (n * m)) {
        let rel = Rel::from_fn(dom.source().clone(), cod.target().clone(), |a, b| bits >> (a * m + b) & 1 == 1);
        if let Ok(r) = DepMorphism::new(rel, dom.clone(), cod.clone()) {
            out.push(r);
        }
    }
    Ok(out)
}

/// A Cover-morphism: `left ; H = G ; right˘`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WitnessPair {
    pub left: Rel,
    pub right: Rel,
}

impl WitnessPair {
    pub fn new(left: Rel, right: Rel, dom: &Rel, cod: &Rel) -> Result<WitnessPair> {
        if left.source() != dom.source() || left.target() != cod.source() || right.source() != cod.target() || right.target() != dom.target() {
            return Err(Error::InvalidWitness("components have the wrong carriers".into()));
        }
        if left.compose(cod)? != dom.compose(&right.converse())? {
            return Err(Error::InvalidWitness("left ; H differs from G ; right˘".into()));
        }
        Ok(WitnessPair { left, right })
    }

    pub fn identity(g: &Rel) -> WitnessPair {
        WitnessPair { left: Rel::identity(g.source().clone()), right: Rel::identity(g.target().clone()) }
    }

    /// `(L₁;L₂, R₂;R₁)`
    pub fn then(&self, other: &WitnessPair) -> Result<WitnessPair> {
        Ok(WitnessPair { left: self.left.compose(&other.left)?, right: other.right.compose(&self.right)? })
    }

    /// The induced morphism `left ; H`.
    pub fn induced(&self, dom: &Rel, cod: &Rel) -> Result<DepMorphism> {
        DepMorphism::new(self.left.compose(cod)?, dom.clone(), cod.clone())
    }
}

/// Closure of a witness pair: the components of the morphism it induces,
/// `(gs,hs) ⟺ hs ∈ cl_H(L[gs])` and `(ht,gt) ⟺ gt ∈ cl_Ğ(R[ht])`.
pub fn cover_close(w: &WitnessPair, dom: &Rel, cod: &Rel) -> Result<(Rel, Rel)> {
    let w = WitnessPair::new(w.left.clone(), w.right.clone(), dom, cod)?;
    let minus = Rel::from_rows(
        dom.source().clone(),
        cod.source().clone(),
        w.left.rows().iter().map(|row| cod.cl(row)).collect(),
    );
    let gc = dom.converse();
    let plus = Rel::from_rows(cod.target().clone(), dom.target().clone(), w.right.rows().iter().map(|row| gc.cl(row)).collect());
    Ok((minus, plus))
}

/// Restricts `g` to representatives of `J(Open g)` and `M(Open g)`, returning
/// the reduced relation and the isomorphism `g → reduced`.
pub fn dep_reduce(g: &Rel) -> (Rel, DepMorphism) {
    let (n, m) = (g.source().len(), g.target().len());
    let mut sources = Vec::new();
    let mut seen: Vec<&Subset> = Vec::new();
    for gs in 0..n {
        let row = g.row(gs);
        if row.is_clear() || seen.contains(&row) {
            continue;
        }
        let mut below = subset::empty(m);
        for other in g.rows() {
            if other != row && other.is_subset(row) {
                below.union_with(other);
            }
        }
        if below != *row {
            seen.push(row);
            sources.push(gs);
        }
    }
    // meet-irreducible opens are the interiors of co-singletons that are not
    // intersections of strictly larger opens
    let gc = g.converse();
    let interiors: Vec<Subset> = (0..m).map(|gt| g.interior(&subset::complement(&subset::singleton(m, gt)))).collect();
    let mut targets = Vec::new();
    let mut chosen: Vec<&Subset> = Vec::new();
    for gt in 0..m {
        let y = &interiors[gt];
        if gc.row(gt).is_clear() || chosen.contains(&y) {
            continue;
        }
        let mut above = subset::full(m);
        for other in &interiors {
            if other != y && y.is_subset(other) {
                above.intersect_with(other);
            }
        }
        if g.interior(&above) != *y {
            chosen.push(y);
            targets.push(gt);
        }
    }
    let reduced = g.restrict(&sources, &targets);
    let rel = g.restrict(&(0..n).collect::<Vec<_>>(), &targets);
    let rel = Rel::from_rows(g.source().clone(), reduced.target().clone(), rel.rows().to_vec());
    let iso = DepMorphism::new(rel, g.clone(), reduced.clone()).expect("restriction is a morphism");
    (reduced, iso)
}

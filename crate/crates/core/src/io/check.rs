//! Randomised property suites with counterexample reports.

use std::fmt;

use crate::demorgan::{self, grep_iso, gred_iso, open_g, reduced_graph_iso, ug_morphism_check, unary_structures, Kind, UGraph};
use crate::dep::DepMorphism;
use crate::equivalence::{dm_completion, red_iso, rep_iso};
use crate::error::{Error, Result};
use crate::freecat::{birkhoff_beta, dl_counit, free_dl, free_dl_map, free_jsl, free_jsl_map, is_lattice_hom, jsl_counit};
use crate::io::generate::Generator;
use crate::io::text::{serialize_jsl, serialize_poset, serialize_rel, serialize_ug};
use crate::jsl::{hom, Jsl, JslMorphism};
use crate::poset::Poset;
use crate::rel::Rel;
use crate::subset::{self, Subset};
use crate::tensor::{bi_ideal_generated, check_bilinear, is_bi_ideal, sync_product, tensor, ts_iso};

/// Registered suites and the statement each one checks.
pub const SUITES: &[(&str, &str)] = &[
    ("rep-red", "rep_Q : Q → Open(Pirr Q) and red_G : G → Pirr(Open G) are natural isomorphisms"),
    ("components", "the components of a Dep morphism are the unions of all its witness pairs"),
    ("tensor-universal", "morphisms Q ⊗ R → S correspond bijectively to bilinear maps Q × R → S"),
    ("bi-ideal", "the generated bi-ideal is the intersection of all bi-ideals containing the seed"),
    ("ts-iso", "Pirr(Q ⊗_t R) is isomorphic to Pirr Q ⊙ Pirr R"),
    ("sync-reduced", "G ⊙ H is reduced iff G and H are reduced, for non-empty carriers"),
    ("de-morgan", "Open_g and Pirr_g form an equivalence between SAI_f and UG"),
    ("reduced-graph-iso", "reduced graphs are UG-isomorphic iff they are isomorphic as graphs"),
    ("free-fixtures", "the stored one-generated algebras are free in their varieties"),
    ("adjunctions", "the free constructions satisfy the triangle identities and β_D is an isomorphism"),
    ("dedekind-macneille", "e_P : P → DeMc P is an order embedding preserving existing joins and meets"),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub case: usize,
    pub instance: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub theorem: String,
    pub cases: usize,
    pub failure: Option<Counterexample>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}: {}", self.suite, self.theorem)?;
        match &self.failure {
            None => writeln!(f, "PASS: {} cases", self.cases),
            Some(c) => {
                writeln!(f, "FAIL at case {} of {}", c.case, self.cases)?;
                write!(f, "{}", c.instance)
            }
        }
    }
}

/// Runs `property` on each instance and stops at the first failure.
pub fn run_cases<T>(
    suite: &str,
    theorem: &str,
    instances: impl IntoIterator<Item = T>,
    render: impl Fn(&T) -> String,
    property: impl Fn(&T) -> bool,
) -> Report {
    let mut cases = 0;
    for (i, x) in instances.into_iter().enumerate() {
        cases += 1;
        if !property(&x) {
            return Report {
                suite: suite.into(),
                theorem: theorem.into(),
                cases,
                failure: Some(Counterexample { case: i, instance: render(&x) }),
            };
        }
    }
    Report { suite: suite.into(), theorem: theorem.into(), cases, failure: None }
}

fn holds(r: Result<bool>) -> bool {
    r.unwrap_or(false)
}

fn jsls(q: &[&Jsl]) -> String {
    q.iter().map(|q| serialize_jsl(q)).collect::<Vec<_>>().join("---\n")
}

fn rels(r: &[&Rel]) -> String {
    r.iter().map(|r| serialize_rel(r)).collect::<Vec<_>>().join("---\n")
}

fn graphs(g: &[&UGraph]) -> String {
    g.iter().map(|g| serialize_ug(g)).collect::<Vec<_>>().join("---\n")
}

pub fn check_suite(name: &str, max_size: usize, cases: usize, seed: u64) -> Result<Report> {
    let theorem = SUITES.iter().find(|(n, _)| *n == name).ok_or_else(|| Error::UnknownSuite(name.into()))?.1;
    let mut gen = Generator::new(seed);
    let report = match name {
        "rep-red" => {
            let xs = (0..cases).map(|_| Ok((gen.jsl(max_size)?, gen.rel(max_size, max_size, 0.5)))).collect::<Result<Vec<_>>>()?;
            run_cases(name, theorem, xs, |(q, g)| jsls(&[q]) + "---\n" + &serialize_rel(g), |(q, g)| rep_red(q, g))
        }
        "components" => {
            let xs: Vec<DepMorphism> = (0..cases).map(|_| gen.dep_morphism(max_size)).collect();
            run_cases(name, theorem, xs, |r| rels(&[r.rel(), r.dom(), r.cod()]), components_are_maximal)
        }
        "tensor-universal" => {
            let xs = (0..cases).map(|_| Ok([gen.jsl(max_size)?, gen.jsl(max_size)?, gen.jsl(max_size)?])).collect::<Result<Vec<_>>>()?;
            run_cases(name, theorem, xs, |[q, r, s]| jsls(&[q, r, s]), |[q, r, s]| holds(tensor_universal(q, r, s)))
        }
        "bi-ideal" => {
            let mut xs = Vec::new();
            for _ in 0..cases {
                let (q, r) = (gen.jsl(max_size.min(4))?, gen.jsl(max_size.min(4))?);
                let n = q.len() * r.len();
                let seed = subset::from_indices(n, (0..n).filter(|_| gen.coin(0.25)));
                xs.push((q, r, seed));
            }
            run_cases(name, theorem, xs, |(q, r, s)| jsls(&[q, r]) + &format!("# seed cells {:?}\n", subset::elements(s)), |(q, r, s)| {
                bi_ideal_oracle(q, r, s)
            })
        }
        "ts-iso" => {
            let xs = (0..cases).map(|_| Ok((gen.jsl(max_size)?, gen.jsl(max_size)?))).collect::<Result<Vec<_>>>()?;
            run_cases(name, theorem, xs, |(q, r)| jsls(&[q, r]), |(q, r)| ts_iso(q, r).is_ok_and(|i| i.is_iso()))
        }
        "sync-reduced" => {
            let xs: Vec<(Rel, Rel)> = (0..cases).map(|_| (gen.nonempty_rel(max_size, max_size, 0.5), gen.nonempty_rel(max_size, max_size, 0.5))).collect();
            run_cases(name, theorem, xs, |(g, h)| rels(&[g, h]), |(g, h)| sync_product(g, h).is_reduced() == (g.is_reduced() && h.is_reduced()))
        }
        "de-morgan" => {
            let xs: Vec<UGraph> = (0..cases).map(|_| gen.ug(max_size)).collect();
            run_cases(name, theorem, xs, |g| graphs(&[g]), de_morgan_round_trip)
        }
        "reduced-graph-iso" => {
            let mut xs = Vec::new();
            for _ in 0..cases {
                xs.push((reduced_graph(&mut gen, max_size)?, reduced_graph(&mut gen, max_size)?));
            }
            run_cases(name, theorem, xs, |(a, b)| graphs(&[a, b]), |(a, b)| {
                holds(reduced_graph_iso(a, b).map(|iso| iso.is_some() == open_g(a).0.isomorphism(&open_g(b).0).is_some()))
            })
        }
        "free-fixtures" => {
            let kinds = [Kind::Saj, Kind::Sam, Kind::Sai];
            let xs = (0..cases).map(|i| Ok((kinds[i % 3], gen.jsl(max_size)?))).collect::<Result<Vec<_>>>()?;
            run_cases(name, theorem, xs, |(k, q)| format!("# kind {k}\n") + &serialize_jsl(q), |(k, q)| free_against(*k, q))
        }
        "adjunctions" => {
            let xs = (0..cases).map(|_| Ok((gen.poset(0, max_size), gen.jsl(max_size)?))).collect::<Result<Vec<_>>>()?;
            run_cases(name, theorem, xs, |(p, q)| serialize_poset(p) + "---\n" + &serialize_jsl(q), |(p, q)| holds(adjunctions(p, q)))
        }
        "dedekind-macneille" => {
            let xs: Vec<Poset> = (0..cases).map(|_| gen.poset(0, max_size)).collect();
            run_cases(name, theorem, xs, serialize_poset, dm_embedding)
        }
        _ => unreachable!("registered suite"),
    };
    Ok(report)
}

fn rep_red(q: &Jsl, g: &Rel) -> bool {
    let (rep, inv, _) = rep_iso(q);
    let (red, red_inv) = red_iso(g);
    rep.is_iso()
        && rep.then(&inv).is_ok_and(|c| c == JslMorphism::identity(q))
        && red.compose(&red_inv).is_ok_and(|c| c == DepMorphism::identity(g))
        && red_inv.compose(&red).is_ok_and(|c| &c == &DepMorphism::identity(red.cod()))
}

/// Unions of the rows `S` with `H[S] = R[g]` and of the columns `T` with `G[T]˘ = R˘[h]`, by enumeration.
pub fn witness_union(r: &DepMorphism) -> (Rel, Rel) {
    let (g, h, rel) = (r.dom(), r.cod(), r.rel());
    let mut minus = Rel::empty(g.source().clone(), h.source().clone());
    for gs in 0..g.source().len() {
        for s in subset::all_subsets(h.source().len()) {
            if &h.up(&s) == rel.row(gs) {
                for hs in s.ones() {
                    minus.insert(gs, hs);
                }
            }
        }
    }
    let (gc, rc) = (g.converse(), rel.converse());
    let mut plus = Rel::empty(h.target().clone(), g.target().clone());
    for ht in 0..h.target().len() {
        for t in subset::all_subsets(g.target().len()) {
            if &gc.up(&t) == rc.row(ht) {
                for gt in t.ones() {
                    plus.insert(ht, gt);
                }
            }
        }
    }
    (minus, plus)
}

fn components_are_maximal(r: &DepMorphism) -> bool {
    let (minus, plus) = witness_union(r);
    &minus == r.minus() && &plus == r.plus()
}

/// Above this many candidate maps the bilinear count is skipped.
const BILINEAR_ENUMERATION_LIMIT: usize = 1 << 17;

fn tensor_universal(q: &Jsl, r: &Jsl, s: &Jsl) -> Result<bool> {
    let t = tensor(q, r)?;
    let homs = hom(t.jsl(), s);
    for f in &homs {
        let b = t.bimorphism_of(f);
        check_bilinear(&b, q, r, s)?;
        if &t.extend(s, &b)? != f {
            return Ok(false);
        }
    }
    let cells = q.len() * r.len();
    if (s.len() as f64).powi(cells as i32) <= BILINEAR_ENUMERATION_LIMIT as f64 {
        let total = s.len().pow(cells as u32);
        let bilinear = (0..total)
            .filter(|code| {
                let b: Vec<usize> = (0..cells).map(|i| code / s.len().pow(i as u32) % s.len()).collect();
                check_bilinear(&b, q, r, s).is_ok()
            })
            .count();
        return Ok(bilinear == homs.len());
    }
    Ok(true)
}

/// Compares against the intersection of every bi-ideal above the seed.
pub fn bi_ideal_oracle(q: &Jsl, r: &Jsl, seed: &Subset) -> bool {
    let n = q.len() * r.len();
    let mut meet = subset::full(n);
    for s in subset::all_subsets(n) {
        if seed.is_subset(&s) && is_bi_ideal(&s, q, r) {
            meet.intersect_with(&s);
        }
    }
    bi_ideal_generated(seed, q, r).cells() == &meet
}

fn de_morgan_round_trip(g: &UGraph) -> bool {
    let (there, back, target) = gred_iso(g);
    let ids = there.compose(&back).is_ok_and(|c| c == DepMorphism::identity(g.edges()))
        && back.compose(&there).is_ok_and(|c| c == DepMorphism::identity(target.edges()));
    let (alg, _) = open_g(g);
    let alg_ok = grep_iso(&alg).is_ok_and(|(f, h, t)| {
        alg.is_homomorphism(&t, &f) && f.then(&h).is_ok_and(|c| c == JslMorphism::identity(alg.base())) && h.then(&f).is_ok_and(|c| c == JslMorphism::identity(t.base()))
    });
    ids && alg_ok && ug_morphism_check(there.rel(), g, &target)
}

fn reduced_graph(gen: &mut Generator, max: usize) -> Result<UGraph> {
    for _ in 0..1000 {
        let g = gen.ug(max);
        if g.is_reduced() {
            return Ok(g);
        }
    }
    Err(Error::GenerationExhausted(1000))
}

/// Exactly one homomorphism from the free algebra per choice of image for `x`.
pub fn free_against(kind: Kind, q: &Jsl) -> bool {
    let free = demorgan::free_one_generated(kind);
    let x = free.base().index_of("x").expect("generator");
    unary_structures(q, kind).iter().all(|target| {
        let homs = free.homomorphisms(target);
        (0..q.len()).all(|a| homs.iter().filter(|f| f.apply(x) == a).count() == 1)
    })
}

fn adjunctions(p: &Poset, q: &Jsl) -> Result<bool> {
    let fp = free_jsl(p);
    let (fp2, eps) = jsl_counit(fp.jsl());
    let jsl_left = free_jsl_map(fp.unit(), &fp, &fp2)?.then(&eps)? == JslMorphism::identity(fp.jsl());
    let (fq, eps_q) = jsl_counit(q);
    let jsl_right = (0..q.len()).all(|x| eps_q.apply(fq.unit()[x]) == x);
    let fd = free_dl(q);
    let (fd2, eps_d) = dl_counit(&fd.lattice())?;
    let lifted = free_dl_map(fd.unit(), &fd, &fd2)?;
    let dl_left = is_lattice_hom(&lifted) && lifted.then(&eps_d)? == JslMorphism::identity(fd.jsl());
    let beta = birkhoff_beta(&fd.lattice())?;
    Ok(jsl_left && jsl_right && dl_left && beta.is_iso())
}

fn dm_embedding(p: &Poset) -> bool {
    let (opens, e) = dm_completion(p);
    let q = opens.jsl();
    let n = p.len();
    let embeds = (0..n).all(|x| (0..n).all(|y| p.leq(x, y) == q.leq(e[x], e[y])));
    let preserves = subset::all_subsets(n).all(|s| {
        let joins = p.supremum(&s).is_none_or(|j| e[j] == q.join_all(s.ones().map(|x| e[x])));
        let meets = p.infimum(&s).is_none_or(|m| e[m] == q.meet_all(s.ones().map(|x| e[x])));
        joins && meets
    });
    let lattice = Jsl::from_poset(p.clone()).map_or(true, |l| l.is_isomorphic(q));
    embeds && preserves && lattice
}

//! Invariant suites: structural facts about the complex, closed form versus
//! oracle, and the Gerstenhaber identities. Each check returns a
//! [`CheckOutcome`].

use std::collections::{BTreeSet, HashMap};

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::StringAlgebra;
use crate::combinatorics::{
    classify_cyclic, classify_pair, enumerate_ap, orbit, parallel_pairs, phi, rotate, Decoration, DegreeCensus,
    GammaRange, PairTag, ParallelPair,
};
use crate::complex::{apply_differential, assemble_blocks, block_components, Cochain, CochainComplex};
use crate::formula::{gentle_identity_counts, hh1_dim, hh1_dim_gentle, hh_dim_formula, hhn_dim, hhn_dim_gentle};
use crate::gerstenhaber::{bracket, cup, cup_pairs, omega_power};
use crate::linalg::{self, image_basis, kernel_basis, Field, Scalar, SparseMatrix, SparseVec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: impl Into<String>, failures: Vec<String>, checked: usize) -> CheckOutcome {
        let passed = failures.is_empty();
        let detail = if passed {
            format!("{checked} cases")
        } else {
            let shown: Vec<_> = failures.iter().take(3).cloned().collect();
            format!("{} of {checked} failed: {}", failures.len(), shown.join("; "))
        };
        CheckOutcome { name: name.into(), passed, detail }
    }
}

fn census(alg: &StringAlgebra, n: usize) -> DegreeCensus {
    DegreeCensus::new(alg.quiver(), alg.basis(), n).expect("validated algebra")
}

/// `F_{n+2} ∘ F_{n+1} = 0`.
pub fn complex_property(cx: &CochainComplex, max_degree: usize) -> CheckOutcome {
    let mut failures = Vec::new();
    for n in 1..=max_degree {
        if !cx.differential_matrix(n + 1).mul(&cx.differential_matrix(n)).is_zero() {
            failures.push(format!("F_{} F_{} != 0", n + 1, n));
        }
    }
    CheckOutcome::new("complex property", failures, max_degree)
}

/// Block maps reassemble to the direct differential matrix.
pub fn block_consistency(cx: &CochainComplex, max_degree: usize) -> CheckOutcome {
    let mut failures = Vec::new();
    for n in 0..max_degree {
        let blocks = block_components(cx.algebra(), cx.field(), n);
        let m = assemble_blocks(&blocks, &cx.basis(n), &cx.basis(n + 1));
        if &m != cx.differential_matrix(n + 1).as_ref() {
            failures.push(format!("degree {n}"));
        }
    }
    CheckOutcome::new("block consistency", failures, max_degree)
}

/// Closed form equals oracle in every degree up to `max_degree`.
pub fn formula_vs_oracle(cx: &CochainComplex, max_degree: usize) -> CheckOutcome {
    let mut failures = Vec::new();
    for n in 0..=max_degree {
        let oracle = cx.hh_dim(n);
        let formula = hh_dim_formula(cx.algebra(), n, cx.field()).dim;
        if oracle != formula {
            failures.push(format!("HH^{n}: oracle {oracle}, formula {formula}"));
        }
    }
    CheckOutcome::new("formula = oracle", failures, max_degree + 1)
}

/// Matrices of `t` and `N` on `k𝒢ₙ`.
pub fn cyclic_operators(
    alg: &StringAlgebra,
    field: Field,
    n: usize,
) -> (Vec<ParallelPair>, SparseMatrix, SparseMatrix) {
    let q = alg.quiver();
    let g = census(alg, n).gentle_pairs();
    let index: HashMap<&ParallelPair, usize> = g.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut t = SparseMatrix::zero(g.len(), g.len());
    let mut norm = SparseMatrix::zero(g.len(), g.len());
    for (j, p) in g.iter().enumerate() {
        let r = rotate(q, p).expect("gentle pairs are complete");
        t.add_to(index[&r], j, field.one());
        for o in orbit(q, p).expect("complete") {
            norm.add_to(index[&o], j, field.one());
        }
    }
    (g, t, norm)
}

fn same_subspace(a: &linalg::SubspaceBasis, b: &linalg::SubspaceBasis) -> bool {
    a.is_subspace_of(b) && b.is_subspace_of(a)
}

/// `N(1−t) = (1−t)N = 0`, `rank N + rank(1−t) = |𝒢ₙ|`, `Ker(1−t) = Im N`,
/// `Ker N = Im(1−t)`.
pub fn norm_exactness(alg: &StringAlgebra, field: Field, max_degree: usize) -> CheckOutcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 1..=max_degree {
        let (g, t, norm) = cyclic_operators(alg, field, n);
        if g.is_empty() {
            continue;
        }
        checked += 1;
        let one_minus_t = SparseMatrix::identity(field, g.len()).sub(&t);
        if !norm.mul(&one_minus_t).is_zero() || !one_minus_t.mul(&norm).is_zero() {
            failures.push(format!("degree {n}: N(1-t) or (1-t)N nonzero"));
        }
        if linalg::rank(&norm, field) + linalg::rank(&one_minus_t, field) != g.len() {
            failures.push(format!("degree {n}: ranks do not add up"));
        }
        if !same_subspace(&kernel_basis(&one_minus_t, field), &image_basis(&norm)) {
            failures.push(format!("degree {n}: Ker(1-t) != Im N"));
        }
        if !same_subspace(&kernel_basis(&norm, field), &image_basis(&one_minus_t)) {
            failures.push(format!("degree {n}: Ker N != Im(1-t)"));
        }
    }
    CheckOutcome::new("norm exactness", failures, checked)
}

/// The restriction of `F⁰_{n+1}` to `k(n̄ℰₙ ⊔ n̄𝒢ₙ)` is injective.
pub fn g3_injectivity(alg: &StringAlgebra, field: Field, max_degree: usize) -> CheckOutcome {
    let q = alg.quiver();
    let mut failures = Vec::new();
    for n in 1..=max_degree {
        let blocks = block_components(alg, field, n);
        let cols: Vec<usize> = blocks
            .f0_domain
            .iter()
            .enumerate()
            .filter(|(_, p)| {
                let c = classify_cyclic(q, p).expect("vertex pair");
                (c.complete && !c.gentle) || (!c.complete && !c.empty)
            })
            .map(|(j, _)| j)
            .collect();
        let r = linalg::rank(&blocks.f0.select_columns(&cols), field);
        if r != cols.len() {
            failures.push(format!("degree {n}: rank {r} < {}", cols.len()));
        }
    }
    CheckOutcome::new("G3 injectivity", failures, max_degree)
}

/// Kernel and image dimensions of `F⁰_{n+1}` match the set counts.
pub fn f0_dimensions(alg: &StringAlgebra, field: Field, max_degree: usize) -> CheckOutcome {
    let q = alg.quiver();
    let mut failures = Vec::new();
    for n in 1..=max_degree {
        let c = census(alg, n);
        let blocks = block_components(alg, field, n);
        let rank = linalg::rank(&blocks.f0, field);
        let kernel = blocks.f0.cols() - rank;
        let with_orbits = n % 2 == 0 || field.characteristic() == 2;
        let orbits = if with_orbits { c.gentle_orbits(q) } else { 0 };
        let expected_kernel = c.empty() + orbits;
        let expected_image = c.complete() + c.non_empty() - orbits;
        if kernel != expected_kernel || rank != expected_image {
            failures.push(format!("degree {n}: ker {kernel} vs {expected_kernel}, im {rank} vs {expected_image}"));
        }
    }
    CheckOutcome::new("F0 kernel/image dimensions", failures, max_degree)
}

/// Kernel and image dimensions of `F¹_{n+1}` match the set counts.
pub fn f1_dimensions(alg: &StringAlgebra, field: Field, max_degree: usize) -> CheckOutcome {
    use Decoration::Minus;
    let mut failures = Vec::new();
    for n in 1..=max_degree {
        let c = census(alg, n);
        let next = census(alg, n + 1);
        let blocks = block_components(alg, field, n);
        let rank = linalg::rank(&blocks.f1, field);
        let kernel = blocks.f1.cols() - rank;
        let pos = GammaRange::Positive;
        let expected_kernel = c.count(PairTag::ZeroZero, pos, Some(Minus), Some(Minus))
            + c.count(PairTag::ZeroOne, pos, Some(Minus), None)
            + c.count(PairTag::OneOne, pos, None, None)
            + c.count(PairTag::OneZero, pos, None, None);
        let long = GammaRange::Long;
        let expected_image = next.count(PairTag::ZeroOne, long, Some(Minus), None)
            + next.count(PairTag::OneZero, long, None, None)
            + next.count(PairTag::OneOne, long, None, None);
        if kernel != expected_kernel || rank != expected_image {
            failures.push(format!("degree {n}: ker {kernel} vs {expected_kernel}, im {rank} vs {expected_image}"));
        }
    }
    CheckOutcome::new("F1 kernel/image dimensions", failures, max_degree)
}

fn random_scalar(rng: &mut ChaCha8Rng, field: Field) -> Scalar {
    let mut x = 0;
    while x == 0 {
        x = rng.random_range(-3..=3);
    }
    field.int(x)
}

/// Random combination of at most `terms` basis vectors.
fn random_combination(rng: &mut ChaCha8Rng, field: Field, rows: &[SparseVec], terms: usize) -> SparseVec {
    let mut v = SparseVec::new();
    if rows.is_empty() {
        return v;
    }
    for _ in 0..rng.random_range(1..=terms) {
        let r = &rows[rng.random_range(0..rows.len())];
        linalg::add_scaled(&mut v, &random_scalar(rng, field), r);
    }
    v
}

/// A random cochain of degree `n` with up to `terms` basis pairs.
pub fn random_cochain(cx: &CochainComplex, n: usize, rng: &mut ChaCha8Rng, terms: usize) -> Cochain {
    let basis = cx.basis(n);
    let mut c = Cochain::zero(n, cx.field());
    if basis.is_empty() {
        return c;
    }
    for _ in 0..rng.random_range(1..=terms) {
        let p = basis.pairs()[rng.random_range(0..basis.len())].clone();
        c.add_term(p, random_scalar(rng, cx.field()));
    }
    c
}

/// A random cocycle of degree `n`.
pub fn random_cocycle(cx: &CochainComplex, n: usize, rng: &mut ChaCha8Rng) -> Cochain {
    let z = cx.cocycles(n);
    cx.to_cochain(n, &random_combination(rng, cx.field(), z.rows(), 3))
}

/// Kernel elements of `F_{n+1}` supported on pairs with `|γ| ≥ 2` outside
/// `⁻(0,0)ₙ⁻` are coboundaries (`n > 1`).
pub fn coboundary_criterion(
    cx: &CochainComplex,
    max_degree: usize,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> CheckOutcome {
    let q = cx.algebra().quiver();
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut spaces = Vec::new();
    for n in 2..=max_degree {
        let basis = cx.basis(n);
        let cols: Vec<usize> = basis
            .pairs()
            .iter()
            .enumerate()
            .filter(|(_, p)| {
                if p.gamma.len() < 2 {
                    return false;
                }
                let c = classify_pair(q, p);
                !(c.tag == PairTag::ZeroZero && c.left == Decoration::Minus && c.right == Decoration::Minus)
            })
            .map(|(j, _)| j)
            .collect();
        let restricted = cx.differential_matrix(n + 1).select_columns(&cols);
        let k = kernel_basis(&restricted, cx.field());
        if k.dim() > 0 {
            spaces.push((n, cols, k));
        }
    }
    if !spaces.is_empty() {
        for _ in 0..samples {
            let (n, cols, k) = &spaces[rng.random_range(0..spaces.len())];
            let local = random_combination(rng, cx.field(), k.rows(), 4);
            let v: SparseVec = local.iter().map(|(&i, x)| (cols[i], x.clone())).collect();
            let c = cx.to_cochain(*n, &v);
            checked += 1;
            match cx.is_zero_class(&c) {
                Ok(true) => {}
                Ok(false) => failures.push(format!("degree {n}: nonzero class {}", c.display(q))),
                Err(e) => failures.push(format!("degree {n}: {e}")),
            }
        }
    }
    CheckOutcome::new("coboundary criterion", failures, checked)
}

/// `φ` maps `(1,0)ₙ⁺` bijectively onto `⁺(0,1)ₙ`.
pub fn phi_bijection(alg: &StringAlgebra, max_degree: usize) -> CheckOutcome {
    let q = alg.quiver();
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 1..=max_degree {
        let c = census(alg, n);
        let domain: Vec<&ParallelPair> = c
            .pairs
            .iter()
            .filter(|(_, k)| k.tag == PairTag::OneZero && k.right == Decoration::Plus)
            .map(|(p, _)| p)
            .collect();
        let target: BTreeSet<&ParallelPair> = c
            .pairs
            .iter()
            .filter(|(_, k)| k.tag == PairTag::ZeroOne && k.left == Decoration::Plus)
            .map(|(p, _)| p)
            .collect();
        let mut image = BTreeSet::new();
        for p in &domain {
            checked += 1;
            match phi(q, p) {
                Ok(r) => {
                    if !image.insert(r) {
                        failures.push(format!("degree {n}: phi not injective at {}", p.display(q)));
                    }
                }
                Err(e) => failures.push(format!("degree {n}: {}: {e}", p.display(q))),
            }
        }
        if image.len() != target.len() || !image.iter().all(|r| target.contains(r)) {
            failures.push(format!("degree {n}: phi image has {} of {} targets", image.len(), target.len()));
        }
    }
    CheckOutcome::new("phi bijection", failures, checked)
}

/// Tags partition each degree; vertex pairs are `⁺(0,0)⁺`; closed vertex
/// loops `(e_r, α₁⋯αₙ)` satisfy `αₙα₁ ∈ I`.
pub fn partition_and_observations(alg: &StringAlgebra, max_degree: usize) -> CheckOutcome {
    let q = alg.quiver();
    let mut failures = Vec::new();
    for n in 1..=max_degree {
        let c = census(alg, n);
        let total: usize = [PairTag::ZeroZero, PairTag::OneZero, PairTag::ZeroOne, PairTag::OneOne]
            .iter()
            .map(|&t| c.pairs.iter().filter(|(_, k)| k.tag == t).count())
            .sum();
        if total != c.pairs.len() {
            failures.push(format!("degree {n}: tags do not partition"));
        }
        for p in c.vertex_pair_exceptions() {
            failures.push(format!("degree {n}: vertex pair {} not in +(0,0)+", p.display(q)));
        }
        for d in &c.vertex_pairs {
            if d.gentle && !d.complete || d.empty && d.complete {
                failures.push(format!("degree {n}: inconsistent flags for {}", d.pair.display(q)));
            }
            if d.complete {
                let r = rotate(q, &d.pair).expect("complete");
                let rd = classify_cyclic(q, &r).expect("vertex pair");
                if !rd.complete || rd.gentle != d.gentle {
                    failures.push(format!("degree {n}: rotation changes flags of {}", d.pair.display(q)));
                }
                let orb: BTreeSet<_> = orbit(q, &d.pair).unwrap().into_iter().collect();
                let orb_r: BTreeSet<_> = orbit(q, &r).unwrap().into_iter().collect();
                if orb != orb_r {
                    failures.push(format!("degree {n}: N t != N at {}", d.pair.display(q)));
                }
            }
        }
    }
    for p in parallel_pairs(&enumerate_ap(q, 0), alg.basis(), 1) {
        if p.gamma.source() == p.gamma.target() {
            let (first, last) = (p.gamma.first().unwrap(), p.gamma.last().unwrap());
            if !q.is_relation(last, first) {
                failures.push(format!("loop {} closes without a relation", p.gamma.display(q)));
            }
        }
    }
    CheckOutcome::new("partition and observations", failures, max_degree)
}

/// On gentle algebras: `|n̄ℰ_{n−1}| = |((1,0)ₙ ⊔ ⁻(0,1)ₙ) ∩ (APₙ//Q₁)|` and
/// the gentle specialization agrees with the general formula.
pub fn gentle_consistency(alg: &StringAlgebra, field: Field, max_degree: usize) -> CheckOutcome {
    let mut failures = Vec::new();
    if !alg.is_gentle() {
        return CheckOutcome::new("gentle consistency (not gentle)", failures, 0);
    }
    if hh1_dim_gentle(alg, field).unwrap().dim != hh1_dim(alg, field).dim {
        failures.push("HH^1".to_string());
    }
    for n in 2..=max_degree {
        let (a, b) = gentle_identity_counts(alg, n);
        if a != b {
            failures.push(format!("degree {n}: nE {a} vs {b}"));
        }
        if hhn_dim_gentle(alg, n, field).unwrap().dim != hhn_dim(alg, n, field).dim {
            failures.push(format!("degree {n}: gentle specialization differs"));
        }
    }
    CheckOutcome::new("gentle consistency", failures, max_degree)
}

/// Degree pairs `(n, m)` with `0 ≤ n, m ≤ max_degree`.
fn degree_pairs(max_degree: usize) -> Vec<(usize, usize)> {
    (0..=max_degree).flat_map(|n| (0..=max_degree).map(move |m| (n, m))).collect()
}

/// `F(f ∪ g) = F(f) ∪ g + (−1)ⁿ f ∪ F(g)` on random cochains.
pub fn derivation_identity(
    cx: &CochainComplex,
    max_degree: usize,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> CheckOutcome {
    let alg = cx.algebra();
    let field = cx.field();
    let pairs = degree_pairs(max_degree);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let (n, m) = pairs[rng.random_range(0..pairs.len())];
        let f = random_cochain(cx, n, rng, 4);
        let g = random_cochain(cx, m, rng, 4);
        let lhs = apply_differential(alg, &cup(alg, &f, &g));
        let rhs = &cup(alg, &apply_differential(alg, &f), &g)
            + &cup(alg, &f, &apply_differential(alg, &g)).scale(&field.sign(n));
        if lhs != rhs {
            failures.push(format!("degrees ({n},{m})"));
        }
    }
    CheckOutcome::new("cup derivation identity", failures, samples)
}

/// `F([f, g]) = [f, F(g)] + (−1)^{m−1}[F(f), g]` on random cochains with
/// `n + m > 0`.
pub fn bracket_compatibility(
    cx: &CochainComplex,
    max_degree: usize,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> CheckOutcome {
    let alg = cx.algebra();
    let field = cx.field();
    let pairs: Vec<(usize, usize)> = degree_pairs(max_degree).into_iter().filter(|&(n, m)| n + m > 0).collect();
    let mut failures = Vec::new();
    for _ in 0..samples {
        let (n, m) = pairs[rng.random_range(0..pairs.len())];
        let f = random_cochain(cx, n, rng, 4);
        let g = random_cochain(cx, m, rng, 4);
        let lhs = apply_differential(alg, &bracket(alg, &f, &g));
        let rhs = &bracket(alg, &f, &apply_differential(alg, &g))
            + &bracket(alg, &apply_differential(alg, &f), &g).scale(&field.sign(m + 1));
        if lhs != rhs {
            failures.push(format!(
                "degrees ({n},{m}): f = {}, g = {}",
                f.display(alg.quiver()),
                g.display(alg.quiver())
            ));
        }
    }
    CheckOutcome::new("bracket compatibility", failures, samples)
}

/// Products of cocycles change by coboundaries when an input changes by a
/// coboundary, and cup is graded commutative up to coboundaries.
pub fn cohomology_well_defined(
    cx: &CochainComplex,
    max_degree: usize,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> CheckOutcome {
    let alg = cx.algebra();
    let field = cx.field();
    let pairs: Vec<(usize, usize)> = degree_pairs(max_degree).into_iter().filter(|&(n, _)| n >= 1).collect();
    let mut failures = Vec::new();
    for _ in 0..samples {
        let (n, m) = pairs[rng.random_range(0..pairs.len())];
        let f = random_cocycle(cx, n, rng);
        let g = random_cocycle(cx, m, rng);
        let h = random_cochain(cx, n - 1, rng, 3);
        let f2 = &f + &apply_differential(alg, &h);
        let dc = &cup(alg, &f2, &g) - &cup(alg, &f, &g);
        if !cx.is_coboundary(&dc) {
            failures.push(format!("cup not well defined in degrees ({n},{m})"));
        }
        let db = &bracket(alg, &f2, &g) - &bracket(alg, &f, &g);
        if !cx.is_coboundary(&db) {
            failures.push(format!("bracket not well defined in degrees ({n},{m})"));
        }
        let comm = &cup(alg, &f, &g) - &cup(alg, &g, &f).scale(&field.sign(n * m));
        if !cx.is_coboundary(&comm) {
            failures.push(format!("cup not graded commutative in degrees ({n},{m})"));
        }
    }
    CheckOutcome::new("cohomology well-definedness and commutativity", failures, samples)
}

/// Graded Jacobi identity for the bracket in cohomology, on degree triples
/// with at most one zero.
pub fn jacobi(cx: &CochainComplex, max_degree: usize, samples: usize, rng: &mut ChaCha8Rng) -> CheckOutcome {
    let alg = cx.algebra();
    let field = cx.field();
    let mut failures = Vec::new();
    for _ in 0..samples {
        let (a, b, c) = loop {
            let t =
                (rng.random_range(0..=max_degree), rng.random_range(0..=max_degree), rng.random_range(0..=max_degree));
            if [t.0, t.1, t.2].iter().filter(|&&d| d == 0).count() <= 1 {
                break t;
            }
        };
        let f = random_cocycle(cx, a, rng);
        let g = random_cocycle(cx, b, rng);
        let h = random_cocycle(cx, c, rng);
        let s = |x: usize, y: usize| field.sign(((x + 1) % 2) * ((y + 1) % 2));
        let t1 = bracket(alg, &f, &bracket(alg, &g, &h)).scale(&s(a, c));
        let t2 = bracket(alg, &g, &bracket(alg, &h, &f)).scale(&s(b, a));
        let t3 = bracket(alg, &h, &bracket(alg, &f, &g)).scale(&s(c, b));
        let total = &(&t1 + &t2) + &t3;
        if !cx.is_coboundary(&total) {
            failures.push(format!("degrees ({a},{b},{c})"));
        }
    }
    CheckOutcome::new("Jacobi identity in cohomology", failures, samples)
}

/// `tⁱ(ω^{s₁}) ∪ tʲ(ω^{s₂}) = δᵢⱼ tⁱ(ω^{s₁+s₂})` for every gentle `ω` of
/// degree at most `max_degree` and `s₁, s₂ ≤ max_power`.
pub fn orbit_orthogonality(alg: &StringAlgebra, max_degree: usize, max_power: usize) -> CheckOutcome {
    let q = alg.quiver();
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 1..=max_degree {
        for omega in census(alg, n).gentle_pairs() {
            for s1 in 1..=max_power {
                for s2 in 1..=max_power {
                    let o1 = orbit(q, &omega_power(q, &omega, s1).unwrap()).unwrap();
                    let o2 = orbit(q, &omega_power(q, &omega, s2).unwrap()).unwrap();
                    let o12 = orbit(q, &omega_power(q, &omega, s1 + s2).unwrap()).unwrap();
                    for (i, x) in o1.iter().enumerate() {
                        for (j, y) in o2.iter().enumerate() {
                            checked += 1;
                            let got = cup_pairs(alg, x, y);
                            let want = (i == j).then(|| o12[i].clone());
                            if got != want {
                                failures.push(format!("{} s=({s1},{s2}) i={i} j={j}", omega.display(q)));
                            }
                        }
                    }
                }
            }
        }
    }
    CheckOutcome::new("orbit orthogonality", failures, checked)
}

fn gentle_empty(alg: &StringAlgebra, n: usize) -> bool {
    n == 0 || census(alg, n).gentle() == 0
}

fn class_basis(cx: &CochainComplex, n: usize) -> Vec<Cochain> {
    cx.cohomology_basis_cochains(n)
}

/// Vanishing results: cup products vanish when `𝒢ₙ = 𝒢ₘ = ∅`, and in odd
/// degrees away from characteristic 2; on gentle algebras brackets vanish
/// when `𝒢_{n−1} = 𝒢_{m−1} = ∅` (`n, m > 1`) and, away from characteristic
/// 2, between even degrees.
pub fn vanishing_theorems(cx: &CochainComplex, max_degree: usize) -> CheckOutcome {
    let alg = cx.algebra();
    let field = cx.field();
    let odd_char = field.characteristic() != 2;
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 1..=max_degree {
        for m in 1..=max_degree {
            let cup_vanishes = (gentle_empty(alg, n) && gentle_empty(alg, m)) || (odd_char && n % 2 == 1 && m % 2 == 1);
            let bracket_vanishes = alg.is_gentle()
                && ((n > 1 && m > 1 && gentle_empty(alg, n - 1) && gentle_empty(alg, m - 1))
                    || (odd_char && n >= 2 && m >= 2 && n % 2 == 0 && m % 2 == 0));
            if !cup_vanishes && !bracket_vanishes {
                continue;
            }
            let (bn, bm) = (class_basis(cx, n), class_basis(cx, m));
            for f in &bn {
                for g in &bm {
                    checked += 1;
                    if cup_vanishes && !cx.is_coboundary(&cup(alg, f, g)) {
                        failures.push(format!("cup HH^{n} x HH^{m} nonzero"));
                    }
                    if bracket_vanishes && !cx.is_coboundary(&bracket(alg, f, g)) {
                        failures.push(format!("bracket HH^{n} x HH^{m} nonzero"));
                    }
                }
            }
        }
    }
    CheckOutcome::new("vanishing theorems", failures, checked)
}

/// Every suite, with the given degree bound and seed.
pub fn run_all(cx: &CochainComplex, max_degree: usize, seed: u64) -> Vec<CheckOutcome> {
    use rand::SeedableRng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alg = cx.algebra();
    let field = cx.field();
    let product_degree = max_degree.min(3);
    vec![
        complex_property(cx, max_degree),
        block_consistency(cx, max_degree),
        formula_vs_oracle(cx, max_degree),
        norm_exactness(alg, field, max_degree),
        g3_injectivity(alg, field, max_degree),
        f0_dimensions(alg, field, max_degree),
        f1_dimensions(alg, field, max_degree),
        coboundary_criterion(cx, max_degree, 20, &mut rng),
        phi_bijection(alg, max_degree),
        partition_and_observations(alg, max_degree),
        gentle_consistency(alg, field, max_degree),
        derivation_identity(cx, product_degree, 30, &mut rng),
        bracket_compatibility(cx, product_degree, 30, &mut rng),
        cohomology_well_defined(cx, product_degree, 20, &mut rng),
        jacobi(cx, product_degree.min(2), 10, &mut rng),
        orbit_orthogonality(alg, max_degree, 2),
        vanishing_theorems(cx, product_degree),
    ]
}

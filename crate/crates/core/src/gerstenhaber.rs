//! Cup product, `∘ᵢ` compositions and the Gerstenhaber bracket on
//! parallel-pair cochains, their cohomology-level versions, and the
//! non-triviality witnesses built from gentle cyclic pairs.

use thiserror::Error;

use crate::algebra::StringAlgebra;
use crate::combinatorics::{classify_cyclic, is_ap, orbit, DegreeCensus, ParallelPair};
use crate::complex::{Cochain, CochainComplex, ComplexError};
use crate::linalg::{Field, Scalar};
use crate::quiver::{BoundQuiver, Path};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GerstenhaberError {
    #[error("pair {0} is not gentle")]
    NotGentle(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("bracket witnesses require characteristic 0 (got {0})")]
    CharacteristicNotZero(u64),
    #[error("bracket witnesses require a gentle algebra")]
    AlgebraNotGentle,
}

fn concat(parts: &[&Path]) -> Option<Path> {
    let mut it = parts.iter();
    let mut acc = (*it.next()?).clone();
    for p in it {
        acc = acc.compose(p)?;
    }
    Some(acc)
}

fn concat_ap(q: &BoundQuiver, parts: &[&Path]) -> Option<Path> {
    concat(parts).filter(|p| is_ap(q, p))
}

/// `(ρ, γ) ∪ (ρ′, γ′) = (ρρ′, γγ′)`, or `None` when `ρρ′ ∉ AP` or
/// `γγ′ = 0` in `A`.
pub fn cup_pairs(alg: &StringAlgebra, f: &ParallelPair, g: &ParallelPair) -> Option<ParallelPair> {
    let rho = concat_ap(alg.quiver(), &[&f.rho, &g.rho])?;
    let gamma = alg.product(&f.gamma, &g.gamma)?;
    Some(ParallelPair::new(rho, gamma))
}

pub fn cup(alg: &StringAlgebra, f: &Cochain, g: &Cochain) -> Cochain {
    assert_eq!(f.field(), g.field(), "cochains over different fields");
    let mut out = Cochain::zero(f.degree() + g.degree(), f.field());
    for (p, x) in f.terms() {
        for (r, y) in g.terms() {
            if let Some(pr) = cup_pairs(alg, p, r) {
                out.add_term(pr, x * y);
            }
        }
    }
    out
}

/// `(ρ, γ) ∘ᵢ (ρ′, γ′)` for `1 ≤ i ≤ |ρ|`, as a list of resulting pairs
/// (each with coefficient one).
///
/// In degree one, `f` acts on `γ′` as a derivation, so every occurrence of
/// the arrow `ρ` in `γ′` contributes.
pub fn circ_i_pairs(alg: &StringAlgebra, f: &ParallelPair, g: &ParallelPair, i: usize) -> Vec<ParallelPair> {
    let q = alg.quiver();
    let n = f.degree();
    assert!((1..=n).contains(&i), "slot {i} out of range for degree {n}");
    let gp = &g.gamma;
    if gp.is_trivial() {
        return Vec::new();
    }
    if n == 1 {
        let alpha = f.rho.arrows()[0];
        let mut out = Vec::new();
        for (j, &b) in gp.arrows().iter().enumerate() {
            if b != alpha {
                continue;
            }
            let before = gp.subpath(q, 0, j);
            let after = gp.subpath(q, j + 1, gp.len());
            let gamma = alg.product(&before, &f.gamma).and_then(|x| alg.product(&x, &after));
            if let Some(gamma) = gamma {
                out.push(ParallelPair::new(g.rho.clone(), gamma));
            }
        }
        return out;
    }
    let rho = &f.rho;
    let alphas = rho.arrows();
    if gp.len() == 1 {
        if alphas[i - 1] != gp.arrows()[0] {
            return Vec::new();
        }
        let rho1 = rho.subpath(q, 0, i - 1);
        let rho2 = rho.subpath(q, i, n);
        return concat_ap(q, &[&rho1, &g.rho, &rho2])
            .map(|r| vec![ParallelPair::new(r, f.gamma.clone())])
            .unwrap_or_default();
    }
    let mut out = Vec::new();
    if i == 1 && alphas[0] == gp.last().unwrap() {
        let mu = gp.subpath(q, 0, gp.len() - 1);
        let tail = rho.subpath(q, 1, n);
        if let (Some(r), Some(g2)) = (concat_ap(q, &[&g.rho, &tail]), alg.product(&mu, &f.gamma)) {
            out.push(ParallelPair::new(r, g2));
        }
    }
    if i == n && alphas[n - 1] == gp.first().unwrap() {
        let mu = gp.subpath(q, 1, gp.len());
        let head = rho.subpath(q, 0, n - 1);
        if let (Some(r), Some(g2)) = (concat_ap(q, &[&head, &g.rho]), alg.product(&f.gamma, &mu)) {
            out.push(ParallelPair::new(r, g2));
        }
    }
    out
}

/// `f ∘ᵢ g`, bilinearly; zero when `f` has degree 0.
pub fn circ_i(alg: &StringAlgebra, f: &Cochain, g: &Cochain, i: usize) -> Cochain {
    assert_eq!(f.field(), g.field(), "cochains over different fields");
    let n = f.degree();
    let m = g.degree();
    let mut out = Cochain::zero((n + m).saturating_sub(1), f.field());
    if n == 0 {
        return out;
    }
    for (p, x) in f.terms() {
        for (r, y) in g.terms() {
            let xy = x * y;
            for pr in circ_i_pairs(alg, p, r, i) {
                out.add_term(pr, xy.clone());
            }
        }
    }
    out
}

fn parity_sign(field: Field, a: usize, b: usize) -> Scalar {
    // (−1)^{(a−1)(b−1)} with a, b ≥ 0
    field.sign(((a + 1) % 2) * ((b + 1) % 2))
}

/// `f ∘ g = Σᵢ (−1)^{(i−1)(m−1)} f ∘ᵢ g`.
pub fn circ(alg: &StringAlgebra, f: &Cochain, g: &Cochain) -> Cochain {
    let n = f.degree();
    let m = g.degree();
    let mut out = Cochain::zero((n + m).saturating_sub(1), f.field());
    for i in 1..=n {
        out = &out + &circ_i(alg, f, g, i).scale(&parity_sign(f.field(), i, m));
    }
    out
}

/// `[f, g] = f ∘ g − (−1)^{(n−1)(m−1)} g ∘ f`.
pub fn bracket(alg: &StringAlgebra, f: &Cochain, g: &Cochain) -> Cochain {
    let sign = parity_sign(f.field(), f.degree(), g.degree());
    let fg = circ(alg, f, g);
    let gf = circ(alg, g, f);
    if f.degree() + g.degree() == 0 {
        return Cochain::zero(0, f.field());
    }
    &fg - &gf.scale(&sign)
}

fn require_gentle_pair(q: &BoundQuiver, omega: &ParallelPair) -> Result<(), GerstenhaberError> {
    let ok =
        omega.gamma.is_trivial() && omega.degree() > 0 && classify_cyclic(q, omega).map(|c| c.gentle).unwrap_or(false);
    if ok {
        Ok(())
    } else {
        Err(GerstenhaberError::NotGentle(omega.display(q)))
    }
}

/// `ωˢ = ((α₁⋯αₙ)ˢ, e)`.
pub fn omega_power(q: &BoundQuiver, omega: &ParallelPair, s: usize) -> Result<ParallelPair, GerstenhaberError> {
    require_gentle_pair(q, omega)?;
    assert!(s >= 1, "powers start at 1");
    let copies: Vec<&Path> = std::iter::repeat_n(&omega.rho, s).collect();
    let rho = concat_ap(q, &copies).expect("completeness supplies the junction relation");
    Ok(ParallelPair::new(rho, omega.gamma.clone()))
}

/// `ψ(ωˢ) = ((α₁⋯αₙ)ˢα₁, α₁)`, a cocycle of degree `sn + 1`.
pub fn psi(alg: &StringAlgebra, field: Field, omega: &ParallelPair, s: usize) -> Result<Cochain, GerstenhaberError> {
    let q = alg.quiver();
    let power = omega_power(q, omega, s)?;
    let a1 = Path::arrow(q, omega.rho.arrows()[0]);
    let rho = concat_ap(q, &[&power.rho, &a1]).expect("completeness supplies the junction relation");
    let c = Cochain::from_pair(ParallelPair::new(rho, a1), field);
    debug_assert!(crate::complex::apply_differential(alg, &c).is_zero(), "psi must be a cocycle");
    Ok(c)
}

/// `N(ωˢ) = Σ tⁱ(ωˢ)` over the orbit. It is a cocycle when `sn` is even or
/// the characteristic is 2.
pub fn norm_cochain(
    alg: &StringAlgebra,
    field: Field,
    omega: &ParallelPair,
    s: usize,
) -> Result<Cochain, GerstenhaberError> {
    let q = alg.quiver();
    let power = omega_power(q, omega, s)?;
    let terms = orbit(q, &power).expect("gentle pairs are complete");
    let c = Cochain::from_terms(power.degree(), field, terms.into_iter().map(|p| (p, field.one())));
    if power.degree() % 2 == 0 || field.characteristic() == 2 {
        debug_assert!(crate::complex::apply_differential(alg, &c).is_zero(), "norm must be a cocycle");
    }
    Ok(c)
}

/// A cochain together with its canonical class representative when it is
/// a cocycle.
#[derive(Clone, Debug)]
pub struct GradedElement {
    pub degree: usize,
    pub cochain: Cochain,
    pub class_rep: Option<Cochain>,
}

impl GradedElement {
    pub fn new(cx: &CochainComplex, cochain: Cochain) -> GradedElement {
        let class_rep = cx.class_of(&cochain).ok();
        GradedElement { degree: cochain.degree(), cochain, class_rep }
    }

    pub fn is_cocycle(&self) -> bool {
        self.class_rep.is_some()
    }
}

fn require_cocycle(cx: &CochainComplex, c: &Cochain) -> Result<(), ComplexError> {
    if cx.is_cocycle(c) {
        Ok(())
    } else {
        Err(ComplexError::NotACocycle(c.degree()))
    }
}

/// Class of `f ∪ g` for cocycles `f`, `g`.
pub fn cup_class(cx: &CochainComplex, f: &Cochain, g: &Cochain) -> Result<Cochain, ComplexError> {
    require_cocycle(cx, f)?;
    require_cocycle(cx, g)?;
    cx.class_of(&cup(cx.algebra(), f, g))
}

/// Class of `[f, g]` for cocycles `f`, `g`.
pub fn bracket_class(cx: &CochainComplex, f: &Cochain, g: &Cochain) -> Result<Cochain, ComplexError> {
    require_cocycle(cx, f)?;
    require_cocycle(cx, g)?;
    cx.class_of(&bracket(cx.algebra(), f, g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    Cup,
    Bracket,
}

impl WitnessKind {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessKind::Cup => "cup",
            WitnessKind::Bracket => "bracket",
        }
    }
}

/// A verified non-triviality witness.
///
/// `s1`, `s2` are the powers of `ω` actually used. For a cup witness the
/// inputs are `N(ω^{s1})`, `N(ω^{s2})` and the expected product is
/// `N(ω^{s1+s2})`; for a bracket witness they are `ψ(ω^{s1})`, `ψ(ω^{s2})`
/// and the expected bracket is `coefficient · ψ(ω^{s1+s2})`.
#[derive(Clone, Debug)]
pub struct Witness {
    pub kind: WitnessKind,
    pub omega: ParallelPair,
    pub n: usize,
    pub k: usize,
    pub s1: usize,
    pub s2: usize,
    pub left: Cochain,
    pub right: Cochain,
    pub product: Cochain,
    pub expected: Cochain,
    pub coefficient: Scalar,
    pub inputs_are_cocycles: bool,
    pub identity_holds: bool,
    pub class_nonzero: bool,
}

impl Witness {
    pub fn verified(&self) -> bool {
        self.inputs_are_cocycles && self.identity_holds && self.class_nonzero
    }

    pub fn product_degree(&self) -> usize {
        self.product.degree()
    }

    /// Recomputes the witness from `ω`, `s1`, `s2` and compares.
    pub fn recheck(&self, cx: &CochainComplex) -> bool {
        let again = match self.kind {
            WitnessKind::Cup => cup_check(cx, &self.omega, self.s1, self.s2),
            WitnessKind::Bracket => bracket_check(cx, &self.omega, self.s1, self.s2),
        };
        match again {
            Ok(w) => {
                w.product == self.product
                    && w.expected == self.expected
                    && w.identity_holds == self.identity_holds
                    && w.class_nonzero == self.class_nonzero
                    && w.inputs_are_cocycles == self.inputs_are_cocycles
            }
            Err(_) => false,
        }
    }
}

/// Evaluates `N(ω^{s1}) ∪ N(ω^{s2}) = N(ω^{s1+s2})` and the class of the
/// product.
pub fn cup_check(
    cx: &CochainComplex,
    omega: &ParallelPair,
    s1: usize,
    s2: usize,
) -> Result<Witness, GerstenhaberError> {
    let alg = cx.algebra();
    let field = cx.field();
    let q = alg.quiver();
    let left = norm_cochain(alg, field, omega, s1)?;
    let right = norm_cochain(alg, field, omega, s2)?;
    let expected = norm_cochain(alg, field, omega, s1 + s2)?;
    let product = cup(alg, &left, &right);
    let inputs_are_cocycles = cx.is_cocycle(&left) && cx.is_cocycle(&right);
    let class_nonzero = cx.is_cocycle(&product) && !cx.is_zero_class(&product)?;
    Ok(Witness {
        kind: WitnessKind::Cup,
        omega: omega.clone(),
        n: omega.degree(),
        k: orbit(q, omega).expect("gentle").len(),
        s1,
        s2,
        identity_holds: product == expected,
        left,
        right,
        product,
        expected,
        coefficient: field.one(),
        inputs_are_cocycles,
        class_nonzero,
    })
}

/// Evaluates `[ψ(ω^{s1}), ψ(ω^{s2})] = (n/k)(s1 − s2) ψ(ω^{s1+s2})` and the
/// class of the bracket.
pub fn bracket_check(
    cx: &CochainComplex,
    omega: &ParallelPair,
    s1: usize,
    s2: usize,
) -> Result<Witness, GerstenhaberError> {
    let alg = cx.algebra();
    let field = cx.field();
    let q = alg.quiver();
    let n = omega.degree();
    let k = orbit(q, omega).expect("gentle").len();
    let left = psi(alg, field, omega, s1)?;
    let right = psi(alg, field, omega, s2)?;
    let target = psi(alg, field, omega, s1 + s2)?;
    let diff = s1 as i64 - s2 as i64;
    let coefficient = match field.ratio(n as i64 * diff, k as i64) {
        Some(c) => c,
        None => field.zero(),
    };
    let expected = target.scale(&coefficient);
    let product = bracket(alg, &left, &right);
    let inputs_are_cocycles = cx.is_cocycle(&left) && cx.is_cocycle(&right);
    let class_nonzero = cx.is_cocycle(&product) && !cx.is_zero_class(&product)?;
    Ok(Witness {
        kind: WitnessKind::Bracket,
        omega: omega.clone(),
        n,
        k,
        s1,
        s2,
        identity_holds: product == expected,
        left,
        right,
        product,
        expected,
        coefficient,
        inputs_are_cocycles,
        class_nonzero,
    })
}

/// The first gentle pair `ω ∈ 𝒢ₙ` with `1 ≤ n ≤ max_degree`, in canonical
/// order.
pub fn first_gentle_pair(alg: &StringAlgebra, max_degree: usize) -> Option<ParallelPair> {
    (1..=max_degree).find_map(|n| {
        DegreeCensus::new(alg.quiver(), alg.basis(), n).expect("validated algebra").gentle_pairs().into_iter().next()
    })
}

/// Searches `𝒢ₙ`, `n ≤ max_degree`, for a cup-product witness. Uses
/// `s1 = s2 = 1` when `n` is even or the characteristic is 2, and
/// `s1 = s2 = 2` otherwise.
pub fn find_cup_witness(cx: &CochainComplex, max_degree: usize) -> Result<Option<Witness>, GerstenhaberError> {
    let Some(omega) = first_gentle_pair(cx.algebra(), max_degree) else {
        return Ok(None);
    };
    let s = if omega.degree() % 2 == 0 || cx.field().characteristic() == 2 { 1 } else { 2 };
    cup_check(cx, &omega, s, s).map(Some)
}

/// Searches `𝒢ₙ`, `n ≤ max_degree`, for a bracket witness. Requires
/// characteristic 0 and a gentle algebra. Uses powers `1, 2` when `n` is
/// even and `2, 4` when `n` is odd.
pub fn find_bracket_witness(cx: &CochainComplex, max_degree: usize) -> Result<Option<Witness>, GerstenhaberError> {
    let p = cx.field().characteristic();
    if p != 0 {
        return Err(GerstenhaberError::CharacteristicNotZero(p));
    }
    if !cx.algebra().is_gentle() {
        return Err(GerstenhaberError::AlgebraNotGentle);
    }
    let Some(omega) = first_gentle_pair(cx.algebra(), max_degree) else {
        return Ok(None);
    };
    let (s1, s2) = if omega.degree() % 2 == 0 { (1, 2) } else { (2, 4) };
    bracket_check(cx, &omega, s1, s2).map(Some)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::complex::apply_differential;

    fn loop_algebra() -> Arc<StringAlgebra> {
        Arc::new(
            StringAlgebra::new(
                BoundQuiver::builder().vertex("v").arrow("a", "v", "v").relation("a", "a").build().unwrap(),
            )
            .unwrap(),
        )
    }

    fn two_cycle() -> Arc<StringAlgebra> {
        Arc::new(
            StringAlgebra::new(
                BoundQuiver::builder()
                    .vertex("1")
                    .vertex("2")
                    .arrow("a", "1", "2")
                    .arrow("b", "2", "1")
                    .relation("a", "b")
                    .relation("b", "a")
                    .build()
                    .unwrap(),
            )
            .unwrap(),
        )
    }

    fn a3() -> Arc<StringAlgebra> {
        Arc::new(
            StringAlgebra::new(
                BoundQuiver::builder()
                    .vertex("1")
                    .vertex("2")
                    .vertex("3")
                    .arrow("a", "1", "2")
                    .arrow("b", "2", "3")
                    .relation("a", "b")
                    .build()
                    .unwrap(),
            )
            .unwrap(),
        )
    }

    fn pair(a: &StringAlgebra, rho: &str, gamma: &str) -> ParallelPair {
        let q = a.quiver();
        ParallelPair::new(q.parse_path(rho).unwrap(), q.parse_path(gamma).unwrap())
    }

    fn c(a: &StringAlgebra, rho: &str, gamma: &str) -> Cochain {
        Cochain::from_pair(pair(a, rho, gamma), Field::Rational)
    }

    #[test]
    fn cup_examples() {
        let a = two_cycle();
        assert_eq!(cup_pairs(&a, &pair(&a, "ab", "e_1"), &pair(&a, "ab", "e_1")), Some(pair(&a, "abab", "e_1")));
        assert_eq!(cup_pairs(&a, &pair(&a, "ab", "e_1"), &pair(&a, "ba", "e_2")), None);
        let omega = pair(&a, "ab", "e_1");
        let n1 = norm_cochain(&a, Field::Rational, &omega, 1).unwrap();
        let n2 = norm_cochain(&a, Field::Rational, &omega, 2).unwrap();
        assert_eq!(cup(&a, &n1, &n1), n2);
    }

    #[test]
    fn circ_examples() {
        let a = two_cycle();
        let f = c(&a, "aba", "a");
        assert!(circ_i(&a, &f, &c(&a, "ab", "e_1"), 1).is_zero());
        assert_eq!(circ_i(&a, &f, &c(&a, "bab", "b"), 2), c(&a, "ababa", "a"));
        let omega = pair(&a, "ab", "e_1");
        let p1 = psi(&a, Field::Rational, &omega, 1).unwrap();
        let p2 = psi(&a, Field::Rational, &omega, 2).unwrap();
        assert_eq!(circ_i(&a, &p1, &p1, 1), p2);
        assert!(circ_i(&a, &p1, &p1, 2).is_zero());
        assert_eq!(circ_i(&a, &p1, &p1, 3), p2);
    }

    #[test]
    fn degree_one_acts_as_derivation() {
        let q = BoundQuiver::builder()
            .vertex("1")
            .vertex("2")
            .vertex("3")
            .vertex("4")
            .arrow("x", "1", "2")
            .arrow("y", "2", "3")
            .arrow("z", "3", "4")
            .arrow("w", "1", "4")
            .build()
            .unwrap();
        let a = StringAlgebra::new(q).unwrap();
        let f = c(&a, "y", "y");
        let g = c(&a, "w", "xyz");
        assert_eq!(circ(&a, &f, &g), g);
    }

    #[test]
    fn psi_and_powers() {
        let a = loop_algebra();
        let omega = pair(&a, "aa", "e_v");
        assert_eq!(psi(&a, Field::Rational, &omega, 1).unwrap(), c(&a, "aaa", "a"));
        let a = two_cycle();
        let omega = pair(&a, "ab", "e_1");
        assert_eq!(
            norm_cochain(&a, Field::Rational, &omega, 2).unwrap(),
            &c(&a, "abab", "e_1") + &c(&a, "baba", "e_2")
        );
        let w3 = omega_power(a.quiver(), &omega, 3).unwrap();
        assert_eq!(w3, pair(&a, "ababab", "e_1"));
        assert_eq!(orbit(a.quiver(), &w3).unwrap().len(), 2);
        assert!(omega_power(a.quiver(), &pair(&a, "a", "a"), 1).is_err());
    }

    #[test]
    fn bracket_examples() {
        let a = two_cycle();
        let omega = pair(&a, "ab", "e_1");
        let p1 = psi(&a, Field::Rational, &omega, 1).unwrap();
        let p2 = psi(&a, Field::Rational, &omega, 2).unwrap();
        let p3 = psi(&a, Field::Rational, &omega, 3).unwrap();
        assert!(bracket(&a, &p1, &p1).is_zero());
        assert_eq!(bracket(&a, &p1, &p2), p3.neg());
        let f = c(&a, "aba", "a");
        let g = c(&a, "bab", "b");
        let lhs = bracket(&a, &f, &g);
        let rhs = bracket(&a, &g, &f).scale(&Field::Rational.sign(1 + (f.degree() - 1) * (g.degree() - 1)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn class_level_products() {
        let a = two_cycle();
        let cx = CochainComplex::new(Arc::clone(&a), Field::Rational);
        let omega = pair(&a, "ab", "e_1");
        let n1 = norm_cochain(&a, Field::Rational, &omega, 1).unwrap();
        assert!(!cup_class(&cx, &n1, &n1).unwrap().is_zero());
        let p1 = psi(&a, Field::Rational, &omega, 1).unwrap();
        assert!(bracket_class(&cx, &p1, &p1).unwrap().is_zero());
        let bad = c(&a, "ab", "e_1");
        assert!(matches!(cup_class(&cx, &bad, &n1), Err(ComplexError::NotACocycle(2))));

        let a = a3();
        let cx = CochainComplex::new(Arc::clone(&a), Field::Rational);
        for n in 1..3 {
            for m in 1..3 {
                for f in cx.cocycles(n).rows() {
                    for g in cx.cocycles(m).rows() {
                        let f = cx.to_cochain(n, f);
                        let g = cx.to_cochain(m, g);
                        assert!(cup_class(&cx, &f, &g).unwrap().is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn witnesses() {
        let a = two_cycle();
        let cx = CochainComplex::new(Arc::clone(&a), Field::Rational);
        let w = find_cup_witness(&cx, 4).unwrap().unwrap();
        assert_eq!(w.omega, pair(&a, "ab", "e_1"));
        assert_eq!((w.n, w.k, w.s1, w.s2), (2, 2, 1, 1));
        assert!(w.verified());
        assert!(w.recheck(&cx));

        let w = find_bracket_witness(&cx, 4).unwrap().unwrap();
        assert_eq!((w.s1, w.s2), (1, 2));
        assert_eq!(w.coefficient, Field::Rational.int(-1));
        assert_eq!(w.product_degree(), 7);
        assert!(w.verified());

        let cx2 = CochainComplex::new(Arc::clone(&a), Field::Prime(3));
        assert_eq!(find_bracket_witness(&cx2, 4).unwrap_err(), GerstenhaberError::CharacteristicNotZero(3));

        let cx = CochainComplex::new(a3(), Field::Rational);
        assert!(find_cup_witness(&cx, 5).unwrap().is_none());
        assert!(find_bracket_witness(&cx, 5).unwrap().is_none());
    }

    #[test]
    fn loop_witnesses() {
        let a = loop_algebra();
        for field in [Field::Rational, Field::Prime(2), Field::Prime(3)] {
            let cx = CochainComplex::new(Arc::clone(&a), field);
            let w = find_cup_witness(&cx, 3).unwrap().unwrap();
            assert!(w.verified(), "{field:?}");
        }
        let cx = CochainComplex::new(Arc::clone(&a), Field::Rational);
        let w = find_bracket_witness(&cx, 3).unwrap().unwrap();
        assert_eq!((w.n, w.s1, w.s2), (1, 2, 4));
        assert!(w.verified());
    }

    #[test]
    fn derivation_identity_on_basis_pairs() {
        let a = two_cycle();
        for field in [Field::Rational, Field::Prime(2)] {
            for n in 0..3 {
                for m in 0..3 {
                    for p in a.cochain_pairs(n) {
                        for r in a.cochain_pairs(m) {
                            let f = Cochain::from_pair(p.clone(), field);
                            let g = Cochain::from_pair(r.clone(), field);
                            let lhs = apply_differential(&a, &cup(&a, &f, &g));
                            let rhs = &cup(&a, &apply_differential(&a, &f), &g)
                                + &cup(&a, &f, &apply_differential(&a, &g)).scale(&field.sign(n));
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }
}

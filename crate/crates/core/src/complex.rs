//! The Hochschild cochain complex on parallel-pair bases, used as the
//! brute-force oracle for cohomology dimensions and classes.
//!
//! The degree-`n` cochain space `Hom_{E-E}(kAP_n, A)` is identified with
//! `k(AP_n // 𝒫)`: the pair `(ρ, γ)` is the map sending `ρ` to `γ` and every
//! other element of `AP_n` to zero.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::ops::{Add, Sub};
use std::sync::{Arc, OnceLock};

use parking_lot::Mutex;
use thiserror::Error;

use crate::algebra::StringAlgebra;
use crate::combinatorics::ParallelPair;
use crate::linalg::{self, add_entry, Field, Scalar, SparseMatrix, SparseVec, SubspaceBasis};
use crate::quiver::{BoundQuiver, Path};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("cochain of degree {0} is not a cocycle")]
    NotACocycle(usize),
    #[error("cochain has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
}

/// A finite linear combination of parallel pairs of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    field: Field,
    terms: BTreeMap<ParallelPair, Scalar>,
}

impl Cochain {
    pub fn zero(degree: usize, field: Field) -> Cochain {
        Cochain { degree, field, terms: BTreeMap::new() }
    }

    pub fn from_pair(pair: ParallelPair, field: Field) -> Cochain {
        let mut c = Cochain::zero(pair.degree(), field);
        c.add_term(pair, field.one());
        c
    }

    pub fn from_terms(degree: usize, field: Field, terms: impl IntoIterator<Item = (ParallelPair, Scalar)>) -> Cochain {
        let mut c = Cochain::zero(degree, field);
        for (p, x) in terms {
            c.add_term(p, x);
        }
        c
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ParallelPair, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, pair: &ParallelPair) -> Scalar {
        self.terms.get(pair).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, pair: ParallelPair, coeff: Scalar) {
        assert_eq!(pair.degree(), self.degree, "pair degree does not match cochain degree");
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&pair) {
            Some(cur) => {
                let next = &*cur + &coeff;
                if next.is_zero() {
                    self.terms.remove(&pair);
                } else {
                    *cur = next;
                }
            }
            None => {
                self.terms.insert(pair, coeff);
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        Cochain::from_terms(self.degree, self.field, self.terms.iter().map(|(p, x)| (p.clone(), c * x)))
    }

    pub fn neg(&self) -> Cochain {
        self.scale(&self.field.int(-1))
    }

    pub fn display(&self, q: &BoundQuiver) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (p, x)) in self.terms.iter().enumerate() {
            let neg = self.field == Field::Rational && (-x).to_string().len() < x.to_string().len();
            let (sign, mag) = if neg { ("-", -x) } else { ("+", x.clone()) };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                let _ = write!(out, " {sign} ");
            }
            if !mag.is_one() {
                let _ = write!(out, "{mag}");
            }
            out.push_str(&p.display(q));
        }
        out
    }
}

impl Add for &Cochain {
    type Output = Cochain;
    fn add(self, rhs: &Cochain) -> Cochain {
        assert_eq!(self.degree, rhs.degree, "degree mismatch");
        let mut out = self.clone();
        for (p, x) in &rhs.terms {
            out.add_term(p.clone(), x.clone());
        }
        out
    }
}

impl Sub for &Cochain {
    type Output = Cochain;
    fn sub(self, rhs: &Cochain) -> Cochain {
        let mut out = self.clone();
        for (p, x) in &rhs.terms {
            out.add_term(p.clone(), -x);
        }
        out
    }
}

/// `F_{n+1}` applied to a single basis pair of degree `n`:
/// `F(f)(α₁⋯α_{n+1}) = α₁ f(α₂⋯α_{n+1}) + (−1)^{n+1} f(α₁⋯αₙ) α_{n+1}`,
/// with products taken in `A`.
pub fn differential_of_pair(alg: &StringAlgebra, field: Field, pair: &ParallelPair) -> Cochain {
    let q = alg.quiver();
    let n = pair.degree();
    let mut out = Cochain::zero(n + 1, field);
    let (rho, gamma) = (&pair.rho, &pair.gamma);
    for &beta in q.arrows_into(rho.source()) {
        if rho.first().is_some_and(|a| !q.is_relation(beta, a)) {
            continue;
        }
        let b = Path::arrow(q, beta);
        if let Some(g) = alg.product(&b, gamma) {
            out.add_term(ParallelPair::new(b.compose(rho).unwrap(), g), field.one());
        }
    }
    let sign = field.sign(n + 1);
    for &beta in q.arrows_from(rho.target()) {
        if rho.last().is_some_and(|a| !q.is_relation(a, beta)) {
            continue;
        }
        let b = Path::arrow(q, beta);
        if let Some(g) = alg.product(gamma, &b) {
            out.add_term(ParallelPair::new(rho.compose(&b).unwrap(), g), sign.clone());
        }
    }
    out
}

/// `F_{n+1}` applied to a cochain of degree `n`.
pub fn apply_differential(alg: &StringAlgebra, c: &Cochain) -> Cochain {
    let mut out = Cochain::zero(c.degree() + 1, c.field());
    for (p, x) in c.terms() {
        for (r, y) in differential_of_pair(alg, c.field(), p).terms() {
            out.add_term(r.clone(), x * y);
        }
    }
    out
}

/// An ordered cochain basis `(AP_n // 𝒫)` with its index.
#[derive(Clone, Debug)]
pub struct CochainBasis {
    pub degree: usize,
    pairs: Vec<ParallelPair>,
    index: HashMap<ParallelPair, usize>,
}

impl CochainBasis {
    pub fn new(degree: usize, pairs: Vec<ParallelPair>) -> CochainBasis {
        let index = pairs.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        CochainBasis { degree, pairs, index }
    }

    pub fn pairs(&self) -> &[ParallelPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn index_of(&self, p: &ParallelPair) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn to_vector(&self, c: &Cochain) -> SparseVec {
        let mut v = SparseVec::new();
        for (p, x) in c.terms() {
            let i = self.index_of(p).expect("pair belongs to the basis");
            add_entry(&mut v, i, x.clone());
        }
        v
    }

    pub fn to_cochain(&self, v: &SparseVec, field: Field) -> Cochain {
        Cochain::from_terms(self.degree, field, v.iter().map(|(&i, x)| (self.pairs[i].clone(), x.clone())))
    }
}

#[derive(Default)]
struct DegreeSlot {
    basis: OnceLock<Arc<CochainBasis>>,
    /// `F_{n+1}` out of this degree.
    outgoing: OnceLock<Arc<SparseMatrix>>,
    outgoing_rank: OnceLock<usize>,
    cocycles: OnceLock<Arc<SubspaceBasis>>,
    coboundaries: OnceLock<Arc<SubspaceBasis>>,
    cohomology: OnceLock<Arc<SubspaceBasis>>,
}

/// Summary of one degree of the complex.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DegreeData {
    pub degree: usize,
    pub cochains: usize,
    pub cocycles: usize,
    pub coboundaries: usize,
    pub hh_dim: usize,
}

/// The cochain complex of a string algebra over a fixed field.
///
/// Degrees are built on demand and cached; each cached item is computed
/// once even under concurrent access.
pub struct CochainComplex {
    alg: Arc<StringAlgebra>,
    field: Field,
    slots: Mutex<BTreeMap<usize, Arc<DegreeSlot>>>,
}

impl CochainComplex {
    pub fn new(alg: Arc<StringAlgebra>, field: Field) -> CochainComplex {
        CochainComplex { alg, field, slots: Mutex::new(BTreeMap::new()) }
    }

    pub fn algebra(&self) -> &StringAlgebra {
        &self.alg
    }

    pub fn algebra_arc(&self) -> Arc<StringAlgebra> {
        Arc::clone(&self.alg)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    fn slot(&self, n: usize) -> Arc<DegreeSlot> {
        Arc::clone(self.slots.lock().entry(n).or_default())
    }

    pub fn basis(&self, n: usize) -> Arc<CochainBasis> {
        let slot = self.slot(n);
        Arc::clone(slot.basis.get_or_init(|| Arc::new(CochainBasis::new(n, self.alg.cochain_pairs(n)))))
    }

    /// Matrix of `F_n : C^{n-1} → C^n` for `n ≥ 1`.
    pub fn differential_matrix(&self, n: usize) -> Arc<SparseMatrix> {
        assert!(n >= 1, "F_n is defined for n >= 1");
        let slot = self.slot(n - 1);
        Arc::clone(slot.outgoing.get_or_init(|| {
            let src = self.basis(n - 1);
            let dst = self.basis(n);
            let columns: Vec<SparseVec> =
                src.pairs().iter().map(|p| dst.to_vector(&differential_of_pair(&self.alg, self.field, p))).collect();
            Arc::new(SparseMatrix::from_columns(dst.len(), &columns))
        }))
    }

    /// Rank of `F_n`, with `F_0 = 0`.
    pub fn differential_rank(&self, n: usize) -> usize {
        if n == 0 {
            return 0;
        }
        let slot = self.slot(n - 1);
        *slot.outgoing_rank.get_or_init(|| linalg::rank(&self.differential_matrix(n), self.field))
    }

    /// `dim HHⁿ = dim Ker F_{n+1} − rank F_n`.
    pub fn hh_dim(&self, n: usize) -> usize {
        let kernel = self.basis(n).len() - self.differential_rank(n + 1);
        kernel - self.differential_rank(n)
    }

    pub fn cocycles(&self, n: usize) -> Arc<SubspaceBasis> {
        let slot = self.slot(n);
        Arc::clone(
            slot.cocycles.get_or_init(|| Arc::new(linalg::kernel_basis(&self.differential_matrix(n + 1), self.field))),
        )
    }

    pub fn coboundaries(&self, n: usize) -> Arc<SubspaceBasis> {
        let slot = self.slot(n);
        Arc::clone(slot.coboundaries.get_or_init(|| {
            let b = if n == 0 {
                SubspaceBasis::empty(self.basis(0).len())
            } else {
                linalg::image_basis(&self.differential_matrix(n))
            };
            assert!(b.is_subspace_of(&self.cocycles(n)), "coboundaries must be cocycles");
            Arc::new(b)
        }))
    }

    pub fn degree_data(&self, n: usize) -> DegreeData {
        let cocycles = self.basis(n).len() - self.differential_rank(n + 1);
        let coboundaries = self.differential_rank(n);
        DegreeData { degree: n, cochains: self.basis(n).len(), cocycles, coboundaries, hh_dim: cocycles - coboundaries }
    }

    pub fn to_vector(&self, c: &Cochain) -> SparseVec {
        assert_eq!(c.field(), self.field, "cochain field does not match the complex");
        self.basis(c.degree()).to_vector(c)
    }

    pub fn to_cochain(&self, n: usize, v: &SparseVec) -> Cochain {
        self.basis(n).to_cochain(v, self.field)
    }

    pub fn differential(&self, c: &Cochain) -> Cochain {
        apply_differential(&self.alg, c)
    }

    pub fn is_cocycle(&self, c: &Cochain) -> bool {
        self.differential(c).is_zero()
    }

    /// Canonical representative of the class of a cocycle.
    pub fn class_of(&self, c: &Cochain) -> Result<Cochain, ComplexError> {
        if !self.is_cocycle(c) {
            return Err(ComplexError::NotACocycle(c.degree()));
        }
        let v = self.coboundaries(c.degree()).reduce(&self.to_vector(c));
        Ok(self.to_cochain(c.degree(), &v))
    }

    pub fn is_zero_class(&self, c: &Cochain) -> Result<bool, ComplexError> {
        Ok(self.class_of(c)?.is_zero())
    }

    /// Whether `c` (any cochain) is a coboundary.
    pub fn is_coboundary(&self, c: &Cochain) -> bool {
        self.coboundaries(c.degree()).contains(&self.to_vector(c))
    }

    /// A basis of `HHⁿ` made of canonical representatives, in reduced
    /// echelon form.
    pub fn cohomology_basis(&self, n: usize) -> Arc<SubspaceBasis> {
        let slot = self.slot(n);
        Arc::clone(slot.cohomology.get_or_init(|| {
            let cob = self.coboundaries(n);
            let reduced: Vec<SparseVec> = self.cocycles(n).rows().iter().map(|r| cob.reduce(r)).collect();
            let basis = SubspaceBasis::span(self.basis(n).len(), reduced.iter());
            debug_assert_eq!(basis.dim(), self.hh_dim(n));
            Arc::new(basis)
        }))
    }

    pub fn cohomology_basis_cochains(&self, n: usize) -> Vec<Cochain> {
        self.cohomology_basis(n).rows().iter().map(|r| self.to_cochain(n, r)).collect()
    }

    /// Coordinates of the class of a cocycle in [`Self::cohomology_basis`].
    pub fn class_coordinates(&self, c: &Cochain) -> Result<Vec<Scalar>, ComplexError> {
        let rep = self.class_of(c)?;
        let v = self.to_vector(&rep);
        Ok(self.cohomology_basis(c.degree()).coordinates(&v, self.field))
    }
}

/// The block maps of `F_{n+1}` with respect to the splittings
/// `C^n = k(AP_n//Q₀) ⊕ k(AP_n//𝒫₁)` and
/// `C^{n+1} = k(AP_{n+1}//Q₀) ⊕ k(AP_{n+1}//Q₁) ⊕ k(AP_{n+1}//𝒫₂)`.
#[derive(Clone, Debug)]
pub struct BlockMaps {
    pub degree: usize,
    /// `F⁰ : k(AP_n//Q₀) → k(AP_{n+1}//Q₁)`
    pub f0: SparseMatrix,
    pub f0_domain: Vec<ParallelPair>,
    pub f0_codomain: Vec<ParallelPair>,
    /// `F¹ : k(AP_n//𝒫₁) → k(AP_{n+1}//𝒫₂)`
    pub f1: SparseMatrix,
    pub f1_domain: Vec<ParallelPair>,
    pub f1_codomain: Vec<ParallelPair>,
}

/// Builds `F⁰_{n+1}` and `F¹_{n+1}` from their explicit sum formulas.
pub fn block_components(alg: &StringAlgebra, field: Field, n: usize) -> BlockMaps {
    let q = alg.quiver();
    let src = alg.cochain_pairs(n);
    let dst = alg.cochain_pairs(n + 1);
    let f0_domain: Vec<_> = src.iter().filter(|p| p.gamma.is_trivial()).cloned().collect();
    let f1_domain: Vec<_> = src.iter().filter(|p| !p.gamma.is_trivial()).cloned().collect();
    let f0_codomain: Vec<_> = dst.iter().filter(|p| p.gamma.len() == 1).cloned().collect();
    let f1_codomain: Vec<_> = dst.iter().filter(|p| p.gamma.len() >= 2).cloned().collect();
    let idx0: HashMap<&ParallelPair, usize> = f0_codomain.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let idx1: HashMap<&ParallelPair, usize> = f1_codomain.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut f0 = SparseMatrix::zero(f0_codomain.len(), f0_domain.len());
    let mut f1 = SparseMatrix::zero(f1_codomain.len(), f1_domain.len());
    let sign = field.sign(n + 1);

    for (j, p) in f0_domain.iter().enumerate() {
        let r = p.gamma.source();
        if n == 0 {
            // F⁰₁(e_r, e_r) = Σ_{t(β)=r} (β, β) − Σ_{s(β)=r} (β, β)
            for &beta in q.arrows_into(r) {
                let b = Path::arrow(q, beta);
                f0.add_to(idx0[&ParallelPair::new(b.clone(), b)], j, field.one());
            }
            for &beta in q.arrows_from(r) {
                let b = Path::arrow(q, beta);
                f0.add_to(idx0[&ParallelPair::new(b.clone(), b)], j, field.int(-1));
            }
            continue;
        }
        let (first, last) = (p.rho.first().unwrap(), p.rho.last().unwrap());
        for a in q.arrows() {
            if a.target == r && q.is_relation(a.id, first) {
                let b = Path::arrow(q, a.id);
                let key = ParallelPair::new(b.compose(&p.rho).unwrap(), b);
                f0.add_to(idx0[&key], j, field.one());
            }
            if a.source == r && q.is_relation(last, a.id) {
                let b = Path::arrow(q, a.id);
                let key = ParallelPair::new(p.rho.compose(&b).unwrap(), b);
                f0.add_to(idx0[&key], j, sign.clone());
            }
        }
    }

    for (j, p) in f1_domain.iter().enumerate() {
        let (g_first, g_last) = (p.gamma.first().unwrap(), p.gamma.last().unwrap());
        for a in q.arrows() {
            let b = Path::arrow(q, a.id);
            let left_ok = match p.rho.first() {
                Some(first) => q.is_relation(a.id, first),
                None => a.target == p.rho.source(),
            };
            if left_ok && !q.is_relation(a.id, g_first) {
                let key = ParallelPair::new(b.compose(&p.rho).unwrap(), b.compose(&p.gamma).unwrap());
                f1.add_to(idx1[&key], j, field.one());
            }
            let right_ok = match p.rho.last() {
                Some(last) => q.is_relation(last, a.id),
                None => a.source == p.rho.target(),
            };
            if right_ok && !q.is_relation(g_last, a.id) {
                let key = ParallelPair::new(p.rho.compose(&b).unwrap(), p.gamma.compose(&b).unwrap());
                f1.add_to(idx1[&key], j, sign.clone());
            }
        }
    }

    BlockMaps { degree: n, f0, f0_domain, f0_codomain, f1, f1_domain, f1_codomain }
}

/// Reassembles the full `F_{n+1}` matrix in canonical basis order from the
/// two blocks (the block into `(AP_{n+1}//Q₀)` is zero).
pub fn assemble_blocks(blocks: &BlockMaps, src: &CochainBasis, dst: &CochainBasis) -> SparseMatrix {
    let mut m = SparseMatrix::zero(dst.len(), src.len());
    let place = |m: &mut SparseMatrix, block: &SparseMatrix, rows: &[ParallelPair], cols: &[ParallelPair]| {
        for (i, j, x) in block.entries() {
            let r = dst.index_of(&rows[i]).expect("codomain pair in basis");
            let c = src.index_of(&cols[j]).expect("domain pair in basis");
            m.add_to(r, c, x.clone());
        }
    };
    place(&mut m, &blocks.f0, &blocks.f0_codomain, &blocks.f0_domain);
    place(&mut m, &blocks.f1, &blocks.f1_codomain, &blocks.f1_domain);
    m
}

//! Exact scalars, sparse matrices and row reduction over ℚ and GF(p).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} is too large (must be below 2^32)")]
    TooLarge(u64),
}

/// The coefficient field: ℚ or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn from_characteristic(p: u64) -> Result<Field, FieldError> {
        if p == 0 {
            return Ok(Field::Rational);
        }
        if p >= 1 << 32 {
            return Err(FieldError::TooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Residue { value: n.rem_euclid(p as i64) as u64, modulus: p },
        }
    }

    /// `(-1)^k` as a field element.
    pub fn sign(self, k: usize) -> Scalar {
        if k.is_multiple_of(2) {
            self.one()
        } else {
            self.int(-1)
        }
    }

    /// `num / den`, or `None` when `den` vanishes in this field.
    pub fn ratio(self, num: i64, den: i64) -> Option<Scalar> {
        let d = self.int(den);
        if d.is_zero() {
            return None;
        }
        Some(&self.int(num) * &d.inv())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element in canonical form: a reduced fraction, or the least
/// nonnegative residue modulo a prime.
///
/// Arithmetic between scalars of different fields panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => {
                Scalar::Residue { value: pow_mod(*value, modulus - 2, *modulus), modulus: *modulus }
            }
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

fn mixed() -> ! {
    panic!("arithmetic between scalars of different fields")
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus: m }, Scalar::Residue { value: b, modulus: n }) if m == n => {
                Scalar::Residue { value: (a + b) % m, modulus: *m }
            }
            _ => mixed(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus: m }, Scalar::Residue { value: b, modulus: n }) if m == n => {
                Scalar::Residue { value: a * b % m, modulus: *m }
            }
            _ => mixed(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => {
                Scalar::Residue { value: (modulus - value) % modulus, modulus: *modulus }
            }
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Sparse vector: coordinate index to nonzero scalar.
pub type SparseVec = BTreeMap<usize, Scalar>;

/// `target += coeff * source`, dropping entries that cancel.
pub fn add_scaled(target: &mut SparseVec, coeff: &Scalar, source: &SparseVec) {
    if coeff.is_zero() {
        return;
    }
    for (&i, x) in source {
        let delta = coeff * x;
        add_entry(target, i, delta);
    }
}

pub(crate) fn add_entry(target: &mut SparseVec, i: usize, delta: Scalar) {
    if delta.is_zero() {
        return;
    }
    match target.get_mut(&i) {
        Some(cur) => {
            let next = &*cur + &delta;
            if next.is_zero() {
                target.remove(&i);
            } else {
                *cur = next;
            }
        }
        None => {
            target.insert(i, delta);
        }
    }
}

/// A sparse matrix with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = SparseMatrix::zero(n, n);
        for i in 0..n {
            m.add_to(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from dense integer rows.
    pub fn from_dense(field: Field, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = SparseMatrix::zero(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.add_to(i, j, field.int(x));
            }
        }
        m
    }

    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let mut m = SparseMatrix::zero(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (&i, x) in col {
                assert!(i < rows, "row index out of range");
                m.add_to(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Scalar> {
        self.entries.get(&(i, j))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(i, j), x)| (i, j, x))
    }

    pub fn add_to(&mut self, i: usize, j: usize, delta: Scalar) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        if delta.is_zero() {
            return;
        }
        match self.entries.get_mut(&(i, j)) {
            Some(cur) => {
                let next = &*cur + &delta;
                if next.is_zero() {
                    self.entries.remove(&(i, j));
                } else {
                    *cur = next;
                }
            }
            None => {
                self.entries.insert((i, j), delta);
            }
        }
    }

    pub fn row_vectors(&self) -> Vec<SparseVec> {
        let mut out = vec![SparseVec::new(); self.rows];
        for (&(i, j), x) in &self.entries {
            out[i].insert(j, x.clone());
        }
        out
    }

    pub fn column_vectors(&self) -> Vec<SparseVec> {
        let mut out = vec![SparseVec::new(); self.cols];
        for (&(i, j), x) in &self.entries {
            out[j].insert(i, x.clone());
        }
        out
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(i, j), x)| ((j, i), x.clone())).collect(),
        }
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&(i, j), x) in &self.entries {
            if let Some(y) = v.get(&j) {
                add_entry(&mut out, i, x * y);
            }
        }
        out
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let rhs_rows = rhs.row_vectors();
        let mut out = SparseMatrix::zero(self.rows, rhs.cols);
        for (&(i, k), x) in &self.entries {
            for (&j, y) in &rhs_rows[k] {
                out.add_to(i, j, x * y);
            }
        }
        out
    }

    pub fn sub(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        let mut out = self.clone();
        for (&(i, j), x) in &rhs.entries {
            out.add_to(i, j, -x);
        }
        out
    }

    /// Restriction to the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> SparseMatrix {
        let position: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut out = SparseMatrix::zero(self.rows, cols.len());
        for (&(i, j), x) in &self.entries {
            if let Some(&k) = position.get(&j) {
                out.add_to(i, k, x.clone());
            }
        }
        out
    }

    /// Restriction to the given rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> SparseMatrix {
        self.transpose().select_columns(rows).transpose()
    }
}

/// Exact rank. Over ℚ this uses fraction-free integer elimination.
pub fn rank(m: &SparseMatrix, field: Field) -> usize {
    match field {
        Field::Rational => fraction_free_rank(m),
        Field::Prime(_) => echelon_rank(m),
    }
}

/// Rank by plain Gauss elimination over the scalars themselves
/// (rationals in characteristic 0).
pub fn rank_naive(m: &SparseMatrix) -> usize {
    echelon_rank(m)
}

fn echelon_rank(m: &SparseMatrix) -> usize {
    let mut pivots: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for mut row in m.row_vectors() {
        while let Some((&lead, lead_val)) = row.iter().next() {
            match pivots.get(&lead) {
                Some(p) => {
                    let c = -lead_val;
                    add_scaled(&mut row, &c, p);
                }
                None => {
                    let inv = lead_val.inv();
                    let normalized = row.iter().map(|(&j, x)| (j, x * &inv)).collect();
                    pivots.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    pivots.len()
}

type IntRow = BTreeMap<usize, BigInt>;

fn to_integer_row(row: &SparseVec) -> IntRow {
    let mut lcm = BigInt::one();
    for x in row.values() {
        match x {
            Scalar::Rational(q) => lcm = lcm.lcm(q.denom()),
            Scalar::Residue { .. } => panic!("fraction-free elimination needs rational entries"),
        }
    }
    row.iter()
        .map(|(&j, x)| match x {
            Scalar::Rational(q) => (j, q.numer() * (&lcm / q.denom())),
            Scalar::Residue { .. } => unreachable!(),
        })
        .collect()
}

fn remove_content(row: &mut IntRow) {
    let g = row.values().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.values_mut() {
            *x = &*x / &g;
        }
    }
}

/// Rank over ℚ by fraction-free elimination: rows stay integral, each
/// update is `p·r − r_lead·pivot`, and row content is divided out.
pub fn fraction_free_rank(m: &SparseMatrix) -> usize {
    let mut pivots: BTreeMap<usize, IntRow> = BTreeMap::new();
    for row in m.row_vectors() {
        let mut row = to_integer_row(&row);
        remove_content(&mut row);
        while let Some((&lead, lead_val)) = row.iter().next() {
            let Some(p) = pivots.get(&lead) else {
                if lead_val.is_negative() {
                    for x in row.values_mut() {
                        *x = -&*x;
                    }
                }
                pivots.insert(lead, row);
                break;
            };
            let a = p[&lead].clone();
            let b = lead_val.clone();
            let g = a.gcd(&b);
            let (a, b) = (&a / &g, &b / &g);
            let mut next = IntRow::new();
            for (&j, x) in &row {
                let v = x * &a;
                if !v.is_zero() {
                    next.insert(j, v);
                }
            }
            for (&j, y) in p {
                let delta = y * &b;
                let entry = next.entry(j).or_insert_with(BigInt::zero);
                *entry -= delta;
                if entry.is_zero() {
                    next.remove(&j);
                }
            }
            remove_content(&mut next);
            row = next;
        }
    }
    pivots.len()
}

/// A subspace of `k^dim` stored as a reduced row echelon basis.
///
/// Every row has a leading 1 at its pivot and zeros at every other pivot;
/// pivots are strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn empty(ambient: usize) -> Self {
        SubspaceBasis { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    /// The span of `vectors`.
    pub fn span<'a>(ambient: usize, vectors: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut basis = SubspaceBasis::empty(ambient);
        for v in vectors {
            basis.insert(v.clone());
        }
        basis
    }

    /// Adds `v` to the span. Returns false if it was already contained.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        debug_assert!(v.keys().all(|&i| i < self.ambient));
        let mut v = self.reduce(&v);
        let Some((&lead, lead_val)) = v.iter().next() else { return false };
        let inv = lead_val.inv();
        for x in v.values_mut() {
            *x = &*x * &inv;
        }
        for row in &mut self.rows {
            if let Some(c) = row.get(&lead).cloned() {
                add_scaled(row, &-c, &v);
            }
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(at, lead);
        self.rows.insert(at, v);
        true
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical representative of `v` modulo this subspace: zero at every pivot.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = out.get(&p).cloned() {
                add_scaled(&mut out, &-c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// True when every row of `self` lies in `other`.
    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Coordinates of `v` in this basis, assuming `v` lies in the span.
    pub fn coordinates(&self, v: &SparseVec, field: Field) -> Vec<Scalar> {
        self.pivots.iter().map(|p| v.get(p).cloned().unwrap_or_else(|| field.zero())).collect()
    }
}

/// Canonical basis of the right kernel `{x : M x = 0}`.
pub fn kernel_basis(m: &SparseMatrix, field: Field) -> SubspaceBasis {
    let row_space = SubspaceBasis::span(m.cols(), m.row_vectors().iter());
    let pivot_set: std::collections::BTreeSet<usize> = row_space.pivots().iter().copied().collect();
    let mut kernel = SubspaceBasis::empty(m.cols());
    for free in (0..m.cols()).filter(|c| !pivot_set.contains(c)) {
        let mut v = SparseVec::new();
        v.insert(free, field.one());
        for (row, &p) in row_space.rows().iter().zip(row_space.pivots()) {
            if let Some(x) = row.get(&free) {
                v.insert(p, -x);
            }
        }
        kernel.insert(v);
    }
    kernel
}

/// Canonical basis of the column space of `m`.
pub fn image_basis(m: &SparseMatrix) -> SubspaceBasis {
    SubspaceBasis::span(m.rows(), m.column_vectors().iter())
}

/// Canonical representative of `v` modulo `subspace`.
pub fn reduce_mod(subspace: &SubspaceBasis, v: &SparseVec) -> SparseVec {
    subspace.reduce(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(field: Field, xs: &[i64]) -> SparseVec {
        xs.iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| (i, field.int(x)))
            .filter(|(_, s)| !s.is_zero())
            .collect()
    }

    #[test]
    fn field_construction() {
        assert_eq!(Field::from_characteristic(0), Ok(Field::Rational));
        assert_eq!(Field::from_characteristic(3), Ok(Field::Prime(3)));
        assert_eq!(Field::from_characteristic(4), Err(FieldError::NotPrime(4)));
        assert_eq!(Field::from_characteristic(1), Err(FieldError::NotPrime(1)));
    }

    #[test]
    fn residue_arithmetic() {
        let f = Field::Prime(5);
        assert_eq!(f.int(-1), f.int(4));
        assert_eq!(&f.int(3) * &f.int(3).inv(), f.one());
        assert!((&f.int(2) + &f.int(3)).is_zero());
        assert_eq!(Field::Prime(2).sign(1), Field::Prime(2).one());
        assert_eq!(f.ratio(1, 5), None);
    }

    #[test]
    fn rank_of_zero_and_identity() {
        for field in [Field::Rational, Field::Prime(2)] {
            assert_eq!(rank(&SparseMatrix::zero(3, 4), field), 0);
            assert_eq!(rank(&SparseMatrix::identity(field, 3), field), 3);
        }
    }

    #[test]
    fn rank_of_swap_minus_identity() {
        // (1 - t) for a transposition t on a 2-element orbit.
        for field in [Field::Rational, Field::Prime(2)] {
            let m = SparseMatrix::from_dense(field, &[vec![1, -1], vec![-1, 1]]);
            assert_eq!(rank(&m, field), 1);
        }
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let rows = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(rank(&SparseMatrix::from_dense(Field::Rational, &rows), Field::Rational), 2);
        let f2 = Field::Prime(2);
        assert_eq!(rank(&SparseMatrix::from_dense(f2, &rows), f2), 1);
    }

    #[test]
    fn kernel_examples() {
        let q = Field::Rational;
        assert_eq!(kernel_basis(&SparseMatrix::identity(q, 3), q).dim(), 0);

        let f2 = Field::Prime(2);
        let k = kernel_basis(&SparseMatrix::from_dense(f2, &[vec![1, 1]]), f2);
        assert_eq!(k.rows(), &[vec_of(f2, &[1, 1])]);

        let m = SparseMatrix::from_dense(q, &[vec![1, -1], vec![-1, 1]]);
        let k = kernel_basis(&m, q);
        assert_eq!(k.rows(), &[vec_of(q, &[1, 1])]);
    }

    #[test]
    fn reduce_mod_examples() {
        let q = Field::Rational;
        let s = SubspaceBasis::span(3, [vec_of(q, &[1, 2, 0]), vec_of(q, &[0, 1, 1])].iter());
        let member = vec_of(q, &[2, 7, 3]);
        assert!(reduce_mod(&s, &member).is_empty());
        let v = vec_of(q, &[0, 0, 5]);
        assert_eq!(reduce_mod(&SubspaceBasis::empty(3), &v), v);
        let r = reduce_mod(&s, &vec_of(q, &[1, 0, 0]));
        for p in s.pivots() {
            assert!(!r.contains_key(p));
        }
        assert_eq!(reduce_mod(&s, &r), r);
    }

    #[test]
    fn echelon_form_is_reduced() {
        let q = Field::Rational;
        let s = SubspaceBasis::span(
            4,
            [vec_of(q, &[0, 2, 4, 1]), vec_of(q, &[3, 1, 0, 0]), vec_of(q, &[3, 3, 4, 1])].iter(),
        );
        assert_eq!(s.dim(), 2);
        assert!(s.pivots().windows(2).all(|w| w[0] < w[1]));
        for (row, &p) in s.rows().iter().zip(s.pivots()) {
            assert!(row[&p].is_one());
            for &other in s.pivots() {
                if other != p {
                    assert!(!row.contains_key(&other));
                }
            }
        }
    }

    #[test]
    fn fraction_free_handles_rational_entries() {
        let q = Field::Rational;
        let half = q.ratio(1, 2).unwrap();
        let mut m = SparseMatrix::zero(2, 2);
        m.add_to(0, 0, half.clone());
        m.add_to(0, 1, q.one());
        m.add_to(1, 0, q.one());
        m.add_to(1, 1, q.int(2));
        assert_eq!(fraction_free_rank(&m), 1);
        assert_eq!(rank_naive(&m), 1);
    }
}

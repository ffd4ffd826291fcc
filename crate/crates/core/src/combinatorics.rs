//! Basis paths, the sets `AP_n`, parallel pairs and their classification.
//!
//! Everything here is pure enumeration over a [`BoundQuiver`]; nothing in
//! this module does linear algebra.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::quiver::{ArrowId, BoundQuiver, Path, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("relation-avoiding path longer than the number of arrows; the algebra is infinite dimensional")]
    InfiniteDimensional,
    #[error("pair is not complete; the cyclic action is undefined on it")]
    Incomplete,
    #[error("pair does not have a trivial second component")]
    NotVertexPair,
    #[error("phi is undefined on this pair: {0}")]
    PhiUndefined(&'static str),
}

/// The relation-avoiding paths (a basis of `kQ/I`), indexed by endpoints.
#[derive(Clone, Debug)]
pub struct BasisPathSet {
    paths: Vec<Path>,
    by_endpoints: HashMap<(VertexId, VertexId), Vec<Path>>,
    members: HashSet<Path>,
}

impl BasisPathSet {
    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn contains(&self, p: &Path) -> bool {
        self.members.contains(p)
    }

    /// Basis paths from `s` to `t`, in canonical order.
    pub fn between(&self, s: VertexId, t: VertexId) -> &[Path] {
        self.by_endpoints.get(&(s, t)).map_or(&[], |v| v.as_slice())
    }
}

/// Enumerates every path with no length-two subpath in the relation set.
pub fn enumerate_basis_paths(q: &BoundQuiver) -> Result<BasisPathSet, CombinatoricsError> {
    let mut paths: Vec<Path> = q.vertices().map(Path::trivial).collect();
    let mut frontier: Vec<Path> = q.arrows().iter().map(|a| Path::arrow(q, a.id)).collect();
    while !frontier.is_empty() {
        if frontier[0].len() > q.arrow_count() {
            return Err(CombinatoricsError::InfiniteDimensional);
        }
        let mut next = Vec::new();
        for p in &frontier {
            let tail = p.last().unwrap();
            for &b in q.successors(tail) {
                if !q.is_relation(tail, b) {
                    next.push(p.compose(&Path::arrow(q, b)).unwrap());
                }
            }
        }
        paths.append(&mut frontier);
        frontier = next;
    }
    paths.sort();
    let mut by_endpoints: HashMap<(VertexId, VertexId), Vec<Path>> = HashMap::new();
    for p in &paths {
        by_endpoints.entry((p.source(), p.target())).or_default().push(p.clone());
    }
    let members = paths.iter().cloned().collect();
    Ok(BasisPathSet { paths, by_endpoints, members })
}

/// `AP_n`: paths of length `n` whose consecutive arrow pairs are all
/// relations. `AP_0` is the trivial paths and `AP_1` the arrows.
pub fn enumerate_ap(q: &BoundQuiver, n: usize) -> Vec<Path> {
    if n == 0 {
        return q.vertices().map(Path::trivial).collect();
    }
    let mut layer: Vec<Path> = q.arrows().iter().map(|a| Path::arrow(q, a.id)).collect();
    for _ in 1..n {
        let mut next = Vec::new();
        for p in &layer {
            let tail = p.last().unwrap();
            for &b in q.successors(tail) {
                if q.is_relation(tail, b) {
                    next.push(p.compose(&Path::arrow(q, b)).unwrap());
                }
            }
        }
        layer = next;
    }
    layer.sort();
    layer
}

/// Whether every consecutive arrow pair of `p` is a relation.
pub fn is_ap(q: &BoundQuiver, p: &Path) -> bool {
    p.arrows().windows(2).all(|w| q.is_relation(w[0], w[1]))
}

/// A cochain basis element `(ρ, γ)`: `ρ ∈ AP_n`, `γ` a basis path, both
/// with the same source and target.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParallelPair {
    pub rho: Path,
    pub gamma: Path,
}

impl ParallelPair {
    pub fn new(rho: Path, gamma: Path) -> ParallelPair {
        debug_assert!(rho.source() == gamma.source() && rho.target() == gamma.target());
        ParallelPair { rho, gamma }
    }

    pub fn degree(&self) -> usize {
        self.rho.len()
    }

    pub fn display(&self, q: &BoundQuiver) -> String {
        format!("({}, {})", self.rho.display(q), self.gamma.display(q))
    }
}

/// `(X // 𝒫_m)`: all pairs `(ρ, γ)` with `ρ ∈ X`, `γ` parallel and `|γ| ≥ m`.
pub fn parallel_pairs(x: &[Path], basis: &BasisPathSet, min_gamma_len: usize) -> Vec<ParallelPair> {
    let mut out: Vec<ParallelPair> = x
        .iter()
        .flat_map(|rho| {
            basis
                .between(rho.source(), rho.target())
                .iter()
                .filter(move |g| g.len() >= min_gamma_len)
                .map(move |g| ParallelPair::new(rho.clone(), g.clone()))
        })
        .collect();
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PairTag {
    /// `(0,0)`: γ neither starts with ρ's first arrow nor ends with its last.
    ZeroZero,
    /// `(1,0)`: γ starts with ρ's first arrow only.
    OneZero,
    /// `(0,1)`: γ ends with ρ's last arrow only.
    ZeroOne,
    /// `(1,1)`: both.
    OneOne,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Decoration {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PairClass {
    pub tag: PairTag,
    /// Minus iff `βγ ∈ I` for every arrow `β` ending at `s(γ)`.
    pub left: Decoration,
    /// Minus iff `γβ ∈ I` for every arrow `β` starting at `t(γ)`.
    pub right: Decoration,
}

/// Left and right decorations of a basis path. A side with no incoming
/// (outgoing) arrow is minus, since the empty set lies in `I`.
pub fn decorations(q: &BoundQuiver, gamma: &Path) -> (Decoration, Decoration) {
    let left_killed = q.arrows_into(gamma.source()).iter().all(|&b| match gamma.first() {
        Some(g) => q.is_relation(b, g),
        None => false,
    });
    let right_killed = q.arrows_from(gamma.target()).iter().all(|&b| match gamma.last() {
        Some(g) => q.is_relation(g, b),
        None => false,
    });
    let dec = |killed| if killed { Decoration::Minus } else { Decoration::Plus };
    (dec(left_killed), dec(right_killed))
}

/// Classifies a pair of degree `n ≥ 1` into `(0,0)`, `(1,0)`, `(0,1)` or
/// `(1,1)` together with its decorations.
pub fn classify_pair(q: &BoundQuiver, pair: &ParallelPair) -> PairClass {
    assert!(pair.degree() >= 1, "classification needs degree at least one");
    let starts = !pair.gamma.is_trivial() && pair.gamma.first() == pair.rho.first();
    let ends = !pair.gamma.is_trivial() && pair.gamma.last() == pair.rho.last();
    let tag = match (starts, ends) {
        (false, false) => PairTag::ZeroZero,
        (true, false) => PairTag::OneZero,
        (false, true) => PairTag::ZeroOne,
        (true, true) => PairTag::OneOne,
    };
    let (left, right) = decorations(q, &pair.gamma);
    PairClass { tag, left, right }
}

fn vertex_pair_parts(pair: &ParallelPair) -> Result<(), CombinatoricsError> {
    if !pair.gamma.is_trivial() || pair.rho.is_trivial() {
        return Err(CombinatoricsError::NotVertexPair);
    }
    Ok(())
}

/// `(α₁⋯αₙ, e)` is complete when `αₙα₁ ∈ I`.
pub fn is_complete(q: &BoundQuiver, pair: &ParallelPair) -> bool {
    match (pair.gamma.is_trivial(), pair.rho.first(), pair.rho.last()) {
        (true, Some(first), Some(last)) => q.is_relation(last, first),
        _ => false,
    }
}

/// The cyclic action `t(α₁⋯αₙ, e) = (αₙα₁⋯αₙ₋₁, e_{s(αₙ)})` on complete pairs.
pub fn rotate(q: &BoundQuiver, pair: &ParallelPair) -> Result<ParallelPair, CombinatoricsError> {
    vertex_pair_parts(pair)?;
    if !is_complete(q, pair) {
        return Err(CombinatoricsError::Incomplete);
    }
    let arrows = pair.rho.arrows();
    let mut rotated = Vec::with_capacity(arrows.len());
    rotated.push(*arrows.last().unwrap());
    rotated.extend_from_slice(&arrows[..arrows.len() - 1]);
    let rho = Path::from_arrows(q, &rotated).expect("rotation of a cycle composes");
    let gamma = Path::trivial(rho.source());
    Ok(ParallelPair::new(rho, gamma))
}

/// The orbit of a complete pair under `t`, starting at the pair itself.
pub fn orbit(q: &BoundQuiver, pair: &ParallelPair) -> Result<Vec<ParallelPair>, CombinatoricsError> {
    let mut out = vec![pair.clone()];
    let mut cur = rotate(q, pair)?;
    while &cur != pair {
        out.push(cur.clone());
        cur = rotate(q, &cur)?;
    }
    Ok(out)
}

/// Least `k ≥ 1` with `t^k` fixing the pair.
pub fn order_of(q: &BoundQuiver, pair: &ParallelPair) -> Result<usize, CombinatoricsError> {
    Ok(orbit(q, pair)?.len())
}

/// `N(ρ, e) = Σ_{i<k} tⁱ(ρ, e)`, as the list of orbit members (each with coefficient 1).
pub fn norm_of(q: &BoundQuiver, pair: &ParallelPair) -> Result<Vec<ParallelPair>, CombinatoricsError> {
    orbit(q, pair)
}

/// Whether a complete pair lies in `𝒞ₙ(0)`: no `β ≠ α₁` with `αₙβ ∈ I`
/// and no `γ ≠ αₙ` with `γα₁ ∈ I`.
pub fn in_cn0(q: &BoundQuiver, pair: &ParallelPair) -> bool {
    if !is_complete(q, pair) {
        return false;
    }
    let (first, last) = (pair.rho.first().unwrap(), pair.rho.last().unwrap());
    let alt_after = q.successors(last).iter().any(|&b| b != first && q.is_relation(last, b));
    let alt_before = q.predecessors(first).iter().any(|&c| c != last && q.is_relation(c, first));
    !alt_after && !alt_before
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicPairData {
    #[serde(skip)]
    pub pair: ParallelPair,
    pub complete: bool,
    /// Orbit size under `t`; only for complete pairs.
    pub order: Option<usize>,
    pub gentle: bool,
    pub empty: bool,
    pub in_cn0: bool,
}

/// Fills the complete / gentle / empty / `𝒞ₙ(0)` flags of a pair in `(AP_n // Q₀)`.
pub fn classify_cyclic(q: &BoundQuiver, pair: &ParallelPair) -> Result<CyclicPairData, CombinatoricsError> {
    vertex_pair_parts(pair)?;
    let complete = is_complete(q, pair);
    if complete {
        let orbit = orbit(q, pair)?;
        let gentle = orbit.iter().all(|p| in_cn0(q, p));
        Ok(CyclicPairData {
            pair: pair.clone(),
            complete,
            order: Some(orbit.len()),
            gentle,
            empty: false,
            in_cn0: in_cn0(q, pair),
        })
    } else {
        let r = pair.gamma.source();
        let through = q.arrows_into(r).iter().any(|&b| q.arrows_from(r).iter().any(|&c| q.is_relation(b, c)));
        Ok(CyclicPairData { pair: pair.clone(), complete, order: None, gentle: false, empty: !through, in_cn0: false })
    }
}

/// Number of `t`-orbits in a set of complete pairs. For the full set `𝒢ₙ`
/// this is `dim k𝒢ₙ / Im(1 − t)` in every characteristic.
pub fn orbit_count(q: &BoundQuiver, pairs: &[ParallelPair]) -> Result<usize, CombinatoricsError> {
    let mut seen: HashSet<ParallelPair> = HashSet::new();
    let mut count = 0;
    for p in pairs {
        if seen.contains(p) {
            continue;
        }
        count += 1;
        seen.extend(orbit(q, p)?);
    }
    Ok(count)
}

/// `φ(αρ̂, αγ̂) = (ρ̂β, γ̂β)` on `(1,0)⁺`, where `β` is the unique arrow with
/// `γβ ∉ I`. Fails if the image is not a pair in `⁺(0,1)`.
pub fn phi(q: &BoundQuiver, pair: &ParallelPair) -> Result<ParallelPair, CombinatoricsError> {
    let class = classify_pair(q, pair);
    if class.tag != PairTag::OneZero || class.right != Decoration::Plus {
        return Err(CombinatoricsError::PhiUndefined("pair is not in (1,0)+"));
    }
    let gamma_last = pair.gamma.last().unwrap();
    let free: Vec<ArrowId> =
        q.arrows_from(pair.gamma.target()).iter().copied().filter(|&b| !q.is_relation(gamma_last, b)).collect();
    let beta = match free.as_slice() {
        [b] => *b,
        [] => return Err(CombinatoricsError::PhiUndefined("no arrow continues gamma")),
        _ => return Err(CombinatoricsError::PhiUndefined("continuation of gamma is not unique")),
    };
    let rho_hat = pair.rho.subpath(q, 1, pair.rho.len());
    let gamma_hat = pair.gamma.subpath(q, 1, pair.gamma.len());
    let b = Path::arrow(q, beta);
    let rho = rho_hat.compose(&b).ok_or(CombinatoricsError::PhiUndefined("rho-hat does not compose with beta"))?;
    if !is_ap(q, &rho) {
        return Err(CombinatoricsError::PhiUndefined("rho-hat beta is not in AP"));
    }
    let gamma =
        gamma_hat.compose(&b).ok_or(CombinatoricsError::PhiUndefined("gamma-hat does not compose with beta"))?;
    let image = ParallelPair::new(rho, gamma);
    let image_class = classify_pair(q, &image);
    if image_class.tag != PairTag::ZeroOne || image_class.left != Decoration::Plus {
        return Err(CombinatoricsError::PhiUndefined("image is not in +(0,1)"));
    }
    Ok(image)
}

/// All classified data for one degree `n ≥ 1`, with counting helpers for
/// the sets appearing in the dimension formulas.
#[derive(Clone, Debug)]
pub struct DegreeCensus {
    pub degree: usize,
    pub pairs: Vec<(ParallelPair, PairClass)>,
    pub vertex_pairs: Vec<CyclicPairData>,
}

/// Which part of `(AP_n // 𝒫)` a count is restricted to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaRange {
    /// `|γ| ≥ 1`
    Positive,
    /// `|γ| = 1`
    Arrow,
    /// `|γ| ≥ 2`
    Long,
}

impl GammaRange {
    fn admits(self, len: usize) -> bool {
        match self {
            GammaRange::Positive => len >= 1,
            GammaRange::Arrow => len == 1,
            GammaRange::Long => len >= 2,
        }
    }
}

impl DegreeCensus {
    pub fn new(q: &BoundQuiver, basis: &BasisPathSet, n: usize) -> Result<DegreeCensus, CombinatoricsError> {
        assert!(n >= 1, "census is defined for degree at least one");
        let ap = enumerate_ap(q, n);
        let all = parallel_pairs(&ap, basis, 0);
        let mut pairs = Vec::with_capacity(all.len());
        let mut vertex_pairs = Vec::new();
        for p in all {
            if p.gamma.is_trivial() {
                vertex_pairs.push(classify_cyclic(q, &p)?);
            }
            let class = classify_pair(q, &p);
            pairs.push((p, class));
        }
        Ok(DegreeCensus { degree: n, pairs, vertex_pairs })
    }

    /// Pairs with the given tag, γ length range and decorations (`None` = any).
    pub fn count(&self, tag: PairTag, range: GammaRange, left: Option<Decoration>, right: Option<Decoration>) -> usize {
        self.pairs
            .iter()
            .filter(|(p, c)| {
                c.tag == tag
                    && range.admits(p.gamma.len())
                    && left.is_none_or(|d| c.left == d)
                    && right.is_none_or(|d| c.right == d)
            })
            .count()
    }

    pub fn complete(&self) -> usize {
        self.vertex_pairs.iter().filter(|c| c.complete).count()
    }

    pub fn incomplete(&self) -> usize {
        self.vertex_pairs.iter().filter(|c| !c.complete).count()
    }

    pub fn gentle_pairs(&self) -> Vec<ParallelPair> {
        self.vertex_pairs.iter().filter(|c| c.gentle).map(|c| c.pair.clone()).collect()
    }

    pub fn gentle(&self) -> usize {
        self.vertex_pairs.iter().filter(|c| c.gentle).count()
    }

    pub fn non_gentle(&self) -> usize {
        self.complete() - self.gentle()
    }

    pub fn empty(&self) -> usize {
        self.vertex_pairs.iter().filter(|c| c.empty).count()
    }

    pub fn non_empty(&self) -> usize {
        self.incomplete() - self.empty()
    }

    /// `dim k𝒢ₙ / Im(1 − t)`, as the number of orbits.
    pub fn gentle_orbits(&self, q: &BoundQuiver) -> usize {
        orbit_count(q, &self.gentle_pairs()).expect("gentle pairs are complete")
    }

    /// Vertex pairs that violate `(AP_n//Q₀) ⊂ ⁺(0,0)ₙ⁺`.
    pub fn vertex_pair_exceptions(&self) -> Vec<ParallelPair> {
        self.pairs
            .iter()
            .filter(|(p, c)| {
                p.gamma.is_trivial()
                    && (c.tag != PairTag::ZeroZero || c.left != Decoration::Plus || c.right != Decoration::Plus)
            })
            .map(|(p, _)| p.clone())
            .collect()
    }
}

/// `|⁻(Q₀ // 𝒫₁)⁻|`: pairs `(e_r, γ)` with `|γ| ≥ 1` and both decorations minus.
pub fn count_minus_vertex_loops(q: &BoundQuiver, basis: &BasisPathSet) -> usize {
    let ap0 = enumerate_ap(q, 0);
    parallel_pairs(&ap0, basis, 1)
        .iter()
        .filter(|p| decorations(q, &p.gamma) == (Decoration::Minus, Decoration::Minus))
        .count()
}

/// Vertices `r` at which some relation passes (`βγ ∈ I` with `t(β) = r = s(γ)`).
pub fn relation_vertices(q: &BoundQuiver) -> BTreeSet<VertexId> {
    q.relations().iter().map(|&(a, _)| q.arrow(a).target).collect()
}

//! Finite quivers with quadratic monomial relations, and the hypotheses
//! (string, gentle, connected, finite dimensional) checked on them.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ArrowId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl ArrowId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub id: ArrowId,
    pub source: VertexId,
    pub target: VertexId,
    pub label: String,
}

/// A path in a quiver: either the trivial path at a vertex or a nonempty
/// sequence of composable arrows.
///
/// Paths are ordered by length, then by arrow-id sequence, then by source.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    source: VertexId,
    target: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Path {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &BoundQuiver, a: ArrowId) -> Path {
        let arrow = q.arrow(a);
        Path { source: arrow.source, target: arrow.target, arrows: vec![a] }
    }

    /// A path from a nonempty arrow sequence, or `None` if it does not compose.
    pub fn from_arrows(q: &BoundQuiver, arrows: &[ArrowId]) -> Option<Path> {
        let (first, rest) = arrows.split_first()?;
        let mut path = Path::arrow(q, *first);
        for &a in rest {
            if q.arrow(a).source != path.target {
                return None;
            }
            path.arrows.push(a);
            path.target = q.arrow(a).target;
        }
        Some(path)
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    pub fn first(&self) -> Option<ArrowId> {
        self.arrows.first().copied()
    }

    pub fn last(&self) -> Option<ArrowId> {
        self.arrows.last().copied()
    }

    pub fn is_cycle(&self) -> bool {
        !self.is_trivial() && self.source == self.target
    }

    /// Concatenation in the path algebra `kQ`: `None` when endpoints do not meet.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { source: self.source, target: other.target, arrows })
    }

    /// Subpath on arrows `range`; an empty range gives the trivial path at
    /// the corresponding vertex.
    pub fn subpath(&self, q: &BoundQuiver, start: usize, end: usize) -> Path {
        assert!(start <= end && end <= self.len());
        if start == end {
            let v = if start == 0 { self.source } else { q.arrow(self.arrows[start - 1]).target };
            return Path::trivial(v);
        }
        Path::from_arrows(q, &self.arrows[start..end]).expect("subpath of a path composes")
    }

    pub fn display<'a>(&'a self, q: &'a BoundQuiver) -> PathDisplay<'a> {
        PathDisplay { path: self, quiver: q }
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    quiver: &'a BoundQuiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.quiver;
        if self.path.is_trivial() {
            return write!(f, "e_{}", q.vertex_label(self.path.source));
        }
        let compact = q.arrows.iter().all(|a| a.label.chars().count() == 1);
        let sep = if compact { "" } else { "*" };
        let labels: Vec<&str> = self.path.arrows.iter().map(|&a| q.arrow(a).label.as_str()).collect();
        write!(f, "{}", labels.join(sep))
    }
}

/// Compose two paths. Trivial paths act as identities at their vertex.
pub fn compose(p: &Path, q: &Path) -> Option<Path> {
    p.compose(q)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("quiver has no vertices")]
    NoVertices,
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow label `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{arrow}` refers to undeclared vertex `{vertex}`")]
    UnknownVertex { arrow: String, vertex: String },
    #[error("relation refers to undeclared arrow `{0}`")]
    UnknownArrow(String),
    #[error("relation `{0} {1}` is not a composable path")]
    NotComposable(String, String),
}

/// A finite quiver together with a set of length-two monomial relations.
///
/// Vertex and arrow ids are dense and follow declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    relations: BTreeSet<(ArrowId, ArrowId)>,
    out_arrows: Vec<Vec<ArrowId>>,
    in_arrows: Vec<Vec<ArrowId>>,
    relation_table: Vec<bool>,
}

#[derive(Default, Clone, Debug)]
pub struct QuiverBuilder {
    vertices: Vec<String>,
    arrows: Vec<(String, String, String)>,
    relations: Vec<(String, String)>,
}

impl QuiverBuilder {
    pub fn vertex(mut self, label: impl Into<String>) -> Self {
        self.vertices.push(label.into());
        self
    }

    pub fn arrow(mut self, label: impl Into<String>, source: impl Into<String>, target: impl Into<String>) -> Self {
        self.arrows.push((label.into(), source.into(), target.into()));
        self
    }

    pub fn relation(mut self, first: impl Into<String>, second: impl Into<String>) -> Self {
        self.relations.push((first.into(), second.into()));
        self
    }

    pub fn build(self) -> Result<BoundQuiver, QuiverError> {
        if self.vertices.is_empty() {
            return Err(QuiverError::NoVertices);
        }
        let mut vertex_ids = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if vertex_ids.insert(v.clone(), VertexId(i as u32)).is_some() {
                return Err(QuiverError::DuplicateVertex(v.clone()));
            }
        }
        let mut arrow_ids = HashMap::new();
        let mut arrows = Vec::with_capacity(self.arrows.len());
        for (i, (label, s, t)) in self.arrows.iter().enumerate() {
            let lookup = |v: &String| {
                vertex_ids
                    .get(v)
                    .copied()
                    .ok_or_else(|| QuiverError::UnknownVertex { arrow: label.clone(), vertex: v.clone() })
            };
            let (source, target) = (lookup(s)?, lookup(t)?);
            if arrow_ids.insert(label.clone(), ArrowId(i as u32)).is_some() {
                return Err(QuiverError::DuplicateArrow(label.clone()));
            }
            arrows.push(Arrow { id: ArrowId(i as u32), source, target, label: label.clone() });
        }
        let mut relations = BTreeSet::new();
        for (a, b) in &self.relations {
            let lookup = |x: &String| arrow_ids.get(x).copied().ok_or_else(|| QuiverError::UnknownArrow(x.clone()));
            let (ia, ib) = (lookup(a)?, lookup(b)?);
            if arrows[ia.index()].target != arrows[ib.index()].source {
                return Err(QuiverError::NotComposable(a.clone(), b.clone()));
            }
            relations.insert((ia, ib));
        }
        Ok(BoundQuiver::assemble(self.vertices, arrows, relations))
    }
}

impl BoundQuiver {
    pub fn builder() -> QuiverBuilder {
        QuiverBuilder::default()
    }

    /// Builds a quiver from raw index data with generated labels:
    /// vertices `1..=n`, arrows `a, b, c, …`.
    pub fn from_indices(
        vertex_count: usize,
        arrows: &[(u32, u32)],
        relations: &[(u32, u32)],
    ) -> Result<BoundQuiver, QuiverError> {
        let mut b = BoundQuiver::builder();
        for v in 1..=vertex_count {
            b = b.vertex(v.to_string());
        }
        let labels: Vec<String> = (0..arrows.len()).map(arrow_label).collect();
        for (label, &(s, t)) in labels.iter().zip(arrows) {
            b = b.arrow(label.clone(), (s + 1).to_string(), (t + 1).to_string());
        }
        for &(x, y) in relations {
            let name = |i: u32| labels.get(i as usize).cloned().unwrap_or_else(|| format!("#{i}"));
            b = b.relation(name(x), name(y));
        }
        b.build()
    }

    fn assemble(vertices: Vec<String>, arrows: Vec<Arrow>, relations: BTreeSet<(ArrowId, ArrowId)>) -> BoundQuiver {
        let n = vertices.len();
        let m = arrows.len();
        let mut out_arrows = vec![Vec::new(); n];
        let mut in_arrows = vec![Vec::new(); n];
        for a in &arrows {
            out_arrows[a.source.index()].push(a.id);
            in_arrows[a.target.index()].push(a.id);
        }
        let mut relation_table = vec![false; m * m];
        for &(a, b) in &relations {
            relation_table[a.index() * m + b.index()] = true;
        }
        BoundQuiver { vertices, arrows, relations, out_arrows, in_arrows, relation_table }
    }

    /// Rebuilds the quiver from its labels. Ids are dense in declaration
    /// order and relations sorted, so this is idempotent.
    pub fn normalized(&self) -> BoundQuiver {
        let mut b = BoundQuiver::builder();
        for v in &self.vertices {
            b = b.vertex(v.clone());
        }
        for a in &self.arrows {
            b = b.arrow(a.label.clone(), self.vertex_label(a.source), self.vertex_label(a.target));
        }
        for &(x, y) in &self.relations {
            b = b.relation(self.arrow(x).label.clone(), self.arrow(y).label.clone());
        }
        b.build().expect("a built quiver rebuilds")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len() as u32).map(VertexId)
    }

    pub fn vertex_label(&self, v: VertexId) -> &str {
        &self.vertices[v.index()]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.index()]
    }

    pub fn arrow_by_label(&self, label: &str) -> Option<ArrowId> {
        self.arrows.iter().find(|a| a.label == label).map(|a| a.id)
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v == label).map(|i| VertexId(i as u32))
    }

    pub fn relations(&self) -> &BTreeSet<(ArrowId, ArrowId)> {
        &self.relations
    }

    /// Whether the length-two path `a b` lies in the ideal.
    pub fn is_relation(&self, a: ArrowId, b: ArrowId) -> bool {
        self.relation_table[a.index() * self.arrows.len() + b.index()]
    }

    pub fn arrows_from(&self, v: VertexId) -> &[ArrowId] {
        &self.out_arrows[v.index()]
    }

    pub fn arrows_into(&self, v: VertexId) -> &[ArrowId] {
        &self.in_arrows[v.index()]
    }

    /// Arrows `b` with `a b` a path (composable after `a`).
    pub fn successors(&self, a: ArrowId) -> &[ArrowId] {
        self.arrows_from(self.arrow(a).target)
    }

    /// Arrows `c` with `c a` a path.
    pub fn predecessors(&self, a: ArrowId) -> &[ArrowId] {
        self.arrows_into(self.arrow(a).source)
    }

    /// Parse a path written as arrow labels separated by whitespace or `*`,
    /// or `e_<vertex>` for a trivial path. Single-character labels may be
    /// run together (`ab`).
    pub fn parse_path(&self, text: &str) -> Option<Path> {
        let text = text.trim();
        if let Some(v) = text.strip_prefix("e_") {
            return self.vertex_by_label(v).map(Path::trivial);
        }
        let tokens: Vec<&str> = text.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()).collect();
        let mut ids = Vec::new();
        for tok in tokens {
            if let Some(a) = self.arrow_by_label(tok) {
                ids.push(a);
            } else {
                for ch in tok.chars() {
                    ids.push(self.arrow_by_label(&ch.to_string())?);
                }
            }
        }
        Path::from_arrows(self, &ids)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn component_count(&self) -> usize {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for a in &self.arrows {
            let (x, y) = (find(&mut parent, a.source.index()), find(&mut parent, a.target.index()));
            parent[x] = y;
        }
        (0..n).filter(|&i| find(&mut parent, i) == i).count()
    }
}

fn arrow_label(i: usize) -> String {
    let letters = b"abcdefghijklmnopqrstuvwxyz";
    if i < letters.len() {
        (letters[i] as char).to_string()
    } else {
        format!("a{i}")
    }
}

/// One violated hypothesis, with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// S1: a vertex is the source of three or more arrows.
    TooManyOutgoing {
        vertex: String,
        arrows: Vec<String>,
    },
    /// S1: a vertex is the target of three or more arrows.
    TooManyIncoming {
        vertex: String,
        arrows: Vec<String>,
    },
    /// S2: two distinct continuations `b` of `arrow` with `arrow b` outside the ideal.
    FreeSuccessors {
        arrow: String,
        witnesses: [String; 2],
    },
    /// S2: two distinct `c` with `c arrow` outside the ideal.
    FreePredecessors {
        arrow: String,
        witnesses: [String; 2],
    },
    /// G1: two distinct `b` with `arrow b` a relation.
    RelationSuccessors {
        arrow: String,
        witnesses: [String; 2],
    },
    /// G1: two distinct `c` with `c arrow` a relation.
    RelationPredecessors {
        arrow: String,
        witnesses: [String; 2],
    },
    Disconnected {
        components: usize,
    },
    InfiniteDimensional {
        cycle: String,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks S1 (at most two arrows in and out of each vertex) and S2 (at most
/// one continuation on each side avoiding the ideal).
pub fn validate_string(q: &BoundQuiver) -> ValidationReport {
    let mut violations = Vec::new();
    let label = |a: &ArrowId| q.arrow(*a).label.clone();
    for v in q.vertices() {
        if q.arrows_from(v).len() > 2 {
            violations.push(Violation::TooManyOutgoing {
                vertex: q.vertex_label(v).to_string(),
                arrows: q.arrows_from(v).iter().map(label).collect(),
            });
        }
        if q.arrows_into(v).len() > 2 {
            violations.push(Violation::TooManyIncoming {
                vertex: q.vertex_label(v).to_string(),
                arrows: q.arrows_into(v).iter().map(label).collect(),
            });
        }
    }
    for a in q.arrows() {
        let free_after: Vec<_> = q.successors(a.id).iter().filter(|&&b| !q.is_relation(a.id, b)).collect();
        if free_after.len() >= 2 {
            violations.push(Violation::FreeSuccessors {
                arrow: a.label.clone(),
                witnesses: [label(free_after[0]), label(free_after[1])],
            });
        }
        let free_before: Vec<_> = q.predecessors(a.id).iter().filter(|&&c| !q.is_relation(c, a.id)).collect();
        if free_before.len() >= 2 {
            violations.push(Violation::FreePredecessors {
                arrow: a.label.clone(),
                witnesses: [label(free_before[0]), label(free_before[1])],
            });
        }
    }
    ValidationReport { violations }
}

/// Checks G1: at most one relation continuation on each side of every arrow.
/// G2 holds by construction since all relations have length two.
pub fn validate_gentle(q: &BoundQuiver) -> ValidationReport {
    let mut violations = Vec::new();
    let label = |a: &ArrowId| q.arrow(*a).label.clone();
    for a in q.arrows() {
        let rel_after: Vec<_> = q.successors(a.id).iter().filter(|&&b| q.is_relation(a.id, b)).collect();
        if rel_after.len() >= 2 {
            violations.push(Violation::RelationSuccessors {
                arrow: a.label.clone(),
                witnesses: [label(rel_after[0]), label(rel_after[1])],
            });
        }
        let rel_before: Vec<_> = q.predecessors(a.id).iter().filter(|&&c| q.is_relation(c, a.id)).collect();
        if rel_before.len() >= 2 {
            violations.push(Violation::RelationPredecessors {
                arrow: a.label.clone(),
                witnesses: [label(rel_before[0]), label(rel_before[1])],
            });
        }
    }
    ValidationReport { violations }
}

/// A nonzero oriented cycle avoiding every relation, including at the
/// wrap-around; its powers span an infinite-dimensional quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCycle(pub Path);

/// Decides whether `kQ/I` is finite dimensional.
///
/// A relation-avoiding path of length `|Q₁| + 1` repeats an arrow, and the
/// segment between the repeats is a relation-avoiding cycle; so search to
/// that depth is complete.
pub fn check_finite_dimensional(q: &BoundQuiver) -> Result<(), WitnessCycle> {
    let limit = q.arrow_count() + 1;
    let mut stack: Vec<Vec<ArrowId>> = q.arrows().iter().map(|a| vec![a.id]).collect();
    while let Some(walk) = stack.pop() {
        if walk.len() >= limit {
            let last = walk.len() - 1;
            let (i, j) = (0..last)
                .flat_map(|i| (i + 1..=last).map(move |j| (i, j)))
                .find(|&(i, j)| walk[i] == walk[j])
                .expect("pigeonhole");
            let cycle = Path::from_arrows(q, &walk[i..j]).expect("segment of a path");
            return Err(WitnessCycle(cycle));
        }
        let tail = *walk.last().unwrap();
        for &b in q.successors(tail) {
            if !q.is_relation(tail, b) {
                let mut next = walk.clone();
                next.push(b);
                stack.push(next);
            }
        }
    }
    Ok(())
}

/// Full structural validation: string conditions, connectivity and finite
/// dimension.
pub fn validate(q: &BoundQuiver) -> ValidationReport {
    let mut report = validate_string(q);
    let components = q.component_count();
    if components != 1 {
        report.violations.push(Violation::Disconnected { components });
    }
    if let Err(WitnessCycle(c)) = check_finite_dimensional(q) {
        report.violations.push(Violation::InfiniteDimensional { cycle: c.display(q).to_string() });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop_algebra() -> BoundQuiver {
        BoundQuiver::builder().vertex("v").arrow("a", "v", "v").relation("a", "a").build().unwrap()
    }

    fn two_cycle() -> BoundQuiver {
        BoundQuiver::builder()
            .vertex("1")
            .vertex("2")
            .arrow("a", "1", "2")
            .arrow("b", "2", "1")
            .relation("a", "b")
            .relation("b", "a")
            .build()
            .unwrap()
    }

    #[test]
    fn compose_examples() {
        let q = BoundQuiver::builder()
            .vertex("1")
            .vertex("2")
            .vertex("3")
            .arrow("a", "1", "2")
            .arrow("b", "2", "3")
            .build()
            .unwrap();
        let e = Path::trivial(VertexId(0));
        assert_eq!(compose(&e, &e), Some(e.clone()));
        let a = Path::arrow(&q, ArrowId(0));
        let b = Path::arrow(&q, ArrowId(1));
        assert_eq!(compose(&a, &b).unwrap().arrows(), &[ArrowId(0), ArrowId(1)]);
        assert_eq!(compose(&a, &a), None);
        assert_eq!(compose(&e, &a), Some(a.clone()));
    }

    #[test]
    fn string_validation() {
        assert!(validate_string(&loop_algebra()).is_ok());

        let three_loops = BoundQuiver::builder()
            .vertex("v")
            .arrow("a", "v", "v")
            .arrow("b", "v", "v")
            .arrow("c", "v", "v")
            .build()
            .unwrap();
        let r = validate_string(&three_loops);
        assert!(r.violations.iter().any(|v| matches!(v, Violation::TooManyOutgoing { vertex, .. } if vertex == "v")));

        let fan = BoundQuiver::builder()
            .vertex("1")
            .vertex("2")
            .arrow("a", "1", "2")
            .arrow("b", "1", "2")
            .arrow("c", "1", "2")
            .build()
            .unwrap();
        let r = validate_string(&fan);
        assert!(r.violations.iter().any(|v| matches!(v, Violation::TooManyOutgoing { vertex, .. } if vertex == "1")));
    }

    #[test]
    fn s2_violation_has_witnesses() {
        let q = BoundQuiver::builder()
            .vertex("1")
            .vertex("2")
            .vertex("3")
            .vertex("4")
            .arrow("a", "1", "2")
            .arrow("b", "2", "3")
            .arrow("c", "2", "4")
            .build()
            .unwrap();
        let r = validate_string(&q);
        assert_eq!(
            r.violations,
            vec![Violation::FreeSuccessors { arrow: "a".into(), witnesses: ["b".into(), "c".into()] }]
        );
    }

    #[test]
    fn gentle_validation() {
        assert!(validate_gentle(&two_cycle()).is_ok());
        assert!(validate_gentle(&loop_algebra()).is_ok());
        let star = BoundQuiver::builder()
            .vertex("1")
            .vertex("2")
            .vertex("3")
            .vertex("4")
            .arrow("a", "1", "2")
            .arrow("b", "2", "3")
            .arrow("c", "2", "4")
            .relation("a", "b")
            .relation("a", "c")
            .build()
            .unwrap();
        assert!(validate_string(&star).is_ok());
        assert_eq!(
            validate_gentle(&star).violations,
            vec![Violation::RelationSuccessors { arrow: "a".into(), witnesses: ["b".into(), "c".into()] }]
        );
    }

    #[test]
    fn finite_dimension() {
        assert!(check_finite_dimensional(&loop_algebra()).is_ok());
        assert!(check_finite_dimensional(&two_cycle()).is_ok());
        let free_loop = BoundQuiver::builder().vertex("v").arrow("a", "v", "v").build().unwrap();
        let WitnessCycle(c) = check_finite_dimensional(&free_loop).unwrap_err();
        assert_eq!(c.arrows(), &[ArrowId(0)]);
    }

    #[test]
    fn builder_errors() {
        let err = BoundQuiver::builder().vertex("v").arrow("a", "v", "v").relation("a", "c").build().unwrap_err();
        assert_eq!(err, QuiverError::UnknownArrow("c".into()));
        let err =
            BoundQuiver::builder().vertex("1").vertex("2").arrow("a", "1", "2").relation("a", "a").build().unwrap_err();
        assert_eq!(err, QuiverError::NotComposable("a".into(), "a".into()));
        assert_eq!(BoundQuiver::builder().build().unwrap_err(), QuiverError::NoVertices);
    }

    #[test]
    fn duplicate_relations_collapse_and_normalization_is_idempotent() {
        let q = BoundQuiver::builder()
            .vertex("v")
            .arrow("a", "v", "v")
            .relation("a", "a")
            .relation("a", "a")
            .build()
            .unwrap();
        assert_eq!(q.relations().len(), 1);
        let n1 = q.normalized();
        assert_eq!(n1, q);
        assert_eq!(n1.normalized(), n1);
    }

    #[test]
    fn connectivity() {
        let q = BoundQuiver::builder().vertex("1").vertex("2").build().unwrap();
        assert!(!q.is_connected());
        assert!(validate(&q).violations.contains(&Violation::Disconnected { components: 2 }));
        assert!(two_cycle().is_connected());
    }

    #[test]
    fn parse_paths() {
        let q = two_cycle();
        assert_eq!(q.parse_path("ab").unwrap().arrows(), &[ArrowId(0), ArrowId(1)]);
        assert_eq!(q.parse_path("e_2").unwrap(), Path::trivial(VertexId(1)));
        assert_eq!(q.parse_path("aa"), None);
    }
}

//! Finite valued quivers whose arrows carry bimodule dualization sequences.

mod classify;

pub mod catalog;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dimseq;
use crate::error::{Error, Result};

pub use classify::{classify, DiagramType};
pub(crate) use classify::{tree_shape, TreeShape};

/// Vertex name. Nonempty and free of whitespace.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(Error::InvalidVertexName(name));
        }
        Ok(VertexId(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The cyclic sequence `d_m(M)` of right dimensions of the iterated left
/// duals of a bimodule, read from a rotation offset.
///
/// `entry(j)` is `entries[(j + offset) mod m]`. `r_dim` is `entry(0)` (the
/// dimension over the ring at the arrow's target) and `l_dim` is `entry(1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualizationSequence {
    entries: Vec<u32>,
    offset: usize,
}

impl DualizationSequence {
    /// Builds a sequence at offset 0, rejecting anything that is not a
    /// dimension sequence in every rotation.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if !dimseq::validate_cyclic(&entries)? {
            return Err(Error::InvalidSequence(entries));
        }
        Ok(DualizationSequence { entries, offset: 0 })
    }

    /// `(1, 1, 1)`: the bimodule of a plain arrow.
    pub fn trivial() -> Self {
        DualizationSequence {
            entries: vec![1, 1, 1],
            offset: 0,
        }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, j: usize) -> u32 {
        self.entries[(j + self.offset) % self.entries.len()]
    }

    pub fn r_dim(&self) -> u32 {
        self.entry(0)
    }

    pub fn l_dim(&self) -> u32 {
        self.entry(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.entries == [1, 1, 1]
    }

    /// The sequence as seen from the current offset.
    pub fn current(&self) -> Vec<u32> {
        (0..self.len()).map(|j| self.entry(j)).collect()
    }

    pub fn shifted(&self, delta: isize) -> Self {
        let m = self.entries.len() as isize;
        let offset = (self.offset as isize + delta).rem_euclid(m) as usize;
        DualizationSequence {
            entries: self.entries.clone(),
            offset,
        }
    }
}

impl fmt::Display for DualizationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_seq(f, &self.current())
    }
}

pub(crate) fn fmt_seq(f: &mut fmt::Formatter<'_>, seq: &[u32]) -> fmt::Result {
    f.write_str("(")?;
    for (i, a) in seq.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{a}")?;
    }
    f.write_str(")")
}

/// What an arrow carries: either a full dualization sequence, or only a
/// valuation `(r_dim, l_dim)` with `r_dim * l_dim >= 4`, for which no finite
/// sequence exists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ArrowLabel {
    Sequence(DualizationSequence),
    Unbounded { r_dim: u32, l_dim: u32 },
}

impl ArrowLabel {
    pub fn trivial() -> Self {
        ArrowLabel::Sequence(DualizationSequence::trivial())
    }

    pub fn sequence(entries: Vec<u32>) -> Result<Self> {
        DualizationSequence::new(entries).map(ArrowLabel::Sequence)
    }

    /// Expands the valuation shorthand `(d, e)`.
    pub fn from_valuation(d: u32, e: u32) -> Result<Self> {
        let period: Option<Vec<u32>> = match (d, e) {
            (0, _) | (_, 0) => return Err(Error::InvalidValuation(d, e)),
            (1, 1) => Some(vec![1, 1, 1]),
            (1, 2) | (2, 1) => Some([d, e].repeat(2)),
            (1, 3) | (3, 1) => Some([d, e].repeat(3)),
            _ => None,
        };
        Ok(match period {
            Some(entries) => ArrowLabel::sequence(entries)?,
            None => ArrowLabel::Unbounded { r_dim: d, l_dim: e },
        })
    }

    /// Number of indecomposables of the rank-two ring; `None` for infinity.
    pub fn coxeter_label(&self) -> Option<usize> {
        match self {
            ArrowLabel::Sequence(s) => Some(s.len()),
            ArrowLabel::Unbounded { .. } => None,
        }
    }

    pub fn r_dim(&self) -> u32 {
        match self {
            ArrowLabel::Sequence(s) => s.r_dim(),
            ArrowLabel::Unbounded { r_dim, .. } => *r_dim,
        }
    }

    pub fn l_dim(&self) -> u32 {
        match self {
            ArrowLabel::Sequence(s) => s.l_dim(),
            ArrowLabel::Unbounded { l_dim, .. } => *l_dim,
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, ArrowLabel::Sequence(s) if s.is_trivial())
    }

    pub fn as_sequence(&self) -> Option<&DualizationSequence> {
        match self {
            ArrowLabel::Sequence(s) => Some(s),
            ArrowLabel::Unbounded { .. } => None,
        }
    }

    /// Moves `delta` steps along the dualization tower. Unbounded labels
    /// alternate between their two dimensions.
    pub fn shifted(&self, delta: isize) -> Self {
        match self {
            ArrowLabel::Sequence(s) => ArrowLabel::Sequence(s.shifted(delta)),
            ArrowLabel::Unbounded { r_dim, l_dim } if delta.rem_euclid(2) == 1 => {
                ArrowLabel::Unbounded {
                    r_dim: *l_dim,
                    l_dim: *r_dim,
                }
            }
            other => other.clone(),
        }
    }
}

impl fmt::Display for ArrowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrowLabel::Sequence(s) => s.fmt(f),
            ArrowLabel::Unbounded { r_dim, l_dim } => write!(f, "val {r_dim},{l_dim}"),
        }
    }
}

/// Arrow between two vertices, referenced by index into the quiver's vertex
/// list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: ArrowLabel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Acyclic, loop-free, at most one arrow per unordered pair.
    #[default]
    Hereditary,
    /// Radical-square-zero input: loops and 2-cycles permitted.
    General,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Hereditary => "hereditary",
            Mode::General => "general",
        })
    }
}

/// A finite quiver. Vertices are kept sorted by name, so vertex indices and
/// every derived ordering follow lexicographic name order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<VertexId>,
    arrows: Vec<Arrow>,
    mode: Mode,
}

#[derive(Debug, Default, Clone)]
pub struct QuiverBuilder {
    mode: Mode,
    vertices: Vec<String>,
    arrows: Vec<(String, String, ArrowLabel)>,
}

impl QuiverBuilder {
    pub fn mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn vertex(mut self, name: impl Into<String>) -> Self {
        self.vertices.push(name.into());
        self
    }

    pub fn arrow(self, source: impl Into<String>, target: impl Into<String>) -> Self {
        self.labeled(source, target, ArrowLabel::trivial())
    }

    pub fn labeled(
        mut self,
        source: impl Into<String>,
        target: impl Into<String>,
        label: ArrowLabel,
    ) -> Self {
        self.arrows.push((source.into(), target.into(), label));
        self
    }

    /// Arrow carrying the given dualization sequence.
    pub fn seq(
        self,
        source: impl Into<String>,
        target: impl Into<String>,
        seq: &[u32],
    ) -> Result<Self> {
        let label = ArrowLabel::sequence(seq.to_vec())?;
        Ok(self.labeled(source, target, label))
    }

    pub fn build(self) -> Result<Quiver> {
        let mut names = BTreeSet::new();
        for name in self
            .vertices
            .iter()
            .chain(self.arrows.iter().flat_map(|(s, t, _)| [s, t]))
        {
            names.insert(VertexId::new(name.clone())?);
        }
        let vertices: Vec<VertexId> = names.into_iter().collect();
        let index: BTreeMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut arrows: Vec<Arrow> = self
            .arrows
            .into_iter()
            .map(|(s, t, label)| Arrow {
                source: index[s.as_str()],
                target: index[t.as_str()],
                label,
            })
            .collect();
        arrows.sort_by_key(|a| (a.source, a.target));
        Quiver::from_parts(vertices, arrows, self.mode)
    }
}

impl Quiver {
    pub fn builder() -> QuiverBuilder {
        QuiverBuilder::default()
    }

    /// Hereditary quiver with trivially labeled arrows.
    pub fn from_arrows(arrows: &[(&str, &str)]) -> Result<Quiver> {
        arrows
            .iter()
            .fold(Quiver::builder(), |b, (s, t)| b.arrow(*s, *t))
            .build()
    }

    pub(crate) fn from_parts(
        vertices: Vec<VertexId>,
        arrows: Vec<Arrow>,
        mode: Mode,
    ) -> Result<Quiver> {
        let q = Quiver {
            vertices,
            arrows,
            mode,
        };
        q.check()?;
        Ok(q)
    }

    fn check(&self) -> Result<()> {
        let mut ordered = BTreeSet::new();
        let mut unordered = BTreeSet::new();
        for a in &self.arrows {
            let (s, t) = (self.name(a.source), self.name(a.target));
            if !ordered.insert((a.source, a.target)) {
                return Err(Error::ParallelArrows(s.into(), t.into()));
            }
            if self.mode == Mode::Hereditary {
                if a.source == a.target {
                    return Err(Error::LoopInHereditary(s.into()));
                }
                let key = (a.source.min(a.target), a.source.max(a.target));
                if !unordered.insert(key) {
                    return Err(Error::ParallelArrows(s.into(), t.into()));
                }
            }
        }
        if self.mode == Mode::Hereditary && !self.is_acyclic() {
            return Err(Error::CyclicQuiver);
        }
        Ok(())
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn name(&self, v: usize) -> &str {
        self.vertices[v].as_str()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vertices
            .binary_search_by(|v| v.as_str().cmp(name))
            .ok()
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.source == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.target == v).count()
    }

    pub fn incoming(&self, v: usize) -> impl Iterator<Item = (usize, &Arrow)> {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.target == v)
    }

    pub fn outgoing(&self, v: usize) -> impl Iterator<Item = (usize, &Arrow)> {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.source == v)
    }

    /// Neighbors in the underlying graph, sorted and without repetition.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self
            .arrows
            .iter()
            .filter_map(|a| match (a.source == v, a.target == v) {
                (true, false) => Some(a.target),
                (false, true) => Some(a.source),
                _ => None,
            })
            .collect();
        set.into_iter().collect()
    }

    /// The arrow joining `u` and `v` in either direction.
    pub fn edge(&self, u: usize, v: usize) -> Option<&Arrow> {
        self.arrows
            .iter()
            .find(|a| (a.source == u && a.target == v) || (a.source == v && a.target == u))
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.source != v)
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.target != v)
    }

    /// Vertices without outgoing arrows.
    pub fn sinks(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.is_sink(v))
            .collect()
    }

    /// Vertices without incoming arrows.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.is_source(v))
            .collect()
    }

    pub fn is_trivially_labeled(&self) -> bool {
        self.arrows.iter().all(|a| a.label.is_trivial())
    }

    pub fn is_acyclic(&self) -> bool {
        let n = self.vertex_count();
        let mut indeg: Vec<usize> = (0..n).map(|v| self.in_degree(v)).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    queue.push_back(a.target);
                }
            }
        }
        seen == n
    }

    fn component_labels(&self) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            label[start] = count;
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.component_labels().1 == 1
    }

    /// Weakly connected components, ordered by their least vertex name.
    pub fn components(&self) -> Vec<Quiver> {
        let (label, count) = self.component_labels();
        (0..count)
            .map(|c| {
                let keep: Vec<usize> = (0..self.vertex_count())
                    .filter(|&v| label[v] == c)
                    .collect();
                self.induced(&keep)
            })
            .collect()
    }

    /// Full subquiver on `keep`, which must be sorted.
    pub(crate) fn induced(&self, keep: &[usize]) -> Quiver {
        let mut remap = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        Quiver {
            vertices: keep.iter().map(|&v| self.vertices[v].clone()).collect(),
            arrows: self
                .arrows
                .iter()
                .filter(|a| remap[a.source] != usize::MAX && remap[a.target] != usize::MAX)
                .map(|a| Arrow {
                    source: remap[a.source],
                    target: remap[a.target],
                    label: a.label.clone(),
                })
                .collect(),
            mode: self.mode,
        }
    }

    /// Reverses every arrow incident to `k` and moves its label `delta`
    /// steps along the dualization tower. Arrow indices are preserved.
    pub fn reversed_at(&self, k: usize, delta: isize) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| {
                if (a.source == k) != (a.target == k) {
                    Arrow {
                        source: a.target,
                        target: a.source,
                        label: a.label.shifted(delta),
                    }
                } else {
                    a.clone()
                }
            })
            .collect();
        Quiver {
            vertices: self.vertices.clone(),
            arrows,
            mode: self.mode,
        }
    }

    /// Ordering `k_1, ..., k_n` of all vertices in which each `k_t` is a sink
    /// after reversing the arrows at `k_1, ..., k_{t-1}`. Ties go to the
    /// smallest vertex name.
    pub fn admissible_sink_sequence(&self) -> Result<Vec<usize>> {
        let n = self.vertex_count();
        let mut current = self.clone();
        let mut chosen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let k = (0..n)
                .find(|&v| !chosen[v] && current.is_sink(v))
                .ok_or(Error::CyclicQuiver)?;
            // loops make a vertex never a sink, which also lands here
            chosen[k] = true;
            order.push(k);
            current = current.reversed_at(k, 1);
        }
        Ok(order)
    }

    /// Every orientation of the underlying graph, keeping labels attached to
    /// the arrow as it is flipped (a flipped arrow keeps its sequence).
    pub fn orientations(&self) -> Vec<Quiver> {
        let e = self.arrows.len();
        assert!(e < 24, "too many arrows to enumerate orientations");
        (0u32..1 << e)
            .map(|mask| {
                let arrows: Vec<Arrow> = self
                    .arrows
                    .iter()
                    .enumerate()
                    .map(|(i, a)| {
                        if mask & (1 << i) != 0 {
                            Arrow {
                                source: a.target,
                                target: a.source,
                                label: a.label.clone(),
                            }
                        } else {
                            a.clone()
                        }
                    })
                    .collect();
                Quiver {
                    vertices: self.vertices.clone(),
                    arrows,
                    mode: self.mode,
                }
            })
            .collect()
    }

    /// Same quiver with vertices renamed through `rename`. Fails if the
    /// renaming is not injective.
    pub fn renamed(&self, rename: impl Fn(&str) -> String) -> Result<Quiver> {
        self.arrows
            .iter()
            .fold(
                self.vertices
                    .iter()
                    .fold(Quiver::builder().mode(self.mode), |b, v| {
                        b.vertex(rename(v.as_str()))
                    }),
                |b, a| {
                    b.labeled(
                        rename(self.name(a.source)),
                        rename(self.name(a.target)),
                        a.label.clone(),
                    )
                },
            )
            .build()
            .and_then(|q| {
                if q.vertex_count() == self.vertex_count() {
                    Ok(q)
                } else {
                    Err(Error::InvalidVertexName("renaming is not injective".into()))
                }
            })
    }

    pub fn with_mode(&self, mode: Mode) -> Result<Quiver> {
        Quiver::from_parts(self.vertices.clone(), self.arrows.clone(), mode)
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> = self
            .arrows
            .iter()
            .map(|a| {
                if a.label.is_trivial() {
                    format!("{}->{}", self.name(a.source), self.name(a.target))
                } else {
                    format!(
                        "{}->{} {}",
                        self.name(a.source),
                        self.name(a.target),
                        a.label
                    )
                }
            })
            .collect();
        write!(f, "[{}]", arrows.join(", "))
    }
}

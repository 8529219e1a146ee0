//! Reflections of dimension vectors along the dualization tower of a species.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Index, IndexMut};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::{classify, DiagramType, Mode, Quiver, VertexId};

/// Default bound on the number of tower steps.
pub const DEFAULT_STEP_CAP: usize = 10_000;

/// Integer vector indexed by vertex position in the quiver.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct DimVector(pub Vec<i64>);

impl DimVector {
    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn unit(n: usize, k: usize) -> Self {
        let mut v = DimVector::zero(n);
        v.0[k] = 1;
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn has_negative(&self) -> bool {
        self.0.iter().any(|&c| c < 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.has_negative()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for DimVector {
    fn from(v: Vec<i64>) -> Self {
        DimVector(v)
    }
}

impl Index<usize> for DimVector {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl IndexMut<usize> for DimVector {
    fn index_mut(&mut self, i: usize) -> &mut i64 {
        &mut self.0[i]
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// The species `M^(j)`: the quiver after `j` sink reflections, arrows
/// carrying their advanced dualization offsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpeciesState {
    pub quiver: Quiver,
    pub stage: usize,
}

impl SpeciesState {
    pub fn new(quiver: Quiver) -> Self {
        SpeciesState { quiver, stage: 0 }
    }
}

fn require_sink(q: &Quiver, k: usize) -> Result<()> {
    if k >= q.vertex_count() {
        return Err(Error::UnknownVertex(k.to_string()));
    }
    if !q.is_sink(k) {
        return Err(Error::NotASink(q.name(k).to_string()));
    }
    Ok(())
}

/// Reverses the arrows at the sink `k`, replacing each bimodule by its left
/// dual.
pub fn reflect_state(s: &SpeciesState, k: usize) -> Result<SpeciesState> {
    require_sink(&s.quiver, k)?;
    Ok(SpeciesState {
        quiver: s.quiver.reversed_at(k, 1),
        stage: s.stage + 1,
    })
}

/// `y_k = -x_k + sum over arrows i -> k of r_dim * x_i`, all other
/// coordinates unchanged.
pub fn reflect_vector_at_sink(s: &SpeciesState, k: usize, x: &DimVector) -> Result<DimVector> {
    require_sink(&s.quiver, k)?;
    if x.len() != s.quiver.vertex_count() {
        return Err(Error::Shape(format!(
            "vector of length {} on {} vertices",
            x.len(),
            s.quiver.vertex_count()
        )));
    }
    Ok(reflect_unchecked(&s.quiver, k, x))
}

fn reflect_unchecked(q: &Quiver, k: usize, x: &DimVector) -> DimVector {
    let mut y = x.clone();
    y[k] = -x[k]
        + q.incoming(k)
            .map(|(_, a)| a.label.r_dim() as i64 * x[a.source])
            .sum::<i64>();
    y
}

/// The states `M^(0), M^(1), ...` along the cyclic admissible sink
/// sequence, built on demand.
#[derive(Debug, Clone)]
pub struct CoxeterTower {
    order: Vec<usize>,
    states: Vec<SpeciesState>,
    cursor: usize,
}

impl CoxeterTower {
    pub fn new(q: &Quiver) -> Result<Self> {
        if !q.is_connected() {
            return Err(Error::NotConnected);
        }
        let order = q.admissible_sink_sequence()?;
        Ok(CoxeterTower {
            order,
            states: vec![SpeciesState::new(q.clone())],
            cursor: 0,
        })
    }

    /// `k'_j`, the vertex reflected to pass from `M^(j)` to `M^(j+1)`.
    pub fn vertex(&self, j: usize) -> usize {
        self.order[j % self.order.len()]
    }

    pub fn admissible_sequence(&self) -> &[usize] {
        &self.order
    }

    pub fn state(&mut self, j: usize) -> &SpeciesState {
        while self.states.len() <= j {
            let i = self.states.len() - 1;
            let k = self.vertex(i);
            let next = reflect_state(&self.states[i], k).expect("admissible vertex is a sink");
            self.states.push(next);
        }
        &self.states[j]
    }

    /// `s_{k'_j}` applied with coefficients from `M^(j)`.
    pub fn apply(&mut self, j: usize, x: &DimVector) -> DimVector {
        let k = self.vertex(j);
        reflect_unchecked(&self.state(j).quiver, k, x)
    }

    /// `s_1^- ... s_t^- (x)`, folding from `M^(t-1)` down to `M^(0)`.
    /// Returns `None` as soon as an intermediate vector goes negative.
    pub fn pull_back(&mut self, t: usize, x: &DimVector) -> Option<DimVector> {
        let mut v = x.clone();
        for j in (0..t).rev() {
            v = self.apply(j, &v);
            if v.has_negative() {
                return None;
            }
        }
        Some(v)
    }
}

impl Iterator for CoxeterTower {
    type Item = (SpeciesState, usize);

    /// Yields `(M^(j), k'_j)` for `j = 0, 1, ...`.
    fn next(&mut self) -> Option<Self::Item> {
        let j = self.cursor;
        self.cursor += 1;
        let k = self.vertex(j);
        Some((self.state(j).clone(), k))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Finiteness {
    pub finite: bool,
    /// Number of tower steps after which every source simple has left the
    /// positive cone.
    pub m: Option<usize>,
}

fn hereditary_view(q: &Quiver) -> Result<Quiver> {
    match q.mode() {
        Mode::Hereditary => Ok(q.clone()),
        Mode::General => q.with_mode(Mode::Hereditary),
    }
}

/// Decides representation-finiteness and computes the tower bound `m`.
pub fn representation_finiteness(q: &Quiver, cap: usize) -> Result<Finiteness> {
    let q = hereditary_view(q)?;
    let mut tower = CoxeterTower::new(&q)?;
    if classify(&q)? == DiagramType::Unknown {
        return Ok(Finiteness {
            finite: false,
            m: None,
        });
    }
    let n = q.vertex_count();
    let mut tracked: Vec<DimVector> = q
        .sources()
        .into_iter()
        .map(|i| DimVector::unit(n, i))
        .collect();
    let mut pending: Vec<bool> = vec![true; tracked.len()];
    for j in 1..=cap {
        for (x, open) in tracked.iter_mut().zip(pending.iter_mut()) {
            if *open {
                *x = tower.apply(j - 1, x);
                if x.has_negative() {
                    *open = false;
                }
            }
        }
        if pending.iter().all(|open| !open) {
            return Ok(Finiteness {
                finite: true,
                m: Some(j),
            });
        }
    }
    Err(Error::CapExceeded(cap))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumeratedIndec {
    pub vector: DimVector,
    pub t: usize,
    pub sink: VertexId,
}

/// Dimension vectors of all indecomposables, each produced from a simple at
/// a sink of some `M^(t)` and pulled back to `M^(0)`.
pub fn enumerate_indecomposables(q: &Quiver, cap: usize) -> Result<Vec<EnumeratedIndec>> {
    let fin = representation_finiteness(q, cap)?;
    let m = fin.m.ok_or(Error::NotRepresentationFinite)?;
    let q = hereditary_view(q)?;
    let n = q.vertex_count();
    let mut tower = CoxeterTower::new(&q)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for t in 0..m {
        let sinks = tower.state(t).quiver.sinks();
        for v in sinks {
            let Some(vector) = tower.pull_back(t, &DimVector::unit(n, v)) else {
                continue;
            };
            if vector.is_zero() || !seen.insert(vector.clone()) {
                continue;
            }
            out.push(EnumeratedIndec {
                vector,
                t,
                sink: q.vertices()[v].clone(),
            });
        }
    }
    Ok(out)
}

pub fn is_branch_vector(q: &Quiver, x: &DimVector, cap: usize) -> Result<bool> {
    Ok(enumerate_indecomposables(q, cap)?
        .iter()
        .any(|e| &e.vector == x))
}

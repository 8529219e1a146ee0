//! Matrix representations of quivers whose arrows all carry the trivial
//! bimodule, with reflection functors, radicals and tops.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quiver::{classify, DiagramType, Quiver, VertexId};
use crate::reflect::{self, CoxeterTower, DimVector};

/// `dims[v]` is the dimension at vertex `v`; `maps[a]` is the matrix of arrow
/// `a`, of shape `dims[target] x dims[source]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRep {
    quiver: Quiver,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl MatrixRep {
    pub fn new(quiver: Quiver, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if !quiver.is_trivially_labeled() {
            return Err(Error::NotSimplyLaced);
        }
        if dims.len() != quiver.vertex_count() || maps.len() != quiver.arrows().len() {
            return Err(Error::Shape("wrong number of spaces or maps".into()));
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::Shape(format!(
                    "arrow {}->{} has a {}x{} matrix, expected {}x{}",
                    quiver.name(a.source),
                    quiver.name(a.target),
                    m.rows(),
                    m.cols(),
                    dims[a.target],
                    dims[a.source]
                )));
            }
        }
        Ok(MatrixRep { quiver, dims, maps })
    }

    /// Representation with the given dimensions and all maps zero.
    pub fn zero_maps(quiver: Quiver, dims: Vec<usize>) -> Result<Self> {
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        MatrixRep::new(quiver, dims, maps)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector(self.dims.iter().map(|&d| d as i64).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Images of all arrows ending at `k`, side by side.
    fn incoming_images(&self, k: usize) -> Matrix {
        let blocks: Vec<&Matrix> = self
            .quiver
            .incoming(k)
            .map(|(i, _)| &self.maps[i])
            .collect();
        Matrix::hstack(&blocks, self.dims[k])
    }
}

pub fn simple_rep(q: &Quiver, k: usize) -> Result<MatrixRep> {
    if k >= q.vertex_count() {
        return Err(Error::UnknownVertex(k.to_string()));
    }
    let mut dims = vec![0; q.vertex_count()];
    dims[k] = 1;
    MatrixRep::zero_maps(q.clone(), dims)
}

/// `S_k^+`: the new space at `k` is the kernel of the sum of incoming maps,
/// mapping to each neighbor by the coordinate projection.
pub fn reflect_rep_sink(r: &MatrixRep, k: usize) -> Result<MatrixRep> {
    let q = &r.quiver;
    if k >= q.vertex_count() {
        return Err(Error::UnknownVertex(k.to_string()));
    }
    if !q.is_sink(k) {
        return Err(Error::NotASink(q.name(k).to_string()));
    }
    let kernel = r.incoming_images(k).kernel();
    let mut dims = r.dims.clone();
    dims[k] = kernel.cols();
    let mut maps = r.maps.clone();
    let mut offset = 0;
    for (i, a) in q.incoming(k) {
        let d = r.dims[a.source];
        maps[i] = kernel.row_block(offset, d);
        offset += d;
    }
    MatrixRep::new(q.reversed_at(k, 1), dims, maps)
}

/// `S_k^-`: the new space at `k` is the cokernel of the stacked outgoing
/// maps, each neighbor mapping in through the quotient.
pub fn reflect_rep_source(r: &MatrixRep, k: usize) -> Result<MatrixRep> {
    let q = &r.quiver;
    if k >= q.vertex_count() {
        return Err(Error::UnknownVertex(k.to_string()));
    }
    if !q.is_source(k) {
        return Err(Error::NotASource(q.name(k).to_string()));
    }
    let outgoing: Vec<(usize, usize)> = q.outgoing(k).map(|(i, a)| (i, a.target)).collect();
    let blocks: Vec<&Matrix> = outgoing.iter().map(|&(i, _)| &r.maps[i]).collect();
    let quotient = Matrix::vstack(&blocks, r.dims[k]).left_null();
    let mut dims = r.dims.clone();
    dims[k] = quotient.rows();
    let mut maps = r.maps.clone();
    let mut offset = 0;
    for (i, target) in outgoing {
        let d = r.dims[target];
        maps[i] = quotient.col_block(offset, d);
        offset += d;
    }
    MatrixRep::new(q.reversed_at(k, -1), dims, maps)
}

/// A subrepresentation: `bases[v]` has independent columns spanning `Y_v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubRep {
    bases: Vec<Matrix>,
}

impl SubRep {
    /// Checks shapes, independence and closure under the arrow maps.
    pub fn new(r: &MatrixRep, bases: Vec<Matrix>) -> Result<Self> {
        if bases.len() != r.dims.len() {
            return Err(Error::IncompatibleSubrep);
        }
        for (b, &d) in bases.iter().zip(&r.dims) {
            if b.rows() != d || !b.is_injective() {
                return Err(Error::IncompatibleSubrep);
            }
        }
        for (a, m) in r.quiver.arrows().iter().zip(&r.maps) {
            if !bases[a.target].spans(&m.mul(&bases[a.source])) {
                return Err(Error::IncompatibleSubrep);
            }
        }
        Ok(SubRep { bases })
    }

    /// Smallest subrepresentation containing the given vectors.
    pub fn generated(r: &MatrixRep, seeds: Vec<Matrix>) -> Result<Self> {
        if seeds.len() != r.dims.len() || seeds.iter().zip(&r.dims).any(|(s, &d)| s.rows() != d) {
            return Err(Error::IncompatibleSubrep);
        }
        let mut bases: Vec<Matrix> = seeds.iter().map(Matrix::column_basis).collect();
        loop {
            let mut grew = false;
            for (a, m) in r.quiver.arrows().iter().zip(&r.maps) {
                let image = m.mul(&bases[a.source]);
                if !bases[a.target].spans(&image) {
                    let t = a.target;
                    bases[t] = Matrix::hstack(&[&bases[t], &image], r.dims[t]).column_basis();
                    grew = true;
                }
            }
            if !grew {
                return SubRep::new(r, bases);
            }
        }
    }

    pub fn bases(&self) -> &[Matrix] {
        &self.bases
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Matrix::cols).collect()
    }
}

/// `rad X`: zero at sources, the sum of incoming images elsewhere.
pub fn radical(r: &MatrixRep) -> SubRep {
    let bases = (0..r.dims.len())
        .map(|k| {
            if r.quiver.is_source(k) {
                Matrix::zeros(r.dims[k], 0)
            } else {
                r.incoming_images(k).column_basis()
            }
        })
        .collect();
    SubRep { bases }
}

pub fn top_dims(r: &MatrixRep) -> DimVector {
    let rad = radical(r);
    DimVector(
        r.dims
            .iter()
            .zip(rad.dims())
            .map(|(&d, y)| (d - y) as i64)
            .collect(),
    )
}

pub fn is_multiplicity_free_top(r: &MatrixRep) -> bool {
    top_dims(r).as_slice().iter().all(|&t| t <= 1)
}

/// `Y` is small iff it vanishes at sources and lies inside the incoming
/// images everywhere else.
pub fn is_small_subrep(r: &MatrixRep, y: &SubRep) -> Result<bool> {
    let y = SubRep::new(r, y.bases.clone())?;
    Ok((0..r.dims.len()).all(|k| {
        if r.quiver.is_source(k) {
            y.bases[k].cols() == 0
        } else {
            r.incoming_images(k).spans(&y.bases[k])
        }
    }))
}

/// `arm[0]` is the attaching vertex `k`; the rest runs outward to a leaf.
fn check_arm(q: &Quiver, arm: &[usize]) -> Result<()> {
    if arm.is_empty() || arm.iter().any(|&v| v >= q.vertex_count()) {
        return Err(Error::NotAnArm);
    }
    let members: BTreeSet<usize> = arm.iter().copied().collect();
    if members.len() != arm.len() {
        return Err(Error::NotAnArm);
    }
    for (pos, &v) in arm.iter().enumerate() {
        let mut expected: BTreeSet<usize> = BTreeSet::new();
        if pos > 0 {
            expected.insert(arm[pos - 1]);
        }
        if pos + 1 < arm.len() {
            expected.insert(arm[pos + 1]);
        }
        let nbrs: BTreeSet<usize> = q.neighbors(v).into_iter().collect();
        let inside: BTreeSet<usize> = nbrs.intersection(&members).copied().collect();
        if inside != expected || (pos > 0 && nbrs != expected) {
            return Err(Error::NotAnArm);
        }
    }
    Ok(())
}

/// Every maximal arm of a tree: from each vertex, each direction that
/// reaches a leaf through vertices of degree at most two.
pub fn arms(q: &Quiver) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 0..q.vertex_count() {
        for first in q.neighbors(k) {
            let mut arm = vec![k, first];
            let (mut prev, mut cur) = (k, first);
            loop {
                let next: Vec<usize> = q
                    .neighbors(cur)
                    .into_iter()
                    .filter(|&w| w != prev)
                    .collect();
                match next.as_slice() {
                    [] => break,
                    [w] => {
                        arm.push(*w);
                        prev = cur;
                        cur = *w;
                    }
                    _ => {
                        arm.clear();
                        break;
                    }
                }
            }
            if !arm.is_empty() && check_arm(q, &arm).is_ok() {
                out.push(arm);
            }
        }
    }
    out
}

/// Arrows of the arm pointing towards `arm[0]` must be injective, the others
/// surjective.
pub fn is_conical_on_arm(r: &MatrixRep, arm: &[usize]) -> Result<bool> {
    check_arm(&r.quiver, arm)?;
    for w in arm.windows(2) {
        let (near, far) = (w[0], w[1]);
        let (i, a) = r
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .find(|(_, a)| {
                (a.source, a.target) == (near, far) || (a.source, a.target) == (far, near)
            })
            .ok_or(Error::NotAnArm)?;
        let m = &r.maps[i];
        let ok = if a.target == near {
            m.is_injective()
        } else {
            m.is_surjective()
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumeratedRep {
    pub rep: MatrixRep,
    pub t: usize,
    pub sink: VertexId,
}

/// All indecomposables of a simply-laced Dynkin quiver, built by applying
/// `S^-` along the tower to simples at sinks of each `M^(t)`.
pub fn enumerate_indec_reps(q: &Quiver, cap: usize) -> Result<Vec<EnumeratedRep>> {
    if !q.is_trivially_labeled() {
        return Err(Error::NotSimplyLaced);
    }
    let kind = classify(q)?;
    if kind == DiagramType::Unknown {
        return Err(Error::NotRepresentationFinite);
    }
    let m = reflect::representation_finiteness(q, cap)?
        .m
        .ok_or(Error::NotRepresentationFinite)?;
    let mut tower = CoxeterTower::new(q)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for t in 0..m {
        let state = tower.state(t).quiver.clone();
        'seed: for v in state.sinks() {
            let mut rep = simple_rep(&state, v)?;
            for j in (0..t).rev() {
                rep = reflect_rep_source(&rep, tower.vertex(j))?;
                if rep.is_zero() {
                    continue 'seed;
                }
            }
            if seen.insert(rep.dims.clone()) {
                out.push(EnumeratedRep {
                    rep,
                    t,
                    sink: q.vertices()[v].clone(),
                });
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepSummary {
    pub dims: DimVector,
    pub top: DimVector,
    pub t: usize,
    pub sink: VertexId,
}

impl EnumeratedRep {
    pub fn summary(&self) -> RepSummary {
        RepSummary {
            dims: self.rep.dim_vector(),
            top: top_dims(&self.rep),
            t: self.t,
            sink: self.sink.clone(),
        }
    }
}

use std::fmt;

use serde::{Serialize, Serializer};

use super::{Mode, Quiver};
use crate::error::{Error, Result};

/// Coxeter diagram family of a connected valued quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagramType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
    H3,
    H4,
    I2(usize),
    Unknown,
}

impl DiagramType {
    pub fn is_finite(self) -> bool {
        self != DiagramType::Unknown
    }

    /// Types whose symmetrized form is positive definite.
    pub fn is_dynkin(self) -> bool {
        !matches!(
            self,
            DiagramType::H3 | DiagramType::H4 | DiagramType::I2(_) | DiagramType::Unknown
        )
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(
            self,
            DiagramType::A(_)
                | DiagramType::D(_)
                | DiagramType::E6
                | DiagramType::E7
                | DiagramType::E8
        )
    }
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramType::A(n) => write!(f, "A{n}"),
            DiagramType::B(n) => write!(f, "B{n}"),
            DiagramType::D(n) => write!(f, "D{n}"),
            DiagramType::E6 => f.write_str("E6"),
            DiagramType::E7 => f.write_str("E7"),
            DiagramType::E8 => f.write_str("E8"),
            DiagramType::F4 => f.write_str("F4"),
            DiagramType::G2 => f.write_str("G2"),
            DiagramType::H3 => f.write_str("H3"),
            DiagramType::H4 => f.write_str("H4"),
            DiagramType::I2(p) => write!(f, "I2({p})"),
            DiagramType::Unknown => f.write_str("Unknown"),
        }
    }
}

impl Serialize for DiagramType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Shape of the underlying graph of a connected quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum TreeShape {
    /// Vertices in path order, starting from the end with the smaller index.
    Path(Vec<usize>),
    /// One vertex of degree 3; arms run outward from the center and are
    /// sorted by length, then by first vertex.
    Star {
        center: usize,
        arms: Vec<Vec<usize>>,
    },
    Other,
}

pub(crate) fn tree_shape(q: &Quiver) -> TreeShape {
    let n = q.vertex_count();
    if n == 0 || q.arrows().len() != n - 1 || !q.is_connected() {
        return TreeShape::Other;
    }
    if q.arrows().iter().any(|a| a.source == a.target) {
        return TreeShape::Other;
    }
    let degree: Vec<usize> = (0..n).map(|v| q.neighbors(v).len()).collect();
    let walk = |from: usize, first: usize| {
        let mut arm = vec![first];
        let (mut prev, mut cur) = (from, first);
        while degree[cur] == 2 {
            let next = q.neighbors(cur).into_iter().find(|&w| w != prev).unwrap();
            arm.push(next);
            prev = cur;
            cur = next;
        }
        arm
    };
    let branch: Vec<usize> = (0..n).filter(|&v| degree[v] >= 3).collect();
    match branch.as_slice() {
        [] if n == 1 => TreeShape::Path(vec![0]),
        [] => {
            let start = (0..n).find(|&v| degree[v] == 1).unwrap();
            let mut path = vec![start];
            path.extend(walk(start, q.neighbors(start)[0]));
            TreeShape::Path(path)
        }
        [c] if degree[*c] == 3 => {
            let mut arms: Vec<Vec<usize>> =
                q.neighbors(*c).into_iter().map(|w| walk(*c, w)).collect();
            arms.sort_by_key(|arm| (arm.len(), arm[0]));
            TreeShape::Star { center: *c, arms }
        }
        _ => TreeShape::Other,
    }
}

/// Matches the underlying Coxeter valued graph of a connected hereditary
/// quiver against the finite Coxeter diagrams.
pub fn classify(q: &Quiver) -> Result<DiagramType> {
    if q.mode() != Mode::Hereditary {
        return Err(Error::NotHereditaryMode);
    }
    if !q.is_connected() {
        return Err(Error::NotConnected);
    }
    let Some(labels) = q
        .arrows()
        .iter()
        .map(|a| a.label.coxeter_label())
        .collect::<Option<Vec<usize>>>()
    else {
        return Ok(DiagramType::Unknown);
    };
    let label_between = |u: usize, v: usize| {
        q.arrows()
            .iter()
            .zip(&labels)
            .find(|(a, _)| (a.source, a.target) == (u, v) || (a.source, a.target) == (v, u))
            .map(|(_, m)| *m)
            .unwrap()
    };
    Ok(match tree_shape(q) {
        TreeShape::Path(path) => {
            let n = path.len();
            let m: Vec<usize> = path.windows(2).map(|w| label_between(w[0], w[1])).collect();
            let heavy: Vec<usize> = (0..m.len()).filter(|&i| m[i] != 3).collect();
            match heavy.as_slice() {
                [] => DiagramType::A(n),
                [_] if n == 2 => match m[0] {
                    4 => DiagramType::B(2),
                    6 => DiagramType::G2,
                    p if p == 5 || p >= 7 => DiagramType::I2(p),
                    _ => DiagramType::Unknown,
                },
                [i] => {
                    let terminal = *i == 0 || *i == m.len() - 1;
                    match (m[*i], n, terminal) {
                        (4, _, true) => DiagramType::B(n),
                        (4, 4, false) => DiagramType::F4,
                        (5, 3, true) => DiagramType::H3,
                        (5, 4, true) => DiagramType::H4,
                        _ => DiagramType::Unknown,
                    }
                }
                _ => DiagramType::Unknown,
            }
        }
        TreeShape::Star { arms, .. } if labels.iter().all(|&m| m == 3) => {
            let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
            match lens.as_slice() {
                [1, 1, k] => DiagramType::D(k + 3),
                [1, 2, 2] => DiagramType::E6,
                [1, 2, 3] => DiagramType::E7,
                [1, 2, 4] => DiagramType::E8,
                _ => DiagramType::Unknown,
            }
        }
        _ => DiagramType::Unknown,
    })
}

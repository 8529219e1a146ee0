//! Symmetrizers, the bilinear form and positive roots of valued graphs.

use std::collections::{BTreeSet, VecDeque};

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::{catalog, classify, Quiver};
use crate::reflect::DimVector;

/// Safety bound on the number of roots produced by the orbit search.
pub const ORBIT_CAP: usize = 10_000;

/// Positive integers `f_i` with `d_ij f_j = d_ji f_i` on every arrow,
/// reduced to gcd one on each component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Symmetrizer(pub Vec<i64>);

impl Symmetrizer {
    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }
}

/// Valuation of the edge `{u, v}` read as `(d_uv, d_vu)` from offset 0.
fn valuation(q: &Quiver, u: usize, v: usize) -> Option<(i64, i64)> {
    q.arrows().iter().find_map(|a| {
        let (r, l) = (a.label.r_dim() as i64, a.label.l_dim() as i64);
        if (a.source, a.target) == (u, v) {
            Some((r, l))
        } else if (a.source, a.target) == (v, u) {
            Some((l, r))
        } else {
            None
        }
    })
}

pub fn symmetrizer(q: &Quiver) -> Result<Symmetrizer> {
    let n = q.vertex_count();
    let mut f: Vec<Option<Ratio<i64>>> = vec![None; n];
    let mut result = vec![0i64; n];
    for part in components_of(q) {
        let root = part[0];
        f[root] = Some(Ratio::from_integer(1));
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            let fi = f[i].unwrap();
            for j in q.neighbors(i) {
                let (dij, dji) = valuation(q, i, j).unwrap();
                let want = fi * Ratio::new(dji, dij);
                match f[j] {
                    None => {
                        f[j] = Some(want);
                        queue.push_back(j);
                    }
                    Some(fj) if fj != want => return Err(Error::NotSymmetrizable),
                    Some(_) => {}
                }
            }
        }
        let lcm = part
            .iter()
            .fold(1i64, |acc, &v| acc.lcm(f[v].unwrap().denom()));
        let ints: Vec<i64> = part
            .iter()
            .map(|&v| (f[v].unwrap() * lcm).to_integer())
            .collect();
        let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        for (&v, x) in part.iter().zip(ints) {
            result[v] = x / g;
        }
    }
    Ok(Symmetrizer(result))
}

fn components_of(q: &Quiver) -> Vec<Vec<usize>> {
    let n = q.vertex_count();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut part = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for w in q.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    part.push(w);
                    stack.push(w);
                }
            }
        }
        part.sort_unstable();
        parts.push(part);
    }
    parts
}

/// `B(x, y) = sum f_i x_i y_i - 1/2 sum over ordered adjacent (i, j) of
/// d_ij f_j x_i y_j`.
pub fn bilinear(q: &Quiver, f: &Symmetrizer, x: &DimVector, y: &DimVector) -> Ratio<i64> {
    let diag: i64 = (0..q.vertex_count()).map(|i| f.get(i) * x[i] * y[i]).sum();
    let off: i64 = q
        .arrows()
        .iter()
        .map(|a| {
            let (i, j) = (a.source, a.target);
            let (dij, dji) = (a.label.r_dim() as i64, a.label.l_dim() as i64);
            dij * f.get(j) * x[i] * y[j] + dji * f.get(i) * x[j] * y[i]
        })
        .sum();
    Ratio::from_integer(diag) - Ratio::new(off, 2)
}

/// `s_k x = x - (2 B(x, e_k) / B(e_k, e_k)) e_k`.
pub fn weyl_reflect(q: &Quiver, f: &Symmetrizer, k: usize, x: &DimVector) -> Result<DimVector> {
    let n = q.vertex_count();
    let ek = DimVector::unit(n, k);
    let norm = bilinear(q, f, &ek, &ek);
    if norm == Ratio::from_integer(0) {
        return Err(Error::DegenerateVertex(q.name(k).to_string()));
    }
    let c = Ratio::from_integer(2) * bilinear(q, f, x, &ek) / norm;
    if !c.is_integer() {
        return Err(Error::NotSymmetrizable);
    }
    let mut y = x.clone();
    y[k] -= c.to_integer();
    Ok(y)
}

/// Sorted set of positive roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RootSet(Vec<DimVector>);

impl RootSet {
    pub fn new(roots: impl IntoIterator<Item = DimVector>) -> Self {
        let set: BTreeSet<DimVector> = roots.into_iter().collect();
        RootSet(set.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: &DimVector) -> bool {
        self.0.binary_search(x).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, DimVector> {
        self.0.iter()
    }

    pub fn highest(&self) -> Option<&DimVector> {
        self.0.iter().max_by_key(|r| r.total())
    }
}

impl<'a> IntoIterator for &'a RootSet {
    type Item = &'a DimVector;
    type IntoIter = std::slice::Iter<'a, DimVector>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Twice the symmetrized Gram matrix.
fn gram(q: &Quiver, f: &Symmetrizer) -> Vec<Vec<i128>> {
    let n = q.vertex_count();
    let mut g = vec![vec![0i128; n]; n];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = 2 * f.get(i) as i128;
    }
    for a in q.arrows() {
        let s = a.label.r_dim() as i128 * f.get(a.target) as i128;
        g[a.source][a.target] -= s;
        g[a.target][a.source] -= s;
    }
    g
}

/// Sylvester's criterion with fraction-free elimination.
pub fn is_positive_definite(q: &Quiver, f: &Symmetrizer) -> bool {
    let mut m = gram(q, f);
    let n = m.len();
    let mut prev = 1i128;
    for k in 0..n {
        // after k steps of Bareiss, m[k][k] is the (k+1)-th leading minor
        if m[k][k] <= 0 {
            return false;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    true
}

/// Orbit of the simple roots under the Weyl group, positive part only.
pub fn positive_roots(q: &Quiver) -> Result<RootSet> {
    let kind = classify(q)?;
    let f = symmetrizer(q)?;
    if !is_positive_definite(q, &f) {
        return Err(Error::NotDynkin(kind));
    }
    let n = q.vertex_count();
    let mut seen: BTreeSet<DimVector> = (0..n).map(|k| DimVector::unit(n, k)).collect();
    let mut queue: VecDeque<DimVector> = seen.iter().cloned().collect();
    while let Some(x) = queue.pop_front() {
        for k in 0..n {
            let y = weyl_reflect(q, &f, k, &x)?;
            if y.is_nonnegative() && !y.is_zero() && seen.insert(y.clone()) {
                if seen.len() > ORBIT_CAP {
                    return Err(Error::CapExceeded(ORBIT_CAP));
                }
                queue.push_back(y);
            }
        }
    }
    Ok(RootSet::new(seen))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RootFamily {
    A,
    B,
    C,
    D,
}

impl RootFamily {
    /// The labeled diagram the closed forms refer to.
    pub fn canonical_quiver(self, n: usize) -> Result<Quiver> {
        match (self, n) {
            (RootFamily::A, 1..) => Ok(catalog::a(n)),
            (RootFamily::B, 2..) => Ok(catalog::b(n)),
            (RootFamily::C, 2..) => Ok(catalog::c(n)),
            (RootFamily::D, 4..) => Ok(catalog::d(n)),
            _ => Err(Error::UnsupportedType),
        }
    }
}

/// Root lists written out per family, indexed by the vertices of
/// [`RootFamily::canonical_quiver`].
pub fn closed_form_roots(family: RootFamily, n: usize) -> Result<RootSet> {
    let q = family.canonical_quiver(n)?;
    // coefficient vectors over simple roots e_1..e_n
    let mut coeffs: Vec<Vec<i64>> = Vec::new();
    let mut push = |terms: &[(usize, usize, i64)]| {
        let mut v = vec![0i64; n + 1];
        for &(lo, hi, c) in terms {
            for slot in v.iter_mut().take(hi + 1).skip(lo) {
                *slot += c;
            }
        }
        coeffs.push(v);
    };
    match family {
        RootFamily::A => {
            for i in 1..=n {
                for j in i + 1..=n + 1 {
                    push(&[(i, j - 1, 1)]);
                }
            }
        }
        RootFamily::B => {
            for i in 1..=n {
                push(&[(i, n, 1)]);
            }
            for i in 1..=n {
                for j in i + 1..=n {
                    push(&[(i, j - 1, 1)]);
                    push(&[(i, j - 1, 1), (j, n, 2)]);
                }
            }
        }
        RootFamily::C => {
            for i in 1..=n {
                for j in i + 1..=n {
                    push(&[(i, j - 1, 1)]);
                    push(&[(i, j - 1, 1), (j, n - 1, 2), (n, n, 1)]);
                }
                push(&[(i, n - 1, 2), (n, n, 1)]);
            }
        }
        RootFamily::D => {
            for i in 1..n {
                for k in i..n {
                    push(&[(i, k, 1)]);
                }
            }
            for i in 1..=n.saturating_sub(3) {
                for k in i..=n - 3 {
                    push(&[(i, k, 1), (k + 1, n - 2, 2), (n - 1, n, 1)]);
                }
            }
            for i in 1..=n - 2 {
                push(&[(i, n - 2, 1), (n, n, 1)]);
                push(&[(i, n, 1)]);
            }
            push(&[(n, n, 1)]);
        }
    }
    let mut slot = vec![0usize; n + 1];
    for (i, s) in slot.iter_mut().enumerate().skip(1) {
        *s = q.index_of(&i.to_string()).expect("canonical vertex names");
    }
    Ok(RootSet::new(coeffs.into_iter().map(|c| {
        let mut v = DimVector::zero(n);
        for i in 1..=n {
            v[slot[i]] = c[i];
        }
        v
    })))
}

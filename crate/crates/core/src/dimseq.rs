//! Dimension sequences of bimodules.
//!
//! A sequence `(a_1, ..., a_m)` is a dimension sequence when the two
//! three-term recurrences `a_i x_i = x_{i-1} + x_{i+1}` and
//! `a_i y_i = y_{i-1} + y_{i+1}` started at `x_0 = -1, x_1 = 0` and
//! `y_0 = 0, y_1 = 1` end at `x_m = 1, y_m = 0` while staying nonnegative.
//! Arrow labels must satisfy this for every rotation, see
//! [`validate_cyclic`].

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};

/// Default entry cap used by [`generate`] callers that have no opinion.
pub const DEFAULT_CAP: u32 = 16;

/// Both recurrence solutions for a candidate sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimSeqWitness {
    pub seq: Vec<u32>,
    pub x: Vec<i64>,
    pub y: Vec<i64>,
    pub valid: bool,
}

/// Dimension vector `(dim over F, dim over G)` of an indecomposable module of
/// the triangular ring of a bimodule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Rank2Pair {
    pub x: i64,
    pub y: i64,
}

impl Rank2Pair {
    pub const fn new(x: i64, y: i64) -> Self {
        Rank2Pair { x, y }
    }
}

impl std::fmt::Display for Rank2Pair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// One equivalence class under rotation and reversal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimSeqClass {
    pub canonical: Vec<u32>,
    pub members: Vec<Vec<u32>>,
}

fn check_shape(seq: &[u32]) -> Result<()> {
    if seq.len() < 3 {
        return Err(Error::TooShort(seq.len()));
    }
    if seq.contains(&0) {
        return Err(Error::NonPositiveEntry);
    }
    Ok(())
}

/// Runs both recurrences forward. `a_m` is never consumed.
pub fn validate(seq: &[u32]) -> Result<DimSeqWitness> {
    check_shape(seq)?;
    let m = seq.len();
    let mut x = vec![-1i64, 0];
    let mut y = vec![0i64, 1];
    for i in 1..m {
        let a = seq[i - 1] as i64;
        x.push(a * x[i] - x[i - 1]);
        y.push(a * y[i] - y[i - 1]);
    }
    let valid =
        x[m] == 1 && y[m] == 0 && x[1..].iter().all(|&v| v >= 0) && y[1..].iter().all(|&v| v >= 0);
    Ok(DimSeqWitness {
        seq: seq.to_vec(),
        x,
        y,
        valid,
    })
}

fn rotate(seq: &[u32], r: usize) -> Vec<u32> {
    let m = seq.len();
    (0..m).map(|i| seq[(i + r) % m]).collect()
}

/// True when every rotation of `seq` passes [`validate`].
pub fn validate_cyclic(seq: &[u32]) -> Result<bool> {
    check_shape(seq)?;
    for r in 0..seq.len() {
        if !validate(&rotate(seq, r))?.valid {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Lexicographically least rotation of `seq` or of its reversal.
pub fn canonical_class(seq: &[u32]) -> Vec<u32> {
    let reversed: Vec<u32> = seq.iter().rev().copied().collect();
    (0..seq.len().max(1))
        .flat_map(|r| [rotate(seq, r), rotate(&reversed, r)])
        .min()
        .unwrap_or_default()
}

/// Exhaustive search for cyclically valid sequences of length `m` whose
/// entries lie in `1..=cap`, grouped by [`canonical_class`].
pub fn generate(m: usize, cap: u32) -> Result<Vec<DimSeqClass>> {
    if m < 3 {
        return Err(Error::TooShort(m));
    }
    let mut found = Vec::new();
    let mut prefix = Vec::with_capacity(m);
    search(m, cap, &mut prefix, (-1, 0), (0, 1), &mut found);

    let mut classes: BTreeMap<Vec<u32>, Vec<Vec<u32>>> = BTreeMap::new();
    for seq in found {
        if validate_cyclic(&seq)? {
            classes.entry(canonical_class(&seq)).or_default().push(seq);
        }
    }
    Ok(classes
        .into_iter()
        .map(|(canonical, mut members)| {
            members.sort();
            members.dedup();
            DimSeqClass { canonical, members }
        })
        .collect())
}

// `x` and `y` hold (x_{i-1}, x_i) and (y_{i-1}, y_i) for i = prefix.len() + 1.
//
// Pruning: the recurrences preserve x_{i+1} y_i - x_i y_{i+1} = 1, so a valid
// witness has y_{m-1} = 1, and running the y-recurrence backwards gives
// y_{i-1} <= cap * y_i. Hence y_i <= cap^(m-1-i).
fn search(
    m: usize,
    cap: u32,
    prefix: &mut Vec<u32>,
    x: (i64, i64),
    y: (i64, i64),
    out: &mut Vec<Vec<u32>>,
) {
    let i = prefix.len() + 1;
    if i == m {
        if x.1 == 1 && y.1 == 0 {
            for last in 1..=cap {
                let mut seq = prefix.clone();
                seq.push(last);
                out.push(seq);
            }
        }
        return;
    }
    let bound = y_bound(cap, m, i + 1);
    for a in 1..=cap {
        let nx = a as i64 * x.1 - x.0;
        let ny = a as i64 * y.1 - y.0;
        if nx < 0 || ny < 0 {
            continue;
        }
        if ny > bound {
            // ny is nondecreasing in a
            break;
        }
        prefix.push(a);
        search(m, cap, prefix, (x.1, nx), (y.1, ny), out);
        prefix.pop();
    }
}

fn y_bound(cap: u32, m: usize, index: usize) -> i64 {
    if index >= m {
        return 0;
    }
    (0..m - 1 - index).fold(1i64, |acc, _| acc.saturating_mul(cap as i64))
}

/// Dimension vectors `P_0, ..., P_{m-1}` of the indecomposables over the
/// triangular ring of a bimodule with dualization sequence `seq`.
pub fn indec_dimvectors(seq: &[u32]) -> Result<Vec<Rank2Pair>> {
    if !validate(seq)?.valid {
        return Err(Error::InvalidSequence(seq.to_vec()));
    }
    let m = seq.len();
    let mut pairs = vec![Rank2Pair::new(0, 1), Rank2Pair::new(1, seq[0] as i64)];
    for t in 1..m - 1 {
        let d = seq[t] as i64;
        let (prev, cur) = (pairs[t - 1], pairs[t]);
        pairs.push(Rank2Pair::new(d * cur.x - prev.x, d * cur.y - prev.y));
    }
    let closing = {
        let d = seq[m - 1] as i64;
        let (prev, cur) = (pairs[m - 2], pairs[m - 1]);
        Rank2Pair::new(d * cur.x - prev.x, d * cur.y - prev.y)
    };
    let all_nonneg = pairs.iter().all(|p| p.x >= 0 && p.y >= 0);
    if !all_nonneg || (closing.x >= 0 && closing.y >= 0) {
        return Err(Error::InvalidSequence(seq.to_vec()));
    }
    Ok(pairs)
}

/// The unique Koethe shape `(m-2, 1, 2, ..., 2, 1)` of length `m`.
pub fn koethe_shape(m: usize) -> Vec<u32> {
    assert!(m >= 3, "dimension sequences have length at least 3");
    let mut seq = Vec::with_capacity(m);
    seq.push(m as u32 - 2);
    seq.push(1);
    seq.extend(std::iter::repeat_n(2, m - 3));
    seq.push(1);
    seq
}

/// Whether the rank-two ring with this dualization sequence is right Koethe.
pub fn is_koethe_rank2(seq: &[u32]) -> bool {
    seq.len() >= 3 && seq == koethe_shape(seq.len()).as_slice()
}

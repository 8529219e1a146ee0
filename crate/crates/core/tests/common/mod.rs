//! Fixtures, strategies and per-case checks shared by the property suite and
//! the acceptance runner.

#![allow(dead_code)]

use std::collections::BTreeSet;

use koethe_core::quiver::catalog;
use koethe_core::reflect::{self, SpeciesState, DEFAULT_STEP_CAP};
use koethe_core::rep::{self, SubRep};
use koethe_core::roots;
use koethe_core::{ArrowLabel, CoxeterTower, DimVector, Matrix, Mode, Quiver};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn dv(v: &[i64]) -> DimVector {
    DimVector(v.to_vec())
}

/// Canonical representatives of every finite type up to seven vertices.
pub fn finite_types() -> Vec<Quiver> {
    let mut out: Vec<Quiver> = (1..=7).map(catalog::a).collect();
    out.extend((2..=6).map(catalog::b));
    out.extend((2..=6).map(catalog::c));
    out.extend((4..=7).map(catalog::d));
    out.extend([
        catalog::e6(),
        catalog::e7(),
        catalog::f4(),
        catalog::g2(),
        catalog::h3(),
        catalog::h4(),
        catalog::i2(5),
        catalog::i2(7),
        catalog::i2(8),
    ]);
    out
}

/// Simply-laced quivers small enough for exhaustive matrix enumeration.
pub fn simply_laced() -> Vec<Quiver> {
    let mut out: Vec<Quiver> = (2..=6).map(catalog::a).collect();
    out.extend((4..=7).map(catalog::d));
    out.push(catalog::e6());
    out.push(
        Quiver::from_arrows(&[("2", "1"), ("2", "3"), ("4", "3"), ("3", "5"), ("6", "5")]).unwrap(),
    );
    out.push(Quiver::from_arrows(&[("1", "2"), ("3", "2"), ("4", "2"), ("4", "5")]).unwrap());
    out
}

/// Labels a random quiver may carry.
pub fn label_pool() -> Vec<ArrowLabel> {
    let mut out = vec![ArrowLabel::trivial()];
    for seq in [
        &[2, 1, 2, 1][..],
        &[1, 2, 1, 2],
        &[1, 3, 1, 3, 1, 3],
        &[3, 1, 2, 2, 1],
        &[1, 2, 2, 2, 1, 4],
        &[1, 2, 3, 1, 2, 3],
    ] {
        out.push(ArrowLabel::sequence(seq.to_vec()).unwrap());
    }
    out.push(ArrowLabel::from_valuation(1, 4).unwrap());
    out.push(ArrowLabel::from_valuation(2, 2).unwrap());
    out
}

/// Random acyclic hereditary quiver: vertices get a random rank order and
/// each chosen edge runs from lower to higher rank.
pub fn arb_quiver(max_n: usize, labeled: bool) -> impl Strategy<Value = Quiver> {
    let pool = label_pool();
    (1..=max_n)
        .prop_flat_map(move |n| {
            let pairs = n * (n - 1) / 2;
            (
                prop::collection::btree_set("[a-z][a-z0-9_]{0,3}", n),
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
                prop::collection::vec((prop::bool::weighted(0.4), 0..label_pool().len()), pairs),
            )
        })
        .prop_map(move |(names, rank, edges)| {
            let names: Vec<String> = names.into_iter().collect();
            let n = names.len();
            let mut b = Quiver::builder();
            for v in &names {
                b = b.vertex(v.clone());
            }
            let mut e = edges.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    let (keep, label) = e.next().unwrap();
                    if !keep {
                        continue;
                    }
                    let (s, t) = if rank[i] < rank[j] { (i, j) } else { (j, i) };
                    let label = if labeled {
                        pool[label].clone()
                    } else {
                        ArrowLabel::trivial()
                    };
                    b = b.labeled(names[s].clone(), names[t].clone(), label);
                }
            }
            b.build().expect("rank-ordered edges are acyclic")
        })
}

/// Random general-mode quiver: loops and 2-cycles allowed.
pub fn arb_general_quiver(max_n: usize) -> impl Strategy<Value = Quiver> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                prop::collection::btree_set("[A-Z][a-z0-9]{0,2}", n),
                prop::collection::vec(prop::bool::weighted(0.3), n * n),
            )
        })
        .prop_map(|(names, edges)| {
            let names: Vec<String> = names.into_iter().collect();
            let n = names.len();
            let mut b = Quiver::builder().mode(Mode::General);
            for v in &names {
                b = b.vertex(v.clone());
            }
            for i in 0..n {
                for j in 0..n {
                    if edges[i * n + j] {
                        b = b.arrow(names[i].clone(), names[j].clone());
                    }
                }
            }
            b.build().expect("no parallel arrows")
        })
}

pub fn arb_any_quiver() -> impl Strategy<Value = Quiver> {
    prop_oneof![arb_quiver(8, true), arb_general_quiver(5)]
}

pub fn check_round_trip(q: &Quiver) -> Result<(), TestCaseError> {
    let text = koethe_core::format::emit_text(q);
    prop_assert_eq!(
        &koethe_core::format::parse(&text).unwrap(),
        q,
        "text:\n{}",
        text
    );
    let json = koethe_core::format::emit_json(q);
    prop_assert_eq!(&koethe_core::format::parse(&json).unwrap(), q);
    Ok(())
}

/// Picks stage `stage` of the tower of `q` and a sink `sink_pick` of it, and
/// checks that the sink reflection is an involution on `raw`.
pub fn check_involution(
    q: &Quiver,
    stage: usize,
    sink_pick: usize,
    raw: &[i64],
) -> Result<(), TestCaseError> {
    let mut tower = CoxeterTower::new(q).unwrap();
    let state: SpeciesState = tower.state(stage).clone();
    let sinks = state.quiver.sinks();
    let k = sinks[sink_pick % sinks.len()];
    let x = DimVector(raw[..q.vertex_count()].to_vec());
    let once = reflect::reflect_vector_at_sink(&state, k, &x).unwrap();
    let twice = reflect::reflect_vector_at_sink(&state, k, &once).unwrap();
    prop_assert_eq!(twice, x);
    Ok(())
}

/// B(s_k x, s_k y) = B(x, y) for every vertex k.
pub fn check_form_invariance(q: &Quiver, rx: &[i64], ry: &[i64]) -> Result<(), TestCaseError> {
    let n = q.vertex_count();
    let f = roots::symmetrizer(q).unwrap();
    let x = DimVector(rx[..n].to_vec());
    let y = DimVector(ry[..n].to_vec());
    let before = roots::bilinear(q, &f, &x, &y);
    for k in 0..n {
        let sx = roots::weyl_reflect(q, &f, k, &x).unwrap();
        let sy = roots::weyl_reflect(q, &f, k, &y).unwrap();
        prop_assert_eq!(roots::bilinear(q, &f, &sx, &sy), before, "vertex {}", k);
    }
    Ok(())
}

/// Finite-type quivers whose valuations are symmetrizable.
pub fn symmetrizable() -> Vec<Quiver> {
    finite_types()
        .into_iter()
        .filter(|q| roots::symmetrizer(q).is_ok())
        .collect()
}

/// One enumerated indecomposable together with its quiver.
pub struct Sample {
    pub rep: koethe_core::MatrixRep,
}

pub fn indecomposable_samples() -> Vec<Sample> {
    simply_laced()
        .iter()
        .flat_map(|q| rep::enumerate_indec_reps(q, DEFAULT_STEP_CAP).unwrap())
        .map(|e| Sample { rep: e.rep })
        .collect()
}

pub fn radical_is_small(r: &koethe_core::MatrixRep) -> bool {
    rep::is_small_subrep(r, &rep::radical(r)).unwrap()
}

/// Adds `raw` (truncated to the space at the chosen vertex) to the radical
/// and checks the generated subrepresentation is small exactly when the
/// vector already lay in the radical.
pub fn check_enlargement(
    r: &koethe_core::MatrixRep,
    vertex_pick: usize,
    raw: &[i64],
) -> Result<(), TestCaseError> {
    let dims = r.dims();
    let support: Vec<usize> = (0..dims.len()).filter(|&v| dims[v] > 0).collect();
    let k = support[vertex_pick % support.len()];
    let v: Vec<i64> = raw[..dims[k]].to_vec();
    prop_assume!(v.iter().any(|&c| c != 0));
    let rad = rep::radical(r);
    let extra = Matrix::from_cols(dims[k], &[v]);
    let inside = rad.bases()[k].spans(&extra);
    let seeds: Vec<Matrix> = rad
        .bases()
        .iter()
        .enumerate()
        .map(|(i, b)| {
            if i == k {
                Matrix::hstack(&[b, &extra], dims[k])
            } else {
                b.clone()
            }
        })
        .collect();
    let y = SubRep::generated(r, seeds).unwrap();
    prop_assert_eq!(rep::is_small_subrep(r, &y).unwrap(), inside);
    Ok(())
}

/// Every arm whose attaching vertex carries a nonzero space is conical.
pub fn conical_failures(r: &koethe_core::MatrixRep) -> Vec<Vec<usize>> {
    rep::arms(r.quiver())
        .into_iter()
        .filter(|arm| r.dims()[arm[0]] > 0)
        .filter(|arm| !rep::is_conical_on_arm(r, arm).unwrap())
        .collect()
}

pub fn vector_set(v: impl IntoIterator<Item = DimVector>) -> BTreeSet<DimVector> {
    v.into_iter().collect()
}

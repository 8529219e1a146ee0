//! End-to-end acceptance checks. Runs without the libtest harness and prints
//! one PASS/FAIL line per criterion; exits non-zero if any criterion fails.

#![allow(clippy::type_complexity)]

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use common::*;
use koethe_core::dimseq;
use koethe_core::koethe::{self, Condition, FailureReason};
use koethe_core::quiver::catalog;
use koethe_core::reflect::{self, DEFAULT_STEP_CAP};
use koethe_core::roots::{self, RootFamily};
use koethe_core::{classify, CoxeterTower, DiagramType, DimVector, Mode, Quiver};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const H3_SEQ: [u32; 5] = [3, 1, 2, 2, 1];

/// Pulls `seed` back from stage `t` one reflection at a time, keeping every
/// intermediate vector.
fn chain(q: &Quiver, t: usize, seed: &[i64]) -> Vec<DimVector> {
    let mut tower = CoxeterTower::new(q).unwrap();
    let mut x = dv(seed);
    let mut out = vec![x.clone()];
    for j in (0..t).rev() {
        x = tower.apply(j, &x);
        out.push(x.clone());
    }
    out
}

fn h3(first: (&str, &str), heavy: (&str, &str)) -> Quiver {
    Quiver::builder()
        .arrow(first.0, first.1)
        .seq(heavy.0, heavy.1, &H3_SEQ)
        .unwrap()
        .build()
        .unwrap()
}

fn golden_chains() -> Check {
    let cases: [(Quiver, usize, &[i64], Vec<[i64; 3]>); 4] = [
        (
            h3(("1", "2"), ("2", "3")),
            5,
            &[0, 0, 1],
            vec![
                [0, 0, 1],
                [0, 2, 1],
                [0, 2, 3],
                [2, 2, 3],
                [2, 3, 3],
                [2, 3, 6],
            ],
        ),
        (
            h3(("1", "2"), ("3", "2")),
            4,
            &[0, 0, 1],
            vec![[0, 0, 1], [0, 2, 1], [0, 2, 1], [2, 2, 1], [2, 3, 1]],
        ),
        (
            h3(("2", "1"), ("2", "3")),
            5,
            &[0, 1, 0],
            vec![
                [0, 1, 0],
                [0, 1, 2],
                [1, 1, 2],
                [1, 2, 2],
                [1, 2, 4],
                [1, 2, 4],
            ],
        ),
        (
            h3(("2", "1"), ("3", "2")),
            7,
            &[0, 1, 0],
            vec![
                [0, 1, 0],
                [1, 1, 0],
                [1, 1, 2],
                [1, 4, 2],
                [3, 4, 2],
                [3, 4, 2],
                [3, 5, 2],
                [2, 5, 2],
            ],
        ),
    ];
    for (i, (q, t, seed, expected)) in cases.iter().enumerate() {
        let seed_vertex = seed.iter().position(|&c| c == 1).unwrap();
        let mut tower = CoxeterTower::new(q).unwrap();
        ensure!(
            tower.state(*t).quiver.is_sink(seed_vertex),
            "case {}: seed vertex is not a sink at stage {t}",
            i + 1
        );
        let got = chain(q, *t, seed);
        let want: Vec<DimVector> = expected.iter().map(|v| dv(v)).collect();
        ensure!(got == want, "case {}: got {:?}", i + 1, got);
    }
    Ok(())
}

fn rank_two() -> Check {
    let yes = Quiver::builder()
        .seq("1", "2", &[2, 1, 2, 1])
        .unwrap()
        .build()
        .unwrap();
    let v = koethe::decide_hereditary(&yes).unwrap();
    ensure!(
        v.koethe && v.components[0].clause == Some(2),
        "(2,1,2,1): {v:?}"
    );
    let got = vector_set(
        reflect::enumerate_indecomposables(&yes, DEFAULT_STEP_CAP)
            .unwrap()
            .into_iter()
            .map(|e| e.vector),
    );
    let want = vector_set([dv(&[0, 1]), dv(&[1, 2]), dv(&[1, 1]), dv(&[1, 0])]);
    ensure!(got == want, "(2,1,2,1) vectors {got:?}");

    let no = Quiver::builder()
        .seq("1", "2", &[1, 2, 1, 2])
        .unwrap()
        .build()
        .unwrap();
    let v = koethe::decide_hereditary(&no).unwrap();
    ensure!(!v.koethe, "(1,2,1,2) should not be Koethe");
    ensure!(
        reflect::is_branch_vector(&no, &dv(&[2, 1]), DEFAULT_STEP_CAP).unwrap(),
        "(2,1) missing for (1,2,1,2)"
    );
    Ok(())
}

fn census() -> Check {
    let canon = |m| -> Vec<Vec<u32>> {
        dimseq::generate(m, dimseq::DEFAULT_CAP)
            .unwrap()
            .into_iter()
            .map(|c| c.canonical)
            .collect()
    };
    ensure!(canon(3) == vec![vec![1, 1, 1]], "m=3: {:?}", canon(3));
    ensure!(canon(4).len() == 1, "m=4: {:?}", canon(4));
    let five = canon(5);
    ensure!(
        five.len() == 1 && five[0] == dimseq::canonical_class(&H3_SEQ),
        "m=5: {five:?}"
    );
    let six: BTreeSet<Vec<u32>> = canon(6).into_iter().collect();
    let want: BTreeSet<Vec<u32>> = [
        vec![1, 2, 2, 2, 1, 4],
        vec![1, 2, 3, 1, 2, 3],
        vec![1, 3, 1, 3, 1, 3],
    ]
    .iter()
    .map(|s| dimseq::canonical_class(s))
    .collect();
    ensure!(six == want, "m=6: {six:?}");
    Ok(())
}

fn root_counts() -> Check {
    let families: [(
        RootFamily,
        std::ops::RangeInclusive<usize>,
        fn(usize) -> usize,
    ); 4] = [
        (RootFamily::A, 1..=8, |n| n * (n + 1) / 2),
        (RootFamily::B, 2..=6, |n| n * n),
        (RootFamily::C, 2..=6, |n| n * n),
        (RootFamily::D, 4..=7, |n| n * (n - 1)),
    ];
    for (family, range, count) in families {
        for n in range {
            let q = family.canonical_quiver(n).unwrap();
            let orbit = roots::positive_roots(&q).unwrap();
            let closed = roots::closed_form_roots(family, n).unwrap();
            ensure!(
                orbit == closed,
                "{family:?}{n}: orbit differs from closed form"
            );
            ensure!(
                orbit.len() == count(n),
                "{family:?}{n}: {} roots",
                orbit.len()
            );
            if family == RootFamily::D {
                let hi = orbit.highest().unwrap().as_slice().to_vec();
                let mut want = vec![1];
                want.extend(std::iter::repeat_n(2, n - 3));
                want.extend([1, 1]);
                ensure!(hi == want, "D{n} highest root {hi:?}");
            }
        }
    }
    let exceptional: [(Quiver, usize, &[i64]); 5] = [
        (catalog::e6(), 36, &[1, 2, 3, 2, 1, 2]),
        (catalog::e7(), 63, &[2, 3, 4, 3, 2, 2, 1]),
        (catalog::e8(), 120, &[2, 4, 6, 5, 4, 3, 2, 3]),
        (catalog::f4(), 24, &[2, 3, 4, 2]),
        (catalog::g2(), 6, &[3, 2]),
    ];
    for (q, count, highest) in exceptional {
        let kind = classify(&q).unwrap();
        let orbit = roots::positive_roots(&q).unwrap();
        let tower = reflect::enumerate_indecomposables(&q, DEFAULT_STEP_CAP).unwrap();
        ensure!(orbit.len() == count, "{kind}: {} orbit roots", orbit.len());
        ensure!(tower.len() == count, "{kind}: {} enumerated", tower.len());
        let hi = orbit.highest().unwrap();
        ensure!(hi.as_slice() == highest, "{kind}: highest root {hi}");
        let mut a: Vec<i64> = hi.as_slice().to_vec();
        let mut b = highest.to_vec();
        a.sort();
        b.sort();
        ensure!(a == b, "{kind}: coordinate multiset");
    }
    Ok(())
}

fn oracle_equivalence() -> Check {
    for q in [
        catalog::a(4),
        catalog::d(4),
        catalog::d(5),
        catalog::e6(),
        catalog::e7(),
        catalog::e8(),
    ] {
        let kind = classify(&q).unwrap();
        for o in q.orientations() {
            let c =
                koethe::cross_validate(&o, DEFAULT_STEP_CAP).map_err(|e| format!("{o}: {e}"))?;
            ensure!(
                c.agree,
                "{kind} {o}: verdict {} but brute force {}",
                c.verdict.koethe,
                c.brute_force
            );
        }
    }
    Ok(())
}

fn forbidden_types() -> Check {
    let shapes = [catalog::e8(), catalog::f4(), catalog::h3(), catalog::h4()];
    for q in shapes {
        for o in q.orientations() {
            let v = koethe::decide_hereditary(&o).unwrap();
            let c = &v.components[0];
            ensure!(
                !v.koethe && matches!(c.reason, Some(FailureReason::ForbiddenType(_))),
                "{o}: {:?}",
                c.reason
            );
        }
    }
    for n in 1..=5 {
        for o in catalog::a(n).orientations() {
            let v = koethe::decide_hereditary(&o).unwrap();
            ensure!(
                v.koethe && v.components[0].diagram == DiagramType::A(n),
                "{o}: no"
            );
        }
    }
    Ok(())
}

fn radical_square_zero() -> Check {
    let general = |arrows: &[(&str, &str)]| {
        let mut b = Quiver::builder().mode(Mode::General);
        for (s, t) in arrows {
            b = b.arrow(*s, *t);
        }
        b.build().unwrap()
    };
    let one_loop = general(&[("x", "x")]);
    ensure!(
        koethe::decide_radical_square_zero(&one_loop)
            .unwrap()
            .koethe,
        "one loop"
    );
    let two_cycle = general(&[("a", "b"), ("b", "a")]);
    ensure!(
        koethe::decide_radical_square_zero(&two_cycle)
            .unwrap()
            .koethe,
        "2-cycle"
    );
    let star = general(&[("a", "b"), ("a", "c"), ("a", "d")]);
    let v = koethe::decide_radical_square_zero(&star).unwrap();
    let hit = v.components.iter().any(|c| {
        c.diagram == DiagramType::D(4)
            && matches!(
                c.reason,
                Some(FailureReason::ConditionViolated {
                    condition: Condition::DnA,
                    ..
                })
            )
    });
    ensure!(!v.koethe && hit, "star: {v:?}");
    Ok(())
}

fn run_cases<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Check {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn invariant_suites() -> Check {
    let quivers = finite_types();
    run_cases(
        10_000,
        (
            0..quivers.len(),
            0usize..12,
            0usize..8,
            prop::collection::vec(-20i64..=20, 8),
        ),
        |(pick, stage, sink, raw)| check_involution(&quivers[pick], stage, sink, &raw),
    )
    .map_err(|e| format!("involution: {e}"))?;

    let sym = symmetrizable();
    run_cases(
        500,
        (
            0..sym.len(),
            prop::collection::vec(-6i64..=6, 8),
            prop::collection::vec(-6i64..=6, 8),
        ),
        |(pick, x, y)| check_form_invariance(&sym[pick], &x, &y),
    )
    .map_err(|e| format!("form invariance: {e}"))?;

    let samples = indecomposable_samples();
    for s in &samples {
        ensure!(
            radical_is_small(&s.rep),
            "radical of {:?} is not small",
            s.rep.dims()
        );
        let bad = conical_failures(&s.rep);
        ensure!(bad.is_empty(), "{:?} not conical on {bad:?}", s.rep.dims());
    }
    run_cases(
        300,
        (
            0..samples.len(),
            0usize..8,
            prop::collection::vec(-3i64..=3, 8),
        ),
        |(pick, vertex, raw)| check_enlargement(&samples[pick].rep, vertex, &raw),
    )
    .map_err(|e| format!("radical enlargement: {e}"))?;

    run_cases(100, arb_any_quiver(), |q| check_round_trip(&q))
        .map_err(|e| format!("round trip: {e}"))?;
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("golden H3 reflection chains", golden_chains),
        ("rank-2 reproduction", rank_two),
        ("dimension-sequence census", census),
        ("root counts and oracle equality", root_counts),
        (
            "oracle equivalence over all orientations",
            oracle_equivalence,
        ),
        ("forbidden types", forbidden_types),
        ("radical-square-zero reduction", radical_square_zero),
        ("invariant suites", invariant_suites),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("PASS criterion {}: {name} ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({secs:.2}s): {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

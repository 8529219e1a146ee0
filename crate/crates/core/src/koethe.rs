//! Deciding the right Koethe property for hereditary and radical-square-zero
//! species.

use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::dimseq;
use crate::error::{Error, Result};
use crate::quiver::{classify, tree_shape, Arrow, DiagramType, Mode, Quiver, TreeShape, VertexId};
use crate::reflect::DEFAULT_STEP_CAP;
use crate::rep::{self, RepSummary};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    DnA,
    DnB,
    E6A,
    E6B,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::DnA => "Dn-a",
            Condition::DnB => "Dn-b",
            Condition::E6A => "E6-a",
            Condition::E6B => "E6-b",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureReason {
    NotRepresentationFinite,
    ForbiddenType(DiagramType),
    /// `expected` describes the required orientation; `vertex` is where the
    /// input departs from it.
    OrientationMismatch {
        expected: String,
        vertex: VertexId,
    },
    DimensionSequenceMismatch {
        expected: Vec<u32>,
        found: Vec<u32>,
        arrow: (VertexId, VertexId),
    },
    ConditionViolated {
        condition: Condition,
        vertex: VertexId,
    },
}

impl FailureReason {
    pub fn kind(&self) -> &'static str {
        match self {
            FailureReason::NotRepresentationFinite => "NotRepresentationFinite",
            FailureReason::ForbiddenType(_) => "ForbiddenType",
            FailureReason::OrientationMismatch { .. } => "OrientationMismatch",
            FailureReason::DimensionSequenceMismatch { .. } => "DimensionSequenceMismatch",
            FailureReason::ConditionViolated { .. } => "ConditionViolated",
        }
    }

    pub fn detail(&self) -> Option<String> {
        match self {
            FailureReason::NotRepresentationFinite => None,
            FailureReason::ForbiddenType(t) => Some(t.to_string()),
            FailureReason::OrientationMismatch { expected, .. } => Some(expected.clone()),
            FailureReason::DimensionSequenceMismatch { expected, .. } => Some(seq_string(expected)),
            FailureReason::ConditionViolated { condition, .. } => Some(condition.to_string()),
        }
    }
}

fn seq_string(seq: &[u32]) -> String {
    let parts: Vec<String> = seq.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailureReason::NotRepresentationFinite => f.write_str("not representation-finite"),
            FailureReason::ForbiddenType(t) => write!(f, "type {t} is never Koethe"),
            FailureReason::OrientationMismatch { expected, vertex } => {
                write!(f, "orientation must be {expected} (differs at {vertex})")
            }
            FailureReason::DimensionSequenceMismatch {
                expected,
                found,
                arrow,
            } => write!(
                f,
                "arrow {}->{} carries {}, needs {}",
                arrow.0,
                arrow.1,
                seq_string(found),
                seq_string(expected)
            ),
            FailureReason::ConditionViolated { condition, vertex } => {
                write!(f, "condition {condition} fails at {vertex}")
            }
        }
    }
}

impl Serialize for FailureReason {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("kind", self.kind())?;
        map.serialize_entry("detail", &self.detail())?;
        match self {
            FailureReason::OrientationMismatch { vertex, .. }
            | FailureReason::ConditionViolated { vertex, .. } => {
                map.serialize_entry("vertex", vertex)?;
            }
            FailureReason::DimensionSequenceMismatch {
                expected,
                found,
                arrow,
            } => {
                map.serialize_entry("expected", expected)?;
                map.serialize_entry("found", found)?;
                map.serialize_entry("arrow", &[&arrow.0, &arrow.1])?;
            }
            _ => {}
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentVerdict {
    pub vertices: Vec<VertexId>,
    #[serde(rename = "type")]
    pub diagram: DiagramType,
    #[serde(rename = "repFinite")]
    pub rep_finite: bool,
    pub koethe: bool,
    pub clause: Option<u8>,
    /// The sink index `t` when clause 3 matched.
    #[serde(rename = "clauseParameter", skip_serializing_if = "Option::is_none")]
    pub clause_parameter: Option<usize>,
    pub reason: Option<FailureReason>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KoetheVerdict {
    pub components: Vec<ComponentVerdict>,
    pub koethe: bool,
}

type Outcome = std::result::Result<(u8, Option<usize>), FailureReason>;

fn vid(q: &Quiver, v: usize) -> VertexId {
    q.vertices()[v].clone()
}

fn arrow_between(q: &Quiver, u: usize, v: usize) -> &Arrow {
    q.edge(u, v).expect("adjacent vertices")
}

fn require_seq(q: &Quiver, a: &Arrow, expected: Vec<u32>) -> Outcome {
    let found = a
        .label
        .as_sequence()
        .map(|s| s.current())
        .unwrap_or_default();
    if found == expected {
        Ok((0, None))
    } else {
        Err(FailureReason::DimensionSequenceMismatch {
            expected,
            found,
            arrow: (vid(q, a.source), vid(q, a.target)),
        })
    }
}

fn decide_b(q: &Quiver, path: Vec<usize>) -> Outcome {
    let n = path.len();
    let heavy_at_start = q
        .edge(path[0], path[1])
        .and_then(|a| a.label.coxeter_label())
        == Some(4);
    // v_1 .. v_n with v_{n-1} -- v_n the m = 4 edge
    let v: Vec<usize> = if n > 2 && heavy_at_start {
        path.into_iter().rev().collect()
    } else if n == 2 {
        let a = &q.arrows()[0];
        vec![a.source, a.target]
    } else {
        path
    };
    let sinks: Vec<usize> = (0..n).filter(|&i| q.is_sink(v[i])).collect();
    if sinks.len() != 1 {
        return Err(FailureReason::OrientationMismatch {
            expected: "a single sink with all arrows pointing towards it".into(),
            vertex: vid(q, v[sinks[1]]),
        });
    }
    let heavy = arrow_between(q, v[n - 2], v[n - 1]);
    require_seq(q, heavy, vec![2, 1, 2, 1])?;
    if sinks[0] == n - 1 {
        Ok((2, None))
    } else {
        Ok((3, Some(sinks[0] + 1)))
    }
}

fn decide_d(q: &Quiver, center: usize, arms: &[Vec<usize>]) -> Outcome {
    if q.out_degree(center) > 2 {
        return Err(FailureReason::ConditionViolated {
            condition: Condition::DnA,
            vertex: vid(q, center),
        });
    }
    if let Some(&bad) = arms[2].iter().find(|&&v| q.out_degree(v) > 1) {
        return Err(FailureReason::ConditionViolated {
            condition: Condition::DnB,
            vertex: vid(q, bad),
        });
    }
    Ok((4, None))
}

fn decide_e6(q: &Quiver, center: usize, arms: &[Vec<usize>]) -> Outcome {
    let violated = |condition, v| {
        Err(FailureReason::ConditionViolated {
            condition,
            vertex: vid(q, v),
        })
    };
    if !(1..=2).contains(&q.out_degree(center)) {
        return violated(Condition::E6A, center);
    }
    for arm in &arms[1..] {
        if q.out_degree(arm[0]) > 1 {
            return violated(Condition::E6A, arm[0]);
        }
    }
    for (_, a) in q.incoming(center) {
        if q.in_degree(a.source) == 0 {
            return violated(Condition::E6B, a.source);
        }
    }
    Ok((5, None))
}

fn decide_e7(q: &Quiver, center: usize, arms: &[Vec<usize>]) -> Outcome {
    let (s, b, a) = (&arms[0], &arms[1], &arms[2]);
    let name = |v: usize| q.name(v).to_string();
    let required = [
        (a[2], a[1]),
        (a[1], a[0]),
        (a[0], center),
        (center, b[0]),
        (b[0], b[1]),
        (center, s[0]),
    ];
    let expected = format!(
        "{}->{}->{}->{}->{}->{} with {}->{}",
        name(a[2]),
        name(a[1]),
        name(a[0]),
        name(center),
        name(b[0]),
        name(b[1]),
        name(center),
        name(s[0])
    );
    for (x, y) in required {
        let arrow = arrow_between(q, x, y);
        if (arrow.source, arrow.target) != (x, y) {
            return Err(FailureReason::OrientationMismatch {
                expected,
                vertex: vid(q, x),
            });
        }
    }
    Ok((6, None))
}

fn decide_rank2(q: &Quiver, clause: u8, m: usize) -> Outcome {
    let a = &q.arrows()[0];
    require_seq(q, a, dimseq::koethe_shape(m))?;
    Ok((clause, None))
}

fn decide_component(q: &Quiver) -> Result<ComponentVerdict> {
    let diagram = classify(q)?;
    let outcome: Outcome = match (diagram, tree_shape(q)) {
        (DiagramType::A(_), _) => Ok((1, None)),
        (DiagramType::B(_), TreeShape::Path(path)) => decide_b(q, path),
        (DiagramType::D(_), TreeShape::Star { center, arms }) => decide_d(q, center, &arms),
        (DiagramType::E6, TreeShape::Star { center, arms }) => decide_e6(q, center, &arms),
        (DiagramType::E7, TreeShape::Star { center, arms }) => decide_e7(q, center, &arms),
        (DiagramType::G2, _) => decide_rank2(q, 7, 6),
        (DiagramType::I2(p), _) => decide_rank2(q, 8, p),
        (t @ (DiagramType::E8 | DiagramType::F4 | DiagramType::H3 | DiagramType::H4), _) => {
            Err(FailureReason::ForbiddenType(t))
        }
        (DiagramType::Unknown, _) => Err(FailureReason::NotRepresentationFinite),
        (t, shape) => unreachable!("{t} classified with shape {shape:?}"),
    };
    let (clause, clause_parameter, reason) = match outcome {
        Ok((c, t)) => (Some(c), t, None),
        Err(r) => (None, None, Some(r)),
    };
    Ok(ComponentVerdict {
        vertices: q.vertices().to_vec(),
        diagram,
        rep_finite: diagram.is_finite(),
        koethe: clause.is_some(),
        clause,
        clause_parameter,
        reason,
    })
}

/// Matches each component against the clauses of the hereditary criterion.
pub fn decide_hereditary(q: &Quiver) -> Result<KoetheVerdict> {
    if q.mode() != Mode::Hereditary {
        return Err(Error::WrongMode("hereditary"));
    }
    let components = q
        .components()
        .iter()
        .map(decide_component)
        .collect::<Result<Vec<_>>>()?;
    let koethe = components.iter().all(|c| c.koethe);
    Ok(KoetheVerdict { components, koethe })
}

/// Name of the copy of `v` on side `side` of the separated quiver.
pub fn separated_name(v: &str, side: u8) -> String {
    format!("({v},{side})")
}

/// Bipartite quiver with vertices `(i,0)`, `(i,1)` and an arrow
/// `(i,0) -> (j,1)` for each arrow `i -> j`.
pub fn separated_quiver(q: &Quiver) -> Result<Quiver> {
    let mut b = Quiver::builder();
    for v in q.vertices() {
        b = b
            .vertex(separated_name(v.as_str(), 0))
            .vertex(separated_name(v.as_str(), 1));
    }
    for a in q.arrows() {
        b = b.labeled(
            separated_name(q.name(a.source), 0),
            separated_name(q.name(a.target), 1),
            a.label.clone(),
        );
    }
    b.build()
}

pub fn decide_radical_square_zero(q: &Quiver) -> Result<KoetheVerdict> {
    decide_hereditary(&separated_quiver(q)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(flatten)]
    pub summary: RepSummary,
    pub maps: Vec<WitnessMap>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessMap {
    pub from: VertexId,
    pub to: VertexId,
    pub matrix: crate::linalg::Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub verdict: KoetheVerdict,
    #[serde(rename = "bruteForce")]
    pub brute_force: bool,
    pub agree: bool,
    pub witness: Option<Witness>,
}

/// Compares the diagrammatic verdict with the brute-force check that every
/// indecomposable has multiplicity-free top.
pub fn cross_validate(q: &Quiver, cap: usize) -> Result<CrossCheck> {
    let verdict = decide_hereditary(q)?;
    let mut witness: Option<rep::EnumeratedRep> = None;
    for part in q.components() {
        if !classify(&part)?.is_simply_laced() {
            return Err(Error::NotSimplyLaced);
        }
        for e in rep::enumerate_indec_reps(&part, cap)? {
            if rep::is_multiplicity_free_top(&e.rep) {
                continue;
            }
            let bigger = witness
                .as_ref()
                .is_none_or(|w| e.rep.dim_vector().total() > w.rep.dim_vector().total());
            if bigger {
                witness = Some(e);
            }
        }
    }
    let brute_force = witness.is_none();
    let witness = witness.map(|e| Witness {
        summary: e.summary(),
        maps: e
            .rep
            .quiver()
            .arrows()
            .iter()
            .zip(e.rep.maps())
            .map(|(a, m)| WitnessMap {
                from: vid(e.rep.quiver(), a.source),
                to: vid(e.rep.quiver(), a.target),
                matrix: m.clone(),
            })
            .collect(),
    });
    Ok(CrossCheck {
        agree: brute_force == verdict.koethe,
        verdict,
        brute_force,
        witness,
    })
}

/// [`cross_validate`] with the default step cap.
pub fn cross_validate_default(q: &Quiver) -> Result<CrossCheck> {
    cross_validate(q, DEFAULT_STEP_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::catalog;

    fn verdict(q: &Quiver) -> ComponentVerdict {
        let v = decide_hereditary(q).unwrap();
        assert_eq!(v.components.len(), 1);
        v.components.into_iter().next().unwrap()
    }

    fn single(seq: &[u32]) -> Quiver {
        Quiver::builder()
            .seq("1", "2", seq)
            .unwrap()
            .build()
            .unwrap()
    }

    #[test]
    fn a3_orientations() {
        for q in catalog::a(3).orientations() {
            assert_eq!(verdict(&q).clause, Some(1));
        }
    }

    #[test]
    fn d4_out_star() {
        let q = Quiver::from_arrows(&[("c", "1"), ("c", "2"), ("c", "3")]).unwrap();
        let v = verdict(&q);
        assert!(!v.koethe);
        assert_eq!(
            v.reason,
            Some(FailureReason::ConditionViolated {
                condition: Condition::DnA,
                vertex: VertexId::new("c").unwrap()
            })
        );
    }

    #[test]
    fn rank_two() {
        assert_eq!(verdict(&single(&[2, 1, 2, 1])).clause, Some(2));
        let v = verdict(&single(&[1, 2, 1, 2]));
        assert_eq!(v.reason.unwrap().kind(), "DimensionSequenceMismatch");
        assert_eq!(verdict(&single(&[4, 1, 2, 2, 2, 1])).clause, Some(7));
        assert!(!verdict(&single(&[1, 3, 1, 3, 1, 3])).koethe);
        assert_eq!(verdict(&catalog::i2(7)).clause, Some(8));
    }

    #[test]
    fn b_clauses() {
        assert_eq!(verdict(&catalog::b(4)).clause, Some(2));
        // 4 -> 3 -> 2 <- 1 with 4 -> 3 carrying (2,1,2,1)
        let q = Quiver::builder()
            .seq("4", "3", &[2, 1, 2, 1])
            .unwrap()
            .arrow("3", "2")
            .arrow("1", "2")
            .build()
            .unwrap();
        let v = verdict(&q);
        assert_eq!((v.clause, v.clause_parameter), (Some(3), Some(2)));
        let q = Quiver::builder()
            .seq("4", "3", &[2, 1, 2, 1])
            .unwrap()
            .arrow("2", "3")
            .arrow("2", "1")
            .build()
            .unwrap();
        assert_eq!(verdict(&q).reason.unwrap().kind(), "OrientationMismatch");
        assert_eq!(
            verdict(&catalog::c(3)).reason.unwrap().kind(),
            "DimensionSequenceMismatch"
        );
    }

    #[test]
    fn forbidden() {
        for q in [catalog::e8(), catalog::f4(), catalog::h3(), catalog::h4()] {
            assert_eq!(verdict(&q).reason.unwrap().kind(), "ForbiddenType");
        }
    }

    #[test]
    fn separated() {
        let q = Quiver::builder()
            .mode(Mode::General)
            .arrow("1", "2")
            .arrow("2", "1")
            .build()
            .unwrap();
        let s = separated_quiver(&q).unwrap();
        assert_eq!(s.components().len(), 2);
        assert!(decide_radical_square_zero(&q).unwrap().koethe);
        let lp = Quiver::builder()
            .mode(Mode::General)
            .arrow("1", "1")
            .build()
            .unwrap();
        let s = separated_quiver(&lp).unwrap();
        assert_eq!(s.arrows().len(), 1);
        assert_eq!(classify(&s).unwrap(), DiagramType::A(2));
        assert!(decide_radical_square_zero(&lp).unwrap().koethe);
        let empty = Quiver::builder()
            .mode(Mode::General)
            .vertex("a")
            .vertex("b")
            .build()
            .unwrap();
        assert_eq!(separated_quiver(&empty).unwrap().vertex_count(), 4);
        let star = Quiver::builder()
            .mode(Mode::General)
            .arrow("1", "2")
            .arrow("1", "3")
            .arrow("1", "4")
            .arrow("5", "1")
            .build()
            .unwrap();
        let v = decide_radical_square_zero(&star).unwrap();
        assert!(!v.koethe);
        let failing: Vec<_> = v
            .components
            .iter()
            .filter_map(|c| c.reason.clone())
            .collect();
        assert_eq!(
            failing,
            vec![FailureReason::ConditionViolated {
                condition: Condition::DnA,
                vertex: VertexId::new("(1,0)").unwrap()
            }]
        );
    }

    #[test]
    fn json_shape() {
        let q = Quiver::from_arrows(&[("c", "1"), ("c", "2"), ("c", "3")]).unwrap();
        let json = serde_json::to_value(decide_hereditary(&q).unwrap()).unwrap();
        assert_eq!(json["koethe"], false);
        assert_eq!(json["components"][0]["type"], "D4");
        assert_eq!(json["components"][0]["repFinite"], true);
        assert_eq!(json["components"][0]["reason"]["kind"], "ConditionViolated");
        assert_eq!(json["components"][0]["reason"]["detail"], "Dn-a");
        assert_eq!(json["components"][0]["reason"]["vertex"], "c");
    }
}

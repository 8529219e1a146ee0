//! Plain-text and JSON quiver descriptions.
//!
//! ```text
//! # comment
//! mode hereditary
//! vertex a
//! arrow a -> b
//! arrow b -> c seq 3,1,2,2,1
//! arrow c -> d val 1,2
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{ArrowLabel, Mode, Quiver, VertexId};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn label_err(line: usize, message: impl Into<String>) -> Error {
    Error::InvalidLabel {
        line,
        message: message.into(),
    }
}

fn parse_numbers(line: usize, text: &str) -> Result<Vec<u32>> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    inner
        .split(',')
        .map(|t| {
            t.trim().parse::<u32>().map_err(|_| {
                label_err(line, format!("{:?} is not a nonnegative integer", t.trim()))
            })
        })
        .collect()
}

fn parse_label(line: usize, kind: &str, args: &str) -> Result<ArrowLabel> {
    let nums = parse_numbers(line, args)?;
    match kind {
        "seq" => ArrowLabel::sequence(nums).map_err(|e| label_err(line, e.to_string())),
        "val" => match nums.as_slice() {
            [d, e] => {
                ArrowLabel::from_valuation(*d, *e).map_err(|e| label_err(line, e.to_string()))
            }
            _ => Err(label_err(line, "val takes exactly two numbers")),
        },
        other => Err(parse_err(
            line,
            format!("unknown arrow label kind {other:?}"),
        )),
    }
}

struct Statements {
    mode: Mode,
    vertices: Vec<(usize, String)>,
    arrows: Vec<(usize, String, String, ArrowLabel)>,
}

fn assemble(st: Statements) -> Result<Quiver> {
    let mut seen: BTreeMap<(String, String), usize> = BTreeMap::new();
    for (line, s, t, _) in &st.arrows {
        for name in [s, t] {
            VertexId::new(name.clone()).map_err(|e| parse_err(*line, e.to_string()))?;
        }
        let key = if st.mode == Mode::Hereditary && s > t {
            (t.clone(), s.clone())
        } else {
            (s.clone(), t.clone())
        };
        if let Some(first) = seen.insert(key, *line) {
            return Err(parse_err(
                *line,
                format!("duplicate arrow between {s} and {t} (first on line {first})"),
            ));
        }
        if st.mode == Mode::Hereditary && s == t {
            return Err(parse_err(
                *line,
                format!("loop at {s} requires mode general"),
            ));
        }
    }
    let mut b = Quiver::builder().mode(st.mode);
    for (line, v) in &st.vertices {
        VertexId::new(v.clone()).map_err(|e| parse_err(*line, e.to_string()))?;
        b = b.vertex(v.clone());
    }
    let last = st
        .arrows
        .last()
        .map(|a| a.0)
        .or(st.vertices.last().map(|v| v.0))
        .unwrap_or(0);
    for (_, s, t, label) in st.arrows {
        b = b.labeled(s, t, label);
    }
    b.build().map_err(|e| parse_err(last, e.to_string()))
}

/// Parses the line-oriented text format.
pub fn parse_text(text: &str) -> Result<Quiver> {
    let mut st = Statements {
        mode: Mode::Hereditary,
        vertices: Vec::new(),
        arrows: Vec::new(),
    };
    let mut mode_line: Option<usize> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (keyword, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim();
        match keyword {
            "mode" => {
                if let Some(first) = mode_line {
                    return Err(parse_err(line, format!("mode already set on line {first}")));
                }
                st.mode = match rest {
                    "hereditary" => Mode::Hereditary,
                    "general" => Mode::General,
                    other => return Err(parse_err(line, format!("unknown mode {other:?}"))),
                };
                mode_line = Some(line);
            }
            "vertex" => {
                if rest.is_empty() || rest.contains(char::is_whitespace) {
                    return Err(parse_err(line, "vertex takes exactly one name"));
                }
                st.vertices.push((line, rest.to_string()));
            }
            "arrow" => {
                let (src, tail) = rest
                    .split_once("->")
                    .ok_or_else(|| parse_err(line, "expected `arrow SRC -> DST`"))?;
                let src = src.trim();
                let tail = tail.trim();
                let (dst, label) = tail.split_once(char::is_whitespace).unwrap_or((tail, ""));
                if src.is_empty() || dst.is_empty() || src.contains(char::is_whitespace) {
                    return Err(parse_err(line, "expected `arrow SRC -> DST`"));
                }
                let label = label.trim();
                let label = if label.is_empty() {
                    ArrowLabel::trivial()
                } else {
                    let (kind, args) = label
                        .split_once(char::is_whitespace)
                        .ok_or_else(|| parse_err(line, "label needs `seq a,b,...` or `val d,e`"))?;
                    parse_label(line, kind, args)?
                };
                st.arrows
                    .push((line, src.to_string(), dst.to_string(), label));
            }
            other => return Err(parse_err(line, format!("unknown directive {other:?}"))),
        }
    }
    assemble(st)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverDoc {
    #[serde(default)]
    pub mode: Mode,
    #[serde(default)]
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowDoc {
    pub from: String,
    pub to: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seq: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub val: Option<[u32; 2]>,
}

/// Parses the JSON mirror of the text format. Arrow `i` of the document is
/// reported as line `i + 1`.
pub fn parse_json(text: &str) -> Result<Quiver> {
    let doc: QuiverDoc =
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    let mut arrows = Vec::new();
    for (i, a) in doc.arrows.into_iter().enumerate() {
        let line = i + 1;
        let label = match (a.seq, a.val) {
            (Some(_), Some(_)) => return Err(label_err(line, "give seq or val, not both")),
            (Some(seq), None) => {
                ArrowLabel::sequence(seq).map_err(|e| label_err(line, e.to_string()))?
            }
            (None, Some([d, e])) => {
                ArrowLabel::from_valuation(d, e).map_err(|e| label_err(line, e.to_string()))?
            }
            (None, None) => ArrowLabel::trivial(),
        };
        arrows.push((line, a.from, a.to, label));
    }
    assemble(Statements {
        mode: doc.mode,
        vertices: doc.vertices.into_iter().map(|v| (0, v)).collect(),
        arrows,
    })
}

/// JSON if the first non-blank character is `{`, text otherwise.
pub fn parse(text: &str) -> Result<Quiver> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

fn label_suffix(label: &ArrowLabel) -> String {
    match label {
        _ if label.is_trivial() => String::new(),
        ArrowLabel::Sequence(s) => {
            let parts: Vec<String> = s.current().iter().map(u32::to_string).collect();
            format!(" seq {}", parts.join(","))
        }
        ArrowLabel::Unbounded { r_dim, l_dim } => format!(" val {r_dim},{l_dim}"),
    }
}

/// Writes `q` in the text format. Arrow labels are written from their
/// current offset. Names containing `#` or `->` do not survive a round trip.
pub fn emit_text(q: &Quiver) -> String {
    let mut out = String::new();
    writeln!(out, "mode {}", q.mode()).unwrap();
    for v in q.vertices() {
        writeln!(out, "vertex {v}").unwrap();
    }
    for a in q.arrows() {
        writeln!(
            out,
            "arrow {} -> {}{}",
            q.name(a.source),
            q.name(a.target),
            label_suffix(&a.label)
        )
        .unwrap();
    }
    out
}

pub fn to_doc(q: &Quiver) -> QuiverDoc {
    QuiverDoc {
        mode: q.mode(),
        vertices: q
            .vertices()
            .iter()
            .map(|v| v.as_str().to_string())
            .collect(),
        arrows: q
            .arrows()
            .iter()
            .map(|a| {
                let (seq, val) = match &a.label {
                    l if l.is_trivial() => (None, None),
                    ArrowLabel::Sequence(s) => (Some(s.current()), None),
                    ArrowLabel::Unbounded { r_dim, l_dim } => (None, Some([*r_dim, *l_dim])),
                };
                ArrowDoc {
                    from: q.name(a.source).to_string(),
                    to: q.name(a.target).to_string(),
                    seq,
                    val,
                }
            })
            .collect(),
    }
}

pub fn emit_json(q: &Quiver) -> String {
    serde_json::to_string_pretty(&to_doc(q)).expect("quiver documents serialize")
}

//! JSON form of an arrangement.
//!
//! ```json
//! {
//!   "version": 1,
//!   "name": "optional description",
//!   "base_points": [[[1, 1], [0, 1], [0, 1]], ...],
//!   "lines": [{ "label": "D11", "coefficients": [[0, 1], [0, 1], [1, 1]] }, ...]
//! }
//! ```
//!
//! Every rational is a `[numerator, denominator]` pair. All nine labels
//! `D11`..`D33` must appear exactly once.

use serde::{Deserialize, Serialize};

use super::{BurniatArrangement, LineLabel, ProjLine, ProjPoint, Rat};
use crate::error::{Error, Result};

type Pair = [i64; 2];

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct LineDoc {
    label: String,
    coefficients: [Pair; 3],
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct ArrangementDoc {
    version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    base_points: [[Pair; 3]; 3],
    lines: Vec<LineDoc>,
}

fn parse_err(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { path: path.into(), message: message.into() }
}

fn to_rats(c: &[Pair; 3], path: &str) -> Result<[Rat; 3]> {
    let mut out: [Rat; 3] = Default::default();
    for (k, [n, d]) in c.iter().enumerate() {
        if *d == 0 {
            return Err(parse_err(format!("{path}[{k}]"), "zero denominator"));
        }
        out[k] = Rat::new((*n).into(), (*d).into());
    }
    Ok(out)
}

pub fn parse_arrangement(text: &str) -> Result<BurniatArrangement> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let doc: ArrangementDoc = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        parse_err(if path.is_empty() { ".".to_string() } else { path }, e.into_inner().to_string())
    })?;
    if doc.version != 1 {
        return Err(parse_err("version", format!("unsupported version {}", doc.version)));
    }
    let mut points = Vec::new();
    for (k, p) in doc.base_points.iter().enumerate() {
        let path = format!("base_points[{k}]");
        let c = to_rats(p, &path)?;
        points.push(ProjPoint::new(c).map_err(|e| parse_err(&path, e.to_string()))?);
    }
    let mut slots: [[Option<ProjLine>; 3]; 3] = Default::default();
    for (k, l) in doc.lines.iter().enumerate() {
        let path = format!("lines[{k}]");
        let label = LineLabel::parse(&l.label)
            .ok_or_else(|| parse_err(format!("{path}.label"), format!("unknown label {:?}", l.label)))?;
        let slot = &mut slots[label.family as usize - 1][label.index as usize - 1];
        if slot.is_some() {
            return Err(parse_err(format!("{path}.label"), format!("duplicate label {label}")));
        }
        let c = to_rats(&l.coefficients, &format!("{path}.coefficients"))?;
        *slot = Some(ProjLine::new(c).map_err(|e| parse_err(format!("{path}.coefficients"), e.to_string()))?);
    }
    let mut missing = Vec::new();
    for l in LineLabel::all() {
        if slots[l.family as usize - 1][l.index as usize - 1].is_none() {
            missing.push(l.to_string());
        }
    }
    if !missing.is_empty() {
        return Err(parse_err("lines", format!("missing labels {}", missing.join(", "))));
    }
    let lines = slots.map(|fam| fam.map(|l| l.expect("checked above")));
    let base_points: [ProjPoint; 3] = points.try_into().expect("three base points");
    Ok(BurniatArrangement::new(base_points, lines))
}

fn pair(r: &Rat) -> Result<Pair> {
    let conv = |x: &num_bigint::BigInt| {
        i64::try_from(x).map_err(|_| Error::NotRepresentable(format!("{r} does not fit in i64")))
    };
    Ok([conv(r.numer())?, conv(r.denom())?])
}

fn pairs(c: &[Rat; 3]) -> Result<[Pair; 3]> {
    Ok([pair(&c[0])?, pair(&c[1])?, pair(&c[2])?])
}

pub fn to_json(a: &BurniatArrangement) -> Result<String> {
    let doc = ArrangementDoc {
        version: 1,
        name: None,
        base_points: [pairs(&a.base_points[0].0)?, pairs(&a.base_points[1].0)?, pairs(&a.base_points[2].0)?],
        lines: a
            .labeled_lines()
            .map(|(l, line)| Ok(LineDoc { label: l.to_string(), coefficients: pairs(&line.0)? }))
            .collect::<Result<_>>()?,
    };
    serde_json::to_string_pretty(&doc).map_err(|e| Error::NotRepresentable(e.to_string()))
}

#[derive(Clone, Copy, Debug)]
pub struct ReferenceFixture {
    pub name: &'static str,
    pub k_squared: i64,
    pub nodal: bool,
    pub json: &'static str,
}

pub const REFERENCE_FIXTURES: [ReferenceFixture; 6] = [
    ReferenceFixture {
        name: "k2_6_primary",
        k_squared: 6,
        nodal: false,
        json: include_str!("../../data/arrangements/k2_6_primary.json"),
    },
    ReferenceFixture {
        name: "k2_5_secondary",
        k_squared: 5,
        nodal: false,
        json: include_str!("../../data/arrangements/k2_5_secondary.json"),
    },
    ReferenceFixture {
        name: "k2_4_non_nodal",
        k_squared: 4,
        nodal: false,
        json: include_str!("../../data/arrangements/k2_4_non_nodal.json"),
    },
    ReferenceFixture {
        name: "k2_4_nodal",
        k_squared: 4,
        nodal: true,
        json: include_str!("../../data/arrangements/k2_4_nodal.json"),
    },
    ReferenceFixture {
        name: "k2_3_tertiary",
        k_squared: 3,
        nodal: false,
        json: include_str!("../../data/arrangements/k2_3_tertiary.json"),
    },
    ReferenceFixture {
        name: "k2_2_tertiary",
        k_squared: 2,
        nodal: false,
        json: include_str!("../../data/arrangements/k2_2_tertiary.json"),
    },
];

/// The shipped arrangement for `K²`; `nodal` only matters for `K² = 4`.
pub fn reference_arrangement(k_squared: i64, nodal: bool) -> Result<BurniatArrangement> {
    let f = REFERENCE_FIXTURES
        .iter()
        .find(|f| f.k_squared == k_squared && (k_squared != 4 || f.nodal == nodal))
        .ok_or(Error::InvalidKSquared(k_squared))?;
    parse_arrangement(f.json)
}

//! Nine-line Burniat arrangements in `ℙ²(ℚ)`.
//!
//! Line `D_{i,j}` is stored at `lines[i-1][j-1]`. `D_{i,1}` joins `Pᵢ` and
//! `P_{i+1}`; `D_{i,2}`, `D_{i,3}` are further lines through `Pᵢ`.

mod campedelli;
mod cover;
mod io;

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use campedelli::{
    campedelli_check, default_assignment, CampedelliReport, PartnerIncidence, TautologicalEquation,
};
pub use cover::{
    bidouble_equations, singularity_type, BidoubleEquation, BidoubleSystem, PicardClass, SingularityType,
};
pub use io::{parse_arrangement, reference_arrangement, to_json, ReferenceFixture, REFERENCE_FIXTURES};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

fn canonical(c: [Rat; 3]) -> Result<[Rat; 3]> {
    let lead = c.iter().find(|x| !x.is_zero()).cloned().ok_or(Error::ZeroVector)?;
    Ok(c.map(|x| x / &lead))
}

fn cross(a: &[Rat; 3], b: &[Rat; 3]) -> [Rat; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot(a: &[Rat; 3], b: &[Rat; 3]) -> Rat {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub fn det3(a: &[Rat; 3], b: &[Rat; 3], c: &[Rat; 3]) -> Rat {
    dot(a, &cross(b, c))
}

fn show(c: &[Rat; 3]) -> String {
    let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(":"))
}

/// A point of `ℙ²(ℚ)` scaled so its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint(pub [Rat; 3]);

impl ProjPoint {
    pub fn new(c: [Rat; 3]) -> Result<Self> {
        canonical(c).map(ProjPoint)
    }

    pub fn from_ints(c: [i64; 3]) -> Result<Self> {
        Self::new(c.map(|x| rat(x, 1)))
    }

    pub fn lies_on(&self, l: &ProjLine) -> bool {
        dot(&self.0, &l.0).is_zero()
    }

    pub fn join(&self, other: &ProjPoint) -> Result<ProjLine> {
        ProjLine::new(cross(&self.0, &other.0))
    }

    /// The line with the same coordinates.
    pub fn dual(&self) -> ProjLine {
        ProjLine(self.0.clone())
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&show(&self.0))
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A line `ℓ₀x + ℓ₁y + ℓ₂z = 0` scaled so its first nonzero coefficient is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjLine(pub [Rat; 3]);

impl ProjLine {
    pub fn new(c: [Rat; 3]) -> Result<Self> {
        canonical(c).map(ProjLine)
    }

    pub fn from_ints(c: [i64; 3]) -> Result<Self> {
        Self::new(c.map(|x| rat(x, 1)))
    }

    /// `None` for equal lines.
    pub fn meet(&self, other: &ProjLine) -> Option<ProjPoint> {
        ProjPoint::new(cross(&self.0, &other.0)).ok()
    }

    pub fn dual(&self) -> ProjPoint {
        ProjPoint(self.0.clone())
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&show(&self.0))
    }
}

impl Serialize for ProjLine {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `D_{family,index}`, both in `1..=3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineLabel {
    pub family: u8,
    pub index: u8,
}

impl LineLabel {
    pub fn new(family: u8, index: u8) -> Result<Self> {
        for v in [family, index] {
            if !(1..=3).contains(&v) {
                return Err(Error::InvalidIndex(v as usize));
            }
        }
        Ok(LineLabel { family, index })
    }

    pub fn all() -> impl Iterator<Item = LineLabel> {
        (1..=3).flat_map(|f| (1..=3).map(move |i| LineLabel { family: f, index: i }))
    }

    pub fn parse(s: &str) -> Option<LineLabel> {
        let b = s.as_bytes();
        if b.len() != 3 || b[0] != b'D' {
            return None;
        }
        LineLabel::new(b[1].wrapping_sub(b'0'), b[2].wrapping_sub(b'0')).ok()
    }
}

impl fmt::Display for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}{}", self.family, self.index)
    }
}

impl Serialize for LineLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurniatArrangement {
    pub base_points: [ProjPoint; 3],
    pub lines: [[ProjLine; 3]; 3],
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriplePoint {
    pub location: ProjPoint,
    pub incident_lines: Vec<LineLabel>,
}

impl TriplePoint {
    /// One line from each family.
    pub fn is_one_one_one(&self) -> bool {
        let fams: BTreeSet<u8> = self.incident_lines.iter().map(|l| l.family).collect();
        self.incident_lines.len() == 3 && fams.len() == 3
    }

    pub fn lies_on_family(&self, family: u8) -> Option<LineLabel> {
        self.incident_lines.iter().copied().find(|l| l.family == family)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "m")]
pub enum BurniatKind {
    Primary,
    Secondary(usize),
    Tertiary(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BurniatClass {
    pub k_squared: i64,
    pub kind: BurniatKind,
    pub nodal: bool,
}

impl BurniatArrangement {
    /// From base points and lines indexed by `(family, index)`.
    pub fn new(base_points: [ProjPoint; 3], lines: [[ProjLine; 3]; 3]) -> Self {
        BurniatArrangement { base_points, lines }
    }

    pub fn base_point(&self, i: usize) -> &ProjPoint {
        &self.base_points[(i + 2) % 3]
    }

    pub fn line(&self, l: LineLabel) -> &ProjLine {
        &self.lines[l.family as usize - 1][l.index as usize - 1]
    }

    pub fn labeled_lines(&self) -> impl Iterator<Item = (LineLabel, &ProjLine)> {
        LineLabel::all().map(move |l| (l, self.line(l)))
    }

    pub fn validate(&self) -> ValidationReport {
        let mut v = Vec::new();
        let [p1, p2, p3] = &self.base_points;
        if det3(&p1.0, &p2.0, &p3.0).is_zero() {
            v.push("base points are collinear".to_string());
        }
        for i in 1..=3usize {
            let pi = self.base_point(i);
            let next = self.base_point(i + 1);
            let d1 = &self.lines[i - 1][0];
            if !pi.lies_on(d1) || !next.lies_on(d1) {
                v.push(format!("D{i}1 must pass through P{i} and P{}", i % 3 + 1));
            }
            for j in 2..=3 {
                let d = &self.lines[i - 1][j - 1];
                if !pi.lies_on(d) {
                    v.push(format!("D{i}{j} must pass through P{i}"));
                }
            }
        }
        let all: Vec<(LineLabel, &ProjLine)> = self.labeled_lines().collect();
        for a in 0..all.len() {
            for b in a + 1..all.len() {
                if all[a].1 == all[b].1 {
                    v.push(format!("lines distinct: {} = {}", all[a].0, all[b].0));
                }
            }
        }
        ValidationReport { violations: v }
    }

    fn ensure_valid(&self) -> Result<()> {
        let r = self.validate();
        if r.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidArrangement(r.violations.join("; ")))
        }
    }

    /// Points of multiplicity at least 3 other than `P₁, P₂, P₃`, sorted by
    /// their incident labels.
    pub fn triple_points(&self) -> Result<Vec<TriplePoint>> {
        self.ensure_valid()?;
        let mut out = Vec::new();
        for p in self.multiple_points(3) {
            if self.base_points.contains(&p.location) {
                continue;
            }
            out.push(p);
        }
        out.sort_by(|a, b| a.incident_lines.cmp(&b.incident_lines));
        Ok(out)
    }

    /// Every point lying on at least `k` of the nine lines.
    fn multiple_points(&self, k: usize) -> Vec<TriplePoint> {
        let all: Vec<(LineLabel, &ProjLine)> = self.labeled_lines().collect();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for a in 0..all.len() {
            for b in a + 1..all.len() {
                let Some(p) = all[a].1.meet(all[b].1) else { continue };
                if !seen.insert(p.clone()) {
                    continue;
                }
                let incident: Vec<LineLabel> =
                    all.iter().filter(|(_, l)| p.lies_on(l)).map(|(lab, _)| *lab).collect();
                if incident.len() >= k {
                    out.push(TriplePoint { location: p, incident_lines: incident });
                }
            }
        }
        out
    }

    pub fn classify(&self) -> Result<BurniatClass> {
        let tps = self.triple_points()?;
        let m = tps.len();
        let kind = match m {
            0 => BurniatKind::Primary,
            1 | 2 => BurniatKind::Secondary(m),
            3 | 4 => BurniatKind::Tertiary(m),
            _ => return Err(Error::NotBurniat(m)),
        };
        let k_squared = 6 - m as i64;
        let nodal = k_squared == 4 && {
            let pts: Vec<ProjPoint> = self.multiple_points(3).into_iter().map(|p| p.location).collect();
            has_collinear_triple(&pts)
        };
        Ok(BurniatClass { k_squared, kind, nodal })
    }

    /// For each `j ≥ 5`, the `e'`-bits of `λ̂_{z(4)} − λ̂_{z(j)}`: bit `k` is 0
    /// exactly when both points lie on a common line of family `k`.
    pub fn lambda_hat_differences(&self) -> Result<Vec<[u8; 3]>> {
        let tps = self.triple_points()?;
        if tps.len() < 2 {
            return Err(Error::TooFewTriplePoints(tps.len()));
        }
        let first = &tps[0];
        Ok(tps[1..]
            .iter()
            .map(|t| {
                std::array::from_fn(|k| {
                    let fam = k as u8 + 1;
                    let shared = first
                        .incident_lines
                        .iter()
                        .any(|l| l.family == fam && t.incident_lines.contains(l));
                    (!shared) as u8
                })
            })
            .collect())
    }

    /// Applies `p ↦ Mp`; lines transform by the inverse transpose.
    pub fn transform(&self, m: &[[Rat; 3]; 3]) -> Result<Self> {
        let inv = invert3(m).ok_or_else(|| Error::InvalidArrangement("singular transformation".into()))?;
        let map_point = |p: &ProjPoint| {
            ProjPoint::new(std::array::from_fn(|r| dot(&m[r], &p.0)))
        };
        let map_line = |l: &ProjLine| {
            ProjLine::new(std::array::from_fn(|c| {
                (0..3).fold(Rat::zero(), |acc, r| acc + &l.0[r] * &inv[r][c])
            }))
        };
        let bp = [map_point(&self.base_points[0])?, map_point(&self.base_points[1])?, map_point(&self.base_points[2])?];
        let mut lines = self.lines.clone();
        for fam in lines.iter_mut() {
            for l in fam.iter_mut() {
                *l = map_line(l)?;
            }
        }
        Ok(BurniatArrangement { base_points: bp, lines })
    }
}

fn has_collinear_triple(pts: &[ProjPoint]) -> bool {
    for a in 0..pts.len() {
        for b in a + 1..pts.len() {
            for c in b + 1..pts.len() {
                if det3(&pts[a].0, &pts[b].0, &pts[c].0).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

/// Inverse of a 3×3 rational matrix via the adjugate.
pub fn invert3(m: &[[Rat; 3]; 3]) -> Option<[[Rat; 3]; 3]> {
    let d = det3(&m[0], &m[1], &m[2]);
    if d.is_zero() {
        return None;
    }
    // Column k of the adjugate is the cross product of the other two rows.
    let c = [cross(&m[1], &m[2]), cross(&m[2], &m[0]), cross(&m[0], &m[1])];
    Some(std::array::from_fn(|r| std::array::from_fn(|k| &c[k][r] / &d)))
}

pub fn identity3() -> [[Rat; 3]; 3] {
    std::array::from_fn(|r| std::array::from_fn(|c| if r == c { Rat::one() } else { Rat::zero() }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference(k2: i64, nodal: bool) -> BurniatArrangement {
        reference_arrangement(k2, nodal).unwrap()
    }

    #[test]
    fn reference_fixtures_classify() {
        for f in REFERENCE_FIXTURES {
            let a = reference(f.k_squared, f.nodal);
            assert!(a.validate().is_valid(), "{}", f.name);
            let c = a.classify().unwrap();
            assert_eq!(c.k_squared, f.k_squared, "{}", f.name);
            assert_eq!(c.nodal, f.nodal, "{}", f.name);
            assert!(a.triple_points().unwrap().iter().all(TriplePoint::is_one_one_one));
        }
    }

    #[test]
    fn k2_two_points() {
        let a = reference(2, false);
        let tps = a.triple_points().unwrap();
        let locs: Vec<String> = tps.iter().map(|t| t.location.to_string()).collect();
        assert_eq!(locs, ["(1:1:1)", "(1:-1:-1)", "(1:-1:1)", "(1:1:-1)"]);
        assert_eq!(tps[0].lies_on_family(1), tps[1].lies_on_family(1));
        assert_eq!(tps[0].lies_on_family(2), tps[2].lies_on_family(2));
        assert_eq!(tps[0].lies_on_family(3), tps[3].lies_on_family(3));
        assert_eq!(a.lambda_hat_differences().unwrap(), vec![[0, 1, 1], [1, 0, 1], [1, 1, 0]]);
    }

    #[test]
    fn differences_other_fixtures() {
        assert_eq!(reference(3, false).lambda_hat_differences().unwrap(), vec![[0, 1, 1], [1, 1, 0]]);
        assert_eq!(reference(4, true).lambda_hat_differences().unwrap(), vec![[0, 1, 1]]);
        assert_eq!(reference(4, false).lambda_hat_differences().unwrap(), vec![[1, 1, 1]]);
        assert_eq!(reference(5, false).lambda_hat_differences(), Err(Error::TooFewTriplePoints(1)));
    }

    #[test]
    fn invalid_arrangements() {
        let mut a = reference(6, false);
        a.lines[0][2] = a.lines[0][1].clone();
        let r = a.validate();
        assert!(r.violations.iter().any(|v| v.starts_with("lines distinct")));
        assert!(a.triple_points().is_err());

        let mut b = reference(6, false);
        b.base_points[2] = ProjPoint::from_ints([1, 1, 0]).unwrap();
        assert!(b.validate().violations.iter().any(|v| v.contains("collinear")));
    }

    #[test]
    fn inverse3() {
        let m = [[rat(2, 1), rat(1, 1), rat(0, 1)], [rat(0, 1), rat(1, 3), rat(1, 1)], [rat(1, 1), rat(0, 1), rat(5, 1)]];
        let inv = invert3(&m).unwrap();
        let prod: [[Rat; 3]; 3] = std::array::from_fn(|r| {
            std::array::from_fn(|c| (0..3).fold(Rat::zero(), |acc, k| acc + &m[r][k] * &inv[k][c]))
        });
        assert_eq!(prod, identity3());
    }
}

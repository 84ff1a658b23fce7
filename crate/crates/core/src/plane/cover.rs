//! The bidouble cover branched on the arrangement, its Picard bookkeeping on
//! the blowup at `P₁, P₂, P₃`, and the local type of a `(1,1,1)` point.

use std::fmt;
use std::ops::{Add, Sub};

use num_traits::Zero;
use serde::Serialize;

use super::{det3, BurniatArrangement, LineLabel, Rat, TriplePoint};
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};

/// `aL − b₁E₁ − b₂E₂ − b₃E₃`, stored as `[a, −b₁, −b₂, −b₃]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct PicardClass(pub [i64; 4]);

impl PicardClass {
    pub const L: PicardClass = PicardClass([1, 0, 0, 0]);

    /// `Eᵢ` with indices read mod 3.
    pub fn e(i: usize) -> PicardClass {
        let mut c = [0; 4];
        c[(i + 2) % 3 + 1] = 1;
        PicardClass(c)
    }

    pub fn scale(self, k: i64) -> PicardClass {
        PicardClass(self.0.map(|x| k * x))
    }

    /// The class of `D_{i,j}`.
    pub fn line(l: LineLabel) -> PicardClass {
        let i = l.family as usize;
        if l.index == 1 {
            Self::L - Self::e(i) - Self::e(i + 1)
        } else {
            Self::L - Self::e(i)
        }
    }

    /// `Dᵢ = D_{i,1} + D_{i,2} + D_{i,3} + E_{i+2}`.
    pub fn branch(i: usize) -> PicardClass {
        let f = ((i + 2) % 3 + 1) as u8;
        (1..=3).fold(Self::e(i + 2), |acc, j| acc + Self::line(LineLabel { family: f, index: j }))
    }

    /// `ℒᵢ = 3L − 2E_{i−1} − E_{i+1}`.
    pub fn cover_bundle(i: usize) -> PicardClass {
        Self::L.scale(3) - Self::e(i + 2).scale(2) - Self::e(i + 1)
    }
}

impl Add for PicardClass {
    type Output = PicardClass;
    fn add(self, o: PicardClass) -> PicardClass {
        PicardClass(std::array::from_fn(|k| self.0[k] + o.0[k]))
    }
}

impl Sub for PicardClass {
    type Output = PicardClass;
    fn sub(self, o: PicardClass) -> PicardClass {
        PicardClass(std::array::from_fn(|k| self.0[k] - o.0[k]))
    }
}

impl fmt::Display for PicardClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = format!("{}L", self.0[0]);
        for k in 1..4 {
            let c = self.0[k];
            if c != 0 {
                s += &format!(" {} {}E{k}", if c < 0 { "-" } else { "+" }, c.abs());
            }
        }
        f.write_str(&s.replace(" 1E", " E"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BidoubleEquation {
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BidoubleSystem {
    pub equations: Vec<BidoubleEquation>,
    /// `δᵢ` as the product of the three line forms of `Dᵢ`, in `x, y, z`.
    pub deltas: Vec<String>,
    /// The exceptional component of each `Dᵢ`.
    pub exceptional_parts: Vec<String>,
    pub branch_classes: Vec<PicardClass>,
    pub bundle_classes: Vec<PicardClass>,
    /// `D_{i−1} + D_{i+1} = 2ℒᵢ` for `i = 1, 2, 3`.
    pub class_identities: [bool; 3],
    /// `uᵢ = w_{i−1}wᵢ`, `δᵢ = wᵢ²` satisfies all six equations.
    pub generic_solution: bool,
    /// The product of the square equations is the square of the product
    /// of the mixed ones, as ratios `lhs/rhs`.
    pub product_consistency: bool,
}

fn prev(i: usize) -> usize {
    (i + 1) % 3 + 1
}

fn next(i: usize) -> usize {
    i % 3 + 1
}

type Equations = Vec<(Poly, Poly)>;

/// `(lhs, rhs)` of `uᵢu_{i+1} = δᵢu_{i+2}` and `uᵢ² = δ_{i−1}δᵢ`.
fn symbolic_equations(r: &PolyRing) -> (Equations, Equations) {
    let u = |i: usize| r.var(&format!("u{i}"));
    let d = |i: usize| r.var(&format!("d{i}"));
    let mixed = (1..=3).map(|i| (&u(i) * &u(next(i)), &d(i) * &u(next(next(i))))).collect();
    let squares = (1..=3).map(|i| (u(i).pow(2), &d(prev(i)) * &d(i))).collect();
    (mixed, squares)
}

pub fn bidouble_equations(arr: &BurniatArrangement) -> Result<BidoubleSystem> {
    let report = arr.validate();
    if !report.is_valid() {
        return Err(Error::InvalidArrangement(report.violations.join("; ")));
    }
    let r = PolyRing::new(&["u1", "u2", "u3", "d1", "d2", "d3", "w1", "w2", "w3"]);
    let (mixed, squares) = symbolic_equations(&r);
    let mut equations = Vec::new();
    for i in 0..3 {
        for (lhs, rhs) in [&mixed[i], &squares[i]] {
            equations.push(BidoubleEquation { lhs: lhs.to_string(), rhs: rhs.to_string() });
        }
    }
    let w = |i: usize| r.var(&format!("w{i}"));
    let mut images: Vec<Poly> = Vec::new();
    for i in 1..=3 {
        images.push(&w(prev(i)) * &w(i));
    }
    for i in 1..=3 {
        images.push(w(i).pow(2));
    }
    for i in 1..=3 {
        images.push(w(i));
    }
    let generic_solution =
        mixed.iter().chain(&squares).all(|(l, rh)| l.substitute(&images) == rh.substitute(&images));
    let prod = |v: &[(Poly, Poly)], left: bool| {
        v.iter().fold(r.one(), |acc, (l, rh)| &acc * if left { l } else { rh })
    };
    // Πl_sq / Πr_sq = (Πl_mix / Πr_mix)²
    let product_consistency = &prod(&squares, true) * &prod(&mixed, false).pow(2)
        == &prod(&squares, false) * &prod(&mixed, true).pow(2);

    let xr = PolyRing::new(&["x", "y", "z"]);
    let form = |c: &[Rat; 3]| {
        let mut p = xr.zero();
        for (k, name) in ["x", "y", "z"].iter().enumerate() {
            p = &p + &xr.var(name).scale(&c[k]);
        }
        p
    };
    let deltas = (1..=3u8)
        .map(|f| {
            (1..=3).fold(xr.one(), |acc, j| &acc * &form(&arr.line(LineLabel { family: f, index: j }).0)).to_string()
        })
        .collect();
    let exceptional_parts = (1..=3).map(|i| format!("E{}", (i + 1) % 3 + 1)).collect();
    let branch_classes: Vec<PicardClass> = (1..=3).map(PicardClass::branch).collect();
    let bundle_classes: Vec<PicardClass> = (1..=3).map(PicardClass::cover_bundle).collect();
    let class_identities = std::array::from_fn(|k| {
        let i = k + 1;
        PicardClass::branch(prev(i)) + PicardClass::branch(next(i)) == PicardClass::cover_bundle(i).scale(2)
    });
    Ok(BidoubleSystem {
        equations,
        deltas,
        exceptional_parts,
        branch_classes,
        bundle_classes,
        class_identities,
        generic_solution,
        product_consistency,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularityType {
    pub descriptor: String,
    pub local_model: String,
    /// `(a₁, a₂, a₃)` with `a₁ℓ₁ + a₂ℓ₂ + a₃ℓ₃ = 0` for the three line forms.
    pub linear_relation: [String; 3],
    /// `x := a₁ℓ₁`, `y := −a₂ℓ₂` give `δ₁ − δ₂ = δ₃` with `δ₃ = −a₃ℓ₃`.
    pub normalization_certified: bool,
    /// `w₃ = uv`, `u² = w₁ + w₂`, `v² = w₁ − w₂` solve `w₃² = w₁² − w₂²`.
    pub a1_model_certified: bool,
}

/// A nonzero kernel vector of the 3×3 matrix with the given rows, which
/// must have rank 2.
fn relation(rows: [&[Rat; 3]; 3]) -> Option<[Rat; 3]> {
    // Coefficients a with Σ aₖ rowₖ = 0: a is orthogonal to every column.
    let col = |c: usize| -> [Rat; 3] { std::array::from_fn(|k| rows[k][c].clone()) };
    let (c0, c1, c2) = (col(0), col(1), col(2));
    let cand = [super::cross(&c0, &c1), super::cross(&c0, &c2), super::cross(&c1, &c2)];
    cand.into_iter().find(|v| {
        v.iter().any(|x| !x.is_zero()) && [&c0, &c1, &c2].iter().all(|c| super::dot(v, c).is_zero())
    })
}

pub fn singularity_type(arr: &BurniatArrangement, tp: &TriplePoint) -> Result<SingularityType> {
    if !tp.is_one_one_one() {
        let labels: Vec<String> = tp.incident_lines.iter().map(|l| l.to_string()).collect();
        return Err(Error::NotOneOneOne(labels.join(", ")));
    }
    let forms: Vec<&[Rat; 3]> = (1..=3).map(|f| &arr.line(tp.lies_on_family(f).unwrap()).0).collect();
    let rank_two = det3(forms[0], forms[1], forms[2]).is_zero();
    let a = if rank_two { relation([forms[0], forms[1], forms[2]]) } else { None };
    let normalization_certified = a.as_ref().is_some_and(|a| {
        a.iter().all(|x| !x.is_zero()) && {
            let combo: [Rat; 3] = std::array::from_fn(|c| {
                let d1 = &a[0] * &forms[0][c];
                let d2 = -(&a[1] * &forms[1][c]);
                let d3 = -(&a[2] * &forms[2][c]);
                d1 - d2 - d3
            });
            combo.iter().all(Zero::is_zero)
        }
    });
    let r = PolyRing::new(&["w1", "w2", "u", "v"]);
    let (w1, w2, u, v) = (r.var("w1"), r.var("w2"), r.var("u"), r.var("v"));
    let w3 = &u * &v;
    let w3_sq = w3.pow(2).reduce_square("u", &(&w1 + &w2)).reduce_square("v", &(&w1 - &w2));
    let a1_model_certified = w3_sq == &w1.pow(2) - &w2.pow(2);
    let linear_relation = match &a {
        Some(a) => std::array::from_fn(|k| a[k].to_string()),
        None => Default::default(),
    };
    Ok(SingularityType {
        descriptor: "quarter(1,1)".to_string(),
        local_model: "w3^2 = w1^2 - w2^2".to_string(),
        linear_relation,
        normalization_certified,
        a1_model_certified,
    })
}

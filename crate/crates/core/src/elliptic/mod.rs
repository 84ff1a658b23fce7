//! Symbolic identities behind the elliptic normal forms and the `K² = 2`
//! constant.

mod constant;
mod transforms;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::poly::{Poly, PolyRing};
use crate::report::{Check, Report};

pub use constant::{solve_k2_two_constant, CenterBitRecord, ConstantSolution, RootCandidate};
pub use transforms::{
    cover_ring, curve_equations, generated_group, section_v, section_w, CoverTransform, TransformName,
    VARIABLES,
};

/// Signs of `V` and `W` under `g₁, f₂, f₃, g₂, g₃`.
pub const EXPECTED_V_SIGNS: [i8; 5] = [-1, 1, -1, -1, 1];
pub const EXPECTED_W_SIGNS: [i8; 5] = [-1, -1, 1, 1, -1];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignRow {
    pub transform: TransformName,
    pub v_sign: Option<i8>,
    pub w_sign: Option<i8>,
}

fn v_sign(t: &CoverTransform) -> Option<i8> {
    let v = section_v();
    let image = t.pull_back(&v);
    [1i8, -1].into_iter().find(|&s| image == if s > 0 { v.clone() } else { -&v })
}

fn w_sign(t: &CoverTransform) -> Option<i8> {
    let w = section_w();
    let image = t.pull_back_rational(&w)?;
    [1i8, -1].into_iter().find(|&s| image == if s > 0 { w.clone() } else { w.neg() })
}

/// The observed signs, one row per named transform.
pub fn sign_table() -> Vec<SignRow> {
    TransformName::ALL
        .iter()
        .map(|&n| {
            let t = CoverTransform::named(n);
            SignRow { transform: n, v_sign: v_sign(&t), w_sign: w_sign(&t) }
        })
        .collect()
}

pub fn verify_sign_table() -> Report {
    let mut r = Report::new("sign table for V and W");
    for (k, row) in sign_table().iter().enumerate() {
        r.push(Check::with_detail(
            format!("{}: V -> {:+}V", row.transform, EXPECTED_V_SIGNS[k]),
            row.v_sign == Some(EXPECTED_V_SIGNS[k]),
            format!("observed {:?}", row.v_sign),
        ));
        r.push(Check::with_detail(
            format!("{}: W -> {:+}W", row.transform, EXPECTED_W_SIGNS[k]),
            row.w_sign == Some(EXPECTED_W_SIGNS[k]),
            format!("observed {:?}", row.w_sign),
        ));
    }
    let [e1, e2] = curve_equations();
    for n in TransformName::ALL {
        let t = CoverTransform::named(n);
        r.check(format!("{n} is an involution"), t.is_involution());
        for (label, e) in [("v-equation", &e1), ("w-equation", &e2)] {
            let image = t.pull_back(e);
            r.check(format!("{n} maps the {label} to a monomial multiple"), image.monomial_multiple_of(e).is_some());
        }
    }
    let g1 = CoverTransform::named(TransformName::G1);
    let g2 = CoverTransform::named(TransformName::G2);
    let g3 = CoverTransform::named(TransformName::G3);
    r.check("g3 = g1 g2", g1.compose(&g2).projectively_equal(&g3));
    r.check("the transforms generate a group of order 8", generated_group().len() == 8);
    let mut multiplicative = true;
    for a in TransformName::ALL {
        for b in TransformName::ALL {
            let (ta, tb) = (CoverTransform::named(a), CoverTransform::named(b));
            let ab = ta.compose(&tb);
            let prod = |x: Option<i8>, y: Option<i8>| x.zip(y).map(|(x, y)| x * y);
            multiplicative &= v_sign(&ab) == prod(v_sign(&ta), v_sign(&tb));
            multiplicative &= w_sign(&ab) == prod(w_sign(&ta), w_sign(&tb));
        }
    }
    r.check("signs are characters on all 25 products", multiplicative);
    r
}

fn ring3(prefixes: &[&str]) -> PolyRing {
    let names: Vec<String> = prefixes.iter().flat_map(|p| (1..=3).map(move |i| format!("{p}{i}"))).collect();
    PolyRing::new(&names)
}

fn product(r: &PolyRing, prefix: &str) -> Poly {
    (1..=3).fold(r.one(), |acc, i| &acc * &r.var(&format!("{prefix}{i}")))
}

/// Applies `vᵢ ↦ εᵢvᵢ`.
fn act_on_v(p: &Poly, r: &PolyRing, eps: [i64; 3]) -> Poly {
    let images: Vec<(String, Poly)> =
        (0..3).map(|i| (format!("v{}", i + 1), r.var(&format!("v{}", i + 1)).scale_int(eps[i]))).collect();
    let refs: Vec<(&str, Poly)> = images.iter().map(|(n, p)| (n.as_str(), p.clone())).collect();
    p.substitute_named(&refs)
}

fn sign_vectors() -> impl Iterator<Item = [i64; 3]> {
    (0..8).map(|m| std::array::from_fn(|k| if (m >> k) & 1 == 1 { -1 } else { 1 }))
}

pub fn verify_splitting() -> Report {
    let mut r = Report::new("splitting of the pulled-back Del Pezzo surface");
    let ring = ring3(&["v", "v'"]);
    let a = product(&ring, "v");
    let b = product(&ring, "v'");
    let lhs = &a.pow(2) - &b.pow(2);
    let z = &a - &b;
    let zp = &a + &b;
    r.check("(v1v2v3)^2 - (v1'v2'v3')^2 factors as Z * Z'", lhs == &z * &zp);
    for eps in sign_vectors() {
        let even = eps.iter().product::<i64>() == 1;
        let image = act_on_v(&z, &ring, eps);
        let holds = if even { image == z } else { image == -&zp };
        let what = if even { "fixes Z" } else { "sends Z to -Z'" };
        r.check(format!("eps = {eps:?} {what}"), holds);
    }
    let stabilizer = sign_vectors().filter(|&e| act_on_v(&z, &ring, e) == z).count();
    r.check("the stabilizer of Z has order 4", stabilizer == 4);
    r
}

fn prev(i: usize) -> usize {
    (i + 1) % 3 + 1
}

/// `uᵢ = W_{i−1}Wᵢvᵢvᵢ'`.
fn u(r: &PolyRing, i: usize) -> Poly {
    let var = |p: &str, k: usize| r.var(&format!("{p}{k}"));
    &(&(&var("W", prev(i)) * &var("W", i)) * &var("v", i)) * &var("v'", i)
}

type Divisor = BTreeMap<String, i64>;

fn divisor(parts: &[String]) -> Divisor {
    let mut d = Divisor::new();
    for p in parts {
        *d.entry(p.clone()).or_default() += 1;
    }
    d
}

fn plus(a: &Divisor, b: &Divisor) -> Divisor {
    let mut d = a.clone();
    for (k, v) in b {
        *d.entry(k.clone()).or_default() += v;
    }
    d
}

/// `Dᵢ + D_{i−1} = div(δ'ᵢδ'_{i−1}xᵢxᵢ')` as formal sums of labeled curves.
pub fn divisor_identity_holds(i: usize) -> bool {
    let idx = |k: isize| ((i as isize - 1 + k).rem_euclid(3) + 1) as usize;
    let d = |k: usize| {
        divisor(&[format!("D{k},1"), format!("E{}", (k + 1) % 3 + 1), format!("D'{k}")])
    };
    let div_x = divisor(&[format!("D{i},1"), format!("E{}", idx(1))]);
    let div_xp = divisor(&[format!("D{},1", idx(-1)), format!("E{}", idx(-1))]);
    let lhs = plus(&d(i), &d(idx(-1)));
    let primes = divisor(&[format!("D'{i}"), format!("D'{}", idx(-1))]);
    let rhs = plus(&plus(&primes, &div_x), &div_xp);
    lhs == rhs
}

/// The standard basis of `G²`, written as `(ε', ε)` with additive bits.
pub const G2_BASIS: [([u8; 3], [u8; 3]); 3] =
    [([1, 0, 0], [1, 1, 0]), ([0, 1, 0], [0, 1, 1]), ([0, 0, 1], [1, 0, 1])];

pub fn verify_ui_identity() -> Report {
    let mut r = Report::new("u_i^2 covering identity");
    let ring = ring3(&["v", "v'", "x", "x'", "W", "d"]);
    let var = |p: &str, k: usize| ring.var(&format!("{p}{k}"));
    for i in 1..=3 {
        let mut sq = u(&ring, i).pow(2);
        for k in 1..=3 {
            sq = sq.reduce_square(&format!("v{k}"), &var("x", k));
            sq = sq.reduce_square(&format!("v'{k}"), &var("x'", k));
            sq = sq.reduce_square(&format!("W{k}"), &var("d", k));
        }
        let target = &(&(&var("d", i) * &var("d", prev(i))) * &var("x", i)) * &var("x'", i);
        r.check(format!("u{i}^2 = d'{i} d'{} x{i} x{i}'", prev(i)), sq == target);
        r.check(format!("D{i} + D{} = div(d'{i} d'{} x{i} x{i}')", prev(i), prev(i)), divisor_identity_holds(i));
    }
    // (ε, ε') acts by vᵢ ↦ εᵢvᵢ and Wᵢ ↦ εᵢ'Wᵢ.
    let act = |p: &Poly, eps: [i64; 3], epsp: [i64; 3]| {
        let mut images: Vec<(String, Poly)> = Vec::new();
        for k in 0..3 {
            images.push((format!("v{}", k + 1), var("v", k + 1).scale_int(eps[k])));
            images.push((format!("W{}", k + 1), var("W", k + 1).scale_int(epsp[k])));
        }
        let refs: Vec<(&str, Poly)> = images.iter().map(|(n, p)| (n.as_str(), p.clone())).collect();
        p.substitute_named(&refs)
    };
    let mut stabilizer = Vec::new();
    for eps in sign_vectors().filter(|e| e.iter().product::<i64>() == 1) {
        for epsp in sign_vectors() {
            if (1..=3).all(|i| act(&u(&ring, i), eps, epsp) == u(&ring, i)) {
                stabilizer.push((eps, epsp));
            }
        }
    }
    r.check("the stabilizer of u1, u2, u3 has order 8", stabilizer.len() == 8);
    let predicted =
        stabilizer.iter().all(|(e, ep)| (0..3).all(|k| ep[(k + 2) % 3] * ep[k] * e[k] == 1));
    r.check("stabilizer is eps'_{i-1} eps'_i eps_i = 1", predicted);
    let to_sign = |b: u8| if b == 1 { -1 } else { 1 };
    let basis_ok = G2_BASIS.iter().all(|(ep, e)| {
        let eps = e.map(to_sign);
        let epsp = ep.map(to_sign);
        stabilizer.contains(&(eps, epsp))
    });
    r.check("the listed basis lies in the stabilizer", basis_ok);
    r
}

//! Fixed points of `γ₁γ₂γ₃` on `E₁×E₂×E₃` and the `λ̂` bookkeeping.
//!
//! Points live in `(¼Λ)/Λ` and are stored as numerators over 4, reduced
//! mod 4, in the basis `(e₁, e₂, e₃, e₁', e₂', e₃')`. The reference vector
//! is `ε = (e₁, −e₂, −e₃)`, so `¼ε` has numerators `(1, 3, 3, 0, 0, 0)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::affine::{build_gamma, AffineMap, LatticeVector};
use crate::error::{Error, Result};

/// `¼ε` as numerators over 4.
pub const QUARTER_EPSILON: [u8; 6] = [1, 3, 3, 0, 0, 0];

/// `½ε` as numerators over 4, unreduced.
const HALF_EPSILON: [i64; 6] = [2, -2, -2, 0, 0, 0];

/// A point of `(¼Λ)/Λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TorusPoint(pub [u8; 6]);

impl TorusPoint {
    pub fn new(q: [i64; 6]) -> Self {
        TorusPoint(q.map(|x| x.rem_euclid(4) as u8))
    }

    pub fn quarter_epsilon() -> Self {
        TorusPoint(QUARTER_EPSILON)
    }

    /// `g(z)`, well defined on the torus for `g ∈ Γ`.
    pub fn apply(&self, g: &AffineMap) -> TorusPoint {
        TorusPoint::new(std::array::from_fn(|k| {
            g.linear.sign_at(k) * self.0[k] as i64 + 2 * g.translation.0[k]
        }))
    }

    /// `z + ½v`.
    pub fn add_half(&self, v: LatticeVector) -> TorusPoint {
        TorusPoint::new(std::array::from_fn(|k| self.0[k] as i64 + 2 * v.0[k]))
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})/4", parts.join(","))
    }
}

/// An element of `Λ/2Λ` split as `(a₁,a₂,a₃ | b₁,b₂,b₃)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LambdaHat(pub [u8; 6]);

impl LambdaHat {
    pub const ZERO: LambdaHat = LambdaHat([0; 6]);

    pub fn e_part(&self) -> [u8; 3] {
        [self.0[0], self.0[1], self.0[2]]
    }

    pub fn e_prime_part(&self) -> [u8; 3] {
        [self.0[3], self.0[4], self.0[5]]
    }

    pub fn to_lattice(self) -> LatticeVector {
        LatticeVector(self.0.map(i64::from))
    }

    pub fn from_lattice(v: LatticeVector) -> Self {
        LambdaHat(v.mod2())
    }
}

impl std::ops::Add for LambdaHat {
    type Output = LambdaHat;
    fn add(self, o: LambdaHat) -> LambdaHat {
        LambdaHat(std::array::from_fn(|k| self.0[k] ^ o.0[k]))
    }
}

impl fmt::Display for LambdaHat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.e_part();
        let b = self.e_prime_part();
        write!(f, "({},{},{}|{},{},{})", a[0], a[1], a[2], b[0], b[1], b[2])
    }
}

/// The 64 solutions of `2z ≡ ½ε mod Λ`: odd `e`-numerators, even
/// `e'`-numerators. Sorted.
pub fn fixed_points() -> Vec<TorusPoint> {
    let mut out = Vec::with_capacity(64);
    for mask in 0u8..64 {
        let bit = |k: u8| (mask >> k) & 1;
        out.push(TorusPoint([
            1 + 2 * bit(0),
            1 + 2 * bit(1),
            1 + 2 * bit(2),
            2 * bit(3),
            2 * bit(4),
            2 * bit(5),
        ]));
    }
    out.sort();
    out
}

/// Every point of `(¼Λ)/Λ` fixed by `g`, by exhaustion over 4⁶ points.
pub fn fixed_points_brute_force(g: &AffineMap) -> Vec<TorusPoint> {
    let mut out = Vec::new();
    for code in 0..4096u32 {
        let p = TorusPoint(std::array::from_fn(|k| ((code >> (2 * k)) & 3) as u8));
        if p.apply(g) == p {
            out.push(p);
        }
    }
    out.sort();
    out
}

pub fn is_fixed_point(z: &TorusPoint) -> bool {
    (0..3).all(|k| z.0[k] % 2 == 1) && (3..6).all(|k| z.0[k].is_multiple_of(2))
}

/// The unique `λ̂ ∈ Λ/2Λ` with `z = ¼ε + ½λ̂`.
pub fn lambda_hat(z: &TorusPoint) -> Result<LambdaHat> {
    if !is_fixed_point(z) {
        return Err(Error::NotAFixedPoint);
    }
    Ok(LambdaHat(std::array::from_fn(|k| {
        let d = (z.0[k] as i64 - QUARTER_EPSILON[k] as i64).rem_euclid(4);
        (d / 2) as u8
    })))
}

/// `¼ε + ½λ̂`.
pub fn point_of(lh: LambdaHat) -> TorusPoint {
    TorusPoint::quarter_epsilon().add_half(lh.to_lattice())
}

/// The increment of `λ̂` under `γᵢ`.
pub fn gamma_increment(i: usize) -> Result<LambdaHat> {
    match i {
        1 => Ok(LambdaHat([1, 1, 0, 0, 0, 0])),
        2 => Ok(LambdaHat([0, 1, 1, 0, 0, 0])),
        3 => Ok(LambdaHat([1, 0, 1, 0, 0, 0])),
        _ => Err(Error::InvalidIndex(i)),
    }
}

pub fn gamma_action_on_lambda_hat(lh: LambdaHat, i: usize) -> Result<LambdaHat> {
    Ok(lh + gamma_increment(i)?)
}

/// Whether `g` fixes some point of `ℂ³` lying over `z`. With `g = (s, t)`
/// and a lift `q + 4μ` in quarter units, coordinate `k` needs `t_k = 0` when
/// `s_k = 1` and `2q_k + 8μ_k = t_k` when `s_k = −1`.
pub fn has_fixed_lift(g: &AffineMap, z: &TorusPoint) -> bool {
    (0..6).all(|k| {
        let t = 2 * g.translation.0[k];
        if g.linear.sign_at(k) > 0 {
            t == 0
        } else {
            (t - 2 * z.0[k] as i64).rem_euclid(8) == 0
        }
    })
}

/// Whether `γ₁γ₂γ₃ t_λ` fixes a point of `ℂ³` over `z`.
pub fn fixed_point_check(lambda: LatticeVector, z: &TorusPoint) -> bool {
    let g = build_gamma().gamma123().compose(&AffineMap::translation_by(lambda));
    has_fixed_lift(&g, z)
}

/// A point of `¼Λ ⊂ ℂ³` with unreduced numerators over 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LiftedPoint(pub [i64; 6]);

impl LiftedPoint {
    pub fn project(&self) -> TorusPoint {
        TorusPoint::new(self.0)
    }

    pub fn translate(&self, v: LatticeVector) -> LiftedPoint {
        LiftedPoint(std::array::from_fn(|k| self.0[k] + 4 * v.0[k]))
    }

    pub fn apply(&self, g: &AffineMap) -> LiftedPoint {
        LiftedPoint(std::array::from_fn(|k| g.linear.sign_at(k) * self.0[k] + 2 * g.translation.0[k]))
    }

    /// The exact `λ̂ ∈ Λ` with `2z̃ = ½ε + λ̂`, if `z̃` lies over a fixed point.
    pub fn lambda_hat(&self) -> Option<LatticeVector> {
        let mut v = [0i64; 6];
        for k in 0..6 {
            let d = 2 * self.0[k] - HALF_EPSILON[k];
            if d % 4 != 0 {
                return None;
            }
            v[k] = d / 4;
        }
        Some(LatticeVector(v))
    }

    /// Whether `γ₁γ₂γ₃ t_λ` fixes this exact point.
    pub fn is_fixed_by(&self, lambda: LatticeVector) -> bool {
        let g = build_gamma().gamma123().compose(&AffineMap::translation_by(lambda));
        self.apply(&g) == *self
    }
}

/// A fixed point together with its images under `γ₁, γ₂, γ₃`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointOrbit {
    pub representative: TorusPoint,
    pub images: [TorusPoint; 3],
}

impl FixedPointOrbit {
    pub fn points(&self) -> BTreeSet<TorusPoint> {
        std::iter::once(self.representative).chain(self.images).collect()
    }
}

/// The 16 orbits of `⟨γ₁, γ₂, γ₃⟩` on the fixed points, each represented by
/// its smallest point.
pub fn fixed_point_orbits() -> Vec<FixedPointOrbit> {
    let g = build_gamma();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for z in fixed_points() {
        if seen.contains(&z) {
            continue;
        }
        let images = [1, 2, 3].map(|i| z.apply(&g.gamma(i)));
        let orbit = FixedPointOrbit { representative: z, images };
        seen.extend(orbit.points());
        out.push(orbit);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixty_four_fixed_points() {
        let fp = fixed_points();
        assert_eq!(fp.len(), 64);
        assert_eq!(fp, fixed_points_brute_force(&build_gamma().gamma123()));
        assert!(fp.contains(&TorusPoint::quarter_epsilon()));
    }

    #[test]
    fn lambda_hat_basics() {
        assert_eq!(lambda_hat(&TorusPoint::quarter_epsilon()).unwrap(), LambdaHat::ZERO);
        let z = TorusPoint::quarter_epsilon().add_half(LatticeVector::e_prime(1));
        assert_eq!(lambda_hat(&z).unwrap(), LambdaHat([0, 0, 0, 1, 0, 0]));
        assert_eq!(lambda_hat(&TorusPoint([0; 6])), Err(Error::NotAFixedPoint));
    }

    #[test]
    fn lambda_hat_is_bijective() {
        let set: BTreeSet<LambdaHat> = fixed_points().iter().map(|z| lambda_hat(z).unwrap()).collect();
        assert_eq!(set.len(), 64);
        for z in fixed_points() {
            assert_eq!(point_of(lambda_hat(&z).unwrap()), z);
        }
    }

    #[test]
    fn increments_match_direct_action() {
        let g = build_gamma();
        for z in fixed_points() {
            let lh = lambda_hat(&z).unwrap();
            for i in 1..=3 {
                let w = z.apply(&g.gamma(i));
                assert_eq!(lambda_hat(&w).unwrap(), gamma_action_on_lambda_hat(lh, i).unwrap());
            }
        }
        assert_eq!(gamma_action_on_lambda_hat(LambdaHat::ZERO, 1).unwrap(), LambdaHat([1, 1, 0, 0, 0, 0]));
        assert_eq!(gamma_action_on_lambda_hat(LambdaHat::ZERO, 4), Err(Error::InvalidIndex(4)));
    }

    #[test]
    fn composite_action() {
        let g = build_gamma();
        let g12 = g.gamma(1).compose(&g.gamma(2));
        for z in fixed_points() {
            let lh = lambda_hat(&z).unwrap();
            let direct = lambda_hat(&z.apply(&g12)).unwrap();
            assert_eq!(direct, gamma_action_on_lambda_hat(lh, 3).unwrap());
        }
    }

    #[test]
    fn check_examples() {
        let z = TorusPoint::quarter_epsilon();
        assert!(fixed_point_check(LatticeVector::ZERO, &z));
        assert!(!fixed_point_check(LatticeVector::e(1), &z));
        assert!(fixed_point_check(LatticeVector::e_prime(1).scale(2), &z));
    }

    #[test]
    fn check_matches_minus_lambda_hat() {
        for z in fixed_points() {
            let lh = lambda_hat(&z).unwrap();
            for code in 0..64u8 {
                let lambda = LatticeVector(std::array::from_fn(|k| ((code >> k) & 1) as i64));
                let expected = LambdaHat::from_lattice(-lambda) == lh;
                assert_eq!(fixed_point_check(lambda, &z), expected);
            }
        }
    }

    #[test]
    fn orbits() {
        let orbits = fixed_point_orbits();
        assert_eq!(orbits.len(), 16);
        assert!(orbits.iter().all(|o| o.points().len() == 4));
    }
}

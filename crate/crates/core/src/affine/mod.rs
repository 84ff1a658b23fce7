//! The affine group `Γ ≤ 𝔸(3, ℂ)` generated by three glide maps and the
//! lattice `Λ = Λ₁ ⊕ Λ₂ ⊕ Λ₃`, with `Λᵢ = ℤeᵢ ⊕ ℤeᵢ'`.
//!
//! Vectors are stored in the basis `(e₁, e₂, e₃, e₁', e₂', e₃')`. Only the
//! combinatorics of the lattice matters, so no complex numbers appear: a
//! linear part is a sign per complex coordinate and a translation is an
//! element of `½Λ`.

mod abelian;
mod relations;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

pub use abelian::{
    abelian_quotient_map, gamma_abelianization, gamma_relation_matrix, glide_class,
    index2_subgroup, rows_to_matrix, subgroup_abelianization, subgroup_relation_matrix,
    AbelianizationColumns,
    RelationFamily, RelationRow,
};
pub use relations::{
    classify_pair, gamma_presentation, verify_relations, Commutation, Presentation,
    RelationCheck, RelationReport, Word,
};

/// An element of `Λ` in the basis `(e₁, e₂, e₃, e₁', e₂', e₃')`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeVector(pub [i64; 6]);

impl LatticeVector {
    pub const ZERO: LatticeVector = LatticeVector([0; 6]);

    /// `eᵢ` for `i ∈ {1,2,3}`.
    pub fn e(i: usize) -> Self {
        assert!((1..=3).contains(&i));
        let mut v = [0; 6];
        v[i - 1] = 1;
        LatticeVector(v)
    }

    /// `eᵢ'` for `i ∈ {1,2,3}`.
    pub fn e_prime(i: usize) -> Self {
        assert!((1..=3).contains(&i));
        let mut v = [0; 6];
        v[i + 2] = 1;
        LatticeVector(v)
    }

    /// The basis in storage order.
    pub fn basis() -> [LatticeVector; 6] {
        std::array::from_fn(|k| {
            let mut v = [0; 6];
            v[k] = 1;
            LatticeVector(v)
        })
    }

    pub fn scale(self, k: i64) -> Self {
        LatticeVector(self.0.map(|x| k * x))
    }

    /// Reduction to `Λ/2Λ`.
    pub fn mod2(self) -> [u8; 6] {
        self.0.map(|x| x.rem_euclid(2) as u8)
    }

    pub fn to_half(self) -> HalfVector {
        HalfVector(self.0.map(|x| 2 * x))
    }
}

impl Add for LatticeVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        LatticeVector(std::array::from_fn(|k| self.0[k] + o.0[k]))
    }
}

impl Sub for LatticeVector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        LatticeVector(std::array::from_fn(|k| self.0[k] - o.0[k]))
    }
}

impl Neg for LatticeVector {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 6] = ["e1", "e2", "e3", "e1'", "e2'", "e3'"];
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}{}", NAMES[k])?;
            } else {
                write!(f, "{sign}{mag}{}", NAMES[k])?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// An element of `½Λ`, stored as numerators over 2.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfVector(pub [i64; 6]);

impl HalfVector {
    pub const ZERO: HalfVector = HalfVector([0; 6]);

    /// `Some(λ)` when the vector lies in `Λ`.
    pub fn to_lattice(self) -> Option<LatticeVector> {
        self.0.iter().all(|x| x % 2 == 0).then(|| LatticeVector(self.0.map(|x| x / 2)))
    }
}

impl Add for HalfVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        HalfVector(std::array::from_fn(|k| self.0[k] + o.0[k]))
    }
}

impl Neg for HalfVector {
    type Output = Self;
    fn neg(self) -> Self {
        HalfVector(self.0.map(|x| -x))
    }
}

/// Diagonal linear part: one sign per complex coordinate `z₁, z₂, z₃`.
/// Sign `i` multiplies both `eᵢ` and `eᵢ'` coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignVector(pub [i8; 3]);

impl SignVector {
    pub const IDENTITY: SignVector = SignVector([1, 1, 1]);

    pub fn compose(self, o: SignVector) -> SignVector {
        SignVector(std::array::from_fn(|i| self.0[i] * o.0[i]))
    }

    /// Sign acting on storage coordinate `k` of a six-vector.
    pub fn sign_at(self, k: usize) -> i64 {
        self.0[k % 3] as i64
    }

    pub fn act(self, v: HalfVector) -> HalfVector {
        HalfVector(std::array::from_fn(|k| self.sign_at(k) * v.0[k]))
    }

    pub fn act_lattice(self, v: LatticeVector) -> LatticeVector {
        LatticeVector(std::array::from_fn(|k| self.sign_at(k) * v.0[k]))
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }
}

/// `z ↦ A z + t` with `A` diagonal of signs and `t ∈ ½Λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineMap {
    pub linear: SignVector,
    pub translation: HalfVector,
}

impl AffineMap {
    pub const IDENTITY: AffineMap =
        AffineMap { linear: SignVector::IDENTITY, translation: HalfVector::ZERO };

    pub fn translation_by(v: LatticeVector) -> Self {
        AffineMap { linear: SignVector::IDENTITY, translation: v.to_half() }
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        AffineMap {
            linear: self.linear.compose(other.linear),
            translation: self.linear.act(other.translation) + self.translation,
        }
    }

    pub fn inverse(&self) -> AffineMap {
        AffineMap { linear: self.linear, translation: -self.linear.act(self.translation) }
    }

    /// Applies the map to a point of `½Λ ⊗ ℚ` given by numerators over 2.
    pub fn apply(&self, z: HalfVector) -> HalfVector {
        self.linear.act(z) + self.translation
    }

    pub fn pow(&self, n: u32) -> AffineMap {
        (0..n).fold(AffineMap::IDENTITY, |acc, _| acc.compose(self))
    }

    pub fn is_translation(&self) -> bool {
        self.linear.is_identity()
    }

    /// The translation vector when the map is a lattice translation.
    pub fn lattice_translation(&self) -> Option<LatticeVector> {
        if self.is_translation() {
            self.translation.to_lattice()
        } else {
            None
        }
    }

    /// `self · other · self⁻¹ · other⁻¹`.
    pub fn commutator(&self, other: &AffineMap) -> AffineMap {
        self.compose(other).compose(&self.inverse()).compose(&other.inverse())
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self.linear.0.iter().map(|&x| if x > 0 { "+" } else { "-" }).collect();
        write!(f, "({}; {:?}/2)", s.join(""), self.translation.0)
    }
}

/// `γ₁, γ₂, γ₃` and the lattice translations.
#[derive(Clone, Debug)]
pub struct Gamma {
    /// `γ₁, e₁', γ₂, e₂', γ₃, e₃'` in this order.
    pub generators: [AffineMap; 6],
    /// Translations by `e₁, e₂, e₃, e₁', e₂', e₃'`.
    pub lattice_basis: [AffineMap; 6],
}

impl Gamma {
    /// `γᵢ` for `i ∈ {1,2,3}`.
    pub fn gamma(&self, i: usize) -> AffineMap {
        self.generators[2 * (i - 1)]
    }

    pub fn t_e(&self, i: usize) -> AffineMap {
        self.lattice_basis[i - 1]
    }

    pub fn t_e_prime(&self, i: usize) -> AffineMap {
        self.lattice_basis[i + 2]
    }

    /// `γ₁γ₂γ₃`.
    pub fn gamma123(&self) -> AffineMap {
        self.gamma(1).compose(&self.gamma(2)).compose(&self.gamma(3))
    }
}

/// `γᵢ` on its own.
pub fn gamma(i: usize) -> AffineMap {
    assert!((1..=3).contains(&i));
    let mut signs = [1i8; 3];
    // γ₁ negates z₂, γ₂ negates z₃, γ₃ negates z₁.
    signs[i % 3] = -1;
    let mut t = [0i64; 6];
    t[i - 1] = 1;
    AffineMap { linear: SignVector(signs), translation: HalfVector(t) }
}

pub fn build_gamma() -> Gamma {
    let lattice_basis = LatticeVector::basis().map(AffineMap::translation_by);
    let generators = [
        gamma(1),
        lattice_basis[3],
        gamma(2),
        lattice_basis[4],
        gamma(3),
        lattice_basis[5],
    ];
    Gamma { generators, lattice_basis }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_one_acts_as_displayed() {
        // Track a generic point by giving every coordinate a distinct value.
        let z = HalfVector([10, 20, 30, 40, 50, 60]);
        let w = gamma(1).apply(z);
        assert_eq!(w, HalfVector([11, -20, 30, 40, -50, 60]));
    }

    #[test]
    fn inverse_gives_identity() {
        let g = build_gamma();
        for m in g.generators.iter().chain(g.lattice_basis.iter()) {
            assert_eq!(m.compose(&m.inverse()), AffineMap::IDENTITY);
            assert_eq!(m.inverse().compose(m), AffineMap::IDENTITY);
        }
    }

    #[test]
    fn squares_are_lattice_translations() {
        let g = build_gamma();
        for i in 1..=3 {
            assert_eq!(g.gamma(i).pow(2), g.t_e(i));
        }
    }

    #[test]
    fn gamma123_is_minus_identity_plus_half_epsilon() {
        let g = build_gamma().gamma123();
        assert_eq!(g.linear, SignVector([-1, -1, -1]));
        assert_eq!(g.translation, HalfVector([1, -1, -1, 0, 0, 0]));
    }

    #[test]
    fn lattice_vector_display() {
        let v = LatticeVector::e(1) - LatticeVector::e_prime(2).scale(2);
        assert_eq!(v.to_string(), "e1-2e2'");
        assert_eq!(LatticeVector::ZERO.to_string(), "0");
    }
}

//! Torsion relations `λ̂_{z(4)} − λ̂_{z(j)}` per `K²`, from the stated
//! vectors or from an arrangement.

use serde::Serialize;

use crate::affine::LatticeVector;
use crate::elliptic::solve_k2_two_constant;
use crate::error::{Error, Result};
use crate::plane::BurniatArrangement;

/// An element of `⊕ eᵢ'ℤ/2 ⊕ ℤ/2`, the last summand being the center of `ℍ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TorsionRelation {
    pub e_prime_part: [u8; 3],
    pub center_bit: u8,
}

impl TorsionRelation {
    pub const fn new(e_prime_part: [u8; 3], center_bit: u8) -> Self {
        TorsionRelation { e_prime_part, center_bit }
    }

    /// `c·e₁ + Σ bₖ eₖ'`. Once `e₁ = e₂ = e₃` holds, `e₁` is the center.
    pub fn lattice_vector(&self) -> LatticeVector {
        let mut v = [0i64; 6];
        v[0] = self.center_bit as i64;
        for k in 0..3 {
            v[3 + k] = self.e_prime_part[k] as i64;
        }
        LatticeVector(v)
    }

    fn permuted(&self, p: [usize; 3]) -> TorsionRelation {
        TorsionRelation { e_prime_part: std::array::from_fn(|k| self.e_prime_part[p[k]]), center_bit: self.center_bit }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationSource {
    Canonical,
    Arrangement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationSet {
    pub k_squared: i64,
    pub nodal: bool,
    pub source: RelationSource,
    pub relations: Vec<TorsionRelation>,
}

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

impl RelationSet {
    /// The stated vectors. For `K² = 4` only nonvanishing is asserted; the
    /// representative follows the reference fixtures.
    pub fn canonical(k_squared: i64, nodal: bool) -> Result<Self> {
        let r = TorsionRelation::new;
        let relations = match k_squared {
            5 => vec![],
            4 if nodal => vec![r([0, 1, 1], 0)],
            4 => vec![r([1, 1, 1], 0)],
            3 => vec![r([0, 1, 1], 0), r([1, 0, 1], 0)],
            2 => vec![r([0, 1, 1], 1), r([1, 0, 1], 1), r([1, 1, 0], 1)],
            k => return Err(Error::InvalidKSquared(k)),
        };
        Ok(RelationSet { k_squared, nodal: nodal && k_squared == 4, source: RelationSource::Canonical, relations })
    }

    /// `e'`-bits from the incidences of the `(1,1,1)` points; center bits
    /// from the `ℚ(ζ₈)` computation when `K² = 2`, zero otherwise.
    pub fn from_arrangement(arr: &BurniatArrangement) -> Result<Self> {
        let class = arr.classify()?;
        let k_squared = class.k_squared;
        if !(2..=5).contains(&k_squared) {
            return Err(Error::InvalidKSquared(k_squared));
        }
        let diffs = if k_squared == 5 { vec![] } else { arr.lambda_hat_differences()? };
        let centers: Vec<u8> = if k_squared == 2 {
            solve_k2_two_constant().records.iter().map(|r| r.center_bit).collect()
        } else {
            vec![0; diffs.len()]
        };
        let relations = diffs.iter().zip(centers).map(|(d, c)| TorsionRelation::new(*d, c)).collect();
        Ok(RelationSet { k_squared, nodal: class.nodal, source: RelationSource::Arrangement, relations })
    }

    pub fn with_center_bits(&self, bits: &[u8]) -> RelationSet {
        let mut out = self.clone();
        for (r, &b) in out.relations.iter_mut().zip(bits) {
            r.center_bit = b;
        }
        out
    }

    /// Same relations after one permutation of `e₁', e₂', e₃'` applied to all.
    pub fn matches_up_to_permutation(&self, other: &RelationSet) -> bool {
        if self.relations.len() != other.relations.len() {
            return false;
        }
        let mut target = other.relations.clone();
        target.sort_unstable();
        PERMUTATIONS.iter().any(|&p| {
            let mut mine: Vec<TorsionRelation> = self.relations.iter().map(|r| r.permuted(p)).collect();
            mine.sort_unstable();
            mine == target
        })
    }

    /// Rank of the `e'`-parts over `𝔽₂`.
    pub fn e_prime_rank(&self) -> usize {
        let mut rows: Vec<u8> = self
            .relations
            .iter()
            .map(|r| r.e_prime_part.iter().enumerate().fold(0u8, |acc, (k, &b)| acc | (b << k)))
            .collect();
        let mut rank = 0;
        for bit in 0..3 {
            if let Some(p) = rows.iter().position(|&r| r >> bit & 1 == 1) {
                let pivot = rows.swap_remove(p);
                for r in rows.iter_mut() {
                    if *r >> bit & 1 == 1 {
                        *r ^= pivot;
                    }
                }
                rank += 1;
            }
        }
        rank
    }
}

//! The constant `c` and the central components of the relations for
//! `K² = 2`, computed in `ℚ(ζ₈)`.

use serde::Serialize;

use crate::cyclotomic::CyclotomicNumber;

/// One relation `λ̂_{z(4)} − λ̂_{z(j)}` split as its `e'`-part and its
/// component in the center of `ℍ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CenterBitRecord {
    pub pair_index: usize,
    pub e_part: [u8; 3],
    pub e_prime_part: [u8; 3],
    pub center_bit: u8,
}

impl CenterBitRecord {
    /// `(e'-part, center)` as an element of `(ℤ/2)³ ⊕ ℤ/2`.
    pub fn vector(&self) -> ([u8; 3], u8) {
        (self.e_prime_part, self.center_bit)
    }
}

/// The outcome for one candidate `a = ζ₈ᵏ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootCandidate {
    pub exponent: i64,
    pub a_fourth: String,
    pub rejected: Option<String>,
    pub zeta_is_minus_a: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstantSolution {
    /// `a = ζ₈`.
    pub a: String,
    pub c: String,
    pub zeta: String,
    pub c_is_a_cubed: bool,
    pub zeta_is_minus_a: bool,
    pub a_fourth_is_minus_one: bool,
    /// `"g1"` when `(1 : ζ) = g₁(1 : a)`, `"identity"` when `ζ = a`.
    pub coordinate_relation: String,
    pub candidates: Vec<RootCandidate>,
    pub records: [CenterBitRecord; 3],
    pub records_sum: ([u8; 3], u8),
}

/// `(v', v)` on each of the three factors.
type VPoint = [(CyclotomicNumber, CyclotomicNumber); 3];

fn v_ratio(p: &VPoint) -> Option<CyclotomicNumber> {
    let num = p.iter().fold(CyclotomicNumber::one(), |acc, (_, v)| &acc * v);
    let den = p.iter().fold(CyclotomicNumber::one(), |acc, (vp, _)| &acc * vp);
    Some(&num * &den.inverse()?)
}

/// `f₂` swaps the two coordinates of `(v' : v)`.
fn f2(p: &(CyclotomicNumber, CyclotomicNumber)) -> (CyclotomicNumber, CyclotomicNumber) {
    (p.1.clone(), p.0.clone())
}

struct Outcome {
    c: CyclotomicNumber,
    zeta: CyclotomicNumber,
    sign: Option<bool>,
}

/// With `z(4) = (1 : a)` on every factor, `c` is forced by `Z_c`; then
/// `z(j)` keeps factor `k` as `(1 : ζ)` and applies `f₂` on the others,
/// and `Z_c` forces `ζ`.
fn solve_for(a: &CyclotomicNumber, k: usize) -> Option<Outcome> {
    let base = (CyclotomicNumber::one(), a.clone());
    let z4: VPoint = [base.clone(), base.clone(), base.clone()];
    let c = v_ratio(&z4)?;
    // ζ·Π_{m≠k} v_m = c·Π v'_m with ζ unknown: solve with ζ = 1 and rescale.
    let mut z = z4.clone();
    for (m, slot) in z.iter_mut().enumerate() {
        if m == k {
            *slot = (CyclotomicNumber::one(), CyclotomicNumber::one());
        } else {
            *slot = f2(&base);
        }
    }
    let partial = v_ratio(&z)?;
    let zeta = &c * &partial.inverse()?;
    let sign = if zeta == *a {
        Some(false)
    } else if zeta == -a {
        Some(true)
    } else {
        None
    };
    Some(Outcome { c, zeta, sign })
}

pub fn solve_k2_two_constant() -> ConstantSolution {
    let mut candidates = Vec::new();
    for e in 0..8 {
        let a = CyclotomicNumber::zeta_pow(e);
        let b = a.pow(2);
        let a4 = a.pow(4);
        let rejected = if b.pow(2) == CyclotomicNumber::one() {
            Some("b = 1/b".to_string())
        } else {
            None
        };
        let zeta_is_minus_a = solve_for(&a, 0).and_then(|o| o.sign);
        let rejected = rejected.or_else(|| zeta_is_minus_a.is_none().then(|| "zeta is not +-a".to_string()));
        candidates.push(RootCandidate { exponent: e, a_fourth: a4.to_string(), rejected, zeta_is_minus_a });
    }
    let a = CyclotomicNumber::zeta();
    let outcomes: Vec<Outcome> = (0..3).map(|k| solve_for(&a, k).expect("a is a unit")).collect();
    let first = &outcomes[0];
    let records: [CenterBitRecord; 3] = std::array::from_fn(|k| {
        let g1 = outcomes[k].sign == Some(true);
        let mut e_part = [0u8; 3];
        e_part[k] = g1 as u8;
        let e_prime_part = std::array::from_fn(|m| (m != k) as u8);
        let center_bit = e_part.iter().sum::<u8>() % 2;
        CenterBitRecord { pair_index: k + 1, e_part, e_prime_part, center_bit }
    });
    let mut sum = ([0u8; 3], 0u8);
    for r in &records {
        for m in 0..3 {
            sum.0[m] ^= r.e_prime_part[m];
        }
        sum.1 ^= r.center_bit;
    }
    ConstantSolution {
        a: a.to_string(),
        c: first.c.to_string(),
        zeta: first.zeta.to_string(),
        c_is_a_cubed: first.c == a.pow(3),
        zeta_is_minus_a: first.zeta == -&a && first.zeta == a.pow(5),
        a_fourth_is_minus_one: a.pow(4) == CyclotomicNumber::from_int(-1),
        coordinate_relation: match first.sign {
            Some(true) => "g1",
            Some(false) => "identity",
            None => "none",
        }
        .to_string(),
        candidates,
        records,
        records_sum: sum,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_and_zeta() {
        let s = solve_k2_two_constant();
        assert!(s.c_is_a_cubed);
        assert!(s.zeta_is_minus_a);
        assert!(s.a_fourth_is_minus_one);
        assert_eq!(s.coordinate_relation, "g1");
        assert_eq!(s.c, "z^3");
        assert_eq!(s.zeta, "-z");
    }

    #[test]
    fn only_primitive_roots_survive() {
        let s = solve_k2_two_constant();
        for c in &s.candidates {
            assert_eq!(c.rejected.is_none(), c.exponent % 2 == 1, "{c:?}");
            if c.rejected.is_none() {
                assert_eq!(c.zeta_is_minus_a, Some(true));
            }
        }
    }

    #[test]
    fn records() {
        let s = solve_k2_two_constant();
        let v: Vec<_> = s.records.iter().map(|r| r.vector()).collect();
        assert_eq!(v, vec![([0, 1, 1], 1), ([1, 0, 1], 1), ([1, 1, 0], 1)]);
        assert_eq!(s.records_sum, ([0, 0, 0], 1));
    }
}

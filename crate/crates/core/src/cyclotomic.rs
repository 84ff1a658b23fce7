//! Exact arithmetic in `ℚ(ζ₈)`, with `ζ⁴ = −1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `c₀ + c₁ζ + c₂ζ² + c₃ζ³`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber(pub [BigRational; 4]);

impl CyclotomicNumber {
    pub fn zero() -> Self {
        CyclotomicNumber(std::array::from_fn(|_| BigRational::zero()))
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut c = Self::zero();
        c.0[0] = BigRational::from_integer(n.into());
        c
    }

    /// `ζᵏ` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let r = k.rem_euclid(8) as usize;
        let mut c = Self::zero();
        c.0[r % 4] = if r < 4 { BigRational::one() } else { -BigRational::one() };
        c
    }

    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Writing `x = a + bζ` over `ℚ(i)` with `i = ζ²`, the product
    /// `x·(a − bζ) = a² − i·b²` lies in `ℚ(i)`.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let c = &self.0;
        let conj = CyclotomicNumber([c[0].clone(), -c[1].clone(), c[2].clone(), -c[3].clone()]);
        let n = self * &conj;
        // n = p + q·ζ²
        let (p, q) = (n.0[0].clone(), n.0[2].clone());
        let d = &p * &p + &q * &q;
        let n_inv = CyclotomicNumber([&p / &d, BigRational::zero(), -(&q / &d), BigRational::zero()]);
        Some(&conj * &n_inv)
    }

    /// `ζᵏ` equal to `self`, if any.
    pub fn as_root_of_unity(&self) -> Option<i64> {
        (0..8).find(|&k| Self::zeta_pow(k) == *self)
    }
}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, o: &CyclotomicNumber) -> CyclotomicNumber {
        CyclotomicNumber(std::array::from_fn(|k| &self.0[k] + &o.0[k]))
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, o: &CyclotomicNumber) -> CyclotomicNumber {
        CyclotomicNumber(std::array::from_fn(|k| &self.0[k] - &o.0[k]))
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber(std::array::from_fn(|k| -&self.0[k]))
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, o: &CyclotomicNumber) -> CyclotomicNumber {
        let mut out = CyclotomicNumber::zero();
        for i in 0..4 {
            for j in 0..4 {
                let t = &self.0[i] * &o.0[j];
                if i + j < 4 {
                    out.0[i + j] += t;
                } else {
                    out.0[i + j - 4] -= t;
                }
            }
        }
        out
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            let body = match (k, abs.is_one()) {
                (0, _) => abs.to_string(),
                (1, true) => "z".to_string(),
                (_, true) => format!("z^{k}"),
                (1, false) => format!("{abs}*z"),
                (_, false) => format!("{abs}*z^{k}"),
            };
            parts.push((sign, body));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        for (i, (sign, body)) in parts.iter().enumerate() {
            match (i, *sign) {
                (0, "-") => write!(f, "-{body}")?,
                (0, _) => write!(f, "{body}")?,
                (_, s) => write!(f, " {s} {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_relations() {
        let z = CyclotomicNumber::zeta();
        assert_eq!(z.pow(4), CyclotomicNumber::from_int(-1));
        assert_eq!(z.pow(8), CyclotomicNumber::one());
        assert_eq!(z.pow(5), -&z);
        assert_eq!(z.pow(10), z.pow(2));
        assert_eq!(z.pow(3).to_string(), "z^3");
    }

    #[test]
    fn inverses() {
        let x = CyclotomicNumber([
            BigRational::from_integer(2.into()),
            BigRational::from_integer((-1).into()),
            BigRational::new(1.into(), 3.into()),
            BigRational::from_integer(5.into()),
        ]);
        let y = x.inverse().unwrap();
        assert_eq!(&x * &y, CyclotomicNumber::one());
        assert!(CyclotomicNumber::zero().inverse().is_none());
        for k in 0..8 {
            let z = CyclotomicNumber::zeta_pow(k);
            assert_eq!(z.inverse().unwrap(), CyclotomicNumber::zeta_pow(-k));
            assert_eq!(z.as_root_of_unity(), Some(k));
        }
    }
}

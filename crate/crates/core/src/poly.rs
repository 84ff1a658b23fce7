//! Sparse multivariate polynomials and rational functions over `ℚ`.
//!
//! A polynomial belongs to a [`PolyRing`] fixing the variable names; terms
//! are kept in graded-lexicographic order, so two polynomials are equal
//! exactly when their term maps are equal.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exponent vector ordered by total degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self` divides `o`.
    fn quotient_of(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| b - a).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Variable names shared by a family of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    names: Arc<Vec<String>>,
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        PolyRing { names: Arc::new(names.iter().map(|s| s.as_ref().to_string()).collect()) }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The variable `name`. Panics on an unknown name, which is a
    /// programming error in a fixed identity.
    pub fn var(&self, name: &str) -> Poly {
        let i = self.index(name).unwrap_or_else(|| panic!("unknown variable {name}"));
        let mut m = Monomial::one(self.nvars());
        m.0[i] = 1;
        Poly::monomial(self, m, BigRational::one())
    }

    pub fn constant(&self, c: BigRational) -> Poly {
        Poly::monomial(self, Monomial::one(self.nvars()), c)
    }

    pub fn int(&self, c: i64) -> Poly {
        self.constant(BigRational::from_integer(c.into()))
    }

    pub fn zero(&self) -> Poly {
        Poly { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> Poly {
        self.int(1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    ring: PolyRing,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn monomial(ring: &PolyRing, m: Monomial, c: BigRational) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// A single term `c·m`, if the polynomial is one.
    pub fn as_term(&self) -> Option<(&Monomial, &BigRational)> {
        (self.terms.len() == 1).then(|| self.terms.iter().next().unwrap())
    }

    pub fn degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return self.ring.zero();
        }
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn scale_int(&self, k: i64) -> Poly {
        self.scale(&BigRational::from_integer(k.into()))
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        let entry = self.terms.entry(m.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn mul_term(&self, m: &Monomial, c: &BigRational) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = self.ring.one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Replaces variable `i` by `images[i]`; the images may live in another
    /// ring, which becomes the ring of the result.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.ring.nvars(), "one image per variable");
        let target = images.first().map(|p| p.ring.clone()).unwrap_or_else(|| self.ring.clone());
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &images[i].pow(e);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Substitutes by name, leaving other variables fixed.
    pub fn substitute_named(&self, images: &[(&str, Poly)]) -> Poly {
        let mut all: Vec<Poly> = self.ring.names().iter().map(|n| self.ring.var(n)).collect();
        for (name, p) in images {
            let i = self.ring.index(name).unwrap_or_else(|| panic!("unknown variable {name}"));
            all[i] = p.clone();
        }
        self.substitute(&all)
    }

    /// Multivariate division by a single divisor; returns the quotient when
    /// the remainder is zero.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lm, lc) = divisor.leading_term()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = self.ring.zero();
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return None;
            }
            let qm = lm.quotient_of(m);
            let qc = c / &lc;
            rem = &rem - &divisor.mul_term(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Rewrites `var^2` as `replacement` until `var` occurs at most linearly.
    pub fn reduce_square(&self, var: &str, replacement: &Poly) -> Poly {
        let i = self.ring.index(var).unwrap_or_else(|| panic!("unknown variable {var}"));
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            let mut base = m.clone();
            let half = base.0[i] / 2;
            base.0[i] %= 2;
            let t = Poly::monomial(&self.ring, base, c.clone());
            out = &out + &(&t * &replacement.pow(half));
        }
        if out.terms.keys().any(|m| m.0[i] >= 2) {
            out.reduce_square(var, replacement)
        } else {
            out
        }
    }

    /// Whether `self = c·other` for a constant `c`.
    pub fn is_constant_multiple_of(&self, other: &Poly) -> Option<BigRational> {
        let (m, a) = self.leading_term()?;
        let (n, b) = other.leading_term()?;
        if m != n {
            return None;
        }
        let c = a / b;
        (other.scale(&c) == *self).then_some(c)
    }

    /// Whether `self = c·μ·other` for a constant `c` and monomial `μ`.
    pub fn monomial_multiple_of(&self, other: &Poly) -> Option<Poly> {
        let q = self.div_exact(other)?;
        (q.len() == 1).then_some(q)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let name = &self.ring.names()[i];
                    if e == 1 {
                        name.clone()
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-BigRational::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let mut out = self.ring.zero();
        for (m, c) in &o.terms {
            for (n, a) in &self.terms {
                out.add_term(n.mul(m), a * c);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $f(self, o: Poly) -> Poly {
                (&self).$f(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// A quotient of polynomials with nonzero denominator. Not reduced; equality
/// is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    pub numerator: Poly,
    pub denominator: Poly,
}

impl RationalFunction {
    pub fn new(numerator: Poly, denominator: Poly) -> Option<Self> {
        (!denominator.is_zero()).then_some(RationalFunction { numerator, denominator })
    }

    pub fn from_poly(p: Poly) -> Self {
        let one = p.ring().one();
        RationalFunction { numerator: p, denominator: one }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn add(&self, o: &RationalFunction) -> RationalFunction {
        RationalFunction {
            numerator: &(&self.numerator * &o.denominator) + &(&o.numerator * &self.denominator),
            denominator: &self.denominator * &o.denominator,
        }
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction { numerator: -&self.numerator, denominator: self.denominator.clone() }
    }

    pub fn sub(&self, o: &RationalFunction) -> RationalFunction {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RationalFunction) -> RationalFunction {
        RationalFunction {
            numerator: &self.numerator * &o.numerator,
            denominator: &self.denominator * &o.denominator,
        }
    }

    pub fn div(&self, o: &RationalFunction) -> Option<RationalFunction> {
        RationalFunction::new(&self.numerator * &o.denominator, &self.denominator * &o.numerator)
    }

    /// Substitutes polynomials for the variables; `None` if the denominator
    /// vanishes.
    pub fn substitute(&self, images: &[Poly]) -> Option<RationalFunction> {
        RationalFunction::new(self.numerator.substitute(images), self.denominator.substitute(images))
    }

    pub fn substitute_named(&self, images: &[(&str, Poly)]) -> Option<RationalFunction> {
        RationalFunction::new(
            self.numerator.substitute_named(images),
            self.denominator.substitute_named(images),
        )
    }

    pub fn scale(&self, c: &BigRational) -> RationalFunction {
        RationalFunction { numerator: self.numerator.scale(c), denominator: self.denominator.clone() }
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, o: &Self) -> bool {
        &self.numerator * &o.denominator == &o.numerator * &self.denominator
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> PolyRing {
        PolyRing::new(&["x", "y", "z"])
    }

    #[test]
    fn grlex_order() {
        let a = Monomial(vec![0, 0, 2]);
        let b = Monomial(vec![1, 0, 0]);
        let c = Monomial(vec![0, 1, 1]);
        assert!(b < a);
        assert!(a < c);
    }

    #[test]
    fn arithmetic() {
        let r = ring();
        let (x, y) = (r.var("x"), r.var("y"));
        let lhs = (&x + &y) * (&x - &y);
        let rhs = &x.pow(2) - &y.pow(2);
        assert_eq!(lhs, rhs);
        assert!((&lhs - &rhs).is_zero());
        assert_eq!(rhs.to_string(), "x^2 - y^2");
    }

    #[test]
    fn division() {
        let r = ring();
        let (x, y, z) = (r.var("x"), r.var("y"), r.var("z"));
        let f = &(&x + &y) * &(&z - &x);
        assert_eq!(f.div_exact(&(&x + &y)).unwrap(), &z - &x);
        assert!(f.div_exact(&(&x + &z)).is_none());
        let g = &(&x * &y) * &(&x - &z);
        assert_eq!(g.monomial_multiple_of(&(&x - &z)).unwrap(), &x * &y);
    }

    #[test]
    fn substitution_and_reduction() {
        let r = ring();
        let (x, y, z) = (r.var("x"), r.var("y"), r.var("z"));
        let f = &x.pow(3) + &y;
        let g = f.substitute(&[y.clone(), x.clone(), z.clone()]);
        assert_eq!(g, &y.pow(3) + &x);
        assert_eq!(x.pow(5).reduce_square("x", &z), &(&x * &z) * &z);
    }

    #[test]
    fn rational_functions() {
        let r = ring();
        let (x, y) = (r.var("x"), r.var("y"));
        let a = RationalFunction::new(&x * &y, y.clone()).unwrap();
        assert_eq!(a, RationalFunction::from_poly(x.clone()));
        assert!(RationalFunction::new(x.clone(), r.zero()).is_none());
        let s = a.add(&RationalFunction::from_poly(x.clone()).neg());
        assert!(s.is_zero());
    }
}

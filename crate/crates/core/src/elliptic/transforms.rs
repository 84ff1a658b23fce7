//! The `(ℤ/2)³` action on the genus-one cover of `ℙ¹` in the coordinates
//! `((x':x), (v':v), (w':w))`.

use std::fmt;

use serde::Serialize;

use crate::poly::{Poly, PolyRing, RationalFunction};

pub const VARIABLES: [&str; 7] = ["x'", "x", "v'", "v", "w'", "w", "b"];

/// Pairs of homogeneous coordinates, as indices into [`VARIABLES`].
const PAIRS: [(usize, usize); 3] = [(0, 1), (2, 3), (4, 5)];

pub fn cover_ring() -> PolyRing {
    PolyRing::new(&VARIABLES)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TransformName {
    G1,
    F2,
    F3,
    G2,
    G3,
}

impl TransformName {
    pub const ALL: [TransformName; 5] =
        [TransformName::G1, TransformName::F2, TransformName::F3, TransformName::G2, TransformName::G3];
}

impl fmt::Display for TransformName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TransformName::G1 => "g1",
            TransformName::F2 => "f2",
            TransformName::F3 => "f3",
            TransformName::G2 => "g2",
            TransformName::G3 => "g3",
        };
        f.write_str(s)
    }
}

/// A substitution: `images[k]` is the new value of variable `k`. The
/// parameter `b` is always fixed.
#[derive(Clone, Debug, PartialEq)]
pub struct CoverTransform {
    pub name: Option<TransformName>,
    pub images: Vec<Poly>,
}

impl CoverTransform {
    pub fn identity() -> Self {
        let r = cover_ring();
        CoverTransform { name: None, images: VARIABLES.iter().map(|v| r.var(v)).collect() }
    }

    pub fn named(name: TransformName) -> Self {
        let r = cover_ring();
        let var = |s: &str| r.var(s);
        let mut t = Self::identity();
        let set = |t: &mut CoverTransform, k: &str, p: Poly| {
            let i = VARIABLES.iter().position(|v| *v == k).unwrap();
            t.images[i] = p;
        };
        match name {
            TransformName::G1 => {
                set(&mut t, "v", -var("v"));
                set(&mut t, "w", -var("w"));
            }
            TransformName::F2 | TransformName::F3 => {
                set(&mut t, "x'", var("x"));
                set(&mut t, "x", var("x'"));
                set(&mut t, "w'", &var("w'") * &var("x"));
                if name == TransformName::F2 {
                    set(&mut t, "v'", var("v"));
                    set(&mut t, "v", var("v'"));
                    set(&mut t, "w", -(&var("w") * &var("x'")));
                } else {
                    set(&mut t, "v'", -var("v"));
                    set(&mut t, "v", var("v'"));
                    set(&mut t, "w", &var("w") * &var("x'"));
                }
            }
            TransformName::G2 => set(&mut t, "v", -var("v")),
            TransformName::G3 => set(&mut t, "w", -var("w")),
        }
        t.name = Some(name);
        t
    }

    pub fn pull_back(&self, f: &Poly) -> Poly {
        f.substitute(&self.images)
    }

    pub fn pull_back_rational(&self, f: &RationalFunction) -> Option<RationalFunction> {
        f.substitute(&self.images)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &CoverTransform) -> CoverTransform {
        CoverTransform { name: None, images: self.images.iter().map(|p| p.substitute(&other.images)).collect() }
    }

    /// Equality as maps of `ℙ¹×ℙ¹×ℙ¹`: each pair agrees up to scaling.
    pub fn projectively_equal(&self, other: &CoverTransform) -> bool {
        PAIRS.iter().all(|&(p, q)| {
            let lhs = &self.images[p] * &other.images[q];
            let rhs = &self.images[q] * &other.images[p];
            lhs == rhs
        }) && self.images[6] == other.images[6]
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).projectively_equal(&Self::identity())
    }
}

/// `v²x' − v'²x` and `b·w²x'² − w'²(b·x² − (b²+1)·x·x' + b·x'²)`.
pub fn curve_equations() -> [Poly; 2] {
    let r = cover_ring();
    let v = |s: &str| r.var(s);
    let (x, xp, b) = (v("x"), v("x'"), v("b"));
    let e1 = &(&v("v").pow(2) * &xp) - &(&v("v'").pow(2) * &x);
    let quad = &(&(&b * &x.pow(2)) - &(&(&b.pow(2) + &r.one()) * &(&x * &xp))) + &(&b * &xp.pow(2));
    let e2 = &(&(&b * &v("w").pow(2)) * &xp.pow(2)) - &(&v("w'").pow(2) * &quad);
    [e1, e2]
}

/// `V = vv'`.
pub fn section_v() -> Poly {
    let r = cover_ring();
    &r.var("v") * &r.var("v'")
}

/// `W = (w/w')·x'`.
pub fn section_w() -> RationalFunction {
    let r = cover_ring();
    RationalFunction::new(&r.var("w") * &r.var("x'"), r.var("w'")).expect("w' is nonzero")
}

/// Closure of the five named transforms under composition, up to
/// projective equality. The identity comes first.
pub fn generated_group() -> Vec<CoverTransform> {
    let gens: Vec<CoverTransform> = TransformName::ALL.iter().map(|&n| CoverTransform::named(n)).collect();
    let mut elements = vec![CoverTransform::identity()];
    let mut frontier = 0;
    while frontier < elements.len() {
        let x = elements[frontier].clone();
        frontier += 1;
        for g in &gens {
            let y = g.compose(&x);
            if !elements.iter().any(|e| e.projectively_equal(&y)) {
                elements.push(y);
            }
        }
    }
    elements
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involutions() {
        for n in TransformName::ALL {
            assert!(CoverTransform::named(n).is_involution(), "{n}");
        }
    }

    #[test]
    fn g3_is_g1_g2() {
        let g1 = CoverTransform::named(TransformName::G1);
        let g2 = CoverTransform::named(TransformName::G2);
        let g3 = CoverTransform::named(TransformName::G3);
        assert!(g1.compose(&g2).projectively_equal(&g3));
        assert!(g2.compose(&g1).projectively_equal(&g3));
    }

    #[test]
    fn group_of_order_eight() {
        assert_eq!(generated_group().len(), 8);
    }
}

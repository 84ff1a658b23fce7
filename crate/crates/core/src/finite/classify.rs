use std::fmt;

use serde::{Serialize, Serializer};

use super::catalog::{q8, quaternion_times_elementary};
use super::{extend_homomorphism, is_bijection, FiniteGroupTable, GroupFingerprint};

/// Isomorphism type relative to the catalog `{(ℤ/2)^k, ℍ × (ℤ/2)^k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoClass {
    ElementaryAbelian(usize),
    QuaternionTimesElementaryAbelian(usize),
    Other(GroupFingerprint),
}

impl fmt::Display for IsoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let two = |k: usize| match k {
            1 => "Z/2".to_string(),
            k => format!("(Z/2)^{k}"),
        };
        match self {
            IsoClass::ElementaryAbelian(0) => write!(f, "1"),
            IsoClass::ElementaryAbelian(k) => write!(f, "{}", two(*k)),
            IsoClass::QuaternionTimesElementaryAbelian(0) => write!(f, "H"),
            IsoClass::QuaternionTimesElementaryAbelian(k) => write!(f, "H + {}", two(*k)),
            IsoClass::Other(fp) => write!(f, "other(order {})", fp.order),
        }
    }
}

impl Serialize for IsoClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `G = ⟨i, j⟩ × ⟨c₁, …, c_k⟩` with `⟨i, j⟩ ≅ ℍ` and central involutions `cₘ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuaternionDecomposition {
    pub i: usize,
    pub j: usize,
    pub central: Vec<usize>,
    /// Isomorphism from `ℍ × (ℤ/2)^k` (indexed as in the catalog) onto `G`.
    pub map: Vec<usize>,
}

pub fn classify(g: &FiniteGroupTable) -> IsoClass {
    let n = g.order();
    if g.is_abelian() && g.exponent() <= 2 {
        return IsoClass::ElementaryAbelian(n.trailing_zeros() as usize);
    }
    if let Some(d) = quaternion_decomposition(g) {
        return IsoClass::QuaternionTimesElementaryAbelian(d.central.len());
    }
    IsoClass::Other(g.fingerprint())
}

/// Searches for an explicit decomposition after a fingerprint filter.
pub fn quaternion_decomposition(g: &FiniteGroupTable) -> Option<QuaternionDecomposition> {
    let n = g.order();
    if n < 8 || !n.is_power_of_two() {
        return None;
    }
    let k = (n / 8).trailing_zeros() as usize;
    let reference = quaternion_times_elementary(k);
    if g.fingerprint() != reference.fingerprint() {
        return None;
    }
    let order4: Vec<usize> = (0..n).filter(|&x| g.element_order(x) == 4).collect();
    for &i in &order4 {
        for &j in &order4 {
            let i2 = g.mul(i, i);
            if g.mul(j, j) != i2 || g.conjugate(j, i) != g.inv(i) {
                continue;
            }
            let q = g.generate(&[i, j]).ok()?;
            if q.len() != 8 {
                continue;
            }
            if let Some(d) = complete(g, &reference, k, i, j, q) {
                return Some(d);
            }
        }
    }
    None
}

/// Greedily adds central involutions outside the current subgroup. For
/// `G ≅ ℍ × (ℤ/2)^k` any choice works, since `Z(G) ∩ ⟨i, j⟩ = ⟨i²⟩`.
fn complete(
    g: &FiniteGroupTable,
    reference: &FiniteGroupTable,
    k: usize,
    i: usize,
    j: usize,
    mut current: Vec<usize>,
) -> Option<QuaternionDecomposition> {
    let mut central = Vec::new();
    let involutions: Vec<usize> =
        g.center().into_iter().filter(|&z| g.element_order(z) == 2).collect();
    while current.len() < g.order() {
        let c = *involutions.iter().find(|z| current.binary_search(z).is_err())?;
        central.push(c);
        let mut gens = vec![i, j];
        gens.extend(&central);
        current = g.generate(&gens).ok()?;
    }
    if central.len() != k {
        return None;
    }
    let m = 1usize << k;
    let mut ref_gens = vec![q8(false, 1) * m, q8(false, 2) * m];
    ref_gens.extend((0..k).map(|b| q8(false, 0) * m + (1 << b)));
    let mut images = vec![i, j];
    images.extend(&central);
    let map = extend_homomorphism(reference, &ref_gens, g, &images)?;
    is_bijection(&map, g.order()).then_some(QuaternionDecomposition { i, j, central, map })
}

#[cfg(test)]
mod tests {
    use super::super::catalog::*;
    use super::*;

    #[test]
    fn quaternion_self_test() {
        assert_eq!(classify(&quaternion()), IsoClass::QuaternionTimesElementaryAbelian(0));
    }

    #[test]
    fn elementary_abelian_three() {
        assert_eq!(classify(&elementary_abelian(3)), IsoClass::ElementaryAbelian(3));
        assert_eq!(classify(&elementary_abelian(3)).to_string(), "(Z/2)^3");
    }

    #[test]
    fn dihedral_is_other() {
        assert!(matches!(classify(&dihedral4()), IsoClass::Other(_)));
    }

    #[test]
    fn products() {
        for k in 0..=3 {
            assert_eq!(
                classify(&quaternion_times_elementary(k)),
                IsoClass::QuaternionTimesElementaryAbelian(k)
            );
            assert!(matches!(classify(&dihedral_times_elementary(k)), IsoClass::Other(_)));
        }
    }

    #[test]
    fn display() {
        assert_eq!(IsoClass::QuaternionTimesElementaryAbelian(3).to_string(), "H + (Z/2)^3");
        assert_eq!(IsoClass::QuaternionTimesElementaryAbelian(1).to_string(), "H + Z/2");
        assert_eq!(IsoClass::QuaternionTimesElementaryAbelian(0).to_string(), "H");
        assert_eq!(IsoClass::ElementaryAbelian(0).to_string(), "1");
    }

    #[test]
    fn cyclic_eight_is_other() {
        assert!(matches!(classify(&cyclic(8)), IsoClass::Other(_)));
    }
}

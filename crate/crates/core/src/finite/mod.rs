//! Explicit finite groups given by multiplication tables: subgroup closure,
//! normal closure, quotients, fingerprints and isomorphism witnesses.

pub mod catalog;
mod classify;
mod gamma_bar;

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::AbelianInvariants;

pub use classify::{classify, quaternion_decomposition, IsoClass, QuaternionDecomposition};
pub use gamma_bar::{enumerate_gamma_bar, GammaBar, QuotElement};

/// A finite group on `0..order` with an index-based multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    order: usize,
    mul: Vec<u32>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroupTable {
    /// `mul[a * order + b]` is the product `a·b`. Fails unless there is a
    /// two-sided identity and every element has an inverse. Associativity is
    /// the caller's responsibility; see [`FiniteGroupTable::is_associative`].
    pub fn from_table(order: usize, mul: Vec<usize>) -> Result<Self> {
        if order == 0 || mul.len() != order * order {
            return Err(Error::NotASubgroup);
        }
        if let Some(&bad) = mul.iter().find(|&&x| x >= order) {
            return Err(Error::ElementOutOfRange { element: bad, order });
        }
        let at = |a: usize, b: usize| mul[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(Error::NotASubgroup)?;
        let mut inverse = Vec::with_capacity(order);
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or(Error::NotASubgroup)?;
            inverse.push(inv);
        }
        Ok(FiniteGroupTable { order, mul: mul.into_iter().map(|x| x as u32).collect(), identity, inverse })
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                mul.push(f(a, b));
            }
        }
        Self::from_table(order, mul)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))))
        })
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).map(|a| self.element_order(a)).fold(1, num_integer::lcm)
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|x| self.mul(z, x) == self.mul(x, z)))
            .collect()
    }

    fn check_elements(&self, elems: &[usize]) -> Result<()> {
        match elems.iter().find(|&&e| e >= self.order) {
            Some(&element) => Err(Error::ElementOutOfRange { element, order: self.order }),
            None => Ok(()),
        }
    }

    /// The subgroup generated by `gens`, sorted.
    pub fn generate(&self, gens: &[usize]) -> Result<Vec<usize>> {
        self.check_elements(gens)?;
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        Ok((0..self.order).filter(|&x| seen[x]).collect())
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        if self.check_elements(set).is_err() {
            return false;
        }
        let mut member = vec![false; self.order];
        for &x in set {
            member[x] = true;
        }
        member[self.identity] && set.iter().all(|&a| set.iter().all(|&b| member[self.mul(a, b)]))
    }

    pub fn is_normal(&self, set: &[usize]) -> bool {
        if !self.is_subgroup(set) {
            return false;
        }
        let mut member = vec![false; self.order];
        for &x in set {
            member[x] = true;
        }
        set.iter().all(|&n| (0..self.order).all(|g| member[self.conjugate(g, n)]))
    }

    /// Smallest normal subgroup containing `seeds`: the subgroup generated
    /// by every conjugate of every seed.
    pub fn normal_closure(&self, seeds: &[usize]) -> Result<Vec<usize>> {
        self.check_elements(seeds)?;
        let mut conjugates = vec![false; self.order];
        for &s in seeds {
            for g in 0..self.order {
                conjugates[self.conjugate(g, s)] = true;
            }
        }
        let gens: Vec<usize> = (0..self.order).filter(|&x| conjugates[x]).collect();
        self.generate(&gens)
    }

    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let mut comms = vec![false; self.order];
        for a in 0..self.order {
            for b in 0..self.order {
                comms[self.commutator(a, b)] = true;
            }
        }
        let gens: Vec<usize> = (0..self.order).filter(|&x| comms[x]).collect();
        self.generate(&gens).expect("commutators are elements")
    }

    /// Coset table of `G/N`. Cosets are numbered in order of their smallest
    /// element.
    pub fn quotient(&self, normal: &[usize]) -> Result<Quotient> {
        if !self.is_subgroup(normal) {
            return Err(Error::NotASubgroup);
        }
        if !self.is_normal(normal) {
            return Err(Error::NotNormal);
        }
        let mut projection = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for x in 0..self.order {
            if projection[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for &n in normal {
                projection[self.mul(x, n)] = id;
            }
        }
        let m = reps.len();
        let table = FiniteGroupTable::from_fn(m, |a, b| projection[self.mul(reps[a], reps[b])])?;
        Ok(Quotient { table, projection })
    }

    /// `G^{ab}` as abelian invariants.
    pub fn abelianization(&self) -> AbelianInvariants {
        let derived = self.commutator_subgroup();
        let q = self.quotient(&derived).expect("the derived subgroup is normal");
        q.table.abelian_invariants().expect("quotient by the derived subgroup is abelian")
    }

    /// Invariants of an abelian group, read off from the number of solutions
    /// of `x^{p^k} = 1` for each prime `p`.
    pub fn abelian_invariants(&self) -> Option<AbelianInvariants> {
        if !self.is_abelian() {
            return None;
        }
        let mut per_prime: Vec<Vec<u64>> = Vec::new();
        for p in prime_factors(self.order) {
            let mut ranks = vec![0u32];
            let mut pk = 1usize;
            loop {
                pk *= p;
                let count = (0..self.order).filter(|&x| self.pow(x, pk) == self.identity).count();
                let r = log_exact(count, p);
                if r == *ranks.last().unwrap() {
                    break;
                }
                ranks.push(r);
            }
            // ranks[k] - ranks[k-1] cyclic factors have exponent ≥ k.
            let mut exps = Vec::new();
            for k in 1..ranks.len() {
                let at_least_k = ranks[k] - ranks[k - 1];
                let at_least_next = if k + 1 < ranks.len() { ranks[k + 1] - ranks[k] } else { 0 };
                for _ in 0..(at_least_k - at_least_next) {
                    exps.push((p as u64).pow(k as u32));
                }
            }
            exps.sort_unstable_by(|a, b| b.cmp(a));
            per_prime.push(exps);
        }
        let len = per_prime.iter().map(Vec::len).max().unwrap_or(0);
        let mut torsion: Vec<u64> = (0..len)
            .map(|i| per_prime.iter().map(|e| e.get(i).copied().unwrap_or(1)).product())
            .collect();
        torsion.reverse();
        Some(AbelianInvariants { free_rank: 0, torsion })
    }

    pub fn fingerprint(&self) -> GroupFingerprint {
        let mut order_histogram = BTreeMap::new();
        for a in 0..self.order {
            *order_histogram.entry(self.element_order(a)).or_insert(0) += 1;
        }
        GroupFingerprint {
            order: self.order,
            order_histogram,
            abelianization: self.abelianization(),
            commutator_order: self.commutator_subgroup().len(),
            center_order: self.center().len(),
            exponent: self.exponent(),
        }
    }

    /// The same group with element `x` renamed to `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let mut inv = vec![0; self.order];
        for (x, &p) in perm.iter().enumerate() {
            inv[p] = x;
        }
        Self::from_fn(self.order, |a, b| perm[self.mul(inv[a], inv[b])])
    }

    /// `A × B` with `(a, b) ↦ a·|B| + b`.
    pub fn direct_product(&self, other: &FiniteGroupTable) -> Result<Self> {
        let m = other.order;
        Self::from_fn(self.order * m, |x, y| {
            self.mul(x / m, y / m) * m + other.mul(x % m, y % m)
        })
    }
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn log_exact(mut n: usize, p: usize) -> u32 {
    let mut k = 0;
    while n > 1 {
        debug_assert_eq!(n % p, 0);
        n /= p;
        k += 1;
    }
    k
}

#[derive(Clone, Debug)]
pub struct Quotient {
    pub table: FiniteGroupTable,
    /// Coset index of each element of the parent group.
    pub projection: Vec<usize>,
}

/// Isomorphism invariants recomputable from a table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupFingerprint {
    pub order: usize,
    pub order_histogram: BTreeMap<usize, usize>,
    pub abelianization: AbelianInvariants,
    pub commutator_order: usize,
    pub center_order: usize,
    pub exponent: usize,
}

/// Extends `gens[i] ↦ images[i]` to a map `src → dst` by breadth-first
/// search over right multiplication, then checks it is a homomorphism.
/// Returns `None` on a conflict, if `gens` do not generate `src`, or if
/// multiplicativity fails.
pub fn extend_homomorphism(
    src: &FiniteGroupTable,
    gens: &[usize],
    dst: &FiniteGroupTable,
    images: &[usize],
) -> Option<Vec<usize>> {
    assert_eq!(gens.len(), images.len());
    let mut h = vec![usize::MAX; src.order()];
    h[src.identity()] = dst.identity();
    let mut queue = VecDeque::from([src.identity()]);
    while let Some(x) = queue.pop_front() {
        for (&s, &img) in gens.iter().zip(images) {
            let y = src.mul(x, s);
            let v = dst.mul(h[x], img);
            if h[y] == usize::MAX {
                h[y] = v;
                queue.push_back(y);
            } else if h[y] != v {
                return None;
            }
        }
    }
    if h.contains(&usize::MAX) {
        return None;
    }
    let n = src.order();
    let multiplicative = (0..n).all(|a| (0..n).all(|b| h[src.mul(a, b)] == dst.mul(h[a], h[b])));
    multiplicative.then_some(h)
}

pub fn is_bijection(map: &[usize], target_order: usize) -> bool {
    if map.len() != target_order {
        return false;
    }
    let mut hit = vec![false; target_order];
    for &x in map {
        if x >= target_order || hit[x] {
            return false;
        }
        hit[x] = true;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::catalog::{cyclic, dihedral4, elementary_abelian, quaternion};
    use super::*;

    #[test]
    fn catalog_tables_are_groups() {
        for g in [quaternion(), dihedral4(), elementary_abelian(3), cyclic(6)] {
            assert!(g.is_associative());
        }
    }

    #[test]
    fn trivial_normal_closure() {
        let q = quaternion();
        assert_eq!(q.normal_closure(&[q.identity()]).unwrap(), vec![q.identity()]);
    }

    #[test]
    fn central_seed_closure() {
        let q = quaternion();
        let minus_one = q.center().into_iter().find(|&z| z != q.identity()).unwrap();
        assert_eq!(q.normal_closure(&[minus_one]).unwrap().len(), 2);
    }

    #[test]
    fn seed_out_of_range() {
        let q = quaternion();
        assert_eq!(q.normal_closure(&[8]), Err(Error::ElementOutOfRange { element: 8, order: 8 }));
    }

    #[test]
    fn quotient_by_trivial_subgroup() {
        let d = dihedral4();
        let q = d.quotient(&[d.identity()]).unwrap();
        assert_eq!(q.table.order(), 8);
        assert_eq!(q.table.fingerprint(), d.fingerprint());
    }

    #[test]
    fn non_normal_subgroup_rejected() {
        let d = dihedral4();
        // A reflection generates a non-normal subgroup of order 2.
        let s = (0..8).find(|&x| d.element_order(x) == 2 && !d.center().contains(&x)).unwrap();
        let h = d.generate(&[s]).unwrap();
        assert_eq!(d.quotient(&h).unwrap_err(), Error::NotNormal);
        assert_eq!(d.quotient(&[s]).unwrap_err(), Error::NotASubgroup);
    }

    #[test]
    fn abelian_invariants_of_cyclic() {
        assert_eq!(cyclic(12).abelian_invariants().unwrap().torsion, vec![12]);
        let c = cyclic(4).direct_product(&cyclic(6)).unwrap();
        assert_eq!(c.abelian_invariants().unwrap().torsion, vec![2, 12]);
    }

    #[test]
    fn quaternion_fingerprint() {
        let f = quaternion().fingerprint();
        assert_eq!(f.order_histogram, BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
        assert_eq!(f.abelianization, AbelianInvariants::elementary_two(2));
        assert_eq!(f.center_order, 2);
        assert_eq!(f.commutator_order, 2);
        assert_eq!(f.exponent, 4);
    }

    #[test]
    fn dihedral_differs_from_quaternion() {
        let d = dihedral4().fingerprint();
        assert_eq!(d.order_histogram[&2], 5);
        assert_ne!(d, quaternion().fingerprint());
    }

    #[test]
    fn homomorphism_extension_detects_conflict() {
        let q = quaternion();
        let c = elementary_abelian(2);
        let (i, j) = (catalog::q8(false, 1), catalog::q8(false, 2));
        // Q8 → (Z/2)²: i ↦ (1,0), j ↦ (0,1) is a homomorphism.
        assert!(extend_homomorphism(&q, &[i, j], &c, &[1, 2]).is_some());
        // Q8 → Z/4 sending i and j to the same generator is not.
        let z4 = cyclic(4);
        assert!(extend_homomorphism(&q, &[i, j], &z4, &[1, 1]).is_none());
    }
}

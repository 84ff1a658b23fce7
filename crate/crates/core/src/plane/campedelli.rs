//! The `K² = 2` arrangement as seven lines: incidences of the side lines,
//! the complete quadrilateral with its diagonals, and the tautological
//! `(ℤ/2)³` cover equations.

use num_traits::Zero;
use serde::Serialize;

use super::{det3, BurniatArrangement, LineLabel, ProjLine, ProjPoint};
use crate::error::{Error, Result};

/// Which family's lines `D_{i,1}` meets away from the base points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartnerIncidence {
    pub side: LineLabel,
    /// Families `k` with `D_{i,1} ∩ D_{k,2}` and `D_{i,1} ∩ D_{k,3}` both off
    /// `P₁, P₂, P₃`.
    pub partner_families: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TautologicalEquation {
    pub chi: u8,
    pub chi_prime: u8,
    /// Names of the lines `l_ν` with `χ(ν) = χ'(ν) = 1`.
    pub lines: Vec<String>,
    /// `χ + χ'`, absent when zero.
    pub target: Option<u8>,
    pub lhs_degree: u32,
    pub rhs_degree: u32,
}

impl TautologicalEquation {
    pub fn render(&self) -> String {
        let mut rhs: Vec<String> = self.lines.clone();
        if let Some(t) = self.target {
            rhs.push(format!("w{t:03b}"));
        }
        format!("w{:03b} w{:03b} = {}", self.chi, self.chi_prime, rhs.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CampedelliReport {
    pub partners: Vec<PartnerIncidence>,
    /// Each `D_{i,1}` meets both other lines of exactly one family, and the
    /// partner map is a cyclic permutation.
    pub cyclic_partner_structure: bool,
    /// Partner of `D_{i,1}` is family `i − 1`.
    pub partner_is_previous: bool,
    /// Partner of `D_{i,1}` is family `i + 1`.
    pub partner_is_next: bool,
    pub quadrilateral: Vec<ProjLine>,
    pub diagonals: Vec<ProjLine>,
    pub general_position: bool,
    pub diagonals_through_opposite_vertices: bool,
    /// Line names `L1..L4, L1'..L3'` with their group elements.
    pub assignment: Vec<(String, u8)>,
    pub equations: Vec<TautologicalEquation>,
    pub mixed_count: usize,
    pub square_count: usize,
    /// Every `w_χ` has degree 2, so both sides of every equation have
    /// degree 4.
    pub degrees_balanced: bool,
}

impl CampedelliReport {
    pub fn passes(&self) -> bool {
        self.cyclic_partner_structure
            && self.general_position
            && self.diagonals_through_opposite_vertices
            && self.degrees_balanced
            && self.equations.len() == 28
    }
}

const LINE_NAMES: [&str; 7] = ["L1", "L2", "L3", "L4", "L1'", "L2'", "L3'"];

/// Opposite pairs of `{0,1,2,3}`.
const PAIRINGS: [[(usize, usize); 2]; 3] = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];

fn pairing_of(quad: &[ProjLine], diag: &ProjLine) -> Option<usize> {
    let vertex = |a: usize, b: usize| quad[a].meet(&quad[b]);
    PAIRINGS.iter().position(|pair| {
        pair.iter().all(|&(a, b)| vertex(a, b).is_some_and(|v| v.lies_on(diag)))
    })
}

/// `L₁..L₄ ↦ 100, 010, 001, 111`; a diagonal through `L_a ∩ L_b` gets
/// `v_a + v_b`.
pub fn default_assignment(quad: &[ProjLine], diagonals: &[ProjLine]) -> Result<[u8; 7]> {
    let base = [0b100u8, 0b010, 0b001, 0b111];
    let mut out = [0u8; 7];
    out[..4].copy_from_slice(&base);
    for (k, d) in diagonals.iter().enumerate() {
        let p = pairing_of(quad, d)
            .ok_or_else(|| Error::InvalidAssignment(format!("{} is not a diagonal", LINE_NAMES[4 + k])))?;
        let (a, b) = PAIRINGS[p][0];
        out[4 + k] = base[a] ^ base[b];
    }
    Ok(out)
}

fn check_assignment(a: &[u8; 7]) -> Result<()> {
    let mut seen = [false; 8];
    for (k, &v) in a.iter().enumerate() {
        if v == 0 || v > 7 {
            return Err(Error::InvalidAssignment(format!("{} -> {v} is not a nonzero element of (Z/2)^3", LINE_NAMES[k])));
        }
        if seen[v as usize] {
            return Err(Error::InvalidAssignment(format!("element {v:03b} used twice")));
        }
        seen[v as usize] = true;
    }
    Ok(())
}

fn pairing(chi: u8, nu: u8) -> u8 {
    ((chi & nu).count_ones() % 2) as u8
}

fn tautological_equations(a: &[u8; 7]) -> Vec<TautologicalEquation> {
    let mut out = Vec::new();
    for chi in 1..8u8 {
        for chi_prime in chi..8u8 {
            let lines: Vec<String> = (0..7)
                .filter(|&k| pairing(chi, a[k]) == 1 && pairing(chi_prime, a[k]) == 1)
                .map(|k| LINE_NAMES[k].to_string())
                .collect();
            let target = Some(chi ^ chi_prime).filter(|&t| t != 0);
            let rhs_degree = lines.len() as u32 + if target.is_some() { 2 } else { 0 };
            out.push(TautologicalEquation { chi, chi_prime, lines, target, lhs_degree: 4, rhs_degree });
        }
    }
    out
}

/// Requires the arrangement to have `K² = 2`. The quadrilateral is dual to
/// the four triple points and the diagonals are dual to `P₁, P₂, P₃`.
pub fn campedelli_check(arr: &BurniatArrangement, assignment: Option<[u8; 7]>) -> Result<CampedelliReport> {
    let class = arr.classify()?;
    if class.k_squared != 2 {
        return Err(Error::ClassMismatch { expected: 2, actual: class.k_squared });
    }
    let partners: Vec<PartnerIncidence> = (1..=3u8)
        .map(|i| {
            let side = LineLabel { family: i, index: 1 };
            let partner_families = (1..=3u8)
                .filter(|&k| k != i)
                .filter(|&k| {
                    (2..=3).all(|j| {
                        arr.line(side)
                            .meet(arr.line(LineLabel { family: k, index: j }))
                            .is_some_and(|p| !arr.base_points.contains(&p))
                    })
                })
                .collect();
            PartnerIncidence { side, partner_families }
        })
        .collect();
    let single: Option<Vec<u8>> =
        partners.iter().map(|p| (p.partner_families.len() == 1).then(|| p.partner_families[0])).collect();
    let cyclic_partner_structure = single.as_ref().is_some_and(|s| {
        let mut sorted = s.clone();
        sorted.sort_unstable();
        sorted == [1, 2, 3] && s.iter().enumerate().all(|(k, &f)| f as usize != k + 1)
    });
    let partner_is = |shift: usize| {
        single.as_ref().is_some_and(|s| s.iter().enumerate().all(|(k, &f)| f as usize == (k + shift) % 3 + 1))
    };
    let partner_is_previous = partner_is(2);
    let partner_is_next = partner_is(1);

    let tps = arr.triple_points()?;
    let quadrilateral: Vec<ProjLine> = tps.iter().map(|t| t.location.dual()).collect();
    let diagonals: Vec<ProjLine> = arr.base_points.iter().map(ProjPoint::dual).collect();
    let mut general_position = true;
    for a in 0..4 {
        for b in a + 1..4 {
            for c in b + 1..4 {
                general_position &= !det3(&quadrilateral[a].0, &quadrilateral[b].0, &quadrilateral[c].0).is_zero();
            }
        }
    }
    let pairings: Vec<Option<usize>> = diagonals.iter().map(|d| pairing_of(&quadrilateral, d)).collect();
    let mut used: Vec<usize> = pairings.iter().flatten().copied().collect();
    used.sort_unstable();
    let diagonals_through_opposite_vertices = used == [0, 1, 2];

    let a = match assignment {
        Some(a) => a,
        None => default_assignment(&quadrilateral, &diagonals)?,
    };
    check_assignment(&a)?;
    let equations = tautological_equations(&a);
    let mixed_count = equations.iter().filter(|e| e.chi != e.chi_prime).count();
    let square_count = equations.len() - mixed_count;
    let degrees_balanced = equations.iter().all(|e| e.lhs_degree == e.rhs_degree);
    Ok(CampedelliReport {
        partners,
        cyclic_partner_structure,
        partner_is_previous,
        partner_is_next,
        quadrilateral,
        diagonals,
        general_position,
        diagonals_through_opposite_vertices,
        assignment: LINE_NAMES.iter().zip(a).map(|(n, v)| (n.to_string(), v)).collect(),
        equations,
        mixed_count,
        square_count,
        degrees_balanced,
    })
}

#[cfg(test)]
mod tests {
    use super::super::reference_arrangement;
    use super::*;

    #[test]
    fn k2_two_passes() {
        let a = reference_arrangement(2, false).unwrap();
        let r = campedelli_check(&a, None).unwrap();
        assert!(r.passes());
        assert!(r.partner_is_previous);
        assert!(!r.partner_is_next);
        assert_eq!((r.mixed_count, r.square_count), (21, 7));
        let diag: Vec<u8> = r.assignment[4..].iter().map(|(_, v)| *v).collect();
        let mut sorted = diag.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, [0b011, 0b101, 0b110]);
    }

    #[test]
    fn square_equations() {
        let a = reference_arrangement(2, false).unwrap();
        let r = campedelli_check(&a, None).unwrap();
        for e in r.equations.iter().filter(|e| e.chi == e.chi_prime) {
            assert_eq!(e.lines.len(), 4);
            assert_eq!(e.target, None);
        }
        assert!(r.equations.iter().filter(|e| e.chi != e.chi_prime).all(|e| e.lines.len() == 2));
    }

    #[test]
    fn wrong_class() {
        let a = reference_arrangement(3, false).unwrap();
        assert_eq!(campedelli_check(&a, None), Err(Error::ClassMismatch { expected: 2, actual: 3 }));
    }

    #[test]
    fn bad_assignment() {
        let a = reference_arrangement(2, false).unwrap();
        let dup = [1, 2, 3, 4, 5, 6, 6];
        assert!(matches!(campedelli_check(&a, Some(dup)), Err(Error::InvalidAssignment(_))));
        let zero = [0, 1, 2, 3, 4, 5, 6];
        assert!(matches!(campedelli_check(&a, Some(zero)), Err(Error::InvalidAssignment(_))));
        let ok = [1, 2, 3, 4, 5, 6, 7];
        assert_eq!(campedelli_check(&a, Some(ok)).unwrap().equations.len(), 28);
    }
}

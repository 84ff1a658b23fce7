//! Dimension counts for the primary family.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::report::{Check, Report};

/// A character of `G² ≅ (ℤ/2)³` as a sign triple.
pub type Character = [i8; 3];

pub const TRIVIAL: Character = [1, 1, 1];

/// Characters occurring in `H⁰(𝓔ᵢ, 𝒪([oᵢ] + [eᵢ/2]))` for `i = 1, 2, 3`.
pub const SECTION_CHARACTERS: [[Character; 2]; 3] =
    [[TRIVIAL, [-1, 1, -1]], [TRIVIAL, [-1, -1, 1]], [TRIVIAL, [1, -1, -1]]];

fn mul(a: Character, b: Character) -> Character {
    std::array::from_fn(|k| a[k] * b[k])
}

/// Multiplicity of the trivial character in `⊗ Vᵢ`, by convolving the
/// character multisets.
pub fn invariant_dimension(spaces: &[Vec<Character>]) -> usize {
    let mut acc: BTreeMap<Character, usize> = BTreeMap::from([(TRIVIAL, 1)]);
    for v in spaces {
        let mut next = BTreeMap::new();
        for (&c, &m) in &acc {
            for &d in v {
                *next.entry(mul(c, d)).or_insert(0) += m;
            }
        }
        acc = next;
    }
    acc.get(&TRIVIAL).copied().unwrap_or(0)
}

/// The same count by listing every tuple of characters.
pub fn invariant_dimension_brute_force(spaces: &[Vec<Character>]) -> usize {
    let mut tuples: Vec<Character> = vec![TRIVIAL];
    for v in spaces {
        tuples = tuples.iter().flat_map(|&t| v.iter().map(move |&d| mul(t, d))).collect();
    }
    tuples.iter().filter(|&&t| t == TRIVIAL).count()
}

pub fn invariant_section_dimension() -> usize {
    let spaces: Vec<Vec<Character>> = SECTION_CHARACTERS.iter().map(|s| s.to_vec()).collect();
    invariant_dimension(&spaces)
}

/// `D³` on `𝓔₁ × 𝓔₂ × 𝓔₃` for `D` of multidegree `d`, from `Fᵢ² = 0` and
/// `F₁F₂F₃ = 1`.
fn triple_self_intersection(d: [i64; 3]) -> i64 {
    let mut total = 0;
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                if a != b && b != c && a != c {
                    total += d[a] * d[b] * d[c];
                }
            }
        }
    }
    total
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuliReport {
    pub curve_moduli: usize,
    pub invariant_sections: usize,
    pub dimension: usize,
    pub chi: i64,
    pub irregularity_of_cover: i64,
    pub cover_degree: i64,
    pub p_g_cover: i64,
    pub k_squared_cover: i64,
    pub k_squared_y: i64,
    /// `h⁰(T, 𝒪_T(X̂))` by Riemann–Roch on the abelian threefold.
    pub h0_ambient: i64,
    /// `h⁰(𝒪_X̂(X̂))` from `0 → 𝒪_T → 𝒪_T(X̂) → 𝒪_X̂(X̂) → 0`.
    pub h0_normal: i64,
    pub sequence_dimensions: [i64; 4],
    pub family_dimension: i64,
    pub line_count_moduli: i64,
    /// Recorded only; not recomputed.
    pub secondary_family_dimensions: [usize; 5],
    pub report: Report,
}

pub fn moduli_dimension_report() -> ModuliReport {
    let invariant_sections = invariant_section_dimension();
    let curve_moduli = 3;
    let dimension = curve_moduli + invariant_sections - 1;
    let chi = 1;
    let q = 3;
    let cover_degree = 8;
    let k_squared_primary = 6;
    let p_g_cover = q + cover_degree * chi - 1;
    let k_squared_cover = k_squared_primary * cover_degree;
    let k_squared_y = triple_self_intersection([2, 2, 2]);
    let h0_ambient = k_squared_y / 6;
    let (h0_t, h1_t) = (1, 3);
    let h0_normal = h0_ambient - h0_t + h1_t;
    let sequence_dimensions = [3, 10, 9, 3];
    let ppav_moduli = 6;
    let linear_system = h0_ambient - 1;
    let family_dimension = ppav_moduli + linear_system;
    let [s0, s1, s2, s3] = sequence_dimensions;
    let line_count_moduli = 9 - 3 - 2;

    let mut report = Report::new("primary family dimension");
    report.push(Check::with_detail("invariant sections", invariant_sections == 2, invariant_sections.to_string()));
    report.push(Check::with_detail("moduli dimension is 4", dimension == 4, format!("{curve_moduli} + ({invariant_sections} - 1)")));
    report.push(Check::with_detail("p_g of the cover is 10", p_g_cover == 10, format!("{q} + {cover_degree}*{chi} - 1")));
    report.push(Check::with_detail("K^2 of the cover is 48", k_squared_cover == 48, format!("{k_squared_primary} * 2^3")));
    report.push(Check::with_detail("K_Y^2 is 48", k_squared_y == 48 && k_squared_y == k_squared_cover, "(2,2,2)^3".to_string()));
    report.push(Check::with_detail("p_g(Y) = p_g of the cover", h0_normal == p_g_cover, format!("{h0_ambient} - {h0_t} + {h1_t}")));
    report.check("h0 of the normal bundle matches the sequence", h0_normal == s1 && s0 == 3);
    report.push(Check::with_detail(
        "deformation count 13 = 6 + 7",
        family_dimension == 13 && (s1 - s0) + (s2 - s3) == family_dimension,
        format!("{ppav_moduli} + {linear_system}"),
    ));
    report.push(Check::with_detail("line count gives the same dimension", line_count_moduli == dimension as i64, "9 - 3 - 2".to_string()));

    ModuliReport {
        curve_moduli,
        invariant_sections,
        dimension,
        chi,
        irregularity_of_cover: q,
        cover_degree,
        p_g_cover,
        k_squared_cover,
        k_squared_y,
        h0_ambient,
        h0_normal,
        sequence_dimensions,
        family_dimension,
        line_count_moduli,
        secondary_family_dimensions: [4, 3, 2, 1, 0],
        report,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_invariant_sections() {
        assert_eq!(invariant_section_dimension(), 2);
        let spaces: Vec<Vec<Character>> = SECTION_CHARACTERS.iter().map(|s| s.to_vec()).collect();
        assert_eq!(invariant_dimension_brute_force(&spaces), 2);
    }

    #[test]
    fn trivial_factor_gives_one() {
        let mut spaces: Vec<Vec<Character>> = SECTION_CHARACTERS.iter().map(|s| s.to_vec()).collect();
        spaces[1] = vec![TRIVIAL];
        assert_eq!(invariant_dimension(&spaces), 1);
        assert_eq!(invariant_dimension_brute_force(&spaces), 1);
    }

    #[test]
    fn report() {
        let r = moduli_dimension_report();
        assert_eq!(r.dimension, 4);
        assert_eq!((r.p_g_cover, r.k_squared_cover, r.k_squared_y), (10, 48, 48));
        assert!(r.report.all_pass(), "{}", r.report);
    }
}

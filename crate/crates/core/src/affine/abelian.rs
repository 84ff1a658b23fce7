use serde::Serialize;

use super::{build_gamma, gamma, AffineMap, LatticeVector};
use crate::error::{Error, Result};
use crate::exact::{abelian_invariants, AbelianInvariants, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RelationFamily {
    /// `2[g] = μ` where `g² = t_μ`.
    Square,
    /// `Aλ − λ = 0` from `g t_λ g⁻¹ = t_{Aλ}`.
    Conjugation,
    /// `μ = 0` where `[g, h] = t_μ` for two glides.
    GlideCommutator,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationRow {
    pub family: RelationFamily,
    pub label: String,
    pub coefficients: Vec<i64>,
}

/// Column layout for an abelianization presentation: the glides, then
/// `e₁', e₂', e₃'`, then `e₁, e₂, e₃`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianizationColumns {
    pub glides: Vec<usize>,
}

impl AbelianizationColumns {
    pub fn len(&self) -> usize {
        self.glides.len() + 6
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn names(&self) -> Vec<String> {
        let mut out: Vec<String> = self.glides.iter().map(|i| format!("γ{i}")).collect();
        out.extend(["e1'", "e2'", "e3'", "e1", "e2", "e3"].map(String::from));
        out
    }

    pub fn glide_column(&self, i: usize) -> Option<usize> {
        self.glides.iter().position(|&g| g == i)
    }

    pub fn e_prime_column(&self, i: usize) -> usize {
        self.glides.len() + i - 1
    }

    pub fn e_column(&self, i: usize) -> usize {
        self.glides.len() + 2 + i
    }

    fn lattice_row(&self, v: LatticeVector) -> Vec<i64> {
        let mut row = vec![0; self.len()];
        for i in 1..=3 {
            row[self.e_column(i)] = v.0[i - 1];
            row[self.e_prime_column(i)] = v.0[i + 2];
        }
        row
    }
}

/// Relations of the extension `Λ → ⟨glides, Λ⟩ → (ℤ/2)^k`, abelianized.
fn extension_relations(columns: &AbelianizationColumns) -> Vec<RelationRow> {
    let glides: Vec<AffineMap> = columns.glides.iter().map(|&i| gamma(i)).collect();
    let mut rows = Vec::new();

    for (c, (&i, g)) in columns.glides.iter().zip(&glides).enumerate() {
        let mu = g.pow(2).lattice_translation().expect("glide squares are translations");
        let mut row = columns.lattice_row(-mu);
        row[c] += 2;
        rows.push(RelationRow { family: RelationFamily::Square, label: format!("γ{i}² = t_{mu}"), coefficients: row });
    }

    for (&i, g) in columns.glides.iter().zip(&glides) {
        for lambda in LatticeVector::basis() {
            let image = g
                .compose(&AffineMap::translation_by(lambda))
                .compose(&g.inverse())
                .lattice_translation()
                .expect("conjugate of a translation is a translation");
            let diff = image - lambda;
            if diff != LatticeVector::ZERO {
                rows.push(RelationRow {
                    family: RelationFamily::Conjugation,
                    label: format!("γ{i} t_{lambda} γ{i}⁻¹ = t_{image}"),
                    coefficients: columns.lattice_row(diff),
                });
            }
        }
    }

    for a in 0..glides.len() {
        for b in a + 1..glides.len() {
            let mu = glides[a]
                .commutator(&glides[b])
                .lattice_translation()
                .expect("glide commutators are translations");
            if mu != LatticeVector::ZERO {
                rows.push(RelationRow {
                    family: RelationFamily::GlideCommutator,
                    label: format!("[γ{}, γ{}] = t_{mu}", columns.glides[a], columns.glides[b]),
                    coefficients: columns.lattice_row(mu),
                });
            }
        }
    }
    rows
}

pub fn rows_to_matrix(rows: &[RelationRow], n: usize) -> IntMatrix {
    let raw: Vec<Vec<i64>> = rows.iter().map(|r| r.coefficients.clone()).collect();
    IntMatrix::from_rows(n, &raw).expect("rows share the column layout")
}

/// Relations for `Γ^{ab}` on `(γ₁, γ₂, γ₃, e₁', e₂', e₃', e₁, e₂, e₃)`, each
/// row derived from an exact affine identity.
pub fn gamma_relation_matrix() -> (AbelianizationColumns, Vec<RelationRow>) {
    let columns = AbelianizationColumns { glides: vec![1, 2, 3] };
    let rows = extension_relations(&columns);
    (columns, rows)
}

pub fn gamma_abelianization() -> AbelianInvariants {
    let (columns, rows) = gamma_relation_matrix();
    abelian_invariants(&rows_to_matrix(&rows, columns.len()), columns.len())
        .expect("relation matrix has the declared column count")
}

/// Image of `γᵢ` in `Γ/Λ ≅ (ℤ/2)³` read off the linear part: `γ₁` negates
/// `z₂`, `γ₂` negates `z₃`, `γ₃` negates `z₁`.
pub fn glide_class(g: &AffineMap) -> [u8; 3] {
    let neg = |k: usize| (g.linear.0[k] < 0) as u8;
    [neg(1), neg(2), neg(0)]
}

/// The homomorphism `Γ → (ℤ/2)³ ⊕ (ℤ/2)³` sending `γᵢ` and `eᵢ'` to the
/// coordinate vectors and `eᵢ` to zero. The second block is the `e'`
/// coordinate of the translation mod 2, which is well defined because glide
/// translations have no `e'` component. `None` if `g` is not in `Γ`.
pub fn abelian_quotient_map(g: &AffineMap) -> Option<[u8; 6]> {
    let t = g.translation.0;
    if t[3..].iter().any(|x| x % 2 != 0) {
        return None;
    }
    let c = glide_class(g);
    let b = |k: usize| (t[k] / 2).rem_euclid(2) as u8;
    Some([c[0], c[1], c[2], b(3), b(4), b(5)])
}

fn subgroup_glides(i: usize) -> Result<[usize; 2]> {
    match i {
        1 => Ok([1, 2]),
        2 => Ok([2, 3]),
        3 => Ok([1, 3]),
        _ => Err(Error::InvalidIndex(i)),
    }
}

/// Generators of `Γᵢ`: `Γ₃ = ⟨γ₁, e₁', e₂, e₂', γ₃, e₃'⟩` and its cyclic
/// analogues, in block order.
pub fn index2_subgroup(i: usize) -> Result<[AffineMap; 6]> {
    let glides = subgroup_glides(i)?;
    let g = build_gamma();
    Ok(std::array::from_fn(|k| {
        let block = k / 2 + 1;
        if k % 2 == 1 {
            g.t_e_prime(block)
        } else if glides.contains(&block) {
            g.gamma(block)
        } else {
            g.t_e(block)
        }
    }))
}

pub fn subgroup_relation_matrix(i: usize) -> Result<(AbelianizationColumns, Vec<RelationRow>)> {
    let columns = AbelianizationColumns { glides: subgroup_glides(i)?.to_vec() };
    let rows = extension_relations(&columns);
    Ok((columns, rows))
}

pub fn subgroup_abelianization(i: usize) -> Result<AbelianInvariants> {
    let (columns, rows) = subgroup_relation_matrix(i)?;
    abelian_invariants(&rows_to_matrix(&rows, columns.len()), columns.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::Word;
    use std::collections::BTreeSet;

    #[test]
    fn gamma_ab_is_two_to_the_six() {
        let inv = gamma_abelianization();
        assert_eq!(inv, AbelianInvariants::elementary_two(6));
    }

    #[test]
    fn relation_families_present() {
        let (_, rows) = gamma_relation_matrix();
        let count = |f| rows.iter().filter(|r| r.family == f).count();
        assert_eq!(count(RelationFamily::Square), 3);
        assert_eq!(count(RelationFamily::Conjugation), 6);
        assert_eq!(count(RelationFamily::GlideCommutator), 3);
    }

    #[test]
    fn dropping_glide_commutators_enlarges_h1() {
        let (columns, rows) = gamma_relation_matrix();
        let kept: Vec<_> =
            rows.into_iter().filter(|r| r.family != RelationFamily::GlideCommutator).collect();
        let inv = abelian_invariants(&rows_to_matrix(&kept, columns.len()), columns.len()).unwrap();
        assert_eq!(inv.order(), Some(512));
        assert_eq!(inv.to_string(), "(Z/2)^3 + (Z/4)^3");
    }

    #[test]
    fn dropping_conjugation_rows_leaves_free_part() {
        let (columns, rows) = gamma_relation_matrix();
        let kept: Vec<_> = rows
            .into_iter()
            .filter(|r| r.family == RelationFamily::Square)
            .collect();
        let inv = abelian_invariants(&rows_to_matrix(&kept, columns.len()), columns.len()).unwrap();
        assert!(inv.free_rank >= 1);
    }

    #[test]
    fn quotient_map_is_a_homomorphism_on_words() {
        let g = build_gamma();
        let words = [
            Word(vec![1, 3, -5, 2]),
            Word(vec![-1, -1, 4, 6, 3]),
            Word(vec![5, 3, 1]),
            Word(vec![2, -4, 6, 1, 1]),
        ];
        for a in &words {
            for b in &words {
                let fa = abelian_quotient_map(&a.eval(&g.generators)).unwrap();
                let fb = abelian_quotient_map(&b.eval(&g.generators)).unwrap();
                let fab = abelian_quotient_map(&a.concat(b).eval(&g.generators)).unwrap();
                let sum: Vec<u8> = fa.iter().zip(fb).map(|(x, y)| (x + y) % 2).collect();
                assert_eq!(fab.to_vec(), sum);
            }
        }
    }

    #[test]
    fn quotient_map_is_onto() {
        let g = build_gamma();
        let images: Vec<[u8; 6]> =
            g.generators.iter().map(|m| abelian_quotient_map(m).unwrap()).collect();
        // γ₁, e₁', γ₂, e₂', γ₃, e₃' hit the six coordinate vectors.
        let expected = [0, 3, 1, 4, 2, 5];
        for (img, &k) in images.iter().zip(&expected) {
            let mut unit = [0u8; 6];
            unit[k] = 1;
            assert_eq!(*img, unit);
        }
        for i in 1..=3 {
            assert_eq!(abelian_quotient_map(&g.t_e(i)), Some([0; 6]));
            assert_eq!(abelian_quotient_map(&g.t_e_prime(i).pow(2)), Some([0; 6]));
        }
    }

    #[test]
    fn glide_class_kills_lattice() {
        let g = build_gamma();
        for t in g.lattice_basis {
            assert_eq!(glide_class(&t), [0, 0, 0]);
        }
        for i in 1..=3 {
            let mut unit = [0; 3];
            unit[i - 1] = 1;
            assert_eq!(glide_class(&g.gamma(i)), unit);
        }
    }

    #[test]
    fn gamma3_generators() {
        let g = build_gamma();
        let gens = index2_subgroup(3).unwrap();
        assert!(gens.contains(&g.gamma(1)));
        assert!(gens.contains(&g.gamma(3)));
        assert!(!gens.contains(&g.gamma(2)));
        assert_eq!(gens, [g.gamma(1), g.t_e_prime(1), g.t_e(2), g.t_e_prime(2), g.gamma(3), g.t_e_prime(3)]);
    }

    #[test]
    fn subgroups_have_index_two() {
        for i in 1..=3 {
            let gens = index2_subgroup(i).unwrap();
            let mut span: BTreeSet<[u8; 3]> = BTreeSet::from([[0, 0, 0]]);
            loop {
                let mut next = span.clone();
                for s in &span {
                    for g in &gens {
                        let c = glide_class(g);
                        next.insert(std::array::from_fn(|k| (s[k] + c[k]) % 2));
                    }
                }
                if next == span {
                    break;
                }
                span = next;
            }
            assert_eq!(span.len(), 4, "Γ{i}");
        }
    }

    #[test]
    fn subgroups_contain_lattice() {
        let g = build_gamma();
        for i in 1..=3 {
            let gens = index2_subgroup(i).unwrap();
            let glide = g.gamma(i);
            assert!(gens.contains(&glide));
            assert_eq!(glide.pow(2), g.t_e(i));
        }
    }

    #[test]
    fn subgroup_abelianizations() {
        for i in 1..=3 {
            let inv = subgroup_abelianization(i).unwrap();
            assert_eq!(inv, AbelianInvariants::new(2, vec![2, 2, 2, 2]).unwrap(), "Γ{i}");
        }
        assert_eq!(subgroup_abelianization(4), Err(Error::InvalidIndex(4)));
    }

    #[test]
    fn subgroup_free_part_is_gamma_i_and_e_i_prime() {
        for i in 1..=3 {
            let (columns, mut rows) = subgroup_relation_matrix(i).unwrap();
            for col in [columns.glide_column(i).unwrap(), columns.e_prime_column(i)] {
                let mut r = vec![0; columns.len()];
                r[col] = 1;
                rows.push(RelationRow { family: RelationFamily::Square, label: "kill".into(), coefficients: r });
            }
            let inv = abelian_invariants(&rows_to_matrix(&rows, columns.len()), columns.len()).unwrap();
            assert_eq!(inv.free_rank, 0, "Γ{i}");
            assert_eq!(inv.torsion, vec![2, 2, 2, 2], "Γ{i}");
        }
    }
}

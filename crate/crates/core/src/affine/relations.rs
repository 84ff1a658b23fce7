use serde::Serialize;

use super::{build_gamma, AffineMap, LatticeVector};
use crate::exact::IntMatrix;

/// A word in signed, 1-based generator indices; `-k` is the inverse of
/// generator `k`. Evaluation composes left to right, so `[a, b]` is `a ∘ b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Word(pub Vec<i32>);

impl Word {
    pub fn eval(&self, generators: &[AffineMap]) -> AffineMap {
        self.0.iter().fold(AffineMap::IDENTITY, |acc, &letter| {
            let g = generators[letter.unsigned_abs() as usize - 1];
            acc.compose(&if letter < 0 { g.inverse() } else { g })
        })
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|x| -x).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        Word(std::iter::repeat_n(base.0, n.unsigned_abs() as usize).flatten().collect())
    }

    /// Exponent sum of each generator.
    pub fn exponent_sums(&self, n_generators: usize) -> Vec<i64> {
        let mut sums = vec![0; n_generators];
        for &letter in &self.0 {
            sums[letter.unsigned_abs() as usize - 1] += letter.signum() as i64;
        }
        sums
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Presentation {
    pub generator_names: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    /// Whether each relator evaluates to the identity under `assignment`.
    pub fn check(&self, assignment: &[AffineMap]) -> Vec<bool> {
        self.relators.iter().map(|r| r.eval(assignment) == AffineMap::IDENTITY).collect()
    }

    /// Rows are exponent sums of relators: a presentation of the abelianization.
    pub fn abelianized_relations(&self) -> IntMatrix {
        let n = self.generator_names.len();
        let rows: Vec<Vec<i64>> = self.relators.iter().map(|r| r.exponent_sums(n)).collect();
        IntMatrix::from_rows(n, &rows).expect("rows have generator count entries")
    }
}

/// Words for the lattice basis `e₁, e₂, e₃, e₁', e₂', e₃'` over the
/// generators `γ₁, e₁', γ₂, e₂', γ₃, e₃'`, using `eᵢ = γᵢ²`.
fn lattice_words() -> [Word; 6] {
    [
        Word(vec![1, 1]),
        Word(vec![3, 3]),
        Word(vec![5, 5]),
        Word(vec![2]),
        Word(vec![4]),
        Word(vec![6]),
    ]
}

fn translation_word(v: LatticeVector) -> Word {
    let words = lattice_words();
    let mut out = Word(vec![]);
    for (k, &c) in v.0.iter().enumerate() {
        out = out.concat(&words[k].pow(c));
    }
    out
}

/// A presentation of `Γ` on `γ₁, e₁', γ₂, e₂', γ₃, e₃'` as an extension of
/// `(ℤ/2)³` by `Λ`: the lattice is abelian, each glide acts on it by its
/// sign, and the glide commutators are the translations they evaluate to.
pub fn gamma_presentation() -> Presentation {
    let g = build_gamma();
    let words = lattice_words();
    let glides = [Word(vec![1]), Word(vec![3]), Word(vec![5])];
    let mut relators = Vec::new();

    for k in 0..6 {
        for l in k + 1..6 {
            relators.push(
                words[k].concat(&words[l]).concat(&words[k].inverse()).concat(&words[l].inverse()),
            );
        }
    }
    for (a, ga) in glides.iter().enumerate() {
        let sign = g.gamma(a + 1).linear;
        for (k, lk) in words.iter().enumerate() {
            let conj = ga.concat(lk).concat(&ga.inverse());
            relators.push(conj.concat(&lk.pow(-sign.sign_at(k))));
        }
    }
    for a in 0..3 {
        for b in a + 1..3 {
            let mu = g
                .gamma(a + 1)
                .commutator(&g.gamma(b + 1))
                .lattice_translation()
                .expect("glide commutators are lattice translations");
            let comm = glides[a]
                .concat(&glides[b])
                .concat(&glides[a].inverse())
                .concat(&glides[b].inverse());
            relators.push(comm.concat(&translation_word(-mu)));
        }
    }

    Presentation {
        generator_names: ["γ1", "e1'", "γ2", "e2'", "γ3", "e3'"].map(String::from).to_vec(),
        relators,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub family: &'static str,
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    fn push(&mut self, family: &'static str, name: String, holds: bool) {
        self.checks.push(RelationCheck { family, name, holds });
    }
}

const BASIS_NAMES: [&str; 6] = ["e1", "e2", "e3", "e1'", "e2'", "e3'"];

pub fn verify_relations() -> RelationReport {
    let g = build_gamma();
    let mut report = RelationReport::default();

    for i in 1..=3 {
        report.push("square", format!("γ{i}² = t_e{i}"), g.gamma(i).pow(2) == g.t_e(i));
    }

    // Storage indices of the translations each glide commutes with.
    let commuting: [(usize, [usize; 4]); 3] = [(1, [0, 3, 2, 5]), (2, [1, 4, 0, 3]), (3, [1, 4, 2, 5])];
    for (i, ks) in commuting {
        let gi = g.gamma(i);
        for k in ks {
            let t = g.lattice_basis[k];
            report.push(
                "commute",
                format!("γ{i} t_{} = t_{} γ{i}", BASIS_NAMES[k], BASIS_NAMES[k]),
                gi.compose(&t) == t.compose(&gi),
            );
        }
    }

    let twisted: [(usize, [usize; 2]); 3] = [(1, [1, 4]), (2, [2, 5]), (3, [0, 3])];
    for (i, ks) in twisted {
        let gi = g.gamma(i);
        for k in ks {
            let t = g.lattice_basis[k];
            report.push(
                "twisted",
                format!("γ{i} t_{} = t_{}⁻¹ γ{i}", BASIS_NAMES[k], BASIS_NAMES[k]),
                gi.compose(&t) == t.inverse().compose(&gi),
            );
        }
    }

    // γᵢγᵢ₊₁ = t_{eᵢ₊₁}⁻¹ γᵢ₊₁γᵢ, cyclically.
    for i in 1..=3 {
        let j = i % 3 + 1;
        let (gi, gj) = (g.gamma(i), g.gamma(j));
        report.push(
            "commutator",
            format!("γ{i}γ{j} = t_e{j}⁻¹ γ{j}γ{i}"),
            gi.compose(&gj) == g.t_e(j).inverse().compose(&gj).compose(&gi),
        );
    }

    report
}

/// How two elements of `Γ` fail to commute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Commutation {
    Commute,
    /// `gh = t_λ hg`.
    Translate(LatticeVector),
}

/// Returns `None` only when `gh(hg)⁻¹` is not a lattice translation, which
/// cannot happen inside `Γ`.
pub fn classify_pair(g: &AffineMap, h: &AffineMap) -> Option<Commutation> {
    let lambda = g.compose(h).compose(&h.compose(g).inverse()).lattice_translation()?;
    Some(if lambda == LatticeVector::ZERO {
        Commutation::Commute
    } else {
        Commutation::Translate(lambda)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::abelian_invariants;

    #[test]
    fn all_relations_hold() {
        let r = verify_relations();
        assert_eq!(r.checks.len(), 3 + 12 + 6 + 3);
        assert!(r.all_pass(), "{:?}", r.checks.iter().filter(|c| !c.holds).collect::<Vec<_>>());
    }

    #[test]
    fn gamma_one_does_not_commute_with_e2() {
        let g = build_gamma();
        let (g1, t) = (g.gamma(1), g.t_e(2));
        assert_ne!(g1.compose(&t), t.compose(&g1));
        assert_eq!(g1.compose(&t), t.inverse().compose(&g1));
    }

    #[test]
    fn gamma_one_commutes_with_e3_prime() {
        let g = build_gamma();
        assert_eq!(classify_pair(&g.gamma(1), &g.t_e_prime(3)), Some(Commutation::Commute));
    }

    #[test]
    fn presentation_relators_hold() {
        let p = gamma_presentation();
        let g = build_gamma();
        assert!(p.check(&g.generators).iter().all(|&b| b));
    }

    #[test]
    fn presentation_abelianizes_to_two_torsion() {
        let p = gamma_presentation();
        let inv = abelian_invariants(&p.abelianized_relations(), 6).unwrap();
        assert_eq!(inv.to_string(), "(Z/2)^6");
    }

    #[test]
    fn word_inverse() {
        let g = build_gamma();
        let w = Word(vec![1, -4, 3, 5, -2]);
        assert_eq!(w.eval(&g.generators).compose(&w.inverse().eval(&g.generators)), AffineMap::IDENTITY);
    }
}

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::FiniteGroupTable;
use crate::affine::{build_gamma, AffineMap, LatticeVector, SignVector};

/// An element of `Γ̄ = Γ/2Λ`: a sign vector and translation numerators
/// (over 2) reduced mod 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QuotElement {
    pub linear: SignVector,
    pub translation: [u8; 6],
}

impl QuotElement {
    pub const IDENTITY: QuotElement = QuotElement { linear: SignVector::IDENTITY, translation: [0; 6] };

    pub fn from_affine(g: &AffineMap) -> Self {
        QuotElement { linear: g.linear, translation: g.translation.0.map(|x| x.rem_euclid(4) as u8) }
    }

    /// `self ∘ other`.
    pub fn mul(&self, other: &QuotElement) -> QuotElement {
        let t = std::array::from_fn(|k| {
            let s = other.translation[k];
            let acted = if self.linear.sign_at(k) > 0 { s } else { (4 - s) % 4 };
            (acted + self.translation[k]) % 4
        });
        QuotElement { linear: self.linear.compose(other.linear), translation: t }
    }

    /// Lies in the image of `Λ`.
    pub fn is_lattice(&self) -> bool {
        self.linear.is_identity() && self.translation.iter().all(|r| r % 2 == 0)
    }
}

/// The enumerated group `Γ̄` with its element list.
#[derive(Clone, Debug)]
pub struct GammaBar {
    pub table: FiniteGroupTable,
    pub elements: Vec<QuotElement>,
    index: HashMap<QuotElement, usize>,
    /// Images of `γ₁, e₁', γ₂, e₂', γ₃, e₃'`.
    pub generators: [usize; 6],
    /// Images of `e₁, e₂, e₃, e₁', e₂', e₃'`.
    pub lattice: [usize; 6],
}

impl GammaBar {
    pub fn index_of(&self, x: &QuotElement) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// Image of an element of `Γ`.
    pub fn image(&self, g: &AffineMap) -> usize {
        self.index_of(&QuotElement::from_affine(g)).expect("Γ maps onto Γ̄")
    }

    pub fn image_of_translation(&self, v: LatticeVector) -> usize {
        self.image(&AffineMap::translation_by(v))
    }

    /// Image of `γᵢ`.
    pub fn gamma(&self, i: usize) -> usize {
        self.generators[2 * (i - 1)]
    }

    /// The subgroup `Λ/2Λ`, sorted.
    pub fn lattice_subgroup(&self) -> Vec<usize> {
        (0..self.elements.len()).filter(|&x| self.elements[x].is_lattice()).collect()
    }
}

/// Breadth-first closure from the six generators, identity first.
pub fn enumerate_gamma_bar() -> GammaBar {
    let g = build_gamma();
    let gens: Vec<QuotElement> = g.generators.iter().map(QuotElement::from_affine).collect();
    let mut elements = vec![QuotElement::IDENTITY];
    let mut index = HashMap::from([(QuotElement::IDENTITY, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for s in &gens {
            let y = elements[x].mul(s);
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(y) {
                e.insert(elements.len());
                queue.push_back(elements.len());
                elements.push(y);
            }
        }
    }
    let n = elements.len();
    let table = FiniteGroupTable::from_fn(n, |a, b| index[&elements[a].mul(&elements[b])])
        .expect("closure of a group action is a group");
    let lookup = |m: &AffineMap| index[&QuotElement::from_affine(m)];
    let generators = g.generators.map(|m| lookup(&m));
    let lattice = g.lattice_basis.map(|m| lookup(&m));
    GammaBar { table, elements, index, generators, lattice }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{classify, IsoClass};

    #[test]
    fn order_is_512() {
        let gb = enumerate_gamma_bar();
        assert_eq!(gb.table.order(), 512);
        assert_eq!(gb.elements[0], QuotElement::IDENTITY);
    }

    #[test]
    fn lattice_image_is_central_elementary_abelian() {
        let gb = enumerate_gamma_bar();
        let lat = gb.lattice_subgroup();
        assert_eq!(lat.len(), 64);
        let center = gb.table.center();
        assert!(lat.iter().all(|x| center.contains(x)));
        assert!(lat.iter().all(|&x| gb.table.mul(x, x) == gb.table.identity()));
        let mut lat_gens = gb.lattice.to_vec();
        lat_gens.sort_unstable();
        assert_eq!(gb.table.generate(&lat_gens).unwrap(), lat);
    }

    #[test]
    fn quotient_by_lattice_is_two_cubed() {
        let gb = enumerate_gamma_bar();
        let q = gb.table.quotient(&gb.lattice_subgroup()).unwrap();
        assert_eq!(classify(&q.table), IsoClass::ElementaryAbelian(3));
    }

    #[test]
    fn composition_matches_affine() {
        let g = build_gamma();
        let gb = enumerate_gamma_bar();
        for a in g.generators {
            for b in g.generators {
                assert_eq!(gb.image(&a.compose(&b)), gb.table.mul(gb.image(&a), gb.image(&b)));
            }
        }
        // 2Λ maps to the identity.
        assert_eq!(gb.image_of_translation(LatticeVector::e(2).scale(2)), 0);
    }
}

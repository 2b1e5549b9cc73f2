//! Finite groups given by presentations, with canonical element words.

use crate::enumerate::{enumerate, regular_representation, CosetTable, Limits};
use crate::error::Error;
use crate::perm::{PermGroup, Permutation};
use crate::words::{Presentation, Word};

/// Largest group order accepted by [`model_group`]; the model keeps a full
/// multiplication table.
pub const MODEL_ORDER_LIMIT: usize = 4096;

/// A finite group `H` realized by its right regular representation.
///
/// Elements are numbered by the standardized coset table of the trivial
/// subgroup: element `i` is the point `i` of the regular action, and its
/// canonical word is the shortlex-least word reaching it.
#[derive(Clone, Debug)]
pub struct FiniteGroupModel {
    presentation: Presentation,
    table: CosetTable,
    group: PermGroup,
    words: Vec<Word>,
    /// `mult[i * n + j]` is the index of `eᵢ·eⱼ`.
    mult: Vec<u32>,
    inverse: Vec<u32>,
    derived: PermGroup,
    /// Shortlex-least element of each coset of the derived subgroup.
    transversal: Vec<usize>,
    coset_of: Vec<u32>,
}

/// Builds the model of the group presented by `p`.
pub fn model_group(p: &Presentation, limits: Limits) -> Result<FiniteGroupModel, Error> {
    let table = enumerate(p, &[], limits)?;
    let n = table.len();
    if n > MODEL_ORDER_LIMIT {
        return Err(Error::ModelTooLarge {
            order: n,
            budget: MODEL_ORDER_LIMIT,
        });
    }
    let group = regular_representation(&table)?;
    let words = table.coset_words();
    let mut mult = vec![0u32; n * n];
    for i in 0..n {
        for (j, w) in words.iter().enumerate() {
            mult[i * n + j] = table.trace(i, w) as u32;
        }
    }
    let mut inverse = vec![0u32; n];
    for i in 0..n {
        let j = (0..n).find(|&j| mult[i * n + j] == 0).expect("group element has an inverse");
        inverse[i] = j as u32;
    }
    let derived = group.derived_subgroup();
    let derived_points: Vec<usize> = (0..n)
        .filter(|&i| derived.contains(&element_perm(&mult, n, i)).unwrap_or(false))
        .collect();
    const NONE: u32 = u32::MAX;
    let mut coset_of = vec![NONE; n];
    let mut transversal = Vec::new();
    for i in 0..n {
        if coset_of[i] != NONE {
            continue;
        }
        let c = transversal.len() as u32;
        transversal.push(i);
        for &d in &derived_points {
            coset_of[mult[d * n + i] as usize] = c;
        }
    }
    Ok(FiniteGroupModel {
        presentation: p.clone(),
        table,
        group,
        words,
        mult,
        inverse,
        derived,
        transversal,
        coset_of,
    })
}

fn element_perm(mult: &[u32], n: usize, i: usize) -> Permutation {
    Permutation::from_images_unchecked((0..n).map(|q| mult[q * n + i]).collect())
}

impl FiniteGroupModel {
    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn coset_table(&self) -> &CosetTable {
        &self.table
    }

    /// The right regular representation, generated by the images of the
    /// presentation's generators.
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn rank(&self) -> usize {
        self.presentation.rank()
    }

    /// Canonical word of every element, indexed by element.
    pub fn element_words(&self) -> &[Word] {
        &self.words
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.words[i]
    }

    /// Index of the element represented by `w`.
    pub fn element_of(&self, w: &Word) -> usize {
        self.table.trace(0, w)
    }

    /// Index of the element for generator `g`.
    pub fn generator_element(&self, g: usize) -> usize {
        self.table.entry(0, 2 * g)
    }

    pub fn multiply(&self, i: usize, j: usize) -> usize {
        self.mult[i * self.order() + j] as usize
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    /// `i^j = j⁻¹·i·j`
    pub fn conjugate(&self, i: usize, j: usize) -> usize {
        self.multiply(self.multiply(self.inverse(j), i), j)
    }

    /// `[i, j] = i⁻¹·j⁻¹·i·j`
    pub fn commutator(&self, i: usize, j: usize) -> usize {
        let a = self.multiply(self.inverse(i), self.inverse(j));
        self.multiply(self.multiply(a, i), j)
    }

    /// The permutation of element `i` in the regular representation.
    pub fn element(&self, i: usize) -> Permutation {
        element_perm(&self.mult, self.order(), i)
    }

    pub fn is_abelian(&self) -> bool {
        self.group.is_abelian()
    }

    /// The derived subgroup `H′` inside the regular representation.
    pub fn derived_subgroup(&self) -> &PermGroup {
        &self.derived
    }

    /// Shortlex-least element of each `H′`-coset, in increasing order.
    pub fn transversal(&self) -> &[usize] {
        &self.transversal
    }

    pub fn transversal_words(&self) -> Vec<Word> {
        self.transversal.iter().map(|&i| self.words[i].clone()).collect()
    }

    /// Index of the `H′`-coset containing element `i`.
    pub fn derived_coset(&self, i: usize) -> usize {
        self.coset_of[i] as usize
    }

    /// Elements of the coset with the given index.
    pub fn coset_members(&self, coset: usize) -> Vec<usize> {
        (0..self.order()).filter(|&i| self.derived_coset(i) == coset).collect()
    }

    /// Evaluates a word in the generators of this group's presentation using
    /// the given images.
    pub fn evaluate_in(w: &Word, images: &[Permutation], degree: usize) -> Permutation {
        w.letters().iter().fold(Permutation::identity(degree), |acc, l| {
            let g = &images[l.generator];
            if l.inverse {
                acc.mul(&g.inverse())
            } else {
                acc.mul(g)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn model(text: &str) -> FiniteGroupModel {
        model_group(&Presentation::parse(text).unwrap(), Limits::default()).unwrap()
    }

    fn check_words(m: &FiniteGroupModel) {
        for (i, w) in m.element_words().iter().enumerate() {
            assert_eq!(m.element_of(w), i);
            let e = m.group().evaluate(w.letters());
            assert_eq!(e, m.element(i));
            assert_eq!(e.image(0), i);
        }
        for w in m.element_words().windows(2) {
            assert!(w[0].shortlex_cmp(&w[1]).is_lt());
        }
    }

    #[test]
    fn small_models() {
        let c2 = model("generators: a\nrelators: a^2");
        assert_eq!(c2.order(), 2);
        assert!(c2.word(0).is_identity());
        assert_eq!(c2.presentation().display_word(c2.word(1)), "a");
        check_words(&c2);

        let v4 = model("generators: a b\nrelators: a^2 b^2 [a,b]");
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.transversal().len(), 4);
        check_words(&v4);

        let s3 = model("generators: a b\nrelators: a^2 b^3 (ab)^2");
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.transversal().len(), 2);
        assert_eq!(s3.derived_subgroup().order(), 3);
        check_words(&s3);
    }

    /// Word-closure oracle: S₃ as concrete permutations of three points.
    #[test]
    fn s3_transversal_against_closure() {
        let s3 = model("generators: a b\nrelators: a^2 b^3 (ab)^2");
        let a = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        let images = [a, b];
        let concrete: Vec<Permutation> = s3
            .element_words()
            .iter()
            .map(|w| FiniteGroupModel::evaluate_in(w, &images, 3))
            .collect();
        let distinct: HashSet<_> = concrete.iter().cloned().collect();
        assert_eq!(distinct.len(), 6);
        // the transversal elements must have distinct signs
        let signs: HashSet<bool> = s3
            .transversal()
            .iter()
            .map(|&i| concrete[i].order() == 2)
            .collect();
        assert_eq!(signs.len(), 2);
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(
                    concrete[s3.multiply(i, j)],
                    concrete[i].mul(&concrete[j])
                );
            }
        }
    }

    #[test]
    fn arithmetic_is_consistent() {
        let q8 = model("generators: i j\nrelators: i^4 i^2j^-2 j^-1iji");
        assert_eq!(q8.order(), 8);
        for x in 0..8 {
            assert_eq!(q8.multiply(x, q8.inverse(x)), 0);
            for y in 0..8 {
                let c = q8.commutator(x, y);
                assert_eq!(q8.multiply(q8.multiply(y, x), c), q8.multiply(x, y));
            }
        }
        assert_eq!(q8.transversal().len(), 4);
    }
}

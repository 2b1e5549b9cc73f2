//! The weak commutativity group `χ(H)`, Rocco's group `ν(H)`, and the
//! subgroups and maps relating them.
//!
//! Both groups are presented on two copies `x₁…xₙ`, `y₁…yₙ` of the
//! generators of `H`, realized by coset enumeration and studied as regular
//! permutation groups. The swap `ψ: xᵢ ↔ yᵢ` is realized as conjugation by
//! a permutation of the regular domain.

mod chi;
mod nu;
mod verify;

pub use chi::{
    build_chi, build_r, build_r_oracle, build_r_with_transversal, chi_presentation, ChiContext,
};
pub use nu::{build_nu, nu_presentation, NuContext, TripleFamily};
pub use verify::{
    induced_epimorphism, schur_multiplier, verify_abelian_theorem, verify_canonical_quotients,
    verify_corollary_chimodr, verify_gamma_series, verify_lemma_chain, SchurReport,
};

use crate::model::FiniteGroupModel;
use crate::perm::Permutation;
use crate::words::{Presentation, Word};

/// Largest number of element triples used for triple-indexed relators and
/// defect generators.
pub const TRIPLE_BUDGET: u128 = 1 << 16;

/// Generator names for the two copies of `H`.
fn doubled_names(rank: usize) -> Vec<String> {
    (1..=rank)
        .map(|i| format!("x{i}"))
        .chain((1..=rank).map(|i| format!("y{i}")))
        .collect()
}

/// `w` in the first copy of the generators.
fn in_x(w: &Word, rank: usize) -> Word {
    w.shift(2 * rank, 0).expect("word over the rank of H")
}

/// `w` in the second copy of the generators.
fn in_y(w: &Word, rank: usize) -> Word {
    w.shift(2 * rank, rank).expect("word over the rank of H")
}

/// Relators of `H` written in both copies.
fn doubled_relators(p: &Presentation) -> Vec<Word> {
    let rank = p.rank();
    p.relators()
        .iter()
        .map(|r| in_x(r, rank))
        .chain(p.relators().iter().map(|r| in_y(r, rank)))
        .collect()
}

/// Images of all elements of `H` in the two copies of a doubled group.
#[derive(Clone, Debug)]
struct Copies {
    x: Vec<Permutation>,
    y: Vec<Permutation>,
}

impl Copies {
    fn new(m: &FiniteGroupModel, gens: &[Permutation]) -> Self {
        let rank = m.rank();
        let degree = gens.first().map_or(1, Permutation::degree);
        let eval = |w: &Word, off: usize| {
            FiniteGroupModel::evaluate_in(w, &gens[off..off + rank], degree)
        };
        Copies {
            x: m.element_words().iter().map(|w| eval(w, 0)).collect(),
            y: m.element_words().iter().map(|w| eval(w, rank)).collect(),
        }
    }

    /// `[h₁, h₂^ψ]^{h₃} · [h₁^{h₃}, (h₂^{h₃})^ψ]⁻¹`
    fn defect(&self, m: &FiniteGroupModel, h1: usize, h2: usize, h3: usize) -> Permutation {
        let c = Permutation::commutator(&self.x[h1], &self.y[h2]).conjugate(&self.x[h3]);
        let d = Permutation::commutator(&self.x[m.conjugate(h1, h3)], &self.y[m.conjugate(h2, h3)]);
        c.mul(&d.inverse())
    }
}

/// The permutation `σ` of a regular domain with `σ(p·g) = σ(p)·ψ(g)`,
/// where `ψ` swaps generator `i` with generator `i + rank`. Returns `None`
/// if the swap is not an automorphism.
fn swap_permutation(gens: &[Permutation]) -> Option<Permutation> {
    let rank = gens.len() / 2;
    let degree = gens.first().map_or(1, Permutation::degree);
    const NONE: u32 = u32::MAX;
    let mut sigma = vec![NONE; degree];
    sigma[0] = 0;
    let mut queue = vec![0usize];
    let mut k = 0;
    while k < queue.len() {
        let p = queue[k];
        k += 1;
        for (g, perm) in gens.iter().enumerate() {
            let partner = if g < rank { g + rank } else { g - rank };
            let q = perm.image(p);
            let s = gens[partner].image(sigma[p] as usize) as u32;
            if sigma[q] == NONE {
                sigma[q] = s;
                queue.push(q);
            } else if sigma[q] != s {
                return None;
            }
        }
    }
    if sigma.contains(&NONE) {
        return None;
    }
    Permutation::from_images(sigma).ok()
}

fn triple_count(n: usize) -> u128 {
    (n as u128).pow(3)
}

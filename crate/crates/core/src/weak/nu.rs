use std::sync::Arc;

use super::{doubled_names, doubled_relators, in_x, in_y, triple_count, Copies, TRIPLE_BUDGET};
use crate::enumerate::{enumerate, regular_representation, Limits};
use crate::error::Error;
use crate::model::FiniteGroupModel;
use crate::perm::{Homomorphism, PermGroup, Permutation};
use crate::words::{Presentation, Word};

/// Which triples `(h₁, h₂, h₃)` contribute relators to `ν(H)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleFamily {
    /// All element triples; this is the defining presentation.
    Elements,
    /// Triples of generators only.
    Generators,
}

/// `ν(H)` with `τ = [H, H^ψ]`, `Δ = ⟨[h, h^ψ]⟩` and `J = ker(τ → H′)`.
#[derive(Clone, Debug)]
pub struct NuContext {
    model: Arc<FiniteGroupModel>,
    presentation: Presentation,
    group: PermGroup,
    copies: Copies,
    tau: PermGroup,
    delta: PermGroup,
    j: PermGroup,
    rho_h: Homomorphism,
}

/// Two relators per triple:
/// `[h₁, h₂^ψ]^{h₃^ψ} = [h₁, h₂^ψ]^{h₃} = [h₁^{h₃}, (h₂^{h₃})^ψ]`.
pub fn nu_presentation(m: &FiniteGroupModel, family: TripleFamily) -> Result<Presentation, Error> {
    let rank = m.rank();
    let words: Vec<Word> = match family {
        TripleFamily::Elements => {
            let n = m.order();
            if triple_count(n) > TRIPLE_BUDGET {
                return Err(Error::Budget {
                    what: "element triples",
                    needed: triple_count(n),
                    budget: TRIPLE_BUDGET,
                });
            }
            m.element_words().to_vec()
        }
        TripleFamily::Generators => (0..rank).map(|g| m.presentation().generator(g)).collect(),
    };
    let xs: Vec<Word> = words.iter().map(|w| in_x(w, rank)).collect();
    let ys: Vec<Word> = words.iter().map(|w| in_y(w, rank)).collect();
    let mut relators = doubled_relators(m.presentation());
    let op = |r: Result<Word, _>| r.expect("same alphabet");
    for a in 0..words.len() {
        for b in 0..words.len() {
            let c = op(Word::commutator(&xs[a], &ys[b]));
            if c.is_identity() {
                continue;
            }
            for t in 0..words.len() {
                let by_x = op(Word::conjugate(&c, &xs[t]));
                let by_y = op(Word::conjugate(&c, &ys[t]));
                let moved = op(Word::commutator(
                    &op(Word::conjugate(&xs[a], &xs[t])),
                    &op(Word::conjugate(&ys[b], &ys[t])),
                ));
                relators.push(op(by_y.product(&by_x.inverse())));
                relators.push(op(by_x.product(&moved.inverse())));
            }
        }
    }
    relators.retain(|r| !r.is_identity());
    Ok(Presentation::new(&doubled_names(rank), relators).expect("generated names are valid"))
}

fn construction(what: &str) -> Error {
    Error::Construction(what.to_string())
}

/// Builds `ν(H)` from all element triples.
pub fn build_nu(m: &Arc<FiniteGroupModel>, limits: Limits) -> Result<NuContext, Error> {
    let rank = m.rank();
    let presentation = nu_presentation(m, TripleFamily::Elements)?;
    let table = enumerate(&presentation, &[], limits)?;
    let group = regular_representation(&table)?;
    let gens = group.generators().to_vec();
    let copies = Copies::new(m, &gens);

    let hx = group.subgroup(gens[..rank].to_vec())?;
    let hy = group.subgroup(gens[rank..].to_vec())?;
    let tau = group.commutator_subgroup(&hx, &hy)?;
    let diagonal: Vec<Permutation> = (0..m.order())
        .map(|h| Permutation::commutator(&copies.x[h], &copies.y[h]))
        .collect();
    let delta = group.subgroup(diagonal)?;
    if !delta.is_normal_in(&group) {
        return Err(construction("the diagonal subgroup is not normal"));
    }
    let hgens = m.group().generators().to_vec();
    let rho_h = group.homomorphism(m.group(), hgens.iter().chain(&hgens).cloned().collect())?;
    let j = group.intersection(&tau, rho_h.kernel())?;
    if !rho_h.map_subgroup(&tau).same_group(m.derived_subgroup()) {
        return Err(construction("tau does not map onto the derived subgroup"));
    }
    Ok(NuContext {
        model: Arc::clone(m),
        presentation,
        group,
        copies,
        tau,
        delta,
        j,
        rho_h,
    })
}

impl NuContext {
    pub fn model(&self) -> &FiniteGroupModel {
        &self.model
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    pub fn x_element(&self, h: usize) -> &Permutation {
        &self.copies.x[h]
    }

    pub fn y_element(&self, h: usize) -> &Permutation {
        &self.copies.y[h]
    }

    /// `τ = [H, H^ψ]`, isomorphic to the tensor square `H ⊗ H`.
    pub fn tau(&self) -> &PermGroup {
        &self.tau
    }

    /// `Δ = ⟨[h, h^ψ] : h ∈ H⟩`
    pub fn delta(&self) -> &PermGroup {
        &self.delta
    }

    /// Kernel of `τ → H′`, `[h₁, h₂^ψ] ↦ [h₁, h₂]`.
    pub fn nu_j(&self) -> &PermGroup {
        &self.j
    }

    /// `ν → H` sending both copies to `H`; restricted to `τ` it is the map
    /// onto `H′` whose kernel is `J`.
    pub fn rho_h(&self) -> &Homomorphism {
        &self.rho_h
    }
}

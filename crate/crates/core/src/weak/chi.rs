use std::collections::HashSet;
use std::sync::Arc;

use super::{doubled_names, doubled_relators, in_x, in_y, swap_permutation, triple_count, Copies};
use super::TRIPLE_BUDGET;
use crate::enumerate::{enumerate, regular_representation, Limits};
use crate::error::Error;
use crate::model::FiniteGroupModel;
use crate::perm::{Homomorphism, PermGroup, Permutation};
use crate::words::{Presentation, Word};

/// `χ(H)` with its swap automorphism, distinguished subgroups and the
/// three canonical epimorphisms onto `H`, `H × H` and `T(H) ≤ H³`.
#[derive(Clone, Debug)]
pub struct ChiContext {
    model: Arc<FiniteGroupModel>,
    presentation: Presentation,
    group: PermGroup,
    psi: Permutation,
    copies: Copies,
    hx: PermGroup,
    hy: PermGroup,
    l: PermGroup,
    d: PermGroup,
    w: PermGroup,
    dl: PermGroup,
    l_derived: PermGroup,
    l_derived_w: PermGroup,
    rho_h: Homomorphism,
    rho_hxh: Homomorphism,
    rho_t: Homomorphism,
    h_squared: PermGroup,
    t_direct: PermGroup,
}

/// `⟨x, y | relators of H in x and in y, [w(x), w(y)] for every element word w⟩`
pub fn chi_presentation(m: &FiniteGroupModel) -> Presentation {
    let rank = m.rank();
    let mut relators = doubled_relators(m.presentation());
    for w in m.element_words().iter().skip(1) {
        let c = Word::commutator(&in_x(w, rank), &in_y(w, rank)).expect("same alphabet");
        relators.push(c);
    }
    Presentation::new(&doubled_names(rank), relators).expect("generated names are valid")
}

fn construction(what: &str) -> Error {
    Error::Construction(what.to_string())
}

/// Builds `χ(H)` and everything derived from it.
pub fn build_chi(m: &Arc<FiniteGroupModel>, limits: Limits) -> Result<ChiContext, Error> {
    let rank = m.rank();
    let presentation = chi_presentation(m);
    let table = enumerate(&presentation, &[], limits)?;
    let group = regular_representation(&table)?;
    let gens = group.generators().to_vec();
    let copies = Copies::new(m, &gens);

    let psi = swap_permutation(&gens).ok_or_else(|| construction("the swap is not an automorphism"))?;
    for i in 0..rank {
        if gens[i].conjugate(&psi) != gens[rank + i] {
            return Err(construction("conjugation by the swap permutation is not the swap"));
        }
    }

    let hx = group.subgroup(gens[..rank].to_vec())?;
    let hy = group.subgroup(gens[rank..].to_vec())?;
    let seeds: Vec<Permutation> = (0..rank)
        .map(|i| gens[i].inverse().mul(&gens[rank + i]))
        .collect();
    let l = group.normal_closure(&seeds)?;
    let d = group.commutator_subgroup(&hx, &hy)?;
    let w = group.intersection(&l, &d)?;
    let dl = group.join(&d, &l)?;
    let l_derived = l.derived_subgroup();
    let l_derived_w = group.intersection(&l_derived, &w)?;

    let h = m.group();
    let n = h.degree();
    let hgens = h.generators().to_vec();
    let rho_h = group.homomorphism(h, hgens.iter().chain(&hgens).cloned().collect())?;

    let h_squared = PermGroup::direct_product(&[h, h])?;
    let images = hgens
        .iter()
        .map(|a| a.embed(2 * n, 0))
        .chain(hgens.iter().map(|a| a.embed(2 * n, n)))
        .collect();
    let rho_hxh = group.homomorphism(&h_squared, images)?;

    let h_cubed = PermGroup::direct_product(&[h, h, h])?;
    let diag = |a: &Permutation, first: usize| a.embed(3 * n, first).mul(&a.embed(3 * n, first + n));
    let images = hgens
        .iter()
        .map(|a| diag(a, 0))
        .chain(hgens.iter().map(|a| diag(a, n)))
        .collect();
    let rho_t = group.homomorphism(&h_cubed, images)?;
    let t_gens = (0..m.order())
        .flat_map(|i| {
            let e = m.element(i);
            [diag(&e, 0), diag(&e, n)]
        })
        .collect();
    let t_direct = h_cubed.subgroup(t_gens)?;

    if !rho_h.kernel().same_group(&l) {
        return Err(construction("kernel of the map onto H differs from L"));
    }
    if !rho_hxh.kernel().same_group(&d) {
        return Err(construction("kernel of the map onto H x H differs from D"));
    }
    if !rho_t.kernel().same_group(&w) {
        return Err(construction("kernel of the map onto T(H) differs from W"));
    }

    Ok(ChiContext {
        model: Arc::clone(m),
        presentation,
        group,
        psi,
        copies,
        hx,
        hy,
        l,
        d,
        w,
        dl,
        l_derived,
        l_derived_w,
        rho_h,
        rho_hxh,
        rho_t,
        h_squared,
        t_direct,
    })
}

impl ChiContext {
    pub fn model(&self) -> &FiniteGroupModel {
        &self.model
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    /// `χ(H)` acting regularly on itself.
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    /// The permutation whose conjugation action is `ψ`.
    pub fn psi(&self) -> &Permutation {
        &self.psi
    }

    /// `ψ` as images of the generators `x₁…xₙ, y₁…yₙ`.
    pub fn psi_images(&self) -> Vec<Permutation> {
        self.group.generators().iter().map(|g| g.conjugate(&self.psi)).collect()
    }

    pub fn apply_psi(&self, g: &Permutation) -> Permutation {
        g.conjugate(&self.psi)
    }

    pub fn psi_subgroup(&self, s: &PermGroup) -> PermGroup {
        s.conjugate_by(&self.psi)
    }

    /// Element `h` of the first copy of `H`.
    pub fn x_element(&self, h: usize) -> &Permutation {
        &self.copies.x[h]
    }

    /// Element `h` of the second copy of `H`.
    pub fn y_element(&self, h: usize) -> &Permutation {
        &self.copies.y[h]
    }

    /// `[h₁, h₂^ψ]^{h₃} · [h₁^{h₃}, (h₂^{h₃})^ψ]⁻¹`
    pub fn defect(&self, h1: usize, h2: usize, h3: usize) -> Permutation {
        self.copies.defect(&self.model, h1, h2, h3)
    }

    /// The first copy `H = ⟨x⟩`.
    pub fn h(&self) -> &PermGroup {
        &self.hx
    }

    /// The second copy `H^ψ = ⟨y⟩`.
    pub fn h_psi(&self) -> &PermGroup {
        &self.hy
    }

    /// `L = ⟨xᵢ⁻¹yᵢ⟩^χ`
    pub fn l(&self) -> &PermGroup {
        &self.l
    }

    /// `D = [H, H^ψ]`
    pub fn d(&self) -> &PermGroup {
        &self.d
    }

    /// `W = L ∩ D`
    pub fn w(&self) -> &PermGroup {
        &self.w
    }

    pub fn dl(&self) -> &PermGroup {
        &self.dl
    }

    pub fn l_derived(&self) -> &PermGroup {
        &self.l_derived
    }

    pub fn l_derived_cap_w(&self) -> &PermGroup {
        &self.l_derived_w
    }

    /// `χ → H` sending both copies to `H`; its kernel is `L`.
    pub fn rho_h(&self) -> &Homomorphism {
        &self.rho_h
    }

    /// `χ → H × H`; its kernel is `D`.
    pub fn rho_hxh(&self) -> &Homomorphism {
        &self.rho_hxh
    }

    /// `χ → H³` with `x ↦ (h, h, 1)`, `y ↦ (1, h, h)`; its kernel is `W`.
    pub fn rho_t(&self) -> &Homomorphism {
        &self.rho_t
    }

    pub fn h_squared(&self) -> &PermGroup {
        &self.h_squared
    }

    /// `T(H) = ⟨(h, h, 1), (1, h, h) : h ∈ H⟩ ≤ H³`, built from all elements.
    pub fn t_direct(&self) -> &PermGroup {
        &self.t_direct
    }
}

/// `R(H)` from generator triples, conjugated by the given `H′`-transversal.
///
/// The result is checked to be normal in `χ` and `ψ`-invariant.
pub fn build_r_with_transversal(c: &ChiContext, transversal: &[usize]) -> Result<PermGroup, Error> {
    let m = &c.model;
    let gens: Vec<usize> = (0..m.rank()).map(|g| m.generator_element(g)).collect();
    let mut seeds = Vec::new();
    let mut seen = HashSet::new();
    for &i in &gens {
        for &j in &gens {
            for &k in &gens {
                let d = c.defect(i, j, k);
                for &t in transversal {
                    let e = d.conjugate(c.x_element(t));
                    if !e.is_identity() && seen.insert(e.clone()) {
                        seeds.push(e);
                    }
                }
            }
        }
    }
    let r = c.group.subgroup(seeds)?;
    if !r.is_normal_in(&c.group) {
        return Err(construction("R is not normal"));
    }
    if !c.psi_subgroup(&r).same_group(&r) {
        return Err(construction("R is not invariant under the swap"));
    }
    Ok(r)
}

/// `R(H)` with the shortlex transversal of `H′`.
pub fn build_r(c: &ChiContext) -> Result<PermGroup, Error> {
    build_r_with_transversal(c, c.model.transversal())
}

/// The normal closure in `χ` of the defects of all element triples.
pub fn build_r_oracle(c: &ChiContext) -> Result<PermGroup, Error> {
    let n = c.model.order();
    if triple_count(n) > TRIPLE_BUDGET {
        return Err(Error::Budget {
            what: "element triples",
            needed: triple_count(n),
            budget: TRIPLE_BUDGET,
        });
    }
    let mut seen = HashSet::new();
    let mut seeds = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let d = c.defect(i, j, k);
                if !d.is_identity() && seen.insert(d.clone()) {
                    seeds.push(d);
                }
            }
        }
    }
    Ok(c.group.normal_closure(&seeds)?)
}

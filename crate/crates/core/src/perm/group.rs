use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use num_bigint::BigInt;

use super::chain::StabChain;
use super::{PermError, Permutation, ELEMENT_THRESHOLD};
use crate::words::Presentation;
use crate::zlin::{self, IntMatrix, InvariantFactors};

/// A permutation group with a stabilizer-chain certificate.
///
/// Subgroups are `PermGroup`s on the same domain; the operations that take
/// subgroups check containment in `self`.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    semiregular: bool,
    presentation: Option<Arc<Presentation>>,
}

impl PermGroup {
    /// Builds the group generated by `gens` on `degree` points.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self, PermError> {
        check_domain(degree, &gens)?;
        let chain = StabChain::schreier_sims(degree, &gens);
        chain.order().ok_or(PermError::OrderOverflow)?;
        Ok(PermGroup {
            degree,
            generators: gens,
            chain,
            semiregular: false,
            presentation: None,
        })
    }

    /// A group known to act regularly on its orbit of the first point,
    /// such as the action of a finitely presented group on its own cosets.
    pub(crate) fn from_regular_action(
        degree: usize,
        gens: Vec<Permutation>,
        presentation: Option<Presentation>,
    ) -> Self {
        PermGroup {
            degree,
            chain: StabChain::semiregular(degree, &gens),
            generators: gens,
            semiregular: true,
            presentation: presentation.map(Arc::new),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: StabChain::trivial(),
            semiregular: true,
            presentation: None,
        }
    }

    /// Attaches a defining presentation whose generators correspond to
    /// this group's generators; it is checked against the generators.
    pub fn with_presentation(mut self, p: Presentation) -> Result<Self, PermError> {
        if p.rank() != self.generators.len() {
            return Err(PermError::GeneratorCount {
                expected: self.generators.len(),
                found: p.rank(),
            });
        }
        for (index, r) in p.relators().iter().enumerate() {
            if !self.evaluate(r.letters()).is_identity() {
                return Err(PermError::RelatorNotRespected {
                    index,
                    relator: p.display_word(r),
                });
            }
        }
        self.presentation = Some(Arc::new(p));
        Ok(self)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn presentation(&self) -> Option<&Presentation> {
        self.presentation.as_deref()
    }

    pub fn is_semiregular(&self) -> bool {
        self.semiregular
    }

    pub fn order(&self) -> u128 {
        self.chain.order().expect("order checked at construction")
    }

    pub fn is_trivial(&self) -> bool {
        self.chain.levels.is_empty()
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.base()
    }

    /// Fundamental orbit lengths of the chain.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    /// Product of generators (and inverses) along a letter sequence.
    pub fn evaluate(&self, letters: &[crate::words::Letter]) -> Permutation {
        letters.iter().fold(self.identity(), |acc, l| {
            let g = &self.generators[l.generator];
            if l.inverse {
                acc.mul(&g.inverse())
            } else {
                acc.mul(g)
            }
        })
    }

    /// Checks that the chain certifies the group: every Schreier generator
    /// at every level sifts to the identity, and every generator is a member.
    pub fn verify_chain(&self) -> bool {
        let full = StabChain::schreier_sims(self.degree, &self.generators);
        full.order() == self.chain.order() && self.generators.iter().all(|g| self.chain.contains(g))
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool, PermError> {
        if g.degree() != self.degree {
            return Err(PermError::DomainMismatch {
                expected: self.degree,
                found: g.degree(),
            });
        }
        Ok(self.chain.contains(g))
    }

    /// Membership for an element already known to lie in a semiregular
    /// group containing `self`: then `g ∈ self` iff it maps the base point
    /// into the base orbit.
    fn contains_within_semiregular(&self, g: &Permutation) -> bool {
        match self.chain.levels.first() {
            None => g.is_identity(),
            Some(level) => level.contains(g.image(level.base)),
        }
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.chain.contains(g))
    }

    /// Equality as subsets of the symmetric group.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub fn is_normal_in(&self, parent: &PermGroup) -> bool {
        parent.generators.iter().all(|t| {
            self.generators
                .iter()
                .all(|g| self.chain.contains(&g.conjugate(t)))
        })
    }

    fn check_members(&self, gens: &[Permutation]) -> Result<(), PermError> {
        check_domain(self.degree, gens)?;
        if gens.iter().all(|g| self.chain.contains(g)) {
            Ok(())
        } else {
            Err(PermError::NotAMember)
        }
    }

    /// The subgroup generated by `gens`, which must lie in `self`.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermGroup, PermError> {
        self.check_members(&gens)?;
        Ok(self.child(gens))
    }

    /// Subgroup of `self` without membership checks.
    fn child(&self, gens: Vec<Permutation>) -> PermGroup {
        let gens: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let chain = if self.semiregular {
            StabChain::semiregular(self.degree, &gens)
        } else {
            StabChain::schreier_sims(self.degree, &gens)
        };
        PermGroup {
            degree: self.degree,
            generators: gens,
            chain,
            semiregular: self.semiregular,
            presentation: None,
        }
    }

    /// Subgroup generated by two subgroups of `self`.
    pub fn join(&self, a: &PermGroup, b: &PermGroup) -> Result<PermGroup, PermError> {
        let gens: Vec<Permutation> = a.generators.iter().chain(&b.generators).cloned().collect();
        self.subgroup(gens)
    }

    /// Image of the group under conjugation by `t` in the symmetric group.
    pub fn conjugate_by(&self, t: &Permutation) -> PermGroup {
        let gens = self.generators.iter().map(|g| g.conjugate(t)).collect();
        let mut g = self.child(gens);
        g.semiregular = self.semiregular;
        g
    }

    /// The smallest normal subgroup of `self` containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<PermGroup, PermError> {
        self.check_members(seeds)?;
        let mut n = self.child(seeds.to_vec());
        let mut queue: Vec<Permutation> = n.generators.clone();
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i].clone();
            i += 1;
            for t in &self.generators {
                let c = x.conjugate(t);
                let member = if self.semiregular {
                    n.contains_within_semiregular(&c)
                } else {
                    n.chain.contains(&c)
                };
                if !member {
                    let mut gens = n.generators.clone();
                    gens.push(c.clone());
                    n = self.child(gens);
                    queue.push(c);
                }
            }
        }
        Ok(n)
    }

    /// `[A, B]`: the normal closure in `⟨A, B⟩` of the generator commutators.
    pub fn commutator_subgroup(&self, a: &PermGroup, b: &PermGroup) -> Result<PermGroup, PermError> {
        for h in [a, b] {
            if h.degree != self.degree {
                return Err(PermError::DomainMismatch {
                    expected: self.degree,
                    found: h.degree,
                });
            }
            self.check_members(&h.generators)?;
        }
        let ambient = self.join(a, b)?;
        let mut seeds = Vec::new();
        for x in &a.generators {
            for y in &b.generators {
                let c = Permutation::commutator(x, y);
                if !c.is_identity() {
                    seeds.push(c);
                }
            }
        }
        ambient.normal_closure(&seeds)
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        self.commutator_subgroup(self, self)
            .expect("a group is a subgroup of itself")
    }

    /// `γ₁ = G, γᵢ₊₁ = [γᵢ, G]`, stopping at the first repeated term; later
    /// terms all equal the last entry.
    pub fn lower_central_series(&self) -> Vec<PermGroup> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self
                .commutator_subgroup(last, self)
                .expect("series terms are subgroups");
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    /// Nilpotency class, if the lower central series reaches the identity.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.lower_central_series();
        series
            .last()
            .filter(|g| g.is_trivial())
            .map(|_| series.len() - 1)
    }

    /// All elements, in breadth-first order from the identity.
    pub fn elements(&self) -> Result<Vec<Permutation>, PermError> {
        let order = self.order();
        if order > ELEMENT_THRESHOLD as u128 {
            return Err(PermError::ThresholdExceeded {
                size: order,
                threshold: ELEMENT_THRESHOLD,
            });
        }
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut out = vec![self.identity()];
        seen.insert(self.identity());
        let mut k = 0;
        while k < out.len() {
            let x = out[k].clone();
            k += 1;
            for g in &self.generators {
                let y = x.mul(g);
                if seen.insert(y.clone()) {
                    out.push(y);
                }
            }
        }
        Ok(out)
    }

    /// Points of the base orbit, which for a semiregular group are in
    /// bijection with its elements.
    fn base_orbit(&self) -> Vec<u32> {
        match self.chain.levels.first() {
            Some(l) => l.orbit.clone(),
            None => vec![0],
        }
    }

    /// Element of a semiregular group mapping the base point to `p`.
    fn element_at(&self, p: usize) -> Permutation {
        match self.chain.levels.first() {
            Some(l) => l.transversal(p),
            None => self.identity(),
        }
    }

    /// Subgroup of a semiregular `self` whose elements are the ones mapping
    /// the base point into `points`. The caller guarantees that the points
    /// form a subgroup.
    fn subgroup_from_points(&self, points: &[u32]) -> PermGroup {
        debug_assert!(self.semiregular);
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = self.child(Vec::new());
        for &p in points {
            if !current.contains_within_semiregular_point(p as usize) {
                gens.push(self.element_at(p as usize));
                current = self.child(gens.clone());
            }
        }
        current
    }

    fn contains_within_semiregular_point(&self, p: usize) -> bool {
        match self.chain.levels.first() {
            None => p == 0,
            Some(level) => level.contains(p),
        }
    }

    /// Subgroup of `self` from an explicit list of its elements, generated
    /// greedily in list order.
    fn subgroup_from_elements(&self, elements: &[Permutation]) -> PermGroup {
        let mut current = self.child(Vec::new());
        for e in elements {
            if !current.chain.contains(e) {
                let mut gens = current.generators.clone();
                gens.push(e.clone());
                current = self.child(gens);
            }
        }
        current
    }

    pub fn intersection(&self, a: &PermGroup, b: &PermGroup) -> Result<PermGroup, PermError> {
        self.check_members(&a.generators)?;
        self.check_members(&b.generators)?;
        if self.semiregular {
            let in_b: HashSet<u32> = b.base_orbit().into_iter().collect();
            let mut pts: Vec<u32> = a.base_orbit().into_iter().filter(|p| in_b.contains(p)).collect();
            pts.sort_unstable();
            return Ok(self.subgroup_from_points(&pts));
        }
        let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
        let common: Vec<Permutation> = small
            .elements()?
            .into_iter()
            .filter(|e| large.chain.contains(e))
            .collect();
        Ok(self.subgroup_from_elements(&common))
    }

    pub fn center(&self) -> Result<PermGroup, PermError> {
        let order = self.order();
        if order > ELEMENT_THRESHOLD as u128 {
            return Err(PermError::ThresholdExceeded {
                size: order,
                threshold: ELEMENT_THRESHOLD,
            });
        }
        if self.semiregular {
            let Some(level) = self.chain.levels.first() else {
                return Ok(self.clone());
            };
            let base = level.base;
            let mut pts: Vec<u32> = level
                .orbit
                .iter()
                .copied()
                .filter(|&p| {
                    self.generators.iter().all(|s| {
                        // base^(z s) versus base^(s z)
                        s.image(p as usize) == level.trace_transversal(p as usize, s.image(base))
                    })
                })
                .collect();
            pts.sort_unstable();
            return Ok(self.subgroup_from_points(&pts));
        }
        let central: Vec<Permutation> = self
            .elements()?
            .into_iter()
            .filter(|z| self.generators.iter().all(|s| z.mul(s) == s.mul(z)))
            .collect();
        Ok(self.subgroup_from_elements(&central))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..].iter().all(|b| a.mul(b) == b.mul(a))
        })
    }

    /// `G/N` acting regularly on the cosets of `N`.
    pub fn quotient(&self, n: &PermGroup) -> Result<Quotient, PermError> {
        self.check_members(&n.generators)?;
        if !n.is_normal_in(self) {
            return Err(PermError::NotNormal);
        }
        if self.semiregular {
            return Ok(Quotient::from_semiregular(self, n, None));
        }
        let model = Regularization::new(self)?;
        let n_model = model.group.child(n.generators.iter().map(|g| model.map(g)).collect());
        let reg = model.group.clone();
        Ok(Quotient::from_semiregular(&reg, &n_model, Some(Box::new(model))))
    }

    /// Invariant factors of `G/[G,G]`, from the Schreier relations of the
    /// abelianization's regular action on the images of `G`'s generators.
    pub fn abelian_invariants(&self) -> InvariantFactors {
        let k = self.generators.len();
        if k == 0 {
            return InvariantFactors::trivial();
        }
        let derived = self.derived_subgroup();
        let q = self.quotient(&derived).expect("derived subgroup is normal");
        let qgens = q.group.generators().to_vec();
        // q.group keeps one image per generator of self, identities included
        debug_assert_eq!(qgens.len(), k);
        let n = q.group.degree();
        let mut coords: Vec<Option<Vec<i64>>> = vec![None; n];
        coords[0] = Some(vec![0; k]);
        let mut order = vec![0usize];
        let mut i = 0;
        while i < order.len() {
            let p = order[i];
            i += 1;
            for (x, g) in qgens.iter().enumerate() {
                let r = g.image(p);
                if coords[r].is_none() {
                    let mut v = coords[p].clone().expect("visited");
                    v[x] += 1;
                    coords[r] = Some(v);
                    order.push(r);
                }
            }
        }
        let mut rows: HashSet<Vec<i64>> = HashSet::new();
        for p in 0..n {
            let vp = coords[p].as_ref().expect("transitive quotient");
            for (x, g) in qgens.iter().enumerate() {
                let vq = coords[g.image(p)].as_ref().expect("transitive quotient");
                let mut row = vp.clone();
                row[x] += 1;
                for (r, q) in row.iter_mut().zip(vq) {
                    *r -= q;
                }
                if row.iter().any(|&e| e != 0) {
                    rows.insert(row);
                }
            }
        }
        let mut rows: Vec<Vec<i64>> = rows.into_iter().collect();
        rows.sort();
        let m = IntMatrix::from_rows(
            k,
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
        .expect("rows have k columns");
        zlin::invariants_from_relations(k, &m).expect("dimensions agree")
    }

    /// Direct product of copies of permutation groups on disjoint point sets.
    pub fn direct_product(factors: &[&PermGroup]) -> Result<PermGroup, PermError> {
        let degree: usize = factors.iter().map(|g| g.degree).sum();
        let mut gens = Vec::new();
        let mut offset = 0;
        for g in factors {
            gens.extend(g.generators.iter().map(|x| x.embed(degree, offset)));
            offset += g.degree;
        }
        PermGroup::new(degree, gens)
    }

    pub(crate) fn regularization(&self) -> Result<Option<Regularization>, PermError> {
        if self.semiregular {
            Ok(None)
        } else {
            Regularization::new(self).map(Some)
        }
    }

    pub(crate) fn semiregular_orbit(&self) -> Vec<u32> {
        debug_assert!(self.semiregular);
        self.base_orbit()
    }

    pub(crate) fn child_from_points(&self, points: &[u32]) -> PermGroup {
        self.subgroup_from_points(points)
    }

    pub(crate) fn base_point(&self) -> usize {
        self.chain.levels.first().map(|l| l.base).unwrap_or(0)
    }
}

fn check_domain(degree: usize, gens: &[Permutation]) -> Result<(), PermError> {
    match gens.iter().find(|g| g.degree() != degree) {
        Some(g) => Err(PermError::DomainMismatch {
            expected: degree,
            found: g.degree(),
        }),
        None => Ok(()),
    }
}

/// The right regular representation of a small group, with the map from
/// its original permutations.
#[derive(Clone, Debug)]
pub(crate) struct Regularization {
    pub elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    pub group: PermGroup,
}

impl Regularization {
    fn new(g: &PermGroup) -> Result<Self, PermError> {
        let elements = g.elements()?;
        let index: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        let mut reg = Regularization {
            elements,
            index,
            group: PermGroup::trivial(0),
        };
        let gens = g.generators.iter().map(|s| reg.map(s)).collect();
        reg.group = PermGroup::from_regular_action(reg.elements.len(), gens, None);
        Ok(reg)
    }

    /// Right multiplication by `x` on the element list.
    pub fn map(&self, x: &Permutation) -> Permutation {
        let images = self
            .elements
            .iter()
            .map(|e| self.index[&e.mul(x)])
            .collect();
        Permutation::from_images_unchecked(images)
    }
}

/// A quotient `G/N` with its natural epimorphism.
#[derive(Clone, Debug)]
pub struct Quotient {
    group: PermGroup,
    block_of: Vec<u32>,
    reps: Vec<u32>,
    model: Option<Box<Regularization>>,
}

impl Quotient {
    fn from_semiregular(g: &PermGroup, n: &PermGroup, model: Option<Box<Regularization>>) -> Self {
        const NONE: u32 = u32::MAX;
        let orbit = g.base_orbit();
        let mut block_of = vec![NONE; g.degree];
        let mut reps = Vec::new();
        for &p in &orbit {
            if block_of[p as usize] != NONE {
                continue;
            }
            let b = reps.len() as u32;
            reps.push(p);
            block_of[p as usize] = b;
            let mut stack = vec![p];
            while let Some(q) = stack.pop() {
                for s in &n.generators {
                    let r = s.image(q as usize);
                    if block_of[r] == NONE {
                        block_of[r] = b;
                        stack.push(r as u32);
                    }
                }
            }
        }
        let act = |x: &Permutation| {
            Permutation::from_images_unchecked(
                reps.iter().map(|&r| block_of[x.image(r as usize)]).collect(),
            )
        };
        let gens = g.generators.iter().map(act).collect();
        let group = PermGroup::from_regular_action(reps.len(), gens, None);
        Quotient {
            group,
            block_of,
            reps,
            model,
        }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn into_group(self) -> PermGroup {
        self.group
    }

    /// Image of an element of `G` in `G/N`.
    pub fn image(&self, x: &Permutation) -> Permutation {
        let mapped;
        let x = match &self.model {
            Some(m) => {
                mapped = m.map(x);
                &mapped
            }
            None => x,
        };
        Permutation::from_images_unchecked(
            self.reps
                .iter()
                .map(|&r| self.block_of[x.image(r as usize)])
                .collect(),
        )
    }
}

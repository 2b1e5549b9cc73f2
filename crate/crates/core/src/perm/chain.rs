//! Stabilizer chains with Schreier-vector transversals.

use super::Permutation;

const NONE: u32 = u32::MAX;

/// One level of a stabilizer chain: the orbit of `base` under the strong
/// generators that fix all earlier base points.
#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    pub gens: Vec<Permutation>,
    inv_gens: Vec<Permutation>,
    /// Orbit in breadth-first discovery order; `orbit[0] == base`.
    pub orbit: Vec<u32>,
    /// `edge[p]` is the index of the generator that first reached `p`.
    edge: Vec<u32>,
}

impl Level {
    fn new(degree: usize, base: usize, gens: Vec<Permutation>) -> Self {
        let inv_gens = gens.iter().map(Permutation::inverse).collect();
        let mut level = Level {
            base,
            gens,
            inv_gens,
            orbit: Vec::new(),
            edge: vec![NONE; degree],
        };
        level.rebuild_orbit();
        level
    }

    fn push_generator(&mut self, g: Permutation) {
        self.inv_gens.push(g.inverse());
        self.gens.push(g);
        self.rebuild_orbit();
    }

    fn rebuild_orbit(&mut self) {
        self.edge.iter_mut().for_each(|e| *e = NONE);
        self.orbit.clear();
        self.orbit.push(self.base as u32);
        // the base point is marked with a sentinel generator index
        self.edge[self.base] = u32::MAX - 1;
        let mut k = 0;
        while k < self.orbit.len() {
            let p = self.orbit[k] as usize;
            k += 1;
            for (x, g) in self.gens.iter().enumerate() {
                let q = g.image(p);
                if self.edge[q] == NONE {
                    self.edge[q] = x as u32;
                    self.orbit.push(q as u32);
                }
            }
        }
    }

    #[inline]
    pub fn contains(&self, p: usize) -> bool {
        self.edge[p] != NONE
    }

    /// Generator indices along the tree path from the base to `p`.
    pub fn path(&self, mut p: usize) -> Vec<usize> {
        let mut path = Vec::new();
        while p != self.base {
            let x = self.edge[p] as usize;
            path.push(x);
            p = self.inv_gens[x].image(p);
        }
        path.reverse();
        path
    }

    /// The transversal element mapping the base to `p`.
    pub fn transversal(&self, p: usize) -> Permutation {
        let degree = self.edge.len();
        self.path(p)
            .into_iter()
            .fold(Permutation::identity(degree), |acc, x| acc.mul(&self.gens[x]))
    }

    /// Image of point `q` under the transversal element for `p`.
    pub fn trace_transversal(&self, p: usize, q: usize) -> usize {
        self.path(p)
            .into_iter()
            .fold(q, |q, x| self.gens[x].image(q))
    }

    /// `g · u_p⁻¹` where `p = base^g`.
    fn strip(&self, mut g: Permutation) -> Option<Permutation> {
        let mut p = g.image(self.base);
        if !self.contains(p) {
            return None;
        }
        while p != self.base {
            let x = self.edge[p] as usize;
            g = g.mul(&self.inv_gens[x]);
            p = self.inv_gens[x].image(p);
        }
        Some(g)
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    pub levels: Vec<Level>,
}

impl StabChain {
    pub fn trivial() -> Self {
        StabChain {
            levels: Vec::new(),
        }
    }

    /// A one-level chain for a group known to act semiregularly: the
    /// stabilizer of any point is trivial, so the orbit of the smallest
    /// moved point certifies the order.
    pub fn semiregular(degree: usize, gens: &[Permutation]) -> Self {
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        match gens.iter().filter_map(Permutation::first_moved).min() {
            None => StabChain::trivial(),
            Some(base) => StabChain {
                levels: vec![Level::new(degree, base, gens)],
            },
        }
    }

    /// Deterministic Schreier–Sims; base points are chosen as the smallest
    /// point moved by the element that needs a new level.
    pub fn schreier_sims(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = StabChain::trivial();
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            return chain;
        }
        // initial base: every generator must move some base point
        let mut base: Vec<usize> = Vec::new();
        for g in &gens {
            if base.iter().all(|&b| g.image(b) == b) {
                base.push(g.first_moved().expect("non-identity"));
            }
        }
        for (i, &b) in base.iter().enumerate() {
            let level_gens = gens
                .iter()
                .filter(|g| base[..i].iter().all(|&c| g.image(c) == c))
                .cloned()
                .collect();
            chain.levels.push(Level::new(degree, b, level_gens));
        }

        let mut i = chain.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let lvl = i as usize;
            let orbit = chain.levels[lvl].orbit.clone();
            let ngens = chain.levels[lvl].gens.len();
            for &beta in &orbit {
                let u_beta = chain.levels[lvl].transversal(beta as usize);
                for x in 0..ngens {
                    let s = &chain.levels[lvl].gens[x];
                    let img = s.image(beta as usize);
                    let u_img = chain.levels[lvl].transversal(img);
                    let h = u_beta.mul(s).mul(&u_img.inverse());
                    if h.is_identity() {
                        continue;
                    }
                    let (y, j) = chain.sift_from(h, lvl + 1);
                    if j < chain.levels.len() || !y.is_identity() {
                        if j == chain.levels.len() {
                            let b = y.first_moved().expect("non-identity residue");
                            chain.levels.push(Level::new(degree, b, Vec::new()));
                        }
                        for l in lvl + 1..=j {
                            chain.levels[l].push_generator(y.clone());
                        }
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
        chain
    }

    /// Sifts `g` starting at level `start`; returns the residue and the
    /// level at which sifting stopped (`levels.len()` if it passed all).
    pub fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            match level.strip(g.clone()) {
                Some(h) => g = h,
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (residue, level) = self.sift_from(g.clone(), 0);
        level == self.levels.len() && residue.is_identity()
    }

    /// Product of fundamental orbit lengths, `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        self.levels
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }
}

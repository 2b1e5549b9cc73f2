use super::group::Regularization;
use super::{PermError, PermGroup, Permutation};

/// A homomorphism given by generator images, with its image and kernel.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    images: Vec<Permutation>,
    image: PermGroup,
    kernel: PermGroup,
    model: Option<Regularization>,
    /// Image of the element at each point of the (model's) base orbit.
    point_image: Vec<u32>,
    slot: Vec<u32>,
    target_degree: usize,
    base: usize,
}

impl Homomorphism {
    pub fn generator_images(&self) -> &[Permutation] {
        &self.images
    }

    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    pub fn kernel(&self) -> &PermGroup {
        &self.kernel
    }

    /// Image of an element of the source group.
    pub fn apply(&self, x: &Permutation) -> Permutation {
        let p = match &self.model {
            Some(m) => m.map(x).image(0),
            None => x.image(self.base),
        };
        let s = self.slot[p] as usize;
        let d = self.target_degree;
        Permutation::from_images_unchecked(self.point_image[s * d..(s + 1) * d].to_vec())
    }

    /// Image of a subgroup of the source.
    pub fn map_subgroup(&self, h: &PermGroup) -> PermGroup {
        let gens = h.generators().iter().map(|g| self.apply(g)).collect();
        self.image.subgroup(gens).expect("images lie in the image group")
    }
}

impl PermGroup {
    /// The homomorphism sending the `i`-th generator to `images[i]` in
    /// `target`.
    ///
    /// When the group carries a defining presentation every relator is
    /// checked first; independently, the assignment is propagated along the
    /// Cayley graph and rejected if it is inconsistent.
    pub fn homomorphism(
        &self,
        target: &PermGroup,
        images: Vec<Permutation>,
    ) -> Result<Homomorphism, PermError> {
        if images.len() != self.generators().len() {
            return Err(PermError::GeneratorCount {
                expected: self.generators().len(),
                found: images.len(),
            });
        }
        let image = target.subgroup(images.clone())?;
        let td = target.degree();
        let image_of_letters = |letters: &[crate::words::Letter]| {
            letters.iter().fold(Permutation::identity(td), |acc, l| {
                let g = &images[l.generator];
                if l.inverse {
                    acc.mul(&g.inverse())
                } else {
                    acc.mul(g)
                }
            })
        };
        if let Some(p) = self.presentation() {
            for (index, r) in p.relators().iter().enumerate() {
                if !image_of_letters(r.letters()).is_identity() {
                    return Err(PermError::RelatorNotRespected {
                        index,
                        relator: p.display_word(r),
                    });
                }
            }
        }

        let model = self.regularization()?;
        let source = model.as_ref().map(|m| &m.group).unwrap_or(self);
        let base = source.base_point();
        let orbit = source.semiregular_orbit();
        const NONE: u32 = u32::MAX;
        let mut slot = vec![NONE; source.degree()];
        for (s, &p) in orbit.iter().enumerate() {
            slot[p as usize] = s as u32;
        }
        let mut point_image = vec![NONE; orbit.len() * td];
        point_image[..td].copy_from_slice(Permutation::identity(td).images());
        let mut visited = vec![false; orbit.len()];
        visited[slot[base] as usize] = true;
        let mut queue = vec![base as u32];
        let mut k = 0;
        while k < queue.len() {
            let p = queue[k] as usize;
            k += 1;
            let sp = slot[p] as usize;
            for (x, g) in source.generators().iter().enumerate() {
                let q = g.image(p);
                let sq = slot[q] as usize;
                let img = &images[x];
                if !visited[sq] {
                    visited[sq] = true;
                    for i in 0..td {
                        point_image[sq * td + i] = img.images()[point_image[sp * td + i] as usize];
                    }
                    queue.push(q as u32);
                } else {
                    let consistent = (0..td).all(|i| {
                        point_image[sq * td + i] == img.images()[point_image[sp * td + i] as usize]
                    });
                    if !consistent {
                        return Err(PermError::NotAHomomorphism);
                    }
                }
            }
        }

        let mut kernel_points: Vec<u32> = orbit
            .iter()
            .copied()
            .filter(|&p| {
                let s = slot[p as usize] as usize;
                (0..td).all(|i| point_image[s * td + i] == i as u32)
            })
            .collect();
        kernel_points.sort_unstable();
        let kernel_model = source.child_from_points(&kernel_points);
        let kernel = match &model {
            None => kernel_model,
            Some(m) => {
                let gens = kernel_model
                    .generators()
                    .iter()
                    .map(|g| m.elements[g.image(0)].clone())
                    .collect();
                self.subgroup(gens)?
            }
        };
        Ok(Homomorphism {
            images,
            image,
            kernel,
            model,
            point_image,
            slot,
            target_degree: td,
            base,
        })
    }
}

use std::fmt;

use super::PermError;

/// A permutation of `{0, …, n-1}`, acting on the right: `i^(pq) = (i^p)^q`.
///
/// The text form uses 1-based cycle notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(PermError::NotBijective);
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from 1-based disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > n || touched[p - 1] {
                    return Err(PermError::NotBijective);
                }
                touched[p - 1] = true;
                let q = cycle[(k + 1) % cycle.len()];
                if q == 0 || q > n {
                    return Err(PermError::NotBijective);
                }
                images[p - 1] = (q - 1) as u32;
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self` followed by `other`.
    pub fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut result = Permutation::identity(self.degree());
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&sq);
            }
            sq = sq.mul(&sq);
            k >>= 1;
        }
        result
    }

    /// `t⁻¹ · self · t`.
    pub fn conjugate(&self, t: &Permutation) -> Permutation {
        // (i^{t⁻¹})^{self t} = i maps t(j) ↦ t(self(j))
        let mut images = vec![0u32; self.images.len()];
        for (j, &sj) in self.images.iter().enumerate() {
            images[t.images[j] as usize] = t.images[sj as usize];
        }
        Permutation { images }
    }

    /// `[a, b] = a⁻¹b⁻¹ab`.
    pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }

    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut l: u64 = 1;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            l = num_integer::lcm(l, len);
        }
        l
    }

    /// Smallest point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &j)| *i as u32 != j)
            .map(|(i, _)| i)
    }

    /// Places `self` on the points `offset..offset+degree` of a larger domain.
    pub fn embed(&self, degree: usize, offset: usize) -> Permutation {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[offset + i] = (offset as u32) + j;
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut any = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            any = true;
            f.write_str("(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{}", p + 1)?;
                p = self.images[p] as usize;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

//! Concrete permutation models of the catalog groups, independent of coset
//! enumeration. Points are 0-based and permutations act on the right.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use weakcomm_core::words::Word;

pub type Perm = Vec<usize>;

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

/// Apply `p`, then `q`.
pub fn compose(p: &Perm, q: &Perm) -> Perm {
    p.iter().map(|&i| q[i]).collect()
}

pub fn invert(p: &Perm) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Builds a permutation of `n` points from 1-based cycles.
pub fn cycles(n: usize, cs: &[&[usize]]) -> Perm {
    let mut p = identity(n);
    for c in cs {
        for (k, &a) in c.iter().enumerate() {
            p[a - 1] = c[(k + 1) % c.len()] - 1;
        }
    }
    p
}

pub fn evaluate(w: &Word, gens: &[Perm]) -> Perm {
    let n = gens[0].len();
    w.letters().iter().fold(identity(n), |acc, l| {
        let g = &gens[l.generator];
        if l.inverse {
            compose(&acc, &invert(g))
        } else {
            compose(&acc, g)
        }
    })
}

/// All elements generated by `gens`, by breadth-first closure.
pub fn closure(gens: &[Perm]) -> Vec<Perm> {
    let n = gens[0].len();
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut queue = VecDeque::from([identity(n)]);
    seen.insert(identity(n));
    let mut out = Vec::new();
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = compose(&g, s);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
        out.push(g);
    }
    out
}

pub fn element_order(p: &Perm) -> usize {
    let id = identity(p.len());
    let mut q = p.clone();
    let mut k = 1;
    while q != id {
        q = compose(&q, p);
        k += 1;
    }
    k
}

/// Unitriangular 3×3 matrices over F_p acting on row vectors, indexed
/// `x + p·y + p²·z` for the vector `(x, y, z)`.
fn unitriangular(p: usize, upper_x: usize, upper_y: usize) -> Perm {
    let index = |x: usize, y: usize, z: usize| x + p * y + p * p * z;
    let mut perm = vec![0; p * p * p];
    for x in 0..p {
        for y in 0..p {
            for z in 0..p {
                // (x, y, z) · [[1, a, 0], [0, 1, b], [0, 0, 1]]
                let ny = (x * upper_x + y) % p;
                let nz = (y * upper_y + z) % p;
                perm[index(x, y, z)] = index(x, ny, nz);
            }
        }
    }
    perm
}

/// Generator images for a catalog key, in the order of the catalog
/// presentation's generators.
pub fn concrete_generators(key: &str) -> Option<Vec<Perm>> {
    let (family, param) = match key.split_once(':') {
        Some((f, p)) => (f, p.parse::<usize>().ok()?),
        None => (key, 0),
    };
    let gens = match (family, param) {
        ("triv", _) => vec![identity(1)],
        ("cyc", n) => {
            let c: Vec<usize> = (1..=n).collect();
            vec![cycles(n, &[&c])]
        }
        ("elem2", k) => (0..k)
            .map(|i| cycles(2 * k, &[&[2 * i + 1, 2 * i + 2]]))
            .collect(),
        ("c3xc3", _) => vec![cycles(6, &[&[1, 2, 3]]), cycles(6, &[&[4, 5, 6]])],
        ("c3xc9", _) => vec![
            cycles(12, &[&[1, 2, 3]]),
            cycles(12, &[&[4, 5, 6, 7, 8, 9, 10, 11, 12]]),
        ],
        ("s3", _) => vec![cycles(3, &[&[1, 2]]), cycles(3, &[&[1, 2, 3]])],
        ("d4", _) => vec![cycles(4, &[&[1, 2, 3, 4]]), cycles(4, &[&[1, 3]])],
        ("q8", _) => vec![
            cycles(8, &[&[1, 2, 3, 4], &[5, 6, 7, 8]]),
            cycles(8, &[&[1, 5, 3, 7], &[2, 8, 4, 6]]),
        ],
        ("dic3", _) => vec![cycles(7, &[&[1, 2, 3]]), cycles(7, &[&[2, 3], &[4, 5, 6, 7]])],
        ("heis", p) => vec![unitriangular(p, 1, 0), unitriangular(p, 0, 1)],
        _ => return None,
    };
    Some(gens)
}

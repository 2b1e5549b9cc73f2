//! HLT coset enumeration with union-find coincidence processing.
//!
//! Cosets are numbered from 0 internally (coset 0 is the subgroup coset);
//! the TSV dump and the public docs call it coset 1.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::time::Instant;

use thiserror::Error;

use crate::perm::{PermGroup, Permutation};
use crate::words::{Presentation, Word};

pub const DEFAULT_COSET_LIMIT: usize = 2_000_000;

const UNDEF: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("coset limit of {limit} definitions exceeded (infinite index or budget too small)")]
    LimitExceeded { limit: usize },
    #[error("wall-time budget exhausted after {defined} coset definitions")]
    TimeExceeded { defined: usize },
    #[error("subgroup word {index} is over {found} generators, presentation has {expected}")]
    InvalidSubgroupWord {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("coset limit must be at least 1")]
    ZeroLimit,
    #[error("coset table is not closed")]
    NotClosed,
    #[error("regular representation needs a table for the trivial subgroup")]
    NontrivialSubgroup,
}

/// Resource limits for one enumeration.
///
/// `max_cosets` bounds the total number of coset definitions, including
/// cosets later identified by coincidences.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_cosets: usize,
    pub deadline: Option<Instant>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_cosets: DEFAULT_COSET_LIMIT,
            deadline: None,
        }
    }
}

impl Limits {
    pub fn cosets(max_cosets: usize) -> Self {
        Limits {
            max_cosets,
            deadline: None,
        }
    }
}

/// A closed, consistent, standardized coset table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    presentation: Presentation,
    subgroup: Vec<Word>,
    cols: usize,
    rows: usize,
    table: Vec<u32>,
}

impl CosetTable {
    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn subgroup_generators(&self) -> &[Word] {
        &self.subgroup
    }

    /// Number of cosets, i.e. the index of the subgroup.
    pub fn len(&self) -> usize {
        self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }

    /// Image of coset `c` under column `col` (`2g` for `g`, `2g+1` for `g⁻¹`).
    pub fn entry(&self, c: usize, col: usize) -> usize {
        self.table[c * self.cols + col] as usize
    }

    /// Coset reached from `c` by reading `w` left to right.
    pub fn trace(&self, c: usize, w: &Word) -> usize {
        w.letters()
            .iter()
            .fold(c, |c, l| self.entry(c, l.column()))
    }

    /// Checks closure, consistency, relator traces and subgroup traces.
    pub fn verify(&self) -> bool {
        for c in 0..self.rows {
            for col in 0..self.cols {
                let d = self.table[c * self.cols + col];
                if d == UNDEF || d as usize >= self.rows {
                    return false;
                }
                if self.entry(d as usize, col ^ 1) != c {
                    return false;
                }
            }
            if self.presentation.relators().iter().any(|r| self.trace(c, r) != c) {
                return false;
            }
        }
        self.subgroup.iter().all(|w| self.trace(0, w) == 0)
    }

    /// Spanning-tree word for each coset: the shortlex-least word leading
    /// from coset 0, with letter order `a < a⁻¹ < b < …`.
    pub fn coset_words(&self) -> Vec<Word> {
        let rank = self.presentation.rank();
        let mut words: Vec<Option<Word>> = vec![None; self.rows];
        words[0] = Some(Word::identity(rank));
        // Standardization numbers cosets in breadth-first order, so a
        // single pass in index order visits parents before children.
        for c in 0..self.rows {
            let w = words[c].clone().expect("standardized table");
            for col in 0..self.cols {
                let d = self.entry(c, col);
                if words[d].is_none() {
                    let letter = Word::reduce(
                        rank,
                        [crate::words::Letter::new(col / 2, col % 2 == 1)],
                    )
                    .expect("valid column");
                    words[d] = Some(&w * &letter);
                }
            }
        }
        words.into_iter().map(|w| w.expect("connected table")).collect()
    }

    /// Permutation of the cosets induced by each generator.
    pub fn generator_permutations(&self) -> Vec<Permutation> {
        (0..self.presentation.rank())
            .map(|g| {
                let images = (0..self.rows).map(|c| self.entry(c, 2 * g) as u32).collect();
                Permutation::from_images_unchecked(images)
            })
            .collect()
    }

    /// Diagnostic dump: one row per coset (1-based), one column per signed generator.
    pub fn to_tsv(&self) -> String {
        let names = self.presentation.names();
        let mut out = String::from("coset");
        for n in &names {
            let _ = write!(out, "\t{n}\t{n}^-1");
        }
        out.push('\n');
        for c in 0..self.rows {
            let _ = write!(out, "{}", c + 1);
            for col in 0..self.cols {
                let _ = write!(out, "\t{}", self.entry(c, col) + 1);
            }
            out.push('\n');
        }
        out
    }
}

/// Enumerates the cosets of `⟨subgroup⟩` in the group presented by `p`.
pub fn enumerate(
    p: &Presentation,
    subgroup: &[Word],
    limits: Limits,
) -> Result<CosetTable, EnumerationError> {
    if limits.max_cosets == 0 {
        return Err(EnumerationError::ZeroLimit);
    }
    for (index, w) in subgroup.iter().enumerate() {
        if w.rank() != p.rank() {
            return Err(EnumerationError::InvalidSubgroupWord {
                index,
                expected: p.rank(),
                found: w.rank(),
            });
        }
    }
    let relators = scan_relators(p);
    let mut e = Enumerator::new(2 * p.rank(), limits);
    for w in subgroup {
        let cols: Vec<u32> = w.letters().iter().map(|l| l.column() as u32).collect();
        e.scan_and_fill(0, &cols)?;
    }
    let mut alpha = 0usize;
    while alpha < e.rows {
        if alpha.is_multiple_of(256) {
            e.check_deadline()?;
        }
        if e.is_live(alpha) {
            for r in &relators {
                e.scan_and_fill(alpha as u32, r)?;
                if !e.is_live(alpha) {
                    break;
                }
            }
            if e.is_live(alpha) {
                for col in 0..e.cols {
                    if e.get(alpha as u32, col) == UNDEF {
                        e.define(alpha as u32, col)?;
                    }
                }
            }
        }
        alpha += 1;
    }
    let (rows, table) = e.standardize();
    Ok(CosetTable {
        presentation: p.clone(),
        subgroup: subgroup.to_vec(),
        cols: 2 * p.rank(),
        rows,
        table,
    })
}

/// The permutation group given by right multiplication on the cosets of
/// the trivial subgroup. Its order equals the number of cosets.
pub fn regular_representation(t: &CosetTable) -> Result<PermGroup, EnumerationError> {
    if t.subgroup.iter().any(|w| !w.is_identity()) {
        return Err(EnumerationError::NontrivialSubgroup);
    }
    if !t.table.iter().all(|&d| d != UNDEF) {
        return Err(EnumerationError::NotClosed);
    }
    Ok(PermGroup::from_regular_action(
        t.rows,
        t.generator_permutations(),
        Some(t.presentation.clone()),
    ))
}

/// Cyclically reduced relators as column sequences, deduplicated up to
/// rotation and inversion, shortest first.
fn scan_relators(p: &Presentation) -> Vec<Vec<u32>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in p.relators() {
        let r = r.cyclically_reduced();
        if r.is_empty() {
            continue;
        }
        let fwd: Vec<u32> = r.letters().iter().map(|l| l.column() as u32).collect();
        let inv: Vec<u32> = r.inverse().letters().iter().map(|l| l.column() as u32).collect();
        let key = [&fwd, &inv]
            .iter()
            .flat_map(|v| (0..v.len()).map(move |i| [&v[i..], &v[..i]].concat()))
            .min()
            .expect("nonempty relator");
        if seen.insert(key) {
            out.push(fwd);
        }
    }
    out.sort_by_key(|r| r.len());
    out
}

struct Enumerator {
    cols: usize,
    rows: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    queue: Vec<u32>,
    limits: Limits,
}

impl Enumerator {
    fn new(cols: usize, limits: Limits) -> Self {
        Enumerator {
            cols,
            rows: 1,
            table: vec![UNDEF; cols],
            parent: vec![0],
            queue: Vec::new(),
            limits,
        }
    }

    fn check_deadline(&self) -> Result<(), EnumerationError> {
        match self.limits.deadline {
            Some(d) if Instant::now() > d => Err(EnumerationError::TimeExceeded {
                defined: self.rows,
            }),
            _ => Ok(()),
        }
    }

    #[inline]
    fn get(&self, c: u32, col: usize) -> u32 {
        self.table[c as usize * self.cols + col]
    }

    #[inline]
    fn set(&mut self, c: u32, col: usize, d: u32) {
        self.table[c as usize * self.cols + col] = d;
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] as usize == c
    }

    fn define(&mut self, c: u32, col: usize) -> Result<u32, EnumerationError> {
        if self.rows >= self.limits.max_cosets {
            return Err(EnumerationError::LimitExceeded {
                limit: self.limits.max_cosets,
            });
        }
        if self.rows.is_multiple_of(65536) {
            self.check_deadline()?;
        }
        let d = self.rows as u32;
        self.rows += 1;
        self.table.extend(std::iter::repeat_n(UNDEF, self.cols));
        self.parent.push(d);
        self.set(c, col, d);
        self.set(d, col ^ 1, c);
        Ok(d)
    }

    fn scan_and_fill(&mut self, alpha: u32, w: &[u32]) -> Result<(), EnumerationError> {
        if w.is_empty() {
            return Ok(());
        }
        let mut f = alpha;
        let mut b = alpha;
        let mut i = 0isize;
        let mut j = w.len() as isize - 1;
        loop {
            while i <= j {
                let next = self.get(f, w[i as usize] as usize);
                if next == UNDEF {
                    break;
                }
                f = next;
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i {
                let next = self.get(b, w[j as usize] as usize ^ 1);
                if next == UNDEF {
                    break;
                }
                b = next;
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let col = w[i as usize] as usize;
                self.set(f, col, b);
                self.set(b, col ^ 1, f);
                return Ok(());
            }
            self.define(f, w[i as usize] as usize)?;
        }
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = c;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn merge(&mut self, k: u32, l: u32) {
        let a = self.rep(k);
        let b = self.rep(l);
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi as usize] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for col in 0..self.cols {
                let d = self.get(g, col);
                if d == UNDEF {
                    continue;
                }
                self.set(d, col ^ 1, UNDEF);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mu_img = self.get(mu, col);
                if mu_img != UNDEF {
                    self.merge(nu, mu_img);
                    continue;
                }
                let nu_img = self.get(nu, col ^ 1);
                if nu_img != UNDEF {
                    self.merge(mu, nu_img);
                } else {
                    self.set(mu, col, nu);
                    self.set(nu, col ^ 1, mu);
                }
            }
        }
    }

    /// Renumbers live cosets in breadth-first order from coset 0.
    fn standardize(&mut self) -> (usize, Vec<u32>) {
        let mut new_index = vec![UNDEF; self.rows];
        let mut order = vec![0u32];
        new_index[0] = 0;
        let mut k = 0;
        while k < order.len() {
            let c = order[k];
            k += 1;
            for col in 0..self.cols {
                let d = self.get(c, col);
                debug_assert!(d != UNDEF, "closed table");
                let d = self.rep(d);
                if new_index[d as usize] == UNDEF {
                    new_index[d as usize] = order.len() as u32;
                    order.push(d);
                }
            }
        }
        let mut table = Vec::with_capacity(order.len() * self.cols);
        for &c in &order {
            for col in 0..self.cols {
                let d = self.get(c, col);
                let d = self.rep(d);
                table.push(new_index[d as usize]);
            }
        }
        (order.len(), table)
    }
}

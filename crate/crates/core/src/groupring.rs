//! The integral group ring of a finite group, its augmentation ideal `A`,
//! and the quotient of `A` by the ideal `I₂` generated by the squares
//! `(h − 1)²`.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::checks::CheckReport;
use crate::error::Error;
use crate::model::FiniteGroupModel;
use crate::weak::ChiContext;
use crate::zlin::{self, IntMatrix, InvariantFactors, RowLattice};

/// Largest number of relation rows generated for `I₂`.
pub const RELATION_ROW_BUDGET: u128 = 1 << 22;

/// A finitely supported integer combination of the elements of a model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingVector {
    order: usize,
    coeffs: BTreeMap<usize, BigInt>,
}

impl GroupRingVector {
    pub fn zero(order: usize) -> Self {
        GroupRingVector {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    /// The group element with index `i`.
    pub fn element(order: usize, i: usize) -> Self {
        GroupRingVector::zero(order).plus_term(i, BigInt::one())
    }

    /// The integer `k` as a multiple of the identity.
    pub fn scalar(order: usize, k: i64) -> Self {
        GroupRingVector::zero(order).plus_term(0, BigInt::from(k))
    }

    /// `g − 1`
    pub fn augmented(order: usize, g: usize) -> Self {
        GroupRingVector::element(order, g).sub(&GroupRingVector::scalar(order, 1))
    }

    pub fn from_terms(order: usize, terms: &[(usize, i64)]) -> Self {
        terms.iter().fold(GroupRingVector::zero(order), |v, &(i, c)| {
            v.plus_term(i, BigInt::from(c))
        })
    }

    fn plus_term(mut self, i: usize, c: BigInt) -> Self {
        assert!(i < self.order, "element index out of range");
        let e = self.coeffs.entry(i).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&i);
        }
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coeffs.get(&i).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &GroupRingVector) -> GroupRingVector {
        assert_eq!(self.order, other.order, "vectors over different groups");
        other
            .terms()
            .fold(self.clone(), |v, (i, c)| v.plus_term(i, c.clone()))
    }

    pub fn sub(&self, other: &GroupRingVector) -> GroupRingVector {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, k: &BigInt) -> GroupRingVector {
        let mut out = GroupRingVector::zero(self.order);
        if k.is_zero() {
            return out;
        }
        out.coeffs = self.coeffs.iter().map(|(&i, c)| (i, c * k)).collect();
        out
    }

    /// Coefficients indexed by element.
    pub fn dense(&self) -> Vec<BigInt> {
        (0..self.order).map(|i| self.coefficient(i)).collect()
    }
}

/// Sum of the coefficients.
pub fn augmentation(u: &GroupRingVector) -> BigInt {
    u.coeffs.values().sum()
}

/// Convolution product in `ZH`.
pub fn ring_multiply(
    u: &GroupRingVector,
    v: &GroupRingVector,
    m: &FiniteGroupModel,
) -> Result<GroupRingVector, Error> {
    if u.order != m.order() || v.order != m.order() {
        return Err(Error::ModelMismatch);
    }
    let mut out = GroupRingVector::zero(m.order());
    for (i, a) in u.terms() {
        for (j, b) in v.terms() {
            out = out.plus_term(m.multiply(i, j), a * b);
        }
    }
    Ok(out)
}

/// Which products `a·(h − 1)²·b` generate `I₂` as an abelian group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationFamily {
    /// Every triple `(a, h, b)`: `n³` rows.
    AllTriples,
    /// Only `a = 1`, which suffices because
    /// `a(h − 1)²b = (aha⁻¹ − 1)²·ab`: `n²` rows.
    LeftTrivial,
}

/// `A/I₂` in the basis `{g − 1 : g ≠ 1}` of `A`.
#[derive(Clone, Debug)]
pub struct AugmentationQuotient {
    order: usize,
    family: RelationFamily,
    /// Distinct nonzero relation rows, sorted.
    relations: IntMatrix,
    lattice: RowLattice,
    invariants: InvariantFactors,
}

impl AugmentationQuotient {
    /// Element index of each basis vector `g − 1`.
    pub fn basis(&self) -> Vec<usize> {
        (1..self.order).collect()
    }

    pub fn family(&self) -> RelationFamily {
        self.family
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn invariants(&self) -> &InvariantFactors {
        &self.invariants
    }

    /// Coordinates of an element of `A` in the basis `{g − 1}`, or `None`
    /// when its augmentation is nonzero.
    pub fn coordinates(&self, u: &GroupRingVector) -> Option<Vec<BigInt>> {
        if !augmentation(u).is_zero() || u.order != self.order {
            return None;
        }
        Some((1..self.order).map(|i| u.coefficient(i)).collect())
    }

    /// Whether `u` lies in `I₂`.
    pub fn in_ideal(&self, u: &GroupRingVector) -> bool {
        self.coordinates(u)
            .is_some_and(|c| self.lattice.contains(&c))
    }

    /// Whether `u ≡ v` modulo `I₂`.
    pub fn congruent(&self, u: &GroupRingVector, v: &GroupRingVector) -> bool {
        self.in_ideal(&u.sub(v))
    }

    /// Relation matrix as tab-separated rows, with a header naming the basis
    /// by canonical element words.
    pub fn to_tsv(&self, m: &FiniteGroupModel) -> String {
        let mut out = String::new();
        let names: Vec<String> = (1..self.order)
            .map(|i| format!("{}-1", m.presentation().display_word(m.word(i))))
            .collect();
        out.push_str(&names.join("\t"));
        out.push('\n');
        for i in 0..self.relations.rows() {
            let row: Vec<String> = self.relations.row(i).iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", row.join("\t"));
        }
        out
    }
}

/// `a·(h − 1)²·b` written as coordinates in the basis `{g − 1 : g ≠ 1}`.
fn square_times(m: &FiniteGroupModel, a: usize, h: usize, b: usize) -> Vec<i64> {
    let n = m.order();
    // a(h − 1)²b = a·h²·b − 2·a·h·b + a·b
    let mut row = vec![0i64; n];
    let ah = m.multiply(a, h);
    row[m.multiply(m.multiply(ah, h), b)] += 1;
    row[m.multiply(ah, b)] -= 2;
    row[m.multiply(a, b)] += 1;
    row.remove(0);
    row
}

/// The quotient `A/I₂` from the relation family.
pub fn build_aug_quotient_with(
    m: &FiniteGroupModel,
    family: RelationFamily,
) -> Result<AugmentationQuotient, Error> {
    let n = m.order();
    let lefts: Vec<usize> = match family {
        RelationFamily::AllTriples => (0..n).collect(),
        RelationFamily::LeftTrivial => vec![0],
    };
    let needed = (lefts.len() * n * n) as u128;
    if needed > RELATION_ROW_BUDGET {
        return Err(Error::Budget {
            what: "relation rows",
            needed,
            budget: RELATION_ROW_BUDGET,
        });
    }
    let mut rows: HashSet<Vec<i64>> = HashSet::new();
    for &a in &lefts {
        for h in 0..n {
            for b in 0..n {
                let row = square_times(m, a, h, b);
                if row.iter().any(|&x| x != 0) {
                    rows.insert(row);
                }
            }
        }
    }
    let mut rows: Vec<Vec<i64>> = rows.into_iter().collect();
    rows.sort();
    let cols = n - 1;
    let relations = IntMatrix::from_rows(
        cols,
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )?;
    let mut lattice = RowLattice::new(cols);
    for i in 0..relations.rows() {
        lattice.insert(relations.row(i).to_vec());
    }
    let invariants = zlin::invariants_from_relations(cols, &lattice.basis_matrix())?;
    Ok(AugmentationQuotient {
        order: n,
        family,
        relations,
        lattice,
        invariants,
    })
}

/// `A/I₂` from all `n³` products `a(h − 1)²b`.
pub fn build_aug_quotient(m: &FiniteGroupModel) -> Result<AugmentationQuotient, Error> {
    build_aug_quotient_with(m, RelationFamily::AllTriples)
}

/// Checks the rewriting identities for generators `aᵢ` modulo `I₂`, and
/// that the ordered products `a_{i₁}⋯a_{i_s}` (`i₁ < … < i_s`) span `ZH/I₂`.
pub fn verify_relation_calculus(
    m: &FiniteGroupModel,
    q: &AugmentationQuotient,
) -> Result<CheckReport, Error> {
    let n = m.order();
    let e = |i: usize| GroupRingVector::element(n, i);
    let k1 = |k: i64| GroupRingVector::scalar(n, k);
    let mul = |u: &GroupRingVector, v: &GroupRingVector| ring_multiply(u, v, m);
    let gens: Vec<usize> = (0..m.rank()).map(|g| m.generator_element(g)).collect();
    let mut report = CheckReport::new();

    let mut ok = true;
    for &a in &gens {
        // a² = 2a − 1
        ok &= q.congruent(&mul(&e(a), &e(a))?, &e(a).scale(&BigInt::from(2)).sub(&k1(1)));
    }
    report.push("square", ok, format!("{} generators", gens.len()));

    let mut ok = true;
    let mut tested = 0;
    for &a in &gens {
        let ord = m.element(a).order() as i64;
        for k in -ord..=2 * ord {
            // aᵏ = k·a − (k − 1)
            let mut p = 0usize;
            let step = if k < 0 { m.inverse(a) } else { a };
            for _ in 0..k.unsigned_abs() {
                p = m.multiply(p, step);
            }
            let rhs = e(a).scale(&BigInt::from(k)).sub(&k1(k - 1));
            ok &= q.congruent(&e(p), &rhs);
            tested += 1;
        }
    }
    report.push("power", ok, format!("{tested} powers"));

    let (mut inv_ok, mut inv_pair_ok, mut swap_ok) = (true, true, true);
    for &ai in &gens {
        for &aj in &gens {
            let ajai = m.multiply(aj, ai);
            // (aⱼaᵢ)⁻¹ = 2 − aⱼaᵢ
            inv_ok &= q.congruent(&e(m.inverse(ajai)), &k1(2).sub(&e(ajai)));
            // aᵢ⁻¹aⱼ⁻¹ = aᵢaⱼ − 2aᵢ − 2aⱼ + 4
            let lhs = e(m.multiply(m.inverse(ai), m.inverse(aj)));
            let two = BigInt::from(2);
            let rhs = e(m.multiply(ai, aj))
                .sub(&e(ai).scale(&two))
                .sub(&e(aj).scale(&two))
                .add(&k1(4));
            inv_pair_ok &= q.congruent(&lhs, &rhs);
            // aⱼaᵢ = −aᵢaⱼ + 2aⱼ + 2aᵢ − 2
            let rhs = e(aj)
                .scale(&two)
                .add(&e(ai).scale(&two))
                .sub(&e(m.multiply(ai, aj)))
                .sub(&k1(2));
            swap_ok &= q.congruent(&e(ajai), &rhs);
        }
    }
    let pairs = format!("{} ordered pairs", gens.len() * gens.len());
    report.push("inverse-of-product", inv_ok, pairs.clone());
    report.push("product-of-inverses", inv_pair_ok, pairs.clone());
    report.push("reorder", swap_ok, pairs);

    // ordered products span ZH modulo I₂, in the element basis
    let mut lattice = RowLattice::new(n);
    let to_full = |coords: &[BigInt]| {
        // coordinates in {g − 1} to element coordinates
        let mut v = vec![BigInt::zero(); n];
        for (k, c) in coords.iter().enumerate() {
            v[k + 1] += c;
            v[0] -= c;
        }
        v
    };
    for i in 0..q.relations.rows() {
        lattice.insert(to_full(q.relations.row(i)));
    }
    let mut products = 0usize;
    for mask in 0u64..(1u64 << gens.len().min(20)) {
        let p = (0..gens.len())
            .filter(|&i| mask >> i & 1 == 1)
            .fold(0usize, |p, i| m.multiply(p, gens[i]));
        lattice.insert(e(p).dense());
        products += 1;
    }
    let spans = (0..n).all(|i| lattice.contains(&e(i).dense()));
    report.push("ordered-products-span", spans, format!("{products} products"));
    Ok(report)
}

/// Compares `L/L′` with `A/I₂`.
pub fn compare_l_abelianization(
    c: &ChiContext,
    q: &AugmentationQuotient,
) -> CheckReport {
    let l_ab = c.l().abelian_invariants();
    let mut report = CheckReport::new();
    report.push(
        "l-abelianization",
        &l_ab == q.invariants(),
        format!("L/L' = {l_ab}, A/I2 = {}", q.invariants()),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::Limits;
    use crate::model::model_group;
    use crate::words::Presentation;
    use proptest::prelude::*;

    fn model(text: &str) -> FiniteGroupModel {
        model_group(&Presentation::parse(text).unwrap(), Limits::default()).unwrap()
    }

    fn c2() -> FiniteGroupModel {
        model("generators: h\nrelators: h^2")
    }

    #[test]
    fn multiplication_examples() {
        let m = c2();
        let h = GroupRingVector::augmented(2, 1);
        let u = GroupRingVector::from_terms(2, &[(0, 3), (1, -5)]);
        assert_eq!(ring_multiply(&u, &GroupRingVector::element(2, 0), &m).unwrap(), u);
        assert_eq!(
            ring_multiply(&h, &h, &m).unwrap(),
            GroupRingVector::from_terms(2, &[(0, 2), (1, -2)])
        );

        let s3 = model("generators: a b\nrelators: a^2 b^3 (ab)^2");
        for g in 0..6 {
            for k in 0..6 {
                let lhs = ring_multiply(
                    &GroupRingVector::augmented(6, g),
                    &GroupRingVector::augmented(6, k),
                    &s3,
                )
                .unwrap();
                let rhs = GroupRingVector::element(6, s3.multiply(g, k))
                    .sub(&GroupRingVector::element(6, g))
                    .sub(&GroupRingVector::element(6, k))
                    .add(&GroupRingVector::scalar(6, 1));
                assert_eq!(lhs, rhs);
            }
        }
        assert!(matches!(
            ring_multiply(&h, &GroupRingVector::element(3, 1), &m),
            Err(Error::ModelMismatch)
        ));
    }

    #[test]
    fn augmentation_examples() {
        assert_eq!(augmentation(&GroupRingVector::element(4, 0)), BigInt::one());
        assert!(augmentation(&GroupRingVector::augmented(4, 2)).is_zero());
        assert_eq!(
            augmentation(&GroupRingVector::from_terms(4, &[(1, 3), (2, 2)])),
            BigInt::from(5)
        );
    }

    #[test]
    fn quotient_examples() {
        let q = build_aug_quotient(&c2()).unwrap();
        assert_eq!(q.invariants().to_string(), "(2)");
        let c3 = model("generators: a\nrelators: a^3");
        assert_eq!(build_aug_quotient(&c3).unwrap().invariants().to_string(), "(3)");
        let v4 = model("generators: a b\nrelators: a^2 b^2 [a,b]");
        let q = build_aug_quotient(&v4).unwrap();
        assert_eq!(q.invariants().to_string(), "(2,2,2)");
        assert_eq!(q.invariants().order().unwrap(), 8u32.into());
    }

    /// By-hand relation matrices: for C₃ the rows (h − 1)²·b in the basis
    /// {a − 1, a² − 1} are [−2, 1], [1, −2] and [1, 1].
    #[test]
    fn c3_relations_by_hand() {
        let c3 = model("generators: a\nrelators: a^3");
        let q = build_aug_quotient(&c3).unwrap();
        let rows: HashSet<Vec<i64>> = (0..q.relations().rows())
            .map(|i| q.relations().row(i).iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect();
        let expected: HashSet<Vec<i64>> =
            [vec![-2, 1], vec![1, -2], vec![1, 1]].into_iter().collect();
        assert_eq!(rows, expected);
    }

    #[test]
    fn relation_rows_have_augmentation_zero() {
        let s3 = model("generators: a b\nrelators: a^2 b^3 (ab)^2");
        for a in 0..6 {
            for h in 0..6 {
                for b in 0..6 {
                    let mut full = [0i64; 6];
                    let ah = s3.multiply(a, h);
                    full[s3.multiply(s3.multiply(ah, h), b)] += 1;
                    full[s3.multiply(ah, b)] -= 2;
                    full[s3.multiply(a, b)] += 1;
                    assert_eq!(full.iter().sum::<i64>(), 0);
                    let coords = square_times(&s3, a, h, b);
                    assert_eq!(&coords[..], &full[1..]);
                }
            }
        }
    }

    #[test]
    fn reduced_family_agrees() {
        for text in [
            "generators: a b\nrelators: a^2 b^3 (ab)^2",
            "generators: i j\nrelators: i^4 i^2j^-2 j^-1iji",
            "generators: a b\nrelators: a^2 b^2 [a,b]",
            "generators: a\nrelators: a^6",
        ] {
            let m = model(text);
            let full = build_aug_quotient(&m).unwrap();
            let reduced = build_aug_quotient_with(&m, RelationFamily::LeftTrivial).unwrap();
            assert_eq!(full.invariants(), reduced.invariants(), "{text}");
        }
    }

    #[test]
    fn relation_calculus_holds() {
        for text in [
            "generators: a b\nrelators: a^2 b^2 [a,b]",
            "generators: a\nrelators: a^3",
            "generators: a b\nrelators: a^2 b^3 (ab)^2",
        ] {
            let m = model(text);
            let q = build_aug_quotient(&m).unwrap();
            let r = verify_relation_calculus(&m, &q).unwrap();
            assert!(r.all_passed(), "{text}\n{r}");
        }
    }

    #[test]
    fn tsv_export() {
        let q = build_aug_quotient(&c2()).unwrap();
        assert_eq!(q.to_tsv(&c2()), "h-1\n-2\n2\n");
    }

    proptest! {
        #[test]
        fn augmentation_is_multiplicative(
            u in prop::collection::vec(-9i64..=9, 6),
            v in prop::collection::vec(-9i64..=9, 6),
        ) {
            let s3 = model("generators: a b\nrelators: a^2 b^3 (ab)^2");
            let terms = |c: &[i64]| c.iter().copied().enumerate().collect::<Vec<_>>();
            let u = GroupRingVector::from_terms(6, &terms(&u));
            let v = GroupRingVector::from_terms(6, &terms(&v));
            let p = ring_multiply(&u, &v, &s3).unwrap();
            prop_assert_eq!(augmentation(&p), augmentation(&u) * augmentation(&v));
        }
    }
}

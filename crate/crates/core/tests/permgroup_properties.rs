mod common;

use std::collections::{HashSet, VecDeque};

use common::{presentation, CORPUS};
use proptest::prelude::*;
use weakcomm_core::enumerate::{enumerate, regular_representation, Limits};
use weakcomm_core::{PermGroup, Permutation};

fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn arb_group() -> impl Strategy<Value = PermGroup> {
    (2usize..=6)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(arb_perm(n), 1..4)))
        .prop_map(|(n, gens)| PermGroup::new(n, gens).unwrap())
}

fn closure_count(gens: &[Permutation], degree: usize) -> usize {
    let id = Permutation::identity(degree);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = g.mul(s);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn chain_order_matches_closure(g in arb_group()) {
        prop_assert_eq!(g.order(), closure_count(g.generators(), g.degree()) as u128);
        prop_assert!(g.verify_chain());
    }

    #[test]
    fn normal_closure_is_conjugation_invariant(g in arb_group(), pick in any::<prop::sample::Index>()) {
        let seed = g.generators()[pick.index(g.generators().len())].clone();
        let n = g.normal_closure(&[seed]).unwrap();
        for x in n.generators() {
            for t in g.generators() {
                prop_assert!(n.contains(&x.conjugate(t)).unwrap());
            }
        }
        prop_assert!(n.is_normal_in(&g));
    }

    /// The quotient map `G → G/N` has image `G/N` and kernel `N`.
    #[test]
    fn image_times_kernel(g in arb_group(), pick in any::<prop::sample::Index>()) {
        let seed = g.generators()[pick.index(g.generators().len())].clone();
        let n = g.normal_closure(&[seed]).unwrap();
        let q = g.quotient(&n).unwrap();
        prop_assert_eq!(q.group().order() * n.order(), g.order());
        let images: Vec<Permutation> = g.generators().iter().map(|x| q.image(x)).collect();
        let hom = g.homomorphism(q.group(), images).unwrap();
        prop_assert_eq!(hom.image().order() * hom.kernel().order(), g.order());
        prop_assert!(hom.kernel().same_group(&n));
    }

    #[test]
    fn lower_central_series_descends_through_normal_subgroups(g in arb_group()) {
        let series = g.lower_central_series();
        prop_assert!(series[0].same_group(&g));
        for w in series.windows(2) {
            prop_assert!(w[1].is_subgroup_of(&w[0]));
            prop_assert!(w[1].is_normal_in(&g));
        }
    }
}

/// The quotient of a presented group by the normal closure of a generator:
/// the images of the generators still satisfy every relator.
#[test]
fn quotient_images_respect_relators() {
    for &(name, text, _) in CORPUS {
        let p = presentation(text);
        let g = regular_representation(&enumerate(&p, &[], Limits::default()).unwrap()).unwrap();
        for gen in g.generators() {
            let n = g.normal_closure(std::slice::from_ref(gen)).unwrap();
            let q = g.quotient(&n).unwrap();
            assert_eq!(q.group().order() * n.order(), g.order(), "{name}");
            let images: Vec<Permutation> = g.generators().iter().map(|x| q.image(x)).collect();
            for r in p.relators() {
                let mut acc = q.group().identity();
                for l in r.letters() {
                    let x = &images[l.generator];
                    acc = acc.mul(&if l.inverse { x.inverse() } else { x.clone() });
                }
                assert!(acc.is_identity(), "{name}");
            }
        }
    }
}

#[test]
fn chain_orders_on_presented_groups() {
    for &(name, text, order) in CORPUS {
        let p = presentation(text);
        let g = regular_representation(&enumerate(&p, &[], Limits::default()).unwrap()).unwrap();
        assert_eq!(g.order(), order as u128, "{name}");
        assert_eq!(closure_count(g.generators(), g.degree()), order, "{name}");
    }
}

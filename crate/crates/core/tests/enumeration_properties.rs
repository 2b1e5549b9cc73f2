mod common;

use common::{presentation, CORPUS};
use proptest::prelude::*;
use weakcomm_core::enumerate::{enumerate, regular_representation, Limits};
use weakcomm_core::model::FiniteGroupModel;
use weakcomm_core::words::{Letter, Word};

#[test]
fn orders_match_the_corpus() {
    for &(name, text, order) in CORPUS {
        let t = enumerate(&presentation(text), &[], Limits::default()).unwrap();
        assert_eq!(t.len(), order, "{name}");
    }
}

#[test]
fn relators_trace_to_the_identity_at_every_coset() {
    for &(name, text, _) in CORPUS {
        let p = presentation(text);
        let t = enumerate(&p, &[], Limits::default()).unwrap();
        for r in p.relators() {
            for c in 0..t.len() {
                assert_eq!(t.trace(c, r), c, "{name}");
            }
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    for &(name, text, _) in CORPUS {
        let p = presentation(text);
        let a = enumerate(&p, &[], Limits::default()).unwrap();
        let b = enumerate(&p, &[], Limits::default()).unwrap();
        assert_eq!(a.to_tsv(), b.to_tsv(), "{name}");
    }
}

fn arb_subgroup_words() -> impl Strategy<Value = (usize, Vec<Vec<(usize, bool)>>)> {
    (
        0..CORPUS.len(),
        prop::collection::vec(prop::collection::vec((0..3usize, any::<bool>()), 0..8), 0..3),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// Index times the subgroup order, computed in the regular
    /// representation, is the group order.
    #[test]
    fn index_times_subgroup_order(input in arb_subgroup_words()) {
        let (which, raw) = input;
        let (_, text, order) = CORPUS[which];
        let p = presentation(text);
        let rank = p.rank();
        let words: Vec<Word> = raw
            .into_iter()
            .map(|ls| Word::reduce(rank, ls.into_iter().map(|(g, i)| Letter::new(g % rank, i))).unwrap())
            .collect();
        let full = enumerate(&p, &[], Limits::default()).unwrap();
        let g = regular_representation(&full).unwrap();
        let images = words
            .iter()
            .map(|w| FiniteGroupModel::evaluate_in(w, g.generators(), g.degree()))
            .collect();
        let sub = g.subgroup(images).unwrap();
        let cosets = enumerate(&p, &words, Limits::default()).unwrap();
        prop_assert_eq!(cosets.len() as u128 * sub.order(), order as u128);
    }
}

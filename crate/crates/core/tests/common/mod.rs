#![allow(dead_code)]

use std::sync::Arc;

use weakcomm_core::enumerate::Limits;
use weakcomm_core::model::model_group;
use weakcomm_core::{FiniteGroupModel, Presentation};

/// Small finite presentations with their orders.
pub const CORPUS: &[(&str, &str, usize)] = &[
    ("trivial", "generators: a\nrelators: a", 1),
    ("c2", "generators: a\nrelators: a^2", 2),
    ("c3", "generators: a\nrelators: a^3", 3),
    ("c4", "generators: a\nrelators: a^4", 4),
    ("c6", "generators: a\nrelators: a^6", 6),
    ("c9", "generators: a\nrelators: a^9", 9),
    ("c2^2", "generators: a b\nrelators: a^2 b^2 [a,b]", 4),
    ("c2^3", "generators: a b c\nrelators: a^2 b^2 c^2 [a,b] [a,c] [b,c]", 8),
    ("c3^2", "generators: a b\nrelators: a^3 b^3 [a,b]", 9),
    ("c3xc9", "generators: a b\nrelators: a^3 b^9 [a,b]", 27),
    ("s3", "generators: a b\nrelators: a^2 b^3 (ab)^2", 6),
    ("d4", "generators: a b\nrelators: a^4 b^2 (ab)^2", 8),
    ("q8", "generators: a b\nrelators: a^4 a^2b^-2 b^-1aba", 8),
    ("c3:c4", "generators: a b\nrelators: a^3 b^4 b^-1aba", 12),
    ("heis2", "generators: a b\nrelators: a^2 b^2 [a,b]^2 [[a,b],a] [[a,b],b]", 8),
    ("heis3", "generators: a b\nrelators: a^3 b^3 [a,b]^3 [[a,b],a] [[a,b],b]", 27),
    ("a4", "generators: a b\nrelators: a^2 b^3 (ab)^3", 12),
    ("s4", "generators: a b\nrelators: a^2 b^3 (ab)^4", 24),
];

pub fn presentation(text: &str) -> Presentation {
    Presentation::parse(text).unwrap()
}

pub fn model(text: &str) -> Arc<FiniteGroupModel> {
    Arc::new(model_group(&presentation(text), Limits::default()).unwrap())
}

/// Corpus entries up to the given order.
pub fn up_to(order: usize) -> impl Iterator<Item = &'static (&'static str, &'static str, usize)> {
    CORPUS.iter().filter(move |e| e.2 <= order)
}

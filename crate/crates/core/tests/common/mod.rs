#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use silting_core::derived::{DerivedCategory, Stalk};
use silting_core::exceptional::{mutate, order_into_exceptional, MutationDirection};
use silting_core::quiver_rep::Quiver;
use silting_core::{PrimeField, Rationals};

pub fn derived(label: &str) -> DerivedCategory<Rationals> {
    let q = Quiver::dynkin(label.parse().unwrap()).unwrap();
    DerivedCategory::new(&q, &Rationals).unwrap()
}

pub fn derived_mod_p(label: &str, p: u64) -> DerivedCategory<PrimeField> {
    let q = Quiver::dynkin(label.parse().unwrap()).unwrap();
    DerivedCategory::new(&q, &PrimeField::new(p).unwrap()).unwrap()
}

pub fn projectives<F: silting_core::Field>(der: &DerivedCategory<F>) -> Vec<Stalk> {
    (0..der.rank())
        .map(|v| Stalk::new(der.catalog().projective_id(v), 0))
        .collect()
}

/// A full exceptional sequence reached from the projectives by a seeded
/// walk of left and right mutations.
pub fn random_sequence<F: silting_core::Field>(
    der: &DerivedCategory<F>,
    seed: u64,
    steps: usize,
) -> Vec<Stalk> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seq = order_into_exceptional(der, &projectives(der)).unwrap();
    let n = seq.len();
    for _ in 0..steps {
        let i = rng.gen_range(0..n - 1);
        let dir = if rng.gen_bool(0.5) {
            MutationDirection::Left
        } else {
            MutationDirection::Right
        };
        seq = mutate(der, &seq, i, dir).unwrap();
    }
    seq
}

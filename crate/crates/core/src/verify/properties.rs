//! Seeded sweep over the algebraic laws the rest of the crate relies on.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abelian::AbelianGroup;
use crate::extensions::{extension_set, set_extension, GroupSet};
use crate::families::{tables, Family};
use crate::lr::lr_expand;
use crate::partition::Partition;

use super::{Verdict, VerificationReport};

pub const DEFAULT_SEED: u64 = 0x5eed;

const EXTENSION_INSTANCES: usize = 1000;
const ASSOCIATIVITY_TRIPLES: usize = 100;
const ROW_INSTANTIATIONS: usize = 3;

fn random_partition(rng: &mut ChaCha8Rng, max_size: u32) -> Partition {
    let size = rng.gen_range(0..=max_size);
    let all = Partition::all_of_size(size);
    all.choose(rng).cloned().unwrap_or_else(Partition::empty)
}

fn random_group(rng: &mut ChaCha8Rng) -> AbelianGroup {
    let types = [2u64, 3, 5].map(|p| {
        let max = if p == 2 { 4 } else { 2 };
        (p, random_partition(rng, max))
    });
    AbelianGroup::from_types(types).expect("small primes")
}

/// c^μ_{λν} = c^μ_{νλ}, and both λ ∪ ν and λ + ν occur.
fn lr_laws(failures: &mut Vec<String>) -> u64 {
    let mut checked = 0;
    for total in 0..=8 {
        for left in 0..=total {
            for lambda in Partition::all_of_size(left) {
                for nu in Partition::all_of_size(total - left) {
                    checked += 1;
                    let forward = lr_expand(&lambda, &nu);
                    if forward != lr_expand(&nu, &lambda) {
                        failures.push(format!("lr symmetry fails for {lambda}, {nu}"));
                    }
                    for extreme in [lambda.union_merge(&nu), lambda.componentwise_sum(&nu)] {
                        if forward.multiplicity(&extreme) != 1 {
                            failures.push(format!("{extreme} should occur once in {lambda}.{nu}"));
                        }
                    }
                }
            }
        }
    }
    checked
}

/// |G| = |H||K| and max(r(H_p), r(K_p)) ≤ r(G_p) ≤ r(H_p) + r(K_p).
fn extension_laws(rng: &mut ChaCha8Rng, failures: &mut Vec<String>) -> u64 {
    for _ in 0..EXTENSION_INSTANCES {
        let (h, k) = (random_group(rng), random_group(rng));
        let set = extension_set(&h, &k);
        if !set.contains(&h.direct_product(&k)) {
            failures.push(format!("{h} x {k} missing from its extensions"));
        }
        for g in &set {
            if g.order().ok() != Some(h.order().unwrap() * k.order().unwrap()) {
                failures.push(format!("order of {g} is not |{h}|.|{k}|"));
            }
            for p in [2, 3, 5] {
                let (rg, rh, rk) = (g.type_at(p).len(), h.type_at(p).len(), k.type_at(p).len());
                if rg < rh.max(rk) || rg > rh + rk {
                    failures.push(format!("rank of {g} at {p} outside [{}, {}]", rh.max(rk), rh + rk));
                }
            }
        }
    }
    EXTENSION_INSTANCES as u64
}

/// ({A} • {B}) • {C} = {A} • ({B} • {C}) for 2-groups of total size ≤ 8.
fn associativity(rng: &mut ChaCha8Rng, failures: &mut Vec<String>) -> u64 {
    for _ in 0..ASSOCIATIVITY_TRIPLES {
        let a = rng.gen_range(0..=4);
        let b = rng.gen_range(0..=(8 - a).min(3));
        let c = rng.gen_range(0..=(8 - a - b).min(3));
        let [x, y, z] = [a, b, c].map(|s| {
            let ty = Partition::all_of_size(s).choose(rng).cloned().expect("some partition");
            GroupSet::singleton(AbelianGroup::p_group(2, ty).expect("2 is prime"))
        });
        let left = set_extension(&set_extension(&x, &y).unwrap(), &z).unwrap();
        let right = set_extension(&x, &set_extension(&y, &z).unwrap()).unwrap();
        if left != right {
            failures.push(format!("associativity fails for {x}, {y}, {z}"));
        }
    }
    ASSOCIATIVITY_TRIPLES as u64
}

/// Every table row matches its own instantiations.
fn row_round_trip(rng: &mut ChaCha8Rng, failures: &mut Vec<String>) -> u64 {
    let mut checked = 0;
    for t in tables() {
        let family = Family::builtin(t.family).expect("table family");
        for (i, pattern) in family.patterns().iter().enumerate() {
            for _ in 0..ROW_INSTANTIATIONS {
                checked += 1;
                let params: Vec<u64> = pattern.labels().iter().map(|_| rng.gen_range(1..=6)).collect();
                let g = pattern.instantiate_params(&params).expect("positive parameters");
                if !pattern.matches(&g) || !family.contains(&g) {
                    failures.push(format!("table {} row ({}) misses {g} at {params:?}", t.number, i + 1));
                }
            }
        }
    }
    checked
}

pub(super) fn check_properties(seed: u64) -> VerificationReport {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut notes = Vec::new();
    let checked = lr_laws(&mut notes)
        + extension_laws(&mut rng, &mut notes)
        + associativity(&mut rng, &mut notes)
        + row_round_trip(&mut rng, &mut notes);
    VerificationReport {
        claim_id: "properties".into(),
        bound: None,
        checked_pairs: checked,
        witnesses: GroupSet::new(),
        sources: Default::default(),
        verdict: if notes.is_empty() { Verdict::Pass } else { Verdict::Fail },
        vacuous: false,
        notes,
        elapsed: start.elapsed(),
    }
}

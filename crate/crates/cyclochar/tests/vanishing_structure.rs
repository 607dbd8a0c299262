//! Structure checks for minimal vanishing sums beyond the unit tests: at
//! small weights every enumerated class is a rotated prime cycle, and the
//! rotation canonicalization is invariant under further rotation.

use cyclochar::cyclotomic::RootOfUnity;
use cyclochar::vanishing::{enumerate_minimal_vanishing, RootSum};

#[test]
fn small_weight_classes_are_prime_cycles() {
    for weight in [2usize, 3, 5] {
        let classes = enumerate_minimal_vanishing(weight, 30).unwrap();
        assert!(
            !classes.is_empty(),
            "weight {weight} should have classes at order 30"
        );
        for class in &classes {
            let (p, _) = class
                .as_rotated_prime_cycle()
                .unwrap_or_else(|| panic!("weight-{weight} class [{class}] is not a prime cycle"));
            assert_eq!(p as usize, weight);
        }
    }
}

#[test]
fn weight_five_has_exactly_the_pentagon() {
    let classes = enumerate_minimal_vanishing(5, 30).unwrap();
    assert_eq!(classes.len(), 1);
    let pentagon = RootSum::new((0..5).map(|i| RootOfUnity::new(5, i)).collect());
    assert_eq!(classes[0], pentagon.canonical_class());
}

#[test]
fn canonicalization_is_stable_under_rotation() {
    let mut state: u64 = 0xfeed_beef_0451_cafe;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..200 {
        let n = [6u64, 10, 12, 15, 30][(next() % 5) as usize];
        let weight = 2 + next() % 5;
        let terms: Vec<RootOfUnity> = (0..weight)
            .map(|_| RootOfUnity::new(n, (next() % n) as i64))
            .collect();
        let sum = RootSum::new(terms);
        let canon = sum.canonical_class();
        assert_eq!(
            canon.canonical_class(),
            canon,
            "idempotence failed for [{sum}]"
        );
        for k in 0..n {
            let rotated = sum.rotate(&RootOfUnity::new(n, k as i64));
            assert_eq!(
                rotated.canonical_class(),
                canon,
                "rotation invariance failed for [{sum}]"
            );
        }
    }
}

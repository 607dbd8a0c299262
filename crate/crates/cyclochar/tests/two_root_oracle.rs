//! Independent brute-force oracle for the two-root decision procedure: for
//! values living in fields of order up to 60, enumerate every pair of
//! candidate roots exactly (no floating point, no analytic shortcuts) and
//! compare against `two_root_decomposition`.

use cyclochar::cyclotomic::{candidate_roots, Cyclotomic, RootOfUnity, TwoRootDecomposition};
use cyclochar::numtheory::lcm;

/// Exhaustive pair search over the full candidate root set. This is the
/// oracle: it shares no code path with the decision procedure beyond the
/// field arithmetic itself.
fn oracle_two_root(value: &Cyclotomic) -> Option<TwoRootDecomposition> {
    if value.is_zero() {
        return Some(TwoRootDecomposition::Zero);
    }
    let roots = candidate_roots(value.order());
    let common = roots.iter().fold(1u64, |m, r| lcm(m, r.order()));
    let order = lcm(common, value.order());
    let lifted = value.lift(order);
    let embedded: Vec<Cyclotomic> = roots.iter().map(|r| r.embed_at(order)).collect();
    for (i, a) in embedded.iter().enumerate() {
        if *a == lifted {
            return Some(TwoRootDecomposition::One(roots[i]));
        }
    }
    for (i, a) in embedded.iter().enumerate() {
        for (j, b) in embedded.iter().enumerate().skip(i) {
            if &(a + b) == &lifted {
                return Some(TwoRootDecomposition::Two(roots[i], roots[j]));
            }
        }
    }
    None
}

fn same_presence(value: &Cyclotomic) {
    let fast = value.two_root_decomposition();
    let slow = oracle_two_root(value);
    assert_eq!(
        fast.is_some(),
        slow.is_some(),
        "oracle disagreement at {value}: fast {fast:?}, oracle {slow:?}"
    );
    if let Some(witness) = &fast {
        assert_eq!(
            &witness.value(),
            value,
            "witness must re-evaluate to the input"
        );
    }
}

#[test]
fn oracle_agrees_on_root_sums_of_bounded_order() {
    // systematic small sums: e productive mix of orders up to 60
    let mut checked = 0u32;
    for n in [1u64, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 20, 21, 30, 60] {
        for k1 in 0..n.min(6) {
            for k2 in 0..n.min(6) {
                let v = &Cyclotomic::zeta(n, k1 as i64) + &Cyclotomic::zeta(n, k2 as i64);
                same_presence(&v);
                let w = &v + &Cyclotomic::zeta(n, 1);
                same_presence(&w);
                checked += 2;
            }
        }
    }
    assert!(checked > 300);
}

#[test]
fn oracle_agrees_on_pseudorandom_values() {
    // deterministic xorshift-driven sums of up to four roots
    let mut state: u64 = 0x00c0ffee_d15ea5e5;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..400 {
        let n = [6u64, 12, 15, 20, 24, 30, 42, 60][(next() % 8) as usize];
        let terms = 1 + next() % 4;
        let mut v = Cyclotomic::zero();
        for _ in 0..terms {
            let k = (next() % n) as i64;
            if next() % 4 == 0 {
                v = &v - &Cyclotomic::zeta(n, k);
            } else {
                v = &v + &Cyclotomic::zeta(n, k);
            }
        }
        same_presence(&v);
    }
}

#[test]
fn oracle_confirms_the_named_rejections() {
    // modulus 3 exceeds the triangle-inequality bound
    let three = Cyclotomic::from_integer(3);
    assert_eq!(three.two_root_decomposition(), None);
    assert_eq!(oracle_two_root(&three), None);

    // 1 + ζ7 + ζ7² admits no witness in the full candidate set
    let v = &(&Cyclotomic::one() + &Cyclotomic::zeta(7, 1)) + &Cyclotomic::zeta(7, 2);
    assert_eq!(v.two_root_decomposition(), None);
    assert_eq!(oracle_two_root(&v), None);

    // ζ5 + ζ5⁴ is not a root of unity but is a sum of two
    let v = &Cyclotomic::zeta(5, 1) + &Cyclotomic::zeta(5, 4);
    assert_eq!(v.as_root_of_unity(), None);
    assert!(matches!(
        v.two_root_decomposition(),
        Some(TwoRootDecomposition::Two(_, _))
    ));
}

#[test]
fn doubled_roots_round_trip() {
    for (n, k) in [(1u64, 0i64), (2, 1), (5, 2), (12, 7), (30, 11)] {
        let root = RootOfUnity::new(n, k);
        let doubled = root
            .to_cyclotomic()
            .scale(&num_rational::BigRational::from_integer(2.into()));
        match doubled.two_root_decomposition() {
            Some(TwoRootDecomposition::Two(a, b)) => {
                assert_eq!(a, b);
                assert_eq!(a, root);
            }
            other => panic!("2ε should decompose as a doubled root, got {other:?}"),
        }
    }
}

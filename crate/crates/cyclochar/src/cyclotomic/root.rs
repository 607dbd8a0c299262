//! Roots of unity in canonical form: the unique pair (N, k) with N the exact
//! multiplicative order and 0 ≤ k < N, gcd(k, N) = 1 (except the identity,
//! stored as (1, 0)). The multiplicative structure is plain exponent
//! arithmetic, with embedding into `Cyclotomic` on demand.

use std::fmt;

use crate::numtheory::{gcd, lcm};

use super::Cyclotomic;

/// ζ_N^k in lowest terms; `order` is the exact multiplicative order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootOfUnity {
    order: u64,
    exponent: u64,
}

impl RootOfUnity {
    /// Canonicalizes ζ_n^k: reduces k mod n and divides out gcd(k, n).
    pub fn new(n: u64, k: i64) -> Self {
        assert!(n >= 1);
        let k = k.rem_euclid(n as i64) as u64;
        if k == 0 {
            return RootOfUnity {
                order: 1,
                exponent: 0,
            };
        }
        let g = gcd(k, n);
        RootOfUnity {
            order: n / g,
            exponent: k / g,
        }
    }

    pub fn one() -> Self {
        RootOfUnity {
            order: 1,
            exponent: 0,
        }
    }

    pub fn minus_one() -> Self {
        RootOfUnity {
            order: 2,
            exponent: 1,
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        let m = lcm(self.order, other.order);
        let k = self.exponent * (m / self.order) + other.exponent * (m / other.order);
        RootOfUnity::new(m, (k % m) as i64)
    }

    pub fn inverse(&self) -> RootOfUnity {
        RootOfUnity::new(
            self.order,
            (self.order - self.exponent) as i64 % self.order as i64,
        )
    }

    pub fn negate(&self) -> RootOfUnity {
        self.mul(&RootOfUnity::minus_one())
    }

    pub fn pow(&self, e: i64) -> RootOfUnity {
        let e = e.rem_euclid(self.order as i64) as u64;
        RootOfUnity::new(self.order, (self.exponent * e % self.order) as i64)
    }

    /// Embeds into Q(ζ_m); `m` must be a multiple of the order.
    pub fn embed_at(&self, m: u64) -> Cyclotomic {
        assert!(m % self.order == 0);
        Cyclotomic::zeta(m, (self.exponent * (m / self.order)) as i64)
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        self.embed_at(self.order)
    }

    pub fn approx(&self) -> (f64, f64) {
        let theta = 2.0 * std::f64::consts::PI * (self.exponent as f64) / (self.order as f64);
        (theta.cos(), theta.sin())
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.order, self.exponent) {
            (1, _) => write!(f, "1"),
            (2, _) => write!(f, "-1"),
            (n, 1) => write!(f, "E({n})"),
            (n, k) => write!(f, "E({n})^{k}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_divides_out_gcd() {
        assert_eq!(RootOfUnity::new(6, 2), RootOfUnity::new(3, 1));
        assert_eq!(RootOfUnity::new(10, 5), RootOfUnity::minus_one());
        assert_eq!(RootOfUnity::new(12, 0), RootOfUnity::one());
        assert_eq!(RootOfUnity::new(5, -1), RootOfUnity::new(5, 4));
    }

    #[test]
    fn negation_of_zeta5_has_order_ten() {
        let r = RootOfUnity::new(5, 1).negate();
        assert_eq!((r.order(), r.exponent()), (10, 7));
    }

    #[test]
    fn embedding_has_unit_modulus() {
        for (n, k) in [(1, 0), (2, 1), (5, 2), (12, 7), (30, 11)] {
            let r = RootOfUnity::new(n, k);
            assert!(r.to_cyclotomic().abs_square().is_one());
        }
    }

    #[test]
    fn group_laws() {
        let a = RootOfUnity::new(12, 5);
        let b = RootOfUnity::new(10, 3);
        assert_eq!(a.mul(&a.inverse()), RootOfUnity::one());
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.pow(12), RootOfUnity::one());
        assert_eq!(
            a.mul(&b).to_cyclotomic(),
            &a.to_cyclotomic() * &b.to_cyclotomic()
        );
    }
}

//! Per-order reduction data for Q(ζ_n) = Q[x]/Φ_n(x): the cyclotomic
//! polynomial itself and a table of reduced powers x^j mod Φ_n. Contexts are
//! immutable once built and shared through a process-wide cache, so repeated
//! arithmetic at the same order pays the setup cost once.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::numtheory::{divisors, euler_phi};

/// Integer-coefficient polynomial, ascending degree, no trailing zeros.
type IntPoly = Vec<BigInt>;

fn poly_trim(p: &mut IntPoly) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

/// Exact division of integer polynomials; panics if the division is inexact.
/// Only used with monic divisors, so no rational coefficients can appear.
fn poly_exact_div(num: &IntPoly, den: &IntPoly) -> IntPoly {
    assert!(
        den.last().map_or(false, |c| c.is_one()),
        "divisor must be monic"
    );
    let mut rem = num.clone();
    poly_trim(&mut rem);
    if rem.is_empty() {
        return Vec::new();
    }
    let dn = den.len() - 1;
    assert!(rem.len() - 1 >= dn);
    let mut quot = vec![BigInt::zero(); rem.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        quot[i] = c.clone();
        for (j, d) in den.iter().enumerate() {
            let t = d * &c;
            rem[i + j] -= t;
        }
    }
    poly_trim(&mut rem);
    assert!(rem.is_empty(), "inexact polynomial division");
    quot
}

/// The n-th cyclotomic polynomial Φ_n, ascending coefficients, degree φ(n).
///
/// Computed as (x^n − 1) / ∏_{d|n, d<n} Φ_d, which keeps all intermediate
/// arithmetic in integers.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    if n == 1 {
        return vec![BigInt::from(-1), BigInt::one()];
    }
    // x^n - 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    let mut result = num;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = context(d).modulus.clone();
        result = poly_exact_div(&result, &phi_d);
    }
    result
}

/// Orders beyond this are outside the supported desk scale; the floating
/// point approximation contract also stops here.
pub const MAX_ORDER: u64 = 10_000;

/// Reduction context for a fixed order n.
pub struct OrderContext {
    pub phi: usize,
    /// Φ_n, ascending, monic, length phi + 1.
    pub modulus: IntPoly,
    /// Reduced monomials x^e mod Φ_n for the exponents seen so far; bounded
    /// so adversarial orders cannot exhaust memory.
    monomials: Mutex<HashMap<usize, Arc<Vec<BigInt>>>>,
}

const MONOMIAL_CACHE_LIMIT: usize = 4096;

impl OrderContext {
    fn build(n: u64) -> OrderContext {
        let phi = euler_phi(n) as usize;
        let modulus = if n == 1 {
            vec![BigInt::from(-1), BigInt::one()]
        } else {
            cyclotomic_polynomial(n)
        };
        debug_assert_eq!(modulus.len(), phi + 1);
        OrderContext {
            phi,
            modulus,
            monomials: Mutex::new(HashMap::new()),
        }
    }

    /// x^e mod Φ_n as an integer coefficient vector of length phi.
    pub fn monomial(&self, e: usize) -> Arc<Vec<BigInt>> {
        if let Some(hit) = self.monomials.lock().unwrap().get(&e) {
            return Arc::clone(hit);
        }
        let mut raw = vec![BigInt::zero(); e + 1];
        raw[e] = BigInt::one();
        let reduced = Arc::new(self.reduce_int(raw));
        let mut cache = self.monomials.lock().unwrap();
        if cache.len() < MONOMIAL_CACHE_LIMIT {
            cache.insert(e, Arc::clone(&reduced));
        }
        reduced
    }

    /// Reduces an ascending coefficient vector modulo Φ_n in place and
    /// returns exactly phi coordinates. Long division against the monic
    /// modulus, highest degree first.
    pub fn reduce(&self, mut v: Vec<num_rational::BigRational>) -> Vec<num_rational::BigRational> {
        use num_traits::Zero as _;
        let phi = self.phi;
        for d in (phi..v.len()).rev() {
            if v[d].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut v[d], num_rational::BigRational::zero());
            for i in 0..phi {
                if !self.modulus[i].is_zero() {
                    let t = &c * &num_rational::BigRational::from_integer(self.modulus[i].clone());
                    v[d - phi + i] -= t;
                }
            }
        }
        v.truncate(phi);
        v.resize(phi, num_rational::BigRational::zero());
        v
    }

    /// Integer variant of [`OrderContext::reduce`] for integer inputs.
    pub fn reduce_int(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        let phi = self.phi;
        for d in (phi..v.len()).rev() {
            if v[d].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut v[d], BigInt::zero());
            for i in 0..phi {
                if !self.modulus[i].is_zero() {
                    let t = &c * &self.modulus[i];
                    v[d - phi + i] -= t;
                }
            }
        }
        v.truncate(phi);
        v.resize(phi, BigInt::zero());
        v
    }
}

static CONTEXT_CACHE: OnceLock<Mutex<HashMap<u64, Arc<OrderContext>>>> = OnceLock::new();

/// Shared reduction context for order `n`.
pub fn context(n: u64) -> Arc<OrderContext> {
    assert!(
        (1..=MAX_ORDER).contains(&n),
        "cyclotomic order {n} outside the supported range 1..={MAX_ORDER}"
    );
    let cache = CONTEXT_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(ctx) = cache.lock().unwrap().get(&n) {
        return Arc::clone(ctx);
    }
    // Build outside the lock: construction recurses into smaller orders.
    let built = Arc::new(OrderContext::build(n));
    let mut guard = cache.lock().unwrap();
    Arc::clone(guard.entry(n).or_insert(built))
}

//! Exact arithmetic in cyclotomic fields Q(ζ_n).
//!
//! A value is stored as its unique reduced representative in
//! Q[x]/Φ_n(x) with rational coefficients over the power basis
//! {ζ_n^i : 0 ≤ i < φ(n)}. Two values at different orders are compared by
//! lifting both into Q(ζ_lcm). All operations are pure; values are immutable
//! and freely shareable across threads.

mod context;
mod decompose;
mod parse;
mod root;

pub use context::cyclotomic_polynomial;
pub use decompose::{candidate_root_orders, candidate_roots, TwoRootDecomposition};
pub use parse::{parse_cyclotomic, parse_cyclotomic_list, ParseError};
pub use root::RootOfUnity;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::numtheory::{divisors, lcm};
use context::{context, OrderContext};

/// An element of the cyclotomic field Q(ζ_n), reduced modulo Φ_n.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u64,
    /// Coordinates over {ζ_n^i : i < φ(n)}; length is exactly φ(n).
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    /// The zero element (stored at order 1).
    pub fn zero() -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![BigRational::zero()],
        }
    }

    /// The multiplicative identity.
    pub fn one() -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![BigRational::one()],
        }
    }

    pub fn from_integer(v: i64) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![BigRational::from_integer(BigInt::from(v))],
        }
    }

    pub fn from_rational(v: BigRational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![v],
        }
    }

    /// ζ_n^k, reduced modulo Φ_n and stored at order n.
    pub fn zeta(n: u64, k: i64) -> Self {
        assert!(n >= 1, "zeta needs order >= 1");
        let ctx = context(n);
        let e = k.rem_euclid(n as i64) as usize;
        let coeffs =
            ctx.monomial(e).iter().cloned().map(BigRational::from_integer).collect();
        Cyclotomic { order: n, coeffs }
    }

    /// Builds Σ_k counts[k] · ζ_n^k; `counts` is indexed by exponent < n.
    pub fn from_root_counts(n: u64, counts: &[i64]) -> Self {
        assert!(counts.len() as u64 <= n);
        let ctx = context(n);
        let raw: Vec<BigInt> = counts.iter().map(|&m| BigInt::from(m)).collect();
        Cyclotomic {
            order: n,
            coeffs: ctx.reduce_int(raw).into_iter().map(BigRational::from_integer).collect(),
        }
    }

    /// Construct from explicit coordinates over the power basis at order `n`.
    pub fn from_coeffs(n: u64, coeffs: Vec<BigRational>) -> Self {
        let ctx = context(n);
        assert_eq!(
            coeffs.len(),
            ctx.phi,
            "coefficient vector must have length phi(n)"
        );
        Cyclotomic { order: n, coeffs }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The same value represented in Q(ζ_m); `m` must be a multiple of the
    /// current order.
    pub fn lift(&self, m: u64) -> Cyclotomic {
        assert!(
            m % self.order == 0,
            "lift target must be a multiple of the order"
        );
        if m == self.order {
            return self.clone();
        }
        let step = (m / self.order) as usize;
        let ctx = context(m);
        let top = (self.coeffs.len().max(1) - 1) * step;
        let mut raw = vec![BigRational::zero(); top + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[i * step] = c.clone();
            }
        }
        Cyclotomic {
            order: m,
            coeffs: ctx.reduce(raw),
        }
    }

    fn common_order(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let m = lcm(self.order, other.order);
        (self.lift(m), other.lift(m))
    }

    /// Applies the field automorphism ζ_n ↦ ζ_n^j; requires gcd(j, n) = 1.
    pub fn galois(&self, j: u64) -> Cyclotomic {
        let n = self.order;
        assert_eq!(
            crate::numtheory::gcd(j % n, n),
            1,
            "galois exponent must be coprime to the order"
        );
        let ctx = context(n);
        let mut raw = vec![BigRational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[(i as u64 * j % n) as usize] += c;
            }
        }
        Cyclotomic {
            order: n,
            coeffs: ctx.reduce(raw),
        }
    }

    /// Complex conjugation, ζ_n ↦ ζ_n^{n−1}.
    pub fn conjugate(&self) -> Cyclotomic {
        if self.order <= 2 {
            return self.clone();
        }
        self.galois(self.order - 1)
    }

    /// |a|² = a · conj(a), exact.
    pub fn abs_square(&self) -> Cyclotomic {
        self * &self.conjugate()
    }

    pub fn scale(&self, r: &BigRational) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// The value as a rational number, if it lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The value as a rational integer, if it lies in Z.
    pub fn as_rational_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        if r.is_integer() {
            Some(r.to_integer())
        } else {
            None
        }
    }

    /// Attempts to rewrite the value at order `d` (a divisor of the current
    /// order); succeeds exactly when the value lies in Q(ζ_d).
    pub fn try_lower(&self, d: u64) -> Option<Cyclotomic> {
        assert!(self.order % d == 0);
        if d == self.order {
            return Some(self.clone());
        }
        let ctx_d = context(d);
        let step = (self.order / d) as usize;
        let ctx = context(self.order);
        // Solve M b = coeffs where the columns of M are x^{step * i} mod Φ_n.
        let rows = ctx.phi;
        let cols = ctx_d.phi;
        let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); cols + 1]; rows];
        for j in 0..cols {
            let mut raw = vec![BigInt::zero(); j * step + 1];
            raw[j * step] = BigInt::one();
            for (i, p) in ctx.reduce_int(raw).into_iter().enumerate() {
                m[i][j] = BigRational::from_integer(p);
            }
        }
        for i in 0..rows {
            m[i][cols] = self.coeffs[i].clone();
        }
        solve_linear(m, rows, cols).map(|b| Cyclotomic {
            order: d,
            coeffs: b,
        })
    }

    /// The canonical representative at minimal conductor.
    pub fn reduced(&self) -> Cyclotomic {
        for d in divisors(self.order) {
            if let Some(lowered) = self.try_lower(d) {
                return lowered;
            }
        }
        unreachable!("value lowers at its own order")
    }

    /// Floating-point approximation (re, im); error stays below 1e-9 for
    /// orders up to 10^4. Used only for pruning and diagnostics, never for
    /// equality decisions.
    pub fn approx(&self) -> (f64, f64) {
        let n = self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let x = c.to_f64().unwrap_or(f64::NAN);
            let theta = 2.0 * std::f64::consts::PI * (i as f64) / n;
            re += x * theta.cos();
            im += x * theta.sin();
        }
        (re, im)
    }

    /// Squared distance to another value, in floating point.
    pub fn approx_dist_sq(&self, other: &Cyclotomic) -> f64 {
        let (ar, ai) = self.approx();
        let (br, bi) = other.approx();
        (ar - br) * (ar - br) + (ai - bi) * (ai - bi)
    }

    /// Recognizes the value as a root of unity in canonical (order, exponent)
    /// form. Every root of unity inside Q(ζ_n) has order dividing lcm(2, n).
    pub fn as_root_of_unity(&self) -> Option<RootOfUnity> {
        decompose::as_root_of_unity(self)
    }

    /// Expresses the value as a sum of at most two roots of unity, if
    /// possible: 0, a single root ε, or ε₁ + ε₂ with the witness pair sorted
    /// canonically.
    pub fn two_root_decomposition(&self) -> Option<TwoRootDecomposition> {
        decompose::two_root_decomposition(self)
    }

    fn ctx(&self) -> Arc<OrderContext> {
        context(self.order)
    }
}

/// Gaussian elimination for the (rows × cols) system carried in `m` with the
/// right-hand side in column `cols`; returns the unique solution if the
/// system is consistent (columns are independent for our lifting matrices).
fn solve_linear(
    mut m: Vec<Vec<BigRational>>,
    rows: usize,
    cols: usize,
) -> Option<Vec<BigRational>> {
    let mut pivot_row = 0usize;
    let mut pivots: Vec<usize> = Vec::with_capacity(cols);
    for col in 0..cols {
        let Some(r) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            return None; // lifting columns are independent, so this is unreachable
        };
        m.swap(pivot_row, r);
        let inv = m[pivot_row][col].recip();
        for j in col..=cols {
            m[pivot_row][j] = &m[pivot_row][j] * &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..=cols {
                    let t = &m[pivot_row][j] * &f;
                    m[r][j] -= t;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    if pivots.len() < cols {
        return None;
    }
    // consistency: all remaining rows must be zero
    for r in pivot_row..rows {
        if !m[r][cols].is_zero() {
            return None;
        }
    }
    Some((0..cols).map(|c| m[pivots[c]][cols].clone()).collect())
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common_order(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl std::ops::Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.common_order(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }
}

impl std::ops::Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.common_order(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x -= y;
        }
        a
    }
}

impl std::ops::Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common_order(rhs);
        let ctx = a.ctx();
        let phi = ctx.phi;
        // convolve, then reduce modulo the cyclotomic polynomial
        let mut conv = vec![BigRational::zero(); 2 * phi.max(1) - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    conv[i + j] += x * y;
                }
            }
        }
        Cyclotomic {
            order: a.order,
            coeffs: ctx.reduce(conv),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl std::ops::Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        parse::format_cyclotomic(self, f)
    }
}

impl FromStr for Cyclotomic {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_cyclotomic(s)
    }
}

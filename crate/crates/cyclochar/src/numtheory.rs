//! Elementary number-theoretic helpers shared by every module: gcd/lcm,
//! Euler's totient, divisor lists, prime factorization, and a coprime-moduli
//! Chinese remainder solver.

/// Greatest common divisor. `gcd(0, 0) == 0`.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple. Panics on overflow.
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Prime factorization as `(prime, multiplicity)` pairs in ascending order.
pub fn prime_factorization(n: u64) -> Vec<(u64, u32)> {
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// The set of primes dividing `n`, ascending.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    prime_factorization(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factorization(n).len() == 1 && prime_factorization(n)[0].1 == 1
}

/// Euler's totient function.
pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in prime_factorization(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// All divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Largest divisor of `n` all of whose prime divisors lie in `primes`.
pub fn largest_divisor_supported_on(n: u64, primes: &[u64]) -> u64 {
    let mut d = 1u64;
    for (p, e) in prime_factorization(n) {
        if primes.contains(&p) {
            d *= p.pow(e);
        }
    }
    d
}

/// Modular inverse of `a` modulo `m` (requires `gcd(a, m) == 1`).
pub fn mod_inverse(a: i64, m: u64) -> Option<u64> {
    let m = m as i64;
    let (mut old_r, mut r) = (a.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m) as u64)
}

/// Solve `x ≡ rᵢ (mod mᵢ)` for pairwise coprime moduli; returns the least
/// nonnegative solution modulo the product of the moduli.
pub fn crt(congruences: &[(i64, u64)]) -> Option<u64> {
    let mut x: i128 = 0;
    let mut modulus: i128 = 1;
    for &(r, m) in congruences {
        let m_i = m as i128;
        let r_i = (r as i128).rem_euclid(m_i);
        // solve x + modulus * t ≡ r_i (mod m_i); moduli must be coprime
        let inv = mod_inverse((modulus.rem_euclid(m_i)) as i64, m)? as i128;
        let t = ((r_i - x).rem_euclid(m_i) * inv).rem_euclid(m_i);
        x += modulus * t;
        modulus *= m_i;
        x = x.rem_euclid(modulus);
    }
    Some(x as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(2), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(30), 8);
        assert_eq!(euler_phi(97), 96);
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(7), vec![1, 7]);
    }

    #[test]
    fn crt_solves_coprime_systems() {
        // even, ≡ 1 mod 15: the least solution is 16
        assert_eq!(crt(&[(0, 2), (1, 15)]), Some(16));
        assert_eq!(crt(&[(0, 2), (1, 3), (2, 5)]), Some(22));
        assert_eq!(crt(&[(3, 7)]), Some(3));
        assert_eq!(crt(&[(-1, 5), (0, 4)]), Some(4));
    }

    #[test]
    fn supported_divisor() {
        assert_eq!(largest_divisor_supported_on(30, &[3, 5]), 15);
        assert_eq!(largest_divisor_supported_on(30, &[2]), 2);
        assert_eq!(largest_divisor_supported_on(30, &[7]), 1);
    }

    #[test]
    fn inverse() {
        assert_eq!(mod_inverse(3, 7), Some(5));
        assert_eq!(mod_inverse(2, 4), None);
    }
}

//! Vanishing sums of roots of unity: minimality certification by exhaustive
//! sub-multiset enumeration, decomposition into minimal parts by
//! backtracking, and bounded enumeration of minimal vanishing sums up to
//! rotation.
//!
//! Minimality is always certified by brute force, never assumed from the
//! structure results; the structure results are checked *against* this
//! module. Sums are multisets: repeated terms occur and matter.

use std::collections::BTreeSet;
use std::fmt;

use crate::cyclotomic::{Cyclotomic, RootOfUnity};
use crate::numtheory::{is_prime, lcm, prime_divisors};

/// Practical guard for the exhaustive sub-multiset certification.
const WEIGHT_LIMIT: usize = 20;
/// Guards for the enumeration of minimal classes.
const ENUM_WEIGHT_LIMIT: usize = 8;
const ENUM_ORDER_LIMIT: u64 = 60;
/// Floating-point gate ahead of exact zero tests.
const PRUNE_EPS: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VanishingError {
    /// The combinatorial certification would be too large.
    WeightLimitExceeded { weight: usize, limit: usize },
    /// `decompose` requires an exactly vanishing input.
    NotVanishing,
    /// Enumeration bounds (weight ≤ 8, order ≤ 60) exceeded.
    EnumerationBounds { weight: usize, order_bound: u64 },
    /// A decomposition part over two primes was not a rotated prime cycle.
    /// Genuine inputs cannot produce this; it is a falsification report.
    UnexpectedPartShape { part: RootSum },
}

impl fmt::Display for VanishingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VanishingError::WeightLimitExceeded { weight, limit } => {
                write!(f, "weight {weight} exceeds the certification limit {limit}")
            }
            VanishingError::NotVanishing => write!(f, "input sum is not zero"),
            VanishingError::EnumerationBounds {
                weight,
                order_bound,
            } => {
                write!(
                    f,
                    "enumeration bounds exceeded (weight {weight} > {ENUM_WEIGHT_LIMIT} or order {order_bound} > {ENUM_ORDER_LIMIT})"
                )
            }
            VanishingError::UnexpectedPartShape { part } => {
                write!(f, "part [{part}] is not a rotated prime cycle")
            }
        }
    }
}

impl std::error::Error for VanishingError {}

/// A multiset of roots of unity, kept sorted in canonical term order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RootSum {
    terms: Vec<RootOfUnity>,
}

impl RootSum {
    pub fn new(mut terms: Vec<RootOfUnity>) -> Self {
        terms.sort_unstable();
        RootSum { terms }
    }

    pub fn empty() -> Self {
        RootSum { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[RootOfUnity] {
        &self.terms
    }

    pub fn weight(&self) -> usize {
        self.terms.len()
    }

    /// lcm of the term orders (1 for the empty sum).
    pub fn common_order(&self) -> u64 {
        self.terms.iter().fold(1, |m, t| lcm(m, t.order()))
    }

    /// Exact value of the sum.
    pub fn sum_value(&self) -> Cyclotomic {
        let n = self.common_order();
        let mut counts = vec![0i64; n as usize];
        for t in &self.terms {
            counts[(t.exponent() * (n / t.order())) as usize] += 1;
        }
        Cyclotomic::from_root_counts(n, &counts)
    }

    pub fn approx_sum(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for t in &self.terms {
            let (r, i) = t.approx();
            re += r;
            im += i;
        }
        (re, im)
    }

    /// Multiplies every term by ε.
    pub fn rotate(&self, eps: &RootOfUnity) -> RootSum {
        RootSum::new(self.terms.iter().map(|t| t.mul(eps)).collect())
    }

    /// The canonical representative of the rotation class: the
    /// lexicographically least multiset among rotations by the inverse of
    /// each term (each such rotation contains 1).
    pub fn canonical_class(&self) -> RootSum {
        let mut best: Option<RootSum> = None;
        for t in &self.terms {
            let rotated = self.rotate(&t.inverse());
            if best.as_ref().map_or(true, |b| rotated < *b) {
                best = Some(rotated);
            }
        }
        best.unwrap_or_else(|| self.clone())
    }

    /// True iff the sum vanishes, has weight ≥ 1, and no proper nonempty
    /// sub-multiset vanishes. Certified by exhaustive enumeration.
    pub fn is_minimal_vanishing(&self) -> Result<bool, VanishingError> {
        if self.weight() > WEIGHT_LIMIT {
            return Err(VanishingError::WeightLimitExceeded {
                weight: self.weight(),
                limit: WEIGHT_LIMIT,
            });
        }
        if self.weight() == 0 || !self.sum_value().is_zero() {
            return Ok(false);
        }
        Ok(!self.has_proper_vanishing_subsum())
    }

    fn distinct_with_multiplicity(&self) -> Vec<(RootOfUnity, usize)> {
        let mut out: Vec<(RootOfUnity, usize)> = Vec::new();
        for t in &self.terms {
            match out.last_mut() {
                Some((r, m)) if r == t => *m += 1,
                _ => out.push((*t, 1)),
            }
        }
        out
    }

    /// Scans proper nonempty sub-multisets for an exact zero; floating point
    /// only gates the exact test.
    fn has_proper_vanishing_subsum(&self) -> bool {
        let distinct = self.distinct_with_multiplicity();
        let n = self.common_order();
        let approx: Vec<(f64, f64)> = distinct.iter().map(|(r, _)| r.approx()).collect();
        let total = self.weight();
        let mut counts = vec![0usize; distinct.len()];

        fn rec(
            distinct: &[(RootOfUnity, usize)],
            approx: &[(f64, f64)],
            counts: &mut Vec<usize>,
            i: usize,
            chosen: usize,
            re: f64,
            im: f64,
            total: usize,
            n: u64,
        ) -> bool {
            if i == distinct.len() {
                if chosen == 0 || chosen == total {
                    return false; // proper and nonempty only
                }
                if re * re + im * im > PRUNE_EPS * PRUNE_EPS {
                    return false;
                }
                // exact confirmation
                let mut bucket = vec![0i64; n as usize];
                for (c, (r, _)) in counts.iter().zip(distinct) {
                    bucket[(r.exponent() * (n / r.order())) as usize] += *c as i64;
                }
                return Cyclotomic::from_root_counts(n, &bucket).is_zero();
            }
            let (root, mult) = distinct[i];
            let _ = root;
            let (tr, ti) = approx[i];
            for c in 0..=mult {
                counts[i] = c;
                if rec(
                    distinct,
                    approx,
                    counts,
                    i + 1,
                    chosen + c,
                    re + c as f64 * tr,
                    im + c as f64 * ti,
                    total,
                    n,
                ) {
                    counts[i] = 0;
                    return true;
                }
            }
            counts[i] = 0;
            false
        }

        rec(&distinct, &approx, &mut counts, 0, 0, 0.0, 0.0, total, n)
    }

    /// If the sum is a rotated full prime cycle ε·{ζ_p^i : i < p}, returns
    /// (p, ε) with ε the least term.
    pub fn as_rotated_prime_cycle(&self) -> Option<(u64, RootOfUnity)> {
        let w = self.weight() as u64;
        if !is_prime(w) {
            return None;
        }
        let eps = self.terms[0];
        let expected = RootSum::new(
            (0..w)
                .map(|i| eps.mul(&RootOfUnity::new(w, i as i64)))
                .collect(),
        );
        if expected == *self {
            Some((w, eps))
        } else {
            None
        }
    }
}

impl fmt::Display for RootSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// One minimal vanishing part, with its prime-cycle form when the input
/// involved at most two primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionPart {
    pub terms: RootSum,
    /// (p, ε) when the part is the rotated cycle ε·{ζ_p^i : i < p}.
    pub prime_cycle: Option<(u64, RootOfUnity)>,
}

/// A partition of a vanishing sum into minimal vanishing parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Vec<DecompositionPart>,
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "part {}: [{}]", i, part.terms)?;
            if let Some((p, eps)) = &part.prime_cycle {
                write!(f, " = ({eps}) * cycle({p})")?;
            }
        }
        Ok(())
    }
}

/// Partitions an exactly vanishing sum into minimal vanishing parts,
/// preferring the smallest part containing the least remaining term, with
/// lexicographic tie-break. When all term orders involve at most two primes,
/// each part is checked to be a rotated prime cycle.
pub fn decompose(s: &RootSum) -> Result<Decomposition, VanishingError> {
    if s.weight() > WEIGHT_LIMIT {
        return Err(VanishingError::WeightLimitExceeded {
            weight: s.weight(),
            limit: WEIGHT_LIMIT,
        });
    }
    if !s.sum_value().is_zero() {
        return Err(VanishingError::NotVanishing);
    }
    let parts =
        backtrack(s.terms().to_vec()).expect("every vanishing sum splits into minimal parts");

    let mut primes: BTreeSet<u64> = BTreeSet::new();
    for t in s.terms() {
        primes.extend(prime_divisors(t.order()));
    }
    let two_prime = primes.len() <= 2 && s.weight() > 0;

    let mut out = Vec::with_capacity(parts.len());
    for part in parts {
        let prime_cycle = if two_prime {
            match part.as_rotated_prime_cycle() {
                Some(pc) => Some(pc),
                None => return Err(VanishingError::UnexpectedPartShape { part }),
            }
        } else {
            part.as_rotated_prime_cycle()
        };
        out.push(DecompositionPart {
            terms: part,
            prime_cycle,
        });
    }
    Ok(Decomposition { parts: out })
}

/// Finds a partition of `remaining` (sorted) into minimal vanishing parts;
/// tries the sub-multisets containing the first term smallest-first.
fn backtrack(remaining: Vec<RootOfUnity>) -> Option<Vec<RootSum>> {
    if remaining.is_empty() {
        return Some(Vec::new());
    }
    for sub in subsets_with_first(&remaining) {
        let part = RootSum::new(sub.clone());
        if !part.sum_value().is_zero() {
            continue;
        }
        if part.has_proper_vanishing_subsum() {
            continue;
        }
        let mut rest = remaining.clone();
        for t in &sub {
            let pos = rest.iter().position(|r| r == t).unwrap();
            rest.remove(pos);
        }
        if let Some(mut tail) = backtrack(rest) {
            tail.insert(0, part);
            return Some(tail);
        }
    }
    None
}

/// All sub-multisets of the sorted `terms` that contain `terms[0]`, ordered
/// by (size, lexicographic term list).
fn subsets_with_first(terms: &[RootOfUnity]) -> Vec<Vec<RootOfUnity>> {
    let mut out: Vec<Vec<RootOfUnity>> = Vec::new();
    let mut cur: Vec<RootOfUnity> = vec![terms[0]];
    fn rec(
        terms: &[RootOfUnity],
        i: usize,
        cur: &mut Vec<RootOfUnity>,
        out: &mut Vec<Vec<RootOfUnity>>,
    ) {
        out.push(cur.clone());
        for j in i..terms.len() {
            // skip duplicate branches: only take the first of an equal run
            if j > i && terms[j] == terms[j - 1] {
                continue;
            }
            cur.push(terms[j]);
            rec(terms, j + 1, cur, out);
            cur.pop();
        }
    }
    rec(terms, 1, &mut cur, &mut out);
    out.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
    out.retain(|s| s.len() >= 2);
    out
}

/// Enumerates all minimal vanishing sums of the given weight whose term
/// orders divide `order_bound`, deduplicated by rotation-canonical form.
pub fn enumerate_minimal_vanishing(
    weight: usize,
    order_bound: u64,
) -> Result<Vec<RootSum>, VanishingError> {
    if weight > ENUM_WEIGHT_LIMIT || order_bound > ENUM_ORDER_LIMIT || order_bound == 0 {
        return Err(VanishingError::EnumerationBounds {
            weight,
            order_bound,
        });
    }
    if weight == 0 {
        return Ok(Vec::new());
    }
    let n = order_bound;
    let pool: Vec<RootOfUnity> = (0..n).map(|k| RootOfUnity::new(n, k as i64)).collect();
    let approx: Vec<(f64, f64)> = pool.iter().map(|r| r.approx()).collect();
    let mut classes: BTreeSet<RootSum> = BTreeSet::new();
    // every rotation class has a representative containing 1 = pool[0]
    let mut chosen: Vec<usize> = vec![0];
    let mut counts = vec![0i64; n as usize];
    counts[0] = 1;
    let (r0, i0) = approx[0];
    dfs(
        &pool,
        &approx,
        n,
        weight,
        &mut chosen,
        &mut counts,
        r0,
        i0,
        &mut classes,
    );
    return Ok(classes.into_iter().collect());

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        pool: &[RootOfUnity],
        approx: &[(f64, f64)],
        n: u64,
        weight: usize,
        chosen: &mut Vec<usize>,
        counts: &mut Vec<i64>,
        re: f64,
        im: f64,
        classes: &mut BTreeSet<RootSum>,
    ) {
        let depth = chosen.len();
        if depth == weight {
            if re * re + im * im <= PRUNE_EPS * PRUNE_EPS
                && Cyclotomic::from_root_counts(n, counts).is_zero()
            {
                let sum = RootSum::new(chosen.iter().map(|&i| pool[i]).collect());
                if let Ok(true) = sum.is_minimal_vanishing() {
                    classes.insert(sum.canonical_class());
                }
            }
            return;
        }
        // triangle inequality: the remaining unit terms cannot bridge the gap
        let remaining = (weight - depth) as f64;
        if (re * re + im * im).sqrt() > remaining + PRUNE_EPS {
            return;
        }
        // a vanishing proper prefix makes every completion non-minimal
        if re * re + im * im <= PRUNE_EPS * PRUNE_EPS
            && Cyclotomic::from_root_counts(n, counts).is_zero()
        {
            return;
        }
        let start = *chosen.last().unwrap();
        for j in start..pool.len() {
            let (tr, ti) = approx[j];
            chosen.push(j);
            let e = (pool[j].exponent() * (n / pool[j].order())) as usize;
            counts[e] += 1;
            dfs(
                pool,
                approx,
                n,
                weight,
                chosen,
                counts,
                re + tr,
                im + ti,
                classes,
            );
            counts[e] -= 1;
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(n: u64, k: i64) -> RootOfUnity {
        RootOfUnity::new(n, k)
    }

    fn cycle(p: u64) -> Vec<RootOfUnity> {
        (0..p).map(|i| root(p, i as i64)).collect()
    }

    #[test]
    fn sum_values() {
        let s = RootSum::new(vec![root(3, 1), root(3, 2)]);
        assert_eq!(s.sum_value(), Cyclotomic::from_integer(-1));
        assert!(RootSum::empty().sum_value().is_zero());
        // the unique minimal weight-6 sum: hexagon pair plus pentagon tail
        let s = RootSum::new(vec![
            root(6, 1),
            root(6, 5),
            root(5, 1),
            root(5, 2),
            root(5, 3),
            root(5, 4),
        ]);
        assert!(s.sum_value().is_zero());
    }

    #[test]
    fn minimality() {
        assert!(RootSum::new(vec![root(1, 0), root(2, 1)])
            .is_minimal_vanishing()
            .unwrap());
        assert!(RootSum::new(cycle(5)).is_minimal_vanishing().unwrap());
        // weight-4 vanishing sums always split
        let s = RootSum::new(vec![
            root(1, 0),
            root(2, 1),
            root(3, 1),
            root(3, 1).negate(),
        ]);
        assert!(s.sum_value().is_zero());
        assert!(!s.is_minimal_vanishing().unwrap());
        // non-vanishing sums are not minimal vanishing
        assert!(!RootSum::new(vec![root(1, 0)])
            .is_minimal_vanishing()
            .unwrap());
        assert!(!RootSum::empty().is_minimal_vanishing().unwrap());
    }

    #[test]
    fn weight_guard() {
        let s = RootSum::new((0..21).map(|i| root(30, i)).collect());
        assert!(matches!(
            s.is_minimal_vanishing(),
            Err(VanishingError::WeightLimitExceeded { .. })
        ));
    }

    #[test]
    fn decompose_cycle_plus_pair() {
        let mut terms = cycle(5);
        terms.push(root(1, 0));
        terms.push(root(2, 1));
        let d = decompose(&RootSum::new(terms)).unwrap();
        assert_eq!(d.parts.len(), 2);
        // smallest part first: the pair, then the pentagon
        assert_eq!(d.parts[0].terms.weight(), 2);
        assert_eq!(d.parts[0].prime_cycle, Some((2, root(1, 0))));
        assert_eq!(d.parts[1].terms.weight(), 5);
        assert_eq!(d.parts[1].prime_cycle, Some((5, root(1, 0))));
    }

    #[test]
    fn decompose_records_rotation() {
        let eps = root(7, 1);
        let terms: Vec<RootOfUnity> = cycle(3).iter().map(|t| t.mul(&eps)).collect();
        let d = decompose(&RootSum::new(terms)).unwrap();
        assert_eq!(d.parts.len(), 1);
        assert_eq!(d.parts[0].prime_cycle, Some((3, eps)));
    }

    #[test]
    fn decompose_overlaid_cycles() {
        // two rotated 3-cycles and a 5-cycle over 15th roots
        let mut terms: Vec<RootOfUnity> = cycle(3);
        terms.extend(cycle(5));
        let eps = root(15, 1);
        terms.extend(cycle(3).iter().map(|t| t.mul(&eps)));
        let s = RootSum::new(terms);
        assert!(s.sum_value().is_zero());
        let d = decompose(&s).unwrap();
        assert_eq!(d.parts.len(), 3);
        for part in &d.parts {
            assert!(part.prime_cycle.is_some());
            assert!(part.terms.is_minimal_vanishing().unwrap());
        }
        let weights: Vec<usize> = d.parts.iter().map(|p| p.terms.weight()).collect();
        assert_eq!(weights, vec![3, 5, 3]);
    }

    #[test]
    fn decompose_rejects_nonzero() {
        let s = RootSum::new(vec![root(1, 0), root(5, 1)]);
        assert_eq!(decompose(&s), Err(VanishingError::NotVanishing));
    }

    #[test]
    fn enumeration_small_weights() {
        // weight 2: only the antipodal pair
        let classes = enumerate_minimal_vanishing(2, 12).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0], RootSum::new(vec![root(1, 0), root(2, 1)]));

        // weight 3: only the triangle
        let classes = enumerate_minimal_vanishing(3, 21).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0], RootSum::new(cycle(3)));

        // weight 4: nothing at all
        for n in [12u64, 24, 30] {
            assert!(enumerate_minimal_vanishing(4, n).unwrap().is_empty());
        }
    }

    #[test]
    fn enumeration_weight_six_unique_class() {
        let classes = enumerate_minimal_vanishing(6, 30).unwrap();
        assert_eq!(classes.len(), 1);
        let expected = RootSum::new(vec![
            root(6, 1),
            root(6, 5),
            root(5, 1),
            root(5, 2),
            root(5, 3),
            root(5, 4),
        ]);
        assert_eq!(classes[0], expected.canonical_class());
    }

    #[test]
    fn enumeration_bounds() {
        assert!(matches!(
            enumerate_minimal_vanishing(9, 30),
            Err(VanishingError::EnumerationBounds { .. })
        ));
        assert!(matches!(
            enumerate_minimal_vanishing(4, 61),
            Err(VanishingError::EnumerationBounds { .. })
        ));
    }

    #[test]
    fn canonicalization_is_rotation_invariant() {
        let s = RootSum::new(vec![
            root(6, 1),
            root(6, 5),
            root(5, 1),
            root(5, 2),
            root(5, 3),
            root(5, 4),
        ]);
        let canon = s.canonical_class();
        for k in 0..30 {
            let eps = root(30, k);
            assert_eq!(s.rotate(&eps).canonical_class(), canon);
        }
        // idempotent
        assert_eq!(canon.canonical_class(), canon);
    }
}

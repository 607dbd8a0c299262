//! Finite abelian groups in invariant-factor form, written additively.
//!
//! A group is a list of factors [n₁, …, n_r] with n₁ | n₂ | … | n_r and
//! every nᵢ ≥ 2 (the empty list is the trivial group). Elements and linear
//! characters are both integer tuples reduced modulo the factors; the
//! character with exponent tuple a sends g to ζ_E^{Σ aᵢ gᵢ E/nᵢ} for
//! E = exponent(G), which makes evaluation exact integer arithmetic.

mod snf;

use std::collections::BTreeSet;
use std::fmt;

use crate::cyclotomic::{Cyclotomic, RootOfUnity};
use crate::numtheory::{divisors, gcd, lcm, prime_factorization};

/// A finite abelian group ⊕ Z/nᵢ with n₁ | n₂ | … | n_r.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

/// An element of an [`AbelianGroup`], coordinate i reduced mod nᵢ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<u64>,
}

/// A linear character of an [`AbelianGroup`], stored as its exponent tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearCharacter {
    exponents: Vec<u64>,
}

/// A subgroup presented abstractly together with its embedding.
#[derive(Clone, Debug)]
pub struct Subgroup {
    /// Invariant-factor form of the subgroup.
    pub group: AbelianGroup,
    /// Images in the parent of the abstract generators, one per factor.
    pub basis: Vec<GroupElement>,
    /// All subgroup elements in parent coordinates, lexicographic.
    pub elements: Vec<GroupElement>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AbelianError {
    /// `find_separating_element` requires pairwise distinct characters.
    CharactersNotDistinct,
}

impl fmt::Display for AbelianError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbelianError::CharactersNotDistinct => {
                write!(f, "characters must be pairwise distinct")
            }
        }
    }
}

impl std::error::Error for AbelianError {}

impl AbelianGroup {
    /// Builds the group from any factor list, canonicalizing to the
    /// invariant-factor chain. Factors equal to 1 are dropped; 0 is invalid.
    pub fn new(factors: &[u64]) -> Self {
        assert!(
            factors.iter().all(|&n| n != 0),
            "group factors must be positive"
        );
        // collect prime powers per prime, largest first
        let mut powers: std::collections::BTreeMap<u64, Vec<u64>> = Default::default();
        for &n in factors.iter().filter(|&&n| n > 1) {
            for (p, e) in prime_factorization(n) {
                powers.entry(p).or_default().push(p.pow(e));
            }
        }
        for list in powers.values_mut() {
            list.sort_unstable_by(|a, b| b.cmp(a));
        }
        let depth = powers.values().map(|v| v.len()).max().unwrap_or(0);
        let mut invariant: Vec<u64> = (0..depth)
            .map(|i| {
                powers
                    .values()
                    .map(|v| v.get(i).copied().unwrap_or(1))
                    .product()
            })
            .collect();
        invariant.reverse(); // ascending: n₁ | n₂ | … | n_r
        AbelianGroup { factors: invariant }
    }

    pub fn trivial() -> Self {
        AbelianGroup {
            factors: Vec::new(),
        }
    }

    /// Cyclic group of order n.
    pub fn cyclic(n: u64) -> Self {
        AbelianGroup::new(&[n])
    }

    /// Every isomorphism type of order n, each in canonical form, ordered
    /// deterministically.
    pub fn iso_types_of_order(n: u64) -> Vec<AbelianGroup> {
        assert!(n >= 1);
        fn chains(m: u64, cap: u64) -> Vec<Vec<u64>> {
            if m == 1 {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for d in divisors(m) {
                if d >= 2 && cap % d == 0 {
                    for mut chain in chains(m / d, d) {
                        chain.push(d);
                        out.push(chain);
                    }
                }
            }
            out
        }
        let mut types: Vec<AbelianGroup> = chains(n, n)
            .into_iter()
            .map(|factors| AbelianGroup { factors })
            .collect();
        types.sort();
        types
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.factors.iter().fold(1, |m, &n| lcm(m, n))
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.factors.len()],
        }
    }

    pub fn trivial_character(&self) -> LinearCharacter {
        LinearCharacter {
            exponents: vec![0; self.factors.len()],
        }
    }

    /// Element from arbitrary integer coordinates, reduced mod the factors.
    pub fn element(&self, coords: &[i64]) -> GroupElement {
        assert_eq!(
            coords.len(),
            self.factors.len(),
            "coordinate arity mismatch"
        );
        GroupElement {
            coords: coords
                .iter()
                .zip(&self.factors)
                .map(|(&c, &n)| c.rem_euclid(n as i64) as u64)
                .collect(),
        }
    }

    /// Character from arbitrary exponent coordinates, reduced mod the factors.
    pub fn character(&self, exponents: &[i64]) -> LinearCharacter {
        LinearCharacter {
            exponents: self.element(exponents).coords,
        }
    }

    /// All |G| elements in lexicographic order (identity first).
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = Vec::with_capacity(self.order() as usize);
        let mut cur = vec![0u64; self.factors.len()];
        loop {
            out.push(GroupElement {
                coords: cur.clone(),
            });
            // odometer increment, last coordinate fastest
            let mut i = self.factors.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < self.factors[i] {
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    /// All |G| linear characters in lexicographic order; index 0 is trivial.
    pub fn characters(&self) -> Vec<LinearCharacter> {
        self.elements()
            .into_iter()
            .map(|g| LinearCharacter {
                exponents: g.coords,
            })
            .collect()
    }

    /// Position of an element in `elements()` (mixed-radix index).
    pub fn element_index(&self, g: &GroupElement) -> usize {
        let mut idx = 0usize;
        for (c, n) in g.coords.iter().zip(&self.factors) {
            idx = idx * (*n as usize) + (*c as usize);
        }
        idx
    }

    pub fn character_index(&self, ch: &LinearCharacter) -> usize {
        self.element_index(&GroupElement {
            coords: ch.exponents.clone(),
        })
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .zip(&self.factors)
                .map(|((&x, &y), &n)| (x + y) % n)
                .collect(),
        }
    }

    pub fn negate(&self, a: &GroupElement) -> GroupElement {
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&self.factors)
                .map(|(&x, &n)| (n - x) % n)
                .collect(),
        }
    }

    pub fn scalar_mul(&self, m: i64, a: &GroupElement) -> GroupElement {
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&self.factors)
                .map(|(&x, &n)| ((m as i128 * x as i128).rem_euclid(n as i128)) as u64)
                .collect(),
        }
    }

    /// Least m ≥ 1 with m·g = 0.
    pub fn element_order(&self, g: &GroupElement) -> u64 {
        g.coords
            .iter()
            .zip(&self.factors)
            .map(|(&x, &n)| n / gcd(x, n))
            .fold(1, lcm)
    }

    /// The set of element orders {o(g) : g ∈ G}.
    pub fn order_spectrum(&self) -> BTreeSet<u64> {
        self.elements()
            .iter()
            .map(|g| self.element_order(g))
            .collect()
    }

    /// Pointwise product of characters (the dual-group operation).
    pub fn character_product(&self, a: &LinearCharacter, b: &LinearCharacter) -> LinearCharacter {
        LinearCharacter {
            exponents: a
                .exponents
                .iter()
                .zip(&b.exponents)
                .zip(&self.factors)
                .map(|((&x, &y), &n)| (x + y) % n)
                .collect(),
        }
    }

    pub fn character_conjugate(&self, a: &LinearCharacter) -> LinearCharacter {
        LinearCharacter {
            exponents: a
                .exponents
                .iter()
                .zip(&self.factors)
                .map(|(&x, &n)| (n - x) % n)
                .collect(),
        }
    }

    /// λ(g) as the exponent k with λ(g) = ζ_E^k, E = exponent(G).
    pub fn character_exponent(&self, ch: &LinearCharacter, g: &GroupElement) -> u64 {
        let e = self.exponent();
        if e == 1 {
            return 0;
        }
        let mut acc: u128 = 0;
        for ((&a, &x), &n) in ch.exponents.iter().zip(&g.coords).zip(&self.factors) {
            acc += a as u128 * x as u128 % n as u128 * (e / n) as u128;
        }
        (acc % e as u128) as u64
    }

    /// As [`AbelianGroup::character_exponent`] but with the character given
    /// by its enumeration index, decoded on the fly without allocating.
    pub fn character_exponent_at_index(&self, index: usize, g: &GroupElement) -> u64 {
        let e = self.exponent();
        if e == 1 {
            return 0;
        }
        let mut acc: u128 = 0;
        let mut rest = index;
        // lexicographic enumeration: the last coordinate varies fastest
        for j in (0..self.factors.len()).rev() {
            let n = self.factors[j];
            let a = (rest % n as usize) as u128;
            rest /= n as usize;
            acc += a * g.coords[j] as u128 % n as u128 * (e / n) as u128;
        }
        (acc % e as u128) as u64
    }

    /// λ(g) as a canonical root of unity.
    pub fn character_root(&self, ch: &LinearCharacter, g: &GroupElement) -> RootOfUnity {
        RootOfUnity::new(self.exponent(), self.character_exponent(ch, g) as i64)
    }

    /// λ(g) as an exact cyclotomic value.
    pub fn character_value(&self, ch: &LinearCharacter, g: &GroupElement) -> Cyclotomic {
        self.character_root(ch, g).to_cyclotomic()
    }

    /// The subgroup generated by `generators`: abstract invariant factors, a
    /// matching basis, and the full element list.
    pub fn subgroup(&self, generators: &[GroupElement]) -> Subgroup {
        let r = self.factors.len();
        let k = generators.len();
        if k == 0 || r == 0 {
            return Subgroup {
                group: AbelianGroup::trivial(),
                basis: Vec::new(),
                elements: vec![self.identity()],
            };
        }
        for g in generators {
            assert_eq!(g.coords.len(), r, "generator arity mismatch");
        }
        // relation lattice of the map Z^k -> G, v ↦ Σ vⱼ·gⱼ
        let mut stacked = vec![vec![0i128; k + r]; r];
        for i in 0..r {
            for (j, g) in generators.iter().enumerate() {
                stacked[i][j] = g.coords[i] as i128;
            }
            stacked[i][k + i] = self.factors[i] as i128;
        }
        let kernel = snf::smith_normal_form(&stacked);
        // kernel basis of the stacked map: columns r..k+r of v, projected to
        // the first k coordinates, generate the relation lattice
        let mut relations = vec![vec![0i128; k]; k];
        for (col_out, col_in) in (r..k + r).enumerate() {
            for j in 0..k {
                relations[j][col_out] = kernel.v[j][col_in];
            }
        }
        let quot = snf::smith_normal_form(&relations);
        // Z^k / relations ≅ ⊕ Z/dᵢ with coordinates y = u·x; abstract
        // generator i maps to Σⱼ u_inv[j][i] · gⱼ
        let mut factors = Vec::new();
        let mut basis = Vec::new();
        for i in 0..k {
            let d = quot.d[i][i];
            assert!(d != 0, "relation lattice has full rank");
            if d == 1 {
                continue;
            }
            let mut h = self.identity();
            for j in 0..k {
                let c = quot.u_inv[j][i];
                h = self.add(&h, &self.scalar_mul(c as i64, &generators[j]));
            }
            factors.push(d as u64);
            basis.push(h);
        }
        let group = AbelianGroup {
            factors: factors.clone(),
        };
        debug_assert_eq!(group, AbelianGroup::new(&factors));
        // enumerate the subgroup through the abstract coordinates
        let mut elements: Vec<GroupElement> = group
            .elements()
            .iter()
            .map(|c| {
                let mut h = self.identity();
                for (ci, b) in c.coords.iter().zip(&basis) {
                    h = self.add(&h, &self.scalar_mul(*ci as i64, b));
                }
                h
            })
            .collect();
        let count = elements.len();
        elements.sort();
        elements.dedup();
        assert_eq!(
            elements.len(),
            count,
            "abstract coordinates must be faithful"
        );
        Subgroup {
            group,
            basis,
            elements,
        }
    }

    /// The element list of the subgroup generated by `generators`,
    /// lexicographically sorted.
    pub fn subgroup_elements(&self, generators: &[GroupElement]) -> Vec<GroupElement> {
        self.subgroup(generators).elements
    }

    /// Searches for g with λ₁(g), λ₂(g), λ₃(g) pairwise distinct; returns the
    /// first such element in enumeration order. Guaranteed to exist when |G|
    /// is odd.
    pub fn find_separating_element(
        &self,
        l1: &LinearCharacter,
        l2: &LinearCharacter,
        l3: &LinearCharacter,
    ) -> Result<Option<GroupElement>, AbelianError> {
        if l1 == l2 || l1 == l3 || l2 == l3 {
            return Err(AbelianError::CharactersNotDistinct);
        }
        for g in self.elements() {
            let a = self.character_exponent(l1, &g);
            let b = self.character_exponent(l2, &g);
            let c = self.character_exponent(l3, &g);
            if a != b && a != c && b != c {
                return Ok(Some(g));
            }
        }
        Ok(None)
    }
}

impl Subgroup {
    /// Maps abstract subgroup coordinates into the parent group.
    pub fn embed(&self, parent: &AbelianGroup, h: &GroupElement) -> GroupElement {
        assert_eq!(h.coords.len(), self.basis.len());
        let mut acc = parent.identity();
        for (&c, b) in h.coords.iter().zip(&self.basis) {
            acc = parent.add(&acc, &parent.scalar_mul(c as i64, b));
        }
        acc
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

impl LinearCharacter {
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|n| n.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Display for LinearCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exponents.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

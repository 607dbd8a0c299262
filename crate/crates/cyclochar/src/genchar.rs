//! Generalized characters of finite abelian groups: integer coefficient
//! vectors over Irr(G), exact evaluation and inner products, restriction to
//! subgroups, the two-root value predicate, type (k, ℓ) computation, the
//! shape classifier, and the degree-congruence checks.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::abelian::{AbelianGroup, GroupElement, Subgroup};
use crate::cyclotomic::{Cyclotomic, TwoRootDecomposition};
use crate::numtheory::prime_factorization;

/// A Z-linear combination of the irreducible characters of an abelian group,
/// indexed by the group's canonical character enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedCharacter {
    group: AbelianGroup,
    coeffs: Vec<i64>,
}

/// A representation χ = base·ρ + Σ_{i ∈ plus} λᵢ − Σ_{j ∈ minus} λⱼ with all
/// indices distinct; `k = plus.len()`, `ell = minus.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeKL {
    pub k: usize,
    pub ell: usize,
    pub base: i64,
    pub plus_indices: Vec<usize>,
    pub minus_indices: Vec<usize>,
}

/// The shape of a two-root generalized character.
///
/// `Standard` is a·ρ + δ₁λ₁ + δ₂λ₂ (the λᵢ may coincide, absorbing a ±2
/// coefficient). The four outlier forms and the small exceptional form cover
/// the remaining possibilities; a two-root character matching none of them
/// is a theorem violation and is reported as an error, never swallowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Standard {
        base: i64,
        delta1: i64,
        lambda1: Option<usize>,
        delta2: i64,
        lambda2: Option<usize>,
    },
    /// a·ρ + sign·(λ₁ + λ₂ + λ₃)
    OutlierI {
        base: i64,
        sign: i64,
        lambdas: Vec<usize>,
    },
    /// a·ρ + sign·(λ₁ + λ₂ − λ₃); the last index carries the minus sign.
    OutlierII {
        base: i64,
        sign: i64,
        lambdas: Vec<usize>,
    },
    /// a·ρ + sign·(λ₁ + λ₂ + λ₃ + λ₄)
    OutlierIII {
        base: i64,
        sign: i64,
        lambdas: Vec<usize>,
    },
    /// a·ρ + sign·(λ₁ + λ₂ + λ₃ − λ₄); the last index carries the minus sign.
    OutlierIV {
        base: i64,
        sign: i64,
        lambdas: Vec<usize>,
    },
    /// a·ρ + sign·Σ_{i=1}^k λᵢ with k ∈ {5, 6, 7}, only for |G| ≤ 21.
    SmallExceptional {
        base: i64,
        sign: i64,
        k: usize,
        lambdas: Vec<usize>,
    },
    NotTwoRoot,
}

impl Classification {
    pub fn tag(&self) -> &'static str {
        match self {
            Classification::Standard { .. } => "standard",
            Classification::OutlierI { .. } => "outlier-i",
            Classification::OutlierII { .. } => "outlier-ii",
            Classification::OutlierIII { .. } => "outlier-iii",
            Classification::OutlierIV { .. } => "outlier-iv",
            Classification::SmallExceptional { .. } => "small-exceptional",
            Classification::NotTwoRoot => "not-two-root",
        }
    }

    pub fn is_standard(&self) -> bool {
        matches!(self, Classification::Standard { .. })
    }
}

fn idx_list(ixs: &[usize]) -> String {
    let parts: Vec<String> = ixs.iter().map(|i| i.to_string()).collect();
    parts.join(",")
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Standard {
                base,
                delta1,
                lambda1,
                delta2,
                lambda2,
            } => {
                write!(f, "tag=standard base={base}")?;
                match lambda1 {
                    Some(i) => write!(f, " delta1={delta1:+} lambda1={i}")?,
                    None => write!(f, " delta1=0")?,
                }
                match lambda2 {
                    Some(i) => write!(f, " delta2={delta2:+} lambda2={i}"),
                    None => write!(f, " delta2=0"),
                }
            }
            Classification::OutlierI {
                base,
                sign,
                lambdas,
            } => {
                write!(
                    f,
                    "tag=outlier-i base={base} sign={sign:+} lambdas={}",
                    idx_list(lambdas)
                )
            }
            Classification::OutlierII {
                base,
                sign,
                lambdas,
            } => {
                write!(
                    f,
                    "tag=outlier-ii base={base} sign={sign:+} lambdas={}",
                    idx_list(lambdas)
                )
            }
            Classification::OutlierIII {
                base,
                sign,
                lambdas,
            } => {
                write!(
                    f,
                    "tag=outlier-iii base={base} sign={sign:+} lambdas={}",
                    idx_list(lambdas)
                )
            }
            Classification::OutlierIV {
                base,
                sign,
                lambdas,
            } => {
                write!(
                    f,
                    "tag=outlier-iv base={base} sign={sign:+} lambdas={}",
                    idx_list(lambdas)
                )
            }
            Classification::SmallExceptional {
                base,
                sign,
                k,
                lambdas,
            } => {
                write!(
                    f,
                    "tag=small-exceptional base={base} sign={sign:+} k={k} lambdas={}",
                    idx_list(lambdas)
                )
            }
            Classification::NotTwoRoot => write!(f, "tag=not-two-root"),
        }
    }
}

/// A two-root character fit none of the theorem's shapes. Carrying the full
/// coefficient vector makes the report reproducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremViolation {
    pub group: AbelianGroup,
    pub coeffs: Vec<i64>,
}

impl fmt::Display for TheoremViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(
            f,
            "theorem violation: two-root character on {} with coefficients [{}] fits no classified shape",
            self.group,
            parts.join(",")
        )
    }
}

impl std::error::Error for TheoremViolation {}

/// Which degree-congruence statement to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CongruenceMode {
    /// A root-of-unity value on some nonidentity p-element forces
    /// degree ≡ ±1 (mod p).
    SomePElement { p: u64 },
    /// On a p-group with root-of-unity values on all nonidentity elements,
    /// degree ≡ ±1 (mod |P|), weakening to |P|/2 when p = 2 and |P| ≥ 4.
    AllPElements,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CongruenceReport {
    /// The hypothesis is not satisfied; nothing is asserted.
    NotApplicable { reason: String },
    /// degree ≡ residue (mod modulus) with residue ∈ {−1, +1}.
    Holds { modulus: u64, residue: i64 },
    /// The congruence fails; this would falsify the statement.
    Violation { degree: i64, modulus: u64 },
}

impl fmt::Display for CongruenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CongruenceReport::NotApplicable { reason } => write!(f, "not-applicable: {reason}"),
            CongruenceReport::Holds { modulus, residue } => {
                write!(f, "degree == {residue:+} (mod {modulus})")
            }
            CongruenceReport::Violation { degree, modulus } => {
                write!(f, "violation: degree {degree} is not ±1 (mod {modulus})")
            }
        }
    }
}

impl GeneralizedCharacter {
    pub fn new(group: AbelianGroup, coeffs: Vec<i64>) -> Self {
        assert_eq!(
            coeffs.len() as u64,
            group.order(),
            "one coefficient per irreducible"
        );
        GeneralizedCharacter { group, coeffs }
    }

    /// The regular character ρ_G: every coefficient 1, so |G| at the identity
    /// and 0 elsewhere.
    pub fn regular(group: &AbelianGroup) -> Self {
        let n = group.order() as usize;
        GeneralizedCharacter {
            group: group.clone(),
            coeffs: vec![1; n],
        }
    }

    /// The single irreducible with the given enumeration index.
    pub fn irreducible(group: &AbelianGroup, index: usize) -> Self {
        let n = group.order() as usize;
        assert!(index < n);
        let mut coeffs = vec![0; n];
        coeffs[index] = 1;
        GeneralizedCharacter {
            group: group.clone(),
            coeffs,
        }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// χ(1) = Σ coefficients (all degrees are 1 on an abelian group).
    pub fn degree(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Multiplicities of each exponent class in χ(g) = Σ_k counts[k]·ζ_E^k.
    pub fn root_counts(&self, g: &GroupElement) -> Vec<i64> {
        let e = self.group.exponent().max(1) as usize;
        let mut counts = vec![0i64; e];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                counts[self.group.character_exponent_at_index(i, g) as usize] += c;
            }
        }
        counts
    }

    /// Exact evaluation Σ_λ c_λ · λ(g).
    pub fn evaluate(&self, g: &GroupElement) -> Cyclotomic {
        let e = self.group.exponent().max(1);
        Cyclotomic::from_root_counts(e, &self.root_counts(g))
    }

    pub fn negate(&self) -> Self {
        GeneralizedCharacter {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// χ + m·ρ_G.
    pub fn add_regular(&self, m: i64) -> Self {
        GeneralizedCharacter {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|c| c + m).collect(),
        }
    }

    /// Shifts by a multiple of ρ so the least coefficient becomes 0; returns
    /// the shifted character and the multiple that was removed.
    pub fn normalize_min_zero(&self) -> (Self, i64) {
        let min = self.coeffs.iter().copied().min().unwrap_or(0);
        (self.add_regular(-min), min)
    }

    /// Σ c₁(λ)·c₂(λ), the inner product computed on the coefficient side.
    pub fn coefficient_inner_product(&self, other: &Self) -> i64 {
        assert_eq!(self.group, other.group);
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// [χ₁, χ₂] = (1/|G|) Σ_g χ₁(g)·conj(χ₂(g)), summed exactly over the
    /// group. For integer-coefficient characters this equals the coefficient
    /// dot product, which is asserted.
    pub fn inner_product(&self, other: &Self) -> BigRational {
        assert_eq!(self.group, other.group);
        let e = self.group.exponent().max(1) as usize;
        let mut total = vec![0i64; e];
        for g in self.group.elements() {
            let a = self.root_counts(&g);
            let b = other.root_counts(&g);
            // χ₁(g)·conj(χ₂(g)) as a bucket convolution over exponent classes
            for (k, &ak) in a.iter().enumerate() {
                if ak == 0 {
                    continue;
                }
                for (l, &bl) in b.iter().enumerate() {
                    if bl != 0 {
                        total[(k + e - l) % e] += ak * bl;
                    }
                }
            }
        }
        let sum = Cyclotomic::from_root_counts(e as u64, &total);
        let rat = sum
            .as_rational()
            .expect("group sum of χ₁·conj(χ₂) is rational for generalized characters");
        let value = rat / BigRational::from_integer(self.group.order().into());
        assert_eq!(
            value,
            BigRational::from_integer(self.coefficient_inner_product(other).into()),
            "orthogonality: group-sum inner product must match the coefficient dot product"
        );
        value
    }

    /// Restriction to a subgroup, with coefficients over Irr(H) recovered by
    /// inner products on H. All coefficients are integers for valid inputs.
    pub fn restrict(&self, sub: &Subgroup) -> GeneralizedCharacter {
        let h = &sub.group;
        let h_elems = h.elements();
        let values: Vec<Cyclotomic> = h_elems
            .iter()
            .map(|x| self.evaluate(&sub.embed(&self.group, x)))
            .collect();
        let order = BigRational::from_integer(h.order().into());
        let mut coeffs = Vec::with_capacity(h.order() as usize);
        for mu in h.characters() {
            let mut acc = Cyclotomic::zero();
            for (x, v) in h_elems.iter().zip(&values) {
                let conj = h.character_root(&mu, x).inverse().to_cyclotomic();
                acc = &acc + &(v * &conj);
            }
            let rat = acc
                .as_rational()
                .expect("restriction inner product is rational")
                / &order;
            assert!(
                rat.is_integer(),
                "restriction produced a non-integer coefficient; input was not a generalized character"
            );
            let c = rat.to_integer();
            coeffs.push(i64::try_from(&c).expect("restriction coefficient fits i64"));
        }
        let restricted = GeneralizedCharacter {
            group: h.clone(),
            coeffs,
        };
        debug_assert_eq!(
            restricted.degree(),
            self.degree(),
            "restriction preserves the degree"
        );
        restricted
    }

    /// Tests whether every nonidentity value is a sum of at most two roots of
    /// unity; on success returns the witness decomposition for every g ∈ G^#,
    /// keyed by element enumeration index.
    pub fn two_root_values(&self) -> Option<BTreeMap<usize, TwoRootDecomposition>> {
        let mut witnesses = BTreeMap::new();
        for (idx, g) in self.group.elements().iter().enumerate().skip(1) {
            let value = self.evaluate(g);
            let decomposition = value.two_root_decomposition()?;
            debug_assert_eq!(
                decomposition.value(),
                value,
                "witness must re-evaluate exactly"
            );
            witnesses.insert(idx, decomposition);
        }
        Some(witnesses)
    }

    /// Writes χ as base·ρ + (k distinct irreducibles) − (ℓ distinct others)
    /// when the coefficients span at most {a−1, a, a+1}; among the valid
    /// representations the one minimizing k+ℓ (then k) is returned.
    pub fn type_of(&self) -> Option<TypeKL> {
        let min = *self.coeffs.iter().min().unwrap();
        let max = *self.coeffs.iter().max().unwrap();
        if max - min > 2 {
            return None;
        }
        let mut best: Option<TypeKL> = None;
        for base in (max - 1)..=(min + 1) {
            let plus: Vec<usize> = self
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c == base + 1)
                .map(|(i, _)| i)
                .collect();
            let minus: Vec<usize> = self
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c == base - 1)
                .map(|(i, _)| i)
                .collect();
            let candidate = TypeKL {
                k: plus.len(),
                ell: minus.len(),
                base,
                plus_indices: plus,
                minus_indices: minus,
            };
            let better = match &best {
                None => true,
                Some(b) => (candidate.k + candidate.ell, candidate.k) < (b.k + b.ell, b.k),
            };
            if better {
                best = Some(candidate);
            }
        }
        best
    }

    /// Classifies a two-root character into the theorem's shapes, preferring
    /// Standard, then the outliers in order, then SmallExceptional. A
    /// two-root character matching nothing raises [`TheoremViolation`].
    pub fn classify(&self) -> Result<Classification, TheoremViolation> {
        if self.two_root_values().is_none() {
            return Ok(Classification::NotTwoRoot);
        }
        match self.match_shapes() {
            Some(c) => Ok(c),
            None => Err(TheoremViolation {
                group: self.group.clone(),
                coeffs: self.coeffs.clone(),
            }),
        }
    }

    fn match_shapes(&self) -> Option<Classification> {
        let min = *self.coeffs.iter().min().unwrap();
        let max = *self.coeffs.iter().max().unwrap();
        let bases = (min - 2)..=(max + 2);

        // Standard: deviations from the base have total absolute size ≤ 2.
        // Among eligible bases take the one with the least deviation weight
        // (ties to the smaller base) so e.g. a·ρ reports as (a, 0, 0).
        let mut standard: Option<(i64, i64, Vec<(usize, i64)>)> = None;
        for base in bases.clone() {
            let devs: Vec<(usize, i64)> = self
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != base)
                .map(|(i, &c)| (i, c - base))
                .collect();
            let weight: i64 = devs.iter().map(|(_, d)| d.abs()).sum();
            if weight <= 2 && standard.as_ref().map_or(true, |(w, _, _)| weight < *w) {
                standard = Some((weight, base, devs));
            }
        }
        if let Some((_, base, devs)) = standard {
            let mut parts: Vec<(i64, usize)> = Vec::new();
            for &(i, d) in &devs {
                for _ in 0..d.abs() {
                    parts.push((d.signum(), i));
                }
            }
            let (delta1, lambda1) = parts.first().map_or((0, None), |&(s, i)| (s, Some(i)));
            let (delta2, lambda2) = parts.get(1).map_or((0, None), |&(s, i)| (s, Some(i)));
            return Some(Classification::Standard {
                base,
                delta1,
                lambda1,
                delta2,
                lambda2,
            });
        }

        // Remaining shapes need every deviation to be ±1; collect the
        // (base, plus-indices, minus-indices) patterns, then match in strict
        // preference order across all bases.
        let mut patterns: Vec<(i64, Vec<usize>, Vec<usize>)> = Vec::new();
        for base in bases {
            let devs: Vec<(usize, i64)> = self
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != base)
                .map(|(i, &c)| (i, c - base))
                .collect();
            if devs.is_empty() || devs.iter().any(|(_, d)| d.abs() != 1) {
                continue;
            }
            let ups: Vec<usize> = devs
                .iter()
                .filter(|(_, d)| *d == 1)
                .map(|(i, _)| *i)
                .collect();
            let downs: Vec<usize> = devs
                .iter()
                .filter(|(_, d)| *d == -1)
                .map(|(i, _)| *i)
                .collect();
            patterns.push((base, ups, downs));
        }
        for (want_up, want_down) in [(3, 0), (2, 1), (4, 0), (3, 1)] {
            for (base, ups, downs) in &patterns {
                let shape = match_signed_shape(*base, ups, downs, want_up, want_down);
                if shape.is_some() {
                    return shape;
                }
            }
        }
        if self.group.order() <= 21 {
            for k in 5..=7usize {
                for (base, ups, downs) in &patterns {
                    if ups.len() == k && downs.is_empty() {
                        return Some(Classification::SmallExceptional {
                            base: *base,
                            sign: 1,
                            k,
                            lambdas: ups.clone(),
                        });
                    }
                    if downs.len() == k && ups.is_empty() {
                        return Some(Classification::SmallExceptional {
                            base: *base,
                            sign: -1,
                            k,
                            lambdas: downs.clone(),
                        });
                    }
                }
            }
        }
        None
    }

    /// Degree congruences forced by root-of-unity values on p-elements.
    pub fn check_degree_congruence(&self, mode: CongruenceMode) -> CongruenceReport {
        let order = self.group.order();
        match mode {
            CongruenceMode::SomePElement { p } => {
                if order % p != 0 {
                    return CongruenceReport::NotApplicable {
                        reason: format!("{p} does not divide the group order {order}"),
                    };
                }
                let found = self.group.elements().iter().skip(1).any(|g| {
                    let o = self.group.element_order(g);
                    is_power_of(o, p) && self.evaluate(g).as_root_of_unity().is_some()
                });
                if !found {
                    return CongruenceReport::NotApplicable {
                        reason: format!("no nonidentity {p}-element takes a root-of-unity value"),
                    };
                }
                residue_report(self.degree(), p)
            }
            CongruenceMode::AllPElements => {
                let factorization = prime_factorization(order);
                if factorization.len() != 1 {
                    return CongruenceReport::NotApplicable {
                        reason: format!("group of order {order} is not a p-group"),
                    };
                }
                let (p, _) = factorization[0];
                let all_roots = self
                    .group
                    .elements()
                    .iter()
                    .skip(1)
                    .all(|g| self.evaluate(g).as_root_of_unity().is_some());
                if !all_roots {
                    return CongruenceReport::NotApplicable {
                        reason: "values on nonidentity elements are not all roots of unity".into(),
                    };
                }
                let modulus = if p == 2 && order >= 4 {
                    order / 2
                } else {
                    order
                };
                residue_report(self.degree(), modulus)
            }
        }
    }
}

/// Matches an all-±1 deviation pattern against one outlier shape: `want_up`
/// additions and `want_down` subtractions, or the global negation.
fn match_signed_shape(
    base: i64,
    ups: &[usize],
    downs: &[usize],
    want_up: usize,
    want_down: usize,
) -> Option<Classification> {
    let build = |sign: i64, plus: &[usize], minus: &[usize]| -> Classification {
        let mut lambdas: Vec<usize> = plus.to_vec();
        lambdas.extend_from_slice(minus);
        match (want_up, want_down) {
            (3, 0) => Classification::OutlierI {
                base,
                sign,
                lambdas,
            },
            (2, 1) => Classification::OutlierII {
                base,
                sign,
                lambdas,
            },
            (4, 0) => Classification::OutlierIII {
                base,
                sign,
                lambdas,
            },
            (3, 1) => Classification::OutlierIV {
                base,
                sign,
                lambdas,
            },
            _ => unreachable!("outlier shapes only"),
        }
    };
    if ups.len() == want_up && downs.len() == want_down {
        return Some(build(1, ups, downs));
    }
    if downs.len() == want_up && ups.len() == want_down {
        return Some(build(-1, downs, ups));
    }
    None
}

fn is_power_of(order: u64, p: u64) -> bool {
    let mut o = order;
    if o < p {
        return false;
    }
    while o % p == 0 {
        o /= p;
    }
    o == 1
}

fn residue_report(degree: i64, modulus: u64) -> CongruenceReport {
    let m = modulus as i64;
    let r = degree.rem_euclid(m);
    if r == 1 % m {
        CongruenceReport::Holds {
            modulus,
            residue: 1,
        }
    } else if r == (-1i64).rem_euclid(m) {
        CongruenceReport::Holds {
            modulus,
            residue: -1,
        }
    } else {
        CongruenceReport::Violation { degree, modulus }
    }
}

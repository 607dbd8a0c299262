//! Prime graphs built from order spectra: connected components, induced
//! subgraphs Γ′ (vertex 2 discarded) and Γ″ (2 and 3 discarded), the
//! degree-residue partition of the primes ≥ 5, the component checkers, and
//! the CRT construction of class functions with prescribed values per
//! component.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::chartable::{CharacterTable, ClassFunction};
use crate::cyclotomic::Cyclotomic;
use crate::numtheory::{crt, largest_divisor_supported_on, prime_divisors};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeGraphError {
    EmptySpectrum,
    MissingIdentityOrder,
    /// The partition's primes do not match the graph's vertex set.
    PartitionMismatch {
        expected: BTreeSet<u64>,
        got: BTreeSet<u64>,
    },
    /// Component list does not partition the primes of the order.
    BadComponentPartition,
    ValuesNotDistinct,
    /// A class's element order meets more than one component.
    StraddlingClass {
        class: usize,
        order: u64,
    },
}

impl fmt::Display for PrimeGraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeGraphError::EmptySpectrum => write!(f, "order spectrum is empty"),
            PrimeGraphError::MissingIdentityOrder => write!(f, "order spectrum must contain 1"),
            PrimeGraphError::PartitionMismatch { expected, got } => {
                write!(
                    f,
                    "partition primes {got:?} do not match graph vertices {expected:?}"
                )
            }
            PrimeGraphError::BadComponentPartition => {
                write!(f, "components must partition the primes of the order")
            }
            PrimeGraphError::ValuesNotDistinct => write!(f, "component values must be distinct"),
            PrimeGraphError::StraddlingClass { class, order } => {
                write!(
                    f,
                    "class {class} of element order {order} meets several components"
                )
            }
        }
    }
}

impl std::error::Error for PrimeGraphError {}

/// The prime graph: vertices are primes, p and q are adjacent iff the
/// source spectrum contains a multiple of pq.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeGraph {
    vertices: BTreeSet<u64>,
    edges: BTreeSet<(u64, u64)>,
}

impl PrimeGraph {
    /// Builds the graph of a group from its set of element orders.
    pub fn from_spectrum(spectrum: &BTreeSet<u64>) -> Result<PrimeGraph, PrimeGraphError> {
        if spectrum.is_empty() {
            return Err(PrimeGraphError::EmptySpectrum);
        }
        if !spectrum.contains(&1) {
            return Err(PrimeGraphError::MissingIdentityOrder);
        }
        let mut vertices = BTreeSet::new();
        let mut edges = BTreeSet::new();
        for &n in spectrum {
            let ps = prime_divisors(n);
            vertices.extend(ps.iter().copied());
            for (i, &p) in ps.iter().enumerate() {
                for &q in &ps[i + 1..] {
                    edges.insert((p, q));
                }
            }
        }
        Ok(PrimeGraph { vertices, edges })
    }

    pub fn vertices(&self) -> &BTreeSet<u64> {
        &self.vertices
    }

    /// Edges as ordered pairs (p, q) with p < q.
    pub fn edges(&self) -> &BTreeSet<(u64, u64)> {
        &self.edges
    }

    pub fn has_edge(&self, p: u64, q: u64) -> bool {
        self.edges.contains(&(p.min(q), p.max(q)))
    }

    /// Connected components, sorted by least vertex.
    pub fn components(&self) -> Vec<BTreeSet<u64>> {
        let mut remaining: BTreeSet<u64> = self.vertices.clone();
        let mut out = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                if !comp.insert(v) {
                    continue;
                }
                remaining.remove(&v);
                for &(a, b) in &self.edges {
                    if a == v && !comp.contains(&b) {
                        stack.push(b);
                    } else if b == v && !comp.contains(&a) {
                        stack.push(a);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The induced subgraph after deleting the given vertices.
    pub fn induced_without(&self, remove: &BTreeSet<u64>) -> PrimeGraph {
        let vertices: BTreeSet<u64> = self
            .vertices
            .iter()
            .copied()
            .filter(|v| !remove.contains(v))
            .collect();
        let edges: BTreeSet<(u64, u64)> = self
            .edges
            .iter()
            .copied()
            .filter(|(a, b)| vertices.contains(a) && vertices.contains(b))
            .collect();
        PrimeGraph { vertices, edges }
    }

    /// Γ′: the vertex 2 discarded.
    pub fn gamma_prime(&self) -> PrimeGraph {
        self.induced_without(&[2].into_iter().collect())
    }

    /// Γ″: the vertices 2 and 3 discarded.
    pub fn gamma_double_prime(&self) -> PrimeGraph {
        self.induced_without(&[2, 3].into_iter().collect())
    }
}

impl fmt::Display for PrimeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        let es: Vec<String> = self
            .edges
            .iter()
            .map(|(a, b)| format!("{{{a},{b}}}"))
            .collect();
        write!(
            f,
            "vertices {{{}}} edges {{{}}}",
            vs.join(","),
            es.join(",")
        )
    }
}

/// Labels in {−2, …, 2} for the primes ≥ 5, determined by the residue of a
/// character degree. Primes with no admissible residue are reported, never
/// dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiPartition {
    pub labels: BTreeMap<u64, i64>,
    /// Primes where degree mod p misses {−2, …, 2}, with the actual residue.
    pub missing: BTreeMap<u64, u64>,
}

impl PiPartition {
    /// The label class π_i.
    pub fn class(&self, label: i64) -> BTreeSet<u64> {
        self.labels
            .iter()
            .filter(|(_, &l)| l == label)
            .map(|(&p, _)| p)
            .collect()
    }

    pub fn is_total(&self) -> bool {
        self.missing.is_empty()
    }
}

/// For each prime p ≥ 5 the unique a ∈ {−2, …, 2} with degree ≡ a (mod p);
/// the five labels are distinct residues mod p ≥ 5, so the choice is
/// well-defined.
pub fn pi_partition(degree: i64, primes: &BTreeSet<u64>) -> PiPartition {
    let mut labels = BTreeMap::new();
    let mut missing = BTreeMap::new();
    for &p in primes {
        assert!(p >= 5, "partition applies to primes >= 5 only");
        let r = degree.rem_euclid(p as i64) as u64;
        match (-2i64..=2).find(|a| a.rem_euclid(p as i64) as u64 == r) {
            Some(a) => {
                labels.insert(p, a);
            }
            None => {
                missing.insert(p, r);
            }
        }
    }
    PiPartition { labels, missing }
}

/// Outcome of the component check on Γ″.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCheck {
    pub holds: bool,
    /// Edges of Γ″ joining two different label classes.
    pub crossing_edges: Vec<(u64, u64)>,
}

/// Checks that each nonempty label class induces a union of whole connected
/// components of Γ″ = g minus {2, 3}. Equivalently, no Γ″ edge crosses
/// between two classes; crossing edges are returned as the certificate.
pub fn check_components_respect_partition(
    g: &PrimeGraph,
    partition: &PiPartition,
) -> Result<ComponentCheck, PrimeGraphError> {
    let gamma2 = g.gamma_double_prime();
    let labelled: BTreeSet<u64> = partition.labels.keys().copied().collect();
    if labelled != gamma2.vertices {
        return Err(PrimeGraphError::PartitionMismatch {
            expected: gamma2.vertices.clone(),
            got: labelled,
        });
    }
    let crossing_edges: Vec<(u64, u64)> = gamma2
        .edges
        .iter()
        .copied()
        .filter(|(p, q)| partition.labels[p] != partition.labels[q])
        .collect();
    Ok(ComponentCheck {
        holds: crossing_edges.is_empty(),
        crossing_edges,
    })
}

/// Outcome of the Γ′ disconnection check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DisconnectionCheck {
    /// One of π₀, π₁ ∪ π₋₁, π₂ ∪ π₋₂ is empty; nothing is asserted.
    NotApplicable,
    /// The hypothesis holds and Γ′ is disconnected.
    DisconnectedConfirmed { components: Vec<BTreeSet<u64>> },
    /// The hypothesis holds but Γ′ is connected; this would falsify the
    /// statement on genuine two-root data.
    Violation { gamma_prime: PrimeGraph },
}

/// When π₀, π₁ ∪ π₋₁, and π₂ ∪ π₋₂ are all nonempty, Γ′ (the graph minus
/// the vertex 2) must be disconnected.
pub fn check_gamma_prime_disconnected(
    g: &PrimeGraph,
    partition: &PiPartition,
) -> Result<DisconnectionCheck, PrimeGraphError> {
    let gamma2 = g.gamma_double_prime();
    let labelled: BTreeSet<u64> = partition.labels.keys().copied().collect();
    if labelled != gamma2.vertices {
        return Err(PrimeGraphError::PartitionMismatch {
            expected: gamma2.vertices.clone(),
            got: labelled,
        });
    }
    let zero = partition.class(0);
    let ones: BTreeSet<u64> = partition
        .class(1)
        .union(&partition.class(-1))
        .copied()
        .collect();
    let twos: BTreeSet<u64> = partition
        .class(2)
        .union(&partition.class(-2))
        .copied()
        .collect();
    if zero.is_empty() || ones.is_empty() || twos.is_empty() {
        return Ok(DisconnectionCheck::NotApplicable);
    }
    let gamma_prime = g.gamma_prime();
    let components = gamma_prime.components();
    if components.len() >= 2 {
        Ok(DisconnectionCheck::DisconnectedConfirmed { components })
    } else {
        Ok(DisconnectionCheck::Violation { gamma_prime })
    }
}

/// The least nonnegative degree a with a ≡ values[i] (mod order_{π_i}),
/// where order_{π_i} is the largest divisor of `order` supported on the
/// component π_i. The components must partition the primes of `order` and
/// the values must be distinct.
pub fn crt_degree(
    components: &[BTreeSet<u64>],
    values: &[i64],
    order: u64,
) -> Result<u64, PrimeGraphError> {
    if components.len() != values.len() {
        return Err(PrimeGraphError::BadComponentPartition);
    }
    let mut distinct = values.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != values.len() {
        return Err(PrimeGraphError::ValuesNotDistinct);
    }
    let mut union: BTreeSet<u64> = BTreeSet::new();
    let mut total = 0usize;
    for comp in components {
        union.extend(comp.iter().copied());
        total += comp.len();
    }
    let order_primes: BTreeSet<u64> = prime_divisors(order).into_iter().collect();
    if union != order_primes || total != union.len() {
        return Err(PrimeGraphError::BadComponentPartition);
    }
    let congruences: Vec<(i64, u64)> = components
        .iter()
        .zip(values)
        .map(|(comp, &a)| {
            let primes: Vec<u64> = comp.iter().copied().collect();
            (a, largest_divisor_supported_on(order, &primes))
        })
        .collect();
    Ok(crt(&congruences).expect("component moduli are pairwise coprime"))
}

/// Builds the class function that takes `values[i]` on the classes whose
/// element orders are π_i-numbers and the CRT degree at the identity. Fails
/// if some class order meets more than one component.
pub fn crt_class_function(
    table: &CharacterTable,
    components: &[BTreeSet<u64>],
    values: &[i64],
) -> Result<ClassFunction, PrimeGraphError> {
    let degree = crt_degree(components, values, table.order)?;
    let mut out = Vec::with_capacity(table.classes.len());
    for (idx, class) in table.classes.iter().enumerate() {
        if class.element_order == 1 {
            out.push(Cyclotomic::from_integer(degree as i64));
            continue;
        }
        let ps: BTreeSet<u64> = prime_divisors(class.element_order).into_iter().collect();
        let homes: Vec<usize> = components
            .iter()
            .enumerate()
            .filter(|(_, comp)| ps.is_subset(comp))
            .map(|(i, _)| i)
            .collect();
        match homes.as_slice() {
            [i] => out.push(Cyclotomic::from_integer(values[*i])),
            _ => {
                return Err(PrimeGraphError::StraddlingClass {
                    class: idx,
                    order: class.element_order,
                })
            }
        }
    }
    Ok(ClassFunction::new(out))
}

//! Bundled character-table corpus: the dihedral group of order 30 (the
//! semidirect product C15⋊C2 with inverting involution), SL(2,3) with the
//! constituent of its index-8 permutation character, and the alternating
//! group on 5 points as the three-component prime-graph instance.
//!
//! Every bundled file is generated by the builders below from standard
//! constructions and then frozen as text; the round-trip tests keep the
//! files and the builders in lockstep, and `validate` re-certifies the
//! orthogonality relations on every load.

use crate::cyclotomic::Cyclotomic;

use super::{parse_table_file, CharacterTable, ClassFunction, ConjugacyClass, TableFile};

const DIHEDRAL30: &str = include_str!("data/dihedral30.ctab");
const SL23: &str = include_str!("data/sl23.ctab");
const A5: &str = include_str!("data/a5.ctab");

fn load(text: &str, which: &str) -> TableFile {
    let file = parse_table_file(text)
        .unwrap_or_else(|e| panic!("bundled {which} table is unreadable: {e}"));
    file.table
        .validate()
        .unwrap_or_else(|e| panic!("bundled {which} table fails validation: {e}"));
    file
}

/// The dihedral group of order 30 with the degree-16 class function that
/// vanishes on involutions and takes λ₁ + λ₂ − 1 on the rotation classes.
pub fn dihedral30() -> TableFile {
    load(DIHEDRAL30, "dihedral30")
}

/// SL(2,3) with the degree-7 constituent of the permutation character on
/// the cosets of a Sylow 3-subgroup.
pub fn sl23() -> TableFile {
    load(SL23, "sl23")
}

/// The alternating group on 5 points; its prime graph has the three
/// components {2}, {3}, {5}.
pub fn alternating5() -> TableFile {
    load(A5, "a5")
}

/// Dihedral group of order 2m for odd m: the identity class, (m−1)/2
/// rotation pair classes, and one class of all m reflections; irreducibles
/// are the two linear characters and (m−1)/2 characters of degree 2.
pub fn build_dihedral_table(m: u64) -> CharacterTable {
    assert!(m >= 3 && m % 2 == 1, "dihedral builder expects odd m >= 3");
    let half = (m - 1) / 2;
    let mut classes = vec![ConjugacyClass {
        size: 1,
        element_order: 1,
        inverse: 0,
    }];
    for j in 1..=half {
        classes.push(ConjugacyClass {
            size: 2,
            element_order: m / crate::numtheory::gcd(j, m),
            inverse: j as usize,
        });
    }
    classes.push(ConjugacyClass {
        size: m,
        element_order: 2,
        inverse: half as usize + 1,
    });

    let k = classes.len();
    let mut irreducibles = Vec::with_capacity(k);
    irreducibles.push(vec![Cyclotomic::one(); k]);
    let mut sign = vec![Cyclotomic::one(); k];
    sign[k - 1] = Cyclotomic::from_integer(-1);
    irreducibles.push(sign);
    for i in 1..=half {
        let mut row = Vec::with_capacity(k);
        row.push(Cyclotomic::from_integer(2));
        for j in 1..=half {
            let e = (i * j) % m;
            row.push(&Cyclotomic::zeta(m, e as i64) + &Cyclotomic::zeta(m, -(e as i64)));
        }
        row.push(Cyclotomic::zero());
        irreducibles.push(row);
    }
    CharacterTable {
        name: format!("dihedral{}", 2 * m),
        order: 2 * m,
        classes,
        irreducibles,
    }
}

/// The degree-16 class function on the order-30 dihedral table: zero on the
/// involution class and λ₁(x) + λ₂(x) − 1 on the rotation classes, where
/// the λᵢ are the two nontrivial characters of C15 with kernel containing
/// the subgroup of order 5. The value at a rotation r^j is 1 when 3 | j and
/// −2 otherwise; the identity value 16 is the CRT degree for (0, 1) on the
/// components {2} and {3, 5}.
pub fn build_dihedral30_function() -> ClassFunction {
    let mut values = vec![Cyclotomic::from_integer(16)];
    for j in 1..=7u64 {
        values.push(Cyclotomic::from_integer(if j % 3 == 0 { 1 } else { -2 }));
    }
    values.push(Cyclotomic::zero());
    ClassFunction::new(values)
}

/// SL(2,3): classes [1, −1, order-4, t, t², −t, −t²] of sizes
/// [1, 1, 6, 4, 4, 4, 4]; the linear characters factor through the C3
/// quotient, the three degree-2 characters are the faithful ones, and the
/// degree-3 character is inflated from the alternating group on 4 points.
pub fn build_sl23_table() -> CharacterTable {
    let w = || Cyclotomic::zeta(3, 1);
    let w2 = || Cyclotomic::zeta(3, 2);
    let one = || Cyclotomic::one();
    let int = Cyclotomic::from_integer;
    let classes = vec![
        ConjugacyClass {
            size: 1,
            element_order: 1,
            inverse: 0,
        },
        ConjugacyClass {
            size: 1,
            element_order: 2,
            inverse: 1,
        },
        ConjugacyClass {
            size: 6,
            element_order: 4,
            inverse: 2,
        },
        ConjugacyClass {
            size: 4,
            element_order: 3,
            inverse: 4,
        },
        ConjugacyClass {
            size: 4,
            element_order: 3,
            inverse: 3,
        },
        ConjugacyClass {
            size: 4,
            element_order: 6,
            inverse: 6,
        },
        ConjugacyClass {
            size: 4,
            element_order: 6,
            inverse: 5,
        },
    ];
    let irreducibles = vec![
        vec![one(), one(), one(), one(), one(), one(), one()],
        vec![one(), one(), one(), w(), w2(), w(), w2()],
        vec![one(), one(), one(), w2(), w(), w2(), w()],
        vec![int(2), int(-2), int(0), int(-1), int(-1), one(), one()],
        vec![int(2), int(-2), int(0), -&w(), -&w2(), w(), w2()],
        vec![int(2), int(-2), int(0), -&w2(), -&w(), w2(), w()],
        vec![int(3), int(3), int(-1), int(0), int(0), int(0), int(0)],
    ];
    CharacterTable {
        name: "sl23".into(),
        order: 24,
        classes,
        irreducibles,
    }
}

/// The constituent χ of the permutation character 1 + χ of SL(2,3) acting
/// on the cosets of a Sylow 3-subgroup: the fixed-point counts are
/// (8, 0, 0, 2, 2, 0, 0), so χ has degree 7 and takes ±1 off the identity.
pub fn build_sl23_perm_function() -> ClassFunction {
    let int = Cyclotomic::from_integer;
    ClassFunction::new(vec![
        int(7),
        int(-1),
        int(-1),
        int(1),
        int(1),
        int(-1),
        int(-1),
    ])
}

/// The alternating group on 5 points: classes [1, 2a, 3a, 5a, 5b] of sizes
/// [1, 15, 20, 12, 12]; the degree-3 characters take the golden-ratio
/// values (1 ± √5)/2 = −ζ₅² − ζ₅³ and −ζ₅ − ζ₅⁴ on the two 5-classes.
pub fn build_alternating5_table() -> CharacterTable {
    let int = Cyclotomic::from_integer;
    let phi_plus = || -&Cyclotomic::zeta(5, 2) - &Cyclotomic::zeta(5, 3);
    let phi_minus = || -&Cyclotomic::zeta(5, 1) - &Cyclotomic::zeta(5, 4);
    let classes = vec![
        ConjugacyClass {
            size: 1,
            element_order: 1,
            inverse: 0,
        },
        ConjugacyClass {
            size: 15,
            element_order: 2,
            inverse: 1,
        },
        ConjugacyClass {
            size: 20,
            element_order: 3,
            inverse: 2,
        },
        ConjugacyClass {
            size: 12,
            element_order: 5,
            inverse: 3,
        },
        ConjugacyClass {
            size: 12,
            element_order: 5,
            inverse: 4,
        },
    ];
    let irreducibles = vec![
        vec![int(1), int(1), int(1), int(1), int(1)],
        vec![int(3), int(-1), int(0), phi_plus(), phi_minus()],
        vec![int(3), int(-1), int(0), phi_minus(), phi_plus()],
        vec![int(4), int(0), int(1), int(-1), int(-1)],
        vec![int(5), int(1), int(-1), int(0), int(0)],
    ];
    CharacterTable {
        name: "a5".into(),
        order: 60,
        classes,
        irreducibles,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartable::render_table_file;

    #[test]
    fn builders_validate() {
        build_dihedral_table(15).validate().unwrap();
        build_dihedral_table(5).validate().unwrap();
        build_sl23_table().validate().unwrap();
        build_alternating5_table().validate().unwrap();
    }

    #[test]
    fn bundled_files_match_the_builders() {
        let dihedral = TableFile {
            table: build_dihedral_table(15),
            functions: vec![("chi16".into(), build_dihedral30_function())],
        };
        assert_eq!(
            render_table_file(&dihedral),
            DIHEDRAL30,
            "dihedral30.ctab drifted"
        );

        let sl = TableFile {
            table: build_sl23_table(),
            functions: vec![("perm7".into(), build_sl23_perm_function())],
        };
        assert_eq!(render_table_file(&sl), SL23, "sl23.ctab drifted");

        let a5 = TableFile {
            table: build_alternating5_table(),
            functions: vec![],
        };
        assert_eq!(render_table_file(&a5), A5, "a5.ctab drifted");
    }

    #[test]
    fn corpus_round_trips_through_the_parser() {
        for file in [dihedral30(), sl23(), alternating5()] {
            let rendered = render_table_file(&file);
            let reparsed = parse_table_file(&rendered).unwrap();
            assert_eq!(reparsed.table, file.table);
            assert_eq!(render_table_file(&reparsed), rendered);
        }
    }

    #[test]
    #[ignore]
    fn print_corpus() {
        // regenerates the bundled files; run with --nocapture and redirect
        let dihedral = TableFile {
            table: build_dihedral_table(15),
            functions: vec![("chi16".into(), build_dihedral30_function())],
        };
        println!("=== dihedral30.ctab ===");
        print!("{}", render_table_file(&dihedral));
        let sl = TableFile {
            table: build_sl23_table(),
            functions: vec![("perm7".into(), build_sl23_perm_function())],
        };
        println!("=== sl23.ctab ===");
        print!("{}", render_table_file(&sl));
        let a5 = TableFile {
            table: build_alternating5_table(),
            functions: vec![],
        };
        println!("=== a5.ctab ===");
        print!("{}", render_table_file(&a5));
    }
}

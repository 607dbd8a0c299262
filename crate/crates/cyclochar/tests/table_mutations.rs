//! Mutation testing for the table validator: the bundled tables validate,
//! and twenty systematic corruptions are each rejected.

use cyclochar::chartable::{corpus, TableError};
use cyclochar::cyclotomic::Cyclotomic;

#[test]
fn bundled_tables_validate() {
    for file in [corpus::dihedral30(), corpus::sl23(), corpus::alternating5()] {
        file.table.validate().unwrap();
    }
}

#[test]
fn twenty_mutations_are_rejected() {
    let mut rejected = 0usize;
    let mut reject = |result: Result<(), TableError>, what: &str| {
        assert!(result.is_err(), "mutation not caught: {what}");
        rejected += 1;
    };

    // 1-8: perturb one character value in each corpus table (two per table,
    // plus two more on the dihedral rows)
    for (which, positions) in [
        (0usize, vec![(2usize, 1usize), (3, 4), (4, 2), (8, 6)]),
        (1, vec![(3, 3), (5, 2)]),
        (2, vec![(1, 3), (4, 1)]),
    ] {
        for (row, col) in positions {
            let mut t = match which {
                0 => corpus::dihedral30().table,
                1 => corpus::sl23().table,
                _ => corpus::alternating5().table,
            };
            t.irreducibles[row][col] = &t.irreducibles[row][col] + &Cyclotomic::one();
            reject(t.validate(), &format!("table {which} value ({row},{col})"));
        }
    }

    // 9-11: wrong class size in each table
    for which in 0..3usize {
        let mut t = match which {
            0 => corpus::dihedral30().table,
            1 => corpus::sl23().table,
            _ => corpus::alternating5().table,
        };
        t.classes[1].size += 1;
        reject(t.validate(), &format!("table {which} class size"));
    }

    // 12-14: broken inverse maps
    let mut t = corpus::sl23().table;
    t.classes[3].inverse = 3; // t is not self-inverse
    reject(t.validate(), "sl23 self-inverse");
    let mut t = corpus::sl23().table;
    t.classes[5].inverse = 4; // points at a class of different element order
    reject(t.validate(), "sl23 cross inverse");
    let mut t = corpus::dihedral30().table;
    t.classes[2].inverse = 99;
    reject(t.validate(), "dihedral out-of-range inverse");

    // 15: broken identity class
    let mut t = corpus::dihedral30().table;
    t.classes[0].element_order = 2;
    reject(t.validate(), "identity class order");

    // 16: degree zero
    let mut t = corpus::sl23().table;
    t.irreducibles[0][0] = Cyclotomic::zero();
    reject(t.validate(), "zero degree");

    // 17: degree square sum off
    let mut t = corpus::alternating5().table;
    t.irreducibles[3][0] = Cyclotomic::from_integer(5);
    reject(t.validate(), "degree square sum");

    // 18: wrong group order
    let mut t = corpus::dihedral30().table;
    t.order = 32;
    reject(t.validate(), "group order");

    // 19: a duplicated irreducible row
    let mut t = corpus::sl23().table;
    t.irreducibles[2] = t.irreducibles[1].clone();
    reject(t.validate(), "duplicate row");

    // 20: conjugate/inverse mismatch via swapped conjugate columns in one row
    let mut t = corpus::sl23().table;
    let v = t.irreducibles[1][3].clone();
    t.irreducibles[1][3] = t.irreducibles[1][4].clone();
    t.irreducibles[1][4] = v;
    reject(t.validate(), "swapped conjugate pair");

    assert_eq!(rejected, 20);
}

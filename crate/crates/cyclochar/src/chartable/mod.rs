//! Ingestion and exact validation of character tables, class functions over
//! them, and the generalized-character criterion by integrality of the
//! inner products against a complete validated table.
//!
//! Tables are never computed from group presentations here: they enter as
//! data, are checked exactly against the orthogonality relations, and only
//! then feed the rest of the library.

pub mod corpus;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclotomic::{parse_cyclotomic, Cyclotomic, ParseError, TwoRootDecomposition};
use crate::numtheory::divisors;

/// One conjugacy class: its size, the order of its elements, and the index
/// of the class of inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub size: u64,
    pub element_order: u64,
    pub inverse: usize,
}

/// A complete complex character table; rows are irreducible characters,
/// columns are classes, column 0 is the identity class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub name: String,
    pub order: u64,
    pub classes: Vec<ConjugacyClass>,
    pub irreducibles: Vec<Vec<Cyclotomic>>,
}

/// A class function: one cyclotomic value per class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(values: Vec<Cyclotomic>) -> Self {
        ClassFunction { values }
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }
}

/// A parsed table file: the table plus any named class functions bundled
/// with it.
#[derive(Clone, Debug)]
pub struct TableFile {
    pub table: CharacterTable,
    pub functions: Vec<(String, ClassFunction)>,
}

impl TableFile {
    pub fn function(&self, name: &str) -> Option<&ClassFunction> {
        self.functions
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, f)| f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableError {
    Syntax {
        line: usize,
        message: String,
    },
    Expression {
        line: usize,
        error: ParseError,
    },
    /// Validation failures carry the violated relation.
    ClassSizeSum {
        got: u64,
        order: u64,
    },
    IdentityClass,
    InverseMap {
        class: usize,
    },
    ClassCount {
        declared: usize,
        got: usize,
    },
    RowCount {
        expected: usize,
        got: usize,
    },
    RowLength {
        row: usize,
        expected: usize,
        got: usize,
    },
    DegreeNotPositiveInteger {
        row: usize,
    },
    DegreeSquareSum {
        got: BigInt,
        order: u64,
    },
    Orthogonality {
        row_a: usize,
        row_b: usize,
        value: String,
    },
    ConjugateInverse {
        row: usize,
        class: usize,
    },
    LengthMismatch {
        expected: usize,
        got: usize,
    },
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::Syntax { line, message } => write!(f, "line {line}: {message}"),
            TableError::Expression { line, error } => write!(f, "line {line}: {error}"),
            TableError::ClassSizeSum { got, order } => {
                write!(
                    f,
                    "class sizes sum to {got}, expected the group order {order}"
                )
            }
            TableError::IdentityClass => {
                write!(f, "class 0 must have size 1 and element order 1")
            }
            TableError::InverseMap { class } => {
                write!(f, "inverse map broken at class {class}")
            }
            TableError::ClassCount { declared, got } => {
                write!(f, "declared {declared} classes but found {got}")
            }
            TableError::RowCount { expected, got } => {
                write!(f, "expected {expected} irreducible rows, found {got}")
            }
            TableError::RowLength { row, expected, got } => {
                write!(f, "row {row} has {got} values, expected {expected}")
            }
            TableError::DegreeNotPositiveInteger { row } => {
                write!(f, "row {row} has a degree that is not a positive integer")
            }
            TableError::DegreeSquareSum { got, order } => {
                write!(
                    f,
                    "degrees square-sum to {got}, expected the group order {order}"
                )
            }
            TableError::Orthogonality {
                row_a,
                row_b,
                value,
            } => {
                write!(f, "rows {row_a} and {row_b} have inner product {value}")
            }
            TableError::ConjugateInverse { row, class } => {
                write!(
                    f,
                    "row {row}: conjugate at class {class} differs from the inverse class"
                )
            }
            TableError::LengthMismatch { expected, got } => {
                write!(f, "class function has {got} values, expected {expected}")
            }
        }
    }
}

impl std::error::Error for TableError {}

impl CharacterTable {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Checks every table invariant exactly; failures pinpoint the violated
    /// relation.
    pub fn validate(&self) -> Result<(), TableError> {
        let k = self.classes.len();
        if k == 0 {
            return Err(TableError::IdentityClass);
        }
        let size_sum: u64 = self.classes.iter().map(|c| c.size).sum();
        if size_sum != self.order {
            return Err(TableError::ClassSizeSum {
                got: size_sum,
                order: self.order,
            });
        }
        if self.classes[0].size != 1 || self.classes[0].element_order != 1 {
            return Err(TableError::IdentityClass);
        }
        for (i, c) in self.classes.iter().enumerate() {
            if c.inverse >= k {
                return Err(TableError::InverseMap { class: i });
            }
            let inv = &self.classes[c.inverse];
            if self.classes[inv.inverse].size != c.size
                || inv.inverse != i
                || inv.size != c.size
                || inv.element_order != c.element_order
            {
                return Err(TableError::InverseMap { class: i });
            }
        }
        if self.irreducibles.len() != k {
            return Err(TableError::RowCount {
                expected: k,
                got: self.irreducibles.len(),
            });
        }
        for (i, row) in self.irreducibles.iter().enumerate() {
            if row.len() != k {
                return Err(TableError::RowLength {
                    row: i,
                    expected: k,
                    got: row.len(),
                });
            }
        }
        // degrees: positive integers with Σ d² = |G|
        let mut degree_square_sum = BigInt::from(0);
        for (i, row) in self.irreducibles.iter().enumerate() {
            let d = row[0]
                .as_rational_integer()
                .ok_or(TableError::DegreeNotPositiveInteger { row: i })?;
            if d <= BigInt::from(0) {
                return Err(TableError::DegreeNotPositiveInteger { row: i });
            }
            degree_square_sum += &d * &d;
        }
        if degree_square_sum != BigInt::from(self.order) {
            return Err(TableError::DegreeSquareSum {
                got: degree_square_sum,
                order: self.order,
            });
        }
        // row orthogonality, exact
        for i in 0..k {
            for j in i..k {
                let value = self.raw_inner_product(&self.irreducibles[i], &self.irreducibles[j]);
                let expected = if i == j {
                    Cyclotomic::one()
                } else {
                    Cyclotomic::zero()
                };
                if value != expected {
                    return Err(TableError::Orthogonality {
                        row_a: i,
                        row_b: j,
                        value: value.to_string(),
                    });
                }
            }
        }
        // conjugate row values match the inverse classes
        for (i, row) in self.irreducibles.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if v.conjugate() != row[self.classes[c].inverse] {
                    return Err(TableError::ConjugateInverse { row: i, class: c });
                }
            }
        }
        Ok(())
    }

    fn raw_inner_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for (c, class) in self.classes.iter().enumerate() {
            let term = &a[c] * &b[c].conjugate();
            acc = &acc + &term.scale(&BigRational::from_integer(class.size.into()));
        }
        acc.scale(&BigRational::new(1.into(), self.order.into()))
    }

    /// [f, h] = (1/|G|) Σ_c size(c) · f(c) · conj(h(c)), exact.
    pub fn inner_product(
        &self,
        f: &ClassFunction,
        h: &ClassFunction,
    ) -> Result<Cyclotomic, TableError> {
        let k = self.classes.len();
        if f.len() != k {
            return Err(TableError::LengthMismatch {
                expected: k,
                got: f.len(),
            });
        }
        if h.len() != k {
            return Err(TableError::LengthMismatch {
                expected: k,
                got: h.len(),
            });
        }
        Ok(self.raw_inner_product(f.values(), h.values()))
    }

    /// The irreducible row `i` as a class function.
    pub fn irreducible(&self, i: usize) -> ClassFunction {
        ClassFunction::new(self.irreducibles[i].clone())
    }

    /// Tests whether `f` is a Z-linear combination of the irreducibles: on a
    /// complete validated table this holds iff every inner product with an
    /// irreducible is a rational integer. Returns the integer coefficients
    /// on success.
    pub fn is_generalized_character(
        &self,
        f: &ClassFunction,
    ) -> Result<Option<Vec<BigInt>>, TableError> {
        let mut coeffs = Vec::with_capacity(self.irreducibles.len());
        for row in &self.irreducibles {
            let ip = self.inner_product(f, &ClassFunction::new(row.clone()))?;
            match ip.as_rational_integer() {
                Some(c) => coeffs.push(c),
                None => return Ok(None),
            }
        }
        // the coefficients reconstruct f exactly on a complete table
        debug_assert!({
            let mut acc = vec![Cyclotomic::zero(); self.classes.len()];
            for (c, row) in coeffs.iter().zip(&self.irreducibles) {
                let cr = BigRational::from_integer(c.clone());
                for (a, v) in acc.iter_mut().zip(row) {
                    *a = &*a + &v.scale(&cr);
                }
            }
            acc.iter().zip(f.values()).all(|(a, b)| a == b)
        });
        Ok(Some(coeffs))
    }

    /// Per-class two-root witnesses on the nonidentity classes, when every
    /// such value is a sum of at most two roots of unity.
    pub fn two_root_on_nonidentity(
        &self,
        f: &ClassFunction,
    ) -> Result<Option<BTreeMap<usize, TwoRootDecomposition>>, TableError> {
        if f.len() != self.classes.len() {
            return Err(TableError::LengthMismatch {
                expected: self.classes.len(),
                got: f.len(),
            });
        }
        let mut out = BTreeMap::new();
        for (c, v) in f.values().iter().enumerate().skip(1) {
            match v.two_root_decomposition() {
                Some(d) => {
                    out.insert(c, d);
                }
                None => return Ok(None),
            }
        }
        Ok(Some(out))
    }

    /// The set of class element orders closed under divisors; the table's
    /// stand-in for the group's order spectrum.
    pub fn spectrum(&self) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        for c in &self.classes {
            out.extend(divisors(c.element_order));
        }
        out
    }
}

/// Parses the line-oriented table format:
///
/// ```text
/// group <name>
/// order <N>
/// classes <k>
/// class <idx> size <s> elemorder <o> inverse <idx2>
/// irr <i>: <cyc-expr>, <cyc-expr>, ...
/// fun <name>: <cyc-expr>, ...
/// ```
///
/// `#` starts a comment; blank lines are ignored.
pub fn parse_table_file(text: &str) -> Result<TableFile, TableError> {
    let mut name: Option<String> = None;
    let mut order: Option<u64> = None;
    let mut declared_classes: Option<usize> = None;
    let mut classes: BTreeMap<usize, ConjugacyClass> = BTreeMap::new();
    let mut rows: BTreeMap<usize, Vec<Cyclotomic>> = BTreeMap::new();
    let mut functions: Vec<(String, ClassFunction)> = Vec::new();

    let syntax = |line: usize, message: &str| TableError::Syntax {
        line,
        message: message.into(),
    };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "group" => {
                if rest.is_empty() {
                    return Err(syntax(line_no, "group needs a name"));
                }
                name = Some(rest.to_string());
            }
            "order" => {
                order = Some(
                    rest.parse()
                        .map_err(|_| syntax(line_no, "order needs an integer"))?,
                );
            }
            "classes" => {
                declared_classes = Some(
                    rest.parse()
                        .map_err(|_| syntax(line_no, "classes needs an integer"))?,
                );
            }
            "class" => {
                let tokens: Vec<&str> = rest.split_whitespace().collect();
                if tokens.len() != 7
                    || tokens[1] != "size"
                    || tokens[3] != "elemorder"
                    || tokens[5] != "inverse"
                {
                    return Err(syntax(
                        line_no,
                        "expected: class <idx> size <s> elemorder <o> inverse <idx>",
                    ));
                }
                let idx: usize = tokens[0]
                    .parse()
                    .map_err(|_| syntax(line_no, "bad class index"))?;
                let size: u64 = tokens[2]
                    .parse()
                    .map_err(|_| syntax(line_no, "bad class size"))?;
                let element_order: u64 = tokens[4]
                    .parse()
                    .map_err(|_| syntax(line_no, "bad element order"))?;
                let inverse: usize = tokens[6]
                    .parse()
                    .map_err(|_| syntax(line_no, "bad inverse index"))?;
                if classes
                    .insert(
                        idx,
                        ConjugacyClass {
                            size,
                            element_order,
                            inverse,
                        },
                    )
                    .is_some()
                {
                    return Err(syntax(line_no, "duplicate class index"));
                }
            }
            "irr" => {
                let (index_part, values_part) = rest
                    .split_once(':')
                    .ok_or_else(|| syntax(line_no, "expected: irr <i>: <values>"))?;
                let i: usize = index_part
                    .trim()
                    .parse()
                    .map_err(|_| syntax(line_no, "bad irreducible index"))?;
                let values = parse_value_list(values_part, line_no)?;
                if rows.insert(i, values).is_some() {
                    return Err(syntax(line_no, "duplicate irreducible index"));
                }
            }
            "fun" => {
                let (name_part, values_part) = rest
                    .split_once(':')
                    .ok_or_else(|| syntax(line_no, "expected: fun <name>: <values>"))?;
                let fname = name_part.trim();
                if fname.is_empty() {
                    return Err(syntax(line_no, "fun needs a name"));
                }
                let values = parse_value_list(values_part, line_no)?;
                functions.push((fname.to_string(), ClassFunction::new(values)));
            }
            _ => return Err(syntax(line_no, "unknown directive")),
        }
    }

    let name = name.ok_or_else(|| syntax(0, "missing group line"))?;
    let order = order.ok_or_else(|| syntax(0, "missing order line"))?;
    let k = declared_classes.ok_or_else(|| syntax(0, "missing classes line"))?;
    if classes.len() != k || classes.keys().copied().ne(0..k) {
        return Err(TableError::ClassCount {
            declared: k,
            got: classes.len(),
        });
    }
    if rows.len() != k || rows.keys().copied().ne(0..k) {
        return Err(TableError::RowCount {
            expected: k,
            got: rows.len(),
        });
    }
    let table = CharacterTable {
        name,
        order,
        classes: classes.into_values().collect(),
        irreducibles: rows.into_values().collect(),
    };
    Ok(TableFile { table, functions })
}

fn parse_value_list(text: &str, line_no: usize) -> Result<Vec<Cyclotomic>, TableError> {
    text.split(',')
        .map(|part| {
            parse_cyclotomic(part).map_err(|error| TableError::Expression {
                line: line_no,
                error,
            })
        })
        .collect()
}

/// Renders a table file in the canonical text form; parsing the output
/// reproduces the input exactly.
pub fn render_table_file(file: &TableFile) -> String {
    let mut out = String::new();
    let t = &file.table;
    out.push_str(&format!("group {}\n", t.name));
    out.push_str(&format!("order {}\n", t.order));
    out.push_str(&format!("classes {}\n", t.classes.len()));
    for (i, c) in t.classes.iter().enumerate() {
        out.push_str(&format!(
            "class {} size {} elemorder {} inverse {}\n",
            i, c.size, c.element_order, c.inverse
        ));
    }
    for (i, row) in t.irreducibles.iter().enumerate() {
        let values: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("irr {}: {}\n", i, values.join(", ")));
    }
    for (name, f) in &file.functions {
        let values: Vec<String> = f.values().iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("fun {}: {}\n", name, values.join(", ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::RootOfUnity;

    #[test]
    fn dihedral_table_validates() {
        let file = corpus::dihedral30();
        file.table.validate().unwrap();
        assert_eq!(file.table.order, 30);
        assert_eq!(file.table.class_count(), 9);
    }

    #[test]
    fn sl23_table_validates() {
        let file = corpus::sl23();
        file.table.validate().unwrap();
        assert_eq!(file.table.order, 24);
        assert_eq!(file.table.class_count(), 7);
        let degrees: Vec<String> = file
            .table
            .irreducibles
            .iter()
            .map(|r| r[0].to_string())
            .collect();
        assert_eq!(degrees, vec!["1", "1", "1", "2", "2", "2", "3"]);
    }

    #[test]
    fn a5_table_validates() {
        let file = corpus::alternating5();
        file.table.validate().unwrap();
        assert_eq!(file.table.order, 60);
        assert_eq!(file.table.class_count(), 5);
    }

    #[test]
    fn perturbed_tables_are_rejected() {
        let mut t = corpus::dihedral30().table;
        t.irreducibles[3][2] = &t.irreducibles[3][2] + &Cyclotomic::one();
        match t.validate() {
            Err(TableError::Orthogonality { .. }) => {}
            other => panic!("expected an orthogonality failure, got {other:?}"),
        }

        let mut t = corpus::dihedral30().table;
        t.classes[4].size = 3;
        assert!(matches!(t.validate(), Err(TableError::ClassSizeSum { .. })));

        let mut t = corpus::sl23().table;
        t.classes[3].inverse = 3;
        assert!(matches!(t.validate(), Err(TableError::InverseMap { .. })));
    }

    #[test]
    fn inner_products_on_validated_tables() {
        let file = corpus::sl23();
        let t = &file.table;
        for i in 0..t.class_count() {
            for j in 0..t.class_count() {
                let got = t
                    .inner_product(&t.irreducible(i), &t.irreducible(j))
                    .unwrap();
                let expected = if i == j {
                    Cyclotomic::one()
                } else {
                    Cyclotomic::zero()
                };
                assert_eq!(got, expected);
            }
        }
    }

    #[test]
    fn generalized_character_detection() {
        let file = corpus::dihedral30();
        let t = &file.table;
        // each irreducible row recovers a unit coefficient vector
        for i in 0..t.class_count() {
            let coeffs = t
                .is_generalized_character(&t.irreducible(i))
                .unwrap()
                .unwrap();
            for (j, c) in coeffs.iter().enumerate() {
                assert_eq!(*c, BigInt::from(u64::from(i == j)));
            }
        }
        // the bundled degree-16 function is a generalized character …
        let chi = file.function("chi16").unwrap();
        let coeffs = t.is_generalized_character(chi).unwrap().unwrap();
        let reconstructed_degree: BigInt = coeffs
            .iter()
            .zip(&t.irreducibles)
            .map(|(c, row)| c * row[0].as_rational_integer().unwrap())
            .sum();
        assert_eq!(reconstructed_degree, BigInt::from(16));
        // … but breaking the CRT residue at the identity destroys that
        let mut broken = chi.values().to_vec();
        broken[0] = Cyclotomic::from_integer(15);
        assert_eq!(
            t.is_generalized_character(&ClassFunction::new(broken))
                .unwrap(),
            None
        );
    }

    #[test]
    fn two_root_witnesses_on_the_corpus() {
        let file = corpus::dihedral30();
        let chi = file.function("chi16").unwrap();
        let w = file.table.two_root_on_nonidentity(chi).unwrap().unwrap();
        assert_eq!(w.len(), 8);
        // realized values include 0, 1, and −2 = (−1) + (−1)
        assert!(w.values().any(|d| matches!(d, TwoRootDecomposition::Zero)));
        assert!(w
            .values()
            .any(|d| matches!(d, TwoRootDecomposition::One(r) if *r == RootOfUnity::one())));
        assert!(w
            .values()
            .any(|d| matches!(d, TwoRootDecomposition::Two(r, s) if *r == RootOfUnity::minus_one() && s == r)));

        let file = corpus::sl23();
        let perm = file.function("perm7").unwrap();
        let w = file.table.two_root_on_nonidentity(perm).unwrap().unwrap();
        for d in w.values() {
            match d {
                TwoRootDecomposition::One(r) => {
                    assert!(*r == RootOfUnity::one() || *r == RootOfUnity::minus_one());
                }
                other => panic!("±1 expected off the identity, got {other}"),
            }
        }

        // 3 · trivial exceeds the two-root bound
        let t = &corpus::dihedral30().table;
        let triple = ClassFunction::new(vec![Cyclotomic::from_integer(3); t.class_count()]);
        assert_eq!(t.two_root_on_nonidentity(&triple).unwrap(), None);
    }

    #[test]
    fn spectra() {
        let want: BTreeSet<u64> = [1, 2, 3, 5, 15].into_iter().collect();
        assert_eq!(corpus::dihedral30().table.spectrum(), want);
        let want: BTreeSet<u64> = [1, 2, 3, 4, 6].into_iter().collect();
        assert_eq!(corpus::sl23().table.spectrum(), want);
        let want: BTreeSet<u64> = [1, 2, 3, 5].into_iter().collect();
        assert_eq!(corpus::alternating5().table.spectrum(), want);
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let bad = "group x\norder 2\nclasses 2\nclass 0 size 1 elemorder 1 inverse 0\nclass 1 size 1 elemorder 2 inverse 1\nirr 0: 1, 1\nirr 1: 1, E(\n";
        match parse_table_file(bad) {
            Err(TableError::Expression { line, .. }) => assert_eq!(line, 7),
            other => panic!("expected an expression error, got {other:?}"),
        }
        assert!(matches!(
            parse_table_file("group x\nnonsense 3\n"),
            Err(TableError::Syntax { line: 2, .. })
        ));
    }
}

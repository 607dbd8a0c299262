//! Smith normal form over the integers for the small matrices that arise
//! when presenting subgroups of finite abelian groups. Entries stay tiny, so
//! i128 arithmetic with smallest-pivot selection is ample.

pub type Matrix = Vec<Vec<i128>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1 } else { 0 }).collect())
        .collect()
}

pub struct Snf {
    /// The diagonalized matrix.
    pub d: Matrix,
    /// Left transform and its inverse: u * a * v = d.
    #[allow(dead_code)] // exercised by the factorization checks in tests
    pub u: Matrix,
    pub u_inv: Matrix,
    /// Right transform.
    pub v: Matrix,
}

fn swap_rows(m: &mut Matrix, i: usize, j: usize) {
    m.swap(i, j);
}

fn swap_cols(m: &mut Matrix, i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

/// row_i += c * row_j
fn add_row(m: &mut Matrix, i: usize, j: usize, c: i128) {
    for k in 0..m[i].len() {
        let t = c * m[j][k];
        m[i][k] += t;
    }
}

/// col_i += c * col_j
fn add_col(m: &mut Matrix, i: usize, j: usize, c: i128) {
    for row in m.iter_mut() {
        let t = c * row[j];
        row[i] += t;
    }
}

fn negate_row(m: &mut Matrix, i: usize) {
    for x in m[i].iter_mut() {
        *x = -*x;
    }
}

fn negate_col(m: &mut Matrix, i: usize) {
    for row in m.iter_mut() {
        row[i] = -row[i];
    }
}

/// Computes the Smith normal form with transforms: `u * a * v = d`, where d
/// is diagonal with d₁ | d₂ | …, all nonnegative.
pub fn smith_normal_form(a: &Matrix) -> Snf {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut d = a.clone();
    let mut u = identity(rows);
    let mut u_inv = identity(rows);
    let mut v = identity(cols);

    let mut t = 0;
    while t < rows && t < cols {
        // find the entry of least nonzero magnitude in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if d[i][j] != 0 && pivot.map_or(true, |(pi, pj)| d[i][j].abs() < d[pi][pj].abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        if pi != t {
            swap_rows(&mut d, t, pi);
            swap_rows(&mut u, t, pi);
            swap_cols(&mut u_inv, t, pi);
        }
        if pj != t {
            swap_cols(&mut d, t, pj);
            swap_cols(&mut v, t, pj);
        }
        // clear row and column t
        let mut dirty = false;
        for i in (t + 1)..rows {
            if d[i][t] != 0 {
                let q = d[i][t].div_euclid(d[t][t]);
                if q != 0 {
                    add_row(&mut d, i, t, -q);
                    add_row(&mut u, i, t, -q);
                    add_col(&mut u_inv, t, i, q);
                }
                if d[i][t] != 0 {
                    dirty = true;
                }
            }
        }
        for j in (t + 1)..cols {
            if d[t][j] != 0 {
                let q = d[t][j].div_euclid(d[t][t]);
                if q != 0 {
                    add_col(&mut d, j, t, -q);
                    add_col(&mut v, j, t, -q);
                }
                if d[t][j] != 0 {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue; // smaller remainders appeared; repick the pivot
        }
        // ensure the pivot divides every remaining entry
        let mut fixed = true;
        'scan: for i in (t + 1)..rows {
            for j in (t + 1)..cols {
                if d[i][j] % d[t][t] != 0 {
                    add_row(&mut d, t, i, 1);
                    add_row(&mut u, t, i, 1);
                    add_col(&mut u_inv, i, t, -1);
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if !fixed {
            continue;
        }
        if d[t][t] < 0 {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
            negate_col(&mut u_inv, t);
        }
        t += 1;
    }
    Snf { d, u, u_inv, v }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
        let n = a.len();
        let m = b[0].len();
        let k = b.len();
        (0..n)
            .map(|i| {
                (0..m)
                    .map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum())
                    .collect()
            })
            .collect()
    }

    fn check(a: Matrix) {
        let snf = smith_normal_form(&a);
        // u * a * v == d
        let lhs = mat_mul(&mat_mul(&snf.u, &a), &snf.v);
        assert_eq!(lhs, snf.d);
        // u_inv really inverts u
        let id = identity(a.len());
        assert_eq!(mat_mul(&snf.u, &snf.u_inv), id);
        // diagonal with the divisibility chain
        let mut prev: Option<i128> = None;
        for i in 0..snf.d.len() {
            for j in 0..snf.d[0].len() {
                if i != j {
                    assert_eq!(snf.d[i][j], 0);
                }
            }
            if i < snf.d[0].len() {
                let di = snf.d[i][i];
                assert!(di >= 0);
                if let Some(p) = prev {
                    if p != 0 {
                        assert_eq!(di % p, 0, "divisibility chain broken");
                    }
                }
                prev = Some(di);
            }
        }
    }

    #[test]
    fn diagonalizes_small_matrices() {
        check(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        check(vec![vec![1, 0], vec![0, 1]]);
        check(vec![vec![4, 6], vec![6, 4]]);
        check(vec![vec![0, 0], vec![0, 0]]);
        check(vec![vec![3, 1, 2], vec![0, 5, 4]]);
        check(vec![vec![12]]);
    }

    #[test]
    fn classic_example() {
        let snf = smith_normal_form(&vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let diag: Vec<i128> = (0..3).map(|i| snf.d[i][i]).collect();
        assert_eq!(diag, vec![2, 2, 156]);
    }
}

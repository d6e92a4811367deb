//! Smith normal form over the integers.
//!
//! `smith_normal_form(m)` returns unimodular `u`, `v` and a diagonal `d` with
//! `u * m * v = d`, the diagonal entries non-negative and each dividing the
//! next.  The transforms are accumulated from elementary row/column
//! operations, so `|det u| = |det v| = 1` by construction — and the tests
//! re-check that with an independent Bareiss determinant.
//!
//! Pivot selection is deterministic: among the not-yet-processed entries the
//! one with the smallest nonzero absolute value wins, ties broken by lowest
//! row index, then lowest column index.  Identical inputs therefore always
//! produce identical transforms, which downstream code relies on when it
//! freezes expected generator choices into tests.

use super::matrix::IntMatrix;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// The result of a Smith normal form computation: `u * m * v = d`.
#[derive(Clone, Debug)]
pub struct SmithNormalForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithNormalForm {
    /// Diagonal entries of `d` that are nonzero, in order.
    pub fn nonzero_diagonal(&self) -> Vec<BigInt> {
        self.d
            .diagonal()
            .into_iter()
            .filter(|x| !x.is_zero())
            .collect()
    }

    /// The rank of the original matrix.
    pub fn rank(&self) -> usize {
        self.nonzero_diagonal().len()
    }
}

/// Smallest-absolute-value pivot in the submatrix `[t.., t..]`, ties broken
/// by lowest row then lowest column.  `None` when the submatrix is zero.
fn select_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let v = x.abs();
            match &best {
                Some((b, _, _)) if *b <= v => {}
                _ => best = Some((v, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Compute the Smith normal form of `m`.
pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    let mut a = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let mut v = IntMatrix::identity(m.cols());
    let n = m.rows().min(m.cols());

    for t in 0..n {
        let Some((pi, pj)) = select_pivot(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        'reduce: loop {
            // Clear the pivot column.  Truncated division leaves remainders
            // strictly smaller than the pivot, so re-selecting the pivot
            // afterwards makes progress.
            let mut leftover = false;
            for i in t + 1..a.rows() {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&a[(i, t)] / &a[(t, t)]);
                a.add_multiple_of_row(i, t, &q);
                u.add_multiple_of_row(i, t, &q);
                if !a[(i, t)].is_zero() {
                    leftover = true;
                }
            }
            if leftover {
                repivot(&mut a, &mut u, &mut v, t);
                continue 'reduce;
            }

            // Clear the pivot row.
            for j in t + 1..a.cols() {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&a[(t, j)] / &a[(t, t)]);
                a.add_multiple_of_col(j, t, &q);
                v.add_multiple_of_col(j, t, &q);
                if !a[(t, j)].is_zero() {
                    leftover = true;
                }
            }
            if leftover {
                repivot(&mut a, &mut u, &mut v, t);
                continue 'reduce;
            }

            // Divisibility sweep: the pivot must divide every remaining
            // entry.  Folding an offending row into the pivot row lets the
            // next pass shrink the pivot to the gcd.
            for i in t + 1..a.rows() {
                for j in t + 1..a.cols() {
                    if (&a[(i, j)] % &a[(t, t)]).is_zero() {
                        continue;
                    }
                    let one = BigInt::from(1);
                    a.add_multiple_of_row(t, i, &one);
                    u.add_multiple_of_row(t, i, &one);
                    repivot(&mut a, &mut u, &mut v, t);
                    continue 'reduce;
                }
            }
            break;
        }
    }

    // Normalize diagonal signs.
    for t in 0..n {
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithNormalForm { u, d: a, v }
}

/// Re-select the minimal pivot in the submatrix and move it to `(t, t)`.
fn repivot(a: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix, t: usize) {
    if let Some((pi, pj)) = select_pivot(a, t) {
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);
    }
}

/// Row-style Hermite reduction: returns a matrix with the same row lattice
/// as `m` but at most `m.cols()` rows.  Used to compress very tall relation
/// matrices (e.g. multiplication-table presentations) before running the
/// full Smith normal form.
pub fn hermite_row_compress(m: &IntMatrix) -> IntMatrix {
    let cols = m.cols();
    // basis[j], when present, is a row whose leading nonzero entry sits in
    // column j and is positive.
    let mut basis: Vec<Option<Vec<BigInt>>> = vec![None; cols];
    for idx in 0..m.rows() {
        let mut row = m.row(idx);
        let mut j = 0;
        while j < cols {
            if row[j].is_zero() {
                j += 1;
                continue;
            }
            match &mut basis[j] {
                None => {
                    if row[j].is_negative() {
                        for x in row.iter_mut() {
                            *x = -std::mem::take(x);
                        }
                    }
                    basis[j] = Some(row);
                    break;
                }
                Some(b) => {
                    // replace (b, row) by (gcd combination, reduced row)
                    while !row[j].is_zero() {
                        let q = &row[j] / &b[j];
                        if !q.is_zero() {
                            for k in j..cols {
                                let delta = &q * &b[k];
                                row[k] -= delta;
                            }
                        }
                        if row[j].is_zero() {
                            break;
                        }
                        std::mem::swap(b, &mut row);
                    }
                    if b[j].is_negative() {
                        for x in b.iter_mut() {
                            *x = -std::mem::take(x);
                        }
                    }
                    j += 1;
                }
            }
        }
    }
    let rows: Vec<Vec<BigInt>> = basis.into_iter().flatten().collect();
    if rows.is_empty() {
        IntMatrix::zeros(0, cols)
    } else {
        IntMatrix::from_bigint_rows(rows)
    }
}

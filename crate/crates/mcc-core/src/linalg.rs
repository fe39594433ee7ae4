//! Row reduction over GF(q) on raw value rows.
//!
//! Rows are `Vec<u64>` of packed field values; the field spec travels
//! alongside. `rref_in_place` fully reduces (pivots 1, pivot columns
//! cleared above and below), visits columns in a caller-chosen order, drops
//! zero rows and returns the pivot columns. Elimination order is fixed, so
//! sequential and parallel execution produce identical rows; the reduced
//! form is unique anyway, but bit-equality is asserted by tests and relied
//! on for golden output.

use crate::gf::FieldSpec;
use crate::ExecMode;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// row -= factor * pivot_row, elementwise over the field.
fn axpy(field: &FieldSpec, row: &mut [u64], pivot_row: &[u64], factor: u64) {
    for (r, &p) in row.iter_mut().zip(pivot_row) {
        if p != 0 {
            *r = field.sub_val(*r, field.mul_val(factor, p));
        }
    }
}

fn scale_row(field: &FieldSpec, row: &mut [u64], factor: u64) {
    for r in row.iter_mut() {
        if *r != 0 {
            *r = field.mul_val(*r, factor);
        }
    }
}

/// Clear column `col` in every row except `skip`, subtracting multiples of
/// `pivot_row`. The parallel path partitions rows; each row update is
/// independent, so the result does not depend on scheduling.
fn eliminate(
    field: &FieldSpec,
    rows: &mut [Vec<u64>],
    skip: usize,
    pivot_row: &[u64],
    col: usize,
    mode: ExecMode,
) {
    #[cfg(feature = "parallel")]
    if mode == ExecMode::Parallel {
        rows.par_iter_mut()
            .with_min_len(8)
            .enumerate()
            .for_each(|(i, row)| {
                if i != skip && row[col] != 0 {
                    let factor = row[col];
                    axpy(field, row, pivot_row, factor);
                }
            });
        return;
    }
    let _ = mode;
    for (i, row) in rows.iter_mut().enumerate() {
        if i != skip && row[col] != 0 {
            let factor = row[col];
            axpy(field, row, pivot_row, factor);
        }
    }
}

/// Reduced row echelon form visiting columns in `col_order`. Returns the
/// pivot columns (natural indices) in visit order; `rows` keeps exactly the
/// nonzero rows, row i having its pivot in `pivots[i]`.
pub(crate) fn rref_in_place(
    field: &FieldSpec,
    rows: &mut Vec<Vec<u64>>,
    col_order: &[usize],
    mode: ExecMode,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0usize;
    for &col in col_order {
        if next == rows.len() {
            break;
        }
        let Some(pr) = (next..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(next, pr);
        let lead = rows[next][col];
        if lead != 1 {
            let inv = field.inv_val(lead).expect("pivot is nonzero");
            scale_row(field, &mut rows[next], inv);
        }
        // Take the pivot row out so the elimination pass can borrow the rest
        // mutably; the empty placeholder is skipped via the index.
        let pivot_row = std::mem::take(&mut rows[next]);
        eliminate(field, rows, next, &pivot_row, col, mode);
        rows[next] = pivot_row;
        pivots.push(col);
        next += 1;
    }
    // Every visited column is clear below the pivot rows, so the tail rows
    // are zero.
    debug_assert!(rows[next..]
        .iter()
        .all(|r| r.iter().all(|&v| v == 0)));
    rows.truncate(next);
    pivots
}

/// Rank of the row set. Consumes a copy internally.
pub(crate) fn rank(field: &FieldSpec, rows: &[Vec<u64>], mode: ExecMode) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut work: Vec<Vec<u64>> = rows.to_vec();
    let col_order: Vec<usize> = (0..ncols).collect();
    rref_in_place(field, &mut work, &col_order, mode).len()
}

/// Reduce `v` against an RREF basis (pivot entries 1). Afterwards `v` is
/// zero iff it lies in the row space.
pub(crate) fn reduce_against(
    field: &FieldSpec,
    rows: &[Vec<u64>],
    pivots: &[usize],
    v: &mut [u64],
) {
    debug_assert_eq!(rows.len(), pivots.len());
    for (row, &pc) in rows.iter().zip(pivots) {
        let factor = v[pc];
        if factor != 0 {
            axpy(field, v, row, factor);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;

    fn identity_order(n: usize) -> Vec<usize> {
        (0..n).collect()
    }

    #[test]
    fn rref_over_gf2() {
        let f = FieldSpec::prime(2).unwrap();
        let mut rows = vec![
            vec![1, 1, 0, 1],
            vec![0, 1, 1, 0],
            vec![1, 0, 1, 1],
        ];
        let pivots = rref_in_place(&f, &mut rows, &identity_order(4), ExecMode::Sequential);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(rows, vec![vec![1, 0, 1, 1], vec![0, 1, 1, 0]]);
    }

    #[test]
    fn rref_normalizes_pivots_over_gf5() {
        let f = FieldSpec::prime(5).unwrap();
        let mut rows = vec![vec![2, 1, 3], vec![4, 2, 2]];
        let pivots = rref_in_place(&f, &mut rows, &identity_order(3), ExecMode::Sequential);
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(rows, vec![vec![1, 3, 0], vec![0, 0, 1]]);
        for (row, &p) in rows.iter().zip(&pivots) {
            assert_eq!(row[p], 1);
        }
        // Row space must be preserved: rank still 2.
        assert_eq!(rank(&f, &rows, ExecMode::Sequential), 2);
    }

    #[test]
    fn custom_column_order_changes_pivots() {
        let f = FieldSpec::prime(2).unwrap();
        let mut rows = vec![vec![1, 1, 0], vec![0, 1, 1]];
        // Visit last column first.
        let pivots = rref_in_place(&f, &mut rows, &[2, 1, 0], ExecMode::Sequential);
        assert_eq!(pivots, vec![2, 1]);
        assert_eq!(rows, vec![vec![1, 0, 1], vec![1, 1, 0]]);
    }

    #[test]
    fn reduce_against_detects_membership() {
        let f = FieldSpec::prime(2).unwrap();
        let mut rows = vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1]];
        let pivots = rref_in_place(&f, &mut rows, &identity_order(4), ExecMode::Sequential);
        let mut inside = vec![1, 1, 1, 1];
        reduce_against(&f, &rows, &pivots, &mut inside);
        assert!(inside.iter().all(|&v| v == 0));
        let mut outside = vec![1, 1, 0, 0];
        reduce_against(&f, &rows, &pivots, &mut outside);
        assert!(outside.iter().any(|&v| v != 0));
    }

    #[test]
    fn modes_agree_bit_for_bit() {
        // Deterministic pseudorandom matrix over GF(3).
        let f = FieldSpec::prime(3).unwrap();
        let mut state = 0x243F6A8885A308D3u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) % 3
        };
        let rows: Vec<Vec<u64>> = (0..40).map(|_| (0..25).map(|_| next()).collect()).collect();
        let mut seq = rows.clone();
        let mut par = rows;
        let order = identity_order(25);
        let p1 = rref_in_place(&f, &mut seq, &order, ExecMode::Sequential);
        let p2 = rref_in_place(&f, &mut par, &order, ExecMode::Parallel);
        assert_eq!(p1, p2);
        assert_eq!(seq, par);
    }
}

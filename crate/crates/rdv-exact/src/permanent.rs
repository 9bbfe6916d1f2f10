use num_bigint::BigUint;

use crate::{ExactError, ResidualMatrix};

/// Largest dimension handled by the exact Ryser permanent.
pub const EXACT_PERMANENT_MAX_M: usize = 16;

/// Exact permanent of the 0/1 matrix that is all ones except at the
/// residual matrix's zero set.
///
/// Ryser's inclusion-exclusion over column subsets, walked in Gray-code
/// order so each step updates the row sums by a single column:
/// `Perm A = (-1)^m sum_S (-1)^{|S|} prod_r (sum_{c in S} A_{r,c})`.
pub fn permanent(matrix: &ResidualMatrix) -> Result<BigUint, ExactError> {
    let m = matrix.m();
    if m > EXACT_PERMANENT_MAX_M {
        return Err(ExactError::TooLarge(m));
    }
    if m == 0 {
        return Ok(BigUint::from(1u32));
    }

    // Column-major 0/1 entries.
    let mut cols = vec![vec![1i64; m]; m];
    for &(r, c) in matrix.zeroes() {
        cols[c][r] = 0;
    }

    let mut row_sums = vec![0i64; m];
    let mut total: i128 = 0;
    let mut gray_prev: usize = 0;
    // Subsets 1..2^m in Gray-code order; subset k has Gray code k ^ (k >> 1).
    for k in 1usize..(1usize << m) {
        let gray = k ^ (k >> 1);
        let changed = gray ^ gray_prev;
        let col = changed.trailing_zeros() as usize;
        let added = gray & changed != 0;
        if added {
            for r in 0..m {
                row_sums[r] += cols[col][r];
            }
        } else {
            for r in 0..m {
                row_sums[r] -= cols[col][r];
            }
        }
        gray_prev = gray;

        let mut product: i128 = 1;
        for r in 0..m {
            product *= row_sums[r] as i128;
            if product == 0 {
                break;
            }
        }
        if gray.count_ones() % 2 == 0 {
            total += product;
        } else {
            total -= product;
        }
    }
    if m % 2 == 1 {
        total = -total;
    }
    debug_assert!(total >= 0);
    Ok(BigUint::from(total.max(0) as u128))
}

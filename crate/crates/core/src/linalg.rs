//! Fraction-free (Bareiss) elimination over arbitrary-precision integers.
//!
//! Every intermediate entry of a Bareiss elimination is a minor of the input,
//! so the divisions by the previous pivot are exact and no rationals appear
//! until the caller decides to form them.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Row-major square integer matrix.
pub type IntRows = Vec<Vec<BigInt>>;

struct Elimination {
    rows: IntRows,
    /// `+1` or `-1` from row swaps.
    sign: i8,
    /// `false` when a pivot column had no nonzero entry.
    regular: bool,
}

/// Reduces the leading `order` columns of `rows` to upper-triangular form in
/// place, carrying any trailing augmented columns along.
fn eliminate(mut rows: IntRows, order: usize) -> Elimination {
    let width = rows.first().map_or(0, Vec::len);
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..order {
        if rows[k][k].is_zero() {
            match (k + 1..order).find(|&i| !rows[i][k].is_zero()) {
                Some(i) => {
                    rows.swap(k, i);
                    sign = -sign;
                }
                None => {
                    return Elimination {
                        rows,
                        sign,
                        regular: false,
                    }
                }
            }
        }
        let (upper, lower) = rows.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        let pivot = &pivot_row[k];
        for row in lower.iter_mut().take(order - k - 1) {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..width {
                let mut v = &row[j] * pivot;
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v -= &factor * &pivot_row[j];
                }
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = rows[k][k].clone();
    }
    Elimination {
        rows,
        sign,
        regular: true,
    }
}

/// Determinant of a square integer matrix.
pub fn determinant(rows: IntRows) -> BigInt {
    let order = rows.len();
    if order == 0 {
        return BigInt::one();
    }
    debug_assert!(rows.iter().all(|r| r.len() == order));
    let e = eliminate(rows, order);
    if !e.regular {
        return BigInt::zero();
    }
    let det = e.rows[order - 1][order - 1].clone();
    if e.sign < 0 {
        -det
    } else {
        det
    }
}

/// Solution of `A X = det(A) I` for nonsingular `A`, i.e. the adjugate,
/// together with `det(A)`. Returns `None` for singular input.
pub fn adjugate(rows: IntRows) -> Option<(BigInt, IntRows)> {
    let order = rows.len();
    if order == 0 {
        return Some((BigInt::one(), Vec::new()));
    }
    let augmented: IntRows = rows
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            debug_assert_eq!(row.len(), order);
            row.extend((0..order).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let e = eliminate(augmented, order);
    if !e.regular {
        return None;
    }
    let u = e.rows;
    let last_pivot = u[order - 1][order - 1].clone();

    // Back substitution on each right-hand side column. With `x` scaled by
    // the last pivot every quotient is an exact integer.
    let mut solution = vec![vec![BigInt::zero(); order]; order];
    for col in 0..order {
        for i in (0..order).rev() {
            let mut acc = &last_pivot * &u[i][order + col];
            for j in i + 1..order {
                if !u[i][j].is_zero() {
                    acc -= &u[i][j] * &solution[j][col];
                }
            }
            debug_assert!((&acc % &u[i][i]).is_zero());
            solution[i][col] = acc / &u[i][i];
        }
    }

    // `last_pivot` is det up to the swap sign; normalise so the pair is
    // (det, adj) exactly.
    let det = if e.sign < 0 { -last_pivot } else { last_pivot };
    if e.sign < 0 {
        for row in &mut solution {
            for v in row.iter_mut() {
                *v = -std::mem::take(v);
            }
        }
    }
    debug_assert!(!det.is_zero());
    Some((det, solution))
}

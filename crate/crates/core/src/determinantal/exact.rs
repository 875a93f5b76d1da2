use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex bound for Ryser's permanent.
pub const DEFAULT_PERMANENT_BOUND: usize = 30;

/// Exact determinant of an integer matrix by fraction-free (Bareiss)
/// elimination. Every division is exact. The empty matrix has determinant 1.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let value = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = value;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// det of the 0/1 adjacency matrix of `g`.
pub fn det_adjacency(g: &Graph) -> BigInt {
    let a = g
        .adjacency_matrix()
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    bareiss_determinant(a)
}

/// perm of the 0/1 adjacency matrix of `g` by Ryser's inclusion-exclusion,
/// visiting column subsets in Gray-code order.
pub fn perm_adjacency(g: &Graph, bound: usize) -> Result<BigInt> {
    if g.order() > bound {
        return Err(Error::TooLarge {
            what: "permanent",
            n: g.order(),
            bound,
        });
    }
    Ok(ryser_permanent(&g.adjacency_matrix()))
}

/// Permanent of a square 0/1 matrix.
pub fn ryser_permanent(a: &[Vec<u8>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    // perm <= n! < 2^127 up to n = 33, so arithmetic modulo 2^128 recovers it
    if n <= 33 {
        BigInt::from(ryser_wrapping(a))
    } else {
        ryser_big(a)
    }
}

fn ryser_wrapping(a: &[Vec<u8>]) -> i128 {
    let n = a.len();
    let mut row_sums = vec![0i128; n];
    let mut total: i128 = 0;
    let mut prev_gray: u64 = 0;
    for k in 1u64..(1u64 << n) {
        let gray = k ^ (k >> 1);
        let col = (gray ^ prev_gray).trailing_zeros() as usize;
        let added = gray & (1 << col) != 0;
        for (sum, row) in row_sums.iter_mut().zip(a) {
            let x = row[col] as i128;
            if added {
                *sum += x;
            } else {
                *sum -= x;
            }
        }
        prev_gray = gray;
        let product = row_sums.iter().fold(1i128, |acc, &s| acc.wrapping_mul(s));
        if gray.count_ones() % 2 == 0 {
            total = total.wrapping_add(product);
        } else {
            total = total.wrapping_sub(product);
        }
    }
    if n % 2 == 1 {
        total.wrapping_neg()
    } else {
        total
    }
}

fn ryser_big(a: &[Vec<u8>]) -> BigInt {
    let n = a.len();
    let mut row_sums = vec![0i64; n];
    let mut total = BigInt::zero();
    let mut prev_gray: u64 = 0;
    for k in 1u64..(1u64 << n) {
        let gray = k ^ (k >> 1);
        let col = (gray ^ prev_gray).trailing_zeros() as usize;
        let sign = if gray & (1 << col) != 0 { 1 } else { -1 };
        for (sum, row) in row_sums.iter_mut().zip(a) {
            *sum += sign * row[col] as i64;
        }
        prev_gray = gray;
        let product = row_sums
            .iter()
            .fold(BigInt::one(), |acc, &s| acc * BigInt::from(s));
        if gray.count_ones() % 2 == 0 {
            total += product;
        } else {
            total -= product;
        }
    }
    if n % 2 == 1 {
        -total
    } else {
        total
    }
}

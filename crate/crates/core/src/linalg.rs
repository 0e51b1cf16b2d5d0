//! Exact dense linear algebra over the rationals and prime fields. Matrices
//! here are desk-scale; elimination picks pivots by row sparsity to limit
//! fill-in.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rank of a rational matrix (rows of equal length) by exact Gaussian
/// elimination. Consumes its input.
pub fn rank_rational(mut rows: Vec<Vec<BigRational>>) -> usize {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    let mut col = 0;
    while col < ncols && rank < rows.len() {
        // Pivot: among rows with a nonzero in this column, fewest nonzeros.
        let pivot = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r].iter().filter(|x| !x.is_zero()).count());
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] * &inv;
            for c in col..ncols {
                let delta = &factor * &rows[rank][c];
                rows[r][c] -= delta;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Rank of an integer matrix reduced mod p (p an odd prime < 2^31).
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let reduce = |x: i64| -> u64 { x.rem_euclid(p as i64) as u64 };
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| reduce(x)).collect()).collect();
    m.retain(|r| r.iter().any(|&x| x != 0));
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut col = 0;
    while col < ncols && rank < m.len() {
        let Some(p_row) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            col += 1;
            continue;
        };
        m.swap(rank, p_row);
        let inv = mod_inverse(m[rank][col], p);
        for r in rank + 1..m.len() {
            if m[r][col] == 0 {
                continue;
            }
            let factor = m[r][col] * inv % p;
            for c in col..ncols {
                let sub = factor * m[rank][c] % p;
                m[r][c] = (m[r][c] + p - sub) % p;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Basis of the right kernel {v : A v = 0} of a rational matrix with `ncols`
/// columns. Rows may be empty (kernel is then the full space).
pub fn kernel_rational(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    m.retain(|r| r.iter().any(|x| !x.is_zero()));
    // Reduced row echelon form.
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for c in col..ncols {
            let scaled = &m[rank][c] * &inv;
            m[rank][c] = scaled;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..ncols {
                    let delta = &factor * &m[rank][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![BigRational::zero(); ncols];
        v[free] = BigRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn bigint(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn rational(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

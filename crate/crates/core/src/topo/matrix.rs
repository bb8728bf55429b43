//! Arbitrary-precision integer matrices and Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Dense integer matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    /// Build from row slices. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().map(|&v| BigInt::from(v)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src]
    fn row_sub(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(dst, j) - q * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    /// col[dst] -= q * col[src]
    fn col_sub(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, dst) - q * self.get(i, src);
            self.set(i, dst, v);
        }
    }

    /// row[dst] += row[src]
    fn row_add(&mut self, dst: usize, src: usize) {
        for j in 0..self.cols {
            let v = self.get(dst, j) + self.get(src, j);
            self.set(dst, j, v);
        }
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Result of [`smith_normal_form`]: `d` is diagonal with positive entries
/// `d_1 | d_2 | ...`, `rank` counts them, and `invariant_factors` lists them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithNormalForm {
    pub d: IntegerMatrix,
    pub rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

/// Quotient minimizing the remainder: |a - q*b| <= |b| / 2.
fn rounded_quotient(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    if r.abs() * 2 > b.abs() {
        if r.sign() == b.sign() {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

fn min_abs_nonzero(a: &IntegerMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in from..a.rows() {
        for j in from..a.cols() {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a.get(bi, bj).abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Diagonalize by unimodular row and column operations, pivoting on a
/// minimal-absolute-value nonzero entry; the diagonal satisfies the
/// divisibility chain and the invariant factors are positive.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithNormalForm {
    let mut a = m.clone();
    let dim = a.rows().min(a.cols());
    let mut t = 0;
    'outer: while t < dim {
        let Some((pi, pj)) = min_abs_nonzero(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        // Nearest-integer quotients leave remainders at most half the
        // pivot, so each restart strictly shrinks the minimum.
        let mut dirty = false;
        for i in t + 1..a.rows() {
            if !a.get(i, t).is_zero() {
                let q = rounded_quotient(a.get(i, t), a.get(t, t));
                a.row_sub(i, t, &q);
                if !a.get(i, t).is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }
        for j in t + 1..a.cols() {
            if !a.get(t, j).is_zero() {
                let q = rounded_quotient(a.get(t, j), a.get(t, t));
                a.col_sub(j, t, &q);
                if !a.get(t, j).is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }
        // The pivot must divide every remaining entry or the diagonal
        // would break the divisibility chain; folding an offending row
        // into row t lets the reduction fix it.
        for i in t + 1..a.rows() {
            if (t + 1..a.cols()).any(|j| !a.get(i, j).mod_floor(a.get(t, t)).is_zero()) {
                a.row_add(t, i);
                continue 'outer;
            }
        }
        t += 1;
    }

    let mut d = IntegerMatrix::zero(m.rows(), m.cols());
    let mut invariant_factors = Vec::new();
    for k in 0..dim {
        let v = a.get(k, k).abs();
        if v.is_zero() {
            break;
        }
        d.set(k, k, v.clone());
        invariant_factors.push(v);
    }
    let rank = invariant_factors.len();
    SmithNormalForm {
        d,
        rank,
        invariant_factors,
    }
}

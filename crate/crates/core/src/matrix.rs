//! Dense 0/1 rook matrices, used as an independent oracle.
//!
//! Nothing here calls into the triplet formulas: products are the naive
//! cubic matrix product and nilpotency is found by repeated multiplication.

use std::fmt;
use std::str::FromStr;

use crate::element::{Ambient, Element};
use crate::error::MatrixError;

/// `n x n` matrix with at most one 1 per row and per column.
///
/// Row `i` is a bit set over columns, stored in 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DenseRookMatrix {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl DenseRookMatrix {
    pub fn zero(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        DenseRookMatrix { n, words, rows: vec![0; n * words] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 1..=n {
            m.set(i, i);
        }
        m
    }

    /// Builds from 1-based `(row, column)` positions of the ones.
    pub fn from_ones(n: usize, ones: &[(usize, usize)]) -> Result<Self, MatrixError> {
        let mut m = Self::zero(n);
        for &(i, j) in ones {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(MatrixError::NotRook(format!("entry ({i},{j}) outside a {n} x {n} matrix")));
            }
            m.set(i, j);
        }
        m.check_rook()?;
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// 1-based entry.
    pub fn get(&self, i: usize, j: usize) -> bool {
        let (w, b) = ((j - 1) / 64, (j - 1) % 64);
        self.rows[(i - 1) * self.words + w] >> b & 1 == 1
    }

    fn set(&mut self, i: usize, j: usize) {
        let (w, b) = ((j - 1) / 64, (j - 1) % 64);
        self.rows[(i - 1) * self.words + w] |= 1 << b;
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.rows[(i - 1) * self.words..i * self.words]
    }

    /// 1-based positions of the ones, row-major.
    pub fn ones(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if self.get(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|&w| w == 0)
    }

    fn check_rook(&self) -> Result<(), MatrixError> {
        let mut column_seen = vec![0u64; self.words];
        for i in 1..=self.n {
            let row = self.row(i);
            let count: u32 = row.iter().map(|w| w.count_ones()).sum();
            if count > 1 {
                return Err(MatrixError::NotRook(format!("row {i} has {count} ones")));
            }
            for (seen, &w) in column_seen.iter_mut().zip(row) {
                if *seen & w != 0 {
                    return Err(MatrixError::NotRook(format!("a column repeats in row {i}")));
                }
                *seen |= w;
            }
        }
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (i, j) in self.ones() {
            out.set(j, i);
        }
        out
    }
}

impl fmt::Display for DenseRookMatrix {
    /// `n` lines of `n` characters from `{0,1}`, each line newline-terminated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            for j in 1..=self.n {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

impl FromStr for DenseRookMatrix {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lines: Vec<&str> = s.lines().map(str::trim_end).filter(|l| !l.is_empty()).collect();
        let n = lines.len();
        let mut m = Self::zero(n);
        for (idx, line) in lines.iter().enumerate() {
            let found = line.chars().count();
            if found != n {
                return Err(MatrixError::Ragged { line: idx + 1, expected: n, found });
            }
            for (col, c) in line.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => m.set(idx + 1, col + 1),
                    other => return Err(MatrixError::BadCharacter { line: idx + 1, column: col + 1, found: other }),
                }
            }
        }
        m.check_rook()?;
        Ok(m)
    }
}

/// Matrix of `x` in `M_n`: `x_ij = 1` iff `k <= i <= m` and `j = i + d`.
///
/// # Panics
/// If `x` is not valid in `M_n`.
pub fn to_matrix(x: Element, n: usize) -> DenseRookMatrix {
    let mut out = DenseRookMatrix::zero(n);
    if let Element::NonZero(t) = x {
        let ambient = Ambient::finite(n as i64).expect("dimension at least 2");
        assert!(t.is_valid_in(ambient), "{t} is not an element of M_{n}");
        for i in t.k()..=t.m() {
            out.set(i as usize, (i + t.d()) as usize);
        }
    }
    out
}

/// Recognises matrices of `M_n`: ones on one diagonal, in a gapless block.
pub fn from_matrix(mat: &DenseRookMatrix) -> Result<Element, MatrixError> {
    let ambient = Ambient::finite(mat.n as i64)?;
    let ones = mat.ones();
    let Some(&(first_i, first_j)) = ones.first() else {
        return Ok(Element::Zero);
    };
    let d = first_j as i64 - first_i as i64;
    for (idx, &(i, j)) in ones.iter().enumerate() {
        if j as i64 - i as i64 != d {
            return Err(MatrixError::NotInMn(format!("ones span several diagonals (entry ({i},{j}))")));
        }
        if i != first_i + idx {
            return Err(MatrixError::NotInMn(format!("block of ones is interrupted before row {i}")));
        }
    }
    let k = first_i as i64;
    let m = ones.last().map(|&(i, _)| i as i64).unwrap_or(k);
    Ok(Element::new(d, k, m, ambient)?)
}

/// Ordinary integer matrix product.
pub fn mat_multiply(a: &DenseRookMatrix, b: &DenseRookMatrix) -> Result<DenseRookMatrix, MatrixError> {
    if a.n != b.n {
        return Err(MatrixError::DimensionMismatch { left: a.n, right: b.n });
    }
    let n = a.n;
    let mut out = DenseRookMatrix::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            let mut sum = 0u32;
            for l in 1..=n {
                sum += u32::from(a.get(i, l) && b.get(l, j));
            }
            if sum > 1 {
                return Err(MatrixError::NotRook(format!("product entry ({i},{j}) is {sum}")));
            }
            if sum == 1 {
                out.set(i, j);
            }
        }
    }
    out.check_rook()?;
    Ok(out)
}

/// Least `l >= 1` with `M^l = 0`, searching up to `l = n`; `None` if `M^n != 0`.
pub fn mat_nilpotency_index(mat: &DenseRookMatrix) -> Option<usize> {
    let mut acc = mat.clone();
    for l in 1..=mat.n.max(1) {
        if acc.is_zero() {
            return Some(l);
        }
        acc = mat_multiply(&acc, mat).expect("powers of a rook matrix are rook matrices");
    }
    None
}

//! Exact matrices over the rationals, stored as integer representatives.
//!
//! Every subspace computation only depends on the column or row span, so a
//! rational matrix can be replaced by an integer matrix with the same span.
//! Elimination runs in `i128` and keeps rows primitive.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Panics if the rows have unequal lengths.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn from_cols(rows: usize, cols: &[Vec<i64>]) -> Self {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, &v) in c.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn hstack(blocks: &[&Matrix], rows: usize) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row count");
            for i in 0..rows {
                for j in 0..b.cols {
                    out.set(i, offset + j, b.get(i, j));
                }
            }
            offset += b.cols;
        }
        out
    }

    pub fn vstack(blocks: &[&Matrix], cols: usize) -> Matrix {
        let mut data = Vec::new();
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column count");
            data.extend_from_slice(&b.data);
        }
        Matrix {
            rows: blocks.iter().map(|b| b.rows).sum(),
            cols,
            data,
        }
    }

    pub fn row_block(&self, start: usize, len: usize) -> Matrix {
        let mut out = Matrix::zeros(len, self.cols);
        for i in 0..len {
            for j in 0..self.cols {
                out.set(i, j, self.get(start + i, j));
            }
        }
        out
    }

    pub fn col_block(&self, start: usize, len: usize) -> Matrix {
        let mut out = Matrix::zeros(self.rows, len);
        for i in 0..self.rows {
            for j in 0..len {
                out.set(i, j, self.get(i, start + j));
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        Echelon::of(self).pivots.len()
    }

    /// Columns spanning the null space, in reduced echelon normal form.
    pub fn kernel(&self) -> Matrix {
        let e = Echelon::of(self);
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        let vectors: Vec<Vec<i64>> = free
            .iter()
            .map(|&f| {
                let scale = e
                    .pivots
                    .iter()
                    .enumerate()
                    .filter(|(r, _)| e.rows[*r][f] != 0)
                    .fold(1i128, |acc, (r, &p)| acc.lcm(&e.rows[r][p]));
                let mut v = vec![0i128; self.cols];
                v[f] = scale;
                for (r, &p) in e.pivots.iter().enumerate() {
                    v[p] = -e.rows[r][f] * scale / e.rows[r][p];
                }
                narrow(primitive(v))
            })
            .collect();
        Matrix::from_cols(self.cols, &vectors)
    }

    /// Rows `q` with `q * self = 0`, stacked.
    pub fn left_null(&self) -> Matrix {
        self.transpose().kernel().transpose()
    }

    /// Independent columns spanning the column space.
    pub fn column_basis(&self) -> Matrix {
        let e = Echelon::of(&self.transpose());
        let cols: Vec<Vec<i64>> = e.rows.into_iter().map(narrow).collect();
        Matrix::from_cols(self.rows, &cols)
    }

    /// Whether the columns of `other` lie in the column span of `self`.
    pub fn spans(&self, other: &Matrix) -> bool {
        assert_eq!(self.rows, other.rows, "span test row count");
        self.rank() == Matrix::hstack(&[self, other], self.rows).rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }
}

fn primitive(mut v: Vec<i128>) -> Vec<i128> {
    let g = v.iter().fold(0i128, |acc, x| acc.gcd(x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
    if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    v
}

fn narrow(v: Vec<i128>) -> Vec<i64> {
    v.into_iter()
        .map(|x| i64::try_from(x).expect("matrix entry overflow"))
        .collect()
}

/// Reduced row echelon form up to row scaling: each pivot column is zero
/// outside its pivot row, and every row is primitive with positive pivot.
struct Echelon {
    rows: Vec<Vec<i128>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn of(m: &Matrix) -> Echelon {
        let mut rows: Vec<Vec<i128>> = (0..m.rows)
            .map(|i| m.row(i).iter().map(|&x| x as i128).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, p);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row[c] != 0 {
                    let (a, b) = (pivot_row[c], row[c]);
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        *x = *x * a - b * y;
                    }
                    *row = primitive(std::mem::take(row));
                }
            }
            rows[r] = primitive(std::mem::take(&mut rows[r]));
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        Echelon { rows, pivots }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            f.write_str(&row.join(" "))?;
        }
        f.write_str("]")
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<&[i64]> = (0..self.rows).map(|i| self.row(i)).collect();
        rows.serialize(s)
    }
}

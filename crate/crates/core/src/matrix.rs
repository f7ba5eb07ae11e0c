//! Dense rational matrices: reduced row echelon form, rank, kernels.

use crate::rat::Rat;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Reduced row echelon form: unit pivots, zeros above and below each pivot,
    /// pivot columns strictly increasing, zero rows at the bottom. Returns the
    /// reduced matrix and its pivot column indices (rank = pivot count).
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..m.cols {
                    let a = m.at(src, c).clone();
                    let b = m.at(pivot_row, c).clone();
                    m.set(src, c, b);
                    m.set(pivot_row, c, a);
                }
            }
            let inv = m.at(pivot_row, col).recip();
            for c in 0..m.cols {
                let v = m.at(pivot_row, c) * &inv;
                m.set(pivot_row, c, v);
            }
            for r in 0..m.rows {
                if r != pivot_row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for c in 0..m.cols {
                        let v = m.at(r, c) - &(&factor * m.at(pivot_row, c));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{ v : M v = 0 }`, one vector per free column, in column order.
    /// Each vector has entry 1 at its free column and 0 at the other free columns.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.at(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for c in 0..self.cols {
                    acc += self.at(r, c) * &v[c];
                }
                acc
            })
            .collect()
    }
}

/// True when the row spans of the two matrices coincide.
pub fn same_row_span(a: &Mat, b: &Mat) -> bool {
    if a.cols != b.cols {
        return false;
    }
    let (ra, pa) = a.rref();
    let (rb, pb) = b.rref();
    if pa != pb {
        return false;
    }
    (0..pa.len()).all(|i| ra.row(i) == rb.row(i))
}

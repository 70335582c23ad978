//! Minimal dense linear algebra over `F_p`: kernel bases and ranks of
//! the graded multiplication matrices used by the syzygy oracle.
//! Matrices are tiny (dimensions bounded by the scroll degree), so
//! plain Gaussian elimination with the first nonzero pivot is enough
//! and keeps everything deterministic.

use crate::field::FieldConfig;

/// Matrix stored as rows of equal length.
#[derive(Debug, Clone)]
pub(crate) struct Matrix {
    pub rows: Vec<Vec<u64>>,
    pub cols: usize,
}

impl Matrix {
    pub fn new(rows: Vec<Vec<u64>>, cols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        Matrix { rows, cols }
    }
}

/// Reduces `m` in place to row echelon form; returns the pivot columns.
fn echelonize(cfg: &FieldConfig, m: &mut Matrix) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..m.cols {
        let Some(pivot_row) = (row..m.rows.len()).find(|&r| m.rows[r][col] != 0) else {
            continue;
        };
        m.rows.swap(row, pivot_row);
        let inv = cfg.inv(m.rows[row][col]);
        for c in col..m.cols {
            m.rows[row][c] = cfg.mul(m.rows[row][c], inv);
        }
        for r in 0..m.rows.len() {
            if r != row && m.rows[r][col] != 0 {
                let factor = m.rows[r][col];
                for c in col..m.cols {
                    let delta = cfg.mul(factor, m.rows[row][c]);
                    m.rows[r][c] = cfg.sub(m.rows[r][c], delta);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.rows.len() {
            break;
        }
    }
    pivots
}

pub(crate) fn rank(cfg: &FieldConfig, rows: Vec<Vec<u64>>, cols: usize) -> usize {
    let mut m = Matrix::new(rows, cols);
    echelonize(cfg, &mut m).len()
}

/// Basis of the right null space `{ v : M v = 0 }` of the matrix with
/// the given rows. Vectors come out in free-column order, which is
/// deterministic for a fixed input.
pub(crate) fn kernel_basis(cfg: &FieldConfig, rows: Vec<Vec<u64>>, cols: usize) -> Vec<Vec<u64>> {
    let mut m = Matrix::new(rows, cols);
    let pivots = echelonize(cfg, &mut m);
    let pivot_set: Vec<Option<usize>> = {
        let mut lookup = vec![None; cols];
        for (r, &c) in pivots.iter().enumerate() {
            lookup[c] = Some(r);
        }
        lookup
    };
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set[free].is_some() {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (col, slot) in pivot_set.iter().enumerate() {
            if let Some(r) = slot {
                // Reduced echelon: pivot row has 1 at `col`, so the
                // coordinate is minus the entry in the free column.
                v[col] = cfg.neg(m.rows[*r][free]);
            }
        }
        basis.push(v);
    }
    basis
}

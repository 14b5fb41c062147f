use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense `n × d` matrix of vertex attributes, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttributeMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl AttributeMatrix {
    /// Every value must be finite.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        let d = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n * d);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != d {
                return Err(Error::input(format!(
                    "row {i} has {} columns, expected {d}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Self::from_row_major(n, d, data)
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::input(format!(
                "{} values cannot fill a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(pos) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::input(format!(
                "non-finite attribute at row {}, column {}",
                pos / cols.max(1),
                pos % cols.max(1)
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// `n × 0` matrix, for plain graphs.
    pub fn empty(rows: usize) -> Self {
        Self {
            rows,
            cols: 0,
            data: Vec::new(),
        }
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<f64> {
        (0..self.rows).map(|r| self.get(r, col)).collect()
    }

    /// Values of column `col` at the given rows, in that order.
    pub fn column_at(&self, col: usize, rows: &[usize]) -> Vec<f64> {
        rows.iter().map(|&r| self.get(r, col)).collect()
    }

    /// Appends one column.
    pub fn with_column(&self, column: &[f64]) -> Result<Self> {
        if column.len() != self.rows {
            return Err(Error::input(format!(
                "column has {} entries, matrix has {} rows",
                column.len(),
                self.rows
            )));
        }
        let cols = self.cols + 1;
        let mut data = Vec::with_capacity(self.rows * cols);
        for (r, &extra) in column.iter().enumerate() {
            data.extend_from_slice(self.row(r));
            data.push(extra);
        }
        Self::from_row_major(self.rows, cols, data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ragged_rows_rejected() {
        assert!(AttributeMatrix::from_rows(vec![vec![1.0, 2.0], vec![3.0]]).is_err());
    }

    #[test]
    fn nan_rejected() {
        assert!(AttributeMatrix::from_rows(vec![vec![1.0], vec![f64::NAN]]).is_err());
    }

    #[test]
    fn append_column() {
        let m = AttributeMatrix::from_rows(vec![vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let m2 = m.with_column(&[9.0, 8.0]).unwrap();
        assert_eq!(m2.num_cols(), 3);
        assert_eq!(m2.row(1), &[3.0, 4.0, 8.0]);
        assert_eq!(m2.column_at(2, &[1, 0]), vec![8.0, 9.0]);
    }
}

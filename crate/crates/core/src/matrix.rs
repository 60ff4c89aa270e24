//! Dense matrix views: the 0-1 adjacency matrix `A` and its integer square.

use crate::error::{Error, Result};

/// A square 0-1 matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroOneMatrix {
    order: usize,
    entries: Vec<bool>,
}

impl ZeroOneMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: vec![false; order * order],
        }
    }

    /// Rejects ragged input and entries other than 0 or 1.
    pub fn from_rows(rows: &[Vec<u64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
            for (j, &value) in row.iter().enumerate() {
                match value {
                    0 => {}
                    1 => m.set(i, j, true),
                    _ => return Err(Error::NotZeroOne { row: i, col: j, value }),
                }
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.entries[i * self.order + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.entries[i * self.order + j] = value;
    }

    pub fn trace(&self) -> usize {
        (0..self.order).filter(|&i| self.get(i, i)).count()
    }

    pub fn count_ones(&self) -> usize {
        self.entries.iter().filter(|&&b| b).count()
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j) as u64).collect())
            .collect()
    }
}

/// A square matrix of nonnegative integers, used to hold `A^2` unclamped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatMatrix {
    order: usize,
    entries: Vec<u64>,
}

impl NatMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: vec![0; order * order],
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.order + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: u64) {
        self.entries[i * self.order + j] = value;
    }

    pub fn max_entry(&self) -> u64 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    pub fn trace(&self) -> u64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries
            .chunks(self.order.max(1))
            .map(<[u64]>::to_vec)
            .collect()
    }
}

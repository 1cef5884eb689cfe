use std::fmt;

use crate::polyring::Polynomial;

/// Square matrix of polynomials, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(size: usize) -> Self {
        PolyMatrix {
            size,
            entries: vec![Polynomial::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = PolyMatrix::zeros(size);
        for i in 0..size {
            m.set(i, i, Polynomial::one());
        }
        m
    }

    /// Panics unless every row has `rows.len()` entries.
    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Self {
        let size = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == size),
            "matrix must be square"
        );
        PolyMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Polynomial) {
        self.entries[row * self.size + col] = value;
    }

    pub fn rows(&self) -> Vec<Vec<Polynomial>> {
        self.entries
            .chunks(self.size.max(1))
            .take(self.size)
            .map(<[Polynomial]>::to_vec)
            .collect()
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

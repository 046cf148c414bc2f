//! Small dense complex matrices for the numerical oracles.
//!
//! Everything here is deliberately naive: the oracle paths only ever touch
//! matrices up to 2^6 x 2^6, where clarity beats cleverness.

pub use num_complex::Complex64;

/// A row-major dense matrix over the complex numbers.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix from nested row slices.
    pub fn from_rows(rows: &[&[Complex64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        CMatrix {
            rows: r,
            cols: c,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "mul: inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Kronecker product; `self` indexes the most significant factor.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a * other[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn dagger(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b;
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        assert_eq!(self.rows, self.cols, "trace: matrix not square");
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| (a - b).norm() <= tol)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.approx_eq(&self.dagger(), tol)
    }

    /// Partial trace of a 2^m x 2^m operator over the qubits *not* listed
    /// in `keep`. Qubit 0 is the most significant index bit, matching the
    /// Kronecker-product convention above. `keep` must be strictly
    /// increasing, so the reduced operator orders its qubits the same way.
    pub fn partial_trace(&self, num_qubits: usize, keep: &[usize]) -> Self {
        assert_eq!(self.rows, self.cols);
        assert_eq!(self.rows, 1 << num_qubits, "dimension is not 2^m");
        assert!(keep.windows(2).all(|w| w[0] < w[1]), "keep must be sorted");
        assert!(keep.iter().all(|&q| q < num_qubits));
        let traced: Vec<usize> = (0..num_qubits).filter(|q| !keep.contains(q)).collect();
        let kd = 1usize << keep.len();
        let td = 1usize << traced.len();
        let mut out = Self::zeros(kd, kd);

        // Spread the bits of a compressed index back onto qubit positions.
        let expand = |compressed: usize, positions: &[usize]| -> usize {
            let mut full = 0usize;
            for (bit, &q) in positions.iter().enumerate() {
                if compressed >> (positions.len() - 1 - bit) & 1 == 1 {
                    full |= 1 << (num_qubits - 1 - q);
                }
            }
            full
        };

        for a in 0..kd {
            for b in 0..kd {
                let mut sum = Complex64::new(0.0, 0.0);
                for t in 0..td {
                    let row = expand(a, keep) | expand(t, &traced);
                    let col = expand(b, keep) | expand(t, &traced);
                    sum += self[(row, col)];
                }
                out[(a, b)] = sum;
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.cols + c]
    }
}

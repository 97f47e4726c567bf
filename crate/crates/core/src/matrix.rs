//! Dense matrices used across the crate: exact rationals, machine integers,
//! and 0/1 matrices. No floating point appears anywhere in this module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::Write as _;

/// Dense square matrix of exact rationals (arbitrary-precision
/// numerator/denominator).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    dim: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(dim: usize) -> Self {
        RationalMatrix {
            dim,
            data: vec![BigRational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = BigRational::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        &self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigRational) {
        self.data[row * self.dim + col] = value;
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.data[c * self.dim + r] = self.data[r * self.dim + c].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = &self.data[r * n + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = &other.data[k * n + c];
                    if !b.is_zero() {
                        out.data[r * n + c] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Exact `p`-th power, `p >= 1`.
    pub fn pow(&self, p: u32) -> Self {
        assert!(p >= 1, "power must be positive");
        let mut acc = self.clone();
        for _ in 1..p {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        let n = self.dim;
        self.data.iter().enumerate().all(|(idx, v)| {
            if idx / n == idx % n {
                v.is_one()
            } else {
                v.is_zero()
            }
        })
    }

    /// Entrywise nonzero indicator; exactness means no tolerance is involved.
    pub fn support(&self) -> BinaryMatrix {
        BinaryMatrix {
            dim: self.dim,
            data: self.data.iter().map(|v| !v.is_zero() as u8).collect(),
        }
    }

    /// Entrywise strict-positivity indicator, decided in exact arithmetic.
    pub fn positive_support(&self) -> BinaryMatrix {
        BinaryMatrix {
            dim: self.dim,
            data: self.data.iter().map(|v| (v.is_positive()) as u8).collect(),
        }
    }

    /// Lossy conversion for the floating eigensolver.
    pub fn to_float_rows(&self) -> Vec<Vec<f64>> {
        use num_traits::ToPrimitive;
        (0..self.dim)
            .map(|r| {
                (0..self.dim)
                    .map(|c| self.get(r, c).to_f64().expect("rational fits in f64"))
                    .collect()
            })
            .collect()
    }

    /// True when every column sums to exactly 1.
    pub fn is_column_stochastic(&self) -> bool {
        (0..self.dim).all(|c| {
            let sum: BigRational = (0..self.dim).map(|r| self.get(r, c).clone()).sum();
            sum.is_one()
        })
    }

    /// Plain-text dump, one `row col num/den` triplet per nonzero entry.
    pub fn write_triplets(&self) -> String {
        let mut out = String::new();
        for r in 0..self.dim {
            for c in 0..self.dim {
                let v = self.get(r, c);
                if !v.is_zero() {
                    writeln!(out, "{} {} {}/{}", r, c, v.numer(), v.denom()).unwrap();
                }
            }
        }
        out
    }
}

/// Dense square matrix of machine integers. Inputs to the characteristic
/// polynomial backends (adjacency and support matrices) always fit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            data: vec![0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "ragged rows");
            m.data[r * dim..(r + 1) * dim].copy_from_slice(row);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        self.data[row * self.dim + col] = value;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.dim..(r + 1) * self.dim]
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Overflow-checked multiply; support/adjacency inputs stay tiny, the
    /// check guards exotic callers.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    let b = other.data[k * n + c];
                    if b != 0 {
                        let cell = &mut out.data[r * n + c];
                        *cell = cell
                            .checked_add(a.checked_mul(b).expect("entry overflow"))
                            .expect("entry overflow");
                    }
                }
            }
        }
        out
    }

    pub fn to_float_rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim)
            .map(|r| self.row(r).iter().map(|&v| v as f64).collect())
            .collect()
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .map(|&v| BigRational::from(BigInt::from(v)))
                .collect(),
        }
    }

    /// Entrywise strict-positivity indicator.
    pub fn positive_support(&self) -> BinaryMatrix {
        BinaryMatrix {
            dim: self.dim,
            data: self.data.iter().map(|&v| (v > 0) as u8).collect(),
        }
    }
}

/// Dense square 0/1 matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    dim: usize,
    data: Vec<u8>,
}

impl BinaryMatrix {
    pub fn zeros(dim: usize) -> Self {
        BinaryMatrix {
            dim,
            data: vec![0; dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                m.data[r * dim + c] = f(r, c) as u8;
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        self.data[row * self.dim + col] = value as u8;
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|&b| b as usize).sum()
    }

    /// Boolean matrix product: reachability by one step of each factor.
    pub fn mul_bool(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                if self.data[r * n + k] == 0 {
                    continue;
                }
                for c in 0..n {
                    if other.data[k * n + c] != 0 {
                        out.data[r * n + c] = 1;
                    }
                }
            }
        }
        out
    }

    /// Boolean `p`-th power: the support of the integer `p`-th power, since
    /// an entry of the integer power is positive exactly when a length-`p`
    /// walk exists.
    pub fn pow_bool(&self, p: u32) -> Self {
        assert!(p >= 1, "power must be positive");
        let mut acc = self.clone();
        for _ in 1..p {
            acc = acc.mul_bool(self);
        }
        acc
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix {
            dim: self.dim,
            data: self.data.iter().map(|&b| b as i64).collect(),
        }
    }

    pub fn is_all_ones(&self) -> bool {
        self.data.iter().all(|&b| b == 1)
    }

    /// Plain-text dump: dense 0/1 rows, one row per line.
    pub fn write_dense(&self) -> String {
        let mut out = String::new();
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.push(if self.get(r, c) == 1 { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn support_and_positive_support() {
        let mut m = RationalMatrix::zeros(2);
        m.set(0, 0, rat(1, 2));
        m.set(0, 1, rat(-1, 3));
        m.set(1, 1, rat(2, 1));
        let s = m.support();
        assert_eq!(
            (s.get(0, 0), s.get(0, 1), s.get(1, 0), s.get(1, 1)),
            (1, 1, 0, 1)
        );
        let mut p = RationalMatrix::zeros(2);
        p.set(0, 0, rat(1, 2));
        p.set(0, 1, rat(-1, 2));
        p.set(1, 1, rat(1, 1));
        let sp = p.positive_support();
        assert_eq!(
            (sp.get(0, 0), sp.get(0, 1), sp.get(1, 0), sp.get(1, 1)),
            (1, 0, 0, 1)
        );
    }

    #[test]
    fn support_of_zero_matrix_is_zero() {
        let z = RationalMatrix::zeros(3);
        assert_eq!(z.support().count_ones(), 0);
        assert_eq!(z.positive_support().count_ones(), 0);
    }

    #[test]
    fn rational_power() {
        let mut m = RationalMatrix::zeros(2);
        m.set(0, 1, rat(1, 1));
        m.set(1, 0, rat(1, 1));
        assert!(m.pow(2).is_identity());
        assert_eq!(m.pow(1), m);
        assert_eq!(m.pow(3), m);
    }

    #[test]
    fn binary_power_matches_integer_support() {
        // Path 0-1-2: squared reaches distance-2 pairs and self.
        let a = BinaryMatrix::from_fn(3, |r, c| (r as i64 - c as i64).abs() == 1);
        let sq = a.pow_bool(2);
        let int_sq = a.to_int_matrix().mul(&a.to_int_matrix());
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(sq.get(r, c) == 1, int_sq.get(r, c) > 0);
            }
        }
    }

    #[test]
    fn dumps() {
        let mut m = RationalMatrix::zeros(2);
        m.set(0, 1, rat(-2, 3));
        assert_eq!(m.write_triplets(), "0 1 -2/3\n");
        let b = BinaryMatrix::from_fn(2, |r, c| r == c);
        assert_eq!(b.write_dense(), "10\n01\n");
    }
}

use num_traits::Zero;

use super::matrix::Matrix;
use super::rational::Rational;

/// Dense row-major tensor over ℚ. The last axis is contiguous, so
/// [`Tensor::fiber`] hands out output vectors of multilinear maps directly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<Rational>,
}

impl Tensor {
    pub fn zeros(shape: &[usize]) -> Self {
        let len = shape.iter().product();
        Self { shape: shape.to_vec(), data: vec![Rational::zero(); len] }
    }

    pub fn from_data(shape: &[usize], data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), shape.iter().product::<usize>(), "tensor data length mismatch");
        Self { shape: shape.to_vec(), data }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.shape.len());
        idx.iter().zip(&self.shape).fold(0, |acc, (&i, &n)| {
            debug_assert!(i < n);
            acc * n + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &Rational {
        &self.data[self.offset(idx)]
    }

    pub fn get_mut(&mut self, idx: &[usize]) -> &mut Rational {
        let o = self.offset(idx);
        &mut self.data[o]
    }

    pub fn set(&mut self, idx: &[usize], v: Rational) {
        *self.get_mut(idx) = v;
    }

    /// Slice along the last axis at the given leading indices.
    pub fn fiber(&self, prefix: &[usize]) -> &[Rational] {
        assert_eq!(prefix.len() + 1, self.shape.len());
        let last = *self.shape.last().unwrap();
        let start = prefix.iter().zip(&self.shape).fold(0, |acc, (&i, &n)| acc * n + i) * last;
        &self.data[start..start + last]
    }

    pub fn fiber_mut(&mut self, prefix: &[usize]) -> &mut [Rational] {
        assert_eq!(prefix.len() + 1, self.shape.len());
        let last = *self.shape.last().unwrap();
        let start = prefix.iter().zip(&self.shape).fold(0, |acc, (&i, &n)| acc * n + i) * last;
        &mut self.data[start..start + last]
    }

    /// Mode product along `axis`: `out[.., a, ..] = Σ_i m[a][i] · self[.., i, ..]`.
    pub fn contract_axis(&self, axis: usize, m: &Matrix) -> Tensor {
        assert!(axis < self.shape.len());
        assert_eq!(m.cols(), self.shape[axis], "contract_axis dimension mismatch");
        let outer: usize = self.shape[..axis].iter().product();
        let inner: usize = self.shape[axis + 1..].iter().product();
        let n_in = self.shape[axis];
        let n_out = m.rows();
        let mut shape = self.shape.clone();
        shape[axis] = n_out;
        let mut out = Tensor::zeros(&shape);
        for o in 0..outer {
            for i in 0..n_in {
                let base_in = (o * n_in + i) * inner;
                if self.data[base_in..base_in + inner].iter().all(Zero::is_zero) {
                    continue;
                }
                for a in 0..n_out {
                    let coeff = &m[(a, i)];
                    if coeff.is_zero() {
                        continue;
                    }
                    let base_out = (o * n_out + a) * inner;
                    for k in 0..inner {
                        let v = &self.data[base_in + k];
                        if !v.is_zero() {
                            out.data[base_out + k] += coeff * v;
                        }
                    }
                }
            }
        }
        out
    }

    /// Pulls every argument axis back along `p` and pushes the last (output)
    /// axis forward along `q`.
    pub fn change_basis(&self, p: &Matrix, q: &Matrix) -> Tensor {
        let pt = p.transpose();
        let rank = self.shape.len();
        let mut t = self.clone();
        for axis in 0..rank - 1 {
            t = t.contract_axis(axis, &pt);
        }
        t.contract_axis(rank - 1, q)
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.shape, other.shape);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Tensor { shape: self.shape.clone(), data }
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.shape, other.shape);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Tensor { shape: self.shape.clone(), data }
    }

    pub fn scale(&self, s: &Rational) -> Tensor {
        Tensor { shape: self.shape.clone(), data: self.data.iter().map(|a| a * s).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rational::int;

    #[test]
    fn contract_matches_direct_sum() {
        // t[i][j] = i + 2j on a 2x3 grid; contract axis 0 with [[1,1],[0,3]]
        let mut t = Tensor::zeros(&[2, 3]);
        for i in 0..2 {
            for j in 0..3 {
                t.set(&[i, j], int((i + 2 * j) as i64));
            }
        }
        let m = Matrix::from_i64(&[&[1, 1], &[0, 3]]);
        let c = t.contract_axis(0, &m);
        for j in 0..3 {
            assert_eq!(c.get(&[0, j]), &int((2 * j + 1 + 2 * j) as i64));
            assert_eq!(c.get(&[1, j]), &int(3 * (1 + 2 * j) as i64));
        }
    }

    #[test]
    fn fiber_is_last_axis() {
        let mut t = Tensor::zeros(&[2, 2, 3]);
        t.set(&[1, 0, 2], int(5));
        assert_eq!(t.fiber(&[1, 0]), &[int(0), int(0), int(5)]);
    }
}

//! The rank-N numeric array type that carries every value in the crate.
//!
//! Storage is always `f64` internally so that covariance estimation, AUROC
//! computation, and gradient checks are not sensitive to the dtype a file
//! happened to be written with. The [`Dtype`] tag records the on-disk element
//! type for interchange.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// On-disk element type of a tensor. All in-memory arithmetic is `f64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Dtype {
    F32,
    F64,
    I64,
}

impl Dtype {
    /// NPY dtype descriptor (little-endian).
    pub fn descr(self) -> &'static str {
        match self {
            Dtype::F32 => "<f4",
            Dtype::F64 => "<f8",
            Dtype::I64 => "<i8",
        }
    }

    /// Bytes per element.
    pub fn item_size(self) -> usize {
        match self {
            Dtype::F32 => 4,
            Dtype::F64 | Dtype::I64 => 8,
        }
    }
}

#[derive(Debug, Error)]
pub enum TensorError {
    #[error("shape {shape:?} implies {expected} elements, got {actual}")]
    LengthMismatch {
        shape: Vec<usize>,
        expected: usize,
        actual: usize,
    },
    #[error("index {index:?} out of bounds for shape {shape:?}")]
    IndexOutOfBounds { index: Vec<usize>, shape: Vec<usize> },
    #[error("cannot reshape {from:?} ({from_len} elements) to {to:?} ({to_len} elements)")]
    ReshapeMismatch {
        from: Vec<usize>,
        from_len: usize,
        to: Vec<usize>,
        to_len: usize,
    },
}

/// Dense rank-N array, row-major, immutable after construction.
///
/// Rank-0 tensors (empty shape) hold exactly one element. Feature maps use
/// the `[rows, cols, channels]` axis order.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    shape: Vec<usize>,
    dtype: Dtype,
    data: Vec<f64>,
}

impl Tensor {
    pub fn new(shape: Vec<usize>, dtype: Dtype, data: Vec<f64>) -> Result<Self, TensorError> {
        let expected: usize = shape.iter().product();
        if expected != data.len() {
            return Err(TensorError::LengthMismatch {
                shape,
                expected,
                actual: data.len(),
            });
        }
        Ok(Tensor { shape, dtype, data })
    }

    /// `f64` tensor from raw data.
    pub fn from_f64(shape: Vec<usize>, data: Vec<f64>) -> Result<Self, TensorError> {
        Tensor::new(shape, Dtype::F64, data)
    }

    /// Rank-1 `f64` tensor.
    pub fn from_vec(data: Vec<f64>) -> Self {
        let shape = vec![data.len()];
        Tensor {
            shape,
            dtype: Dtype::F64,
            data,
        }
    }

    /// Rank-0 scalar.
    pub fn scalar(value: f64) -> Self {
        Tensor {
            shape: vec![],
            dtype: Dtype::F64,
            data: vec![value],
        }
    }

    pub fn zeros(shape: Vec<usize>) -> Self {
        let len = shape.iter().product();
        Tensor {
            shape,
            dtype: Dtype::F64,
            data: vec![0.0; len],
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn dtype(&self) -> Dtype {
        self.dtype
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<f64> {
        self.data
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    /// Row-major flat offset of a multi-index.
    pub fn offset(&self, index: &[usize]) -> Result<usize, TensorError> {
        if index.len() != self.shape.len() || index.iter().zip(&self.shape).any(|(i, s)| i >= s) {
            return Err(TensorError::IndexOutOfBounds {
                index: index.to_vec(),
                shape: self.shape.clone(),
            });
        }
        let mut off = 0;
        for (i, s) in index.iter().zip(&self.shape) {
            off = off * s + i;
        }
        Ok(off)
    }

    pub fn at(&self, index: &[usize]) -> f64 {
        let off = self.offset(index).expect("index in bounds");
        self.data[off]
    }

    pub fn set(&mut self, index: &[usize], value: f64) {
        let off = self.offset(index).expect("index in bounds");
        self.data[off] = value;
    }

    /// Same data, new shape; element count must match.
    pub fn reshape(&self, shape: Vec<usize>) -> Result<Tensor, TensorError> {
        let to_len: usize = shape.iter().product();
        if to_len != self.data.len() {
            return Err(TensorError::ReshapeMismatch {
                from: self.shape.clone(),
                from_len: self.data.len(),
                to: shape,
                to_len,
            });
        }
        Ok(Tensor {
            shape,
            dtype: self.dtype,
            data: self.data.clone(),
        })
    }

    /// Same data reinterpreted with a different on-disk dtype tag.
    pub fn with_dtype(mut self, dtype: Dtype) -> Self {
        self.dtype = dtype;
        self
    }

    /// Bit-exact equality: shape, dtype, and every element compared by its
    /// IEEE-754 representation (distinguishes -0.0 from 0.0, NaN payloads).
    pub fn bit_eq(&self, other: &Tensor) -> bool {
        self.shape == other.shape
            && self.dtype == other.dtype
            && self.data.len() == other.data.len()
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| a.to_bits() == b.to_bits())
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.data.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank0_holds_one_element() {
        let t = Tensor::scalar(3.5);
        assert_eq!(t.rank(), 0);
        assert_eq!(t.len(), 1);
        assert_eq!(t.at(&[]), 3.5);
    }

    #[test]
    fn length_mismatch_rejected() {
        assert!(Tensor::from_f64(vec![2, 2], vec![1.0, 2.0, 3.0]).is_err());
    }

    #[test]
    fn row_major_offsets() {
        let t = Tensor::from_f64(vec![2, 3], (0..6).map(|v| v as f64).collect()).unwrap();
        assert_eq!(t.at(&[0, 0]), 0.0);
        assert_eq!(t.at(&[0, 2]), 2.0);
        assert_eq!(t.at(&[1, 0]), 3.0);
        assert_eq!(t.at(&[1, 2]), 5.0);
    }

    #[test]
    fn zero_extent_shape_is_empty() {
        let t = Tensor::from_f64(vec![3, 0, 2], vec![]).unwrap();
        assert_eq!(t.len(), 0);
    }

    #[test]
    fn bit_eq_distinguishes_negative_zero() {
        let a = Tensor::from_vec(vec![0.0]);
        let b = Tensor::from_vec(vec![-0.0]);
        assert_eq!(a, b); // semantic equality
        assert!(!a.bit_eq(&b));
    }
}

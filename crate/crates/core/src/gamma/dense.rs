// Copyright 2026 The scv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Dense brute-force matrices.
//!
//! Nothing here knows about signed permutations: products are the textbook
//! triple loop, so this module serves as an independent oracle for the fast
//! carrier in [`super::perm`].

use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use crate::scalar::Gq;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<Gq>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        DenseMatrix {
            dim,
            data: vec![Gq::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |r, c| if r == c { Gq::int(1) } else { Gq::zero() })
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Gq) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                data.push(f(r, c));
            }
        }
        DenseMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Gq {
        self.data[r * self.dim + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Gq) {
        self.data[r * self.dim + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|v| !v.is_zero()).count()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self.get(c, r))
    }

    pub fn trace(&self) -> Gq {
        (0..self.dim).map(|k| self.get(k, k)).sum()
    }

    pub fn scaled(&self, s: Gq) -> Self {
        DenseMatrix {
            dim: self.dim,
            data: self.data.iter().map(|&v| v * s).collect(),
        }
    }

    pub fn matmul(&self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = DenseMatrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.data[r * n + c] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `(M + Mᵀ)/2`.
    pub fn symmetric_part(&self) -> Self {
        let half = Gq::ratio(1, 2);
        Self::from_fn(self.dim, |r, c| (self.get(r, c) + self.get(c, r)) * half)
    }

    /// Largest entry by `|re| + |im|`, with its position.
    pub fn max_entry(&self) -> Option<(usize, usize, Gq)> {
        let mut best: Option<(usize, usize, Gq)> = None;
        for r in 0..self.dim {
            for c in 0..self.dim {
                let v = self.get(r, c);
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(_, _, b)| v.l1() > b.l1()) {
                    best = Some((r, c, v));
                }
            }
        }
        best
    }
}

impl Add for &DenseMatrix {
    type Output = DenseMatrix;
    fn add(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        DenseMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &DenseMatrix {
    type Output = DenseMatrix;
    fn sub(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        DenseMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &DenseMatrix {
    type Output = DenseMatrix;
    fn mul(self, rhs: &DenseMatrix) -> DenseMatrix {
        self.matmul(rhs)
    }
}

/// All 24 orderings of four slots.
pub fn permutations4() -> [[usize; 4]; 24] {
    let mut out = [[0usize; 4]; 24];
    let mut k = 0;
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    if a != b && a != c && a != d && b != c && b != d && c != d {
                        out[k] = [a, b, c, d];
                        k += 1;
                    }
                }
            }
        }
    }
    out
}

/// Unnormalized full symmetrization of a four-index tensor at one entry,
/// computed as the explicit 24-term sum.
pub fn dense_sym4(t: impl Fn(usize, usize, usize, usize) -> Gq, idx: [usize; 4]) -> Gq {
    permutations4()
        .iter()
        .map(|p| t(idx[p[0]], idx[p[1]], idx[p[2]], idx[p[3]]))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_table_is_complete() {
        let perms = permutations4();
        let mut sorted = perms.to_vec();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 24);
    }

    #[test]
    fn identity_is_neutral() {
        let m = DenseMatrix::from_fn(4, |r, c| Gq::int((r * 4 + c) as i64));
        assert_eq!(&m * &DenseMatrix::identity(4), m);
        assert_eq!(DenseMatrix::identity(4).trace(), Gq::int(4));
    }

    #[test]
    fn sym4_of_symmetric_tensor_is_24_times() {
        let t = |a: usize, b: usize, c: usize, d: usize| Gq::int((a + b + c + d) as i64);
        assert_eq!(dense_sym4(t, [1, 2, 3, 4]), Gq::int(24 * 10));
    }
}

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

//! Scaled signed permutation matrices.
//!
//! Every product of Γ-matrices, C and Γ₁₁ is a scalar times a matrix with a
//! single ±1 per row and column. Storing the row image and a sign mask makes
//! products, transposes and traces O(n) and exact.

use std::fmt;
use std::ops::{Mul, Neg};

use num_traits::{One, Zero};

use super::dense::DenseMatrix;
use crate::scalar::Gq;

/// Spinor dimension of the ten-dimensional representation.
pub const SPINOR_DIM: usize = 32;

/// The permutation part: row `r` has its single entry in column `image[r]`,
/// negative iff bit `r` of `neg` is set.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    image: [u8; SPINOR_DIM],
    neg: u32,
}

impl SignedPerm {
    pub fn identity() -> Self {
        let mut image = [0u8; SPINOR_DIM];
        for (r, slot) in image.iter_mut().enumerate() {
            *slot = r as u8;
        }
        SignedPerm { image, neg: 0 }
    }

    /// Returns `None` unless `image` is a bijection on `0..32`.
    pub fn new(image: [u8; SPINOR_DIM], neg: u32) -> Option<Self> {
        let mut seen = 0u32;
        for &c in &image {
            if c as usize >= SPINOR_DIM || seen & (1 << c) != 0 {
                return None;
            }
            seen |= 1 << c;
        }
        Some(SignedPerm { image, neg })
    }

    #[inline]
    pub fn col(&self, row: usize) -> usize {
        self.image[row] as usize
    }

    #[inline]
    pub fn sign(&self, row: usize) -> i8 {
        if self.neg & (1 << row) != 0 {
            -1
        } else {
            1
        }
    }

    pub fn image(&self) -> &[u8; SPINOR_DIM] {
        &self.image
    }

    pub fn neg_mask(&self) -> u32 {
        self.neg
    }

    pub fn compose(&self, rhs: &SignedPerm) -> SignedPerm {
        let mut image = [0u8; SPINOR_DIM];
        let mut neg = 0u32;
        for (r, slot) in image.iter_mut().enumerate() {
            let mid = self.image[r] as usize;
            *slot = rhs.image[mid];
            let flip = ((self.neg >> r) ^ (rhs.neg >> mid)) & 1;
            neg |= flip << r;
        }
        SignedPerm { image, neg }
    }

    pub fn transpose(&self) -> SignedPerm {
        let mut image = [0u8; SPINOR_DIM];
        let mut neg = 0u32;
        for r in 0..SPINOR_DIM {
            let c = self.image[r] as usize;
            image[c] = r as u8;
            neg |= ((self.neg >> r) & 1) << c;
        }
        SignedPerm { image, neg }
    }

    /// Sum of the diagonal signs.
    pub fn trace(&self) -> i64 {
        (0..SPINOR_DIM)
            .filter(|&r| self.image[r] as usize == r)
            .map(|r| self.sign(r) as i64)
            .sum()
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..SPINOR_DIM)
            .map(|r| {
                format!(
                    "{}{}",
                    if self.sign(r) < 0 { "-" } else { "+" },
                    self.col(r)
                )
            })
            .collect();
        write!(f, "[{}]", rows.join(" "))
    }
}

/// A 32×32 matrix that is either zero or `scale` times a signed permutation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ScaledSignedPerm {
    Zero,
    Scaled { scale: Gq, perm: SignedPerm },
}

impl ScaledSignedPerm {
    pub fn identity() -> Self {
        Self::from_perm(Gq::one(), SignedPerm::identity())
    }

    /// Builds the canonical representative: a zero scale becomes
    /// [`ScaledSignedPerm::Zero`], and row 0 always carries sign `+1` (an overall
    /// sign lives in `scale`), so equal matrices compare equal.
    pub fn from_perm(scale: Gq, perm: SignedPerm) -> Self {
        if scale.is_zero() {
            ScaledSignedPerm::Zero
        } else if perm.neg & 1 != 0 {
            let flipped = SignedPerm {
                image: perm.image,
                neg: !perm.neg,
            };
            ScaledSignedPerm::Scaled {
                scale: -scale,
                perm: flipped,
            }
        } else {
            ScaledSignedPerm::Scaled { scale, perm }
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ScaledSignedPerm::Zero)
    }

    pub fn scale(&self) -> Gq {
        match self {
            ScaledSignedPerm::Zero => Gq::zero(),
            ScaledSignedPerm::Scaled { scale, .. } => *scale,
        }
    }

    pub fn perm(&self) -> Option<&SignedPerm> {
        match self {
            ScaledSignedPerm::Zero => None,
            ScaledSignedPerm::Scaled { perm, .. } => Some(perm),
        }
    }

    /// The single nonzero entry of `row`, if any.
    #[inline]
    pub fn row_entry(&self, row: usize) -> Option<(usize, Gq)> {
        match self {
            ScaledSignedPerm::Zero => None,
            ScaledSignedPerm::Scaled { scale, perm } => {
                Some((perm.col(row), scale.signed(perm.sign(row))))
            }
        }
    }

    /// Column and ±1 sign of the entry in `row`, ignoring the scale.
    #[inline]
    pub fn row_sign(&self, row: usize) -> Option<(usize, i8)> {
        self.perm().map(|p| (p.col(row), p.sign(row)))
    }

    pub fn entry(&self, row: usize, col: usize) -> Gq {
        match self.row_entry(row) {
            Some((c, v)) if c == col => v,
            _ => Gq::zero(),
        }
    }

    pub fn scaled(&self, factor: Gq) -> Self {
        match self {
            ScaledSignedPerm::Zero => ScaledSignedPerm::Zero,
            ScaledSignedPerm::Scaled { scale, perm } => Self::from_perm(*scale * factor, *perm),
        }
    }

    /// `(sP)⁻¹ = s⁻¹Pᵀ`.
    ///
    /// # Panics
    /// On the zero matrix.
    pub fn inverse(&self) -> Self {
        match self {
            ScaledSignedPerm::Zero => panic!("zero matrix has no inverse"),
            ScaledSignedPerm::Scaled { scale, perm } => {
                ScaledSignedPerm::from_perm(Gq::one() / *scale, perm.transpose())
            }
        }
    }

    pub fn transpose(&self) -> Self {
        match self {
            ScaledSignedPerm::Zero => ScaledSignedPerm::Zero,
            ScaledSignedPerm::Scaled { scale, perm } => Self::from_perm(*scale, perm.transpose()),
        }
    }

    pub fn trace(&self) -> Gq {
        match self {
            ScaledSignedPerm::Zero => Gq::zero(),
            ScaledSignedPerm::Scaled { scale, perm } => *scale * Gq::int(perm.trace()),
        }
    }

    /// `Some(s)` when `selfᵀ = s·self` with `s = ±1`; the zero matrix reports `+1`.
    pub fn symmetry_sign(&self) -> Option<i8> {
        let t = self.transpose();
        if t == *self {
            Some(1)
        } else if t == -*self {
            Some(-1)
        } else {
            None
        }
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(SPINOR_DIM);
        for r in 0..SPINOR_DIM {
            if let Some((c, v)) = self.row_entry(r) {
                m.set(r, c, v);
            }
        }
        m
    }

    /// Inverse of [`to_dense`](Self::to_dense); `None` if the matrix is not in the class.
    pub fn from_dense(m: &DenseMatrix) -> Option<Self> {
        if m.dim() != SPINOR_DIM {
            return None;
        }
        if m.is_zero() {
            return Some(ScaledSignedPerm::Zero);
        }
        let mut scale: Option<Gq> = None;
        let mut image = [0u8; SPINOR_DIM];
        let mut neg = 0u32;
        for (r, slot) in image.iter_mut().enumerate() {
            let mut nz = (0..SPINOR_DIM).filter(|&c| !m.get(r, c).is_zero());
            let c = nz.next()?;
            if nz.next().is_some() {
                return None;
            }
            let v = m.get(r, c);
            let s = *scale.get_or_insert(v);
            if v == -s {
                neg |= 1 << r;
            } else if v != s {
                return None;
            }
            *slot = c as u8;
        }
        let perm = SignedPerm::new(image, neg)?;
        Some(Self::from_perm(scale?, perm))
    }
}

impl Mul for ScaledSignedPerm {
    type Output = ScaledSignedPerm;
    fn mul(self, rhs: ScaledSignedPerm) -> ScaledSignedPerm {
        match (self, rhs) {
            (
                ScaledSignedPerm::Scaled { scale: a, perm: p },
                ScaledSignedPerm::Scaled { scale: b, perm: q },
            ) => ScaledSignedPerm::from_perm(a * b, p.compose(&q)),
            _ => ScaledSignedPerm::Zero,
        }
    }
}

impl<'a> Mul<&'a ScaledSignedPerm> for &'a ScaledSignedPerm {
    type Output = ScaledSignedPerm;
    fn mul(self, rhs: &ScaledSignedPerm) -> ScaledSignedPerm {
        *self * *rhs
    }
}

impl Neg for ScaledSignedPerm {
    type Output = ScaledSignedPerm;
    fn neg(self) -> ScaledSignedPerm {
        self.scaled(-Gq::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle() -> SignedPerm {
        let mut image = [0u8; SPINOR_DIM];
        for (r, slot) in image.iter_mut().enumerate() {
            *slot = ((r + 1) % SPINOR_DIM) as u8;
        }
        SignedPerm::new(image, 0b1011).unwrap()
    }

    #[test]
    fn rejects_non_bijection() {
        let mut image = [0u8; SPINOR_DIM];
        image[1] = 0;
        assert!(SignedPerm::new(image, 0).is_none());
    }

    #[test]
    fn transpose_is_inverse_for_signed_perms() {
        let p = ScaledSignedPerm::from_perm(Gq::one(), cycle());
        assert_eq!(p * p.transpose(), ScaledSignedPerm::identity());
    }

    #[test]
    fn trace_of_identity() {
        assert_eq!(ScaledSignedPerm::identity().trace(), Gq::int(32));
        assert_eq!(ScaledSignedPerm::Zero.trace(), Gq::zero());
    }

    #[test]
    fn dense_round_trip() {
        let p = ScaledSignedPerm::from_perm(Gq::imag_ratio(3, 2), cycle());
        assert_eq!(ScaledSignedPerm::from_dense(&p.to_dense()), Some(p));
        assert_eq!(
            ScaledSignedPerm::from_dense(&ScaledSignedPerm::Zero.to_dense()),
            Some(ScaledSignedPerm::Zero)
        );
        let mut broken = p.to_dense();
        broken.set(0, 5, Gq::int(7));
        assert_eq!(ScaledSignedPerm::from_dense(&broken), None);
    }

    #[test]
    fn zero_absorbs() {
        let p = ScaledSignedPerm::from_perm(Gq::int(2), cycle());
        assert!((p * ScaledSignedPerm::Zero).is_zero());
        assert!(p.scaled(Gq::zero()).is_zero());
    }
}

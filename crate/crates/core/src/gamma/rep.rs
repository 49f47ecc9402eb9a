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

//! The real 32×32 Majorana-Weyl representation of Cl(1,9).
//!
//! # Construction
//!
//! Γ-matrices are Kronecker products ("tensor words") of the real 2×2 signed
//! permutations
//!
//! ```text
//! 1 = [[1,0],[0,1]]   x = [[0,1],[1,0]]   z = [[1,0],[0,-1]]   e = [[0,1],[-1,0]]
//! ```
//!
//! with `x² = z² = 1`, `e² = -1`, and any two of `x, z, e` anticommuting. Two
//! words anticommute iff an odd number of positions anticommute. The words are
//! produced by a fixed recursion, each step appending one letter on the right:
//!
//! 1. seed: six words generating Cl(0,6) on ℝ⁸:
//!    `1 1 e`, `1 e x`, `x e z`, `z e z`, `e 1 z`, `e x x`;
//! 2. flip step Cl(p,q) → Cl(q+2,p) on ℝ¹⁶: `w ↦ w e`, plus `1 1 1 x` and `1 1 1 z`;
//! 3. boost step Cl(p,q) → Cl(p+1,q+1) on ℝ³²: `1 1 1 1 e` first, then `w ↦ w x`,
//!    then `1 1 1 1 z`.
//!
//! The result is Γ₀ = `1111e` (squares to −1) followed by nine words squaring to
//! +1. Every matrix is real and a signed permutation. The charge conjugation
//! matrix is C = +Γ₀ and the chirality matrix is Γ₁₁ = Γ₀Γ₁···Γ₉.

use std::fmt;

use num_traits::Zero;

use super::multi_index::MultiIndex;
use super::perm::{ScaledSignedPerm, SignedPerm, SPINOR_DIM};
use crate::scalar::Gq;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GammaError {
    #[error("vector index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("no real representation is constructed for signature {0}")]
    UnsupportedSignature(String),
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
}

/// Diagonal flat metric.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Signature {
    eta: Vec<i8>,
}

impl Signature {
    pub fn new(eta: Vec<i8>) -> Result<Self, GammaError> {
        if eta.is_empty() {
            return Err(GammaError::InvalidSignature("empty metric".into()));
        }
        if let Some(bad) = eta.iter().find(|&&e| e != 1 && e != -1) {
            return Err(GammaError::InvalidSignature(format!(
                "entry {bad} is not ±1"
            )));
        }
        Ok(Signature { eta })
    }

    /// "Mostly plus" Minkowski metric `(−,+,…,+)` in `dim` dimensions.
    pub fn mostly_plus(dim: usize) -> Self {
        let mut eta = vec![1i8; dim];
        if let Some(first) = eta.first_mut() {
            *first = -1;
        }
        Signature { eta }
    }

    pub fn dim(&self) -> usize {
        self.eta.len()
    }

    pub fn eta(&self, m: usize) -> i8 {
        self.eta[m]
    }

    pub fn entries(&self) -> &[i8] {
        &self.eta
    }

    pub fn timelike_count(&self) -> usize {
        self.eta.iter().filter(|&&e| e < 0).count()
    }
}

impl Default for Signature {
    fn default() -> Self {
        Signature::mostly_plus(10)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .eta
            .iter()
            .map(|&e| if e < 0 { '-' } else { '+' })
            .collect();
        write!(f, "({s})")
    }
}

/// One letter of a tensor word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Letter {
    One,
    X,
    Z,
    E,
}

impl Letter {
    /// Column and sign of the entry in row `bit` of the 2×2 matrix.
    fn act(self, bit: usize) -> (usize, bool) {
        match self {
            Letter::One => (bit, false),
            Letter::X => (1 - bit, false),
            Letter::Z => (bit, bit == 1),
            Letter::E => (1 - bit, bit == 1),
        }
    }

    fn parse(c: char) -> Option<Letter> {
        match c {
            '1' => Some(Letter::One),
            'x' => Some(Letter::X),
            'z' => Some(Letter::Z),
            'e' => Some(Letter::E),
            _ => None,
        }
    }
}

/// A Kronecker product of letters, leftmost letter most significant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorWord(pub Vec<Letter>);

impl TensorWord {
    pub fn parse(s: &str) -> Option<TensorWord> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(Letter::parse)
            .collect::<Option<Vec<_>>>()
            .map(TensorWord)
    }

    fn ones(len: usize) -> TensorWord {
        TensorWord(vec![Letter::One; len])
    }

    fn then(&self, l: Letter) -> TensorWord {
        let mut v = self.0.clone();
        v.push(l);
        TensorWord(v)
    }

    /// The matrix of a five-letter word.
    pub fn to_perm(&self) -> Option<ScaledSignedPerm> {
        if 1usize << self.0.len() != SPINOR_DIM {
            return None;
        }
        let n = self.0.len();
        let mut image = [0u8; SPINOR_DIM];
        let mut neg = 0u32;
        for (row, slot) in image.iter_mut().enumerate() {
            let mut col = 0usize;
            let mut negative = false;
            for (k, &letter) in self.0.iter().enumerate() {
                let shift = n - 1 - k;
                let (c, s) = letter.act((row >> shift) & 1);
                col |= c << shift;
                negative ^= s;
            }
            *slot = col as u8;
            if negative {
                neg |= 1 << row;
            }
        }
        SignedPerm::new(image, neg).map(|p| ScaledSignedPerm::from_perm(Gq::int(1), p))
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            let c = match l {
                Letter::One => '1',
                Letter::X => 'x',
                Letter::Z => 'z',
                Letter::E => 'e',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// The fixed recursive word list for Cl(1,9), Γ₀ first.
pub fn clifford_words() -> Vec<TensorWord> {
    let seed: Vec<TensorWord> = ["11e", "1ex", "xez", "zez", "e1z", "exx"]
        .iter()
        .map(|s| TensorWord::parse(s).expect("seed word"))
        .collect();
    // Cl(0,6) on R^8 -> Cl(8,0) on R^16
    let mut flipped: Vec<TensorWord> = seed.iter().map(|w| w.then(Letter::E)).collect();
    flipped.push(TensorWord::ones(3).then(Letter::X));
    flipped.push(TensorWord::ones(3).then(Letter::Z));
    // Cl(8,0) on R^16 -> Cl(9,1) on R^32
    let mut out = vec![TensorWord::ones(4).then(Letter::E)];
    out.extend(flipped.iter().map(|w| w.then(Letter::X)));
    out.push(TensorWord::ones(4).then(Letter::Z));
    out
}

/// Γ-matrices, charge conjugation and chirality for one signature.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GammaRep {
    signature: Signature,
    gammas: Vec<ScaledSignedPerm>,
    charge_conj: ScaledSignedPerm,
    gamma11: ScaledSignedPerm,
}

/// Builds the representation for the mostly-plus signature in ten dimensions.
pub fn build_rep(signature: &Signature) -> Result<GammaRep, GammaError> {
    if signature.dim() != 10 || signature.timelike_count() != 1 || signature.eta(0) != -1 {
        return Err(GammaError::UnsupportedSignature(signature.to_string()));
    }
    let gammas: Vec<ScaledSignedPerm> = clifford_words()
        .iter()
        .map(|w| w.to_perm().expect("five-letter word"))
        .collect();
    let gamma11 = gammas
        .iter()
        .fold(ScaledSignedPerm::identity(), |acc, g| acc * *g);
    let rep = GammaRep {
        signature: signature.clone(),
        charge_conj: gammas[0],
        gammas,
        gamma11,
    };
    let violations = rep.invariant_violations();
    assert!(
        violations.is_empty(),
        "construction broke an invariant: {violations:?}"
    );
    Ok(rep)
}

impl GammaRep {
    /// Assembles a representation without checking anything. Used to feed
    /// deliberately broken fixtures to the verification suites.
    pub fn from_parts(
        signature: Signature,
        gammas: Vec<ScaledSignedPerm>,
        charge_conj: ScaledSignedPerm,
        gamma11: ScaledSignedPerm,
    ) -> Self {
        GammaRep {
            signature,
            gammas,
            charge_conj,
            gamma11,
        }
    }

    /// The same Γ's with C = −Γ₀.
    pub fn with_flipped_charge_conj(&self) -> Self {
        let mut out = self.clone();
        out.charge_conj = -self.charge_conj;
        out
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn dim(&self) -> usize {
        self.signature.dim()
    }

    pub fn eta(&self, m: usize) -> i8 {
        self.signature.eta(m)
    }

    pub fn gamma(&self, m: usize) -> ScaledSignedPerm {
        self.gammas[m]
    }

    pub fn gammas(&self) -> &[ScaledSignedPerm] {
        &self.gammas
    }

    pub fn charge_conj(&self) -> ScaledSignedPerm {
        self.charge_conj
    }

    pub fn gamma11(&self) -> ScaledSignedPerm {
        self.gamma11
    }

    /// Γᵐ = ηᵐᵐ Γ_m.
    pub fn raise_index(&self, m: usize) -> ScaledSignedPerm {
        if self.eta(m) < 0 {
            -self.gammas[m]
        } else {
            self.gammas[m]
        }
    }

    /// Antisymmetrized product Γ_{m₁…m_p}: zero on repeated indices, otherwise
    /// the sign of the sorting permutation times the ordered product.
    pub fn gamma_antisym(&self, raw: &[usize]) -> Result<ScaledSignedPerm, GammaError> {
        if let Some(&index) = raw.iter().find(|&&i| i >= self.dim()) {
            return Err(GammaError::IndexOutOfRange {
                index,
                dim: self.dim(),
            });
        }
        Ok(match MultiIndex::canonicalize(raw) {
            MultiIndex::Degenerate => ScaledSignedPerm::Zero,
            MultiIndex::Sorted { indices, parity } => {
                let prod = self.product_sorted(&indices);
                if parity < 0 {
                    -prod
                } else {
                    prod
                }
            }
        })
    }

    /// Plain ordered product of the given Γ's (no sorting, no sign).
    pub fn product_sorted(&self, indices: &[usize]) -> ScaledSignedPerm {
        indices
            .iter()
            .fold(ScaledSignedPerm::identity(), |acc, &i| acc * self.gammas[i])
    }

    /// `C·x`, the spinor-index-lowered form of `x`.
    pub fn lower(&self, x: ScaledSignedPerm) -> ScaledSignedPerm {
        self.charge_conj * x
    }

    /// Lists every broken representation invariant. Empty for a good rep.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let id = ScaledSignedPerm::identity();
        let d = self.dim();
        if self.gammas.len() != d {
            out.push(format!(
                "expected {d} gamma matrices, found {}",
                self.gammas.len()
            ));
            return out;
        }
        for m in 0..d {
            for n in m..d {
                let anti = self.gammas[m].to_dense().matmul(&self.gammas[n].to_dense());
                let anti = &anti + &self.gammas[n].to_dense().matmul(&self.gammas[m].to_dense());
                let expected = if m == n {
                    id.scaled(Gq::int(2 * self.eta(m) as i64)).to_dense()
                } else {
                    ScaledSignedPerm::Zero.to_dense()
                };
                if anti != expected {
                    out.push(format!("Clifford relation fails for ({m},{n})"));
                }
            }
        }
        let c = self.charge_conj;
        if c.transpose() != -c {
            out.push("C is not antisymmetric".into());
        }
        for m in 0..d {
            let cg = c * self.gammas[m];
            if cg.transpose() != cg {
                out.push(format!("C·Γ_{m} is not symmetric"));
            }
        }
        for (name, x) in std::iter::once(("C", c))
            .chain(std::iter::once(("Γ11", self.gamma11)))
            .chain(self.gammas.iter().map(|g| ("Γ", *g)))
        {
            if !x.scale().is_unit_sign() {
                out.push(format!("{name} does not have a real unit scale"));
            }
        }
        if self.gamma11 * self.gamma11 != id {
            out.push("Γ11² ≠ 1".into());
        }
        for m in 0..d {
            if self.gamma11 * self.gammas[m] != -(self.gammas[m] * self.gamma11) {
                out.push(format!("Γ11 does not anticommute with Γ_{m}"));
            }
        }
        if !self.gamma11.trace().is_zero() {
            out.push("Γ11 is not traceless".into());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::dense::DenseMatrix;

    fn rep() -> GammaRep {
        build_rep(&Signature::default()).unwrap()
    }

    #[test]
    fn default_rep_has_no_violations() {
        assert!(rep().invariant_violations().is_empty());
    }

    #[test]
    fn charge_conjugation_is_antisymmetric() {
        let r = rep();
        assert_eq!(r.charge_conj().transpose(), -r.charge_conj());
    }

    #[test]
    fn gamma11_squares_to_one() {
        let r = rep();
        assert_eq!(r.gamma11() * r.gamma11(), ScaledSignedPerm::identity());
    }

    #[test]
    fn gammas_are_monomial_dense() {
        let r = rep();
        for g in r.gammas() {
            let d = g.to_dense();
            for i in 0..SPINOR_DIM {
                let row = (0..SPINOR_DIM).filter(|&c| !d.get(i, c).is_zero()).count();
                let col = (0..SPINOR_DIM).filter(|&c| !d.get(c, i).is_zero()).count();
                assert_eq!((row, col), (1, 1));
                for c in 0..SPINOR_DIM {
                    let v = d.get(i, c);
                    assert!(v.is_zero() || v.is_unit_sign());
                }
            }
        }
    }

    #[test]
    fn antisym_examples() {
        let r = rep();
        assert_eq!(r.gamma_antisym(&[]).unwrap(), ScaledSignedPerm::identity());
        assert!(r.gamma_antisym(&[3, 3]).unwrap().is_zero());
        assert_eq!(
            r.gamma_antisym(&[1, 0]).unwrap(),
            -(r.gamma(0) * r.gamma(1))
        );
        assert_eq!(
            r.gamma_antisym(&[10]),
            Err(GammaError::IndexOutOfRange { index: 10, dim: 10 })
        );
    }

    #[test]
    fn antisym_matches_dense_average() {
        use crate::gamma::multi_index::signed_permutations;
        let r = rep();
        for raw in [vec![1usize, 0], vec![4, 2, 7], vec![9, 3, 5, 0]] {
            let mut sum = DenseMatrix::zeros(SPINOR_DIM);
            let perms = signed_permutations(&raw);
            for (p, s) in &perms {
                let prod = p.iter().fold(DenseMatrix::identity(SPINOR_DIM), |acc, &i| {
                    acc.matmul(&r.gamma(i).to_dense())
                });
                sum = &sum + &prod.scaled(Gq::int(*s as i64));
            }
            let avg = sum.scaled(Gq::ratio(1, perms.len() as i64));
            assert_eq!(r.gamma_antisym(&raw).unwrap().to_dense(), avg);
        }
    }

    #[test]
    fn raise_index_flips_time_only() {
        let r = rep();
        assert_eq!(r.raise_index(0), -r.gamma(0));
        for k in 1..10 {
            assert_eq!(r.raise_index(k), r.gamma(k));
        }
    }

    #[test]
    fn traces() {
        let r = rep();
        assert_eq!(ScaledSignedPerm::identity().trace(), Gq::int(32));
        for m in 0..10 {
            assert_eq!(r.gamma(m).to_dense().trace(), Gq::zero());
            assert_eq!(r.gamma(m).trace(), Gq::zero());
        }
    }

    #[test]
    fn dense_time_gamma_squares_to_minus_one() {
        let r = rep();
        let g0 = r.gamma(0).to_dense();
        assert_eq!(
            g0.matmul(&g0),
            DenseMatrix::identity(SPINOR_DIM).scaled(Gq::int(-1))
        );
    }

    #[test]
    fn charge_conj_has_32_entries() {
        assert_eq!(rep().charge_conj().to_dense().nonzero_count(), 32);
    }

    #[test]
    fn rejects_other_signatures() {
        assert!(build_rep(&Signature::mostly_plus(8)).is_err());
        assert!(build_rep(&Signature::new(vec![1; 10]).unwrap()).is_err());
        assert!(Signature::new(vec![2, 1]).is_err());
    }

    #[test]
    fn word_table() {
        let words: Vec<String> = clifford_words().iter().map(|w| w.to_string()).collect();
        assert_eq!(words[0], "1111e");
        assert_eq!(words[9], "1111z");
        assert_eq!(words.len(), 10);
    }
}

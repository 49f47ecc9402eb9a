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

//! Charge terms of the supersymmetry anticommutator and the algebras built
//! from them.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::structure::{AlgebraError, SuperAlgebra};
use crate::gamma::{sorted_tuples, GammaRep, ScaledSignedPerm, SPINOR_DIM};
use crate::symmetry::SpinorFactor;
use crate::Gq;

/// Generator family appearing on the right of `{Q_α, Q_β}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    P,
    Y,
    /// `Z_k`, carrying `rank = 2q − 2k` vector indices.
    Z {
        k: usize,
        rank: usize,
    },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::P => write!(f, "P"),
            Family::Y => write!(f, "Y"),
            Family::Z { k, .. } => write!(f, "Z{k}"),
        }
    }
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// One generator of a family together with its coefficient in `{Q_α, Q_β}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeTerm {
    pub family: Family,
    /// Sorted vector indices.
    pub indices: Vec<usize>,
    /// C-lowered coefficient `M_{αβ}` of this sorted basis element.
    pub matrix: ScaledSignedPerm,
}

impl ChargeTerm {
    /// Generator label, e.g. `P3`, `Y0`, `Z0^{1,4}`, `Z1`.
    pub fn label(&self) -> String {
        match self.family {
            Family::Z { rank: 0, .. } => self.family.to_string(),
            Family::Z { .. } => {
                let idx: Vec<String> = self.indices.iter().map(|m| m.to_string()).collect();
                format!("{}^{{{}}}", self.family, idx.join(","))
            }
            _ => format!("{}{}", self.family, self.indices[0]),
        }
    }

    /// Coefficient per ordered index tuple, as the antisymmetric sum over all
    /// orderings is usually written. For rank `r` this is `matrix / r!`.
    pub fn display_matrix(&self) -> ScaledSignedPerm {
        match self.family {
            Family::Z { rank, .. } => self.matrix.scaled(Gq::ratio(1, factorial(rank))),
            _ => self.matrix,
        }
    }

    pub fn to_json(&self) -> ChargeTermJson {
        let entries = (0..SPINOR_DIM)
            .filter_map(|r| self.matrix.row_entry(r).map(|(c, v)| (r, c, v.to_string())))
            .collect();
        ChargeTermJson {
            label: self.label(),
            family: self.family,
            indices: self.indices.clone(),
            entries,
        }
    }
}

/// Sparse `(row, col, value)` form of a [`ChargeTerm`] with exact values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeTermJson {
    pub label: String,
    pub family: Family,
    pub indices: Vec<usize>,
    pub entries: Vec<(usize, usize, String)>,
}

fn checked(term: ChargeTerm) -> Result<ChargeTerm, AlgebraError> {
    if term.matrix.symmetry_sign() == Some(1) {
        Ok(term)
    } else {
        Err(AlgebraError::SymmetryViolation {
            label: term.label(),
        })
    }
}

/// `2(CΓᵐ)` for each `P_m`.
pub fn momentum_terms(rep: &GammaRep) -> Result<Vec<ChargeTerm>, AlgebraError> {
    (0..rep.dim())
        .map(|m| {
            checked(ChargeTerm {
                family: Family::P,
                indices: vec![m],
                matrix: rep.lower(rep.raise_index(m)).scaled(Gq::int(2)),
            })
        })
        .collect()
}

/// Coefficients of
/// `{Q_α,Q_β} = 2Γᵐ P_m − 2i(Γ₁₁Γ_m)Yᵐ − 2i Σ_k [S(r)Γ_{m_r…m₁}]/r! Z^{m₁…m_r}`,
/// `r = 2q − 2k`, one term per sorted multi-index.
pub fn assemble_extended_algebra(
    rep: &GammaRep,
    q: usize,
) -> Result<Vec<ChargeTerm>, AlgebraError> {
    assert!((1..=4).contains(&q), "q must be in 1..=4");
    let minus_2i = Gq::imag(-2);
    let g11 = rep.gamma11();
    let mut out = momentum_terms(rep)?;
    for m in 0..rep.dim() {
        out.push(checked(ChargeTerm {
            family: Family::Y,
            indices: vec![m],
            matrix: rep.lower(g11 * rep.gamma(m)).scaled(minus_2i),
        })?);
    }
    for k in 0..=q {
        let rank = 2 * q - 2 * k;
        let s = SpinorFactor::for_even_rank(rank).matrix(rep);
        for idx in sorted_tuples(rep.dim(), rank) {
            // All r! orderings of the sum contribute the same product, which
            // cancels the 1/r!; reversing the order costs (−1)^{r(r−1)/2}.
            let reversed: Vec<usize> = idx.iter().rev().copied().collect();
            let g = rep.gamma_antisym(&reversed).expect("indices in range");
            out.push(checked(ChargeTerm {
                family: Family::Z { k, rank },
                indices: idx,
                matrix: rep.lower(s * g).scaled(minus_2i),
            })?);
        }
    }
    Ok(out)
}

/// Odd generators `Q0…Q31`, then one even generator per charge term, then
/// `extra_central` labels; `{Q_α, Q_β}` is read off the terms and every even
/// generator is central.
pub fn algebra_from_terms(
    terms: &[ChargeTerm],
    extra_central: &[&str],
) -> Result<SuperAlgebra, AlgebraError> {
    let mut alg = SuperAlgebra::new();
    let qs: Vec<usize> = (0..SPINOR_DIM)
        .map(|a| alg.add_generator(format!("Q{a}"), true))
        .collect::<Result<_, _>>()?;
    let gens: Vec<usize> = terms
        .iter()
        .map(|t| alg.add_generator(t.label(), false))
        .collect::<Result<_, _>>()?;
    for label in extra_central {
        alg.add_generator(*label, false)?;
    }
    for a in 0..SPINOR_DIM {
        for b in a..SPINOR_DIM {
            let value: Vec<(usize, Gq)> = terms
                .iter()
                .zip(&gens)
                .map(|(t, &g)| (g, t.matrix.entry(a, b)))
                .filter(|(_, v)| !num_traits::Zero::is_zero(v))
                .collect();
            if !value.is_empty() {
                alg.add_bracket(qs[a], qs[b], value)?;
            }
        }
    }
    Ok(alg)
}

/// `{Q_α,Q_β} = 2Γᵐ_{αβ}P_m` with `P` central.
pub fn build_flat_superalgebra(rep: &GammaRep) -> SuperAlgebra {
    let terms = momentum_terms(rep).expect("CΓᵐ is symmetric for a valid representation");
    algebra_from_terms(&terms, &[]).expect("well-formed by construction")
}

/// Extended algebra for `q`; for `q = 1` the formal central label `T`
/// (the `4πg` charge) is included.
pub fn build_extended_superalgebra(rep: &GammaRep, q: usize) -> Result<SuperAlgebra, AlgebraError> {
    let terms = assemble_extended_algebra(rep, q)?;
    let extra: &[&str] = if q == 1 { &["T"] } else { &[] };
    algebra_from_terms(&terms, extra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::{build_rep, Signature};

    fn rep() -> GammaRep {
        build_rep(&Signature::mostly_plus(10)).unwrap()
    }

    #[test]
    fn term_counts() {
        let r = rep();
        // 10 + 10 + C(10,2) + C(10,0)
        assert_eq!(assemble_extended_algebra(&r, 1).unwrap().len(), 66);
        // 20 + 210 + 210 + 45 + 1
        assert_eq!(assemble_extended_algebra(&r, 3).unwrap().len(), 486);
    }

    #[test]
    fn labels() {
        let r = rep();
        let terms = assemble_extended_algebra(&r, 1).unwrap();
        let labels: Vec<String> = terms.iter().map(ChargeTerm::label).collect();
        assert_eq!(labels[0], "P0");
        assert_eq!(labels[10], "Y0");
        assert_eq!(labels[20], "Z0^{0,1}");
        assert_eq!(labels.last().unwrap(), "Z1");
    }

    #[test]
    fn bad_factor_is_rejected() {
        // CΓ_{mn} with S = Γ₁₁ is antisymmetric; feeding it through `checked`
        // must fail.
        let r = rep();
        let bad = ChargeTerm {
            family: Family::Z { k: 0, rank: 2 },
            indices: vec![0, 1],
            matrix: r.lower(r.gamma11() * r.gamma_antisym(&[0, 1]).unwrap()),
        };
        assert!(matches!(
            checked(bad),
            Err(AlgebraError::SymmetryViolation { .. })
        ));
    }

    #[test]
    fn json_entries_are_sparse() {
        let r = rep();
        let t = &assemble_extended_algebra(&r, 1).unwrap()[0];
        let j = t.to_json();
        assert_eq!(j.entries.len(), SPINOR_DIM);
        assert_eq!(j.label, "P0");
    }
}

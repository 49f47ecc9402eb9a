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

//! Symmetry types of the bilinear forms C·S·Γ_{m₁…m_p}.
//!
//! For every rank `p` and `S ∈ {1, Γ₁₁}` each matrix `C·S·Γ_{m₁…m_p}` is either
//! symmetric or antisymmetric. The classification below checks every strictly
//! increasing index tuple, not a single representative.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::gamma::{sorted_tuples, GammaRep, ScaledSignedPerm};
use crate::report::{CheckRecord, VerificationReport};

/// The extra factor between C and the Γ-product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpinorFactor {
    #[serde(rename = "1")]
    Identity,
    #[serde(rename = "G11")]
    Gamma11,
}

impl SpinorFactor {
    pub fn matrix(self, rep: &GammaRep) -> ScaledSignedPerm {
        match self {
            SpinorFactor::Identity => ScaledSignedPerm::identity(),
            SpinorFactor::Gamma11 => rep.gamma11(),
        }
    }

    /// `S·Γ₁₁`, up to the identity `Γ₁₁² = 1`.
    pub fn times_gamma11(self) -> SpinorFactor {
        match self {
            SpinorFactor::Identity => SpinorFactor::Gamma11,
            SpinorFactor::Gamma11 => SpinorFactor::Identity,
        }
    }

    /// The factor attached to rank `p = 2q` potentials and charges:
    /// Γ₁₁ for p ∈ {0, 4, 8}, 1 for p ∈ {2, 6}.
    pub fn for_even_rank(p: usize) -> SpinorFactor {
        assert!(
            p.is_multiple_of(2) && p <= 8,
            "rank {p} has no assigned spinor factor"
        );
        if p.is_multiple_of(4) {
            SpinorFactor::Gamma11
        } else {
            SpinorFactor::Identity
        }
    }
}

impl fmt::Display for SpinorFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpinorFactor::Identity => write!(f, "1"),
            SpinorFactor::Gamma11 => write!(f, "Γ11"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SymType {
    #[serde(rename = "+")]
    Symmetric,
    #[serde(rename = "-")]
    Antisymmetric,
}

impl SymType {
    pub fn from_sign(s: i8) -> SymType {
        if s > 0 {
            SymType::Symmetric
        } else {
            SymType::Antisymmetric
        }
    }

    pub fn sign(self) -> i8 {
        match self {
            SymType::Symmetric => 1,
            SymType::Antisymmetric => -1,
        }
    }

    pub fn flipped(self) -> SymType {
        SymType::from_sign(-self.sign())
    }
}

impl fmt::Display for SymType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymType::Symmetric => "+",
            SymType::Antisymmetric => "-",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymmetryError {
    #[error("C·{factor}·Γ{tuple:?} is neither symmetric nor antisymmetric")]
    MixedSymmetry {
        factor: SpinorFactor,
        tuple: Vec<usize>,
    },
    #[error(
        "rank {p} with S = {factor}: tuple {first:?} is {first_type} but {other:?} is {other_type}"
    )]
    InconsistentTuples {
        factor: SpinorFactor,
        p: usize,
        first: Vec<usize>,
        first_type: SymType,
        other: Vec<usize>,
        other_type: SymType,
    },
    #[error("rank {0} exceeds the dimension")]
    RankOutOfRange(usize),
}

/// Classifies `C·S·Γ_{m₁…m_p}` over all sorted `p`-tuples.
pub fn symmetry_type(
    rep: &GammaRep,
    factor: SpinorFactor,
    p: usize,
) -> Result<SymType, SymmetryError> {
    if p > rep.dim() {
        return Err(SymmetryError::RankOutOfRange(p));
    }
    let cs = rep.charge_conj() * factor.matrix(rep);
    let mut first: Option<(Vec<usize>, SymType)> = None;
    for tuple in sorted_tuples(rep.dim(), p) {
        let m = cs * rep.product_sorted(&tuple);
        let ty = m.symmetry_sign().map(SymType::from_sign).ok_or_else(|| {
            SymmetryError::MixedSymmetry {
                factor,
                tuple: tuple.clone(),
            }
        })?;
        match &first {
            None => first = Some((tuple, ty)),
            Some((t0, ty0)) if *ty0 != ty => {
                return Err(SymmetryError::InconsistentTuples {
                    factor,
                    p,
                    first: t0.clone(),
                    first_type: *ty0,
                    other: tuple,
                    other_type: ty,
                })
            }
            _ => {}
        }
    }
    Ok(first.expect("at least one tuple").1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryRow {
    pub p: usize,
    #[serde(rename = "S=1")]
    pub identity: SymType,
    #[serde(rename = "S=G11")]
    pub gamma11: SymType,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryTable {
    pub rows: Vec<SymmetryRow>,
}

impl SymmetryTable {
    pub fn get(&self, factor: SpinorFactor, p: usize) -> SymType {
        let row = &self.rows[p];
        match factor {
            SpinorFactor::Identity => row.identity,
            SpinorFactor::Gamma11 => row.gamma11,
        }
    }

    pub fn set(&mut self, factor: SpinorFactor, p: usize, ty: SymType) {
        let row = &mut self.rows[p];
        match factor {
            SpinorFactor::Identity => row.identity = ty,
            SpinorFactor::Gamma11 => row.gamma11 = ty,
        }
    }

    /// Markdown in the layout `p | S = 1 | type | S = Γ11 | type`.
    pub fn to_markdown(&self) -> String {
        let mut s = String::from("| p | S = 1 | type | S = Γ11 | type |\n|---|---|---|---|---|\n");
        for row in &self.rows {
            let idx = match row.p {
                0 => String::new(),
                1 => "_{m1}".to_string(),
                p => format!("_{{m1…m{p}}}"),
            };
            s.push_str(&format!(
                "| {} | CΓ{} | {} | CΓ11Γ{} | {} |\n",
                row.p, idx, row.identity, idx, row.gamma11
            ));
        }
        s
    }
}

/// The reference table for D = 10 in the (−,+⁹) signature with real C.
pub fn embedded_table() -> SymmetryTable {
    use SymType::{Antisymmetric as M, Symmetric as P};
    let pairs = [
        (M, P),
        (P, P),
        (P, M),
        (M, M),
        (M, P),
        (P, P),
        (P, M),
        (M, M),
        (M, P),
        (P, P),
        (P, M),
    ];
    SymmetryTable {
        rows: pairs
            .iter()
            .enumerate()
            .map(|(p, &(identity, gamma11))| SymmetryRow {
                p,
                identity,
                gamma11,
            })
            .collect(),
    }
}

pub fn generate_table(rep: &GammaRep) -> Result<SymmetryTable, SymmetryError> {
    let rows = (0..=rep.dim())
        .map(|p| {
            Ok(SymmetryRow {
                p,
                identity: symmetry_type(rep, SpinorFactor::Identity, p)?,
                gamma11: symmetry_type(rep, SpinorFactor::Gamma11, p)?,
            })
        })
        .collect::<Result<Vec<_>, SymmetryError>>()?;
    Ok(SymmetryTable { rows })
}

/// One record per entry; mismatches are listed as `(p, S, expected, got)`.
pub fn compare_table(generated: &SymmetryTable, embedded: &SymmetryTable) -> VerificationReport {
    let mut report = VerificationReport::new();
    for row in &embedded.rows {
        for factor in [SpinorFactor::Identity, SpinorFactor::Gamma11] {
            let expected = embedded.get(factor, row.p);
            let got = generated
                .rows
                .get(row.p)
                .map(|_| generated.get(factor, row.p));
            let ok = got == Some(expected);
            let mut rec = CheckRecord::verdict(
                format!("symmetry-table.p{}.S={}", row.p, factor),
                "symmetry-table",
                ok,
                if ok { 0 } else { 1 },
            );
            if !ok {
                let got = got.map_or("missing".to_string(), |g| g.to_string());
                rec = rec.with_counterexample(format!(
                    "(p={}, S={}, expected {}, got {})",
                    row.p, factor, expected, got
                ));
            }
            report.push(rec);
        }
    }
    report
}

/// Number of sorted tuples the classification visits in total (both factors).
pub fn tuples_visited(dim: usize) -> usize {
    2 * (0..=dim)
        .map(|p| sorted_tuples(dim, p).len())
        .sum::<usize>()
}

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

//! Exhaustive checks of the fourfold-symmetrized Γ-matrix identities.
//!
//! Every identity has the shape `Σ_terms (C·A)_{(αβ} (C·B)_{γδ)} = 0` for each
//! vector-index tuple. Only strictly increasing tuples are visited, which is
//! exhaustive because every identity is antisymmetric in its free indices.

use std::fmt;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::tensor::{QuarticTensor, SymmetrizedTensor};
use crate::gamma::{signed_permutations, sorted_tuples, DenseMatrix, GammaRep, SPINOR_DIM};
use crate::report::{CheckRecord, Status};
use crate::symmetry::SpinorFactor;
use crate::Gq;

/// How the antisymmetrization over `m₁…m_{2q−1}` in the second term is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AntisymPath {
    /// `Σ_j (−1)^{j−1} X_{m_j} Y_{m∖j}` over sorted generators.
    Parity,
    /// Explicit signed sum over all `(2q−1)!` orderings.
    Explicit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Identity {
    /// `Γⁿ_{(αβ}(Γ₁₁Γ_n)_{γδ)} = 0`.
    ChiralVector,
    /// `Γⁿ_{(αβ}(Γ_n)_{γδ)} = 0` on the full 32-component spinor space.
    Vector,
    /// `Γⁿ_{(αβ}(Γ_n)_{γδ)} = 0` with all four spinor indices restricted to
    /// the `Γ₁₁ = +1` (`positive`) or `Γ₁₁ = −1` Weyl subspace.
    VectorWeyl { positive: bool },
    /// `Γⁿ_{(αβ}(Γ_{nm})_{γδ)}`, which is not an identity.
    VectorTwoForm,
    /// `Γⁿ_{(αβ}(Γ_{nm})_{γδ)} + (Γ₁₁)_{(αβ}(Γ₁₁Γ_m)_{γδ)} = 0`; with
    /// `first_term_only` the second term is dropped.
    TwoForm { first_term_only: bool },
    /// `Γⁿ_{(αβ}(SΓ_{nm₁…m_{2q−1}})_{γδ)} + (2q−1)(Γ₁₁Γ_{[m₁})_{(αβ}(SΓ₁₁Γ_{m₂…m_{2q−1}]})_{γδ)} = 0`.
    Generalized {
        q: usize,
        factor: SpinorFactor,
        path: AntisymPath,
    },
}

impl Identity {
    /// The generalized identity with its standard factor `S(2q)`.
    pub fn generalized(q: usize) -> Identity {
        Identity::Generalized {
            q,
            factor: SpinorFactor::for_even_rank(2 * q),
            path: AntisymPath::Parity,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Identity::ChiralVector => "chiral-vector".into(),
            Identity::Vector => "vector".into(),
            Identity::VectorWeyl { positive: true } => "vector.weyl+".into(),
            Identity::VectorWeyl { positive: false } => "vector.weyl-".into(),
            Identity::VectorTwoForm => "vector-two-form".into(),
            Identity::TwoForm {
                first_term_only: false,
            } => "two-form".into(),
            Identity::TwoForm {
                first_term_only: true,
            } => "two-form.first-term".into(),
            Identity::Generalized { q, factor, path } => {
                let mut s = format!("generalized.q{q}");
                if *factor != SpinorFactor::for_even_rank(2 * q) {
                    s.push_str(&format!(".S={factor}"));
                }
                if *path == AntisymPath::Explicit {
                    s.push_str(".explicit");
                }
                s
            }
        }
    }

    /// Number of free vector indices.
    pub fn free_indices(&self) -> usize {
        match self {
            Identity::ChiralVector | Identity::Vector | Identity::VectorWeyl { .. } => 0,
            Identity::VectorTwoForm | Identity::TwoForm { .. } => 1,
            Identity::Generalized { q, .. } => 2 * q - 1,
        }
    }

    pub fn vector_tuples(&self, dim: usize) -> Vec<Vec<usize>> {
        sorted_tuples(dim, self.free_indices())
    }

    /// The unsymmetrized tensor for one vector-index tuple.
    pub fn tensor(&self, rep: &GammaRep, m: &[usize]) -> QuarticTensor {
        assert_eq!(
            m.len(),
            self.free_indices(),
            "wrong number of vector indices"
        );
        let one = Gq::int(1);
        let c = |x| rep.lower(x);
        let g11 = rep.gamma11();
        let antisym = |idx: &[usize]| rep.gamma_antisym(idx).expect("indices in range");
        let mut t = QuarticTensor::new();
        match *self {
            Identity::ChiralVector | Identity::Vector | Identity::VectorWeyl { .. } => {
                for n in 0..rep.dim() {
                    let right = if *self == Identity::ChiralVector {
                        g11 * rep.gamma(n)
                    } else {
                        rep.gamma(n)
                    };
                    t.push(one, c(rep.raise_index(n)), c(right));
                }
            }
            Identity::VectorTwoForm => {
                for n in 0..rep.dim() {
                    t.push(one, c(rep.raise_index(n)), c(antisym(&[n, m[0]])));
                }
            }
            Identity::TwoForm { first_term_only } => {
                for n in 0..rep.dim() {
                    t.push(one, c(rep.raise_index(n)), c(antisym(&[n, m[0]])));
                }
                if !first_term_only {
                    t.push(one, c(g11), c(g11 * rep.gamma(m[0])));
                }
            }
            Identity::Generalized { q, factor, path } => {
                let s = factor.matrix(rep);
                let mut idx = Vec::with_capacity(m.len() + 1);
                for n in 0..rep.dim() {
                    idx.clear();
                    idx.push(n);
                    idx.extend_from_slice(m);
                    t.push(one, c(rep.raise_index(n)), c(s * antisym(&idx)));
                }
                match path {
                    AntisymPath::Parity => {
                        for j in 0..m.len() {
                            let rest: Vec<usize> = m
                                .iter()
                                .enumerate()
                                .filter(|&(k, _)| k != j)
                                .map(|(_, &x)| x)
                                .collect();
                            let coef = if j % 2 == 0 { one } else { -one };
                            t.push(
                                coef,
                                c(g11 * rep.gamma(m[j])),
                                c(s * g11 * rep.product_sorted(&rest)),
                            );
                        }
                    }
                    AntisymPath::Explicit => {
                        // (2q−1)·(1/(2q−1)!) Σ_σ sgn σ X_{σ1} Y_{σ2…}
                        let norm = Gq::ratio(1, factorial(2 * q - 2));
                        for (perm, sign) in signed_permutations(m) {
                            t.push(
                                norm.signed(sign),
                                c(g11 * rep.gamma(perm[0])),
                                c(s * g11 * antisym(&perm[1..])),
                            );
                        }
                    }
                }
            }
        }
        t
    }
}

impl Identity {
    /// Projector `(1 ± Γ₁₁)/2` for the Weyl-restricted variants.
    pub fn projector(&self, rep: &GammaRep) -> Option<DenseMatrix> {
        match self {
            Identity::VectorWeyl { positive } => {
                let g = rep.gamma11().to_dense();
                let one = DenseMatrix::identity(SPINOR_DIM);
                let sum = if *positive { &one + &g } else { &one - &g };
                Some(sum.scaled(Gq::ratio(1, 2)))
            }
            _ => None,
        }
    }

    /// Symmetrized tensor for one vector tuple, projected if required.
    pub fn symmetrized(&self, rep: &GammaRep, m: &[usize]) -> SymmetrizedTensor {
        self.tensor(rep, m)
            .symmetrize_projected(self.projector(rep).as_ref())
    }

    /// Dense-oracle value of the symmetrized tensor at one entry.
    pub fn dense_entry(&self, rep: &GammaRep, m: &[usize], spinor: [usize; 4]) -> Gq {
        let t = self.tensor(rep, m);
        match self.projector(rep) {
            None => t.sym4_dense(spinor),
            Some(p) => t.sym4_dense_projected(spinor, &p),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Sorted spinor quadruple `αβγδ`.
    pub spinor: [usize; 4],
    /// Free vector indices.
    pub vector: Vec<usize>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.spinor;
        write!(
            f,
            "spinor ({},{},{},{}) vector {:?}",
            s[0], s[1], s[2], s[3], self.vector
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityVerdict {
    pub identity: Identity,
    pub name: String,
    pub holds: bool,
    /// Largest symmetrized entry (unnormalized 24-term sum) by `|re| + |im|`.
    pub max_residual: Gq,
    pub counterexample: Option<Counterexample>,
    pub tuples_checked: usize,
    /// Number of nonzero symmetrized entries over all tuples.
    pub nonzero_entries: usize,
    pub elapsed: Duration,
}

impl IdentityVerdict {
    /// Recomputes the cited entry with the dense 24-term oracle.
    pub fn confirm(&self, rep: &GammaRep) -> bool {
        match &self.counterexample {
            None => self.max_residual.is_zero(),
            Some(cx) => self.identity.dense_entry(rep, &cx.vector, cx.spinor) == self.max_residual,
        }
    }

    /// Report record; `recorded` turns a verdict into research output.
    pub fn to_record(&self, recorded: bool) -> CheckRecord {
        let status = if recorded {
            Status::Recorded
        } else if self.holds {
            Status::Pass
        } else {
            Status::Fail
        };
        let mut rec = CheckRecord::new(
            format!("identity.{}", self.name),
            anchor(&self.identity),
            status,
            self.max_residual,
        )
        .with_detail(format!(
            "holds={} tuples={} nonzero_entries={}",
            self.holds, self.tuples_checked, self.nonzero_entries
        ));
        if let Some(cx) = &self.counterexample {
            rec = rec.with_counterexample(cx.to_string());
        }
        rec
    }
}

fn anchor(id: &Identity) -> String {
    match id {
        Identity::ChiralVector => "chiral vector identity".into(),
        Identity::Vector => "vector Fierz identity, non-chiral spinors".into(),
        Identity::VectorWeyl { .. } => "vector Fierz identity, Weyl spinors".into(),
        Identity::VectorTwoForm => "false variant".into(),
        Identity::TwoForm { .. } => "two-form identity".into(),
        Identity::Generalized { q, .. } => format!("generalized identity, rank {}", 2 * q),
    }
}

/// Runs an identity over every sorted vector tuple.
pub fn check(rep: &GammaRep, identity: Identity) -> IdentityVerdict {
    check_tuples(rep, identity, &identity.vector_tuples(rep.dim()))
}

/// A spinor-index position together with its value.
type SpinorEntry = ([usize; 4], Gq);

/// Runs an identity over the given vector tuples.
///
/// Tuples are processed in parallel on the current rayon pool; the reduction
/// keeps the largest residual and, among equals, the earliest tuple, so the
/// verdict does not depend on the schedule.
pub fn check_tuples(rep: &GammaRep, identity: Identity, tuples: &[Vec<usize>]) -> IdentityVerdict {
    let start = Instant::now();
    let per_tuple: Vec<(usize, Option<SpinorEntry>)> = tuples
        .par_iter()
        .map(|m| {
            let s = identity.symmetrized(rep, m);
            (s.entries().len(), s.max_entry())
        })
        .collect();
    let mut best: Option<(usize, [usize; 4], Gq)> = None;
    let mut nonzero = 0;
    for (i, (count, max)) in per_tuple.into_iter().enumerate() {
        nonzero += count;
        if let Some((q, v)) = max {
            if best.as_ref().is_none_or(|b| v.l1() > b.2.l1()) {
                best = Some((i, q, v));
            }
        }
    }
    let (max_residual, counterexample) = match best {
        None => (Gq::zero(), None),
        Some((i, spinor, v)) => (
            v,
            Some(Counterexample {
                spinor,
                vector: tuples[i].clone(),
            }),
        ),
    };
    IdentityVerdict {
        identity,
        name: identity.name(),
        holds: counterexample.is_none(),
        max_residual,
        counterexample,
        tuples_checked: tuples.len(),
        nonzero_entries: nonzero,
        elapsed: start.elapsed(),
    }
}

pub fn check_chiral_vector(rep: &GammaRep) -> IdentityVerdict {
    check(rep, Identity::ChiralVector)
}

pub fn check_vector(rep: &GammaRep) -> IdentityVerdict {
    check(rep, Identity::Vector)
}

pub fn check_two_form(rep: &GammaRep) -> IdentityVerdict {
    check(
        rep,
        Identity::TwoForm {
            first_term_only: false,
        },
    )
}

pub fn check_generalized(rep: &GammaRep, q: usize) -> IdentityVerdict {
    assert!((1..=4).contains(&q), "q must be in 1..=4");
    check(rep, Identity::generalized(q))
}

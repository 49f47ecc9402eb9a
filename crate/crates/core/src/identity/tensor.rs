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

//! Four-index spinor tensors built from sums of `A_{αβ} B_{γδ}` products and
//! their full symmetrization over `(αβγδ)`.

use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use crate::gamma::{dense_sym4, DenseMatrix, ScaledSignedPerm, SignedPerm, SPINOR_DIM};
use crate::Gq;

/// One `coef · A_{αβ} · B_{γδ}` contribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub coef: Gq,
    pub left: ScaledSignedPerm,
    pub right: ScaledSignedPerm,
}

/// `T_{αβγδ} = Σ coef · A_{αβ} B_{γδ}`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QuarticTensor {
    terms: Vec<Term>,
}

impl QuarticTensor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, coef: Gq, left: ScaledSignedPerm, right: ScaledSignedPerm) {
        if !coef.is_zero() && !left.is_zero() && !right.is_zero() {
            self.terms.push(Term { coef, left, right });
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn entry(&self, a: usize, b: usize, c: usize, d: usize) -> Gq {
        self.terms
            .iter()
            .map(|t| t.coef * t.left.entry(a, b) * t.right.entry(c, d))
            .sum()
    }

    /// Moves every scale into the coefficient and merges terms carrying the
    /// same pair of signed permutations. The result is sorted, so two tensors
    /// with equal content compare equal term by term.
    pub fn coalesce(&self) -> QuarticTensor {
        let mut merged: FxHashMap<(SignedPerm, SignedPerm), Gq> = FxHashMap::default();
        for t in &self.terms {
            let (Some(lp), Some(rp)) = (t.left.perm(), t.right.perm()) else {
                continue;
            };
            *merged.entry((*lp, *rp)).or_default() += t.coef * t.left.scale() * t.right.scale();
        }
        let mut terms: Vec<Term> = merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((lp, rp), coef)| Term {
                coef,
                left: ScaledSignedPerm::from_perm(Gq::one(), lp),
                right: ScaledSignedPerm::from_perm(Gq::one(), rp),
            })
            .collect();
        terms.sort_by_key(term_key);
        QuarticTensor { terms }
    }

    /// Full unnormalized symmetrization by sparse scatter.
    ///
    /// Each nonzero `T(t)` is added to the bucket of its sorted index tuple;
    /// the bucket total times the size of the tuple's stabilizer in S₄ equals
    /// the 24-term sum at that entry.
    pub fn symmetrize(&self) -> SymmetrizedTensor {
        self.symmetrize_projected(None)
    }

    /// Symmetrization of `T` with every slot restricted by `P`, i.e. of
    /// `Σ coef (PᵀAP)_{αβ} (PᵀBP)_{γδ}`.
    pub fn symmetrize_projected(&self, proj: Option<&DenseMatrix>) -> SymmetrizedTensor {
        let mut acc: FxHashMap<u32, Gq> = FxHashMap::default();
        for t in &self.terms {
            let left = bilinear_entries(&t.left, proj);
            let right = bilinear_entries(&t.right, proj);
            for &(a, b, lv) in &left {
                let cl = t.coef * lv;
                for &(g, d, rv) in &right {
                    *acc.entry(pack(sort4([a, b, g, d]))).or_default() += cl * rv;
                }
            }
        }
        let mut entries: Vec<([u8; 4], Gq)> = acc
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| {
                let q = unpack(k);
                (q, v * Gq::int(stabilizer_order(q)))
            })
            .collect();
        entries.sort_unstable_by_key(|(k, _)| *k);
        SymmetrizedTensor { entries }
    }

    /// Dense oracle: the explicit 24-term sum at one entry.
    pub fn sym4_dense(&self, idx: [usize; 4]) -> Gq {
        dense_sym4(|a, b, c, d| self.entry(a, b, c, d), idx)
    }

    /// Dense oracle for [`Self::symmetrize_projected`].
    pub fn sym4_dense_projected(&self, idx: [usize; 4], proj: &DenseMatrix) -> Gq {
        let pt = proj.transpose();
        let restrict = |m: &ScaledSignedPerm| &(&pt * &m.to_dense()) * proj;
        let dense: Vec<(Gq, DenseMatrix, DenseMatrix)> = self
            .terms
            .iter()
            .map(|t| (t.coef, restrict(&t.left), restrict(&t.right)))
            .collect();
        dense_sym4(
            |a, b, c, d| {
                dense
                    .iter()
                    .map(|(k, l, r)| *k * l.get(a, b) * r.get(c, d))
                    .sum()
            },
            idx,
        )
    }
}

/// Nonzero entries of `m`, or of `PᵀmP` when a projector is given.
fn bilinear_entries(m: &ScaledSignedPerm, proj: Option<&DenseMatrix>) -> Vec<(usize, usize, Gq)> {
    match proj {
        None => (0..SPINOR_DIM)
            .filter_map(|r| m.row_entry(r).map(|(c, v)| (r, c, v)))
            .collect(),
        Some(p) => {
            let d = &(&p.transpose() * &m.to_dense()) * p;
            (0..SPINOR_DIM)
                .flat_map(|r| (0..SPINOR_DIM).map(move |c| (r, c)))
                .filter_map(|(r, c)| {
                    let v = d.get(r, c);
                    (!v.is_zero()).then_some((r, c, v))
                })
                .collect()
        }
    }
}

fn term_key(t: &Term) -> ([u8; 32], u32, [u8; 32], u32) {
    let l = t.left.perm().expect("coalesced terms are nonzero");
    let r = t.right.perm().expect("coalesced terms are nonzero");
    (*l.image(), l.neg_mask(), *r.image(), r.neg_mask())
}

fn sort4(mut q: [usize; 4]) -> [u8; 4] {
    q.sort_unstable();
    [q[0] as u8, q[1] as u8, q[2] as u8, q[3] as u8]
}

fn pack(q: [u8; 4]) -> u32 {
    u32::from_be_bytes(q)
}

fn unpack(k: u32) -> [u8; 4] {
    k.to_be_bytes()
}

/// Number of permutations fixing a sorted tuple: product of multiplicity factorials.
pub fn stabilizer_order(q: [u8; 4]) -> i64 {
    let mut order = 1;
    let mut run = 1;
    for i in 1..4 {
        if q[i] == q[i - 1] {
            run += 1;
            order *= run;
        } else {
            run = 1;
        }
    }
    order
}

/// Nonzero entries of a fully symmetrized tensor, keyed by sorted index tuple.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymmetrizedTensor {
    entries: Vec<([u8; 4], Gq)>,
}

impl SymmetrizedTensor {
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[([u8; 4], Gq)] {
        &self.entries
    }

    /// Value at any index tuple (order irrelevant).
    pub fn get(&self, idx: [usize; 4]) -> Gq {
        let k = sort4(idx);
        self.entries
            .binary_search_by_key(&k, |(q, _)| *q)
            .map(|i| self.entries[i].1)
            .unwrap_or_default()
    }

    /// Largest entry by `|re| + |im|`; ties go to the smallest index tuple.
    pub fn max_entry(&self) -> Option<([usize; 4], Gq)> {
        let mut best: Option<&([u8; 4], Gq)> = None;
        for e in &self.entries {
            if best.is_none_or(|b| e.1.l1() > b.1.l1()) {
                best = Some(e);
            }
        }
        best.map(|(q, v)| {
            (
                [q[0] as usize, q[1] as usize, q[2] as usize, q[3] as usize],
                *v,
            )
        })
    }
}

/// Wraps a tensor evaluator into the evaluator of its unnormalized symmetrization.
pub fn sym4<F>(tensor: F) -> impl Fn(usize, usize, usize, usize) -> Gq
where
    F: Fn(usize, usize, usize, usize) -> Gq,
{
    move |a, b, c, d| dense_sym4(&tensor, [a, b, c, d])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::{build_rep, Signature};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn symmetric_input_scales_by_24() {
        let t = |a: usize, b: usize, c: usize, d: usize| {
            Gq::int((a + b + c + d) as i64 + (a * b * c * d) as i64)
        };
        let s = sym4(t);
        assert_eq!(s(1, 2, 3, 4), Gq::int(24) * t(1, 2, 3, 4));
        assert_eq!(s(5, 5, 0, 7), Gq::int(24) * t(5, 5, 0, 7));
    }

    #[test]
    fn symmetric_times_antisymmetric_cancels() {
        let t = |a: usize, b: usize, c: usize, d: usize| {
            let delta = if a == b { 1 } else { 0 };
            let eps = (c as i64 - d as i64).signum();
            Gq::int(delta * eps)
        };
        let s = sym4(t);
        for q in [[0, 0, 1, 2], [3, 3, 3, 1], [1, 2, 3, 4], [0, 0, 0, 0]] {
            assert!(s(q[0], q[1], q[2], q[3]).is_zero());
        }
    }

    #[test]
    fn scatter_matches_dense_oracle_on_random_entries() {
        let rep = build_rep(&Signature::default()).unwrap();
        let mut t = QuarticTensor::new();
        for n in 0..10 {
            t.push(
                Gq::int(1),
                rep.lower(rep.raise_index(n)),
                rep.lower(rep.gamma(n) * rep.gamma((n + 3) % 10)),
            );
        }
        t.push(
            Gq::ratio(1, 2),
            rep.lower(rep.gamma11()),
            rep.lower(rep.gamma(4)),
        );
        let s = t.symmetrize();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for i in 0..100 {
            // Alternate between random and known-nonzero entries.
            let idx = if i % 2 == 0 || s.entries().is_empty() {
                [0; 4].map(|_| rng.gen_range(0..SPINOR_DIM))
            } else {
                let (q, _) = s.entries()[rng.gen_range(0..s.entries().len())];
                q.map(usize::from)
            };
            assert_eq!(s.get(idx), t.sym4_dense(idx), "entry {idx:?}");
        }
    }

    #[test]
    fn symmetrized_value_is_permutation_invariant() {
        let rep = build_rep(&Signature::default()).unwrap();
        let mut t = QuarticTensor::new();
        t.push(
            Gq::int(1),
            rep.lower(rep.gamma(2)),
            rep.lower(rep.gamma(2) * rep.gamma(7)),
        );
        let idx = [3, 9, 17, 30];
        let v = t.sym4_dense(idx);
        for p in crate::gamma::permutations4() {
            assert_eq!(
                t.sym4_dense([idx[p[0]], idx[p[1]], idx[p[2]], idx[p[3]]]),
                v
            );
        }
    }

    #[test]
    fn coalesce_merges_and_cancels() {
        let rep = build_rep(&Signature::default()).unwrap();
        let a = rep.lower(rep.gamma(1));
        let b = rep.lower(rep.gamma(2));
        let mut t = QuarticTensor::new();
        t.push(Gq::int(1), a, b);
        t.push(Gq::int(2), a, b);
        t.push(Gq::int(3), -a, b);
        assert!(t.coalesce().terms().is_empty());
        assert!(t.symmetrize().is_zero());
    }

    #[test]
    fn stabilizer_orders() {
        assert_eq!(stabilizer_order([1, 2, 3, 4]), 1);
        assert_eq!(stabilizer_order([1, 1, 3, 4]), 2);
        assert_eq!(stabilizer_order([1, 1, 3, 3]), 4);
        assert_eq!(stabilizer_order([1, 1, 1, 4]), 6);
        assert_eq!(stabilizer_order([2, 2, 2, 2]), 24);
    }
}

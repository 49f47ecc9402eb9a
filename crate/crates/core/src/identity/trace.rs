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

//! Trace lemmas used when contracting the generalized identities with `Γ_l`,
//! and the dimension-counting condition they imply.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::gamma::{sorted_tuples, DenseMatrix, GammaRep, ScaledSignedPerm, SPINOR_DIM};
use crate::report::{CheckRecord, VerificationReport};
use crate::symmetry::SpinorFactor;
use crate::Gq;

/// Which spinor dimension enters `tr(1) − 4(D − 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TraceMode {
    /// Always 32, the spinor space of the construction.
    Fixed,
    /// `2^{⌊D/2⌋}`, the Dirac spinor dimension in `D` dimensions.
    SpinorDim,
}

/// `tr(1) − 4(D − 2)`; zero exactly when the condition is met.
///
/// # Panics
/// If `d < 4`.
pub fn necessary_condition(d: u32, mode: TraceMode) -> i64 {
    assert!(d >= 4, "dimension must be at least 4");
    let tr = match mode {
        TraceMode::Fixed => SPINOR_DIM as i64,
        TraceMode::SpinorDim => 1i64 << (d / 2),
    };
    tr - 4 * (d as i64 - 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TupleSample {
    All,
    /// `count` tuples drawn without replacement from `All`.
    Random {
        count: usize,
        seed: u64,
    },
    List(Vec<(usize, Vec<usize>)>),
}

/// Values of the four lemmas on one `(l, m₁…m_{2q−1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaValues {
    /// `Σ_n tr(ΓⁿΓ_l) CSΓ_{nm…} = tr(1) CSΓ_{lm…}`.
    pub a_holds: bool,
    /// The traces that must vanish, in a fixed order.
    pub b_traces: Vec<Gq>,
    /// κ with `(Σ_n CΓⁿΓ_l SΓ_{nm…})_sym = κ CSΓ_{lm…}`, if proportional.
    pub c_coefficient: Option<Gq>,
    /// κ with `Σ_j (−1)^{j−1} (CSΓ_{m_j}Γ_lΓ_{m∖j})_sym = κ CSΓ_{lm…}`, if proportional.
    pub d_coefficient: Option<Gq>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TupleOutcome {
    Checked(LemmaValues),
    /// `l` coincides with one of the `m`'s and the antisymmetrized product vanishes.
    Degenerate,
}

fn dense_sum(terms: impl IntoIterator<Item = ScaledSignedPerm>) -> DenseMatrix {
    terms
        .into_iter()
        .fold(DenseMatrix::zeros(SPINOR_DIM), |acc, t| {
            &acc + &t.to_dense()
        })
}

/// κ with `m = κ·target`, if such a κ exists. `target` must be nonzero.
fn proportionality(m: &DenseMatrix, target: &ScaledSignedPerm) -> Option<Gq> {
    let (col, tv) = target.row_entry(0)?;
    let kappa = m.get(0, col) / tv;
    (m == &target.scaled(kappa).to_dense()).then_some(kappa)
}

pub fn lemma_values(rep: &GammaRep, q: usize, l: usize, m: &[usize]) -> TupleOutcome {
    assert_eq!(m.len(), 2 * q - 1, "expected 2q-1 vector indices");
    if m.contains(&l) {
        return TupleOutcome::Degenerate;
    }
    let s = SpinorFactor::for_even_rank(2 * q).matrix(rep);
    let c = rep.charge_conj();
    let g11 = rep.gamma11();
    let gl = rep.gamma(l);
    let antisym = |head: usize, tail: &[usize]| {
        let mut idx = vec![head];
        idx.extend_from_slice(tail);
        rep.gamma_antisym(&idx).expect("indices in range")
    };
    let target = c * s * antisym(l, m);

    let tr_one = Gq::int(SPINOR_DIM as i64);
    let a_sum = dense_sum(
        (0..rep.dim()).map(|n| (c * s * antisym(n, m)).scaled((rep.raise_index(n) * gl).trace())),
    );
    let a_holds = a_sum == target.scaled(tr_one).to_dense()
        && (0..rep.dim()).all(|n| {
            let expect = if n == l { tr_one } else { Gq::zero() };
            (rep.raise_index(n) * gl).trace() == expect
        });

    let mut b_traces: Vec<Gq> = (0..rep.dim())
        .map(|n| (gl * s * antisym(n, m)).trace())
        .collect();
    b_traces.push((g11 * rep.gamma(m[0]) * gl).trace());
    b_traces.push((gl * s * g11 * rep.product_sorted(&m[1..])).trace());

    let c_sum = dense_sum((0..rep.dim()).map(|n| c * rep.raise_index(n) * gl * s * antisym(n, m)))
        .symmetric_part();
    let d_sum = dense_sum((0..m.len()).map(|j| {
        let rest: Vec<usize> = m
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != j)
            .map(|(_, &x)| x)
            .collect();
        let t = c * s * rep.gamma(m[j]) * gl * rep.product_sorted(&rest);
        if j % 2 == 0 {
            t
        } else {
            -t
        }
    }))
    .symmetric_part();

    TupleOutcome::Checked(LemmaValues {
        a_holds,
        b_traces,
        c_coefficient: proportionality(&c_sum, &target),
        d_coefficient: proportionality(&d_sum, &target),
    })
}

fn all_tuples(dim: usize, q: usize) -> Vec<(usize, Vec<usize>)> {
    let mut out = Vec::new();
    for m in sorted_tuples(dim, 2 * q - 1) {
        for l in 0..dim {
            if !m.contains(&l) {
                out.push((l, m.clone()));
            }
        }
    }
    out
}

fn fmt_tuple(l: usize, m: &[usize]) -> String {
    format!("l={l} m={m:?}")
}

/// Checks lemmas (a)–(d) for one `q`; one report record per lemma.
pub fn check_trace_lemmas(rep: &GammaRep, q: usize, sample: &TupleSample) -> VerificationReport {
    assert!((1..=4).contains(&q), "q must be in 1..=4");
    let tuples = match sample {
        TupleSample::All => all_tuples(rep.dim(), q),
        TupleSample::Random { count, seed } => {
            let all = all_tuples(rep.dim(), q);
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut picked: Vec<_> = all
                .choose_multiple(&mut rng, (*count).min(all.len()))
                .cloned()
                .collect();
            picked.sort();
            picked
        }
        TupleSample::List(list) => list.clone(),
    };
    let outcomes: Vec<TupleOutcome> = tuples
        .par_iter()
        .map(|(l, m)| lemma_values(rep, q, *l, m))
        .collect();

    let expected_c = Gq::int(-(rep.dim() as i64 - 2 * q as i64 - 1));
    let expected_d = Gq::int(-(2 * q as i64 - 1));
    let mut checked = 0;
    let mut degenerate = 0;
    let mut fail_a = None;
    let mut fail_b: Option<(usize, Gq)> = None;
    let mut fail_c: Option<(usize, Option<Gq>)> = None;
    let mut fail_d: Option<(usize, Option<Gq>)> = None;
    for (i, o) in outcomes.iter().enumerate() {
        let TupleOutcome::Checked(v) = o else {
            degenerate += 1;
            continue;
        };
        checked += 1;
        if !v.a_holds && fail_a.is_none() {
            fail_a = Some(i);
        }
        if fail_b.is_none() {
            if let Some(t) = v.b_traces.iter().find(|t| !t.is_zero()) {
                fail_b = Some((i, *t));
            }
        }
        if v.c_coefficient != Some(expected_c) && fail_c.is_none() {
            fail_c = Some((i, v.c_coefficient));
        }
        if v.d_coefficient != Some(expected_d) && fail_d.is_none() {
            fail_d = Some((i, v.d_coefficient));
        }
    }

    let base = format!("trace-lemmas.q{q}");
    let mut summary = format!("{checked} tuples checked, {degenerate} degenerate skipped");
    if let TupleSample::Random { seed, .. } = sample {
        summary.push_str(&format!(", sampled with seed {seed}"));
    }
    let cx = |i: usize| fmt_tuple(tuples[i].0, &tuples[i].1);
    let coef_residual = |got: Option<Gq>, want: Gq| {
        got.map_or("not proportional".to_string(), |g| (g - want).to_string())
    };

    let mut report = VerificationReport::new();
    let mut rec = CheckRecord::verdict(
        format!("{base}.a"),
        "trace of vector pair",
        fail_a.is_none(),
        0,
    )
    .with_detail(summary.clone());
    if let Some(i) = fail_a {
        rec = CheckRecord {
            residual: "1".into(),
            ..rec
        }
        .with_counterexample(cx(i));
    }
    report.push(rec);

    let mut rec =
        CheckRecord::verdict(format!("{base}.b"), "vanishing traces", fail_b.is_none(), 0)
            .with_detail(summary.clone());
    if let Some((i, t)) = fail_b {
        rec = CheckRecord {
            residual: t.to_string(),
            ..rec
        }
        .with_counterexample(cx(i));
    }
    report.push(rec);

    for (letter, anchor, fail, want) in [
        ("c", "contracted symmetric part", fail_c, expected_c),
        ("d", "cyclic collapse", fail_d, expected_d),
    ] {
        let mut rec = CheckRecord::verdict(format!("{base}.{letter}"), anchor, fail.is_none(), 0)
            .with_detail(format!("coefficient {want}; {summary}"));
        if let Some((i, got)) = fail {
            rec = CheckRecord {
                residual: coef_residual(got, want),
                ..rec
            }
            .with_counterexample(cx(i));
        }
        report.push(rec);
    }
    report
}

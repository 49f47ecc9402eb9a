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

//! Named verification suites, each producing a [`VerificationReport`].

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algebra::verify_algebra;
use crate::forms::{record_under, verify_bianchi, verify_superspace, Bigraded, Superspace, Total};
use crate::gamma::{DenseMatrix, GammaRep, ScaledSignedPerm, SPINOR_DIM};
use crate::identity::{
    check, check_trace_lemmas, necessary_condition, Identity, IdentityVerdict, TraceMode,
    TupleSample,
};
use crate::report::{CheckRecord, Status, VerificationReport};
use crate::symmetry::{compare_table, embedded_table, generate_table};
use crate::Gq;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Clifford,
    SymmetryTable,
    Identities,
    TraceLemmas,
    Superspace,
    Bianchi,
    Algebra,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Clifford,
        Suite::SymmetryTable,
        Suite::Identities,
        Suite::TraceLemmas,
        Suite::Superspace,
        Suite::Bianchi,
        Suite::Algebra,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Clifford => "clifford",
            Suite::SymmetryTable => "symmetry-table",
            Suite::Identities => "identities",
            Suite::TraceLemmas => "trace-lemmas",
            Suite::Superspace => "superspace",
            Suite::Bianchi => "bianchi",
            Suite::Algebra => "algebra",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Options shared by the suites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Ranks `2q` for the generalized identities, trace lemmas and charge algebras.
    pub qs: Vec<usize>,
    pub seed: u64,
    /// Sampled tuples per `q ≥ 2` trace-lemma run.
    pub trace_samples: usize,
    pub dimension_sweep: bool,
    /// Attach `elapsed_ms`. Off by default so reports are reproducible.
    pub timings: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            qs: vec![1, 2, 3, 4],
            seed: 0,
            trace_samples: 100,
            dimension_sweep: false,
            timings: false,
        }
    }
}

/// Dimensions listed by the necessary-condition sweep.
pub const SWEEP_DIMENSIONS: [u32; 6] = [4, 6, 8, 10, 11, 12];

fn simple(name: &str, anchor: &str, failures: Vec<String>) -> CheckRecord {
    let rec = CheckRecord::verdict(name, anchor, failures.is_empty(), failures.len());
    match failures.first() {
        Some(first) => rec.with_counterexample(first.clone()),
        None => rec,
    }
}

/// Clifford relations, symmetry of `C` and `CΓ_m`, and the chirality matrix.
pub fn verify_clifford(rep: &GammaRep) -> VerificationReport {
    let d = rep.dim();
    let id = ScaledSignedPerm::identity();
    let c = rep.charge_conj();
    let g11 = rep.gamma11();
    let mut r = VerificationReport::new();
    let mut clifford = Vec::new();
    for m in 0..d {
        for n in m..d {
            let (gm, gn) = (rep.gamma(m).to_dense(), rep.gamma(n).to_dense());
            let anti = &gm.matmul(&gn) + &gn.matmul(&gm);
            let want = if m == n {
                id.scaled(Gq::int(2 * rep.eta(m) as i64)).to_dense()
            } else {
                DenseMatrix::zeros(SPINOR_DIM)
            };
            if anti != want {
                clifford.push(format!("m={m} n={n}"));
            }
        }
    }
    r.push(simple(
        "clifford.relations",
        "Clifford algebra relations",
        clifford,
    ));
    r.push(simple(
        "clifford.C-antisymmetric",
        "charge conjugation is antisymmetric",
        if c.transpose() == -c {
            vec![]
        } else {
            vec!["C".into()]
        },
    ));
    r.push(simple(
        "clifford.CGamma-symmetric",
        "C Gamma_m is symmetric",
        (0..d)
            .filter(|&m| (c * rep.gamma(m)).symmetry_sign() != Some(1))
            .map(|m| format!("m={m}"))
            .collect(),
    ));
    r.push(simple(
        "clifford.gamma11-squared",
        "Gamma11 squares to one",
        if g11 * g11 == id {
            vec![]
        } else {
            vec!["Gamma11^2".into()]
        },
    ));
    r.push(simple(
        "clifford.gamma11-anticommutes",
        "Gamma11 anticommutes with every Gamma_m",
        (0..d)
            .filter(|&m| g11 * rep.gamma(m) != -(rep.gamma(m) * g11))
            .map(|m| format!("m={m}"))
            .collect(),
    ));
    r.push(simple(
        "clifford.gamma11-traceless",
        "Gamma11 is traceless",
        if g11.trace() == Gq::int(0) {
            vec![]
        } else {
            vec![format!("trace {}", g11.trace())]
        },
    ));
    r
}

/// Every entry of the spinor-bilinear symmetry table, recomputed over all
/// index tuples and compared with the reference.
pub fn verify_symmetry_table(rep: &GammaRep) -> VerificationReport {
    match generate_table(rep) {
        Ok(t) => compare_table(&t, &embedded_table()),
        Err(e) => VerificationReport::from_records([CheckRecord::verdict(
            "symmetry-table.classification",
            "symmetry-table",
            false,
            1,
        )
        .with_counterexample(e.to_string())]),
    }
}

fn verdict_record(rep: &GammaRep, v: &IdentityVerdict, recorded: bool) -> CheckRecord {
    let rec = v.to_record(recorded);
    if v.counterexample.is_some() {
        let confirmed = v.confirm(rep);
        let detail = format!(
            "{}; dense oracle {}",
            rec.detail.clone().unwrap_or_default(),
            if confirmed { "agrees" } else { "DISAGREES" }
        );
        let mut rec = rec.with_detail(detail);
        if !confirmed {
            rec.status = Status::Fail;
        }
        rec
    } else {
        rec
    }
}

/// The quartic spinor identities.
///
/// The vector identity over unrestricted (non-chiral) spinors is kept as a
/// recorded result: it holds only after a Weyl projection, which the two
/// projected checks gate. Generalized identities for `q ≥ 2` are recorded.
pub fn verify_identities(rep: &GammaRep, opts: &SuiteOptions) -> VerificationReport {
    let mut r = VerificationReport::new();
    let d = rep.dim() as u32;
    let value = if d >= 4 {
        necessary_condition(d, TraceMode::Fixed)
    } else {
        1
    };
    r.push(
        CheckRecord::verdict(
            "identity.necessary-condition",
            "tr(1) - 4(D - 2) vanishes",
            value == 0,
            value,
        )
        .with_detail(format!("D={d}, trace 32")),
    );
    if opts.dimension_sweep {
        for dd in SWEEP_DIMENSIONS {
            let v = necessary_condition(dd, TraceMode::SpinorDim);
            r.push(
                CheckRecord::new(
                    format!("identity.necessary-condition.D{dd}"),
                    "dimension sweep",
                    Status::Recorded,
                    v,
                )
                .with_detail(format!("trace {}", 1u64 << (dd / 2))),
            );
        }
    }
    let mut runs: Vec<(Identity, bool)> = vec![
        (Identity::ChiralVector, false),
        (Identity::VectorWeyl { positive: true }, false),
        (Identity::VectorWeyl { positive: false }, false),
        (Identity::Vector, true),
        (
            Identity::TwoForm {
                first_term_only: false,
            },
            false,
        ),
    ];
    for &q in &opts.qs {
        runs.push((Identity::generalized(q), q >= 2));
    }
    for (id, recorded) in runs {
        let start = Instant::now();
        let v = check(rep, id);
        let mut rec = verdict_record(rep, &v, recorded);
        if opts.timings {
            rec = rec.with_elapsed(start.elapsed());
        }
        r.push(rec);
    }
    r
}

/// Trace lemmas: every tuple for `q = 1`, a seeded sample otherwise.
pub fn verify_trace_lemmas(rep: &GammaRep, opts: &SuiteOptions) -> VerificationReport {
    let mut r = VerificationReport::new();
    for &q in &opts.qs {
        let sample = if q == 1 {
            TupleSample::All
        } else {
            TupleSample::Random {
                count: opts.trace_samples,
                seed: opts.seed.wrapping_add(q as u64),
            }
        };
        r.merge(check_trace_lemmas(rep, q, &sample));
    }
    r
}

/// Runs one suite on `rep`.
pub fn run_suite(suite: Suite, rep: &GammaRep, opts: &SuiteOptions) -> VerificationReport {
    let start = Instant::now();
    let mut report = match suite {
        Suite::Clifford => verify_clifford(rep),
        Suite::SymmetryTable => verify_symmetry_table(rep),
        Suite::Identities => verify_identities(rep, opts),
        Suite::TraceLemmas => verify_trace_lemmas(rep, opts),
        Suite::Superspace => {
            let mut r = verify_superspace(&Superspace::<Bigraded>::new(rep.clone()));
            r.merge(record_under(&Superspace::<Total>::new(rep.clone())));
            r
        }
        Suite::Bianchi => verify_bianchi(&Superspace::<Bigraded>::new(rep.clone())),
        Suite::Algebra => {
            let qs: Vec<usize> = opts
                .qs
                .iter()
                .copied()
                .filter(|q| (1..=4).contains(q))
                .collect();
            verify_algebra(&Superspace::<Bigraded>::new(rep.clone()), &qs)
        }
    };
    if opts.timings {
        let ms = start.elapsed();
        report.push(
            CheckRecord::new(
                format!("timing.{suite}"),
                "suite wall time",
                Status::Recorded,
                0,
            )
            .with_elapsed(ms),
        );
    }
    report
}

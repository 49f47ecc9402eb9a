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

//! Quartic spinor identities and trace lemmas with frozen reference values.

mod common;

use common::rep;
use scv_core::identity::{
    check, check_trace_lemmas, lemma_values, necessary_condition, AntisymPath, Identity, TraceMode,
    TupleOutcome, TupleSample,
};
use scv_core::symmetry::SpinorFactor;
use scv_core::Gq;

#[test]
fn chiral_vector_identity_holds() {
    let v = check(&rep(), Identity::ChiralVector);
    assert!(v.holds);
    assert_eq!(v.nonzero_entries, 0);
}

/// Over unrestricted 32-component spinors the vector identity fails; the
/// reference values were computed once and are frozen here.
#[test]
fn vector_identity_needs_chiral_spinors() {
    let r = rep();
    let v = check(&r, Identity::Vector);
    assert!(!v.holds);
    assert_eq!(v.max_residual, Gq::int(-16));
    let cx = v.counterexample.as_ref().unwrap();
    assert_eq!(cx.spinor, [0, 0, 5, 5]);
    assert_eq!(v.nonzero_entries, 640);
    assert!(v.confirm(&r));
    for positive in [true, false] {
        assert!(check(&r, Identity::VectorWeyl { positive }).holds);
    }
}

#[test]
fn two_form_identity_needs_both_terms() {
    let r = rep();
    assert!(
        check(
            &r,
            Identity::TwoForm {
                first_term_only: false
            }
        )
        .holds
    );
    let first = check(
        &r,
        Identity::TwoForm {
            first_term_only: true,
        },
    );
    assert!(!first.holds);
    assert!(first.confirm(&r));
    let wrong = check(&r, Identity::VectorTwoForm);
    assert!(!wrong.holds);
    assert!(wrong.confirm(&r));
}

#[test]
fn generalized_identities_hold_for_every_rank() {
    let r = rep();
    for q in 1..=4 {
        let v = check(&r, Identity::generalized(q));
        assert!(v.holds, "q={q}: {:?}", v.counterexample);
        assert_eq!(v.tuples_checked, [10, 120, 252, 120][q - 1]);
    }
}

#[test]
fn antisymmetrization_paths_agree() {
    let r = rep();
    for q in [2, 3] {
        let parity = Identity::Generalized {
            q,
            factor: SpinorFactor::for_even_rank(2 * q),
            path: AntisymPath::Parity,
        };
        let explicit = Identity::Generalized {
            q,
            factor: SpinorFactor::for_even_rank(2 * q),
            path: AntisymPath::Explicit,
        };
        let m: Vec<usize> = (0..2 * q - 1).collect();
        assert_eq!(
            parity.tensor(&r, &m).coalesce(),
            explicit.tensor(&r, &m).coalesce()
        );
    }
}

/// With `S = Γ₁₁` at rank two the γδ bilinear of each term is antisymmetric,
/// so both terms symmetrize to zero on their own: the wrong factor passes
/// trivially.
#[test]
fn wrong_factor_at_rank_two_is_trivial() {
    let r = rep();
    let id = Identity::Generalized {
        q: 1,
        factor: SpinorFactor::Gamma11,
        path: AntisymPath::Parity,
    };
    assert!(check(&r, id).holds);
}

#[test]
fn trace_lemma_coefficients() {
    let r = rep();
    for q in 1..=4usize {
        let m: Vec<usize> = (0..2 * q - 1).collect();
        let TupleOutcome::Checked(v) = lemma_values(&r, q, 9, &m) else {
            panic!("degenerate")
        };
        assert!(v.a_holds);
        assert!(v.b_traces.iter().all(|t| *t == Gq::int(0)));
        assert_eq!(v.c_coefficient, Some(Gq::int(-(10 - 2 * q as i64 - 1))));
        assert_eq!(v.d_coefficient, Some(Gq::int(-(2 * q as i64 - 1))));
        // l among the m's antisymmetrizes to zero.
        assert_eq!(lemma_values(&r, q, 0, &m), TupleOutcome::Degenerate);
    }
}

#[test]
fn trace_lemmas_on_every_tuple() {
    let r = rep();
    for q in 1..=4 {
        let report = check_trace_lemmas(&r, q, &TupleSample::All);
        assert!(
            report.all_passed(),
            "q={q}: {:?}",
            report.failures().collect::<Vec<_>>()
        );
        let detail = report.records[0].detail.clone().unwrap();
        let checked = [90, 840, 1260, 360][q - 1];
        assert!(detail.contains(&checked.to_string()), "{detail}");
    }
}

#[test]
fn trace_lemma_samples_are_seeded() {
    let r = rep();
    let a = check_trace_lemmas(
        &r,
        2,
        &TupleSample::Random {
            count: 100,
            seed: 11,
        },
    );
    let b = check_trace_lemmas(
        &r,
        2,
        &TupleSample::Random {
            count: 100,
            seed: 11,
        },
    );
    assert_eq!(a, b);
    assert!(a.all_passed());
}

#[test]
fn necessary_condition_singles_out_ten() {
    assert_eq!(necessary_condition(10, TraceMode::Fixed), 0);
    let sweep: Vec<i64> = [4, 6, 8, 10, 11, 12]
        .iter()
        .map(|&d| necessary_condition(d, TraceMode::SpinorDim))
        .collect();
    assert_eq!(sweep, vec![-4, -8, -8, 0, -4, 24]);
}

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

//! The `algebra` verification suite.

use super::charges::{
    assemble_extended_algebra, build_extended_superalgebra, build_flat_superalgebra,
};
use super::charges::{ChargeTerm, Family};
use super::currents::{verify_s_delta, verify_vector_field_sign};
use super::structure::verify_graded_jacobi;
use crate::forms::{SignRule, Superspace};
use crate::gamma::{GammaRep, ScaledSignedPerm};
use crate::report::{CheckRecord, VerificationReport};
use crate::symmetry::{embedded_table, SpinorFactor};
use crate::Gq;

/// `(S, p)` whose table entry governs the symmetry of a term's matrix.
fn table_slot(term: &ChargeTerm) -> (SpinorFactor, usize) {
    match term.family {
        Family::P => (SpinorFactor::Identity, 1),
        Family::Y => (SpinorFactor::Gamma11, 1),
        Family::Z { rank, .. } => (SpinorFactor::for_even_rank(rank), rank),
    }
}

/// Expected display coefficient of a `q = 1` term, written out family by family.
fn q1_family_matrix(rep: &GammaRep, term: &ChargeTerm) -> ScaledSignedPerm {
    let g11 = rep.gamma11();
    let m = &term.indices;
    match term.family {
        Family::P => rep.lower(rep.raise_index(m[0])).scaled(Gq::int(2)),
        Family::Y => rep.lower(g11 * rep.gamma(m[0])).scaled(Gq::imag(-2)),
        Family::Z { rank: 2, .. } => rep
            .lower(rep.gamma_antisym(&[m[1], m[0]]).unwrap())
            .scaled(Gq::imag(-1)),
        Family::Z { .. } => rep.lower(g11).scaled(Gq::imag(-2)),
    }
}

/// Assembly, symmetry and family checks on the charge terms for each `q`.
pub fn verify_charge_terms(rep: &GammaRep, qs: &[usize]) -> VerificationReport {
    let mut r = VerificationReport::new();
    let table = embedded_table();
    let c_g11 = rep.lower(rep.gamma11());
    r.push(CheckRecord::verdict(
        "algebra.central-symmetry",
        "C Gamma11 is symmetric",
        c_g11.transpose() == c_g11,
        u8::from(c_g11.transpose() != c_g11),
    ));
    for &q in qs {
        let terms = match assemble_extended_algebra(rep, q) {
            Ok(t) => t,
            Err(e) => {
                r.push(
                    CheckRecord::verdict(
                        format!("algebra.q{q}.assembly"),
                        "modified charge algebra",
                        false,
                        1,
                    )
                    .with_counterexample(e.to_string()),
                );
                continue;
            }
        };
        r.push(
            CheckRecord::verdict(
                format!("algebra.q{q}.assembly"),
                "modified charge algebra",
                true,
                0,
            )
            .with_detail(format!("{} symmetric charge terms", terms.len())),
        );
        let mismatch = terms.iter().find(|t| {
            let (s, p) = table_slot(t);
            t.matrix.symmetry_sign() != Some(table.get(s, p).sign())
        });
        let mut rec = CheckRecord::verdict(
            format!("algebra.q{q}.table-agreement"),
            "charge term symmetry agrees with the symmetry table",
            mismatch.is_none(),
            u8::from(mismatch.is_some()),
        );
        if let Some(t) = mismatch {
            rec = rec.with_counterexample(t.label());
        }
        r.push(rec);
        // The k = 0 family has rank 2q.
        let top = terms
            .iter()
            .find(|t| t.family == Family::Z { k: 0, rank: 2 * q })
            .expect("k = 0 term");
        let want = table.get(SpinorFactor::for_even_rank(2 * q), 2 * q);
        r.push(
            CheckRecord::verdict(
                format!("algebra.q{q}.top-rank-type"),
                "top-rank charge matches the symmetry table",
                top.matrix.symmetry_sign() == Some(want.sign()),
                u8::from(top.matrix.symmetry_sign() != Some(want.sign())),
            )
            .with_detail(format!(
                "S({}) = {}, type {}",
                2 * q,
                SpinorFactor::for_even_rank(2 * q),
                want
            )),
        );
        let central = terms
            .iter()
            .find(|t| t.family == Family::Z { k: q, rank: 0 })
            .expect("k = q term");
        let expected = c_g11.scaled(Gq::imag(-2));
        r.push(CheckRecord::verdict(
            format!("algebra.q{q}.central-term"),
            "k = q coefficient is -2i C Gamma11",
            central.matrix == expected,
            u8::from(central.matrix != expected),
        ));
        if q == 1 {
            let bad = terms
                .iter()
                .find(|t| t.display_matrix() != q1_family_matrix(rep, t));
            let mut rec = CheckRecord::verdict(
                "algebra.q1.families",
                "D2-brane charge algebra families",
                bad.is_none(),
                u8::from(bad.is_some()),
            )
            .with_detail("2(C Gamma^m), -2i(C Gamma11 Gamma_m), -i(C Gamma_{m2 m1}), -2i(C Gamma11); formal label T");
            if let Some(t) = bad {
                rec = rec.with_counterexample(t.label());
            }
            r.push(rec);
        }
    }
    r
}

/// Everything in the `algebra` suite.
pub fn verify_algebra<R: SignRule>(ss: &Superspace<R>, qs: &[usize]) -> VerificationReport {
    let rep = ss.rep();
    let mut r = VerificationReport::new();
    r.merge(verify_graded_jacobi("flat", &build_flat_superalgebra(rep)));
    r.merge(verify_vector_field_sign(ss));
    r.merge(verify_charge_terms(rep, qs));
    for &q in qs {
        if let Ok(alg) = build_extended_superalgebra(rep, q) {
            r.merge(verify_graded_jacobi(&format!("q{q}"), &alg));
        }
    }
    r.merge(verify_s_delta(ss));
    r
}

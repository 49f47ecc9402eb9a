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

//! Exact verification of the superspace potentials and Bianchi identities.

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::builders::Superspace;
use super::form::SuperForm;
use super::grading::SignRule;
use crate::gamma::sorted_tuples;
use crate::report::{CheckRecord, Status, VerificationReport};
use crate::symmetry::SpinorFactor;
use crate::Gq;

fn profile<R: SignRule>(f: &SuperForm<R>) -> String {
    let parts: Vec<String> = f
        .grade_profile()
        .iter()
        .map(|((p, t), n)| format!("(form {p}, theta {t}): {n}"))
        .collect();
    format!("{} monomials; {}", f.len(), parts.join(", "))
}

fn first_term<R: SignRule>(f: &SuperForm<R>) -> Option<String> {
    f.terms().first().map(|(m, c)| format!("{c}: {m}"))
}

/// Pass iff `residual` is zero; on failure the grade profile and the first
/// offending monomial are attached.
pub fn form_record<R: SignRule>(name: &str, anchor: &str, residual: &SuperForm<R>) -> CheckRecord {
    form_record_labeled(name, anchor, residual, None)
}

fn form_record_labeled<R: SignRule>(
    name: &str,
    anchor: &str,
    residual: &SuperForm<R>,
    label: Option<String>,
) -> CheckRecord {
    let rec = CheckRecord::verdict(name, anchor, residual.is_zero(), residual.l1_norm());
    if residual.is_zero() {
        return rec;
    }
    let cx = first_term(residual).unwrap_or_default();
    let cx = match label {
        Some(l) => format!("{l}: {cx}"),
        None => cx,
    };
    rec.with_counterexample(cx).with_detail(profile(residual))
}

/// Runs `f` over a family in parallel and reports the first nonzero residual
/// in iteration order, so the outcome does not depend on scheduling.
fn sweep<R: SignRule, T: Send + Sync>(
    name: &str,
    anchor: &str,
    items: impl IntoIterator<Item = T>,
    label: impl Fn(&T) -> String,
    f: impl Fn(&T) -> SuperForm<R> + Sync,
) -> CheckRecord {
    let items: Vec<T> = items.into_iter().collect();
    let first_bad = items
        .par_iter()
        .enumerate()
        .filter_map(|(i, item)| {
            let r = f(item);
            (!r.is_zero()).then_some((i, r))
        })
        .min_by_key(|(i, _)| *i);
    match first_bad {
        Some((i, r)) => form_record_labeled(name, anchor, &r, Some(label(&items[i]))),
        None => CheckRecord::verdict(name, anchor, true, 0)
            .with_detail(format!("{} cases", items.len())),
    }
}

/// `dB + K⁽³⁾(Γ₁₁) = 0` and `dC⁽¹⁾ = K⁽²⁾(Γ₁₁)`.
pub fn verify_h<R: SignRule>(ss: &Superspace<R>) -> VerificationReport {
    let b = ss.b_potential();
    let k3 = ss.k_form(1, SpinorFactor::Gamma11);
    let mut r = VerificationReport::new();
    r.push(form_record(
        "superspace.dB+K3",
        "potential of the NS 3-form",
        &(b.ext_d() + k3.clone()),
    ));
    r.push(form_record(
        "superspace.dK3",
        "closure of the NS 3-form",
        &k3.ext_d(),
    ));
    r.push(form_record(
        "superspace.dC1-K2",
        "RR 1-form potential",
        &(ss.c1().ext_d() - ss.k_form(0, SpinorFactor::Gamma11)),
    ));
    r.push(sweep(
        "superspace.dPi",
        "left-invariant frame",
        0..ss.dim(),
        |m| format!("m={m}"),
        |&m| ss.pi(m).ext_d() - ss.dtm_dt(ss.g_up(m)).scaled(Gq::i()),
    ));
    r
}

/// Invariance and potential checks under `δ_α`:
/// `δ_αΠᵐ = 0`, `δ_αK⁽³⁾ = 0`, `δ_αB = dΔ_α`, the closure relation for
/// `δ_αΔ_β + δ_βΔ_α`, its Γ-traces, and `Δ_m = 0`.
pub fn verify_delta_b<R: SignRule>(ss: &Superspace<R>) -> VerificationReport {
    let n = crate::gamma::SPINOR_DIM;
    let d = ss.dim();
    let mut r = VerificationReport::new();
    let pis: Vec<_> = (0..d).map(|m| ss.pi(m)).collect();
    r.push(sweep(
        "superspace.delta-Pi",
        "susy invariance of the frame",
        (0..n).flat_map(|a| (0..d).map(move |m| (a, m))),
        |(a, m)| format!("alpha={a} m={m}"),
        |&(a, m)| ss.delta(a, &pis[m]),
    ));
    let k3 = ss.k_form(1, SpinorFactor::Gamma11);
    r.push(sweep(
        "superspace.delta-K3",
        "susy invariance of the NS 3-form",
        0..n,
        |a| format!("alpha={a}"),
        |&a| ss.delta(a, &k3),
    ));

    let b = ss.b_potential();
    let deltas: Vec<SuperForm<R>> = (0..n).map(|a| ss.delta_potential(a)).collect();
    let mut rec = sweep(
        "superspace.deltaB-dDelta",
        "variation of B is exact",
        0..n,
        |a| format!("alpha={a}"),
        |&a| ss.delta(a, &b) - deltas[a].ext_d(),
    );
    if rec.status == Status::Fail {
        // A closed residual of positive degree is exact on flat superspace
        // and therefore admissible.
        let closed = (0..n).all(|a| (ss.delta(a, &b) - deltas[a].ext_d()).ext_d().is_zero());
        if closed {
            rec.status = Status::Pass;
            rec.detail = Some(format!(
                "nonzero d-exact residual; {}",
                rec.detail.unwrap_or_default()
            ));
        } else {
            rec.detail = Some(format!(
                "residual not closed; {}",
                rec.detail.unwrap_or_default()
            ));
        }
    }
    r.push(rec);
    r.push(sweep(
        "superspace.delta-trans-B",
        "translation invariance of B",
        0..d,
        |m| format!("m={m}"),
        |&m| b.trans_delta(m),
    ));

    // F_{αβ} = δ_αΔ_β + δ_βΔ_α, needed on the closure check and its traces.
    let f = |a: usize, bb: usize| ss.delta(a, &deltas[bb]) + ss.delta(bb, &deltas[a]);
    r.push(sweep(
        "superspace.delta-closure",
        "anticommutator of the variations of Delta",
        (0..n).flat_map(|a| (a..n).map(move |b| (a, b))),
        |(a, b)| format!("alpha={a} beta={b}"),
        |&(a, bb)| f(a, bb) - ss.delta_closure_rhs(a, bb),
    ));
    r.push(sweep(
        "superspace.delta-closure.trace",
        "Gamma trace of the closure relation",
        0..d,
        |m| format!("n={m}"),
        |&m| ss.contract(&ss.gamma_upper(m), |a, bb| ss.delta_closure_rhs(a, bb)),
    ));
    r.push(sweep(
        "superspace.Delta_m",
        "vector component of Delta vanishes",
        0..d,
        |m| format!("m={m}"),
        |&m| {
            ss.contract(&ss.gamma_upper(m), f)
                .scaled(Gq::one() / Gq::imag(32))
        },
    ));
    r
}

/// The two quartic spinor identities behind the `C⁽³⁾` Bianchi identity.
pub fn verify_id1_id2<R: SignRule>(ss: &Superspace<R>) -> VerificationReport {
    let mut r = VerificationReport::new();
    r.push(form_record(
        "superspace.Id1",
        "quartic identity from the chiral vector identity",
        &ss.id1(),
    ));
    r.push(sweep(
        "superspace.Id2",
        "quartic identity from the two-form identity",
        0..ss.dim(),
        |m| format!("m={m}"),
        |&m| ss.id2(m),
    ));
    r
}

/// `dC⁽³⁾ − K⁽⁴⁾(1) + C⁽¹⁾K⁽³⁾(Γ₁₁) = 0`, its integrability, and the
/// leading part of `C⁽³⁾`.
pub fn verify_bianchi_c3<R: SignRule>(ss: &Superspace<R>) -> VerificationReport {
    let c3 = ss.c3();
    let lhs = bianchi_c3_lhs(ss, &c3);
    let mut r = VerificationReport::new();
    r.push(form_record(
        "bianchi.C3",
        "RR 3-form Bianchi identity",
        &lhs,
    ));
    r.push(form_record(
        "bianchi.C3.integrability",
        "d of the Bianchi identity",
        &lhs.ext_d(),
    ));
    r.push(form_record(
        "bianchi.C3.leading",
        "top dX part of C3",
        &(c3.leading_term() - c3_leading_expected(ss)),
    ));
    r
}

/// `dC⁽³⁾ − K⁽⁴⁾(1) + C⁽¹⁾K⁽³⁾(Γ₁₁)` for a given `C⁽³⁾`.
pub fn bianchi_c3_lhs<R: SignRule>(ss: &Superspace<R>, c3: &SuperForm<R>) -> SuperForm<R> {
    c3.ext_d() - ss.k_form(2, SpinorFactor::Identity)
        + ss.c1().wedge(&ss.k_form(1, SpinorFactor::Gamma11))
}

/// `(i/2) dXᵐ dXⁿ dθ̄Γ_{nm}θ`.
pub fn c3_leading_expected<R: SignRule>(ss: &Superspace<R>) -> SuperForm<R> {
    let d = ss.dim();
    (0..d)
        .flat_map(|m| (0..d).filter(move |&n| n != m).map(move |n| (m, n)))
        .map(|(m, n)| {
            SuperForm::dx(m)
                .wedge(&SuperForm::dx(n))
                .wedge(&ss.dtm_t(ss.g(&[n, m])))
        })
        .sum::<SuperForm<R>>()
        .scaled(Gq::imag_ratio(1, 2))
}

/// Leading terms of the higher potentials: the vanishing traces
/// `tr(SΓ_{m₁…m_{2q}}Γ_n)` and the vanishing Γ-trace of
/// `δ_αD_β + δ_βD_α` at top dX-degree, for q = 1..4.
pub fn verify_d_leading<R: SignRule>(ss: &Superspace<R>) -> VerificationReport {
    let d = ss.dim();
    let mut r = VerificationReport::new();
    for q in 1..=4 {
        let s = SpinorFactor::for_even_rank(2 * q).matrix(ss.rep());
        let mut bad = None;
        let tuples = sorted_tuples(d, 2 * q);
        'outer: for t in &tuples {
            for n in 0..d {
                let tr = (s * ss.g(t) * ss.rep().gamma(n)).trace();
                if !tr.is_zero() {
                    bad = Some(format!("m={t:?} n={n}: {tr}"));
                    break 'outer;
                }
            }
        }
        let mut rec = CheckRecord::verdict(
            format!("bianchi.D{}.trace", 2 * q),
            "vanishing trace",
            bad.is_none(),
            0,
        )
        .with_detail(format!("{} tuples x {d}", tuples.len()));
        if let Some(b) = bad {
            rec = CheckRecord {
                residual: "nonzero trace".into(),
                ..rec
            }
            .with_counterexample(b);
        }
        r.push(rec);

        let ds: Vec<SuperForm<R>> = (0..crate::gamma::SPINOR_DIM)
            .map(|a| ss.d_leading(q, a))
            .collect();
        r.push(sweep(
            &format!("bianchi.D{}.vector-component", 2 * q),
            "vector component of the leading term vanishes",
            0..d,
            |n| format!("n={n}"),
            |&n| {
                ss.contract(&ss.gamma_upper(n), |a, b| {
                    (ss.delta(a, &ds[b]) + ss.delta(b, &ds[a])).dx_part(2 * q as u32)
                })
            },
        ));
    }
    r
}

/// All superspace checks under one sign rule.
pub fn verify_superspace<R: SignRule>(ss: &Superspace<R>) -> VerificationReport {
    let mut r = verify_h(ss);
    r.merge(verify_delta_b(ss));
    r.merge(verify_id1_id2(ss));
    r
}

/// All Bianchi-identity checks under one sign rule.
pub fn verify_bianchi<R: SignRule>(ss: &Superspace<R>) -> VerificationReport {
    let mut r = verify_bianchi_c3(ss);
    r.merge(verify_d_leading(ss));
    r
}

/// Re-runs the sign-sensitive checks under another rule and marks every
/// outcome as recorded: the comparison is informative, not a gate.
pub fn record_under<S: SignRule>(ss: &Superspace<S>) -> VerificationReport {
    let mut base = verify_h(ss);
    base.merge(verify_delta_b(ss));
    let recs = base.records.into_iter().map(|mut rec| {
        rec.name = format!("conventions.{}.{}", S::NAME, rec.name);
        rec.detail = Some(format!(
            "{} under this rule; {}",
            if rec.status == Status::Pass {
                "holds"
            } else {
                "fails"
            },
            rec.detail.unwrap_or_default()
        ));
        rec.status = Status::Recorded;
        rec
    });
    VerificationReport::from_records(recs)
}

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

//! Currents of the modified algebra on superspace, and the vector-field
//! realization of the supersymmetry generators.

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::forms::{form_record, SignRule, SuperForm, Superspace};
use crate::report::{CheckRecord, VerificationReport};
use crate::Gq;

/// `S_{αβ}(Δ)`, `S_{αm}(Δ)` and `S_{mn}(Δ)` as superforms.
#[derive(Debug, Clone)]
pub struct ChargeCurrents<R: SignRule> {
    /// Upper triangle `α ≤ β`, row-major.
    pub spinor: Vec<((usize, usize), SuperForm<R>)>,
    /// `δ_αΔ_m − δ_mΔ_α`, indexed `[α][m]`.
    pub mixed: Vec<Vec<SuperForm<R>>>,
    /// `δ_mΔ_n − δ_nΔ_m` for `m < n`.
    pub vector: Vec<((usize, usize), SuperForm<R>)>,
    /// `Δ_m`, recovered from the Γ-trace of `δ_αΔ_β + δ_βΔ_α`.
    pub delta_vector: Vec<SuperForm<R>>,
}

/// Evaluates `S_{αβ}(Δ) = 2iΓⁿ_{αβ}Δ_n − δ_αΔ_β − δ_βΔ_α` together with the
/// mixed and vector components.
pub fn s_alpha_beta_delta<R: SignRule>(ss: &Superspace<R>) -> ChargeCurrents<R> {
    let n = crate::gamma::SPINOR_DIM;
    let d = ss.dim();
    let deltas: Vec<SuperForm<R>> = (0..n)
        .into_par_iter()
        .map(|a| ss.delta_potential(a))
        .collect();
    // δ_αΔ_β for every ordered pair.
    let dd: Vec<Vec<SuperForm<R>>> = (0..n)
        .into_par_iter()
        .map(|a| (0..n).map(|b| ss.delta(a, &deltas[b])).collect())
        .collect();
    let f = |a: usize, b: usize| &dd[a][b] + &dd[b][a];
    // Γᵐ_{αβ}F^{αβ}... with tr(Γ_mΓⁿ) = 32δ_mⁿ: Δ_m = F·Γ_m^{αβ} / (32i).
    let delta_vector: Vec<SuperForm<R>> = (0..d)
        .into_par_iter()
        .map(|m| {
            ss.contract(&ss.gamma_upper(m), f)
                .scaled(Gq::one() / Gq::imag(32))
        })
        .collect();
    let spinor = (0..n)
        .flat_map(|a| (a..n).map(move |b| (a, b)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(a, b)| {
            let mut s = -f(a, b);
            for (m, dm) in delta_vector.iter().enumerate() {
                let c = ss.rep().lower(ss.g_up(m)).entry(a, b);
                if !c.is_zero() {
                    s += &dm.scaled(Gq::imag(2) * c);
                }
            }
            ((a, b), s)
        })
        .collect();
    let mixed = (0..n)
        .map(|a| {
            (0..d)
                .map(|m| ss.delta(a, &delta_vector[m]) - deltas[a].trans_delta(m))
                .collect()
        })
        .collect();
    let vector = (0..d)
        .flat_map(|m| (m + 1..d).map(move |k| (m, k)))
        .map(|(m, k)| {
            (
                (m, k),
                delta_vector[k].trans_delta(m) - delta_vector[m].trans_delta(k),
            )
        })
        .collect();
    ChargeCurrents {
        spinor,
        mixed,
        vector,
        delta_vector,
    }
}

fn first_failure<R: SignRule>(
    name: &str,
    anchor: &str,
    items: impl IntoIterator<Item = (String, SuperForm<R>)>,
) -> CheckRecord {
    let mut count = 0usize;
    for (label, residual) in items {
        count += 1;
        if !residual.is_zero() {
            let rec = form_record(name, anchor, &residual);
            let cx = rec.counterexample.clone().unwrap_or_default();
            return rec.with_counterexample(format!("{label}: {cx}"));
        }
    }
    CheckRecord::verdict(name, anchor, true, 0).with_detail(format!("{count} components"))
}

/// Checks on `S(Δ)`: its `dX` part is `−2i(CΓ₁₁Γ_m)_{αβ}dXᵐ`, the rest is
/// `dX`-free and closed, and the mixed and vector components vanish.
pub fn verify_s_delta<R: SignRule>(ss: &Superspace<R>) -> VerificationReport {
    let cur = s_alpha_beta_delta(ss);
    let d = ss.dim();
    let g11m: Vec<_> = (0..d)
        .map(|m| ss.rep().lower(ss.g11() * ss.rep().gamma(m)))
        .collect();
    let mut r = VerificationReport::new();
    r.push(first_failure(
        "algebra.S-Delta.dX-part",
        "dX component of S_ab(Delta)",
        cur.spinor.iter().map(|((a, b), s)| {
            let expected: SuperForm<R> = (0..d)
                .map(|m| SuperForm::dx(m).scaled(Gq::imag(-2) * g11m[m].entry(*a, *b)))
                .sum();
            (format!("alpha={a} beta={b}"), s.dx_part(1) - expected)
        }),
    ));
    r.push(first_failure(
        "algebra.S-Delta.fermionic-remainder",
        "remainder of S_ab(Delta) is dX-free and closed",
        cur.spinor.iter().map(|((a, b), s)| {
            let rest = s - &s.dx_part(1);
            // Leftover dX terms and a nonzero derivative both count as residual.
            let residual = rest.filter(|mono| mono.dx_mask() != 0) + rest.ext_d();
            (format!("alpha={a} beta={b}"), residual)
        }),
    ));
    r.push(first_failure(
        "algebra.S-Delta.mixed",
        "S_am(Delta) vanishes",
        cur.mixed.iter().enumerate().flat_map(|(a, row)| {
            row.iter()
                .enumerate()
                .map(move |(m, s)| (format!("alpha={a} m={m}"), s.clone()))
        }),
    ));
    r.push(first_failure(
        "algebra.S-Delta.vector",
        "S_mn(Delta) vanishes",
        cur.vector
            .iter()
            .map(|((m, k), s)| (format!("m={m} n={k}"), s.clone())),
    ));
    r
}

/// `W_αᵐ = i(CΓᵐ)_{αβ}θᵝ`, the `∂_m` component of the vector field `δ_α`;
/// its `∂_γ` component is `δ_α^γ`.
pub fn susy_vector_component<R: SignRule>(
    ss: &Superspace<R>,
    alpha: usize,
    m: usize,
) -> SuperForm<R> {
    ss.m_theta(ss.g_up(m), alpha).scaled(Gq::i())
}

/// `∂_m` component of `{δ_α, δ_β}`. The `∂_γ` components vanish because the
/// spinor components of each `δ_α` are constant.
pub fn anticommutator_component<R: SignRule>(
    ss: &Superspace<R>,
    alpha: usize,
    beta: usize,
    m: usize,
) -> SuperForm<R> {
    ss.delta(alpha, &susy_vector_component(ss, beta, m))
        + ss.delta(beta, &susy_vector_component(ss, alpha, m))
}

/// Realizes `Q_α` as the vector field `δ_α` and confirms
/// `{δ_α, δ_β} = +2iΓᵐ_{αβ}∂_m`, so `{Q_α,Q_β} = 2Γᵐ_{αβ}P_m` holds with
/// `P_m ↦ i∂_m`. Also confirms the vector field agrees with `δ_α` on forms,
/// `δ_α dXᵐ = d W_αᵐ`.
pub fn verify_vector_field_sign<R: SignRule>(ss: &Superspace<R>) -> VerificationReport {
    let n = crate::gamma::SPINOR_DIM;
    let d = ss.dim();
    let mut r = VerificationReport::new();
    r.push(first_failure(
        "algebra.flat.vector-field-realization",
        "susy vector field reproduces the variation of dX",
        (0..n).flat_map(|a| {
            (0..d).map(move |m| {
                let lhs = ss.delta(a, &SuperForm::dx(m));
                (
                    format!("alpha={a} m={m}"),
                    lhs - susy_vector_component(ss, a, m).ext_d(),
                )
            })
        }),
    ));
    r.push(
        first_failure(
            "algebra.flat.vector-field-sign",
            "anticommutator of susy vector fields",
            (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).flat_map(|(a, b)| {
                (0..d).map(move |m| {
                    let c = ss.rep().lower(ss.g_up(m)).entry(a, b);
                    let expected = SuperForm::constant(Gq::imag(2) * c);
                    (format!("alpha={a} beta={b} m={m}"), anticommutator_component(ss, a, b, m) - expected)
                })
            }),
        )
        .with_detail("{delta_a, delta_b} = +2i Gamma^m_ab d_m; matches {Q,Q} = 2 Gamma^m P_m with P_m -> i d_m"),
    );
    r
}

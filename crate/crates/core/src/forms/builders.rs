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

//! The explicit forms of flat IIA superspace, built from a Γ representation.
//!
//! Spinor bilinears use `χ̄Mψ = χᵅ (CM)_{αβ} ψᵝ`, spinor-valued expressions
//! use `(Mθ)_α = (CM)_{αβ} θᵝ` and `(θ̄M)_α = θᵝ (CM)_{βα}`. Every bilinear is
//! expanded into generator monomials immediately.

use super::form::{SuperForm, SusyTable};
use super::grading::{Bigraded, SignRule};
use super::monomial::Generator;
use crate::gamma::{sorted_tuples, GammaRep, ScaledSignedPerm, SPINOR_DIM};
use crate::symmetry::SpinorFactor;
use crate::Gq;

/// Which generator fills one side of a bilinear.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    Theta,
    DTheta,
}

impl Slot {
    fn gen(self, a: usize) -> Generator {
        match self {
            Slot::Theta => Generator::Theta(a as u8),
            Slot::DTheta => Generator::DTheta(a as u8),
        }
    }
}

/// Flat superspace over a fixed representation, with cached tables.
#[derive(Debug, Clone)]
pub struct Superspace<R: SignRule = Bigraded> {
    rep: GammaRep,
    table: SusyTable,
    rule: std::marker::PhantomData<R>,
}

impl<R: SignRule> Superspace<R> {
    pub fn new(rep: GammaRep) -> Self {
        let table = SusyTable::new(&rep);
        Superspace {
            rep,
            table,
            rule: std::marker::PhantomData,
        }
    }

    pub fn rep(&self) -> &GammaRep {
        &self.rep
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    fn i() -> Gq {
        Gq::i()
    }

    /// `δ_α` on a form.
    pub fn delta(&self, alpha: usize, f: &SuperForm<R>) -> SuperForm<R> {
        f.susy_delta(&self.table, alpha)
    }

    /// `Γ_{m₁…m_p}` for sorted or unsorted distinct indices.
    pub fn g(&self, idx: &[usize]) -> ScaledSignedPerm {
        self.rep.gamma_antisym(idx).expect("indices in range")
    }

    /// `Γᵐ`.
    pub fn g_up(&self, m: usize) -> ScaledSignedPerm {
        self.rep.raise_index(m)
    }

    pub fn g11(&self) -> ScaledSignedPerm {
        self.rep.gamma11()
    }

    /// `l̄ M r = lᵅ (CM)_{αβ} rᵝ`.
    pub fn bilinear(&self, left: Slot, m: ScaledSignedPerm, right: Slot) -> SuperForm<R> {
        let cm = self.rep.lower(m);
        (0..SPINOR_DIM)
            .filter_map(|a| {
                cm.row_entry(a)
                    .map(|(b, v)| SuperForm::from_factors(v, &[left.gen(a), right.gen(b)]))
            })
            .sum()
    }

    /// `dθ̄ M θ`.
    pub fn dtm_t(&self, m: ScaledSignedPerm) -> SuperForm<R> {
        self.bilinear(Slot::DTheta, m, Slot::Theta)
    }

    /// `dθ̄ M dθ`.
    pub fn dtm_dt(&self, m: ScaledSignedPerm) -> SuperForm<R> {
        self.bilinear(Slot::DTheta, m, Slot::DTheta)
    }

    /// `(Mθ)_α`.
    pub fn m_theta(&self, m: ScaledSignedPerm, alpha: usize) -> SuperForm<R> {
        let (b, v) = self.rep.lower(m).row_entry(alpha).expect("nonzero matrix");
        SuperForm::from_factors(v, &[Generator::Theta(b as u8)])
    }

    /// `(θ̄M)_α`.
    pub fn theta_m(&self, m: ScaledSignedPerm, alpha: usize) -> SuperForm<R> {
        let (b, v) = self
            .rep
            .lower(m)
            .transpose()
            .row_entry(alpha)
            .expect("nonzero matrix");
        SuperForm::from_factors(v, &[Generator::Theta(b as u8)])
    }

    /// `Πᵐ = dXᵐ + i dθ̄Γᵐθ`.
    pub fn pi(&self, m: usize) -> SuperForm<R> {
        SuperForm::dx(m) + self.dtm_t(self.g_up(m)).scaled(Self::i())
    }

    /// `K^{(p+2)}(S) = (i/p!) Π^{m_p}…Π^{m₁} dθ̄SΓ_{m₁…m_p}dθ`, summed over
    /// sorted tuples (the p! orderings contribute equally).
    pub fn k_form(&self, p: usize, factor: SpinorFactor) -> SuperForm<R> {
        let s = factor.matrix(&self.rep);
        let pis: Vec<SuperForm<R>> = (0..self.dim()).map(|m| self.pi(m)).collect();
        sorted_tuples(self.dim(), p)
            .into_iter()
            .map(|tuple| {
                let pis_prod = tuple
                    .iter()
                    .rev()
                    .fold(SuperForm::one(), |acc, &m| acc.wedge(&pis[m]));
                pis_prod.wedge(&self.dtm_dt(s * self.g(&tuple)))
            })
            .sum::<SuperForm<R>>()
            .scaled(Self::i())
    }

    /// `B = (−Πᵐ + (i/2) dθ̄Γᵐθ)(i dθ̄Γ₁₁Γ_mθ)`, the potential with `dB = −K⁽³⁾(Γ₁₁)`.
    pub fn b_potential(&self) -> SuperForm<R> {
        self.b_with_correction(Gq::ratio(1, 2))
    }

    /// `B` with the coefficient of the `dθ̄Γᵐθ` correction replaced by `i·c`.
    pub fn b_with_correction(&self, c: Gq) -> SuperForm<R> {
        let i = Self::i();
        (0..self.dim())
            .map(|m| {
                let first = -self.pi(m) + self.dtm_t(self.g_up(m)).scaled(i * c);
                first.wedge(&self.dtm_t(self.g11() * self.rep.gamma(m)).scaled(i))
            })
            .sum()
    }

    /// `C⁽¹⁾ = i dθ̄Γ₁₁θ`.
    pub fn c1(&self) -> SuperForm<R> {
        self.dtm_t(self.g11()).scaled(Self::i())
    }

    /// `C⁽³⁾` with its last coefficient `i/6`.
    pub fn c3(&self) -> SuperForm<R> {
        self.c3_with(Gq::imag_ratio(1, 6))
    }

    /// `C⁽³⁾ = (i/2)ΠᵐΠⁿ dθ̄Γ_{nm}θ
    ///   + ½ Πᵐ [dθ̄Γⁿθ dθ̄Γ_{nm}θ − dθ̄Γ₁₁θ dθ̄Γ₁₁Γ_mθ]
    ///   + c dθ̄Γᵐθ [dθ̄Γ₁₁θ dθ̄Γ₁₁Γ_mθ − dθ̄Γⁿθ dθ̄Γ_{nm}θ]`.
    pub fn c3_with(&self, c: Gq) -> SuperForm<R> {
        let d = self.dim();
        let pis: Vec<SuperForm<R>> = (0..d).map(|m| self.pi(m)).collect();
        let up: Vec<SuperForm<R>> = (0..d).map(|n| self.dtm_t(self.g_up(n))).collect();
        let c11 = self.dtm_t(self.g11());
        let mut first = Vec::new();
        // Bracket shared by the second and third groups, per m:
        // [dθ̄Γⁿθ dθ̄Γ_{nm}θ − dθ̄Γ₁₁θ dθ̄Γ₁₁Γ_mθ].
        let mut brackets = Vec::new();
        for m in 0..d {
            // ΠᵐΠⁿΓ_{nm} is symmetric under m ↔ n, so each unordered pair counts twice.
            for n in m + 1..d {
                first.push(
                    pis[m]
                        .wedge(&pis[n])
                        .wedge(&self.dtm_t(self.g(&[n, m])))
                        .scaled(Gq::int(2)),
                );
            }
            let contracted: SuperForm<R> = (0..d)
                .filter(|&n| n != m)
                .map(|n| up[n].wedge(&self.dtm_t(self.g(&[n, m]))))
                .sum();
            let chiral = c11.wedge(&self.dtm_t(self.g11() * self.rep.gamma(m)));
            brackets.push(contracted - chiral);
        }
        let first: SuperForm<R> = first
            .into_iter()
            .sum::<SuperForm<R>>()
            .scaled(Gq::imag_ratio(1, 2));
        let second: SuperForm<R> = (0..d)
            .map(|m| pis[m].wedge(&brackets[m]))
            .sum::<SuperForm<R>>()
            .scaled(Gq::ratio(1, 2));
        let third: SuperForm<R> = (0..d)
            .map(|m| up[m].wedge(&brackets[m]))
            .sum::<SuperForm<R>>()
            .scaled(-c);
        first + second + third
    }

    /// `Δ_α = dXᵐ(iΓ₁₁Γ_mθ)_α − (1/6)[dθ̄Γᵐθ (θ̄Γ₁₁Γ_m)_α + dθ̄Γ₁₁Γ_mθ (θ̄Γᵐ)_α]`,
    /// the form with `δ_α B = dΔ_α`.
    pub fn delta_potential(&self, alpha: usize) -> SuperForm<R> {
        let i = Self::i();
        (0..self.dim())
            .map(|m| {
                let g11m = self.g11() * self.rep.gamma(m);
                let lead = SuperForm::dx(m).wedge(&self.m_theta(g11m, alpha)).scaled(i);
                let a = self.dtm_t(self.g_up(m)).wedge(&self.theta_m(g11m, alpha));
                let b = self.dtm_t(g11m).wedge(&self.theta_m(self.g_up(m), alpha));
                lead - (a + b).scaled(Gq::ratio(1, 6))
            })
            .sum()
    }

    /// Right side of the closure relation
    /// `δ_αΔ_β + δ_βΔ_α = dXᵐ(2iΓ₁₁Γ_m)_{αβ} + ½ d[(Γ₁₁Γ_mθ)_α(Γᵐθ)_β + (α↔β)]`.
    pub fn delta_closure_rhs(&self, alpha: usize, beta: usize) -> SuperForm<R> {
        let mut exact = SuperForm::zero();
        let mut lead = SuperForm::zero();
        for m in 0..self.dim() {
            let g11m = self.g11() * self.rep.gamma(m);
            let v = self.rep.lower(g11m).entry(alpha, beta);
            lead += &SuperForm::dx(m).scaled(Gq::imag(2) * v);
            exact += &self
                .m_theta(g11m, alpha)
                .wedge(&self.m_theta(self.g_up(m), beta));
            exact += &self
                .m_theta(g11m, beta)
                .wedge(&self.m_theta(self.g_up(m), alpha));
        }
        lead + exact.ext_d().scaled(Gq::ratio(1, 2))
    }

    /// `dθ̄Γⁿdθ dθ̄Γ₁₁Γ_nθ + dθ̄Γⁿθ dθ̄Γ₁₁Γ_ndθ`.
    pub fn id1(&self) -> SuperForm<R> {
        (0..self.dim())
            .map(|n| {
                let g11n = self.g11() * self.rep.gamma(n);
                self.dtm_dt(self.g_up(n)).wedge(&self.dtm_t(g11n))
                    + self.dtm_t(self.g_up(n)).wedge(&self.dtm_dt(g11n))
            })
            .sum()
    }

    /// `dθ̄Γⁿdθ dθ̄Γ_{nm}θ + dθ̄Γⁿθ dθ̄Γ_{nm}dθ + dθ̄Γ₁₁dθ dθ̄Γ₁₁Γ_mθ + dθ̄Γ₁₁θ dθ̄Γ₁₁Γ_mdθ`.
    pub fn id2(&self, m: usize) -> SuperForm<R> {
        self.id2_with(m, true)
    }

    /// [`Self::id2`], optionally without the two Γ₁₁ terms.
    pub fn id2_with(&self, m: usize, chiral_terms: bool) -> SuperForm<R> {
        let mut out: SuperForm<R> = (0..self.dim())
            .filter(|&n| n != m)
            .map(|n| {
                let gnm = self.g(&[n, m]);
                self.dtm_dt(self.g_up(n)).wedge(&self.dtm_t(gnm))
                    + self.dtm_t(self.g_up(n)).wedge(&self.dtm_dt(gnm))
            })
            .sum();
        if chiral_terms {
            let g11m = self.g11() * self.rep.gamma(m);
            out += &self.dtm_dt(self.g11()).wedge(&self.dtm_t(g11m));
            out += &self.dtm_t(self.g11()).wedge(&self.dtm_dt(g11m));
        }
        out
    }

    /// Leading part of `D_α^{(2q)}`:
    /// `−(i/(2q)!) dX^{m_{2q}}…dX^{m₁} (θ̄SΓ_{m₁…m_{2q}})_α`, summed over sorted tuples.
    pub fn d_leading(&self, q: usize, alpha: usize) -> SuperForm<R> {
        assert!((1..=4).contains(&q), "q must be in 1..=4");
        let s = SpinorFactor::for_even_rank(2 * q).matrix(&self.rep);
        sorted_tuples(self.dim(), 2 * q)
            .into_iter()
            .map(|tuple| {
                let dxs = tuple
                    .iter()
                    .rev()
                    .fold(SuperForm::one(), |acc, &m| acc.wedge(&SuperForm::dx(m)));
                dxs.wedge(&self.theta_m(s * self.g(&tuple), alpha))
            })
            .sum::<SuperForm<R>>()
            .scaled(-Self::i())
    }

    /// `Γ_m^{αβ} = (Γ_m C⁻¹)^{αβ}`, used to contract two lower spinor indices.
    pub fn gamma_upper(&self, m: usize) -> ScaledSignedPerm {
        self.rep.gamma(m) * self.rep.charge_conj().inverse()
    }

    /// `Σ_{αβ} M^{αβ} F(α, β)` over the nonzero entries of `M`.
    pub fn contract(
        &self,
        m: &ScaledSignedPerm,
        f: impl Fn(usize, usize) -> SuperForm<R>,
    ) -> SuperForm<R> {
        (0..SPINOR_DIM)
            .filter_map(|a| m.row_entry(a).map(|(b, v)| f(a, b).scaled(v)))
            .sum()
    }
}

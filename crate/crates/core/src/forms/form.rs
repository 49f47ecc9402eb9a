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

//! Sums of monomials with exact coefficients, and the operations on them.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::grading::{sign_pow, Bigraded, Kind, SignRule};
use super::monomial::{merge_inversions, Generator, Mono, VECTOR_DIM};
use crate::gamma::SPINOR_DIM;
use crate::scalar::ParseGqError;
use crate::Gq;

/// A differential form on flat superspace: a canonical sum of monomials in
/// θᵅ, dθᵅ, dXᵐ with nonzero coefficients, sorted by monomial.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperForm<R: SignRule = Bigraded> {
    terms: Vec<(Mono, Gq)>,
    rule: PhantomData<R>,
}

impl<R: SignRule> Default for SuperForm<R> {
    fn default() -> Self {
        Self::zero()
    }
}

/// Dense action of `δ_α` on `dXᵐ`: for each `(m, α)` the single `β` with
/// `(CΓᵐ)_{αβ} ≠ 0` and `i·(CΓᵐ)_{αβ}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SusyTable {
    entries: Vec<[(u8, Gq); SPINOR_DIM]>,
}

impl SusyTable {
    pub fn new(rep: &crate::gamma::GammaRep) -> Self {
        let entries = (0..rep.dim())
            .map(|m| {
                let cg = rep.lower(rep.raise_index(m));
                std::array::from_fn(|a| {
                    let (b, v) = cg.row_entry(a).expect("CΓᵐ is invertible");
                    (b as u8, v * Gq::i())
                })
            })
            .collect();
        SusyTable { entries }
    }

    fn get(&self, m: usize, a: usize) -> (u8, Gq) {
        self.entries[m][a]
    }
}

fn check_dtheta_add(a: u128, b: u128) -> u128 {
    const CARRY_BITS: u128 = 0x1111_1111_1111_1111_1111_1111_1111_1110;
    let (s, overflow) = a.overflowing_add(b);
    assert!(
        !overflow && (a ^ b ^ s) & CARRY_BITS == 0,
        "dθ power exceeds the packed limit"
    );
    s
}

impl<R: SignRule> SuperForm<R> {
    pub fn zero() -> Self {
        SuperForm {
            terms: Vec::new(),
            rule: PhantomData,
        }
    }

    pub fn constant(c: Gq) -> Self {
        Self::from_terms([(Mono::ONE, c)])
    }

    pub fn one() -> Self {
        Self::constant(Gq::one())
    }

    pub fn generator(g: Generator) -> Self {
        Self::from_factors(Gq::one(), &[g])
    }

    pub fn theta(a: usize) -> Self {
        Self::generator(Generator::Theta(a as u8))
    }

    pub fn dtheta(a: usize) -> Self {
        Self::generator(Generator::DTheta(a as u8))
    }

    pub fn dx(m: usize) -> Self {
        Self::generator(Generator::DX(m as u8))
    }

    /// Canonicalizes `coef · g₁ g₂ … g_k` given in any order.
    pub fn from_factors(coef: Gq, factors: &[Generator]) -> Self {
        assert!(
            factors.iter().all(|g| g.is_valid()),
            "generator index out of range"
        );
        let mut gens = factors.to_vec();
        let mut sign = 1i8;
        // Insertion sort, recording one exchange sign per adjacent swap.
        for i in 1..gens.len() {
            let mut j = i;
            while j > 0 && gens[j - 1] > gens[j] {
                sign *= R::exchange(gens[j - 1].kind(), gens[j].kind());
                gens.swap(j - 1, j);
                j -= 1;
            }
        }
        let mut mono = Mono::ONE;
        for g in gens {
            match g {
                Generator::Theta(a) => {
                    if mono.theta >> a & 1 == 1 {
                        return Self::zero();
                    }
                    mono.theta |= 1 << a;
                }
                Generator::DTheta(a) => {
                    mono = mono
                        .add_dtheta(a as usize)
                        .expect("dθ power exceeds the packed limit");
                }
                Generator::DX(m) => {
                    if mono.dx >> m & 1 == 1 {
                        return Self::zero();
                    }
                    mono.dx |= 1 << m;
                }
            }
        }
        Self::from_terms([(mono, coef.signed(sign))])
    }

    /// Sums terms with equal monomials and drops zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Mono, Gq)>) -> Self {
        let mut acc: FxHashMap<Mono, Gq> = FxHashMap::default();
        for (m, c) in terms {
            *acc.entry(m).or_default() += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: FxHashMap<Mono, Gq>) -> Self {
        let mut terms: Vec<(Mono, Gq)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|a| a.0);
        SuperForm {
            terms,
            rule: PhantomData,
        }
    }

    /// Converts the coefficient list to another sign rule without changing
    /// any monomial or coefficient.
    pub fn reinterpret<S: SignRule>(&self) -> SuperForm<S> {
        SuperForm {
            terms: self.terms.clone(),
            rule: PhantomData,
        }
    }

    pub fn terms(&self) -> &[(Mono, Gq)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Mono) -> Gq {
        self.terms
            .binary_search_by(|t| t.0.cmp(m))
            .map(|i| self.terms[i].1)
            .unwrap_or_default()
    }

    pub fn scaled(&self, c: Gq) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SuperForm {
            terms: self.terms.iter().map(|&(m, v)| (m, v * c)).collect(),
            rule: PhantomData,
        }
    }

    /// Keeps the monomials satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(&Mono) -> bool) -> Self {
        SuperForm {
            terms: self.terms.iter().filter(|t| keep(&t.0)).cloned().collect(),
            rule: PhantomData,
        }
    }

    /// Part of maximal dX-degree; zero stays zero.
    pub fn leading_term(&self) -> Self {
        let Some(max) = self.terms.iter().map(|t| t.0.dx_count()).max() else {
            return Self::zero();
        };
        self.filter(|m| m.dx_count() == max)
    }

    /// Part with exactly `n` dX factors.
    pub fn dx_part(&self, n: u32) -> Self {
        self.filter(|m| m.dx_count() == n)
    }

    /// Monomial counts by `(form degree, θ count)`.
    pub fn grade_profile(&self) -> BTreeMap<(u32, u32), usize> {
        let mut out = BTreeMap::new();
        for (m, _) in &self.terms {
            *out.entry((m.form_degree(), m.theta_degree())).or_insert(0) += 1;
        }
        out
    }

    /// `Σ |re| + |im|` over all coefficients; zero iff the form is zero.
    pub fn l1_norm(&self) -> Rational64 {
        self.terms
            .iter()
            .map(|t| t.1.l1())
            .fold(Rational64::zero(), |a, b| a + b)
    }

    /// Largest form degree of any monomial.
    pub fn max_form_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.form_degree()).max()
    }

    pub fn max_theta_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.theta_degree()).max()
    }

    /// Sign of moving the monomial `b` past the monomial `a`: `a·b = s·b·a`.
    pub fn exchange_sign(a: &Mono, b: &Mono) -> i8 {
        let counts = |m: &Mono| {
            [
                (Kind::Theta, m.theta_count()),
                (Kind::DTheta, m.dtheta_count()),
                (Kind::DX, m.dx_count()),
            ]
        };
        let mut s = 1;
        for (ka, na) in counts(a) {
            for (kb, nb) in counts(b) {
                s *= sign_pow(R::exchange(ka, kb), na * nb);
            }
        }
        s
    }

    fn mono_product(a: &Mono, b: &Mono) -> Option<(Mono, i8)> {
        if a.theta & b.theta != 0 || a.dx & b.dx != 0 {
            return None;
        }
        let (da, xa) = (a.dtheta_count(), a.dx_count());
        let (tb, db) = (b.theta_count(), b.dtheta_count());
        let mut s = sign_pow(R::exchange(Kind::Theta, Kind::DX), tb * xa);
        s *= sign_pow(R::exchange(Kind::Theta, Kind::DTheta), tb * da);
        s *= sign_pow(R::exchange(Kind::DTheta, Kind::DX), db * xa);
        s *= sign_pow(
            R::exchange(Kind::Theta, Kind::Theta),
            merge_inversions(a.theta, b.theta),
        );
        s *= sign_pow(
            R::exchange(Kind::DX, Kind::DX),
            merge_inversions(a.dx as u32, b.dx as u32),
        );
        let mono = Mono {
            theta: a.theta | b.theta,
            dtheta: check_dtheta_add(a.dtheta, b.dtheta),
            dx: a.dx | b.dx,
        };
        Some((mono, s))
    }

    /// Exterior product `self ∧ other`.
    pub fn wedge(&self, other: &Self) -> Self {
        let mut acc: FxHashMap<Mono, Gq> = FxHashMap::default();
        acc.reserve(
            self.terms
                .len()
                .saturating_mul(other.terms.len())
                .min(1 << 20),
        );
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, s)) = Self::mono_product(ma, mb) {
                    *acc.entry(m).or_default() += (*ca * *cb).signed(s);
                }
            }
        }
        Self::from_map(acc)
    }

    /// Exterior derivative acting from the right:
    /// `d(ωχ) = ω dχ + ε(d, χ) dω χ`, `dθᵅ = d(θᵅ)`, `d(dθ) = d(dX) = 0`.
    pub fn ext_d(&self) -> Self {
        let mut acc: FxHashMap<Mono, Gq> = FxHashMap::default();
        for (m, c) in &self.terms {
            let k = m.theta_count();
            let base = sign_pow(R::exchange(Kind::ExtD, Kind::DTheta), m.dtheta_count())
                * sign_pow(R::exchange(Kind::ExtD, Kind::DX), m.dx_count());
            let mut rest = m.theta;
            let mut pos = 0;
            while rest != 0 {
                let a = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let after = k - 1 - pos;
                let s = base
                    * sign_pow(R::exchange(Kind::ExtD, Kind::Theta), after)
                    * sign_pow(R::exchange(Kind::DTheta, Kind::Theta), after);
                let mut n = *m;
                n.theta &= !(1 << a);
                let n = n.add_dtheta(a).expect("dθ power exceeds the packed limit");
                *acc.entry(n).or_default() += c.signed(s);
                pos += 1;
            }
        }
        Self::from_map(acc)
    }

    /// Supersymmetry derivation `δ_α = (iΓᵐθ)_α ∂/∂Xᵐ + ∂/∂θᵅ`, acting from
    /// the left, extended to dXᵐ through `δ_α dXᵐ = d(δ_α Xᵐ) = i(CΓᵐ)_{αβ} dθᵝ`.
    pub fn susy_delta(&self, table: &SusyTable, alpha: usize) -> Self {
        assert!(alpha < SPINOR_DIM, "spinor index out of range");
        let mut acc: FxHashMap<Mono, Gq> = FxHashMap::default();
        for (m, c) in &self.terms {
            let k = m.theta_count();
            if m.theta >> alpha & 1 == 1 {
                let before = (m.theta & ((1u32 << alpha) - 1)).count_ones();
                let s = sign_pow(R::exchange(Kind::Susy, Kind::Theta), before);
                let mut n = *m;
                n.theta &= !(1 << alpha);
                *acc.entry(n).or_default() += c.signed(s);
            }
            if m.dx == 0 {
                continue;
            }
            let r = m.dtheta_count();
            let lead = sign_pow(R::exchange(Kind::Susy, Kind::Theta), k)
                * sign_pow(R::exchange(Kind::Susy, Kind::DTheta), r);
            for mu in 0..VECTOR_DIM {
                if m.dx >> mu & 1 == 0 {
                    continue;
                }
                let before = (m.dx & ((1u16 << mu) - 1)).count_ones();
                let s = lead
                    * sign_pow(R::exchange(Kind::Susy, Kind::DX), before)
                    * sign_pow(R::exchange(Kind::DTheta, Kind::DX), before);
                let (beta, v) = table.get(mu, alpha);
                let mut n = *m;
                n.dx &= !(1 << mu);
                let n = n
                    .add_dtheta(beta as usize)
                    .expect("dθ power exceeds the packed limit");
                *acc.entry(n).or_default() += (*c * v).signed(s);
            }
        }
        Self::from_map(acc)
    }

    /// Translation derivation `δ_m = ∂/∂Xᵐ`. Forms here never depend on Xᵐ
    /// itself, only on dXᵐ, so the result is always zero.
    pub fn trans_delta(&self, m: usize) -> Self {
        assert!(m < VECTOR_DIM, "vector index out of range");
        Self::zero()
    }
}

impl<R: SignRule> fmt::Debug for SuperForm<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperForm<{}>[{}]", R::NAME, self.terms.len())
    }
}

/// One term per line, `coef: generators`, in canonical order. The zero form
/// prints as `0`.
impl<R: SignRule> fmt::Display for SuperForm<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for (m, c) in &self.terms {
            writeln!(f, "{c}: {m}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseFormError {
    #[error("line {0}: expected `coefficient: generators`")]
    Layout(usize),
    #[error("line {0}: {1}")]
    Coefficient(usize, ParseGqError),
    #[error("line {0}: bad generator `{1}`")]
    Generator(usize, String),
}

fn parse_generator(tok: &str) -> Option<(Generator, usize)> {
    let (base, power) = match tok.split_once('^') {
        Some((b, p)) => (b, p.parse().ok()?),
        None => (tok, 1),
    };
    let g = if let Some(n) = base.strip_prefix("dt") {
        Generator::DTheta(n.parse().ok()?)
    } else if let Some(n) = base.strip_prefix("dx") {
        Generator::DX(n.parse().ok()?)
    } else {
        let n = base.strip_prefix('t')?;
        Generator::Theta(n.parse().ok()?)
    };
    (g.is_valid() && power >= 1).then_some((g, power))
}

impl<R: SignRule> FromStr for SuperForm<R> {
    type Err = ParseFormError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Self::zero();
        for (i, line) in s.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
            if line.is_empty() || line == "0" {
                continue;
            }
            let (c, gens) = line.split_once(':').ok_or(ParseFormError::Layout(i))?;
            let coef: Gq = c
                .trim()
                .parse()
                .map_err(|e| ParseFormError::Coefficient(i, e))?;
            let mut factors = Vec::new();
            let gens = gens.trim();
            if gens != "1" {
                for tok in gens.split_whitespace() {
                    let (g, n) = parse_generator(tok)
                        .ok_or_else(|| ParseFormError::Generator(i, tok.to_string()))?;
                    factors.extend(std::iter::repeat_n(g, n));
                }
            }
            out = out + Self::from_factors(coef, &factors);
        }
        Ok(out)
    }
}

impl<R: SignRule> Add for SuperForm<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<R: SignRule> Add for &SuperForm<R> {
    type Output = SuperForm<R>;
    fn add(self, rhs: Self) -> SuperForm<R> {
        // Merge of two sorted lists.
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a[i].1 + b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        SuperForm {
            terms: out,
            rule: PhantomData,
        }
    }
}

impl<R: SignRule> AddAssign<&SuperForm<R>> for SuperForm<R> {
    fn add_assign(&mut self, rhs: &SuperForm<R>) {
        *self = &*self + rhs;
    }
}

impl<R: SignRule> Neg for SuperForm<R> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scaled(-Gq::one())
    }
}

impl<R: SignRule> Sub for SuperForm<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self + &(-rhs)
    }
}

impl<R: SignRule> Sub for &SuperForm<R> {
    type Output = SuperForm<R>;
    fn sub(self, rhs: Self) -> SuperForm<R> {
        self + &rhs.scaled(-Gq::one())
    }
}

impl<R: SignRule> Mul for &SuperForm<R> {
    type Output = SuperForm<R>;
    fn mul(self, rhs: Self) -> SuperForm<R> {
        self.wedge(rhs)
    }
}

impl<R: SignRule> Mul for SuperForm<R> {
    type Output = SuperForm<R>;
    fn mul(self, rhs: Self) -> SuperForm<R> {
        self.wedge(&rhs)
    }
}

impl<R: SignRule> Mul<Gq> for SuperForm<R> {
    type Output = SuperForm<R>;
    fn mul(self, rhs: Gq) -> SuperForm<R> {
        self.scaled(rhs)
    }
}

impl<R: SignRule> std::iter::Sum for SuperForm<R> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc: FxHashMap<Mono, Gq> = FxHashMap::default();
        for f in iter {
            for (m, c) in f.terms {
                *acc.entry(m).or_default() += c;
            }
        }
        Self::from_map(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::Total;

    type F = SuperForm;

    #[test]
    fn nilpotent_and_commuting_generators() {
        assert!(F::theta(1).wedge(&F::theta(1)).is_zero());
        assert!(F::dx(1).wedge(&F::dx(1)).is_zero());
        assert_eq!(
            F::dtheta(1).wedge(&F::dtheta(2)),
            F::dtheta(2).wedge(&F::dtheta(1))
        );
        assert!(!F::dtheta(1).wedge(&F::dtheta(1)).is_zero());
    }

    #[test]
    fn cross_kind_signs_follow_rule() {
        assert_eq!(
            F::theta(0).wedge(&F::dtheta(0)),
            -F::dtheta(0).wedge(&F::theta(0))
        );
        assert_eq!(F::theta(0).wedge(&F::dx(0)), F::dx(0).wedge(&F::theta(0)));
        type T = SuperForm<Total>;
        assert_eq!(
            T::theta(0).wedge(&T::dtheta(0)),
            T::dtheta(0).wedge(&T::theta(0))
        );
        assert_eq!(T::theta(0).wedge(&T::dx(0)), -T::dx(0).wedge(&T::theta(0)));
    }

    #[test]
    fn d_of_theta() {
        assert_eq!(F::theta(5).ext_d(), F::dtheta(5));
        assert!(F::dtheta(5).ext_d().is_zero());
        assert!(F::dx(5).ext_d().is_zero());
    }

    #[test]
    fn text_round_trip() {
        let f = F::from_factors(
            Gq::ratio(-1, 3),
            &[
                Generator::DX(2),
                Generator::Theta(4),
                Generator::DTheta(1),
                Generator::DTheta(1),
            ],
        ) + F::constant(Gq::i());
        let s = f.to_string();
        assert_eq!(s.parse::<F>().unwrap(), f);
        assert_eq!("0".parse::<F>().unwrap(), F::zero());
        assert!("1: q7".parse::<F>().is_err());
    }
}

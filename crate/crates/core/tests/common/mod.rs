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

//! Helpers shared by the integration tests.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use scv_core::forms::{Generator, SignRule, SuperForm};
use scv_core::gamma::{build_rep, GammaRep, ScaledSignedPerm, Signature, SignedPerm, SPINOR_DIM};
use scv_core::Gq;

pub fn rep() -> GammaRep {
    build_rep(&Signature::default()).expect("standard representation")
}

/// Small nonzero Gaussian rational.
pub fn random_gq(rng: &mut impl Rng) -> Gq {
    loop {
        let re = Gq::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        let im = Gq::imag_ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        let g = re + im;
        if g != Gq::int(0) {
            return g;
        }
    }
}

/// Uniform signed permutation with a random scale.
pub fn random_perm(rng: &mut impl Rng) -> ScaledSignedPerm {
    let mut image: Vec<u8> = (0..SPINOR_DIM as u8).collect();
    image.shuffle(rng);
    let image: [u8; SPINOR_DIM] = image.try_into().unwrap();
    let perm = SignedPerm::new(image, rng.gen()).expect("valid permutation");
    ScaledSignedPerm::from_perm(random_gq(rng), perm)
}

pub fn random_generator(rng: &mut impl Rng) -> Generator {
    match rng.gen_range(0..3) {
        0 => Generator::Theta(rng.gen_range(0..SPINOR_DIM as u8)),
        1 => Generator::DTheta(rng.gen_range(0..SPINOR_DIM as u8)),
        _ => Generator::DX(rng.gen_range(0..10)),
    }
}

/// A product of up to `max_len` random generators with a random coefficient.
pub fn random_monomial<R: SignRule>(rng: &mut impl Rng, max_len: usize) -> SuperForm<R> {
    let len = rng.gen_range(0..=max_len);
    let gens: Vec<Generator> = (0..len).map(|_| random_generator(rng)).collect();
    SuperForm::from_factors(random_gq(rng), &gens)
}

/// A sum of up to `max_terms` random monomials.
pub fn random_form<R: SignRule>(
    rng: &mut impl Rng,
    max_terms: usize,
    max_len: usize,
) -> SuperForm<R> {
    (0..rng.gen_range(1..=max_terms))
        .map(|_| random_monomial(rng, max_len))
        .sum()
}

/// Random form whose monomials all have the given form degree and
/// Grassmann parity, so that it has a definite exchange sign.
pub fn random_homogeneous<R: SignRule>(
    rng: &mut impl Rng,
    form: u32,
    odd: bool,
    max_terms: usize,
) -> SuperForm<R> {
    let mut out = SuperForm::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let n_dtheta = rng.gen_range(0..=form);
        let n_dx = form - n_dtheta;
        // Parity counts θ's and dθ's.
        let mut n_theta = rng.gen_range(0..=3u32);
        if (n_theta + n_dtheta) % 2 != u32::from(odd) {
            n_theta += 1;
        }
        let mut gens = Vec::new();
        gens.extend((0..n_theta).map(|_| Generator::Theta(rng.gen_range(0..SPINOR_DIM as u8))));
        gens.extend((0..n_dtheta).map(|_| Generator::DTheta(rng.gen_range(0..SPINOR_DIM as u8))));
        gens.extend((0..n_dx).map(|_| Generator::DX(rng.gen_range(0..10))));
        gens.shuffle(rng);
        out += &SuperForm::from_factors(random_gq(rng), &gens);
    }
    out
}

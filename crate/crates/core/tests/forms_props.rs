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

//! Algebraic laws of superforms, checked on random inputs.

mod common;

use common::{random_form, random_homogeneous, rep};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scv_core::forms::{Bigraded, Generator, SignRule, SuperForm, SusyTable, Total};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn table() -> &'static SusyTable {
    static T: std::sync::OnceLock<SusyTable> = std::sync::OnceLock::new();
    T.get_or_init(|| SusyTable::new(&rep()))
}

fn pow(s: i8, n: u32) -> scv_core::Gq {
    scv_core::Gq::int(if n.is_multiple_of(2) { 1 } else { s as i64 })
}

/// `A∧B = (−1)^{…} B∧A` for homogeneous `A`, `B`, with the exponent fixed
/// by the rule's exchange of one generator of each kind.
fn supercommutes<R: SignRule>(seed: u64) {
    let mut r = rng(seed);
    let (pa, fa) = (r.gen_range(0..3), r.gen_bool(0.5));
    let (pb, fb) = (r.gen_range(0..3), r.gen_bool(0.5));
    let a: SuperForm<R> = random_homogeneous(&mut r, pa, fa, 3);
    let b: SuperForm<R> = random_homogeneous(&mut r, pb, fb, 3);
    let sign = match R::NAME {
        "bigraded" => (pa * pb + u32::from(fa & fb)) % 2,
        _ => ((pa + u32::from(fa)) * (pb + u32::from(fb))) % 2,
    };
    let s = if sign == 0 {
        scv_core::Gq::int(1)
    } else {
        scv_core::Gq::int(-1)
    };
    assert_eq!(a.wedge(&b), b.wedge(&a).scaled(s));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn d_squared_vanishes(seed in any::<u64>()) {
        let f: SuperForm = random_form(&mut rng(seed), 4, 5);
        prop_assert!(f.ext_d().ext_d().is_zero());
        let g: SuperForm<Total> = f.reinterpret();
        prop_assert!(g.ext_d().ext_d().is_zero());
    }

    #[test]
    fn wedge_is_supercommutative(seed in any::<u64>()) {
        supercommutes::<Bigraded>(seed);
        supercommutes::<Total>(seed);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn wedge_is_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a: SuperForm = random_form(&mut r, 3, 3);
        let b: SuperForm = random_form(&mut r, 3, 3);
        let c: SuperForm = random_form(&mut r, 3, 3);
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
    }

    /// `d(A∧B) = A∧dB + (−1)^{p_B} dA∧B`: d acts from the right and
    /// passes B with the exchange sign of a degree-(1,0) object.
    #[test]
    fn d_is_a_right_derivation(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a: SuperForm = random_form(&mut r, 3, 3);
        let pb = r.gen_range(0..3);
        let fb = r.gen_bool(0.5);
        let b: SuperForm = random_homogeneous(&mut r, pb, fb, 3);
        let rhs = a.wedge(&b.ext_d()) + a.ext_d().wedge(&b).scaled(pow(-1, pb));
        prop_assert_eq!(a.wedge(&b).ext_d(), rhs);
    }

    /// `δ(A∧B) = δA∧B + (−1)^{f_A} A∧δB`.
    #[test]
    fn delta_is_a_left_derivation(seed in any::<u64>(), alpha in 0usize..32) {
        let mut r = rng(seed);
        let fa = r.gen_bool(0.5);
        let pa = r.gen_range(0..3);
        let a: SuperForm = random_homogeneous(&mut r, pa, fa, 3);
        let b: SuperForm = random_form(&mut r, 3, 3);
        let t = table();
        let rhs = a.susy_delta(t, alpha).wedge(&b) + a.wedge(&b.susy_delta(t, alpha)).scaled(pow(-1, u32::from(fa)));
        prop_assert_eq!(a.wedge(&b).susy_delta(t, alpha), rhs);
    }

    #[test]
    fn delta_commutes_with_d(seed in any::<u64>(), alpha in 0usize..32) {
        let f: SuperForm = random_form(&mut rng(seed), 4, 4);
        let t = table();
        prop_assert_eq!(f.ext_d().susy_delta(t, alpha), f.susy_delta(t, alpha).ext_d());
    }

    /// On forms with no explicit X dependence the translation term drops
    /// out and the variations anticommute.
    #[test]
    fn deltas_anticommute(seed in any::<u64>(), alpha in 0usize..32, beta in 0usize..32) {
        let f: SuperForm = random_form(&mut rng(seed), 4, 4);
        let t = table();
        let ab = f.susy_delta(t, beta).susy_delta(t, alpha);
        let ba = f.susy_delta(t, alpha).susy_delta(t, beta);
        prop_assert!((ab + ba).is_zero());
    }

    #[test]
    fn canonicalization_is_idempotent(seed in any::<u64>()) {
        let f: SuperForm = random_form(&mut rng(seed), 5, 5);
        prop_assert_eq!(SuperForm::<Bigraded>::from_terms(f.terms().to_vec()), f);
    }

    /// Reordering the factors of a product costs exactly the product of the
    /// pairwise exchange signs.
    #[test]
    fn factor_order_costs_exchange_signs(seed in any::<u64>()) {
        let mut r = rng(seed);
        let gens: Vec<Generator> = (0..r.gen_range(2..6)).map(|_| common::random_generator(&mut r)).collect();
        let i = r.gen_range(0..gens.len() - 1);
        let mut swapped = gens.clone();
        swapped.swap(i, i + 1);
        let one = scv_core::Gq::int(1);
        let s = Bigraded::exchange(gens[i].kind(), gens[i + 1].kind());
        prop_assert_eq!(
            SuperForm::<Bigraded>::from_factors(one, &gens),
            SuperForm::<Bigraded>::from_factors(one, &swapped).scaled(scv_core::Gq::int(s as i64))
        );
    }

    #[test]
    fn text_round_trip(seed in any::<u64>()) {
        let f: SuperForm = random_form(&mut rng(seed), 5, 5);
        let back: SuperForm = f.to_string().parse().unwrap();
        prop_assert_eq!(back, f);
    }
}

#[test]
fn zero_form_prints_and_parses() {
    let z = SuperForm::<Bigraded>::zero();
    assert_eq!(z.to_string(), "0\n");
    assert!(z.to_string().parse::<SuperForm>().unwrap().is_zero());
    assert!("1/2 t0".parse::<SuperForm>().is_err());
}

#[test]
fn theta_squares_to_zero_and_dtheta_does_not() {
    let t = SuperForm::<Bigraded>::theta(3);
    let dt = SuperForm::<Bigraded>::dtheta(3);
    assert!(t.wedge(&t).is_zero());
    assert!(!dt.wedge(&dt).is_zero());
    assert!(SuperForm::<Bigraded>::dx(2)
        .wedge(&SuperForm::dx(2))
        .is_zero());
}

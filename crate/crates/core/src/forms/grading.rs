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

//! Sign rules for exchanging generators and derivations.

use std::fmt::Debug;

/// Things that can be exchanged: the three generator kinds and the two
/// derivations acting on forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Theta,
    DTheta,
    DX,
    /// Exterior derivative `d`.
    ExtD,
    /// Supersymmetry derivation `δ_α`.
    Susy,
}

impl Kind {
    /// `(form degree, Grassmann parity)`.
    pub const fn bidegree(self) -> (u8, u8) {
        match self {
            Kind::Theta => (0, 1),
            Kind::DTheta => (1, 1),
            Kind::DX => (1, 0),
            Kind::ExtD => (1, 0),
            Kind::Susy => (0, 1),
        }
    }

    pub const fn total_degree(self) -> u8 {
        let (p, f) = self.bidegree();
        p + f
    }
}

/// A super-commutation convention: `a·b = exchange(a, b) · b·a`.
///
/// Every rule must make θ's and dX's anticommute among themselves and dθ's
/// commute among themselves; the rules differ only in cross-kind signs.
pub trait SignRule:
    Copy + Clone + Default + Debug + PartialEq + Eq + Send + Sync + 'static
{
    const NAME: &'static str;

    fn exchange(a: Kind, b: Kind) -> i8;
}

/// Sign `(−1)^{p_a p_b + f_a f_b}`: form degree and Grassmann parity are
/// counted separately. θ and dθ anticommute, dX and dθ anticommute, θ and dX
/// commute.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Bigraded;

impl SignRule for Bigraded {
    const NAME: &'static str = "bigraded";

    fn exchange(a: Kind, b: Kind) -> i8 {
        let (pa, fa) = a.bidegree();
        let (pb, fb) = b.bidegree();
        if (pa * pb + fa * fb) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Sign `(−1)^{|a||b|}` with `|·|` = form degree + parity. dθ is even and
/// commutes with everything; θ and dX anticommute.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Total;

impl SignRule for Total {
    const NAME: &'static str = "total";

    fn exchange(a: Kind, b: Kind) -> i8 {
        if (a.total_degree() * b.total_degree()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// `s^n` for `s = ±1`.
#[inline]
pub fn sign_pow(s: i8, n: u32) -> i8 {
    if s < 0 && n % 2 == 1 {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn same_kind_rules<R: SignRule>() {
        assert_eq!(R::exchange(Kind::Theta, Kind::Theta), -1);
        assert_eq!(R::exchange(Kind::DX, Kind::DX), -1);
        assert_eq!(R::exchange(Kind::DTheta, Kind::DTheta), 1);
    }

    #[test]
    fn both_rules_agree_within_kinds() {
        same_kind_rules::<Bigraded>();
        same_kind_rules::<Total>();
    }

    #[test]
    fn cross_kind_signs() {
        use Kind::*;
        assert_eq!(Total::exchange(Theta, DTheta), 1);
        assert_eq!(Total::exchange(Theta, DX), -1);
        assert_eq!(Total::exchange(DX, DTheta), 1);
        assert_eq!(Bigraded::exchange(Theta, DTheta), -1);
        assert_eq!(Bigraded::exchange(Theta, DX), 1);
        assert_eq!(Bigraded::exchange(DX, DTheta), -1);
    }
}

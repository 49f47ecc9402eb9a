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

//! Generators and canonically ordered monomials.

use std::cmp::Ordering;
use std::fmt;

use crate::gamma::SPINOR_DIM;

/// Number of vector directions.
pub const VECTOR_DIM: usize = 10;
/// Largest power of a single dθ a monomial can hold.
pub const MAX_DTHETA_POWER: u8 = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Theta(u8),
    DTheta(u8),
    DX(u8),
}

impl Generator {
    pub fn kind(self) -> super::Kind {
        match self {
            Generator::Theta(_) => super::Kind::Theta,
            Generator::DTheta(_) => super::Kind::DTheta,
            Generator::DX(_) => super::Kind::DX,
        }
    }

    pub fn is_valid(self) -> bool {
        match self {
            Generator::Theta(a) | Generator::DTheta(a) => (a as usize) < SPINOR_DIM,
            Generator::DX(m) => (m as usize) < VECTOR_DIM,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Theta(a) => write!(f, "t{a}"),
            Generator::DTheta(a) => write!(f, "dt{a}"),
            Generator::DX(m) => write!(f, "dx{m}"),
        }
    }
}

/// A monomial without coefficient, in canonical order: θ's ascending, then
/// dθ's ascending (with multiplicity), then dX's ascending.
///
/// θ and dX appear at most once (they anticommute with themselves); dθ powers
/// are packed as 4-bit counts.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Mono {
    pub(crate) theta: u32,
    pub(crate) dtheta: u128,
    pub(crate) dx: u16,
}

impl Mono {
    pub const ONE: Mono = Mono {
        theta: 0,
        dtheta: 0,
        dx: 0,
    };

    pub fn theta_mask(&self) -> u32 {
        self.theta
    }

    pub fn dx_mask(&self) -> u16 {
        self.dx
    }

    pub fn dtheta_power(&self, a: usize) -> u8 {
        ((self.dtheta >> (4 * a)) & 0xf) as u8
    }

    pub(crate) fn with_dtheta_power(mut self, a: usize, n: u8) -> Mono {
        debug_assert!(n <= MAX_DTHETA_POWER);
        self.dtheta = (self.dtheta & !(0xf << (4 * a))) | ((n as u128) << (4 * a));
        self
    }

    /// Adds one dθᵃ; `None` on overflow of the packed count.
    pub(crate) fn add_dtheta(self, a: usize) -> Option<Mono> {
        let n = self.dtheta_power(a);
        (n < MAX_DTHETA_POWER).then(|| self.with_dtheta_power(a, n + 1))
    }

    pub fn theta_count(&self) -> u32 {
        self.theta.count_ones()
    }

    pub fn dtheta_count(&self) -> u32 {
        (0..SPINOR_DIM).map(|a| self.dtheta_power(a) as u32).sum()
    }

    pub fn dx_count(&self) -> u32 {
        self.dx.count_ones()
    }

    pub fn form_degree(&self) -> u32 {
        self.dtheta_count() + self.dx_count()
    }

    /// Number of θ factors.
    pub fn theta_degree(&self) -> u32 {
        self.theta_count()
    }

    /// Number of θ and dθ factors.
    pub fn fermionic_degree(&self) -> u32 {
        self.theta_count() + self.dtheta_count()
    }

    pub fn generators(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        for a in 0..SPINOR_DIM {
            if self.theta >> a & 1 == 1 {
                out.push(Generator::Theta(a as u8));
            }
        }
        for a in 0..SPINOR_DIM {
            for _ in 0..self.dtheta_power(a) {
                out.push(Generator::DTheta(a as u8));
            }
        }
        for m in 0..VECTOR_DIM {
            if self.dx >> m & 1 == 1 {
                out.push(Generator::DX(m as u8));
            }
        }
        out
    }

    fn sort_key(&self) -> (u16, u32, u128) {
        // dX pattern first so that display groups by dX content; the packed
        // dθ counts are bit-reversed in meaning, which is fine for a total order.
        (self.dx, self.theta, self.dtheta)
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.generators();
        if gens.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < gens.len() {
            let g = gens[i];
            let mut run = 1;
            while i + run < gens.len() && gens[i + run] == g {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{g}")?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Number of pairs `(i ∈ a, j ∈ b)` with `i > j`, i.e. the inversions when a
/// sorted block `a` is followed by a sorted block `b` and the two are merged.
#[inline]
pub(crate) fn merge_inversions(a: u32, b: u32) -> u32 {
    let mut n = 0;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        n += (a >> j >> 1).count_ones();
        rest &= rest - 1;
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packed_dtheta_counts() {
        let m = Mono::ONE
            .add_dtheta(3)
            .unwrap()
            .add_dtheta(3)
            .unwrap()
            .add_dtheta(31)
            .unwrap();
        assert_eq!(m.dtheta_power(3), 2);
        assert_eq!(m.dtheta_power(31), 1);
        assert_eq!(m.dtheta_count(), 3);
        assert_eq!(m.to_string(), "dt3^2 dt31");
        let full = Mono::ONE.with_dtheta_power(0, MAX_DTHETA_POWER);
        assert!(full.add_dtheta(0).is_none());
    }

    #[test]
    fn inversions() {
        assert_eq!(merge_inversions(0b100, 0b001), 1);
        assert_eq!(merge_inversions(0b001, 0b100), 0);
        assert_eq!(merge_inversions(0b110, 0b001), 2);
    }
}

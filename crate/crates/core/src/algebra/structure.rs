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

//! Finite-dimensional Lie superalgebras given by structure constants, and
//! the graded Jacobi check.

use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};

use crate::report::{CheckRecord, VerificationReport};
use crate::Gq;

/// Linear combination of generators, sorted by generator index.
pub type Combination = Vec<(usize, Gq)>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorInfo {
    pub label: String,
    pub odd: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuperAlgebra {
    generators: Vec<GeneratorInfo>,
    index: FxHashMap<String, usize>,
    /// `[a, b]` for `a ≤ b`; other orders follow from graded antisymmetry.
    brackets: FxHashMap<(usize, usize), Combination>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("duplicate generator label {0}")]
    DuplicateLabel(String),
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("bracket [{left}, {right}] contains {term} of the wrong parity")]
    ParityViolation {
        left: String,
        right: String,
        term: String,
    },
    #[error("bracket [{0}, {0}] of an even generator must vanish")]
    SelfBracket(String),
    #[error("coefficient matrix of {label} is not symmetric")]
    SymmetryViolation { label: String },
}

fn normalize(mut c: Combination) -> Combination {
    c.sort_by_key(|t| t.0);
    let mut out: Combination = Vec::with_capacity(c.len());
    for (g, v) in c {
        match out.last_mut() {
            Some(last) if last.0 == g => last.1 += v,
            _ => out.push((g, v)),
        }
    }
    out.retain(|t| !t.1.is_zero());
    out
}

impl SuperAlgebra {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_generator(
        &mut self,
        label: impl Into<String>,
        odd: bool,
    ) -> Result<usize, AlgebraError> {
        let label = label.into();
        if self.index.contains_key(&label) {
            return Err(AlgebraError::DuplicateLabel(label));
        }
        let i = self.generators.len();
        self.index.insert(label.clone(), i);
        self.generators.push(GeneratorInfo { label, odd });
        Ok(i)
    }

    pub fn generators(&self) -> &[GeneratorInfo] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn lookup(&self, label: &str) -> Result<usize, AlgebraError> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| AlgebraError::UnknownGenerator(label.to_string()))
    }

    pub fn label(&self, g: usize) -> &str {
        &self.generators[g].label
    }

    pub fn is_odd(&self, g: usize) -> bool {
        self.generators[g].odd
    }

    /// `(−1)^{|a||b|}`.
    pub fn parity_sign(&self, a: usize, b: usize) -> i8 {
        if self.is_odd(a) && self.is_odd(b) {
            -1
        } else {
            1
        }
    }

    /// Adds `value` to `[a, b]`, checking parity. Brackets are accumulated, so
    /// several contributions to the same pair may be added one by one.
    pub fn add_bracket(
        &mut self,
        a: usize,
        b: usize,
        value: Combination,
    ) -> Result<(), AlgebraError> {
        let want_odd = self.is_odd(a) ^ self.is_odd(b);
        for &(g, _) in &value {
            if self.is_odd(g) != want_odd {
                return Err(AlgebraError::ParityViolation {
                    left: self.label(a).to_string(),
                    right: self.label(b).to_string(),
                    term: self.label(g).to_string(),
                });
            }
        }
        if a == b && !self.is_odd(a) && !normalize(value.clone()).is_empty() {
            return Err(AlgebraError::SelfBracket(self.label(a).to_string()));
        }
        // Store as [lo, hi]; [b, a] = −(−1)^{|a||b|} [a, b].
        let (key, factor) = if a <= b {
            ((a, b), Gq::int(1))
        } else {
            ((b, a), Gq::int(-(self.parity_sign(a, b) as i64)))
        };
        let entry = self.brackets.entry(key).or_default();
        entry.extend(value.into_iter().map(|(g, v)| (g, v * factor)));
        let merged = normalize(std::mem::take(entry));
        if merged.is_empty() {
            self.brackets.remove(&key);
        } else {
            self.brackets.insert(key, merged);
        }
        Ok(())
    }

    /// Graded bracket `[a, b]`.
    pub fn bracket(&self, a: usize, b: usize) -> Combination {
        if a <= b {
            self.brackets.get(&(a, b)).cloned().unwrap_or_default()
        } else {
            let factor = Gq::int(-(self.parity_sign(a, b) as i64));
            self.brackets
                .get(&(b, a))
                .map(|c| c.iter().map(|&(g, v)| (g, v * factor)).collect())
                .unwrap_or_default()
        }
    }

    /// `[a, X]` for a combination `X`.
    pub fn bracket_with(&self, a: usize, x: &Combination) -> Combination {
        let mut out = Vec::new();
        for &(g, v) in x {
            out.extend(self.bracket(a, g).into_iter().map(|(h, w)| (h, w * v)));
        }
        normalize(out)
    }

    /// Stored nonzero brackets `(a, b, [a, b])` with `a ≤ b`, in index order.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Combination)> {
        let mut v: Vec<_> = self
            .brackets
            .iter()
            .map(|(&(a, b), c)| (a, b, c.clone()))
            .collect();
        v.sort_by_key(|t| (t.0, t.1));
        v
    }

    /// `(−1)^{|a||c|}[a,[b,c]] + (−1)^{|b||a|}[b,[c,a]] + (−1)^{|c||b|}[c,[a,b]]`.
    pub fn jacobiator(&self, a: usize, b: usize, c: usize) -> Combination {
        let mut out = Vec::new();
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            let s = Gq::int(self.parity_sign(x, z) as i64);
            out.extend(
                self.bracket_with(x, &self.bracket(y, z))
                    .into_iter()
                    .map(|(g, v)| (g, v * s)),
            );
        }
        normalize(out)
    }

    /// Every sorted triple whose Jacobiator is nonzero, in lexicographic order.
    ///
    /// A Jacobiator can only be nonzero if some pair in the triple has a
    /// nonzero bracket, so only those triples are visited.
    pub fn jacobi_violations(&self) -> Vec<(usize, usize, usize)> {
        let mut candidates: FxHashSet<(usize, usize, usize)> = FxHashSet::default();
        for &(a, b) in self.brackets.keys() {
            for c in 0..self.len() {
                let mut t = [a, b, c];
                t.sort_unstable();
                candidates.insert((t[0], t[1], t[2]));
            }
        }
        let mut candidates: Vec<_> = candidates.into_iter().collect();
        candidates.sort_unstable();
        candidates
            .into_par_iter()
            .filter(|&(a, b, c)| !self.jacobiator(a, b, c).is_empty())
            .collect()
    }

    /// Number of distinct unordered triples (with repetition).
    pub fn triple_count(&self) -> usize {
        let n = self.len();
        n * (n + 1) * (n + 2) / 6
    }

    pub fn to_json(&self) -> StructureConstants {
        StructureConstants {
            generators: self.generators.clone(),
            brackets: self
                .nonzero_brackets()
                .into_iter()
                .map(|(a, b, c)| BracketJson {
                    left: self.label(a).to_string(),
                    right: self.label(b).to_string(),
                    result: c
                        .into_iter()
                        .map(|(g, v)| (self.label(g).to_string(), v.to_string()))
                        .collect(),
                })
                .collect(),
        }
    }
}

impl fmt::Display for SuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b, c) in self.nonzero_brackets() {
            let terms: Vec<String> = c
                .iter()
                .map(|(g, v)| format!("({v}) {}", self.label(*g)))
                .collect();
            writeln!(
                f,
                "[{}, {}] = {}",
                self.label(a),
                self.label(b),
                terms.join(" + ")
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketJson {
    pub left: String,
    pub right: String,
    pub result: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstants {
    pub generators: Vec<GeneratorInfo>,
    pub brackets: Vec<BracketJson>,
}

/// Graded Jacobi identity over all generator triples.
pub fn verify_graded_jacobi(name: &str, alg: &SuperAlgebra) -> VerificationReport {
    let bad = alg.jacobi_violations();
    let mut rec = CheckRecord::verdict(
        format!("algebra.{name}.jacobi"),
        "graded Jacobi identity",
        bad.is_empty(),
        bad.len(),
    )
    .with_detail(format!(
        "{} generators, {} triples",
        alg.len(),
        alg.triple_count()
    ));
    if let Some(&(a, b, c)) = bad.first() {
        rec = rec.with_counterexample(format!(
            "({}, {}, {}); {} violating triples",
            alg.label(a),
            alg.label(b),
            alg.label(c),
            bad.len()
        ));
    }
    VerificationReport::from_records([rec])
}

#[cfg(test)]
mod tests {
    use super::*;

    /// so(3) as a sanity check: [e_i, e_j] = ε_ijk e_k.
    #[test]
    fn lie_algebra_passes() {
        let mut a = SuperAlgebra::new();
        let e: Vec<_> = (0..3)
            .map(|i| a.add_generator(format!("e{i}"), false).unwrap())
            .collect();
        a.add_bracket(e[0], e[1], vec![(e[2], Gq::int(1))]).unwrap();
        a.add_bracket(e[1], e[2], vec![(e[0], Gq::int(1))]).unwrap();
        a.add_bracket(e[2], e[0], vec![(e[1], Gq::int(1))]).unwrap();
        assert!(a.jacobi_violations().is_empty());
        assert_eq!(a.bracket(e[1], e[0]), vec![(e[2], Gq::int(-1))]);
    }

    #[test]
    fn broken_structure_constants_fail() {
        let mut a = SuperAlgebra::new();
        let e: Vec<_> = (0..3)
            .map(|i| a.add_generator(format!("e{i}"), false).unwrap())
            .collect();
        // Rescaling so(3) constants keeps Jacobi, so break the shape instead.
        a.add_bracket(e[0], e[1], vec![(e[1], Gq::int(1))]).unwrap();
        a.add_bracket(e[1], e[2], vec![(e[0], Gq::int(1))]).unwrap();
        assert_eq!(a.jacobi_violations(), vec![(0, 1, 2)]);
        assert_eq!(a.jacobiator(e[0], e[1], e[2]), vec![(e[0], Gq::int(-1))]);
    }

    #[test]
    fn parity_is_enforced() {
        let mut a = SuperAlgebra::new();
        let q = a.add_generator("Q", true).unwrap();
        let p = a.add_generator("P", false).unwrap();
        assert!(matches!(
            a.add_bracket(q, q, vec![(q, Gq::int(1))]),
            Err(AlgebraError::ParityViolation { .. })
        ));
        assert!(a.add_bracket(q, q, vec![(p, Gq::int(2))]).is_ok());
        assert!(matches!(
            a.add_bracket(p, p, vec![(p, Gq::int(1))]),
            Err(AlgebraError::SelfBracket(_))
        ));
        assert!(a.add_generator("Q", false).is_err());
        assert_eq!(a.bracket(q, q), vec![(p, Gq::int(2))]);
        // Odd-odd brackets are symmetric, even-odd ones antisymmetric.
        let q2 = a.add_generator("Q2", true).unwrap();
        a.add_bracket(q2, q, vec![(p, Gq::int(3))]).unwrap();
        assert_eq!(a.bracket(q, q2), vec![(p, Gq::int(3))]);
        a.add_bracket(p, q, vec![(q2, Gq::int(1))]).unwrap();
        assert_eq!(a.bracket(q, p), vec![(q2, Gq::int(-1))]);
    }
}

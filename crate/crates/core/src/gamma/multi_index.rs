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

//! Sorted vector multi-indices with permutation parity.

use std::fmt;

/// Result of sorting a raw list of vector indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum MultiIndex {
    /// Strictly increasing indices and the sign of the sorting permutation.
    Sorted { indices: Vec<usize>, parity: i8 },
    /// Some index occurs twice; antisymmetric objects vanish.
    Degenerate,
}

impl MultiIndex {
    pub fn canonicalize(raw: &[usize]) -> MultiIndex {
        let mut indices = raw.to_vec();
        let mut parity = 1i8;
        // Insertion sort, counting transpositions.
        for i in 1..indices.len() {
            let mut j = i;
            while j > 0 && indices[j - 1] > indices[j] {
                indices.swap(j - 1, j);
                parity = -parity;
                j -= 1;
            }
        }
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return MultiIndex::Degenerate;
        }
        MultiIndex::Sorted { indices, parity }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, MultiIndex::Degenerate)
    }

    pub fn indices(&self) -> Option<&[usize]> {
        match self {
            MultiIndex::Sorted { indices, .. } => Some(indices),
            MultiIndex::Degenerate => None,
        }
    }

    pub fn parity(&self) -> i8 {
        match self {
            MultiIndex::Sorted { parity, .. } => *parity,
            MultiIndex::Degenerate => 0,
        }
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultiIndex::Sorted { indices, parity } => {
                let body: Vec<String> = indices.iter().map(|i| i.to_string()).collect();
                write!(
                    f,
                    "{}[{}]",
                    if *parity < 0 { "-" } else { "+" },
                    body.join(",")
                )
            }
            MultiIndex::Degenerate => write!(f, "degenerate"),
        }
    }
}

/// All strictly increasing `k`-subsets of `0..n`, in lexicographic order.
pub fn sorted_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// All permutations of `items` with their signs (Heap's algorithm, sign tracked by swaps).
pub fn signed_permutations(items: &[usize]) -> Vec<(Vec<usize>, i8)> {
    let mut out = Vec::new();
    let mut a = items.to_vec();
    let n = a.len();
    let mut c = vec![0usize; n];
    let mut sign = 1i8;
    out.push((a.clone(), sign));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            out.push((a.clone(), sign));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sorted_input_has_even_parity() {
        assert_eq!(
            MultiIndex::canonicalize(&[1, 4, 7]),
            MultiIndex::Sorted {
                indices: vec![1, 4, 7],
                parity: 1
            }
        );
        assert_eq!(MultiIndex::canonicalize(&[]).parity(), 1);
    }

    #[test]
    fn repeated_index_is_degenerate() {
        assert!(MultiIndex::canonicalize(&[3, 1, 3]).is_degenerate());
    }

    #[test]
    fn tuple_counts() {
        assert_eq!(sorted_tuples(10, 3).len(), 120);
        assert_eq!(sorted_tuples(10, 0), vec![Vec::<usize>::new()]);
        assert_eq!(sorted_tuples(10, 10).len(), 1);
    }

    #[test]
    fn heap_permutations_have_correct_signs() {
        let perms = signed_permutations(&[0, 1, 2, 3]);
        assert_eq!(perms.len(), 24);
        for (p, s) in perms {
            assert_eq!(MultiIndex::canonicalize(&p).parity(), s);
        }
    }

    proptest! {
        #[test]
        fn parity_is_sign_of_permutation(
            set in proptest::sample::subsequence((0usize..10).collect::<Vec<_>>(), 0..6),
            seed in any::<u64>(),
        ) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut shuffled = set.clone();
            shuffled.shuffle(&mut rng);
            let canon = MultiIndex::canonicalize(&shuffled);
            prop_assert_eq!(canon.indices().unwrap(), &set[..]);
            let (_, sign) = signed_permutations(&set)
                .into_iter()
                .find(|(p, _)| *p == shuffled)
                .unwrap();
            prop_assert_eq!(canon.parity(), sign);
        }
    }
}

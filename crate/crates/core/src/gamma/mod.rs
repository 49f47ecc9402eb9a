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

//! Exact Clifford algebra for the ten-dimensional Majorana-Weyl representation.

pub mod dense;
pub mod multi_index;
pub mod perm;
pub mod rep;

pub use dense::{dense_sym4, permutations4, DenseMatrix};
pub use multi_index::{signed_permutations, sorted_tuples, MultiIndex};
pub use perm::{ScaledSignedPerm, SignedPerm, SPINOR_DIM};
pub use rep::{build_rep, clifford_words, GammaError, GammaRep, Signature, TensorWord};

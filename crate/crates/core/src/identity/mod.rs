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

//! Exact decision procedures for the symmetrized Γ-matrix identities and the
//! trace lemmas behind them.

mod checks;
mod tensor;
mod trace;

pub use checks::{
    check, check_chiral_vector, check_generalized, check_tuples, check_two_form, check_vector,
    AntisymPath, Counterexample, Identity, IdentityVerdict,
};
pub use tensor::{stabilizer_order, sym4, QuarticTensor, SymmetrizedTensor, Term};
pub use trace::{
    check_trace_lemmas, lemma_values, necessary_condition, LemmaValues, TraceMode, TupleOutcome,
    TupleSample,
};

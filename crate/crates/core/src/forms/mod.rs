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

//! Graded exterior calculus on flat superspace `(Xᵐ, θᵅ)`.

mod builders;
mod checks;
mod form;
mod grading;
mod monomial;

pub use builders::{Slot, Superspace};
pub use checks::{
    bianchi_c3_lhs, c3_leading_expected, form_record, record_under, verify_bianchi,
    verify_bianchi_c3, verify_d_leading, verify_delta_b, verify_h, verify_id1_id2,
    verify_superspace,
};
pub use form::{ParseFormError, SuperForm, SusyTable};
pub use grading::{sign_pow, Bigraded, Kind, SignRule, Total};
pub use monomial::{Generator, Mono, MAX_DTHETA_POWER, VECTOR_DIM};

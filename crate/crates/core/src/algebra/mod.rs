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

//! The supersymmetry algebra extended by brane charges.

mod charges;
mod currents;
mod structure;
mod suite;

pub use charges::{
    algebra_from_terms, assemble_extended_algebra, build_extended_superalgebra,
    build_flat_superalgebra, momentum_terms, ChargeTerm, ChargeTermJson, Family,
};
pub use currents::{
    anticommutator_component, s_alpha_beta_delta, susy_vector_component, verify_s_delta,
    verify_vector_field_sign, ChargeCurrents,
};
pub use structure::{
    verify_graded_jacobi, AlgebraError, BracketJson, Combination, GeneratorInfo,
    StructureConstants, SuperAlgebra,
};
pub use suite::{verify_algebra, verify_charge_terms};

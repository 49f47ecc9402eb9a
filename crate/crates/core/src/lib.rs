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

//! Exact verification engine for the ten-dimensional super-Clifford algebra.

pub mod algebra;
pub mod forms;
pub mod gamma;
pub mod identity;
pub mod report;
pub mod scalar;
pub mod suites;
pub mod symmetry;

pub use scalar::Gq;

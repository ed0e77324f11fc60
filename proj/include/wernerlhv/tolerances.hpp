// Copyright 2026 The wernerlhv developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace wernerlhv::tol {

// All matrix tolerances are in the max-abs-entry metric. Double-precision
// dense algebra at dimension <= 16 meets these with wide margin.
inline constexpr double herm = 1e-9;     // hermiticity defect
inline constexpr double complete = 1e-9; // POVM / Kraus completeness defect
inline constexpr double eig = 1e-9;      // eigenvalue positivity slack
inline constexpr double recon = 1e-8;    // spectral reconstruction defect
inline constexpr double norm = 1e-10;    // unit-vector norm defect
inline constexpr double degeneracy = 1e-8; // eigenvalue clustering width

} // namespace wernerlhv::tol

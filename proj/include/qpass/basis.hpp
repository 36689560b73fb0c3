// Copyright 2026 The qpass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace qpass {

/// Readout basis, applied uniformly to every qubit or bit slot. Under the
/// hadamard tag every ket symbol is read as the hat state |b̂⟩ = H|b⟩.
enum class Basis { computational, hadamard };

inline const char* to_string(Basis b) {
  return b == Basis::computational ? "computational" : "hadamard";
}

}  // namespace qpass

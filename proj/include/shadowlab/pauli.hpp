// Copyright 2026 The shadowlab Authors
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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace shadowlab {

enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// Tensor product of single-qubit Paulis. Letter `q` acts on qubit `q`;
/// qubit 0 is the leftmost character and the most significant bit of a
/// computational-basis index.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::vector<Pauli> letters);

    /// Parses strings such as "XIZ". Throws ValidationError on other symbols.
    static PauliString parse(std::string_view text);
    static PauliString identity(std::size_t n);

    std::size_t num_qubits() const { return letters_.size(); }
    Pauli operator[](std::size_t q) const { return letters_[q]; }
    const std::vector<Pauli> &letters() const { return letters_; }

    /// Qubits whose letter is not I, ascending.
    std::vector<std::size_t> support() const;
    std::size_t locality() const;

    /// Bit masks over basis indices: positions carrying X or Y flip bits,
    /// positions carrying Y or Z contribute a sign.
    uint64_t flip_mask() const;
    uint64_t phase_mask() const;
    std::size_t y_count() const;

    std::string str() const;

    bool operator==(const PauliString &other) const = default;

   private:
    std::vector<Pauli> letters_;
};

}  // namespace shadowlab

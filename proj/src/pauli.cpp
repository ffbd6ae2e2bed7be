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


#include "shadowlab/pauli.hpp"

#include "shadowlab/errors.hpp"

namespace shadowlab {

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I:
            return 'I';
        case Pauli::X:
            return 'X';
        case Pauli::Y:
            return 'Y';
        case Pauli::Z:
            return 'Z';
    }
    return '?';
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
        default:
            throw ValidationError(std::string("invalid Pauli letter '") + c + "'");
    }
}

PauliString::PauliString(std::vector<Pauli> letters) : letters_(std::move(letters)) {
    require(letters_.size() <= 64, "Pauli strings are limited to 64 qubits");
}

PauliString PauliString::parse(std::string_view text) {
    std::vector<Pauli> letters;
    letters.reserve(text.size());
    for (char c : text) {
        letters.push_back(pauli_from_char(c));
    }
    return PauliString(std::move(letters));
}

PauliString PauliString::identity(std::size_t n) { return PauliString(std::vector<Pauli>(n, Pauli::I)); }

std::vector<std::size_t> PauliString::support() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < letters_.size(); ++q) {
        if (letters_[q] != Pauli::I) {
            out.push_back(q);
        }
    }
    return out;
}

std::size_t PauliString::locality() const {
    std::size_t k = 0;
    for (Pauli p : letters_) {
        k += p != Pauli::I;
    }
    return k;
}

uint64_t PauliString::flip_mask() const {
    const std::size_t n = letters_.size();
    uint64_t mask = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if (letters_[q] == Pauli::X || letters_[q] == Pauli::Y) {
            mask |= uint64_t{1} << (n - 1 - q);
        }
    }
    return mask;
}

uint64_t PauliString::phase_mask() const {
    const std::size_t n = letters_.size();
    uint64_t mask = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if (letters_[q] == Pauli::Z || letters_[q] == Pauli::Y) {
            mask |= uint64_t{1} << (n - 1 - q);
        }
    }
    return mask;
}

std::size_t PauliString::y_count() const {
    std::size_t count = 0;
    for (Pauli p : letters_) {
        count += p == Pauli::Y;
    }
    return count;
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (Pauli p : letters_) {
        out.push_back(pauli_char(p));
    }
    return out;
}

}  // namespace shadowlab

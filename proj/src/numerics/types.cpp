// Copyright 2026 The lzs-lattice Authors
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

#include "lzs/numerics/types.hpp"

#include <algorithm>
#include <cmath>

#include "lzs/error.hpp"

namespace lzs::numerics {

HermitianMatrix::HermitianMatrix(std::size_t dimension)
    : n_(dimension), data_(dimension * dimension) {}

HermitianMatrix HermitianMatrix::from_entries(std::size_t dimension, std::span<const cplx> entries) {
    if (dimension == 0) throw ContractViolation("HermitianMatrix: dimension must be positive");
    if (entries.size() != dimension * dimension)
        throw ContractViolation("HermitianMatrix: entry count does not match dimension");
    double scale = 0.0;
    for (const auto& e : entries) scale = std::max(scale, std::abs(e));
    const double limit = 1e-12 * scale;
    HermitianMatrix h(dimension);
    for (std::size_t i = 0; i < dimension; ++i) {
        for (std::size_t j = i; j < dimension; ++j) {
            const cplx upper = entries[i * dimension + j];
            const cplx lower = entries[j * dimension + i];
            if (std::abs(upper - std::conj(lower)) > limit)
                throw ContractViolation("HermitianMatrix: input is not Hermitian");
            h.set(i, j, upper);
        }
    }
    return h;
}

void HermitianMatrix::set(std::size_t i, std::size_t j, cplx value) {
    if (i >= n_ || j >= n_) throw ContractViolation("HermitianMatrix: index out of range");
    if (i == j) {
        data_[i * n_ + i] = cplx(value.real(), 0.0);
        return;
    }
    data_[i * n_ + j] = value;
    data_[j * n_ + i] = std::conj(value);
}

double HermitianMatrix::max_norm() const {
    double m = 0.0;
    for (const auto& e : data_) m = std::max(m, std::abs(e));
    return m;
}

HermitianMatrix HermitianMatrix::from_matrix2(const Matrix2& m) {
    return from_entries(2, std::span<const cplx>(m.m.data(), m.m.size()));
}

}  // namespace lzs::numerics

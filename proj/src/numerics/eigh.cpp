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

#include "lzs/numerics/eigh.hpp"

#include <Eigen/Dense>

#include "lzs/error.hpp"

namespace lzs::numerics {

EigenSystem eigh(const HermitianMatrix& h) {
    const auto n = h.dimension();
    if (n == 0) throw ContractViolation("eigh: empty matrix");
    Eigen::MatrixXcd a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const cplx v = h(i, j);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw ContractViolation("eigh: non-finite entry");
            a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
        }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw AccuracyError("eigh: no convergence", 0.0, 0.0);

    EigenSystem out;
    out.dimension = n;
    out.values.resize(n);
    out.vectors.resize(n * n);
    const auto& vals = solver.eigenvalues();
    const auto& vecs = solver.eigenvectors();
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = vals(static_cast<Eigen::Index>(j));
        for (std::size_t i = 0; i < n; ++i)
            out.vectors[i * n + j] = vecs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    return out;
}

}  // namespace lzs::numerics

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

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace lzs::numerics {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr cplx kI{0.0, 1.0};

/// Amplitude pair (a, b) of a two-band state at a single quasimomentum.
struct ComplexVector2 {
    cplx a{};
    cplx b{};

    double norm2() const { return std::norm(a) + std::norm(b); }

    ComplexVector2& operator+=(const ComplexVector2& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    friend ComplexVector2 operator+(ComplexVector2 x, const ComplexVector2& y) { return x += y; }
    friend ComplexVector2 operator-(const ComplexVector2& x, const ComplexVector2& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend ComplexVector2 operator*(double s, const ComplexVector2& x) { return {s * x.a, s * x.b}; }
    friend ComplexVector2 operator*(cplx s, const ComplexVector2& x) { return {s * x.a, s * x.b}; }
};

/// Fixed-size 2x2 complex matrix, row-major. Used for generators and propagators in hot loops.
struct Matrix2 {
    std::array<cplx, 4> m{};

    cplx& operator()(int i, int j) { return m[static_cast<std::size_t>(2 * i + j)]; }
    const cplx& operator()(int i, int j) const { return m[static_cast<std::size_t>(2 * i + j)]; }

    static Matrix2 identity() { return {{cplx{1.0}, cplx{}, cplx{}, cplx{1.0}}}; }

    ComplexVector2 apply(const ComplexVector2& v) const {
        return {m[0] * v.a + m[1] * v.b, m[2] * v.a + m[3] * v.b};
    }
    Matrix2 adjoint() const { return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}}; }

    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
        return {{x.m[0] * y.m[0] + x.m[1] * y.m[2], x.m[0] * y.m[1] + x.m[1] * y.m[3],
                 x.m[2] * y.m[0] + x.m[3] * y.m[2], x.m[2] * y.m[1] + x.m[3] * y.m[3]}};
    }
    friend Matrix2 operator*(cplx s, Matrix2 x) {
        for (auto& e : x.m) e *= s;
        return x;
    }
};

/// Dense complex Hermitian matrix.
///
/// Storage is row-major. Every mutation goes through `set`, which writes the mirrored
/// entry too, so `entry(i, j) == conj(entry(j, i))` and the diagonal is exactly real.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(std::size_t dimension);

    /// Validates and copies a dense row-major array. Throws ContractViolation when the
    /// input deviates from Hermitian symmetry by more than 1e-12 * ||H||_max.
    static HermitianMatrix from_entries(std::size_t dimension, std::span<const cplx> entries);

    std::size_t dimension() const noexcept { return n_; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    /// Sets H(i, j) = value and H(j, i) = conj(value). Diagonal writes keep only the real part.
    void set(std::size_t i, std::size_t j, cplx value);

    /// Largest absolute entry.
    double max_norm() const;
    std::span<const cplx> data() const noexcept { return data_; }

    static HermitianMatrix from_matrix2(const Matrix2& m);

private:
    std::size_t n_ = 0;
    std::vector<cplx> data_;
};

/// Result of a Hermitian eigendecomposition. Column j of `vectors` (row-major, n x n)
/// is the eigenvector of `values[j]`; values ascend.
struct EigenSystem {
    std::size_t dimension = 0;
    std::vector<double> values;
    std::vector<cplx> vectors;

    cplx vector_entry(std::size_t row, std::size_t col) const { return vectors[row * dimension + col]; }
};

}  // namespace lzs::numerics

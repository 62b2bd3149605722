// Copyright 2026 The qgame Authors
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

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "amplitude.hpp"

namespace qgame {

/**
 * @brief Square complex matrix acting on one qudit, with a unitarity
 * certificate.
 *
 * Entries are stored row-major. A matrix starts uncertified; certify()
 * measures max |(U^dagger U - I)_ij| and records whether it is below the
 * requested tolerance. Once certified the object is treated as immutable by
 * every consumer in this library.
 */
class UnitaryMatrix {
  public:
    UnitaryMatrix() = default;

    UnitaryMatrix(std::size_t dim, std::vector<Amplitude> entries)
        : dim_(dim), entries_(std::move(entries)) {
        if (dim_ == 0) {
            throw DomainError("UnitaryMatrix: dimension must be >= 1");
        }
        if (entries_.size() != dim_ * dim_) {
            throw DomainError("UnitaryMatrix: expected " +
                              std::to_string(dim_ * dim_) + " entries, got " +
                              std::to_string(entries_.size()));
        }
        for (const auto &a : entries_) {
            if (!is_finite(a)) {
                throw DomainError("UnitaryMatrix: non-finite entry");
            }
        }
    }

    /// Row-major nested initializer, e.g. {{1, 0}, {0, 1}}.
    UnitaryMatrix(std::initializer_list<std::initializer_list<Amplitude>> rows)
        : UnitaryMatrix(rows.size(), flatten(rows)) {}

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] bool certified() const noexcept { return certified_; }

    [[nodiscard]] Amplitude operator()(std::size_t row,
                                       std::size_t col) const noexcept {
        return entries_[row * dim_ + col];
    }

    [[nodiscard]] std::span<const Amplitude> entries() const noexcept {
        return entries_;
    }

    /// Returns max |(U^dagger U - I)_ij| and sets the certificate iff it is
    /// strictly below tol.
    double certify(double tol) {
        const double dev = deviation();
        certified_ = dev < tol;
        return dev;
    }

    /// max |(U^dagger U - I)_ij| by direct O(d^3) multiplication.
    [[nodiscard]] double deviation() const noexcept {
        double worst = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                Amplitude acc{0.0, 0.0};
                for (std::size_t k = 0; k < dim_; ++k) {
                    acc += std::conj((*this)(k, i)) * (*this)(k, j);
                }
                if (i == j) {
                    acc -= 1.0;
                }
                worst = std::max(worst, std::abs(acc));
            }
        }
        return worst;
    }

    /// Plain matrix product this * rhs (uncertified).
    [[nodiscard]] UnitaryMatrix operator*(const UnitaryMatrix &rhs) const {
        if (rhs.dim_ != dim_) {
            throw DomainError("UnitaryMatrix: product dimension mismatch");
        }
        std::vector<Amplitude> out(dim_ * dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t k = 0; k < dim_; ++k) {
                const Amplitude a = (*this)(i, k);
                for (std::size_t j = 0; j < dim_; ++j) {
                    out[i * dim_ + j] += a * rhs(k, j);
                }
            }
        }
        return {dim_, std::move(out)};
    }

  private:
    static std::vector<Amplitude>
    flatten(std::initializer_list<std::initializer_list<Amplitude>> rows) {
        std::vector<Amplitude> flat;
        flat.reserve(rows.size() * rows.size());
        for (const auto &row : rows) {
            if (row.size() != rows.size()) {
                throw DomainError("UnitaryMatrix: rows must form a square");
            }
            flat.insert(flat.end(), row.begin(), row.end());
        }
        return flat;
    }

    std::size_t dim_ = 0;
    std::vector<Amplitude> entries_;
    bool certified_ = false;
};

/// Measures the unitarity defect of U and updates its certificate.
inline double verify_unitary(UnitaryMatrix &U, double tol) {
    return U.certify(tol);
}

} // namespace qgame

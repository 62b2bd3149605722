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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "amplitude.hpp"
#include "statevector.hpp"
#include "unitary_matrix.hpp"

namespace qgame {

/// Largest Hilbert-space dimension for which preparation_matrix() will
/// materialize an explicit operator.
inline constexpr std::uint64_t kExplicitPreparationCap = 10'000;

[[nodiscard]] inline UnitaryMatrix identity_matrix(std::size_t d) {
    std::vector<Amplitude> e(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        e[i * d + i] = 1.0;
    }
    UnitaryMatrix U(d, std::move(e));
    U.certify(Tolerance{}.eps_construct);
    return U;
}

/**
 * @brief The N-road strategy operator: the N x N discrete Fourier matrix,
 * u_ij = omega(N, i*j) / sqrt(N).
 *
 * @throws DomainError for N == 0.
 * @throws ConsistencyError if the constructed matrix fails certification.
 */
[[nodiscard]] inline UnitaryMatrix strategy_unitary(std::size_t n) {
    if (n == 0) {
        throw DomainError("strategy_unitary: N must be >= 1");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const auto nn = static_cast<std::int64_t>(n);
    std::vector<Amplitude> e(n * n);
    for (std::int64_t i = 0; i < nn; ++i) {
        for (std::int64_t j = 0; j < nn; ++j) {
            e[static_cast<std::size_t>(i * nn + j)] =
                omega(n, mod_floor(i * j, nn)) * scale;
        }
    }
    UnitaryMatrix U(n, std::move(e));
    const double dev = U.certify(Tolerance{}.eps_construct);
    if (!U.certified()) {
        throw ConsistencyError("strategy_unitary(" + std::to_string(n) +
                               "): unitarity defect " + std::to_string(dev));
    }
    return U;
}

/// Hadamard gate (1/sqrt2)[[1, 1], [1, -1]]; the two-road strategy.
[[nodiscard]] inline UnitaryMatrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    UnitaryMatrix H{{s, s}, {s, -s}};
    H.certify(Tolerance{}.eps_construct);
    return H;
}

/// Two-trucker set-up rotation (1/sqrt2)[[1, 1], [-1, 1]].
[[nodiscard]] inline UnitaryMatrix r_gate() {
    const double s = 1.0 / std::sqrt(2.0);
    UnitaryMatrix R{{s, s}, {-s, s}};
    R.certify(Tolerance{}.eps_construct);
    return R;
}

/**
 * @brief Directly constructs the phase-weighted GHZ-type initial state
 * (1/sqrt n) sum_k omega(n, k p) |k k ... k> on n players with n choices.
 *
 * This is the action of the preparation gate on |0...0>, which is the only
 * part of that gate the game can observe.
 */
[[nodiscard]] inline StateVector
prepare_initial_state(std::size_t n, std::int64_t p,
                      std::uint64_t cap = kDefaultDenseCap) {
    if (n < 2) {
        throw DomainError("prepare_initial_state: N must be >= 2");
    }
    StateVector s(n, n, cap);
    const auto nn = static_cast<std::int64_t>(n);
    const std::int64_t pr = mod_floor(p, nn);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        const OutcomeTuple diag{std::vector<std::size_t>(n, k)};
        const auto kk = static_cast<std::int64_t>(k);
        s.set_amplitude(diag, omega(n, mod_floor(kk * pr, nn)) * scale);
    }
    return s;
}

namespace detail {

struct SparseColumn {
    std::vector<std::pair<std::size_t, Amplitude>> entries;
};

} // namespace detail

/**
 * @brief Explicit n^n x n^n unitary whose first column is the initial state.
 *
 * Completed to a full unitary by deterministic Gram-Schmidt: the target
 * state is inserted first, then standard basis vectors e_0, e_1, ... are
 * orthogonalized in index order and kept when their residual is not
 * negligible. Columns are handled sparsely, so the cost is dominated by
 * writing the dense result.
 *
 * @throws CapacityError when n^n > cap.
 */
[[nodiscard]] inline UnitaryMatrix
preparation_matrix(std::size_t n, std::int64_t p,
                   std::uint64_t cap = kExplicitPreparationCap) {
    if (n < 2) {
        throw DomainError("preparation_matrix: N must be >= 2");
    }
    const auto dim = static_cast<std::size_t>(dense_size(n, n, cap));
    const StateVector target = prepare_initial_state(n, p, cap);

    std::vector<detail::SparseColumn> cols;
    cols.reserve(dim);
    {
        detail::SparseColumn first;
        for (std::size_t i = 0; i < dim; ++i) {
            if (target.amplitude(i) != Amplitude{}) {
                first.entries.emplace_back(i, target.amplitude(i));
            }
        }
        cols.push_back(std::move(first));
    }

    // Dense scratch plus the list of indices it touches.
    std::vector<Amplitude> v(dim);
    std::vector<char> touched(dim, 0);
    std::vector<std::size_t> support;
    // cols_at[i] lists the columns with a nonzero at row i.
    std::vector<std::vector<std::size_t>> cols_at(dim);
    for (const auto &[i, a] : cols[0].entries) {
        cols_at[i].push_back(0);
    }

    auto touch = [&](std::size_t i) {
        if (!touched[i]) {
            touched[i] = 1;
            support.push_back(i);
        }
    };

    for (std::size_t b = 0; b < dim && cols.size() < dim; ++b) {
        support.clear();
        v[b] = 1.0;
        touch(b);
        // Two orthogonalization passes keep the result unitary to ~1e-15.
        for (int pass = 0; pass < 2; ++pass) {
            std::vector<std::size_t> candidates;
            for (const std::size_t i : support) {
                for (const std::size_t c : cols_at[i]) {
                    candidates.push_back(c);
                }
            }
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()),
                             candidates.end());
            for (const std::size_t c : candidates) {
                Amplitude coeff{};
                for (const auto &[i, a] : cols[c].entries) {
                    coeff += std::conj(a) * v[i];
                }
                if (coeff == Amplitude{}) {
                    continue;
                }
                for (const auto &[i, a] : cols[c].entries) {
                    touch(i);
                    v[i] -= coeff * a;
                }
            }
        }
        double norm2 = 0.0;
        for (const std::size_t i : support) {
            norm2 += amp_norm_sq(v[i]);
        }
        if (norm2 > 1e-16) {
            const double inv = 1.0 / std::sqrt(norm2);
            detail::SparseColumn col;
            std::sort(support.begin(), support.end());
            for (const std::size_t i : support) {
                if (v[i] != Amplitude{}) {
                    col.entries.emplace_back(i, v[i] * inv);
                    cols_at[i].push_back(cols.size());
                }
            }
            cols.push_back(std::move(col));
        }
        for (const std::size_t i : support) {
            v[i] = Amplitude{};
            touched[i] = 0;
        }
    }
    if (cols.size() != dim) {
        throw ConsistencyError("preparation_matrix: completion produced " +
                               std::to_string(cols.size()) + " of " +
                               std::to_string(dim) + " columns");
    }

    std::vector<Amplitude> dense(dim * dim);
    for (std::size_t c = 0; c < dim; ++c) {
        for (const auto &[i, a] : cols[c].entries) {
            dense[i * dim + c] = a;
        }
    }
    return {dim, std::move(dense)};
}

} // namespace qgame

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

#include <cstdint>
#include <limits>
#include <string>

#include "errors.hpp"

namespace qgame {

/// Non-negative rational number in lowest terms, backed by 128-bit integers.
/// Large enough for n^n with n <= 25, which covers every exact probability
/// the game exposes.
class Ratio {
  public:
    using Int = unsigned __int128;

    constexpr Ratio() = default;

    constexpr Ratio(Int num, Int den) : num_(num), den_(den) {
        if (den == 0) {
            throw DomainError("Ratio: zero denominator");
        }
        reduce();
    }

    [[nodiscard]] constexpr Int num() const noexcept { return num_; }
    [[nodiscard]] constexpr Int den() const noexcept { return den_; }

    [[nodiscard]] double to_double() const noexcept {
        return static_cast<double>(static_cast<long double>(num_) /
                                   static_cast<long double>(den_));
    }

    /// Multiply by an integer factor; throws on 128-bit overflow.
    [[nodiscard]] constexpr Ratio scaled(std::uint64_t k) const {
        const Int g = gcd(k, den_);
        const Int kk = k / g;
        if (kk != 0 && num_ > std::numeric_limits<Int>::max() / kk) {
            throw CapacityError("Ratio: numerator overflow");
        }
        return Ratio(num_ * kk, den_ / g);
    }

    friend constexpr bool operator==(const Ratio &, const Ratio &) = default;

    [[nodiscard]] std::string str() const {
        return to_string(num_) + "/" + to_string(den_);
    }

    static std::string to_string(Int v) {
        if (v == 0) {
            return "0";
        }
        std::string s;
        while (v != 0) {
            s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
            v /= 10;
        }
        return s;
    }

    static constexpr Int gcd(Int a, Int b) noexcept {
        while (b != 0) {
            const Int t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

  private:
    constexpr void reduce() noexcept {
        const Int g = gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_ = 0;
    Int den_ = 1;
};

/// base^exp with overflow detection.
[[nodiscard]] constexpr Ratio::Int checked_pow(std::uint64_t base,
                                               unsigned exp) {
    Ratio::Int r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<Ratio::Int>::max() / base) {
            throw CapacityError("checked_pow: 128-bit overflow");
        }
        r *= base;
    }
    return r;
}

/// n! with overflow detection.
[[nodiscard]] constexpr Ratio::Int checked_factorial(unsigned n) {
    Ratio::Int r = 1;
    for (unsigned k = 2; k <= n; ++k) {
        if (r > std::numeric_limits<Ratio::Int>::max() / k) {
            throw CapacityError("checked_factorial: 128-bit overflow");
        }
        r *= k;
    }
    return r;
}

} // namespace qgame

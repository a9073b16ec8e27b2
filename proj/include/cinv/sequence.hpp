/*
   Copyright 2026 The cinv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CINV_SEQUENCE_HPP
#define CINV_SEQUENCE_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>

#include "cinv/errors.hpp"
#include "cinv/matrix.hpp"
#include "cinv/rational.hpp"

namespace cinv {

namespace detail {

inline bool is_zero_coeff(const Rational& c) { return c == 0; }
inline bool is_zero_coeff(const Matrix& c) { return c.is_zero(); }

}  // namespace detail

/// A finite combination of impulse sequences 0_i (0_i(k) = [i == k]) and
/// geometric sequences (lambda^k), lambda != 0, with coefficients in Coeff:
///
///   u(k) = sum_i V_i [k == i] + sum_j W_j lambda_j^k
///
/// Terms are kept in maps so the representation is canonical: impulse
/// positions ascend, ratios ascend, zero coefficients are never stored.
/// Impulses span an ideal under the pointwise product, geometric terms a
/// subalgebra in which the ratios multiply.
template <class Coeff>
class BasicSequence {
   public:
    using ImpulseTerms = std::map<std::size_t, Coeff>;
    using GeometricTerms = std::map<Rational, Coeff>;

    /// `zero` fixes the coefficient shape (the zero matrix of the right order).
    explicit BasicSequence(Coeff zero) : zero_(std::move(zero)) {}

    const Coeff& zero_coeff() const noexcept { return zero_; }
    const ImpulseTerms& impulse_terms() const noexcept { return impulse_; }
    const GeometricTerms& geometric_terms() const noexcept { return geometric_; }
    bool is_zero() const noexcept { return impulse_.empty() && geometric_.empty(); }

    BasicSequence& add_impulse(std::size_t i, const Coeff& c) {
        accumulate(impulse_, i, c);
        return *this;
    }

    BasicSequence& add_geometric(const Rational& ratio, const Coeff& c) {
        if (ratio == 0) throw std::domain_error("geometric ratio must be nonzero");
        accumulate(geometric_, ratio, c);
        return *this;
    }

    /// Value at k.
    Coeff operator()(std::size_t k) const {
        Coeff out = zero_;
        if (auto it = impulse_.find(k); it != impulse_.end()) out += it->second;
        for (const auto& [ratio, w] : geometric_) out += w * pow(ratio, static_cast<long>(k));
        return out;
    }

    BasicSequence impulse_part() const {
        BasicSequence out(zero_);
        out.impulse_ = impulse_;
        return out;
    }

    BasicSequence geometric_part() const {
        BasicSequence out(zero_);
        out.geometric_ = geometric_;
        return out;
    }

    BasicSequence& operator+=(const BasicSequence& rhs) {
        require_compatible(rhs);
        for (const auto& [i, v] : rhs.impulse_) add_impulse(i, v);
        for (const auto& [r, w] : rhs.geometric_) add_geometric(r, w);
        return *this;
    }

    BasicSequence& operator-=(const BasicSequence& rhs) {
        require_compatible(rhs);
        for (const auto& [i, v] : rhs.impulse_) add_impulse(i, v * Rational(-1));
        for (const auto& [r, w] : rhs.geometric_) add_geometric(r, w * Rational(-1));
        return *this;
    }

    BasicSequence& operator*=(const Rational& s) {
        if (s == 0) {
            impulse_.clear();
            geometric_.clear();
            return *this;
        }
        for (auto& [i, v] : impulse_) v = v * s;
        for (auto& [r, w] : geometric_) w = w * s;
        return *this;
    }

    friend BasicSequence operator+(BasicSequence a, const BasicSequence& b) { return a += b; }
    friend BasicSequence operator-(BasicSequence a, const BasicSequence& b) { return a -= b; }
    friend BasicSequence operator*(BasicSequence a, const Rational& s) { return a *= s; }

    /// Pointwise product using 0_i 0_j = [i == j] 0_i, 0_i (mu^k) = mu^i 0_i
    /// and (lambda^k)(mu^k) = ((lambda mu)^k).
    friend BasicSequence operator*(const BasicSequence& a, const BasicSequence& b) {
        a.require_compatible(b);
        BasicSequence out(a.zero_);
        for (const auto& [i, v] : a.impulse_) {
            if (auto it = b.impulse_.find(i); it != b.impulse_.end()) out.add_impulse(i, v * it->second);
            for (const auto& [mu, w] : b.geometric_) out.add_impulse(i, (v * w) * pow(mu, static_cast<long>(i)));
        }
        for (const auto& [lambda, w] : a.geometric_) {
            for (const auto& [j, v] : b.impulse_) out.add_impulse(j, (w * v) * pow(lambda, static_cast<long>(j)));
            for (const auto& [mu, w2] : b.geometric_) out.add_geometric(lambda * mu, w * w2);
        }
        return out;
    }

    friend bool operator==(const BasicSequence&, const BasicSequence&) = default;

   private:
    template <class Key>
    void accumulate(std::map<Key, Coeff>& terms, const Key& key, const Coeff& c) {
        auto [it, inserted] = terms.try_emplace(key, zero_);
        it->second += c;
        if (detail::is_zero_coeff(it->second)) terms.erase(it);
    }

    void require_compatible(const BasicSequence& rhs) const {
        if (!(zero_ == rhs.zero_)) throw DimensionError("sequences have different coefficient shapes");
    }

    Coeff zero_;
    ImpulseTerms impulse_;
    GeometricTerms geometric_;
};

using ScalarSequence = BasicSequence<Rational>;
using MatrixSequence = BasicSequence<Matrix>;

inline ScalarSequence scalar_sequence() { return ScalarSequence(Rational(0)); }
inline MatrixSequence matrix_sequence(std::size_t dim) { return MatrixSequence(Matrix::zero(dim)); }

inline Matrix seq_eval(const MatrixSequence& u, std::size_t k) { return u(k); }

}  // namespace cinv

#endif  // CINV_SEQUENCE_HPP

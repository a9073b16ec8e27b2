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

#ifndef CINV_PROPERTIES_HPP
#define CINV_PROPERTIES_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cinv/matrix.hpp"

namespace cinv {

// Fixed seed and size of the random property suite. tests/property_manifest.json
// records the same values.
inline constexpr std::uint64_t kPropertySeed = 20261016;
inline constexpr std::size_t kPropertyCount = 500;
inline constexpr std::size_t kPropertyMaxDim = 5;
inline constexpr int kPropertyEntryBound = 3;

/// Reproducible random square matrices: order uniform in 1..max_dim, entries
/// uniform in [-bound, bound]. Raw mt19937_64 output is reduced directly so
/// the stream is identical on every standard library.
class RandomMatrixSource {
   public:
    explicit RandomMatrixSource(std::uint64_t seed, std::size_t max_dim = kPropertyMaxDim,
                                int bound = kPropertyEntryBound);
    Matrix next();

   private:
    std::mt19937_64 engine_;
    std::size_t max_dim_;
    int bound_;
};

/// Identities checked for every matrix. With p = index(A), x = A_d, v = A^2 x
/// and z = A_c:
enum class Property : std::size_t {
    DrazinRoutesAgree,     // drazin_formula = drazin_euclid
    DrazinAxioms,          // x is a {1^p,3,5}-inverse of A
    CompleteAxioms,        // z is a {1^p,4,5}-inverse of A
    CompleteConstruction,  // z = A + x - v
    DrazinOfDrazin,        // drazin(x) = v
    VIsDrazinOfX,          // v is the {1^p,3,5}-inverse of x
    VPowersMatchA,         // v^m = A^m, p <= m <= p+4
    PowerIdentity,         // z^k = A^k + x^k - v^k, k <= 6
    PowersAreComplete,     // z^k is a {1^p,4,5}-inverse of A^k, k <= 6
    PowersStabilize,       // z^m = x^m, p <= m <= p+4
    VIsDrazinOfZ,          // v is a {1^p,3,5}-inverse of z
    VIsCompleteOfX,        // v is a {1^p,4,5}-inverse of x
    AIsCompleteOfZ,        // A is a {1^p,4,5}-inverse of z
    Invertibility,         // A invertible <=> z invertible, then z = x = A^-1, v = A
    PolynomialClosure,     // z is a polynomial in A, x is a polynomial in z
    CoreNilpotent,         // CN = NC = 0, N^p = 0, C + N = A, rank C = rank A^p
    SeqRoundTrip,          // pcf(A)(k) = A^k, k <= 12          (eligible only)
    SeqComplete,           // complete_seq(A)(k) = z^k, k <= 12  (eligible only)
    SeqDrazin,             // drazin_seq(A)(k) = x^k for k >= 1, I at k = 0 (eligible only)
    SeqProofIdentities,    // theta_0 twice = geometric part; A + A_D - (A_D)_D = theta_1(A) (eligible only)
    Count
};

inline constexpr std::size_t kPropertyKinds = static_cast<std::size_t>(Property::Count);

std::string_view name(Property p);

struct MatrixAudit {
    std::array<std::optional<bool>, kPropertyKinds> results{};  ///< unset when not applicable
    bool eligible = false;                                       ///< closed form exists
    std::string ineligible_reason;

    bool passed() const;
};

MatrixAudit audit(const Matrix& a);

struct PropertyTally {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

struct SuiteSummary {
    std::uint64_t seed = 0;
    std::size_t count = 0;
    std::size_t eligible = 0;
    std::array<PropertyTally, kPropertyKinds> tallies{};
    std::vector<std::pair<std::size_t, Property>> failures;  ///< (sample number, property)

    bool passed() const { return failures.empty(); }
};

SuiteSummary run_property_suite(std::uint64_t seed = kPropertySeed, std::size_t count = kPropertyCount);

}  // namespace cinv

#endif  // CINV_PROPERTIES_HPP

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toric/linalg.hpp"

namespace toric {

/// Default work allowance, counted in codeword coordinates evaluated.
inline constexpr std::uint64_t kDefaultDistanceBudget = 100'000'000;
/// Above this many coordinate evaluations the information-set search is
/// tried first even when exhaustive enumeration is affordable.
inline constexpr std::uint64_t kExhaustivePreferenceLimit = 50'000'000;

struct DistanceOptions {
    std::uint64_t budget = kDefaultDistanceBudget;
    /// Caller asserts that the code has a transitive group of monomial
    /// automorphisms, so some minimum-weight codeword is nonzero at
    /// coordinate 0. Enables the parity-check meet-in-the-middle search.
    bool transitive = false;
    /// Use the plain scalar-class enumeration whenever it costs at most
    /// kExhaustivePreferenceLimit and fits the budget.
    bool prefer_exhaustive = true;
};

struct DistanceResult {
    std::uint64_t distance = 0;  // exact value, or the best upper bound when !exact
    bool exact = false;
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    std::vector<Elem> message;   // first nonzero entry 1; empty when no witness
    std::vector<Elem> codeword;
    std::uint64_t examined = 0;  // coordinates evaluated
    std::string method;          // "exhaustive", "info-sets", "info-sets+mitm"
};

/// Number of scalar classes (q^k - 1)/(q - 1), saturating.
std::uint64_t scalar_classes(std::uint64_t q, std::uint64_t k) noexcept;

/// One message per scalar class (first nonzero coordinate 1), in increasing
/// order of the leading position and then lexicographically by code. Zero
/// words from dependent rows are skipped. Throws Errc::budget_exceeded if
/// classes * length exceeds the budget.
DistanceResult minimum_distance_exhaustive(const Field& f, const Matrix& generator,
                                           std::uint64_t budget = kDefaultDistanceBudget);

/// Exact minimum distance by exhaustive enumeration when affordable and
/// otherwise by information-set enumeration (Brouwer-Zimmermann bound),
/// combined with a syndrome meet-in-the-middle search in transitive mode.
/// When the budget runs out the result is bound-only (exact == false) with
/// upper = min(Singleton bound, lightest codeword found).
DistanceResult minimum_distance(const Field& f, const Matrix& generator, const DistanceOptions& opts = {});

}  // namespace toric

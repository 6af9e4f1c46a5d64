#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dlinv/check.hpp"
#include "dlinv/rational.hpp"

namespace dlinv {

struct VerifyOptions {
    unsigned order = 8;          ///< symbolic expansion order
    unsigned numeric_order = 12; ///< order for randomized numeric runs
    unsigned weight = 6;         ///< max partition weight for the R identity
    unsigned samples = 20;       ///< random specializations per check
    unsigned hankel_count = 5;   ///< symbolic Hankel size for the continuous Layman check
    unsigned group_order = 5;    ///< order for the two symbolic group laws
    std::uint64_t seed = 0;
};

struct RegisteredCheck {
    std::string name;
    std::string summary;
    std::function<CheckResult(const VerifyOptions&)> run;
};

/// Number of identities the battery is documented to cover.
inline constexpr std::size_t kRegisteredCheckCount = 13;

/// All identity checks, sorted by name.
const std::vector<RegisteredCheck>& check_registry();
/// nullptr when no check has that name.
const RegisteredCheck* find_check(std::string_view name);

/// Deterministic generators shared by the battery and the tests.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    /// p/q with p in [-9, 9], q in [1, 9].
    Rational rational() { return Rational(integer(-9, 9), integer(1, 9)); }
    std::vector<Rational> integers(std::size_t n, long lo, long hi);
    std::vector<Rational> rationals(std::size_t n);

private:
    std::mt19937_64 rng_;
};

} // namespace dlinv

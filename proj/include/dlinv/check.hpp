#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dlinv/mpoly.hpp"

namespace dlinv {

/// Outcome of an identity check: ok, or the first observed mismatch.
struct CheckResult {
    bool ok = true;
    std::string detail;

    static CheckResult pass(std::string note = {}) { return {true, std::move(note)}; }
    static CheckResult fail(std::string why) { return {false, std::move(why)}; }

    explicit operator bool() const noexcept { return ok; }
};

/// Entrywise comparison; on mismatch reports `label[n]` plus the first differing monomial.
CheckResult compare_entries(const std::vector<MPoly>& lhs, const std::vector<MPoly>& rhs, const std::string& label);

} // namespace dlinv

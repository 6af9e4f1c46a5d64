#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dlinv/interpolate.hpp"
#include "dlinv/mpoly.hpp"
#include "dlinv/rational.hpp"

namespace dlinv {

/// Integer partition as a multiplicity vector: multiplicity(j) parts of size j.
/// Trailing zero multiplicities are trimmed; the empty vector is the partition of 0.
class Partition {
public:
    Partition() = default;
    /// mult[0] is the number of parts of size 1, and so on.
    explicit Partition(std::vector<unsigned> mult);

    /// Parses `1^2.3^1` (a bare `3` means `3^1`) or `()`.
    static Partition parse(std::string_view text);

    const std::vector<unsigned>& multiplicities() const noexcept { return mult_; }
    unsigned multiplicity(unsigned part) const noexcept {
        return part >= 1 && part <= mult_.size() ? mult_[part - 1] : 0;
    }
    /// Largest part size with a nonzero multiplicity (0 for the empty partition).
    unsigned largest_part() const noexcept { return static_cast<unsigned>(mult_.size()); }
    /// sum_j j * nu_j
    unsigned weight() const noexcept { return weight_; }
    /// sum_j nu_j
    unsigned part_count() const noexcept { return part_count_; }
    bool empty() const noexcept { return mult_.empty(); }

    /// The partition with one part of size `part` removed (multiplicity must be positive).
    Partition remove_part(unsigned part) const;

    /// prod_j nu_j!
    Rational multiplicity_factorials() const;

    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.mult_ == b.mult_; }

private:
    std::vector<unsigned> mult_;
    unsigned weight_ = 0;
    unsigned part_count_ = 0;
};

/// Every partition of m, multiplicity vectors in descending lexicographic
/// order. Results are memoized per m; safe for concurrent callers.
const std::vector<Partition>& partitions(unsigned m);

/// Extended multinomial (n choose nu) = n (n-1) ... (n-p+1) / prod nu_j!,
/// p the part count. Polynomial in n; zero for naturals n < p.
Rational multinomial_ext(const Rational& n, const Partition& nu);
MPoly multinomial_ext(const MPoly& n, const Partition& nu);

/// prod_j base[j]^nu_j, where base[j] is the value for parts of size j
/// (base[0] is ignored).
MPoly partition_power(const std::vector<MPoly>& base, const Partition& nu);

/// R_nu(x) = (x + 1 - weight) * binom(x, p-1) * (p-1)! / prod nu_j!, with R_() = 1.
MPoly r_poly(const Partition& nu, std::string_view var = "x");

/// Checks R_nu(x+1) - R_nu(x) = sum_{j : nu_j > 0} R_{nu minus one part j}(x) exactly.
bool r_difference_check(const Partition& nu);

} // namespace dlinv

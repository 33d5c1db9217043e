#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "kcenter/errors.hpp"

namespace kcenter {

/// A decimal literal held exactly as mantissa / 10^frac_digits.
/// Trailing fractional zeros are normalized away on parse, so "1.50" and
/// "1.5" are the same value with frac_digits = 1.
struct Decimal {
    static constexpr int kMaxFracDigits = 6;

    std::int64_t mantissa = 0;
    int frac_digits = 0;

    /// Parses "[+]digits[.digits]". Throws ValidationError on malformed text
    /// or more than kMaxFracDigits fractional digits.
    static Decimal parse(std::string_view text);

    static Decimal from_int(std::int64_t value) { return Decimal{value, 0}; }

    bool positive() const { return mantissa > 0; }
};

/// Length unit bookkeeping for a graph.
///
/// Edge lengths are stored as integers scaled by 10^frac_digits. Distances
/// (and every scale value r derived from them) carry one extra factor of two
/// so that half-integral candidate scales r = dist/2 stay integral. All
/// threshold comparisons downstream are therefore exact integer comparisons.
class LengthScale {
public:
    explicit LengthScale(int frac_digits = 0);

    int frac_digits() const { return frac_digits_; }
    std::int64_t edge_factor() const { return edge_factor_; }       // 10^f
    std::int64_t dist_factor() const { return 2 * edge_factor_; }   // 2*10^f

    /// Edge units of a decimal value; throws if it is not exactly
    /// representable at this scale.
    std::int64_t edge_units(const Decimal& d) const;

    /// Distance units (doubled edge units) of a decimal value.
    std::int64_t dist_units(const Decimal& d) const;
    std::int64_t dist_units(std::string_view decimal_text) const;

    /// Exact decimal rendering of a value in distance units.
    std::string format_dist(std::int64_t dist) const;
    /// Exact decimal rendering of a value in edge units.
    std::string format_edge(std::int64_t len) const;

private:
    int frac_digits_ = 0;
    std::int64_t edge_factor_ = 1;
};

/// Renders mantissa / 10^frac_digits exactly, trimming trailing zeros.
std::string format_decimal(std::int64_t mantissa, int frac_digits);

} // namespace kcenter

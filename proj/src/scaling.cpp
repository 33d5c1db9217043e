#include "kcenter/scaling.hpp"

#include <cctype>
#include <cstdlib>

namespace kcenter {

Decimal Decimal::parse(std::string_view text) {
    if (text.empty())
        throw ValidationError("empty decimal literal");
    std::size_t pos = 0;
    if (text[pos] == '+')
        ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ValidationError("malformed decimal literal: '" + std::string(text) + "'");

    std::int64_t mantissa = 0;
    int frac = 0;
    bool seen_dot = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c == '.') {
            if (seen_dot)
                throw ValidationError("malformed decimal literal: '" + std::string(text) + "'");
            seen_dot = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ValidationError("malformed decimal literal: '" + std::string(text) + "'");
        if (mantissa > (INT64_MAX - 9) / 10)
            throw ValidationError("decimal literal out of range: '" + std::string(text) + "'");
        mantissa = mantissa * 10 + (c - '0');
        if (seen_dot)
            ++frac;
        if (frac > kMaxFracDigits)
            throw ValidationError("more than " + std::to_string(kMaxFracDigits) +
                                  " fractional digits: '" + std::string(text) + "'");
    }
    if (seen_dot && frac == 0)
        throw ValidationError("malformed decimal literal: '" + std::string(text) + "'");

    while (frac > 0 && mantissa % 10 == 0) {
        mantissa /= 10;
        --frac;
    }
    return Decimal{mantissa, frac};
}

namespace {

std::int64_t pow10_i64(int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i)
        r *= 10;
    return r;
}

} // namespace

LengthScale::LengthScale(int frac_digits) : frac_digits_(frac_digits) {
    if (frac_digits < 0 || frac_digits > Decimal::kMaxFracDigits)
        throw ValidationError("unsupported length scale: 10^-" + std::to_string(frac_digits));
    edge_factor_ = pow10_i64(frac_digits);
}

std::int64_t LengthScale::edge_units(const Decimal& d) const {
    if (d.frac_digits > frac_digits_)
        throw ValidationError("value " + format_decimal(d.mantissa, d.frac_digits) +
                              " is not representable at scale 10^-" + std::to_string(frac_digits_));
    return d.mantissa * pow10_i64(frac_digits_ - d.frac_digits);
}

std::int64_t LengthScale::dist_units(const Decimal& d) const {
    // The doubled unit admits one extra half-digit: at 10^-f precision the
    // distance grid is multiples of 1/(2*10^f), so e.g. "0.5" is unit 1 on
    // an integer-length graph.
    if (d.frac_digits <= frac_digits_)
        return 2 * d.mantissa * pow10_i64(frac_digits_ - d.frac_digits);
    if (d.frac_digits == frac_digits_ + 1 && d.mantissa % 5 == 0)
        return d.mantissa / 5;
    throw ValidationError("value " + format_decimal(d.mantissa, d.frac_digits) +
                          " is not on the distance grid of scale 10^-" +
                          std::to_string(frac_digits_));
}

std::int64_t LengthScale::dist_units(std::string_view decimal_text) const {
    return dist_units(Decimal::parse(decimal_text));
}

std::string LengthScale::format_dist(std::int64_t dist) const {
    // dist / (2*10^f) == dist*5 / 10^(f+1), rendered exactly.
    return format_decimal(dist * 5, frac_digits_ + 1);
}

std::string LengthScale::format_edge(std::int64_t len) const {
    return format_decimal(len, frac_digits_);
}

std::string format_decimal(std::int64_t mantissa, int frac_digits) {
    bool neg = mantissa < 0;
    std::uint64_t mag = neg ? -static_cast<std::uint64_t>(mantissa) : static_cast<std::uint64_t>(mantissa);
    std::string digits = std::to_string(mag);
    std::string out;
    if (frac_digits == 0) {
        out = digits;
    } else {
        if (static_cast<int>(digits.size()) <= frac_digits)
            digits.insert(0, frac_digits + 1 - digits.size(), '0');
        out = digits.substr(0, digits.size() - frac_digits);
        std::string frac = digits.substr(digits.size() - frac_digits);
        while (!frac.empty() && frac.back() == '0')
            frac.pop_back();
        if (!frac.empty())
            out += "." + frac;
    }
    if (neg)
        out.insert(out.begin(), '-');
    return out;
}

} // namespace kcenter

#ifndef HDLINE_EXT_RATIONAL_HPP
#define HDLINE_EXT_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hdline {

// Exact nonnegative rational number, extended with +infinity.
// Finite values are kept canonical (lowest terms, positive denominator).
class ExtRational {
public:
    ExtRational() = default;
    ExtRational(std::int64_t value);
    ExtRational(std::int64_t numerator, std::int64_t denominator);
    explicit ExtRational(mpq_class value);
    explicit ExtRational(const mpz_class& value);

    static ExtRational infinity();

    // Accepts "p", "p/q" and "inf" (surrounding blanks ignored).
    static ExtRational parse(std::string_view text);

    // Exact value of a finite, nonnegative double.
    static ExtRational from_double(double value);

    bool is_infinite() const noexcept { return infinite_; }
    bool is_finite() const noexcept { return !infinite_; }
    bool is_zero() const noexcept { return !infinite_ && sgn(value_) == 0; }
    bool is_integer() const noexcept { return !infinite_ && value_.get_den() == 1; }

    // Finite value; throws for infinity.
    const mpq_class& value() const;
    mpz_class numerator() const;
    mpz_class denominator() const;

    double to_double() const;

    // "p/q" in lowest terms, "p" for integers, "inf" for infinity.
    std::string to_string() const;

    ExtRational& operator+=(const ExtRational& rhs);
    ExtRational& operator*=(const ExtRational& rhs);

    friend ExtRational operator+(ExtRational lhs, const ExtRational& rhs) { return lhs += rhs; }
    friend ExtRational operator*(ExtRational lhs, const ExtRational& rhs) { return lhs *= rhs; }
    // Division by a finite positive value; infinity stays infinity.
    friend ExtRational operator/(const ExtRational& lhs, const ExtRational& rhs);

    friend bool operator==(const ExtRational& lhs, const ExtRational& rhs);
    friend std::strong_ordering operator<=>(const ExtRational& lhs, const ExtRational& rhs);

private:
    bool infinite_ = false;
    mpq_class value_{0};
};

const ExtRational& min(const ExtRational& a, const ExtRational& b);
const ExtRational& max(const ExtRational& a, const ExtRational& b);

// Half the harmonic mean, x*y/(x+y).
// hm(x, inf) = x, hm(inf, inf) = inf, hm(x, 0) = 0.
ExtRational harmonic_half(const ExtRational& x, const ExtRational& y);

std::ostream& operator<<(std::ostream& os, const ExtRational& value);

} // namespace hdline

#endif

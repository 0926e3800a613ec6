#include "hdline/ext_rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "hdline/error.hpp"

namespace hdline {

namespace {

mpz_class to_mpz(std::int64_t v)
{
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return mpz_class(static_cast<long>(v));
}

void require_nonnegative(const mpq_class& v)
{
    if (sgn(v) < 0) {
        throw Error(ErrorCode::InvalidArgument, "negative value " + v.get_str());
    }
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

} // namespace

ExtRational::ExtRational(std::int64_t value)
{
    if (value < 0) throw Error(ErrorCode::InvalidArgument, "negative value " + std::to_string(value));
    value_ = mpq_class(to_mpz(value));
}

ExtRational::ExtRational(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator <= 0 || numerator < 0) {
        throw Error(ErrorCode::InvalidArgument,
                    "bad rational " + std::to_string(numerator) + "/" + std::to_string(denominator));
    }
    value_ = mpq_class(to_mpz(numerator), to_mpz(denominator));
    value_.canonicalize();
}

ExtRational::ExtRational(mpq_class value) : value_(std::move(value))
{
    value_.canonicalize();
    require_nonnegative(value_);
}

ExtRational::ExtRational(const mpz_class& value) : value_(value)
{
    require_nonnegative(value_);
}

ExtRational ExtRational::infinity()
{
    ExtRational out;
    out.infinite_ = true;
    return out;
}

ExtRational ExtRational::parse(std::string_view text)
{
    const std::string_view s = trim(text);
    if (s == "inf" || s == "Inf" || s == "INF" || s == "infinity") return infinity();
    const auto slash = s.find('/');
    const std::string_view num = trim(s.substr(0, slash));
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
    if (!all_digits(num) || !all_digits(den)) {
        throw Error(ErrorCode::ParseError, "not a nonnegative rational: '" + std::string(text) + "'");
    }
    mpz_class p{std::string(num)}, q{std::string(den)};
    if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    mpq_class v(p, q);
    v.canonicalize();
    return ExtRational(std::move(v));
}

ExtRational ExtRational::from_double(double value)
{
    if (!std::isfinite(value) || value < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "expected a finite nonnegative double");
    }
    // mpq_set_d is exact for finite doubles.
    return ExtRational(mpq_class(value));
}

const mpq_class& ExtRational::value() const
{
    if (infinite_) throw Error(ErrorCode::InvalidArgument, "value() of infinity");
    return value_;
}

mpz_class ExtRational::numerator() const { return value().get_num(); }
mpz_class ExtRational::denominator() const { return value().get_den(); }

double ExtRational::to_double() const
{
    if (infinite_) return HUGE_VAL;
    return value_.get_d();
}

std::string ExtRational::to_string() const
{
    if (infinite_) return "inf";
    return value_.get_str();
}

ExtRational& ExtRational::operator+=(const ExtRational& rhs)
{
    if (infinite_ || rhs.infinite_) {
        infinite_ = true;
        value_ = 0;
    } else {
        value_ += rhs.value_;
    }
    return *this;
}

ExtRational& ExtRational::operator*=(const ExtRational& rhs)
{
    if (infinite_ || rhs.infinite_) {
        if (is_zero() || rhs.is_zero()) {
            throw Error(ErrorCode::InvalidArgument, "0 * inf is undefined");
        }
        infinite_ = true;
        value_ = 0;
    } else {
        value_ *= rhs.value_;
    }
    return *this;
}

ExtRational operator/(const ExtRational& lhs, const ExtRational& rhs)
{
    if (rhs.infinite_ || rhs.is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "division by " + rhs.to_string());
    }
    if (lhs.infinite_) return lhs;
    return ExtRational(mpq_class(lhs.value_ / rhs.value_));
}

bool operator==(const ExtRational& lhs, const ExtRational& rhs)
{
    if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ == rhs.infinite_;
    return lhs.value_ == rhs.value_;
}

std::strong_ordering operator<=>(const ExtRational& lhs, const ExtRational& rhs)
{
    if (lhs.infinite_ || rhs.infinite_) {
        return static_cast<int>(lhs.infinite_) <=> static_cast<int>(rhs.infinite_);
    }
    const int c = cmp(lhs.value_, rhs.value_);
    return c <=> 0;
}

const ExtRational& min(const ExtRational& a, const ExtRational& b) { return b < a ? b : a; }
const ExtRational& max(const ExtRational& a, const ExtRational& b) { return a < b ? b : a; }

ExtRational harmonic_half(const ExtRational& x, const ExtRational& y)
{
    if (x.is_infinite()) return y;
    if (y.is_infinite()) return x;
    if (x.is_zero() || y.is_zero()) return ExtRational(0);
    return ExtRational(mpq_class(x.value() * y.value() / (x.value() + y.value())));
}

std::ostream& operator<<(std::ostream& os, const ExtRational& value)
{
    return os << value.to_string();
}

} // namespace hdline

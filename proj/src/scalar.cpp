#include "hbraces/scalar.hpp"

#include <cctype>
#include <ostream>

#include "hbraces/error.hpp"

namespace hbraces {

Scalar::Scalar(long numerator, long denominator)
{
    if (denominator == 0)
        throw ContractViolation("rational with zero denominator");
    value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
    value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Scalar Scalar::parse(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class d = parse_integer(den);
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Scalar(mpq_class(parse_integer(num), d));
}

Scalar Scalar::factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Scalar(mpq_class(f));
}

bool Scalar::is_integer() const { return value_.get_den() == 1; }

std::string Scalar::numerator_string() const { return value_.get_num().get_str(); }
std::string Scalar::denominator_string() const { return value_.get_den().get_str(); }

std::string Scalar::to_string() const
{
    if (is_integer())
        return numerator_string();
    return numerator_string() + "/" + denominator_string();
}

Scalar& Scalar::operator+=(const Scalar& other)
{
    value_ += other.value_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other)
{
    value_ -= other.value_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& other)
{
    value_ *= other.value_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other)
{
    if (other.is_zero())
        throw ContractViolation("division by zero");
    value_ /= other.value_;
    return *this;
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b)
{
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& out, const Scalar& s) { return out << s.to_string(); }

} // namespace hbraces

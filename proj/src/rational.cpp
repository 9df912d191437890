#include "betticone/rational.hpp"

#include <cctype>

#include "betticone/error.hpp"

namespace betticone {

Rational make_rational(long num, long den) {
    if (den == 0)
        throw BettiError(errc::invalid_argument, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty())
        return false;
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size())
        return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!is_integer_token(num))
        throw BettiError(errc::syntax_error, "malformed rational '" + text + "'");
    if (slash == std::string::npos)
        return Rational(Integer(num));
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(den) || den[0] == '-')
        throw BettiError(errc::syntax_error, "malformed rational '" + text + "'");
    Integer d(den);
    if (d == 0)
        throw BettiError(errc::syntax_error, "zero denominator in '" + text + "'");
    Rational r(Integer(num), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer int_pow(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

double approx(const Rational& value) { return value.get_d(); }

}  // namespace betticone

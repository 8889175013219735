#include "symrep/types.hpp"

#include <cmath>
#include <stdexcept>

namespace symrep {

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& x)
{
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

Rational parse_decimal(std::string_view text)
{
    std::string s(text);
    long exponent = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        exponent = std::stol(s.substr(epos + 1));
        s.resize(epos);
    }
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    auto dot = s.find('.');
    std::string digits = s;
    if (dot != std::string::npos) {
        digits = s.substr(0, dot) + s.substr(dot + 1);
        exponent -= static_cast<long>(s.size() - dot - 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("not a number: " + std::string(text));
    Rational r{BigInt(digits)};
    BigInt ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    if (exponent >= 0)
        r *= ten_pow;
    else
        r /= ten_pow;
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    if (text.empty())
        throw std::invalid_argument("empty rational");
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return parse_decimal(text);
    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator: " + std::string(text));
    Rational r = num / den;
    r.canonicalize();
    return r;
}

Rational rational_from_double(double x)
{
    if (!std::isfinite(x))
        throw std::invalid_argument("non-finite value");
    Rational exact(x);
    // continued fraction convergents
    constexpr long max_den = 1L << 20;
    BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    Rational rest = exact;
    for (int iter = 0; iter < 64; ++iter) {
        BigInt a;
        mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
        BigInt h2 = a * h1 + h0;
        BigInt k2 = a * k1 + k0;
        if (k2 > max_den)
            break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        Rational candidate(h1, k1);
        candidate.canonicalize();
        if (std::abs(Rational(candidate - exact).get_d()) <= 1e-12)
            return candidate;
        Rational frac = rest - a;
        if (frac == 0)
            break;
        rest = 1 / frac;
    }
    return exact;
}

BigInt factorial(long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt falling_factorial(long n, long k)
{
    if (k < 0)
        throw std::invalid_argument("negative falling factorial order");
    BigInt r = 1;
    for (long i = 0; i < k; ++i)
        r *= (n - i);
    return r;
}

} // namespace symrep

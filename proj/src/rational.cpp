#include "subideal/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace subideal {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// z = mantissa * 2^exp, mantissa in [0.5, 1) carrying the top 64 bits of z.
long double mantissa_2exp(const BigInt& z, long& exp)
{
    const auto bits = static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
    BigInt top;
    if (bits > 64)
        mpz_tdiv_q_2exp(top.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(bits - 64));
    else
        top = z;
    const long shift = bits > 64 ? bits - 64 : 0;
    // top < 2^64 fits an unsigned long on LP64
    const long double t = static_cast<long double>(mpz_get_ui(top.get_mpz_t()));
    exp = bits;
    return std::ldexp(t, static_cast<int>(shift - bits));
}

long double log_integer(const BigInt& z)
{
    long exp = 0;
    const long double m = mantissa_2exp(z, exp);
    return std::log(m) + static_cast<long double>(exp) * std::log(2.0L);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    if (text.empty()) throw std::invalid_argument("empty number");

    bool negative = false;
    std::string_view body = text;
    if (body.front() == '-' || body.front() == '+') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        BigInt d(std::string(den), 10);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        value = Rational(BigInt(std::string(num), 10), d);
        value.canonicalize();
    } else {
        // decimal with optional fraction and exponent
        std::string_view mant = body;
        long exponent = 0;
        if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
            mant = body.substr(0, e);
            auto ex = body.substr(e + 1);
            bool neg_exp = false;
            if (!ex.empty() && (ex.front() == '-' || ex.front() == '+')) {
                neg_exp = ex.front() == '-';
                ex.remove_prefix(1);
            }
            if (!all_digits(ex) || ex.size() > 6)
                throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
            exponent = std::stol(std::string(ex));
            if (neg_exp) exponent = -exponent;
        }
        std::string_view ip = mant, fp;
        if (auto dot = mant.find('.'); dot != std::string_view::npos) {
            ip = mant.substr(0, dot);
            fp = mant.substr(dot + 1);
        }
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp)))
            throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        BigInt digits(std::string(ip) + std::string(fp), 10);
        exponent -= static_cast<long>(fp.size());
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
        value = exponent >= 0 ? Rational(digits * scale) : Rational(digits, scale);
        value.canonicalize();
    }
    return negative ? Rational(-value) : value;
}

std::string render_rational(const Rational& value)
{
    Rational r = value;
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool rational_sqrt(const Rational& r, Rational& root)
{
    if (sgn(r) < 0) return false;
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t()))
        return false;
    BigInt n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
    root = Rational(n, d);
    root.canonicalize();
    return true;
}

long double log_rational(const Rational& r)
{
    if (sgn(r) <= 0) throw std::domain_error("log of non-positive rational");
    return log_integer(r.get_num()) - log_integer(r.get_den());
}

long double to_long_double(const Rational& r)
{
    if (sgn(r) == 0) return 0.0L;
    long en = 0, ed = 0;
    const long double mn = mantissa_2exp(abs(r.get_num()), en);
    const long double md = mantissa_2exp(r.get_den(), ed);
    const long e = en - ed;
    long double mag;
    if (e > 16000)
        mag = HUGE_VALL;
    else if (e < -16500)
        mag = 0.0L;
    else
        mag = std::ldexp(mn / md, static_cast<int>(e));
    return sgn(r) < 0 ? -mag : mag;
}

} // namespace subideal

#include "retrieval/rational.hpp"

#include <cstddef>

#include "retrieval/errors.hpp"

namespace retrieval {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

Rational harmonic(std::uint64_t r) {
    Rational h = 0;
    for (std::uint64_t i = 1; i <= r; ++i) h += Rational(1, i);
    return h;
}

std::string to_fraction_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational from_fraction_string(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s));
        const BigInt num(s.substr(0, slash));
        const BigInt den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::exception&) {
        throw ParseError("cannot parse rational: " + s);
    }
}

namespace {

BigInt pow10(int e) {
    BigInt p = 1;
    for (int i = 0; i < e; ++i) p *= 10;
    return p;
}

int decimal_digits(const BigInt& v) {
    return static_cast<int>(v.str().size());
}

}  // namespace

std::string to_decimal_string(const Rational& r, int significant) {
    if (significant < 1) significant = 1;
    BigInt a = boost::multiprecision::numerator(r);
    const BigInt b = boost::multiprecision::denominator(r);
    if (a == 0) return "0";
    const bool negative = a < 0;
    if (negative) a = -a;

    // Exponent E with a/b in [10^E, 10^(E+1)).
    int e = decimal_digits(a) - decimal_digits(b);
    auto less_than_pow = [&](int exp) {
        // a/b < 10^exp ?
        if (exp >= 0) return a < b * pow10(exp);
        return a * pow10(-exp) < b;
    };
    if (less_than_pow(e)) --e;
    while (!less_than_pow(e + 1)) ++e;

    // significant digits with round-half-even
    const int shift = significant - 1 - e;
    BigInt num2 = a, den2 = b;
    if (shift >= 0)
        num2 *= pow10(shift);
    else
        den2 *= pow10(-shift);
    BigInt q = num2 / den2;
    const BigInt rem = num2 % den2;
    const BigInt twice = rem * 2;
    if (twice > den2 || (twice == den2 && (q & 1) == 1)) ++q;
    if (q == pow10(significant)) {
        q = pow10(significant - 1);
        ++e;
    }

    std::string digits = q.str();
    // trim trailing zeros (keep the leading digit)
    std::size_t last = digits.find_last_not_of('0');
    digits.erase(last + 1);

    std::string out;
    if (e >= 0 && e < significant + 4) {
        const std::size_t int_len = static_cast<std::size_t>(e) + 1;
        std::string ip = digits.substr(0, std::min(int_len, digits.size()));
        while (ip.size() < int_len) ip += '0';
        out = ip;
        if (digits.size() > int_len) out += "." + digits.substr(int_len);
    } else if (e < 0 && e >= -4) {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    } else {
        out = digits.substr(0, 1);
        if (digits.size() > 1) out += "." + digits.substr(1);
        out += "e" + std::to_string(e);
    }
    return negative ? "-" + out : out;
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

}  // namespace retrieval

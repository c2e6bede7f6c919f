#include "covering/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace covering {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational literal");

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    const auto slash = text.find('/');
    const auto dot = text.find('.');
    if (slash != std::string_view::npos && dot != std::string_view::npos)
        throw std::invalid_argument("rational literal mixes '/' and '.'");

    Rational value;
    if (slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
        BigInt d{std::string(den)};
        if (d == 0) throw std::invalid_argument("zero denominator in rational literal");
        value = Rational(BigInt{std::string(num)}, d);
    } else if (dot != std::string_view::npos) {
        const auto ip = text.substr(0, dot);
        const auto fp = text.substr(dot + 1);
        if (!all_digits(ip) || !all_digits(fp))
            throw std::invalid_argument("malformed decimal literal '" + std::string(text) + "'");
        const BigInt scale = pow(BigInt(10), static_cast<unsigned>(fp.size()));
        const BigInt n = BigInt{std::string(ip)} * scale + BigInt{std::string(fp)};
        value = Rational(n, scale);
    } else {
        if (!all_digits(text))
            throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
        value = Rational(BigInt{std::string(text)});
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.str(); }

BigInt rational_floor(const Rational& value) {
    const BigInt num = numerator(value);
    const BigInt den = denominator(value);
    if (num >= 0) return num / den;
    return -((-num + den - 1) / den);
}

BigInt rational_ceil(const Rational& value) { return -rational_floor(-value); }

Rational rational_pow(const Rational& base, long exp) {
    if (base == 0) throw std::invalid_argument("zero base in rational_pow");
    const unsigned mag = static_cast<unsigned>(exp < 0 ? -exp : exp);
    const Rational p(pow(numerator(base), mag), pow(denominator(base), mag));
    if (exp >= 0) return p;
    return Rational(1) / p;
}

long least_power_at_least(const Rational& base, const Rational& value) {
    if (!(base > 1)) throw std::invalid_argument("base must exceed 1");
    if (!(value > 0)) throw std::invalid_argument("value must be positive");
    long e = 0;
    Rational p(1);
    if (value > 1) {
        while (p < value) {
            p *= base;
            ++e;
        }
    } else {
        while (true) {
            Rational next = p / base;
            if (next < value) break;
            p = next;
            --e;
        }
    }
    return e;
}

Rational approx_sqrt(const Rational& value) {
    if (value < 0) throw std::invalid_argument("negative value in approx_sqrt");
    if (value == 0) return Rational(0);
    const BigInt p = numerator(value);
    const BigInt q = denominator(value);
    BigInt n = p * q;
    // Scale so the integer sqrt carries at least 20 significant bits.
    long shift = 0;
    const long bits = static_cast<long>(msb(n)) + 1;
    if (bits < 42) shift = (42 - bits + 1) / 2 + 1;
    const BigInt shifted = n << (2 * shift);
    const BigInt root = sqrt(shifted);
    return Rational(root, BigInt(q << shift));
}

}  // namespace covering

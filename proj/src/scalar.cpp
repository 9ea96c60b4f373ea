#include "ncshift/scalar.hpp"

#include <stdexcept>

namespace ncshift {

namespace mp = boost::multiprecision;

namespace {

mp::cpp_int parse_integer(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
    if (pos == text.size()) throw std::invalid_argument("empty integer");
    mp::cpp_int value = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9') throw std::invalid_argument("bad digit in rational '" + std::string(text) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? mp::cpp_int(-value) : value;
}

std::optional<mp::cpp_int> exact_isqrt(const mp::cpp_int& x) {
    if (x < 0) return std::nullopt;
    mp::cpp_int r = mp::sqrt(x);
    if (r * r != x) return std::nullopt;
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    mp::cpp_int den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(parse_integer(text.substr(0, slash)), den);
}

std::string to_string(const Rational& r) {
    if (mp::denominator(r) == 1) return mp::numerator(r).str();
    return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::optional<Rational> exact_sqrt(const Rational& r) {
    auto num = exact_isqrt(mp::numerator(r));
    auto den = exact_isqrt(mp::denominator(r));
    if (!num || !den) return std::nullopt;
    return Rational(*num, *den);
}

std::optional<Rational> exact_modulus(const ComplexRational& z) { return exact_sqrt(norm_squared(z)); }

std::string to_string(const ComplexRational& z) {
    if (z.im == 0) return to_string(z.re);
    return to_string(z.re) + (z.im < 0 ? "-" : "+") + to_string(z.im < 0 ? Rational(-z.im) : z.im) + "i";
}

}  // namespace ncshift

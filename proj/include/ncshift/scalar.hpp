#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncshift {

using Rational = boost::multiprecision::cpp_rational;

// "p/q", "p", "-p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

// Exact square root when both numerator and denominator are perfect squares.
std::optional<Rational> exact_sqrt(const Rational& r);

struct ComplexRational {
    Rational re;
    Rational im;

    friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
};

inline ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline ComplexRational conj(const ComplexRational& z) { return {z.re, -z.im}; }
inline Rational norm_squared(const ComplexRational& z) { return z.re * z.re + z.im * z.im; }

// |z|, when it is rational.
std::optional<Rational> exact_modulus(const ComplexRational& z);

std::string to_string(const ComplexRational& z);

}  // namespace ncshift

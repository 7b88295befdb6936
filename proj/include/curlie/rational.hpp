#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace curlie {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// Dense coordinate vector.
using Vector = std::vector<Rational>;

/// Parses "n", "-n" or "n/d" (no whitespace, d > 0 after sign handling).
Rational parse_rational(std::string_view text);

/// Canonical text form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& c, const Vector& v);

}  // namespace curlie

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lieaut {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>; // row-major

Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector sub(const RationalVector& a, const RationalVector& b);
RationalVector scale(const Rational& s, const RationalVector& v);
RationalVector negate(const RationalVector& v);
RationalVector unit_vector(std::size_t dim, std::size_t i);

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalVector apply(const RationalMatrix& m, const RationalVector& v);
RationalMatrix transpose(const RationalMatrix& m);

/// Exact inverse by Gauss-Jordan; nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Coefficients x with sum_i x[i] * basis[i] == v, or nullopt if v is not in
/// the span. The basis vectors must be linearly independent.
std::optional<RationalVector> coordinates_in_basis(const std::vector<RationalVector>& basis,
                                                   const RationalVector& v);

bool is_integral(const Rational& q);
std::string to_string(const Rational& q);
std::string to_string(const RationalVector& v);

} // namespace lieaut

#pragma once

// Truncated multivariate power series over arbitrary-precision integers.
//
// A Series of order N is an element of Z[[t,u,v,z,x]] modulo the ideal
// spanned by all monomials in which any single exponent exceeds N (joint
// truncation).  Exponents only add under multiplication, so that span is
// an ideal and ring arithmetic on truncated representatives is exact.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fishburn::series {

using Int = boost::multiprecision::cpp_int;

enum class Var : int { t = 0, u = 1, v = 2, z = 3, x = 4 };

inline constexpr int kVarCount = 5;
inline constexpr std::array<const char*, kVarCount> kVarNames{"t", "u", "v",
                                                              "z", "x"};

// Exponent vector in canonical variable order (t, u, v, z, x).
using Exponents = std::array<int, kVarCount>;

class Series {
 public:
  // The zero series at the given truncation order.
  explicit Series(int order);

  static Series zero(int order) { return Series(order); }
  static Series one(int order) { return constant(order, 1); }
  static Series constant(int order, Int c);
  static Series monomial(int order, const Exponents& e, Int c);
  static Series variable(int order, Var v);

  int order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Int>& terms() const { return terms_; }

  Int coefficient(const Exponents& e) const;

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Int& c, const Series& a);

  friend Series operator+(const Series& a, const Int& c);
  friend Series operator-(const Series& a, const Int& c);
  friend Series operator+(const Int& c, const Series& a) { return a + c; }
  friend Series operator-(const Int& c, const Series& a) { return -a + c; }

  bool operator==(const Series& o) const = default;

  // Non-negative integer power by repeated squaring.
  Series pow(int k) const;

  // t-adic inverse.  Requires the t-degree-0 slice to be the constant 1.
  Series inverse() const;

  // Replace `var` by the series s (a ring substitution computed on
  // truncated representatives).  Requires s.order() == order() and the
  // t-degree-0 slice of s to be empty or a single monomial of degree <= 1
  // in `var`.  Covers the uses needed here: v:=1, u:=u*v, u:=u*inv(d),
  // v:=inv(d), x:=0, z:=0.
  Series substitute(Var var, const Series& s) const;

  // Coefficient of z^1, taken as a series with the z exponent zeroed:
  // the image of d/dz at z=0.
  Series partial_z_at_zero() const;

  // Exact division by t: requires every term to carry e_t >= 1.
  Series shifted_down_t() const;

  // Re-truncate to a smaller (or equal) order.
  Series truncated_to(int order) const;

  // Lexicographically first exponent vector whose coefficients differ.
  std::optional<Exponents> first_difference(const Series& o) const;

 private:
  int order_;
  std::map<Exponents, Int> terms_;  // no zero coefficients stored

  void insert_term(const Exponents& e, const Int& c);
  void require_same_order(const Series& o, const char* op) const;
};

}  // namespace fishburn::series

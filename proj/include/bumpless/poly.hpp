#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "bumpless/cell.hpp"

namespace bumpless {

using Integer = boost::multiprecision::cpp_int;

// x^xexp y^yexp; both exponent vectors have length n.
struct Monomial {
  WeightVector xexp;
  WeightVector yexp;

  static Monomial one(int n);
  static Monomial x(int n, int i);
  static Monomial y(int n, int j);

  int size() const noexcept { return static_cast<int>(xexp.size()); }
  int degree() const;
  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Lexicographic with x_n > ... > x_1 > y_n > ... > y_1.
std::strong_ordering term_order(const Monomial& a, const Monomial& b);

// Greatest first.
struct TermOrderGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return term_order(a, b) > 0; }
};

std::string to_string(const Monomial& m);

// Sparse integer polynomial in x_1..x_n, y_1..y_n. Zero coefficients are never
// stored; terms iterate in decreasing term order.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Integer, TermOrderGreater>;

  explicit Polynomial(int n) : n_(n) {}
  static Polynomial constant(int n, const Integer& c);
  static Polynomial monomial(const Monomial& m, const Integer& c = 1);

  int size() const noexcept { return n_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  Integer coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;

  // Sets every y variable to zero.
  Polynomial drop_y() const;
  // Replaces each coefficient by its absolute value.
  Polynomial abs() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Monomial& m, const Integer& c);

  int n_;
  Terms terms_;
};

// x_i, or x_i + y_j - x_i y_j when `dbl` is set.
Polynomial weight_factor(int n, int i, int j, bool dbl);

// Throws Errc::zero_polynomial on zero input.
std::pair<Monomial, Integer> leading_monomial(const Polynomial& p);
Polynomial top_degree_component(const Polynomial& p);
Polynomial lowest_degree_component(const Polynomial& p);

// "x2^2 + x1x2 - x1^2x2", terms in decreasing term order; "0" for zero.
std::string to_string(const Polynomial& p);

}  // namespace bumpless

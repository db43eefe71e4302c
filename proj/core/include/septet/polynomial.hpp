#pragma once

#include <span>
#include <string>
#include <vector>

#include "septet/rational.hpp"

namespace septet {

/// Dense univariate polynomial over the rationals; coeffs()[k] multiplies t^k.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& t) const;
  int sign_at(const Rational& t) const { return sgn((*this)(t)); }

  Polynomial derivative() const;
  /// Remainder of division by a nonzero divisor.
  Polynomial remainder(const Polynomial& divisor) const;

  friend Polynomial operator-(const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// The polynomial of degree < xs.size() through the points (xs[i], ys[i]).
Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// p, p', -rem(p, p'), ... each scaled by a positive constant.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Sign variations of the sequence at t (zeros skipped).
int sign_variations(const std::vector<Polynomial>& seq, const Rational& t);

/// Distinct real roots in (a, b) for a < b, neither a root.
int count_roots(const std::vector<Polynomial>& seq, const Rational& a, const Rational& b);

struct RootInterval {
  Rational lo, hi;  // lo == hi for a root found exactly
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

/// Isolating intervals, one per distinct real root in (a, b), sorted, each of
/// width <= max_width. a and b must not be roots. p must be nonzero.
std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& a, const Rational& b,
                                        const Rational& max_width);

/// Shrinks an isolating interval of the root of `seq` to width <= max_width.
RootInterval refine_root(const std::vector<Polynomial>& seq, RootInterval iv, const Rational& max_width);

}  // namespace septet

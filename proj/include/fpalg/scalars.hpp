#pragma once

// Exact arithmetic in Q(t1,...,tk) and the affine/permutation automorphisms
// of that field.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fpalg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Which field we compute in: Q when k == 0, otherwise Q(t1,...,tk).
struct FieldSpec {
  std::size_t k = 0;

  /// Printed name of generator i (0-based): "t" when k == 1, else "t<i+1>".
  std::string generator_name(std::size_t i) const;
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Power product t1^e1 ... tk^ek. Trailing zero exponents are never stored, so
/// equal monomials have equal representations whatever k is.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);
  static Monomial variable(std::size_t index, std::uint32_t power = 1);

  std::uint32_t exponent(std::size_t index) const {
    return index < exps_.size() ? exps_[index] : 0;
  }
  /// One past the highest variable index that occurs.
  std::size_t width() const { return exps_.size(); }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return exps_.empty(); }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial without(std::size_t index) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  void trim();
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic order with t1 < t2 < ... < tk.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

/// Multivariate polynomial in Z[t1,...,tk]; terms strictly descending in grlex,
/// no zero coefficients.
class IntPoly {
public:
  using Term = std::pair<Monomial, Integer>;

  IntPoly() = default;
  IntPoly(long value);
  IntPoly(const Integer& value);
  static IntPoly variable(std::size_t index);
  static IntPoly from_terms(std::vector<Term> terms); // any order, merges duplicates

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  bool is_one() const;
  /// Constant term value; requires is_constant().
  Integer constant_value() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Integer& leading_coefficient() const { return terms_.front().second; }
  const Monomial& leading_monomial() const { return terms_.front().first; }

  std::size_t width() const;
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  /// Positive gcd of the integer coefficients (0 for the zero polynomial).
  Integer content() const;

  /// Coefficients with respect to `var`: result[d] multiplies var^d.
  std::vector<IntPoly> coefficients_in(std::size_t var) const;
  static IntPoly from_coefficients(std::size_t var, const std::vector<IntPoly>& coeffs);

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& other) const;
  IntPoly operator-(const IntPoly& other) const;
  IntPoly operator*(const IntPoly& other) const;
  IntPoly scaled(const Integer& factor) const;
  IntPoly times_monomial(const Monomial& m, const Integer& c) const;
  /// Divides every coefficient by `divisor`, which must divide all of them.
  IntPoly divided_by(const Integer& divisor) const;

  /// Exact quotient a / b, or nullopt if b does not divide a in Z[t].
  static std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string(const std::function<std::string(std::size_t)>& name) const;

private:
  std::vector<Term> terms_;
};

/// gcd in Z[t1,...,tk], normalized to a positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Element of Q(t1,...,tk) in canonical form: coprime numerator and denominator,
/// denominator with positive grlex-leading coefficient, zero stored as 0/1.
class Scalar {
public:
  Scalar() : den_(1) {}
  Scalar(long value) : num_(value), den_(1) {}
  Scalar(const Integer& value) : num_(value), den_(1) {}
  explicit Scalar(const Rational& value);
  explicit Scalar(const IntPoly& poly) : num_(poly), den_(1) {}
  static Scalar generator(std::size_t index);
  /// num / den, reduced to canonical form. Throws DomainError if den == 0.
  static Scalar fraction(const IntPoly& num, const IntPoly& den);

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  bool is_integer() const { return num_.is_constant() && den_.is_one(); }
  Rational to_rational() const;

  /// Number of the highest generator that occurs (0 for rational values).
  std::size_t width() const { return std::max(num_.width(), den_.width()); }
  /// True iff the value lies in Q(t1,...,tr).
  bool lies_in(std::size_t r) const { return width() <= r; }
  /// Generators in deterministic traversal order (numerator before
  /// denominator, monomials descending, variables ascending), without repeats.
  std::vector<std::size_t> generators_in_order() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Throws DomainError on division by zero.
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar&, const Scalar&) = default;

  /// Renames generators: generator i becomes generator relabel[i].
  Scalar relabeled(const std::vector<std::size_t>& relabel) const;

  std::string to_string(const FieldSpec& field) const;
  /// Names the generators as the smallest field containing the value would.
  std::string to_string() const;

private:
  Scalar(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  /// Trusts coprimality, only fixes the sign.
  static Scalar from_coprime(IntPoly num, IntPoly den);

  IntPoly num_;
  IntPoly den_;

  friend class FieldAutomorphism;
};

/// Image of one generator under an automorphism: t_i -> scale * t_target + shift.
struct AffineImage {
  std::size_t target = 0;
  Rational scale = 1;
  Rational shift = 0;

  friend bool operator==(const AffineImage&, const AffineImage&) = default;
};

/// Automorphism of Q(t1,...,tk) of the form t_i -> a_i t_{pi(i)} + b_i with
/// pi a permutation and a_i != 0. The inverse is stored alongside.
class FieldAutomorphism {
public:
  static FieldAutomorphism identity(std::size_t k);
  /// Throws DomainError unless the targets form a permutation and every scale is nonzero.
  static FieldAutomorphism from_images(std::vector<AffineImage> images);
  /// t_i -> t_{perm[i]}.
  static FieldAutomorphism permutation(const std::vector<std::size_t>& perm);
  /// t_index -> scale * t_index + shift, other generators fixed.
  static FieldAutomorphism affine(std::size_t k, std::size_t index, const Rational& scale,
                                  const Rational& shift);

  std::size_t k() const { return forward_.size(); }
  const std::vector<AffineImage>& forward() const { return forward_; }
  const std::vector<AffineImage>& backward() const { return backward_; }
  bool is_identity() const;

  /// sigma(t_index) as a field element.
  Scalar image(std::size_t index) const;
  /// sigma(a). Throws DomainError if a involves generators beyond k.
  Scalar apply(const Scalar& a) const;
  FieldAutomorphism inverse() const { return FieldAutomorphism(backward_, forward_); }

  std::string to_string(const FieldSpec& field) const;

  friend bool operator==(const FieldAutomorphism& a, const FieldAutomorphism& b) {
    return a.forward_ == b.forward_;
  }

private:
  FieldAutomorphism(std::vector<AffineImage> fwd, std::vector<AffineImage> bwd)
      : forward_(std::move(fwd)), backward_(std::move(bwd)) {}

  std::vector<AffineImage> forward_;
  std::vector<AffineImage> backward_;
};

/// Composition sigma o tau: (sigma o tau)(a) = sigma(tau(a)).
FieldAutomorphism compose(const FieldAutomorphism& sigma, const FieldAutomorphism& tau);

} // namespace fpalg

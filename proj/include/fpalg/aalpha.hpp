#pragma once

// The one-relation family A_alpha = <x1, x2 | x1^2 + x2^2 + alpha x1 x2 = 0>:
// isomorphism decision with witnesses, the quadratic-form congruence behind
// it, a brute-force oracle over F_p, and Aut-orbit sampling.

#include "fpalg/freealg.hpp"
#include "fpalg/presentation.hpp"
#include "fpalg/scalars.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fpalg {

/// 2x2 matrix over Q(t1..tk), row-major.
struct Matrix2 {
  std::array<std::array<Scalar, 2>, 2> m{};

  static Matrix2 identity();
  static Matrix2 diagonal(const Scalar& a, const Scalar& b);
  static Matrix2 of(Scalar a, Scalar b, Scalar c, Scalar d);

  const Scalar& operator()(int i, int j) const { return m[i][j]; }
  Scalar& operator()(int i, int j) { return m[i][j]; }
  Matrix2 operator*(const Matrix2& o) const;
  Matrix2 scaled(const Scalar& c) const;
  Matrix2 transposed() const;
  Scalar det() const;

  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// Coefficient matrix of the quadratic relation: x * form * x^T.
using BilinearForm2 = Matrix2;

/// Change of basis Q and scale gamma with Q^T form(beta) Q = gamma form(alpha).
struct CongruenceWitness {
  Matrix2 q;
  Scalar gamma;
};

/// <x1, x2 | x1*x1 + x2*x2 + alpha*x1*x2 = 0> over the smallest Q(t1..tk) holding alpha.
Presentation make_aalpha(const Scalar& alpha, const std::optional<FieldSpec>& field = std::nullopt);

/// (1 alpha; 0 1).
BilinearForm2 form_of(const Scalar& alpha);

/// x * form * x^T as an element of the free algebra on two generators.
NCPoly quadratic_expression(const BilinearForm2& form, const PolyContext& ctx);

/// (2 beta; beta 2) * Q. Its rows are the coefficients, in alpha_10 and
/// alpha_20, of the linear terms that must vanish.
Matrix2 linear_constraint_matrix(const Scalar& beta, const Matrix2& q);

/// Exact test of Q^T form(beta) Q = gamma form(alpha).
bool congruence_check(const Scalar& alpha, const Scalar& beta, const CongruenceWitness& w);

/// Identities every congruence witness satisfies: beta det Q = gamma alpha
/// (antisymmetric parts) and (4 - beta^2) det(Q)^2 = gamma^2 (4 - alpha^2)
/// (determinants of the symmetric parts); together they force beta^2 = alpha^2.
struct InvariantChain {
  bool antisymmetric;
  bool symmetric;
  bool squares_equal;
  bool holds() const { return antisymmetric && symmetric && squares_equal; }
};
InvariantChain invariant_chain(const Scalar& alpha, const Scalar& beta, const CongruenceWitness& w);

struct Congruent {
  CongruenceWitness witness;
};
/// beta^2 != alpha^2, which the invariant chain rules out for any witness.
struct NotCongruent {
  Scalar beta_squared;
  Scalar alpha_squared;
};
using CongruenceDecision = std::variant<Congruent, NotCongruent>;

CongruenceDecision decide_form_congruence(const Scalar& alpha, const Scalar& beta);

/// A_alpha is isomorphic to A_beta iff beta = alpha or beta = -alpha.
bool iso_aalpha(const Scalar& alpha, const Scalar& beta);

/// Images of (x1, x2) in A_alpha realizing A_beta, when iso_aalpha holds:
/// (x1, x2) for beta = alpha, (x1, -x2) for beta = -alpha.
std::optional<std::vector<NCPoly>> iso_witness(const Scalar& alpha, const Scalar& beta);

// --- finite-field oracle -----------------------------------------------------

/// 2x2 matrix over F_p with entries in [0, p).
struct ModMatrix2 {
  std::array<std::uint32_t, 4> e{}; // row-major
  friend bool operator==(const ModMatrix2&, const ModMatrix2&) = default;
};

struct ModWitness {
  ModMatrix2 q;
  std::uint32_t gamma;
};

bool is_odd_prime(std::uint32_t p);

/// Scans all of GL2(F_p) (entries in row-major lexicographic order) for Q
/// with Q^T form(beta) Q = gamma form(alpha), gamma != 0; returns the first.
/// Throws DomainError unless p is an odd prime below 2^15.
std::optional<ModWitness> search_iso_degree2(std::uint32_t alpha, std::uint32_t beta, std::uint32_t p);

/// beta = +-alpha in F_p.
bool iso_aalpha_mod(std::uint32_t alpha, std::uint32_t beta, std::uint32_t p);

/// sigma(alpha) for each sigma, duplicates removed, first occurrence kept.
std::vector<Scalar> orbit_sample(const Scalar& alpha, const std::vector<FieldAutomorphism>& autos);

} // namespace fpalg

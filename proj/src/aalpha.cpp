#include "fpalg/aalpha.hpp"

#include "fpalg/error.hpp"

#include <algorithm>

namespace fpalg {

Matrix2 Matrix2::identity() { return diagonal(Scalar(1), Scalar(1)); }

Matrix2 Matrix2::diagonal(const Scalar& a, const Scalar& b) { return of(a, Scalar(), Scalar(), b); }

Matrix2 Matrix2::of(Scalar a, Scalar b, Scalar c, Scalar d) {
  Matrix2 r;
  r.m = {{{std::move(a), std::move(b)}, {std::move(c), std::move(d)}}};
  return r;
}

Matrix2 Matrix2::operator*(const Matrix2& o) const {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
  return r;
}

Matrix2 Matrix2::scaled(const Scalar& c) const {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.m[i][j] = m[i][j] * c;
  return r;
}

Matrix2 Matrix2::transposed() const { return of(m[0][0], m[1][0], m[0][1], m[1][1]); }

Scalar Matrix2::det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

Presentation make_aalpha(const Scalar& alpha, const std::optional<FieldSpec>& field) {
  const FieldSpec f = field.value_or(FieldSpec{alpha.width()});
  if (!alpha.lies_in(f.k))
    throw DomainError("alpha = " + alpha.to_string() + " lies outside " + f.to_string());
  const PolyContext ctx{2, f};
  return Presentation("A", Presentation::standard_names(2), f,
                      {quadratic_expression(form_of(alpha), ctx)});
}

BilinearForm2 form_of(const Scalar& alpha) { return Matrix2::of(Scalar(1), alpha, Scalar(), Scalar(1)); }

NCPoly quadratic_expression(const BilinearForm2& form, const PolyContext& ctx) {
  std::vector<NCPoly::Term> terms;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      terms.emplace_back(Word{i, j}, form(static_cast<int>(i), static_cast<int>(j)));
  return NCPoly::from_terms(ctx, std::move(terms));
}

Matrix2 linear_constraint_matrix(const Scalar& beta, const Matrix2& q) {
  return Matrix2::of(Scalar(2), beta, beta, Scalar(2)) * q;
}

bool congruence_check(const Scalar& alpha, const Scalar& beta, const CongruenceWitness& w) {
  if (w.q.det().is_zero() || w.gamma.is_zero())
    return false;
  return w.q.transposed() * form_of(beta) * w.q == form_of(alpha).scaled(w.gamma);
}

InvariantChain invariant_chain(const Scalar& alpha, const Scalar& beta, const CongruenceWitness& w) {
  const Scalar d = w.q.det();
  const Scalar a2 = alpha * alpha;
  const Scalar b2 = beta * beta;
  InvariantChain c;
  c.antisymmetric = beta * d == w.gamma * alpha;
  c.symmetric = (Scalar(4) - b2) * d * d == w.gamma * w.gamma * (Scalar(4) - a2);
  c.squares_equal = b2 == a2;
  return c;
}

CongruenceDecision decide_form_congruence(const Scalar& alpha, const Scalar& beta) {
  if (beta == alpha)
    return Congruent{CongruenceWitness{Matrix2::identity(), Scalar(1)}};
  if (beta == -alpha)
    return Congruent{CongruenceWitness{Matrix2::diagonal(Scalar(1), Scalar(-1)), Scalar(1)}};
  return NotCongruent{beta * beta, alpha * alpha};
}

bool iso_aalpha(const Scalar& alpha, const Scalar& beta) { return beta == alpha || beta == -alpha; }

std::optional<std::vector<NCPoly>> iso_witness(const Scalar& alpha, const Scalar& beta) {
  if (!iso_aalpha(alpha, beta))
    return std::nullopt;
  const PolyContext ctx = make_aalpha(alpha, FieldSpec{std::max(alpha.width(), beta.width())}).context();
  NCPoly x1 = NCPoly::generator(ctx, 0);
  NCPoly x2 = NCPoly::generator(ctx, 1);
  if (beta == alpha)
    return std::vector<NCPoly>{x1, x2};
  return std::vector<NCPoly>{x1, -x2};
}

// ---------------------------------------------------------------------------

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0)
    return false;
  for (std::uint32_t d = 3; d * d <= p; d += 2)
    if (p % d == 0)
      return false;
  return true;
}

std::optional<ModWitness> search_iso_degree2(std::uint32_t alpha, std::uint32_t beta, std::uint32_t p) {
  if (!is_odd_prime(p) || p >= (1u << 15))
    throw DomainError("modulus " + std::to_string(p) + " is not an odd prime below 32768");
  if (alpha >= p || beta >= p)
    throw DomainError("alpha and beta must be residues in [0, p)");
  // Q^T (1 b; 0 1) Q for Q = (q0 q1; q2 q3):
  //   [0][0] = q0^2 + b q0 q2 + q2^2
  //   [0][1] = q0 q1 + b q0 q3 + q2 q3
  //   [1][0] = q1 q0 + b q1 q2 + q3 q2
  //   [1][1] = q1^2 + b q1 q3 + q3^2
  // and the target is gamma (1 a; 0 1).
  const std::uint64_t P = p, a = alpha, b = beta;
  for (std::uint64_t q0 = 0; q0 < P; ++q0)
    for (std::uint64_t q1 = 0; q1 < P; ++q1)
      for (std::uint64_t q2 = 0; q2 < P; ++q2) {
        const std::uint64_t m00 = (q0 * q0 + b * q0 % P * q2 + q2 * q2) % P;
        if (m00 == 0)
          continue; // gamma = m00 must be nonzero
        for (std::uint64_t q3 = 0; q3 < P; ++q3) {
          if ((q0 * q3 + P * P - q1 * q2) % P == 0)
            continue;
          const std::uint64_t m10 = (q1 * q0 + b * q1 % P * q2 + q3 * q2) % P;
          if (m10 != 0)
            continue;
          const std::uint64_t m11 = (q1 * q1 + b * q1 % P * q3 + q3 * q3) % P;
          if (m11 != m00)
            continue;
          const std::uint64_t m01 = (q0 * q1 + b * q0 % P * q3 + q2 * q3) % P;
          if (m01 != m00 * a % P)
            continue;
          ModWitness w;
          w.q.e = {static_cast<std::uint32_t>(q0), static_cast<std::uint32_t>(q1),
                   static_cast<std::uint32_t>(q2), static_cast<std::uint32_t>(q3)};
          w.gamma = static_cast<std::uint32_t>(m00);
          return w;
        }
      }
  return std::nullopt;
}

bool iso_aalpha_mod(std::uint32_t alpha, std::uint32_t beta, std::uint32_t p) {
  return beta % p == alpha % p || (beta + alpha) % p == 0;
}

std::vector<Scalar> orbit_sample(const Scalar& alpha, const std::vector<FieldAutomorphism>& autos) {
  std::vector<Scalar> out;
  for (const auto& sigma : autos) {
    Scalar image = sigma.apply(alpha);
    if (std::find(out.begin(), out.end(), image) == out.end())
      out.push_back(std::move(image));
  }
  return out;
}

} // namespace fpalg

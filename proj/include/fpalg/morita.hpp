#pragma once

// Matrix algebras M_n(B) over a presented algebra B, presented by matrix
// units e_ij and central lifts z_k of B's generators, with idempotent checks,
// a semidecision for fullness and filtered dimensions of corners e M_n(B) e.

#include "fpalg/freealg.hpp"
#include "fpalg/presentation.hpp"
#include "fpalg/rewrite.hpp"

#include <cstddef>
#include <vector>

namespace fpalg {

struct MatrixPresentation {
  Presentation base;
  std::size_t n = 1;
  /// Generators e11, e12, ..., enn (row-major) followed by z1..zm. Relations:
  /// e_ij e_kl - delta_jk e_il for all i, j, k, l; e11 + ... + enn - 1;
  /// z_k e_ij - e_ij z_k for all k, i, j; each base relation in the z_k.
  Presentation pres;

  /// Generator index of e_ij (0-based i, j).
  std::size_t unit(std::size_t i, std::size_t j) const { return i * n + j; }
  /// Generator index of z_k (0-based k).
  std::size_t lift(std::size_t k) const { return n * n + k; }
  NCPoly unit_element(std::size_t i, std::size_t j) const;
  NCPoly identity() const;
};

/// Throws DomainError for n = 0.
MatrixPresentation matrix_presentation(const Presentation& base, std::size_t n);

/// matrix_presentation(twist(P, sigma), n) equals twist(matrix_presentation(P, n), sigma).
bool twist_matrix_commutes(const Presentation& p, std::size_t n, const FieldAutomorphism& sigma);

/// Number of normal words of length <= d for the basis truncated at d + 2,
/// i.e. the dimension of the span of normal forms of words of length <= d.
std::size_t filtered_dimension(const MatrixPresentation& mp, int d);
std::size_t filtered_dimension(const Presentation& p, int d);

/// Whether e*e - e reduces to zero modulo the basis truncated at d. Throws
/// UnverifiedError when deg(e*e - e) exceeds what that basis has completed.
bool verify_idempotent(const NCPoly& e, const MatrixPresentation& mp, int d);

struct SandwichTerm {
  Scalar coefficient;
  Word left;
  Word right;
};

struct FullnessResult {
  /// True: 1 = sum c_i * left_i * e * right_i. False: no such expression
  /// with |left| + |right| <= degree; this is not a proof of non-fullness.
  bool full;
  int degree;
  std::vector<SandwichTerm> certificate;
};

/// Searches for 1 in the span of u*e*v with |u| + |v| <= d, stopping at the
/// first total length that suffices. The certificate is re-verified by
/// reduction before it is returned. Throws DomainError when e is zero or not
/// idempotent.
FullnessResult is_full_idempotent(const NCPoly& e, const MatrixPresentation& mp, int d);

/// Entry c (0 <= c <= d) is the dimension of the span of normal forms of
/// e*w*e over the words w of length <= c. Throws DomainError when e is not
/// idempotent.
std::vector<std::size_t> corner_filtered_dims(const NCPoly& e, const MatrixPresentation& mp, int d);

/// All words of length n over m letters, ascending.
std::vector<Word> words_of_length(std::size_t m, int n);

} // namespace fpalg

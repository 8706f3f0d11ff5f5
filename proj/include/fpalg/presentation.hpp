#pragma once

// Finitely presented algebras <x1..xm | R = 0> over Q(t1..tk), their
// semilinear twists, and descent of the coefficients onto Q(t1..tr).

#include "fpalg/freealg.hpp"
#include "fpalg/scalars.hpp"

#include <string>
#include <vector>

namespace fpalg {

/// Generator names, relation list and coefficient field. The relation list is
/// kept exactly as given: no reduction, no reordering.
class Presentation {
public:
  Presentation() = default;
  /// Throws DomainError on zero relations, duplicate generator names, or
  /// relations whose context differs from (generator count, field).
  Presentation(std::string name, std::vector<std::string> generator_names, FieldSpec field,
               std::vector<NCPoly> relations);
  /// Generators named x1..xm.
  static std::vector<std::string> standard_names(std::size_t m);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<NCPoly>& relations() const { return relations_; }
  std::size_t generators() const { return generator_names_.size(); }
  PolyContext context() const { return PolyContext{generators(), field_}; }

  int max_relation_degree() const;
  bool is_homogeneous() const;

  Presentation with_relations(std::vector<NCPoly> relations) const;
  Presentation renamed(std::string name) const;

private:
  std::string name_ = "A";
  std::vector<std::string> generator_names_;
  FieldSpec field_;
  std::vector<NCPoly> relations_;
};

/// Syntactic identity: field, generator names and the relation list (in
/// order). The algebra's display name is not compared.
bool presentations_equal(const Presentation& p, const Presentation& q);

/// Presentation of the twisted algebra A^(sigma): every relation coefficient
/// alpha becomes sigma^{-1}(alpha); words are untouched.
Presentation twist(const Presentation& p, const FieldAutomorphism& sigma);

/// Transcendental generators occurring in the coefficients (0-based), by first
/// occurrence: relations in order, terms in descending deglex, numerator
/// before denominator, coefficient monomials in descending grlex, variables
/// ascending within a monomial.
std::vector<std::size_t> transcendental_support(const Presentation& p);

struct Canonicalization {
  Presentation canonical;
  /// Permutation automorphism with canonical = twist(original, sigma).
  FieldAutomorphism sigma;
};

/// Renames the r transcendentals occurring in p to t1..tr. The labeling is
/// invariant under renaming the transcendentals of p, so presentations that
/// differ by a permutation twist share one canonical form.
Canonicalization canonicalize(const Presentation& p);

/// True iff every coefficient lies in Q(t1,...,tr).
bool is_over_subfield(const Presentation& p, std::size_t r);

} // namespace fpalg

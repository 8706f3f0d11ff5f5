#pragma once

// Words and polynomials of the free associative algebra F<x1,...,xm>.

#include "fpalg/scalars.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fpalg {

/// Product of generators x_{i1} x_{i2} ...; letters are 0-based indices. The
/// empty word is the unit.
class Word {
public:
  using Letter = char16_t;

  Word() = default;
  explicit Word(std::u16string letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<std::size_t> letters);
  static Word letter(std::size_t index) { return Word(std::u16string(1, static_cast<Letter>(index))); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::size_t operator[](std::size_t i) const { return letters_[i]; }
  const std::u16string& letters() const { return letters_; }

  Word substr(std::size_t pos, std::size_t len = std::u16string::npos) const {
    return Word(letters_.substr(pos, len));
  }
  /// Position of the first occurrence of `factor` at or after `from`, or npos.
  std::size_t find(const Word& factor, std::size_t from = 0) const {
    return letters_.find(factor.letters_, from);
  }
  bool contains(const Word& factor) const { return find(factor) != std::u16string::npos; }

  Word operator*(const Word& other) const { return Word(letters_ + other.letters_); }

  friend bool operator==(const Word&, const Word&) = default;
  /// Degree-lexicographic order: longer words are greater; words of equal
  /// length compare lexicographically with x1 > x2 > ... > xm.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
  std::u16string letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return std::hash<std::u16string>{}(w.letters()); }
};

/// Generator count plus coefficient field; every polynomial carries one.
struct PolyContext {
  std::size_t generators = 0;
  FieldSpec field;

  friend bool operator==(const PolyContext&, const PolyContext&) = default;
};

/// Finitely supported combination of words with Scalar coefficients. Terms
/// are kept strictly descending in deglex with no zero coefficients.
class NCPoly {
public:
  using Term = std::pair<Word, Scalar>;

  NCPoly() = default;
  explicit NCPoly(PolyContext ctx) : ctx_(std::move(ctx)) {}
  static NCPoly constant(const PolyContext& ctx, const Scalar& c);
  static NCPoly generator(const PolyContext& ctx, std::size_t index);
  static NCPoly monomial(const PolyContext& ctx, const Word& w, const Scalar& c = Scalar(1));
  /// Terms in any order; duplicates are summed. Throws DomainError on
  /// letters or coefficients outside the context.
  static NCPoly from_terms(const PolyContext& ctx, std::vector<Term> terms);

  const PolyContext& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Length of the leading word; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().first.size()); }
  int min_degree() const;
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty()); }
  const Word& leading_word() const { return terms_.front().first; }
  const Scalar& leading_coefficient() const { return terms_.front().second; }
  Scalar coefficient(const Word& w) const;

  NCPoly operator-() const;
  NCPoly operator+(const NCPoly& other) const;
  NCPoly operator-(const NCPoly& other) const;
  NCPoly operator*(const NCPoly& other) const;
  NCPoly scaled(const Scalar& c) const;
  /// left * this * right for words.
  NCPoly sandwiched(const Word& left, const Word& right) const;
  /// Divides by the leading coefficient.
  NCPoly monic() const;

  /// Sum of the terms whose word has length exactly d.
  NCPoly homogeneous_component(int d) const;
  /// Ring homomorphism x_i -> images[i] (images may live over another generator count).
  NCPoly substitute(std::span<const NCPoly> images) const;
  /// Applies sigma to every coefficient.
  NCPoly map_coefficients(const FieldAutomorphism& sigma) const;

  friend bool operator==(const NCPoly&, const NCPoly&) = default;

private:
  void require_same_context(const NCPoly& other) const;

  PolyContext ctx_;
  std::vector<Term> terms_;
};

/// Deglex comparison of two words (same as operator<=>).
inline std::strong_ordering word_compare(const Word& u, const Word& v) { return u <=> v; }

/// Incremental accumulator of terms, used by reduction loops.
class TermAccumulator {
public:
  void add(const Word& w, const Scalar& c);
  bool empty() const { return terms_.empty(); }
  /// Removes and returns the deglex-largest term.
  NCPoly::Term pop_largest();

private:
  struct Greater {
    bool operator()(const Word& a, const Word& b) const { return a > b; }
  };
  std::map<Word, Scalar, Greater> terms_;
};

} // namespace fpalg

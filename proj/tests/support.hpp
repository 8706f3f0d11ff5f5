#pragma once

// Random generators and independent oracles shared by the test binaries.

#include "fpalg/freealg.hpp"
#include "fpalg/linalg.hpp"
#include "fpalg/presentation.hpp"
#include "fpalg/scalars.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace testing {

using namespace fpalg;
using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// Integer polynomial in t1..tk with up to `terms` terms of total degree <= deg.
inline IntPoly random_intpoly(Rng& rng, std::size_t k, int terms = 3, int deg = 2, long coeff = 5) {
  std::vector<IntPoly::Term> out;
  const int n = static_cast<int>(uniform(rng, 1, terms));
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint32_t> e(k, 0);
    int budget = static_cast<int>(uniform(rng, 0, deg));
    while (budget-- > 0 && k > 0)
      ++e[uniform(rng, 0, static_cast<long>(k) - 1)];
    long c = 0;
    while (c == 0)
      c = uniform(rng, -coeff, coeff);
    out.emplace_back(Monomial(e), Integer(c));
  }
  IntPoly p = IntPoly::from_terms(std::move(out));
  return p.is_zero() ? IntPoly(1) : p;
}

inline Scalar random_scalar(Rng& rng, std::size_t k, int terms = 3, int deg = 2) {
  IntPoly num = coin(rng, 0.1) ? IntPoly() : random_intpoly(rng, k, terms, deg);
  IntPoly den;
  while (den.is_zero())
    den = coin(rng, 0.4) ? IntPoly(uniform(rng, 1, 4)) : random_intpoly(rng, k, 2, deg);
  return Scalar::fraction(num, den);
}

inline Scalar random_nonzero_scalar(Rng& rng, std::size_t k, int terms = 3, int deg = 2) {
  Scalar s;
  while (s.is_zero())
    s = random_scalar(rng, k, terms, deg);
  return s;
}

inline Rational random_rational(Rng& rng, long range = 4) {
  long num = uniform(rng, -range, range);
  long den = uniform(rng, 1, range);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational random_nonzero_rational(Rng& rng, long range = 4) {
  Rational q;
  while (q == 0)
    q = random_rational(rng, range);
  return q;
}

/// Random supported automorphism: a permutation composed with affine maps.
inline FieldAutomorphism random_automorphism(Rng& rng, std::size_t k) {
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  FieldAutomorphism sigma = FieldAutomorphism::permutation(perm);
  for (std::size_t i = 0; i < k; ++i)
    if (coin(rng, 0.4))
      sigma = compose(sigma, FieldAutomorphism::affine(k, i, random_nonzero_rational(rng), random_rational(rng)));
  return sigma;
}

inline FieldAutomorphism random_permutation(Rng& rng, std::size_t k) {
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return FieldAutomorphism::permutation(perm);
}

inline Word random_word(Rng& rng, std::size_t m, int len) {
  Word w;
  for (int i = 0; i < len; ++i)
    w = w * Word::letter(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(m) - 1)));
  return w;
}

/// Random element with up to `terms` terms of length in [min_len, max_len].
inline NCPoly random_ncpoly(Rng& rng, const PolyContext& ctx, int terms, int min_len, int max_len,
                            int coeff_deg = 1) {
  std::vector<NCPoly::Term> out;
  const int n = static_cast<int>(uniform(rng, 1, terms));
  for (int i = 0; i < n; ++i) {
    Word w = random_word(rng, ctx.generators, static_cast<int>(uniform(rng, min_len, max_len)));
    Scalar c = ctx.field.k > 0 && coin(rng, 0.5) ? random_scalar(rng, ctx.field.k, 2, coeff_deg)
                                                  : Scalar(Integer(uniform(rng, -3, 3)));
    bool dup = false;
    for (auto& t : out)
      if (t.first == w) {
        t.second += c;
        dup = true;
      }
    if (!dup)
      out.emplace_back(w, c);
  }
  std::erase_if(out, [](const NCPoly::Term& t) { return t.second.is_zero(); });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return b.first < a.first; });
  return NCPoly::from_terms(ctx, std::move(out));
}

inline NCPoly random_nonzero_ncpoly(Rng& rng, const PolyContext& ctx, int terms, int min_len, int max_len,
                                    int coeff_deg = 1) {
  NCPoly f;
  while (f.is_zero())
    f = random_ncpoly(rng, ctx, terms, min_len, max_len, coeff_deg);
  return f;
}

/// Presentation with m generators over Q(t1..tk) and 1..max_rels relations of
/// degree <= max_deg (exactly max_deg when homogeneous).
inline Presentation random_presentation(Rng& rng, std::size_t m, std::size_t k, int max_rels, int max_deg,
                                        bool homogeneous = false, int coeff_deg = 1) {
  const PolyContext ctx{m, FieldSpec{k}};
  std::vector<NCPoly> rels;
  const int n = static_cast<int>(uniform(rng, 1, max_rels));
  for (int i = 0; i < n; ++i) {
    const int lo = homogeneous ? max_deg : 1;
    rels.push_back(random_nonzero_ncpoly(rng, ctx, 4, lo, max_deg, coeff_deg));
  }
  return Presentation("P", Presentation::standard_names(m), FieldSpec{k}, std::move(rels));
}

// --- evaluation oracle ---------------------------------------------------------

/// Value of an integer polynomial at a rational point, computed term by term
/// without any of the Scalar machinery.
inline Rational evaluate(const IntPoly& p, const std::vector<Rational>& point) {
  Rational total = 0;
  for (const auto& [mono, c] : p.terms()) {
    Rational v = Rational(c);
    for (std::size_t i = 0; i < mono.width(); ++i)
      for (std::uint32_t e = 0; e < mono.exponent(i); ++e)
        v *= point[i];
    total += v;
  }
  return total;
}

/// Value of a rational function, or nullopt at a pole.
inline std::optional<Rational> evaluate(const Scalar& s, const std::vector<Rational>& point) {
  const Rational den = evaluate(s.denominator(), point);
  if (den == 0)
    return std::nullopt;
  return evaluate(s.numerator(), point) / den;
}

inline std::vector<Rational> random_point(Rng& rng, std::size_t k) {
  std::vector<Rational> p;
  for (std::size_t i = 0; i < k; ++i)
    p.push_back(random_rational(rng, 50));
  return p;
}

// --- span oracle ----------------------------------------------------------------

/// Index of a word of length n in base m (first letter most significant).
inline std::size_t word_index(const Word& w, std::size_t m) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    idx = idx * m + w[i];
  return idx;
}

inline std::vector<Word> all_words(std::size_t m, int n) {
  std::vector<Word> out{Word()};
  for (int i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (std::size_t x = 0; x < m; ++x)
        next.push_back(w * Word::letter(x));
    out = std::move(next);
  }
  return out;
}

/// m^n - rank{u r v : r a relation, |u| + |v| = n - deg r} for homogeneous
/// relations, by exact elimination; never touches the rewriting code.
inline std::size_t span_oracle_dimension(const Presentation& p, int n) {
  const std::size_t m = p.generators();
  std::vector<SparseRow> rows;
  for (const auto& r : p.relations()) {
    const int rest = n - r.degree();
    if (rest < 0)
      continue;
    for (int a = 0; a <= rest; ++a)
      for (const Word& u : all_words(m, a))
        for (const Word& v : all_words(m, rest - a)) {
          SparseRow row;
          for (const auto& [w, c] : r.terms())
            row[word_index(u * w * v, m)] = c;
          rows.push_back(std::move(row));
        }
  }
  std::size_t total = 1;
  for (int i = 0; i < n; ++i)
    total *= m;
  return total - exact_rank(rows);
}

} // namespace testing

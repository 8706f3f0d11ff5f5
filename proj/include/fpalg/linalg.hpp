#pragma once

// Exact linear algebra over Q(t1..tk): echelon spans of free-algebra elements
// and fraction-free rank.

#include "fpalg/freealg.hpp"
#include "fpalg/scalars.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fpalg {

/// Sparse linear combination of tagged inputs.
using Combination = std::map<std::size_t, Scalar>;

/// Echelon basis of the span of a growing set of elements of the free
/// algebra. Every basis vector remembers how it was built from the tagged
/// inputs, so membership answers come with an explicit combination.
class SpanBasis {
public:
  explicit SpanBasis(PolyContext ctx) : ctx_(std::move(ctx)) {}

  /// Adds v (known to the caller as input `tag`); true if the span grew.
  bool insert(const NCPoly& v, std::size_t tag);
  bool contains(const NCPoly& v) const;
  /// Combination c with v = sum c[tag] * input[tag], or nullopt if v is outside the span.
  std::optional<Combination> express(const NCPoly& v) const;
  std::size_t dimension() const { return rows_.size(); }

private:
  struct Row {
    NCPoly vec;
    Combination combo;
  };
  const Row* pivot_for(const Word& w) const;

  PolyContext ctx_;
  std::vector<Row> rows_;
  std::unordered_map<Word, std::size_t, WordHash> pivot_;
};

using SparseRow = std::map<std::size_t, Scalar>;

/// Rank over Q(t1..tk) by fraction-free elimination: rows are cleared to
/// Z[t] entries, combined with gcd-reduced cofactors and kept primitive.
std::size_t exact_rank(const std::vector<SparseRow>& rows);

} // namespace fpalg

#pragma once

// Degree-truncated noncommutative Groebner bases (Buchberger/Mora completion
// of overlap ambiguities under deglex) and what they decide: normal forms,
// ideal membership, graded dimensions and generation.

#include "fpalg/freealg.hpp"
#include "fpalg/linalg.hpp"
#include "fpalg/presentation.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace fpalg {

enum class ReductionStrategy {
  Leftmost,  ///< rewrite the occurrence that starts furthest left
  Rightmost, ///< rewrite the occurrence that starts furthest right
};

/// Lookup of rewrite rules by leading word.
class RuleIndex {
public:
  void add(const Word& lead, std::size_t rule);
  void remove(const Word& lead);
  bool empty() const { return by_lead_.empty(); }

  struct Match {
    std::size_t rule;
    std::size_t position;
  };
  std::optional<Match> find(const Word& w, ReductionStrategy strategy) const;
  /// True if some leading word is a suffix of w.
  bool has_suffix_match(const Word& w) const;

private:
  std::unordered_map<Word, std::size_t, WordHash> by_lead_;
  std::map<std::size_t, std::size_t> lengths_; // length -> number of leads
};

/// Reduced, monic truncated Groebner basis, sorted by ascending leading word.
/// Normal forms of elements of degree <= complete_to() are canonical.
class TruncatedGB {
public:
  TruncatedGB(PolyContext ctx, std::vector<NCPoly> basis, int maxdeg, int complete_to);

  const PolyContext& context() const { return ctx_; }
  const std::vector<NCPoly>& basis() const { return basis_; }
  int maxdeg() const { return maxdeg_; }
  int complete_to() const { return complete_to_; }
  const RuleIndex& index() const { return *index_; }

  friend bool operator==(const TruncatedGB& a, const TruncatedGB& b) {
    return a.ctx_ == b.ctx_ && a.basis_ == b.basis_ && a.maxdeg_ == b.maxdeg_ &&
           a.complete_to_ == b.complete_to_;
  }

private:
  PolyContext ctx_;
  std::vector<NCPoly> basis_;
  int maxdeg_;
  int complete_to_;
  std::shared_ptr<const RuleIndex> index_;
};

struct GroebnerOptions {
  /// Completion stops early once this many rules are live; complete_to then
  /// reports the last degree whose overlaps were all resolved.
  std::size_t max_rules = 50000;
};

/// Throws DomainError if maxdeg is below the degree of some relation.
TruncatedGB groebner(const Presentation& p, int maxdeg, const GroebnerOptions& options = {});

/// Fully reduces f by the rules (each rule is a monic polynomial whose
/// leading word is registered in `index` under its position in `rules`).
NCPoly reduce(const NCPoly& f, const std::vector<NCPoly>& rules, const RuleIndex& index,
              ReductionStrategy strategy = ReductionStrategy::Leftmost);

struct NormalForm {
  NCPoly value;
  /// False when deg(f) exceeds the basis's complete_to.
  bool verified;
};

NormalForm normal_form(const NCPoly& f, const TruncatedGB& gb,
                       ReductionStrategy strategy = ReductionStrategy::Leftmost);

struct MembershipResult {
  bool member;
  /// A negative verdict is exact (homogeneous ideal) rather than up-to-degree.
  bool exact;
  int degree_bound;
  NCPoly normal_form;
};

MembershipResult ideal_membership(const NCPoly& f, const Presentation& p, int maxdeg);

/// Number of words of length n divisible by no leading word of gb.
std::size_t count_normal_words(const TruncatedGB& gb, int n);
/// Number of normal words of length <= d.
std::size_t count_normal_words_up_to(const TruncatedGB& gb, int d);

/// Dimension of the degree-n component of a homogeneous presentation.
/// Throws DomainError for inhomogeneous relations or n > maxdeg.
std::size_t graded_dimension(const Presentation& p, int n, int maxdeg);

struct GenerationResult {
  /// A "true" verdict is a certificate; "false" only means no expression
  /// was found with products of at most `maxdeg` factors.
  bool generates;
  int maxdeg;
  std::size_t span_dimension;
};

GenerationResult is_generating(const std::vector<NCPoly>& elems, const Presentation& p, int maxdeg);

} // namespace fpalg

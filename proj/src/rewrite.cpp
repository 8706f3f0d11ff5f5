#include "fpalg/rewrite.hpp"

#include "fpalg/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

namespace fpalg {

void RuleIndex::add(const Word& lead, std::size_t rule) {
  if (by_lead_.emplace(lead, rule).second)
    ++lengths_[lead.size()];
}

void RuleIndex::remove(const Word& lead) {
  if (by_lead_.erase(lead)) {
    auto it = lengths_.find(lead.size());
    if (--it->second == 0)
      lengths_.erase(it);
  }
}

std::optional<RuleIndex::Match> RuleIndex::find(const Word& w, ReductionStrategy strategy) const {
  if (by_lead_.empty())
    return std::nullopt;
  const std::size_t n = w.size();
  auto probe = [&](std::size_t pos) -> std::optional<Match> {
    for (const auto& [len, count] : lengths_) {
      if (pos + len > n)
        break;
      auto it = by_lead_.find(w.substr(pos, len));
      if (it != by_lead_.end())
        return Match{it->second, pos};
    }
    return std::nullopt;
  };
  if (strategy == ReductionStrategy::Leftmost) {
    for (std::size_t pos = 0; pos <= n; ++pos)
      if (auto m = probe(pos))
        return m;
  } else {
    for (std::size_t pos = n + 1; pos-- > 0;)
      if (auto m = probe(pos))
        return m;
  }
  return std::nullopt;
}

bool RuleIndex::has_suffix_match(const Word& w) const {
  for (const auto& [len, count] : lengths_) {
    if (len > w.size())
      break;
    if (by_lead_.count(w.substr(w.size() - len, len)))
      return true;
  }
  return false;
}

NCPoly reduce(const NCPoly& f, const std::vector<NCPoly>& rules, const RuleIndex& index,
              ReductionStrategy strategy) {
  if (index.empty() || f.is_zero())
    return f;
  TermAccumulator work;
  for (const auto& [w, c] : f.terms())
    work.add(w, c);
  std::vector<NCPoly::Term> done;
  while (!work.empty()) {
    auto [w, c] = work.pop_largest();
    auto match = index.find(w, strategy);
    if (!match) {
      done.emplace_back(std::move(w), std::move(c));
      continue;
    }
    // w = a * lead * b; replace it by -c * a * tail * b.
    const NCPoly& rule = rules[match->rule];
    const std::size_t len = rule.leading_word().size();
    const Word left = w.substr(0, match->position);
    const Word right = w.substr(match->position + len);
    for (std::size_t i = 1; i < rule.terms().size(); ++i) {
      const auto& [u, d] = rule.terms()[i];
      work.add(left * u * right, -(c * d));
    }
  }
  // Terms were produced in strictly descending order.
  return NCPoly::from_terms(f.context(), std::move(done));
}

TruncatedGB::TruncatedGB(PolyContext ctx, std::vector<NCPoly> basis, int maxdeg, int complete_to)
    : ctx_(std::move(ctx)), basis_(std::move(basis)), maxdeg_(maxdeg), complete_to_(complete_to) {
  auto index = std::make_shared<RuleIndex>();
  for (std::size_t i = 0; i < basis_.size(); ++i)
    index->add(basis_[i].leading_word(), i);
  index_ = std::move(index);
}

namespace {

// One overlap ambiguity: lead(i) = a s, lead(j) = s b with s of length `overlap`.
struct Obstruction {
  Word word;
  std::size_t i;
  std::size_t j;
  std::size_t overlap;

  bool operator<(const Obstruction& o) const {
    if (word != o.word)
      return word < o.word;
    return std::tie(i, j, overlap) < std::tie(o.i, o.j, o.overlap);
  }
};

class Completion {
public:
  Completion(PolyContext ctx, int maxdeg, std::size_t max_rules)
      : ctx_(std::move(ctx)), maxdeg_(maxdeg), max_rules_(max_rules) {}

  void add(const NCPoly& f) {
    pending_.push_back(f);
    drain();
  }

  // Returns the degree up to which every overlap was resolved.
  int run() {
    while (!queue_.empty()) {
      Obstruction ob = *queue_.begin();
      queue_.erase(queue_.begin());
      if (!rules_[ob.i] || !rules_[ob.j])
        continue;
      const NCPoly& gi = *rules_[ob.i];
      const NCPoly& gj = *rules_[ob.j];
      const Word& li = gi.leading_word();
      const Word& lj = gj.leading_word();
      const Word a = li.substr(0, li.size() - ob.overlap);
      const Word b = lj.substr(ob.overlap);
      add(gi.sandwiched(Word(), b) - gj.sandwiched(a, Word()));
      if (live_ > max_rules_) {
        int done = maxdeg_;
        for (const auto& rest : queue_)
          done = std::min(done, static_cast<int>(rest.word.size()) - 1);
        return done;
      }
    }
    return maxdeg_;
  }

  std::vector<NCPoly> reduced_basis() const {
    std::vector<const NCPoly*> live;
    for (const auto& r : rules_)
      if (r)
        live.push_back(&*r);
    std::sort(live.begin(), live.end(),
              [](const NCPoly* a, const NCPoly* b) { return a->leading_word() < b->leading_word(); });
    std::vector<NCPoly> out;
    out.reserve(live.size());
    for (const NCPoly* r : live) {
      NCPoly lead = NCPoly::monomial(ctx_, r->leading_word(), r->leading_coefficient());
      NCPoly tail = *r - lead;
      out.push_back(lead + reduce(tail, rules_plain_, index_));
    }
    return out;
  }

private:
  void drain() {
    while (!pending_.empty()) {
      NCPoly g = reduce(pending_.front(), rules_plain_, index_);
      pending_.pop_front();
      if (g.is_zero())
        continue;
      g = g.monic();
      const Word lead = g.leading_word();

      for (std::size_t r = 0; r < rules_.size(); ++r) {
        if (!rules_[r] || !rules_[r]->leading_word().contains(lead))
          continue;
        index_.remove(rules_[r]->leading_word());
        pending_.push_back(*rules_[r]);
        rules_[r].reset();
        --live_;
      }

      const std::size_t idx = rules_.size();
      rules_.push_back(g);
      rules_plain_.push_back(g);
      index_.add(lead, idx);
      ++live_;
      for (std::size_t r = 0; r <= idx; ++r) {
        if (!rules_[r])
          continue;
        add_overlaps(idx, r);
        if (r != idx)
          add_overlaps(r, idx);
      }
    }
  }

  void add_overlaps(std::size_t i, std::size_t j) {
    const Word& li = rules_[i]->leading_word();
    const Word& lj = rules_[j]->leading_word();
    const std::size_t limit = std::min(li.size(), lj.size());
    for (std::size_t s = 1; s < limit; ++s) {
      if (li.size() + lj.size() - s > static_cast<std::size_t>(maxdeg_))
        continue;
      if (li.letters().compare(li.size() - s, s, lj.letters(), 0, s) != 0)
        continue;
      queue_.insert(Obstruction{li * lj.substr(s), i, j, s});
    }
  }

  PolyContext ctx_;
  int maxdeg_;
  std::size_t max_rules_;
  std::vector<std::optional<NCPoly>> rules_;
  std::vector<NCPoly> rules_plain_; // same positions as rules_, dead entries stay put
  RuleIndex index_;
  std::size_t live_ = 0;
  std::deque<NCPoly> pending_;
  std::set<Obstruction> queue_;
};

} // namespace

TruncatedGB groebner(const Presentation& p, int maxdeg, const GroebnerOptions& options) {
  if (maxdeg < p.max_relation_degree())
    throw DomainError("truncation degree " + std::to_string(maxdeg) +
                      " is below the relation degree " + std::to_string(p.max_relation_degree()));
  Completion completion(p.context(), maxdeg, options.max_rules);
  for (const auto& r : p.relations())
    completion.add(r);
  const int complete_to = completion.run();
  return TruncatedGB(p.context(), completion.reduced_basis(), maxdeg, complete_to);
}

NormalForm normal_form(const NCPoly& f, const TruncatedGB& gb, ReductionStrategy strategy) {
  if (f.context() != gb.context())
    throw DomainError("polynomial and Groebner basis live in different contexts");
  return NormalForm{reduce(f, gb.basis(), gb.index(), strategy), f.degree() <= gb.complete_to()};
}

MembershipResult ideal_membership(const NCPoly& f, const Presentation& p, int maxdeg) {
  if (f.degree() > maxdeg)
    throw DomainError("element of degree " + std::to_string(f.degree()) +
                      " exceeds the degree bound " + std::to_string(maxdeg));
  const int bound = std::max(maxdeg, p.max_relation_degree());
  const TruncatedGB gb = groebner(p, bound);
  NormalForm nf = normal_form(f, gb);
  const bool member = nf.value.is_zero();
  const bool exact = member || (p.is_homogeneous() && nf.verified);
  return MembershipResult{member, exact, bound, std::move(nf.value)};
}

namespace {

std::size_t count_words(const TruncatedGB& gb, Word& prefix, int remaining, bool all_lengths) {
  std::size_t total = all_lengths || remaining == 0 ? 1 : 0;
  if (remaining == 0)
    return total;
  const std::size_t m = gb.context().generators;
  for (std::size_t x = 0; x < m; ++x) {
    Word next = prefix * Word::letter(x);
    if (gb.index().has_suffix_match(next))
      continue;
    total += count_words(gb, next, remaining - 1, all_lengths);
  }
  return total;
}

bool has_unit_rule(const TruncatedGB& gb) {
  return std::any_of(gb.basis().begin(), gb.basis().end(),
                     [](const NCPoly& g) { return g.leading_word().empty(); });
}

} // namespace

std::size_t count_normal_words(const TruncatedGB& gb, int n) {
  if (n < 0 || has_unit_rule(gb))
    return 0;
  Word w;
  return count_words(gb, w, n, false);
}

std::size_t count_normal_words_up_to(const TruncatedGB& gb, int d) {
  if (d < 0 || has_unit_rule(gb))
    return 0;
  Word w;
  return count_words(gb, w, d, true);
}

std::size_t graded_dimension(const Presentation& p, int n, int maxdeg) {
  if (!p.is_homogeneous())
    throw DomainError("graded dimension needs homogeneous relations; use the filtered dimension instead");
  if (n > maxdeg)
    throw DomainError("degree " + std::to_string(n) + " exceeds the truncation degree " +
                      std::to_string(maxdeg));
  return count_normal_words(groebner(p, std::max(maxdeg, p.max_relation_degree())), n);
}

GenerationResult is_generating(const std::vector<NCPoly>& elems, const Presentation& p, int maxdeg) {
  if (maxdeg < p.max_relation_degree())
    throw DomainError("degree bound " + std::to_string(maxdeg) + " is below the relation degree " +
                      std::to_string(p.max_relation_degree()));
  const PolyContext ctx = p.context();
  for (const auto& e : elems)
    if (e.context() != ctx)
      throw DomainError("candidate generator does not belong to the presented algebra");
  const TruncatedGB gb = groebner(p, maxdeg);

  // V_j = span of products of at most j factors; only the vectors that
  // enlarged V_j need to be multiplied to obtain V_{j+1}.
  SpanBasis span(ctx);
  std::size_t tag = 0;
  std::vector<NCPoly> frontier;
  NCPoly one = normal_form(NCPoly::constant(ctx, Scalar(1)), gb).value;
  if (span.insert(one, tag++))
    frontier.push_back(one);
  for (int j = 1; j <= maxdeg && !frontier.empty(); ++j) {
    std::vector<NCPoly> next;
    for (const auto& v : frontier)
      for (const auto& e : elems) {
        NCPoly prod = normal_form(e * v, gb).value;
        if (span.insert(prod, tag++))
          next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }

  bool all = true;
  for (std::size_t i = 0; i < ctx.generators && all; ++i)
    all = span.contains(normal_form(NCPoly::generator(ctx, i), gb).value);
  return GenerationResult{all, maxdeg, span.dimension()};
}

} // namespace fpalg

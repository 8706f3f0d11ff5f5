#include "fpalg/presentation.hpp"

#include "fpalg/error.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace fpalg {

Presentation::Presentation(std::string name, std::vector<std::string> generator_names,
                           FieldSpec field, std::vector<NCPoly> relations)
    : name_(std::move(name)), generator_names_(std::move(generator_names)), field_(field),
      relations_(std::move(relations)) {
  std::set<std::string> seen;
  for (const auto& g : generator_names_)
    if (!seen.insert(g).second)
      throw DomainError("generator name '" + g + "' declared twice");
  const PolyContext ctx = context();
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (relations_[i].is_zero())
      throw DomainError("relation " + std::to_string(i + 1) + " is identically zero");
    if (relations_[i].context() != ctx)
      throw DomainError("relation " + std::to_string(i + 1) +
                        " does not match the presentation's generators and field");
  }
}

std::vector<std::string> Presentation::standard_names(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i)
    names.push_back("x" + std::to_string(i + 1));
  return names;
}

int Presentation::max_relation_degree() const {
  int d = 0;
  for (const auto& r : relations_)
    d = std::max(d, r.degree());
  return d;
}

bool Presentation::is_homogeneous() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [](const NCPoly& r) { return r.is_homogeneous(); });
}

Presentation Presentation::with_relations(std::vector<NCPoly> relations) const {
  return Presentation(name_, generator_names_, field_, std::move(relations));
}

Presentation Presentation::renamed(std::string name) const {
  Presentation p(*this);
  p.name_ = std::move(name);
  return p;
}

bool presentations_equal(const Presentation& p, const Presentation& q) {
  return p.field() == q.field() && p.generator_names() == q.generator_names() &&
         p.relations() == q.relations();
}

Presentation twist(const Presentation& p, const FieldAutomorphism& sigma) {
  if (sigma.k() != p.field().k)
    throw DomainError("automorphism acts on " + FieldSpec{sigma.k()}.to_string() +
                      " but the presentation is over " + p.field().to_string());
  const FieldAutomorphism inv = sigma.inverse();
  std::vector<NCPoly> rels;
  rels.reserve(p.relations().size());
  for (const auto& r : p.relations())
    rels.push_back(r.map_coefficients(inv));
  return p.with_relations(std::move(rels));
}

namespace {

std::vector<const Scalar*> coefficient_sequence(const Presentation& p) {
  std::vector<const Scalar*> out;
  for (const auto& r : p.relations())
    for (const auto& t : r.terms())
      out.push_back(&t.second);
  return out;
}

std::strong_ordering compare_polys(const IntPoly& a, const IntPoly& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (auto c = grlex_compare(x[i].first, y[i].first); c != 0)
      return c;
    if (int c = cmp(x[i].second, y[i].second); c != 0)
      return c <=> 0;
  }
  return x.size() <=> y.size();
}

// A fixed total order on field elements; only used to pick canonical labels.
std::strong_ordering compare_scalars(const Scalar& a, const Scalar& b) {
  if (auto c = compare_polys(a.numerator(), b.numerator()); c != 0)
    return c;
  return compare_polys(a.denominator(), b.denominator());
}

constexpr std::size_t kUnlabeled = static_cast<std::size_t>(-1);

// Depth-first search for a labeling of the transcendentals that is invariant
// under renaming them. Each coefficient labels its not-yet-labeled generators;
// among the orderings, those whose relabeled coefficient visits the new labels
// in increasing order are preferred, and among those the smallest relabeled
// coefficient wins. Exact ties branch; the smallest resulting coefficient
// sequence (then the smallest labeling) is chosen at the leaves.
class CanonicalLabeler {
public:
  explicit CanonicalLabeler(const Presentation& p) : coeffs_(coefficient_sequence(p)), k_(p.field().k) {}

  std::vector<std::size_t> run() {
    std::vector<std::size_t> label(k_, kUnlabeled);
    search(0, label, 0);
    return best_label_;
  }

private:
  static constexpr std::size_t kMaxLeaves = 200000;

  void search(std::size_t pos, std::vector<std::size_t>& label, std::size_t next) {
    std::vector<std::size_t> fresh;
    while (pos < coeffs_.size()) {
      for (auto g : coeffs_[pos]->generators_in_order())
        if (label[g] == kUnlabeled)
          fresh.push_back(g);
      if (!fresh.empty())
        break;
      ++pos;
    }
    if (pos == coeffs_.size()) {
      leaf(label);
      return;
    }

    std::sort(fresh.begin(), fresh.end());
    struct Option {
      std::vector<std::size_t> order;
      Scalar relabeled;
      bool consistent;
    };
    std::vector<Option> options;
    std::vector<std::size_t> relabel(k_, 0);
    do {
      for (std::size_t g = 0; g < k_; ++g)
        relabel[g] = label[g] == kUnlabeled ? 0 : label[g];
      for (std::size_t j = 0; j < fresh.size(); ++j)
        relabel[fresh[j]] = next + j;
      Scalar c = coeffs_[pos]->relabeled(relabel);
      std::size_t expect = next;
      bool consistent = true;
      for (auto g : c.generators_in_order()) {
        if (g < next)
          continue;
        if (g != expect) {
          consistent = false;
          break;
        }
        ++expect;
      }
      options.push_back(Option{fresh, std::move(c), consistent});
    } while (std::next_permutation(fresh.begin(), fresh.end()));

    const bool any_consistent =
        std::any_of(options.begin(), options.end(), [](const Option& o) { return o.consistent; });
    const Option* min = nullptr;
    for (const auto& o : options) {
      if (any_consistent && !o.consistent)
        continue;
      if (!min || compare_scalars(o.relabeled, min->relabeled) < 0)
        min = &o;
    }
    for (const auto& o : options) {
      if ((any_consistent && !o.consistent) || compare_scalars(o.relabeled, min->relabeled) != 0)
        continue;
      for (std::size_t j = 0; j < o.order.size(); ++j)
        label[o.order[j]] = next + j;
      search(pos + 1, label, next + o.order.size());
      for (auto g : o.order)
        label[g] = kUnlabeled;
    }
  }

  void leaf(const std::vector<std::size_t>& label) {
    if (++leaves_ > kMaxLeaves)
      throw DomainError("canonical labeling search exceeded " + std::to_string(kMaxLeaves) +
                        " branches (highly symmetric coefficients)");
    std::vector<std::size_t> relabel(k_, 0);
    for (std::size_t g = 0; g < k_; ++g)
      relabel[g] = label[g] == kUnlabeled ? 0 : label[g];
    std::vector<Scalar> seq;
    seq.reserve(coeffs_.size());
    for (const Scalar* c : coeffs_)
      seq.push_back(c->width() ? c->relabeled(relabel) : *c);

    bool better = !have_best_;
    if (!better) {
      std::strong_ordering cmp = std::strong_ordering::equal;
      for (std::size_t i = 0; i < seq.size() && cmp == 0; ++i)
        cmp = compare_scalars(seq[i], best_seq_[i]);
      better = cmp < 0 || (cmp == 0 && label < best_label_);
    }
    if (better) {
      have_best_ = true;
      best_seq_ = std::move(seq);
      best_label_ = label;
    }
  }

  std::vector<const Scalar*> coeffs_;
  std::size_t k_;
  std::size_t leaves_ = 0;
  bool have_best_ = false;
  std::vector<Scalar> best_seq_;
  std::vector<std::size_t> best_label_;
};

} // namespace

std::vector<std::size_t> transcendental_support(const Presentation& p) {
  std::vector<std::size_t> out;
  for (const Scalar* c : coefficient_sequence(p))
    for (auto g : c->generators_in_order())
      if (std::find(out.begin(), out.end(), g) == out.end())
        out.push_back(g);
  return out;
}

Canonicalization canonicalize(const Presentation& p) {
  const std::size_t k = p.field().k;
  std::vector<std::size_t> label = CanonicalLabeler(p).run();

  // sigma(t_i) = the generator that received label i; unlabeled generators
  // fill the remaining slots in increasing order.
  std::vector<std::size_t> perm(k, kUnlabeled);
  std::vector<bool> used(k, false);
  std::size_t r = 0;
  for (std::size_t g = 0; g < k; ++g)
    if (label[g] != kUnlabeled) {
      perm[label[g]] = g;
      used[g] = true;
      ++r;
    }
  std::size_t slot = r;
  for (std::size_t g = 0; g < k; ++g)
    if (!used[g])
      perm[slot++] = g;

  FieldAutomorphism sigma = FieldAutomorphism::permutation(perm);
  return Canonicalization{twist(p, sigma), sigma};
}

bool is_over_subfield(const Presentation& p, std::size_t r) {
  for (const Scalar* c : coefficient_sequence(p))
    if (!c->lies_in(r))
      return false;
  return true;
}

} // namespace fpalg

#include "fpalg/freealg.hpp"

#include "fpalg/error.hpp"

#include <algorithm>

namespace fpalg {

Word::Word(std::initializer_list<std::size_t> letters) {
  letters_.reserve(letters.size());
  for (auto l : letters)
    letters_.push_back(static_cast<Letter>(l));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size())
    return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i])
      return b[i] <=> a[i]; // smaller index is the greater letter
  return std::strong_ordering::equal;
}

void TermAccumulator::add(const Word& w, const Scalar& c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

NCPoly::Term TermAccumulator::pop_largest() {
  auto node = terms_.extract(terms_.begin());
  return {std::move(node.key()), std::move(node.mapped())};
}

// ---------------------------------------------------------------------------

NCPoly NCPoly::constant(const PolyContext& ctx, const Scalar& c) {
  return monomial(ctx, Word(), c);
}

NCPoly NCPoly::generator(const PolyContext& ctx, std::size_t index) {
  return monomial(ctx, Word::letter(index));
}

NCPoly NCPoly::monomial(const PolyContext& ctx, const Word& w, const Scalar& c) {
  std::vector<Term> t;
  t.emplace_back(w, c);
  return from_terms(ctx, std::move(t));
}

NCPoly NCPoly::from_terms(const PolyContext& ctx, std::vector<Term> terms) {
  for (const auto& [w, c] : terms) {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] >= ctx.generators)
        throw DomainError("word uses generator x" + std::to_string(w[i] + 1) + " but only " +
                          std::to_string(ctx.generators) + " generators exist");
    if (!c.lies_in(ctx.field.k))
      throw DomainError("coefficient " + c.to_string() + " lies outside " + ctx.field.to_string());
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
  NCPoly p(ctx);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else {
      if (!p.terms_.empty() && p.terms_.back().second.is_zero())
        p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second.is_zero())
    p.terms_.pop_back();
  return p;
}

int NCPoly::min_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.back().first.size());
}

bool NCPoly::is_homogeneous() const { return degree() == min_degree(); }

Scalar NCPoly::coefficient(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& key) { return t.first > key; });
  if (it != terms_.end() && it->first == w)
    return it->second;
  return Scalar();
}

void NCPoly::require_same_context(const NCPoly& other) const {
  if (ctx_ != other.ctx_)
    throw DomainError("polynomials live in different contexts (" + std::to_string(ctx_.generators) +
                      " generators over " + ctx_.field.to_string() + " vs " +
                      std::to_string(other.ctx_.generators) + " generators over " +
                      other.ctx_.field.to_string() + ")");
}

NCPoly NCPoly::operator-() const {
  NCPoly r(*this);
  for (auto& t : r.terms_)
    t.second = -t.second;
  return r;
}

NCPoly NCPoly::operator+(const NCPoly& other) const {
  require_same_context(other);
  NCPoly r(ctx_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end() || (i != terms_.end() && i->first > j->first))
      r.terms_.push_back(*i++);
    else if (i == terms_.end() || j->first > i->first)
      r.terms_.push_back(*j++);
    else {
      Scalar s = i->second + j->second;
      if (!s.is_zero())
        r.terms_.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& other) const { return *this + (-other); }

NCPoly NCPoly::operator*(const NCPoly& other) const {
  require_same_context(other);
  TermAccumulator acc;
  for (const auto& [u, a] : terms_)
    for (const auto& [v, b] : other.terms_)
      acc.add(u * v, a * b);
  NCPoly r(ctx_);
  while (!acc.empty())
    r.terms_.push_back(acc.pop_largest());
  return r;
}

NCPoly NCPoly::scaled(const Scalar& c) const {
  if (!c.lies_in(ctx_.field.k))
    throw DomainError("scalar " + c.to_string() + " lies outside " + ctx_.field.to_string());
  NCPoly r(ctx_);
  if (c.is_zero())
    return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [w, a] : terms_)
    r.terms_.emplace_back(w, a * c);
  return r;
}

NCPoly NCPoly::sandwiched(const Word& left, const Word& right) const {
  // Multiplying every word by fixed words on both sides preserves deglex order.
  NCPoly r(*this);
  for (auto& t : r.terms_)
    t.first = left * t.first * right;
  return r;
}

NCPoly NCPoly::monic() const {
  if (terms_.empty() || leading_coefficient().is_one())
    return *this;
  return scaled(leading_coefficient().inverse());
}

NCPoly NCPoly::homogeneous_component(int d) const {
  NCPoly r(ctx_);
  for (const auto& t : terms_)
    if (static_cast<int>(t.first.size()) == d)
      r.terms_.push_back(t);
  return r;
}

NCPoly NCPoly::substitute(std::span<const NCPoly> images) const {
  if (images.size() != ctx_.generators)
    throw DomainError("substitution needs " + std::to_string(ctx_.generators) + " images, got " +
                      std::to_string(images.size()));
  if (images.empty())
    return *this;
  const PolyContext& target = images.front().context();
  for (const auto& im : images)
    if (im.context() != target)
      throw DomainError("substitution images live in different contexts");
  if (target.field != ctx_.field)
    throw DomainError("substitution images are over " + target.field.to_string() +
                      " but the polynomial is over " + ctx_.field.to_string());

  NCPoly result(target);
  for (const auto& [w, c] : terms_) {
    NCPoly term = NCPoly::constant(target, c);
    for (std::size_t i = 0; i < w.size(); ++i)
      term = term * images[w[i]];
    result = result + term;
  }
  return result;
}

NCPoly NCPoly::map_coefficients(const FieldAutomorphism& sigma) const {
  if (sigma.k() != ctx_.field.k)
    throw DomainError("automorphism acts on Q(t1..t" + std::to_string(sigma.k()) +
                      ") but the polynomial is over " + ctx_.field.to_string());
  NCPoly r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& [w, c] : terms_)
    r.terms_.emplace_back(w, sigma.apply(c));
  return r;
}

} // namespace fpalg

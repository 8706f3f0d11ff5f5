#include "fpalg/linalg.hpp"

#include <algorithm>
#include <list>

namespace fpalg {

namespace {

void axpy(Combination& target, const Scalar& c, const Combination& source) {
  for (const auto& [tag, v] : source) {
    auto [it, inserted] = target.try_emplace(tag, c * v);
    if (!inserted) {
      it->second += c * v;
      if (it->second.is_zero())
        target.erase(it);
    }
  }
}

} // namespace

const SpanBasis::Row* SpanBasis::pivot_for(const Word& w) const {
  auto it = pivot_.find(w);
  return it == pivot_.end() ? nullptr : &rows_[it->second];
}

bool SpanBasis::insert(const NCPoly& v, std::size_t tag) {
  NCPoly cur = v;
  Combination combo{{tag, Scalar(1)}};
  // Invariant: cur = sum combo[i] * input[i].
  while (!cur.is_zero()) {
    const Row* row = pivot_for(cur.leading_word());
    if (!row)
      break;
    const Scalar c = cur.leading_coefficient();
    cur = cur - row->vec.scaled(c);
    axpy(combo, -c, row->combo);
  }
  if (cur.is_zero())
    return false;
  const Scalar inv = cur.leading_coefficient().inverse();
  cur = cur.scaled(inv);
  for (auto& [t, s] : combo)
    s *= inv;
  pivot_.emplace(cur.leading_word(), rows_.size());
  rows_.push_back(Row{std::move(cur), std::move(combo)});
  return true;
}

bool SpanBasis::contains(const NCPoly& v) const { return express(v).has_value(); }

std::optional<Combination> SpanBasis::express(const NCPoly& v) const {
  NCPoly cur = v;
  Combination combo;
  // Invariant: v = cur + sum combo[i] * input[i].
  while (!cur.is_zero()) {
    const Row* row = pivot_for(cur.leading_word());
    if (!row)
      return std::nullopt;
    const Scalar c = cur.leading_coefficient();
    cur = cur - row->vec.scaled(c);
    axpy(combo, c, row->combo);
  }
  return combo;
}

// ---------------------------------------------------------------------------

namespace {

using IntRow = std::map<std::size_t, IntPoly>;

IntPoly lcm(const IntPoly& a, const IntPoly& b) {
  return *IntPoly::divide_exact(a * b, gcd(a, b));
}

void make_primitive(IntRow& row) {
  IntPoly g;
  for (const auto& [col, v] : row) {
    g = gcd(g, v);
    if (g.is_one())
      return;
  }
  if (g.is_zero() || g.is_one())
    return;
  for (auto& [col, v] : row)
    v = *IntPoly::divide_exact(v, g);
}

std::size_t weight(const IntRow& row) {
  std::size_t w = 0;
  for (const auto& [col, v] : row)
    w += v.terms().size();
  return w;
}

} // namespace

std::size_t exact_rank(const std::vector<SparseRow>& rows) {
  std::list<IntRow> active;
  for (const auto& row : rows) {
    IntPoly common(1);
    for (const auto& [col, v] : row)
      if (!v.is_zero())
        common = lcm(common, v.denominator());
    IntRow r;
    for (const auto& [col, v] : row)
      if (!v.is_zero())
        r.emplace(col, v.numerator() * *IntPoly::divide_exact(common, v.denominator()));
    if (r.empty())
      continue;
    make_primitive(r);
    active.push_back(std::move(r));
  }

  std::size_t rank = 0;
  while (!active.empty()) {
    std::size_t col = static_cast<std::size_t>(-1);
    for (const auto& r : active)
      col = std::min(col, r.begin()->first);

    // Sparsest row with an entry in `col` becomes the pivot.
    auto pivot = active.end();
    for (auto it = active.begin(); it != active.end(); ++it) {
      if (it->begin()->first != col)
        continue;
      if (pivot == active.end() || it->size() < pivot->size() ||
          (it->size() == pivot->size() && weight(*it) < weight(*pivot)))
        pivot = it;
    }
    IntRow prow = std::move(*pivot);
    active.erase(pivot);
    ++rank;
    const IntPoly& p = prow.begin()->second;

    for (auto it = active.begin(); it != active.end();) {
      if (it->begin()->first != col) {
        ++it;
        continue;
      }
      const IntPoly a = it->begin()->second;
      const IntPoly g = gcd(a, p);
      const IntPoly pf = *IntPoly::divide_exact(p, g);
      const IntPoly af = *IntPoly::divide_exact(a, g);
      IntRow next;
      for (const auto& [c, v] : *it) {
        if (c == col)
          continue;
        next.emplace(c, v * pf);
      }
      for (const auto& [c, v] : prow) {
        if (c == col)
          continue;
        auto [slot, inserted] = next.try_emplace(c, -(v * af));
        if (!inserted) {
          slot->second = slot->second - v * af;
          if (slot->second.is_zero())
            next.erase(slot);
        }
      }
      if (next.empty()) {
        it = active.erase(it);
        continue;
      }
      make_primitive(next);
      *it = std::move(next);
      ++it;
    }
  }
  return rank;
}

} // namespace fpalg

#include "fpalg/morita.hpp"

#include "fpalg/error.hpp"
#include "fpalg/linalg.hpp"

#include <algorithm>

namespace fpalg {

namespace {

std::string unit_name(std::size_t n, std::size_t i, std::size_t j) {
  const std::string a = std::to_string(i + 1), b = std::to_string(j + 1);
  return n > 9 ? "e" + a + "_" + b : "e" + a + b;
}

int gb_degree(const Presentation& p, int wanted) { return std::max(wanted, p.max_relation_degree()); }

} // namespace

NCPoly MatrixPresentation::unit_element(std::size_t i, std::size_t j) const {
  return NCPoly::generator(pres.context(), unit(i, j));
}

NCPoly MatrixPresentation::identity() const { return NCPoly::constant(pres.context(), Scalar(1)); }

MatrixPresentation matrix_presentation(const Presentation& base, std::size_t n) {
  if (n == 0)
    throw DomainError("matrix size must be at least 1");
  MatrixPresentation mp;
  mp.base = base;
  mp.n = n;
  const std::size_t m = base.generators();

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      names.push_back(unit_name(n, i, j));
  for (std::size_t k = 0; k < m; ++k)
    names.push_back("z" + std::to_string(k + 1));
  const PolyContext ctx{names.size(), base.field()};
  auto gen = [&](std::size_t idx) { return NCPoly::generator(ctx, idx); };
  const NCPoly one = NCPoly::constant(ctx, Scalar(1));

  std::vector<NCPoly> rels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          NCPoly r = gen(mp.unit(i, j)) * gen(mp.unit(k, l));
          if (j == k)
            r = r - gen(mp.unit(i, l));
          rels.push_back(std::move(r));
        }
  NCPoly sum = -one;
  for (std::size_t i = 0; i < n; ++i)
    sum = sum + gen(mp.unit(i, i));
  rels.push_back(std::move(sum));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        rels.push_back(gen(mp.lift(k)) * gen(mp.unit(i, j)) - gen(mp.unit(i, j)) * gen(mp.lift(k)));
  std::vector<NCPoly> lifts;
  for (std::size_t k = 0; k < m; ++k)
    lifts.push_back(gen(mp.lift(k)));
  for (const auto& r : base.relations())
    rels.push_back(r.substitute(lifts));

  mp.pres = Presentation("M" + std::to_string(n) + "_" + base.name(), std::move(names), base.field(),
                         std::move(rels));
  return mp;
}

bool twist_matrix_commutes(const Presentation& p, std::size_t n, const FieldAutomorphism& sigma) {
  return presentations_equal(matrix_presentation(twist(p, sigma), n).pres,
                             twist(matrix_presentation(p, n).pres, sigma));
}

std::size_t filtered_dimension(const Presentation& p, int d) {
  if (d < 0)
    throw DomainError("filtration degree must be nonnegative");
  return count_normal_words_up_to(groebner(p, gb_degree(p, d + 2)), d);
}

std::size_t filtered_dimension(const MatrixPresentation& mp, int d) { return filtered_dimension(mp.pres, d); }

namespace {

void require_member(const NCPoly& e, const Presentation& p) {
  if (e.context() != p.context())
    throw DomainError("element does not belong to the matrix presentation");
}

bool idempotent_with(const NCPoly& e, const TruncatedGB& gb) {
  const NCPoly f = e * e - e;
  if (f.degree() > gb.complete_to())
    throw UnverifiedError("e*e - e has degree " + std::to_string(f.degree()) +
                          " but the truncated basis is complete only to degree " +
                          std::to_string(gb.complete_to()));
  return normal_form(f, gb).value.is_zero();
}

} // namespace

bool verify_idempotent(const NCPoly& e, const MatrixPresentation& mp, int d) {
  require_member(e, mp.pres);
  return idempotent_with(e, groebner(mp.pres, gb_degree(mp.pres, d)));
}

std::vector<Word> words_of_length(std::size_t m, int n) {
  std::vector<Word> out{Word()};
  for (int step = 0; step < n; ++step) {
    std::vector<Word> next;
    next.reserve(out.size() * m);
    for (const auto& w : out)
      for (std::size_t x = 0; x < m; ++x)
        next.push_back(w * Word::letter(x));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FullnessResult is_full_idempotent(const NCPoly& e, const MatrixPresentation& mp, int d) {
  require_member(e, mp.pres);
  if (d < 0)
    throw DomainError("degree bound must be nonnegative");
  const PolyContext ctx = mp.pres.context();
  const int de = std::max(e.degree(), 0);
  const TruncatedGB gb = groebner(mp.pres, gb_degree(mp.pres, std::max(d + de, 2 * de)));
  if (normal_form(e, gb).value.is_zero())
    throw DomainError("the zero element generates the zero ideal and is never full");
  if (!idempotent_with(e, gb))
    throw DomainError("element is not idempotent");

  const NCPoly one = normal_form(NCPoly::constant(ctx, Scalar(1)), gb).value;
  SpanBasis span(ctx);
  std::vector<std::pair<Word, Word>> tags;
  for (int s = 0; s <= d; ++s) {
    for (int lu = 0; lu <= s; ++lu)
      for (const Word& u : words_of_length(ctx.generators, lu))
        for (const Word& v : words_of_length(ctx.generators, s - lu)) {
          span.insert(normal_form(e.sandwiched(u, v), gb).value, tags.size());
          tags.emplace_back(u, v);
        }
    auto combo = span.express(one);
    if (!combo)
      continue;
    FullnessResult res{true, s, {}};
    NCPoly check = -NCPoly::constant(ctx, Scalar(1));
    for (const auto& [tag, c] : *combo) {
      res.certificate.push_back(SandwichTerm{c, tags[tag].first, tags[tag].second});
      check = check + e.sandwiched(tags[tag].first, tags[tag].second).scaled(c);
    }
    if (!normal_form(check, gb).value.is_zero())
      throw Error("fullness certificate failed re-verification");
    return res;
  }
  return FullnessResult{false, d, {}};
}

std::vector<std::size_t> corner_filtered_dims(const NCPoly& e, const MatrixPresentation& mp, int d) {
  require_member(e, mp.pres);
  if (d < 0)
    throw DomainError("filtration degree must be nonnegative");
  const PolyContext ctx = mp.pres.context();
  const int de = std::max(e.degree(), 0);
  const TruncatedGB gb = groebner(mp.pres, gb_degree(mp.pres, d + 2 * de + 2));
  if (!idempotent_with(e, gb))
    throw DomainError("element is not idempotent");

  std::vector<std::size_t> dims;
  SpanBasis span(ctx);
  std::size_t tag = 0;
  for (int c = 0; c <= d; ++c) {
    for (const Word& w : words_of_length(ctx.generators, c))
      span.insert(normal_form(e * NCPoly::monomial(ctx, w) * e, gb).value, tag++);
    dims.push_back(span.dimension());
  }
  return dims;
}

} // namespace fpalg

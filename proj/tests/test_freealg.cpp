#include "support.hpp"

#include "fpalg/error.hpp"
#include "fpalg/text.hpp"

#include <doctest.h>

using namespace fpalg;
using namespace testing;

namespace {

const PolyContext kCtx2{2, FieldSpec{1}};
const std::vector<std::string> kNames = {"x1", "x2"};

NCPoly P(const char* text, const PolyContext& ctx = kCtx2) {
  return parse_polynomial(text, ctx, Presentation::standard_names(ctx.generators));
}

} // namespace

TEST_CASE("deglex word order") {
  CHECK(Word{0, 0} > Word{0, 1});
  CHECK(Word{1, 1, 1} > Word{0, 0});
  CHECK((Word{0, 1} <=> Word{0, 1}) == std::strong_ordering::equal);
  CHECK(Word{} < Word{1});
  CHECK(word_compare(Word{1, 0}, Word{0, 1}) == std::strong_ordering::less);
}

TEST_CASE("deglex is compatible with multiplication") {
  Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const Word u = random_word(rng, 3, static_cast<int>(uniform(rng, 0, 4)));
    const Word v = random_word(rng, 3, static_cast<int>(uniform(rng, 0, 4)));
    const Word w = random_word(rng, 3, static_cast<int>(uniform(rng, 0, 3)));
    if (u == v)
      continue;
    const bool gt = u > v;
    CHECK((w * u > w * v) == gt);
    CHECK((u * w > v * w) == gt);
  }
}

TEST_CASE("polynomial arithmetic examples") {
  CHECK(P("(x1 + x2)*x1") == P("x1*x1 + x2*x1"));
  const NCPoly f = P("3 + x1 + (t)*x1*x2");
  CHECK((f - f).is_zero());
  CHECK(f.scaled(Scalar(0)).is_zero());
  CHECK(f.degree() == 2);
  CHECK(NCPoly(kCtx2).degree() == -1);
  CHECK(f.leading_word() == Word{0, 1});
  CHECK_THROWS_AS(f + P("x1", PolyContext{3, FieldSpec{1}}), DomainError);
}

TEST_CASE("homogeneous components") {
  const NCPoly f = P("3 + x1 + x1*x2");
  CHECK(f.homogeneous_component(2) == P("x1*x2"));
  CHECK(f.homogeneous_component(0) == P("3"));
  CHECK(f.homogeneous_component(5).is_zero());
  CHECK(f.homogeneous_component(0) + f.homogeneous_component(1) + f.homogeneous_component(2) == f);
  CHECK(!f.is_homogeneous());
  CHECK(f.min_degree() == 0);
}

TEST_CASE("substitution") {
  const NCPoly x1 = NCPoly::generator(kCtx2, 0), x2 = NCPoly::generator(kCtx2, 1);
  CHECK(P("x1*x2").substitute(std::vector<NCPoly>{x2, x1}) == P("x2*x1"));
  CHECK(P("x1*x1 + x2*x2 + (t)*x1*x2").substitute(std::vector<NCPoly>{x1, -x2}) ==
        P("x1*x1 + x2*x2 - (t)*x1*x2"));
  const NCPoly f = P("3 + (t/2)*x1*x2*x1 - x2");
  CHECK(f.substitute(std::vector<NCPoly>{x1, x2}) == f);
  CHECK_THROWS_AS(f.substitute(std::vector<NCPoly>{x1}), DomainError);
}

TEST_CASE("coefficient maps") {
  const FieldAutomorphism s = parse_automorphism("t -> t + 1", FieldSpec{1});
  CHECK(P("(t)*x1*x2").map_coefficients(s) == P("(t + 1)*x1*x2"));
  CHECK(P("(t)*x1*x2").map_coefficients(FieldAutomorphism::identity(1)) == P("(t)*x1*x2"));
  CHECK(P("x1").map_coefficients(s) == P("x1"));
}

TEST_CASE("ring laws on random elements") {
  Rng rng(22);
  const PolyContext ctx{3, FieldSpec{2}};
  for (int i = 0; i < 500; ++i) {
    const NCPoly f = random_ncpoly(rng, ctx, 3, 0, 2);
    const NCPoly g = random_ncpoly(rng, ctx, 3, 0, 2);
    const NCPoly h = random_ncpoly(rng, ctx, 3, 0, 2);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f + g) * h == f * h + g * h);
    for (std::size_t j = 1; j < f.terms().size(); ++j)
      CHECK(f.terms()[j - 1].first > f.terms()[j].first);
  }
}

TEST_CASE("substitution and coefficient maps respect the operations") {
  Rng rng(23);
  const PolyContext ctx{2, FieldSpec{2}};
  const PolyContext target{3, FieldSpec{2}};
  for (int i = 0; i < 200; ++i) {
    const NCPoly f = random_ncpoly(rng, ctx, 3, 0, 2);
    const NCPoly g = random_ncpoly(rng, ctx, 3, 0, 2);
    const std::vector<NCPoly> images = {random_ncpoly(rng, target, 2, 0, 2), random_ncpoly(rng, target, 2, 0, 2)};
    CHECK((f * g).substitute(images) == f.substitute(images) * g.substitute(images));
    CHECK((f + g).substitute(images) == f.substitute(images) + g.substitute(images));
    const FieldAutomorphism s = random_automorphism(rng, 2);
    CHECK((f * g).map_coefficients(s) == f.map_coefficients(s) * g.map_coefficients(s));
    CHECK((f + g).map_coefficients(s) == f.map_coefficients(s) + g.map_coefficients(s));
    CHECK((f - g).map_coefficients(s) == f.map_coefficients(s) - g.map_coefficients(s));
    const Scalar c = random_scalar(rng, 2);
    CHECK(f.scaled(c).map_coefficients(s) == f.map_coefficients(s).scaled(s.apply(c)));
  }
}

TEST_CASE("polynomial text round trip") {
  Rng rng(24);
  const PolyContext ctx{3, FieldSpec{2}};
  const auto names = Presentation::standard_names(3);
  for (int i = 0; i < 300; ++i) {
    const NCPoly f = random_ncpoly(rng, ctx, 4, 0, 3, 2);
    CHECK(parse_polynomial(format_polynomial(f, names), ctx, names) == f);
  }
  CHECK(format_polynomial(P("x1*x1 + x2*x2 + (t)*x1*x2"), kNames) == "x1*x1 + (t)*x1*x2 + x2*x2");
  CHECK(format_polynomial(P("-x1 + 1/2 - 3*x2*x1"), kNames) == "-3*x2*x1 - x1 + (1/2)");
  CHECK(format_polynomial(NCPoly(kCtx2), kNames) == "0");
}

TEST_CASE("polynomial parse errors") {
  CHECK_THROWS_AS(P("x3"), ParseError);
  CHECK_THROWS_AS(P("x1 +"), ParseError);
  CHECK_THROWS_AS(P("(t2)*x1"), ParseError);
  CHECK_THROWS_AS(P("x1/x2"), Error);
  CHECK_THROWS_AS(P("x1/0"), DomainError);
}

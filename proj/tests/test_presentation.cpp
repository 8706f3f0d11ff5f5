#include "support.hpp"

#include "fpalg/error.hpp"
#include "fpalg/rewrite.hpp"
#include "fpalg/text.hpp"

#include <doctest.h>

using namespace fpalg;
using namespace testing;

namespace {

Presentation parse(const std::string& text) { return parse_presentation(text); }

Presentation one_relation(std::size_t k, const std::string& rel) {
  return parse("algebra A over " + FieldSpec{k}.to_string() + " generators x1 x2 relations { " + rel + " = 0; }");
}

std::vector<std::string> support_names(const Presentation& p) {
  std::vector<std::string> out;
  for (std::size_t i : transcendental_support(p))
    out.push_back("t" + std::to_string(i + 1));
  return out;
}

} // namespace

TEST_CASE("presentation file grammar") {
  const Presentation p = parse(R"(
    # the generic member of the family
    algebra A over Q(t)
    generators x1 x2
    relations {
      x1*x1 + x2*x2 + (t)*x1*x2 = 0;
    }
  )");
  CHECK(p.name() == "A");
  CHECK(p.generators() == 2);
  CHECK(p.field() == FieldSpec{1});
  REQUIRE(p.relations().size() == 1);
  CHECK(p.relations()[0].terms().size() == 3);
  CHECK(p.is_homogeneous());

  const Presentation free = parse("algebra F over Q generators a b c relations { }");
  CHECK(free.relations().empty());
  CHECK(free.generator_names() == std::vector<std::string>{"a", "b", "c"});

  // lhs = rhs is stored as lhs - rhs.
  const Presentation q = parse("algebra C over Q generators x y relations { x*y = y*x; }");
  CHECK(format_polynomial(q.relations()[0], q.generator_names()) == "x*y - y*x");
}

TEST_CASE("presentation parse errors carry positions") {
  CHECK_THROWS_AS(parse("algebra A over Q(t1) generators x1 relations { (t2)*x1 = 0; }"), ParseError);
  CHECK_THROWS_AS(parse("algebra A over Q generators x1 relations { x2 = 0; }"), ParseError);
  CHECK_THROWS_AS(parse("algebra A over Q generators x1 relations { x1 = x1; }"), Error);
  CHECK_THROWS_AS(parse("algebra A over Q generators x1 x1 relations { }"), Error);
  CHECK_THROWS_AS(parse("algebra A over R generators x1 relations { }"), ParseError);
  try {
    parse("algebra A over Q\ngenerators x1\nrelations { x1 * = 0; }");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 0);
  }
}

TEST_CASE("print and parse round trip") {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const std::size_t m = static_cast<std::size_t>(uniform(rng, 1, 3));
    const std::size_t k = static_cast<std::size_t>(uniform(rng, 0, 4));
    const Presentation p = random_presentation(rng, m, k, 3, 3, false, 2);
    const Presentation q = parse(format_presentation(p));
    CHECK(presentations_equal(p, q));
    CHECK(format_presentation(q) == format_presentation(p));
  }
}

TEST_CASE("presentation equality is syntactic") {
  const Presentation p = parse("algebra A over Q(t) generators x1 x2 relations { x1*x1 = 0; x2*x2 - (t)*x1 = 0; }");
  CHECK(presentations_equal(p, p));
  CHECK(presentations_equal(p, twist(p, FieldAutomorphism::identity(1))));
  const Presentation swapped = p.with_relations({p.relations()[1], p.relations()[0]});
  CHECK(!presentations_equal(p, swapped));
}

TEST_CASE("twist examples") {
  const Presentation p = one_relation(1, "x1*x1 + x2*x2 + (t)*x1*x2");
  const auto sigma = parse_automorphism("t -> t + 1", FieldSpec{1});
  CHECK(presentations_equal(twist(p, sigma), one_relation(1, "x1*x1 + x2*x2 + (t - 1)*x1*x2")));
  CHECK(presentations_equal(twist(p, FieldAutomorphism::identity(1)), p));

  const Presentation q = one_relation(2, "x1*x1 + (t1)*x1*x2 + (t2)*x2*x2");
  const auto swap = parse_automorphism("t1 -> t2, t2 -> t1", FieldSpec{2});
  CHECK(presentations_equal(twist(q, swap), one_relation(2, "x1*x1 + (t2)*x1*x2 + (t1)*x2*x2")));
  CHECK_THROWS_AS(twist(q, FieldAutomorphism::identity(3)), DomainError);
}

TEST_CASE("twist laws on random presentations") {
  Rng rng(32);
  for (int i = 0; i < 150; ++i) {
    const std::size_t k = static_cast<std::size_t>(uniform(rng, 1, 4));
    const Presentation p = random_presentation(rng, static_cast<std::size_t>(uniform(rng, 1, 3)), k, 3, 3);
    const FieldAutomorphism s = random_automorphism(rng, k), t = random_automorphism(rng, k);
    CHECK(presentations_equal(twist(twist(p, s), s.inverse()), p));
    CHECK(presentations_equal(twist(twist(p, s), t), twist(p, compose(s, t))));
  }
}

TEST_CASE("graded dimension is twist invariant") {
  Rng rng(33);
  for (int i = 0; i < 10; ++i) {
    const Presentation p = random_presentation(rng, 2, 2, 2, 2, true);
    const FieldAutomorphism s = random_automorphism(rng, 2);
    for (int n = 0; n <= 4; ++n)
      CHECK(graded_dimension(p, n, 4) == graded_dimension(twist(p, s), n, 4));
  }
}

TEST_CASE("transcendental support examples") {
  CHECK(support_names(one_relation(7, "x1*x1 + (t7)*x1*x2 + (t3)*x2*x2")) == std::vector<std::string>{"t7", "t3"});
  CHECK(transcendental_support(one_relation(2, "x1*x1 + (1/2)*x1*x2")).empty());
  CHECK(support_names(one_relation(2, "(1/(t2 - 1))*x1*x2")) == std::vector<std::string>{"t2"});
  // Numerator before denominator, monomials in descending graded order.
  CHECK(support_names(one_relation(4, "((t1 + t4^2)/t3)*x1")) == std::vector<std::string>{"t4", "t1", "t3"});
}

TEST_CASE("canonicalize examples") {
  const Presentation p = one_relation(7, "x1*x1 + (t7)*x1*x2 + (t3)*x2*x2");
  const Canonicalization c = canonicalize(p);
  CHECK(is_over_subfield(c.canonical, 2));
  CHECK(!is_over_subfield(c.canonical, 1));
  CHECK(presentations_equal(twist(p, c.sigma), c.canonical));
  CHECK(presentations_equal(twist(c.canonical, c.sigma.inverse()), p));

  const Presentation already = one_relation(2, "x1*x1 + (t1)*x1*x2 + (t2)*x2*x2");
  const Canonicalization c2 = canonicalize(already);
  CHECK(presentations_equal(c2.canonical, already));
  CHECK(c2.sigma.is_identity());

  const Presentation rational = one_relation(3, "x1*x1 - 2*x2*x2");
  CHECK(is_over_subfield(rational, 0));
  CHECK(!is_over_subfield(one_relation(5, "(t5)*x1"), 4));
}

TEST_CASE("canonical form is a permutation invariant") {
  Rng rng(34);
  for (int i = 0; i < 60; ++i) {
    const std::size_t k = static_cast<std::size_t>(uniform(rng, 1, 6));
    const Presentation p = random_presentation(rng, 2, k, 2, 2, false, 2);
    const Canonicalization c = canonicalize(p);
    const std::size_t r = transcendental_support(p).size();
    CHECK(is_over_subfield(c.canonical, r));
    CHECK(transcendental_support(c.canonical).size() == r);
    CHECK(presentations_equal(twist(p, c.sigma), c.canonical));
    CHECK(presentations_equal(canonicalize(c.canonical).canonical, c.canonical));
    for (int j = 0; j < 5; ++j) {
      const FieldAutomorphism pi = random_permutation(rng, k);
      CHECK(presentations_equal(canonicalize(twist(p, pi)).canonical, c.canonical));
    }
  }
}

TEST_CASE("canonical form separates a support order that traversal alone would not") {
  // The support traversal meets t1 before t3 here, but after swapping t1 and
  // t3 it meets t3 first; the canonical form must not depend on that.
  const Presentation p = one_relation(3, "(t1*t2 + t3^2)*x1*x1 + (t3)*x2*x2");
  const auto swap = parse_automorphism("t1 -> t3, t3 -> t1", FieldSpec{3});
  CHECK(presentations_equal(canonicalize(twist(p, swap)).canonical, canonicalize(p).canonical));
}

TEST_CASE("machine-readable export") {
  const Presentation p = one_relation(1, "x1*x1 + x2*x2 + (t)*x1*x2");
  const auto j = presentation_data(p);
  CHECK(j["field"] == "Q(t)");
  CHECK(j["generators"].size() == 2);
  CHECK(j["relations"][0][0][0] == std::vector<int>{1, 1});
  CHECK(j["relations"][0][0][1] == "1");
  CHECK(j["relations"][0][1][1] == "t");
}

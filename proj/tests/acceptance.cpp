// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "golden.hpp"
#include "support.hpp"

#include "fpalg/aalpha.hpp"
#include "fpalg/morita.hpp"
#include "fpalg/presentation.hpp"
#include "fpalg/rewrite.hpp"
#include "fpalg/text.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

using namespace fpalg;
using namespace testing;

namespace {

struct Verdict {
  bool ok;
  std::string detail;
};

Verdict closed_form_vs_scan() {
  std::size_t pairs = 0, agree = 0;
  for (std::uint32_t p : {3u, 5u, 7u})
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        if ((a * a) % p == 4 % p || (b * b) % p == 4 % p)
          continue;
        ++pairs;
        agree += iso_aalpha_mod(a, b, p) == search_iso_degree2(a, b, p).has_value();
      }
  return {agree == pairs, std::to_string(agree) + "/" + std::to_string(pairs) + " pairs agree"};
}

// Proper similitudes of the symmetric part S of (1 a; 0 1) are a I + b S^{-1} J
// with multiplier a^2 + b^2 / det S; composing with diag(1, -1) covers beta = -alpha.
Verdict congruence_invariants() {
  Rng rng(1002);
  const Matrix2 j = Matrix2::of(Scalar(0), Scalar(1), Scalar(-1), Scalar(0));
  std::size_t accepted = 0, hold = 0, attempts = 0;
  while (accepted < 1000 && attempts < 100000) {
    ++attempts;
    const Scalar alpha(random_rational(rng, 9));
    const Scalar half = alpha / Scalar(2);
    const Matrix2 s = Matrix2::of(Scalar(1), half, half, Scalar(1));
    const Scalar det_s = s.det();
    if (det_s.is_zero())
      continue;
    const Matrix2 s_inv = Matrix2::of(Scalar(1), -half, -half, Scalar(1)).scaled(det_s.inverse());
    const Scalar a(random_rational(rng, 6)), b(random_rational(rng, 6));
    Matrix2 q = Matrix2::identity().scaled(a);
    const Matrix2 rot = (s_inv * j).scaled(b);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        q(r, c) = q(r, c) + rot(r, c);
    const Scalar gamma = a * a + b * b / det_s;
    Scalar beta = alpha;
    if (coin(rng)) {
      beta = -alpha;
      q = Matrix2::diagonal(Scalar(1), Scalar(-1)) * q;
    }
    const CongruenceWitness w{q, gamma};
    if (!congruence_check(alpha, beta, w))
      continue;
    ++accepted;
    hold += invariant_chain(alpha, beta, w).holds();
  }
  return {accepted == 1000 && hold == accepted,
          std::to_string(hold) + "/" + std::to_string(accepted) + " witnesses satisfy the chain"};
}

Verdict twist_roundtrip() {
  Rng rng(1003);
  std::size_t ok = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = static_cast<std::size_t>(uniform(rng, 1, 4));
    const std::size_t m = static_cast<std::size_t>(uniform(rng, 1, 3));
    const Presentation p = random_presentation(rng, m, k, 3, 3, false, 2);
    const FieldAutomorphism sigma = random_automorphism(rng, k);
    const Presentation q = twist(p, sigma);
    bool good = presentations_equal(twist(q, sigma.inverse()), p);
    for (std::size_t r = 0; r < p.relations().size() && good; ++r) {
      const auto& before = p.relations()[r].terms();
      const auto& after = q.relations()[r].terms();
      good = before.size() == after.size();
      for (std::size_t t = 0; t < before.size() && good; ++t)
        good = before[t].first == after[t].first && after[t].second == sigma.inverse().apply(before[t].second);
    }
    ok += good;
  }
  return {ok == 200, std::to_string(ok) + "/200 presentations"};
}

Verdict groebner_vs_span() {
  Rng rng(1004);
  std::vector<Presentation> corpus = {make_aalpha(Scalar::generator(0))};
  for (int i = 0; i < 20; ++i) {
    const std::size_t m = i < 14 ? 2 : 3;
    const std::size_t k = i < 10 ? 1 : 0;
    corpus.push_back(random_presentation(rng, m, k, 2, 2, true));
  }
  std::size_t checks = 0, agree = 0;
  for (const auto& p : corpus) {
    const TruncatedGB gb = groebner(p, 6);
    for (int n = 0; n <= 6; ++n) {
      ++checks;
      agree += gb.complete_to() >= n && count_normal_words(gb, n) == graded_dimension(p, n, 6) &&
               graded_dimension(p, n, 6) == span_oracle_dimension(p, n);
    }
  }
  return {agree == checks, std::to_string(agree) + "/" + std::to_string(checks) + " dimensions agree"};
}

Verdict canonical_descent() {
  Rng rng(1005);
  std::size_t ok = 0, perms = 0;
  for (int i = 0; i < 100; ++i) {
    const Presentation p = random_presentation(rng, static_cast<std::size_t>(uniform(rng, 1, 3)), 9, 3, 3, false, 2);
    const Canonicalization c = canonicalize(p);
    const std::size_t r = transcendental_support(p).size();
    bool good = is_over_subfield(c.canonical, r) && (r == 0 || !is_over_subfield(c.canonical, r - 1));
    for (int j = 0; j < 100; ++j) {
      ++perms;
      good = presentations_equal(canonicalize(twist(p, random_permutation(rng, 9))).canonical, c.canonical) && good;
    }
    ok += good;
  }
  return {ok == 100, std::to_string(ok) + "/100 presentations, " + std::to_string(perms) + " permutations"};
}

Verdict orbit_classes() {
  const FieldSpec f{1};
  const Scalar t = Scalar::generator(0);
  const auto autos = parse_automorphism_list("t -> t + 1; t -> 2*t; t -> t - 1", f);
  const auto sample = orbit_sample(t, autos);
  bool ok = sample.size() == 3;
  for (const auto& b : sample)
    ok = ok && !iso_aalpha(t, b);
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i + 1; j < sample.size(); ++j)
      ok = ok && !iso_aalpha(sample[i], sample[j]);
  for (std::size_t i = 0; i < autos.size() && ok; ++i)
    ok = presentations_equal(twist(make_aalpha(t), autos[i].inverse()), make_aalpha(sample[i]));
  std::string values;
  for (const auto& b : sample)
    values += (values.empty() ? "" : ", ") + b.to_string(f);
  return {ok, "betas {" + values + "} pairwise non-isomorphic twists of A_t"};
}

Verdict morita_apparatus() {
  const Presentation q("B", {}, FieldSpec{0}, {});
  bool stable = true;
  for (std::size_t n = 1; n <= 3; ++n) {
    const MatrixPresentation mp = matrix_presentation(q, n);
    for (int d = 2; d <= 5; ++d)
      stable = stable && filtered_dimension(mp, d) == n * n;
  }
  const MatrixPresentation m2 = matrix_presentation(q, 2);
  const NCPoly e11 = NCPoly::generator(m2.pres.context(), m2.unit(0, 0));
  const FullnessResult full = is_full_idempotent(e11, m2, 3);
  bool certified = full.full && full.degree <= 3;
  if (certified) {
    NCPoly sum = -m2.identity();
    for (const auto& term : full.certificate)
      sum = sum + e11.sandwiched(term.left, term.right).scaled(term.coefficient);
    certified = normal_form(sum, groebner(m2.pres, 5)).value.is_zero();
  }
  const Presentation at = make_aalpha(Scalar::generator(0));
  const MatrixPresentation ma = matrix_presentation(at, 2);
  const auto corner = corner_filtered_dims(NCPoly::generator(ma.pres.context(), ma.unit(0, 0)), ma, 4);
  bool corner_ok = corner.size() == 5;
  for (int d = 0; d <= 4 && corner_ok; ++d)
    corner_ok = corner[d] == filtered_dimension(at, d);
  std::string dims;
  for (auto v : corner)
    dims += (dims.empty() ? "" : ",") + std::to_string(v);
  return {stable && certified && corner_ok, std::string("n^2 plateau ") + (stable ? "ok" : "FAILED") +
                                                 ", e11 full at degree " + std::to_string(full.degree) +
                                                 ", corner dims " + dims};
}

Verdict cli_contract() {
  const GoldenReport report = run_golden_suite(false);
  const auto bad = corpus_round_trip_failures();
  std::string detail = std::to_string(report.cases - report.mismatched.size()) + "/" +
                       std::to_string(report.cases) + " golden cases, " + std::to_string(bad.size()) +
                       " round-trip failures";
  for (const auto& m : report.mismatched)
    detail += "; differs: " + m;
  for (const auto& v : report.uncovered_verbs)
    detail += "; uncovered: " + v;
  return {report.mismatched.empty() && report.uncovered_verbs.empty() && bad.empty(), detail};
}

} // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Verdict()> check;
  };
  const std::vector<Criterion> criteria = {
      {"1 family decision vs GL2(F_p) scan", 30, closed_form_vs_scan},
      {"2 congruence invariant chain", 5, congruence_invariants},
      {"3 twist round trip", 10, twist_roundtrip},
      {"4 Groebner dimensions vs span oracle", 60, groebner_vs_span},
      {"5 canonical descent", 10, canonical_descent},
      {"6 orbit sample classes", 5, orbit_classes},
      {"7 matrix units, fullness, corners", 120, morita_apparatus},
      {"8 command-line contract", 10, cli_contract},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = v.ok && secs < c.limit_s;
    failures += !ok;
    std::printf("%s  %-40s %7.2fs (limit %3.0fs)  %s\n", ok ? "PASS" : "FAIL", c.name, secs, c.limit_s,
                v.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

#include "fpalg/cli.hpp"

#include "fpalg/aalpha.hpp"
#include "fpalg/error.hpp"
#include "fpalg/morita.hpp"
#include "fpalg/presentation.hpp"
#include "fpalg/rewrite.hpp"
#include "fpalg/text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>

namespace fpalg {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string input;
  std::string emit = "text";
  std::string automorphism;
  std::string expr;
  std::string elems;
  std::string alpha;
  std::string beta;
  std::string autos;
  std::string base;
  int maxdeg = -1;
  int upto = -1;
  long long modulus = 5;
  std::size_t n = 2;
  std::istream* in = nullptr;

  bool data() const { return emit == "data"; }
};

std::string read_source(const std::string& source, std::istream& in) {
  std::ostringstream buf;
  if (source == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream file(source, std::ios::binary);
    if (!file)
      throw ParseError("cannot read '" + source + "'");
    buf << file.rdbuf();
    return buf.str();
  }
  return source;
}

Presentation load(const Options& o) {
  if (o.input.empty())
    throw ParseError("missing presentation input (a file path, '-' for stdin, or inline text)");
  return parse_presentation(read_source(o.input, *o.in));
}

Presentation trivial_base() { return Presentation("B", {}, FieldSpec{0}, {}); }

MatrixPresentation load_matrix(const Options& o) {
  std::string source = !o.base.empty() ? o.base : o.input;
  Presentation base = source.empty() ? trivial_base() : parse_presentation(read_source(source, *o.in));
  return matrix_presentation(base, o.n);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i)
    s += (i ? sep : "") + parts[i];
  return s;
}

std::string scalar_text(const Scalar& s) { return s.to_string(); }

// --- presentation verbs -------------------------------------------------------

int cmd_parse(const Options& o, std::ostream& out) {
  const Presentation p = load(o);
  if (o.data()) {
    write_json(out, presentation_data(p));
    return kExitOk;
  }
  out << "algebra: " << p.name() << "\n"
      << "field: " << p.field().to_string() << "\n"
      << "generators: " << p.generators() << "\n"
      << "relations: " << p.relations().size() << "\n"
      << "max relation degree: " << p.max_relation_degree() << "\n"
      << "homogeneous: " << yes_no(p.is_homogeneous()) << "\n";
  return kExitOk;
}

int cmd_print(const Options& o, std::ostream& out) {
  const Presentation p = load(o);
  if (o.data())
    write_json(out, presentation_data(p));
  else
    out << format_presentation(p);
  return kExitOk;
}

int cmd_twist(const Options& o, std::ostream& out) {
  const Presentation p = load(o);
  const FieldAutomorphism sigma = parse_automorphism(o.automorphism, p.field());
  const Presentation q = twist(p, sigma);
  if (o.data())
    write_json(out, presentation_data(q));
  else
    out << format_presentation(q);
  return kExitOk;
}

int cmd_canonicalize(const Options& o, std::ostream& out) {
  const Presentation p = load(o);
  const Canonicalization c = canonicalize(p);
  std::size_t r = 0;
  while (r <= p.field().k && !is_over_subfield(c.canonical, r))
    ++r;
  if (o.data()) {
    Json j;
    j["sigma"] = c.sigma.to_string(p.field());
    j["subfield"] = FieldSpec{r}.to_string();
    j["canonical"] = presentation_data(c.canonical);
    write_json(out, j);
    return kExitOk;
  }
  out << "# sigma: " << c.sigma.to_string(p.field()) << "\n"
      << "# coefficients in " << FieldSpec{r}.to_string() << "\n"
      << format_presentation(c.canonical);
  return kExitOk;
}

int cmd_support(const Options& o, std::ostream& out) {
  const Presentation p = load(o);
  std::vector<std::string> names;
  for (std::size_t i : transcendental_support(p))
    names.push_back(p.field().generator_name(i));
  if (o.data()) {
    Json j;
    j["support"] = names;
    j["size"] = names.size();
    write_json(out, j);
    return kExitOk;
  }
  out << "support: " << (names.empty() ? "(none)" : join(names, " ")) << "\n"
      << "size: " << names.size() << "\n";
  return kExitOk;
}

// --- rewriting verbs ----------------------------------------------------------

int default_bound(const Presentation& p, int requested, int wanted) {
  if (requested >= 0)
    return requested;
  return std::max(wanted, p.max_relation_degree());
}

int cmd_gb(const Options& o, std::ostream& out) {
  const Presentation p = load(o);
  const TruncatedGB gb = groebner(p, default_bound(p, o.maxdeg, p.max_relation_degree() + 2));
  if (o.data()) {
    Json j;
    j["maxdeg"] = gb.maxdeg();
    j["complete_to"] = gb.complete_to();
    Json rules = Json::array();
    for (const auto& g : gb.basis())
      rules.push_back(polynomial_data(g));
    j["basis"] = rules;
    write_json(out, j);
    return kExitOk;
  }
  out << "maxdeg: " << gb.maxdeg() << "\n"
      << "complete to degree: " << gb.complete_to() << "\n"
      << "basis size: " << gb.basis().size() << "\n";
  for (const auto& g : gb.basis())
    out << format_polynomial(g, p.generator_names()) << "\n";
  return kExitOk;
}

int cmd_nf(const Options& o, std::ostream& out) {
  const Presentation p = load(o);
  const NCPoly f = parse_polynomial(o.expr, p);
  const TruncatedGB gb = groebner(p, default_bound(p, o.maxdeg, std::max(f.degree(), 0) + 2));
  const NormalForm nf = normal_form(f, gb);
  if (o.data()) {
    Json j;
    j["normal_form"] = polynomial_data(nf.value);
    j["verified"] = nf.verified;
    j["complete_to"] = gb.complete_to();
    write_json(out, j);
  } else {
    out << "normal form: " << format_polynomial(nf.value, p.generator_names()) << "\n"
        << "verified: " << yes_no(nf.verified) << " (basis complete to degree " << gb.complete_to() << ")\n";
  }
  return nf.verified ? kExitOk : kExitUndecided;
}

int cmd_hilbert(const Options& o, std::ostream& out) {
  const Presentation p = load(o);
  if (o.upto < 0)
    throw ParseError("--upto is required");
  const bool graded = p.is_homogeneous();
  const int bound = default_bound(p, o.maxdeg, graded ? o.upto : o.upto + 2);
  if (o.upto > bound)
    throw DomainError("--upto exceeds the truncation degree --maxdeg");
  const TruncatedGB gb = groebner(p, bound);
  std::vector<std::size_t> dims;
  for (int n = 0; n <= o.upto; ++n)
    dims.push_back(graded ? count_normal_words(gb, n) : count_normal_words_up_to(gb, n));
  if (o.data()) {
    Json j;
    j["kind"] = graded ? "graded" : "filtered";
    j["maxdeg"] = bound;
    j["dimensions"] = dims;
    write_json(out, j);
    return kExitOk;
  }
  out << (graded ? "graded" : "filtered") << " dimensions (basis truncated at degree " << bound << ")\n";
  for (int n = 0; n <= o.upto; ++n)
    out << (graded ? "dim A_" : "dim F_") << n << " = " << dims[n] << "\n";
  return kExitOk;
}

int cmd_member(const Options& o, std::ostream& out) {
  const Presentation p = load(o);
  const NCPoly f = parse_polynomial(o.expr, p);
  const int deg = std::max(f.degree(), 0);
  const int bound = default_bound(p, o.maxdeg, p.is_homogeneous() ? deg : deg + 2);
  const MembershipResult r = ideal_membership(f, p, bound);
  if (o.data()) {
    Json j;
    j["member"] = r.member;
    j["exact"] = r.exact;
    j["degree_bound"] = r.degree_bound;
    j["normal_form"] = polynomial_data(r.normal_form);
    write_json(out, j);
  } else if (r.member) {
    out << "member: yes\n";
  } else {
    out << "member: " << (r.exact ? "no" : "no up to degree " + std::to_string(r.degree_bound)) << "\n"
        << "normal form: " << format_polynomial(r.normal_form, p.generator_names()) << "\n";
  }
  return r.exact ? kExitOk : kExitUndecided;
}

int cmd_generates(const Options& o, std::ostream& out) {
  const Presentation p = load(o);
  const std::vector<NCPoly> elems = parse_polynomial_list(o.elems, p);
  const GenerationResult r = is_generating(elems, p, default_bound(p, o.maxdeg, p.max_relation_degree() + 2));
  if (o.data()) {
    Json j;
    j["generates"] = r.generates;
    j["maxdeg"] = r.maxdeg;
    j["span_dimension"] = r.span_dimension;
    write_json(out, j);
  } else {
    out << "generates: " << (r.generates ? "yes" : "unknown at degree " + std::to_string(r.maxdeg)) << "\n"
        << "span dimension: " << r.span_dimension << "\n";
  }
  return r.generates ? kExitOk : kExitUndecided;
}

// --- A_alpha verbs ------------------------------------------------------------

std::string images_text(const std::vector<NCPoly>& images) {
  const auto names = Presentation::standard_names(images.size());
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < images.size(); ++i)
    parts.push_back(names[i] + " -> " + format_polynomial(images[i], names));
  return join(parts, ", ");
}

int cmd_aalpha_iso(const Options& o, std::ostream& out) {
  const Scalar alpha = parse_scalar(o.alpha);
  const Scalar beta = parse_scalar(o.beta);
  const auto witness = iso_witness(alpha, beta);
  const CongruenceDecision decision = decide_form_congruence(alpha, beta);
  if (o.data()) {
    Json j;
    j["iso"] = witness.has_value();
    if (witness) {
      Json imgs = Json::array();
      for (const auto& w : *witness)
        imgs.push_back(polynomial_data(w));
      j["witness"] = imgs;
    } else {
      const auto& nc = std::get<NotCongruent>(decision);
      j["certificate"] = {{"beta^2", scalar_text(nc.beta_squared)}, {"alpha^2", scalar_text(nc.alpha_squared)}};
    }
    write_json(out, j);
    return kExitOk;
  }
  if (witness) {
    out << "ISO\n"
        << "witness: " << images_text(*witness) << "\n";
  } else {
    const auto& nc = std::get<NotCongruent>(decision);
    out << "NOT-ISO\n"
        << "certificate: beta^2 != alpha^2 (" << scalar_text(nc.beta_squared) << " != "
        << scalar_text(nc.alpha_squared) << ")\n";
  }
  return kExitOk;
}

std::uint32_t residue(const std::string& text, std::uint32_t p) {
  const Scalar s = parse_scalar(text, FieldSpec{0});
  const Rational q = s.to_rational();
  const long pp = p;
  auto reduce = [&](const Integer& z) {
    Integer r = z % Integer(pp);
    if (r < 0)
      r += Integer(pp);
    return static_cast<long long>(r.get_si());
  };
  const long long num = reduce(q.get_num());
  const long long den = reduce(q.get_den());
  if (den == 0)
    throw DomainError("'" + text + "' has a denominator divisible by " + std::to_string(p));
  long long inv = 1, b = den, e = pp - 2;
  while (e > 0) {
    if (e & 1)
      inv = inv * b % pp;
    b = b * b % pp;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(num * inv % pp);
}

int cmd_aalpha_oracle(const Options& o, std::ostream& out) {
  if (o.modulus < 3 || o.modulus >= (1 << 15) || !is_odd_prime(static_cast<std::uint32_t>(o.modulus)))
    throw DomainError("--p must be an odd prime below 32768");
  const auto p = static_cast<std::uint32_t>(o.modulus);
  const std::uint32_t a = residue(o.alpha, p), b = residue(o.beta, p);
  const auto w = search_iso_degree2(a, b, p);
  const bool criterion = iso_aalpha_mod(a, b, p);
  const bool degenerate = (a * a) % p == 4 % p || (b * b) % p == 4 % p;
  if (o.data()) {
    Json j;
    j["p"] = p;
    j["alpha"] = a;
    j["beta"] = b;
    j["witness"] = w ? Json{{"q", w->q.e}, {"gamma", w->gamma}} : Json();
    j["criterion"] = criterion;
    j["degenerate"] = degenerate;
    write_json(out, j);
    return kExitOk;
  }
  out << "field: F_" << p << ", alpha = " << a << ", beta = " << b << "\n";
  if (w)
    out << "witness: Q = (" << w->q.e[0] << " " << w->q.e[1] << "; " << w->q.e[2] << " " << w->q.e[3]
        << "), gamma = " << w->gamma << "\n";
  else
    out << "witness: none in GL2(F_" << p << ")\n";
  out << "criterion beta = +-alpha: " << yes_no(criterion) << "\n";
  if (degenerate)
    out << "note: alpha^2 = 4 or beta^2 = 4; the criterion is not claimed to match the scan here\n";
  else
    out << "agreement: " << yes_no(criterion == w.has_value()) << "\n";
  return kExitOk;
}

std::size_t highest_transcendental(const std::string& text) {
  static const std::regex re(R"(\bt(\d*)\b)");
  std::size_t k = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), re); it != std::sregex_iterator(); ++it) {
    const std::string digits = (*it)[1].str();
    k = std::max<std::size_t>(k, digits.empty() ? 1 : std::stoul(digits));
  }
  return k;
}

int cmd_aalpha_orbit(const Options& o, std::ostream& out) {
  const Scalar alpha = parse_scalar(o.alpha);
  const FieldSpec field{std::max({alpha.width(), highest_transcendental(o.autos), std::size_t{1}})};
  const auto autos = parse_automorphism_list(o.autos, field);
  const auto sample = orbit_sample(alpha, autos);
  if (o.data()) {
    Json arr = Json::array();
    for (const auto& b : sample)
      arr.push_back({{"beta", b.to_string(field)}, {"iso", iso_aalpha(alpha, b)}});
    write_json(out, Json{{"alpha", alpha.to_string(field)}, {"orbit", arr}});
    return kExitOk;
  }
  out << "alpha: " << alpha.to_string(field) << "\n";
  for (const auto& b : sample)
    out << "beta = " << b.to_string(field) << ": " << (iso_aalpha(alpha, b) ? "ISO" : "NOT-ISO") << "\n";
  return kExitOk;
}

// --- matrix verbs -------------------------------------------------------------

int cmd_matrix(const Options& o, std::ostream& out) {
  const MatrixPresentation mp = load_matrix(o);
  if (o.data())
    write_json(out, presentation_data(mp.pres));
  else
    out << format_presentation(mp.pres);
  return kExitOk;
}

int cmd_idem(const Options& o, std::ostream& out) {
  const MatrixPresentation mp = load_matrix(o);
  const NCPoly e = parse_polynomial(o.expr, mp.pres);
  const int bound = o.maxdeg >= 0 ? o.maxdeg : std::max(2 * std::max(e.degree(), 0), 2);
  const bool ok = verify_idempotent(e, mp, bound);
  if (o.data())
    write_json(out, Json{{"idempotent", ok}, {"maxdeg", bound}});
  else
    out << "idempotent: " << yes_no(ok) << "\n";
  return kExitOk;
}

int cmd_full(const Options& o, std::ostream& out) {
  const MatrixPresentation mp = load_matrix(o);
  const NCPoly e = parse_polynomial(o.expr, mp.pres);
  const FullnessResult r = is_full_idempotent(e, mp, o.maxdeg >= 0 ? o.maxdeg : 3);
  const auto& names = mp.pres.generator_names();
  if (o.data()) {
    Json terms = Json::array();
    for (const auto& t : r.certificate) {
      Json left = Json::array(), right = Json::array();
      for (std::size_t i = 0; i < t.left.size(); ++i)
        left.push_back(t.left[i] + 1);
      for (std::size_t i = 0; i < t.right.size(); ++i)
        right.push_back(t.right[i] + 1);
      terms.push_back({scalar_text(t.coefficient), left, right});
    }
    write_json(out, Json{{"full", r.full}, {"degree", r.degree}, {"certificate", terms}});
  } else if (r.full) {
    out << "FULL at degree " << r.degree << "\n"
        << "certificate: 1 = sum c * u * e * v\n";
    for (const auto& t : r.certificate)
      out << "  c = " << t.coefficient.to_string(mp.pres.field()) << ", u = " << format_word(t.left, names)
          << ", v = " << format_word(t.right, names) << "\n";
  } else {
    out << "UNKNOWN at degree " << r.degree << "\n";
  }
  return r.full ? kExitOk : kExitUndecided;
}

int cmd_corner(const Options& o, std::ostream& out) {
  const MatrixPresentation mp = load_matrix(o);
  const NCPoly e = parse_polynomial(o.expr, mp.pres);
  if (o.upto < 0)
    throw ParseError("--upto is required");
  const auto dims = corner_filtered_dims(e, mp, o.upto);
  if (o.data()) {
    write_json(out, Json{{"dimensions", dims}});
    return kExitOk;
  }
  for (std::size_t c = 0; c < dims.size(); ++c)
    out << "dim eF_" << c << "e = " << dims[c] << "\n";
  return kExitOk;
}

// --- dispatch -----------------------------------------------------------------

std::vector<std::string> normalize(std::vector<std::string> args) {
  if (args.size() >= 2 && args[0] == "aalpha" && (args[1] == "iso" || args[1] == "oracle" || args[1] == "orbit")) {
    args[0] = "aalpha-" + args[1];
    args.erase(args.begin() + 1);
  }
  return args;
}

} // namespace

int run(const std::vector<std::string>& raw_args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  o.in = &in;
  CLI::App app{"Exact computations with finitely presented algebras over Q(t1,...,tk)", "fpalg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "fpalg 1.0");

  std::function<int(const Options&, std::ostream&)> handler;
  auto verb = [&](const std::string& name, const std::string& help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--emit", o.emit, "output format")->check(CLI::IsMember({"text", "data"}));
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "presentation file, '-' for stdin, or inline text");
    return sub;
  };
  auto with_matrix = [&](CLI::App* sub) {
    with_input(sub);
    sub->add_option("--n", o.n, "matrix size")->check(CLI::PositiveNumber);
    sub->add_option("--base", o.base, "base presentation (file or inline); Q when absent");
    return sub;
  };

  with_input(verb("parse", "check a presentation and summarize it", cmd_parse));
  with_input(verb("print", "print a presentation in canonical text form", cmd_print));
  with_input(verb("twist", "presentation of the twisted algebra", cmd_twist))
      ->add_option("--auto", o.automorphism, "field automorphism, e.g. \"t1 -> t1 + 1\"")
      ->required();
  with_input(verb("canonicalize", "rename the transcendentals in use to t1..tr", cmd_canonicalize));
  with_input(verb("support", "transcendentals occurring in the relations", cmd_support));

  auto* gb = with_input(verb("gb", "truncated Groebner basis", cmd_gb));
  gb->add_option("--maxdeg", o.maxdeg, "truncation degree")->check(CLI::NonNegativeNumber);
  auto* nf = with_input(verb("nf", "normal form of an element", cmd_nf));
  nf->add_option("--expr", o.expr, "element")->required();
  nf->add_option("--maxdeg", o.maxdeg, "truncation degree")->check(CLI::NonNegativeNumber);
  auto* hilbert = with_input(verb("hilbert", "graded (or filtered) dimensions", cmd_hilbert));
  hilbert->add_option("--upto", o.upto, "largest degree")->required()->check(CLI::NonNegativeNumber);
  hilbert->add_option("--maxdeg", o.maxdeg, "truncation degree")->check(CLI::NonNegativeNumber);
  auto* member = with_input(verb("member", "ideal membership", cmd_member));
  member->add_option("--expr", o.expr, "element")->required();
  member->add_option("--maxdeg", o.maxdeg, "truncation degree")->check(CLI::NonNegativeNumber);
  auto* generates = with_input(verb("generates", "do the elements generate the algebra", cmd_generates));
  generates->add_option("--elems", o.elems, "elements separated by ';'")->required();
  generates->add_option("--maxdeg", o.maxdeg, "longest product considered")->check(CLI::NonNegativeNumber);

  auto* iso = verb("aalpha-iso", "decide A_alpha ~ A_beta", cmd_aalpha_iso);
  iso->add_option("--alpha", o.alpha, "alpha")->required();
  iso->add_option("--beta", o.beta, "beta")->required();
  auto* oracle = verb("aalpha-oracle", "exhaustive GL2(F_p) congruence search", cmd_aalpha_oracle);
  oracle->add_option("--p", o.modulus, "odd prime")->required();
  oracle->add_option("--alpha", o.alpha, "alpha")->required();
  oracle->add_option("--beta", o.beta, "beta")->required();
  auto* orbit = verb("aalpha-orbit", "images of alpha under field automorphisms", cmd_aalpha_orbit);
  orbit->add_option("--alpha", o.alpha, "alpha")->required();
  orbit->add_option("--autos", o.autos, "automorphisms separated by ';'")->required();

  with_matrix(verb("matrix", "presentation of M_n(B)", cmd_matrix));
  auto* idem = with_matrix(verb("idem", "check e*e = e in M_n(B)", cmd_idem));
  idem->add_option("--check", o.expr, "element")->required();
  idem->add_option("--maxdeg", o.maxdeg, "truncation degree")->check(CLI::NonNegativeNumber);
  auto* full = with_matrix(verb("full", "search for M_n(B) e M_n(B) = M_n(B)", cmd_full));
  full->add_option("--elem", o.expr, "idempotent")->required();
  full->add_option("--maxdeg", o.maxdeg, "bound on |u| + |v|")->check(CLI::NonNegativeNumber);
  auto* corner = with_matrix(verb("corner", "filtered dimensions of e M_n(B) e", cmd_corner));
  corner->add_option("--elem", o.expr, "idempotent")->required();
  corner->add_option("--upto", o.upto, "largest filtration degree")->required()->check(CLI::NonNegativeNumber);

  std::vector<std::string> args = normalize(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    return handler(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UnverifiedError& e) {
    err << "undecided: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
}

} // namespace fpalg

#include "fpalg/text.hpp"

#include "fpalg/error.hpp"

#include <algorithm>
#include <cctype>

namespace fpalg {

namespace {

struct Token {
  enum Kind { Ident, Number, Symbol, End } kind = End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else
        ++col;
      ++i;
    }
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n')
        advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    std::size_t n = 1;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i + n < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i + n])) || src[i + n] == '_'))
        ++n;
      t.kind = Token::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i + n < src.size() && std::isdigit(static_cast<unsigned char>(src[i + n])))
        ++n;
      t.kind = Token::Number;
    } else if (ch == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      n = 2;
      t.kind = Token::Symbol;
    } else if (std::string_view("+-*/^(){}=;,").find(ch) != std::string_view::npos) {
      t.kind = Token::Symbol;
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
    }
    t.text = std::string(src.substr(i, n));
    advance(n);
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

// Index (0-based) of a field generator name: "t" is t1, "tN" is tN.
std::optional<std::size_t> field_generator_index(const std::string& name) {
  if (name == "t")
    return 0;
  if (name.size() < 2 || name[0] != 't' || name[1] == '0')
    return std::nullopt;
  if (!std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return std::nullopt;
  if (name.size() > 6)
    return std::nullopt;
  return std::stoul(name.substr(1)) - 1;
}

constexpr std::size_t kInferredFieldWidth = 1u << 15;

class Parser {
public:
  Parser(std::string_view text, PolyContext ctx, const std::vector<std::string>* names, bool infer_field)
      : tokens_(tokenize(text)), ctx_(ctx), names_(names), infer_(infer_field) {
    if (infer_)
      ctx_.field.k = kInferredFieldWidth;
  }

  const Token& peek() const { return tokens_[pos_]; }
  bool at_end() const { return peek().kind == Token::End; }
  bool at_symbol(std::string_view s) const { return peek().kind == Token::Symbol && peek().text == s; }
  bool at_keyword(std::string_view s) const { return peek().kind == Token::Ident && peek().text == s; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, peek().line, peek().column);
  }
  [[noreturn]] void fail_at(const Token& t, const std::string& what) const {
    throw ParseError(what, t.line, t.column);
  }

  Token take() { return tokens_[pos_++]; }

  void expect_symbol(std::string_view s) {
    if (!at_symbol(s))
      fail("expected '" + std::string(s) + "' but found " + describe(peek()));
    ++pos_;
  }
  void expect_keyword(std::string_view s) {
    if (!at_keyword(s))
      fail("expected '" + std::string(s) + "' but found " + describe(peek()));
    ++pos_;
  }
  std::string expect_ident() {
    if (peek().kind != Token::Ident)
      fail("expected a name but found " + describe(peek()));
    return take().text;
  }
  void expect_end() {
    if (!at_end())
      fail("unexpected " + describe(peek()));
  }

  static std::string describe(const Token& t) {
    return t.kind == Token::End ? std::string("end of input") : "'" + t.text + "'";
  }

  void set_context(const PolyContext& ctx, const std::vector<std::string>* names) {
    ctx_ = ctx;
    names_ = names;
    infer_ = false;
  }
  const PolyContext& context() const { return ctx_; }

  // expr := ['+'|'-'] term (('+'|'-') term)*
  NCPoly expression() {
    NCPoly acc(ctx_);
    bool negate = false;
    if (at_symbol("+") || at_symbol("-"))
      negate = take().text == "-";
    acc = negate ? -term() : term();
    while (at_symbol("+") || at_symbol("-")) {
      bool minus = take().text == "-";
      NCPoly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

private:
  // term := factor (('*'|'/') factor)*
  NCPoly term() {
    NCPoly acc = factor();
    while (at_symbol("*") || at_symbol("/")) {
      const Token op = take();
      NCPoly rhs = factor();
      if (op.text == "*") {
        acc = acc * rhs;
        continue;
      }
      if (!rhs.is_constant())
        fail_at(op, "division by a non-scalar expression");
      if (rhs.is_zero())
        throw DomainError("division by zero");
      acc = acc.scaled(rhs.leading_coefficient().inverse());
    }
    return acc;
  }

  // factor := primary ['^' integer]
  NCPoly factor() {
    NCPoly base = primary();
    if (!at_symbol("^"))
      return base;
    take();
    if (peek().kind != Token::Number)
      fail("expected an exponent after '^'");
    const Token e = take();
    if (e.text.size() > 4)
      fail_at(e, "exponent too large");
    const unsigned n = static_cast<unsigned>(std::stoul(e.text));
    NCPoly r = NCPoly::constant(ctx_, Scalar(1));
    for (unsigned i = 0; i < n; ++i)
      r = r * base;
    return r;
  }

  NCPoly primary() {
    const Token& t = peek();
    if (t.kind == Token::Number) {
      take();
      return NCPoly::constant(ctx_, Scalar(Integer(t.text)));
    }
    if (t.kind == Token::Ident) {
      const Token tok = take();
      return identifier(tok);
    }
    if (at_symbol("(")) {
      take();
      NCPoly inner = expression();
      expect_symbol(")");
      return inner;
    }
    fail("expected a number, a name or '(' but found " + describe(t));
  }

  NCPoly identifier(const Token& tok) {
    if (names_) {
      auto it = std::find(names_->begin(), names_->end(), tok.text);
      if (it != names_->end())
        return NCPoly::generator(ctx_, static_cast<std::size_t>(it - names_->begin()));
    }
    if (auto idx = field_generator_index(tok.text)) {
      const std::size_t k = ctx_.field.k;
      if (tok.text == "t" && !infer_ && k > 1)
        fail_at(tok, "'t' is ambiguous over " + ctx_.field.to_string() + "; use t1..t" + std::to_string(k));
      if (*idx >= k)
        fail_at(tok, "coefficient generator '" + tok.text + "' lies outside the declared field " +
                         ctx_.field.to_string());
      return NCPoly::constant(ctx_, Scalar::generator(*idx));
    }
    fail_at(tok, "undeclared generator '" + tok.text + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  PolyContext ctx_;
  const std::vector<std::string>* names_;
  bool infer_;
};

Scalar as_scalar(const NCPoly& f) {
  if (!f.is_constant())
    throw ParseError("expected a field element but the expression involves algebra generators");
  return f.is_zero() ? Scalar() : f.leading_coefficient();
}

// Splits on top-level ';' (the grammars here never nest semicolons).
std::vector<std::string_view> split_semicolons(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      auto part = text.substr(start, i - start);
      if (part.find_first_not_of(" \t\r\n") != std::string_view::npos)
        parts.push_back(part);
      start = i + 1;
    }
  }
  return parts;
}

std::string format_term_coefficient(const Scalar& c, const FieldSpec& field, bool& negative) {
  if (c.is_integer()) {
    Integer v = c.numerator().constant_value();
    negative = v < 0;
    return Integer(abs(v)).get_str();
  }
  negative = false;
  return "(" + c.to_string(field) + ")";
}

} // namespace

Scalar parse_scalar(std::string_view text, const std::optional<FieldSpec>& field) {
  Parser p(text, PolyContext{0, field.value_or(FieldSpec{})}, nullptr, !field.has_value());
  if (p.at_end())
    p.fail("empty expression");
  NCPoly f = p.expression();
  p.expect_end();
  return as_scalar(f);
}

NCPoly parse_polynomial(std::string_view text, const PolyContext& ctx,
                        const std::vector<std::string>& generator_names) {
  Parser p(text, ctx, &generator_names, false);
  if (p.at_end())
    p.fail("empty expression");
  NCPoly f = p.expression();
  p.expect_end();
  return f;
}

NCPoly parse_polynomial(std::string_view text, const Presentation& pres) {
  return parse_polynomial(text, pres.context(), pres.generator_names());
}

std::vector<NCPoly> parse_polynomial_list(std::string_view text, const Presentation& pres) {
  std::vector<NCPoly> out;
  for (auto part : split_semicolons(text))
    out.push_back(parse_polynomial(part, pres));
  return out;
}

FieldAutomorphism parse_automorphism(std::string_view text, const FieldSpec& field) {
  auto images = FieldAutomorphism::identity(field.k).forward();
  Parser p(text, PolyContext{0, field}, nullptr, false);
  if (p.at_end() || ((p.at_keyword("identity") || p.at_keyword("id")) && (p.take(), p.at_end())))
    return FieldAutomorphism::identity(field.k);

  std::vector<bool> assigned(field.k, false);
  for (;;) {
    const Token lhs = p.peek();
    const std::string name = p.expect_ident();
    auto idx = field_generator_index(name);
    if (!idx || (name == "t" && field.k > 1))
      p.fail_at(lhs, "'" + name + "' is not a generator of " + field.to_string());
    if (*idx >= field.k)
      p.fail_at(lhs, "generator '" + name + "' lies outside " + field.to_string());
    if (assigned[*idx])
      p.fail_at(lhs, "generator '" + name + "' is assigned twice");
    assigned[*idx] = true;
    p.expect_symbol("->");
    const Scalar rhs = as_scalar(p.expression());

    // Accept exactly a*t_j + b with rational a != 0, b.
    const auto& num = rhs.numerator();
    const auto& den = rhs.denominator();
    std::optional<AffineImage> image;
    if (den.is_constant() && num.total_degree() == 1) {
      const auto& lead = num.terms().front();
      const bool affine = num.terms().size() == 1 ||
                          (num.terms().size() == 2 && num.terms()[1].first.is_one());
      if (affine) {
        std::size_t target = lead.first.width() - 1;
        Rational d(den.constant_value());
        Rational a = Rational(lead.second) / d;
        Rational b = num.terms().size() == 2 ? Rational(num.terms()[1].second) / d : Rational(0);
        image = AffineImage{target, a, b};
      }
    }
    if (!image) {
      if (rhs.is_rational())
        throw DomainError("clause '" + name + " -> " + rhs.to_string(field) +
                          "' is not invertible (zero coefficient on the generator)");
      throw DomainError("clause '" + name + " -> " + rhs.to_string(field) +
                        "' is not of the form a*tj + b; only affine maps and permutations are supported");
    }
    images[*idx] = *image;
    if (p.at_end())
      break;
    p.expect_symbol(",");
  }
  return FieldAutomorphism::from_images(std::move(images));
}

std::vector<FieldAutomorphism> parse_automorphism_list(std::string_view text, const FieldSpec& field) {
  std::vector<FieldAutomorphism> out;
  for (auto part : split_semicolons(text))
    out.push_back(parse_automorphism(part, field));
  return out;
}

Presentation parse_presentation(std::string_view text) {
  Parser p(text, PolyContext{}, nullptr, false);
  p.expect_keyword("algebra");
  const std::string name = p.expect_ident();
  p.expect_keyword("over");

  const Token field_tok = p.peek();
  if (p.expect_ident() != "Q")
    p.fail_at(field_tok, "field must be Q, Q(t) or Q(t1,...,tk)");
  FieldSpec field;
  if (p.at_symbol("(")) {
    p.take();
    std::vector<std::string> names;
    for (;;) {
      names.push_back(p.expect_ident());
      if (p.at_symbol(")"))
        break;
      p.expect_symbol(",");
    }
    p.take();
    field.k = names.size();
    for (std::size_t i = 0; i < names.size(); ++i) {
      const bool ok = names[i] == "t" + std::to_string(i + 1) || (names.size() == 1 && names[i] == "t");
      if (!ok)
        p.fail_at(field_tok, "transcendental generators must be named t or t1,...,tk in order");
    }
  }

  p.expect_keyword("generators");
  std::vector<std::string> gens;
  while (p.peek().kind == Token::Ident && !p.at_keyword("relations")) {
    const Token g = p.peek();
    std::string gname = p.expect_ident();
    if (field_generator_index(gname))
      p.fail_at(g, "generator name '" + gname + "' clashes with the transcendental names");
    if (std::find(gens.begin(), gens.end(), gname) != gens.end())
      p.fail_at(g, "generator '" + gname + "' declared twice");
    gens.push_back(std::move(gname));
  }
  p.expect_keyword("relations");
  p.expect_symbol("{");

  const PolyContext ctx{gens.size(), field};
  p.set_context(ctx, &gens);
  std::vector<NCPoly> rels;
  while (!p.at_symbol("}")) {
    const Token start = p.peek();
    if (p.at_end())
      p.fail("missing '}' at the end of the relations block");
    NCPoly lhs = p.expression();
    p.expect_symbol("=");
    NCPoly rhs = p.expression();
    p.expect_symbol(";");
    NCPoly rel = lhs - rhs;
    if (rel.is_zero())
      p.fail_at(start, "relation is identically zero");
    rels.push_back(std::move(rel));
  }
  p.take();
  p.expect_end();
  return Presentation(name, std::move(gens), field, std::move(rels));
}

std::string format_word(const Word& w, const std::vector<std::string>& generator_names) {
  if (w.empty())
    return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      s += "*";
    s += generator_names.at(w[i]);
  }
  return s;
}

std::string format_polynomial(const NCPoly& f, const std::vector<std::string>& generator_names) {
  if (f.is_zero())
    return "0";
  const FieldSpec& field = f.context().field;
  std::string s;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    bool negative = false;
    std::string coeff = format_term_coefficient(c, field, negative);
    std::string body;
    if (w.empty())
      body = coeff;
    else if (coeff == "1")
      body = format_word(w, generator_names);
    else
      body = coeff + "*" + format_word(w, generator_names);
    if (first)
      s += negative ? "-" + body : body;
    else
      s += (negative ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

std::string format_presentation(const Presentation& p) {
  std::string s = "algebra " + p.name() + " over " + p.field().to_string() + "\n";
  s += "generators";
  for (const auto& g : p.generator_names())
    s += " " + g;
  s += "\nrelations {\n";
  for (const auto& r : p.relations())
    s += "  " + format_polynomial(r, p.generator_names()) + " = 0;\n";
  s += "}\n";
  return s;
}

nlohmann::ordered_json polynomial_data(const NCPoly& f) {
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [w, c] : f.terms()) {
    auto word = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < w.size(); ++i)
      word.push_back(w[i] + 1);
    terms.push_back(nlohmann::ordered_json::array({word, c.to_string(f.context().field)}));
  }
  return terms;
}

nlohmann::ordered_json presentation_data(const Presentation& p) {
  nlohmann::ordered_json j;
  j["algebra"] = p.name();
  j["field"] = p.field().to_string();
  j["transcendentals"] = p.field().k;
  j["generators"] = p.generator_names();
  auto rels = nlohmann::ordered_json::array();
  for (const auto& r : p.relations())
    rels.push_back(polynomial_data(r));
  j["relations"] = rels;
  return j;
}

} // namespace fpalg

#include "fpalg/scalars.hpp"

#include "fpalg/error.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace fpalg {

std::string FieldSpec::generator_name(std::size_t i) const {
  if (k == 1 && i == 0)
    return "t";
  return "t" + std::to_string(i + 1);
}

std::string FieldSpec::to_string() const {
  if (k == 0)
    return "Q";
  std::string s = "Q(";
  for (std::size_t i = 0; i < k; ++i) {
    if (i)
      s += ",";
    s += generator_name(i);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) { trim(); }

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
  std::vector<std::uint32_t> e(index + 1, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0)
    exps_.pop_back();
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<std::uint32_t> e(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = exponent(i) + other.exponent(i);
  Monomial m;
  m.exps_ = std::move(e);
  m.degree_ = degree_ + other.degree_;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() > other.exps_.size())
    return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i])
      return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<std::uint32_t> e(other.exps_);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    e[i] -= exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::without(std::size_t index) const {
  if (index >= exps_.size())
    return *this;
  std::vector<std::uint32_t> e(exps_);
  e[index] = 0;
  return Monomial(std::move(e));
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree())
    return a.degree() <=> b.degree();
  std::size_t w = std::max(a.width(), b.width());
  for (std::size_t i = w; i-- > 0;) {
    if (a.exponent(i) != b.exponent(i))
      return a.exponent(i) <=> b.exponent(i);
  }
  return std::strong_ordering::equal;
}

namespace {

bool grlex_greater(const IntPoly::Term& a, const IntPoly::Term& b) {
  return grlex_compare(a.first, b.first) == std::strong_ordering::greater;
}

std::string monomial_string(const Monomial& m,
                            const std::function<std::string(std::size_t)>& name) {
  std::string s;
  for (std::size_t i = 0; i < m.width(); ++i) {
    auto e = m.exponent(i);
    if (e == 0)
      continue;
    if (!s.empty())
      s += "*";
    s += name(i);
    if (e > 1)
      s += "^" + std::to_string(e);
  }
  return s;
}

} // namespace

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(long value) {
  if (value != 0)
    terms_.emplace_back(Monomial(), Integer(value));
}

IntPoly::IntPoly(const Integer& value) {
  if (value != 0)
    terms_.emplace_back(Monomial(), value);
}

IntPoly IntPoly::variable(std::size_t index) {
  IntPoly p;
  p.terms_.emplace_back(Monomial::variable(index), Integer(1));
  return p;
}

IntPoly IntPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), grlex_greater);
  IntPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else {
      if (!p.terms_.empty() && p.terms_.back().second == 0)
        p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0)
    p.terms_.pop_back();
  return p;
}

bool IntPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1;
}

Integer IntPoly::constant_value() const {
  assert(is_constant());
  return terms_.empty() ? Integer(0) : terms_[0].second;
}

std::size_t IntPoly::width() const {
  std::size_t w = 0;
  for (const auto& t : terms_)
    w = std::max(w, t.first.width());
  return w;
}

std::uint32_t IntPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().first.degree();
}

std::uint32_t IntPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_)
    d = std::max(d, t.first.exponent(var));
  return d;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (g == 1)
      break;
  }
  return g;
}

std::vector<IntPoly> IntPoly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_)
    buckets[t.first.exponent(var)].emplace_back(t.first.without(var), t.second);
  std::vector<IntPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets)
    out.push_back(from_terms(std::move(b)));
  return out;
}

IntPoly IntPoly::from_coefficients(std::size_t var, const std::vector<IntPoly>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    Monomial shift = d ? Monomial::variable(var, static_cast<std::uint32_t>(d)) : Monomial();
    for (const auto& t : coeffs[d].terms_)
      terms.emplace_back(t.first * shift, t.second);
  }
  return from_terms(std::move(terms));
}

IntPoly IntPoly::operator-() const {
  IntPoly r(*this);
  for (auto& t : r.terms_)
    t.second = -t.second;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
  IntPoly r;
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end()) {
      r.terms_.push_back(*i++);
      continue;
    }
    if (i == terms_.end()) {
      r.terms_.push_back(*j++);
      continue;
    }
    auto c = grlex_compare(i->first, j->first);
    if (c == std::strong_ordering::greater)
      r.terms_.push_back(*i++);
    else if (c == std::strong_ordering::less)
      r.terms_.push_back(*j++);
    else {
      Integer s = i->second + j->second;
      if (s != 0)
        r.terms_.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& other) const { return *this + (-other); }

IntPoly IntPoly::operator*(const IntPoly& other) const {
  if (is_zero() || other.is_zero())
    return IntPoly();
  if (other.is_constant())
    return scaled(other.constant_value());
  if (is_constant())
    return other.scaled(constant_value());
  std::vector<Term> terms;
  terms.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_)
      terms.emplace_back(a.first * b.first, a.second * b.second);
  return from_terms(std::move(terms));
}

IntPoly IntPoly::scaled(const Integer& factor) const {
  if (factor == 0)
    return IntPoly();
  IntPoly r(*this);
  for (auto& t : r.terms_)
    t.second *= factor;
  return r;
}

IntPoly IntPoly::times_monomial(const Monomial& m, const Integer& c) const {
  if (c == 0)
    return IntPoly();
  IntPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.emplace_back(t.first * m, t.second * c);
  return r;
}

IntPoly IntPoly::divided_by(const Integer& divisor) const {
  IntPoly r(*this);
  for (auto& t : r.terms_)
    mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), divisor.get_mpz_t());
  return r;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero())
    throw DomainError("polynomial division by zero");
  if (b.is_constant()) {
    const Integer c = b.constant_value();
    for (const auto& t : a.terms_)
      if (!mpz_divisible_p(t.second.get_mpz_t(), c.get_mpz_t()))
        return std::nullopt;
    IntPoly r(a);
    for (auto& t : r.terms_)
      mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
    return r;
  }
  IntPoly q;
  IntPoly rem = a;
  const auto& lm = b.leading_monomial();
  const auto& lc = b.leading_coefficient();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.terms_.front();
    if (!lm.divides(rm) || !mpz_divisible_p(rc.get_mpz_t(), lc.get_mpz_t()))
      return std::nullopt;
    Monomial qm = lm.quotient_of(rm);
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), lc.get_mpz_t());
    rem = rem - b.times_monomial(qm, qc);
    q.terms_.emplace_back(std::move(qm), std::move(qc));
  }
  return q;
}

std::string IntPoly::to_string(const std::function<std::string(std::size_t)>& name) const {
  if (terms_.empty())
    return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    Integer a = abs(c);
    if (m.is_one())
      s += a.get_str();
    else if (a == 1)
      s += monomial_string(m, name);
    else
      s += a.get_str() + "*" + monomial_string(m, name);
  }
  return s;
}

// ---------------------------------------------------------------------------
// gcd in Z[t]

namespace {

using UPoly = std::vector<IntPoly>; // coefficients in the main variable, top nonzero

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero())
    u.pop_back();
}

IntPoly content_of(const UPoly& u) {
  IntPoly g;
  for (const auto& c : u) {
    g = gcd(g, c);
    if (g.is_one())
      break;
  }
  return g;
}

UPoly primitive_of(const UPoly& u) {
  IntPoly c = content_of(u);
  if (c.is_one())
    return u;
  UPoly r;
  r.reserve(u.size());
  for (const auto& x : u)
    r.push_back(*IntPoly::divide_exact(x, c));
  return r;
}

// Pseudo-remainder of a by b (deg a >= deg b >= 1), up to a nonzero factor.
UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const std::size_t db = b.size() - 1;
  const IntPoly& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    IntPoly la = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a)
      c = c * lb;
    for (std::size_t i = 0; i <= db; ++i)
      a[i + shift] = a[i + shift] - la * b[i];
    trim(a);
  }
  return a;
}

IntPoly positive(IntPoly p) {
  if (!p.is_zero() && p.leading_coefficient() < 0)
    return -p;
  return p;
}

} // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero())
    return positive(b);
  if (b.is_zero())
    return positive(a);
  if (a.is_constant() || b.is_constant()) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    return IntPoly(g);
  }
  if (a == b)
    return positive(a);

  const std::size_t var = std::max(a.width(), b.width()) - 1;
  UPoly ua = a.coefficients_in(var);
  UPoly ub = b.coefficients_in(var);
  if (ua.size() == 1)
    return gcd(a, content_of(ub));
  if (ub.size() == 1)
    return gcd(content_of(ua), b);

  IntPoly ca = content_of(ua);
  IntPoly cb = content_of(ub);
  IntPoly c = gcd(ca, cb);
  ua = primitive_of(ua);
  ub = primitive_of(ub);
  if (ua.size() < ub.size())
    std::swap(ua, ub);

  UPoly h;
  for (;;) {
    UPoly r = pseudo_remainder(ua, ub);
    if (r.empty()) {
      h = ub;
      break;
    }
    if (r.size() == 1) {
      h = UPoly{IntPoly(1)};
      break;
    }
    ua = std::move(ub);
    ub = primitive_of(r);
  }
  return positive(c * IntPoly::from_coefficients(var, primitive_of(h)));
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const Rational& value)
    : num_(Integer(value.get_num())), den_(Integer(value.get_den())) {}

Scalar Scalar::generator(std::size_t index) { return Scalar(IntPoly::variable(index)); }

Scalar Scalar::from_coprime(IntPoly num, IntPoly den) {
  if (num.is_zero())
    return Scalar();
  if (den.leading_coefficient() < 0) {
    num = -num;
    den = -den;
  }
  return Scalar(std::move(num), std::move(den));
}

Scalar Scalar::fraction(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero())
    throw DomainError("division by zero");
  if (num.is_zero())
    return Scalar();
  if (den.is_one())
    return Scalar(num, den);
  IntPoly g = gcd(num, den);
  if (g.is_one())
    return from_coprime(num, den);
  return from_coprime(*IntPoly::divide_exact(num, g), *IntPoly::divide_exact(den, g));
}

Rational Scalar::to_rational() const {
  if (!is_rational())
    throw DomainError("scalar " + to_string() + " is not rational");
  Rational q(num_.constant_value(), den_.constant_value());
  q.canonicalize();
  return q;
}

std::vector<std::size_t> Scalar::generators_in_order() const {
  std::vector<std::size_t> out;
  for (const IntPoly* p : {&num_, &den_})
    for (const auto& t : p->terms())
      for (std::size_t i = 0; i < t.first.width(); ++i)
        if (t.first.exponent(i) && std::find(out.begin(), out.end(), i) == out.end())
          out.push_back(i);
  return out;
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_); }

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero())
    return o;
  if (o.is_zero())
    return *this;
  if (den_ == o.den_)
    return fraction(num_ + o.num_, den_);
  // Henrici: only the common factor of the denominators can cancel.
  IntPoly g = gcd(den_, o.den_);
  IntPoly d1 = *IntPoly::divide_exact(den_, g);
  IntPoly d2 = *IntPoly::divide_exact(o.den_, g);
  IntPoly n = num_ * d2 + o.num_ * d1;
  if (n.is_zero())
    return Scalar();
  if (g.is_one())
    return from_coprime(std::move(n), d1 * d2);
  IntPoly g2 = gcd(n, g);
  return from_coprime(*IntPoly::divide_exact(n, g2), d1 * d2 * *IntPoly::divide_exact(g, g2));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero())
    return Scalar();
  if (den_.is_one() && o.den_.is_one())
    return Scalar(num_ * o.num_, den_);
  IntPoly g1 = gcd(num_, o.den_);
  IntPoly g2 = gcd(o.num_, den_);
  IntPoly n1 = g1.is_one() ? num_ : *IntPoly::divide_exact(num_, g1);
  IntPoly d2 = g1.is_one() ? o.den_ : *IntPoly::divide_exact(o.den_, g1);
  IntPoly n2 = g2.is_one() ? o.num_ : *IntPoly::divide_exact(o.num_, g2);
  IntPoly d1 = g2.is_one() ? den_ : *IntPoly::divide_exact(den_, g2);
  return from_coprime(n1 * n2, d1 * d2);
}

Scalar Scalar::inverse() const {
  if (is_zero())
    throw DomainError("division by zero");
  return from_coprime(den_, num_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::relabeled(const std::vector<std::size_t>& relabel) const {
  auto rename = [&](const IntPoly& p) {
    std::vector<IntPoly::Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) {
      std::vector<std::uint32_t> e;
      for (std::size_t i = 0; i < m.width(); ++i) {
        if (!m.exponent(i))
          continue;
        std::size_t j = relabel.at(i);
        if (e.size() <= j)
          e.resize(j + 1, 0);
        e[j] += m.exponent(i);
      }
      terms.emplace_back(Monomial(std::move(e)), c);
    }
    return IntPoly::from_terms(std::move(terms));
  };
  return from_coprime(rename(num_), rename(den_));
}

std::string Scalar::to_string(const FieldSpec& field) const {
  auto name = [&](std::size_t i) {
    return i < field.k ? field.generator_name(i) : "t" + std::to_string(i + 1);
  };
  std::string n = num_.to_string(name);
  if (den_.is_one())
    return n;
  if (num_.terms().size() > 1)
    n = "(" + n + ")";
  std::string d = den_.to_string(name);
  bool bare = den_.is_constant() ||
              (den_.terms().size() == 1 && den_.leading_coefficient() == 1 &&
               std::count_if(den_.leading_monomial().exponents().begin(),
                             den_.leading_monomial().exponents().end(),
                             [](auto e) { return e != 0; }) == 1);
  return n + "/" + (bare ? d : "(" + d + ")");
}

std::string Scalar::to_string() const { return to_string(FieldSpec{width()}); }

// ---------------------------------------------------------------------------
// FieldAutomorphism

FieldAutomorphism FieldAutomorphism::identity(std::size_t k) {
  std::vector<AffineImage> id(k);
  for (std::size_t i = 0; i < k; ++i)
    id[i].target = i;
  return FieldAutomorphism(id, id);
}

FieldAutomorphism FieldAutomorphism::from_images(std::vector<AffineImage> images) {
  const std::size_t k = images.size();
  std::vector<AffineImage> back(k);
  std::vector<bool> hit(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    auto& im = images[i];
    im.scale.canonicalize();
    im.shift.canonicalize();
    if (im.target >= k)
      throw DomainError("automorphism image refers to generator t" + std::to_string(im.target + 1) +
                        " outside Q(t1..t" + std::to_string(k) + ")");
    if (im.scale == 0)
      throw DomainError("automorphism is not invertible: generator t" + std::to_string(i + 1) +
                        " has a zero coefficient");
    if (hit[im.target])
      throw DomainError("automorphism is not invertible: two generators map onto t" +
                        std::to_string(im.target + 1));
    hit[im.target] = true;
    Rational inv = 1 / im.scale;
    back[im.target] = AffineImage{i, inv, -im.shift * inv};
  }
  return FieldAutomorphism(std::move(images), std::move(back));
}

FieldAutomorphism FieldAutomorphism::permutation(const std::vector<std::size_t>& perm) {
  std::vector<AffineImage> images(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    images[i].target = perm[i];
  return from_images(std::move(images));
}

FieldAutomorphism FieldAutomorphism::affine(std::size_t k, std::size_t index, const Rational& scale,
                                            const Rational& shift) {
  auto images = identity(k).forward_;
  images.at(index).scale = scale;
  images.at(index).shift = shift;
  return from_images(std::move(images));
}

bool FieldAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < forward_.size(); ++i)
    if (forward_[i] != AffineImage{i, 1, 0})
      return false;
  return true;
}

Scalar FieldAutomorphism::image(std::size_t index) const {
  const auto& im = forward_.at(index);
  return Scalar(im.scale) * Scalar::generator(im.target) + Scalar(im.shift);
}

Scalar FieldAutomorphism::apply(const Scalar& a) const {
  if (a.width() > k())
    throw DomainError("scalar " + a.to_string() + " is outside the field Q(t1..t" +
                      std::to_string(k()) + ") of the automorphism");
  if (a.is_rational() || is_identity())
    return a;

  // t_j -> (A_j t_target + B_j) / D_j with integers; both numerator and
  // denominator are scaled by prod D_j^{E_j} so the ratio is unchanged.
  const std::size_t w = a.width();
  std::vector<std::uint32_t> top(w, 0);
  for (const IntPoly* p : {&a.numerator(), &a.denominator()})
    for (std::size_t j = 0; j < w; ++j)
      top[j] = std::max(top[j], p->degree_in(j));

  std::vector<std::vector<IntPoly>> powers(w);
  std::vector<std::vector<Integer>> dpowers(w);
  for (std::size_t j = 0; j < w; ++j) {
    const auto& im = forward_[j];
    Integer d;
    mpz_lcm(d.get_mpz_t(), im.scale.get_den_mpz_t(), im.shift.get_den_mpz_t());
    Integer A = Integer(im.scale.get_num() * (d / im.scale.get_den()));
    Integer B = Integer(im.shift.get_num() * (d / im.shift.get_den()));
    IntPoly factor = IntPoly::variable(im.target).scaled(A) + IntPoly(B);
    powers[j].push_back(IntPoly(1));
    dpowers[j].push_back(Integer(1));
    for (std::uint32_t e = 1; e <= top[j]; ++e) {
      powers[j].push_back(powers[j].back() * factor);
      dpowers[j].push_back(dpowers[j].back() * d);
    }
  }

  auto substitute = [&](const IntPoly& p) {
    IntPoly out;
    for (const auto& [m, c] : p.terms()) {
      IntPoly term(c);
      for (std::size_t j = 0; j < w; ++j) {
        const auto e = m.exponent(j);
        term = term.scaled(dpowers[j][top[j] - e]);
        if (e)
          term = term * powers[j][e];
      }
      out = out + term;
    }
    return out;
  };

  IntPoly num = substitute(a.numerator());
  IntPoly den = substitute(a.denominator());
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.content().get_mpz_t(), den.content().get_mpz_t());
  if (g != 1) {
    num = num.divided_by(g);
    den = den.divided_by(g);
  }
  return Scalar::from_coprime(std::move(num), std::move(den));
}

std::string FieldAutomorphism::to_string(const FieldSpec& field) const {
  std::string s;
  for (std::size_t i = 0; i < forward_.size(); ++i) {
    if (forward_[i] == AffineImage{i, 1, 0})
      continue;
    if (!s.empty())
      s += ", ";
    s += field.generator_name(i) + " -> " + image(i).to_string(field);
  }
  return s.empty() ? "identity" : s;
}

namespace {

// (outer o inner)(t_i) = outer(inner(t_i)).
std::vector<AffineImage> chain(const std::vector<AffineImage>& outer,
                               const std::vector<AffineImage>& inner) {
  std::vector<AffineImage> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const auto& in = inner[i];
    const auto& o = outer[in.target];
    out[i] = AffineImage{o.target, in.scale * o.scale, in.scale * o.shift + in.shift};
    out[i].scale.canonicalize();
    out[i].shift.canonicalize();
  }
  return out;
}

} // namespace

FieldAutomorphism compose(const FieldAutomorphism& sigma, const FieldAutomorphism& tau) {
  if (sigma.k() != tau.k())
    throw DomainError("cannot compose automorphisms of different fields");
  return FieldAutomorphism::from_images(chain(sigma.forward(), tau.forward()));
}

} // namespace fpalg

#include "arithdt/gw.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace arithdt {

namespace {

Integer least_nonresidue(std::uint64_t p) {
  Integer pz(std::to_string(p));
  for (Integer n = 2;; ++n) {
    if (mpz_legendre(n.get_mpz_t(), pz.get_mpz_t()) == -1) return n;
  }
}

Integer mod_positive(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

void require_same_field(const BaseField& a, const BaseField& b) {
  if (!(a == b)) throw DomainError("field mismatch: " + a.name() + " vs " + b.name());
}


int legendre(const Integer& a, const Integer& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

}  // namespace

// ---------------------------------------------------------------- BaseField

BaseField BaseField::finite_prime(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("F_p requires an odd prime, got " + std::to_string(p));
  }
  return BaseField(Kind::FinitePrime, p);
}

BaseField BaseField::parse(std::string_view name) {
  if (name == "Q") return rationals();
  if (name == "R") return reals();
  if (name == "C") return complex_numbers();
  if (name.size() > 1 && name[0] == 'F') {
    std::string digits(name.substr(1));
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad field name");
    return finite_prime(std::stoull(digits));
  }
  throw std::invalid_argument("unknown field '" + std::string(name) + "' (expected Q, R, C or F<p>)");
}

std::string BaseField::name() const {
  switch (kind_) {
    case Kind::Rationals: return "Q";
    case Kind::Reals: return "R";
    case Kind::ComplexNumbers: return "C";
    case Kind::FinitePrime: return "F" + std::to_string(p_);
  }
  return "?";
}

// -------------------------------------------------------------- SquareClass

SquareClass SquareClass::of(const BaseField& field, const Rational& a) {
  if (a == 0) throw DomainError("<0> is not a unit");
  switch (field.kind()) {
    case BaseField::Kind::Rationals:
      return SquareClass(field, squarefree_part(a));
    case BaseField::Kind::Reals:
      return SquareClass(field, sgn(a) > 0 ? 1 : -1);
    case BaseField::Kind::ComplexNumbers:
      return SquareClass(field, 1);
    case BaseField::Kind::FinitePrime: {
      Integer p(std::to_string(field.characteristic()));
      Integer num = mod_positive(a.get_num(), p);
      Integer den = mod_positive(a.get_den(), p);
      if (den == 0) throw DomainError(arithdt::to_string(a) + " is not defined in " + field.name());
      if (num == 0) throw DomainError(arithdt::to_string(a) + " vanishes in " + field.name());
      Integer v = mod_positive(num * den, p);
      if (legendre(v, p) == 1) return SquareClass(field, 1);
      return SquareClass(field, least_nonresidue(field.characteristic()));
    }
  }
  throw std::logic_error("unreachable");
}

int SquareClass::sign() const {
  if (!field_.is_ordered()) throw DomainError("sign undefined over " + field_.name());
  return sgn(rep_) > 0 ? 1 : -1;
}

SquareClass SquareClass::operator*(const SquareClass& other) const {
  require_same_field(field_, other.field_);
  if (field_.kind() == BaseField::Kind::Rationals) {
    Integer g = gcd(rep_, other.rep_);
    Integer prod = rep_ * other.rep_;
    return SquareClass(field_, Integer(prod / (g * g)));
  }
  return of(field_, Rational(rep_ * other.rep_));
}

std::string SquareClass::to_string() const { return "<" + rep_.get_str() + ">"; }

bool SquareClassOrder::operator()(const Integer& a, const Integer& b) const {
  int c = mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
  if (c != 0) return c < 0;
  return sgn(a) > sgn(b);
}

// ---------------------------------------------------------------- GwElement

GwElement GwElement::angle(const BaseField& field, const Rational& a, std::int64_t multiplicity) {
  return angle(SquareClass::of(field, a), multiplicity);
}

GwElement GwElement::angle(const SquareClass& c, std::int64_t multiplicity) {
  GwElement q(c.field());
  q.add_term(c.representative(), multiplicity);
  return q;
}

GwElement GwElement::hyperbolic(const BaseField& field) {
  return angle(field, 1) + angle(field, -1);
}

GwElement GwElement::diagonal(const BaseField& field, const std::vector<Rational>& entries) {
  GwElement q(field);
  for (const auto& a : entries) q.add_term(SquareClass::of(field, a).representative(), 1);
  return q;
}

void GwElement::add_term(const Integer& rep, std::int64_t multiplicity) {
  if (multiplicity == 0) return;
  auto [it, inserted] = terms_.try_emplace(rep, multiplicity);
  if (!inserted) {
    it->second += multiplicity;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t GwElement::rank() const {
  std::int64_t r = 0;
  for (const auto& [rep, n] : terms_) r += n;
  return r;
}

std::int64_t GwElement::signature() const {
  if (!field_.is_ordered()) throw DomainError("signature undefined over " + field_.name());
  std::int64_t s = 0;
  for (const auto& [rep, n] : terms_) s += sgn(rep) > 0 ? n : -n;
  return s;
}

SquareClass GwElement::discriminant() const {
  SquareClass d = SquareClass::one(field_);
  for (const auto& [rep, n] : terms_) {
    if (n < 0) throw DomainError("discriminant needs a genuine form (negative multiplicity)");
    if (n % 2 == 1) d = d * SquareClass::of(field_, rep);
  }
  return d;
}

GwElement GwElement::over(const BaseField& target) const {
  if (target == field_) return *this;
  bool allowed = field_.kind() == BaseField::Kind::Rationals ||
                 (field_.kind() == BaseField::Kind::Reals &&
                  target.kind() == BaseField::Kind::ComplexNumbers);
  if (!allowed) throw DomainError("no base change from " + field_.name() + " to " + target.name());
  GwElement q(target);
  for (const auto& [rep, n] : terms_) q.add_term(SquareClass::of(target, rep).representative(), n);
  return q;
}

GwElement& GwElement::operator+=(const GwElement& other) {
  require_same_field(field_, other.field_);
  for (const auto& [rep, n] : other.terms_) add_term(rep, n);
  return *this;
}

GwElement& GwElement::operator-=(const GwElement& other) {
  require_same_field(field_, other.field_);
  for (const auto& [rep, n] : other.terms_) add_term(rep, -n);
  return *this;
}

GwElement operator*(const GwElement& a, const GwElement& b) {
  require_same_field(a.field_, b.field_);
  GwElement q(a.field_);
  for (const auto& [ra, na] : a.terms_) {
    SquareClass ca = SquareClass::of(a.field_, ra);
    for (const auto& [rb, nb] : b.terms_) {
      q.add_term((ca * SquareClass::of(a.field_, rb)).representative(), na * nb);
    }
  }
  return q;
}

GwElement& GwElement::operator*=(const GwElement& other) { return *this = *this * other; }

GwElement& GwElement::operator*=(std::int64_t scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [rep, n] : terms_) n *= scalar;
  return *this;
}

GwElement GwElement::operator-() const {
  GwElement q = *this;
  return q *= -1;
}

std::pair<GwElement, GwElement> GwElement::split() const {
  GwElement pos(field_), neg(field_);
  for (const auto& [rep, n] : terms_) {
    if (n > 0) pos.add_term(rep, n);
    else neg.add_term(rep, -n);
  }
  return {pos, neg};
}

std::string GwElement::to_string(bool contract_hyperbolic) const {
  std::vector<std::pair<std::string, std::int64_t>> items;
  Terms rest = terms_;
  if (contract_hyperbolic && field_.kind() != BaseField::Kind::ComplexNumbers) {
    Integer one = 1, minus_one = SquareClass::of(field_, -1).representative();
    if (one != minus_one) {
      auto p = rest.find(one), m = rest.find(minus_one);
      if (p != rest.end() && m != rest.end() && (p->second > 0) == (m->second > 0)) {
        std::int64_t h = p->second > 0 ? std::min(p->second, m->second) : std::max(p->second, m->second);
        items.emplace_back("H", h);
        if ((p->second -= h) == 0) rest.erase(p);
        if ((m->second -= h) == 0) rest.erase(m);
      }
    }
  }
  for (const auto& [rep, n] : rest) items.emplace_back("<" + rep.get_str() + ">", n);
  if (items.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [sym, n] : items) {
    std::int64_t mag = n < 0 ? -n : n;
    if (first) os << (n < 0 ? "-" : "");
    else os << (n < 0 ? " - " : " + ");
    if (mag != 1) os << mag << "*";
    os << sym;
    first = false;
  }
  return os.str();
}

// ------------------------------------------------------- Hilbert / Hasse

Place Place::prime(const Integer& p) {
  if (!is_prime(p)) throw DomainError("place must be a prime or infinity, got " + p.get_str());
  return Place(p);
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
  if (a == 0 || b == 0) throw DomainError("Hilbert symbol needs nonzero arguments");
  // Same square classes, integral representatives.
  Integer x = a.get_num() * a.get_den();
  Integer y = b.get_num() * b.get_den();
  if (place.is_infinite()) return (x < 0 && y < 0) ? -1 : 1;
  const Integer& p = place.prime_number();
  unsigned va = remove_factor(x, p);
  unsigned vb = remove_factor(y, p);
  if (p == 2) {
    auto eps = [](const Integer& u) { return mod_positive(u, 4) == 3 ? 1 : 0; };
    auto omega = [](const Integer& u) {
      Integer r = mod_positive(u, 8);
      return (r == 3 || r == 5) ? 1 : 0;
    };
    int e = eps(x) * eps(y) + static_cast<int>(va % 2) * omega(y) + static_cast<int>(vb % 2) * omega(x);
    return e % 2 == 0 ? 1 : -1;
  }
  int s = 1;
  Integer half = (p - 1) / 2;
  if ((va % 2 == 1) && (vb % 2 == 1) && mpz_odd_p(half.get_mpz_t())) s = -s;
  if (vb % 2 == 1) s *= legendre(x, p);
  if (va % 2 == 1) s *= legendre(y, p);
  return s;
}

int hasse_invariant(const GwElement& q, const Integer& p) {
  if (q.field().kind() != BaseField::Kind::Rationals) throw DomainError("Hasse invariant is defined over Q");
  Place place = Place::prime(p);
  int h = 1;
  const auto& terms = q.terms();
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    const auto& [ra, na] = *it;
    if (na < 0) throw DomainError("Hasse invariant needs a genuine form (negative multiplicity)");
    std::int64_t self_pairs = na * (na - 1) / 2;
    if (self_pairs % 2 == 1) h *= hilbert_symbol(ra, ra, place);
    for (auto jt = std::next(it); jt != terms.end(); ++jt) {
      const auto& [rb, nb] = *jt;
      if ((na * nb) % 2 == 1) h *= hilbert_symbol(ra, rb, place);
    }
  }
  return h;
}

bool gw_equal(const GwElement& a, const GwElement& b) {
  require_same_field(a.field(), b.field());
  GwElement diff = a - b;
  auto [pos, neg] = diff.split();
  if (pos.rank() != neg.rank()) return false;
  const BaseField& field = a.field();
  switch (field.kind()) {
    case BaseField::Kind::ComplexNumbers:
      return true;
    case BaseField::Kind::Reals:
      return diff.signature() == 0;
    case BaseField::Kind::FinitePrime:
      return pos.discriminant() == neg.discriminant();
    case BaseField::Kind::Rationals: {
      if (diff.signature() != 0) return false;
      if (!(pos.discriminant() == neg.discriminant())) return false;
      std::set<Integer> primes{Integer(2)};
      for (const auto& [rep, n] : diff.terms())
        for (auto& p : prime_factors(rep)) primes.insert(p);
      for (const auto& p : primes)
        if (hasse_invariant(pos, p) != hasse_invariant(neg, p)) return false;
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------- diagonalization

GwElement diagonalize_symmetric(const Matrix& m, const BaseField& field) {
  if (!m.is_symmetric()) throw DomainError("diagonalize_symmetric needs a symmetric square matrix");
  const std::size_t n = m.rows();
  Matrix s = m;
  std::vector<bool> live(n, true);
  std::size_t remaining = n;
  std::vector<Rational> entries;
  std::int64_t hyperbolic_blocks = 0;

  while (remaining > 0) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i)
      if (live[i] && s(i, i) != 0) { pivot = i; break; }

    if (pivot != n) {
      const Rational d = s(pivot, pivot);
      entries.push_back(d);
      live[pivot] = false;
      --remaining;
      for (std::size_t r = 0; r < n; ++r) {
        if (!live[r] || s(r, pivot) == 0) continue;
        Rational f = s(r, pivot) / d;
        for (std::size_t c = 0; c < n; ++c)
          if (live[c]) s(r, c) -= f * s(pivot, c);
      }
      continue;
    }

    // Zero diagonal: split off the first nonzero off-diagonal pair as H.
    std::size_t bi = n, bj = n;
    for (std::size_t i = 0; i < n && bi == n; ++i) {
      if (!live[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (live[j] && s(i, j) != 0) { bi = i; bj = j; break; }
    }
    if (bi == n) throw DomainError("diagonalize_symmetric: matrix is singular");
    const Rational b = s(bi, bj);
    live[bi] = live[bj] = false;
    remaining -= 2;
    ++hyperbolic_blocks;
    // Schur complement against [[0, b], [b, 0]], whose inverse is [[0, 1/b], [1/b, 0]].
    std::vector<std::size_t> rest;
    for (std::size_t r = 0; r < n; ++r)
      if (live[r]) rest.push_back(r);
    Matrix update(n, n);
    for (std::size_t r : rest)
      for (std::size_t c : rest)
        update(r, c) = (s(r, bi) * s(bj, c) + s(r, bj) * s(bi, c)) / b;
    for (std::size_t r : rest)
      for (std::size_t c : rest) s(r, c) -= update(r, c);
  }

  GwElement q = GwElement::diagonal(field, entries);
  if (hyperbolic_blocks > 0) q += hyperbolic_blocks * GwElement::hyperbolic(field);
  return q;
}

// ---------------------------------------------------------- quadratic fields

QuadraticNumber QuadraticNumber::operator+(const QuadraticNumber& o) const {
  if (d != o.d) throw DomainError("mixing different quadratic fields");
  return {u + o.u, v + o.v, d};
}

QuadraticNumber QuadraticNumber::operator-(const QuadraticNumber& o) const {
  if (d != o.d) throw DomainError("mixing different quadratic fields");
  return {u - o.u, v - o.v, d};
}

QuadraticNumber QuadraticNumber::operator*(const QuadraticNumber& o) const {
  if (d != o.d) throw DomainError("mixing different quadratic fields");
  return {u * o.u + Rational(d) * v * o.v, u * o.v + v * o.u, d};
}

GwElement trace_form(const Integer& d, const QuadraticNumber& beta, const BaseField& field) {
  if (d == 0 || d == 1 || squarefree_part(d) != d) {
    throw DomainError("trace_form needs a square-free d != 1, got " + d.get_str());
  }
  if (beta.d != d) throw DomainError("beta lives in a different quadratic field");
  if (beta.is_zero()) throw DomainError("trace form of <0> is undefined");
  Rational dq(d);
  Matrix gram{{2 * beta.u, 2 * dq * beta.v}, {2 * dq * beta.v, 2 * dq * beta.u}};
  return diagonalize_symmetric(gram, BaseField::rationals()).over(field);
}

// ----------------------------------------------------------- Gaussian ints

GaussianInteger GaussianInteger::i_power(std::int64_t e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

std::string GaussianInteger::to_string() const {
  if (im == 0) return std::to_string(re);
  std::string imag = (im == 1 ? "" : im == -1 ? "-" : std::to_string(im)) + "i";
  if (re == 0) return imag;
  return std::to_string(re) + (im > 0 ? " + " : " - ") +
         (im == 1 || im == -1 ? "" : std::to_string(im > 0 ? im : -im)) + "i";
}

// ------------------------------------------------------------ GW(k)(alpha)

GwAlphaElement::GwAlphaElement(GwElement even, GwElement odd)
    : even_(std::move(even)), odd_(std::move(odd)) {
  require_same_field(even_.field(), odd_.field());
}

GwAlphaElement::GwAlphaElement(GwElement even) : even_(std::move(even)), odd_(even_.field()) {}

GwAlphaElement GwAlphaElement::alpha(const BaseField& field) {
  return GwAlphaElement(GwElement::zero(field), GwElement::one(field));
}

GwAlphaElement GwAlphaElement::alpha_power(const BaseField& field, std::int64_t e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return one(field);
    case 1: return alpha(field);
    case 2: return GwAlphaElement(GwElement::angle(field, -1));
    default: return GwAlphaElement(GwElement::zero(field), GwElement::angle(field, -1));
  }
}

GwAlphaElement GwAlphaElement::conjugate() const {
  return GwAlphaElement(even_, GwElement::angle(field(), -1) * odd_);
}

std::int64_t GwAlphaElement::total_rank() const { return even_.rank() + odd_.rank(); }

GwAlphaElement GwAlphaElement::over(const BaseField& target) const {
  return GwAlphaElement(even_.over(target), odd_.over(target));
}

GwAlphaElement& GwAlphaElement::operator+=(const GwAlphaElement& o) {
  even_ += o.even_;
  odd_ += o.odd_;
  return *this;
}

GwAlphaElement& GwAlphaElement::operator-=(const GwAlphaElement& o) {
  even_ -= o.even_;
  odd_ -= o.odd_;
  return *this;
}

GwAlphaElement operator*(const GwAlphaElement& a, const GwAlphaElement& b) {
  GwElement minus_one = GwElement::angle(a.field(), -1);
  GwElement even = a.even_ * b.even_ + minus_one * (a.odd_ * b.odd_);
  GwElement odd = a.even_ * b.odd_ + a.odd_ * b.even_;
  return GwAlphaElement(std::move(even), std::move(odd));
}

GwAlphaElement& GwAlphaElement::operator*=(const GwAlphaElement& o) { return *this = *this * o; }

std::string GwAlphaElement::to_string(bool contract_hyperbolic) const {
  if (odd_.is_zero()) return even_.to_string(contract_hyperbolic);
  std::string odd = "alpha*(" + odd_.to_string(contract_hyperbolic) + ")";
  if (even_.is_zero()) return odd;
  return even_.to_string(contract_hyperbolic) + " + " + odd;
}

bool gw_equal(const GwAlphaElement& a, const GwAlphaElement& b) {
  return gw_equal(a.even(), b.even()) && gw_equal(a.odd(), b.odd());
}

std::int64_t numeric_complex(const GwAlphaElement& q) { return q.even().rank() - q.odd().rank(); }

GaussianInteger numeric_real(const GwAlphaElement& q) {
  return {q.even().signature(), q.odd().signature()};
}

// ------------------------------------------------------------------ parser

GwElement parse_gw(std::string_view text, const BaseField& field) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty GW expression");
  GwElement q(field);
  std::size_t pos = 0;
  bool first = true;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse GW expression '" + std::string(text) + "': " + why);
  };
  while (pos < s.size()) {
    std::int64_t sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    std::int64_t coeff = 1;
    bool have_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::size_t end = pos;
      while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
      coeff = std::stoll(s.substr(pos, end - pos));
      have_coeff = true;
      pos = end;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
      } else {
        // bare integer n stands for n*<1>
        q += GwElement::angle(field, 1, sign * coeff);
        continue;
      }
    }
    if (pos >= s.size()) fail("dangling coefficient");
    if (s[pos] == 'H') {
      ++pos;
      q += (sign * coeff) * GwElement::hyperbolic(field);
    } else if (s[pos] == '<') {
      std::size_t close = s.find('>', pos);
      if (close == std::string::npos) fail("missing '>'");
      Rational a = parse_rational(s.substr(pos + 1, close - pos - 1));
      q += GwElement::angle(field, a, sign * coeff);
      pos = close + 1;
    } else {
      fail(have_coeff ? "expected <a> or H after '*'" : "expected a term");
    }
  }
  return q;
}

}  // namespace arithdt

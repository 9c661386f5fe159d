#include "holant/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "holant/errors.hpp"
#include "literal_parser.hpp"

namespace holant {
namespace {

unsigned total(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0U); }

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t k = 0; k < kVarCount; ++k)
    if (d[k] > m[k]) return false;
  return true;
}

Monomial operator-(const Monomial& m, const Monomial& d) {
  Monomial r{};
  for (std::size_t k = 0; k < kVarCount; ++k) r[k] = static_cast<std::uint16_t>(m[k] - d[k]);
  return r;
}

Monomial operator+(const Monomial& l, const Monomial& r) {
  Monomial s{};
  for (std::size_t k = 0; k < kVarCount; ++k) s[k] = static_cast<std::uint16_t>(l[k] + r[k]);
  return s;
}

std::optional<Var> var_from_char(char c) {
  switch (c) {
    case 'a': return Var::a;
    case 'b': return Var::b;
    case 'X': return Var::X;
    case 'Y': return Var::Y;
    case 'x': return Var::x;
    default: return std::nullopt;
  }
}

// Cache of successive powers of one polynomial or scalar.
template <typename T>
class PowerCache {
 public:
  explicit PowerCache(T base) : powers_{T(1), std::move(base)} {}
  const T& get(unsigned e) {
    while (powers_.size() <= e) powers_.push_back(powers_.back() * powers_[1]);
    return powers_[e];
  }

 private:
  std::vector<T> powers_;
};

}  // namespace

char var_name(Var v) {
  static constexpr char kNames[kVarCount] = {'a', 'b', 'X', 'Y', 'x'};
  return kNames[static_cast<std::size_t>(v)];
}

bool GrlexGreater::operator()(const Monomial& l, const Monomial& r) const {
  unsigned tl = total(l);
  unsigned tr = total(r);
  if (tl != tr) return tl > tr;
  return l > r;
}

MPoly::MPoly(const Cyc12& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::var(Var v) {
  Monomial m{};
  m[static_cast<std::size_t>(v)] = 1;
  return term(m, Cyc12(1));
}

MPoly MPoly::term(const Monomial& m, const Cyc12& c) {
  MPoly p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Cyc12 MPoly::constant_value() const {
  if (!is_constant()) throw Error(ErrorKind::UnboundVariable, "polynomial " + to_string(*this) + " is not constant");
  return terms_.empty() ? Cyc12() : terms_.begin()->second;
}

Cyc12 MPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Cyc12() : it->second;
}

unsigned MPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[static_cast<std::size_t>(v)]);
  return d;
}

unsigned MPoly::total_degree() const { return terms_.empty() ? 0 : total(terms_.begin()->first); }

void MPoly::add_term(const Monomial& m, const Cyc12& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
  return r;
}

MPoly operator*(const MPoly& l, const MPoly& r) {
  MPoly out;
  for (const auto& [ml, cl] : l.terms_)
    for (const auto& [mr, cr] : r.terms_) out.add_term(ml + mr, cl * cr);
  return out;
}

MPoly MPoly::pow(unsigned long e) const {
  MPoly result(1);
  MPoly base = *this;
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

MPoly subst(const MPoly& p, const PolyBindings& bindings) {
  std::array<std::optional<PowerCache<MPoly>>, kVarCount> caches;
  for (const auto& [v, q] : bindings) caches[static_cast<std::size_t>(v)].emplace(q);
  MPoly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial kept{};
    MPoly factor(c);
    for (std::size_t k = 0; k < kVarCount; ++k) {
      if (m[k] == 0) continue;
      if (caches[k]) {
        factor *= caches[k]->get(m[k]);
      } else {
        kept[k] = m[k];
      }
    }
    out += factor * MPoly::term(kept, Cyc12(1));
  }
  return out;
}

Cyc12 evaluate(const MPoly& p, const ScalarBindings& bindings) {
  std::array<std::optional<PowerCache<Cyc12>>, kVarCount> caches;
  for (const auto& [v, z] : bindings) caches[static_cast<std::size_t>(v)].emplace(z);
  Cyc12 sum;
  for (const auto& [m, c] : p.terms()) {
    Cyc12 t = c;
    for (std::size_t k = 0; k < kVarCount; ++k) {
      if (m[k] == 0) continue;
      if (!caches[k])
        throw Error(ErrorKind::UnboundVariable,
                    std::string("variable ") + var_name(static_cast<Var>(k)) + " is unbound");
      t *= caches[k]->get(m[k]);
    }
    sum += t;
  }
  return sum;
}

Rat evaluate_rational(const MPoly& p, const std::map<Var, Rat>& bindings) {
  std::array<std::optional<PowerCache<Rat>>, kVarCount> caches;
  for (const auto& [v, z] : bindings) caches[static_cast<std::size_t>(v)].emplace(z);
  Rat sum = 0;
  Rat t;
  for (const auto& [m, c] : p.terms()) {
    t = c.rational();
    for (std::size_t k = 0; k < kVarCount; ++k) {
      if (m[k] == 0) continue;
      if (!caches[k])
        throw Error(ErrorKind::UnboundVariable,
                    std::string("variable ") + var_name(static_cast<Var>(k)) + " is unbound");
      t *= caches[k]->get(m[k]);
    }
    sum += t;
  }
  return sum;
}

std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& d) {
  if (d.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by the zero polynomial");
  const auto& [dm, dc] = *d.terms().begin();
  Cyc12 dc_inv = dc.inverse();
  MPoly remainder = p;
  MPoly quotient;
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = *remainder.terms().begin();
    // A single polynomial is a Groebner basis of its ideal, so a leading term that
    // d's leading term cannot divide proves non-divisibility.
    if (!divides(dm, rm)) return std::nullopt;
    MPoly t = MPoly::term(rm - dm, rc * dc_inv);
    quotient += t;
    remainder -= t * d;
  }
  return quotient;
}

MPoly xy_to_ab(const MPoly& p) {
  MPoly a = MPoly::var(Var::a);
  MPoly b = MPoly::var(Var::b);
  return subst(p, {{Var::X, a * b}, {Var::Y, a.pow(3) + b.pow(3)}});
}

std::optional<MPoly> express_in_xy(const MPoly& p) {
  for (const auto& [m, c] : p.terms())
    if (m[2] != 0 || m[3] != 0 || m[4] != 0) return std::nullopt;
  // X^n Y^k has leading term a^(n+3k) b^n and is homogeneous, so peeling leading
  // terms strictly decreases the remainder.
  MPoly X = MPoly::var(Var::X);
  MPoly Y = MPoly::var(Var::Y);
  MPoly rest = p;
  MPoly out;
  while (!rest.is_zero()) {
    const auto& [m, c] = *rest.terms().begin();
    unsigned ea = m[0];
    unsigned eb = m[1];
    if (ea < eb || (ea - eb) % 3 != 0) return std::nullopt;
    Monomial xy{};
    xy[2] = static_cast<std::uint16_t>(eb);
    xy[3] = static_cast<std::uint16_t>((ea - eb) / 3);
    MPoly t = MPoly::term(xy, c);
    out += t;
    rest -= xy_to_ab(t);
  }
  return out;
}

std::vector<MPoly> coefficients_in(const MPoly& p, Var v) {
  const auto idx = static_cast<std::size_t>(v);
  std::vector<MPoly> out(p.degree(v) + 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest[idx] = 0;
    out[m[idx]] += MPoly::term(rest, c);
  }
  return out;
}

MPoly parse_poly(std::string_view text) {
  detail::LiteralParser<MPoly> parser(text, [](char c) -> std::optional<MPoly> {
    if (c == 'i') return MPoly(Cyc12::imag_unit());
    if (c == 'z') return MPoly(Cyc12::zeta(1));
    if (auto v = var_from_char(c)) return MPoly::var(*v);
    return std::nullopt;
  });
  return parser.parse();
}

std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string mono;
    for (std::size_t k = 0; k < kVarCount; ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += var_name(static_cast<Var>(k));
      if (m[k] > 1) mono += '^' + std::to_string(m[k]);
    }
    bool negative = c.is_rational() && sgn(c.rational()) < 0;
    Cyc12 mag = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    std::string coeff = mag.is_rational() ? to_string(mag) : "(" + to_string(mag) + ")";
    if (mono.empty()) {
      os << coeff;
    } else if (mag.is_one()) {
      os << mono;
    } else {
      os << coeff << '*' << mono;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << to_string(p); }

}  // namespace holant

#include "holant/cyclo.hpp"

#include <ostream>
#include <sstream>

#include "holant/errors.hpp"
#include "literal_parser.hpp"

namespace holant {
namespace {

// zeta^m in the reduced basis, m = 0..11.
constexpr int kZetaPowers[12][4] = {
    {1, 0, 0, 0},  {0, 1, 0, 0},  {0, 0, 1, 0},  {0, 0, 0, 1},  {-1, 0, 1, 0}, {0, -1, 0, 1},
    {-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, -1, 0}, {0, 1, 0, -1},
};

void add_scaled_zeta_power(std::array<Rat, 4>& acc, const Rat& coeff, long m) {
  const int* row = kZetaPowers[((m % 12) + 12) % 12];
  for (int k = 0; k < 4; ++k) {
    if (row[k] == 1) {
      acc[k] += coeff;
    } else if (row[k] == -1) {
      acc[k] -= coeff;
    }
  }
}

}  // namespace

Cyc12 Cyc12::zeta(long k) {
  std::array<Rat, 4> c{Rat(0), Rat(0), Rat(0), Rat(0)};
  add_scaled_zeta_power(c, Rat(1), k);
  return Cyc12(c);
}

bool Cyc12::is_zero() const {
  return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool Cyc12::is_one() const {
  return c_[0] == 1 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool Cyc12::is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }

const Rat& Cyc12::rational() const {
  if (!is_rational()) throw Error(ErrorKind::PreconditionViolation, to_string(*this) + " is not rational");
  return c_[0];
}

Cyc12& Cyc12::operator+=(const Cyc12& o) {
  for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

Cyc12& Cyc12::operator-=(const Cyc12& o) {
  for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

Cyc12 Cyc12::operator-() const {
  Cyc12 r;
  for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
  return r;
}

Cyc12 operator*(const Cyc12& l, const Cyc12& r) {
  if (l.is_rational()) {
    if (sgn(l.c_[0]) == 0) return Cyc12();
    Cyc12 out;
    for (int k = 0; k < 4; ++k)
      if (sgn(r.c_[k]) != 0) out.c_[k] = l.c_[0] * r.c_[k];
    return out;
  }
  if (r.is_rational()) return r * l;

  std::array<Rat, 7> p;
  Rat tmp;
  for (int u = 0; u < 4; ++u) {
    if (sgn(l.c_[u]) == 0) continue;
    for (int v = 0; v < 4; ++v) {
      if (sgn(r.c_[v]) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), l.c_[u].get_mpq_t(), r.c_[v].get_mpq_t());
      p[u + v] += tmp;
    }
  }
  // z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1.
  Cyc12 out;
  out.c_[0] = p[0] - p[4] - p[6];
  out.c_[1] = p[1] - p[5];
  out.c_[2] = p[2] + p[4];
  out.c_[3] = p[3] + p[5];
  return out;
}

Cyc12& Cyc12::operator*=(const Cyc12& o) { return *this = *this * o; }

Cyc12 Cyc12::galois(int k) const {
  std::array<Rat, 4> out{Rat(0), Rat(0), Rat(0), Rat(0)};
  for (int j = 0; j < 4; ++j)
    if (sgn(c_[j]) != 0) add_scaled_zeta_power(out, c_[j], static_cast<long>(j) * k);
  return Cyc12(out);
}

Cyc12 Cyc12::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (is_rational()) return Cyc12(Rat(1 / c_[0]));
  // The field norm is the product over all four embeddings and is rational.
  Cyc12 others = galois(5) * galois(7) * galois(11);
  Cyc12 norm = *this * others;
  Rat inv = 1 / norm.rational();
  return others * Cyc12(inv);
}

Cyc12 Cyc12::pow(unsigned long e) const {
  Cyc12 result(1);
  Cyc12 base = *this;
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

Cyc12 conj(const Cyc12& z) { return z.galois(11); }

Cyc12 norm_sq(const Cyc12& z) { return z * conj(z); }

bool is_real(const Cyc12& z) { return z == conj(z); }

bool is_root_of_unity_12(const Cyc12& z) { return z.pow(12).is_one(); }

int real_sign(const Cyc12& z) {
  if (!is_real(z)) throw Error(ErrorKind::PreconditionViolation, to_string(z) + " is not real");
  // Re(z) = c0 + c1 sqrt(3)/2 + c2/2, since Re(zeta) = sqrt(3)/2 and Re(zeta^2) = 1/2.
  const Rat p = z.coeff(0) + z.coeff(2) / 2;
  const Rat q = z.coeff(1) / 2;
  const int sp = sgn(p), sq = sgn(q);
  if (sq == 0 || sp == sq) return sp != 0 ? sp : sq;
  if (sp == 0) return sq;
  return p * p > 3 * q * q ? sp : sq;
}

Cyc12 parse_cyc(std::string_view text) {
  detail::LiteralParser<Cyc12> parser(text, [](char c) -> std::optional<Cyc12> {
    if (c == 'i') return Cyc12::imag_unit();
    if (c == 'z') return Cyc12::zeta(1);
    return std::nullopt;
  });
  return parser.parse();
}

std::string to_string(const Cyc12& z) {
  static constexpr const char* kNames[4] = {"", "z", "z^2", "i"};
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    const Rat& c = z.coeff(k);
    if (sgn(c) == 0) continue;
    if (k == 0) {
      if (!first && sgn(c) > 0) os << '+';
      os << to_string(c);
    } else {
      Rat mag = abs(c);
      if (first) {
        if (sgn(c) < 0) {
          os << to_string(Rat(-mag)) << '*';
        } else if (mag != 1) {
          os << to_string(mag) << '*';
        }
      } else {
        os << (sgn(c) < 0 ? '-' : '+');
        if (mag != 1) os << to_string(mag) << '*';
      }
      os << kNames[k];
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyc12& z) { return os << to_string(z); }

}  // namespace holant

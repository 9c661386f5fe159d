#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

#include "holant/rational.hpp"

namespace holant {

/// Element of the cyclotomic field Q(zeta_12), stored in the basis {1, z, z^2, z^3}
/// modulo z^4 = z^2 - 1. The imaginary unit is z^3 and the primitive cube root of
/// unity is z^4 = z^2 - 1. Every representation is reduced, so equality is
/// coefficient-wise.
class Cyc12 {
 public:
  Cyc12() = default;
  Cyc12(long n) : c_{Rat(n), Rat(0), Rat(0), Rat(0)} {}  // NOLINT(google-explicit-constructor)
  Cyc12(const Rat& r) : c_{r, Rat(0), Rat(0), Rat(0)} {}  // NOLINT(google-explicit-constructor)
  explicit Cyc12(std::array<Rat, 4> coeffs) : c_(std::move(coeffs)) {}

  /// zeta^k for any k (reduced mod 12).
  static Cyc12 zeta(long k = 1);
  static Cyc12 imag_unit() { return zeta(3); }

  const Rat& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
  const std::array<Rat, 4>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// The rational value; throws PreconditionViolation if not rational.
  const Rat& rational() const;

  Cyc12 inverse() const;  // throws DivisionByZero
  Cyc12 pow(unsigned long e) const;
  /// Galois automorphism zeta -> zeta^k, k in {1, 5, 7, 11}.
  Cyc12 galois(int k) const;

  Cyc12& operator+=(const Cyc12& o);
  Cyc12& operator-=(const Cyc12& o);
  Cyc12& operator*=(const Cyc12& o);
  Cyc12& operator/=(const Cyc12& o) { return *this *= o.inverse(); }

  friend Cyc12 operator+(Cyc12 l, const Cyc12& r) { return l += r; }
  friend Cyc12 operator-(Cyc12 l, const Cyc12& r) { return l -= r; }
  friend Cyc12 operator*(const Cyc12& l, const Cyc12& r);
  friend Cyc12 operator/(const Cyc12& l, const Cyc12& r) { return l * r.inverse(); }
  Cyc12 operator-() const;

  friend bool operator==(const Cyc12& l, const Cyc12& r) { return l.c_ == r.c_; }
  friend bool operator!=(const Cyc12& l, const Cyc12& r) { return !(l == r); }

 private:
  std::array<Rat, 4> c_{Rat(0), Rat(0), Rat(0), Rat(0)};
};

/// Complex conjugation, zeta -> zeta^11.
Cyc12 conj(const Cyc12& z);
/// |z|^2 = z * conj(z); always conjugation-fixed.
Cyc12 norm_sq(const Cyc12& z);
bool is_real(const Cyc12& z);
bool is_root_of_unity_12(const Cyc12& z);
/// Sign (-1, 0, 1) of a real element, which has the form p + q sqrt(3).
/// PreconditionViolation when z is not real.
int real_sign(const Cyc12& z);

/// Scalar literal grammar:
///   expr := term (('+'|'-') term)*
///   term := factor ('*' factor)*
///   factor := rational | 'i' | 'z' ('^' uint)? | '(' expr ')'
///   rational := '-'? uint ('/' uint)?
/// Whitespace is ignored. A leading '-' before any term is also accepted.
Cyc12 parse_cyc(std::string_view text);

/// Canonical literal: terms ordered by power of zeta, z^3 written as "i".
std::string to_string(const Cyc12& z);
std::ostream& operator<<(std::ostream& os, const Cyc12& z);

}  // namespace holant

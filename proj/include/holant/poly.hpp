#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holant/cyclo.hpp"

namespace holant {

/// Fixed ordered alphabet. Gadget entries live in {a, b}; symmetrized
/// quantities in {X, Y}; characteristic polynomials use x.
enum class Var : std::uint8_t { a = 0, b = 1, X = 2, Y = 3, x = 4 };
inline constexpr std::size_t kVarCount = 5;

char var_name(Var v);

using Monomial = std::array<std::uint16_t, kVarCount>;

/// Graded order, ties broken lexicographically with a > b > X > Y > x. The
/// first entry of an MPoly term map is its leading term.
struct GrlexGreater {
  bool operator()(const Monomial& l, const Monomial& r) const;
};

/// Sparse multivariate polynomial over Q(zeta_12). No zero coefficients are stored,
/// so structural equality is polynomial equality.
class MPoly {
 public:
  using TermMap = std::map<Monomial, Cyc12, GrlexGreater>;

  MPoly() = default;
  MPoly(long c) : MPoly(Cyc12(c)) {}        // NOLINT(google-explicit-constructor)
  MPoly(const Rat& c) : MPoly(Cyc12(c)) {}  // NOLINT(google-explicit-constructor)
  MPoly(const Cyc12& c);                    // NOLINT(google-explicit-constructor)

  static MPoly var(Var v);
  static MPoly term(const Monomial& m, const Cyc12& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; throws UnboundVariable if the polynomial is not constant.
  Cyc12 constant_value() const;
  Cyc12 coefficient(const Monomial& m) const;

  unsigned degree(Var v) const;
  unsigned total_degree() const;
  bool uses(Var v) const { return degree(v) > 0; }

  MPoly pow(unsigned long e) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend MPoly operator+(MPoly l, const MPoly& r) { return l += r; }
  friend MPoly operator-(MPoly l, const MPoly& r) { return l -= r; }
  friend MPoly operator*(const MPoly& l, const MPoly& r);
  MPoly operator-() const;

  friend bool operator==(const MPoly& l, const MPoly& r) { return l.terms_ == r.terms_; }
  friend bool operator!=(const MPoly& l, const MPoly& r) { return !(l == r); }

 private:
  void add_term(const Monomial& m, const Cyc12& c);

  TermMap terms_;
};

inline const MPoly& zero_poly() {
  static const MPoly z;
  return z;
}

using PolyBindings = std::map<Var, MPoly>;
using ScalarBindings = std::map<Var, Cyc12>;

/// Replaces each bound variable by its polynomial; unbound variables stay.
MPoly subst(const MPoly& p, const PolyBindings& bindings);

/// Full evaluation; throws UnboundVariable if p uses a variable not in bindings.
Cyc12 evaluate(const MPoly& p, const ScalarBindings& bindings);

/// Fast path for polynomials with rational coefficients at rational points.
Rat evaluate_rational(const MPoly& p, const std::map<Var, Rat>& bindings);

/// q with p = d*q, or nullopt when d does not divide p. Throws ZeroDivisor on d = 0.
std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& d);

/// Rewrites p(a, b) as P(X, Y) with p = P(ab, a^3 + b^3), or nullopt when p is
/// not in that subring.
std::optional<MPoly> express_in_xy(const MPoly& p);

/// X -> ab, Y -> a^3 + b^3.
MPoly xy_to_ab(const MPoly& p);

/// Coefficients of p viewed as a polynomial in v: result[k] multiplies v^k.
std::vector<MPoly> coefficients_in(const MPoly& p, Var v);

/// Literal grammar of parse_cyc extended with the variables a, b, X, Y, x and
/// '^' on any factor.
MPoly parse_poly(std::string_view text);

std::string to_string(const MPoly& p);
std::ostream& operator<<(std::ostream& os, const MPoly& p);

}  // namespace holant

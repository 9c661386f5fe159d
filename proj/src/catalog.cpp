#include "holant/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include "holant/errors.hpp"

namespace holant {
namespace {

struct RawEntry {
  const char* id;
  GadgetKind kind;
  Eigen::Index rows;
  Eigen::Index cols;
  std::vector<std::string> entries;
};

const std::vector<RawEntry>& raw_entries() {
  static const std::vector<RawEntry> raw = {
      {"4", GadgetKind::BinaryRecursive, 3, 3,
       {"a^3", "2 a", "b",  //
        "a^2", "a b + 1", "b^2",  //
        "a", "2 b", "b^3"}},
      {"5", GadgetKind::BinaryRecursive, 3, 3,
       {"a^6 + 2 a^3 + 1", "2 a^4 + 2 a", "a^2",  //
        "a^5 + a^2", "2 a^3 + 1", "a",  //
        "a^4", "2 a^2", "1"}},
      {"6", GadgetKind::BinaryRecursive, 3, 3,
       {"a^3 + 1", "0", "a^2 + b",  //
        "a^2 + b", "0", "a + b^2",  //
        "a + b^2", "0", "b^3 + 1"}},
      {"7", GadgetKind::BinaryRecursive, 3, 3,
       {"a^6 + a^4 b + a^3 + a^2 b^2", "2 a^4 + 4 a^2 b + 2 a b^3", "a^2 + a b^2 + b^4 + b",
        "a^5 + a^3 b + a^2 + a b^2", "a^4 b + a^3 + 2 a^2 b^2 + a b^4 + 2 a b + b^3",
        "a^2 b + a b^3 + b^5 + b^2",  //
        "a^4 + a^2 b + a + b^2", "2 a^3 b + 4 a b^2 + 2 b^4", "a^2 b^2 + a b^4 + b^6 + b^3"}},
      {"8", GadgetKind::BinaryRecursive, 3, 3,
       {"a^6 + 2 a^3 + 1", "2 a^4 + 4 a^2 b + 2 b^2", "a^2 + 2 a b^2 + b^4",  //
        "a^5 + a^3 b + a^2 + b", "2 a^3 + 2 a^2 b^2 + 2 a b + 2 b^3", "a b^3 + a + b^5 + b^2",
        "a^4 + 2 a^2 b + b^2", "2 a^2 + 4 a b^2 + 2 b^4", "b^6 + 2 b^3 + 1"}},
      {"9", GadgetKind::BinaryRecursive, 3, 3,
       {"a^6 + 2 a^3 + a^2 b^2", "2 a^4 + 2 a^2 b + 2 a b^3 + 2 a", "a^2 + b^4 + 2 b",  //
        "a^5 + 2 a^2 + a b^2", "a^4 b + a^3 + a^2 b^2 + a b^4 + 2 a b + b^3 + 1", "a^2 b + b^5 + 2 b^2",
        "a^4 + 2 a + b^2", "2 a^3 b + 2 a b^2 + 2 b^4 + 2 b", "a^2 b^2 + b^6 + 2 b^3"}},
      {"10", GadgetKind::UnaryRecursive, 2, 2, {"a^3 + 1", "a + b^2", "a^2 + b", "b^3 + 1"}},
      {"11", GadgetKind::UnaryRecursive, 2, 2, {"a^3 + a b", "a + b^2", "a^2 + b", "a b + b^3"}},
      {"12", GadgetKind::UnaryRecursive, 2, 2,
       {"a^6 + 2 a^4 b + a^3 + 3 a^2 b^2 + a b^4", "a^4 + 3 a^2 b + 2 a b^3 + b^5 + b^2",
        "a^5 + 2 a^3 b + a^2 + 3 a b^2 + b^4", "a^4 b + 3 a^2 b^2 + 2 a b^4 + b^6 + b^3"}},
      {"13", GadgetKind::UnaryRecursive, 2, 2,
       {"a^6 + 3 a^3 + 3 a b + b^3", "a^4 + 2 a^2 b + a b^3 + a + b^5 + 2 b^2",
        "a^5 + a^3 b + 2 a^2 + 2 a b^2 + b^4 + b", "a^3 + 3 a b + b^6 + 3 b^3"}},
      {"14", GadgetKind::UnaryRecursive, 2, 2,
       {"a^6 + 3 a^3 + a^2 b^2 + a b + b^3 + 1", "a^4 + 2 a^2 b + a b^3 + a + b^5 + 2 b^2",
        "a^5 + a^3 b + 2 a^2 + 2 a b^2 + b^4 + b", "a^3 + a^2 b^2 + a b + b^6 + 3 b^3 + 1"}},
      {"15", GadgetKind::UnaryRecursive, 2, 2,
       {"a^6 + a^4 b + 2 a^3 + a^2 b^2 + 2 a b + b^3", "a^4 + 3 a^2 b + 2 a b^3 + b^5 + b^2",
        "a^5 + 2 a^3 b + a^2 + 3 a b^2 + b^4", "a^3 + a^2 b^2 + a b^4 + 2 a b + b^6 + 2 b^3"}},
      {"16", GadgetKind::UnaryRecursive, 2, 2,
       {"a^6 + a^4 b + 2 a^3 + a^2 b^2 + 2 a b + b^3", "a^4 + a^3 b^2 + a^2 b + 2 a b^3 + a + b^5 + b^2",
        "a^5 + 2 a^3 b + a^2 b^3 + a^2 + a b^2 + b^4 + b", "a^3 + a^2 b^2 + a b^4 + 2 a b + b^6 + 2 b^3"}},
      {"F", GadgetKind::Finisher, 2, 3, {"a", "0", "1", "1", "0", "b"}},
      {"s", GadgetKind::Starter, 3, 1, {"a", "1", "b"}},
      {"abEqual", GadgetKind::Special, 2, 2, {"a (a^2 + 1)", "2 a", "2 a^2", "a^2 + 1"}},
  };
  return raw;
}

const std::map<std::string, GadgetEntry>& catalogue() {
  static const std::map<std::string, GadgetEntry> table = [] {
    std::map<std::string, GadgetEntry> t;
    for (const RawEntry& r : raw_entries())
      t.emplace(r.id, GadgetEntry{r.id, r.kind, parse_poly_matrix(r.rows, r.cols, r.entries)});
    return t;
  }();
  return table;
}

std::string canonical_id(std::string_view id) {
  std::string s(id);
  if (s == "vc2x2") return "abEqual";
  if (s.size() > 1 && s[0] == 'M' && std::isdigit(static_cast<unsigned char>(s[1]))) s.erase(0, 1);
  return s;
}

const MPoly& X() {
  static const MPoly v = MPoly::var(Var::X);
  return v;
}
const MPoly& Y() {
  static const MPoly v = MPoly::var(Var::Y);
  return v;
}

MPoly p(const char* text) { return parse_poly(text); }

const PolyMatrix& M(const char* id) { return builtin_matrix(id).matrix; }

MPoly in_xy(const MPoly& q) {
  auto r = express_in_xy(q);
  if (!r) throw Error(ErrorKind::PreconditionViolation, to_string(q) + " is not a polynomial in ab and a^3 + b^3");
  return *r;
}

std::string show_vector(const PolyVector& v) {
  std::string s = "[";
  for (Eigen::Index k = 0; k < v.size(); ++k) s += (k ? ", " : "") + to_string(v(k));
  return s + "]";
}

PolyVector poly_vector(std::initializer_list<MPoly> entries) {
  PolyVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index k = 0;
  for (const MPoly& e : entries) v(k++) = e;
  return v;
}

class SuiteBuilder {
 public:
  void equal(std::string name, std::string anchor, std::string statement, const MPoly& lhs, const MPoly& rhs) {
    IdentityRecord r = start(std::move(name), std::move(anchor), std::move(statement));
    r.passed = lhs == rhs;
    if (!r.passed) {
      r.lhs = to_string(lhs);
      r.rhs = to_string(rhs);
    }
    records_.push_back(std::move(r));
  }

  void equal(std::string name, std::string anchor, std::string statement, const PolyMatrix& lhs,
             const PolyMatrix& rhs) {
    IdentityRecord r = start(std::move(name), std::move(anchor), std::move(statement));
    r.passed = matrices_equal(lhs, rhs);
    if (!r.passed) {
      r.lhs = to_string(lhs);
      r.rhs = to_string(rhs);
    }
    records_.push_back(std::move(r));
  }

  void equal(std::string name, std::string anchor, std::string statement, const PolyVector& lhs,
             const PolyVector& rhs) {
    IdentityRecord r = start(std::move(name), std::move(anchor), std::move(statement));
    r.passed = matrices_equal(lhs, rhs);
    if (!r.passed) {
      r.lhs = show_vector(lhs);
      r.rhs = show_vector(rhs);
    }
    records_.push_back(std::move(r));
  }

  void divisible(std::string name, std::string anchor, std::string statement, const MPoly& num, const MPoly& den) {
    IdentityRecord r = start(std::move(name), std::move(anchor), std::move(statement));
    r.passed = divide_exact(num, den).has_value();
    if (!r.passed) {
      r.lhs = to_string(num);
      r.rhs = "multiple of " + to_string(den);
    }
    records_.push_back(std::move(r));
  }

  std::vector<IdentityRecord> take() { return std::move(records_); }

 private:
  static IdentityRecord start(std::string name, std::string anchor, std::string statement) {
    IdentityRecord r;
    r.name = std::move(name);
    r.anchor = std::move(anchor);
    r.statement = std::move(statement);
    return r;
  }

  std::vector<IdentityRecord> records_;
};

PolyMatrix rows_as_matrix(const std::array<PolyVector, 3>& rows) {
  PolyMatrix m(3, 3);
  for (Eigen::Index r = 0; r < 3; ++r) m.row(r) = rows[static_cast<std::size_t>(r)].transpose();
  return m;
}

PolyVector row_cross(const PolyMatrix& f) { return cross3(f.row(0).transpose(), f.row(1).transpose()); }

PolyMatrix scaled_identity(Eigen::Index n, const MPoly& c) {
  PolyMatrix m = PolyMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) m(k, k) = c;
  return m;
}

void binary_finisher_identities(SuiteBuilder& s) {
  const char* anchor = "binary finisher construction";
  const MPoly ab = p("a b");
  s.equal("det_M4", anchor, "det(M4) = ab(ab-1)^3", cofactor_determinant(M("4")), ab * (ab - 1).pow(3));
  s.equal("det_M5", anchor, "det(M5) = 1", cofactor_determinant(M("5")), MPoly(1));

  const PolyMatrix F = M("F");
  const PolyMatrix FM4 = F * M("4");
  const PolyMatrix FM4sq = FM4 * M("4");
  s.equal("cross_F", anchor, "rows of F cross to [0, 1-ab, 0]", row_cross(F), poly_vector({0, 1 - ab, 0}));
  s.equal("cross_FM4", anchor, "rows of FM4 cross to (ab-1)^2 [2b^2, -ab(ab+1), 2a^2]", row_cross(FM4),
          poly_vector({p("2 b^2"), -ab * (ab + 1), p("2 a^2")}) * (ab - 1).pow(2));
  s.equal("cross_FM4_squared", anchor, "rows of FM4^2 cross to the stated (ab-1)^3 multiple", row_cross(FM4sq),
          poly_vector({p("2 b (a^2 b^3 + a^2 + a b^2 + b^4)"), p("-a b (a^3 b^3 + 2 a^3 + 2 a^2 b^2 + a b + 2 b^3)"),
                       p("2 a (a^4 + a^3 b^2 + a^2 b + b^2)")}) *
              (ab - 1).pow(3));
  PolyMatrix reduced(2, 2);
  reduced << p("b"), p("a"), p("a^2 b^3 + a^2 + a b^2 + b^4"), p("a^4 + a^3 b^2 + a^2 b + b^2");
  s.equal("finisher_reduced_det", anchor, "reduced 2x2 determinant = (ab-1)(a^3-b^3)", cofactor_determinant(reduced),
          (ab - 1) * p("a^3 - b^3"));
  s.equal("finisher_cross_det", anchor, "det of the three cross products = 4ab (ab-1)^7 (a^3-b^3)",
          cofactor_determinant(rows_as_matrix({row_cross(F), row_cross(FM4), row_cross(FM4sq)})),
          4 * ab * (ab - 1).pow(7) * p("a^3 - b^3"));

  const PolyBindings b0{{Var::b, MPoly(0)}};
  const PolyMatrix F0 = subst(F, b0);
  const PolyMatrix FM40 = subst(FM4, b0);
  const PolyMatrix FM50 = F0 * M("5");
  s.equal("FM4_at_b0", anchor, "FM4 at b = 0 is [[a^4+a, 2a^2, 0], [a^3, 2a, 0]]", FM40,
          parse_poly_matrix(2, 3, {"a^4 + a", "2 a^2", "0", "a^3", "2 a", "0"}));
  s.equal("cross_F_at_b0", anchor, "rows of F cross to [0, 1, 0] at b = 0", row_cross(F0), poly_vector({0, 1, 0}));
  s.equal("cross_FM4_at_b0", anchor, "rows of FM4 cross to [0, 0, 2a^2] at b = 0", row_cross(FM40),
          poly_vector({0, 0, p("2 a^2")}));
  s.equal("cross_FM5_at_b0", anchor, "rows of FM5 cross to [-2a, 2a^3+1, -2a^2(1+a)(a^2-a+1)] at b = 0",
          row_cross(FM50), poly_vector({p("-2 a"), p("2 a^3 + 1"), p("-2 a^2 (1 + a)(a^2 - a + 1)")}));
}

void real_case_identities(SuiteBuilder& s) {
  const char* anchor = "real-case gadget table";
  const PolyMatrix starter = M("s");
  const MPoly b3a3 = p("b^3 - a^3");
  for (const RealCaseGadget& g : real_case_gadgets()) {
    const std::string id = std::to_string(g.id);
    const PolyMatrix& m = M(id.c_str());
    const std::vector<MPoly> cp = charpoly_coefficients(m);
    s.equal("charpoly_B_M" + id, anchor, "x^2 coefficient of det(xI - M" + id + ") is B" + id, cp[1], xy_to_ab(g.B));
    s.equal("charpoly_C_M" + id, anchor, "x coefficient of det(xI - M" + id + ") is C" + id, cp[2], xy_to_ab(g.C));
    s.equal("charpoly_D_M" + id, anchor, "constant of det(xI - M" + id + ") is D" + id, cp[3], xy_to_ab(g.D));

    PolyMatrix krylov(3, 3);
    krylov.col(0) = starter.col(0);
    krylov.col(1) = m * starter.col(0);
    krylov.col(2) = m * krylov.col(1);
    s.equal("starter_det_M" + id, anchor,
            "det[s, M" + id + " s, M" + id + "^2 s] = (X-1)^" + std::to_string(g.starter_power) + " (b^3-a^3) h" + id,
            cofactor_determinant(krylov), xy_to_ab((X() - 1).pow(g.starter_power) * g.h) * b3a3);
  }
}

void unary_starter_identities(SuiteBuilder& s) {
  const char* anchor = "unary starter pairs";
  const PolyVector sv = M("s").col(0);
  const PolyMatrix F = M("F");
  const PolyVector Fs = F * sv;
  const PolyVector FM4s = F * (M("4") * sv);
  const PolyVector FM6s = F * (M("6") * sv);
  const MPoly ab1 = p("a b - 1");
  const MPoly a3b3 = p("a^3 - b^3");
  s.equal("starter_block_4_F", anchor, "det[FM4 s | Fs] = (ab-1)^2 (a^3-b^3)", det2(FM4s, Fs), ab1.pow(2) * a3b3);
  s.equal("starter_block_6_F", anchor, "det[FM6 s | Fs] = (ab-1)^2 (a^3-b^3)", det2(FM6s, Fs), ab1.pow(2) * a3b3);
  s.equal("starter_block_4_6", anchor, "det[FM4 s | FM6 s] = (ab-1)^3 (a^3-b^3)", det2(FM4s, FM6s),
          ab1.pow(3) * a3b3);
}

void unary_recursive_identities(SuiteBuilder& s) {
  const MPoly R = resilient_curve();
  const MPoly T = X().pow(3) + 2 * X().pow(2) + X() + 2 * Y();
  const MPoly U = X().pow(3) + 4 * X().pow(2) + 2 * Y() - 1;
  const MPoly X1 = X() - 1;
  const MPoly ab1 = p("a b - 1");
  auto det_xy = [](const char* id) { return in_xy(cofactor_determinant(M(id))); };
  auto tr_xy = [](const char* id) { return in_xy(matrix_trace(M(id))); };

  {
    const char* anchor = "eigenvalue shift between gadgets 10 and 11";
    s.equal("esp_10_11", anchor, "M11 - M10 = (X-1) I", PolyMatrix(M("11") - M("10")), scaled_identity(2, ab1));
    s.equal("det_M10", anchor, "det(M10) = (X-1)^2 (X+1)", det_xy("10"), X1.pow(2) * (X() + 1));
    s.equal("det_M11", anchor, "det(M11) = (X-1)(X^2+X+Y)", det_xy("11"), X1 * (X().pow(2) + X() + Y()));
    s.equal("trace_M10", anchor, "tr(M10) = Y + 2", tr_xy("10"), Y() + 2);
    s.equal("disc_M10", anchor, "tr(M10)^2 - 4 det(M10) = R", tr_xy("10").pow(2) - 4 * det_xy("10"), R);
  }
  {
    const char* anchor = "gadget 12 on the curve X^2 + X + Y = 0";
    const PolyBindings on_curve{{Var::Y, -X().pow(2) - X()}};
    const MPoly d = det_xy("12");
    const MPoly t = tr_xy("12");
    s.equal("det_M12", anchor, "det(M12) as a polynomial in X, Y", d,
            p("X^6 - 6 X^5 - X^4 Y + 16 X^4 + 11 X^3 Y - 10 X^3 + 5 X^2 Y^2 - 7 X^2 Y - X^2 + X Y^3 - 4 X Y^2 - 3 X Y "
              "- Y^3 - Y^2"));
    s.equal("trace_M12", anchor, "tr(M12) = -2X^3 + 6X^2 + 3XY + Y^2 + Y", t, p("-2 X^3 + 6 X^2 + 3 X Y + Y^2 + Y"));
    s.equal("det_M12_on_curve", anchor, "det(M12) = -X^2 (X-1)^5 when Y = -X^2 - X", subst(d, on_curve),
            -X().pow(2) * X1.pow(5));
    s.equal("trace_M12_on_curve", anchor, "tr(M12) = X (X-1)^3 when Y = -X^2 - X", subst(t, on_curve),
            X() * X1.pow(3));
    s.equal("det_trace_M12_on_curve", anchor, "(1-X) det(M12) = tr(M12)^2 when Y = -X^2 - X",
            subst((1 - X()) * d, on_curve), subst(t.pow(2), on_curve));
  }
  {
    const char* anchor = "gadgets 11 and 13 at X = -1";
    const PolyBindings minus_one{{Var::X, MPoly(-1)}};
    s.equal("det_M11_at_minus_one", anchor, "det(M11) = -2Y at X = -1", subst(det_xy("11"), minus_one), -2 * Y());
    s.equal("trace_M11_at_minus_one", anchor, "tr(M11) = Y - 2 at X = -1", subst(tr_xy("11"), minus_one), Y() - 2);
    s.equal("det_M13_at_minus_one", anchor, "det(M13) = -16Y at X = -1", subst(det_xy("13"), minus_one), -16 * Y());
  }
  {
    const char* anchor = "eigenvalue shift between gadgets 13 and 14";
    s.equal("det_M13", anchor, "det(M13) = (X-1)^3 (X^3 + 2X^2 + X + 2Y)", det_xy("13"), X1.pow(3) * T);
    s.equal("esp_13_14", anchor, "M14 - M13 = (X-1)^2 I", PolyMatrix(M("14") - M("13")),
            scaled_identity(2, ab1.pow(2)));
    s.equal("trace_M13", anchor, "tr(M13) = -2X^3 + 6X + Y^2 + 4Y", tr_xy("13"), p("-2 X^3 + 6 X + Y^2 + 4 Y"));
    s.divisible("trace_M13_mod_R", anchor, "R divides tr(M13) - 2X(X-1)^2", tr_xy("13") - 2 * X() * X1.pow(2), R);
    s.divisible("det_M14_mod_R", anchor, "R divides det(M14) - (X-1)^3 (X^3 + 4X^2 + 2Y - 1)",
                det_xy("14") - X1.pow(3) * U, R);
  }
  {
    const char* anchor = "gadgets 15 and 16 on the curve R = 0";
    const MPoly t15 = tr_xy("15");
    s.equal("trace_15_16", anchor, "tr(M15) = tr(M16)", t15, tr_xy("16"));
    s.equal("trace_M15_with_T", anchor, "tr(M15) - R - (X-1)T/2 = -X(X-1)^3/2",
            2 * (t15 - R) - X1 * T, -X() * X1.pow(3));
    s.equal("trace_M15_with_U", anchor, "tr(M15) - R - (X-1)U/2 = -(X-1)(X^3-1)/2",
            2 * (t15 - R) - X1 * U, -X1 * (X().pow(3) - 1));
    s.equal("det_M16", anchor, "det(M16) = (X-1)^3 (X+1)(X^2+X+Y)", det_xy("16"),
            X1.pow(3) * (X() + 1) * (X().pow(2) + X() + Y()));
    s.equal("det_M15_minus_R", anchor, "det(M15) - R(X-1)^2 = (X-1)^3 (X+4)(X^2+X+Y)",
            det_xy("15") - R * X1.pow(2), X1.pow(3) * (X() + 4) * (X().pow(2) + X() + Y()));
    s.divisible("det_M15_mod_R", anchor, "R divides det(M15) - (X-1)^3 (X+4)(X^2+X+Y)",
                det_xy("15") - X1.pow(3) * (X() + 4) * (X().pow(2) + X() + Y()), R);
  }
}

void equal_coordinate_identities(SuiteBuilder& s) {
  const char* anchor = "equal-coordinate recurrence";
  const PolyMatrix& m = M("abEqual");
  s.equal("det_abEqual", anchor, "det(M) = a(a-1)^2 (a+1)^2", cofactor_determinant(m), p("a (a-1)^2 (a+1)^2"));
  s.equal("trace_abEqual", anchor, "tr(M) = (a+1)(a^2+1)", matrix_trace(m), p("(a+1)(a^2+1)"));
  s.equal("starter_image_abEqual", anchor, "M [a, 1] = (a+1) [a(a^2-a+2), 2a^2-a+1]",
          PolyVector(m * poly_vector({p("a"), 1})),
          poly_vector({p("(a+1) a (a^2 - a + 2)"), p("(a+1)(2 a^2 - a + 1)")}));
}

Cyc12 det_cols(const CycVector& u, const CycVector& v) { return det2(u, v); }

void require_region(const Cyc12& a, const Cyc12& b) {
  if ((a * b).is_one()) throw Error(ErrorKind::InvalidRegion, "ab = 1 at (" + to_string(a) + ", " + to_string(b) + ")");
  if (a.pow(3) == b.pow(3))
    throw Error(ErrorKind::InvalidRegion, "a^3 = b^3 at (" + to_string(a) + ", " + to_string(b) + ")");
}

}  // namespace

std::string to_string(GadgetKind k) {
  switch (k) {
    case GadgetKind::BinaryRecursive: return "binary-recursive";
    case GadgetKind::UnaryRecursive: return "unary-recursive";
    case GadgetKind::Finisher: return "finisher";
    case GadgetKind::Starter: return "starter";
    case GadgetKind::Special: return "special";
  }
  return "?";
}

const GadgetEntry& builtin_matrix(std::string_view id) {
  const auto& table = catalogue();
  auto it = table.find(canonical_id(id));
  if (it == table.end()) {
    const std::string s(id);
    if (s == "1" || s == "2" || s == "3")
      throw Error(ErrorKind::UnknownGadget, "gadget " + s + " has no published matrix");
    throw Error(ErrorKind::UnknownGadget, "no gadget named '" + s + "'");
  }
  return it->second;
}

std::vector<std::string> builtin_ids() {
  std::vector<std::string> ids;
  for (const RawEntry& r : raw_entries()) ids.emplace_back(r.id);
  return ids;
}

CycMatrix evaluate_gadget(std::string_view id, const Cyc12& a, const Cyc12& b) {
  return evaluate(builtin_matrix(id).matrix, ScalarBindings{{Var::a, a}, {Var::b, b}});
}

const std::vector<RealCaseGadget>& real_case_gadgets() {
  static const std::vector<RealCaseGadget> table = {
      {4, p("-(X + Y + 1)"), p("(X^2 + X + Y)(X - 1)"), p("-X (X - 1)^3"), 4, MPoly(1)},
      {7, p("-(-2 X^3 + 4 X^2 + 2 X Y + 2 X + Y^2 + 2 Y)"),
       p("(X - 1)(X^5 - 4 X^4 - X^3 Y + 6 X^3 + 7 X^2 Y + 4 X^2 + 4 X Y^2 + 5 X Y + X + Y^3 + 2 Y^2 + Y)"),
       p("-(X - 1)^3 (2 X + Y)(X^4 - X^3 + X^2 Y + 3 X^2 + 2 X Y + X + Y^2 + Y)"), 5,
       p("(X^2 + X + Y)(X + Y + 1)")},
      {8, p("-(-2 X^3 + 2 X^2 + 2 X + Y^2 + 4 Y + 2)"),
       p("(X - 1)^2 (X^4 - 2 X^3 + 2 X^2 + 4 X Y + 6 X + 2 Y^2 + 4 Y + 1)"), p("-2 (X - 1)^6 X (X + 1)"), 5,
       p("X^2 Y + 4 X^2 + 2 X Y + Y^2 + Y")},
      {9, p("-(-2 X^3 + 3 X^2 + X Y + 2 X + Y^2 + 3 Y + 1)"),
       p("(X - 1)(X^5 - 3 X^4 - 2 X^3 Y - X^3 + 4 X^2 Y + 7 X^2 + 2 X Y^2 + 6 X Y + 4 X + Y^3 + 4 Y^2 + 4 Y)"),
       p("-(X - 1)^3 (X + Y + 1)(X^4 - 2 X^3 + X^2 + 2 X Y + 4 X + Y^2 + 2 Y)"), 6, p("(X + 1)(Y + 2)")},
  };
  return table;
}

MPoly resilient_curve() { return (Y() + 2).pow(2) - 4 * (X() - 1).pow(2) * (X() + 1); }

std::vector<IdentityRecord> verify_identity_suite() {
  SuiteBuilder s;
  binary_finisher_identities(s);
  real_case_identities(s);
  unary_starter_identities(s);
  unary_recursive_identities(s);
  equal_coordinate_identities(s);
  return s.take();
}

std::string format_record(const IdentityRecord& r) {
  std::ostringstream os;
  os << r.name << "  [" << r.anchor << "]  " << (r.passed ? "PASS" : "FAIL");
  if (!r.passed) os << "\n    lhs: " << r.lhs << "\n    rhs: " << r.rhs;
  return os.str();
}

FinisherSet finisher_set(const Cyc12& a, const Cyc12& b) {
  require_region(a, b);
  FinisherSet out;
  out.region_value = (a * b - Cyc12(1)) * (a.pow(3) - b.pow(3));
  out.a = a;
  out.b = b;
  if ((a * b).is_zero()) {
    out.zero_branch = true;
    if (a.is_zero()) {
      out.swapped = true;
      std::swap(out.a, out.b);
    }
  }
  const CycMatrix F = evaluate_gadget("F", out.a, out.b);
  const CycMatrix M4 = evaluate_gadget("4", out.a, out.b);
  out.finishers[0] = F;
  out.finishers[1] = F * M4;
  if (out.zero_branch) {
    out.labels = {"F", "FM4", "FM5"};
    out.finishers[2] = F * evaluate_gadget("5", out.a, out.b);
  } else {
    out.labels = {"F", "FM4", "FM4^2"};
    out.finishers[2] = out.finishers[1] * M4;
  }
  CycMatrix normals(3, 3);
  for (std::size_t k = 0; k < 3; ++k) {
    const CycMatrix& f = out.finishers[k];
    out.normals[k] = cross3(f.row(0).transpose(), f.row(1).transpose());
    normals.row(static_cast<Eigen::Index>(k)) = out.normals[k].transpose();
  }
  out.normal_det = cofactor_determinant(normals);
  if (out.normal_det.is_zero())
    throw Error(ErrorKind::PreconditionViolation, "finisher cross products are dependent at (" + to_string(a) + ", " +
                                                      to_string(b) + ")");
  return out;
}

StarterSet starter_set(const Cyc12& a, const Cyc12& b) {
  require_region(a, b);
  const CycMatrix F = evaluate_gadget("F", a, b);
  const CycVector s = evaluate_gadget("s", a, b).col(0);
  StarterSet out;
  out.labels = {"Fs", "FM4s", "FM6s"};
  out.vectors[0] = F * s;
  out.vectors[1] = F * (evaluate_gadget("4", a, b) * s);
  out.vectors[2] = F * (evaluate_gadget("6", a, b) * s);
  out.pair_dets = {det_cols(out.vectors[1], out.vectors[0]), det_cols(out.vectors[2], out.vectors[0]),
                   det_cols(out.vectors[1], out.vectors[2])};
  for (const Cyc12& d : out.pair_dets)
    if (d.is_zero())
      throw Error(ErrorKind::PreconditionViolation, "starter vectors are dependent at (" + to_string(a) + ", " +
                                                        to_string(b) + ")");
  return out;
}

VcSimulationStep vc_simulation_params(const Cyc12& a, const Cyc12& b) {
  const Cyc12 ab = a * b;
  if (ab.is_one()) throw Error(ErrorKind::InvalidRegion, "ab = 1");
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::InvalidRegion, "(a, b) = (0, 0)");
  const Cyc12 one(1);
  VcSimulationStep step;
  step.a = a;
  step.b = b;
  auto denominator = [&](std::string name, const Cyc12& v) {
    if (v.is_zero()) throw Error(ErrorKind::InvalidRegion, "denominator " + name + " vanishes");
    step.denominators.emplace_back(std::move(name), v);
    return v.inverse();
  };

  if (ab.is_zero()) {
    step.case_tag = 2;
    step.gadget = "2";
    if (!a.is_zero()) {
      step.swapped = true;
      std::swap(step.a, step.b);
    }
    const Cyc12 bb = step.b;
    const Cyc12 inv_b = denominator("b", bb);
    step.unaries = {{"theta", {bb, inv_b}}};
    step.claimed_output = SymSignature{inv_b, one, Cyc12(2) * bb};
    step.next_point = std::pair{inv_b, Cyc12(2) * bb};
  } else if (ab == Cyc12(-1)) {
    step.case_tag = 3;
    step.gadget = "3";
    const Cyc12 inv_a = denominator("a", a);
    step.unaries = {{"theta", {inv_a * Rat(1, 6), -a * Rat(1, 24)}}, {"gamma", {Cyc12(-3) * inv_a, a}}};
    const Cyc12 z = inv_a * Rat(5, 2);
    step.claimed_output = SymSignature{Cyc12(), one, z};
    step.next_point = std::pair{Cyc12(), z};
  } else {
    step.case_tag = 1;
    step.gadget = "1";
    const Cyc12 inv_1mab = denominator("1-ab", one - ab);
    const Cyc12 inv_a2 = denominator("a^2", a * a);
    const Cyc12 inv_b1ab = denominator("b(1+ab)", b * (one + ab));
    const Cyc12 inv_abm1 = denominator("ab-1", ab - one);
    const Cyc12 ratio = (ab + one) * inv_1mab;
    step.unaries = {{"theta", {ratio, -a * a * ratio}}, {"gamma", {-inv_a2, inv_b1ab}},
                    {"rho", {-b * inv_abm1, a * inv_abm1}}};
    step.claimed_output = SymSignature{Cyc12(), one, one};
  }
  return step;
}

std::vector<VcSimulationStep> vc_simulation_chain(const Cyc12& a, const Cyc12& b) {
  std::vector<VcSimulationStep> chain{vc_simulation_params(a, b)};
  while (chain.back().next_point) {
    auto [na, nb] = *chain.back().next_point;
    chain.push_back(vc_simulation_params(na, nb));
  }
  return chain;
}

std::pair<Cyc12, Cyc12> holographic_diag_transform(const Cyc12& a, const Cyc12& b, const Cyc12& omega) {
  if (!omega.pow(3).is_one()) throw Error(ErrorKind::NotCubeRoot, to_string(omega) + " is not a cube root of unity");
  return {omega * omega * a, omega * b};
}

}  // namespace holant

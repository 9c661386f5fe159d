#include <doctest.h>

#include <functional>

#include "holant/dichotomy.hpp"
#include "holant/errors.hpp"
#include "support/random_values.hpp"

using namespace holant;

namespace {

ErrorKind error_kind(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::PreconditionViolation;
}

Cyc12 c(const char* lit) { return parse_cyc(lit); }

CycMatrix mat2(Cyc12 p, Cyc12 q, Cyc12 r, Cyc12 s) {
  CycMatrix m(2, 2);
  m << p, q, r, s;
  return m;
}

const CheckRecord* find(const HardnessWitness& w, const std::string& step, const std::string& gadget) {
  for (const CheckRecord& r : w.trail)
    if (r.step == step && r.gadget == gadget) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("classification catalogue") {
  struct Row {
    const char* a;
    const char* b;
    bool planar;
    Verdict verdict;
    int case_number;
  };
  const Row rows[] = {
      {"1", "1", false, Verdict::Tractable, 1},   {"0", "0", false, Verdict::Tractable, 2},
      {"1", "-1", false, Verdict::Tractable, 3},  {"i", "i", false, Verdict::Tractable, 3},
      {"-i", "-i", false, Verdict::Tractable, 3}, {"0", "1", false, Verdict::Hard, 0},
      {"2", "3", false, Verdict::Hard, 0},        {"1+i", "1", false, Verdict::Hard, 0},
      {"2", "2", true, Verdict::PlanarTractableGeneralHard, 0},
      {"2", "2", false, Verdict::Hard, 0},        {"0", "2", false, Verdict::Hard, 0},
      {"i", "-i", false, Verdict::Tractable, 1},  {"1", "z^4", false, Verdict::Hard, 0}};
  for (const Row& r : rows) {
    CAPTURE(std::string(r.a));
    CAPTURE(std::string(r.b));
    const Classification cls = classify(c(r.a), c(r.b), r.planar);
    CHECK(cls.verdict == r.verdict);
    CHECK(cls.case_number == r.case_number);
    if (r.verdict == Verdict::Tractable) CHECK_FALSE(cls.citation.empty());
  }
}

TEST_CASE("coordinate phrasings agree") {
  CHECK(coordinates_equivalence_check(c("i"), c("i")));
  CHECK(coordinates_equivalence_check(c("1"), c("-1")));
  const Coordinates p = Coordinates::of(c("i"), c("i"));
  CHECK(p.Z == Cyc12(-1));
  std::mt19937_64 rng(7);
  for (int k = 0; k < 300; ++k) {
    const Cyc12 a = testing::random_cyc(rng, 2);
    const Cyc12 b = testing::random_cyc(rng, 2);
    CHECK(coordinates_equivalence_check(a, b));
    // The planar tractable set contains the general one.
    if (classify(a, b, false).verdict == Verdict::Tractable) CHECK(classify(a, b, true).verdict == Verdict::Tractable);
  }
}

TEST_CASE("norm criteria") {
  const NormCertificate two = distinct_norm_2x2(c("3 - i"), c("2 - 2i"));
  CHECK(two.kind == NormKind::Distinct2x2);
  CHECK(two.lhs == c("28 + 4i"));
  CHECK(two.rhs == c("28 - 4i"));
  CHECK_FALSE(distinct_norm_2x2(Cyc12(5), Cyc12(6)).conclusive());
  const NormCertificate flat = distinct_norm_2x2(c("1 + i"), Cyc12(0));
  CHECK_FALSE(flat.conclusive());
  CHECK(flat.zero_eigenvalue);

  const NormCertificate three = distinct_norm_3x3(Cyc12(-6), Cyc12(11), Cyc12(-6));
  CHECK(three.kind == NormKind::Distinct3x3);
  CHECK(three.lhs == Cyc12(1331));
  CHECK(three.rhs == Cyc12(1296));
  CHECK_FALSE(distinct_norm_3x3(Cyc12(0), Cyc12(0), Cyc12(-1)).conclusive());
}

TEST_CASE("norm criteria agree with numeric eigenvalues") {
  // Matrices built with equal-norm eigenvalues must never be certified.
  std::mt19937_64 rng(31);
  for (int k = 0; k < 40; ++k) {
    const Cyc12 r = Cyc12(static_cast<long>(rng() % 5) + 1);
    const Cyc12 u = Cyc12::zeta().pow(rng() % 12);
    const Cyc12 v = Cyc12::zeta().pow(rng() % 12);
    const Cyc12 l1 = r * u, l2 = r * v;
    CHECK_FALSE(distinct_norm_2x2(l1 + l2, l1 * l2).conclusive());
    const Cyc12 w = Cyc12::zeta().pow(rng() % 12) * r;
    CHECK_FALSE(distinct_norm_3x3(-(l1 + l2 + w), l1 * l2 + l1 * w + l2 * w, -(l1 * l2 * w)).conclusive());
  }
}

TEST_CASE("eigenvalue shifted pairs") {
  const Cyc12 a = c("1 + i"), b(1);
  const CycMatrix m10 = evaluate_gadget("10", a, b);
  const Cyc12 delta = a * b - Cyc12(1);
  CHECK(delta == c("i"));
  CHECK(cofactor_determinant(CycMatrix(evaluate_gadget("11", a, b))) == Cyc12(-5));
  const NormCertificate esp = esp_disjunctive(m10, delta);
  CHECK(esp.kind == NormKind::EspDisjunctive);
  CHECK(esp.lhs == c("2 - i"));
  CHECK(error_kind([&] { esp_disjunctive(m10, Cyc12(0)); }) == ErrorKind::PreconditionViolation);
  CHECK_FALSE(esp_disjunctive(mat2(Cyc12(1), Cyc12(2), Cyc12(3), Cyc12(5)), Cyc12(2)).conclusive());
}

TEST_CASE("witness at the vertex-cover point") {
  const HardnessWitness w = hardness_witness(Cyc12(0), Cyc12(1));
  CHECK(w.terminal.kind == TerminalKind::BinaryReal);
  CHECK(w.terminal.gadgets == std::vector<std::string>{"7"});
  const CheckRecord* d4 = find(w, "real-nonzero-D", "4");
  REQUIRE(d4 != nullptr);
  CHECK_FALSE(d4->outcome);
  const CheckRecord* h7 = find(w, "real-starter-factor", "7");
  REQUIRE(h7 != nullptr);
  CHECK(h7->lhs == Cyc12(2));
  const auto cp = charpoly_coefficients(CycMatrix(evaluate_gadget("7", Cyc12(0), Cyc12(1))));
  CHECK(cp[1] == Cyc12(-3));
  CHECK(cp[2] == Cyc12(-4));
  CHECK(cp[3] == Cyc12(2));
  CHECK(cp[1].pow(3) * cp[3] - cp[2].pow(3) == Cyc12(10));
  CHECK(w.terminal.finishers.has_value());
  CHECK_FALSE(w.terminal.vc_chain.empty());
  CHECK(verify_witness(w).empty());

  const nlohmann::json doc = to_json(w);
  CHECK(doc["terminal"]["kind"] == "binary-real");
  CHECK(doc["point"]["Y"] == "1");
  CHECK(doc["trail"].size() == w.trail.size());
}

TEST_CASE("witness on the complex path") {
  const HardnessWitness w = hardness_witness(c("1 + i"), Cyc12(1));
  CHECK_FALSE(w.anomaly());
  CHECK((w.terminal.kind == TerminalKind::UnaryDistinct || w.terminal.kind == TerminalKind::EspDisjunctive));
  REQUIRE(find(w, "unary-distinct-norm-2x2", "10") != nullptr);
  if (w.terminal.kind == TerminalKind::EspDisjunctive) CHECK(w.terminal.gadgets.size() == 2);
  CHECK(w.terminal.starters.has_value());
  CHECK(verify_witness(w).empty());
}

TEST_CASE("witness special points") {
  CHECK(error_kind([] { hardness_witness(c("i"), c("i")); }) == ErrorKind::NotHard);
  CHECK(error_kind([] { hardness_witness(Cyc12(2), Cyc12(2), true); }) == ErrorKind::NotHard);

  // X = 0, Y = -1 is a cited base case.
  const HardnessWitness cited = hardness_witness(Cyc12(0), Cyc12(-1));
  CHECK(cited.terminal.kind == TerminalKind::Citation);
  CHECK_FALSE(cited.citations.empty());

  // a^3 = b^3 with a real image is cited; a non-real image gets a recurrence.
  const HardnessWitness equal_real = hardness_witness(Cyc12(2), Cyc12(2));
  CHECK(equal_real.terminal.kind == TerminalKind::Citation);
  const HardnessWitness equal = hardness_witness(Cyc12(2), Cyc12(2) * Cyc12::zeta().pow(4));
  CHECK(equal.terminal.kind == TerminalKind::EqualCubes);
  REQUIRE(equal.terminal.transformed_point.has_value());
  CHECK(equal.terminal.transformed_point->first == equal.terminal.transformed_point->second);
  CHECK(verify_witness(equal).empty());

  // On the unit circle tr^2 conj(det) is real; its negative sign still certifies.
  const HardnessWitness circle = hardness_witness(-Cyc12::imag_unit(), Cyc12::zeta(1));
  CHECK(circle.terminal.kind == TerminalKind::EqualCubes);
  CHECK(circle.terminal.transformed_point->first == Cyc12::zeta(5));
  const CheckRecord* sign = find(circle, "equal-cubes-norm-sign", "abEqual");
  REQUIRE(sign != nullptr);
  CHECK(sign->outcome);
  CHECK(real_sign(sign->lhs) == -1);
  CHECK(verify_witness(circle).empty());
}

TEST_CASE("tampered witnesses are rejected") {
  HardnessWitness w = hardness_witness(Cyc12(2), Cyc12(3));
  REQUIRE_FALSE(w.trail.empty());
  CHECK(verify_witness(w).empty());
  w.trail.front().lhs += Cyc12(1);
  CHECK_FALSE(verify_witness(w).empty());

  HardnessWitness v = hardness_witness(c("1 + i"), c("2"));
  v.terminal.norm.rhs = v.terminal.norm.lhs;
  CHECK_FALSE(verify_witness(v).empty());
}

TEST_CASE("random hard points get verified witnesses") {
  std::mt19937_64 rng(43);
  int done = 0;
  while (done < 60) {
    const Cyc12 a = testing::random_gaussian(rng, 3);
    const Cyc12 b = testing::random_gaussian(rng, 3);
    if (classify(a, b, false).verdict != Verdict::Hard) continue;
    ++done;
    const HardnessWitness w = hardness_witness(a, b);
    CAPTURE(to_string(a));
    CAPTURE(to_string(b));
    CHECK_FALSE(w.anomaly());
    CHECK(verify_witness(w).empty());
  }
}

TEST_CASE("real scan") {
  CHECK(real_case_gadget_at(Rat(0), Rat(1)) == std::optional<std::size_t>(1));
  const RealScanReport r = real_disjunction_scan(Rat(-2), Rat(2), Rat(-2), Rat(2), Rat(1, 2), 1);
  CHECK(r.points == 81);
  CHECK(r.cited == 1);
  CHECK(r.excluded_tractable == 1);
  CHECK(r.excluded_degenerate == 9);
  CHECK(r.counterexamples.empty());
  CHECK(r.points == r.excluded_degenerate + r.excluded_equal_cubes + r.cited + r.excluded_tractable + r.verified);
  const RealScanReport par = real_disjunction_scan(Rat(-2), Rat(2), Rat(-2), Rat(2), Rat(1, 2), 3);
  CHECK(to_json(par) == to_json(r));
  CHECK(error_kind([] { real_disjunction_scan(Rat(0), Rat(1), Rat(0), Rat(1), Rat(0)); }) ==
        ErrorKind::PreconditionViolation);
}

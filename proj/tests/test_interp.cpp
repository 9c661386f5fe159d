#include <doctest.h>

#include <functional>

#include "holant/catalog.hpp"
#include "holant/errors.hpp"
#include "holant/interp.hpp"
#include "support/instances.hpp"
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

CycVector vec(std::initializer_list<Cyc12> xs) {
  CycVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (const Cyc12& x : xs) v(k++) = x;
  return v;
}

CycMatrix mat(Eigen::Index r, Eigen::Index c, std::initializer_list<Cyc12> xs) {
  CycMatrix m(r, c);
  auto it = xs.begin();
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = *it++;
  return m;
}

IterationFamily m4_family() {
  const Cyc12 a(2), b(3);
  IterationFamily fam;
  fam.M = evaluate_gadget("4", a, b);
  fam.s = vec({a, Cyc12(1), b});
  const FinisherSet fs = finisher_set(a, b);
  fam.finishers.assign(fs.finishers.begin(), fs.finishers.end());
  return fam;
}

IterationFamily random_unary_family(std::mt19937_64& rng) {
  for (;;) {
    IterationFamily fam;
    fam.M = mat(2, 2, {testing::random_gaussian(rng, 3), testing::random_gaussian(rng, 3),
                       testing::random_gaussian(rng, 3), testing::random_gaussian(rng, 3)});
    fam.s = vec({testing::random_gaussian(rng, 3), testing::random_gaussian(rng, 3)});
    if (unary_family_check(fam.M, fam.s).certified) return fam;
  }
}

// Grid with one SLOT joined to a recognizer carrying the unary [3, 5].
SignatureGrid single_slot_grid() {
  SignatureGrid g;
  g.generators.push_back(GridVertex{});
  g.recognizers.push_back(GridVertex{SymSignature{Cyc12(3), Cyc12(5)}});
  g.edges.push_back({0, 0, 0, 0});
  return g;
}

}  // namespace

TEST_CASE("vandermonde examples") {
  auto c = vandermonde_solve({vec({Cyc12(1), Cyc12(0)}), vec({Cyc12(0), Cyc12(1)})}, {Cyc12(3), Cyc12(5)}, 1);
  CHECK(c == std::vector<Cyc12>{Cyc12(5), Cyc12(3)});
  c = vandermonde_solve({vec({Cyc12(1), Cyc12(1)}), vec({Cyc12(2), Cyc12(1)}), vec({Cyc12(3), Cyc12(1)})},
                        {Cyc12(4), Cyc12(9), Cyc12(16)}, 2);
  CHECK(c == std::vector<Cyc12>{Cyc12(1), Cyc12(2), Cyc12(1)});
  CHECK(error_kind([] {
          vandermonde_solve({vec({Cyc12(1), Cyc12(1)}), vec({Cyc12(2), Cyc12(2)})}, {Cyc12(1), Cyc12(2)}, 1);
        }) == ErrorKind::SingularSystem);
  CHECK(error_kind([] {
          vandermonde_solve({vec({Cyc12(1), Cyc12(0)}), vec({Cyc12(2), Cyc12(0)})}, {Cyc12(1), Cyc12(2)}, 1);
        }) == ErrorKind::SingularSystem);
}

TEST_CASE("vandermonde recovers random coefficients") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = rng() % 5;
    std::vector<Cyc12> c;
    for (std::size_t i = 0; i <= n; ++i) c.push_back(testing::random_cyc(rng, 4));
    std::vector<CycVector> pts;
    std::vector<Cyc12> vals;
    // Distinct integer ratios, optionally with a (1, 0) point.
    const bool with_flat = trial % 3 == 0;
    for (std::size_t k = 0; k <= n; ++k) {
      CycVector p = (with_flat && k == 0) ? vec({Cyc12(1), Cyc12(0)})
                                          : vec({Cyc12(static_cast<long>(k) + 1) * Cyc12(3), Cyc12(3)});
      pts.push_back(p);
      vals.push_back(evaluate_homogeneous(c, p(0), p(1)));
    }
    CHECK(vandermonde_solve(pts, vals, n) == c);
  }
}

TEST_CASE("selection") {
  IterationFamily diag;
  diag.M = mat(3, 3, {Cyc12(1), Cyc12(0), Cyc12(0), Cyc12(0), Cyc12(2), Cyc12(0), Cyc12(0), Cyc12(0), Cyc12(3)});
  diag.s = vec({Cyc12(1), Cyc12(1), Cyc12(1)});
  const Cyc12 o(0), l(1);
  diag.finishers = {mat(2, 3, {l, o, o, o, l, o}), mat(2, 3, {o, l, o, o, o, l}), mat(2, 3, {l, o, o, o, o, l})};
  const InterpolationPlan plan = select_independent(diag, 5);
  CHECK(plan.finisher == 0);
  CHECK(plan.indices == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
  CHECK(plan.points[3] == vec({Cyc12(1), Cyc12(8)}));

  IterationFamily eigen;
  eigen.M = mat(2, 2, {Cyc12(2), Cyc12(0), Cyc12(0), Cyc12(3)});
  eigen.s = vec({Cyc12(1), Cyc12(0)});
  CHECK(error_kind([&] { select_independent(eigen, 2); }) == ErrorKind::SelectionFailure);

  IterationFamily singular = eigen;
  singular.M(1, 1) = Cyc12(0);
  CHECK(error_kind([&] { select_independent(singular, 1); }) == ErrorKind::PreconditionViolation);

  const InterpolationPlan m4 = select_independent(m4_family(), 4);
  CHECK(m4.indices.size() == 5);
  for (std::size_t i = 0; i < m4.points.size(); ++i) {
    CHECK_FALSE(m4.points[i](1).is_zero());
    for (std::size_t j = i + 1; j < m4.points.size(); ++j) CHECK_FALSE(det2(m4.points[i], m4.points[j]).is_zero());
  }
}

TEST_CASE("unary family check") {
  const Cyc12 a = parse_cyc("1 + i");
  const CycMatrix M = evaluate_gadget("abEqual", a, a);
  const UnaryFamilyCheck ok = unary_family_check(M, vec({a, Cyc12(1)}));
  CHECK(ok.certified);
  CHECK(ok.det_nonzero);
  CHECK(ok.distinct_norm);
  CHECK(ok.not_eigenvector);

  const UnaryFamilyCheck id = unary_family_check(mat(2, 2, {Cyc12(1), Cyc12(0), Cyc12(0), Cyc12(1)}),
                                                 vec({Cyc12(1), Cyc12(2)}));
  CHECK_FALSE(id.certified);
  CHECK_FALSE(id.distinct_norm);

  const UnaryFamilyCheck ev = unary_family_check(mat(2, 2, {Cyc12(1), Cyc12(0), Cyc12(0), Cyc12(2)}),
                                                 vec({Cyc12(1), Cyc12(0)}));
  CHECK_FALSE(ev.certified);
  CHECK_FALSE(ev.not_eigenvector);
  CHECK(ev.reason.find("eigenvector") != std::string::npos);
}

TEST_CASE("single-slot reduction") {
  const SignatureGrid g = single_slot_grid();
  const SymSignature target{Cyc12(7), Cyc12(11)};
  std::mt19937_64 rng(97);
  CHECK(interpolate_unary_reduction(g, target, m4_family()) == Cyc12(76));
  CHECK(interpolate_unary_reduction(g, target, random_unary_family(rng)) == Cyc12(76));
  CHECK(error_kind([&] { interpolate_unary_reduction(g, SymSignature{Cyc12(1)}, m4_family()); }) ==
        ErrorKind::ArityMismatch);
}

TEST_CASE("reduction equals direct evaluation on random grids") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 24; ++trial) {
    const int slots = 1 + trial % 3;
    const SignatureGrid grid = testing::random_closed_grid(rng, 12, slots);
    const SymSignature target{testing::random_gaussian(rng), testing::random_gaussian(rng)};
    const Cyc12 direct = testing::naive_grid_holant(fill_slots(grid, target));
    const IterationFamily fam = trial % 2 == 0 ? m4_family() : random_unary_family(rng);
    const InterpolationReport rep = run_unary_reduction(grid, target, fam);
    CHECK(rep.interpolated == direct);
    for (std::size_t k = 0; k < rep.plan.points.size(); ++k)
      CHECK(evaluate_homogeneous(rep.coefficients, rep.plan.points[k](0), rep.plan.points[k](1)) ==
            rep.oracle_values[k]);
  }
}

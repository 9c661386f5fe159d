// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "holant/catalog.hpp"
#include "holant/dichotomy.hpp"
#include "holant/errors.hpp"
#include "holant/eval.hpp"
#include "holant/interp.hpp"
#include "support/instances.hpp"
#include "support/random_values.hpp"

using namespace holant;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

Outcome identity_catalogue() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<IdentityRecord> records = verify_identity_suite();
  const double t = seconds_since(t0);
  std::size_t passed = 0;
  for (const IdentityRecord& r : records) {
    if (r.passed) ++passed;
    else std::cerr << format_record(r) << "\n";
  }
  return {passed == records.size() && t <= 10.0,
          std::to_string(passed) + "/" + std::to_string(records.size()) + " records hold in " + fmt_seconds(t)};
}

Outcome symmetrization_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  int graphs = 0, comparisons = 0, mismatches = 0;
  for (; graphs < 50; ++graphs) {
    const int n = 4 + 2 * (graphs % 4);
    const EdgeLabeledGraph g = testing::random_cubic_multigraph(rng, n);
    const SymmetrizedPolynomial sp = symmetrize(g);
    for (int k = 0; k < 5; ++k) {
      const Cyc12 a = testing::random_cyc(rng, 3), b = testing::random_cyc(rng, 3);
      const SymSignature sig{a, Cyc12(1), b};
      const Cyc12 fast = holant_eval_graph(g, sig);
      const Cyc12 naive = testing::naive_graph_holant(g, sig);
      const Cyc12 viaP = evaluate(sp.P, {{Var::X, a * b}, {Var::Y, a.pow(3) + b.pow(3)}});
      ++comparisons;
      if (fast != naive || viaP != naive) ++mismatches;
    }
  }
  const double t = seconds_since(t0);
  return {mismatches == 0 && t <= 120.0, std::to_string(graphs) + " graphs, " + std::to_string(comparisons) +
                                             " points, " + std::to_string(mismatches) + " mismatches, no mod-3 " +
                                             "violation, " + fmt_seconds(t)};
}

IterationFamily m4_family() {
  const Cyc12 a(2), b(3);
  IterationFamily fam;
  fam.M = evaluate_gadget("4", a, b);
  fam.s = evaluate_gadget("s", a, b).col(0);
  const FinisherSet fs = finisher_set(a, b);
  fam.finishers.assign(fs.finishers.begin(), fs.finishers.end());
  return fam;
}

IterationFamily random_unary_family(std::mt19937_64& rng) {
  for (;;) {
    IterationFamily fam;
    fam.M = CycMatrix(2, 2);
    fam.M << testing::random_gaussian(rng, 3), testing::random_gaussian(rng, 3), testing::random_gaussian(rng, 3),
        testing::random_gaussian(rng, 3);
    fam.s = CycVector(2);
    fam.s << testing::random_gaussian(rng, 3), testing::random_gaussian(rng, 3);
    if (unary_family_check(fam.M, fam.s).certified) return fam;
  }
}

CycVector family_point(const IterationFamily& fam, const InterpolationPlan& plan, std::size_t k) {
  CycVector v = fam.s;
  for (std::size_t i = 0; i < k; ++i) v = fam.M * v;
  if (plan.finisher) v = fam.finishers[static_cast<std::size_t>(*plan.finisher)] * v;
  return v;
}

Outcome interpolation_end_to_end() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(77);
  int failures = 0, extra_checks = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const SignatureGrid grid = testing::random_closed_grid(rng, 12, 1 + trial % 3);
    const SymSignature target{testing::random_gaussian(rng), testing::random_gaussian(rng)};
    const IterationFamily fam = trial % 2 == 0 ? m4_family() : random_unary_family(rng);
    const Cyc12 direct = testing::naive_grid_holant(fill_slots(grid, target));
    const InterpolationReport rep = run_unary_reduction(grid, target, fam);
    bool ok = rep.interpolated == direct;
    for (std::size_t k = 0; k < rep.plan.points.size(); ++k)
      ok = ok && evaluate_homogeneous(rep.coefficients, rep.plan.points[k](0), rep.plan.points[k](1)) ==
                     rep.oracle_values[k];
    // Unselected iterates must fit the same coefficients.
    const std::size_t last = rep.plan.indices.back();
    for (std::size_t k = last + 1; k <= last + 2; ++k) {
      const CycVector v = family_point(fam, rep.plan, k);
      const Cyc12 oracle = testing::naive_grid_holant(fill_slots(grid, SymSignature{v(0), v(1)}));
      ok = ok && evaluate_homogeneous(rep.coefficients, v(0), v(1)) == oracle;
      ++extra_checks;
    }
    if (!ok) ++failures;
  }
  const double t = seconds_since(t0);
  return {failures == 0 && t <= 120.0, "20 grids, " + std::to_string(failures) + " failures, " +
                                           std::to_string(extra_checks) + " residual checks on unselected iterates, " +
                                           fmt_seconds(t)};
}

Outcome classifier_catalogue() {
  struct Row {
    const char* a;
    const char* b;
    bool planar;
    Verdict verdict;
  };
  const Row rows[] = {{"1", "1", false, Verdict::Tractable},   {"0", "0", false, Verdict::Tractable},
                      {"1", "-1", false, Verdict::Tractable},  {"i", "i", false, Verdict::Tractable},
                      {"-i", "-i", false, Verdict::Tractable}, {"0", "1", false, Verdict::Hard},
                      {"2", "3", false, Verdict::Hard},        {"1+i", "1", false, Verdict::Hard},
                      {"2", "2", true, Verdict::PlanarTractableGeneralHard},
                      {"2", "2", false, Verdict::Hard},        {"0", "2", false, Verdict::Hard}};
  int wrong = 0;
  for (const Row& r : rows)
    if (classify(parse_cyc(r.a), parse_cyc(r.b), r.planar).verdict != r.verdict) {
      std::cerr << "catalogue mismatch at (" << r.a << ", " << r.b << ")\n";
      ++wrong;
    }

  // Random points, a third of them pushed onto a special locus.
  std::mt19937_64 rng(11);
  const Cyc12 omega = Cyc12::zeta(4);
  int disagreements = 0;
  for (int k = 0; k < 1000; ++k) {
    const Cyc12 a = testing::random_nonzero_cyc(rng, 3);
    Cyc12 b = testing::random_cyc(rng, 3);
    switch (k % 6) {
      case 1: b = a.inverse(); break;                   // X = 1
      case 3: b = -a.inverse(); break;                  // X = -1
      case 5: b = omega * a; break;                     // a^3 = b^3
      default: break;
    }
    if (!coordinates_equivalence_check(a, b)) ++disagreements;
  }
  return {wrong == 0 && disagreements == 0, "11 catalogue rows, " + std::to_string(wrong) + " wrong; 1000 points, " +
                                                std::to_string(disagreements) + " disagreements"};
}

Cyc12 sample_scalar(std::mt19937_64& rng, int kind) {
  switch (kind % 3) {
    case 0: return Cyc12(testing::random_rat(rng, 5));
    case 1: return testing::random_gaussian(rng, 5);
    default: return testing::random_cyc(rng, 5);
  }
}

Outcome witness_completeness() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(5);
  std::map<std::string, int> kinds;
  int hard = 0, anomalies = 0, unverified = 0, attempt = 0;
  while (hard < 500) {
    const int k = attempt++;
    const Cyc12 a = sample_scalar(rng, k);
    Cyc12 b = sample_scalar(rng, k / 3);
    if (k % 10 == 7) b = Cyc12::zeta(4) * a;  // equal cubes
    if (k % 10 == 9) b = Cyc12(0);
    if (classify(a, b, false).verdict != Verdict::Hard) continue;
    ++hard;
    const HardnessWitness w = hardness_witness(a, b);
    ++kinds[to_string(w.terminal.kind)];
    if (w.anomaly()) {
      ++anomalies;
      std::cerr << "anomaly at (" << to_string(a) << ", " << to_string(b) << "): " << w.terminal.detail << "\n";
    }
    const std::vector<std::string> issues = verify_witness(w);
    if (!issues.empty()) {
      ++unverified;
      std::cerr << "witness at (" << to_string(a) << ", " << to_string(b) << ") fails: " << issues.front() << "\n";
    }
  }
  std::ostringstream os;
  os << hard << " hard points, " << anomalies << " anomalies, " << unverified << " unverified;";
  for (const auto& [kind, n] : kinds) os << " " << kind << "=" << n;
  os << ", " << fmt_seconds(seconds_since(t0));
  return {anomalies == 0 && unverified == 0, os.str()};
}

Outcome real_scan() {
  const auto t0 = std::chrono::steady_clock::now();
  const unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  const RealScanReport r = real_disjunction_scan(Rat(-10), Rat(10), Rat(-10), Rat(10), Rat(1, 10), jobs);
  const double t = seconds_since(t0);
  for (const ScanCounterexample& c : r.counterexamples)
    std::cerr << "scan counterexample (" << to_string(c.X) << ", " << to_string(c.Y) << ")\n";
  std::ostringstream os;
  os << r.points << " points, " << r.verified << " verified, "
     << r.excluded_degenerate + r.excluded_equal_cubes + r.cited + r.excluded_tractable << " excluded, "
     << r.counterexamples.size() << " counterexamples, " << fmt_seconds(t);
  return {r.counterexamples.empty() && t <= 300.0, os.str()};
}

// Plain machine-integer enumeration of all 2^n assignments for [2, 1, 3].
unsigned __int128 integer_holant_213(const EdgeLabeledGraph& g) {
  unsigned __int128 total = 0;
  const std::uint32_t limit = 1U << g.vertex_count;
  for (std::uint32_t sigma = 0; sigma < limit; ++sigma) {
    unsigned __int128 prod = 1;
    for (const auto& [u, v] : g.edges) {
      const unsigned bu = (sigma >> u) & 1U, bv = (sigma >> v) & 1U;
      prod *= bu != bv ? 1 : (bu == 0 ? 2 : 3);
    }
    total += prod;
  }
  return total;
}

std::string u128_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

Outcome performance_24() {
  std::mt19937_64 rng(24);
  const EdgeLabeledGraph g = testing::random_simple_cubic(rng, 24);
  const SymSignature sig{Cyc12(2), Cyc12(1), Cyc12(3)};
  auto t0 = std::chrono::steady_clock::now();
  const std::string serial = to_string(holant_eval_graph(g, sig, 1));
  const double t_serial = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  const std::string parallel = to_string(holant_eval_graph(g, sig, 4));
  const double t_parallel = seconds_since(t0);
  const std::string oracle = u128_string(integer_holant_213(g));
  const bool ok = serial == parallel && serial == oracle && t_serial <= 60.0 && t_parallel <= 60.0;
  return {ok, "Holant " + serial + "; jobs 1 in " + fmt_seconds(t_serial) + ", jobs 4 in " +
                  fmt_seconds(t_parallel) + (serial == parallel ? ", identical" : ", DIFFERENT") +
                  (serial == oracle ? ", matches integer enumeration" : ", integer enumeration disagrees")};
}

Outcome tractable_solvers() {
  std::mt19937_64 rng(8);
  int mismatches = 0, nonzero_bipartite = 0;
  for (int k = 0; k < 20; ++k) {
    const int n = 4 + 2 * (k % 5);
    const EdgeLabeledGraph g = testing::random_cubic_multigraph(rng, n);

    const Cyc12 a = testing::random_nonzero_cyc(rng, 3);
    const Cyc12 degenerate = solve_tractable(g, TractableCase::Degenerate, a, a.inverse());
    if (degenerate != testing::naive_graph_holant(g, SymSignature{a, Cyc12(1), a.inverse()})) ++mismatches;

    const EdgeLabeledGraph bg = k % 2 == 0 ? testing::random_bipartite_cubic(rng, n / 2) : g;
    const SymSignature two_color{Cyc12(0), testing::random_nonzero_cyc(rng, 3), Cyc12(0)};
    const Cyc12 bip = solve_tractable(bg, TractableCase::Bipartite, two_color);
    if (!bip.is_zero()) ++nonzero_bipartite;
    if (bip != testing::naive_graph_holant(bg, two_color)) ++mismatches;

    const SymSignature mono{testing::random_cyc(rng, 3), Cyc12(0), testing::random_cyc(rng, 3)};
    const EdgeLabeledGraph split = disjoint_union(g, testing::random_cubic_multigraph(rng, 4));
    if (solve_tractable(split, TractableCase::Monochrome, mono) != testing::naive_graph_holant(split, mono))
      ++mismatches;
  }
  return {mismatches == 0, "60 comparisons (" + std::to_string(nonzero_bipartite) + " nonzero 2-colorings), " +
                               std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"identity catalogue", identity_catalogue},
      {"symmetrization oracle", symmetrization_oracle},
      {"interpolation end to end", interpolation_end_to_end},
      {"classifier catalogue", classifier_catalogue},
      {"witness completeness", witness_completeness},
      {"real disjunction scan", real_scan},
      {"24-vertex performance", performance_24},
      {"tractable solvers", tractable_solvers},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (k + 1) << ". " << criteria[k].first << ": " << o.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

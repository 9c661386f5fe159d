#include "holant/eval.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "holant/errors.hpp"

namespace holant {
namespace {

constexpr int kMaxVertices = 48;

struct Adjacency {
  std::vector<std::vector<int>> neighbours;  // non-loop endpoints, with multiplicity
  std::vector<int> loops;
};

Adjacency build_adjacency(const EdgeLabeledGraph& g) {
  Adjacency adj;
  adj.neighbours.resize(static_cast<std::size_t>(g.vertex_count));
  adj.loops.assign(static_cast<std::size_t>(g.vertex_count), 0);
  for (auto [u, v] : g.edges) {
    if (u == v) {
      ++adj.loops[static_cast<std::size_t>(u)];
    } else {
      adj.neighbours[static_cast<std::size_t>(u)].push_back(v);
      adj.neighbours[static_cast<std::size_t>(v)].push_back(u);
    }
  }
  return adj;
}

// Enumerates the 2^low assignments of vertices 1..low with every higher vertex
// fixed by `fixed`, adding each (i, j) pair into hist (flattened, stride E+1).
void enumerate_chunk(const EdgeLabeledGraph& g, const Adjacency& adj, int low, std::uint64_t fixed,
                     std::vector<std::uint64_t>& hist) {
  const int stride = static_cast<int>(g.edges.size()) + 1;
  std::uint64_t sigma = fixed;
  int i = 0;
  int j = 0;
  for (auto [u, v] : g.edges) {
    unsigned su = (sigma >> u) & 1U;
    unsigned sv = (sigma >> v) & 1U;
    if (su == sv) (su == 0 ? i : j) += 1;
  }
  ++hist[static_cast<std::size_t>(i * stride + j)];
  const std::uint64_t steps = std::uint64_t{1} << low;
  for (std::uint64_t k = 1; k < steps; ++k) {
    const int v = 1 + std::countr_zero(k);
    const unsigned s = (sigma >> v) & 1U;
    for (int u : adj.neighbours[static_cast<std::size_t>(v)]) {
      const unsigned su = (sigma >> u) & 1U;
      if (s == su) {
        (s == 0 ? i : j) -= 1;
      } else {
        (su == 0 ? i : j) += 1;
      }
    }
    const int loops = adj.loops[static_cast<std::size_t>(v)];
    if (loops != 0) {
      if (s == 0) {
        i -= loops;
        j += loops;
      } else {
        j -= loops;
        i += loops;
      }
    }
    sigma ^= std::uint64_t{1} << v;
    ++hist[static_cast<std::size_t>(i * stride + j)];
  }
}

Cyc12 from_count(std::uint64_t c) { return Cyc12(Rat(static_cast<unsigned long>(c))); }

void require_arity2(const SymSignature& sig) {
  if (sig.arity() != 2) throw Error(ErrorKind::ArityMismatch, "edge signature must have arity 2, got " + to_string(sig));
}

bool is_bipartite(const EdgeLabeledGraph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.vertex_count), -1);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count));
  for (auto [u, v] : g.edges) {
    if (u == v) return false;
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (int start = 0; start < g.vertex_count; ++start) {
    if (colour[static_cast<std::size_t>(start)] >= 0) continue;
    colour[static_cast<std::size_t>(start)] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[static_cast<std::size_t>(v)]) {
        int& cu = colour[static_cast<std::size_t>(u)];
        if (cu < 0) {
          cu = 1 - colour[static_cast<std::size_t>(v)];
          stack.push_back(u);
        } else if (cu == colour[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

EdgeHistogram edge_histogram(const EdgeLabeledGraph& g, unsigned jobs) {
  if (g.vertex_count < 1) throw Error(ErrorKind::PreconditionViolation, "histogram needs at least one vertex");
  if (g.vertex_count > kMaxVertices)
    throw Error(ErrorKind::PreconditionViolation, "brute force is limited to " + std::to_string(kMaxVertices) + " vertices");
  for (auto [u, v] : g.edges)
    if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count)
      throw Error(ErrorKind::MalformedDocument, "edge endpoint out of range");

  const Adjacency adj = build_adjacency(g);
  const int free_vertices = g.vertex_count - 1;
  int split = 0;
  if (jobs > 1) {
    while ((1U << split) < 4 * jobs && split < free_vertices && split < 12) ++split;
  }
  const int low = free_vertices - split;
  const std::size_t cells = (g.edges.size() + 1) * (g.edges.size() + 1);
  const std::uint64_t chunks = std::uint64_t{1} << split;

  std::vector<std::vector<std::uint64_t>> partial(std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(chunks))),
                                                  std::vector<std::uint64_t>(cells, 0));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&](std::size_t slot) {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t fixed = c << (1 + low);
      enumerate_chunk(g, adj, low, fixed, partial[slot]);
    }
  };
  if (partial.size() == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < partial.size(); ++t) threads.emplace_back(worker, t);
    for (auto& t : threads) t.join();
  }

  EdgeHistogram h;
  h.edge_count = static_cast<int>(g.edges.size());
  h.vertex_count = g.vertex_count;
  h.counts.assign(g.edges.size() + 1, std::vector<std::uint64_t>(g.edges.size() + 1, 0));
  const std::size_t stride = g.edges.size() + 1;
  for (const auto& p : partial)
    for (std::size_t idx = 0; idx < cells; ++idx) h.counts[idx / stride][idx % stride] += p[idx];
  return h;
}

Cyc12 holant_eval_graph(const EdgeLabeledGraph& g, const SymSignature& sig, unsigned jobs) {
  require_arity2(sig);
  if (g.vertex_count == 0) return Cyc12(1);
  const EdgeHistogram h = edge_histogram(g, jobs);
  const auto E = static_cast<std::size_t>(h.edge_count);
  std::vector<Cyc12> xp{Cyc12(1)}, yp{Cyc12(1)}, zp{Cyc12(1)};
  for (std::size_t k = 1; k <= E; ++k) {
    xp.push_back(xp.back() * sig[0]);
    yp.push_back(yp.back() * sig[1]);
    zp.push_back(zp.back() * sig[2]);
  }
  Cyc12 total;
  for (std::size_t i = 0; i <= E; ++i)
    for (std::size_t j = 0; i + j <= E; ++j) {
      const std::uint64_t c = h.counts[i][j];
      if (c == 0) continue;
      const Cyc12& mid = yp[E - i - j];
      total += from_count(c) * mid * (xp[i] * zp[j] + xp[j] * zp[i]);
    }
  return total;
}

Cyc12 holant_eval_grid(const SignatureGrid& grid) { return contract_closed(grid); }

std::vector<MPoly> power_sum_sequence(int count) {
  const MPoly X = MPoly::var(Var::X);
  const MPoly Y = MPoly::var(Var::Y);
  const MPoly X3 = X.pow(3);
  std::vector<MPoly> q{MPoly(2), Y};
  while (static_cast<int>(q.size()) < count) q.push_back(Y * q[q.size() - 1] - X3 * q[q.size() - 2]);
  q.resize(static_cast<std::size_t>(std::max(count, 0)));
  return q;
}

SymmetrizedPolynomial symmetrize(const EdgeLabeledGraph& g, unsigned jobs) {
  g.require_three_regular();
  SymmetrizedPolynomial out;
  out.source_edge_count = static_cast<int>(g.edges.size());
  out.source_vertex_count = g.vertex_count;
  if (g.vertex_count == 0) {
    out.P = MPoly(1);
    return out;
  }
  const EdgeHistogram h = edge_histogram(g, jobs);
  const auto E = static_cast<std::size_t>(h.edge_count);
  const std::vector<MPoly> q = power_sum_sequence(static_cast<int>(E / 3) + 1);
  const MPoly X = MPoly::var(Var::X);
  for (std::size_t i = 0; i <= E; ++i)
    for (std::size_t j = 0; i + j <= E; ++j) {
      const std::uint64_t c = h.counts[i][j];
      if (c == 0) continue;
      const std::size_t diff = i > j ? i - j : j - i;
      if (diff % 3 != 0)
        throw Error(ErrorKind::Mod3ViolationAnomaly, "assignment class with " + std::to_string(i) + " edges on 00 and " +
                                                         std::to_string(j) + " on 11");
      out.P += MPoly(from_count(c)) * X.pow(std::min(i, j)) * q[diff / 3];
    }
  return out;
}

NormalizedSignature normalize_signature(const SymSignature& sig) {
  require_arity2(sig);
  NormalizedSignature n;
  if (sig[1].is_zero()) {
    n.monochrome = true;
    return n;
  }
  const Cyc12 inv = sig[1].inverse();
  n.a = sig[0] * inv;
  n.b = sig[2] * inv;
  n.scale_base = sig[1];
  return n;
}

std::string to_string(TractableCase c) {
  switch (c) {
    case TractableCase::Degenerate: return "X=1";
    case TractableCase::Bipartite: return "X=Y=0";
    case TractableCase::Monochrome: return "y=0";
    case TractableCase::MinusOne: return "X=-1";
  }
  return "?";
}

std::optional<TractableCase> tractable_case(const Cyc12& a, const Cyc12& b) {
  const Cyc12 X = a * b;
  const Cyc12 Y = a.pow(3) + b.pow(3);
  if (X.is_one()) return TractableCase::Degenerate;
  if (X.is_zero() && Y.is_zero()) return TractableCase::Bipartite;
  const Cyc12 two_i = Cyc12(2) * Cyc12::imag_unit();
  if (X == Cyc12(-1) && (Y.is_zero() || Y == two_i || Y == -two_i)) return TractableCase::MinusOne;
  return std::nullopt;
}

Cyc12 solve_tractable(const EdgeLabeledGraph& g, TractableCase c, const SymSignature& sig) {
  require_arity2(sig);
  if (c == TractableCase::Monochrome) {
    if (!sig[1].is_zero()) throw Error(ErrorKind::CaseMismatch, "monochrome solver needs y = 0, got " + to_string(sig));
    // g(0,1) = 0 forces every component to be constant.
    std::vector<int> comp_of(static_cast<std::size_t>(g.vertex_count));
    auto comps = g.components();
    for (std::size_t k = 0; k < comps.size(); ++k)
      for (int v : comps[k]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(k);
    std::vector<unsigned long> edges_in(comps.size(), 0);
    for (auto [u, v] : g.edges) ++edges_in[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(u)])];
    Cyc12 prod(1);
    for (unsigned long e : edges_in) prod *= sig[0].pow(e) + sig[2].pow(e);
    return prod;
  }
  const NormalizedSignature n = normalize_signature(sig);
  if (n.monochrome) throw Error(ErrorKind::CaseMismatch, to_string(sig) + " has y = 0");
  const std::optional<TractableCase> actual = tractable_case(n.a, n.b);
  if (actual != c)
    throw Error(ErrorKind::CaseMismatch, to_string(sig) + " is not in the " + to_string(c) + " family");
  const Cyc12 scale = n.scale_base.pow(g.edges.size());
  switch (c) {
    case TractableCase::Degenerate: {
      g.require_three_regular();
      const Cyc12 Y = n.a.pow(3) + n.b.pow(3);
      return scale * (Y + Cyc12(2)).pow(static_cast<unsigned long>(g.vertex_count / 2));
    }
    case TractableCase::Bipartite:
      if (!is_bipartite(g)) return Cyc12();
      return scale * Cyc12(2).pow(g.components().size());
    case TractableCase::MinusOne:
      throw Error(ErrorKind::NoPolyTimeAlgorithmInScope,
                  "X=-1 with Y in {0, 2i, -2i} is tractable by citation only; use brute force");
    case TractableCase::Monochrome:
      break;
  }
  return Cyc12();
}

Cyc12 solve_tractable(const EdgeLabeledGraph& g, TractableCase c, const Cyc12& a, const Cyc12& b) {
  return solve_tractable(g, c, SymSignature{a, Cyc12(1), b});
}

EvalReport auto_eval(const EdgeLabeledGraph& g, const SymSignature& sig, unsigned jobs) {
  require_arity2(sig);
  if (sig[1].is_zero()) return {solve_tractable(g, TractableCase::Monochrome, sig), "monochrome components (y=0)"};
  const NormalizedSignature n = normalize_signature(sig);
  const std::optional<TractableCase> c = tractable_case(n.a, n.b);
  if (c == TractableCase::Degenerate && g.is_three_regular())
    return {solve_tractable(g, *c, sig), "degenerate product (X=1)"};
  if (c == TractableCase::Bipartite) return {solve_tractable(g, *c, sig), "bipartite 2-coloring (X=Y=0)"};
  if (c == TractableCase::MinusOne)
    return {holant_eval_graph(g, sig, jobs), "brute force (X=-1 family has no algorithm in scope)"};
  return {holant_eval_graph(g, sig, jobs), "brute force"};
}

}  // namespace holant

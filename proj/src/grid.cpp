#include "holant/grid.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <sstream>

#include "holant/errors.hpp"

namespace holant {

using nlohmann::json;

std::vector<int> EdgeLabeledGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(vertex_count), 0);
  for (auto [u, v] : edges) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

bool EdgeLabeledGraph::is_three_regular() const {
  auto deg = degrees();
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; });
}

void EdgeLabeledGraph::require_three_regular() const {
  auto deg = degrees();
  for (std::size_t v = 0; v < deg.size(); ++v)
    if (deg[v] != 3)
      throw Error(ErrorKind::NotThreeRegular,
                  "vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]));
}

std::vector<std::vector<int>> EdgeLabeledGraph::components() const {
  std::vector<int> parent(static_cast<std::size_t>(vertex_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (auto [u, v] : edges) {
    int ru = find(u);
    int rv = find(v);
    if (ru != rv) parent[static_cast<std::size_t>(std::max(ru, rv))] = std::min(ru, rv);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(static_cast<std::size_t>(vertex_count), -1);
  for (int v = 0; v < vertex_count; ++v) {
    int r = find(v);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(v);
  }
  return out;
}

EdgeLabeledGraph disjoint_union(const EdgeLabeledGraph& lhs, const EdgeLabeledGraph& rhs) {
  EdgeLabeledGraph out = lhs;
  out.vertex_count += rhs.vertex_count;
  for (auto [u, v] : rhs.edges) out.edges.emplace_back(u + lhs.vertex_count, v + lhs.vertex_count);
  return out;
}

SymSignature parse_signature(std::string_view text) {
  std::size_t open = text.find_first_not_of(" \t\n");
  std::size_t close = text.find_last_not_of(" \t\n");
  if (open == std::string_view::npos || text[open] != '[' || text[close] != ']')
    throw Error(ErrorKind::Syntax, "signature must look like [g0, g1, ...]: \"" + std::string(text) + "\"");
  std::string_view body = text.substr(open + 1, close - open - 1);
  std::vector<Cyc12> values;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= body.size(); ++k) {
    if (k == body.size() || (body[k] == ',' && depth == 0)) {
      values.push_back(parse_cyc(body.substr(start, k - start)));
      start = k + 1;
    } else if (body[k] == '(') {
      ++depth;
    } else if (body[k] == ')') {
      --depth;
    }
  }
  return SymSignature(std::move(values));
}

std::string to_string(const SymSignature& sig) {
  std::string out = "[";
  for (std::size_t k = 0; k < sig.values.size(); ++k) {
    if (k != 0) out += ", ";
    out += to_string(sig.values[k]);
  }
  return out + "]";
}

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedDocument, what); }

const char* side_name(Side s) { return s == Side::Generator ? "gen" : "rec"; }

int get_index(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 1'000'000)
    malformed(std::string(what) + " must be a non-negative integer");
  return j.get<int>();
}

Cyc12 literal_value(const json& j) {
  if (j.is_string()) return parse_cyc(j.get<std::string>());
  if (j.is_number_integer()) return Cyc12(j.get<long>());
  malformed("signature entries must be literal strings or integers");
}

GridVertex parse_vertex(const json& j, Side side) {
  if (!j.is_object() || !j.contains("sig")) malformed("each vertex needs a \"sig\" field");
  const json& sig = j.at("sig");
  if (sig.is_string() && sig.get<std::string>() == "SLOT") {
    if (side != Side::Generator) malformed("SLOT is only allowed on generators");
    return GridVertex{};
  }
  if (!sig.is_array() || sig.empty()) malformed("\"sig\" must be a non-empty array or \"SLOT\"");
  std::vector<Cyc12> values;
  for (const json& v : sig) values.push_back(literal_value(v));
  return GridVertex{SymSignature(std::move(values))};
}

Side parse_side(const json& j) {
  if (j == "gen") return Side::Generator;
  if (j == "rec") return Side::Recognizer;
  malformed("side must be \"gen\" or \"rec\"");
}

std::pair<int, int> parse_pair(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) malformed(std::string(what) + " must be a [vertex, port] pair");
  return {get_index(j[0], what), get_index(j[1], what)};
}

}  // namespace

void SignatureGrid::validate() const {
  std::vector<std::vector<int>> gen_use(generators.size());
  std::vector<std::vector<int>> rec_use(recognizers.size());
  for (std::size_t k = 0; k < generators.size(); ++k)
    gen_use[k].assign(static_cast<std::size_t>(std::max(generators[k].arity(), 0)), 0);
  for (std::size_t k = 0; k < recognizers.size(); ++k)
    rec_use[k].assign(static_cast<std::size_t>(std::max(recognizers[k].arity(), 0)), 0);

  auto use = [&](Side side, int vertex, int port) {
    auto& table = side == Side::Generator ? gen_use : rec_use;
    if (vertex < 0 || static_cast<std::size_t>(vertex) >= table.size())
      malformed(std::string(side_name(side)) + " vertex " + std::to_string(vertex) + " does not exist");
    auto& ports = table[static_cast<std::size_t>(vertex)];
    if (port < 0 || static_cast<std::size_t>(port) >= ports.size())
      throw Error(ErrorKind::ArityMismatch, std::string(side_name(side)) + " vertex " + std::to_string(vertex) +
                                                " has signature arity " + std::to_string(ports.size()) +
                                                " but port " + std::to_string(port) + " is wired");
    ++ports[static_cast<std::size_t>(port)];
  };
  for (const GridEdge& e : edges) {
    use(Side::Generator, e.gen, e.gen_port);
    use(Side::Recognizer, e.rec, e.rec_port);
  }
  for (const DanglingEdge& d : dangling) use(d.side, d.vertex, d.port);

  for (Side side : {Side::Generator, Side::Recognizer}) {
    const auto& table = side == Side::Generator ? gen_use : rec_use;
    for (std::size_t v = 0; v < table.size(); ++v)
      for (std::size_t p = 0; p < table[v].size(); ++p)
        if (table[v][p] != 1)
          throw Error(ErrorKind::DanglingPort, std::string(side_name(side)) + " vertex " + std::to_string(v) +
                                                   " port " + std::to_string(p) + " is used " +
                                                   std::to_string(table[v][p]) + " times");
  }
}

int SignatureGrid::slot_count() const {
  return static_cast<int>(std::count_if(generators.begin(), generators.end(), [](const GridVertex& v) { return v.is_slot(); }));
}

std::vector<int> SignatureGrid::input_indices() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < dangling.size(); ++k)
    if (dangling[k].side == Side::Recognizer) out.push_back(static_cast<int>(k));
  return out;
}

std::vector<int> SignatureGrid::output_indices() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < dangling.size(); ++k)
    if (dangling[k].side == Side::Generator) out.push_back(static_cast<int>(k));
  return out;
}

const Cyc12& FullTensor::at(const std::vector<int>& bits) const {
  std::size_t index = 0;
  for (int b : bits) index = (index << 1) | static_cast<std::size_t>(b & 1);
  return values.at(index);
}

EdgeLabeledGraph parse_graph(const json& doc) {
  if (!doc.is_object() || doc.value("type", "") != "graph") malformed("expected {\"type\":\"graph\", ...}");
  if (!doc.contains("vertices") || !doc.contains("edges")) malformed("graph needs \"vertices\" and \"edges\"");
  EdgeLabeledGraph g;
  g.vertex_count = get_index(doc.at("vertices"), "vertices");
  const json& edges = doc.at("edges");
  if (!edges.is_array()) malformed("\"edges\" must be an array");
  for (const json& e : edges) {
    auto [u, v] = parse_pair(e, "edge");
    if (u >= g.vertex_count || v >= g.vertex_count)
      malformed("edge [" + std::to_string(u) + "," + std::to_string(v) + "] leaves the vertex range");
    g.edges.emplace_back(u, v);
  }
  return g;
}

SignatureGrid parse_grid(const json& doc) {
  if (!doc.is_object() || doc.value("type", "") != "grid") malformed("expected {\"type\":\"grid\", ...}");
  SignatureGrid grid;
  for (const char* key : {"generators", "recognizers"})
    if (!doc.contains(key) || !doc.at(key).is_array()) malformed(std::string("grid needs an array \"") + key + "\"");
  for (const json& v : doc.at("generators")) grid.generators.push_back(parse_vertex(v, Side::Generator));
  for (const json& v : doc.at("recognizers")) grid.recognizers.push_back(parse_vertex(v, Side::Recognizer));

  if (doc.contains("edges")) {
    if (!doc.at("edges").is_array()) malformed("\"edges\" must be an array");
    for (const json& e : doc.at("edges")) {
      if (!e.is_object()) malformed("each edge must be an object");
      if (e.contains("ends")) {
        // Alternative spelling with explicit sides; used to reject same-side wiring.
        const json& ends = e.at("ends");
        if (!ends.is_array() || ends.size() != 2) malformed("\"ends\" needs two endpoints");
        DanglingEdge p[2];
        for (int k = 0; k < 2; ++k) {
          const json& end = ends[static_cast<std::size_t>(k)];
          if (!end.is_object()) malformed("edge endpoint must be an object");
          p[k] = {parse_side(end.at("side")), get_index(end.at("vertex"), "vertex"), get_index(end.at("port"), "port")};
        }
        if (p[0].side == p[1].side)
          throw Error(ErrorKind::NonBipartite, std::string("edge joins two ") + side_name(p[0].side) + " vertices");
        if (p[0].side == Side::Recognizer) std::swap(p[0], p[1]);
        grid.edges.push_back({p[0].vertex, p[0].port, p[1].vertex, p[1].port});
        continue;
      }
      if (!e.contains("gen") || !e.contains("rec")) malformed("edge needs \"gen\" and \"rec\" endpoints");
      auto [gi, gp] = parse_pair(e.at("gen"), "gen endpoint");
      auto [ri, rp] = parse_pair(e.at("rec"), "rec endpoint");
      grid.edges.push_back({gi, gp, ri, rp});
    }
  }
  if (doc.contains("dangling")) {
    if (!doc.at("dangling").is_array()) malformed("\"dangling\" must be an array");
    for (const json& d : doc.at("dangling")) {
      if (!d.is_object() || !d.contains("side") || !d.contains("vertex") || !d.contains("port"))
        malformed("dangling edge needs side, vertex and port");
      grid.dangling.push_back({parse_side(d.at("side")), get_index(d.at("vertex"), "vertex"), get_index(d.at("port"), "port")});
    }
  }
  grid.validate();
  return grid;
}

Instance parse_instance(const json& doc) {
  if (!doc.is_object() || !doc.contains("type")) malformed("document needs a \"type\" field");
  if (doc.at("type") == "graph") return parse_graph(doc);
  if (doc.at("type") == "grid") return parse_grid(doc);
  malformed("unknown document type " + doc.at("type").dump());
}

json to_json(const EdgeLabeledGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  return {{"type", "graph"}, {"vertices", g.vertex_count}, {"edges", edges}};
}

json to_json(const SignatureGrid& grid) {
  auto vertices = [](const std::vector<GridVertex>& vs) {
    json out = json::array();
    for (const GridVertex& v : vs) {
      if (v.is_slot()) {
        out.push_back({{"sig", "SLOT"}});
        continue;
      }
      json sig = json::array();
      for (const Cyc12& c : v.sig->values) sig.push_back(to_string(c));
      out.push_back({{"sig", sig}});
    }
    return out;
  };
  json edges = json::array();
  for (const GridEdge& e : grid.edges) edges.push_back({{"gen", {e.gen, e.gen_port}}, {"rec", {e.rec, e.rec_port}}});
  json dangling = json::array();
  for (const DanglingEdge& d : grid.dangling)
    dangling.push_back({{"side", side_name(d.side)}, {"vertex", d.vertex}, {"port", d.port}});
  return {{"type", "grid"},
          {"generators", vertices(grid.generators)},
          {"recognizers", vertices(grid.recognizers)},
          {"edges", edges},
          {"dangling", dangling}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    malformed(path + ": " + e.what());
  }
}

SignatureGrid graph_to_grid(const EdgeLabeledGraph& g, const SymSignature& edge_sig, const SymSignature& vertex_sig) {
  g.require_three_regular();
  if (edge_sig.arity() != 2) throw Error(ErrorKind::ArityMismatch, "edge signature must have arity 2");
  if (vertex_sig.arity() != 3) throw Error(ErrorKind::ArityMismatch, "vertex signature must have arity 3");
  SignatureGrid grid;
  grid.generators.assign(g.edges.size(), GridVertex{edge_sig});
  grid.recognizers.assign(static_cast<std::size_t>(g.vertex_count), GridVertex{vertex_sig});
  std::vector<std::vector<std::pair<int, int>>> incident(static_cast<std::size_t>(g.vertex_count));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    incident[static_cast<std::size_t>(u)].emplace_back(static_cast<int>(e), 0);
    incident[static_cast<std::size_t>(v)].emplace_back(static_cast<int>(e), 1);
  }
  for (int v = 0; v < g.vertex_count; ++v) {
    int port = 0;
    for (auto [e, gen_port] : incident[static_cast<std::size_t>(v)]) grid.edges.push_back({e, gen_port, v, port++});
  }
  return grid;
}

namespace {

// Depth-first contraction over the internal edges in declaration order. A
// vertex's signature value is multiplied in as soon as its last edge is fixed,
// and a branch is cut when no reachable weight of some vertex has a nonzero value.
class Contractor {
 public:
  explicit Contractor(const SignatureGrid& grid) {
    const std::size_t gens = grid.generators.size();
    const std::size_t total = gens + grid.recognizers.size();
    sigs_.resize(total);
    for (std::size_t v = 0; v < total; ++v) {
      const GridVertex& gv = v < gens ? grid.generators[v] : grid.recognizers[v - gens];
      if (gv.is_slot()) throw Error(ErrorKind::UnfilledSlot, "generator " + std::to_string(v) + " is an unfilled SLOT");
      sigs_[v] = &*gv.sig;
    }
    ends_.reserve(grid.edges.size());
    for (const GridEdge& e : grid.edges)
      ends_.emplace_back(static_cast<std::size_t>(e.gen), gens + static_cast<std::size_t>(e.rec));
    for (const DanglingEdge& d : grid.dangling)
      dangling_vertex_.push_back(d.side == Side::Generator ? static_cast<std::size_t>(d.vertex)
                                                           : gens + static_cast<std::size_t>(d.vertex));
  }

  /// bits[k] is the value on dangling edge k.
  Cyc12 run(const std::vector<int>& bits) {
    const std::size_t total = sigs_.size();
    weight_.assign(total, 0);
    remaining_.assign(total, 0);
    for (auto [u, v] : ends_) {
      ++remaining_[u];
      ++remaining_[v];
    }
    for (std::size_t k = 0; k < bits.size(); ++k) weight_[dangling_vertex_[k]] += bits[k];
    Cyc12 start(1);
    for (std::size_t v = 0; v < total; ++v) {
      if (remaining_[v] == 0) {
        start *= (*sigs_[v])[weight_[v]];
        if (start.is_zero()) return start;
      } else if (dead(v)) {
        return Cyc12();
      }
    }
    return descend(0, start);
  }

 private:
  bool dead(std::size_t v) const {
    const SymSignature& s = *sigs_[v];
    for (int w = weight_[v]; w <= weight_[v] + remaining_[v]; ++w)
      if (!s[w].is_zero()) return false;
    return true;
  }

  Cyc12 descend(std::size_t e, const Cyc12& acc) {
    if (e == ends_.size()) return acc;
    auto [u, v] = ends_[e];
    Cyc12 sum;
    for (int bit = 0; bit < 2; ++bit) {
      weight_[u] += bit;
      weight_[v] += bit;
      --remaining_[u];
      --remaining_[v];
      Cyc12 next = acc;
      bool alive = true;
      for (std::size_t x : {u, v}) {
        if (remaining_[x] == 0) {
          next *= (*sigs_[x])[weight_[x]];
          if (next.is_zero()) alive = false;
        } else if (dead(x)) {
          alive = false;
        }
        if (!alive) break;
      }
      if (alive) sum += descend(e + 1, next);
      weight_[u] -= bit;
      weight_[v] -= bit;
      ++remaining_[u];
      ++remaining_[v];
    }
    return sum;
  }

  std::vector<const SymSignature*> sigs_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
  std::vector<std::size_t> dangling_vertex_;
  std::vector<int> weight_;
  std::vector<int> remaining_;
};

std::string bit_string(std::size_t index, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int k = 0; k < width; ++k)
    if (index & (std::size_t{1} << (width - 1 - k))) s[static_cast<std::size_t>(k)] = '1';
  return s;
}

std::vector<int> index_bits(std::size_t index, int width) {
  std::vector<int> bits(static_cast<std::size_t>(width));
  for (int k = 0; k < width; ++k) bits[static_cast<std::size_t>(k)] = static_cast<int>((index >> (width - 1 - k)) & 1U);
  return bits;
}

}  // namespace

FullTensor fgate_signature(const SignatureGrid& gate) {
  gate.validate();
  const int q = static_cast<int>(gate.dangling.size());
  if (q == 0) throw Error(ErrorKind::PreconditionViolation, "an F-gate needs at least one dangling edge");
  if (q > 20) throw Error(ErrorKind::PreconditionViolation, "too many dangling edges for a dense tensor");
  Contractor c(gate);
  FullTensor t;
  t.dangling_count = q;
  t.values.resize(std::size_t{1} << q);
  for (std::size_t idx = 0; idx < t.values.size(); ++idx) t.values[idx] = c.run(index_bits(idx, q));
  return t;
}

SymSignature symmetric_project(const FullTensor& t) {
  std::vector<std::optional<std::size_t>> first(static_cast<std::size_t>(t.dangling_count) + 1);
  for (std::size_t idx = 0; idx < t.values.size(); ++idx) {
    auto w = static_cast<std::size_t>(std::popcount(idx));
    if (!first[w]) {
      first[w] = idx;
    } else if (t.values[idx] != t.values[*first[w]]) {
      throw Error(ErrorKind::NotSymmetric, "value at " + bit_string(*first[w], t.dangling_count) + " is " +
                                               to_string(t.values[*first[w]]) + ", at " +
                                               bit_string(idx, t.dangling_count) + " is " + to_string(t.values[idx]));
    }
  }
  std::vector<Cyc12> values;
  for (const auto& f : first) values.push_back(t.values[*f]);
  return SymSignature(std::move(values));
}

CycMatrix transfer_matrix(const SignatureGrid& gate) {
  FullTensor t = fgate_signature(gate);
  const std::vector<int> ins = gate.input_indices();
  const std::vector<int> outs = gate.output_indices();
  const int q = t.dangling_count;
  const int r = static_cast<int>(ins.size());
  const int s = static_cast<int>(outs.size());

  auto compose_index = [&](std::size_t x, std::size_t y) {
    std::size_t idx = 0;
    for (int k = 0; k < r; ++k)
      if (x & (std::size_t{1} << k)) idx |= std::size_t{1} << (q - 1 - ins[static_cast<std::size_t>(k)]);
    for (int k = 0; k < s; ++k)
      if (y & (std::size_t{1} << k)) idx |= std::size_t{1} << (q - 1 - outs[static_cast<std::size_t>(k)]);
    return idx;
  };

  CycMatrix m(s + 1, r + 1);
  std::vector<bool> seen(static_cast<std::size_t>(s) + 1, false);
  std::vector<std::size_t> witness(static_cast<std::size_t>(s) + 1, 0);
  for (std::size_t y = 0; y < (std::size_t{1} << s); ++y) {
    const int wo = std::popcount(y);
    std::vector<Cyc12> column(static_cast<std::size_t>(r) + 1);
    for (std::size_t x = 0; x < (std::size_t{1} << r); ++x) column[static_cast<std::size_t>(std::popcount(x))] += t.values[compose_index(x, y)];
    if (!seen[static_cast<std::size_t>(wo)]) {
      seen[static_cast<std::size_t>(wo)] = true;
      witness[static_cast<std::size_t>(wo)] = y;
      for (int wi = 0; wi <= r; ++wi) m(wo, wi) = column[static_cast<std::size_t>(wi)];
      continue;
    }
    for (int wi = 0; wi <= r; ++wi)
      if (m(wo, wi) != column[static_cast<std::size_t>(wi)])
        throw Error(ErrorKind::NotSymmetric, "outputs " + bit_string(witness[static_cast<std::size_t>(wo)], s) + " and " +
                                                 bit_string(y, s) + " differ at input weight " + std::to_string(wi));
  }
  return m;
}

SignatureGrid compose_gates(const SignatureGrid& outer, const SignatureGrid& inner) {
  const std::vector<int> inner_out = inner.output_indices();
  const std::vector<int> outer_in = outer.input_indices();
  if (inner_out.size() != outer_in.size())
    throw Error(ErrorKind::ArityMismatch, "inner gate has " + std::to_string(inner_out.size()) +
                                              " outputs but outer gate has " + std::to_string(outer_in.size()) + " inputs");
  const int gen_off = static_cast<int>(inner.generators.size());
  const int rec_off = static_cast<int>(inner.recognizers.size());
  SignatureGrid out;
  out.generators = inner.generators;
  out.generators.insert(out.generators.end(), outer.generators.begin(), outer.generators.end());
  out.recognizers = inner.recognizers;
  out.recognizers.insert(out.recognizers.end(), outer.recognizers.begin(), outer.recognizers.end());
  out.edges = inner.edges;
  for (GridEdge e : outer.edges) {
    e.gen += gen_off;
    e.rec += rec_off;
    out.edges.push_back(e);
  }
  for (std::size_t k = 0; k < inner_out.size(); ++k) {
    const DanglingEdge& o = inner.dangling[static_cast<std::size_t>(inner_out[k])];
    const DanglingEdge& i = outer.dangling[static_cast<std::size_t>(outer_in[k])];
    out.edges.push_back({o.vertex, o.port, i.vertex + rec_off, i.port});
  }
  for (int k : inner.input_indices()) out.dangling.push_back(inner.dangling[static_cast<std::size_t>(k)]);
  for (int k : outer.output_indices()) {
    DanglingEdge d = outer.dangling[static_cast<std::size_t>(k)];
    d.vertex += gen_off;
    out.dangling.push_back(d);
  }
  return out;
}

SignatureGrid fill_slots(const SignatureGrid& grid, const SymSignature& unary) {
  if (unary.arity() != 1) throw Error(ErrorKind::ArityMismatch, "SLOTs take unary signatures");
  SignatureGrid out = grid;
  for (GridVertex& v : out.generators)
    if (v.is_slot()) v.sig = unary;
  return out;
}

Cyc12 contract_closed(const SignatureGrid& grid) {
  grid.validate();
  if (!grid.dangling.empty())
    throw Error(ErrorKind::PreconditionViolation, "grid has " + std::to_string(grid.dangling.size()) + " dangling edges");
  Contractor c(grid);
  return c.run({});
}

}  // namespace holant

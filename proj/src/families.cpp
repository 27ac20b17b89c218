#include "monopos/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <functional>
#include <queue>

#include "monopos/cliques.hpp"
#include "monopos/errors.hpp"
#include "monopos/position.hpp"

namespace monopos {

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr std::array<FamilyName, 24> kNames{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::complete_multipartite, "complete_multipartite"},
    {Family::star, "star"},
    {Family::caterpillar, "caterpillar"},
    {Family::random_tree, "random_tree"},
    {Family::random_block, "random_block"},
    {Family::random_unicyclic, "random_unicyclic"},
    {Family::hypercube, "hypercube"},
    {Family::grid, "grid"},
    {Family::half_wheel, "half_wheel"},
    {Family::half_wheel_pendant, "half_wheel_pendant"},
    {Family::wheel_pendant_W, "wheel_pendant_W"},
    {Family::R_graph, "R_graph"},
    {Family::P_graph, "P_graph"},
    {Family::G_abl, "G_abl"},
    {Family::petersen, "petersen"},
    {Family::heawood, "heawood"},
    {Family::mcgee, "mcgee"},
    {Family::random_split, "random_split"},
    {Family::random_bipartite, "random_bipartite"},
    {Family::corona_of, "corona_of"},
    {Family::join_of, "join_of"},
}};

bool takes_children(Family f) { return f == Family::corona_of || f == Family::join_of; }

bool is_random(Family f) {
  switch (f) {
    case Family::random_tree:
    case Family::random_block:
    case Family::random_unicyclic:
    case Family::random_split:
    case Family::random_bipartite:
      return true;
    default:
      return false;
  }
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : s_(text) {}

  FamilySpec parse_all() {
    FamilySpec spec = parse_spec();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("family spec \"" + std::string(s_) + "\": " + what + " at position " + std::to_string(pos_));
  }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  FamilySpec parse_spec() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    const std::string_view name = s_.substr(start, pos_ - start);
    auto fam = family_from_string(name);
    if (!fam) {
      pos_ = start;
      fail(name.empty() ? "missing family name" : "unknown family '" + std::string(name) + "'");
    }
    FamilySpec spec;
    spec.family = *fam;
    while (peek(':')) {
      ++pos_;
      if (s_.substr(pos_, 5) == "seed=") {
        if (spec.seed) fail("seed given twice");
        pos_ += 5;
        spec.seed = parse_unsigned();
        continue;
      }
      if (!spec.params.empty() || !spec.children.empty() || spec.seed) fail("parameters must come once, before the seed");
      do {
        if (peek('{')) {
          ++pos_;
          spec.children.push_back(parse_spec());
          if (!peek('}')) fail("expected '}'");
          ++pos_;
        } else {
          spec.params.push_back(parse_int());
        }
      } while (peek(',') && ++pos_);
    }
    if (takes_children(spec.family) && !spec.params.empty()) fail("'" + std::string(name) + "' takes nested specs, not integers");
    if (!takes_children(spec.family) && !spec.children.empty()) fail("'" + std::string(name) + "' does not take nested specs");
    return spec;
  }

  int parse_int() {
    int value = 0;
    const char* first = s_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, s_.data() + s_.size(), value);
    if (ec != std::errc{}) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::uint64_t parse_unsigned() {
    std::uint64_t value = 0;
    const char* first = s_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, s_.data() + s_.size(), value);
    if (ec != std::errc{}) fail("expected a seed");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

[[noreturn]] void domain(const FamilySpec& spec, const std::string& what) {
  throw DomainError(spec.to_string() + ": " + what);
}

void arity(const FamilySpec& spec, std::size_t lo, std::size_t hi) {
  const std::size_t k = takes_children(spec.family) ? spec.children.size() : spec.params.size();
  if (k < lo || k > hi) {
    const std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
    domain(spec, "expects " + want + " parameter(s), got " + std::to_string(k));
  }
}

void need(const FamilySpec& spec, bool ok, const std::string& what) {
  if (!ok) domain(spec, "requires " + what);
}

void order_cap(const FamilySpec& spec, long long n) {
  if (n > kMaxVertices) throw CapExceeded(spec.to_string() + ": order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
}

Graph half_wheel_with_pendants(int r, int pendants) {
  const int hub = 2 * r;
  GraphBuilder b(hub + 1 + pendants);
  for (int i = 0; i < hub; ++i) {
    b.add_edge(i, (i + 1) % hub);
    if (i % 2 == 1) b.add_edge(hub, i);
  }
  for (int p = 0; p < pendants; ++p) b.add_edge(hub, hub + 1 + p);
  return b.build();
}

Graph wheel_pendant(int a) {
  GraphBuilder b(6 + a - 2);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5, i);
  }
  for (int p = 0; p < a - 2; ++p) b.add_edge(5, 6 + p);
  return b.build();
}

Graph r_graph(int r, int s) {
  GraphBuilder b(s + 1 + r);
  for (int u = 0; u <= s; ++u) {
    for (int v = u + 1; v <= s; ++v) b.add_edge(u, v);
  }
  for (int i = 0; i < r; ++i) b.add_edge(0, s + 1 + i);
  return b.build();
}

Graph p_graph(int r, int s) {
  const int apex = 2 * s;
  GraphBuilder b(apex + 1 + r);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      if (i != j) b.add_edge(i, s + j);
    }
    b.add_edge(apex, i);
  }
  for (int i = 0; i < r; ++i) b.add_edge(apex, apex + 1 + i);
  return b.build();
}

Graph g_abl(int a, int b, int l) {
  GraphBuilder g(b + l + 1);
  for (int u = 0; u < b; ++u) {
    for (int v = u + 1; v < b; ++v) g.add_edge(u, v);
  }
  for (int y = a - 1; y < b; ++y) g.add_edge(b, y);
  for (int i = 0; i < l; ++i) g.add_edge(b + i, b + i + 1);
  return g.build();
}

Graph caterpillar(const std::vector<int>& legs) {
  const int k = static_cast<int>(legs.size());
  int n = k;
  for (int l : legs) n += l;
  GraphBuilder b(n);
  for (int i = 0; i + 1 < k; ++i) b.add_edge(i, i + 1);
  int next = k;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < legs[static_cast<std::size_t>(i)]; ++j) b.add_edge(i, next++);
  }
  return b.build();
}

PredictedValue predicted(std::string parameter, int value, std::string rule, std::string applicability) {
  return {std::move(parameter), value, std::move(rule), std::move(applicability)};
}

int exact_mp(const Graph& g) { return position_number(g, PathMode::monophonic).value; }

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& e : kNames) {
    if (e.family == f) return e.name;
  }
  return "?";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.family;
  }
  return std::nullopt;
}

std::string FamilySpec::to_string() const {
  std::string out(monopos::to_string(family));
  if (!params.empty() || !children.empty()) {
    out += ':';
    bool first = true;
    for (int p : params) {
      if (!first) out += ',';
      out += std::to_string(p);
      first = false;
    }
    for (const auto& c : children) {
      if (!first) out += ',';
      out += '{' + c.to_string() + '}';
      first = false;
    }
  }
  if (seed) out += ":seed=" + std::to_string(*seed);
  return out;
}

FamilySpec parse_family_spec(std::string_view text) { return SpecParser(text).parse_all(); }

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw DomainError("Rng::below(0)");
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % n;
}

// -- fixtures ----------------------------------------------------------------

Graph petersen_graph() {
  // Outer 5-cycle 0..4, spokes i ~ i+5, inner pentagram 5..9.
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return b.build();
}

Graph heawood_graph() {
  const std::array<int, 2> shifts{5, -5};
  return lcf_graph(14, shifts);
}

Graph mcgee_graph() {
  const std::array<int, 3> shifts{12, 7, -7};
  return lcf_graph(24, shifts);
}

// -- random families ---------------------------------------------------------

Graph random_tree(int n, Rng& rng) {
  if (n < 1) throw DomainError("random_tree requires n >= 1");
  if (n <= 2) return path_graph(n);
  std::vector<int> prufer(static_cast<std::size_t>(n - 2));
  for (int& x : prufer) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : prufer) ++degree[static_cast<std::size_t>(x)];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  GraphBuilder b(n);
  for (int x : prufer) {
    const int leaf = leaves.top();
    leaves.pop();
    b.add_edge(leaf, x);
    if (--degree[static_cast<std::size_t>(x)] == 1) leaves.push(x);
  }
  const int u = leaves.top();
  leaves.pop();
  b.add_edge(u, leaves.top());
  return b.build();
}

Graph random_unicyclic(int n, Rng& rng) {
  if (n < 3) throw DomainError("random_unicyclic requires n >= 3");
  Graph t = random_tree(n, rng);
  std::vector<Edge> non_edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!t.adjacent(u, v)) non_edges.emplace_back(u, v);
    }
  }
  auto es = t.edges();
  es.push_back(non_edges[rng.below(non_edges.size())]);
  return Graph::from_edges(n, es);
}

Graph random_block_graph(int n, Rng& rng) {
  if (n < 1) throw DomainError("random_block requires n >= 1");
  std::vector<Edge> es;
  int order = 1;
  while (order < n) {
    const int at = static_cast<int>(rng.below(static_cast<std::uint64_t>(order)));
    const int k = rng.between(1, std::min(4, n - order));
    std::vector<int> block{at};
    for (int i = 0; i < k; ++i) block.push_back(order + i);
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) es.emplace_back(block[i], block[j]);
    }
    order += k;
  }
  return Graph::from_edges(n, es);
}

Graph random_split_graph(int c, int i, Rng& rng) {
  if (c < 1 || i < 0) throw DomainError("random_split requires a non-empty clique");
  GraphBuilder b(c + i);
  for (int u = 0; u < c; ++u) {
    for (int v = u + 1; v < c; ++v) b.add_edge(u, v);
  }
  for (int x = c; x < c + i; ++x) {
    bool any = false;
    for (int u = 0; u < c; ++u) {
      if (rng.chance(1, 2)) {
        b.add_edge(x, u);
        any = true;
      }
    }
    if (!any) b.add_edge(x, static_cast<int>(rng.below(static_cast<std::uint64_t>(c))));
  }
  return b.build();
}

Graph random_bipartite_graph(int a, int b, int percent, Rng& rng) {
  if (a < 1 || b < 1) throw DomainError("random_bipartite requires both sides non-empty");
  if (percent < 0 || percent > 100) throw DomainError("random_bipartite edge percentage must lie in 0..100");
  GraphBuilder g(a + b);
  std::vector<int> in_a{0}, in_b{a};
  g.add_edge(0, a);
  std::vector<int> rest;
  for (int v = 1; v < a; ++v) rest.push_back(v);
  for (int v = a + 1; v < a + b; ++v) rest.push_back(v);
  rng.shuffle(rest);
  for (int v : rest) {
    if (v < a) {
      g.add_edge(v, in_b[rng.below(in_b.size())]);
      in_a.push_back(v);
    } else {
      g.add_edge(v, in_a[rng.below(in_a.size())]);
      in_b.push_back(v);
    }
  }
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) {
      if (rng.chance(static_cast<std::uint64_t>(percent), 100)) g.add_edge(u, v);
    }
  }
  return g.build();
}

// -- generate ----------------------------------------------------------------

Generated generate(const FamilySpec& spec_in) {
  FamilySpec spec = spec_in;
  if (is_random(spec.family) && !spec.seed) spec.seed = 0;
  const auto& p = spec.params;
  auto at = [&](std::size_t i) { return p[i]; };
  Rng rng(spec.seed.value_or(0));

  Graph g;
  switch (spec.family) {
    case Family::path:
      arity(spec, 1, 1);
      need(spec, at(0) >= 1, "order >= 1");
      order_cap(spec, at(0));
      g = path_graph(at(0));
      break;
    case Family::cycle:
      arity(spec, 1, 1);
      need(spec, at(0) >= 3, "order >= 3");
      order_cap(spec, at(0));
      g = cycle_graph(at(0));
      break;
    case Family::complete:
      arity(spec, 1, 1);
      need(spec, at(0) >= 1, "order >= 1");
      order_cap(spec, at(0));
      g = complete_graph(at(0));
      break;
    case Family::complete_multipartite: {
      arity(spec, 1, static_cast<std::size_t>(kMaxVertices));
      long long n = 0;
      for (int r : p) {
        need(spec, r >= 1, "every part non-empty");
        n += r;
      }
      order_cap(spec, n);
      g = complete_multipartite(p);
      break;
    }
    case Family::star:
      arity(spec, 1, 1);
      need(spec, at(0) >= 1, "at least one leaf");
      order_cap(spec, 1LL + at(0));
      g = star_graph(at(0));
      break;
    case Family::caterpillar: {
      arity(spec, 1, static_cast<std::size_t>(kMaxVertices));
      long long n = static_cast<long long>(p.size());
      for (int l : p) {
        need(spec, l >= 0, "non-negative leg counts");
        n += l;
      }
      order_cap(spec, n);
      g = caterpillar(p);
      break;
    }
    case Family::random_tree:
      arity(spec, 1, 1);
      need(spec, at(0) >= 1, "order >= 1");
      order_cap(spec, at(0));
      g = random_tree(at(0), rng);
      break;
    case Family::random_block:
      arity(spec, 1, 1);
      need(spec, at(0) >= 1, "order >= 1");
      order_cap(spec, at(0));
      g = random_block_graph(at(0), rng);
      break;
    case Family::random_unicyclic:
      arity(spec, 1, 1);
      need(spec, at(0) >= 3, "order >= 3");
      order_cap(spec, at(0));
      g = random_unicyclic(at(0), rng);
      break;
    case Family::hypercube:
      arity(spec, 1, 1);
      need(spec, at(0) >= 0 && at(0) <= 9, "0 <= k <= 9");
      g = hypercube(at(0));
      break;
    case Family::grid:
      arity(spec, 2, 2);
      need(spec, at(0) >= 1 && at(1) >= 1, "rows, cols >= 1");
      order_cap(spec, static_cast<long long>(at(0)) * at(1));
      g = grid_graph(at(0), at(1));
      break;
    case Family::half_wheel:
      arity(spec, 1, 1);
      need(spec, at(0) >= 2, "r >= 2");
      order_cap(spec, 2LL * at(0) + 1);
      g = half_wheel_with_pendants(at(0), 0);
      break;
    case Family::half_wheel_pendant: {
      arity(spec, 2, 2);
      const int b = at(0), a = at(1);
      need(spec, b >= a + 2 && a + 2 >= 5, "b >= a + 2 >= 5 (parameters b,a)");
      order_cap(spec, 2LL * (b - a + 2) + 1 + (a - 2));
      g = half_wheel_with_pendants(b - a + 2, a - 2);
      break;
    }
    case Family::wheel_pendant_W:
      arity(spec, 1, 1);
      need(spec, at(0) >= 3, "a >= 3");
      order_cap(spec, 4LL + at(0));
      g = wheel_pendant(at(0));
      break;
    case Family::R_graph:
      arity(spec, 2, 2);
      need(spec, at(0) >= 0 && at(1) >= 1, "r >= 0 and s >= 1");
      order_cap(spec, 1LL + at(0) + at(1));
      g = r_graph(at(0), at(1));
      break;
    case Family::P_graph:
      arity(spec, 2, 2);
      need(spec, at(0) >= 0 && at(1) >= 2, "r >= 0 and s >= 2");
      order_cap(spec, 2LL * at(1) + 1 + at(0));
      g = p_graph(at(0), at(1));
      break;
    case Family::G_abl:
      arity(spec, 3, 3);
      need(spec, 2 <= at(0) && at(0) <= at(1) && at(2) >= 1, "2 <= a <= b and l >= 1");
      order_cap(spec, 1LL + at(1) + at(2));
      g = g_abl(at(0), at(1), at(2));
      break;
    case Family::petersen:
      arity(spec, 0, 0);
      g = petersen_graph();
      break;
    case Family::heawood:
      arity(spec, 0, 0);
      g = heawood_graph();
      break;
    case Family::mcgee:
      arity(spec, 0, 0);
      g = mcgee_graph();
      break;
    case Family::random_split: {
      arity(spec, 1, 2);
      int c = 0, i = 0;
      if (p.size() == 1) {
        need(spec, at(0) >= 1, "order >= 1");
        order_cap(spec, at(0));
        c = rng.between(1, at(0));
        i = at(0) - c;
      } else {
        c = at(0);
        i = at(1);
        need(spec, c >= 1 && i >= 0, "clique size >= 1 and independent size >= 0");
        order_cap(spec, static_cast<long long>(c) + i);
      }
      g = random_split_graph(c, i, rng);
      break;
    }
    case Family::random_bipartite: {
      arity(spec, 2, 3);
      const int percent = p.size() == 3 ? at(2) : 30;
      need(spec, at(0) >= 1 && at(1) >= 1, "both sides non-empty");
      need(spec, percent >= 0 && percent <= 100, "edge percentage in 0..100");
      order_cap(spec, static_cast<long long>(at(0)) + at(1));
      g = random_bipartite_graph(at(0), at(1), percent, rng);
      break;
    }
    case Family::corona_of: {
      arity(spec, 2, 2);
      Generated outer = generate(spec.children[0]);
      Generated inner = generate(spec.children[1]);
      spec.children = {outer.spec, inner.spec};
      need(spec, is_connected(outer.graph), "a connected first factor");
      order_cap(spec, static_cast<long long>(outer.graph.order()) * (1 + inner.graph.order()));
      g = corona(outer.graph, inner.graph);
      break;
    }
    case Family::join_of: {
      arity(spec, 2, 2);
      Generated left = generate(spec.children[0]);
      Generated right = generate(spec.children[1]);
      spec.children = {left.spec, right.spec};
      order_cap(spec, static_cast<long long>(left.graph.order()) + right.graph.order());
      g = join(left.graph, right.graph);
      break;
    }
  }
  return {std::move(g), std::move(spec)};
}

// -- predictors --------------------------------------------------------------

PredictedValue predict_block_graph(const Graph& g) {
  if (!is_block_graph(g)) throw DomainError("predict_block_graph: not a block graph");
  const bool tree = is_tree(g);
  return predicted("mp", simplicial_vertices(g).size(), tree ? "tree-leaves" : "block-simplicial",
                   tree ? "tree: mp equals the number of leaves" : "block graph: mp equals the number of simplicial vertices");
}

std::vector<PredictedValue> predict_multipartite(std::vector<int> parts) {
  if (parts.empty()) throw DomainError("predict_multipartite: no parts");
  for (int r : parts) {
    if (r < 1) throw DomainError("predict_multipartite: empty part");
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  const int value = std::max(parts.front(), static_cast<int>(parts.size()));
  const std::string why = "complete multipartite: max(largest part, number of parts)";
  return {predicted("mp", value, "multipartite", why), predicted("gp", value, "multipartite", why)};
}

UnicyclicShape unicyclic_shape(const Graph& g) {
  const int n = g.order();
  if (n < 3 || static_cast<int>(g.size()) != n || !is_connected(g)) throw DomainError("unicyclic_shape: graph is not unicyclic");
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (deg[static_cast<std::size_t>(v)] == 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    removed[static_cast<std::size_t>(v)] = 1;
    g.neighbors(v).for_each([&](Vertex w) {
      if (!removed[static_cast<std::size_t>(w)] && --deg[static_cast<std::size_t>(w)] == 1) stack.push_back(w);
    });
  }
  UnicyclicShape shape;
  Vertex start = -1;
  for (Vertex v = 0; v < n && start < 0; ++v) {
    if (!removed[static_cast<std::size_t>(v)]) start = v;
  }
  Vertex prev = -1, cur = start;
  do {
    shape.cycle.push_back(cur);
    Vertex next = -1;
    g.neighbors(cur).for_each([&](Vertex w) {
      if (next < 0 && !removed[static_cast<std::size_t>(w)] && w != prev) next = w;
    });
    prev = cur;
    cur = next;
  } while (cur != start);

  const int s = static_cast<int>(shape.cycle.size());
  shape.leaves = leaves(g).size();
  for (int i = 0; i < s; ++i) {
    const Vertex vi = shape.cycle[static_cast<std::size_t>(i)];
    if (g.degree(vi) < 3) continue;
    shape.heavy.push_back(i);
    const Vertex before = shape.cycle[static_cast<std::size_t>((i + s - 1) % s)];
    const Vertex after = shape.cycle[static_cast<std::size_t>((i + 1) % s)];
    // T_i: component of G - {v_{i-1}, v_{i+1}} containing v_i.
    VertexSet comp(n, {vi});
    std::vector<Vertex> todo{vi};
    while (!todo.empty()) {
      Vertex x = todo.back();
      todo.pop_back();
      g.neighbors(x).for_each([&](Vertex y) {
        if (y != before && y != after && !comp.contains(y)) {
          comp.insert(y);
          todo.push_back(y);
        }
      });
    }
    bool path = true;
    comp.for_each([&](Vertex x) {
      if ((g.neighbors(x) & comp).size() > 2) path = false;
    });
    shape.tree_is_path.push_back(path);
    shape.hangs_as_path.push_back(path && g.degree(vi) == 3);
  }
  return shape;
}

PredictedValue predict_unicyclic(const Graph& g) {
  const UnicyclicShape sh = unicyclic_shape(g);
  const int s = static_cast<int>(sh.cycle.size());
  const int r = static_cast<int>(sh.heavy.size());
  const int l = sh.leaves;
  if (s == 3 && g.order() == 3) return predicted("mp", 3, "unicyclic", "the triangle");
  if (r == 1) return predicted("mp", l + 2, "unicyclic", "one cycle vertex of degree >= 3");
  if (r == 0) return predicted("mp", l + 2, "unicyclic", "a cycle of length >= 4");
  if (r == 2) {
    if (sh.hangs_as_path[0] || sh.hangs_as_path[1]) {
      return predicted("mp", l + 1, "unicyclic", "two heavy cycle vertices, one tree a path ending on the cycle");
    }
    const int i = sh.heavy[0], j = sh.heavy[1];
    if ((i + 1) % s == j || (j + 1) % s == i) {
      return predicted("mp", l + 1, "unicyclic", "two adjacent heavy cycle vertices");
    }
  }
  return predicted("mp", l, "unicyclic", "leaf count");
}

PredictedValue predict_corona(const Graph& g, const Graph& h) {
  if (!is_connected(g)) throw DomainError("predict_corona: first factor is disconnected");
  if (g.order() < 2) throw DomainError("predict_corona: K_1 corona H is K_1 join H, use predict_join");
  return predicted("mp", g.order() * exact_mp(h), "corona", "n(G) * mp(H) for connected G");
}

PredictedValue predict_corona_gp(const Graph& g, const Graph& h) {
  if (!is_connected(g)) throw DomainError("predict_corona_gp: first factor is disconnected");
  if (g.order() < 2) throw DomainError("predict_corona_gp: K_1 corona H is K_1 join H, use predict_join_gp");
  return predicted("gp", g.order() * alpha_omega(h).value, "corona-gp", "n(G) * alpha^omega(H) for connected G");
}

PredictedValue predict_join(const Graph& g, const Graph& h) {
  const int value = std::max({clique_number(g).value + clique_number(h).value, exact_mp(g), exact_mp(h)});
  return predicted("mp", value, "join", "max(omega(G) + omega(H), mp(G), mp(H))");
}

PredictedValue predict_join_gp(const Graph& g, const Graph& h) {
  const int value = std::max({clique_number(g).value + clique_number(h).value, alpha_omega(g).value, alpha_omega(h).value});
  return predicted("gp", value, "join-gp", "max(omega(G) + omega(H), alpha^omega(G), alpha^omega(H))");
}

PredictedValue predict_bipartite_complement(const Graph& g) {
  if (!is_connected(g)) throw DomainError("predict_bipartite_complement: graph is disconnected");
  auto bp = bipartition(g);
  if (!bp.parts) throw DomainError("predict_bipartite_complement: graph is not bipartite");
  const int value = std::max(independence_number(g).value, psi_uniform(g, *bp.parts).value);
  return predicted("mp", value, "bipartite-complement", "complement of a connected bipartite graph: max(alpha, psi)");
}

PredictedValue predict_tree_complement(const Graph& t) {
  if (!is_tree(t) || t.order() < 3) throw DomainError("predict_tree_complement: needs a tree of order >= 3");
  if (DistanceMatrix(t).diameter() <= 2) return predicted("mp", t.order(), "tree-complement", "tree of diameter <= 2");
  return predicted("mp", independence_number(t).value, "tree-complement", "tree of diameter >= 3: alpha(T)");
}

PredictedValue predict_grid_complement(int rows, int cols) {
  if (rows < 2 || cols < 2) throw DomainError("predict_grid_complement: needs rows, cols >= 2");
  if (rows == 2 && cols == 2) return predicted("mp", 4, "grid-complement", "2 x 2 grid");
  const int value = ((rows + 1) / 2) * ((cols + 1) / 2) + (rows / 2) * (cols / 2);
  return predicted("mp", value, "grid-complement", "alpha of the grid");
}

PredictedValue predict_hypercube_complement(int k) {
  if (k < 3) throw DomainError("predict_hypercube_complement: needs k >= 3");
  return predicted("mp", 1 << (k - 1), "hypercube-complement", "2^(k-1) for k >= 3");
}

std::vector<SplitPartition> all_split_partitions(const Graph& g) {
  auto base = split_partition(g);
  if (!base) return {};
  // With C0 a maximum clique every split partition has C = C0, C0 - x or
  // C0 - x + y.
  VertexSet c0 = base->clique;
  if (base->divided) c0.insert(*base->divided);
  const VertexSet i0 = g.vertices() - c0;
  std::vector<SplitPartition> out{{c0, i0, std::nullopt}};
  c0.for_each([&](Vertex x) {
    VertexSet c = c0;
    c.erase(x);
    if (!g.neighbors(x).intersects(i0)) out.push_back({c, g.vertices() - c, x});
    i0.for_each([&](Vertex y) {
      if (!c.subset_of(g.neighbors(y)) || g.neighbors(x).intersects(i0 - VertexSet(g.order(), {y}))) return;
      VertexSet swapped = c;
      swapped.insert(y);
      if (!g.adjacent(x, y)) out.push_back({swapped, g.vertices() - swapped, std::nullopt});
    });
  });
  return out;
}

SplitPrediction predict_split(const Graph& g) {
  if (!is_connected(g)) throw DomainError("predict_split: graph is disconnected");
  auto sp = split_partition(g);
  if (!sp) throw DomainError("predict_split: not a split graph");
  SplitPrediction out;
  auto partitions = all_split_partitions(g);
  out.partitions = static_cast<int>(partitions.size());
  int phi = 0;
  for (const auto& part : partitions) phi = std::max(phi, phi_separated(g, part).value);
  out.mp = predicted("mp", phi, "split-phi", "connected split graph: mp = phi, best over split partitions");
  out.omega = clique_number(g).value;
  out.alpha = independence_number(g).value;
  VertexSet c = sp->clique;
  VertexSet i = sp->independent;
  if (sp->divided) {
    c.erase(*sp->divided);
    i.erase(*sp->divided);
  }
  const int m = max_bipartite_matching(g, c, i).size();
  out.saturation = m == c.size() || m == i.size();
  return out;
}

std::vector<PredictedValue> predict_realization(const FamilySpec& spec) {
  const auto& p = spec.params;
  std::vector<PredictedValue> out;
  switch (spec.family) {
    case Family::half_wheel: {
      if (p.size() != 1 || p[0] < 4) domain(spec, "prediction needs r >= 4");
      out.push_back(predicted("mp", 2, "half-wheel", "r >= 4"));
      out.push_back(predicted("gp", p[0], "half-wheel", "r >= 4"));
      break;
    }
    case Family::half_wheel_pendant: {
      if (p.size() != 2 || !(p[0] >= p[1] + 2 && p[1] >= 3)) domain(spec, "prediction needs b >= a + 2 >= 5");
      out.push_back(predicted("mp", p[1], "half-wheel-pendant", "a - 2 pendants on the hub"));
      out.push_back(predicted("gp", p[0], "half-wheel-pendant", "a - 2 pendants on the hub"));
      break;
    }
    case Family::wheel_pendant_W: {
      if (p.size() != 1 || p[0] < 3) domain(spec, "prediction needs a >= 3");
      out.push_back(predicted("mp", p[0], "wheel-pendant", "a >= 3"));
      out.push_back(predicted("gp", p[0] + 1, "wheel-pendant", "a >= 3"));
      break;
    }
    case Family::R_graph: {
      if (p.size() != 2 || p[0] < 0 || p[1] < 1) domain(spec, "prediction needs r >= 0 and s >= 1");
      const int r = p[0], s = p[1];
      if (r >= 1) out.push_back(predicted("mp", r + s, "r-graph", "r >= 1 leaves on one vertex of K_(s+1)"));
      out.push_back(predicted("igp", r + 1, "r-graph", "r leaves on one vertex of K_(s+1)"));
      if (s >= 2) {
        out.push_back(predicted("diss", r + 2, "r-graph-diss", "s >= 2"));
        if (r >= 1) out.push_back(predicted("gp2", r + s, "r-graph-gp2", "r >= 1 and s >= 2"));
      }
      break;
    }
    case Family::P_graph: {
      if (p.size() != 2 || p[0] < 0 || p[1] < 2) domain(spec, "prediction needs r >= 0 and s >= 2");
      out.push_back(predicted("mp", p[0] + 2, "p-graph", "apex with r leaves over K_(s,s) minus a matching"));
      if (p[0] >= 1) out.push_back(predicted("igp", p[0] + p[1], "p-graph", "apex with r >= 1 leaves over K_(s,s) minus a matching"));
      break;
    }
    case Family::G_abl: {
      if (p.size() != 3 || !(2 <= p[0] && p[0] <= p[1] && p[2] >= 1)) domain(spec, "prediction needs 2 <= a <= b and l >= 1");
      out.push_back(predicted("hm", p[0], "g-abl", "X plus the path end generate the hull"));
      out.push_back(predicted("mp", p[1], "g-abl", "clique of order b"));
      break;
    }
    case Family::petersen:
      out.push_back(predicted("mp", 3, "cage", "Petersen graph"));
      out.push_back(predicted("gp", 6, "cage", "Petersen graph"));
      break;
    case Family::heawood:
      out.push_back(predicted("mp", 3, "cage", "Heawood graph"));
      break;
    case Family::mcgee:
      out.push_back(predicted("mp", 2, "cage", "McGee graph"));
      break;
    default:
      domain(spec, "not a realization family");
  }
  return out;
}

std::vector<PredictedValue> predictions_for(const Generated& gen) {
  const FamilySpec& spec = gen.spec;
  const Graph& g = gen.graph;
  std::vector<PredictedValue> out;
  switch (spec.family) {
    case Family::path:
    case Family::complete:
    case Family::star:
    case Family::caterpillar:
    case Family::random_tree:
    case Family::random_block:
      out.push_back(predict_block_graph(g));
      break;
    case Family::complete_multipartite:
      out = predict_multipartite(spec.params);
      break;
    case Family::cycle:
    case Family::random_unicyclic:
      out.push_back(predict_unicyclic(g));
      break;
    case Family::random_split:
      out.push_back(predict_split(g).mp);
      break;
    case Family::half_wheel:
      if (spec.params[0] >= 4) out = predict_realization(spec);
      break;
    case Family::half_wheel_pendant:
    case Family::wheel_pendant_W:
    case Family::P_graph:
    case Family::G_abl:
    case Family::petersen:
    case Family::heawood:
    case Family::mcgee:
      out = predict_realization(spec);
      break;
    case Family::R_graph:
      out = predict_realization(spec);
      break;
    case Family::corona_of: {
      Graph outer = generate(spec.children[0]).graph;
      Graph inner = generate(spec.children[1]).graph;
      const bool single = outer.order() == 1;
      out.push_back(single ? predict_join(outer, inner) : predict_corona(outer, inner));
      if (inner.order() <= kOracleCap) out.push_back(single ? predict_join_gp(outer, inner) : predict_corona_gp(outer, inner));
      break;
    }
    case Family::join_of: {
      Graph left = generate(spec.children[0]).graph;
      Graph right = generate(spec.children[1]).graph;
      out.push_back(predict_join(left, right));
      if (left.order() <= kOracleCap && right.order() <= kOracleCap) out.push_back(predict_join_gp(left, right));
      break;
    }
    case Family::hypercube:
    case Family::grid:
    case Family::random_bipartite:
      break;
  }
  return out;
}

FamilySpec realize_mp_gp(int a, int b) {
  if (a == 1 && b == 1) return parse_family_spec("complete:1");
  if (!(2 <= a && a <= b)) throw DomainError("realize_mp_gp: needs 2 <= a <= b or a = b = 1");
  std::string text;
  if (a == b) {
    text = "complete:" + std::to_string(a);
  } else if (a == 2) {
    text = b == 3 ? "cycle:5" : "half_wheel:" + std::to_string(b);
  } else if (b == a + 1) {
    text = "wheel_pendant_W:" + std::to_string(a);
  } else {
    text = "half_wheel_pendant:" + std::to_string(b) + "," + std::to_string(a);
  }
  return parse_family_spec(text);
}

FamilySpec realize_igp_mp(int a, int b) {
  if (a < 1 || b < 1 || (a >= 2 && b < 2)) throw DomainError("realize_igp_mp: needs 1 = a <= b or 2 <= a, b");
  if (a == 1) return parse_family_spec("complete:" + std::to_string(b));
  if (a <= b) return parse_family_spec("R_graph:" + std::to_string(a - 1) + "," + std::to_string(b - a + 1));
  // P(0, s) has igp = s + 1: with no leaves the apex joins the independent
  // side. P(0, 2) is the path on five vertices, so (3, 2) comes from C_6.
  if (a == 3 && b == 2) return parse_family_spec("cycle:6");
  if (b == 2) return parse_family_spec("P_graph:0," + std::to_string(a - 1));
  return parse_family_spec("P_graph:" + std::to_string(b - 2) + "," + std::to_string(a - b + 2));
}

}  // namespace monopos

#include "circstab/circulant.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <numbers>

namespace circstab {

namespace {

bool is_symmetric(const ResidueSet& s) {
  const int n = s.modulus();
  bool ok = true;
  s.for_each([&](int x) { ok = ok && s.contains(mod(-x, n)); });
  return ok;
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

ConnectionSet::ConnectionSet(ResidueSet members) : members_(members) {
  if (members_.contains(0)) throw DomainError("connection set contains 0");
  if (!is_symmetric(members_)) {
    throw DomainError("connection set " + members_.to_string() + " is not closed under negation");
  }
}

ConnectionSet::ConnectionSet(int n, const std::vector<int>& values)
    : ConnectionSet(ResidueSet::from_values(n, values)) {}

std::uint64_t even_residue_mask(int n) {
  return 0x5555555555555555ULL & modulus_mask(n);
}

ResidueSet ConnectionSet::even_part() const {
  return ResidueSet(order(), bits() & even_residue_mask(order()));
}

ResidueSet ConnectionSet::odd_part() const {
  return ResidueSet(order(), bits() & ~even_residue_mask(order()));
}

ConnectionSet ConnectionSet::parse(std::string_view literal) {
  const auto colon = literal.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("expected 'n:s1,s2,...', got '" + std::string(literal) + "'");
  }
  const int n = parse_int(literal.substr(0, colon), "order");
  if (n < 1) throw ParseError("order must be positive");
  require_modulus(n);

  ResidueSet s(n);
  std::string_view rest = literal.substr(colon + 1);
  int previous = 0;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const int x = parse_int(item, "residue");
    if (x == 0) throw ParseError("connection set may not contain 0");
    if (x < 0 || x >= n) {
      throw ParseError("residue " + std::to_string(x) + " out of range for n=" + std::to_string(n));
    }
    if (x <= previous) throw ParseError("residues must be ascending and distinct");
    previous = x;
    s.insert(x);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (rest.empty()) throw ParseError("trailing comma in connection set");
  }
  if (!is_symmetric(s)) throw ParseError("connection set " + s.to_string() + " is not symmetric");
  return ConnectionSet(s);
}

std::string ConnectionSet::to_literal() const {
  std::string out = std::to_string(order()) + ":";
  bool first = true;
  members_.for_each([&](int x) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  });
  return out;
}

ColoredGraph CirculantGraph::to_colored() const {
  const int n = order();
  ColoredGraph g(n);
  for (int u = 0; u < n; ++u) {
    connection.members().for_each([&](int s) {
      const int v = (u + s) % n;
      if (u < v) g.add_edge(u, v);
    });
  }
  return g;
}

bool is_connected(const CirculantGraph& x) {
  int g = x.order();
  x.connection.members().for_each([&](int s) { g = std::gcd(g, s); });
  return g == 1;
}

bool is_connected_bfs(const CirculantGraph& x) {
  const int n = x.order();
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    x.connection.members().for_each([&](int s) {
      const int v = (u + s) % n;
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        queue.push_back(v);
      }
    });
  }
  return reached == n;
}

bool is_bipartite(const CirculantGraph& x) {
  const int n = x.order();
  std::vector<int> side(n, -1);
  for (int start = 0; start < n; ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      bool ok = true;
      x.connection.members().for_each([&](int s) {
        const int v = (u + s) % n;
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool is_twin_free(const CirculantGraph& x) {
  const ResidueSet& s = x.connection.members();
  for (int h = 1; h < x.order(); ++h) {
    if (translate_set(s, h) == s) return false;
  }
  return true;
}

bool is_twin_free_by_neighborhoods(const CirculantGraph& x) {
  const ColoredGraph g = x.to_colored();
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (g.neighbors(u) == g.neighbors(v)) return false;
    }
  }
  return true;
}

ColoredGraph double_cover(const CirculantGraph& x, CoverLayout layout) {
  const int n = x.order();
  ColoredGraph g(2 * n);
  for (int v = 0; v < n; ++v) {
    x.connection.members().for_each([&](int s) {
      g.add_edge(cover_vertex(v, 0, n), cover_vertex((v + s) % n, 1, n));
    });
    if (layout == CoverLayout::layered) g.set_color(cover_vertex(v, 1, n), 1);
  }
  return g;
}

Aux2SPrime aux_2sprime_graph(const CirculantGraph& x) {
  const int n = x.order();
  if (n % 2 != 0) throw DomainError("aux_2sprime_graph requires even n");
  const ResidueSet& s = x.connection.members();
  Aux2SPrime aux{ResidueSet(n), ResidueSet(n), false, ColoredGraph(2 * n)};
  s.for_each([&](int t) {
    if (!s.contains((t + n / 2) % n)) aux.s_prime.insert(t);
  });
  aux.two_s_prime = scale_set(aux.s_prime, 2);
  aux.has_loops = aux.two_s_prime.contains(0);
  for (int layer = 0; layer < 2; ++layer) {
    for (int v = 0; v < n; ++v) {
      if (aux.has_loops) aux.graph.set_color(cover_vertex(v, layer, n), 1);
      aux.two_s_prime.for_each([&](int t) {
        if (t != 0) {
          aux.graph.add_edge(cover_vertex(v, layer, n), cover_vertex((v + t) % n, layer, n));
        }
      });
    }
  }
  return aux;
}

CirculantGraph even_subgraph(const CirculantGraph& x) {
  const int n = x.order();
  if (n % 2 != 0) throw DomainError("even_subgraph requires even n");
  ResidueSet half(n / 2);
  x.connection.even_part().for_each([&](int s) { half.insert(s / 2); });
  return CirculantGraph{ConnectionSet(half)};
}

std::vector<double> circulant_spectrum(const ConnectionSet& s) {
  const int n = s.order();
  std::vector<double> out(n, 0.0);
  for (int j = 0; j < n; ++j) {
    double sum = 0.0;
    s.members().for_each([&](int t) {
      sum += std::cos(2.0 * std::numbers::pi * static_cast<double>((j * t) % n) / n);
    });
    out[j] = sum;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool spectra_match(const std::vector<double>& a, const std::vector<double>& b, double tolerance) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tolerance) return false;
  }
  return true;
}

}  // namespace circstab

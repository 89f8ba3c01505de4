#ifndef ARTIN_COXETER_HPP
#define ARTIN_COXETER_HPP

// Coxeter graphs and the graph-level constructions used by the rest of the
// library: stars and relative positions, connected components, the
// infinity-to-3 relabelling, the bipartite gadget Γ(m) and folding onto a
// graph of small type.

#include <artin/detail/scan.hpp>
#include <artin/error.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace artin {

/// Vertices are identified by their position in the graph's total order.
using Vertex = std::size_t;

/// An entry m_{s,t} of a Coxeter matrix: a positive integer or infinity.
class Label {
 public:
  constexpr explicit Label(std::uint32_t value) : _value(value) {
    if (value == 0) {
      throw ContractError("Coxeter label must be positive");
    }
  }

  static constexpr Label infinity() noexcept { return Label(); }

  constexpr bool is_infinite() const noexcept { return _value == 0; }

  constexpr std::uint32_t value() const {
    if (is_infinite()) {
      throw ContractError("label is infinite");
    }
    return _value;
  }

  constexpr bool operator==(Label const&) const noexcept = default;

  constexpr bool operator==(std::uint32_t value) const noexcept {
    return _value == value;
  }

  std::string str() const {
    return is_infinite() ? std::string("inf") : std::to_string(_value);
  }

 private:
  constexpr Label() noexcept : _value(0) {}
  std::uint32_t _value;
};

/// A finite totally ordered vertex set with a symmetric Coxeter matrix.
///
/// Every off-diagonal pair carries a label (2 by default); the diagonal is 1.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;

  explicit CoxeterGraph(std::vector<std::string> names)
      : _names(std::move(names)),
        _labels(_names.size() * _names.size(), Label(2)) {
    for (std::size_t i = 0; i < _names.size(); ++i) {
      if (!detail::is_valid_name(_names[i])) {
        throw ContractError("invalid vertex name '" + _names[i] + "'");
      }
      auto [it, fresh] = _index.emplace(_names[i], i);
      if (!fresh) {
        throw ContractError("duplicate vertex name '" + _names[i] + "'");
      }
      _labels[i * _names.size() + i] = Label(1);
    }
  }

  std::size_t size() const noexcept { return _names.size(); }

  std::vector<std::string> const& names() const noexcept { return _names; }

  std::string const& name(Vertex v) const {
    check(v);
    return _names[v];
  }

  std::optional<Vertex> find(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Vertex vertex(std::string_view name) const {
    auto v = find(name);
    if (!v) {
      throw ContractError("unknown vertex '" + std::string(name) + "'");
    }
    return *v;
  }

  Label label(Vertex s, Vertex t) const {
    check(s);
    check(t);
    return _labels[s * size() + t];
  }

  void set_label(Vertex s, Vertex t, Label m) {
    check(s);
    check(t);
    if (s == t) {
      throw ContractError("diagonal Coxeter labels are fixed at 1");
    }
    if (!m.is_infinite() && m.value() < 2) {
      throw ContractError("off-diagonal Coxeter labels must be >= 2 or inf");
    }
    _labels[s * size() + t] = m;
    _labels[t * size() + s] = m;
  }

  /// True when s and t are distinct and m_{s,t} = 2.
  bool commute(Vertex s, Vertex t) const {
    return s != t && label(s, t) == 2;
  }

  /// Adjacency in the Coxeter graph: distinct and m_{s,t} != 2.
  bool adjacent(Vertex s, Vertex t) const {
    return s != t && !(label(s, t) == 2);
  }

  bool operator==(CoxeterGraph const& other) const {
    return _names == other._names && _labels == other._labels;
  }

  void check(Vertex v) const {
    if (v >= size()) {
      throw ContractError("vertex index " + std::to_string(v)
                          + " out of range");
    }
  }

 private:
  std::vector<std::string> _names;
  std::vector<Label> _labels;
  std::map<std::string, Vertex, std::less<>> _index;
};

/// The full subgraph on `vertices`, in the order given.
inline CoxeterGraph induced_subgraph(CoxeterGraph const& g,
                                     std::vector<Vertex> const& vertices) {
  std::vector<std::string> names;
  names.reserve(vertices.size());
  for (Vertex v : vertices) {
    names.push_back(g.name(v));
  }
  CoxeterGraph out(std::move(names));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      out.set_label(i, j, g.label(vertices[i], vertices[j]));
    }
  }
  return out;
}

/// St_s: s together with every t with m_{s,t} = 3, in graph order.
inline std::vector<Vertex> star(CoxeterGraph const& g, Vertex s) {
  g.check(s);
  std::vector<Vertex> out;
  for (Vertex t = 0; t < g.size(); ++t) {
    if (t == s || g.label(s, t) == 3) {
      out.push_back(t);
    }
  }
  return out;
}

/// pos(t; s) = i - j where St_s = (t_1 < ... < t_k), t = t_i, s = t_j.
inline std::ptrdiff_t relative_position(CoxeterGraph const& g, Vertex t,
                                        Vertex s) {
  auto st  = star(g, s);
  auto it  = std::find(st.begin(), st.end(), t);
  if (it == st.end()) {
    throw ContractError("vertex '" + g.name(t) + "' is not in the star of '"
                        + g.name(s) + "'");
  }
  auto js = std::find(st.begin(), st.end(), s);
  return (it - st.begin()) - (js - st.begin());
}

inline bool is_small_type(CoxeterGraph const& g) {
  for (Vertex s = 0; s < g.size(); ++s) {
    for (Vertex t = s + 1; t < g.size(); ++t) {
      Label m = g.label(s, t);
      if (!(m == 2) && !(m == 3)) {
        return false;
      }
    }
  }
  return true;
}

/// Vertex sets of the connected components under m_{s,t} != 2 adjacency.
/// Components are listed by their smallest vertex; each set is sorted.
inline std::vector<std::vector<Vertex>> component_vertex_sets(
    CoxeterGraph const& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool>                seen(g.size(), false);
  for (Vertex root = 0; root < g.size(); ++root) {
    if (seen[root]) {
      continue;
    }
    std::vector<Vertex> comp{root};
    seen[root] = true;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (Vertex u = 0; u < g.size(); ++u) {
        if (!seen[u] && g.adjacent(comp[k], u)) {
          seen[u] = true;
          comp.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::vector<CoxeterGraph> components(CoxeterGraph const& g) {
  std::vector<CoxeterGraph> out;
  for (auto const& vs : component_vertex_sets(g)) {
    out.push_back(induced_subgraph(g, vs));
  }
  return out;
}

inline bool is_connected(CoxeterGraph const& g) {
  return g.size() > 0 && component_vertex_sets(g).size() == 1;
}

/// Replace every infinite label by 3.
inline CoxeterGraph hat(CoxeterGraph const& g) {
  CoxeterGraph out = g;
  for (Vertex s = 0; s < g.size(); ++s) {
    for (Vertex t = s + 1; t < g.size(); ++t) {
      if (g.label(s, t).is_infinite()) {
        out.set_label(s, t, Label(3));
      }
    }
  }
  return out;
}

/// Γ(m) with its bipartition. `i_side[k]` is i_{k+1}, `j_side[k]` is j_{k+1}.
struct GammaGraph {
  CoxeterGraph        graph;
  std::vector<Vertex> i_side;
  std::vector<Vertex> j_side;
};

namespace detail {

// The two paths of Γ(m) as sequences of (side, index) with side 0 = I and
// side 1 = J. Path one alternates i_1, j_1, i_2, ...; path two starts on the
// J side with the vertices path one left unused.
inline std::vector<std::vector<std::pair<int, std::size_t>>> gamma_paths(
    std::uint32_t m) {
  std::size_t const len = m - 1;
  std::vector<std::vector<std::pair<int, std::size_t>>> paths(2);
  std::size_t next[2] = {0, 0};
  for (std::size_t k = 0; k < len; ++k) {
    int side = static_cast<int>(k % 2);
    paths[0].emplace_back(side, next[side]++);
  }
  for (std::size_t k = 0; k < len; ++k) {
    int side = static_cast<int>((k + 1) % 2);
    paths[1].emplace_back(side, next[side]++);
  }
  return paths;
}

}  // namespace detail

/// Γ(m): two disjoint copies of A_{m-1}, bipartite between I and J.
/// Vertices are ordered i1 .. i_{m-1}, j1 .. j_{m-1}.
inline GammaGraph gamma_m(std::uint32_t m) {
  if (m < 3) {
    throw ContractError("gamma_m requires m >= 3");
  }
  std::size_t const        len = m - 1;
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= len; ++k) {
    names.push_back("i" + std::to_string(k));
  }
  for (std::size_t k = 1; k <= len; ++k) {
    names.push_back("j" + std::to_string(k));
  }
  GammaGraph out{CoxeterGraph(std::move(names)), {}, {}};
  for (std::size_t k = 0; k < len; ++k) {
    out.i_side.push_back(k);
    out.j_side.push_back(len + k);
  }
  auto const vertex_of = [&](std::pair<int, std::size_t> p) {
    return p.first == 0 ? out.i_side[p.second] : out.j_side[p.second];
  };
  for (auto const& path : detail::gamma_paths(m)) {
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      out.graph.set_label(vertex_of(path[k]), vertex_of(path[k + 1]),
                          Label(3));
    }
  }
  return out;
}

/// A small-type graph Γ̃ together with the blocks I(s) of size N.
struct FoldedGraph {
  CoxeterGraph                     graph;
  std::vector<std::vector<Vertex>> blocks;  // blocks[s] = I(s) = s(1..N)
  std::size_t                      n_value = 0;
};

/// Fold a connected graph without infinite labels onto a graph of small type.
///
/// N = lcm{m_{s,t} - 1}. Vertex s(k) is named "s.k". For s < t with
/// m = m_{s,t} >= 3, I(s) and I(t) are cut into N/(m-1) consecutive blocks
/// of size m-1 and block b of I(s) is wired to block b of I(t) as the I and J
/// sides of Γ(m).
inline FoldedGraph fold(CoxeterGraph const& g) {
  if (g.size() < 2) {
    throw ContractError("fold requires at least two vertices");
  }
  if (!is_connected(g)) {
    throw ContractError("fold requires a connected graph");
  }
  std::size_t n_value = 1;
  for (Vertex s = 0; s < g.size(); ++s) {
    for (Vertex t = s + 1; t < g.size(); ++t) {
      Label m = g.label(s, t);
      if (m.is_infinite()) {
        throw ContractError("fold requires finite labels (apply hat first)");
      }
      n_value = std::lcm(n_value, static_cast<std::size_t>(m.value() - 1));
    }
  }
  std::vector<std::string>         names;
  std::vector<std::vector<Vertex>> blocks(g.size());
  for (Vertex s = 0; s < g.size(); ++s) {
    for (std::size_t k = 1; k <= n_value; ++k) {
      blocks[s].push_back(names.size());
      names.push_back(g.name(s) + "." + std::to_string(k));
    }
  }
  FoldedGraph out{CoxeterGraph(std::move(names)), std::move(blocks), n_value};
  for (Vertex s = 0; s < g.size(); ++s) {
    for (Vertex t = s + 1; t < g.size(); ++t) {
      std::uint32_t const m = g.label(s, t).value();
      if (m == 2) {
        continue;
      }
      std::size_t const len = m - 1;
      auto const        paths = detail::gamma_paths(m);
      for (std::size_t b = 0; b < n_value / len; ++b) {
        auto const vertex_of = [&](std::pair<int, std::size_t> p) {
          Vertex owner = p.first == 0 ? s : t;
          return out.blocks[owner][b * len + p.second];
        };
        for (auto const& path : paths) {
          for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            out.graph.set_label(vertex_of(path[k]), vertex_of(path[k + 1]),
                                Label(3));
          }
        }
      }
    }
  }
  return out;
}

////////////////////////////////////////////////////////////////////////////
// Text format
//
//   vertices: s1 s2 ... sn
//   s t m            # one line per pair with m != 2; m >= 2 or "inf"
//
// Blank lines and '#' comments are ignored anywhere. Unlisted pairs get 2.
////////////////////////////////////////////////////////////////////////////

inline CoxeterGraph parse_graph(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= text.size();) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  auto const strip = [](std::string_view line) {
    auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
  };
  auto const blank = [](std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c));
    });
  };

  std::size_t row = 0;
  while (row < lines.size() && blank(strip(lines[row]))) {
    ++row;
  }
  if (row == lines.size()) {
    throw ParseError("missing 'vertices:' header", row, 1);
  }

  detail::Scanner header(strip(lines[row]), row + 1);
  header.skip_blanks();
  std::string keyword;
  while (!header.eof() && header.peek() != ':'
         && detail::is_name_char(header.peek())) {
    keyword.push_back(header.get());
  }
  if (keyword != "vertices") {
    throw ParseError("expected 'vertices:' header", row + 1, 1);
  }
  header.expect(':');
  std::vector<std::string> names;
  for (header.skip_blanks(); !header.eof(); header.skip_blanks()) {
    std::size_t col = header.column();
    names.push_back(header.read_name());
    if (std::count(names.begin(), names.end(), names.back()) > 1) {
      throw ParseError("duplicate vertex '" + names.back() + "'", row + 1,
                       col);
    }
  }
  if (names.empty()) {
    header.fail("a graph needs at least one vertex");
  }
  CoxeterGraph                        g(std::move(names));
  std::map<std::pair<Vertex, Vertex>, std::size_t> seen;

  for (++row; row < lines.size(); ++row) {
    auto line = strip(lines[row]);
    if (blank(line)) {
      continue;
    }
    detail::Scanner sc(line, row + 1);
    Vertex          ends[2];
    for (Vertex& v : ends) {
      sc.skip_blanks();
      std::size_t col  = sc.column();
      std::string name = sc.read_name();
      auto        found = g.find(name);
      if (!found) {
        throw ParseError("unknown vertex '" + name + "'", row + 1, col);
      }
      v = *found;
    }
    if (ends[0] == ends[1]) {
      sc.fail("a label needs two distinct vertices");
    }
    sc.skip_blanks();
    std::size_t col = sc.column();
    std::string token;
    while (!sc.eof() && !std::isspace(static_cast<unsigned char>(sc.peek()))) {
      token.push_back(sc.get());
    }
    Label m = Label::infinity();
    if (token != "inf") {
      if (token.empty()
          || !std::all_of(token.begin(), token.end(), [](char c) {
               return std::isdigit(static_cast<unsigned char>(c));
             })) {
        throw ParseError("expected a label (integer >= 2 or 'inf')", row + 1,
                         col);
      }
      if (token.size() > 9 || std::stoul(token) < 2) {
        throw ParseError("label must be an integer in [2, 999999999] or 'inf'",
                         row + 1, col);
      }
      m = Label(static_cast<std::uint32_t>(std::stoul(token)));
    }
    sc.skip_blanks();
    if (!sc.eof()) {
      sc.fail("unexpected trailing input");
    }
    auto key = std::minmax(ends[0], ends[1]);
    if (auto it = seen.find(key); it != seen.end()) {
      throw ParseError("pair already labelled on line "
                           + std::to_string(it->second),
                       row + 1, 1);
    }
    seen.emplace(key, row + 1);
    g.set_label(ends[0], ends[1], m);
  }
  return g;
}

inline std::string format_graph(CoxeterGraph const& g) {
  std::ostringstream out;
  out << "vertices:";
  for (auto const& name : g.names()) {
    out << ' ' << name;
  }
  out << '\n';
  for (Vertex s = 0; s < g.size(); ++s) {
    for (Vertex t = s + 1; t < g.size(); ++t) {
      if (!(g.label(s, t) == 2)) {
        out << g.name(s) << ' ' << g.name(t) << ' ' << g.label(s, t).str()
            << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace artin

#endif

#ifndef ARTIN_GROUPOID_HPP
#define ARTIN_GROUPOID_HPP

// The oriented graph G(Γ) of a connected small-type Coxeter graph and the
// free groupoid on it. Paths compose left to right: xy traverses x, then y.
// Loop letters e_s represent α_s and arc letters f_{s,t} represent β_{s,t}.

#include <artin/coxeter.hpp>
#include <artin/detail/scan.hpp>
#include <artin/error.hpp>
#include <artin/integer.hpp>

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace artin {

/// An edge of G(Γ): the loop e_s (source == target) or the arc f_{s,t}.
struct Edge {
  Vertex source;
  Vertex target;

  static constexpr Edge loop(Vertex s) noexcept { return {s, s}; }
  static constexpr Edge arc(Vertex s, Vertex t) noexcept { return {s, t}; }

  constexpr bool is_loop() const noexcept { return source == target; }

  constexpr auto operator<=>(Edge const&) const = default;
};

/// A signed letter a^{±1}.
struct Letter {
  Edge edge;
  int  sign;

  bool operator==(Letter const&) const = default;
};

/// A maximal block a^k of one edge; k != 0, and k = ±1 for arcs.
struct Run {
  Edge    edge;
  Integer power;

  bool operator==(Run const&) const = default;

  Vertex start() const { return power > 0 ? edge.source : edge.target; }
  Vertex finish() const { return power > 0 ? edge.target : edge.source; }
};

class GroupoidPath;

namespace detail {
class PathBuilder;
}

/// A reduced path in G(Γ), run-length encoded. Constant paths keep their
/// vertex.
class GroupoidPath {
 public:
  static GroupoidPath constant(Vertex v) { return GroupoidPath(v, {}); }

  static GroupoidPath generator(Edge e) {
    return GroupoidPath(e.source, {Run{e, 1}});
  }

  Vertex source() const noexcept { return _source; }

  Vertex target() const noexcept {
    return _runs.empty() ? _source : _runs.back().finish();
  }

  bool is_constant() const noexcept { return _runs.empty(); }

  std::vector<Run> const& runs() const noexcept { return _runs; }

  /// Number of letters, counting a^k as |k|.
  Integer length() const {
    Integer n = 0;
    for (auto const& r : _runs) {
      n += abs(r.power);
    }
    return n;
  }

  bool operator==(GroupoidPath const&) const = default;

 private:
  friend class detail::PathBuilder;

  GroupoidPath(Vertex source, std::vector<Run> runs)
      : _source(source), _runs(std::move(runs)) {}

  Vertex           _source = 0;
  std::vector<Run> _runs;
};

namespace detail {

// Appends runs to a reduced path with free cancellation.
class PathBuilder {
 public:
  explicit PathBuilder(Vertex source) : _source(source) {}

  explicit PathBuilder(GroupoidPath const& start)
      : _source(start.source()), _runs(start.runs()) {}

  Vertex target() const {
    return _runs.empty() ? _source : _runs.back().finish();
  }

  void append(Run run) {
    if (run.power == 0) {
      return;
    }
    if (!run.edge.is_loop() && run.power != 1 && run.power != -1) {
      throw ContractError("an arc letter cannot be raised to a power");
    }
    if (run.start() != target()) {
      throw ContractError("non-composable paths");
    }
    if (!_runs.empty() && _runs.back().edge == run.edge) {
      _runs.back().power += run.power;
      if (_runs.back().power == 0) {
        _runs.pop_back();
      }
      return;
    }
    _runs.push_back(std::move(run));
  }

  void append(GroupoidPath const& path) {
    if (path.source() != target()) {
      throw ContractError("non-composable paths");
    }
    for (auto const& r : path.runs()) {
      append(r);
    }
  }

  GroupoidPath finish() && {
    return GroupoidPath(_source, std::move(_runs));
  }

 private:
  Vertex           _source;
  std::vector<Run> _runs;
};

}  // namespace detail

/// G(Γ) for a connected Coxeter graph of small type.
///
/// Edges are e_s for every s and f_{s,t} for every s < t with m_{s,t} = 3.
class OrientedGraph {
 public:
  CoxeterGraph const& coxeter() const noexcept { return _coxeter; }
  std::size_t         vertex_count() const noexcept { return _coxeter.size(); }

  /// Loops in vertex order, then arcs in lexicographic order.
  std::vector<Edge> const& edges() const noexcept { return _edges; }

  bool has_edge(Edge e) const {
    if (e.source >= vertex_count() || e.target >= vertex_count()) {
      return false;
    }
    return e.is_loop()
           || (e.source < e.target && _coxeter.label(e.source, e.target) == 3);
  }

  /// t ∈ St_s.
  bool in_star(Vertex s, Vertex t) const {
    return _star[s * vertex_count() + t];
  }

  friend OrientedGraph build_graph(CoxeterGraph const& g);

 private:
  explicit OrientedGraph(CoxeterGraph const& g) : _coxeter(g) {
    std::size_t const n = g.size();
    _star.assign(n * n, false);
    for (Vertex s = 0; s < n; ++s) {
      _edges.push_back(Edge::loop(s));
      for (Vertex t = 0; t < n; ++t) {
        _star[s * n + t] = (s == t || g.label(s, t) == 3);
      }
    }
    for (Vertex s = 0; s < n; ++s) {
      for (Vertex t = s + 1; t < n; ++t) {
        if (g.label(s, t) == 3) {
          _edges.push_back(Edge::arc(s, t));
        }
      }
    }
  }

  CoxeterGraph      _coxeter;
  std::vector<Edge> _edges;
  std::vector<bool> _star;
};

inline OrientedGraph build_graph(CoxeterGraph const& g) {
  if (!is_small_type(g)) {
    throw ContractError("G(Γ) requires a Coxeter graph of small type");
  }
  if (!is_connected(g)) {
    throw ContractError("G(Γ) requires a connected Coxeter graph");
  }
  return OrientedGraph(g);
}

inline GroupoidPath compose(GroupoidPath const& x, GroupoidPath const& y) {
  if (x.target() != y.source()) {
    throw ContractError("compose: target of the first path is not the "
                        "source of the second");
  }
  detail::PathBuilder b(x);
  b.append(y);
  return std::move(b).finish();
}

inline GroupoidPath invert(GroupoidPath const& x) {
  detail::PathBuilder b(x.target());
  for (auto it = x.runs().rbegin(); it != x.runs().rend(); ++it) {
    b.append(Run{it->edge, -it->power});
  }
  return std::move(b).finish();
}

/// x^k for a closed path x (any k) or any path (k in {-1, 0, 1}).
inline GroupoidPath power(GroupoidPath const& x, Integer const& k) {
  if (k == 1) {
    return x;
  }
  if (k == 0) {
    return GroupoidPath::constant(x.source());
  }
  if (k == -1) {
    return invert(x);
  }
  if (x.source() != x.target()) {
    throw ContractError("only closed paths have powers");
  }
  if (x.runs().size() == 1) {
    Run const& r = x.runs().front();
    detail::PathBuilder b(x.source());
    b.append(Run{r.edge, r.power * k});
    return std::move(b).finish();
  }
  GroupoidPath const  base = k > 0 ? x : invert(x);
  detail::PathBuilder b(x.source());
  for (Integer i = abs(k); i > 0; --i) {
    b.append(base);
  }
  return std::move(b).finish();
}

/// Free reduction of a composable letter sequence starting at `source`.
inline GroupoidPath reduce_path(OrientedGraph const& og, Vertex source,
                                std::span<Letter const> letters) {
  og.coxeter().check(source);
  detail::PathBuilder b(source);
  for (auto const& l : letters) {
    if (!og.has_edge(l.edge)) {
      throw ContractError("letter is not an edge of G(Γ)");
    }
    if (l.sign != 1 && l.sign != -1) {
      throw ContractError("letter sign must be +1 or -1");
    }
    b.append(Run{l.edge, l.sign});
  }
  return std::move(b).finish();
}

inline GroupoidPath reduce_path(OrientedGraph const&    og,
                                std::span<Letter const> letters) {
  if (letters.empty()) {
    throw ContractError("an empty letter sequence needs an explicit source");
  }
  auto const& first = letters.front();
  return reduce_path(og,
                     first.sign > 0 ? first.edge.source : first.edge.target,
                     letters);
}

/// The class of e_s and of f_{s,t}.
inline GroupoidPath alpha(Vertex s) {
  return GroupoidPath::generator(Edge::loop(s));
}

inline GroupoidPath beta(Vertex s, Vertex t) {
  if (s >= t) {
    throw ContractError("β_{s,t} requires s < t");
  }
  return GroupoidPath::generator(Edge::arc(s, t));
}

/// Membership in the subgroupoid B generated by the β's.
inline bool is_in_b(GroupoidPath const& x) {
  for (auto const& r : x.runs()) {
    if (r.edge.is_loop()) {
      return false;
    }
  }
  return true;
}

/// x = μ_0 α_{s_1}^{k_1} μ_1 ... α_{s_l}^{k_l} μ_l with every μ_i in B.
struct ReducedForm {
  struct Segment {
    Vertex       generator;  // s_i
    Integer      power;      // k_i
    GroupoidPath tail;       // μ_i

    bool operator==(Segment const&) const = default;
  };

  GroupoidPath         prefix;  // μ_0
  std::vector<Segment> segments;

  GroupoidPath reassemble() const {
    detail::PathBuilder b(prefix);
    for (auto const& seg : segments) {
      b.append(Run{Edge::loop(seg.generator), seg.power});
      b.append(seg.tail);
    }
    return std::move(b).finish();
  }

  bool operator==(ReducedForm const&) const = default;
};

inline ReducedForm reduced_form(GroupoidPath const& x) {
  auto const& runs = x.runs();
  std::size_t i    = 0;
  auto const  take_b = [&](Vertex from) {
    detail::PathBuilder b(from);
    while (i < runs.size() && !runs[i].edge.is_loop()) {
      b.append(runs[i++]);
    }
    return std::move(b).finish();
  };
  ReducedForm out{take_b(x.source()), {}};
  while (i < runs.size()) {
    Run const& r = runs[i++];
    out.segments.push_back({r.edge.source, r.power, take_b(r.edge.source)});
  }
  return out;
}

/// Some run α_s^k with |k| >= 2.
inline bool has_square(GroupoidPath const& x, Vertex s) {
  for (auto const& r : x.runs()) {
    if (r.edge == Edge::loop(s) && (r.power >= 2 || r.power <= -2)) {
      return true;
    }
  }
  return false;
}

/// If x is of type (μ, α_t^m) return μ = μ_0 μ_1 ... μ_l, otherwise nothing.
inline std::optional<GroupoidPath> type_projection(GroupoidPath const& x,
                                                   Vertex t, Integer const& m) {
  if (m == 0) {
    throw ContractError("type_projection requires m != 0");
  }
  detail::PathBuilder b(x.source());
  for (auto const& r : x.runs()) {
    if (r.edge.is_loop()) {
      if (r.edge.source != t || r.power % m != 0) {
        return std::nullopt;
      }
    } else {
      b.append(r);
    }
  }
  return std::move(b).finish();
}

////////////////////////////////////////////////////////////////////////////
// Text format: `@v` for the constant path at v, otherwise letters `e(s)` and
// `f(s,t)` with optional integer exponents `^k`, juxtaposed left to right.
////////////////////////////////////////////////////////////////////////////

inline GroupoidPath parse_path(OrientedGraph const& og, std::string_view text) {
  CoxeterGraph const& g = og.coxeter();
  detail::Scanner     sc(text);
  auto const          vertex = [&] {
    std::size_t line = sc.line(), col = sc.column();
    std::string name = sc.read_name();
    auto        v    = g.find(name);
    if (!v) {
      throw ParseError("unknown vertex '" + name + "'", line, col);
    }
    return *v;
  };
  sc.skip_space();
  if (sc.accept('@')) {
    Vertex v = vertex();
    sc.skip_space();
    if (!sc.eof()) {
      sc.fail("unexpected input after constant path");
    }
    return GroupoidPath::constant(v);
  }
  std::optional<detail::PathBuilder> b;
  while (!sc.eof()) {
    std::size_t line = sc.line(), col = sc.column();
    char        kind = sc.get();
    if (kind != 'e' && kind != 'f') {
      throw ParseError(std::string("expected 'e(' or 'f(', found '") + kind
                           + "'",
                       line, col);
    }
    sc.expect('(');
    sc.skip_blanks();
    Edge edge{};
    if (kind == 'e') {
      edge = Edge::loop(vertex());
    } else {
      Vertex s = vertex();
      sc.skip_blanks();
      sc.expect(',');
      sc.skip_blanks();
      Vertex t = vertex();
      edge     = Edge::arc(s, t);
      if (s == t || !og.has_edge(edge)) {
        throw ParseError("f(" + g.name(s) + "," + g.name(t)
                             + ") is not an edge of G(Γ)",
                         line, col);
      }
    }
    sc.skip_blanks();
    sc.expect(')');
    Integer k = 1;
    if (sc.accept('^')) {
      std::size_t kl = sc.line(), kc = sc.column();
      k              = sc.read_integer();
      if (k == 0) {
        throw ParseError("exponent must be nonzero", kl, kc);
      }
      if (!edge.is_loop() && k != 1 && k != -1) {
        throw ParseError("an arc letter cannot be raised to a power", kl, kc);
      }
    }
    Run run{edge, std::move(k)};
    if (!b) {
      b.emplace(run.start());
    }
    try {
      b->append(std::move(run));
    } catch (ContractError const&) {
      throw ParseError("letter does not start where the path ends", line,
                       col);
    }
    sc.skip_space();
  }
  if (!b) {
    sc.fail("empty path (write @v for a constant path)");
  }
  return std::move(*b).finish();
}

inline std::string format_path(CoxeterGraph const& g, GroupoidPath const& x) {
  if (x.is_constant()) {
    return "@" + g.name(x.source());
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < x.runs().size(); ++i) {
    Run const& r = x.runs()[i];
    if (i > 0) {
      out << ' ';
    }
    if (r.edge.is_loop()) {
      out << "e(" << g.name(r.edge.source) << ')';
    } else {
      out << "f(" << g.name(r.edge.source) << ',' << g.name(r.edge.target)
          << ')';
    }
    if (r.power != 1) {
      out << '^' << r.power;
    }
  }
  return out.str();
}

}  // namespace artin

#endif

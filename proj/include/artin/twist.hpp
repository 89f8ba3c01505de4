#ifndef ARTIN_TWIST_HPP
#define ARTIN_TWIST_HPP

// Action of powers of the Dehn twists τ_t on the free groupoid of G(Γ).
//
// The action on generators is given by explicit formulas; a path is mapped
// letter by letter and freely reduced. For m_{s,t} = 3:
//
//   τ_t^m(α_s)     = β_{s,t} α_t^m β_{s,t}^-1 α_s             (s < t)
//   τ_t^m(α_s)     = α_s β_{t,s}^-1 α_t^-m β_{t,s}            (t < s)
//
// and for r < t < s:
//
//   τ_t^m(β_{r,s}) = [β_{r,t} α_t^m β_{r,t}^-1] β_{r,s} [β_{t,s}^-1 α_t^-m β_{t,s}]
//
// where the left bracket is present iff t ∈ St_r and the right one iff
// t ∈ St_s. Every other generator is fixed, including β_{r,s} under τ_r and
// τ_s themselves.

#include <artin/coxeter.hpp>
#include <artin/error.hpp>
#include <artin/groupoid.hpp>
#include <artin/integer.hpp>
#include <artin/words.hpp>

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

namespace artin {

/// One factor τ_t^m, m != 0.
struct TwistFactor {
  Vertex  vertex;
  Integer power;

  bool operator==(TwistFactor const&) const = default;
};

/// τ_{t_l}^{m_l} ∘ ... ∘ τ_{t_1}^{m_1}, stored leftmost (applied last) first.
class TwistWord {
 public:
  TwistWord() = default;

  explicit TwistWord(std::vector<TwistFactor> factors)
      : _factors(std::move(factors)) {
    for (auto const& f : _factors) {
      if (f.power == 0) {
        throw ContractError("twist powers must be nonzero");
      }
    }
  }

  std::vector<TwistFactor> const& factors() const noexcept { return _factors; }
  std::size_t size() const noexcept { return _factors.size(); }
  bool        empty() const noexcept { return _factors.empty(); }

  bool operator==(TwistWord const&) const = default;

 private:
  std::vector<TwistFactor> _factors;
};

namespace detail {

inline void check_twist(OrientedGraph const& og, Vertex t, Integer const& m) {
  og.coxeter().check(t);
  if (m == 0) {
    throw ContractError("twist power must be nonzero");
  }
}

}  // namespace detail

/// Image of the positive letter `edge` under τ_t^m.
inline GroupoidPath twist_letter(OrientedGraph const& og, Vertex t,
                                 Integer const& m, Edge edge) {
  detail::check_twist(og, t, m);
  if (!og.has_edge(edge)) {
    throw ContractError("letter is not an edge of G(Γ)");
  }
  detail::PathBuilder b(edge.source);
  if (edge.is_loop()) {
    Vertex const s = edge.source;
    if (s == t || !og.in_star(s, t)) {
      b.append(Run{edge, 1});
    } else if (s < t) {
      b.append(Run{Edge::arc(s, t), 1});
      b.append(Run{Edge::loop(t), m});
      b.append(Run{Edge::arc(s, t), -1});
      b.append(Run{edge, 1});
    } else {
      b.append(Run{edge, 1});
      b.append(Run{Edge::arc(t, s), -1});
      b.append(Run{Edge::loop(t), -m});
      b.append(Run{Edge::arc(t, s), 1});
    }
    return std::move(b).finish();
  }
  Vertex const r = edge.source;
  Vertex const s = edge.target;
  bool const   left  = r < t && t < s && og.in_star(r, t);
  bool const   right = r < t && t < s && og.in_star(s, t);
  if (left) {
    b.append(Run{Edge::arc(r, t), 1});
    b.append(Run{Edge::loop(t), m});
    b.append(Run{Edge::arc(r, t), -1});
  }
  b.append(Run{edge, 1});
  if (right) {
    b.append(Run{Edge::arc(t, s), -1});
    b.append(Run{Edge::loop(t), -m});
    b.append(Run{Edge::arc(t, s), 1});
  }
  return std::move(b).finish();
}

/// τ_t^m(x). Endpoints are preserved.
inline GroupoidPath apply_twist(OrientedGraph const& og, Vertex t,
                                Integer const& m, GroupoidPath const& x) {
  detail::check_twist(og, t, m);
  og.coxeter().check(x.source());
  std::vector<std::pair<Edge, GroupoidPath>> cache;
  auto const image = [&](Edge e) -> GroupoidPath const& {
    for (auto const& [key, value] : cache) {
      if (key == e) {
        return value;
      }
    }
    cache.emplace_back(e, twist_letter(og, t, m, e));
    return cache.back().second;
  };
  detail::PathBuilder b(x.source());
  for (auto const& r : x.runs()) {
    b.append(power(image(r.edge), r.power));
  }
  return std::move(b).finish();
}

/// w(x): the rightmost factor acts first.
inline GroupoidPath apply_word(OrientedGraph const& og, TwistWord const& w,
                               GroupoidPath x) {
  for (auto it = w.factors().rbegin(); it != w.factors().rend(); ++it) {
    x = apply_twist(og, it->vertex, it->power, x);
  }
  return x;
}

/// T_s^p ↦ τ_s^{p m_s}, preserving order.
inline TwistWord raag_action(CoxeterGraph const&       g,
                             ExponentAssignment const& exponents,
                             RaagExpression const&     w) {
  check_generators(g, w);
  if (exponents.size() != g.size()) {
    throw ContractError("exponent assignment does not match the graph");
  }
  std::vector<TwistFactor> out;
  out.reserve(w.size());
  for (auto const& x : w) {
    out.push_back({x.generator, x.exponent * exponents[x.generator]});
  }
  return TwistWord(std::move(out));
}

/// Twist words share the expression syntax: `t^m` stands for τ_t^m.
inline TwistWord parse_twist_word(CoxeterGraph const& g,
                                  std::string_view    text) {
  std::vector<TwistFactor> out;
  for (auto const& x : parse_expression(g, text)) {
    out.push_back({x.generator, x.exponent});
  }
  return TwistWord(std::move(out));
}

inline std::string format_twist_word(CoxeterGraph const& g,
                                     TwistWord const&    w) {
  std::vector<Syllable> xs;
  for (auto const& f : w.factors()) {
    xs.push_back({f.vertex, f.power});
  }
  return format_expression(g, RaagExpression(std::move(xs)));
}

}  // namespace artin

#endif

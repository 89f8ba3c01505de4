#ifndef ARTIN_WORDS_HPP
#define ARTIN_WORDS_HPP

// Expressions in the generators T_s of the right-angled Artin group H(Γ):
// elementary M-operations, M-reduction, II-equivalence and "ends in".
//
// An expression W = (T_{s_l}^{p_l}, ..., T_{s_1}^{p_1}) is stored in written
// order: syllables()[0] is T_{s_l}^{p_l}, the factor applied last.

#include <artin/coxeter.hpp>
#include <artin/detail/scan.hpp>
#include <artin/error.hpp>
#include <artin/integer.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace artin {

struct Syllable {
  Vertex  generator;
  Integer exponent;

  bool operator==(Syllable const&) const = default;
};

class RaagExpression {
 public:
  using const_iterator = std::vector<Syllable>::const_iterator;

  RaagExpression() = default;

  explicit RaagExpression(std::vector<Syllable> syllables)
      : _syllables(std::move(syllables)) {
    for (auto const& x : _syllables) {
      check_exponent(x.exponent);
    }
  }

  RaagExpression(std::initializer_list<Syllable> syllables)
      : RaagExpression(std::vector<Syllable>(syllables)) {}

  std::size_t size() const noexcept { return _syllables.size(); }
  bool        empty() const noexcept { return _syllables.empty(); }

  Syllable const& operator[](std::size_t i) const { return _syllables[i]; }

  const_iterator begin() const noexcept { return _syllables.begin(); }
  const_iterator end() const noexcept { return _syllables.end(); }

  std::vector<Syllable> const& syllables() const noexcept {
    return _syllables;
  }

  void push_back(Syllable x) {
    check_exponent(x.exponent);
    _syllables.push_back(std::move(x));
  }

  bool operator==(RaagExpression const&) const = default;

 private:
  static void check_exponent(Integer const& p) {
    if (p == 0) {
      throw ContractError("syllable exponents must be nonzero");
    }
  }

  std::vector<Syllable> _syllables;
};

/// The integers m_s >= 2 defining T_s = σ_s^{m_s}.
class ExponentAssignment {
 public:
  explicit ExponentAssignment(std::size_t vertex_count, Integer value = 2)
      : _values(vertex_count, value) {
    check(value);
  }

  std::size_t size() const noexcept { return _values.size(); }

  Integer const& operator[](Vertex s) const {
    if (s >= _values.size()) {
      throw ContractError("no exponent for vertex index " + std::to_string(s));
    }
    return _values[s];
  }

  void set(Vertex s, Integer value) {
    check(value);
    if (s >= _values.size()) {
      throw ContractError("no exponent for vertex index " + std::to_string(s));
    }
    _values[s] = std::move(value);
  }

 private:
  static void check(Integer const& value) {
    if (value < 2) {
      throw ContractError("exponent assignment values must be >= 2");
    }
  }

  std::vector<Integer> _values;
};

inline void check_generators(CoxeterGraph const& g, RaagExpression const& w) {
  for (auto const& x : w) {
    g.check(x.generator);
  }
}

/// The inverse expression: reversed with negated exponents.
inline RaagExpression inverse(RaagExpression const& w) {
  std::vector<Syllable> out(w.syllables().rbegin(), w.syllables().rend());
  for (auto& x : out) {
    x.exponent = -x.exponent;
  }
  return RaagExpression(std::move(out));
}

inline RaagExpression concatenate(RaagExpression const& left,
                                  RaagExpression const& right) {
  std::vector<Syllable> out = left.syllables();
  out.insert(out.end(), right.begin(), right.end());
  return RaagExpression(std::move(out));
}

/// Keep only the syllables whose generator is in `keep`, renumbered through
/// `keep`'s positions (the convention of induced_subgraph).
inline RaagExpression restrict_to(RaagExpression const&      w,
                                  std::vector<Vertex> const& keep) {
  RaagExpression out;
  for (auto const& x : w) {
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (keep[i] == x.generator) {
        out.push_back({i, x.exponent});
        break;
      }
    }
  }
  return out;
}

////////////////////////////////////////////////////////////////////////////
// Elementary M-operations
////////////////////////////////////////////////////////////////////////////

/// An elementary M-operation on the written pair (position, position + 1).
struct MOperation {
  enum class Kind { merge, swap };
  Kind        kind;
  std::size_t position;

  bool operator==(MOperation const&) const = default;
};

inline RaagExpression apply_m_operation(CoxeterGraph const&   g,
                                        RaagExpression const& w,
                                        MOperation            op) {
  if (op.position + 1 >= w.size()) {
    throw ContractError("M-operation position out of range");
  }
  auto        xs = w.syllables();
  auto const& a  = xs[op.position];
  auto const& b  = xs[op.position + 1];
  if (op.kind == MOperation::Kind::swap) {
    if (!g.commute(a.generator, b.generator)) {
      throw ContractError("type II move on non-commuting syllables");
    }
    std::swap(xs[op.position], xs[op.position + 1]);
  } else {
    if (a.generator != b.generator) {
      throw ContractError("type I move on distinct generators");
    }
    Integer sum = a.exponent + b.exponent;
    xs.erase(xs.begin() + op.position + 1);
    if (sum == 0) {
      xs.erase(xs.begin() + op.position);
    } else {
      xs[op.position].exponent = sum;
    }
  }
  return RaagExpression(std::move(xs));
}

/// For all i < j with s_i = s_j some k strictly between has m_{s_i,s_k} != 2.
inline bool is_m_reduced(CoxeterGraph const& g, RaagExpression const& w) {
  check_generators(g, w);
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      Vertex s = w[i].generator;
      if (w[j].generator == s) {
        return false;
      }
      if (!g.commute(s, w[j].generator)) {
        break;
      }
    }
  }
  return true;
}

struct TracedReduction {
  RaagExpression          result;
  std::vector<MOperation> trace;  // replays `w` into `result`
};

/// Leftmost-first M-reduction, recording the elementary operations used.
///
/// The leftmost syllable with a same-generator partner reachable through
/// commuting syllables absorbs that partner: the partner is swapped leftwards
/// until adjacent and then merged (or both are deleted when the exponents
/// cancel).
inline TracedReduction m_reduce_traced(CoxeterGraph const&   g,
                                       RaagExpression const& w) {
  check_generators(g, w);
  TracedReduction       out;
  std::vector<Syllable> xs = w.syllables();
  bool                  progress = true;
  while (progress) {
    progress = false;
    for (std::size_t a = 0; a < xs.size() && !progress; ++a) {
      Vertex s = xs[a].generator;
      for (std::size_t b = a + 1; b < xs.size(); ++b) {
        if (xs[b].generator == s) {
          for (std::size_t p = b - 1; p > a; --p) {
            out.trace.push_back({MOperation::Kind::swap, p});
            std::swap(xs[p], xs[p + 1]);
          }
          out.trace.push_back({MOperation::Kind::merge, a});
          Integer sum = xs[a].exponent + xs[a + 1].exponent;
          xs.erase(xs.begin() + a + 1);
          if (sum == 0) {
            xs.erase(xs.begin() + a);
          } else {
            xs[a].exponent = std::move(sum);
          }
          progress = true;
          break;
        }
        if (!g.commute(s, xs[b].generator)) {
          break;
        }
      }
    }
  }
  out.result = RaagExpression(std::move(xs));
  return out;
}

inline RaagExpression m_reduce(CoxeterGraph const& g, RaagExpression const& w) {
  return m_reduce_traced(g, w).result;
}

/// The word problem in H(Γ).
inline bool is_trivial_raag(CoxeterGraph const& g, RaagExpression const& w) {
  return m_reduce(g, w).empty();
}

/// Whether the M-reduced expression w is II-equivalent to one whose leftmost
/// syllable has generator s: some syllable on s commutes with everything
/// written to its left.
inline bool ends_in(CoxeterGraph const& g, RaagExpression const& w, Vertex s) {
  g.check(s);
  if (!is_m_reduced(g, w)) {
    throw ContractError("ends_in requires an M-reduced expression");
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].generator == s) {
      return true;
    }
    if (!g.commute(s, w[i].generator)) {
      return false;
    }
  }
  return false;
}

/// Decided by projections: for every generator pair {s, t} with s = t or
/// m_{s,t} != 2 the subsequences of syllables on {s, t} must agree.
inline bool ii_equivalent(CoxeterGraph const& g, RaagExpression const& w1,
                          RaagExpression const& w2) {
  check_generators(g, w1);
  check_generators(g, w2);
  if (w1.size() != w2.size()) {
    return false;
  }
  std::vector<bool> used(g.size(), false);
  for (auto const& x : w1) {
    used[x.generator] = true;
  }
  for (auto const& x : w2) {
    used[x.generator] = true;
  }
  auto const next = [](RaagExpression const& w, std::size_t i, Vertex s,
                       Vertex t) {
    while (i < w.size() && w[i].generator != s && w[i].generator != t) {
      ++i;
    }
    return i;
  };
  for (Vertex s = 0; s < g.size(); ++s) {
    if (!used[s]) {
      continue;
    }
    for (Vertex t = s; t < g.size(); ++t) {
      if (!used[t] || g.commute(s, t)) {
        continue;
      }
      std::size_t i = next(w1, 0, s, t);
      std::size_t j = next(w2, 0, s, t);
      while (i < w1.size() && j < w2.size()) {
        if (!(w1[i] == w2[j])) {
          return false;
        }
        i = next(w1, i + 1, s, t);
        j = next(w2, j + 1, s, t);
      }
      if (i < w1.size() || j < w2.size()) {
        return false;
      }
    }
  }
  return true;
}

/// The split characterization of M-reduced expressions at index r
/// (2 <= r <= l, counted from the right as in W = (T_{s_l}, ..., T_{s_1})):
/// U = (T_{s_r}^{-p_r}, ..., T_{s_l}^{-p_l}) and V = (T_{s_{r-1}}, ..., T_{s_1})
/// are M-reduced and do not both end in a common generator.
inline bool lemma_mred_split(CoxeterGraph const& g, RaagExpression const& w,
                             std::size_t r) {
  check_generators(g, w);
  std::size_t const len = w.size();
  if (r < 2 || r > len) {
    throw ContractError("split index must satisfy 2 <= r <= length");
  }
  // Index i, counted from the right, lives at written position len - i.
  std::size_t const    cut = len - r + 1;
  std::vector<Syllable> left(w.begin(), w.begin() + cut);
  std::vector<Syllable> right(w.begin() + cut, w.end());
  RaagExpression        u = inverse(RaagExpression(std::move(left)));
  RaagExpression        v(std::move(right));
  if (!is_m_reduced(g, u) || !is_m_reduced(g, v)) {
    return false;
  }
  for (Vertex s = 0; s < g.size(); ++s) {
    if (ends_in(g, u, s) && ends_in(g, v, s)) {
      return false;
    }
  }
  return true;
}

////////////////////////////////////////////////////////////////////////////
// Text format: whitespace separated syllables `s^p` (`^1` optional),
// leftmost = applied last. The empty expression is written `()`.
////////////////////////////////////////////////////////////////////////////

inline RaagExpression parse_expression(CoxeterGraph const& g,
                                       std::string_view    text) {
  detail::Scanner sc(text);
  RaagExpression  out;
  sc.skip_space();
  if (sc.accept('(')) {
    sc.skip_space();
    sc.expect(')');
    sc.skip_space();
    if (!sc.eof()) {
      sc.fail("unexpected input after '()'");
    }
    return out;
  }
  while (!sc.eof()) {
    std::size_t line = sc.line(), col = sc.column();
    std::string name = sc.read_name();
    auto        v    = g.find(name);
    if (!v) {
      throw ParseError("unknown generator '" + name + "'", line, col);
    }
    Integer p = 1;
    if (sc.accept('^')) {
      line = sc.line();
      col  = sc.column();
      p    = sc.read_integer();
      if (p == 0) {
        throw ParseError("exponent must be nonzero", line, col);
      }
    }
    if (!sc.eof() && !std::isspace(static_cast<unsigned char>(sc.peek()))) {
      sc.fail(std::string("unexpected '") + sc.peek() + "'");
    }
    out.push_back({*v, std::move(p)});
    sc.skip_space();
  }
  return out;
}

inline std::string format_expression(CoxeterGraph const&   g,
                                     RaagExpression const& w) {
  if (w.empty()) {
    return "()";
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out << ' ';
    }
    out << g.name(w[i].generator);
    if (w[i].exponent != 1) {
      out << '^' << w[i].exponent;
    }
  }
  return out.str();
}

/// `s=m,t=m,...`; vertices not mentioned get `fallback`.
inline ExponentAssignment parse_exponents(CoxeterGraph const& g,
                                          std::string_view    text,
                                          Integer             fallback = 2) {
  ExponentAssignment out(g.size(), fallback);
  detail::Scanner    sc(text);
  sc.skip_space();
  while (!sc.eof()) {
    std::size_t line = sc.line(), col = sc.column();
    std::string name = sc.read_name();
    auto        v    = g.find(name);
    if (!v) {
      throw ParseError("unknown vertex '" + name + "'", line, col);
    }
    sc.expect('=');
    line      = sc.line();
    col       = sc.column();
    Integer m = sc.read_integer();
    if (m < 2) {
      throw ParseError("exponent must be >= 2", line, col);
    }
    out.set(*v, std::move(m));
    sc.skip_space();
    if (!sc.eof()) {
      sc.expect(',');
      sc.skip_space();
    }
  }
  return out;
}

}  // namespace artin

#endif

#ifndef ARTIN_VERIFY_HPP
#define ARTIN_VERIFY_HPP

// Words in the Artin generators, the relation and Garside checks, the
// folding homomorphisms and the nontriviality certificates for the map
// H(Γ) → A(Γ), T_s ↦ σ_s^{m_s}.

#include <artin/coxeter.hpp>
#include <artin/error.hpp>
#include <artin/groupoid.hpp>
#include <artin/integer.hpp>
#include <artin/twist.hpp>
#include <artin/words.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace artin {

/// A word in the σ_s, stored leftmost first. Relations are never applied.
class ArtinWord {
 public:
  ArtinWord() = default;

  explicit ArtinWord(std::vector<Syllable> letters)
      : _letters(std::move(letters)) {
    for (auto const& x : _letters) {
      if (x.exponent == 0) {
        throw ContractError("Artin word exponents must be nonzero");
      }
    }
  }

  ArtinWord(std::initializer_list<Syllable> letters)
      : ArtinWord(std::vector<Syllable>(letters)) {}

  std::vector<Syllable> const& letters() const noexcept { return _letters; }
  std::size_t size() const noexcept { return _letters.size(); }
  bool        empty() const noexcept { return _letters.empty(); }

  bool operator==(ArtinWord const&) const = default;

 private:
  std::vector<Syllable> _letters;
};

inline ArtinWord concatenate(ArtinWord const& left, ArtinWord const& right) {
  auto out = left.letters();
  out.insert(out.end(), right.letters().begin(), right.letters().end());
  return ArtinWord(std::move(out));
}

/// σ_s^p ↦ τ_s^p.
inline TwistWord to_twist_word(ArtinWord const& w) {
  std::vector<TwistFactor> out;
  for (auto const& x : w.letters()) {
    out.push_back({x.generator, x.exponent});
  }
  return TwistWord(std::move(out));
}

/// prod(x, y; m) = (xy)^{m/2} for even m, x(yx)^{(m-1)/2} for odd m.
template <class Word>
Word prod_word(Word const& x, Word const& y, std::size_t m) {
  if (m < 1) {
    throw ContractError("prod requires m >= 1");
  }
  Word out;
  for (std::size_t i = 0; i < m; ++i) {
    out = concatenate(out, i % 2 == 0 ? x : y);
  }
  return out;
}

/// Whether two twist words act identically on every generator of G(Γ).
inline bool acts_identically(OrientedGraph const& og, TwistWord const& a,
                             TwistWord const& b) {
  for (Edge e : og.edges()) {
    auto x = GroupoidPath::generator(e);
    if (apply_word(og, a, x) != apply_word(og, b, x)) {
      return false;
    }
  }
  return true;
}

/// Whether a twist word fixes every generator of G(Γ).
inline bool acts_trivially(OrientedGraph const& og, TwistWord const& w) {
  return acts_identically(og, w, TwistWord());
}

/// A failure of the commutation or braid relation on one generator.
struct RelationFailure {
  Vertex s;
  Vertex t;
  Edge   generator;
};

/// τ_s τ_t = τ_t τ_s when m_{s,t} = 2 and τ_s τ_t τ_s = τ_t τ_s τ_t when
/// m_{s,t} = 3, checked on every generator. Returns the failures.
inline std::vector<RelationFailure> check_relations(OrientedGraph const& og) {
  std::vector<RelationFailure> out;
  CoxeterGraph const&          g = og.coxeter();
  for (Vertex s = 0; s < g.size(); ++s) {
    for (Vertex t = s + 1; t < g.size(); ++t) {
      std::size_t const m = g.label(s, t).value();
      TwistWord const lhs({{s, 1}, {t, 1}, {s, 1}});
      TwistWord const rhs({{t, 1}, {s, 1}, {t, 1}});
      TwistWord const st({{s, 1}, {t, 1}});
      TwistWord const ts({{t, 1}, {s, 1}});
      for (Edge e : og.edges()) {
        auto x  = GroupoidPath::generator(e);
        bool ok = m == 2 ? apply_word(og, st, x) == apply_word(og, ts, x)
                         : apply_word(og, lhs, x) == apply_word(og, rhs, x);
        if (!ok) {
          out.push_back({s, t, e});
        }
      }
    }
  }
  return out;
}

/// The path graph A_n on vertices named 1, ..., n, consecutive labels 3.
inline CoxeterGraph braid_graph(std::size_t n) {
  if (n < 1) {
    throw ContractError("A_n requires n >= 1");
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back(std::to_string(i));
  }
  CoxeterGraph g(std::move(names));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g.set_label(i, i + 1, Label(3));
  }
  return g;
}

/// prod(P, Q; n+1) and prod(Q, P; n+1) in A(A_n) with P the product of the
/// odd-numbered generators and Q of the even-numbered ones.
inline std::pair<ArtinWord, ArtinWord> garside_words(std::size_t n) {
  std::vector<Syllable> p;
  std::vector<Syllable> q;
  for (Vertex v = 0; v < n; ++v) {
    (v % 2 == 0 ? p : q).push_back({v, 1});
  }
  ArtinWord const pw(std::move(p));
  ArtinWord const qw(std::move(q));
  return {prod_word(pw, qw, n + 1), prod_word(qw, pw, n + 1)};
}

/// Both sides of the Garside identity act identically on G(A_n).
inline bool check_garside(std::size_t n) {
  if (n < 1) {
    throw ContractError("check_garside requires n >= 1");
  }
  auto const og           = build_graph(braid_graph(n));
  auto const [left, right] = garside_words(n);
  return acts_identically(og, to_twist_word(left), to_twist_word(right));
}

/// prod(α, β; m) = prod(β, α; m) in A(Γ(m)) with α = ∏_I σ_i, β = ∏_J σ_j,
/// checked on the groupoid of each connected component.
inline bool check_gamma_identity(std::uint32_t m) {
  GammaGraph const      gm = gamma_m(m);
  std::vector<Syllable> a;
  std::vector<Syllable> b;
  for (Vertex v : gm.i_side) {
    a.push_back({v, 1});
  }
  for (Vertex v : gm.j_side) {
    b.push_back({v, 1});
  }
  ArtinWord const left  = prod_word(ArtinWord(a), ArtinWord(b), m);
  ArtinWord const right = prod_word(ArtinWord(b), ArtinWord(a), m);
  auto const      restrict_word = [](ArtinWord const&           w,
                                std::vector<Vertex> const& keep) {
    std::vector<TwistFactor> out;
    for (auto const& x : w.letters()) {
      for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] == x.generator) {
          out.push_back({i, x.exponent});
        }
      }
    }
    return TwistWord(std::move(out));
  };
  for (auto const& comp : component_vertex_sets(gm.graph)) {
    auto const og = build_graph(induced_subgraph(gm.graph, comp));
    if (!acts_identically(og, restrict_word(left, comp),
                          restrict_word(right, comp))) {
      return false;
    }
  }
  return true;
}

namespace detail {

inline void check_fold_generators(FoldedGraph const&           fold,
                                  std::vector<Syllable> const& xs) {
  for (auto const& x : xs) {
    if (x.generator >= fold.blocks.size()) {
      throw ContractError("generator is not a vertex of the folded graph");
    }
  }
}

inline std::vector<Syllable> block_expand(FoldedGraph const&           fold,
                                          std::vector<Syllable> const& xs) {
  check_fold_generators(fold, xs);
  std::vector<Syllable> out;
  out.reserve(xs.size() * fold.n_value);
  for (auto const& x : xs) {
    auto const& block = fold.blocks[x.generator];
    for (auto it = block.rbegin(); it != block.rend(); ++it) {
      out.push_back({*it, x.exponent});
    }
  }
  return out;
}

}  // namespace detail

/// ψ: T_s^p ↦ T_{s(N)}^p ... T_{s(1)}^p.
inline RaagExpression psi_expand(FoldedGraph const&    fold,
                                 RaagExpression const& w) {
  return RaagExpression(detail::block_expand(fold, w.syllables()));
}

/// φ: σ_s^p ↦ σ_{s(N)}^p ... σ_{s(1)}^p (the block commutes pairwise).
inline ArtinWord phi_expand(FoldedGraph const& fold, ArtinWord const& w) {
  return ArtinWord(detail::block_expand(fold, w.letters()));
}

/// Exponents m_{s(i)} = m_s on the folded graph.
inline ExponentAssignment fold_exponents(FoldedGraph const&        fold,
                                         ExponentAssignment const& exponents) {
  ExponentAssignment out(fold.graph.size());
  for (Vertex s = 0; s < fold.blocks.size(); ++s) {
    for (Vertex i : fold.blocks[s]) {
      out.set(i, exponents[s]);
    }
  }
  return out;
}

inline ExponentAssignment restrict_exponents(
    ExponentAssignment const& exponents, std::vector<Vertex> const& keep) {
  ExponentAssignment out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    out.set(i, exponents[keep[i]]);
  }
  return out;
}

/// A generator of G(Γ) moved by the image of an expression.
struct GroupoidWitness {
  Edge         generator;
  GroupoidPath image;
};

/// Evidence that f(w) != 1 in A(Γ).
///
/// With a witness: w acts on the groupoid of the connected small-type graph
/// `graph` and moves `witness->generator`. Without one, `graph` has a single
/// vertex and f(w) = σ^{power} with power != 0.
struct NontrivialityCertificate {
  CoxeterGraph                   graph;
  ExponentAssignment             exponents{0};
  RaagExpression                 expression;
  std::optional<GroupoidWitness> witness;
  Integer                        power = 0;
  std::vector<std::string>       stages;

  /// The stored data is internally consistent.
  bool is_valid() const {
    if (!witness) {
      return graph.size() == 1 && power != 0;
    }
    auto const gen = GroupoidPath::generator(witness->generator);
    return witness->image != gen
           && witness->image.source() == gen.source()
           && witness->image.target() == gen.target();
  }

  /// Recompute the image from scratch and compare.
  bool recheck() const {
    if (!is_valid()) {
      return false;
    }
    if (!witness) {
      Integer total = 0;
      for (auto const& x : expression) {
        total += x.exponent * exponents[x.generator];
      }
      return total == power;
    }
    auto const og = build_graph(graph);
    return apply_word(og, raag_action(graph, exponents, expression),
                      GroupoidPath::generator(witness->generator))
           == witness->image;
  }
};

/// For connected small-type Γ with at least two vertices and a nonempty
/// M-reduced w: w moves α_t where t is the first vertex with m_{s_l,t} = 3
/// and s_l is the generator of the leftmost syllable.
inline NontrivialityCertificate certify_nontrivial_small_type(
    CoxeterGraph const& g, ExponentAssignment const& exponents,
    RaagExpression const& w) {
  if (g.size() < 2) {
    throw ContractError("certification needs at least two vertices");
  }
  if (w.empty()) {
    throw ContractError("the empty expression has no certificate");
  }
  if (!is_m_reduced(g, w)) {
    throw ContractError("certification requires an M-reduced expression");
  }
  auto const og   = build_graph(g);
  auto const word = raag_action(g, exponents, w);
  Vertex const last = w[0].generator;
  Vertex       t    = 0;
  while (!(g.label(last, t) == 3)) {
    ++t;
  }
  NontrivialityCertificate cert{g, exponents, w, std::nullopt, 0, {"certify"}};
  auto                     image = apply_word(og, word, alpha(t));
  if (image != alpha(t)) {
    cert.witness = GroupoidWitness{Edge::loop(t), std::move(image)};
    return cert;
  }
  for (Edge e : og.edges()) {
    auto moved = apply_word(og, word, GroupoidPath::generator(e));
    if (moved != GroupoidPath::generator(e)) {
      cert.witness = GroupoidWitness{e, std::move(moved)};
      cert.stages.push_back("fallback");
      return cert;
    }
  }
  throw InternalInconsistency(
      "a nonempty M-reduced expression fixed every groupoid generator");
}

struct TrivialityDecision {
  bool                                    trivial;
  RaagExpression                          reduced;
  std::optional<NontrivialityCertificate> certificate;
};

/// Decide whether f(w) = 1 in A(Γ) for an arbitrary Coxeter graph.
///
/// The M-reduced form is split over connected components. A component with a
/// nonempty restriction is certified directly when it is a single vertex or of
/// small type after relabelling ∞ as 3; otherwise it is folded, the
/// restriction is expanded blockwise and certified on the component of the
/// folded graph carrying the shortest nonempty part.
inline TrivialityDecision decide_trivial_image(
    CoxeterGraph const& g, ExponentAssignment const& exponents,
    RaagExpression const& w) {
  if (exponents.size() != g.size()) {
    throw ContractError("exponent assignment does not match the graph");
  }
  RaagExpression reduced = m_reduce(g, w);
  if (reduced.empty()) {
    return {true, std::move(reduced), std::nullopt};
  }
  for (auto const& comp : component_vertex_sets(g)) {
    RaagExpression part = restrict_to(reduced, comp);
    if (part.empty()) {
      continue;
    }
    std::vector<std::string> stages{"m_reduce", "component"};
    CoxeterGraph const       sub  = induced_subgraph(g, comp);
    ExponentAssignment const subx = restrict_exponents(exponents, comp);
    if (comp.size() == 1) {
      Integer total = 0;
      for (auto const& x : part) {
        total += x.exponent * subx[x.generator];
      }
      stages.push_back("cyclic");
      return {false, std::move(reduced),
              NontrivialityCertificate{sub, subx, part, std::nullopt, total,
                                       std::move(stages)}};
    }
    CoxeterGraph const h = hat(sub);
    if (!(h == sub)) {
      stages.push_back("hat");
    }
    if (is_small_type(h)) {
      auto cert = certify_nontrivial_small_type(h, subx, part);
      stages.insert(stages.end(), cert.stages.begin(), cert.stages.end());
      cert.stages = std::move(stages);
      return {false, std::move(reduced), std::move(cert)};
    }
    FoldedGraph const    folded = fold(h);
    RaagExpression const big    = psi_expand(folded, part);
    ExponentAssignment const bigx = fold_exponents(folded, subx);
    stages.push_back("fold");
    stages.push_back("psi_expand");
    std::vector<Vertex> best;
    RaagExpression      best_part;
    for (auto const& fc : component_vertex_sets(folded.graph)) {
      RaagExpression candidate = restrict_to(big, fc);
      if (!candidate.empty()
          && (best.empty() || candidate.size() < best_part.size())) {
        best      = fc;
        best_part = std::move(candidate);
      }
    }
    stages.push_back("component");
    auto cert = certify_nontrivial_small_type(
        induced_subgraph(folded.graph, best), restrict_exponents(bigx, best),
        best_part);
    stages.insert(stages.end(), cert.stages.begin(), cert.stages.end());
    cert.stages = std::move(stages);
    return {false, std::move(reduced), std::move(cert)};
  }
  throw InternalInconsistency("nonempty reduced expression has no component");
}

/// f(w1) = f(w2), decided through w1 w2^-1.
inline bool decide_equal(CoxeterGraph const& g,
                         ExponentAssignment const& exponents,
                         RaagExpression const& w1, RaagExpression const& w2) {
  return decide_trivial_image(g, exponents, concatenate(w1, inverse(w2)))
      .trivial;
}

}  // namespace artin

#endif

#ifndef ARTIN_TOOLS_CLI_HPP
#define ARTIN_TOOLS_CLI_HPP

// Command line front end. `run` is kept separate from main() so the tests can
// drive it with in-memory streams.
//
// Exit status: 0 success / positive verdict, 1 negative verdict, 2 input or
// usage error, 3 contract violation, 4 internal inconsistency.

#include <artin/artin.hpp>
#include <artin/json.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace artin::cli {

enum ExitCode : int {
  ok          = 0,
  negative    = 1,
  input_error = 2,
  contract    = 3,
  internal    = 4,
};

namespace detail {

// A ParseError annotated with the name of the input it came from.
struct SourcedParseError {
  std::string source;
  ParseError  error;
};

template <class F>
auto parsing(std::string const& source, F&& f) {
  try {
    return f();
  } catch (ParseError const& e) {
    throw SourcedParseError{source, e};
  }
}

inline CoxeterGraph load_graph(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw SourcedParseError{path, ParseError("cannot open file", 0, 0)};
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parsing(path, [&] { return parse_graph(buffer.str()); });
}

inline ExponentAssignment load_exponents(CoxeterGraph const& g,
                                         std::string const&  text) {
  return parsing("--exponents", [&] { return parse_exponents(g, text); });
}

inline RaagExpression load_expression(CoxeterGraph const& g,
                                      std::string const&  text) {
  return parsing("expression", [&] { return parse_expression(g, text); });
}

// Random reduced path of at most `letters` letters from a random vertex.
inline GroupoidPath random_path(OrientedGraph const& og, std::mt19937_64& rng,
                                std::size_t letters) {
  std::size_t const n = og.vertex_count();
  Vertex v = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
  std::vector<Letter> out;
  for (std::size_t k = 0; k < letters; ++k) {
    std::vector<Letter> moves;
    for (Edge e : og.edges()) {
      if (e.source == v) {
        moves.push_back({e, 1});
      }
      if (e.target == v) {
        moves.push_back({e, -1});
      }
    }
    Letter l = moves[std::uniform_int_distribution<std::size_t>(
        0, moves.size() - 1)(rng)];
    out.push_back(l);
    v = l.sign > 0 ? l.edge.target : l.edge.source;
  }
  if (out.empty()) {
    return GroupoidPath::constant(v);
  }
  return reduce_path(og, out);
}

}  // namespace detail

inline int run(std::vector<std::string> const& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Artin groups, right-angled Artin groups and Dehn twist actions",
               "artin"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON");
  app.fallthrough();

  std::string graph_path;
  std::string expression;
  std::string exponents;
  std::string vertex;
  std::string path_text;
  std::string twist_text;
  std::string act_expression;
  bool        want_certificate = false;
  std::uint64_t seed    = 1;
  std::size_t   samples = 0;
  std::size_t   garside_n = 0;

  auto* reduce = app.add_subcommand("reduce", "Print an M-reduced form");
  reduce->add_option("graph", graph_path, "Coxeter graph file")->required();
  reduce->add_option("expression", expression, "Expression, e.g. 'a b^2 a^-1'")
      ->required();

  auto* trivial = app.add_subcommand(
      "is-trivial", "Decide whether the image in A(Γ) is trivial (exit 0) or "
                    "not (exit 1)");
  trivial->add_option("graph", graph_path, "Coxeter graph file")->required();
  trivial->add_option("expression", expression, "Expression")->required();
  trivial->add_option("--exponents", exponents, "s=m,... (default m_s = 2)");
  trivial->add_flag("--certificate", want_certificate,
                    "Print the certificate of nontriviality");

  auto* ends = app.add_subcommand("ends-in",
                                  "Whether an M-reduced expression ends in a "
                                  "vertex (exit 0) or not (exit 1)");
  ends->add_option("graph", graph_path, "Coxeter graph file")->required();
  ends->add_option("expression", expression, "M-reduced expression")
      ->required();
  ends->add_option("vertex", vertex, "Vertex")->required();

  auto* act = app.add_subcommand("act", "Apply a twist word or an expression "
                                        "to a groupoid path");
  act->add_option("graph", graph_path, "Connected small-type graph")
      ->required();
  act->add_option("path", path_text, "Path, e.g. 'e(a) f(a,b)' or '@a'")
      ->required();
  auto* twist_opt =
      act->add_option("--twist", twist_text, "Twist word, 't^m' = τ_t^m");
  auto* expr_opt = act->add_option("--expression", act_expression,
                                   "Expression in the T_s = σ_s^{m_s}");
  twist_opt->excludes(expr_opt);
  act->add_option("--exponents", exponents, "s=m,... (default m_s = 2)");

  auto* certify = app.add_subcommand("certify",
                                     "Emit a certificate that the image of an "
                                     "expression is nontrivial");
  certify->add_option("graph", graph_path, "Coxeter graph file")->required();
  certify->add_option("expression", expression, "Expression")->required();
  certify->add_option("--exponents", exponents, "s=m,... (default m_s = 2)");

  auto* fold_cmd = app.add_subcommand("fold", "Fold onto a small-type graph");
  fold_cmd->add_option("graph", graph_path, "Connected graph, finite labels")
      ->required();

  auto* hat_cmd = app.add_subcommand("hat", "Relabel every ∞ as 3");
  hat_cmd->add_option("graph", graph_path, "Coxeter graph file")->required();

  auto* relations = app.add_subcommand(
      "check-relations", "Check commutation and braid relations of the twist "
                         "action on every component");
  relations->add_option("graph", graph_path, "Small-type graph")->required();
  relations->add_option("--seed", seed, "Seed for randomized checks");
  relations->add_option("--samples", samples,
                        "Random paths for the automorphism checks");

  auto* garside = app.add_subcommand("check-garside",
                                     "Check prod(P,Q;n+1) = prod(Q,P;n+1) in "
                                     "A(A_n)");
  garside->add_option("n", garside_n, "n >= 1")->required()
      ->check(CLI::PositiveNumber);

  std::vector<std::string> argv_store{"artin"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) {
    argv.push_back(a.data());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return ok;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }

  try {
    if (reduce->parsed()) {
      auto g = detail::load_graph(graph_path);
      auto w = detail::load_expression(g, expression);
      auto r = m_reduce(g, w);
      if (json) {
        out << nlohmann::json{{"reduced", format_expression(g, r)}}.dump()
            << '\n';
      } else {
        out << format_expression(g, r) << '\n';
      }
      return ok;
    }

    if (trivial->parsed() || certify->parsed()) {
      auto g  = detail::load_graph(graph_path);
      auto w  = detail::load_expression(g, expression);
      auto ex = detail::load_exponents(g, exponents);
      auto d  = decide_trivial_image(g, ex, w);
      if (json) {
        if (certify->parsed()) {
          out << (d.certificate ? to_json(*d.certificate) : nlohmann::json())
                     .dump(2)
              << '\n';
        } else {
          auto j = to_json(g, d);
          if (!want_certificate) {
            j.erase("certificate");
          }
          out << j.dump(2) << '\n';
        }
      } else if (trivial->parsed()) {
        out << (d.trivial ? "trivial" : "nontrivial") << '\n';
        if (want_certificate && d.certificate) {
          out << to_json(*d.certificate).dump(2) << '\n';
        }
      } else if (d.certificate) {
        auto const& c = *d.certificate;
        out << "stages: ";
        for (std::size_t i = 0; i < c.stages.size(); ++i) {
          out << (i ? " " : "") << c.stages[i];
        }
        out << "\ngraph:\n" << format_graph(c.graph);
        out << "expression: " << format_expression(c.graph, c.expression)
            << '\n';
        if (c.witness) {
          out << "witness: "
              << format_path(c.graph,
                             GroupoidPath::generator(c.witness->generator))
              << "\nimage: " << format_path(c.graph, c.witness->image) << '\n';
        } else {
          out << "power: " << c.power << '\n';
        }
      } else {
        out << "trivial: no certificate\n";
      }
      return d.trivial ? (certify->parsed() ? negative : ok) :
                         (certify->parsed() ? ok : negative);
    }

    if (ends->parsed()) {
      auto g = detail::load_graph(graph_path);
      auto w = detail::load_expression(g, expression);
      auto v = g.find(vertex);
      if (!v) {
        err << "vertex:1:1: unknown vertex '" << vertex << "'\n";
        return input_error;
      }
      bool result = ends_in(g, w, *v);
      if (json) {
        out << nlohmann::json{{"ends_in", result}}.dump() << '\n';
      } else {
        out << (result ? "true" : "false") << '\n';
      }
      return result ? ok : negative;
    }

    if (act->parsed()) {
      if (twist_opt->count() == 0 && expr_opt->count() == 0) {
        err << "error: act needs --twist or --expression\n";
        return input_error;
      }
      auto       g  = detail::load_graph(graph_path);
      auto const og = build_graph(g);
      auto x = detail::parsing("path", [&] { return parse_path(og, path_text); });
      TwistWord word;
      if (twist_opt->count() > 0) {
        word = detail::parsing(
            "--twist", [&] { return parse_twist_word(g, twist_text); });
      } else {
        auto w  = detail::parsing("--expression", [&] {
          return parse_expression(g, act_expression);
        });
        word = raag_action(g, detail::load_exponents(g, exponents), w);
      }
      auto image = apply_word(og, word, x);
      if (json) {
        out << nlohmann::json{{"twist", format_twist_word(g, word)},
                              {"path", format_path(g, x)},
                              {"image", format_path(g, image)}}
                   .dump(2)
            << '\n';
      } else {
        out << format_path(g, image) << '\n';
      }
      return ok;
    }

    if (fold_cmd->parsed()) {
      auto g = detail::load_graph(graph_path);
      auto f = fold(g);
      if (json) {
        nlohmann::json blocks;
        for (Vertex s = 0; s < g.size(); ++s) {
          std::vector<std::string> names;
          for (Vertex v : f.blocks[s]) {
            names.push_back(f.graph.name(v));
          }
          blocks[g.name(s)] = names;
        }
        out << nlohmann::json{{"graph", format_graph(f.graph)},
                              {"n", f.n_value},
                              {"blocks", blocks}}
                   .dump(2)
            << '\n';
      } else {
        out << format_graph(f.graph);
      }
      return ok;
    }

    if (hat_cmd->parsed()) {
      auto g = detail::load_graph(graph_path);
      if (json) {
        out << nlohmann::json{{"graph", format_graph(hat(g))}}.dump(2) << '\n';
      } else {
        out << format_graph(hat(g));
      }
      return ok;
    }

    if (relations->parsed()) {
      auto g = detail::load_graph(graph_path);
      if (!is_small_type(g)) {
        err << "error: check-relations requires a graph of small type\n";
        return contract;
      }
      std::vector<std::string> failures;
      std::mt19937_64          rng(seed);
      for (auto const& comp : components(g)) {
        auto const og = build_graph(comp);
        for (auto const& f : check_relations(og)) {
          failures.push_back(
              "relation " + comp.name(f.s) + "," + comp.name(f.t) + " on "
              + format_path(comp, GroupoidPath::generator(f.generator)));
        }
        for (std::size_t k = 0; k < samples; ++k) {
          auto const x = detail::random_path(og, rng, 12);
          auto const y = detail::random_path(og, rng, 12);
          Vertex     t = std::uniform_int_distribution<Vertex>(
              0, comp.size() - 1)(rng);
          Integer m = std::uniform_int_distribution<int>(1, 4)(rng)
                      * (rng() % 2 ? 1 : -1);
          auto const tx = apply_twist(og, t, m, x);
          if (tx.source() != x.source() || tx.target() != x.target()
              || apply_twist(og, t, -m, tx) != x) {
            failures.push_back("automorphism law on " + format_path(comp, x));
          }
          if (x.target() == y.source()
              && apply_twist(og, t, m, compose(x, y))
                     != compose(tx, apply_twist(og, t, m, y))) {
            failures.push_back("multiplicativity on " + format_path(comp, x));
          }
        }
      }
      if (json) {
        out << nlohmann::json{{"ok", failures.empty()}, {"failures", failures}}
                   .dump(2)
            << '\n';
      } else {
        for (auto const& f : failures) {
          out << "FAIL " << f << '\n';
        }
        out << (failures.empty() ? "OK" : "FAILED") << '\n';
      }
      return failures.empty() ? ok : negative;
    }

    if (garside->parsed()) {
      bool result = check_garside(garside_n);
      if (json) {
        out << nlohmann::json{{"n", garside_n}, {"ok", result}}.dump() << '\n';
      } else {
        out << (result ? "OK" : "FAILED") << '\n';
      }
      return result ? ok : negative;
    }
  } catch (detail::SourcedParseError const& e) {
    err << e.source << ':' << e.error.line() << ':' << e.error.column()
        << ": " << e.error.message() << '\n';
    return input_error;
  } catch (ContractError const& e) {
    err << "contract violation: " << e.what() << '\n';
    return contract;
  } catch (InternalInconsistency const& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return internal;
  }
  return input_error;
}

}  // namespace artin::cli

#endif

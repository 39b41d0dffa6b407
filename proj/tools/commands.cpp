#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "berge/berge.hpp"
#include "berge/generators.hpp"
#include "berge/io.hpp"
#include "berge/matching.hpp"
#include "berge/oracle.hpp"

namespace berge::cli {
namespace {

struct Outcome {
  int code = kOk;
  std::string out;
  std::string err;
};

class InputError : public Error {
 public:
  using Error::Error;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), {}};
}

Multigraph load(const std::string& path, bool graph6, std::istream& in) {
  const std::string text = slurp(path, in);
  return graph6 ? parse_graph6(text) : parse_edgelist(text);
}

std::string vertices_line(const Circuit& c) {
  std::string line;
  for (Vertex v : c.vertices) {
    if (!line.empty()) line += ' ';
    line += std::to_string(v);
  }
  return line;
}

// Maps library errors onto exit codes. Anything else propagates.
template <class F>
Outcome guarded(F&& body) {
  Outcome o;
  try {
    body(o);
  } catch (const ParseError& e) {
    o = {kParse, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const InputError& e) {
    o = {kParse, "", std::string(e.what()) + "\n"};
  } catch (const AssumptionViolated& e) {
    o = {kAssumption, "", std::string(e.what()) + "\n"};
  } catch (const std::invalid_argument& e) {
    o = {kParse, "", std::string("invalid graph: ") + e.what() + "\n"};
  } catch (const Error& e) {
    o = {kPrecondition, "", std::string(e.what()) + "\n"};
  }
  return o;
}

struct CoverOptions {
  bool automatic = false;
  std::optional<Vertex> near_hamiltonian;
  bool two_factor = false;
  bool graph6 = false;
  bool explain = false;
};

Outcome cover_one(const std::string& path, const CoverOptions& opt, const std::string& text) {
  return guarded([&](Outcome& o) {
    const Multigraph g = opt.graph6 ? parse_graph6(text) : parse_edgelist(text);
    Cover c;
    if (opt.near_hamiltonian) {
      c = cover_near_hamiltonian(g, *opt.near_hamiltonian);
    } else if (opt.two_factor) {
      auto factor = find_two_factor_two_circuits(g);
      if (!factor) throw Unsupported("no 2-factor with two circuits");
      c = cover_two_factor(g, factor->first, factor->second);
    } else {
      c = cover(g);
    }
    const std::vector<EdgeSet> members = c.distinct();
    o.out = emit_cover(members);
    if (opt.explain) o.err = path + ": " + c.provenance_note + "\n";
    if (!verify_cover(g, members).valid) {
      o.code = kInvalid;
      o.err += path + ": produced cover does not verify\n";
    }
  });
}

int finish(const Outcome& o, std::ostream& out, std::ostream& err) {
  out << o.out;
  err << o.err;
  return o.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Perfect matching covers of cubic graphs", "berge"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Print a generated graph as an edge list");
  std::string family;
  std::vector<int> params;
  bool gen_graph6 = false;
  gen->add_option("family", family,
                  "theta, k4, prism, petersen, moebius_kantor, gp N K, flower N")
      ->required();
  gen->add_option("params", params, "Integer parameters of the family");
  gen->add_flag("--graph6", gen_graph6, "Print graph6 instead of an edge list");

  auto* cov = app.add_subcommand("cover", "Construct a perfect matching cover");
  CoverOptions copt;
  std::vector<std::string> cover_inputs;
  unsigned jobs = 1;
  auto* o_auto = cov->add_flag("--auto", copt.automatic, "Pick the route automatically (default)");
  auto* o_nh = cov->add_option("--near-hamiltonian", copt.near_hamiltonian,
                               "Use the route for a vertex v with g - v hamiltonian");
  auto* o_tf = cov->add_flag("--two-factor", copt.two_factor,
                             "Use the route for a 2-factor with two circuits");
  o_auto->excludes(o_nh)->excludes(o_tf);
  o_nh->excludes(o_tf);
  cov->add_flag("--graph6", copt.graph6, "Inputs are graph6");
  cov->add_flag("--explain", copt.explain, "Report which construction produced each cover");
  cov->add_option("-j,--jobs", jobs, "Process inputs in parallel")->check(CLI::PositiveNumber);
  cov->add_option("inputs", cover_inputs, "Graph files, '-' for standard input")->required();

  auto* ver = app.add_subcommand("verify", "Check a cover against a graph");
  std::string graph_path, cover_path;
  bool ver_graph6 = false;
  ver->add_option("graph", graph_path)->required();
  ver->add_option("cover", cover_path)->required();
  ver->add_flag("--graph6", ver_graph6, "Graph is graph6");

  auto* orc = app.add_subcommand("oracle", "Brute-force queries");
  std::string query, oracle_path = "-";
  bool orc_graph6 = false;
  int cap = 6;
  orc->add_option("query", query)
      ->required()
      ->check(CLI::IsMember({"min-order", "pms", "hamiltonian", "hypohamiltonian", "two-factor"}));
  orc->add_option("input", oracle_path, "Graph file, '-' for standard input");
  orc->add_flag("--graph6", orc_graph6, "Input is graph6");
  orc->add_option("--cap", cap, "Largest order tried by min-order");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kPrecondition;
  }

  if (*gen) {
    return finish(guarded([&](Outcome& o) {
                    const Multigraph g = generate(family, params);
                    o.out = gen_graph6 ? emit_graph6(g) + "\n" : emit_edgelist(g);
                  }),
                  out, err);
  }

  if (*cov) {
    std::vector<std::string> texts(cover_inputs.size());
    std::vector<Outcome> results(cover_inputs.size());
    std::vector<bool> loaded(cover_inputs.size(), false);
    for (std::size_t i = 0; i < cover_inputs.size(); ++i) {
      results[i] = guarded([&](Outcome&) { texts[i] = slurp(cover_inputs[i], in); });
      loaded[i] = results[i].code == kOk;
    }
    std::vector<std::future<Outcome>> pending(cover_inputs.size());
    std::size_t next = 0;
    auto launch = [&](std::size_t i) {
      pending[i] = std::async(jobs > 1 ? std::launch::async : std::launch::deferred, cover_one,
                              cover_inputs[i], copt, texts[i]);
    };
    for (; next < cover_inputs.size() && next < jobs; ++next) {
      if (loaded[next]) launch(next);
    }
    int code = kOk;
    for (std::size_t i = 0; i < cover_inputs.size(); ++i) {
      if (loaded[i]) results[i] = pending[i].get();
      for (; next < cover_inputs.size() && next <= i + jobs; ++next) {
        if (loaded[next]) launch(next);
      }
      if (cover_inputs.size() > 1) out << "# " << cover_inputs[i] << "\n";
      code = std::max(code, finish(results[i], out, err));
    }
    return code;
  }

  if (*ver) {
    return finish(guarded([&](Outcome& o) {
                    const Multigraph g = load(graph_path, ver_graph6, in);
                    const auto cover = parse_cover(slurp(cover_path, in));
                    const CoverReport report = verify_cover(g, cover);
                    o.out = format_report(report);
                    o.code = report.valid ? kOk : kInvalid;
                  }),
                  out, err);
  }

  return finish(guarded([&](Outcome& o) {
                  const Multigraph g = load(oracle_path, orc_graph6, in);
                  std::ostringstream s;
                  if (query == "min-order") {
                    const auto k = min_cover_order(g, cap);
                    if (k) {
                      s << *k << "\n";
                    } else {
                      s << ">" << cap << "\n";
                    }
                  } else if (query == "pms") {
                    const auto all = enumerate_pms(g);
                    s << all.size() << "\n";
                    for (const EdgeSet& m : all) {
                      for (auto it = m.begin(); it != m.end(); ++it)
                        s << (it == m.begin() ? "" : " ") << *it;
                      s << "\n";
                    }
                  } else if (query == "hamiltonian") {
                    const auto c = hamiltonian_circuit(g);
                    s << (c ? vertices_line(*c) : "none") << "\n";
                  } else if (query == "hypohamiltonian") {
                    s << (is_hypohamiltonian(g) ? "true" : "false") << "\n";
                  } else {
                    assert_cubic(g);
                    const auto f = find_two_factor_two_circuits(g);
                    if (f) {
                      s << vertices_line(f->first) << "\n" << vertices_line(f->second) << "\n";
                    } else {
                      s << "none\n";
                    }
                  }
                  o.out = s.str();
                }),
                out, err);
}

}  // namespace berge::cli

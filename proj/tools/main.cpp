// cliquecover command-line front end. Every run is determined by its argument
// vector and input files. Exit codes: 0 success / holds, 1 not found /
// infeasible / violated, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cliquecover/bipartite.hpp"
#include "cliquecover/cliques.hpp"
#include "cliquecover/errors.hpp"
#include "cliquecover/extract.hpp"
#include "cliquecover/graph.hpp"
#include "cliquecover/inequalities.hpp"
#include "cliquecover/params.hpp"
#include "cliquecover/prune.hpp"
#include "cliquecover/verify.hpp"

namespace cc = cliquecover;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cc::InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <class Parse>
auto load(const std::string& path, Parse parse) {
  auto text = read_file(path);
  try {
    return parse(text);
  } catch (const cc::InputError& e) {
    throw cc::InputError(path + ": " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cc::InputError("cannot write '" + path + "'");
  out << text;
}

/// Ordered key/value report, printed as "key: value" or "key=value".
class Report {
 public:
  template <class T>
  Report& add(std::string key, const T& value) {
    std::ostringstream s;
    s << value;
    rows_.emplace_back(std::move(key), s.str());
    return *this;
  }
  Report& add(std::string key, bool value) { return add(std::move(key), value ? "true" : "false"); }
  Report& add(std::string key, const char* value) {
    rows_.emplace_back(std::move(key), value);
    return *this;
  }
  Report& add(std::string key, const cc::Rational& value) {
    rows_.emplace_back(std::move(key), cc::to_string(value));
    return *this;
  }

  void print(const std::string& format) const {
    for (const auto& [k, v] : rows_) {
      if (format == "kv") {
        std::cout << k << '=' << v << '\n';
      } else {
        std::cout << k << ": " << v << '\n';
      }
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

void add_params(Report& rep, const cc::ExtractionParams& p) {
  rep.add("n", p.n).add("r", p.r);
  if (p.c) rep.add("c", *p.c);
  rep.add("s", p.s).add("t_min", p.t_min).add("mode", cc::to_string(p.mode));
  for (const auto& level : p.levels) {
    const std::string k = "level" + std::to_string(level.level) + ".";
    rep.add(k + "c", level.c)
        .add(k + "s", level.s)
        .add(k + "t_min", level.t_min)
        .add(k + "m", level.m)
        .add(k + "hypothesis_ok", level.hypothesis_ok)
        .add(k + "c_upper_ok", level.c_upper_ok)
        .add(k + "s_vs_m_ok", level.s_vs_m_ok)
        .add(k + "supplies_m_ok", level.supplies_m_ok);
  }
  if (p.mass_ok) rep.add("mass_ok", *p.mass_ok);
  rep.add("feasible", p.mass_ok ? p.feasible() : p.parameters_feasible());
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw cc::InputError("malformed integer '" + tok + "' in list '" + text + "'");
    }
  }
  return out;
}

cc::Graph load_graph(const std::string& path) { return load(path, [](const std::string& t) { return cc::parse_edge_list(t); }); }

cc::CliqueList load_cliques(const std::string& path, std::optional<int> n) {
  return load(path, [&](const std::string& t) { return cc::parse_clique_list(t, n); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extract and certify complete multipartite subgraphs covered by clique sets"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"human", "kv"}));

  std::string out_path;
  std::string graph_path;
  std::string cliques_path;
  int r = 0;
  int s_arg = 0;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph as an edge-list file");
  gen->require_subcommand(1);
  int gnp_n = 0;
  std::string gnp_p;
  std::uint64_t gnp_seed = 0;
  auto* gnp = gen->add_subcommand("gnp", "Seeded G(n, p)");
  gnp->add_option("--n", gnp_n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
  gnp->add_option("--p", gnp_p, "Edge probability (p/q or decimal)")->required();
  gnp->add_option("--seed", gnp_seed, "SplitMix64 seed")->required();
  gnp->add_option("-o,--output", out_path, "Output file (default stdout)");

  std::string sizes_text;
  auto* multi = gen->add_subcommand("multipartite", "Complete multipartite graph");
  multi->add_option("--sizes", sizes_text, "Comma-separated part sizes")->required();
  multi->add_option("-o,--output", out_path, "Output file (default stdout)");

  std::string host_path;
  std::string planted_path;
  std::string map_text;
  auto* ovl = gen->add_subcommand("overlay", "Plant one graph into another");
  ovl->add_option("--host", host_path, "Host edge list")->required()->check(CLI::ExistingFile);
  ovl->add_option("--planted", planted_path, "Planted edge list")->required()->check(CLI::ExistingFile);
  ovl->add_option("--map", map_text, "Comma-separated host images of planted vertices 0, 1, ...")->required();
  ovl->add_option("-o,--output", out_path, "Output file (default stdout)");

  // count / cliques
  auto* count = app.add_subcommand("count", "Print k_r(G)");
  count->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  count->add_option("-r", r, "Clique size")->required();

  auto* cliques = app.add_subcommand("cliques", "Write all r-cliques as a clique-list file");
  cliques->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  cliques->add_option("-r", r, "Clique size")->required();
  cliques->add_option("-o,--output", out_path, "Output file (default stdout)");

  // chain / supersat
  auto* chain = app.add_subcommand("chain", "Chain inequality between k_{s-1}, k_s, k_{s+1}");
  chain->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  chain->add_option("-s", s_arg, "Clique size s >= 2")->required();

  auto* supersat = app.add_subcommand("supersat", "Edge surplus and (r+1)-clique margin report");
  supersat->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  supersat->add_option("-r", r, "Turán index r >= 2")->required();

  // prune
  int prune_n = 0;
  std::string threshold_text;
  std::string log_path;
  auto* prune_cmd = app.add_subcommand("prune", "Delete cliques around low co-degree facets");
  prune_cmd->add_option("--cliques", cliques_path)->required()->check(CLI::ExistingFile);
  prune_cmd->add_option("-n", prune_n, "Vertex count")->required();
  prune_cmd->add_option("--threshold", threshold_text, "Exact threshold p/q")->required();
  prune_cmd->add_option("-o,--output", out_path, "Kept cliques (default stdout)");
  prune_cmd->add_option("--log", log_path, "Round log file (default stdout after the report)");

  // bounds
  std::uint64_t bounds_n = 0;
  std::string c_text;
  auto* bounds = app.add_subcommand("bounds", "Certified cover parameters s, t_min and flags");
  bounds->add_option("--n", bounds_n, "Vertex count")->required();
  bounds->add_option("-r", r, "Clique size")->required();
  bounds->add_option("-c", c_text, "Density constant p/q")->required();

  // extract
  std::optional<std::size_t> target_s;
  std::optional<std::size_t> target_t;
  std::optional<std::size_t> inner_s;
  std::optional<std::size_t> inner_t;
  std::size_t inner_candidates = cliquecover::TargetOptions{}.inner_candidates;
  std::string extract_threshold = "0";
  auto* extract_cmd = app.add_subcommand("extract", "Extract a cover certificate");
  extract_cmd->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  extract_cmd->add_option("--cliques", cliques_path)->required()->check(CLI::ExistingFile);
  extract_cmd->add_option("-r", r, "Clique size")->required();
  auto* c_opt = extract_cmd->add_option("-c", c_text, "Guaranteed mode: density constant p/q");
  auto* s_opt = extract_cmd->add_option("--s", target_s, "Best-effort mode: part size");
  auto* t_opt = extract_cmd->add_option("--t-min", target_t, "Best-effort mode: minimum last part size");
  extract_cmd->add_option("--threshold", extract_threshold, "Best-effort pruning threshold p/q");
  extract_cmd->add_option("--inner-s", inner_s, "Best-effort part size below the top level");
  extract_cmd->add_option("--inner-t-min", inner_t, "Best-effort last part size below the top level");
  extract_cmd->add_option("--inner-candidates", inner_candidates, "Best-effort witnesses tried per lower level")
      ->capture_default_str();
  extract_cmd->add_option("-o,--output", out_path, "Certificate file (default stdout)");
  c_opt->excludes(s_opt)->excludes(t_opt);
  s_opt->needs(t_opt);
  t_opt->needs(s_opt);

  // verify
  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph and clique list");
  verify->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  verify->add_option("--cliques", cliques_path)->required()->check(CLI::ExistingFile);
  verify->add_option("--cert", cert_path)->required()->check(CLI::ExistingFile);

  // oracle
  std::string bip_path;
  std::uint64_t cap = cc::kDefaultOracleCap;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive maximum K_2(s, t) over a bipartite instance");
  oracle->add_option("--bipartite", bip_path)->required()->check(CLI::ExistingFile);
  oracle->add_option("-s", s_arg, "Left subset size")->required();
  oracle->add_option("--cap", cap, "Largest C(m, s) to enumerate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    Report rep;
    int code = kOk;

    if (gnp->parsed()) {
      write_output(out_path, cc::emit_edge_list(cc::gen_gnp(gnp_n, cc::parse_probability(gnp_p), gnp_seed)));
      return kOk;
    }
    if (multi->parsed()) {
      auto sizes = parse_int_list(sizes_text);
      write_output(out_path, cc::emit_edge_list(cc::gen_complete_multipartite(sizes)));
      return kOk;
    }
    if (ovl->parsed()) {
      auto host = load_graph(host_path);
      auto planted = load_graph(planted_path);
      auto map = parse_int_list(map_text);
      write_output(out_path, cc::emit_edge_list(cc::overlay(host, planted, map)));
      return kOk;
    }
    if (count->parsed()) {
      std::cout << cc::count_r_cliques(load_graph(graph_path), r) << '\n';
      return kOk;
    }
    if (cliques->parsed()) {
      write_output(out_path, cc::emit_clique_list(cc::enumerate_r_cliques(load_graph(graph_path), r)));
      return kOk;
    }
    if (chain->parsed()) {
      auto g = load_graph(graph_path);
      try {
        auto c = cc::chain_inequality_report(g, s_arg);
        rep.add("s", c.s).add("k_prev", c.k_prev).add("k_s", c.k_s).add("k_next", c.k_next);
        rep.add("lhs", c.lhs).add("rhs", c.rhs).add("holds", c.holds);
        code = c.holds ? kOk : kNegative;
      } catch (const cc::PreconditionError& e) {
        rep.add("s", s_arg).add("applicable", false).add("reason", e.what());
        code = kNegative;
      }
    } else if (supersat->parsed()) {
      auto g = load_graph(graph_path);
      auto sr = cc::supersaturation_report(g, r);
      rep.add("r", sr.r).add("n", sr.n).add("edges", sr.edges).add("c", sr.c).add("applicable", sr.applicable);
      if (sr.applicable) {
        rep.add("bound", sr.bound).add("k_next", sr.k_next).add("margin", sr.margin);
        rep.add("strict_claim_holds", sr.strict_claim_holds);
        if (sr.implied) rep.add("implied_s", sr.implied->s).add("implied_t_min", sr.implied->t_min);
      } else {
        rep.add("k_next", sr.k_next);
      }
    } else if (prune_cmd->parsed()) {
      auto m = load_cliques(cliques_path, prune_n);
      auto result = cc::prune(m, prune_n, cc::parse_rational(threshold_text));
      write_output(out_path, cc::emit_clique_list(result.kept));
      auto log = cc::emit_prune_log(result);
      if (!log_path.empty()) {
        write_output(log_path, log);
      } else if (!out_path.empty() && out_path != "-") {
        std::cout << log;
      }
      return kOk;
    } else if (bounds->parsed()) {
      auto p = cc::theorem_params(bounds_n, r, cc::parse_rational(c_text));
      add_params(rep, p);
      code = p.parameters_feasible() ? kOk : kNegative;
    } else if (extract_cmd->parsed()) {
      auto g = load_graph(graph_path);
      auto m = load_cliques(cliques_path, g.n());
      cc::ExtractionOutcome outcome;
      if (!c_text.empty()) {
        outcome = cc::extract(g, m, r, cc::parse_rational(c_text));
      } else if (target_s) {
        cc::TargetOptions opts;
        opts.threshold = cc::parse_rational(extract_threshold);
        opts.inner_s = inner_s;
        opts.inner_t_min = inner_t;
        opts.inner_candidates = inner_candidates;
        outcome = cc::extract_with_target(g, m, r, *target_s, *target_t, opts);
      } else {
        std::cerr << "error: extract needs either -c or --s with --t-min\n";
        return kInputError;
      }
      if (auto* cert = std::get_if<cc::CoverCertificate>(&outcome)) {
        write_output(out_path, cc::emit_certificate(*cert));
        if (!out_path.empty() && out_path != "-") {
          rep.add("result", "certificate").add("s", cert->s()).add("t", cert->t());
          rep.print(format);
        }
        return kOk;
      }
      const auto& failure = std::get<cc::ExtractionFailure>(outcome);
      rep.add("result", cc::to_string(failure.kind)).add("level", failure.level).add("stage", failure.stage);
      add_params(rep, failure.params);
      code = kNegative;
    } else if (verify->parsed()) {
      auto g = load_graph(graph_path);
      auto m = load_cliques(cliques_path, g.n());
      auto cert = load(cert_path, [](const std::string& t) { return cc::parse_certificate(t); });
      auto v = cc::verify_cover(g, m, cert);
      rep.add("parts_ok", v.parts_ok)
          .add("completeness_ok", v.completeness_ok)
          .add("edges_in_k2m_ok", v.edges_in_k2m_ok)
          .add("members_ok", v.members_ok)
          .add("sizes_ok", v.sizes_ok)
          .add("all_ok", v.all_ok());
      code = v.all_ok() ? kOk : kNegative;
    } else if (oracle->parsed()) {
      auto f = load(bip_path, [](const std::string& t) { return cc::parse_bipartite(t); });
      if (s_arg < 1) throw cc::InputError("-s must be at least 1");
      auto best = cc::biclique_oracle(f, static_cast<std::size_t>(s_arg), cap);
      std::ostringstream left;
      for (std::size_t i = 0; i < best.left.size(); ++i) left << (i ? "," : "") << best.left[i];
      rep.add("s", s_arg).add("left", left.str()).add("t", best.t);
    }
    rep.print(format);
    return code;
  } catch (const cc::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const cc::LimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}

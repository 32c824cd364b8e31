#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cliquecover/bipartite.hpp"
#include "cliquecover/cliques.hpp"
#include "cliquecover/errors.hpp"
#include "cliquecover/extract.hpp"
#include "cliquecover/graph.hpp"
#include "cliquecover/inequalities.hpp"
#include "cliquecover/params.hpp"
#include "cliquecover/prune.hpp"
#include "cliquecover/verify.hpp"

namespace py = pybind11;
using namespace cliquecover;

namespace {

// Rationals cross the boundary as fractions.Fraction; ints and "p/q" strings
// are accepted on the way in.
Rational to_rational(const py::handle& value) { return parse_rational(py::str(value).cast<std::string>()); }

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(q));
}

py::list to_list(const VertexSet& s) { return py::cast(s.members()); }

SearchMode to_mode(const std::string& mode) {
  if (mode == "first_feasible") return SearchMode::first_feasible;
  if (mode == "maximize") return SearchMode::maximize;
  throw InputError("unknown search mode '" + mode + "'");
}

py::dict level_dict(const LevelParams& l) {
  py::dict d;
  d["level"] = l.level;
  d["c"] = to_fraction(l.c);
  d["s"] = l.s;
  d["t_min"] = l.t_min;
  d["m"] = l.m;
  d["hypothesis_ok"] = l.hypothesis_ok;
  d["c_upper_ok"] = l.c_upper_ok;
  d["s_vs_m_ok"] = l.s_vs_m_ok;
  d["supplies_m_ok"] = l.supplies_m_ok;
  d["ok"] = l.ok();
  return d;
}

py::dict params_dict(const ExtractionParams& p) {
  py::dict d;
  d["n"] = p.n;
  d["r"] = p.r;
  d["c"] = p.c ? to_fraction(*p.c) : py::none();
  d["s"] = p.s;
  d["t_min"] = p.t_min;
  d["mode"] = to_string(p.mode);
  py::list levels;
  for (const auto& l : p.levels) levels.append(level_dict(l));
  d["levels"] = levels;
  d["mass_ok"] = p.mass_ok ? py::cast(*p.mass_ok) : py::none();
  d["parameters_feasible"] = p.parameters_feasible();
  d["feasible"] = p.feasible();
  return d;
}

py::object outcome(ExtractionOutcome out) {
  if (auto* cert = std::get_if<CoverCertificate>(&out)) return py::cast(std::move(*cert));
  return py::cast(std::get<ExtractionFailure>(std::move(out)));
}

py::object witness(const std::optional<BicliqueWitness>& w) {
  if (!w) return py::none();
  return py::make_tuple(w->left, to_list(w->right));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Clique-cover extraction core";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);
  py::register_exception<LimitError>(m, "LimitError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return build_graph(n, edges); }), py::arg("n"),
           py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

  m.def("gen_gnp", [](int n, const py::object& p, std::uint64_t seed) {
    return gen_gnp(n, parse_probability(py::str(p).cast<std::string>()), seed);
  }, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("gen_complete_multipartite", [](const std::vector<int>& sizes) { return gen_complete_multipartite(sizes); });
  m.def("overlay", [](const Graph& host, const Graph& planted, const std::vector<Vertex>& embedding) {
    return overlay(host, planted, embedding);
  });
  m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); });
  m.def("emit_edge_list", &emit_edge_list);

  py::class_<CliqueList>(m, "CliqueList")
      .def(py::init([](int arity, int host_n, std::vector<Tuple> tuples) {
             return CliqueList::from_tuples(arity, host_n, std::move(tuples));
           }),
           py::arg("arity"), py::arg("host_n"), py::arg("tuples"))
      .def_property_readonly("arity", &CliqueList::arity)
      .def_property_readonly("host_n", &CliqueList::host_n)
      .def("tuples", &CliqueList::tuples)
      .def("__len__", &CliqueList::size)
      .def("__contains__", [](const CliqueList& l, const Tuple& t) { return l.contains(t); })
      .def("__eq__", [](const CliqueList& a, const CliqueList& b) { return a == b; });

  m.def("enumerate_r_cliques", &enumerate_r_cliques);
  m.def("count_r_cliques", &count_r_cliques);
  m.def("sub_cliques", &sub_cliques);
  m.def("codegree", [](const CliqueList& l, const Tuple& facet) { return codegree(l, facet); });
  m.def("parse_clique_list", [](const std::string& text, std::optional<int> host_n) {
    return parse_clique_list(text, host_n);
  }, py::arg("text"), py::arg("host_n") = py::none());
  m.def("emit_clique_list", &emit_clique_list);

  m.def("chain_inequality_report", [](const Graph& g, int s) {
    auto r = chain_inequality_report(g, s);
    py::dict d;
    d["s"] = r.s;
    d["k_prev"] = r.k_prev;
    d["k_s"] = r.k_s;
    d["k_next"] = r.k_next;
    d["lhs"] = to_fraction(r.lhs);
    d["rhs"] = to_fraction(r.rhs);
    d["holds"] = r.holds;
    return d;
  });
  m.def("supersaturation_report", [](const Graph& g, int r) {
    auto rep = supersaturation_report(g, r);
    py::dict d;
    d["c"] = to_fraction(rep.c);
    d["applicable"] = rep.applicable;
    d["bound"] = to_fraction(rep.bound);
    d["k_next"] = rep.k_next;
    d["margin"] = to_fraction(rep.margin);
    d["strict_claim_holds"] = rep.strict_claim_holds;
    d["implied"] = rep.implied ? py::object(params_dict(*rep.implied)) : py::none();
    return d;
  });

  m.def("theorem_params", [](std::uint64_t n, int r, const py::object& c) {
    return params_dict(theorem_params(n, r, to_rational(c)));
  });

  py::class_<PruneResult>(m, "PruneResult")
      .def_readonly("kept", &PruneResult::kept)
      .def_property_readonly("threshold", [](const PruneResult& p) { return to_fraction(p.threshold); })
      .def_property_readonly("rounds", [](const PruneResult& p) {
        py::list out;
        for (const auto& round : p.rounds) out.append(py::make_tuple(round.trigger, round.removed));
        return out;
      })
      .def("log", &emit_prune_log);
  m.def("prune", [](const CliqueList& l, int n, const py::object& threshold) {
    return prune(l, n, to_rational(threshold));
  });
  m.def("prune_guarantee_check", [](const CliqueList& l, const PruneResult& res, const py::object& c, int n, int r) {
    auto rep = prune_guarantee_check(l, res, to_rational(c), n, r);
    py::dict d;
    d["codegree_ok"] = rep.codegree_ok;
    d["removal_bound_ok"] = rep.removal_bound_ok;
    d["size_applicable"] = rep.size_applicable;
    d["size_ok"] = rep.size_ok;
    d["all_ok"] = rep.all_ok();
    return d;
  });

  py::class_<BipartiteInstance>(m, "BipartiteInstance")
      .def(py::init<std::size_t, int>(), py::arg("left_size"), py::arg("right_n"))
      .def("add_edge", &BipartiteInstance::add_edge)
      .def("adjacent", &BipartiteInstance::adjacent)
      .def_property_readonly("left_size", &BipartiteInstance::left_size)
      .def_property_readonly("right_size", &BipartiteInstance::right_size)
      .def_property_readonly("edge_count", &BipartiteInstance::edge_count);
  m.def("lemma1_params", [](std::uint64_t m_, std::uint64_t n, const py::object& c, int r,
                            std::optional<std::uint64_t> edges) {
    auto p = lemma1_params(m_, n, to_rational(c), r, edges);
    py::dict d;
    d["s"] = p.s;
    d["t_min"] = p.t_min;
    d["c_lower_ok"] = p.c_lower_ok;
    d["c_upper_ok"] = p.c_upper_ok;
    d["s_vs_m_ok"] = p.s_vs_m_ok;
    d["density_ok"] = p.density_ok ? py::cast(*p.density_ok) : py::none();
    d["all_ok"] = p.all_ok();
    return d;
  }, py::arg("m"), py::arg("n"), py::arg("c"), py::arg("r"), py::arg("edges") = py::none());
  m.def("find_s_subset", [](const BipartiteInstance& f, std::size_t s, std::size_t t_min, const std::string& mode) {
    return witness(find_s_subset(f, s, t_min, to_mode(mode)));
  }, py::arg("f"), py::arg("s"), py::arg("t_min"), py::arg("mode") = "first_feasible");
  m.def("biclique_oracle", [](const BipartiteInstance& f, std::size_t s, std::uint64_t cap) {
    auto res = biclique_oracle(f, s, cap);
    return py::make_tuple(res.left, res.t);
  }, py::arg("f"), py::arg("s"), py::arg("cap") = kDefaultOracleCap);
  m.def("double_count_check", [](const BipartiteInstance& f, std::size_t s) {
    auto rep = double_count_check(f, s);
    py::dict d;
    d["lhs_sum"] = py::int_(py::str(rep.lhs_sum.get_str()));
    d["rhs_sum"] = py::int_(py::str(rep.rhs_sum.get_str()));
    d["equal"] = rep.equal;
    d["convex_lhs"] = to_fraction(rep.convex_lhs);
    d["convex_rhs"] = to_fraction(rep.convex_rhs);
    d["convexity_ok"] = rep.convexity_ok;
    return d;
  });
  m.def("generalized_binomial", [](const py::object& x, int s) { return to_fraction(generalized_binomial(to_rational(x), s)); });

  py::class_<CoverCertificate>(m, "CoverCertificate")
      .def_readonly("r", &CoverCertificate::r)
      .def_property_readonly("parts", [](const CoverCertificate& c) {
        py::list out;
        for (const auto& p : c.parts) out.append(to_list(p));
        return out;
      })
      .def_property_readonly("last_part", [](const CoverCertificate& c) { return to_list(c.last_part); })
      .def_readonly("disjoint_members", &CoverCertificate::disjoint_members)
      .def_property_readonly("params", [](const CoverCertificate& c) { return params_dict(c.params); })
      .def_property_readonly("s", &CoverCertificate::s)
      .def_property_readonly("t", &CoverCertificate::t)
      .def("to_text", &emit_certificate);

  py::class_<ExtractionFailure>(m, "ExtractionFailure")
      .def_property_readonly("kind", [](const ExtractionFailure& f) { return to_string(f.kind); })
      .def_readonly("level", &ExtractionFailure::level)
      .def_readonly("stage", &ExtractionFailure::stage)
      .def_property_readonly("params", [](const ExtractionFailure& f) { return params_dict(f.params); });

  m.def("extract", [](const Graph& g, const CliqueList& l, int r, const py::object& c) {
    return outcome(extract(g, l, r, to_rational(c)));
  });
  m.def("extract_with_target", [](const Graph& g, const CliqueList& l, int r, std::size_t s, std::size_t t_min,
                                  const py::object& threshold, std::optional<std::size_t> inner_s,
                                  std::optional<std::size_t> inner_t_min, std::size_t inner_candidates) {
    TargetOptions opts;
    opts.threshold = to_rational(threshold);
    opts.inner_s = inner_s;
    opts.inner_t_min = inner_t_min;
    opts.inner_candidates = inner_candidates;
    return outcome(extract_with_target(g, l, r, s, t_min, opts));
  }, py::arg("g"), py::arg("m"), py::arg("r"), py::arg("s"), py::arg("t_min"), py::arg("threshold") = 0,
        py::arg("inner_s") = py::none(), py::arg("inner_t_min") = py::none(),
        py::arg("inner_candidates") = TargetOptions{}.inner_candidates);
  m.def("parse_certificate", [](const std::string& text) { return parse_certificate(text); });

  m.def("verify_cover", [](const Graph& g, const CliqueList& l, const CoverCertificate& cert) {
    auto rep = verify_cover(g, l, cert);
    py::dict d;
    d["parts_ok"] = rep.parts_ok;
    d["completeness_ok"] = rep.completeness_ok;
    d["edges_in_k2m_ok"] = rep.edges_in_k2m_ok;
    d["members_ok"] = rep.members_ok;
    d["sizes_ok"] = rep.sizes_ok;
    d["all_ok"] = rep.all_ok();
    return d;
  });
}

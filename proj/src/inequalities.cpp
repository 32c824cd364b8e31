#include "cliquecover/inequalities.hpp"

#include "cliquecover/errors.hpp"

namespace cliquecover {

ChainReport chain_inequality_report(CliqueCounter& counter, int s) {
  if (s < 2) throw InputError("chain inequality needs s >= 2");
  ChainReport rep;
  rep.s = s;
  rep.k_s = counter.count(s);
  if (rep.k_s == 0) throw PreconditionError("k_" + std::to_string(s) + "(G) = 0");
  rep.k_prev = counter.count(s - 1);
  rep.k_next = counter.count(s + 1);

  const Rational n(counter.graph().n());
  const Rational sq(s);
  rep.lhs = Rational(to_big(rep.k_next) * (s + 1)) / (sq * to_big(rep.k_s)) - n / sq;
  rep.rhs = Rational(to_big(rep.k_s) * s) / (Rational(s - 1) * to_big(rep.k_prev)) - n / Rational(s - 1);
  rep.holds = rep.lhs >= rep.rhs;
  return rep;
}

ChainReport chain_inequality_report(const Graph& g, int s) {
  CliqueCounter counter(g);
  return chain_inequality_report(counter, s);
}

SupersaturationReport supersaturation_report(CliqueCounter& counter, int r) {
  if (r < 2) throw InputError("supersaturation report needs r >= 2");
  const Graph& g = counter.graph();
  SupersaturationReport rep;
  rep.r = r;
  rep.n = static_cast<std::uint64_t>(g.n());
  rep.edges = g.edge_count();
  rep.k_next = counter.count(r + 1);
  if (rep.n == 0) return rep;

  const Rational n(g.n());
  rep.c = Rational(2 * to_big(rep.edges)) / (n * n) - (1 - Rational(1, r));
  rep.c.canonicalize();
  rep.applicable = rep.c > 0;
  if (!rep.applicable) return rep;

  Rational scaled = rep.c / Rational(power(static_cast<std::uint64_t>(r), static_cast<unsigned>(r)));
  rep.bound = scaled * Rational(power(rep.n, static_cast<unsigned>(r + 1)));
  rep.margin = Rational(to_big(rep.k_next)) - rep.bound;
  rep.strict_claim_holds = rep.margin > 0;
  if (rep.n >= 2) rep.implied = theorem_params(rep.n, r + 1, scaled);
  return rep;
}

SupersaturationReport supersaturation_report(const Graph& g, int r) {
  CliqueCounter counter(g);
  return supersaturation_report(counter, r);
}

}  // namespace cliquecover

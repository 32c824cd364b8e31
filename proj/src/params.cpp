#include "cliquecover/params.hpp"

#include "cliquecover/certified.hpp"
#include "cliquecover/errors.hpp"

namespace cliquecover {

std::string to_string(Mode mode) { return mode == Mode::guaranteed ? "guaranteed" : "best_effort"; }

Mode parse_mode(const std::string& text) {
  if (text == "guaranteed") return Mode::guaranteed;
  if (text == "best_effort") return Mode::best_effort;
  throw InputError("unknown mode '" + text + "'");
}

bool ExtractionParams::parameters_feasible() const {
  if (mode != Mode::guaranteed || levels.empty()) return false;
  for (const auto& level : levels) {
    if (!level.ok()) return false;
  }
  return true;
}

bool ExtractionParams::feasible() const { return parameters_feasible() && mass_ok.value_or(false); }

ExtractionParams theorem_params(std::uint64_t n, int r, const Rational& c) {
  if (n < 2) throw InputError("cover parameters need n >= 2");
  if (r < 2) throw InputError("cover parameters need r >= 2");
  if (c <= 0) throw InputError("cover parameters need c > 0");

  ExtractionParams p;
  p.n = n;
  p.r = r;
  p.c = c;
  p.mode = Mode::guaranteed;

  Rational ck = c;
  for (int k = r; k >= 2; --k) {
    LevelParams level;
    level.level = k;
    level.c = ck;
    level.s = certified_floor_scaled_log(power(ck, static_cast<unsigned>(k)), n);
    level.t_min = certified_strict_ceil_power(n, 1 - power(ck, static_cast<unsigned>(k - 1)));
    level.hypothesis_ok = level.s >= 1;
    level.c_upper_ok = ck < Rational(1, 2);
    level.supplies_m_ok = k == r || level.t_min >= level.s;
    p.levels.push_back(level);
    ck = ck * k / 2;
  }
  // Level k's bipartite step has |A| = s_{k-1}, or |A| = n at the base.
  for (std::size_t i = 0; i < p.levels.size(); ++i) {
    auto& level = p.levels[i];
    level.m = i + 1 < p.levels.size() ? p.levels[i + 1].s : n;
    level.s_vs_m_ok = Rational(to_big(level.s)) <= level.c / 2 * Rational(to_big(level.m)) + 1;
  }
  p.s = p.levels.front().s;
  p.t_min = p.levels.front().t_min;
  return p;
}

}  // namespace cliquecover

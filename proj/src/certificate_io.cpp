#include <map>
#include <sstream>

#include "cliquecover/errors.hpp"
#include "cliquecover/extract.hpp"
#include "text_io.hpp"

namespace cliquecover {

namespace {

void write_vertices(std::ostream& out, const std::vector<Vertex>& vs) {
  for (auto v : vs) out << ' ' << v;
}

void write_flags(std::ostream& out, const ExtractionParams& p) {
  out << "flags";
  if (p.mass_ok) out << " mass_ok=" << (*p.mass_ok ? 1 : 0);
  for (const auto& level : p.levels) {
    const std::string key = " L" + std::to_string(level.level) + ".";
    out << key << "c=" << to_fraction_string(level.c) << key << "s=" << level.s << key << "t_min=" << level.t_min
        << key << "m=" << level.m << key << "hypothesis_ok=" << level.hypothesis_ok << key
        << "c_upper_ok=" << level.c_upper_ok << key << "s_vs_m_ok=" << level.s_vs_m_ok << key
        << "supplies_m_ok=" << level.supplies_m_ok;
  }
  out << '\n';
}

class CertReader {
 public:
  explicit CertReader(std::string_view text) : in_(text) {}

  std::vector<std::string_view> field(std::string_view key) {
    auto toks = in_.next(std::string(key).c_str());
    if (toks.empty() || toks.front() != key) in_.fail("expected field '" + std::string(key) + "'");
    toks.erase(toks.begin());
    return toks;
  }

  std::string_view single(std::string_view key) {
    auto toks = field(key);
    if (toks.size() != 1) in_.fail("field '" + std::string(key) + "' takes one value");
    return toks.front();
  }

  std::vector<Vertex> vertices(const std::vector<std::string_view>& toks) {
    std::vector<Vertex> out;
    for (auto tok : toks) out.push_back(in_.to_int(tok));
    return out;
  }

  std::vector<Vertex> line() { return vertices(in_.next("vertex line")); }

  bool flag(std::string_view value) {
    if (value == "1") return true;
    if (value == "0") return false;
    in_.fail("flag value must be 0 or 1");
  }

  detail::LineReader& reader() { return in_; }

 private:
  detail::LineReader in_;
};

void parse_flags(CertReader& in, const std::vector<std::string_view>& toks, ExtractionParams& p) {
  auto& reader = in.reader();
  std::map<int, LevelParams> levels;
  for (auto tok : toks) {
    auto eq = tok.find('=');
    if (eq == std::string_view::npos) reader.fail("flag '" + std::string(tok) + "' is not key=value");
    auto key = tok.substr(0, eq);
    auto value = tok.substr(eq + 1);
    if (key == "mass_ok") {
      p.mass_ok = in.flag(value);
      continue;
    }
    auto dot = key.find('.');
    if (key.size() < 2 || key.front() != 'L' || dot == std::string_view::npos) {
      reader.fail("unknown flag '" + std::string(key) + "'");
    }
    int k = reader.to_int(key.substr(1, dot - 1));
    auto name = key.substr(dot + 1);
    auto& level = levels[k];
    level.level = k;
    if (name == "c") {
      level.c = parse_rational(value);
    } else if (name == "s") {
      level.s = reader.to_uint(value);
    } else if (name == "t_min") {
      level.t_min = reader.to_uint(value);
    } else if (name == "m") {
      level.m = reader.to_uint(value);
    } else if (name == "hypothesis_ok") {
      level.hypothesis_ok = in.flag(value);
    } else if (name == "c_upper_ok") {
      level.c_upper_ok = in.flag(value);
    } else if (name == "s_vs_m_ok") {
      level.s_vs_m_ok = in.flag(value);
    } else if (name == "supplies_m_ok") {
      level.supplies_m_ok = in.flag(value);
    } else {
      reader.fail("unknown flag '" + std::string(key) + "'");
    }
  }
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) p.levels.push_back(it->second);
}

}  // namespace

std::string emit_certificate(const CoverCertificate& cert) {
  std::ostringstream out;
  out << "r " << cert.r << '\n';
  out << "c " << (cert.params.c ? to_fraction_string(*cert.params.c) : std::string("none")) << '\n';
  out << "s " << cert.params.s << '\n';
  out << "t " << cert.t() << '\n';
  out << "t_min " << cert.params.t_min << '\n';
  out << "n " << cert.params.n << '\n';
  out << "parts " << cert.parts.size() << '\n';
  for (const auto& part : cert.parts) {
    std::ostringstream line;
    write_vertices(line, part.members());
    auto text = line.str();
    out << (text.empty() ? text : text.substr(1)) << '\n';
  }
  out << "last_part";
  write_vertices(out, cert.last_part.members());
  out << '\n';
  out << "disjoint_members " << cert.disjoint_members.size() << '\n';
  for (const auto& member : cert.disjoint_members) {
    for (std::size_t i = 0; i < member.size(); ++i) out << (i ? " " : "") << member[i];
    out << '\n';
  }
  out << "mode " << to_string(cert.params.mode) << '\n';
  write_flags(out, cert.params);
  return out.str();
}

CoverCertificate parse_certificate(std::string_view text) {
  CertReader in(text);
  auto& reader = in.reader();
  CoverCertificate cert;
  cert.r = reader.to_int(in.single("r"));
  cert.params.r = cert.r;
  auto c = in.single("c");
  if (c != "none") cert.params.c = parse_rational(c);
  cert.params.s = reader.to_uint(in.single("s"));
  auto t = reader.to_uint(in.single("t"));
  cert.params.t_min = reader.to_uint(in.single("t_min"));
  cert.params.n = reader.to_uint(in.single("n"));
  auto part_count = reader.to_uint(in.single("parts"));
  for (std::uint64_t i = 0; i < part_count; ++i) {
    try {
      cert.parts.push_back(VertexSet(in.line()));
    } catch (const InputError& e) {
      if (e.line()) throw;
      reader.fail(e.what());
    }
  }
  try {
    cert.last_part = VertexSet(in.vertices(in.field("last_part")));
  } catch (const InputError& e) {
    if (e.line()) throw;
    reader.fail(e.what());
  }
  if (cert.last_part.size() != t) reader.fail("t does not match the size of last_part");
  auto member_count = reader.to_uint(in.single("disjoint_members"));
  for (std::uint64_t i = 0; i < member_count; ++i) cert.disjoint_members.push_back(in.line());
  cert.params.mode = parse_mode(std::string(in.single("mode")));
  parse_flags(in, in.field("flags"), cert.params);
  reader.expect_end();
  return cert;
}

}  // namespace cliquecover

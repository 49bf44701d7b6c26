#include "normlab/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "normlab/error.hpp"
#include "normlab/numtheory.hpp"
#include "normlab/structure.hpp"

namespace normlab {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorKind::ParseError, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

Group symmetric(std::size_t n) {
  if (n < 2) return Group::trivial(1);
  std::vector<Perm> gens{Perm::from_cycles(n, {{1, 2}})};
  if (n > 2) {
    std::vector<Point> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>(i + 1);
    gens.push_back(Perm::from_cycles(n, {cycle}));
  }
  return Group::from_generators(n, std::move(gens));
}

Group alternating(std::size_t n) {
  if (n < 3) return Group::trivial(std::max<std::size_t>(n, 1));
  std::vector<Perm> gens;
  for (Point k = 3; k <= n; ++k) gens.push_back(Perm::from_cycles(n, {{1, 2, k}}));
  return Group::from_generators(n, std::move(gens));
}

Group cyclic(std::size_t n) {
  if (n < 2) return Group::trivial(1);
  std::vector<Point> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>(i + 1);
  return Group::from_generators(n, {Perm::from_cycles(n, {cycle})});
}

Group dihedral(std::size_t n) {
  if (n == 2) {
    // Order 4 needs four points: the Klein four-group.
    return Group::from_generators(4, {Perm::from_cycles(4, {{1, 2}, {3, 4}}), Perm::from_cycles(4, {{1, 3}, {2, 4}})});
  }
  std::vector<Point> rotation(n), reflection(n);
  for (std::size_t i = 0; i < n; ++i) {
    rotation[i] = static_cast<Point>((i + 1) % n);
    reflection[i] = static_cast<Point>((n - i) % n);
  }
  return Group::from_generators(n, {Perm::from_raw(std::move(rotation)), Perm::from_raw(std::move(reflection))});
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

// Projective line: field element x is point x, infinity is point q.
Group psl2(std::uint64_t q) {
  const std::size_t n = q + 1;
  std::vector<Point> shift(n), invert(n);
  for (std::uint64_t x = 0; x < q; ++x) {
    shift[x] = static_cast<Point>((x + 1) % q);
    invert[x] = x == 0 ? static_cast<Point>(q) : static_cast<Point>((q - inverse_mod(x, q)) % q);
  }
  shift[q] = static_cast<Point>(q);
  invert[q] = 0;
  return Group::from_generators(n, {Perm::from_raw(std::move(shift)), Perm::from_raw(std::move(invert))});
}

Group agl1(std::uint64_t p) {
  if (p == 2) return cyclic(2);
  const std::uint64_t g = smallest_primitive_root(p);
  std::vector<Point> shift(p), scale(p);
  for (std::uint64_t x = 0; x < p; ++x) {
    shift[x] = static_cast<Point>((x + 1) % p);
    scale[x] = static_cast<Point>(x * g % p);
  }
  return Group::from_generators(p, {Perm::from_raw(std::move(shift)), Perm::from_raw(std::move(scale))});
}

Group direct_product(const std::vector<Group>& factors) {
  std::size_t degree = 0;
  for (const Group& f : factors) degree += f.degree();
  std::vector<Perm> gens;
  std::size_t offset = 0;
  for (const Group& f : factors) {
    for (const Perm& x : f.generators()) {
      std::vector<Point> images(degree);
      for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
      for (std::size_t i = 0; i < f.degree(); ++i) images[offset + i] = static_cast<Point>(offset + x[i]);
      gens.push_back(Perm::from_raw(std::move(images)));
    }
    offset += f.degree();
  }
  return Group::from_generators(degree, std::move(gens));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidParameter, "cannot read group file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::string GroupSpec::label() const {
  switch (kind) {
    case SpecKind::S: return "S:" + std::to_string(parameter);
    case SpecKind::A: return "A:" + std::to_string(parameter);
    case SpecKind::C: return "C:" + std::to_string(parameter);
    case SpecKind::D: return "D:" + std::to_string(parameter);
    case SpecKind::PSL2: return "PSL2:" + std::to_string(parameter);
    case SpecKind::AGL1: return "AGL1:" + std::to_string(parameter);
    case SpecKind::FILE: return "FILE:" + path;
    case SpecKind::PROD: {
      std::string out;
      for (const GroupSpec& f : factors) out += (out.empty() ? "" : "x") + f.label();
      return out;
    }
  }
  return {};
}

std::string Selector::label() const {
  switch (kind) {
    case Kind::None: return {};
    case Kind::Sylow: return "syl:" + std::to_string(value);
    case Kind::Stabilizer: return "stab:" + std::to_string(value);
    case Kind::Generators: {
      std::string out = "gens:";
      for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ";" : "") + generators[i];
      return out;
    }
  }
  return {};
}

GroupSpec parse_spec(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorKind::ParseError, "group spec '" + std::string(text) + "' lacks ':'");
  const std::string kind = upper(text.substr(0, colon));
  GroupSpec spec;
  if (kind == "FILE") {
    spec.kind = SpecKind::FILE;
    spec.path = std::string(trim(text.substr(colon + 1)));
    if (spec.path.empty()) throw Error(ErrorKind::ParseError, "FILE spec needs a path");
    return spec;
  }
  if (text.find_first_of("xX") != std::string_view::npos) {
    spec.kind = SpecKind::PROD;
    std::size_t start = 0;
    for (;;) {
      const auto pos = text.find_first_of("xX", start);
      spec.factors.push_back(parse_spec(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    return spec;
  }
  if (kind == "S") spec.kind = SpecKind::S;
  else if (kind == "A") spec.kind = SpecKind::A;
  else if (kind == "C") spec.kind = SpecKind::C;
  else if (kind == "D") spec.kind = SpecKind::D;
  else if (kind == "PSL2") spec.kind = SpecKind::PSL2;
  else if (kind == "AGL1") spec.kind = SpecKind::AGL1;
  else throw Error(ErrorKind::ParseError, "unknown group family '" + std::string(text.substr(0, colon)) + "'");
  spec.parameter = parse_uint(text.substr(colon + 1), "group parameter");
  return spec;
}

Selector parse_selector(std::string_view text) {
  text = trim(text);
  Selector sel;
  if (text.empty()) return sel;
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorKind::ParseError, "subgroup selector '" + std::string(text) + "' lacks ':'");
  const std::string kind(trim(text.substr(0, colon)));
  const std::string_view rest = text.substr(colon + 1);
  if (kind == "syl") {
    sel.kind = Selector::Kind::Sylow;
    sel.value = parse_uint(rest, "prime");
  } else if (kind == "stab") {
    sel.kind = Selector::Kind::Stabilizer;
    sel.value = parse_uint(rest, "point");
  } else if (kind == "gens") {
    sel.kind = Selector::Kind::Generators;
    std::size_t start = 0;
    for (;;) {
      const auto pos = rest.find(';', start);
      const auto piece = trim(rest.substr(start, pos == std::string_view::npos ? pos : pos - start));
      if (!piece.empty()) sel.generators.emplace_back(piece);
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
  } else {
    throw Error(ErrorKind::ParseError, "unknown subgroup selector '" + kind + "'");
  }
  return sel;
}

BuiltGroup parse_group_file(std::string_view text) {
  std::optional<std::size_t> degree;
  std::vector<Perm> gens, sgens;
  bool has_sgen = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const auto space = line.find_first_of(" \t");
    const std::string_view keyword = line.substr(0, space);
    const std::string_view arg = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
    auto fail = [&](const std::string& msg) -> Error {
      return Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + msg);
    };
    try {
      if (!degree) {
        if (keyword != "degree") throw fail("expected 'degree <n>'");
        const std::uint64_t n = parse_uint(arg, "degree");
        if (n < 1) throw Error(ErrorKind::EmptyDegree, "line " + std::to_string(line_no) + ": degree must be positive");
        degree = static_cast<std::size_t>(n);
      } else if (keyword == "gen" || keyword == "sgen") {
        Perm p = parse_cycles(*degree, arg);
        if (keyword == "gen") {
          gens.push_back(std::move(p));
        } else {
          has_sgen = true;
          sgens.push_back(std::move(p));
        }
      } else {
        throw fail("unknown keyword '" + std::string(keyword) + "'");
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ParseError && std::string_view(e.what()).find("line ") != std::string_view::npos) throw;
      if (e.kind() == ErrorKind::EmptyDegree) throw;
      throw fail(e.what());
    }
    if (end == text.size()) break;
  }
  if (!degree) throw Error(ErrorKind::ParseError, "line 1: missing 'degree <n>'");
  BuiltGroup out{Group::from_generators(*degree, std::move(gens)), std::nullopt, {}};
  if (has_sgen) {
    for (const Perm& s : sgens) {
      if (!out.group.contains(s)) {
        throw Error(ErrorKind::SubgroupNotContained, "sgen " + s.to_string() + " is not in the group");
      }
    }
    out.subgroup = Subgroup::trusted(out.group, Group::from_generators(*degree, std::move(sgens)));
  }
  return out;
}

BuiltGroup build(const GroupSpec& spec) {
  BuiltGroup out;
  const std::uint64_t n = spec.parameter;
  auto need = [&](bool ok, const std::string& msg) {
    if (!ok) throw Error(ErrorKind::InvalidParameter, spec.label() + ": " + msg);
  };
  switch (spec.kind) {
    case SpecKind::S:
      need(n >= 1 && n <= 64, "degree must be in 1..64");
      out.group = symmetric(n);
      break;
    case SpecKind::A:
      need(n >= 1 && n <= 64, "degree must be in 1..64");
      out.group = alternating(n);
      break;
    case SpecKind::C:
      need(n >= 1 && n <= 100'000, "n must be in 1..100000");
      out.group = cyclic(n);
      break;
    case SpecKind::D:
      need(n >= 2 && n <= 100'000, "n must be in 2..100000");
      out.group = dihedral(n);
      break;
    case SpecKind::PSL2:
      if (!is_prime(n)) throw Error(ErrorKind::NotPrime, spec.label() + ": q must be prime");
      need(n != 2 && n < 10'000, "q must be an odd prime below 10000");
      out.group = psl2(n);
      break;
    case SpecKind::AGL1:
      if (!is_prime(n)) throw Error(ErrorKind::NotPrime, spec.label() + ": p must be prime");
      need(n < 100'000, "p must be below 100000");
      out.group = agl1(n);
      break;
    case SpecKind::PROD: {
      need(spec.factors.size() >= 2, "a product needs at least two factors");
      std::vector<Group> factors;
      for (const GroupSpec& f : spec.factors) factors.push_back(build(f).group);
      out.group = direct_product(factors);
      break;
    }
    case SpecKind::FILE:
      out = parse_group_file(read_file(spec.path));
      break;
  }
  out.label = spec.label();
  return out;
}

Subgroup select(const Group& g, const Selector& selector) {
  switch (selector.kind) {
    case Selector::Kind::None: return Subgroup::whole(g);
    case Selector::Kind::Sylow:
      if (!is_prime(selector.value)) throw Error(ErrorKind::NotPrime, "syl:" + std::to_string(selector.value));
      return sylow_subgroup(g, selector.value);
    case Selector::Kind::Stabilizer:
      if (selector.value < 1 || selector.value > g.degree()) {
        throw Error(ErrorKind::PointOutOfRange, "stab:" + std::to_string(selector.value) + " outside 1.." + std::to_string(g.degree()));
      }
      return Subgroup::trusted(g, g.stabilizer(static_cast<Point>(selector.value)));
    case Selector::Kind::Generators: {
      std::vector<Perm> gens;
      for (const std::string& s : selector.generators) gens.push_back(parse_cycles(g.degree(), s));
      for (const Perm& p : gens) {
        if (!g.contains(p)) throw Error(ErrorKind::SubgroupNotContained, p.to_string() + " is not in the group");
      }
      return Subgroup::trusted(g, Group::from_generators(g.degree(), std::move(gens)));
    }
  }
  throw Error(ErrorKind::Internal, "unhandled selector");
}

BuiltGroup build(const GroupSpec& spec, const Selector& selector) {
  BuiltGroup out = build(spec);
  if (selector.kind != Selector::Kind::None) out.subgroup = select(out.group, selector);
  return out;
}

std::vector<GroupSpec> default_sweep() {
  std::vector<std::string> texts;
  for (int n = 2; n <= 6; ++n) texts.push_back("S:" + std::to_string(n));
  for (int n = 3; n <= 6; ++n) texts.push_back("A:" + std::to_string(n));
  for (int n = 2; n <= 30; ++n) texts.push_back("C:" + std::to_string(n));
  for (int n = 2; n <= 40; ++n) texts.push_back("D:" + std::to_string(n));
  for (int p = 2; p <= 47; ++p) {
    if (is_prime(static_cast<std::uint64_t>(p))) texts.push_back("AGL1:" + std::to_string(p));
  }
  for (int q : {3, 5, 7, 11, 13, 17}) texts.push_back("PSL2:" + std::to_string(q));
  for (const char* prod : {"C:2xC:2xC:2", "S:3xC:2", "S:3xC:3", "S:3xS:3", "D:4xC:2", "A:4xC:2", "A:4xC:3",
                           "S:4xC:2", "AGL1:5xC:2", "AGL1:7xC:3", "S:4xS:3", "A:5xC:2", "A:4xA:4", "S:5xC:2"}) {
    texts.emplace_back(prod);
  }
  std::vector<GroupSpec> specs;
  for (const std::string& t : texts) specs.push_back(parse_spec(t));
  return specs;
}

}  // namespace normlab

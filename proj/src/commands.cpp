#include "normlab/commands.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "normlab/error.hpp"
#include "normlab/numtheory.hpp"
#include "normlab/scan.hpp"

namespace normlab {
namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_orders(const std::vector<std::uint64_t>& orders) {
  std::string s;
  for (std::uint64_t o : orders) s += (s.empty() ? "" : ",") + std::to_string(o);
  return s.empty() ? std::string("-") : s;
}

}  // namespace

std::vector<Def21Mode> parse_modes(std::string_view text, bool empty_means_both) {
  if (text.starts_with("def21=")) text.remove_prefix(6);
  if (text.empty()) {
    if (empty_means_both) return {Def21Mode::FitNormal, Def21Mode::HNormal};
    return {Def21Mode::FitNormal};
  }
  if (text == "both") return {Def21Mode::FitNormal, Def21Mode::HNormal};
  const auto mode = mode_from_string(text);
  if (!mode) {
    throw Error(ErrorKind::ParseError, "unknown mode '" + std::string(text) + "' (fit-normal, h-normal or both)");
  }
  return {*mode};
}

std::set<std::string> parse_theorem_list(std::string_view text) {
  std::set<std::string> out;
  std::stringstream in{std::string(text)};
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") return {};
    out.insert(item);
  }
  return out;
}

// Each invariant is computed on its own so that one oversized computation
// does not hide the others.
std::map<std::string, std::string> analyze_group(const BuiltGroup& built) {
  const Group& g = built.group;
  std::map<std::string, std::string> a;
  auto field = [&](const std::string& key, auto&& compute) {
    try {
      a[key] = compute();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OrderTooLarge && e.kind() != ErrorKind::IndexTooLarge) throw;
      a[key] = std::string("skipped: ") + e.what();
    }
  };
  a["group"] = built.label;
  a["degree"] = std::to_string(g.degree());
  a["order"] = std::to_string(g.order());
  a["fingerprint"] = fingerprint(g);
  a["transitive"] = yes_no(g.is_transitive());
  const bool solvable = is_solvable(g);
  a["solvable"] = yes_no(solvable);
  const bool nilpotent = is_nilpotent(g);
  a["nilpotent"] = yes_no(nilpotent);
  if (nilpotent) a["nilpotency_class"] = std::to_string(nilpotency_class(g));
  a["derived_length"] = solvable ? std::to_string(derived_series(g).terms.size() - 1) : "-";
  field("fitting_order", [&] { return std::to_string(fitting_subgroup(g).order()); });
  if (solvable) field("fitting_length", [&] { return std::to_string(fitting_length(g)); });
  field("center_order", [&] { return std::to_string(center(g).order()); });
  field("minimal_normal_orders", [&] {
    std::vector<std::uint64_t> orders;
    for (const Subgroup& m : minimal_normal_subgroups(g)) orders.push_back(m.order());
    return join_orders(orders);
  });
  bool simple = false;
  field("simple", [&] { return yes_no(simple = is_simple(g)); });
  field("sylow_orders", [&] {
    std::string s;
    for (std::uint64_t p : prime_divisors(g.order())) {
      s += (s.empty() ? "" : ",") + std::to_string(p) + ":" + std::to_string(sylow_subgroup(g, p).order());
    }
    return s.empty() ? std::string("-") : s;
  });
  // A Frobenius group has a proper nontrivial normal kernel.
  field("frobenius", [&] {
    if (simple) return std::string("none");
    const auto d = frobenius_decomposition(g);
    if (!d) return std::string("none");
    return "kernel " + std::to_string(d->kernel.order()) + ", complement " + std::to_string(d->complement.order());
  });
  if (built.subgroup) {
    a["subgroup_order"] = std::to_string(built.subgroup->order());
    a["subgroup_fingerprint"] = fingerprint(built.subgroup->group());
  }
  return a;
}

std::vector<VerdictReport> verify_by_name(const VerifyRequest& req) {
  const auto& names = theorem_names();
  if (req.theorem == "intro" || std::find(names.begin(), names.end(), req.theorem) == names.end()) {
    throw Error(ErrorKind::UnknownTheorem, "unknown theorem '" + req.theorem + "'");
  }
  const BuiltGroup built = build(parse_spec(req.group), parse_selector(req.subgroup));
  if (!built.subgroup) throw Error(ErrorKind::InvalidParameter, "verify " + req.theorem + " needs a subgroup");
  const Group& g = built.group;
  const Subgroup& h = *built.subgroup;
  const std::string h_label = req.subgroup.empty() ? "file" : req.subgroup;
  const std::vector<SubjectGroup> subject{describe("G", built.label, g), describe("H", h_label, h.group())};
  std::vector<VerdictReport> out;

  if (req.theorem == "thompson" || req.theorem == "burnside") {
    std::optional<Subgroup> kernel;
    if (!req.kernel.empty()) kernel = select(g, parse_selector(req.kernel));
    out.push_back(guarded(req.theorem, subject, [&] {
      VerdictReport r;
      std::string source = req.kernel;
      if (req.theorem == "thompson") {
        if (!kernel) source = "Fit(G)";
        r = verify_thompson(kernel ? *kernel : fitting_subgroup(g), h, g);
      } else {
        // The kernel of a Frobenius group is unique, so a decomposition of G
        // supplies it. The complement property is then checked, never assumed.
        if (!kernel) {
          const auto d = frobenius_decomposition(g);
          kernel = d ? d->kernel : fitting_subgroup(g);
          source = d ? "Frobenius kernel of G" : "Fit(G)";
        }
        r = verify_burnside_complement(g, *kernel, h);
      }
      r.notes["kernel"] = source;
      r.subject.front() = subject.front();
      if (r.subject.size() == 3) {
        r.subject[1].label = source;
        r.subject[2].label = h_label;
      }
      return r;
    }));
    return out;
  }

  PairAnalysis pair(g, h, built.label, h_label);
  for (Def21Mode mode : req.modes) {
    out.push_back(guarded(req.theorem, subject, [&] {
      if (req.theorem == "comp22") return verify_comp22(pair, mode);
      if (req.theorem == "hall") return verify_hall_lemma(pair, mode);
      if (req.theorem == "rem23") return verify_rem23(pair, mode);
      return verify_simp(pair, mode);
    }));
  }
  return out;
}

std::vector<GroupSpec> resolve_scan_specs(const std::vector<std::string>& groups, std::string_view sweep) {
  std::vector<GroupSpec> specs;
  for (const std::string& text : groups) specs.push_back(parse_spec(text));
  if (!sweep.empty()) {
    if (sweep != "default") throw Error(ErrorKind::InvalidParameter, "unknown sweep '" + std::string(sweep) + "'");
    for (GroupSpec& s : default_sweep()) specs.push_back(std::move(s));
  }
  if (groups.empty() && sweep.empty()) specs = default_sweep();
  return specs;
}

int exit_code_for(const std::vector<VerdictReport>& reports) {
  bool all_skipped = !reports.empty();
  for (const VerdictReport& r : reports) {
    if (r.status == Status::Counterexample) return 3;
    for (const Check& c : r.consequence_checks) {
      if (!c.passed) return 3;
    }
    if (r.status != Status::SkippedTooLarge) all_skipped = false;
  }
  return all_skipped ? 4 : 0;
}

}  // namespace normlab

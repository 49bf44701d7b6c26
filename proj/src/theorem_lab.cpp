#include "normlab/theorem_lab.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "normlab/error.hpp"
#include "normlab/numtheory.hpp"

namespace normlab {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string join_strings(const std::vector<std::string>& parts, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string show(const Group& h) {
  return fingerprint(h) + " gens " + (h.generators().empty() ? std::string("()") : join_strings(generator_strings(h)));
}

Check make_check(std::string name, bool passed, std::string witness, std::string detail = {}) {
  if (passed) witness.clear();
  if (!passed && witness.empty()) throw Error(ErrorKind::Internal, "failing check '" + name + "' has no witness");
  return Check{std::move(name), passed, std::move(witness), std::move(detail)};
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string mult(std::uint64_t a, std::uint64_t b) { return std::to_string(a) + "*" + std::to_string(b); }

Check solvable_check(const Group& g, bool solvable) {
  std::string witness;
  if (!solvable) witness = "derived series stops at " + show(derived_series(g).terms.back().group());
  return make_check("G is solvable", solvable, witness);
}

Check nilpotent_check(const Group& h, bool nilpotent) {
  std::string witness;
  if (!nilpotent) witness = "lower central series stops at " + show(lower_central_series(h).terms.back().group());
  return make_check("H is nilpotent", nilpotent, witness);
}

Check maximal_normalizer_check(const MaximalNormalizerResult& r, Def21Mode mode) {
  return make_check("H is a maximal normalizer (" + to_string(mode) + ")", r.passed, r.witness, r.detail);
}

int omega(std::uint64_t n) {
  int count = 0;
  for (std::uint64_t p : prime_divisors(n)) {
    for (std::uint64_t m = n; m % p == 0; m /= p) ++count;
  }
  return count;
}

// Elements of a group with prime order, the ones that matter for
// fixed-point questions (a fixed point of h is a fixed point of its powers).
std::vector<Perm> prime_order_elements(const Group& g) {
  std::vector<Perm> out;
  g.for_each_element([&](const Perm& x) {
    if (is_prime(x.order())) out.push_back(x);
    return true;
  });
  return out;
}

std::optional<std::pair<Perm, Perm>> find_fixed_pair(const std::vector<Perm>& actors, const Group& k) {
  std::vector<Perm> k_elements;
  k.for_each_element([&](const Perm& x) {
    if (!x.is_identity()) k_elements.push_back(x);
    return true;
  });
  for (const Perm& h : actors) {
    for (const Perm& x : k_elements) {
      if (h * x == x * h) return std::make_pair(h, x);
    }
  }
  return std::nullopt;
}

void done(VerdictReport& r, Clock::time_point start) {
  r.finalize();
  r.elapsed_ms = ms_since(start);
}

VerdictReport pair_report(const std::string& theorem, PairAnalysis& pair, std::optional<Def21Mode> mode) {
  VerdictReport r;
  r.theorem = theorem;
  r.mode = mode;
  r.subject.push_back(describe("G", pair.group_label(), pair.group()));
  r.subject.push_back(describe("H", pair.subgroup_label(), pair.subgroup().group()));
  return r;
}

}  // namespace

std::string to_string(Status status) {
  switch (status) {
    case Status::Confirmed: return "confirmed";
    case Status::HypothesesNotMet: return "hypotheses-not-met";
    case Status::Counterexample: return "counterexample";
    case Status::SkippedTooLarge: return "skipped-too-large";
  }
  return "unknown";
}

std::optional<Status> status_from_string(std::string_view text) {
  for (Status s : {Status::Confirmed, Status::HypothesesNotMet, Status::Counterexample, Status::SkippedTooLarge}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

std::string to_string(Def21Mode mode) { return mode == Def21Mode::FitNormal ? "fit-normal" : "h-normal"; }

std::optional<Def21Mode> mode_from_string(std::string_view text) {
  if (text == "fit-normal") return Def21Mode::FitNormal;
  if (text == "h-normal") return Def21Mode::HNormal;
  return std::nullopt;
}

SubjectGroup describe(const std::string& role, const std::string& label, const Group& g) {
  return SubjectGroup{role, label, g.order(), fingerprint(g), generator_strings(g)};
}

bool VerdictReport::hypotheses_hold() const { return all_pass(hypothesis_checks); }

void VerdictReport::finalize() {
  if (status == Status::SkippedTooLarge) return;
  if (!hypotheses_hold()) {
    status = Status::HypothesesNotMet;
  } else {
    status = all_pass(conclusion_checks) ? Status::Confirmed : Status::Counterexample;
  }
}

// ---------------------------------------------------------------------------
// Pair analysis

PairAnalysis::PairAnalysis(Group g, Subgroup h, std::string g_label, std::string h_label)
    : g_(std::move(g)), h_(Subgroup::trusted(g_, h.group())), g_label_(std::move(g_label)), h_label_(std::move(h_label)) {}

const Subgroup& PairAnalysis::core() {
  if (!core_) core_ = normlab::core(g_, h_);
  return *core_;
}

const QuotientGroup& PairAnalysis::quotient() {
  if (!quotient_) quotient_ = normlab::quotient(g_, core());
  return *quotient_;
}

const Subgroup& PairAnalysis::h_bar() {
  if (!h_bar_) h_bar_ = quotient().project(h_);
  return *h_bar_;
}

const Subgroup& PairAnalysis::fit_h_bar() {
  if (!fit_h_bar_) fit_h_bar_ = Subgroup::trusted(quotient().image(), fitting_subgroup(h_bar().group()).group());
  return *fit_h_bar_;
}

bool PairAnalysis::g_solvable() {
  if (!g_solvable_) g_solvable_ = is_solvable(g_);
  return *g_solvable_;
}

bool PairAnalysis::h_nilpotent() {
  if (!h_nilpotent_) h_nilpotent_ = is_nilpotent(h_.group());
  return *h_nilpotent_;
}

bool PairAnalysis::h_normal() {
  if (!h_normal_) h_normal_ = is_normal(g_, h_);
  return *h_normal_;
}

const MaximalNormalizerResult& PairAnalysis::maximal_normalizer(Def21Mode mode) {
  auto& slot = mode == Def21Mode::FitNormal ? fit_mode_ : h_mode_;
  if (slot) return *slot;

  MaximalNormalizerResult r;
  r.core_order = core().order();
  const QuotientGroup& q = quotient();
  const Group& qg = q.image();
  const Subgroup& hb = h_bar();
  const Subgroup& fit = fit_h_bar();
  r.quotient_order = qg.order();
  r.h_bar_order = hb.order();
  r.fit_order = fit.order();

  auto finish = [&]() -> const MaximalNormalizerResult& {
    slot = r;
    return *slot;
  };

  if (h_.order() == g_.order()) {
    r.witness = "H = G is not proper";
    return finish();
  }
  if (fit.is_trivial()) {
    r.passed = true;
    r.detail = "Fit(H/C) is trivial; nothing to check";
    return finish();
  }

  const SubgroupLattice lattice = subgroup_lattice(fit.group());
  for (std::size_t i = lattice.size(); i-- > 0;) {
    const auto& entry = lattice.entries[i];
    if (entry.order == 1) break;
    const Subgroup in_fit = lattice.subgroup(i);
    const Subgroup l = Subgroup::trusted(qg, in_fit.group());
    const bool normal_in_fit = entry.order == fit.order() || is_normal(fit.group(), Subgroup::trusted(fit.group(), l.group()));
    if (!normal_in_fit) continue;
    const bool normal_in_h = std::all_of(hb.generators().begin(), hb.generators().end(),
                                         [&](const Perm& x) { return normalizes(x, l.group()); });
    if (mode == Def21Mode::HNormal && !normal_in_h) continue;
    ++r.candidates;
    auto witness_for = [&](const std::string& why) {
      return "L = " + show(q.preimage(l).group()) + " (" + why + ")";
    };
    if (!normal_in_h) {
      r.witness = witness_for("L/C is not normalized by H/C");
      r.detail = "checked " + std::to_string(r.candidates) + " subgroups L/C";
      return finish();
    }
    if (!normalizer_equals(qg, l, hb)) {
      const std::uint64_t n_order = normalizer(qg, l).order();
      r.witness = witness_for("|N(L/C)| = " + std::to_string(n_order) + ", |H/C| = " + std::to_string(hb.order()));
      r.detail = "checked " + std::to_string(r.candidates) + " subgroups L/C";
      return finish();
    }
  }
  r.passed = true;
  r.detail = "all " + std::to_string(r.candidates) + " subgroups L/C have normalizer H/C";
  return finish();
}

MaximalNormalizerResult is_maximal_normalizer(const Group& g, const Subgroup& h, Def21Mode mode) {
  PairAnalysis pair(g, h);
  return pair.maximal_normalizer(mode);
}

// ---------------------------------------------------------------------------
// Frobenius structure

FrobeniusCheck is_frobenius_product(const Group& g, const Subgroup& k, const Subgroup& h) {
  FrobeniusCheck out;
  if (k.is_trivial() || h.is_trivial()) {
    out.witness = k.is_trivial() ? "kernel is trivial" : "complement is trivial";
    return out;
  }
  const Subgroup y = join(g, Subgroup::trusted(g, k.group()), Subgroup::trusted(g, h.group()));
  for (const Perm& s : y.generators()) {
    for (const Perm& x : k.generators()) {
      const Perm c = conjugate(x, s);
      if (!k.contains(c)) {
        out.witness = "K not normal: " + x.to_string() + " conjugated by " + s.to_string() + " leaves K";
        return out;
      }
    }
  }
  const Subgroup meet = intersection(g, Subgroup::trusted(g, k.group()), Subgroup::trusted(g, h.group()));
  if (!meet.is_trivial()) {
    out.witness = "K meets H in " + show(meet.group());
    return out;
  }
  if (k.order() * h.order() != y.order()) {
    out.witness = "|K||H| = " + mult(k.order(), h.order()) + " but |<K,H>| = " + std::to_string(y.order());
    return out;
  }
  if (auto pair = find_fixed_pair(prime_order_elements(h.group()), k.group())) {
    out.witness = pair->first.to_string() + " centralizes " + pair->second.to_string();
    return out;
  }
  out.passed = true;
  out.detail = "|K| = " + std::to_string(k.order()) + ", |H| = " + std::to_string(h.order()) + ", |KH| = " + std::to_string(y.order());
  return out;
}

std::optional<FrobeniusDecomposition> frobenius_decomposition(const Group& g) {
  if (g.is_trivial() || is_abelian(g)) return std::nullopt;
  const SubgroupLattice lattice = subgroup_lattice(g);
  const ElementIndex& idx = *lattice.index;
  const std::uint64_t order = g.order();

  // Normal subgroups as kernels, Fit(G) first.
  const Subgroup fit = fitting_subgroup(g);
  std::vector<std::size_t> kernels;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& e = lattice.entries[i];
    if (e.order == 1 || e.order == order) continue;
    bool normal = true;
    for (const Perm& s : g.generators()) {
      for (std::uint32_t x : e.generators) {
        if (!e.members.test(idx.index_of(conjugate(idx.element(x), s)))) normal = false;
      }
    }
    if (!normal) continue;
    const bool is_fit = e.order == fit.order() &&
                        std::all_of(e.generators.begin(), e.generators.end(),
                                    [&](std::uint32_t x) { return fit.contains(idx.element(x)); });
    if (is_fit) {
      kernels.insert(kernels.begin(), i);
    } else {
      kernels.push_back(i);
    }
  }

  for (std::size_t ki : kernels) {
    const auto& kernel = lattice.entries[ki];
    const std::vector<std::uint32_t> k_members = kernel.members.indices();
    for (std::size_t hi = 0; hi < lattice.size(); ++hi) {
      const auto& comp = lattice.entries[hi];
      if (comp.order * kernel.order != order || comp.members.intersection_count(kernel.members) != 1) continue;
      bool fixed = false;
      for (std::uint32_t h : comp.members.indices()) {
        if (h == idx.identity() || !is_prime(idx.element_order(h))) continue;
        for (std::uint32_t x : k_members) {
          if (x != idx.identity() && idx.multiply(h, x) == idx.multiply(x, h)) {
            fixed = true;
            break;
          }
        }
        if (fixed) break;
      }
      if (fixed) continue;
      FrobeniusDecomposition d{lattice.subgroup(ki), lattice.subgroup(hi), true};
      if (!is_frobenius_product(g, d.kernel, d.complement).passed) {
        throw Error(ErrorKind::Internal, "Frobenius search and product test disagree");
      }
      return d;
    }
  }
  return std::nullopt;
}

FrobeniusCheck fixed_point_free(const Subgroup& k, const Subgroup& phi, const Group& ambient) {
  (void)ambient;
  for (const Perm& s : phi.generators()) {
    if (!normalizes(s, k.group())) throw Error(ErrorKind::DoesNotNormalize, s.to_string() + " does not normalize K");
  }
  FrobeniusCheck out;
  if (auto pair = find_fixed_pair(prime_order_elements(phi.group()), k.group())) {
    out.witness = pair->first.to_string() + " fixes " + pair->second.to_string();
    return out;
  }
  out.passed = true;
  return out;
}

DihedralCheck recognize_dihedral(const Group& p_group) {
  DihedralCheck out;
  const std::uint64_t order = p_group.order();
  if (order < 4 || !is_power_of(order, 2)) return out;
  bool index_two_cyclic = false;
  GroupBuilder involutions(p_group.degree());
  p_group.for_each_element([&](const Perm& x) {
    const std::uint64_t m = x.order();
    if (m == order / 2) index_two_cyclic = true;
    if (m == 2) involutions.add(x);
    return true;
  });
  out.dihedral = index_two_cyclic && involutions.order() == order;
  out.klein = out.dihedral && order == 4;
  return out;
}

std::optional<std::uint64_t> psl2_prime_for_order(std::uint64_t order) {
  for (std::uint64_t p = 3;; p += 2) {
    const std::uint64_t value = p * (p * p - 1) / 2;
    if (value > order) return std::nullopt;
    if (value == order && is_prime(p)) return p;
  }
}

// ---------------------------------------------------------------------------
// Verifiers

VerdictReport verify_comp22(PairAnalysis& pair, Def21Mode mode) {
  VerdictReport r = pair_report("comp22", pair, mode);
  const auto start = Clock::now();
  r.notes["reading"] = "decomposition read in G/C: G/C = Fit(G/C) x| H/C";

  r.hypothesis_checks.push_back(solvable_check(pair.group(), pair.g_solvable()));
  r.hypothesis_checks.push_back(make_check("H is not normal in G", !pair.h_normal(), "H is normal"));
  const std::uint64_t core_order = pair.core().order();
  r.hypothesis_checks.push_back(make_check("Cor_G(H) != H", core_order != pair.subgroup().order(),
                                           "core equals H: " + show(pair.core().group()),
                                           "|Cor_G(H)| = " + std::to_string(core_order)));
  r.hypothesis_checks.push_back(maximal_normalizer_check(pair.maximal_normalizer(mode), mode));

  if (r.hypotheses_hold()) {
    const QuotientGroup& q = pair.quotient();
    const Group& qg = q.image();
    const Subgroup fit = Subgroup::trusted(qg, fitting_subgroup(qg).group());
    const Subgroup& hb = pair.h_bar();
    const Subgroup meet = intersection(qg, fit, hb);
    r.conclusion_checks.push_back(make_check("Fit(G/C) meets H/C trivially", meet.is_trivial(),
                                             "intersection preimage " + show(q.preimage(meet).group())));
    const bool product = fit.order() * hb.order() == qg.order();
    r.conclusion_checks.push_back(
        make_check("|Fit(G/C)| * |H/C| = |G/C|", product,
                   mult(fit.order(), hb.order()) + " != " + std::to_string(qg.order()),
                   mult(fit.order(), hb.order()) + " = " + std::to_string(qg.order())));
    const Subgroup z = Subgroup::trusted(qg, center(pair.fit_h_bar().group()).group());
    const FrobeniusCheck frob = is_frobenius_product(qg, fit, z);
    const std::uint64_t y_order = fit.order() * z.order();
    r.conclusion_checks.push_back(make_check("Fit(G/C) Z(Fit(H/C)) is a Frobenius group", frob.passed, frob.witness,
                                             "order " + std::to_string(y_order) + "; " + frob.detail));
    r.notes["core_order"] = std::to_string(core_order);
    r.notes["quotient_order"] = std::to_string(qg.order());
    r.notes["fit_quotient_order"] = std::to_string(fit.order());
    r.notes["h_bar_order"] = std::to_string(hb.order());
    r.notes["frobenius_order"] = std::to_string(y_order);
  }
  done(r, start);
  return r;
}

VerdictReport verify_hall_lemma(PairAnalysis& pair, Def21Mode mode) {
  VerdictReport r = pair_report("hall", pair, mode);
  const auto start = Clock::now();
  r.hypothesis_checks.push_back(nilpotent_check(pair.subgroup().group(), pair.h_nilpotent()));
  r.hypothesis_checks.push_back(maximal_normalizer_check(pair.maximal_normalizer(mode), mode));
  if (r.hypotheses_hold()) {
    const QuotientGroup& q = pair.quotient();
    const Group& qg = q.image();
    const Subgroup& hb = pair.h_bar();
    const std::uint64_t index = qg.order() / hb.order();
    const std::uint64_t g = std::gcd(hb.order(), index);
    r.conclusion_checks.push_back(make_check("H/C is a Hall subgroup of G/C", is_hall(qg, hb),
                                             "gcd(" + std::to_string(hb.order()) + "," + std::to_string(index) + ") = " + std::to_string(g),
                                             "gcd(" + std::to_string(hb.order()) + "," + std::to_string(index) + ") = 1"));
    PairAnalysis inner(qg, hb, "G/C", "H/C");
    const bool trivial_core = inner.core().is_trivial();
    const MaximalNormalizerResult& mn = inner.maximal_normalizer(mode);
    std::string witness = !trivial_core ? "Cor(H/C) = " + show(inner.core().group()) : mn.witness;
    r.conclusion_checks.push_back(make_check("H/C is a maximal normalizer of G/C with trivial core",
                                             trivial_core && mn.passed, witness, mn.detail));
    r.notes["quotient_order"] = std::to_string(qg.order());
    r.notes["h_bar_order"] = std::to_string(hb.order());
  }
  done(r, start);
  return r;
}

VerdictReport verify_rem23(PairAnalysis& pair, Def21Mode mode) {
  VerdictReport r = pair_report("rem23", pair, mode);
  const auto start = Clock::now();
  const Group& g = pair.group();
  const Subgroup& h = pair.subgroup();
  r.hypothesis_checks.push_back(nilpotent_check(h.group(), pair.h_nilpotent()));
  r.hypothesis_checks.push_back(maximal_normalizer_check(pair.maximal_normalizer(mode), mode));
  const bool two_group = is_power_of(h.order(), 2);
  if (r.hypotheses_hold()) {
    const bool solvable = pair.g_solvable();
    const bool sylow2 = two_group && h.order() == p_part(g.order(), 2);
    std::string branch = solvable ? "solvable" : sylow2 ? "sylow-2" : "none";
    r.notes["branch"] = branch;
    r.conclusion_checks.push_back(make_check("G is solvable or H is a Sylow 2-subgroup", solvable || sylow2,
                                             "G not solvable and |H| = " + std::to_string(h.order()) + ", 2-part of |G| = " +
                                                 std::to_string(p_part(g.order(), 2)),
                                             branch + " branch"));
  }

  // Non-solvable G, nilpotent non-2-group H with Cor_G(H) != H: some U <= H
  // has H < N_G(U) < G.
  const bool applicable = !pair.g_solvable() && pair.h_nilpotent() && !two_group && pair.core().order() != h.order();
  if (applicable) {
    const SubgroupLattice lattice = subgroup_lattice(h.group());
    std::string found;
    for (std::size_t i = 0; i < lattice.size() && found.empty(); ++i) {
      const Subgroup u = Subgroup::trusted(g, lattice.subgroup(i).group());
      if (!is_normal(h.group(), Subgroup::trusted(h.group(), u.group()))) continue;
      const std::uint64_t n = normalizer(g, u).order();
      if (n > h.order() && n < g.order()) found = "U = " + show(u.group()) + ", |N_G(U)| = " + std::to_string(n);
    }
    r.consequence_checks.push_back(make_check("some U <= H has H < N_G(U) < G", !found.empty(),
                                              "no normal subgroup U of H has a normalizer strictly between H and G",
                                              found));
  } else {
    r.notes["corollary"] = "not applicable";
  }
  done(r, start);
  return r;
}

VerdictReport verify_simp(PairAnalysis& pair, Def21Mode mode) {
  VerdictReport r = pair_report("simp", pair, mode);
  const auto start = Clock::now();
  const Group& g = pair.group();
  const Subgroup& h = pair.subgroup();
  r.hypothesis_checks.push_back(nilpotent_check(h.group(), pair.h_nilpotent()));
  r.hypothesis_checks.push_back(maximal_normalizer_check(pair.maximal_normalizer(mode), mode));
  r.hypothesis_checks.push_back(make_check("G is not solvable", !pair.g_solvable(), "G is solvable"));
  if (!r.hypotheses_hold()) {
    done(r, start);
    return r;
  }

  const Subgroup fit = fitting_subgroup(g);
  r.conclusion_checks.push_back(make_check("Fit(G) <= H", fit.group().is_subgroup_of(h.group()), "Fit(G) = " + show(fit.group())));

  const std::vector<Subgroup> minimal = minimal_normal_subgroups(g);
  std::vector<std::string> mins;
  for (const Subgroup& m : minimal) mins.push_back(fingerprint(m.group()));
  r.conclusion_checks.push_back(make_check("G has a unique minimal normal subgroup K", minimal.size() == 1,
                                           std::to_string(minimal.size()) + " minimal normal subgroups: " + join_strings(mins)));
  if (minimal.size() == 1) {
    const Group& k = minimal.front().group();
    r.notes["k_order"] = std::to_string(k.order());
    std::vector<Subgroup> factors;
    if (is_simple(k)) {
      factors.push_back(Subgroup::whole(k));
    } else {
      factors = minimal_normal_subgroups(k);
    }
    bool simple_factors = !is_abelian(k) && !factors.empty();
    std::uint64_t product = 1;
    for (const Subgroup& s : factors) {
      product *= s.order();
      simple_factors = simple_factors && s.order() == factors.front().order() && is_simple(s.group());
    }
    simple_factors = simple_factors && product == k.order();
    r.notes["simple_factors"] = std::to_string(factors.size());
    r.conclusion_checks.push_back(make_check("K is a direct product of copies of a non-abelian simple group", simple_factors,
                                             "K = " + show(k) + " with " + std::to_string(factors.size()) + " minimal normal subgroups",
                                             std::to_string(factors.size()) + " factor(s) of order " +
                                                 std::to_string(factors.empty() ? 0 : factors.front().order())));

    bool dihedral = !factors.empty();
    bool klein = false;
    std::string bad;
    for (const Subgroup& s : factors) {
      const Subgroup p = sylow_subgroup(s.group(), 2);
      const DihedralCheck d = recognize_dihedral(p.group());
      klein = klein || d.klein;
      if (!d.dihedral && bad.empty()) bad = "Sylow 2-subgroup " + show(p.group());
      dihedral = dihedral && d.dihedral;
    }
    r.notes["dihedral_klein"] = klein ? "true" : "false";
    r.conclusion_checks.push_back(make_check("simple factors have dihedral Sylow 2-subgroups", dihedral,
                                             bad.empty() ? std::string("no simple factors") : bad,
                                             klein ? "Klein four-group (degenerate dihedral)" : ""));

    const std::uint64_t index = g.order() / k.order();
    r.conclusion_checks.push_back(make_check("G/K is a 2-group", is_power_of(index, 2),
                                             "|G/K| = " + std::to_string(index), "|G/K| = " + std::to_string(index)));

    std::string psl_detail, psl_witness;
    bool psl = !factors.empty();
    for (const Subgroup& s : factors) {
      const auto p = psl2_prime_for_order(s.order());
      if (!p) {
        psl = false;
        psl_witness = "factor order " + std::to_string(s.order()) + " is not p(p^2-1)/2";
        break;
      }
      psl_detail = "p = " + std::to_string(*p);
    }
    if (factors.empty()) psl_witness = "no simple factors";
    r.conclusion_checks.push_back(make_check("simple factors order-consistent with PSL(2,p)", psl, psl_witness, psl_detail));
  }
  done(r, start);
  return r;
}

VerdictReport verify_thompson(const Subgroup& k, const Subgroup& phi, const Group& ambient) {
  VerdictReport r;
  const auto start = Clock::now();
  r.theorem = "thompson";
  r.subject.push_back(describe("G", "ambient", ambient));
  r.subject.push_back(describe("K", "K", k.group()));
  r.subject.push_back(describe("Phi", "Phi", phi.group()));
  const bool prime = is_prime(phi.order());
  r.hypothesis_checks.push_back(make_check("Phi has prime order", prime, "|Phi| = " + std::to_string(phi.order())));
  const FrobeniusCheck fpf = fixed_point_free(k, phi, ambient);
  r.hypothesis_checks.push_back(make_check("Phi acts fixed-point-freely on K", fpf.passed, fpf.witness));
  if (r.hypotheses_hold()) {
    const bool nilpotent = is_nilpotent(k.group());
    std::string witness;
    if (!nilpotent) witness = "lower central series of K stops at " + show(lower_central_series(k.group()).terms.back().group());
    r.conclusion_checks.push_back(make_check("K is nilpotent", nilpotent, witness));
  }
  done(r, start);
  return r;
}

namespace {

void burnside_conclusions(VerdictReport& r, const Group& h) {
  const std::uint64_t order = h.order();
  if (omega(order) == 2) {
    r.conclusion_checks.push_back(make_check("|H| = pq implies H cyclic", is_cyclic(h), "H = " + show(h) + " is not cyclic"));
  } else {
    r.conclusion_checks.push_back(make_check("|H| = pq implies H cyclic", true, {}, "not applicable, |H| = " + std::to_string(order)));
  }
  for (std::uint64_t p : prime_divisors(order)) {
    const Subgroup s = sylow_subgroup(h, p);
    if (p == 2) {
      const bool cyclic = is_cyclic(s.group());
      const bool quaternion = !cyclic && is_generalized_quaternion(s.group());
      r.conclusion_checks.push_back(make_check("Sylow 2-subgroup cyclic or generalized quaternion", cyclic || quaternion,
                                               "Sylow 2-subgroup " + show(s.group()),
                                               cyclic ? "cyclic" : quaternion ? "generalized quaternion" : ""));
    } else {
      r.conclusion_checks.push_back(make_check("Sylow " + std::to_string(p) + "-subgroup cyclic", is_cyclic(s.group()),
                                               "Sylow " + std::to_string(p) + "-subgroup " + show(s.group())));
    }
  }
}

}  // namespace

VerdictReport verify_burnside_complement(const Subgroup& h) {
  VerdictReport r;
  const auto start = Clock::now();
  r.theorem = "burnside";
  r.subject.push_back(describe("H", "complement", h.group()));
  r.hypothesis_checks.push_back(make_check("H is a Frobenius complement", true, {}, "attested by caller"));
  r.notes["attested"] = "true";
  burnside_conclusions(r, h.group());
  done(r, start);
  return r;
}

VerdictReport verify_burnside_complement(const Group& g, const Subgroup& k, const Subgroup& h) {
  VerdictReport r;
  const auto start = Clock::now();
  r.theorem = "burnside";
  r.subject.push_back(describe("G", "G", g));
  r.subject.push_back(describe("K", "kernel", k.group()));
  r.subject.push_back(describe("H", "complement", h.group()));
  const FrobeniusCheck frob = is_frobenius_product(g, k, h);
  r.hypothesis_checks.push_back(make_check("KH is a Frobenius group with complement H", frob.passed, frob.witness, frob.detail));
  if (r.hypotheses_hold()) burnside_conclusions(r, h.group());
  done(r, start);
  return r;
}

VerdictReport verify_comp22(const Group& g, const Subgroup& h, Def21Mode mode) {
  PairAnalysis pair(g, h);
  return verify_comp22(pair, mode);
}

VerdictReport verify_hall_lemma(const Group& g, const Subgroup& h, Def21Mode mode) {
  PairAnalysis pair(g, h);
  return verify_hall_lemma(pair, mode);
}

VerdictReport verify_rem23(const Group& g, const Subgroup& h, Def21Mode mode) {
  PairAnalysis pair(g, h);
  return verify_rem23(pair, mode);
}

VerdictReport verify_simp(const Group& g, const Subgroup& h, Def21Mode mode) {
  PairAnalysis pair(g, h);
  return verify_simp(pair, mode);
}

VerdictReport guarded(const std::string& theorem, std::vector<SubjectGroup> subject,
                      const std::function<VerdictReport()>& run) {
  const auto start = Clock::now();
  try {
    VerdictReport r = run();
    r.elapsed_ms = ms_since(start);
    return r;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OrderTooLarge && e.kind() != ErrorKind::IndexTooLarge) throw;
    VerdictReport r;
    r.theorem = theorem;
    r.subject = std::move(subject);
    r.status = Status::SkippedTooLarge;
    r.notes["skipped"] = e.what();
    r.elapsed_ms = ms_since(start);
    return r;
  }
}

// ---------------------------------------------------------------------------
// Classical criteria

namespace {

struct Factorization {
  std::size_t a = 0, b = 0;
};

}  // namespace

std::vector<VerdictReport> intro_suite(const Group& g, const std::string& label) {
  std::vector<VerdictReport> out;
  const SubjectGroup subject_g = describe("G", label, g);
  const std::uint64_t order = g.order();

  for (std::uint64_t p : prime_divisors(order)) {
    const Subgroup sylow = sylow_subgroup(g, p);
    const std::string prime = std::to_string(p);
    auto base = [&](const std::string& theorem) {
      VerdictReport r;
      r.theorem = theorem;
      r.subject = {subject_g, describe("P", "syl:" + prime, sylow.group())};
      r.notes["prime"] = prime;
      return r;
    };
    const bool p_nilpotent = is_p_nilpotent(g, p);

    {
      VerdictReport r = base("intro-burnside");
      const auto start = Clock::now();
      const Subgroup n = normalizer(g, sylow);
      const Subgroup z = center(n.group());
      const bool central = sylow.group().is_subgroup_of(z.group());
      r.hypothesis_checks.push_back(make_check("P <= Z(N_G(P))", central, "Z(N_G(P)) = " + show(z.group())));
      if (central) {
        r.conclusion_checks.push_back(make_check("G is " + prime + "-nilpotent", p_nilpotent,
                                                 "no normal " + prime + "-complement"));
      }
      done(r, start);
      out.push_back(std::move(r));
    }

    if (p != 2) {
      VerdictReport r = base("intro-thompson");
      const auto start = Clock::now();
      const Subgroup j = Subgroup::trusted(g, thompson_subgroup(sylow.group()).group());
      const Subgroup zp = Subgroup::trusted(g, center(sylow.group()).group());
      const Subgroup nj = normalizer(g, j);
      const Subgroup cz = centralizer(g, zp);
      r.notes["thompson_order"] = std::to_string(j.order());
      r.hypothesis_checks.push_back(make_check("N_G(J(P)) is " + prime + "-nilpotent", is_p_nilpotent(nj.group(), p),
                                               "N_G(J(P)) = " + show(nj.group())));
      r.hypothesis_checks.push_back(make_check("C_G(Z(P)) is " + prime + "-nilpotent", is_p_nilpotent(cz.group(), p),
                                               "C_G(Z(P)) = " + show(cz.group())));
      if (r.hypotheses_hold()) {
        r.conclusion_checks.push_back(make_check("G is " + prime + "-nilpotent", p_nilpotent,
                                                 "no normal " + prime + "-complement"));
      }
      done(r, start);
      out.push_back(std::move(r));
    }

    if (order <= 200) {
      VerdictReport r = base("intro-frobenius");
      const auto start = Clock::now();
      const SubgroupLattice lattice = subgroup_lattice(g);
      bool all_p_quotients = true;
      std::string offender;
      for (std::size_t i = 0; i < lattice.size(); ++i) {
        const auto& e = lattice.entries[i];
        if (e.order == 1 || !is_power_of(e.order, p)) continue;
        const Subgroup q = lattice.subgroup(i);
        const std::uint64_t ratio = normalizer(g, q).order() / centralizer(g, q).order();
        if (!is_power_of(ratio, p)) {
          all_p_quotients = false;
          offender = "Q = " + show(q.group()) + " with |N/C| = " + std::to_string(ratio);
          break;
        }
      }
      r.notes["p_nilpotent"] = p_nilpotent ? "true" : "false";
      r.conclusion_checks.push_back(make_check(
          prime + "-nilpotent iff N_G(Q)/C_G(Q) is a " + prime + "-group for all " + prime + "-subgroups Q != 1",
          p_nilpotent == all_p_quotients,
          p_nilpotent ? offender : std::string("every N_G(Q)/C_G(Q) is a p-group but G is not p-nilpotent"),
          all_p_quotients ? "criterion holds" : offender));
      done(r, start);
      out.push_back(std::move(r));
    }
  }

  // Factorizations G = AB with A, B nilpotent.
  {
    const SubgroupLattice lattice = subgroup_lattice(g);
    std::vector<std::size_t> nilpotent;
    std::vector<int> classes(lattice.size(), -1);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      const Group s = lattice.subgroup(i).group();
      if (is_nilpotent(s)) {
        nilpotent.push_back(i);
        classes[i] = nilpotency_class(s);
      }
    }
    std::vector<Factorization> factorizations;
    for (std::size_t x = 0; x < nilpotent.size(); ++x) {
      for (std::size_t y = x; y < nilpotent.size(); ++y) {
        const auto& a = lattice.entries[nilpotent[x]];
        const auto& b = lattice.entries[nilpotent[y]];
        if (a.order * b.order < order) continue;
        const std::uint64_t meet = b.members.intersection_count(a.members);
        if (a.order * b.order == order * meet) factorizations.push_back({nilpotent[x], nilpotent[y]});
      }
    }
    auto name = [&](const Factorization& f) {
      return "A = " + show(lattice.subgroup(f.a).group()) + ", B = " + show(lattice.subgroup(f.b).group());
    };
    const bool solvable = is_solvable(g);
    const std::string count = std::to_string(factorizations.size());

    VerdictReport kw;
    {
      const auto start = Clock::now();
      kw.theorem = "intro-kegel-wielandt";
      kw.subject = {subject_g};
      kw.notes["factorizations"] = count;
      kw.hypothesis_checks.push_back(make_check("G = AB with A, B nilpotent", !factorizations.empty(), "no such factorization"));
      if (!factorizations.empty()) {
        kw.conclusion_checks.push_back(make_check("G is solvable", solvable, name(factorizations.front())));
      }
      done(kw, start);
    }
    out.push_back(std::move(kw));

    VerdictReport gross;
    {
      const auto start = Clock::now();
      gross.theorem = "intro-gross";
      gross.subject = {subject_g};
      gross.notes["factorizations"] = count;
      gross.hypothesis_checks.push_back(make_check("G = AB with A, B nilpotent", !factorizations.empty(), "no such factorization"));
      if (!factorizations.empty()) {
        const int length = solvable ? fitting_length(g) : -1;
        std::string witness;
        int best = -1;
        for (const Factorization& f : factorizations) {
          const int bound = classes[f.a] + classes[f.b];
          if (length > bound && witness.empty()) {
            witness = name(f) + " with classes " + std::to_string(classes[f.a]) + "+" + std::to_string(classes[f.b]);
          }
          if (best < 0 || bound < best) best = bound;
        }
        if (!solvable) witness = "G is not solvable";
        gross.notes["fitting_length"] = std::to_string(length);
        gross.conclusion_checks.push_back(make_check("Fitting length <= c(A) + c(B)", witness.empty(), witness,
                                                     "length " + std::to_string(length) + ", smallest bound " + std::to_string(best)));
      }
      done(gross, start);
    }
    out.push_back(std::move(gross));
  }
  return out;
}

}  // namespace normlab

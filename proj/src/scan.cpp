#include "normlab/scan.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <thread>

#include "normlab/error.hpp"
#include "normlab/numtheory.hpp"

namespace normlab {
namespace {

struct GroupOutcome {
  std::vector<VerdictReport> reports;
  std::map<std::string, std::uint64_t> stats;
};

VerdictReport skipped(const std::string& theorem, std::vector<SubjectGroup> subject, const std::exception& e) {
  VerdictReport r;
  r.theorem = theorem;
  r.subject = std::move(subject);
  r.status = Status::SkippedTooLarge;
  r.notes["skipped"] = e.what();
  return r;
}

class GroupScanner {
 public:
  GroupScanner(const GroupSpec& spec, const ScanOptions& options) : spec_(spec), options_(options) {}

  std::optional<GroupOutcome> run() {
    std::optional<BuiltGroup> built;
    try {
      built = build(spec_);
    } catch (const Error& e) {
      out_.reports.push_back(skipped("scan", {SubjectGroup{"G", spec_.label(), 0, "", {}}}, e));
      return std::move(out_);
    }
    g_ = built->group;
    if (g_.order() > options_.max_order) return std::nullopt;
    label_ = built->label;
    subject_g_ = describe("G", label_, g_);
    out_.stats["groups"] = 1;

    try {
      pairs();
    } catch (const Error& e) {
      out_.reports.push_back(skipped("scan", {subject_g_}, e));
    }
    if (wants("burnside") || wants("thompson")) item("frobenius", [&] { frobenius(); });
    if (wants("intro")) item("intro", [&] { append(intro_suite(g_, label_)); });

    std::stable_sort(out_.reports.begin(), out_.reports.end(), [](const VerdictReport& a, const VerdictReport& b) {
      auto key = [](const VerdictReport& r) {
        return std::make_tuple(r.subject.size() > 1 ? r.subject[1].fingerprint : std::string(), r.theorem,
                               r.mode ? static_cast<int>(*r.mode) : -1);
      };
      return key(a) < key(b);
    });
    return std::move(out_);
  }

 private:
  bool wants(const std::string& theorem) const {
    return options_.theorems.empty() || options_.theorems.contains(theorem);
  }

  void append(std::vector<VerdictReport> reports) {
    for (auto& r : reports) out_.reports.push_back(std::move(r));
  }

  template <typename F>
  void item(const std::string& theorem, F&& f, std::vector<SubjectGroup> subject = {}) {
    if (subject.empty()) subject = {subject_g_};
    try {
      f();
    } catch (const Error& e) {
      out_.reports.push_back(skipped(theorem, std::move(subject), e));
    }
  }

  void pairs() {
    const bool pair_theorems = wants("comp22") || wants("hall") || wants("rem23") || wants("simp");
    if (!pair_theorems) return;
    const SubgroupLattice lattice = subgroup_lattice(g_);
    const bool solvable = is_solvable(g_);
    std::uint64_t distinct = 0;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      if (lattice.entries[i].order == g_.order()) continue;
      const Subgroup h = lattice.subgroup(i);
      if (is_normal(g_, h)) continue;
      ++out_.stats["pairs"];
      const SubjectGroup subject_h = describe("H", fingerprint(h.group()), h.group());
      PairAnalysis pair(g_, h, label_, subject_h.label);
      bool any_hit = false;
      item("maximal-normalizer", [&] {
        for (Def21Mode mode : options_.modes) {
          if (!pair.maximal_normalizer(mode).passed) continue;
          any_hit = true;
          ++out_.stats[mode == Def21Mode::FitNormal ? "hits_fit_normal" : "hits_h_normal"];
          if (wants("comp22")) pair_item("comp22", pair, subject_h, [&] { return verify_comp22(pair, mode); });
          if (wants("hall")) pair_item("hall", pair, subject_h, [&] { return verify_hall_lemma(pair, mode); });
          if (wants("rem23")) pair_item("rem23", pair, subject_h, [&] { return verify_rem23(pair, mode); });
          if (wants("simp") && !solvable) pair_item("simp", pair, subject_h, [&] { return verify_simp(pair, mode); });
        }
        // The corollary does not need the maximal-normalizer hypothesis, so
        // it is also exercised on pairs that miss.
        if (!any_hit && wants("rem23") && !solvable && !is_power_of(h.order(), 2) && pair.h_nilpotent() &&
            pair.core().order() != h.order()) {
          pair_item("rem23", pair, subject_h, [&] { return verify_rem23(pair, options_.modes.front()); });
        }
      }, {subject_g_, subject_h});
      if (any_hit) ++distinct;
    }
    out_.stats["distinct_hits"] += distinct;
  }

  template <typename F>
  void pair_item(const std::string& theorem, PairAnalysis&, const SubjectGroup& subject_h, F&& f) {
    VerdictReport r = guarded(theorem, {subject_g_, subject_h}, f);
    for (const Check& c : r.consequence_checks) {
      if (!c.passed) ++out_.stats["consequence_failures"];
    }
    out_.reports.push_back(std::move(r));
  }

  void frobenius() {
    const auto d = frobenius_decomposition(g_);
    if (!d) return;
    ++out_.stats["frobenius_groups"];
    if (wants("burnside")) {
      out_.reports.push_back(verify_burnside_complement(g_, d->kernel, d->complement));
      out_.reports.back().subject.front() = subject_g_;
    }
    if (wants("thompson") && is_prime(d->complement.order())) {
      out_.reports.push_back(verify_thompson(d->kernel, d->complement, g_));
      out_.reports.back().subject.front() = subject_g_;
    }
  }

  const GroupSpec& spec_;
  const ScanOptions& options_;
  Group g_;
  std::string label_;
  SubjectGroup subject_g_;
  GroupOutcome out_;
};

}  // namespace

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names{"comp22", "hall", "rem23", "simp", "thompson", "burnside", "intro"};
  return names;
}

ScanResult scan(const std::vector<GroupSpec>& specs, const ScanOptions& options) {
  for (const std::string& t : options.theorems) {
    if (std::find(theorem_names().begin(), theorem_names().end(), t) == theorem_names().end()) {
      throw Error(ErrorKind::UnknownTheorem, "unknown theorem '" + t + "'");
    }
  }
  ScanResult result;
  for (const char* key : {"groups", "groups_over_max_order", "pairs", "hits_fit_normal", "hits_h_normal",
                          "distinct_hits", "frobenius_groups", "consequence_failures"}) {
    result.stats[key] = 0;
  }

  std::vector<std::optional<std::optional<GroupOutcome>>> slots(specs.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= specs.size()) return;
      std::optional<GroupOutcome> outcome;
      try {
        outcome = GroupScanner(specs[i], options).run();
      } catch (const std::exception& e) {
        GroupOutcome failed;
        failed.reports.push_back(skipped("scan", {SubjectGroup{"G", specs[i].label(), 0, "", {}}}, e));
        outcome = std::move(failed);
      }
      {
        std::lock_guard lock(mutex);
        slots[i].emplace(std::move(outcome));
      }
      ready.notify_all();
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::size_t>(specs.size(), 1))));
  std::vector<std::thread> threads;
  if (jobs == 1) {
    worker();
  } else {
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
  }

  for (std::size_t i = 0; i < specs.size(); ++i) {
    std::optional<GroupOutcome> outcome;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return slots[i].has_value(); });
      outcome = std::move(*slots[i]);
      slots[i].reset();
    }
    if (!outcome) {
      ++result.stats["groups_over_max_order"];
      continue;
    }
    for (const auto& [k, v] : outcome->stats) result.stats[k] += v;
    for (VerdictReport& r : outcome->reports) {
      if (options.on_report) options.on_report(r);
      result.reports.push_back(std::move(r));
    }
  }
  for (auto& t : threads) t.join();
  return result;
}

}  // namespace normlab

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "normlab/structure.hpp"

namespace normlab {

enum class Status { Confirmed, HypothesesNotMet, Counterexample, SkippedTooLarge };
std::string to_string(Status status);
std::optional<Status> status_from_string(std::string_view text);

// How the quantifier over L/C is read in the maximal-normalizer predicate:
// L/C normal in Fit(H/C), or normal in H/C.
enum class Def21Mode { FitNormal, HNormal };
std::string to_string(Def21Mode mode);
std::optional<Def21Mode> mode_from_string(std::string_view text);

struct Check {
  std::string name;
  bool passed = false;
  std::string witness;  // set whenever passed is false
  std::string detail;
};

struct SubjectGroup {
  std::string role;  // "G", "H", "K", "Phi", ...
  std::string label;
  std::uint64_t order = 0;
  std::string fingerprint;
  std::vector<std::string> generators;
};

SubjectGroup describe(const std::string& role, const std::string& label, const Group& g);

struct VerdictReport {
  std::string theorem;
  std::vector<SubjectGroup> subject;
  std::optional<Def21Mode> mode;
  std::vector<Check> hypothesis_checks;
  std::vector<Check> conclusion_checks;
  // Statements implied by the theorem that are checked alongside it. A
  // failure here is reported but does not change the status.
  std::vector<Check> consequence_checks;
  std::map<std::string, std::string> notes;
  Status status = Status::HypothesesNotMet;
  double elapsed_ms = 0;

  bool hypotheses_hold() const;
  // Derives status from the checks (a skipped report stays skipped).
  void finalize();
};

struct MaximalNormalizerResult {
  bool passed = false;
  std::string witness;
  std::string detail;
  std::uint64_t core_order = 0;
  std::uint64_t quotient_order = 0;
  std::uint64_t h_bar_order = 0;
  std::uint64_t fit_order = 0;
  std::size_t candidates = 0;  // L/C examined
};

// Caches the objects shared by every check on one (G, H) pair: the core C,
// G/C, H/C and Fit(H/C). Not thread-safe; use one per worker.
class PairAnalysis {
 public:
  PairAnalysis(Group g, Subgroup h, std::string g_label = "G", std::string h_label = "H");

  const Group& group() const { return g_; }
  const Subgroup& subgroup() const { return h_; }
  const std::string& group_label() const { return g_label_; }
  const std::string& subgroup_label() const { return h_label_; }

  const Subgroup& core();
  const QuotientGroup& quotient();
  const Subgroup& h_bar();
  const Subgroup& fit_h_bar();
  bool g_solvable();
  bool h_nilpotent();
  bool h_normal();

  const MaximalNormalizerResult& maximal_normalizer(Def21Mode mode);

 private:
  Group g_;
  Subgroup h_;
  std::string g_label_, h_label_;
  std::optional<Subgroup> core_;
  std::optional<QuotientGroup> quotient_;
  std::optional<Subgroup> h_bar_;
  std::optional<Subgroup> fit_h_bar_;
  std::optional<bool> g_solvable_, h_nilpotent_, h_normal_;
  std::optional<MaximalNormalizerResult> fit_mode_, h_mode_;
};

MaximalNormalizerResult is_maximal_normalizer(const Group& g, const Subgroup& h, Def21Mode mode = Def21Mode::FitNormal);

struct FrobeniusCheck {
  bool passed = false;
  std::string witness;
  std::string detail;
};

// K normal in <K,H>, K and H nontrivial with trivial intersection,
// |K||H| = |<K,H>|, and no non-identity h in H centralizes a non-identity k.
FrobeniusCheck is_frobenius_product(const Group& g, const Subgroup& k, const Subgroup& h);

struct FrobeniusDecomposition {
  Subgroup kernel;
  Subgroup complement;
  bool product_is_whole = false;
};
std::optional<FrobeniusDecomposition> frobenius_decomposition(const Group& g);

// Phi acts on K by conjugation; throws DoesNotNormalize.
FrobeniusCheck fixed_point_free(const Subgroup& k, const Subgroup& phi, const Group& ambient);

VerdictReport verify_comp22(PairAnalysis& pair, Def21Mode mode = Def21Mode::FitNormal);
VerdictReport verify_hall_lemma(PairAnalysis& pair, Def21Mode mode = Def21Mode::FitNormal);
VerdictReport verify_rem23(PairAnalysis& pair, Def21Mode mode = Def21Mode::FitNormal);
VerdictReport verify_simp(PairAnalysis& pair, Def21Mode mode = Def21Mode::FitNormal);
VerdictReport verify_thompson(const Subgroup& k, const Subgroup& phi, const Group& ambient);
// The caller attests that h is a Frobenius complement.
VerdictReport verify_burnside_complement(const Subgroup& h);
// Checks the complement property itself as a hypothesis.
VerdictReport verify_burnside_complement(const Group& g, const Subgroup& k, const Subgroup& h);

VerdictReport verify_comp22(const Group& g, const Subgroup& h, Def21Mode mode = Def21Mode::FitNormal);
VerdictReport verify_hall_lemma(const Group& g, const Subgroup& h, Def21Mode mode = Def21Mode::FitNormal);
VerdictReport verify_rem23(const Group& g, const Subgroup& h, Def21Mode mode = Def21Mode::FitNormal);
VerdictReport verify_simp(const Group& g, const Subgroup& h, Def21Mode mode = Def21Mode::FitNormal);

// Classical criteria quoted as motivation, checked per group.
std::vector<VerdictReport> intro_suite(const Group& g, const std::string& label);

// Runs a verifier, turning OrderTooLarge / IndexTooLarge into a
// skipped-too-large report and filling in the timing.
VerdictReport guarded(const std::string& theorem, std::vector<SubjectGroup> subject,
                      const std::function<VerdictReport()>& run);

// Sylow 2-subgroup shape: dihedral (Klein four counts, flagged).
struct DihedralCheck {
  bool dihedral = false;
  bool klein = false;
};
DihedralCheck recognize_dihedral(const Group& p_group);

// p with p(p^2-1)/2 == order, if any.
std::optional<std::uint64_t> psl2_prime_for_order(std::uint64_t order);

}  // namespace normlab

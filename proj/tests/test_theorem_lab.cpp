#include "doctest.h"
#include "normlab/error.hpp"
#include "normlab/theorem_lab.hpp"
#include "support.hpp"

using namespace normlab;
using support::named;
using support::select;
using support::sub;

namespace {

void check_witnesses(const VerdictReport& r) {
  for (const auto* list : {&r.hypothesis_checks, &r.conclusion_checks, &r.consequence_checks}) {
    for (const Check& c : *list) {
      if (!c.passed) CHECK_MESSAGE(!c.witness.empty(), c.name);
    }
  }
}

}  // namespace

TEST_CASE("status derivation") {
  VerdictReport r;
  r.hypothesis_checks.push_back({"h", true, "", ""});
  r.conclusion_checks.push_back({"c", true, "", ""});
  r.finalize();
  CHECK(r.status == Status::Confirmed);
  r.conclusion_checks.push_back({"c2", false, "w", ""});
  r.finalize();
  CHECK(r.status == Status::Counterexample);
  r.hypothesis_checks.push_back({"h2", false, "w", ""});
  r.finalize();
  CHECK(r.status == Status::HypothesesNotMet);
  r.status = Status::SkippedTooLarge;
  r.finalize();
  CHECK(r.status == Status::SkippedTooLarge);

  for (Status s : {Status::Confirmed, Status::HypothesesNotMet, Status::Counterexample, Status::SkippedTooLarge}) {
    CHECK(status_from_string(to_string(s)) == s);
  }
  CHECK(mode_from_string("fit-normal") == Def21Mode::FitNormal);
  CHECK(mode_from_string("h-normal") == Def21Mode::HNormal);
  CHECK_FALSE(mode_from_string("x"));
}

TEST_CASE("maximal normalizer on the small instances") {
  const Group s4 = named("S:4");
  const auto a = is_maximal_normalizer(s4, select(s4, "stab:4"));
  CHECK(a.passed);
  CHECK(a.core_order == 1);
  CHECK(a.fit_order == 3);
  const auto b = is_maximal_normalizer(s4, select(s4, "syl:2"));
  CHECK(b.passed);
  CHECK(b.core_order == 4);
  CHECK(b.quotient_order == 6);
  CHECK(b.h_bar_order == 2);
  CHECK(b.fit_order == 2);

  const Group psl = named("PSL2:17");
  for (Def21Mode mode : {Def21Mode::FitNormal, Def21Mode::HNormal}) {
    const auto c = is_maximal_normalizer(psl, select(psl, "syl:2"), mode);
    CHECK(c.passed);
    CHECK(c.candidates == 6);
  }

  // <(1 2 3)> in A5: N is S3-shaped of order 6, bigger than H.
  const Group a5 = named("A:5");
  const auto d = is_maximal_normalizer(a5, sub(a5, {"(1 2 3)"}));
  CHECK_FALSE(d.passed);
  CHECK(d.witness.find("|N(L/C)| = 6") != std::string::npos);
}

TEST_CASE("Frobenius products") {
  const Group a4 = named("A:4");
  const Subgroup v4 = sub(a4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(is_frobenius_product(a4, v4, sub(a4, {"(1 2 3)"})).passed);

  const Group s4 = named("S:4");
  const auto f = is_frobenius_product(s4, sub(s4, {"(1 2)(3 4)", "(1 3)(2 4)"}), select(s4, "stab:4"));
  CHECK_FALSE(f.passed);
  CHECK_FALSE(f.witness.empty());

  const Group c6 = named("C:6");
  const auto g = is_frobenius_product(c6, select(c6, "syl:3"), select(c6, "syl:2"));
  CHECK_FALSE(g.passed);
  CHECK_FALSE(g.witness.empty());
}

TEST_CASE("Frobenius decomposition") {
  const auto a4 = frobenius_decomposition(named("A:4"));
  REQUIRE(a4);
  CHECK(a4->kernel.order() == 4);
  CHECK(a4->complement.order() == 3);
  CHECK(a4->product_is_whole);
  const auto agl = frobenius_decomposition(named("AGL1:5"));
  REQUIRE(agl);
  CHECK(agl->kernel.order() == 5);
  CHECK(agl->complement.order() == 4);
  CHECK_FALSE(frobenius_decomposition(named("C:6")));
  CHECK_FALSE(frobenius_decomposition(named("S:4")));
  const auto s3 = frobenius_decomposition(named("S:3"));
  REQUIRE(s3);
  CHECK(s3->kernel.order() == 3);
}

TEST_CASE("fixed-point-free actions") {
  const Group a4 = named("A:4");
  const Subgroup v4 = sub(a4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(fixed_point_free(v4, sub(a4, {"(2 3 4)"}), a4).passed);
  const Group s4 = named("S:4");
  const Subgroup v = sub(s4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  const auto f = fixed_point_free(v, sub(s4, {"(1 2)"}), s4);
  CHECK_FALSE(f.passed);
  CHECK_FALSE(f.witness.empty());
  CHECK(fixed_point_free(v, Subgroup::trivial(s4), s4).passed);
  try {
    fixed_point_free(sub(s4, {"(1 2)"}), sub(s4, {"(1 2 3)"}), s4);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DoesNotNormalize);
  }
}

TEST_CASE("comp22") {
  const Group s4 = named("S:4");
  for (Def21Mode mode : {Def21Mode::FitNormal, Def21Mode::HNormal}) {
    const auto a = verify_comp22(s4, select(s4, "stab:4"), mode);
    CHECK(a.status == Status::Confirmed);
    CHECK(a.notes.at("frobenius_order") == "12");
    CHECK(a.mode == mode);
    const auto b = verify_comp22(s4, select(s4, "syl:2"), mode);
    CHECK(b.status == Status::Confirmed);
    CHECK(b.notes.at("core_order") == "4");
    CHECK(b.notes.at("quotient_order") == "6");
    CHECK(b.notes.at("frobenius_order") == "6");
  }
  const Group psl = named("PSL2:17");
  const auto c = verify_comp22(psl, select(psl, "syl:2"));
  CHECK(c.status == Status::HypothesesNotMet);
  check_witnesses(c);
}

TEST_CASE("Hall lemma") {
  const Group s4 = named("S:4");
  CHECK(verify_hall_lemma(s4, select(s4, "syl:2")).status == Status::Confirmed);
  const Group agl = named("AGL1:7");
  CHECK(verify_hall_lemma(agl, select(agl, "stab:1")).status == Status::Confirmed);
  const auto r = verify_hall_lemma(s4, select(s4, "stab:4"));
  CHECK(r.status == Status::HypothesesNotMet);
  check_witnesses(r);
}

TEST_CASE("rem23") {
  const Group psl = named("PSL2:17");
  const auto a = verify_rem23(psl, select(psl, "syl:2"));
  CHECK(a.status == Status::Confirmed);
  CHECK(a.notes.at("branch") == "sylow-2");
  const Group s4 = named("S:4");
  const auto b = verify_rem23(s4, select(s4, "syl:2"));
  CHECK(b.status == Status::Confirmed);
  CHECK(b.notes.at("branch") == "solvable");
  const Group a5 = named("A:5");
  const auto c = verify_rem23(a5, sub(a5, {"(1 2 3)"}));
  CHECK(c.status == Status::HypothesesNotMet);
  check_witnesses(c);
}

TEST_CASE("simp") {
  const Group psl = named("PSL2:17");
  const auto a = verify_simp(psl, select(psl, "syl:2"));
  CHECK(a.status == Status::Confirmed);
  CHECK(a.notes.at("k_order") == "2448");
  CHECK(a.notes.at("dihedral_klein") == "false");

  const Group a5 = named("PSL2:5");
  const auto b = verify_simp(a5, select(a5, "syl:2"));
  CHECK(b.status != Status::Counterexample);
  if (b.status == Status::Confirmed) CHECK(b.notes.at("dihedral_klein") == "true");

  const Group a5c2 = named("A:5xC:2");
  const auto c = verify_simp(a5c2, select(a5c2, "syl:2"));
  CHECK(c.status != Status::Counterexample);
  check_witnesses(c);
}

TEST_CASE("Thompson") {
  const Group agl = named("AGL1:7");
  const Subgroup k = select(agl, "syl:7");
  CHECK(verify_thompson(k, select(agl, "syl:3"), agl).status == Status::Confirmed);
  const Group a4 = named("A:4");
  CHECK(verify_thompson(select(a4, "syl:2"), select(a4, "syl:3"), a4).status == Status::Confirmed);
  // Phi = <(1 2)> fixes (1 2)(3 4) in V4.
  const Group s4 = named("S:4");
  const auto r = verify_thompson(sub(s4, {"(1 2)(3 4)", "(1 3)(2 4)"}), sub(s4, {"(1 2)"}), s4);
  CHECK(r.status == Status::HypothesesNotMet);
  check_witnesses(r);
}

TEST_CASE("Burnside complement") {
  for (const char* spec : {"AGL1:5", "AGL1:7"}) {
    const Group g = named(spec);
    const auto d = frobenius_decomposition(g);
    REQUIRE(d);
    CHECK(verify_burnside_complement(d->complement).status == Status::Confirmed);
    CHECK(verify_burnside_complement(g, d->kernel, d->complement).status == Status::Confirmed);
  }
  const Group a4 = named("A:4");
  CHECK(verify_burnside_complement(a4, select(a4, "syl:2"), select(a4, "syl:3")).status == Status::Confirmed);
  const Group s4 = named("S:4");
  const auto r = verify_burnside_complement(s4, select(s4, "syl:3"), select(s4, "syl:2"));
  CHECK(r.status == Status::HypothesesNotMet);
}

TEST_CASE("intro suite on small groups") {
  for (const char* spec : {"S:4", "A:4", "D:6", "AGL1:7", "A:5", "S:3xS:3"}) {
    for (const VerdictReport& r : intro_suite(named(spec), spec)) {
      CHECK_MESSAGE(r.status != Status::Counterexample, spec, " ", r.theorem);
      check_witnesses(r);
    }
  }
}

TEST_CASE("guarded turns size errors into skipped reports") {
  const auto r = guarded("comp22", {}, []() -> VerdictReport { throw Error(ErrorKind::OrderTooLarge, "big"); });
  CHECK(r.status == Status::SkippedTooLarge);
  CHECK(r.theorem == "comp22");
  CHECK_THROWS_AS(guarded("x", {}, []() -> VerdictReport { throw Error(ErrorKind::Internal, "bug"); }), Error);
}

TEST_CASE("dihedral recognition and PSL2 order matching") {
  CHECK(recognize_dihedral(named("D:8")).dihedral);
  CHECK_FALSE(recognize_dihedral(named("D:8")).klein);
  CHECK(recognize_dihedral(named("D:2")).klein);
  CHECK_FALSE(recognize_dihedral(named("C:8")).dihedral);
  CHECK_FALSE(recognize_dihedral(support::q8()).dihedral);
  CHECK(psl2_prime_for_order(2448) == 17u);
  CHECK(psl2_prime_for_order(60) == 5u);
  CHECK_FALSE(psl2_prime_for_order(120));
}

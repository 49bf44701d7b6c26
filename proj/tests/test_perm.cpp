#include "doctest.h"
#include "normlab/chain.hpp"
#include "normlab/error.hpp"
#include "normlab/group.hpp"
#include "normlab/limits.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace normlab;
using support::cyc;
using support::gen;

TEST_CASE("cycle notation") {
  CHECK(Perm::from_cycles(4, {{1, 2, 3}}).images() == std::vector<Point>{2, 3, 1, 4});
  CHECK(Perm::from_cycles(5, {}).is_identity());
  CHECK(Perm::from_cycles(5, {}).degree() == 5);
  CHECK(Perm::from_cycles(4, {{1, 2}, {3, 4}}).images() == std::vector<Point>{2, 1, 4, 3});
  CHECK(cyc(4, "(1 2 3)(4)").to_string() == "(1 2 3)");
  CHECK(cyc(3, "()").to_string() == "()");
  CHECK(cyc(6, " ( 3 1 )( 6 5 4 ) ").to_string() == "(1 3)(4 6 5)");
}

TEST_CASE("cycle notation errors") {
  CHECK_THROWS_AS(cyc(3, "(1 4)"), Error);
  CHECK_THROWS_AS(cyc(3, "(1 2 1)"), Error);
  CHECK_THROWS_AS(cyc(3, "(1 2"), Error);
  CHECK_THROWS_AS(cyc(3, "1 2"), Error);
  CHECK_THROWS_AS(Perm::from_cycles(3, {{0, 1}}), Error);
  try {
    cyc(3, "(1 2)(2 3)");
    FAIL("duplicate point accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicatePoint);
  }
}

TEST_CASE("composition acts left to right") {
  CHECK((cyc(2, "(1 2)") * cyc(2, "(1 2)")).is_identity());
  CHECK(cyc(3, "(1 2 3)") * cyc(3, "(1 2 3)") == cyc(3, "(1 3 2)"));
  const Perm a = cyc(3, "(1 2)");
  const Perm b = cyc(3, "(2 3)");
  CHECK(a * b == cyc(3, "(1 3 2)"));
  for (Point i = 1; i <= 3; ++i) CHECK((a * b).image(i) == b.image(a.image(i)));
  CHECK(conjugate(a, b) == b.inverse() * a * b);
  CHECK(commutator(a, b) == a.inverse() * b.inverse() * a * b);
  CHECK_THROWS_AS(cyc(3, "(1 2)") * cyc(4, "(1 2)"), Error);
}

TEST_CASE("inverse and order") {
  CHECK(Perm(4).inverse().is_identity());
  CHECK(cyc(3, "(1 2 3)").inverse() == cyc(3, "(1 3 2)"));
  support::Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const Perm r = support::random_perm(rng, 10);
    CHECK((r * r.inverse()).is_identity());
    CHECK((r.inverse() * r).is_identity());
    CHECK(r.order() == oracle::element_order(oracle::from(r)));
    CHECK(r.pow(static_cast<long long>(r.order())).is_identity());
    CHECK(r.pow(-1) == r.inverse());
    std::vector<Point> sorted = r.images();
    std::sort(sorted.begin(), sorted.end());
    for (Point k = 0; k < 10; ++k) CHECK(sorted[k] == k + 1);
  }
  CHECK(cyc(7, "(1 2)(3 4 5)").order() == 6);
}

TEST_CASE("group order and membership") {
  CHECK(gen(4, {"(1 2)", "(1 2 3 4)"}).order() == 24);
  CHECK(Group::from_generators(3, {}).order() == 1);
  CHECK(support::named("PSL2:17").order() == 2448);
  CHECK(support::named("PSL2:17").degree() == 18);
  CHECK(support::named("S:4").order() == 24);
  CHECK(support::named("A:5").order() == 60);
  CHECK(support::named("AGL1:7").order() == 42);

  CHECK(support::named("S:4").contains(cyc(4, "(1 2 3 4)")));
  CHECK_FALSE(support::named("A:4").contains(cyc(4, "(1 2)")));
  const Group v4 = gen(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(v4.contains(cyc(4, "(1 4)(2 3)")));
  CHECK_FALSE(v4.contains(cyc(4, "(1 2)")));
  CHECK_THROWS_AS(v4.contains(cyc(5, "(1 2)")), Error);
}

TEST_CASE("element enumeration") {
  CHECK(Group::trivial(3).elements() == std::vector<Perm>{Perm(3)});
  const auto s3 = support::named("S:3").elements();
  CHECK(s3.size() == 6);
  CHECK(std::set<Perm>(s3.begin(), s3.end()).size() == 6);

  const Group psl = support::named("PSL2:17");
  std::set<Perm> seen;
  psl.for_each_element([&](const Perm& p) {
    CHECK(psl.contains(p));
    seen.insert(p);
    return true;
  });
  CHECK(seen.size() == 2448);
}

TEST_CASE("enumeration bound fails loudly") {
  limits::set_enumeration_bound(100);
  try {
    support::named("S:5").elements();
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderTooLarge);
  }
  limits::reset_defaults();
  CHECK(support::named("S:5").elements().size() == 120);
}

TEST_CASE("orbits") {
  CHECK(support::named("S:4").orbit(1) == std::vector<Point>{1, 2, 3, 4});
  CHECK(gen(4, {"(1 2)"}).orbit(3) == std::vector<Point>{3});
  CHECK(support::named("AGL1:5").is_transitive());
  CHECK_FALSE(gen(4, {"(1 2)"}).is_transitive());
  CHECK(support::named("S:4").stabilizer(4).order() == 6);
}

TEST_CASE("chain invariants") {
  for (const std::string spec : {"S:5", "PSL2:7", "AGL1:11", "D:9xC:2"}) {
    const Group g = support::named(spec);
    const StabilizerChain& c = g.chain();
    std::uint64_t product = 1;
    for (std::size_t i = 0; i < c.depth(); ++i) product *= c.level(i).orbit.size();
    CHECK(product == g.order());
    CHECK(g.contains(g.identity()));
    for (const Perm& s : g.generators()) CHECK(g.contains(s));
    support::Rng rng(11);
    for (int i = 0; i < 20; ++i) {
      const auto r = c.sift(support::random_element(rng, g));
      CHECK(r.residue.is_identity());
      CHECK(r.level == c.depth());
    }
  }
}

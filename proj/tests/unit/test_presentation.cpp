#include "support.hpp"

#include "addchow/error.hpp"
#include "addchow/fields/random.hpp"
#include "addchow/presentation/presentation.hpp"

using namespace addchow;
using testing::el;
using testing::form;
using testing::tower;

TEST_SUITE("presentation") {

TEST_CASE("to_omega examples") {
  const TowerPtr A = tower("Q(a)");
  PresentationElement rel(A, 1);
  rel.add(el(A, "a"), {el(A, "a")});
  rel.add(el(A, "1 - a"), {el(A, "1 - a")});
  CHECK(to_omega(rel).is_zero());
  const TowerPtr T = tower("Q(t1,t2)");
  CHECK(to_omega(PresentationElement::term(el(T, "1"), {el(T, "t1"), el(T, "t2")})) == form(T, "(1/(t1*t2)) dt1^dt2", 2));
  const TowerPtr Qt = tower("Q(t)");
  CHECK(to_omega(PresentationElement::term(el(Qt, "t"), {el(Qt, "t")})) == form(Qt, "(1) dt", 1));
}

TEST_CASE("D examples") {
  const TowerPtr Qt = tower("Q(t)");
  CHECK(D(Qt, {el(Qt, "0")}).is_zero());
  const PresentationElement dt = D(Qt, {el(Qt, "t")});
  REQUIRE(dt.terms().size() == 1);
  CHECK(dt.terms()[0].a == el(Qt, "t"));
  const TowerPtr T = tower("Q(t1,t2)");
  const PresentationElement d12 = D(T, {el(T, "t1"), el(T, "t2")});
  REQUIRE(d12.terms().size() == 1);
  CHECK(d12.terms()[0].a == el(T, "t1*t2"));
  CHECK(to_omega(d12) == form(T, "(1) dt1^dt2", 2));
}

TEST_CASE("relation_check examples") {
  const TowerPtr T = tower("Q(t,t2)");
  CHECK(relation_check(el(T, "t"), {el(T, "t2")}).is_zero());
  CHECK(relation_check(el(T, "1/2"), {el(T, "t2")}).is_zero());
  CHECK(relation_check(el(T, "0"), {el(T, "t2")}).is_zero());
}

TEST_CASE("normalisation: slot order carries the sign, repeated slots vanish") {
  const TowerPtr T = tower("Q(t1,t2)");
  const FieldElement a = el(T, "t1 + 1"), x = el(T, "t1"), y = el(T, "t2");
  const PresentationElement p = PresentationElement::term(a, {x, y}) + PresentationElement::term(a, {y, x});
  CHECK(p.is_zero());
  CHECK(PresentationElement::term(a, {x, x}).is_zero());
  CHECK_THROWS_AS(PresentationElement::term(a, {el(T, "0")}), Error);
}

TEST_CASE("to_omega is k-linear") {
  const TowerPtr T = tower("F5(t1,t2)");
  RandomSource rng(14);
  for (int i = 0; i < 30; ++i) {
    const FieldElement a = rng.element(T), c = rng.element(T);
    const std::vector<FieldElement> b{rng.nonzero_element(T), rng.nonzero_element(T)};
    const PresentationElement x = PresentationElement::term(a, b);
    CHECK(to_omega(x.scaled(c)) == to_omega(x).scaled(c));
    CHECK(to_omega(x + x) == to_omega(x).scaled(FieldElement::from_int(T, 2)));
  }
}

}  // TEST_SUITE

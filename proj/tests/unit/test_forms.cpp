#include "support.hpp"

#include "addchow/error.hpp"
#include "addchow/fields/random.hpp"

using namespace addchow;
using testing::el;
using testing::form;
using testing::tower;

TEST_SUITE("forms") {

TEST_CASE("d and dlog worked examples") {
  const TowerPtr T = tower("Q(t1,t2)");
  CHECK(d(el(T, "t1*t2")) == form(T, "(t2) dt1 + (t1) dt2"));
  CHECK(d(el(T, "7")).is_zero());
  CHECK(wedge(dlog(el(T, "t1")), dlog(el(T, "t2"))) == form(T, "(1/(t1*t2)) dt1^dt2"));
  const TowerPtr A = tower("Q(a)");
  CHECK(wedge(dlog(el(A, "a")), dlog(el(A, "1 - a"))).is_zero());
  const TowerPtr K = tower("Q(t)[th]/(th^2 - t)");
  CHECK(d(el(K, "th")) == DifferentialForm::monomial(el(K, "1/(2*th)"), 1));
}

TEST_CASE("d is a derivation and d^2 = 0") {
  for (const char* f : {"Q(t1,t2,t3)", "F5(t1,t2)", "Q(t)[th]/(th^2 - t)"}) {
    const TowerPtr T = tower(f);
    RandomSource rng(17);
    for (int i = 0; i < 25; ++i) {
      const FieldElement x = rng.element(T), y = rng.nonzero_element(T);
      CHECK(d(x * y) == d(x).scaled(y) + d(y).scaled(x));
      CHECK(d_form(d(x)).is_zero());
      CHECK(dlog(y * y) == dlog(y) + dlog(y));
      const DifferentialForm w = wedge(d(x), dlog(y));
      CHECK(d_form(d_form(w.scaled(x))).is_zero());
    }
  }
}

TEST_CASE("wedge is graded commutative and associative") {
  const TowerPtr T = tower("Q(t1,t2,t3)");
  RandomSource rng(4);
  for (int i = 0; i < 20; ++i) {
    const DifferentialForm a = d(rng.element(T)), b = d(rng.element(T)), c = d(rng.element(T));
    CHECK(wedge(a, b) == -wedge(b, a));
    CHECK(wedge(a, a).is_zero());
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    const DifferentialForm ab = wedge(a, b);
    CHECK(wedge(ab, c) == wedge(c, ab));
  }
}

TEST_CASE("d of a wedge obeys the graded Leibniz rule") {
  const TowerPtr T = tower("Q(t1,t2,t3)");
  RandomSource rng(8);
  for (int i = 0; i < 15; ++i) {
    const DifferentialForm a = d(rng.element(T)).scaled(rng.element(T));
    const DifferentialForm b = d(rng.element(T)).scaled(rng.element(T));
    CHECK(d_form(wedge(a, b)) == wedge(d_form(a), b) - wedge(a, d_form(b)));
  }
}

TEST_CASE("gamma and nu on Q^n") {
  for (int n = 1; n <= 5; ++n) CHECK(d_form(gamma_form(0, n)) == nu_form(0, n));
  // gamma_0 = -1/v_0, so on (-a, a) it gives 1/a.
  const TowerPtr T = tower("Q(a)");
  CHECK(gamma_at({el(T, "-a"), el(T, "a")}) == form(T, "1/a"));
  const TowerPtr Qt = tower("Q(t)");
  CHECK(gamma_at({el(Qt, "-1 - t"), el(Qt, "t"), el(Qt, "1")}) == form(Qt, "(-1/(t^2 + t)) dt"));
}

TEST_CASE("gamma at a point agrees with the defining dlog sum") {
  // Direct (1/x_0) sum (-1)^i ^_{j != i} dlog x_j, no shared denominator.
  auto naive = [](const std::vector<FieldElement>& x) {
    const TowerPtr& T = x[0].tower();
    DifferentialForm sum(T, static_cast<int>(x.size()) - 2);
    for (std::size_t i = 1; i < x.size(); ++i) {
      DifferentialForm w = DifferentialForm::function(FieldElement::from_int(T, i % 2 ? -1 : 1));
      for (std::size_t j = 1; j < x.size(); ++j)
        if (j != i) w = wedge(w, dlog(x[j]));
      sum += w;
    }
    return sum.scaled(x[0].inverse());
  };
  for (const char* f : {"Q(t1,t2)", "F5(t1,t2)", "Q(t)[th]/(th^2 - t)"}) {
    const TowerPtr T = tower(f);
    RandomSource rng(12);
    for (int n = 1; n <= 3; ++n)
      for (int i = 0; i < 8; ++i) {
        std::vector<FieldElement> x{FieldElement(T)};
        for (int j = 0; j < n; ++j) {
          x.push_back(rng.nonzero_element(T));
          x[0] -= x.back();
        }
        if (x[0].is_zero()) continue;
        CHECK(gamma_at(x) == naive(x));
      }
  }
}

TEST_CASE("residues") {
  const TowerPtr T = tower("Q(t1,t2)");
  CHECK(residue_along(form(T, "(1) dt1^dt2", 2), 0).is_zero());
  CHECK(residue_along(form(T, "(1/t1) dt1^dt2", 2), 0) == form(T, "(1) dt2", 1));
  CHECK(residue_along(form(T, "(t2/t1) dt2^dt1", 2), 0) == form(T, "(-t2) dt2", 1));
  CHECK_THROWS_AS(residue_along(form(T, "(1/t1^2) dt1^dt2", 2), 0), Error);
}

TEST_CASE("trace of forms") {
  const TowerPtr K = tower("Q(t)[th]/(th^2 - t)");
  const TowerPtr k = K->base();
  CHECK(trace_form(DifferentialForm::monomial(el(K, "th"), 1)).is_zero());
  CHECK(trace_form(DifferentialForm::monomial(el(K, "1/(2*th)"), 1)).is_zero());
  CHECK(trace_form(DifferentialForm::monomial(el(K, "t"), 1)) == form(k, "(2*t) dt", 1));
  // Tr(dlog(th)) = Tr(1/(2t)) dt = dt/t, matching d log N(th) with N(th) = -t.
  CHECK(trace_form(dlog(el(K, "th"))) == dlog(el(k, "-t")));
}

TEST_CASE("form rendering re-parses") {
  const TowerPtr T = tower("Q(t1,t2,t3)");
  RandomSource rng(2);
  for (int i = 0; i < 20; ++i) {
    const DifferentialForm w = wedge(d(rng.element(T)), dlog(rng.nonzero_element(T)));
    CHECK(form(T, w.to_string(), 2) == w);
  }
}

TEST_CASE("pullback commutes with d") {
  const TowerPtr T = tower("Q(t1,t2)");
  const TowerPtr S = tower("Q(s1,s2)");
  RandomSource rng(6);
  for (int i = 0; i < 10; ++i) {
    const std::vector<FieldElement> images{rng.nonzero_element(S), rng.nonzero_element(S)};
    const FieldElement x = rng.element(T);
    CHECK(pullback(d(x), images) == d(substitute(x, images)));
  }
}

}  // TEST_SUITE

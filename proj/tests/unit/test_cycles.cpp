#include "support.hpp"

#include "addchow/cycles/curve.hpp"
#include "addchow/cycles/maps.hpp"
#include "addchow/error.hpp"
#include "addchow/fields/random.hpp"
#include "addchow/presentation/presentation.hpp"

using namespace addchow;
using testing::el;
using testing::form;
using testing::tower;
using testing::tuple;

namespace {

QPoint pt(const TowerPtr& T, const std::string& s) { return QPoint(tuple(T, s)); }

}  // namespace

TEST_SUITE("cycles") {

TEST_CASE("points must lie on Q^n") {
  const TowerPtr T = tower("Q(a)");
  CHECK_THROWS_AS(pt(T, "(a, a)"), Error);
  CHECK(pt(T, "(a, -a)").good_position());
  CHECK_FALSE(pt(T, "(a, -a, 0)").good_position());
}

TEST_CASE("faces and degeneracies") {
  const TowerPtr T = tower("Q(a)");
  const QPoint p = pt(T, "(a, -a)");
  CHECK(face(0, p) == pt(T, "(0, a, -a)"));
  CHECK(face(2, p) == pt(T, "(a, -a, 0)"));
  CHECK_THROWS_AS(face(3, p), Error);
  const QPoint q = pt(T, "(a, 2, -a - 2)");
  for (std::size_t j = 0; j <= 2; ++j) {
    CHECK(degeneracy(j, face(j, q)) == q);
    CHECK(degeneracy(j, face(j + 1, q)) == q);
  }
  CHECK(degeneracy_table(0, 2).size() == 2);
  CHECK_THROWS_AS(degeneracy_table(2, 2), Error);
}

TEST_CASE("star action") {
  const TowerPtr Q = tower("Q");
  CHECK(star(el(Q, "2"), pt(Q, "(-2, 1, 1)")) == pt(Q, "(-1, 1/2, 1/2)"));
  CHECK(star(el(Q, "0"), ZeroCycle::of(Q, pt(Q, "(-2, 1, 1)"))).is_zero());
  const TowerPtr T = tower("Q(t1,t2)");
  RandomSource rng(3);
  for (int i = 0; i < 20; ++i) {
    const FieldElement x = rng.nonzero_element(T), y = rng.nonzero_element(T);
    const FieldElement u = rng.nonzero_element(T);
    const ZeroCycle c = ZeroCycle::of(T, QPoint({u, -u}));
    CHECK(star(x, star(y, c)) == star(x * y, c));
  }
}

TEST_CASE("phi worked examples") {
  const TowerPtr T = tower("Q(t)");
  const ZeroCycle c = phi(el(T, "t"), {el(T, "t")});
  CHECK(c == ZeroCycle::of(T, pt(T, "(-1/t, 1/(t - 1), -1/(t*(t - 1)))")));
  CHECK(c.to_string() == "1 * (-1/t, 1/(t - 1), -1/(t^2 - t)) over Q(t)");
  CHECK(phi(el(T, "t"), {el(T, "1")}).is_zero());
  CHECK(phi(el(T, "0"), {el(T, "t")}).is_zero());
  // Main-theorem sign for n = 2: t dlog t = dt goes to -dt.
  CHECK(eval_gamma(c) == form(T, "(-1) dt", 1));
}

TEST_CASE("eval_gamma worked examples") {
  const TowerPtr A = tower("Q(a)");
  CHECK(eval_gamma(ZeroCycle::of(A, pt(A, "(-a, a)"))) == form(A, "1/a"));
  const TowerPtr T = tower("Q(t)");
  CHECK(eval_gamma(ZeroCycle::of(T, pt(T, "(-1 - t, t, 1)"))) == form(T, "(-1/(t^2 + t)) dt", 1));
  CHECK_THROWS_AS(gamma_of_point(pt(T, "(t, -t, 0)")), Error);
}

TEST_CASE("eval_gamma of a closed point is the trace") {
  const TowerPtr K = tower("Q(t)[th]/(th^2 - t)");
  const TowerPtr k = K->base();
  const QPoint p = pt(K, "(th, 1, -th - 1)");
  ZeroCycle c(k, 2);
  c.add(1, p);
  CHECK(eval_gamma(c) == trace_form(gamma_of_point(p)));
  CHECK(push_forward(ZeroCycle::of(K, p), k) == c);
}

TEST_CASE("cycle rendering re-parses") {
  const TowerPtr T = tower("Q(t)");
  ZeroCycle c = phi(el(T, "t"), {el(T, "t")}) + phi(el(T, "t + 1"), {el(T, "2*t")}).scaled(3);
  CHECK(parse_cycle(T, 2, c.to_string()) == c);
  const TowerPtr K = tower("Q(t)[th]/(th^2 - t)");
  ZeroCycle e(T, 2);
  e.add(-2, pt(K, "(th, 1, -th - 1)"));
  CHECK(parse_cycle(T, 2, e.to_string()) == e);
}

TEST_CASE("linearity curve display") {
  const TowerPtr Q = tower("Q");
  const QPoint u = pt(Q, "(-2, 1, 1)");
  const ParametrizedCurve W = linearity_curve(el(Q, "1"), el(Q, "1"), u);
  const ZeroCycle cu = ZeroCycle::of(Q, u);
  CHECK(curve_face(W, 0) == star(el(Q, "2"), cu));
  CHECK(curve_face(W, 1) == cu + cu);
  for (std::size_t j = 2; j <= 3; ++j) CHECK(curve_face(W, j).is_zero());
  CHECK(eval_gamma(curve_boundary(W)).is_zero());
  const ParametrizedCurve V = linearity_curve(el(Q, "3"), el(Q, "-3"), u);
  CHECK(curve_face(V, 0).is_zero());
  CHECK_THROWS_AS(linearity_curve(el(Q, "0"), el(Q, "1"), u), Error);
}

TEST_CASE("Gamma(b, u) boundary") {
  const TowerPtr T = tower("Q(t)");
  const FieldElement b = el(T, "t"), one = el(T, "1");
  const std::vector<FieldElement> u{el(T, "1")};
  const ZeroCycle bd = curve_boundary(gamma_curve(b, u));
  const ZeroCycle expected = star(one - b, ZeroCycle::of(T, QPoint({-one, one - b.inverse(), one / b}))) +
                             star(b, ZeroCycle::of(T, QPoint({-one, b / (b - one), -(one / (b - one))})));
  CHECK(bd == expected);
  CHECK(eval_gamma(bd).is_zero());
  CHECK_THROWS_AS(gamma_curve(el(T, "1"), u), Error);
}

TEST_CASE("trace curve over Q(sqrt 2)") {
  const TowerPtr K = tower("Q[th]/(th^2 - 2)");
  const TowerPtr Q = K->base();
  const FieldElement t = el(K, "th + 1");
  const MinimalPolynomialData P = minimal_polynomial_data(minimal_polynomial(-t.inverse()));
  const FieldElement ratio = P.a[1] / P.a[0];
  CHECK(ratio == el(Q, "2"));  // Tr(1 + sqrt 2)
  const QPoint alpha = pt(Q, "(-1, 3, -2)");
  ZeroCycle bd = curve_boundary(trace_curve(P, alpha));
  CHECK(eval_gamma(bd).is_zero());
  INFO(bd.to_string());
  CHECK(bd.degree() == -1);
}

TEST_CASE("nabla") {
  const TowerPtr T = tower("Q(t)");
  const QPoint x = pt(T, "(t, -t)");
  const QPoint y = nabla(x);
  CHECK(y.n() == 2);
  // Observed: gamma_1(nabla x) = d gamma_0(x) = dt/t^2.
  CHECK(gamma_of_point(y) == form(T, "(1/t^2) dt", 1));
  CHECK(d_form(gamma_of_point(x)) == form(T, "(1/t^2) dt", 1));
  CHECK_THROWS_AS(nabla(pt(T, "(1, -1)")), Error);
}

TEST_CASE("curve constructor validates") {
  const TowerPtr Q = tower("Q");
  const TowerPtr S = ParametrizedCurve::parameter_tower(Q);
  CHECK_THROWS_AS(ParametrizedCurve(Q, {el(S, "s"), el(S, "s")}), Error);
  CHECK_THROWS_AS(ParametrizedCurve(Q, {el(S, "s"), el(S, "0"), el(S, "-s")}), Error);
  CHECK_THROWS_AS(ParametrizedCurve::parameter_tower(tower("Q[th]/(th^2 - 2)")), Error);
}

}  // TEST_SUITE

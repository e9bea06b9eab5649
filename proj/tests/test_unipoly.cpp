#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qsp/unipoly.hpp"

using namespace qsp;

namespace {

Poly make_poly(std::initializer_list<long> coeffs) {
  std::vector<ExactScalar> c;
  for (long k : coeffs) c.emplace_back(k);
  return Poly(std::move(c));
}

Poly random_poly(std::mt19937_64& rng, int maxdeg) {
  std::vector<ExactScalar> c;
  int deg = static_cast<int>(rng() % static_cast<unsigned>(maxdeg + 1));
  for (int i = 0; i <= deg; ++i)
    c.emplace_back(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 6) + 1);
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("ratfun_eval") {
  RatFun f(make_poly({0, 5, 1}), make_poly({0, 1}));  // (eps^2 + 5 eps)/eps
  CHECK(ratfun_eval(f, ExactScalar(2)) == ExactScalar(7));

  RatFun c(ExactScalar(3, 4));
  CHECK(ratfun_eval(c, ExactScalar(123, 7)) == ExactScalar(3, 4));

  RatFun pole(make_poly({1}), make_poly({-1, 1}));  // 1/(eps - 1)
  CHECK_THROWS_AS(ratfun_eval(pole, ExactScalar(1)), pole_error);
}

TEST_CASE("ratfun_limit") {
  RatFun f(make_poly({0, 5, 1}), make_poly({0, 1}));
  CHECK(ratfun_limit(f, ExactScalar(0)) == ExactScalar(5));  // removable singularity

  RatFun g(make_poly({-1, 1}), make_poly({-1, 1}));  // (eps-1)/(eps-1)
  CHECK(ratfun_limit(g, ExactScalar(1)) == ExactScalar(1));

  RatFun pole(make_poly({1}), make_poly({0, 1}));  // 1/eps
  CHECK_THROWS_AS(ratfun_limit(pole, ExactScalar(0)), pole_error);
}

TEST_CASE("ratfun_residue") {
  RatFun f(make_poly({2, 3}), make_poly({0, 1}));  // (3 eps + 2)/eps
  CHECK(ratfun_residue(f, ExactScalar(0)) == ExactScalar(2));

  RatFun regular(make_poly({1, 2, 3}), make_poly({5}));
  CHECK(ratfun_residue(regular, ExactScalar(4)) == ExactScalar(0));

  RatFun dbl(make_poly({1}), make_poly({0, 0, 1}));  // 1/eps^2
  CHECK_THROWS_AS(ratfun_residue(dbl, ExactScalar(0)), pole_order_error);
}

TEST_CASE("poly_interpolate") {
  using P = std::pair<ExactScalar, ExactScalar>;
  Poly lin = poly_interpolate({P{0, 1}, P{1, 3}});
  CHECK(lin == make_poly({1, 2}));

  Poly zero = poly_interpolate({P{0, 0}, P{1, 0}, P{2, 0}});
  CHECK(zero.is_zero());

  Poly quad = poly_interpolate({P{0, 1}, P{1, 2}, P{2, 5}});
  CHECK(quad == make_poly({1, 0, 1}));

  CHECK_THROWS_AS(poly_interpolate({P{1, 2}, P{1, 3}}), input_error);
}

TEST_CASE("product rule on random polynomials") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    Poly f = random_poly(rng, 6), g = random_poly(rng, 6);
    CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
  }
}

TEST_CASE("residue equals limit of (x - p) f") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 30; ++i) {
    Poly num = random_poly(rng, 4);
    ExactScalar p(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 4) + 1);
    if (num.is_zero() || num.eval(p).is_zero()) continue;
    Poly den = make_poly({0, 1});  // x
    den = Poly(std::vector<ExactScalar>{-p, ExactScalar(1)});  // x - p
    Poly shift = random_poly(rng, 2);
    if (shift.is_zero() || shift.eval(p).is_zero()) continue;
    RatFun f(num, den * shift);  // simple pole at p
    RatFun xm(Poly(std::vector<ExactScalar>{-p, ExactScalar(1)}));
    CHECK(ratfun_residue(f, p) == ratfun_limit(xm * f, p));
  }
}

TEST_CASE("interpolation reproduces a known polynomial coefficient-exactly") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    Poly f = random_poly(rng, 5);
    std::vector<std::pair<ExactScalar, ExactScalar>> pts;
    for (int k = 0; k <= f.degree(); ++k)
      pts.emplace_back(ExactScalar(k), f.eval(ExactScalar(k)));
    if (pts.empty()) continue;
    CHECK(poly_interpolate(pts) == f);
  }
}

TEST_CASE("ratfun reduction keeps den monic and coprime") {
  RatFun f(make_poly({0, 2, 2}), make_poly({0, 4}));  // (2x + 2x^2)/(4x)
  CHECK(f.den().leading() == ExactScalar(1));
  CHECK(ratfun_eval(f, ExactScalar(1)) == ExactScalar(1));
  // removable factor x gone: evaluable at 0
  CHECK(ratfun_eval(f, ExactScalar(0)) == ExactScalar(1, 2));
  CHECK_THROWS_AS(RatFun(make_poly({1}), Poly()), input_error);
}

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "heunref/errors.hpp"
#include "heunref/lagrange/coefficients.hpp"
#include "heunref/specfun/elliptic.hpp"
#include "heunref/specfun/heun_series.hpp"
#include "heunref/specfun/hyp2f1.hpp"
#include "support.hpp"

using namespace heunref;
using testsupport::Gen;

namespace {

bool rel_close(double got, double want, double tol) { return std::fabs(got - want) <= tol * std::max(1.0, std::fabs(want)); }

}  // namespace

// Reference values: the series summed in 40-digit arithmetic (mpmath).
TEST_CASE("heun_l matches 40-digit reference values") {
  struct Row {
    double a, q, al, be, g, d, x, y, y1, y2;
  };
  const Row rows[] = {
      {2, 0.5, 0.7, 1.3, 0.9, 1.1, 0.3, 1.0955182729950817486, 0.36686649906229322128, 0.38829887465320894696},
      {3, -0.4, 1.5, 0.6, 2.2, 0.4, -0.5, 1.0156138880158155866, -0.0093929665980120177375, -0.064520722933597131947},
      {-2, 0.8, 0.4, 2.1, 1.7, 0.6, 0.85, 0.81693712004120437751, -0.25806907950855271627, -0.60082208927850184607},
      {5, 1.0, 2.3, 0.3, 0.5, 2.0, 0.6, 1.5530434240567776144, 2.2066695971851187905, 10.607945499780932742},
      {0.5, 0.2, 1.2, 0.8, 1.4, 0.9, 0.4, 1.0662160241157326249, -0.38239962730967371034, -10.086320988102322152},
  };
  for (const Row& r : rows) {
    const Jet j = heun_l_jet(HeunParams(r.a, r.q, r.al, r.be, r.g, r.d), r.x);
    CHECK(rel_close(j.value, r.y, 1e-13));
    CHECK(rel_close(j.d1, r.y1, 1e-12));
    CHECK(rel_close(j.d2, r.y2, 1e-11));
  }
}

// Independent of the recurrence: under the L1 specialization H_l is a 2F1
// of x(2 - x); values from mpmath's hyp2f1.
TEST_CASE("heun_l under the a = 2 specialization matches mpmath 2F1") {
  struct Row {
    double al, be, g, x, v, dv;
  };
  const Row rows[] = {{0.7, 1.9, 1.3, 0.25, 1.1530267795275186616, 0.73518395322901085857},
                      {2.2, 0.5, 0.6, 0.4, 1.669530712223530676, 3.032188682853848498},
                      {1.1, 1.1, 2.4, -0.3, 0.92904663463247074037, 0.22121278077399588708}};
  for (const Row& r : rows) {
    const HeunParams p(2.0, r.al * r.be, r.al, r.be, r.g, r.al + r.be - 2.0 * r.g + 1.0);
    CHECK(rel_close(heun_l(p, r.x), r.v, 1e-13));
    CHECK(rel_close(heun_l_prime(p, r.x), r.dv, 1e-12));
  }
}

TEST_CASE("heun_l normalization and domain") {
  const HeunParams p(2.0, 0.5, 0.7, 1.3, 0.9, 1.1);
  CHECK(heun_l(p, 0.0) == 1.0);
  CHECK(heun_l_prime(p, 0.0) == doctest::Approx(0.5 / (2.0 * 0.9)).epsilon(1e-15));
  CHECK_THROWS_AS(heun_l(p, 0.95), DomainError);
  CHECK_THROWS_AS(HeunParams(2.0, 0.5, 0.7, 1.3, -1.0, 1.1), ParameterError);
  CHECK_THROWS_AS(HeunParams(1.0, 0.5, 0.7, 1.3, 0.9, 1.1), ParameterError);
  CHECK_THROWS_AS(HeunParams(0.0, 0.5, 0.7, 1.3, 0.9, 1.1), ParameterError);
  CHECK_THROWS_AS(HeunParams(2.0, std::numeric_limits<double>::quiet_NaN(), 0.7, 1.3, 0.9, 1.1), ParameterError);
  CHECK(p.epsilon() == doctest::Approx(0.7 + 1.3 + 1.0 - 0.9 - 1.1));
}

TEST_CASE("property: the series solves the Heun equation") {
  Gen g(1001);
  for (int i = 0; i < 200; ++i) {
    const HeunParams p = testsupport::random_heun(g, {-3.0, -2.0, -0.5, 0.5, 2.0, 3.0, 5.0});
    const double x = g.uniform(-1.0, 1.0) * 0.9 * heun_safe_radius(p);
    if (std::fabs(x) < 1e-3) continue;
    const Jet j = heun_l_jet(p, x);
    const double P = heun_P(p, x), Q = heun_Q(p, x);
    const double scale = std::fabs(j.d2) + std::fabs(P * j.d1) + std::fabs(Q * j.value);
    CHECK(std::fabs(j.d2 + P * j.d1 + Q * j.value) <= 1e-11 * scale);
  }
}

TEST_CASE("property: the Dual overload differentiates the series") {
  Gen g(1002);
  for (int i = 0; i < 50; ++i) {
    const HeunParams p = testsupport::random_heun(g);
    const double x = g.uniform(-0.7, 0.7) * heun_safe_radius(p);
    const double h = 1e-5;
    const double fd = (heun_l(p, x + h) - heun_l(p, x - h)) / (2.0 * h);
    CHECK(heun_l(p, Dual::variable(x)).d == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("hyp2f1 matches mpmath in every region") {
  struct Row {
    double a, b, c, z, v;
  };
  const Row rows[] = {{1, 1, 2, 0.5, 1.3862943611198906188},        {0.3, 1.7, 2.2, 0.85, 1.4601423055356692703},
                      {1.5, -0.5, 0.7, -0.8, 1.6873621860570175388},   {0.25, 0.75, 1.5, -5, 0.76144329868564162135},
                      {2.5, 1.2, 0.4, 0.1, 2.0057616530821650304},     {0.6, 0.9, 0.35, 0.7, 5.2269489947559268128}};
  for (const Row& r : rows) CHECK(rel_close(hyp2f1(r.a, r.b, r.c, r.z), r.v, 1e-13));
  CHECK(hyp2f1(0.3, 0.7, 1.1, 0.0) == 1.0);
  CHECK_THROWS_AS(hyp2f1(1, 1, 2, 0.95), DomainError);
  CHECK_THROWS_AS(hyp2f1(1, 1, 2, -9.5), DomainError);
  CHECK_THROWS_AS(hyp2f1(1, 1, -2, 0.3), ParameterError);
}

TEST_CASE("property: 2F1 solves the hypergeometric equation and is continuous across branches") {
  Gen g(1003);
  for (int i = 0; i < 200; ++i) {
    const double a = g.uniform(-1.5, 2.5), b = g.uniform(-1.5, 2.5), c = g.uniform(0.2, 3.0);
    const double z = g.uniform(-8.0, 0.88);
    const Jet j = hyp2f1_jet(a, b, c, z);
    const double t1 = z * (1.0 - z) * j.d2, t2 = (c - (a + b + 1.0) * z) * j.d1, t3 = a * b * j.value;
    CHECK(std::fabs(t1 + t2 - t3) <= 1e-10 * (std::fabs(t1) + std::fabs(t2) + std::fabs(t3) + 1e-300));
  }
  for (int i = 0; i < 50; ++i) {
    const double a = g.uniform(0.1, 2.0), b = g.uniform(0.1, 2.0), c = g.uniform(0.2, 3.0);
    for (double edge : {0.5, -0.5}) {
      // The jump across a branch boundary, less the slope over the gap.
      const double lo = hyp2f1(a, b, c, edge - 1e-12), hi = hyp2f1(a, b, c, edge + 1e-12);
      const double slope = hyp2f1_jet(a, b, c, edge).d1;
      CHECK(std::fabs(hi - lo - 2e-12 * slope) <= 1e-13 * std::fabs(lo));
    }
  }
}

TEST_CASE("Carlson forms and incomplete F match mpmath") {
  CHECK(rel_close(carlson_rf(0, 1, 2), 1.3110287771460599052, 1e-14));
  CHECK(rel_close(carlson_rf(0.5, 1, 3), 0.88569392320354833071, 1e-14));
  CHECK(rel_close(carlson_rd(0, 2, 1), 1.7972103521033883112, 1e-14));
  CHECK(rel_close(carlson_rd(2, 3, 4), 0.16510527294261053349, 1e-14));
  struct Row {
    double phi, k, v;
  };
  const Row rows[] = {{0.3, 0.5, 0.30111597966406601603},
                      {1.2, 0.8, 1.3995205057374654834},
                      {std::numbers::pi / 4, 0.95, 0.8689044108987363299},
                      {1.5, 0.2, 1.5146141612129809997}};
  for (const Row& r : rows) CHECK(rel_close(ellip_f(r.phi, r.k), r.v, 1e-14));
  struct KE {
    double k, K, E;
  };
  const KE kes[] = {{0.3, 1.6080486199305127998, 1.534833464923249043},
                    {0.9, 2.2805491384227703325, 1.1716970527816141047},
                    {0.99, 3.3566005233611916666, 1.0284758090288040352}};
  for (const KE& r : kes) {
    CHECK(rel_close(ellip_k(r.k), r.K, 1e-14));
    CHECK(rel_close(ellip_e(r.k), r.E, 1e-14));
  }
  CHECK(ellip_e(1.0) == 1.0);
  CHECK_THROWS_AS(ellip_k(1.0), DomainError);
  CHECK_THROWS_AS(ellip_f(2.0, 0.5), DomainError);
}

TEST_CASE("complete integrals agree with the AGM oracle") {
  const double k = 1.0 / std::numbers::sqrt2;
  const auto ke = testsupport::agm_ke(k);
  CHECK(std::fabs(ellip_k(k) - ke.K) <= 1e-12);
  CHECK(std::fabs(ellip_e(k) - ke.E) <= 1e-12);
  CHECK(ellip_k(0.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-16));
  Gen g(1004);
  for (int i = 0; i < 200; ++i) {
    const double kk = g.uniform(0.0, 0.995);
    const auto r = testsupport::agm_ke(kk);
    CHECK(rel_close(ellip_k(kk), r.K, 1e-13));
    CHECK(rel_close(ellip_e(kk), r.E, 1e-13));
  }
}

TEST_CASE("property: F(pi/2, k) and K(k) are bit-identical") {
  Gen g(1005);
  for (int i = 0; i < 500; ++i) {
    const double k = g.uniform(0.0, 0.999);
    CHECK(ellip_f(std::numbers::pi / 2, k) == ellip_k(k));
  }
}

TEST_CASE("property: derivative relations of K and E") {
  Gen g(1006);
  for (int i = 0; i < 100; ++i) {
    const double k = g.uniform(0.05, 0.95), h = 1e-5;
    const double E = ellip_e(k), K = ellip_k(k), kp2 = 1.0 - k * k;
    const double dE = (ellip_e(k + h) - ellip_e(k - h)) / (2.0 * h);
    const double dK = (ellip_k(k + h) - ellip_k(k - h)) / (2.0 * h);
    CHECK(std::fabs(dE - (E - K) / k) <= 1e-6 * (1.0 + std::fabs(dE)));
    CHECK(std::fabs(dK - (E / (k * kp2) - K / k)) <= 1e-6 * (1.0 + std::fabs(dK)));
    const Jet je = ellip_e_jet(k), jk = ellip_k_jet(k);
    CHECK(je.d1 == doctest::Approx((E - K) / k).epsilon(1e-13));
    const double d2E = (ellip_e_jet(k + h).d1 - ellip_e_jet(k - h).d1) / (2.0 * h);
    const double d2K = (ellip_k_jet(k + h).d1 - ellip_k_jet(k - h).d1) / (2.0 * h);
    CHECK(je.d2 == doctest::Approx(d2E).epsilon(1e-6));
    CHECK(jk.d2 == doctest::Approx(d2K).epsilon(1e-6));
    // Legendre's relation with k' = sqrt(1 - k^2).
    const double kc = std::sqrt(kp2);
    CHECK(E * ellip_k(kc) + ellip_e(kc) * K - K * ellip_k(kc) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-13));
  }
}

TEST_CASE("phase-free powers") {
  CHECK(ppow(-2.0, 0.5, 0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(ppow(-2.0, 0.5, -1) == doctest::Approx(-std::pow(2.0, -0.5)));
  const Dual d = ppow(Dual::variable(-2.0), 1.5, 0);
  const double h = 1e-6;
  CHECK(d.d == doctest::Approx((ppow(-2.0 + h, 1.5) - ppow(-2.0 - h, 1.5)) / (2 * h)).epsilon(1e-8));
  // d/dx ppow(x, e, 0) = e ppow(x, e, -1)
  CHECK(d.d == doctest::Approx(1.5 * ppow(-2.0, 1.5, -1)));
}

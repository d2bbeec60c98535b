#include <cmath>

#include "doctest.h"
#include "spinlie/errors.hpp"
#include "spinlie/geometry.hpp"
#include "support/gen.hpp"
#include "support/random_fields.hpp"
#include "support/worlds.hpp"

using namespace spinlie;
using namespace spinlie::testing;

namespace {

std::array<std::array<double, 2>, 4> box_of(const Geometry& g) {
  std::array<std::array<double, 2>, 4> b{};
  for (int i = 0; i < 4; ++i) b[i] = {g.chart().box[i].lo, g.chart().box[i].hi};
  return b;
}

Multivector blade(const char* key, double c = 1.0) { return Multivector::blade(parse_blade_key(key), c); }

const VectorField boost = vec({"x", "t", "0", "0"});
const VectorField rotation = vec({"0", "y", "-x", "0"});
const VectorField dt = vec({"1", "0", "0", "0"});

}  // namespace

TEST_CASE("christoffel symbols") {
  const Tensor3 m = christoffel(minkowski(), {0.3, 1, 2, 3});
  for (double v : m.v) CHECK(v == 0.0);

  const Tensor3 f = christoffel(flrw(), {2, 0.1, 0.2, 0.3});
  CHECK(f(1, 0, 1) == doctest::Approx(0.5));
  CHECK(f(1, 1, 0) == doctest::Approx(0.5));
  CHECK(f(0, 1, 1) == doctest::Approx(2.0));

  const Tensor3 r = christoffel(rindler(), {0, 2, 0, 0});
  CHECK(r(0, 0, 1) == doctest::Approx(0.5));
  CHECK(r(1, 0, 0) == doctest::Approx(2.0));

  CHECK_THROWS_AS(christoffel(rindler(), {0, 0, 0, 0}), SingularMetric);
  CHECK_THROWS_AS(rindler().at({0, 0, 0, 0}), SingularMetric);
}

TEST_CASE("tetrad from metric") {
  CHECK(tetrad_from_metric(Mat4(Eigen::Vector4d(1, -1, -1, -1).asDiagonal())).isApprox(Mat4::Identity()));
  CHECK(tetrad_from_metric(Mat4(Eigen::Vector4d(4, -9, -1, -1).asDiagonal()))
            .isApprox(Mat4(Eigen::Vector4d(2, 3, 1, 1).asDiagonal())));
  CHECK(tetrad_from_metric(Mat4(Eigen::Vector4d(1, -4, -4, -4).asDiagonal()))
            .isApprox(Mat4(Eigen::Vector4d(1, 2, 2, 2).asDiagonal())));
  CHECK_THROWS_AS(tetrad_from_metric(Mat4(Eigen::Vector4d(-1, 1, 1, 1).asDiagonal())), SignatureError);
  CHECK_THROWS_AS(tetrad_from_metric(Mat4(Eigen::Vector4d(1, 1, -1, -1).asDiagonal())), SignatureError);
  CHECK_THROWS_AS(tetrad_from_metric(Mat4(Eigen::Vector4d(1, -1, -1, 0).asDiagonal())), SignatureError);

  // random boosted/rotated metrics
  Gen g(8);
  for (int n = 0; n < 200; ++n) {
    Mat4 A = Mat4::Identity();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) A(i, j) += g.uniform(-0.3, 0.3);
    const Mat4 G = A.transpose() * Mat4(Eigen::Vector4d(1, -1, -1, -1).asDiagonal()) * A;
    const Mat4 h = tetrad_from_metric(G);
    const Mat4 back = h.transpose() * Mat4(Eigen::Vector4d(1, -1, -1, -1).asDiagonal()) * h;
    CHECK((back - G).cwiseAbs().maxCoeff() <= 1e-12);
    for (int a = 0; a < 4; ++a) {
      CHECK(h(a, a) > 0);
      for (int mu = 0; mu < a; ++mu) CHECK(h(a, mu) == 0.0);
    }
  }
}

TEST_CASE("derived tetrad derivatives match finite differences") {
  const Geometry geo = skewed();
  const Point p{0.3, -0.2, 0.4, 0.1};
  const PointGeometry pg = geo.at(p);
  for (int r = 0; r < 4; ++r) {
    const double h = 1e-6;
    Point pp = p, pm = p;
    pp[r] += h;
    pm[r] -= h;
    Mat4 gp, gm;
    std::array<Mat4, 4> unused;
    geo.metric_at(pp, gp, unused);
    geo.metric_at(pm, gm, unused);
    const Mat4 fd = (tetrad_from_metric(gp) - tetrad_from_metric(gm)) / (2 * h);
    CHECK((fd - pg.dh[r]).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("spin connection") {
  const PointGeometry m = minkowski().at({0.1, 0.2, 0.3, 0.4});
  for (double v : m.omega.v) CHECK(v == 0.0);

  const PointGeometry r = rindler().at({0, 2, 0, 0});
  CHECK(r.omega(0, 0, 1) == doctest::Approx(1.0));
  CHECK(r.omega(1, 0, 0) == doctest::Approx(-1.0));
  CHECK(r.omega_frame(0, 0, 1) == doctest::Approx(0.5));

  const PointGeometry f = flrw().at({2, 0, 0, 0});
  CHECK(f.omega(1, 1, 0) == doctest::Approx(-1.0));
  CHECK(f.omega(0, 1, 1) == doctest::Approx(1.0));

  // consistent at t = 1 only, and d_t h^0_0 = 1 breaks metric compatibility
  const Geometry bad = make_geometry(
      {{{"1", "0", "0", "0"}, {"0", "-1", "0", "0"}, {"0", "0", "-1", "0"}, {"0", "0", "0", "-1"}}},
      Strings4x4{{{"t", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}}},
      Box{});
  CHECK_THROWS_AS(bad.at({1, 0, 0, 0}), TetradMismatch);
  CHECK_THROWS_AS(bad.at({2, 0, 0, 0}), TetradMismatch);
}

TEST_CASE("structure coefficients") {
  const PointGeometry m = minkowski().at({0.1, 0.2, 0.3, 0.4});
  for (double v : m.c.v) CHECK(v == 0.0);

  const PointGeometry r = rindler().at({0, 2, 0, 0});
  CHECK(r.c(0, 0, 1) == doctest::Approx(0.5));
  CHECK(r.c(0, 1, 0) == doctest::Approx(-0.5));

  const PointGeometry f = flrw().at({2, 0, 0, 0});
  CHECK(f.c(1, 0, 1) == doctest::Approx(-0.5));

  // oracle: c^a_{ki} = -(d_m h^a_n - d_n h^a_m) e_k^m e_i^n
  Gen g(17);
  const Geometry geo = skewed();
  for (int n = 0; n < 20; ++n) {
    const PointGeometry pg = geo.at(g.point(box_of(geo)));
    double worst = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i) {
          double s = 0.0;
          for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
              s -= (pg.dh[mu](a, nu) - pg.dh[nu](a, mu)) * pg.e(mu, k) * pg.e(nu, i);
          worst = std::max(worst, std::abs(s - pg.c(a, k, i)));
          CHECK(pg.c(a, k, i) == doctest::Approx(-pg.c(a, i, k)).epsilon(1e-12));
        }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("biforms at oracle points") {
  const PointGeometry m = minkowski().at({0.5, -0.3, 0.7, 0.2});
  CHECK(max_norm(biform_dxi(m, eval_vector(dt, m.p))) == 0.0);
  CHECK(max_abs_diff(biform_dxi(m, eval_vector(boost, m.p)), blade("01", -2)) < 1e-15);
  CHECK(max_abs_diff(biform_dxi(m, eval_vector(rotation, m.p)), blade("12", 2)) < 1e-15);
  CHECK(max_abs_diff(biform_S(m, eval_vector(boost, m.p)), blade("01", -2)) < 1e-15);
  CHECK(max_norm(biform_L(m, eval_vector(boost, m.p))) == 0.0);
  CHECK(max_norm(connection_biform(m, eval_vector(boost, m.p))) == 0.0);

  // Rindler d_t: omega_xi = g01, L = 2 g01, d xi = -2 g01, S = 0
  const PointGeometry r = rindler().at({0.3, 2, 0.1, -0.4});
  const VectorAtPoint x = eval_vector(dt, r.p);
  CHECK(max_abs_diff(connection_biform(r, x), blade("01")) < 1e-15);
  CHECK(max_abs_diff(biform_L(r, x), blade("01", 2)) < 1e-15);
  CHECK(max_abs_diff(biform_dxi(r, x), blade("01", -2)) < 1e-15);
  CHECK(max_abs_diff(biform_dxi(r, x, CurlRoute::Frame), blade("01", -2)) < 1e-15);
  CHECK(max_norm(biform_S(r, x)) < 1e-15);

  CHECK(max_norm(biform_L(r, eval_vector(vec({"0", "0", "0", "0"}), r.p))) == 0.0);
}

TEST_CASE("property: connection identities on every world") {
  Gen g(2026);
  const Geometry worlds[] = {minkowski(), rindler(), flrw(), skewed()};
  for (const Geometry& geo : worlds) {
    double conn = 0, post = 0, recon = 0, l2w = 0, routes = 0, frame_act = 0;
    for (int n = 0; n < 100; ++n) {
      const PointGeometry pg = geo.at(g.point(box_of(geo)));
      conn = std::max(conn, connection_check(pg));
      post = std::max(post, tetrad_postulate_residual(pg));
      recon = std::max(recon, metric_reconstruction_residual(pg));

      const VectorAtPoint xi = eval_vector(random_vector_field(g), pg.p);
      const Multivector w = connection_biform(pg, xi);
      l2w = std::max(l2w, max_abs_diff(biform_L(pg, xi), 2.0 * w));
      routes = std::max(routes, max_abs_diff(biform_dxi(pg, xi), biform_dxi(pg, xi, CurlRoute::Frame)));

      // 1/2 [omega_xi, g^a] = -g^a _| omega_xi = -xi^k omega^a_{ki} g^i
      const auto f = frame_components(pg, xi);
      for (int a = 0; a < 4; ++a) {
        const Multivector ga = Multivector::basis(a);
        Multivector expect;
        for (int i = 0; i < 4; ++i)
          for (int k = 0; k < 4; ++k) expect -= (eta(a) * f[k] * pg.omega_frame(a, k, i)) * Multivector::basis(i);
        frame_act = std::max(frame_act, max_abs_diff(0.5 * commutator(w, ga), expect));
        frame_act = std::max(frame_act, max_abs_diff(-left_contraction(ga, w), expect));
      }
    }
    CHECK(conn <= 1e-10);
    CHECK(post <= 1e-10);
    CHECK(recon <= 1e-10);
    CHECK(l2w <= 1e-10);
    CHECK(routes <= 1e-10);
    CHECK(frame_act <= 1e-12);
  }
}

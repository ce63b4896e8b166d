#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "bihcheck/catalog.hpp"
#include "bihcheck/errors.hpp"
#include "bihcheck/hypersurfaces.hpp"
#include "test_support.hpp"

using namespace bihcheck;
using namespace bihcheck::testing;

namespace {

const double kSqrt2 = std::sqrt(2.0);

Vec v2(double x, double y) { return Eigen::Vector2d(x, y); }

/// Graph z = 0.3 x^2 + 0.2 x y over the disc |u| < 0.8 in N(0.5, 0.7), jets by differences.
FunctionImmersion graph_surface() {
  FunctionImmersion::Parts parts;
  parts.name = "graph";
  parts.ambient = std::make_shared<BcvSpace>(0.5, 0.7);
  auto position = [](const Vec& u) -> Vec {
    return Eigen::Vector3d(u(0), u(1), 0.3 * u(0) * u(0) + 0.2 * u(0) * u(1));
  };
  parts.jet = [position](const Vec& u) { return jet_by_differences(position, u); };
  parts.normal_hint = [](const Vec&) -> Vec { return Eigen::Vector3d(0, 0, 1); };
  parts.contains = [](const Vec& u) { return u.norm() < 0.8; };
  parts.sample_lo = Vec::Constant(2, -0.4);
  parts.sample_hi = Vec::Constant(2, 0.4);
  return FunctionImmersion(parts);
}

/// Tilted plane x(s,t) = (s, t, s/2) in Euclidean space posing as a Hopf
/// cylinder: its normal is not horizontal.
class TiltedPlane final : public HopfImmersion {
 public:
  std::string name() const override { return "tilted"; }
  int parameter_dimension() const override { return 2; }
  const AmbientSpace& ambient() const override { return space_; }
  const BcvSpace& bcv() const override { return space_; }
  ImmersionJet jet(const Vec& u) const override {
    ImmersionJet j;
    j.point = Eigen::Vector3d(u(0), u(1), 0.5 * u(0));
    j.d1 = Mat(3, 2);
    j.d1 << 1, 0, 0, 1, 0.5, 0;
    j.d2.assign(2, Mat::Zero(3, 2));
    return j;
  }
  Vec normal_hint(const Vec&) const override { return Eigen::Vector3d(0, 0, 1); }
  Vec sample_parameter(std::mt19937_64& rng) const override { return random_vec(rng, 2); }
  ProfileJet profile(double s) const override {
    return {Eigen::Vector2d(s, 0), Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 0)};
  }

 private:
  BcvSpace space_{0, 0};
};

std::vector<Vec> sample_points(const Immersion& imm, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vec> out;
  for (int i = 0; i < count; ++i) out.push_back(imm.sample_parameter(rng));
  return out;
}

std::vector<CatalogCase> all_cases() {
  std::vector<CatalogCase> out;
  for (const std::string& name : registry_names()) out.push_back(make_case(name));
  return out;
}

}  // namespace

TEST_CASE("first fundamental form examples") {
  const CatalogCase eq = equator(3);
  for (const Vec& u : sample_points(*eq.immersion, 5, 3)) {
    const FirstFundamental ff = first_fundamental(*eq.immersion, u);
    const double c = std::cos(u(1));
    CHECK(max_abs(ff.g - Mat(Eigen::Vector2d(c * c, 1.0).asDiagonal())) < 1e-12);
    Vec e4 = Vec::Zero(4);
    e4(3) = 1;
    CHECK((ff.eta - e4).norm() < 1e-12);
  }

  const CatalogCase torus = clifford_torus(1, 1);
  for (const Vec& u : sample_points(*torus.immersion, 5, 4))
    CHECK(max_abs(first_fundamental(*torus.immersion, u).g - 0.5 * Mat::Identity(2, 2)) < 1e-12);

  const CatalogCase hopf = hopf_cylinder(1, 1, 0.5);
  const BcvSpace& bcv = hopf.hopf()->bcv();
  for (const Vec& u : sample_points(*hopf.immersion, 10, 5)) {
    const FirstFundamental ff = first_fundamental(*hopf.immersion, u);
    CHECK(std::abs(bcv.inner(ff.point, ff.eta, *bcv.vertical(ff.point))) < 1e-12);
    CHECK(std::abs(bcv.norm(ff.point, ff.eta) - 1.0) < 1e-12);
    for (int i = 0; i < 2; ++i) CHECK(std::abs(bcv.inner(ff.point, ff.eta, ff.d1.col(i))) < 1e-12);
  }
}

TEST_CASE("first fundamental form rejects singular immersions") {
  FunctionImmersion::Parts parts;
  parts.name = "fold";
  parts.ambient = std::make_shared<BcvSpace>(0, 0);
  parts.jet = [](const Vec& u) {
    return jet_by_differences([](const Vec& q) -> Vec { return Eigen::Vector3d(q(0) + q(1), 0, 0); }, u);
  };
  parts.normal_hint = [](const Vec&) -> Vec { return Eigen::Vector3d(0, 0, 1); };
  FunctionImmersion fold(parts);
  CHECK_THROWS_AS(first_fundamental(fold, v2(0.1, 0.2)), DegeneracyError);
}

TEST_CASE("shape operator examples") {
  const CatalogCase eq = equator(4);
  for (const Vec& u : sample_points(*eq.immersion, 5, 6))
    CHECK(max_abs(shape_operator(*eq.immersion, u).shape) < 1e-12);

  const CatalogCase small = small_hypersphere(3);
  for (const Vec& u : sample_points(*small.immersion, 5, 7)) {
    const SecondFundamentalData sd = shape_operator(*small.immersion, u);
    CHECK(max_abs(sd.principal - Vec::Ones(2)) < 1e-12);
    CHECK(std::abs(sd.mean - 1.0) < 1e-12);
  }

  const CatalogCase cyl = hopf_cylinder(1, 0, kSqrt2 - 1);
  for (const Vec& u : sample_points(*cyl.immersion, 5, 8)) {
    const SecondFundamentalData sd = shape_operator(*cyl.immersion, u);
    CHECK(std::abs(std::abs(sd.second(0, 0)) - 2.0) < 1e-9);
    CHECK(std::abs(sd.second(0, 1)) < 1e-9);
    CHECK(std::abs(sd.second(1, 1)) < 1e-9);
  }
}

TEST_CASE("shape operator invariants on every catalog immersion") {
  for (const CatalogCase& c : all_cases()) {
    CAPTURE(c.name);
    const int m = c.immersion->parameter_dimension();
    for (const Vec& u : sample_points(*c.immersion, 10, 9)) {
      const SecondFundamentalData sd = shape_operator(*c.immersion, u);
      const Mat gs = sd.first.g * sd.shape;
      CHECK(max_abs(gs - gs.transpose()) < 1e-8);
      CHECK(std::abs(sd.mean * m - sd.shape.trace()) < 1e-14);
      CHECK(std::abs(sd.norm2 - sd.principal.squaredNorm()) < 1e-10);
      if (m == 2) CHECK(std::abs(sd.extrinsic_gaussian - sd.principal(0) * sd.principal(1)) < 1e-10);
      // Principal directions: S e = lambda e, g-orthonormal.
      CHECK(max_abs(sd.directions.transpose() * sd.first.g * sd.directions - Mat::Identity(m, m)) < 1e-10);
      for (int k = 0; k < m; ++k)
        CHECK((sd.shape * sd.directions.col(k) - sd.principal(k) * sd.directions.col(k)).norm() < 1e-10);
      for (int k = 1; k < m; ++k) CHECK(std::abs(sd.principal(k - 1)) >= std::abs(sd.principal(k)));
    }
  }
}

TEST_CASE("Weingarten consistency on every catalog immersion") {
  for (const CatalogCase& c : all_cases()) {
    CAPTURE(c.name);
    const Immersion& imm = *c.immersion;
    const AmbientSpace& space = imm.ambient();
    const int m = imm.parameter_dimension();
    for (const Vec& u : sample_points(imm, 5, 10)) {
      const SecondFundamentalData sd = shape_operator(imm, u);
      const Vec& p = sd.first.point;
      for (int i = 0; i < m; ++i) {
        const Vec e = Vec::Unit(m, i);
        const Vec deta = kChartDifference.derivative(
            [&](double t) -> Vec { return first_fundamental(imm, u + t * e).eta; });
        const Vec nabla = deta + space.connection(p, sd.first.d1.col(i), sd.first.eta);
        for (int j = 0; j < m; ++j)
          CHECK(std::abs(space.inner(p, nabla, sd.first.d1.col(j)) + sd.second(i, j)) < 1e-5);
      }
    }
  }
}

TEST_CASE("induced Christoffel symbols agree with differences of the metric") {
  const FunctionImmersion graph = graph_surface();
  const CatalogCase small = small_hypersphere(4);
  const CatalogCase torus = clifford_torus(1, 2);
  const CatalogCase hopf = hopf_cylinder(1, 1, 0.5);
  for (const Immersion* imm : {static_cast<const Immersion*>(&graph), small.immersion.get(),
                               torus.immersion.get(), hopf.immersion.get()}) {
    CAPTURE(imm->name());
    for (const Vec& u : sample_points(*imm, 5, 11)) {
      const Christoffels gauss = induced_christoffels(*imm, u);
      const Christoffels oracle = christoffels_from_metric(
          [imm](const Vec& q) -> Mat { return first_fundamental(*imm, q).g; }, u, kChartDifference);
      for (std::size_t k = 0; k < gauss.size(); ++k) CHECK(max_abs(gauss[k] - oracle[k]) < 1e-6);
    }
  }
}

TEST_CASE("surface geodesic examples") {
  // Flat Clifford torus: straight lines in the chart.
  const CatalogCase torus = clifford_torus(1, 1);
  const Vec u0 = v2(0.3, -0.2);
  const Vec dir = kSqrt2 * v2(0.6, 0.8);
  const GeodesicTrace line = surface_geodesic(*torus.immersion, u0, dir, 2.0, 0.01);
  for (double s : {0.0, 0.5, 1.3, 2.0}) CHECK((line.parameter_jet(s).u - (u0 + s * dir)).norm() < 1e-12);

  // Great circle on the equator: ambient geodesic.
  const CatalogCase eq = equator(3);
  const GeodesicTrace circle = surface_geodesic(*eq.immersion, v2(0, 0), v2(1, 0), 3.0, 0.01);
  const BiharmonicResiduals res = biharmonic_residuals(eq.immersion->ambient(), circle, uniform_grid(0, 3, 7));
  CHECK(res.vacuous);

  // Hopf cylinder: constant angle with E3.
  const CatalogCase hopf = hopf_cylinder(1, 1, 0.5);
  const BcvSpace& bcv = hopf.hopf()->bcv();
  const GeodesicTrace helix = surface_geodesic(*hopf.immersion, v2(0.2, 0.1), v2(0.6, 0.8), 5.0, 0.01);
  const double angle0 = bcv.inner(helix.jet(0).position, helix.jet(0).velocity, *bcv.vertical(helix.jet(0).position));
  for (double s = 0.0; s <= 5.0; s += 0.25) {
    const CurveJet j = helix.jet(s);
    CHECK(std::abs(bcv.inner(j.position, j.velocity, *bcv.vertical(j.position)) - angle0) < 1e-6);
  }
}

TEST_CASE("surface geodesics keep unit speed over length 10") {
  const FunctionImmersion graph = graph_surface();
  const std::vector<CatalogCase> cases{clifford_torus(1, 1), tb_cylinder(4), hopf_cylinder(1, 1, 0.5),
                                       round_cylinder_r3(1)};
  for (const CatalogCase& c : cases) {
    CAPTURE(c.name);
    for (const DirectionSample& d : random_direction_samples(*c.immersion, 4, 12)) {
      const GeodesicTrace trace(*c.immersion, d.u, d.x, 10.0, 0.01);
      for (double s = 0.0; s <= 10.0; s += 0.5) {
        const CurveJet j = trace.jet(s);
        CHECK(std::abs(c.ambient->norm(j.position, j.velocity) - 1.0) < 1e-6);
      }
    }
  }
  // A curved chart in a non-flat ambient, over a short length inside the disc.
  for (const DirectionSample& d : random_direction_samples(graph, 4, 13)) {
    const GeodesicTrace trace(graph, d.u, d.x, 0.3, 0.01);
    for (double s = 0.0; s <= 0.3; s += 0.05) {
      const CurveJet j = trace.jet(s);
      CHECK(std::abs(graph.ambient().norm(j.position, j.velocity) - 1.0) < 1e-6);
    }
  }
}

TEST_CASE("surface geodesic errors") {
  const CatalogCase small = small_hypersphere(3);
  CHECK_THROWS_AS(surface_geodesic(*small.immersion, v2(0, 1.1), kSqrt2 * v2(0, 1), 1.0, 0.01), ChartExit);
  CHECK_THROWS_AS(surface_geodesic(*small.immersion, v2(0, 0), v2(1, 0), 1.0, 0.01), ParameterError);
  CHECK_THROWS_AS(surface_geodesic(*small.immersion, v2(0, 0), kSqrt2 * v2(1, 0), 1.0, 0.0), ParameterError);
  CHECK_THROWS_AS(surface_geodesic(*small.immersion, v2(0, 1.3), kSqrt2 * v2(1, 0), 1.0, 0.01), ChartExit);
}

TEST_CASE("Laplace-Beltrami examples") {
  const CatalogCase torus = clifford_torus(1, 1);
  for (const Vec& u : sample_points(*torus.immersion, 5, 14)) {
    CHECK(std::abs(laplace_beltrami(*torus.immersion, [](const Vec&) { return 3.0; }, u)) < 1e-12);
    const double lap = laplace_beltrami(*torus.immersion, [](const Vec& q) { return std::sin(q(0)); }, u);
    CHECK(std::abs(lap - 2.0 * std::sin(u(0))) < 1e-8);
  }
  const CatalogCase cyl = round_cylinder_r3(1);
  for (const Vec& u : sample_points(*cyl.immersion, 5, 15))
    CHECK(std::abs(laplace_beltrami(*cyl.immersion, [](const Vec& q) { return 2 * q(0) - 5 * q(1) + 1; }, u)) <
          1e-8);

  // Round metric of S^2: Delta(sin lat) = 2 sin lat.
  const CatalogCase eq = equator(3);
  for (const Vec& u : sample_points(*eq.immersion, 5, 16)) {
    const double lap = laplace_beltrami(*eq.immersion, [](const Vec& q) { return std::sin(q(1)); }, u);
    CHECK(std::abs(lap - 2.0 * std::sin(u(1))) < 1e-7);
  }
  CHECK_THROWS_AS(laplace_beltrami(*eq.immersion, [](const Vec&) { return 1.0; }, v2(0, 1.199)), StencilError);
}

TEST_CASE("biharmonic check examples") {
  const CatalogCase torus = clifford_torus(1, 1);
  const VerificationReport r1 = biharmonic_check(*torus.immersion, sample_points(*torus.immersion, 10, 17));
  CHECK(r1.find("biharmonic_normal")->max_residual < 1e-8);
  CHECK(r1.find("biharmonic_tangent")->max_residual < 1e-8);
  CHECK(r1.pass());

  const CatalogCase small = small_hypersphere(3);
  for (const Vec& u : sample_points(*small.immersion, 5, 18)) {
    const BiharmonicTerms t = biharmonic_terms(*small.immersion, u);
    CHECK(std::abs(t.mean - 1.0) < 1e-12);
    CHECK(std::abs(t.norm2 - 2.0) < 1e-12);
    CHECK(std::abs(t.ricci_normal - 2.0) < 1e-12);
    CHECK(t.normal < 1e-8);
    CHECK(t.tangent < 1e-8);
  }

  const CatalogCase cyl = tb_cylinder(4);
  for (const Vec& u : sample_points(*cyl.immersion, 5, 19)) {
    const BiharmonicTerms t = biharmonic_terms(*cyl.immersion, u);
    CHECK(std::abs(t.norm2 - 4.0) < 1e-9);
    CHECK(std::abs(t.ricci_normal - 4.0) < 1e-8);
  }
  CHECK(biharmonic_check(*cyl.immersion, sample_points(*cyl.immersion, 10, 19)).pass());
}

TEST_CASE("biminimal check examples") {
  const CatalogCase small = small_hypersphere(3);
  const VerificationReport r = biminimal_check(*small.immersion, sample_points(*small.immersion, 10, 20));
  CHECK(r.find("biminimal")->max_residual < 1e-8);

  const CatalogCase cyl = round_cylinder_r3(1);
  const VerificationReport rc = biminimal_check(*cyl.immersion, sample_points(*cyl.immersion, 10, 21));
  CHECK(std::abs(rc.find("biminimal")->max_residual - 0.5) < 1e-6);
  CHECK_FALSE(rc.pass());
}

TEST_CASE("small hypersphere n=4 has |S|^2 = Ric(eta, eta) = 3") {
  const CatalogCase small = small_hypersphere(4);
  for (const Vec& u : sample_points(*small.immersion, 5, 22)) {
    const BiharmonicTerms t = biharmonic_terms(*small.immersion, u);
    CHECK(std::abs(t.norm2 - 3.0) < 1e-12);
    CHECK(std::abs(t.ricci_normal - 3.0) < 1e-12);
  }
}

TEST_CASE("Ric(eta) is normal on space-form immersions") {
  for (const CatalogCase& c : {clifford_torus(1, 1), clifford_torus(1, 2), small_hypersphere(3),
                               small_hypersphere(4), equator(3), round_cylinder_r3(1)}) {
    CAPTURE(c.name);
    for (const Vec& u : sample_points(*c.immersion, 5, 23))
      CHECK(biharmonic_terms(*c.immersion, u).ricci_tangent < 1e-8);
  }
}

TEST_CASE("isoparametric detection") {
  for (const CatalogCase& c : {tb_cylinder(4), clifford_torus(1, 1)}) {
    CAPTURE(c.name);
    const std::vector<Vec> points = sample_points(*c.immersion, 100, 24);
    // Equal magnitudes of opposite sign make the |lambda| order ambiguous; compare sorted values.
    auto sorted = [&](const Vec& u) {
      Vec v = shape_operator(*c.immersion, u).principal;
      std::sort(v.data(), v.data() + v.size());
      return v;
    };
    const Vec first = sorted(points[0]);
    double spread = 0.0;
    for (const Vec& u : points) spread = std::max(spread, max_abs(sorted(u) - first));
    CHECK(spread < 1e-6);
  }
}

TEST_CASE("pointwise totally biharmonic examples") {
  const CatalogCase eq = equator(3);
  const VerificationReport flat = tb_pointwise_check(*eq.immersion, random_direction_samples(*eq.immersion, 10, 25));
  CHECK(flat.pass());
  CHECK(flat.meta["totally_geodesic"] == true);
  CHECK(flat.find("tb_s1")->note == "totally geodesic");

  const CatalogCase small = small_hypersphere(3);
  const VerificationReport sphere =
      tb_pointwise_check(*small.immersion, random_direction_samples(*small.immersion, 20, 26));
  for (const char* name : {"tb_s1", "tb_s2", "tb_s3"}) CHECK(sphere.find(name)->max_residual < 1e-6);
  CHECK(sphere.meta["s1_family"] == "per geodesic");

  // Unit cylinder, circular direction: (s2) = lambda^2 - 0 = 1.
  const CatalogCase cyl = round_cylinder_r3(1);
  const VerificationReport circular = tb_pointwise_check(*cyl.immersion, {{v2(0.3, 0.1), v2(1, 0)}});
  CHECK(std::abs(circular.find("tb_s2")->max_residual - 1.0) < 1e-6);
  CHECK_FALSE(circular.pass());
  // Ruling direction: an ambient line, vacuous.
  const VerificationReport ruling = tb_pointwise_check(*cyl.immersion, {{v2(0.3, 0.1), v2(0, 1)}});
  CHECK(ruling.pass());
  CHECK(ruling.meta["vacuous_directions"] == 1);
}

TEST_CASE("geodesic totally biharmonic examples") {
  GeodesicOptions options;
  for (const CatalogCase& c : {clifford_torus(1, 1), tb_cylinder(4)}) {
    CAPTURE(c.name);
    const VerificationReport r = tb_geodesic_check(*c.immersion, options);
    CHECK(r.find("tb_geodesic")->max_residual < 1e-5);
    CHECK(r.meta["evaluated"] == 64);
  }

  // Unit cylinder, omega = pi/4: helix with kappa = tau = 1/2.
  const CatalogCase cyl = round_cylinder_r3(1);
  const GeodesicTrace helix(*cyl.immersion, v2(0, 0), v2(1, 1) / kSqrt2, 3.0, 0.01);
  const BiharmonicResiduals res = biharmonic_residuals(*cyl.ambient, helix, uniform_grid(0, 3, 7));
  CHECK(res.max() >= 0.1);
  CHECK(std::abs(res.kappa_mean - 0.5) < 1e-6);
}

TEST_CASE("geodesic sampling skips chart exits and is deterministic") {
  const CatalogCase small = small_hypersphere(4);
  GeodesicOptions options;
  options.count = 16;
  const std::vector<GeodesicSampleResult> a = sample_geodesics(*small.immersion, options);
  const std::vector<GeodesicSampleResult> b = sample_geodesics(*small.immersion, options);
  REQUIRE(a.size() == b.size());
  int evaluated = 0, skipped = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(to_json(a[i]).dump() == to_json(b[i]).dump());
    (a[i].skipped ? skipped : evaluated)++;
  }
  CHECK(evaluated == 16);
  CHECK(skipped > 0);
  const VerificationReport r = tb_geodesic_check(*small.immersion, options);
  CHECK(r.pass());
  CHECK(r.meta["skipped"] == skipped);

  // Nothing fits in the chart: the residual is not a number and the check fails.
  const FunctionImmersion graph = graph_surface();
  options.length = 40.0;
  options.count = 2;
  options.max_attempts_factor = 1;
  const VerificationReport none = tb_geodesic_check(graph, options);
  CHECK(none.meta["skipped"] == 2);
  CHECK(std::isnan(none.find("tb_geodesic")->max_residual));
  CHECK_FALSE(none.pass());
}

TEST_CASE("principal curvature constraint") {
  CHECK(tb_principal_constraint(1.0) == std::vector<double>{1.0, -1.0});
  CHECK(tb_principal_constraint(4.0) == std::vector<double>{2.0, -2.0});
  CHECK(tb_principal_constraint(0.0).empty());
  CHECK(tb_principal_constraint(-1.0).empty());
}

TEST_CASE("Hopf base data examples") {
  const CatalogCase tb = hopf_cylinder(1, 0, kSqrt2 - 1);
  const HopfBaseData d = hopf_base_data(*tb.hopf(), sample_points(*tb.immersion, 10, 27));
  CHECK(std::abs(d.kappa_g - 2.0) < 1e-6);
  CHECK(std::abs(d.tb_relation) < 1e-6);
  CHECK(std::abs(d.norm_relation) < 1e-6);
  CHECK(std::abs(d.gauss_relation) < 1e-6);

  const CatalogCase equatorial = hopf_cylinder(1, 0, 1);
  CHECK(std::abs(hopf_base_data(*equatorial.hopf(), sample_points(*equatorial.immersion, 5, 28)).kappa_g) < 1e-6);

  // With b != 0 the flat cylinder has det S = -b^2/4.
  for (double b : {1.0, -0.6, 2.5}) {
    const CatalogCase c = hopf_cylinder(0.4, b, 0.7);
    const HopfBaseData e = hopf_base_data(*c.hopf(), sample_points(*c.immersion, 5, 29));
    CHECK(std::abs(e.extrinsic_gaussian + 0.25 * b * b) < 1e-6);
    CHECK(std::abs(e.gauss_relation) < 1e-6);
    CHECK(std::abs(e.gaussian_magnitude) < 1e-6);
    CHECK(std::abs(e.norm_relation) < 1e-6);
    CHECK(std::abs(e.kappa_g - (1 - 0.4 * 0.49) / 0.7) < 1e-6);
  }

  TiltedPlane tilted;
  CHECK_THROWS_AS(hopf_base_data(tilted, {v2(0, 0)}), InvarianceError);
}

TEST_CASE("verification report semantics") {
  VerificationReport r;
  r.case_name = "demo";
  r.add("small", 1e-9, 1e-6);
  r.add("large", 0.5, 1e-6).expected = Expectation::Exceed;
  r.add("middle", 1e-3, 1e-6).expected = Expectation::Informational;
  CHECK(r.pass());
  CHECK(r.check("middle").measured() == Measured::Indeterminate);
  r.expect("large", Expectation::Vanish);
  CHECK_FALSE(r.pass());
  CHECK(r.failures() == std::vector<std::string>{"large"});
  CHECK_THROWS_AS(r.check("missing"), std::out_of_range);

  const nlohmann::json j = r.to_json();
  CHECK(j["case"] == "demo");
  CHECK(j["pass"] == false);
  CHECK(j["checks"].size() == 3);
  CHECK(j["checks"][0]["name"] == "small");
  CHECK(j["checks"][0]["tolerance"] == 1e-6);
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(j["checks"][2]["expected"] == "informational");

  Tolerances tol;
  CHECK(tol.set("tb_geodesic", 1e-4));
  CHECK(tol.tb_geodesic == 1e-4);
  CHECK_FALSE(tol.set("tb_geodesic", 0.0));
  CHECK_FALSE(tol.set("nonsense", 1.0));
  CHECK(Tolerances::names().size() == 9);
}

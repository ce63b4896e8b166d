#include "bihcheck/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "bihcheck/errors.hpp"
#include "bihcheck/helices.hpp"

namespace bihcheck {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Latitude charts stop short of the poles; samples stay well inside.
constexpr double kLatitudeLimit = 1.2;
constexpr double kLatitudeSample = 0.7;

std::string number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

bool latitudes_inside(const Vec& theta) {
  for (int i = 1; i < theta.size(); ++i)
    if (std::abs(theta(i)) >= kLatitudeLimit) return false;
  return true;
}

/// Sample box for a sphere chart: longitude in [-pi, pi], latitudes in [-0.7, 0.7].
void sphere_box(int k, Vec& lo, Vec& hi, int offset) {
  lo(offset) = -kPi;
  hi(offset) = kPi;
  for (int i = 1; i < k; ++i) {
    lo(offset + i) = -kLatitudeSample;
    hi(offset + i) = kLatitudeSample;
  }
}

/// Places a jet of a factor in rows [row, row + dim) and parameters [col, col + m).
void place(ImmersionJet& out, const ImmersionJet& part, int row, int col, double scale) {
  const int dim = static_cast<int>(part.point.size());
  const int m = static_cast<int>(part.d1.cols());
  out.point.segment(row, dim) = scale * part.point;
  out.d1.block(row, col, dim, m) = scale * part.d1;
  for (int i = 0; i < m; ++i) out.d2[col + i].block(row, col, dim, m) = scale * part.d2[i];
}

Vec ascending(Vec v) {
  std::sort(v.data(), v.data() + v.size());
  return v;
}

double hopf_kappa_g(double a, double r) { return (1.0 - a * r * r) / r; }

bool is_tb_radius(double a, double b, double r) {
  if (b != 0.0 || !(a > 0.0)) return false;
  const RadiusPair radii = tb_radii(a);
  for (double r2 : {radii.minus, radii.plus})
    if (std::abs(r * r - r2) <= 1e-9 * r2) return true;
  return false;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_number(const std::string& text, const std::string& selector) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v))
    throw UnknownCase("bad number '" + text + "' in case " + selector);
  return v;
}

int parse_int(const std::string& text, const std::string& selector) {
  const double v = parse_number(text, selector);
  if (v != std::floor(v)) throw UnknownCase("expected an integer in case " + selector);
  return static_cast<int>(v);
}

std::map<std::string, std::string> parse_keys(const std::string& args, const std::string& selector) {
  std::map<std::string, std::string> out;
  for (const std::string& item : split(args, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UnknownCase("expected key=value in case " + selector);
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

void require_keys(const std::map<std::string, std::string>& keys,
                  const std::vector<std::string>& required, const std::vector<std::string>& optional,
                  const std::string& selector) {
  for (const std::string& k : required)
    if (!keys.count(k)) throw UnknownCase("missing '" + k + "' in case " + selector);
  for (const auto& [k, v] : keys)
    if (std::find(required.begin(), required.end(), k) == required.end() &&
        std::find(optional.begin(), optional.end(), k) == optional.end())
      throw UnknownCase("unknown key '" + k + "' in case " + selector);
}

nlohmann::json vec_json(const Vec& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

}  // namespace

ImmersionJet sphere_chart(const Vec& theta) {
  const int k = static_cast<int>(theta.size());
  if (k < 1) throw ParameterError("sphere chart needs at least one angle");
  ImmersionJet jet;
  if (k == 1) {
    const double c = std::cos(theta(0)), s = std::sin(theta(0));
    jet.point = Eigen::Vector2d(c, s);
    jet.d1 = Eigen::Vector2d(-s, c);
    jet.d2 = {Mat(Eigen::Vector2d(-c, -s))};
    return jet;
  }
  const ImmersionJet inner = sphere_chart(theta.head(k - 1));
  const double c = std::cos(theta(k - 1)), s = std::sin(theta(k - 1));
  jet.point = Vec(k + 1);
  jet.point << c * inner.point, s;
  jet.d1 = Mat::Zero(k + 1, k);
  jet.d1.topLeftCorner(k, k - 1) = c * inner.d1;
  jet.d1.col(k - 1) << -s * inner.point, c;
  jet.d2.assign(k, Mat::Zero(k + 1, k));
  for (int i = 0; i < k - 1; ++i) {
    jet.d2[i].topLeftCorner(k, k - 1) = c * inner.d2[i];
    jet.d2[i].col(k - 1).head(k) = -s * inner.d1.col(i);
    jet.d2[k - 1].col(i).head(k) = -s * inner.d1.col(i);
  }
  jet.d2[k - 1].col(k - 1) << -c * inner.point, -s;
  return jet;
}

CatalogCase clifford_torus(int p, int q) {
  if (p < 1 || q < 1) throw ParameterError("Clifford torus needs p, q >= 1");
  const int n = p + q + 1;
  const double f = 1.0 / std::sqrt(2.0);
  FunctionImmersion::Parts parts;
  parts.name = "clifford-torus:" + std::to_string(p) + "," + std::to_string(q);
  parts.parameter_dimension = p + q;
  parts.ambient = std::make_shared<SpaceForm>(n, 1.0);
  parts.jet = [p, q, f](const Vec& u) {
    ImmersionJet jet;
    jet.point = Vec::Zero(p + q + 2);
    jet.d1 = Mat::Zero(p + q + 2, p + q);
    jet.d2.assign(p + q, Mat::Zero(p + q + 2, p + q));
    place(jet, sphere_chart(u.head(p)), 0, 0, f);
    place(jet, sphere_chart(u.tail(q)), p + 1, p, f);
    return jet;
  };
  parts.normal_hint = [p, q](const Vec& u) {
    Vec hint(p + q + 2);
    hint << sphere_chart(u.head(p)).point, -sphere_chart(u.tail(q)).point;
    return hint;
  };
  parts.contains = [p, q](const Vec& u) {
    return latitudes_inside(u.head(p)) && latitudes_inside(u.tail(q));
  };
  parts.orientation = "(sigma_p, -sigma_q)/sqrt2";
  parts.sample_lo = Vec(p + q);
  parts.sample_hi = Vec(p + q);
  sphere_box(p, parts.sample_lo, parts.sample_hi, 0);
  sphere_box(q, parts.sample_lo, parts.sample_hi, p);

  CatalogCase c;
  c.name = parts.name;
  c.ambient = parts.ambient;
  c.immersion = std::make_shared<FunctionImmersion>(parts);
  Vec principal(p + q);
  principal << Vec::Constant(p, -1.0), Vec::Constant(q, 1.0);
  c.expected.principal = principal;
  c.expected.mean = static_cast<double>(q - p) / (p + q);
  c.meta["ambient"] = parts.ambient->name();
  c.meta["factor_radius"] = f;
  c.meta["minimal"] = p == q;
  return c;
}

FunctionCurve clifford_geodesic(int p, int q, double a_const, double b_const, const Vec& v1,
                                const Vec& v2, const Vec& v3, const Vec& v4) {
  if (p < 1 || q < 1) throw ParameterError("Clifford geodesic needs p, q >= 1");
  const int dim = p + q + 2;
  constexpr double tol = 1e-12;
  if (std::abs(a_const * a_const + b_const * b_const - 1.0) > tol)
    throw ParameterError("Clifford geodesic needs a^2 + b^2 = 1");
  const std::vector<Vec> v{v1, v2, v3, v4};
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].size() != dim) throw ParameterError("Clifford geodesic vectors have the wrong size");
    if (std::abs(v[i].squaredNorm() - 0.5) > tol) throw ParameterError("Clifford geodesic needs |v_i|^2 = 1/2");
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(v[i].dot(v[j])) > tol) throw ParameterError("Clifford geodesic vectors must be orthogonal");
  }
  if (v1.tail(q + 1).norm() > tol || v2.tail(q + 1).norm() > tol || v3.head(p + 1).norm() > tol ||
      v4.head(p + 1).norm() > tol)
    throw ParameterError("Clifford geodesic vectors must lie in their factors");
  const double wa = std::sqrt(2.0) * a_const;
  const double wb = std::sqrt(2.0) * b_const;
  return FunctionCurve([=](double s) {
    const double ca = std::cos(wa * s), sa = std::sin(wa * s);
    const double cb = std::cos(wb * s), sb = std::sin(wb * s);
    CurveJet jet;
    jet.position = ca * v1 + sa * v2 + cb * v3 + sb * v4;
    jet.velocity = wa * (-sa * v1 + ca * v2) + wb * (-sb * v3 + cb * v4);
    jet.acceleration = -wa * wa * (ca * v1 + sa * v2) - wb * wb * (cb * v3 + sb * v4);
    return jet;
  });
}

namespace {

CatalogCase hypersphere_case(int n, bool small) {
  if (n < 3) throw ParameterError("hypersphere cases need n >= 3");
  const int k = n - 1;
  const double radius = small ? 1.0 / std::sqrt(2.0) : 1.0;
  const double height = small ? 1.0 / std::sqrt(2.0) : 0.0;
  FunctionImmersion::Parts parts;
  parts.name = std::string(small ? "small-hypersphere" : "equator") + ":n=" + std::to_string(n);
  parts.parameter_dimension = k;
  parts.ambient = std::make_shared<SpaceForm>(n, 1.0);
  parts.jet = [k, radius, height](const Vec& u) {
    const ImmersionJet s = sphere_chart(u);
    ImmersionJet jet;
    jet.point = Vec(k + 2);
    jet.point << radius * s.point, height;
    jet.d1 = Mat::Zero(k + 2, k);
    jet.d1.topRows(k + 1) = radius * s.d1;
    jet.d2.assign(k, Mat::Zero(k + 2, k));
    for (int i = 0; i < k; ++i) jet.d2[i].topRows(k + 1) = radius * s.d2[i];
    return jet;
  };
  parts.normal_hint = [k](const Vec&) {
    Vec e = Vec::Zero(k + 2);
    e(k + 1) = 1.0;
    return e;
  };
  parts.contains = [](const Vec& u) { return latitudes_inside(u); };
  parts.orientation = "towards the pole e_n";
  parts.sample_lo = Vec(k);
  parts.sample_hi = Vec(k);
  sphere_box(k, parts.sample_lo, parts.sample_hi, 0);

  CatalogCase c;
  c.name = parts.name;
  c.ambient = parts.ambient;
  c.immersion = std::make_shared<FunctionImmersion>(parts);
  c.expected.principal = Vec::Constant(k, small ? 1.0 : 0.0);
  c.expected.mean = small ? 1.0 : 0.0;
  c.expected.totally_geodesic = !small;
  c.meta["ambient"] = parts.ambient->name();
  c.meta["radius"] = radius;
  c.meta["scaling"] = "normalized to curvature 1; in curvature rho the sphere has radius 1/sqrt(2 rho)";
  return c;
}

}  // namespace

CatalogCase small_hypersphere(int n) { return hypersphere_case(n, true); }
CatalogCase equator(int n) { return hypersphere_case(n, false); }

RotationalHopfCylinder::RotationalHopfCylinder(std::string name, double a, double b, double r)
    : name_(std::move(name)), r_(r) {
  if (!(r > 0.0)) throw ParameterError("Hopf cylinder needs r > 0");
  const double lambda_a = 1.0 + a * r * r;
  if (!(lambda_a > 0.0)) throw ParameterError("Hopf cylinder outside the chart: 1 + a r^2 <= 0");
  space_ = std::make_shared<BcvSpace>(a, b);
  k_ = lambda_a / r;
  c_ = b * r * r / (2.0 * lambda_a);
}

double RotationalHopfCylinder::period() const { return 2.0 * kPi / k_; }

ImmersionJet RotationalHopfCylinder::jet(const Vec& u) const {
  const double c = std::cos(k_ * u(0)), s = std::sin(k_ * u(0));
  ImmersionJet jet;
  jet.point = Eigen::Vector3d(r_ * c, r_ * s, c_ * k_ * u(0) + u(1));
  jet.d1 = Mat(3, 2);
  jet.d1 << -r_ * k_ * s, 0.0, r_ * k_ * c, 0.0, c_ * k_, 1.0;
  jet.d2.assign(2, Mat::Zero(3, 2));
  jet.d2[0].col(0) << -r_ * k_ * k_ * c, -r_ * k_ * k_ * s, 0.0;
  return jet;
}

Vec RotationalHopfCylinder::normal_hint(const Vec& u) const {
  const double c = std::cos(k_ * u(0)), s = std::sin(k_ * u(0));
  return Eigen::Vector3d(-c, -s, 0.0);
}

Vec RotationalHopfCylinder::sample_parameter(std::mt19937_64& rng) const {
  return Eigen::Vector2d(std::uniform_real_distribution<double>(0.0, period())(rng),
                         std::uniform_real_distribution<double>(-1.0, 1.0)(rng));
}

HopfImmersion::ProfileJet RotationalHopfCylinder::profile(double s) const {
  const double c = std::cos(k_ * s), sn = std::sin(k_ * s);
  ProfileJet out;
  out.point = {r_ * c, r_ * sn};
  out.velocity = {-r_ * k_ * sn, r_ * k_ * c};
  out.acceleration = {-r_ * k_ * k_ * c, -r_ * k_ * k_ * sn};
  return out;
}

namespace {

CatalogCase rotational_case(const std::string& name, double a, double b, double r) {
  auto imm = std::make_shared<RotationalHopfCylinder>(name, a, b, r);
  CatalogCase c;
  c.name = name;
  c.ambient = imm->shared_space();
  c.immersion = imm;
  const double kg = hopf_kappa_g(a, r);
  const double disc = std::sqrt(kg * kg + b * b);
  c.expected.kappa_g = kg;
  c.expected.principal = Vec(Eigen::Vector2d(0.5 * (kg - disc), 0.5 * (kg + disc)));
  c.expected.mean = 0.5 * kg;
  c.expected.totally_biharmonic = is_tb_radius(a, b, r);
  c.expected.biharmonic = std::abs(kg * kg - (4.0 * a - b * b)) <= 1e-9 * std::max(1.0, kg * kg);
  c.meta["ambient"] = c.ambient->name();
  c.meta["a"] = a;
  c.meta["b"] = b;
  c.meta["r"] = r;
  return c;
}

}  // namespace

CatalogCase hopf_cylinder(double a, double b, double r) {
  return rotational_case("hopf:a=" + number(a) + ",b=" + number(b) + ",r=" + number(r), a, b, r);
}

CatalogCase tb_cylinder(double rho, bool plus_branch) {
  if (!(rho > 0.0)) throw ParameterError("totally biharmonic cylinder needs rho > 0");
  const double a = rho / 4.0;
  const RadiusPair radii = tb_radii(a);
  const double r = std::sqrt(plus_branch ? radii.plus : radii.minus);
  CatalogCase c = rotational_case("tb-cylinder:rho=" + number(rho) + (plus_branch ? ",branch=plus" : ""),
                                  a, 0.0, r);
  // Same cylinder up to orientation: the expected data are set exactly.
  const double root = std::sqrt(rho);
  c.expected.kappa_g = plus_branch ? -root : root;
  c.expected.principal = plus_branch ? Vec(Eigen::Vector2d(-root, 0.0)) : Vec(Eigen::Vector2d(0.0, root));
  c.expected.mean = (plus_branch ? -0.5 : 0.5) * root;
  c.expected.totally_biharmonic = true;
  c.expected.biharmonic = true;
  c.meta["rho"] = rho;
  c.meta["branch"] = plus_branch ? "plus" : "minus";
  c.meta["product"] = "S^2(rho) x R as BCV(rho/4, 0) on its chart";
  return c;
}

CatalogCase round_cylinder_r3(double r) {
  CatalogCase c = rotational_case("round-cylinder:r=" + number(r), 0.0, 0.0, r);
  c.expected.totally_biharmonic = false;
  c.expected.biharmonic = false;
  return c;
}

std::vector<std::string> registry_names() {
  std::vector<std::string> names{"clifford-torus:1,1",        "clifford-torus:1,2",
                                 "small-hypersphere:n=3",     "small-hypersphere:n=4",
                                 "equator:n=3",               "tb-cylinder:rho=4",
                                 "tb-cylinder:rho=4,branch=plus", "hopf:a=1,b=0,r=2",
                                 "hopf:a=1,b=1,r=0.5",        "round-cylinder:r=1"};
  std::sort(names.begin(), names.end());
  return names;
}

CatalogCase make_case(const std::string& selector) {
  const auto colon = selector.find(':');
  if (colon == std::string::npos) throw UnknownCase("unknown case " + selector);
  const std::string kind = selector.substr(0, colon);
  const std::string args = selector.substr(colon + 1);
  try {
    if (kind == "clifford-torus") {
      const std::vector<std::string> pq = split(args, ',');
      if (pq.size() != 2) throw UnknownCase("expected clifford-torus:p,q");
      return clifford_torus(parse_int(pq[0], selector), parse_int(pq[1], selector));
    }
    const auto keys = parse_keys(args, selector);
    if (kind == "small-hypersphere" || kind == "equator") {
      require_keys(keys, {"n"}, {}, selector);
      const int n = parse_int(keys.at("n"), selector);
      return kind == "equator" ? equator(n) : small_hypersphere(n);
    }
    if (kind == "tb-cylinder") {
      require_keys(keys, {"rho"}, {"branch"}, selector);
      bool plus = false;
      if (keys.count("branch")) {
        const std::string& branch = keys.at("branch");
        if (branch != "plus" && branch != "minus") throw UnknownCase("branch must be plus or minus");
        plus = branch == "plus";
      }
      return tb_cylinder(parse_number(keys.at("rho"), selector), plus);
    }
    if (kind == "hopf") {
      require_keys(keys, {"a", "b", "r"}, {}, selector);
      return hopf_cylinder(parse_number(keys.at("a"), selector), parse_number(keys.at("b"), selector),
                           parse_number(keys.at("r"), selector));
    }
    if (kind == "round-cylinder") {
      require_keys(keys, {"r"}, {}, selector);
      return round_cylinder_r3(parse_number(keys.at("r"), selector));
    }
  } catch (const ParameterError& e) {
    throw UnknownCase("case " + selector + ": " + e.what());
  }
  throw UnknownCase("unknown case " + selector);
}

VerificationReport verify_case(const CatalogCase& c, const VerifyOptions& options) {
  const Immersion& imm = *c.immersion;
  const Tolerances& tol = options.tol;
  const ExpectedVerdict& ex = c.expected;
  VerificationReport report;
  report.case_name = c.name;
  report.meta = c.meta;
  report.meta["orientation"] = imm.orientation();
  report.meta["seed"] = options.seed;
  report.meta["expected_totally_biharmonic"] = ex.totally_biharmonic;
  report.meta["expected_biharmonic"] = ex.biharmonic;

  // Shape data.
  std::mt19937_64 rng(options.seed);
  double principal = 0.0, mean = 0.0;
  Vec first_principal;
  for (int i = 0; i < options.shape_samples; ++i) {
    const SecondFundamentalData sd = shape_operator(imm, imm.sample_parameter(rng));
    const Vec measured = ascending(sd.principal);
    if (i == 0) first_principal = measured;
    if (ex.principal) principal = std::max(principal, (measured - *ex.principal).cwiseAbs().maxCoeff());
    if (ex.mean) mean = std::max(mean, std::abs(sd.mean - *ex.mean));
  }
  if (ex.principal) {
    report.add("principal", principal, tol.principal);
    report.meta["expected_principal"] = vec_json(*ex.principal);
  }
  if (ex.mean) {
    report.add("mean_curvature", mean, tol.principal);
    report.meta["expected_mean"] = *ex.mean;
  }
  if (first_principal.size()) report.meta["measured_principal"] = vec_json(first_principal);

  // Biharmonic equations.
  const std::vector<DirectionSample> samples =
      random_direction_samples(imm, options.pointwise_samples, options.seed);
  std::vector<Vec> points;
  for (int i = 0; i < options.biharmonic_samples && i < static_cast<int>(samples.size()); ++i)
    points.push_back(samples[i].u);
  VerificationReport bih = biharmonic_check(imm, points, tol);
  if (!ex.biharmonic) {
    bih.expect("biharmonic_normal", Expectation::Exceed);
    bih.expect("biharmonic_tangent", Expectation::Informational);
  }
  report.merge(bih, "biharmonic");

  // Totally biharmonic conditions, pointwise and along geodesics.
  VerificationReport pointwise = tb_pointwise_check(imm, samples, tol, options.pointwise);
  if (!ex.totally_biharmonic) {
    double worst = 0.0;
    for (CheckResult& check : pointwise.checks) {
      worst = std::max(worst, check.max_residual);
      check.expected = Expectation::Informational;
    }
    pointwise.add("tb_pointwise", worst, tol.tb_pointwise).expected = Expectation::Exceed;
    pointwise.check("tb_pointwise").threshold = tol.failure_threshold;
  }
  report.merge(pointwise, "tb_pointwise");

  GeodesicOptions geo = options.geodesics;
  geo.seed = options.seed;
  VerificationReport geodesic = tb_geodesic_check(imm, geo, tol);
  if (!ex.totally_biharmonic) geodesic.expect("tb_geodesic", Expectation::Exceed);
  report.merge(geodesic, "tb_geodesic");

  // Hopf cylinders: base curve and the horizontal lift.
  if (const HopfImmersion* hopf = c.hopf()) {
    const double a = hopf->bcv().a(), b = hopf->bcv().b();
    const HopfBaseData base = hopf_base_data(*hopf, points);
    if (ex.kappa_g) {
      report.add("hopf_kappa_g", std::abs(base.kappa_g - *ex.kappa_g), tol.hopf_kappa_g);
      report.meta["expected_kappa_g"] = *ex.kappa_g;
    }
    report.meta["kappa_g"] = base.kappa_g;
    report.meta["extrinsic_gaussian"] = base.extrinsic_gaussian;
    report.add("hopf_norm_relation", std::abs(base.norm_relation), tol.principal);
    report.add("extrinsic_gaussian", std::abs(base.gauss_relation), tol.extrinsic_gaussian,
               "K_e + b^2/4: Gauss equation on the flat cylinder");
    CheckResult& relation =
        report.add("hopf_biharmonic_relation", std::abs(base.tb_relation), tol.hopf_kappa_g,
                   "kappa_g^2 - (4a - b^2)");
    relation.threshold = tol.failure_threshold;
    if (!ex.biharmonic) relation.expected = Expectation::Exceed;

    const Vec u0 = Vec::Zero(2);
    const Vec dir = Eigen::Vector2d(1.0, 0.0);
    const GeodesicTrace horizontal(imm, u0, dir, geo.length, geo.step);
    const std::vector<double> grid = uniform_grid(0.0, std::floor(geo.length / geo.step) * geo.step, 7);
    const BiharmonicResiduals res = biharmonic_residuals(imm.ambient(), horizontal, grid);
    CheckResult& lift = report.add("horizontal_geodesic", res.max(), tol.tb_geodesic);
    lift.threshold = tol.failure_threshold;
    if (!ex.totally_biharmonic) lift.expected = Expectation::Exceed;
    if (4.0 * a != b * b) {
      const BcvSystemResiduals sys = bcv_biharmonic_system(hopf->bcv(), horizontal, grid);
      report.meta["horizontal_b14"] = sys.b14;
    }
  }
  return report;
}

}  // namespace bihcheck

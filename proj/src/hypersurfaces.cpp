#include "bihcheck/hypersurfaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "bihcheck/errors.hpp"
#include "bihcheck/rk4.hpp"

namespace bihcheck {

namespace {

Vec unit(int n, int i) {
  Vec e = Vec::Zero(n);
  e(i) = 1.0;
  return e;
}

double g_norm(const Mat& g, const Vec& x) { return std::sqrt(std::max(0.0, x.dot(g * x))); }

Vec random_unit_direction(std::mt19937_64& rng, const Mat& g) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (;;) {
    Vec x(g.rows());
    for (int i = 0; i < x.size(); ++i) x(i) = dist(rng);
    if (x.norm() > 0.2) return x / g_norm(g, x);
  }
}

/// g-orthonormal basis of the g-complement of the unit vector x.
Mat complement_basis(const Mat& g, const Vec& x) {
  const int m = static_cast<int>(x.size());
  std::vector<Vec> basis{x};
  for (int i = 0; i < m && static_cast<int>(basis.size()) < m; ++i) {
    Vec v = unit(m, i);
    for (const Vec& e : basis) v -= e.dot(g * v) * e;
    const double len = g_norm(g, v);
    if (len > 1e-6) basis.push_back(v / len);
  }
  Mat out(m, m - 1);
  for (int k = 1; k < m; ++k) out.col(k - 1) = basis[k];
  return out;
}

/// Samples on integration nodes: multiples of `step` covering [0, length].
std::vector<double> node_grid(double length, double step, int count) {
  std::vector<double> grid;
  const long nodes = std::lround(length / step);
  for (int j = 0; j < count; ++j) {
    const long k = count == 1 ? 0 : std::lround(static_cast<double>(j) * nodes / (count - 1));
    const double s = static_cast<double>(k) * step;
    if (grid.empty() || s > grid.back()) grid.push_back(s);
  }
  return grid;
}

/// <nabla_{d_i} d_j x, w> for all i, j.
Mat second_derivative_against(const AmbientSpace& space, const ImmersionJet& jet, const Vec& w) {
  const int m = static_cast<int>(jet.d1.cols());
  Mat out(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      const Vec d = jet.d2[i].col(j) + space.connection(jet.point, jet.d1.col(i), jet.d1.col(j));
      out(i, j) = out(j, i) = space.inner(jet.point, d, w);
    }
  return out;
}

Christoffels christoffels_from_jet(const AmbientSpace& space, const ImmersionJet& jet,
                                   const Mat& g_inv) {
  const int m = static_cast<int>(jet.d1.cols());
  // lowered(l)(i, j) = <nabla_{d_i} d_j x, d_l x>
  std::vector<Mat> lowered;
  for (int l = 0; l < m; ++l) lowered.push_back(second_derivative_against(space, jet, jet.d1.col(l)));
  Christoffels gamma(m, Mat::Zero(m, m));
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) gamma[k] += g_inv(k, l) * lowered[l];
  return gamma;
}

Mat induced_metric(const AmbientSpace& space, const ImmersionJet& jet) {
  return jet.d1.transpose() * space.metric(jet.point) * jet.d1;
}

void require_nonsingular(const Mat& g, const Vec& u) {
  Eigen::SelfAdjointEigenSolver<Mat> es(g);
  const double hi = es.eigenvalues().cwiseAbs().maxCoeff();
  if (!(es.eigenvalues().minCoeff() > 1e-12 * std::max(1.0, hi))) {
    std::ostringstream os;
    os << "singular first fundamental form at u = " << u.transpose();
    throw DegeneracyError(os.str());
  }
}

}  // namespace

FunctionImmersion::FunctionImmersion(Parts parts) : parts_(std::move(parts)) {
  if (!parts_.ambient || !parts_.jet || !parts_.normal_hint)
    throw ParameterError("function immersion needs an ambient, a jet and a normal hint");
  if (parts_.sample_lo.size() == 0) parts_.sample_lo = Vec::Constant(parts_.parameter_dimension, -1.0);
  if (parts_.sample_hi.size() == 0) parts_.sample_hi = Vec::Constant(parts_.parameter_dimension, 1.0);
}

Vec FunctionImmersion::sample_parameter(std::mt19937_64& rng) const {
  Vec u(parts_.parameter_dimension);
  for (int i = 0; i < u.size(); ++i)
    u(i) = std::uniform_real_distribution<double>(parts_.sample_lo(i), parts_.sample_hi(i))(rng);
  return u;
}

ImmersionJet jet_by_differences(const std::function<Vec(const Vec&)>& position, const Vec& u,
                                const FiniteDifference& fd) {
  const int m = static_cast<int>(u.size());
  ImmersionJet jet;
  jet.point = position(u);
  const int dim = static_cast<int>(jet.point.size());
  jet.d1.resize(dim, m);
  for (int i = 0; i < m; ++i)
    jet.d1.col(i) = fd.derivative([&](double t) -> Vec { return position(u + t * unit(m, i)); });
  jet.d2.assign(m, Mat(dim, m));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      const Vec d = fd.derivative([&](double t) -> Vec {
        return fd.derivative(
            [&](double q) -> Vec { return position(u + t * unit(m, i) + q * unit(m, j)); });
      });
      jet.d2[i].col(j) = d;
      jet.d2[j].col(i) = d;
    }
  return jet;
}

FirstFundamental first_fundamental(const Immersion& imm, const Vec& u) {
  const AmbientSpace& space = imm.ambient();
  const ImmersionJet jet = imm.jet(u);
  const int m = imm.parameter_dimension();
  FirstFundamental out;
  out.point = jet.point;
  out.d1 = jet.d1;
  out.g = induced_metric(space, jet);
  require_nonsingular(out.g, u);
  out.g_inv = out.g.inverse();

  // Normal as the last column of a full QR of the tangent vectors' frame coefficients.
  const Mat frame = space.tangent_frame(jet.point);
  const Mat coeffs = frame.transpose() * space.metric(jet.point) * jet.d1;
  Eigen::HouseholderQR<Mat> qr(coeffs);
  const Mat q = qr.householderQ();
  out.eta = frame * q.col(m);
  if (space.inner(jet.point, out.eta, imm.normal_hint(u)) < 0.0) out.eta = -out.eta;
  return out;
}

SecondFundamentalData shape_operator(const Immersion& imm, const Vec& u) {
  const AmbientSpace& space = imm.ambient();
  SecondFundamentalData out;
  out.u = u;
  out.first = first_fundamental(imm, u);
  const ImmersionJet jet = imm.jet(u);
  out.second = second_derivative_against(space, jet, out.first.eta);
  out.shape = out.first.g_inv * out.second;

  Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(out.second, out.first.g);
  const Vec values = es.eigenvalues();
  const Mat vectors = es.eigenvectors();
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return std::abs(values(i)) > std::abs(values(j)); });
  out.principal.resize(values.size());
  out.directions.resize(vectors.rows(), vectors.cols());
  for (int k = 0; k < static_cast<int>(order.size()); ++k) {
    out.principal(k) = values(order[k]);
    out.directions.col(k) = vectors.col(order[k]);
  }
  const int m = imm.parameter_dimension();
  out.mean = out.shape.trace() / m;
  out.norm2 = (out.shape * out.shape).trace();
  out.extrinsic_gaussian = out.shape.determinant();
  return out;
}

Christoffels induced_christoffels(const Immersion& imm, const Vec& u) {
  const ImmersionJet jet = imm.jet(u);
  const Mat g = induced_metric(imm.ambient(), jet);
  require_nonsingular(g, u);
  return christoffels_from_jet(imm.ambient(), jet, g.inverse());
}

GeodesicTrace::GeodesicTrace(const Immersion& imm, const Vec& u0, const Vec& dir0, double length,
                             double step, double margin)
    : imm_(&imm), u0_(u0), dir0_(dir0), length_(length), step_(step), margin_(margin) {
  if (!(step > 0.0) || !(length >= 0.0) || !(margin >= 0.0))
    throw ParameterError("geodesic needs step > 0, length >= 0 and margin >= 0");
  if (!imm.contains(u0)) throw ChartExit("geodesic start point is outside the chart");
  const Mat g = induced_metric(imm.ambient(), imm.jet(u0));
  if (std::abs(g_norm(g, dir0) - 1.0) > 1e-8) throw ParameterError("geodesic direction must be g-unit");

  const int m = static_cast<int>(u0.size());
  const int back = static_cast<int>(std::ceil(margin / step - 1e-9));
  const int forward = static_cast<int>(std::ceil((length + margin) / step - 1e-9));
  first_index_ = back;
  nodes_.assign(static_cast<std::size_t>(back + forward + 1), Vec());
  Vec start(2 * m);
  start << u0, dir0;
  nodes_[back] = start;

  auto f = [this](double, const Vec& y) { return rhs(y); };
  auto advance = [&](int from, int to, double h) {
    const Vec next = rk4_step(f, 0.0, nodes_[from], h);
    if (!imm.contains(next.head(m))) {
      std::ostringstream os;
      os << "geodesic left the chart at s = " << (to - first_index_) * step;
      throw ChartExit(os.str());
    }
    nodes_[to] = next;
  };
  for (int k = back; k < back + forward; ++k) advance(k, k + 1, step);
  for (int k = back; k > 0; --k) advance(k, k - 1, -step);
}

Vec GeodesicTrace::rhs(const Vec& state) const {
  const int m = static_cast<int>(state.size() / 2);
  const Vec u = state.head(m);
  const Vec du = state.tail(m);
  const Christoffels gamma = induced_christoffels(*imm_, u);
  Vec out(2 * m);
  out << du, -contract(gamma, du, du);
  return out;
}

GeodesicTrace::ParameterJet GeodesicTrace::parameter_jet(double s) const {
  const long last = static_cast<long>(nodes_.size()) - 1;
  const long k = std::clamp(first_index_ + std::lround(s / step_), 0L, last);
  const double delta = s - static_cast<double>(k - first_index_) * step_;
  const Vec state = delta == 0.0
                        ? nodes_[k]
                        : rk4_step([this](double, const Vec& y) { return rhs(y); }, 0.0, nodes_[k], delta);
  const int m = static_cast<int>(u0_.size());
  ParameterJet out;
  out.u = state.head(m);
  out.du = state.tail(m);
  out.ddu = -contract(induced_christoffels(*imm_, out.u), out.du, out.du);
  return out;
}

CurveJet GeodesicTrace::jet(double s) const {
  const ParameterJet pj = parameter_jet(s);
  const ImmersionJet ij = imm_->jet(pj.u);
  const int m = static_cast<int>(pj.u.size());
  CurveJet out;
  out.position = ij.point;
  out.velocity = ij.d1 * pj.du;
  out.acceleration = ij.d1 * pj.ddu;
  for (int i = 0; i < m; ++i) out.acceleration += pj.du(i) * (ij.d2[i] * pj.du);
  return out;
}

GeodesicTrace surface_geodesic(const Immersion& imm, const Vec& u0, const Vec& dir0, double length,
                               double step) {
  return GeodesicTrace(imm, u0, dir0, length, step);
}

double laplace_beltrami(const Immersion& imm, const std::function<double(const Vec&)>& f,
                        const Vec& u, const FiniteDifference& fd) {
  const int m = static_cast<int>(u.size());
  const double r = fd.reach();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (double si : {-1.0, 1.0})
        for (double sj : {-1.0, 1.0})
          if (!imm.contains(u + r * (si * unit(m, i) + sj * unit(m, j))))
            throw StencilError("Laplace-Beltrami stencil leaves the chart");

  const ImmersionJet jet = imm.jet(u);
  const Mat g = induced_metric(imm.ambient(), jet);
  require_nonsingular(g, u);
  const Mat g_inv = g.inverse();
  const Christoffels gamma = christoffels_from_jet(imm.ambient(), jet, g_inv);

  Vec df(m);
  for (int k = 0; k < m; ++k) df(k) = fd.derivative([&](double t) { return f(u + t * unit(m, k)); });
  double out = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double dij = fd.derivative([&](double t) {
        return fd.derivative([&](double q) { return f(u + t * unit(m, i) + q * unit(m, j)); });
      });
      double christoffel = 0.0;
      for (int k = 0; k < m; ++k) christoffel += gamma[k](i, j) * df(k);
      out -= g_inv(i, j) * (dij - christoffel);
    }
  return out;
}

BiharmonicTerms biharmonic_terms(const Immersion& imm, const Vec& u, const FiniteDifference& fd) {
  const AmbientSpace& space = imm.ambient();
  const int m = imm.parameter_dimension();
  const SecondFundamentalData sd = shape_operator(imm, u);
  const FirstFundamental& ff = sd.first;
  auto mean = [&](const Vec& v) { return shape_operator(imm, v).mean; };

  BiharmonicTerms out;
  out.mean = sd.mean;
  out.norm2 = sd.norm2;
  out.laplace_mean = laplace_beltrami(imm, mean, u, fd);
  out.ricci_normal = ricci(space, ff.point, ff.eta, ff.eta);
  out.normal = std::abs(out.laplace_mean + sd.mean * sd.norm2 - sd.mean * out.ricci_normal);

  Vec dmean(m);
  for (int k = 0; k < m; ++k) dmean(k) = fd.derivative([&](double t) { return mean(u + t * unit(m, k)); });
  const Vec grad = ff.g_inv * dmean;
  const Vec ric = ricci_vector(space, ff.point, ff.eta);
  const Vec ric_t = ff.g_inv * (ff.d1.transpose() * space.metric(ff.point) * ric);
  const Vec tangential = 2.0 * sd.shape * grad + m * sd.mean * grad - 2.0 * sd.mean * ric_t;
  out.tangent = g_norm(ff.g, tangential);
  out.ricci_tangent = g_norm(ff.g, ric_t);
  return out;
}

VerificationReport biharmonic_check(const Immersion& imm, const std::vector<Vec>& samples,
                                    const Tolerances& tol) {
  double normal = 0.0, tangent = 0.0;
  for (const Vec& u : samples) {
    const BiharmonicTerms t = biharmonic_terms(imm, u);
    normal = std::max(normal, t.normal);
    tangent = std::max(tangent, t.tangent);
  }
  VerificationReport report;
  report.case_name = imm.name();
  report.add("biharmonic_normal", normal, tol.biharmonic).threshold = tol.failure_threshold;
  report.add("biharmonic_tangent", tangent, tol.biharmonic).threshold = tol.failure_threshold;
  report.meta["samples"] = samples.size();
  return report;
}

VerificationReport biminimal_check(const Immersion& imm, const std::vector<Vec>& samples,
                                   const Tolerances& tol) {
  double normal = 0.0;
  for (const Vec& u : samples) normal = std::max(normal, biharmonic_terms(imm, u).normal);
  VerificationReport report;
  report.case_name = imm.name();
  report.add("biminimal", normal, tol.biminimal).threshold = tol.failure_threshold;
  report.meta["samples"] = samples.size();
  return report;
}

std::vector<DirectionSample> random_direction_samples(const Immersion& imm, int count,
                                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<DirectionSample> out;
  for (int i = 0; i < count; ++i) {
    DirectionSample d;
    d.u = imm.sample_parameter(rng);
    const Mat g = first_fundamental(imm, d.u).g;
    d.x = random_unit_direction(rng, g);
    out.push_back(d);
  }
  return out;
}

VerificationReport tb_pointwise_check(const Immersion& imm,
                                      const std::vector<DirectionSample>& samples,
                                      const Tolerances& tol, const PointwiseOptions& options) {
  const AmbientSpace& space = imm.ambient();
  VerificationReport report;
  report.case_name = imm.name();
  report.meta["samples"] = samples.size();
  report.meta["s1_family"] = "per geodesic";
  report.meta["s1_geodesic_length"] = options.geodesic_length;
  report.meta["step"] = options.step;

  double largest = 0.0;
  for (const DirectionSample& d : samples)
    largest = std::max(largest, shape_operator(imm, d.u).principal.cwiseAbs().maxCoeff());
  const bool flat = largest < options.flat_floor;
  report.meta["totally_geodesic"] = flat;
  if (flat) {
    for (const char* name : {"tb_s1", "tb_s2", "tb_s3"})
      report.add(name, 0.0, tol.tb_pointwise, "totally geodesic").threshold = tol.failure_threshold;
    return report;
  }

  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
  int vacuous = 0, skipped = 0;
  const std::vector<double> grid =
      node_grid(options.geodesic_length, options.step, options.geodesic_samples);
  for (const DirectionSample& d : samples) {
    const SecondFundamentalData sd = shape_operator(imm, d.u);
    const FirstFundamental& ff = sd.first;
    const Vec& p = ff.point;
    const Vec x = ff.d1 * d.x;
    const double normal_curvature = d.x.dot(sd.second * d.x);

    try {
      const GeodesicTrace trace(imm, d.u, d.x, options.geodesic_length, options.step);
      double lo = std::numeric_limits<double>::infinity(), hi = -lo;
      for (double s : grid) {
        const GeodesicTrace::ParameterJet pj = trace.parameter_jet(s);
        const double k = pj.du.dot(shape_operator(imm, pj.u).second * pj.du);
        lo = std::min(lo, k);
        hi = std::max(hi, k);
      }
      s1 = std::max(s1, hi - lo);

      if (std::abs(normal_curvature) < options.normal_curvature_floor) {
        ++vacuous;
        continue;
      }
      const Vec sx = sd.shape * d.x;
      s2 = std::max(s2, std::abs(sx.dot(ff.g * sx) - sectional_curvature(space, p, x, ff.eta)));

      auto shaped_tangent = [&](double s) -> Vec {
        const GeodesicTrace::ParameterJet pj = trace.parameter_jet(s);
        const SecondFundamentalData here = shape_operator(imm, pj.u);
        return here.first.d1 * (here.shape * pj.du);
      };
      const Vec derivative = covariant_derivative_along(space, trace, shaped_tangent, 0.0, options.along);
      const Vec curvature = space.curvature(p, x, ff.eta, x);
      const Mat partners = complement_basis(ff.g, d.x);
      for (int k = 0; k < partners.cols(); ++k) {
        const Vec y = ff.d1 * partners.col(k);
        s3 = std::max(s3, std::abs(space.inner(p, derivative, y) + space.inner(p, curvature, y)));
      }
    } catch (const DomainError&) {
      ++skipped;
    }
  }
  report.add("tb_s1", s1, tol.tb_pointwise).threshold = tol.failure_threshold;
  report.add("tb_s2", s2, tol.tb_pointwise).threshold = tol.failure_threshold;
  report.add("tb_s3", s3, tol.tb_pointwise).threshold = tol.failure_threshold;
  report.meta["vacuous_directions"] = vacuous;
  report.meta["skipped"] = skipped;
  return report;
}

double GeodesicSampleResult::max_residual() const {
  return std::max({max_tangent, max_normal, max_binormal, max_off_frame});
}

std::vector<GeodesicSampleResult> sample_geodesics(const Immersion& imm,
                                                   const GeodesicOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<GeodesicSampleResult> out;
  const std::vector<double> grid = node_grid(options.length, options.step, options.grid);
  const int max_attempts = std::max(options.count, options.count * options.max_attempts_factor);
  int evaluated = 0;
  for (int attempt = 0; attempt < max_attempts && evaluated < options.count; ++attempt) {
    GeodesicSampleResult r;
    r.id = attempt;
    r.u0 = imm.sample_parameter(rng);
    r.dir0 = random_unit_direction(rng, first_fundamental(imm, r.u0).g);
    try {
      const GeodesicTrace trace(imm, r.u0, r.dir0, options.length, options.step);
      const BiharmonicResiduals res = biharmonic_residuals(imm.ambient(), trace, grid);
      r.vacuous = res.vacuous;
      r.max_tangent = res.max_tangent;
      r.max_normal = res.max_normal;
      r.max_binormal = res.max_binormal;
      r.max_off_frame = res.max_off_frame;
      ++evaluated;
    } catch (const DomainError&) {
      r.skipped = true;
    }
    out.push_back(r);
  }
  return out;
}

VerificationReport tb_geodesic_check(const Immersion& imm, const GeodesicOptions& options,
                                     const Tolerances& tol) {
  const std::vector<GeodesicSampleResult> results = sample_geodesics(imm, options);
  int evaluated = 0, skipped = 0, vacuous = 0;
  double worst = 0.0;
  for (const GeodesicSampleResult& r : results) {
    if (r.skipped) {
      ++skipped;
      continue;
    }
    ++evaluated;
    if (r.vacuous) ++vacuous;
    worst = std::max(worst, r.max_residual());
  }
  VerificationReport report;
  report.case_name = imm.name();
  std::string note;
  if (evaluated == 0) {
    worst = std::numeric_limits<double>::quiet_NaN();
    note = "no geodesic stayed in the chart";
  }
  report.add("tb_geodesic", worst, tol.tb_geodesic, note).threshold = tol.failure_threshold;
  report.meta["count"] = options.count;
  report.meta["evaluated"] = evaluated;
  report.meta["skipped"] = skipped;
  report.meta["vacuous"] = vacuous;
  report.meta["length"] = options.length;
  report.meta["step"] = options.step;
  report.meta["seed"] = options.seed;
  return report;
}

std::vector<double> tb_principal_constraint(double rho) {
  if (!(rho > 0.0)) return {};
  return {std::sqrt(rho), -std::sqrt(rho)};
}

HopfBaseData hopf_base_data(const HopfImmersion& imm, const std::vector<Vec>& samples) {
  const BcvSpace& space = imm.bcv();
  const double a = space.a();
  const double b = space.b();
  auto base_metric = [a](const Vec& q) -> Mat {
    const double lam = 1.0 + a * q.squaredNorm();
    return Mat::Identity(2, 2) / (lam * lam);
  };
  auto keep_largest = [](double& slot, double value) {
    if (std::abs(value) > std::abs(slot)) slot = value;
  };
  HopfBaseData out;
  double kappa_sum = 0.0;
  for (const Vec& u : samples) {
    const SecondFundamentalData sd = shape_operator(imm, u);
    const Vec& p = sd.first.point;
    const double e3 = std::abs(space.inner(p, sd.first.eta, *space.vertical(p)));
    out.invariance = std::max(out.invariance, e3);
    if (e3 > 1e-8) {
      std::ostringstream os;
      os << "normal has vertical component " << e3 << " at u = " << u.transpose();
      throw InvarianceError(os.str());
    }

    const HopfImmersion::ProfileJet pj = imm.profile(u(0));
    const Vec q = pj.point;
    const Vec v = pj.velocity;
    const Christoffels gamma = christoffels_from_metric(base_metric, q, kChartDifference);
    const Vec accel = Vec(pj.acceleration) + contract(gamma, v, v);
    Vec left(2);
    left << -v(1), v(0);
    const Mat h = base_metric(q);
    const double kappa_g = accel.dot(h * left) / std::sqrt(v.dot(h * v) * left.dot(h * left));
    kappa_sum += kappa_g;

    keep_largest(out.norm_relation, sd.norm2 - (kappa_g * kappa_g + 0.5 * b * b));
    keep_largest(out.extrinsic_gaussian, sd.extrinsic_gaussian);
    keep_largest(out.gauss_relation, sd.extrinsic_gaussian + 0.25 * b * b);
    keep_largest(out.gaussian_magnitude, std::abs(sd.extrinsic_gaussian) - 0.25 * b * b);
    keep_largest(out.tb_relation, kappa_g * kappa_g - (4.0 * a - b * b));
  }
  if (!samples.empty()) out.kappa_g = kappa_sum / static_cast<double>(samples.size());
  return out;
}

nlohmann::json to_json(const GeodesicSampleResult& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["u0"] = std::vector<double>(r.u0.data(), r.u0.data() + r.u0.size());
  j["dir0"] = std::vector<double>(r.dir0.data(), r.dir0.data() + r.dir0.size());
  j["skipped"] = r.skipped;
  j["vacuous"] = r.vacuous;
  j["max_tangent"] = r.max_tangent;
  j["max_normal"] = r.max_normal;
  j["max_binormal"] = r.max_binormal;
  j["max_off_frame"] = r.max_off_frame;
  return j;
}

}  // namespace bihcheck

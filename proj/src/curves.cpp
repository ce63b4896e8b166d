#include "bihcheck/curves.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "bihcheck/errors.hpp"

namespace bihcheck {

namespace {

void require_stencil(const Curve& curve, double s, double reach) {
  if (s - reach < curve.begin() || s + reach > curve.end()) {
    std::ostringstream os;
    os << "difference stencil at s=" << s << " leaves the curve interval [" << curve.begin()
       << ", " << curve.end() << "]";
    throw StencilError(os.str());
  }
}

/// Unit vector of T_pN orthogonal to the given ones.
Vec complete_orthonormal(const AmbientSpace& space, const Vec& p, const std::vector<Vec>& basis) {
  const Mat frame = space.tangent_frame(p);
  for (int k = 0; k < frame.cols(); ++k) {
    Vec candidate = frame.col(k);
    for (const Vec& e : basis) candidate -= space.inner(p, candidate, e) * e;
    const double len = space.norm(p, candidate);
    if (len > 0.5) return candidate / len;
  }
  throw DegeneracyError("could not complete the Frenet frame");
}

std::string optional_number(const std::optional<double>& v) {
  if (!v) return "nan";
  std::ostringstream os;
  os.precision(17);
  os << *v;
  return os.str();
}

}  // namespace

Vec covariant_derivative_along(const AmbientSpace& space, const Curve& curve,
                               const std::function<Vec(double)>& field, double s,
                               const FiniteDifference& fd) {
  require_stencil(curve, s, fd.reach());
  const CurveJet jet = curve.jet(s);
  const Vec derivative = fd.derivative([&](double ds) -> Vec { return field(s + ds); });
  return space.project_tangent(jet.position,
                               derivative + space.connection(jet.position, jet.velocity, field(s)));
}

Vec curve_acceleration(const AmbientSpace& space, const Curve& curve, double s) {
  const CurveJet jet = curve.jet(s);
  return space.project_tangent(jet.position,
                               jet.acceleration +
                                   space.connection(jet.position, jet.velocity, jet.velocity));
}

FrenetSample frenet_apparatus(const AmbientSpace& space, const Curve& curve, double s,
                              const CurveOptions& options) {
  const CurveJet jet = curve.jet(s);
  const Vec& p = jet.position;
  FrenetSample out;
  out.s = s;
  out.t = jet.velocity;
  const Vec accel = curve_acceleration(space, curve, s);
  out.kappa = space.norm(p, accel);
  if (out.kappa < options.kappa_floor) {
    out.kappa = 0.0;
    out.geodesic = true;
    return out;
  }
  out.n = accel / out.kappa;
  const Vec daccel = covariant_derivative_along(
      space, curve, [&](double q) { return curve_acceleration(space, curve, q); }, s,
      options.along);
  out.kappa_prime = space.inner(p, daccel, out.n);
  const Vec dn = (daccel - out.kappa_prime * out.n) / out.kappa;
  if (space.dimension() == 3) {
    out.b = cross(space, p, out.t, out.n);
    out.tau = space.inner(p, dn, out.b);
  } else {
    const Vec w = dn + out.kappa * out.t;
    out.tau = space.norm(p, w);
    out.b = out.tau > options.kappa_floor ? Vec(w / out.tau)
                                          : complete_orthonormal(space, p, {out.t, out.n});
  }
  if (const auto e3 = space.vertical(p)) {
    out.n3 = space.inner(p, out.n, *e3);
    out.b3 = space.inner(p, out.b, *e3);
  }
  return out;
}

BitensionSample bitension(const AmbientSpace& space, const Curve& curve, double s,
                          const CurveOptions& options) {
  auto accel = [&](double q) { return curve_acceleration(space, curve, q); };
  auto second = [&](double q) {
    return covariant_derivative_along(space, curve, accel, q, options.along);
  };
  const CurveJet jet = curve.jet(s);
  const Vec& p = jet.position;
  const Vec third = covariant_derivative_along(space, curve, second, s, options.along);
  BitensionSample out;
  out.s = s;
  out.tau2 = third + space.curvature(p, accel(s), jet.velocity, jet.velocity);
  const FrenetSample frame = frenet_apparatus(space, curve, s, options);
  out.tangent = space.inner(p, out.tau2, frame.t);
  if (!frame.geodesic) {
    out.has_frame = true;
    out.normal = space.inner(p, out.tau2, frame.n);
    out.binormal = space.inner(p, out.tau2, frame.b);
    const Vec rest =
        out.tau2 - out.tangent * frame.t - out.normal * frame.n - out.binormal * frame.b;
    out.off_frame = space.norm(p, rest);
  }
  return out;
}

double BiharmonicResiduals::max() const {
  return std::max({max_tangent, max_normal, max_binormal, max_off_frame});
}

BiharmonicResiduals biharmonic_residuals(const AmbientSpace& space, const Curve& curve,
                                         const std::vector<double>& grid,
                                         const CurveOptions& options) {
  BiharmonicResiduals out;
  std::vector<FrenetSample> frames;
  frames.reserve(grid.size());
  int proper = 0;
  for (double s : grid) {
    frames.push_back(frenet_apparatus(space, curve, s, options));
    if (!frames.back().geodesic) {
      out.kappa_mean += frames.back().kappa;
      ++proper;
    }
  }
  out.vacuous = proper == 0;
  if (proper > 0) out.kappa_mean /= proper;

  for (const FrenetSample& f : frames) {
    ResidualSample r;
    r.s = f.s;
    r.geodesic = f.geodesic;
    if (!f.geodesic) {
      const Vec p = curve.jet(f.s).position;
      r.kappa = f.kappa;
      r.tau = f.tau;
      r.n3 = f.n3;
      r.b3 = f.b3;
      r.tangent = std::abs(f.kappa - out.kappa_mean);
      const double sectional = sectional_curvature(space, p, f.t, f.n);
      r.normal = std::abs(f.kappa * f.kappa + f.tau * f.tau - sectional);
      const double tau_prime = options.along.derivative([&](double ds) {
        return frenet_apparatus(space, curve, f.s + ds, options).tau;
      });
      const double rtt = space.inner(p, space.curvature(p, f.n, f.t, f.t), f.b);
      r.binormal = std::abs(tau_prime + rtt);
      if (space.dimension() > 3) r.off_frame = bitension(space, curve, f.s, options).off_frame / f.kappa;
    }
    out.max_tangent = std::max(out.max_tangent, r.tangent);
    out.max_normal = std::max(out.max_normal, r.normal);
    out.max_binormal = std::max(out.max_binormal, r.binormal);
    out.max_off_frame = std::max(out.max_off_frame, r.off_frame);
    out.samples.push_back(r);
  }
  return out;
}

double BcvSystemResiduals::max() const { return std::max({kappa_constant, tau_constant, n3, b14}); }

BcvSystemResiduals bcv_biharmonic_system(const BcvSpace& space, const Curve& curve,
                                         const std::vector<double>& grid,
                                         const CurveOptions& options) {
  if (space.is_space_form())
    throw ParameterError("biharmonic curve system of N(a,b) requires 4a != b^2");
  std::vector<FrenetSample> frames;
  for (double s : grid) {
    FrenetSample f = frenet_apparatus(space, curve, s, options);
    if (!f.geodesic) frames.push_back(std::move(f));
  }
  BcvSystemResiduals out;
  if (frames.empty()) {
    out.vacuous = true;
    return out;
  }
  for (const FrenetSample& f : frames) {
    out.kappa_mean += f.kappa;
    out.tau_mean += f.tau;
  }
  out.kappa_mean /= static_cast<double>(frames.size());
  out.tau_mean /= static_cast<double>(frames.size());
  const double a = space.a();
  const double b = space.b();
  for (const FrenetSample& f : frames) {
    const double b3 = f.b3.value_or(0.0);
    out.kappa_constant = std::max(out.kappa_constant, std::abs(f.kappa - out.kappa_mean));
    out.tau_constant = std::max(out.tau_constant, std::abs(f.tau - out.tau_mean));
    out.n3 = std::max(out.n3, std::abs(f.n3.value_or(0.0)));
    const double rhs = 0.25 * b * b - (b * b - 4.0 * a) * b3 * b3;
    out.b14 = std::max(out.b14, std::abs(f.kappa * f.kappa + f.tau * f.tau - rhs));
  }
  return out;
}

std::vector<double> uniform_grid(double first, double last, int count) {
  if (count < 1) throw ParameterError("grid needs at least one sample");
  std::vector<double> grid(static_cast<std::size_t>(count));
  if (count == 1) {
    grid[0] = first;
    return grid;
  }
  for (int i = 0; i < count; ++i) grid[i] = first + (last - first) * i / (count - 1);
  return grid;
}

void write_frenet_csv(std::ostream& out, const BiharmonicResiduals& residuals) {
  out << "s,kappa,tau,n3,b3,res_t,res_n,res_b\n";
  std::ostringstream row;
  row.precision(17);
  for (const ResidualSample& r : residuals.samples) {
    row.str("");
    row << r.s << ',' << r.kappa << ',' << r.tau << ',' << optional_number(r.n3) << ','
        << optional_number(r.b3) << ',' << r.tangent << ',' << r.normal << ',' << r.binormal
        << '\n';
    out << row.str();
  }
}

}  // namespace bihcheck

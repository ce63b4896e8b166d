#include "bihcheck/spaces.hpp"

#include <cmath>
#include <sstream>

#include "bihcheck/errors.hpp"

namespace bihcheck {

namespace {

Vec unit(int n, int i) {
  Vec e = Vec::Zero(n);
  e(i) = 1.0;
  return e;
}

std::string format_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

void AmbientSpace::require(const Vec& p) const {
  if (!contains(p)) {
    std::ostringstream os;
    os << name() << ": point (" << p.transpose() << ") outside the usable domain";
    throw DomainError(os.str());
  }
}

double AmbientSpace::inner(const Vec& p, const Vec& x, const Vec& y) const {
  return x.dot(metric(p) * y);
}

double AmbientSpace::norm(const Vec& p, const Vec& x) const { return std::sqrt(inner(p, x, x)); }

std::string to_string(BcvType type) {
  switch (type) {
    case BcvType::SpaceForm:
      return "SpaceForm";
    case BcvType::Heisenberg:
      return "Heisenberg";
    case BcvType::S2xR:
      return "S2xR";
    case BcvType::H2xR:
      return "H2xR";
    case BcvType::SU2:
      return "SU2";
    case BcvType::SL2R:
      return "SL2R";
  }
  return "unknown";
}

BcvType classify_bcv(double a, double b) {
  const double scale = std::max({1.0, std::abs(4.0 * a), b * b});
  if (std::abs(4.0 * a - b * b) <= 1e-12 * scale) return BcvType::SpaceForm;
  if (a == 0.0) return BcvType::Heisenberg;
  if (b == 0.0) return a > 0.0 ? BcvType::S2xR : BcvType::H2xR;
  return a > 0.0 ? BcvType::SU2 : BcvType::SL2R;
}

// ---------------------------------------------------------------------------
// BCV

BcvSpace::BcvSpace(double a, double b, FiniteDifference fd) : a_(a), b_(b), fd_(fd) {}

std::string BcvSpace::name() const {
  return "N(" + format_number(a_) + "," + format_number(b_) + ")";
}

double BcvSpace::lambda(const Vec& p) const { return 1.0 + a_ * (p(0) * p(0) + p(1) * p(1)); }

bool BcvSpace::is_space_form() const { return classify_bcv(a_, b_) == BcvType::SpaceForm; }

BcvType BcvSpace::type() const { return classify_bcv(a_, b_); }

bool BcvSpace::contains(const Vec& p) const {
  return p.size() == 3 && p.allFinite() && lambda(p) >= 10.0 * fd_.step;
}

Mat BcvSpace::metric(const Vec& p) const {
  require(p);
  const double lam = lambda(p);
  // h = (dx^2 + dy^2)/lam^2 + w (x) w,  w = dz + (b/2)(y dx - x dy)/lam
  Eigen::Vector3d w(0.5 * b_ * p(1) / lam, -0.5 * b_ * p(0) / lam, 1.0);
  Mat g = w * w.transpose();
  g(0, 0) += 1.0 / (lam * lam);
  g(1, 1) += 1.0 / (lam * lam);
  return g;
}

Mat BcvSpace::frame(const Vec& p) const {
  require(p);
  const double lam = lambda(p);
  Mat f = Mat::Zero(3, 3);
  f(0, 0) = lam;
  f(2, 0) = -0.5 * b_ * p(1);
  f(1, 1) = lam;
  f(2, 1) = 0.5 * b_ * p(0);
  f(2, 2) = 1.0;
  return f;
}

Eigen::Vector3d BcvSpace::frame_connection(const Vec& p, int i, int j) const {
  const double x = p(0);
  const double y = p(1);
  const double hb = 0.5 * b_;
  const double ay = 2.0 * a_ * y;
  const double ax = 2.0 * a_ * x;
  switch (3 * i + j) {
    case 0: return {0.0, ay, 0.0};     // E1 E1
    case 1: return {-ay, 0.0, hb};     // E1 E2
    case 2: return {0.0, -hb, 0.0};    // E1 E3
    case 3: return {0.0, -ax, -hb};    // E2 E1
    case 4: return {ax, 0.0, 0.0};     // E2 E2
    case 5: return {hb, 0.0, 0.0};     // E2 E3
    case 6: return {0.0, -hb, 0.0};    // E3 E1
    case 7: return {hb, 0.0, 0.0};     // E3 E2
    case 8: return {0.0, 0.0, 0.0};    // E3 E3
    default: break;
  }
  throw ParameterError("frame index out of range");
}

Vec BcvSpace::connection(const Vec& p, const Vec& x, const Vec& y) const {
  // Y constant in the chart: Y = F y_f with y_f = F^{-1} Y, so
  // nabla_X Y = F X(y_f) + sum x_i y_j nabla_{E_i} E_j and X(y_f) = -F^{-1} dF[X] y_f.
  const Mat f = frame(p);
  const Eigen::Vector3d xf = f.partialPivLu().solve(x);
  const Eigen::Vector3d yf = f.partialPivLu().solve(y);
  Mat df = Mat::Zero(3, 3);
  const double dlam = 2.0 * a_ * (p(0) * x(0) + p(1) * x(1));
  df(0, 0) = dlam;
  df(1, 1) = dlam;
  df(2, 0) = -0.5 * b_ * x(1);
  df(2, 1) = 0.5 * b_ * x(0);
  Eigen::Vector3d coeffs = Eigen::Vector3d::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) coeffs += xf(i) * yf(j) * frame_connection(p, i, j);
  return f * coeffs - df * yf;
}

Vec BcvSpace::curvature(const Vec& p, const Vec& x, const Vec& y, const Vec& z) const {
  // Constant chart fields commute, so R(X,Y)Z = nabla_X (nabla_Y Z) - nabla_Y (nabla_X Z).
  const Vec dxw = fd_.derivative([&](double t) -> Vec { return connection(p + t * x, y, z); });
  const Vec dyw = fd_.derivative([&](double t) -> Vec { return connection(p + t * y, x, z); });
  return dxw + connection(p, x, connection(p, y, z)) - dyw - connection(p, y, connection(p, x, z));
}

std::optional<Vec> BcvSpace::vertical(const Vec& /*p*/) const { return unit(3, 2); }

Mat bcv_metric_at(const BcvSpace& space, const Vec& p) { return space.metric(p); }

FrameTriple bcv_frame_at(const BcvSpace& space, const Vec& p) {
  const Mat f = space.frame(p);
  return {f.col(0), f.col(1), f.col(2)};
}

Vec bcv_connection_frame(const BcvSpace& space, const Vec& p, int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3) throw ParameterError("frame indices must be in {1,2,3}");
  return space.frame(p) * space.frame_connection(p, i - 1, j - 1);
}

std::array<Vec, 4> killing_basis(const BcvSpace& space, const Vec& p) {
  if (space.is_space_form())
    throw ParameterError("Killing basis of X1..X4 requires 4a != b^2");
  const Mat f = space.frame(p);
  const double a = space.a();
  const double b = space.b();
  const double x = p(0);
  const double y = p(1);
  const double lam = space.lambda(p);
  const Eigen::Vector3d c1(1.0 - 2.0 * a * y * y / lam, 2.0 * a * x * y / lam, b * y / lam);
  const Eigen::Vector3d c2(2.0 * a * x * y / lam, 1.0 - 2.0 * a * x * x / lam, -b * x / lam);
  const Eigen::Vector3d c3(-y / lam, x / lam, -b * (x * x + y * y) / (2.0 * lam));
  const Eigen::Vector3d c4(0.0, 0.0, 1.0);
  return {f * c1, f * c2, f * c3, f * c4};
}

// ---------------------------------------------------------------------------
// Space forms

SpaceForm::SpaceForm(int n, double rho, FiniteDifference fd) : n_(n), rho_(rho), fd_(fd) {
  if (n < 2) throw ParameterError("space form dimension must be at least 2");
  model_ = rho > 0.0 ? Model::Sphere : (rho == 0.0 ? Model::Euclidean : Model::Hyperbolic);
}

double SpaceForm::radius() const {
  if (model_ != Model::Sphere) throw ParameterError("radius is defined for spheres only");
  return 1.0 / std::sqrt(rho_);
}

std::string SpaceForm::name() const {
  switch (model_) {
    case Model::Sphere:
      return "S^" + std::to_string(n_) + "(" + format_number(rho_) + ")";
    case Model::Euclidean:
      return "R^" + std::to_string(n_);
    case Model::Hyperbolic:
      return "H^" + std::to_string(n_) + "(" + format_number(rho_) + ")";
  }
  return "space form";
}

bool SpaceForm::contains(const Vec& p) const {
  if (p.size() != model_dimension() || !p.allFinite()) return false;
  switch (model_) {
    case Model::Sphere:
      return std::abs(rho_ * p.squaredNorm() - 1.0) < 1e-8;
    case Model::Euclidean:
      return true;
    case Model::Hyperbolic:
      return 1.0 + rho_ * p.squaredNorm() >= 10.0 * fd_.step;
  }
  return false;
}

Mat SpaceForm::metric(const Vec& p) const {
  require(p);
  const int d = model_dimension();
  if (model_ != Model::Hyperbolic) return Mat::Identity(d, d);
  const double c = 2.0 / (1.0 + rho_ * p.squaredNorm());
  return c * c * Mat::Identity(d, d);
}

Vec SpaceForm::connection(const Vec& p, const Vec& x, const Vec& y) const {
  require(p);
  switch (model_) {
    case Model::Sphere:
      return rho_ * x.dot(y) * p;
    case Model::Euclidean:
      return Vec::Zero(n_);
    case Model::Hyperbolic: {
      // conformal metric e^{2 phi} delta, phi = log(2 / (1 + rho |p|^2))
      const Vec dphi = -2.0 * rho_ * p / (1.0 + rho_ * p.squaredNorm());
      return x.dot(dphi) * y + y.dot(dphi) * x - x.dot(y) * dphi;
    }
  }
  return Vec::Zero(n_);
}

Vec SpaceForm::curvature(const Vec& p, const Vec& x, const Vec& y, const Vec& z) const {
  return rho_ * (inner(p, y, z) * x - inner(p, x, z) * y);
}

Mat SpaceForm::tangent_frame(const Vec& p) const {
  require(p);
  if (model_ == Model::Euclidean) return Mat::Identity(n_, n_);
  if (model_ == Model::Hyperbolic)
    return 0.5 * (1.0 + rho_ * p.squaredNorm()) * Mat::Identity(n_, n_);
  const Vec radial = p.normalized();
  const Mat column = radial;
  Eigen::HouseholderQR<Mat> qr(column);
  Mat q = qr.householderQ();
  Mat full(n_ + 1, n_ + 1);
  full.col(0) = radial;
  full.rightCols(n_) = q.rightCols(n_);
  if (full.determinant() < 0.0) full.col(n_) *= -1.0;
  return full.rightCols(n_);
}

Vec SpaceForm::project_tangent(const Vec& p, const Vec& v) const {
  if (model_ != Model::Sphere) return v;
  return v - v.dot(p) / p.squaredNorm() * p;
}

// ---------------------------------------------------------------------------
// Generic tensor operations

Christoffels christoffels_from_metric(const std::function<Mat(const Vec&)>& metric, const Vec& p,
                                      const FiniteDifference& fd) {
  const int n = static_cast<int>(p.size());
  const Mat g = metric(p);
  const Mat ginv = g.inverse();
  std::vector<Mat> dg(n);
  for (int i = 0; i < n; ++i) {
    const Vec e = unit(n, i);
    dg[i] = fd.derivative([&](double t) -> Mat { return metric(p + t * e); });
  }
  // first kind: [ij,l] = (d_i g_lj + d_j g_li - d_l g_ij)/2
  Christoffels gamma(n, Mat::Zero(n, n));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Vec first(n);
      for (int l = 0; l < n; ++l) first(l) = 0.5 * (dg[i](l, j) + dg[j](l, i) - dg[l](i, j));
      const Vec second = ginv * first;
      for (int k = 0; k < n; ++k) {
        gamma[k](i, j) = second(k);
        gamma[k](j, i) = second(k);
      }
    }
  }
  return gamma;
}

Christoffels christoffels_at(const AmbientSpace& space, const Vec& p, const FiniteDifference& fd) {
  if (!space.is_chart())
    throw ParameterError(space.name() +
                         ": embedded model has no chart Christoffel symbols; use connection()");
  space.require(p);
  for (int i = 0; i < p.size(); ++i) {
    const Vec e = unit(static_cast<int>(p.size()), i);
    if (!space.contains(p + fd.step * e) || !space.contains(p - fd.step * e))
      throw DomainError(space.name() + ": difference stencil leaves the chart");
  }
  return christoffels_from_metric([&space](const Vec& q) { return space.metric(q); }, p, fd);
}

Vec contract(const Christoffels& gamma, const Vec& x, const Vec& y) {
  Vec out(static_cast<Eigen::Index>(gamma.size()));
  for (std::size_t k = 0; k < gamma.size(); ++k) out(static_cast<Eigen::Index>(k)) = x.dot(gamma[k] * y);
  return out;
}

Vec curvature_at(const AmbientSpace& space, const Vec& p, const Vec& x, const Vec& y,
                 const Vec& z) {
  return space.curvature(p, x, y, z);
}

double sectional_curvature(const AmbientSpace& space, const Vec& p, const Vec& x, const Vec& y) {
  const double xx = space.inner(p, x, x);
  const double yy = space.inner(p, y, y);
  const double xy = space.inner(p, x, y);
  const double area2 = xx * yy - xy * xy;
  if (area2 <= 1e-14 * xx * yy || area2 <= 0.0)
    throw DegeneracyError("sectional curvature: vectors do not span a plane");
  return space.inner(p, space.curvature(p, x, y, y), x) / area2;
}

double ricci(const AmbientSpace& space, const Vec& p, const Vec& x, const Vec& y) {
  const Mat f = space.tangent_frame(p);
  double sum = 0.0;
  for (int k = 0; k < f.cols(); ++k) {
    const Vec e = f.col(k);
    sum += space.inner(p, space.curvature(p, e, x, y), e);
  }
  return sum;
}

Vec ricci_vector(const AmbientSpace& space, const Vec& p, const Vec& x) {
  const Mat f = space.tangent_frame(p);
  Vec out = Vec::Zero(p.size());
  for (int l = 0; l < f.cols(); ++l) out += ricci(space, p, x, f.col(l)) * f.col(l);
  return out;
}

SectionalRicci sectional_and_ricci(const AmbientSpace& space, const Vec& p, const Vec& x,
                                   const Vec& y) {
  return {sectional_curvature(space, p, x, y), ricci(space, p, x, y), ricci_vector(space, p, x)};
}

Mat lie_derivative_of_metric(const AmbientSpace& space, const std::function<Vec(const Vec&)>& field,
                             const Vec& p, const FiniteDifference& fd) {
  if (!space.is_chart()) throw ParameterError("Lie derivative requires a chart model");
  const int n = static_cast<int>(p.size());
  const Mat g = space.metric(p);
  const Vec xi = field(p);
  Mat dxi(n, n);  // dxi(k, i) = d_i X^k
  Mat lie = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const Vec e = unit(n, i);
    dxi.col(i) = fd.derivative([&](double t) -> Vec { return field(p + t * e); });
    const Mat dg = fd.derivative([&](double t) -> Mat { return space.metric(p + t * e); });
    lie += xi(i) * dg;
  }
  lie += dxi.transpose() * g + g * dxi;
  return lie;
}

Vec cross(const AmbientSpace& space, const Vec& p, const Vec& x, const Vec& y) {
  if (space.dimension() != 3) throw ParameterError("cross product needs a 3-dimensional ambient");
  const Mat f = space.tangent_frame(p);
  const Mat g = space.metric(p);
  const Eigen::Vector3d cx = f.transpose() * g * x;
  const Eigen::Vector3d cy = f.transpose() * g * y;
  return f * cx.cross(cy);
}

}  // namespace bihcheck

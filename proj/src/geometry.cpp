#include "gnet/geometry.hpp"

#include "gnet/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace gnet {

namespace {

constexpr double kUnitNormTol = 1e-12;

// \int_0^x sin^{m}(t) dt by composite Simpson; smooth integrand, a few
// hundred panels are plenty for the kappa constants.
double sin_power_integral(double x, int m) {
  const int panels = 512;
  const double h = x / panels;
  auto f = [m](double t) { return std::pow(std::sin(t), m); };
  double acc = f(0.0) + f(x);
  for (int i = 1; i < panels; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * f(i * h);
  return acc * h / 3.0;
}

double lgamma_half_ratio(int q) {
  // volume of the unit q-ball
  return std::pow(std::numbers::pi, q / 2.0) / std::tgamma(q / 2.0 + 1.0);
}

}  // namespace

PointSet PointSet::select(const std::vector<int>& idx) const {
  Mat out(coords.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = coords.col(idx[k]);
  return PointSet(std::move(out));
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& pts) {
  if (pts.empty()) throw std::invalid_argument("PointSet: empty point list");
  const auto d = pts.front().size();
  Mat m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].size() != d) throw std::invalid_argument("PointSet: ragged coordinate vectors");
    for (std::size_t j = 0; j < d; ++j) m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = pts[i][j];
  }
  return PointSet(std::move(m));
}

int SpaceDescriptor::ambient_dim() const {
  switch (kind) {
    case SpaceKind::Sphere: return q + 1;
    case SpaceKind::Cube: return q;
    case SpaceKind::PointCloud: return cloud.dim();
  }
  return 0;
}

SpaceDescriptor SpaceDescriptor::sphere(int q) {
  if (q < 1) throw std::invalid_argument("sphere: q must be >= 1");
  SpaceDescriptor s;
  s.kind = SpaceKind::Sphere;
  s.q = q;
  // Normalized cap measure mu*(B(x,d)) = int_0^d sin^{q-1} / int_0^pi sin^{q-1}.
  // The ratio to d^q decreases on (0, pi], so on (0,1] the extremes sit at
  // d -> 0 and d = 1.
  const double total = sin_power_integral(std::numbers::pi, q - 1);
  s.kappa2 = 1.0 / (q * total);
  s.kappa1 = sin_power_integral(1.0, q - 1) / total;
  return s;
}

SpaceDescriptor SpaceDescriptor::cube(int q) {
  if (q < 1) throw std::invalid_argument("cube: q must be >= 1");
  SpaceDescriptor s;
  s.kind = SpaceKind::Cube;
  s.q = q;
  // Lower bound: a corner box of side d/sqrt(q) fits inside B(x,d) and the
  // cube; upper bound: the full Euclidean ball. Lebesgue normalized by 2^q.
  s.kappa1 = std::pow(1.0 / (2.0 * std::sqrt(static_cast<double>(q))), q);
  s.kappa2 = lgamma_half_ratio(q) / std::pow(2.0, q);
  return s;
}

SpaceDescriptor SpaceDescriptor::point_cloud(PointSet pts) {
  if (pts.count() == 0) throw std::invalid_argument("point_cloud: empty sample");
  SpaceDescriptor s;
  s.kind = SpaceKind::PointCloud;
  s.q = pts.dim();
  s.cloud = std::move(pts);
  return s;
}

double distance(const SpaceDescriptor& space, const PointRef& x, const PointRef& y) {
  if (x.size() != y.size()) throw std::invalid_argument("distance: dimension mismatch");
  if (x.size() != space.ambient_dim()) throw std::invalid_argument("distance: point does not match space dimension");
  if (space.kind == SpaceKind::Sphere) {
    const double dot = std::clamp(x.dot(y), -1.0, 1.0);
    return std::acos(dot);
  }
  return (x - y).norm();
}

void validate_point(const SpaceDescriptor& space, const PointRef& x) {
  if (x.size() != space.ambient_dim()) throw std::invalid_argument("point does not match space dimension");
  if (space.kind == SpaceKind::Sphere && std::abs(x.norm() - 1.0) > kUnitNormTol)
    throw std::invalid_argument("sphere point is not unit-normalized");
}

FpsOrdering fps_ordering(const SpaceDescriptor& space, const PointSet& pts, int first,
                         int max_count, double stop_below) {
  const int n = pts.count();
  if (n == 0) throw std::invalid_argument("fps_ordering: empty point set");
  if (first < 0 || first >= n) throw std::invalid_argument("fps_ordering: first center out of range");
  const int limit = max_count < 0 ? n : std::min(max_count, n);

  FpsOrdering out;
  out.order.reserve(limit);
  out.radii.reserve(limit);

  std::vector<double> min_dist(n, std::numeric_limits<double>::infinity());
  std::vector<char> taken(n, 0);

  int current = first;
  double current_radius = std::numeric_limits<double>::infinity();
  for (int k = 0; k < limit; ++k) {
    if (current_radius < stop_below) break;
    out.order.push_back(current);
    out.radii.push_back(current_radius);
    taken[current] = 1;

    int next = -1;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      if (taken[i]) continue;
      const double d = distance(space, pts.col(i), pts.col(current));
      if (d < min_dist[i]) min_dist[i] = d;
      if (min_dist[i] > best) {  // ties go to the lowest index
        best = min_dist[i];
        next = i;
      }
    }
    if (next < 0) break;
    current = next;
    current_radius = best;
  }
  return out;
}

Net greedy_eps_net(const SpaceDescriptor& space, const PointSet& pts, double eps,
                   std::uint64_t seed) {
  if (eps <= 0.0) throw std::invalid_argument("greedy_eps_net: eps must be positive");
  const int n = pts.count();
  if (n == 0) throw std::invalid_argument("greedy_eps_net: empty point set");

  Rng rng(seed);
  const int first = static_cast<int>(rng.index(static_cast<std::uint64_t>(n)));
  const FpsOrdering fps = fps_ordering(space, pts, first, -1, eps);

  Net net;
  net.eps = eps;
  net.centers = fps.order;
  return net;
}

double mesh_norm(const SpaceDescriptor& space, const PointSet& centers, const PointSet& over) {
  if (centers.count() == 0) throw std::invalid_argument("mesh_norm: empty center set");
  double worst = 0.0;
  for (int i = 0; i < over.count(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < centers.count(); ++j)
      best = std::min(best, distance(space, over.col(i), centers.col(j)));
    worst = std::max(worst, best);
  }
  return worst;
}

double separation(const SpaceDescriptor& space, const PointSet& centers) {
  if (centers.count() < 2) return std::numeric_limits<double>::infinity();
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < centers.count(); ++i)
    for (int j = i + 1; j < centers.count(); ++j)
      best = std::min(best, distance(space, centers.col(i), centers.col(j)));
  return best;
}

int packing_number(const SpaceDescriptor& space, const PointSet& pts, double eps) {
  if (eps <= 0.0) throw std::invalid_argument("packing_number: eps must be positive");
  const FpsOrdering fps = fps_ordering(space, pts, 0, -1, eps);
  return static_cast<int>(fps.order.size());
}

DimensionFit dimension_estimate(const SpaceDescriptor& space, const PointSet& pts,
                                const std::vector<double>& eps_grid) {
  if (eps_grid.size() < 3) throw std::invalid_argument("dimension_estimate: need at least 3 eps values");
  const auto [mn, mx] = std::minmax_element(eps_grid.begin(), eps_grid.end());
  if (*mn <= 0.0) throw std::invalid_argument("dimension_estimate: eps values must be positive");
  if (*mx / *mn < 10.0) throw std::invalid_argument("dimension_estimate: eps grid must span at least one decade");

  // one FPS pass serves every eps
  const FpsOrdering fps = fps_ordering(space, pts, 0, -1, *mn);

  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  const int m = static_cast<int>(eps_grid.size());
  for (double eps : eps_grid) {
    int h = 0;
    while (h < static_cast<int>(fps.radii.size()) && fps.radii[h] >= eps) ++h;
    h = std::max(h, 1);
    const double x = std::log(1.0 / eps);
    const double y = std::log(static_cast<double>(h));
    sx += x; sy += y; sxx += x * x; sxy += x * y; syy += y * y;
  }
  const double det = m * sxx - sx * sx;
  if (std::abs(det) < 1e-30) throw std::invalid_argument("dimension_estimate: degenerate eps grid");
  DimensionFit fit;
  fit.dimension = (m * sxy - sx * sy) / det;
  fit.log_constant = (sy - fit.dimension * sx) / m;
  const double ss_tot = syy - sy * sy / m;
  const double ss_res = ss_tot - fit.dimension * (sxy - sx * sy / m);
  fit.r_squared = ss_tot <= 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return fit;
}

PointSet fps_subset(const SpaceDescriptor& space, const PointSet& pts, int k, std::uint64_t seed) {
  if (k <= 0) throw std::invalid_argument("fps_subset: k must be positive");
  if (k >= pts.count()) return pts;
  Rng rng(seed);
  const int first = static_cast<int>(rng.index(static_cast<std::uint64_t>(pts.count())));
  const FpsOrdering fps = fps_ordering(space, pts, first, k);
  std::vector<int> idx = fps.order;
  return pts.select(idx);
}

PointSet sample_space(const SpaceDescriptor& space, int count, std::uint64_t seed) {
  if (count <= 0) throw std::invalid_argument("sample_space: count must be positive");
  if (space.kind == SpaceKind::PointCloud) {
    if (space.cloud.count() <= count) return space.cloud;
    return fps_subset(space, space.cloud, count, seed);
  }
  Rng rng(seed);
  const int d = space.ambient_dim();
  Mat m(d, count);
  if (space.kind == SpaceKind::Sphere) {
    for (int i = 0; i < count; ++i) {
      Vec v(d);
      double norm2;
      do {
        for (int j = 0; j < d; ++j) v[j] = rng.gaussian();
        norm2 = v.squaredNorm();
      } while (norm2 < 1e-24);
      m.col(i) = v / std::sqrt(norm2);
    }
  } else {
    for (int i = 0; i < count; ++i)
      for (int j = 0; j < d; ++j) m(j, i) = rng.uniform(-1.0, 1.0);
  }
  return PointSet(std::move(m));
}

}  // namespace gnet

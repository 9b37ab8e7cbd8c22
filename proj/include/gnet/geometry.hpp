#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

namespace gnet {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using PointRef = Eigen::Ref<const Eigen::VectorXd>;

// Finite point sample; each column of coords is one point.
struct PointSet {
  Mat coords;

  PointSet() = default;
  explicit PointSet(Mat m) : coords(std::move(m)) {}

  int dim() const { return static_cast<int>(coords.rows()); }
  int count() const { return static_cast<int>(coords.cols()); }
  auto col(int i) const { return coords.col(i); }

  PointSet select(const std::vector<int>& idx) const;
  static PointSet from_rows(const std::vector<std::vector<double>>& pts);
};

enum class SpaceKind { Sphere, Cube, PointCloud };

// Metric/measure space metadata. q is the dimension parameter; for the
// sphere S^q points live in R^{q+1}, for the cube [-1,1]^q in R^q.
// kappa1/kappa2 are the ball-measure constants, analytic for sphere and
// cube, absent for point clouds.
struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::Cube;
  int q = 1;
  PointSet cloud;  // PointCloud only
  std::optional<double> kappa1, kappa2;

  int ambient_dim() const;
  bool has_kappa() const { return kappa1.has_value() && kappa2.has_value(); }

  static SpaceDescriptor sphere(int q);
  static SpaceDescriptor cube(int q);
  static SpaceDescriptor point_cloud(PointSet pts);
};

// Geodesic distance on the sphere, Euclidean otherwise. Point clouds use
// the ambient Euclidean metric.
double distance(const SpaceDescriptor& space, const PointRef& x, const PointRef& y);

// Throws std::invalid_argument on dimension mismatch or off-sphere points.
void validate_point(const SpaceDescriptor& space, const PointRef& x);

// eps-distinguishable center set; centers index into the source sample.
struct Net {
  std::vector<int> centers;
  double eps = 0.0;
};

// Farthest-point insertion order over a sample. radii[k] is the distance
// of the k-th inserted point to the earlier centers (radii[0] = +inf);
// the prefix with radii >= eps is a maximal eps-distinguishable subset,
// for every eps at once. Stops early once max_count points are emitted or
// the next insertion radius would fall below stop_below.
struct FpsOrdering {
  std::vector<int> order;
  std::vector<double> radii;
};
FpsOrdering fps_ordering(const SpaceDescriptor& space, const PointSet& pts, int first,
                         int max_count = -1, double stop_below = 0.0);

// Greedy maximal eps-distinguishable subset; seed picks the first center.
Net greedy_eps_net(const SpaceDescriptor& space, const PointSet& pts, double eps,
                   std::uint64_t seed);

// delta(C; K): worst distance from K to the center set.
double mesh_norm(const SpaceDescriptor& space, const PointSet& centers, const PointSet& over);
// eta(C): minimal pairwise distance; +inf for fewer than two centers.
double separation(const SpaceDescriptor& space, const PointSet& centers);

// H_eps(A) realized by the canonical greedy packing (first center = index 0).
int packing_number(const SpaceDescriptor& space, const PointSet& pts, double eps);

struct DimensionFit {
  double dimension = 0.0;
  double log_constant = 0.0;
  double r_squared = 0.0;
};

// Least-squares slope of log H_eps against log(1/eps); the grid must have
// at least 3 values spanning at least one decade.
DimensionFit dimension_estimate(const SpaceDescriptor& space, const PointSet& pts,
                                const std::vector<double>& eps_grid);

// Quasi-uniform subsample of exactly k points (FPS prefix).
PointSet fps_subset(const SpaceDescriptor& space, const PointSet& pts, int k, std::uint64_t seed);

// Seeded uniform sample of the space. Sphere: normalized Gaussians;
// cube: uniform coordinates; point cloud: the cloud itself (FPS-subsampled
// when larger than count).
PointSet sample_space(const SpaceDescriptor& space, int count, std::uint64_t seed);

}  // namespace gnet

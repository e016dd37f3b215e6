#include "condexp/gallery.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace condexp {

namespace {

Eigen::VectorXd vec1(double x) {
  Eigen::VectorXd v(1);
  v[0] = x;
  return v;
}

Eigen::VectorXd vec2(double x, double y) {
  Eigen::VectorXd v(2);
  v[0] = x;
  v[1] = y;
  return v;
}

int steps_for(double length, double mesh) {
  if (mesh <= 0.0) throw std::invalid_argument("mesh must be positive");
  return static_cast<int>(std::ceil(length / mesh - 1e-9));
}

std::string bits_of(int value, int width) {
  std::string s(width, '0');
  for (int i = width - 1; i >= 0; --i, value >>= 1)
    if (value & 1) s[i] = '1';
  return s;
}

}  // namespace

NetSpacePtr interval_space(double a, double b, double mesh) {
  if (!(b > a)) throw std::invalid_argument("empty interval");
  const int n = steps_for(b - a, mesh);
  const double step = (b - a) / n;
  std::vector<NetPoint> pts;
  pts.reserve(n + 1);
  for (int k = 0; k <= n; ++k) pts.push_back({k, vec1(a + k * step)});
  return std::make_shared<NetSpace>(std::move(pts), MetricKind::euclidean,
                                    step / 2.0, "interval");
}

NetSpacePtr canonical_y_space(double mesh) {
  const int n2 = steps_for(2.0, mesh);
  const double step = 2.0 / n2;
  std::vector<NetPoint> pts;
  int id = 0;
  for (int k = 0; k <= n2; ++k) pts.push_back({id++, vec2(k * step, 0.0)});
  double upper_end = 0.0;
  for (int k = 0; k * step <= 1.0 + 1e-12; ++k) {
    upper_end = k * step;
    pts.push_back({id++, vec2(k * step, 1.0)});
  }
  // The upper row may end short of 1 when the step does not divide 1.
  const double covering = std::max(step / 2.0, 1.0 - upper_end);
  return std::make_shared<NetSpace>(std::move(pts), MetricKind::euclidean,
                                    covering, "two-rows");
}

NetSpacePtr cantor_space(int depth) {
  if (depth < 1 || depth > 20)
    throw std::invalid_argument("binary depth must lie in 1..20");
  const int n = 1 << depth;
  std::vector<NetPoint> pts;
  pts.reserve(n);
  for (int v = 0; v < n; ++v) pts.push_back({v, bits_of(v, depth)});
  return std::make_shared<NetSpace>(std::move(pts), MetricKind::cantor_dyadic,
                                    std::ldexp(1.0, -depth), "binary-strings");
}

NetSpacePtr circle_space(int n, double circumference) {
  if (n < 3) throw std::invalid_argument("circle needs at least 3 points");
  const double step = circumference / n;
  std::vector<NetPoint> pts;
  pts.reserve(n);
  for (int k = 0; k < n; ++k) pts.push_back({k, vec1(k * step)});
  return std::make_shared<NetSpace>(std::move(pts), MetricKind::circle_arc,
                                    step / 2.0, "circle", circumference);
}

NetSpacePtr square_space(double mesh) {
  const int n = steps_for(1.0, mesh);
  const double step = 1.0 / n;
  std::vector<NetPoint> pts;
  pts.reserve((n + 1) * (n + 1));
  int id = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      pts.push_back({id++, vec2(i * step, j * step)});
  return std::make_shared<NetSpace>(std::move(pts), MetricKind::euclidean,
                                    step * std::numbers::sqrt2 / 2.0,
                                    "unit-square");
}

NetMap canonical_projection(double mesh) {
  NetSpacePtr Y = canonical_y_space(mesh);
  const int n2 = steps_for(2.0, mesh);
  NetSpacePtr X = interval_space(0.0, 2.0, mesh);
  std::vector<int> assignment(Y->size());
  for (int p = 0; p < Y->size(); ++p) {
    const auto& c = std::get<Eigen::VectorXd>(Y->point(p).coords);
    // Rows are sampled on the X grid, so the horizontal index is exact.
    assignment[p] = static_cast<int>(std::lround(c[0] / (2.0 / n2)));
  }
  return make_net_map(Y, X, std::move(assignment));
}

NetMap dyadic_map(int depth) {
  NetSpacePtr Y = cantor_space(depth);
  NetSpacePtr X = interval_space(0.0, 1.0, std::ldexp(1.0, -depth));
  std::vector<int> assignment(Y->size());
  // String with numeric value v maps to sum a_i 2^-i = v * 2^-depth, which
  // is the X grid point with the same index. x = 1 is never hit.
  for (int v = 0; v < Y->size(); ++v) assignment[v] = v;
  return make_net_map(Y, X, std::move(assignment));
}

NetMap identity_map(double a, double b, double mesh) {
  NetSpacePtr X = interval_space(a, b, mesh);
  std::vector<int> assignment(X->size());
  for (int k = 0; k < X->size(); ++k) assignment[k] = k;
  return make_net_map(X, X, std::move(assignment));
}

NetMap square_projection(double mesh) {
  NetSpacePtr Y = square_space(mesh);
  const int n = steps_for(1.0, mesh);
  NetSpacePtr X = interval_space(0.0, 1.0, mesh);
  std::vector<int> assignment(Y->size());
  for (int p = 0; p < Y->size(); ++p) assignment[p] = p / (n + 1);
  return make_net_map(Y, X, std::move(assignment));
}

NetMap circle_doubling(double mesh) {
  const double period = 2.0 * std::numbers::pi;
  const int n = steps_for(period, mesh);
  NetSpacePtr X = circle_space(n, period);
  NetSpacePtr Y = circle_space(2 * n, period);
  std::vector<int> assignment(Y->size());
  // Angle phi_k = k*period/(2n) doubles to theta_{k mod n} exactly.
  for (int k = 0; k < Y->size(); ++k) assignment[k] = k % n;
  return make_net_map(Y, X, std::move(assignment));
}

std::pair<std::string, std::string> dyadic_branches(double x, int depth) {
  if (depth < 1 || depth > 20)
    throw std::invalid_argument("binary depth must lie in 1..20");
  if (x < 0.0 || x > 1.0) throw std::invalid_argument("x must lie in [0,1]");
  const double scaled = std::ldexp(x, depth);
  const double rounded = std::round(scaled);
  const int top = 1 << depth;
  if (std::fabs(scaled - rounded) <= 1e-6) {
    // Dyadic at this depth: the expansions ending in zeros and in ones
    // truncate to consecutive integers.
    const int r = static_cast<int>(rounded);
    if (r == 0) return {bits_of(0, depth), bits_of(0, depth)};
    if (r == top) return {bits_of(top - 1, depth), bits_of(top - 1, depth)};
    return {bits_of(r, depth), bits_of(r - 1, depth)};
  }
  const int k = static_cast<int>(std::floor(scaled));
  return {bits_of(k, depth), bits_of(k, depth)};
}

Kernel canonical_kernel(NetMap j) {
  const NetSpacePtr& Y = j.domain;
  const NetSpacePtr& X = j.codomain;
  if (Y->ambient_tag() != "two-rows" || X->ambient_tag() != "interval")
    throw std::invalid_argument(
        "the interpolating field is defined over the two-row projection");
  const int nx = X->size();  // the lower row is sampled on the X grid

  // Upper-row ids trail the lower row; upper index k sits at id nx + k.
  std::vector<DiscreteMeasure> measures;
  measures.reserve(nx);
  for (int k = 0; k < nx; ++k) {
    const double t = std::get<Eigen::VectorXd>(X->point(k).coords)[0];
    if (t <= 1.0 + 1e-12) {
      measures.emplace_back(
          Y,
          std::vector<std::pair<int, double>>{{k, t}, {nx + k, 1.0 - t}});
    } else {
      measures.push_back(dirac(Y, k));
    }
  }
  return make_kernel(std::move(j), std::move(measures), 2.0, true);
}

Kernel canonical_kernel(double mesh) {
  return canonical_kernel(canonical_projection(mesh));
}

Kernel circle_perturbed_kernel(NetMap j, double amplitude) {
  if (amplitude < 0.0 || amplitude > 0.5)
    throw std::invalid_argument("amplitude must lie in [0, 1/2]");
  const NetSpacePtr& Y = j.domain;
  const NetSpacePtr& X = j.codomain;
  if (X->ambient_tag() != "circle" || Y->size() != 2 * X->size())
    throw std::invalid_argument(
        "perturbed weights are defined over the angle-doubling map");
  const int n = X->size();

  std::vector<DiscreteMeasure> measures;
  measures.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double theta = std::get<Eigen::VectorXd>(X->point(k).coords)[0];
    const double w = 0.5 + amplitude * std::cos(theta / 2.0);
    measures.emplace_back(
        Y, std::vector<std::pair<int, double>>{{k, w}, {k + n, 1.0 - w}});
  }
  return make_kernel(std::move(j), std::move(measures), 0.5 + amplitude,
                     true);
}

Kernel circle_perturbed_kernel(double mesh, double amplitude) {
  return circle_perturbed_kernel(circle_doubling(mesh), amplitude);
}

NetSpacePtr build_gallery_space(const std::string& name,
                                const GalleryOptions& opts) {
  const double mesh = opts.mesh > 0.0 ? opts.mesh : 0.1;
  const int depth = opts.depth > 0 ? opts.depth : 6;
  if (name == "interval") return interval_space(opts.a, opts.b, mesh);
  if (name == "two-rows") return canonical_y_space(mesh);
  if (name == "binary-strings") return cantor_space(depth);
  if (name == "circle") {
    const double period = 2.0 * std::numbers::pi;
    return circle_space(steps_for(period, mesh), period);
  }
  if (name == "unit-square") return square_space(mesh);
  throw std::invalid_argument("unknown gallery space: " + name);
}

NetMap build_gallery_map(const std::string& name, const GalleryOptions& opts) {
  const double mesh = opts.mesh > 0.0 ? opts.mesh : 0.1;
  const int depth = opts.depth > 0 ? opts.depth : 6;
  if (name == "canonical-projection") return canonical_projection(mesh);
  if (name == "dyadic") return dyadic_map(depth);
  if (name == "identity") return identity_map(opts.a, opts.b, mesh);
  if (name == "square-projection") return square_projection(mesh);
  if (name == "circle-doubling") return circle_doubling(mesh);
  throw std::invalid_argument("unknown gallery map: " + name);
}

ProblemInstance gallery_instance(const std::string& name,
                                 const GalleryOptions& opts) {
  ProblemInstance inst;
  inst.provenance = "gallery:" + name;
  if (name == "canonical") {
    const double mesh = opts.mesh > 0.0 ? opts.mesh : 0.25;
    inst.map = canonical_projection(mesh);
    inst.mesh = inst.map.codomain->grid_step();
  } else if (name == "identity") {
    const double mesh = opts.mesh > 0.0 ? opts.mesh : 0.1;
    inst.map = identity_map(0.0, 1.0, mesh);
    inst.mesh = inst.map.codomain->grid_step();
  } else if (name == "cantor") {
    const int depth = opts.depth > 0 ? opts.depth : 6;
    inst.map = dyadic_map(depth);
    inst.mesh = inst.map.codomain->grid_step();
    inst.depth = depth;
  } else if (name == "square") {
    const double mesh = opts.mesh > 0.0 ? opts.mesh : 0.05;
    inst.map = square_projection(mesh);
    inst.mesh = inst.map.codomain->grid_step();
  } else if (name == "circle") {
    const double mesh = opts.mesh > 0.0 ? opts.mesh : 0.05;
    inst.map = circle_doubling(mesh);
    inst.mesh = inst.map.codomain->grid_step();
  } else {
    throw std::invalid_argument("unknown gallery name: " + name);
  }
  return inst;
}

}  // namespace condexp

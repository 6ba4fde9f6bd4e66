#include "fmc/points.hpp"

#include <algorithm>

#include "fmc/errors.hpp"

namespace fmc {

Configuration make_configuration(int m, std::vector<Vec> points) {
  if (m < 1) throw DomainError("bad_dimension", "dimension must be positive");
  for (const auto& p : points) {
    if (p.size() != m) {
      throw DomainError("bad_dimension", "point has wrong dimension");
    }
    if (!p.allFinite()) throw DomainError("not_finite", "non-finite coordinate");
  }
  return Configuration{m, std::move(points)};
}

void require_distinct(const Configuration& c) {
  for (int i = 0; i < c.size(); ++i) {
    for (int j = i + 1; j < c.size(); ++j) {
      if (c.points[static_cast<std::size_t>(i)] ==
          c.points[static_cast<std::size_t>(j)]) {
        throw DomainError("duplicate_points",
                          "points " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + " coincide");
      }
    }
  }
}

double ratio_distance(double a, double b) {
  auto squash = [](double v) { return std::isinf(v) ? 1.0 : v / (1.0 + v); };
  return std::abs(squash(a) - squash(b));
}

SimplicialPoint SimplicialPoint::zeros(int n, int m) {
  SimplicialPoint p;
  p.m = m;
  p.x.assign(static_cast<std::size_t>(n), Vec::Zero(m));
  p.u.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
             Vec::Zero(m));
  return p;
}

void SimplicialPoint::renormalize() {
  for (int i = 0; i < n(); ++i) {
    for (int j = 0; j < n(); ++j) {
      if (i == j) continue;
      Vec& v = dir(i, j);
      const double len = v.norm();
      if (!(len > 0.0) || !std::isfinite(len)) {
        throw DomainError("non_unit", "direction " + std::to_string(i + 1) +
                                          "," + std::to_string(j + 1) +
                                          " cannot be normalized");
      }
      v /= len;
    }
  }
  for (auto& f : frames) {
    const double len = f.norm();
    if (!(len > 0.0)) throw DomainError("non_unit", "zero frame vector");
    f /= len;
  }
}

AmbientPoint AmbientPoint::zeros(int n, int m) {
  AmbientPoint a;
  static_cast<SimplicialPoint&>(a) = SimplicialPoint::zeros(n, m);
  const auto nn = static_cast<std::size_t>(n);
  a.d.assign(nn * nn * nn, 0.0);
  return a;
}

std::string condition_name(Condition c) {
  switch (c) {
    case Condition::macroscopic: return "macroscopic";
    case Condition::law_of_sines: return "law_of_sines";
    case Condition::dependence: return "antisymmetry_dependence";
    case Condition::cocycle: return "cocycle";
    case Condition::manifold: return "manifold";
    case Condition::four_consistency: return "four_consistency";
    case Condition::frame: return "frame";
  }
  return "unknown";
}

void VerdictBuilder::check(Condition c, std::vector<int> zero_based,
                           double residual) {
  if (std::isnan(residual)) residual = kInf;
  v_.max_residual = std::max(v_.max_residual, residual);
  if (residual > tol_) {
    for (int& i : zero_based) ++i;
    v_.violations.push_back(Violation{c, std::move(zero_based), residual});
  }
}

CoincidenceTest::CoincidenceTest(const std::vector<Vec>& x, double tol) : x_(&x) {
  double diameter = 0.0;
  double radius = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    radius = std::max(radius, x[i].norm());
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      diameter = std::max(diameter, (x[i] - x[j]).norm());
    }
  }
  scale_ = std::max(diameter, radius);
  threshold_ = tol * scale_;
  all_ = scale_ == 0.0 || diameter <= threshold_;
}

bool CoincidenceTest::coincide(int i, int j) const {
  const auto& x = *x_;
  return (x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)]).norm() <=
         threshold_;
}

Configuration base_configuration(const SimplicialPoint& p) {
  return Configuration{p.m, p.x};
}

}  // namespace fmc

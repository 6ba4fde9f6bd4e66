#pragma once

// Value types shared by the geometric modules: configurations, direction data,
// ambient points with ratio coordinates, and membership verdicts.
//
// Point indices are zero-based in code. Direction and ratio tables are dense:
// dir(i, j) for i != j, ratio(i, j, k) for distinct i, j, k. Ratios live in
// [0, inf] and use IEEE +infinity for the point at infinity.

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace fmc {

using Vec = Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Configuration {
  int m = 0;
  std::vector<Vec> points;

  int size() const { return static_cast<int>(points.size()); }
};

// Checks dimensions and finiteness; duplicates are allowed here and rejected
// by the operations that need distinct points.
Configuration make_configuration(int m, std::vector<Vec> points);
// Throws DomainError("duplicate_points") if two points coincide exactly.
void require_distinct(const Configuration& c);

// A value in [0, inf] with the multiplication convention a * inf = inf for
// a != 0 and 0 * inf = 1.
class ExtendedRatio {
 public:
  constexpr ExtendedRatio(double v = 0.0) : v_(v) {}
  static constexpr ExtendedRatio infinity() { return ExtendedRatio(kInf); }

  constexpr double value() const { return v_; }
  bool is_infinite() const { return std::isinf(v_); }
  bool is_zero() const { return v_ == 0.0; }

  friend ExtendedRatio operator*(ExtendedRatio a, ExtendedRatio b) {
    if ((a.is_zero() && b.is_infinite()) || (a.is_infinite() && b.is_zero())) {
      return ExtendedRatio(1.0);
    }
    return ExtendedRatio(a.v_ * b.v_);
  }

 private:
  double v_;
};

// Bounded metric on [0, inf]: |a/(1+a) - b/(1+b)|, with inf mapped to 1.
double ratio_distance(double a, double b);

struct SimplicialPoint {
  int m = 0;
  std::vector<Vec> x;
  std::vector<Vec> u;       // n*n entries, diagonal unused
  std::vector<Vec> frames;  // empty, or one unit vector per index

  static SimplicialPoint zeros(int n, int m);

  int n() const { return static_cast<int>(x.size()); }
  bool framed() const { return !frames.empty(); }
  const Vec& dir(int i, int j) const { return u[idx(i, j)]; }
  Vec& dir(int i, int j) { return u[idx(i, j)]; }
  // Rescales every stored direction and frame to unit length.
  void renormalize();

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * x.size() + static_cast<std::size_t>(j);
  }
};

struct AmbientPoint : SimplicialPoint {
  std::vector<double> d;  // n^3 entries, only distinct triples meaningful

  static AmbientPoint zeros(int n, int m);

  double ratio(int i, int j, int k) const { return d[ridx(i, j, k)]; }
  double& ratio(int i, int j, int k) { return d[ridx(i, j, k)]; }

 private:
  std::size_t ridx(int i, int j, int k) const {
    const auto n = x.size();
    return (static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n +
           static_cast<std::size_t>(k);
  }
};

struct Manifold {
  enum class Kind { euclidean, sphere };
  Kind kind = Kind::euclidean;
  int dim = 0;  // intrinsic dimension; a sphere of dim d sits in R^{d+1}

  static Manifold euclidean(int m) { return {Kind::euclidean, m}; }
  static Manifold sphere(int d) { return {Kind::sphere, d}; }
  int ambient_dim() const { return kind == Kind::sphere ? dim + 1 : dim; }
};

enum class Condition {
  macroscopic = 1,       // u and d agree with x where points differ
  law_of_sines = 2,      // d determined by u, or forced to zero
  dependence = 3,        // antisymmetry and non-negative dependence
  cocycle = 4,           // multiplicative identities among ratios
  manifold = 5,          // points on M, directions tangent at collisions
  four_consistency = 6,  // determinantal identity on 4-index subsets
  frame = 7,             // frames are unit and tangent
};

std::string condition_name(Condition c);

struct Violation {
  Condition condition;
  std::vector<int> indices;  // one-based, as reported to users
  double residual;
};

struct Verdict {
  std::vector<Violation> violations;
  double max_residual = 0.0;

  bool pass() const { return violations.empty(); }
};

// Collects residuals: every residual raises max_residual; those above tol
// are recorded as violations.
class VerdictBuilder {
 public:
  explicit VerdictBuilder(double tol) : tol_(tol) {}
  void check(Condition c, std::vector<int> zero_based, double residual);
  Verdict take() { return std::move(v_); }

 private:
  double tol_;
  Verdict v_;
};

// Coincidence of points relative to the spread of the configuration.
class CoincidenceTest {
 public:
  CoincidenceTest(const std::vector<Vec>& x, double tol);
  bool coincide(int i, int j) const;
  bool all_coincide() const { return all_; }
  double scale() const { return scale_; }

 private:
  const std::vector<Vec>* x_;
  double threshold_;
  double scale_;
  bool all_;
};

// Forgets directions and ratios.
Configuration base_configuration(const SimplicialPoint& p);

}  // namespace fmc

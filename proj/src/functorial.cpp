#include "fmc/functorial.hpp"

#include <algorithm>

#include "fmc/errors.hpp"

namespace fmc {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

void require_injective(const SetMap& sigma, int n) {
  if (sigma.codomain != n) {
    throw DomainError("size_mismatch", "map codomain differs from point size");
  }
  if (!sigma.is_injective()) {
    throw DomainError("not_injective", "projection needs an injective map");
  }
}

// Pull-back of points, frames and directions; frames must be present.
void pull_back_into(const SetMap& sigma, const SimplicialPoint& p,
                    SimplicialPoint& out) {
  const int m = sigma.domain;
  out.frames.assign(sz(m), Vec());
  for (int i = 0; i < m; ++i) {
    out.x[sz(i)] = p.x[sz(sigma(i))];
    out.frames[sz(i)] = p.frames[sz(sigma(i))];
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      if (sigma(i) != sigma(j)) {
        out.dir(i, j) = p.dir(sigma(i), sigma(j));
      } else {
        const Vec& f = p.frames[sz(sigma(i))];
        out.dir(i, j) = i < j ? Vec(-f) : f;
      }
    }
  }
}

void require_framed(const SimplicialPoint& p) {
  if (!p.framed() || p.frames.size() != p.x.size()) {
    throw DomainError("missing_frames", "operation needs one frame per index");
  }
}

}  // namespace

AmbientPoint project_sigma(const SetMap& sigma, const AmbientPoint& p) {
  require_injective(sigma, p.n());
  const int m = sigma.domain;
  AmbientPoint out = AmbientPoint::zeros(m, p.m);
  if (p.framed()) out.frames.assign(sz(m), Vec());
  for (int a = 0; a < m; ++a) {
    out.x[sz(a)] = p.x[sz(sigma(a))];
    if (p.framed()) out.frames[sz(a)] = p.frames[sz(sigma(a))];
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      out.dir(a, b) = p.dir(sigma(a), sigma(b));
      for (int c = 0; c < m; ++c) {
        if (c == a || c == b) continue;
        out.ratio(a, b, c) = p.ratio(sigma(a), sigma(b), sigma(c));
      }
    }
  }
  return out;
}

SimplicialPoint project_sigma(const SetMap& sigma, const SimplicialPoint& p) {
  require_injective(sigma, p.n());
  const int m = sigma.domain;
  SimplicialPoint out = SimplicialPoint::zeros(m, p.m);
  if (p.framed()) out.frames.assign(sz(m), Vec());
  for (int a = 0; a < m; ++a) {
    out.x[sz(a)] = p.x[sz(sigma(a))];
    if (p.framed()) out.frames[sz(a)] = p.frames[sz(sigma(a))];
    for (int b = 0; b < m; ++b) {
      if (a != b) out.dir(a, b) = p.dir(sigma(a), sigma(b));
    }
  }
  return out;
}

Configuration project_sigma(const SetMap& sigma, const Configuration& c) {
  require_injective(sigma, c.size());
  Configuration out{c.m, {}};
  for (int a = 0; a < sigma.domain; ++a) out.points.push_back(c.points[sz(sigma(a))]);
  return out;
}

SimplicialPoint F_sigma(const SetMap& sigma, const SimplicialPoint& p) {
  require_framed(p);
  if (sigma.codomain != p.n()) {
    throw DomainError("size_mismatch", "map codomain differs from point size");
  }
  SimplicialPoint out = SimplicialPoint::zeros(sigma.domain, p.m);
  pull_back_into(sigma, p, out);
  return out;
}

SetMap diagonal_collapse(int n, int i, int k) {
  std::vector<int> vals;
  for (int j = 0; j < n + k; ++j) vals.push_back(j <= i ? j : (j <= i + k ? i : j - k));
  return SetMap::from_values(n, std::move(vals));
}

SetMap diagonal_section(int n, int i, int k) {
  std::vector<int> vals;
  for (int j = 0; j < n; ++j) vals.push_back(j <= i ? j : j + k);
  return SetMap::from_values(n + k, std::move(vals));
}

AmbientPoint ordered_pair_point() {
  AmbientPoint a = AmbientPoint::zeros(2, 1);
  a.dir(0, 1) = Vec::Constant(1, -1.0);
  a.dir(1, 0) = Vec::Constant(1, 1.0);
  return a;
}

AmbientPoint diagonal(const AmbientPoint& p, int i, int k,
                      const std::optional<AmbientPoint>& assoc, double tol) {
  require_framed(p);
  const int n = p.n();
  if (i < 0 || i >= n) throw DomainError("out_of_range", "diagonal index out of range");
  if (k < 1) throw DomainError("out_of_range", "multiplicity must be at least 1");
  if (!assoc && k != 1) {
    throw DomainError("invalid_assoc", "multiplicity above 1 needs an ordered parameter");
  }
  AmbientPoint e = assoc ? *assoc : ordered_pair_point();
  if (e.n() != k + 1 || e.m != 1) {
    throw DomainError("invalid_assoc", "parameter must be a 1-dimensional point on " +
                                           std::to_string(k + 1) + " indices");
  }
  for (auto& xv : e.x) xv = Vec::Zero(1);
  for (int a = 0; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b)
      if (std::abs(e.dir(a, b)[0] + 1.0) > tol) {
        throw DomainError("invalid_assoc", "parameter is not ordered");
      }
  if (!membership_canonical(e, Manifold::euclidean(1), tol).pass()) {
    throw DomainError("invalid_assoc", "parameter is not a compactified point");
  }

  const SetMap sigma = diagonal_collapse(n, i, k);
  const int total = n + k;
  AmbientPoint out = AmbientPoint::zeros(total, p.m);
  pull_back_into(sigma, p, out);
  auto in_block = [&](int j) { return j >= i && j <= i + k; };
  for (int a = 0; a < total; ++a)
    for (int b = 0; b < total; ++b)
      for (int c = 0; c < total; ++c) {
        if (a == b || b == c || a == c) continue;
        const bool ia = in_block(a), ib = in_block(b), ic = in_block(c);
        const int inside = ia + ib + ic;
        double v;
        if (inside <= 1) {
          v = p.ratio(sigma(a), sigma(b), sigma(c));
        } else if (inside == 3) {
          v = e.ratio(a - i, b - i, c - i);
        } else if (!ic) {
          v = 0.0;  // a, b collide; c is away
        } else if (!ia) {
          v = 1.0;  // b, c collide; both equally far from a
        } else {
          v = kInf;  // a, c collide; b is away
        }
        out.ratio(a, b, c) = v;
      }
  return out;
}

SetMap cosimplicial_dual(const SetMap& sigma) {
  if (!sigma.is_monotone()) {
    throw DomainError("not_monotone", "cosimplicial structure maps are monotone");
  }
  const int n = sigma.domain - 1;
  const int m = sigma.codomain - 1;
  if (n < 0 || m < 0) throw DomainError("out_of_range", "empty simplex");
  std::vector<int> vals;
  // Position j of the output sits where the gaps of all r with sigma(r) < j
  // end.
  for (int j = 0; j <= m + 1; ++j) {
    int below = 0;
    for (int r = 0; r <= n; ++r)
      if (sigma(r) < j) ++below;
    vals.push_back(below);
  }
  return SetMap::from_values(n + 2, std::move(vals));
}

void require_interval_point(const SimplicialPoint& p, double tol) {
  require_framed(p);
  const int n = p.n();
  if (p.m != 1 || n < 2) {
    throw DomainError("not_interval_point", "expected a point of the interval with "
                                           "both endpoints");
  }
  const bool ends = std::abs(p.x[0][0]) <= tol && std::abs(p.x[sz(n - 1)][0] - 1.0) <= tol;
  const bool frames = std::abs(p.frames[0][0] - 1.0) <= tol &&
                      std::abs(p.frames[sz(n - 1)][0] - 1.0) <= tol;
  if (!ends || !frames) {
    throw DomainError("not_interval_point",
                      "endpoints must sit at 0 and 1 with frame +1");
  }
  for (const auto& xv : p.x) {
    if (xv[0] < -tol || xv[0] > 1.0 + tol) {
      throw DomainError("not_interval_point", "point outside the unit interval");
    }
  }
}

SimplicialPoint cosimplicial_map(const SetMap& sigma, const SimplicialPoint& p,
                                 double tol) {
  const SetMap dual = cosimplicial_dual(sigma);
  if (p.n() != sigma.domain + 1) {
    throw DomainError("size_mismatch", "point must have n+2 indices for [n]");
  }
  require_interval_point(p, tol);
  return F_sigma(dual, p);
}

SimplicialPoint interval_point(const std::vector<double>& interior) {
  const int n = static_cast<int>(interior.size()) + 2;
  SimplicialPoint p = SimplicialPoint::zeros(n, 1);
  p.frames.assign(sz(n), Vec::Constant(1, 1.0));
  p.x[0] = Vec::Zero(1);
  double prev = 0.0;
  for (int q = 0; q < n - 2; ++q) {
    const double v = interior[sz(q)];
    if (!(v >= prev) || v > 1.0) {
      throw DomainError("not_interval_point",
                        "interior positions must be non-decreasing in [0, 1]");
    }
    prev = v;
    p.x[sz(q + 1)] = Vec::Constant(1, v);
  }
  p.x[sz(n - 1)] = Vec::Constant(1, 1.0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) p.dir(a, b) = Vec::Constant(1, a < b ? -1.0 : 1.0);
  return p;
}

}  // namespace fmc

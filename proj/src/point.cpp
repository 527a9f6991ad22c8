#include "paretoapx/point.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "paretoapx/errors.hpp"

namespace paretoapx {

namespace {

void require_same_dim(const Point& u, const Point& v) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(u.dim()) + " vs " +
                                std::to_string(v.dim()));
  }
}

}  // namespace

std::size_t effective_guard(std::size_t default_guard) {
  const char* env = std::getenv("PARETO_GUARD_MAX");
  if (env == nullptr || *env == '\0') return default_guard;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') return default_guard;
  return std::max<std::size_t>(default_guard, static_cast<std::size_t>(v));
}

Point::Point(std::vector<Rat> coords) : c_(std::move(coords)) {
  if (c_.size() < 2) throw std::invalid_argument("points need at least 2 coordinates");
  for (const auto& v : c_) {
    if (v.sign() <= 0) throw std::invalid_argument("coordinates must be positive, got " + v.str());
  }
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? "," : "") << p[i];
  return os << ')';
}

PointSet::PointSet(std::vector<Point> pts) {
  for (auto& p : pts) push_back(std::move(p));
}

void PointSet::push_back(Point p) {
  if (d_ == 0) {
    d_ = p.dim();
  } else if (p.dim() != d_) {
    throw std::invalid_argument("point of dimension " + std::to_string(p.dim()) +
                                " added to a set of dimension " + std::to_string(d_));
  }
  pts_.push_back(std::move(p));
}

bool dominates(const Point& u, const Point& v) {
  require_same_dim(u, v);
  for (std::size_t j = 0; j < u.dim(); ++j) {
    if (v[j] < u[j]) return false;
  }
  return true;
}

bool covers(const Point& u, const Point& v, const Rat& rho) {
  if (rho < Rat(1)) throw std::invalid_argument("cover ratio below 1: " + rho.str());
  require_same_dim(u, v);
  for (std::size_t j = 0; j < u.dim(); ++j) {
    if (rho * v[j] < u[j]) return false;
  }
  return true;
}

std::vector<std::size_t> pareto_indices(const PointSet& P) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < P.size(); ++i) {
    bool beaten = false;
    for (std::size_t j = 0; j < P.size() && !beaten; ++j) {
      if (i == j || !dominates(P[j], P[i])) continue;
      // Equal points: the lowest index survives.
      beaten = !(P[j] == P[i]) || j < i;
    }
    if (!beaten) keep.push_back(i);
  }
  return keep;
}

PointSet pareto_filter(const PointSet& P) {
  PointSet out(P.dim());
  for (auto i : pareto_indices(P)) out.push_back(P[i]);
  return out;
}

Rat ratio_distance(const Point& p, const Point& q) {
  require_same_dim(p, q);
  Rat best(1);
  for (std::size_t i = 0; i < p.dim(); ++i) best = max(best, p[i] / q[i]);
  return best;
}

Rat additive_distance(const Point& p, const Point& q) {
  require_same_dim(p, q);
  Rat best(0);
  for (std::size_t i = 0; i < p.dim(); ++i) best = max(best, p[i] - q[i]);
  return best;
}

std::optional<CoverCertificate> find_cover(const PointSet& Q, const PointSet& targets, const Rat& rho) {
  CoverCertificate cert;
  cert.ratio = rho;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < Q.size() && !found; ++j) {
      if (covers(Q[j], targets[i], rho)) {
        cert.assignments[i] = j;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return cert;
}

std::optional<CoverCertificate> is_eps_pareto(const PointSet& Q, const PointSet& P, const Rat& eps) {
  const Rat rho = Rat(1) + eps;
  CoverCertificate cert;
  cert.ratio = rho;
  for (auto i : pareto_indices(P)) {
    bool found = false;
    for (std::size_t j = 0; j < Q.size() && !found; ++j) {
      if (covers(Q[j], P[i], rho)) {
        cert.assignments[i] = j;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return cert;
}

bool check_certificate(const CoverCertificate& cert, const PointSet& Q, const PointSet& P) {
  for (auto i : pareto_indices(P)) {
    auto it = cert.assignments.find(i);
    if (it == cert.assignments.end()) return false;
  }
  for (const auto& [i, j] : cert.assignments) {
    if (i >= P.size() || j >= Q.size()) return false;
    if (!covers(Q[j], P[i], cert.ratio)) return false;
  }
  return true;
}

int bit_width(const PointSet& P) {
  std::size_t m = 1;
  for (const auto& p : P) {
    for (const auto& v : p.coords()) m = std::max({m, v.num_bits(), v.den_bits()});
  }
  return static_cast<int>(m);
}

Point swap_xy(const Point& p) {
  auto c = p.coords();
  std::swap(c[0], c[1]);
  return Point(std::move(c));
}

PointSet swap_xy(const PointSet& P) {
  PointSet out(P.dim());
  for (const auto& p : P) out.push_back(swap_xy(p));
  return out;
}

}  // namespace paretoapx

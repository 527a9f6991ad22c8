#ifndef PARETOAPX_POINT_HPP
#define PARETOAPX_POINT_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "paretoapx/rational.hpp"

namespace paretoapx {

/// Objective vector; all objectives are minimized, every coordinate is > 0, d >= 2.
class Point {
 public:
  explicit Point(std::vector<Rat> coords);
  Point(std::initializer_list<Rat> coords) : Point(std::vector<Rat>(coords)) {}

  std::size_t dim() const { return c_.size(); }
  const Rat& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Rat>& coords() const { return c_; }
  const Rat& x() const { return c_[0]; }
  const Rat& y() const { return c_[1]; }

  friend bool operator==(const Point& a, const Point& b) { return a.c_ == b.c_; }

 private:
  std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

/// Indexed list of points of one dimension. An empty set has dim() == 0
/// unless constructed with an explicit dimension.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t dim) : d_(dim) {}
  explicit PointSet(std::vector<Point> pts);

  void push_back(Point p);

  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  std::size_t dim() const { return d_; }
  const Point& operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<Point>& points() const { return pts_; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.pts_ == b.pts_; }

 private:
  std::size_t d_ = 0;
  std::vector<Point> pts_;
};

/// Maps each covered index (in the covered set) to the index of its cover.
struct CoverCertificate {
  std::map<std::size_t, std::size_t> assignments;
  Rat ratio{1};
};

bool dominates(const Point& u, const Point& v);
/// u_j <= rho * v_j for all j. Throws std::invalid_argument when rho < 1.
bool covers(const Point& u, const Point& v, const Rat& rho);

std::vector<std::size_t> pareto_indices(const PointSet& P);
PointSet pareto_filter(const PointSet& P);

Rat ratio_distance(const Point& p, const Point& q);
Rat additive_distance(const Point& p, const Point& q);

/// Assigns every point of `targets` a rho-cover from `Q`, or nothing if some point has none.
std::optional<CoverCertificate> find_cover(const PointSet& Q, const PointSet& targets, const Rat& rho);
/// Cover check against the Pareto points of P; assignments are keyed by index in P.
std::optional<CoverCertificate> is_eps_pareto(const PointSet& Q, const PointSet& P, const Rat& eps);
/// Re-checks every assignment and that every Pareto point of P is assigned.
bool check_certificate(const CoverCertificate& cert, const PointSet& Q, const PointSet& P);

/// Max bit length over all numerators and denominators (at least 1).
int bit_width(const PointSet& P);

/// Swaps the first two coordinates of every point.
PointSet swap_xy(const PointSet& P);
Point swap_xy(const Point& p);

}  // namespace paretoapx

#endif

#ifndef PARETOAPX_ORACLE_HPP
#define PARETOAPX_ORACLE_HPP

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "paretoapx/point.hpp"

namespace paretoapx {

/// Opaque solution handle: a point index for explicit sets, an edge sequence for paths.
using Witness = std::vector<std::size_t>;

struct Solution {
  Point point;
  Witness witness;
};

/// A solution, or NO.
using OracleAnswer = std::optional<Solution>;

enum class Bound { kInclusive, kStrict };

struct CallCounts {
  std::uint64_t restrict_calls = 0;
  std::uint64_t dual_calls = 0;
  std::uint64_t gap_calls = 0;

  std::uint64_t total() const { return restrict_calls + dual_calls + gap_calls; }
  CallCounts& operator+=(const CallCounts& o);
};

/// Monotone per-kind counters, safe under concurrent increments.
class CallCounter {
 public:
  void add_restrict() { r_.fetch_add(1, std::memory_order_relaxed); }
  void add_dual() { d_.fetch_add(1, std::memory_order_relaxed); }
  void add_gap() { g_.fetch_add(1, std::memory_order_relaxed); }
  CallCounts snapshot() const;

 private:
  std::atomic<std::uint64_t> r_{0};
  std::atomic<std::uint64_t> d_{0};
  std::atomic<std::uint64_t> g_{0};
};

/// Restrict_delta(y, x <= C): a solution with x <= C (x < C when strict) whose y is
/// within 1+delta of the best such y; NO only if no solution meets the bound.
class RestrictOracle {
 public:
  virtual ~RestrictOracle() = default;
  OracleAnswer restrict(const Rat& delta, const Rat& bound, Bound kind = Bound::kInclusive) const;
  /// m with every objective value an m-bit rational in [2^-m, 2^m].
  virtual int value_bits() const = 0;
  /// Whether delta = 0 requests are answered exactly.
  virtual bool honors_exact() const { return true; }
  CallCounts restrict_calls() const { return counter_.snapshot(); }

 protected:
  virtual OracleAnswer do_restrict(const Rat& delta, const Rat& bound, Bound kind) const = 0;

 private:
  mutable CallCounter counter_;
};

/// DualRestrict_delta(x, y <= D): y(s) <= (1+delta)D and x(s) <= min{x : y <= D};
/// NO only if no solution has y <= D.
class DualRestrictOracle {
 public:
  virtual ~DualRestrictOracle() = default;
  OracleAnswer dual_restrict(const Rat& delta, const Rat& bound) const;
  virtual int value_bits() const = 0;
  virtual bool honors_exact() const { return true; }
  CallCounts dual_calls() const { return counter_.snapshot(); }

 protected:
  virtual OracleAnswer do_dual_restrict(const Rat& delta, const Rat& bound) const = 0;

 private:
  mutable CallCounter counter_;
};

/// GAP_delta(b): a solution dominating b, or NO only when no solution is <= b/(1+delta).
class GapOracle {
 public:
  virtual ~GapOracle() = default;
  OracleAnswer gap(const Point& b, const Rat& delta) const;
  virtual int value_bits() const = 0;
  virtual std::size_t dimension() const = 0;
  CallCounts gap_calls() const { return counter_.snapshot(); }

 protected:
  virtual OracleAnswer do_gap(const Point& b, const Rat& delta) const = 0;

 private:
  mutable CallCounter counter_;
};

/// Oracle handles over one instance. restrict_x minimizes x subject to a bound on y.
struct OracleSet {
  std::shared_ptr<const RestrictOracle> restrict_y;
  std::shared_ptr<const DualRestrictOracle> dual;
  std::shared_ptr<const RestrictOracle> restrict_x;
  std::shared_ptr<const GapOracle> gap;
};

/// DualRestrict by binary search over C on the grid j * 2^-2m.
/// `calls`, when given, accumulates the restrict calls issued.
OracleAnswer dual_restrict_via_restrict(const RestrictOracle& oracle, const Rat& D, const Rat& delta,
                                        CallCounts* calls = nullptr);
/// Restrict by binary search over D on the grid j * 2^-2m.
OracleAnswer restrict_via_dual_restrict(const DualRestrictOracle& oracle, const Rat& C, const Rat& delta,
                                        Bound kind = Bound::kInclusive, CallCounts* calls = nullptr);

class DualRestrictViaRestrict : public DualRestrictOracle {
 public:
  explicit DualRestrictViaRestrict(std::shared_ptr<const RestrictOracle> inner) : inner_(std::move(inner)) {}
  int value_bits() const override { return inner_->value_bits(); }
  bool honors_exact() const override { return inner_->honors_exact(); }

 protected:
  OracleAnswer do_dual_restrict(const Rat& delta, const Rat& bound) const override;

 private:
  std::shared_ptr<const RestrictOracle> inner_;
};

class RestrictViaDualRestrict : public RestrictOracle {
 public:
  explicit RestrictViaDualRestrict(std::shared_ptr<const DualRestrictOracle> inner) : inner_(std::move(inner)) {}
  int value_bits() const override { return inner_->value_bits(); }
  bool honors_exact() const override { return inner_->honors_exact(); }

 protected:
  OracleAnswer do_restrict(const Rat& delta, const Rat& bound, Bound kind) const override;

 private:
  std::shared_ptr<const DualRestrictOracle> inner_;
};

/// Runs a restrict oracle built for the axis-swapped instance and swaps answers back.
class SwappedRestrict : public RestrictOracle {
 public:
  explicit SwappedRestrict(std::shared_ptr<const RestrictOracle> swapped) : inner_(std::move(swapped)) {}
  int value_bits() const override { return inner_->value_bits(); }
  bool honors_exact() const override { return inner_->honors_exact(); }

 protected:
  OracleAnswer do_restrict(const Rat& delta, const Rat& bound, Bound kind) const override;

 private:
  std::shared_ptr<const RestrictOracle> inner_;
};

/// Exact oracles over an explicit point set (delta is ignored: answers are optimal).
/// Restrict: min y, ties lowest x then index. DualRestrict: min x, ties lowest y then index.
/// Gap: lowest-index dominating point. Restrict/DualRestrict need d = 2.
class ExplicitOracle : public RestrictOracle, public DualRestrictOracle, public GapOracle {
 public:
  explicit ExplicitOracle(PointSet P);
  int value_bits() const override { return m_; }
  std::size_t dimension() const override { return P_.dim(); }
  const PointSet& points() const { return P_; }

 protected:
  OracleAnswer do_restrict(const Rat& delta, const Rat& bound, Bound kind) const override;
  OracleAnswer do_dual_restrict(const Rat& delta, const Rat& bound) const override;
  OracleAnswer do_gap(const Point& b, const Rat& delta) const override;

 private:
  void require_2d() const;
  PointSet P_;
  int m_;
};

OracleSet exact_oracle_from_points(const PointSet& P);

/// How an adversarial oracle picks among legal answers. Axes are those of the
/// oracle's own frame: the objective is the minimized coordinate, the bound the
/// constrained one.
struct AdversaryPolicy {
  enum class Kind {
    kWorstObjective,  // largest objective, then largest bounded coordinate
    kWorstBound,      // largest bounded coordinate, then largest objective
    kScripted,        // next scripted index when legal, else kWorstObjective
  };
  Kind kind = Kind::kWorstObjective;
  std::vector<std::size_t> script;
};

/// Legal-but-worst answers over an explicit 2-d set with slack min(wrapper delta, call delta).
class AdversarialOracle : public RestrictOracle, public DualRestrictOracle {
 public:
  AdversarialOracle(PointSet P, Rat delta, AdversaryPolicy policy);
  int value_bits() const override { return m_; }

 protected:
  OracleAnswer do_restrict(const Rat& delta, const Rat& bound, Bound kind) const override;
  OracleAnswer do_dual_restrict(const Rat& delta, const Rat& bound) const override;

 private:
  OracleAnswer pick(const std::vector<std::size_t>& legal, bool objective_is_y) const;
  PointSet P_;
  Rat delta_;
  AdversaryPolicy policy_;
  int m_;
  mutable std::mutex script_mu_;
  mutable std::size_t script_pos_ = 0;
};

/// restrict_y / dual / restrict_x adversarial handles; restrict_x runs the same
/// policy in the swapped frame.
OracleSet adversarial_wrapper(const PointSet& P, const Rat& delta, const AdversaryPolicy& policy);

}  // namespace paretoapx

#endif

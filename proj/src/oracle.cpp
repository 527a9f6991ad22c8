#include "paretoapx/oracle.hpp"

#include <stdexcept>

namespace paretoapx {

namespace {

void require_nonnegative(const Rat& delta) {
  if (delta.sign() < 0) throw std::invalid_argument("oracle slack must be >= 0, got " + delta.str());
}

bool within(const Rat& v, const Rat& bound, Bound kind) {
  return kind == Bound::kStrict ? v < bound : v <= bound;
}

mpz_class pow2z(unsigned long e) {
  mpz_class p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
  return p;
}

bool fits_bits(const Rat& v, int m) {
  const auto mm = static_cast<std::size_t>(m);
  return v.num_bits() <= mm && v.den_bits() <= mm;
}

// Binary search over grid values j * 2^-2m for j in (lo, hi], where `probe(lo)` is
// known false and `probe(hi)` true. Returns the last true value and its answer.
template <class Probe>
std::pair<Rat, OracleAnswer> grid_search(int m, OracleAnswer top, Probe&& probe) {
  const mpz_class unit = pow2z(2 * static_cast<unsigned long>(m));
  mpz_class lo = pow2z(static_cast<unsigned long>(m)) - 1;
  mpz_class hi = pow2z(3 * static_cast<unsigned long>(m));
  OracleAnswer best = std::move(top);
  while (hi - lo > 1) {
    const mpz_class mid = (lo + hi) / 2;
    OracleAnswer a = probe(Rat(mid, unit));
    if (a) {
      hi = mid;
      best = std::move(a);
    } else {
      lo = mid;
    }
  }
  return {Rat(hi, unit), std::move(best)};
}

}  // namespace

CallCounts& CallCounts::operator+=(const CallCounts& o) {
  restrict_calls += o.restrict_calls;
  dual_calls += o.dual_calls;
  gap_calls += o.gap_calls;
  return *this;
}

CallCounts CallCounter::snapshot() const {
  CallCounts c;
  c.restrict_calls = r_.load(std::memory_order_relaxed);
  c.dual_calls = d_.load(std::memory_order_relaxed);
  c.gap_calls = g_.load(std::memory_order_relaxed);
  return c;
}

OracleAnswer RestrictOracle::restrict(const Rat& delta, const Rat& bound, Bound kind) const {
  require_nonnegative(delta);
  counter_.add_restrict();
  return do_restrict(delta, bound, kind);
}

OracleAnswer DualRestrictOracle::dual_restrict(const Rat& delta, const Rat& bound) const {
  require_nonnegative(delta);
  counter_.add_dual();
  return do_dual_restrict(delta, bound);
}

OracleAnswer GapOracle::gap(const Point& b, const Rat& delta) const {
  require_nonnegative(delta);
  if (b.dim() != dimension()) throw std::invalid_argument("gap query of wrong dimension");
  counter_.add_gap();
  return do_gap(b, delta);
}

OracleAnswer dual_restrict_via_restrict(const RestrictOracle& oracle, const Rat& D, const Rat& delta,
                                        CallCounts* calls) {
  const int m = oracle.value_bits();
  const Rat limit = (Rat(1) + delta) * D;
  auto probe = [&](const Rat& C) -> OracleAnswer {
    if (calls) ++calls->restrict_calls;
    auto a = oracle.restrict(delta, C);
    if (a && a->point.y() <= limit) return a;
    return std::nullopt;
  };
  OracleAnswer top = probe(Rat::pow2(m));
  if (!top) return std::nullopt;
  return grid_search(m, std::move(top), probe).second;
}

OracleAnswer restrict_via_dual_restrict(const DualRestrictOracle& oracle, const Rat& C, const Rat& delta,
                                        Bound kind, CallCounts* calls) {
  const int m = oracle.value_bits();
  auto probe = [&](const Rat& D) -> OracleAnswer {
    if (calls) ++calls->dual_calls;
    auto a = oracle.dual_restrict(delta, D);
    if (a && within(a->point.x(), C, kind)) return a;
    return std::nullopt;
  };
  OracleAnswer top = probe(Rat::pow2(m));
  if (!top) return std::nullopt;
  auto [D, best] = grid_search(m, std::move(top), probe);
  // The optimum y* lies in (D - 2^-2m, D]. If it is strictly below D it is the only
  // m-bit rational in that gap, and probing there keeps the 1+delta guarantee exact.
  const Rat snapped = simplest_between(D - Rat::pow2(-2 * m), D);
  if (fits_bits(snapped, m)) {
    if (auto a = probe(snapped)) return a;
  }
  return best;
}

OracleAnswer DualRestrictViaRestrict::do_dual_restrict(const Rat& delta, const Rat& bound) const {
  return dual_restrict_via_restrict(*inner_, bound, delta);
}

OracleAnswer RestrictViaDualRestrict::do_restrict(const Rat& delta, const Rat& bound, Bound kind) const {
  return restrict_via_dual_restrict(*inner_, bound, delta, kind);
}

OracleAnswer SwappedRestrict::do_restrict(const Rat& delta, const Rat& bound, Bound kind) const {
  auto a = inner_->restrict(delta, bound, kind);
  if (a) a->point = swap_xy(a->point);
  return a;
}

ExplicitOracle::ExplicitOracle(PointSet P) : P_(std::move(P)), m_(bit_width(P_)) {}

void ExplicitOracle::require_2d() const {
  if (P_.dim() != 2 && !P_.empty()) throw std::invalid_argument("restrict oracles need a 2-d point set");
}

OracleAnswer ExplicitOracle::do_restrict(const Rat&, const Rat& bound, Bound kind) const {
  require_2d();
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < P_.size(); ++i) {
    const auto& p = P_[i];
    if (!within(p.x(), bound, kind)) continue;
    if (!best || p.y() < P_[*best].y() || (p.y() == P_[*best].y() && p.x() < P_[*best].x())) best = i;
  }
  if (!best) return std::nullopt;
  return Solution{P_[*best], {*best}};
}

OracleAnswer ExplicitOracle::do_dual_restrict(const Rat&, const Rat& bound) const {
  require_2d();
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < P_.size(); ++i) {
    const auto& p = P_[i];
    if (bound < p.y()) continue;
    if (!best || p.x() < P_[*best].x() || (p.x() == P_[*best].x() && p.y() < P_[*best].y())) best = i;
  }
  if (!best) return std::nullopt;
  return Solution{P_[*best], {*best}};
}

OracleAnswer ExplicitOracle::do_gap(const Point& b, const Rat&) const {
  for (std::size_t i = 0; i < P_.size(); ++i) {
    if (dominates(P_[i], b)) return Solution{P_[i], {i}};
  }
  return std::nullopt;
}

OracleSet exact_oracle_from_points(const PointSet& P) {
  auto ex = std::make_shared<ExplicitOracle>(P);
  OracleSet s;
  s.restrict_y = ex;
  s.dual = ex;
  s.gap = ex;
  if (P.dim() == 2 || P.empty()) {
    s.restrict_x = std::make_shared<SwappedRestrict>(std::make_shared<ExplicitOracle>(swap_xy(P)));
  }
  return s;
}

AdversarialOracle::AdversarialOracle(PointSet P, Rat delta, AdversaryPolicy policy)
    : P_(std::move(P)), delta_(std::move(delta)), policy_(std::move(policy)), m_(bit_width(P_)) {
  if (delta_.sign() < 0) throw std::invalid_argument("adversary slack must be >= 0");
  if (!P_.empty() && P_.dim() != 2) throw std::invalid_argument("adversarial oracle needs a 2-d point set");
}

OracleAnswer AdversarialOracle::pick(const std::vector<std::size_t>& legal, bool objective_is_y) const {
  if (legal.empty()) return std::nullopt;
  if (policy_.kind == AdversaryPolicy::Kind::kScripted) {
    std::lock_guard<std::mutex> lock(script_mu_);
    if (script_pos_ < policy_.script.size()) {
      const std::size_t want = policy_.script[script_pos_++];
      for (auto i : legal) {
        if (i == want) return Solution{P_[i], {i}};
      }
    }
  }
  const bool bound_first = policy_.kind == AdversaryPolicy::Kind::kWorstBound;
  auto key = [&](std::size_t i) {
    const Rat& obj = objective_is_y ? P_[i].y() : P_[i].x();
    const Rat& bnd = objective_is_y ? P_[i].x() : P_[i].y();
    return bound_first ? std::make_pair(bnd, obj) : std::make_pair(obj, bnd);
  };
  std::size_t best = legal.front();
  for (auto i : legal) {
    if (key(best) < key(i)) best = i;
  }
  return Solution{P_[best], {best}};
}

OracleAnswer AdversarialOracle::do_restrict(const Rat& delta, const Rat& bound, Bound kind) const {
  const Rat slack = min(delta, delta_);
  std::optional<Rat> ymin;
  for (const auto& p : P_) {
    if (within(p.x(), bound, kind) && (!ymin || p.y() < *ymin)) ymin = p.y();
  }
  if (!ymin) return std::nullopt;
  const Rat cap = (Rat(1) + slack) * *ymin;
  std::vector<std::size_t> legal;
  for (std::size_t i = 0; i < P_.size(); ++i) {
    if (within(P_[i].x(), bound, kind) && P_[i].y() <= cap) legal.push_back(i);
  }
  return pick(legal, true);
}

OracleAnswer AdversarialOracle::do_dual_restrict(const Rat& delta, const Rat& bound) const {
  const Rat slack = min(delta, delta_);
  std::optional<Rat> xmin;
  for (const auto& p : P_) {
    if (p.y() <= bound && (!xmin || p.x() < *xmin)) xmin = p.x();
  }
  if (!xmin) return std::nullopt;
  const Rat cap = (Rat(1) + slack) * bound;
  std::vector<std::size_t> legal;
  for (std::size_t i = 0; i < P_.size(); ++i) {
    if (P_[i].x() <= *xmin && P_[i].y() <= cap) legal.push_back(i);
  }
  return pick(legal, false);
}

OracleSet adversarial_wrapper(const PointSet& P, const Rat& delta, const AdversaryPolicy& policy) {
  auto adv = std::make_shared<AdversarialOracle>(P, delta, policy);
  OracleSet s;
  s.restrict_y = adv;
  s.dual = adv;
  s.restrict_x = std::make_shared<SwappedRestrict>(std::make_shared<AdversarialOracle>(swap_xy(P), delta, policy));
  return s;
}

}  // namespace paretoapx

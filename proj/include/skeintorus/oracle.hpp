#pragma once

// Brute-force products by Kauffman state sum on an explicit diagram.
//
// The torus is R^2 / Z^2 with the puncture at the lattice points. A torus
// link (p,q) = d (a,b) is drawn as the d level sets {b x - a y = c_j mod 1}.
// The first factor lies over the second. Every crossing is smoothed in both
// ways, the resulting loops are traced through the crossing graph and each
// loop is classified by its homology class and, when null-homologous, by the
// number of lattice points enclosed by its planar lift.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "skeintorus/skein.hpp"

namespace skeintorus::oracle {

inline constexpr int kDefaultBudget = 20;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state reached an impossible configuration (non-simple lift, mixed
/// essential slopes); indicates a tracing bug.
class TracingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact rational point scaled by the diagram's common denominator.
struct ScaledPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const ScaledPoint&, const ScaledPoint&) = default;
};

// Half-edge slots at a crossing.
enum Slot : int { kOverForward = 0, kUnderForward = 1, kOverBackward = 2, kUnderBackward = 3 };

struct HalfEdge {
  int target = -1;          // half-edge index (4 * crossing + slot) reached at the far end
  ScaledPoint displacement; // from this crossing to the next one, in the plane
};

struct Crossing {
  ScaledPoint position;     // in [0, scale)^2
  int over_strand = -1;
  int under_strand = -1;
};

struct Strand {
  int family = 0;           // 0 = over, 1 = under
  PQ direction;             // primitive
  std::int64_t offset_num = 0;  // level b x - a y = offset_num / offset_den
  std::int64_t offset_den = 1;
  std::vector<int> crossings;   // in order along the direction
};

class Diagram {
 public:
  /// Throws std::invalid_argument for a (0,0) factor and BudgetExceeded when
  /// |ps - rq| > budget. Deterministic in seed.
  Diagram(PQ over, PQ under, int budget = kDefaultBudget, std::uint64_t seed = 0);

  PQ over() const { return over_; }
  PQ under() const { return under_; }
  std::int64_t scale() const { return scale_; }
  const std::vector<Strand>& strands() const { return strands_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<HalfEdge>& half_edges() const { return half_edges_; }
  /// +1 if the under strand turns counterclockwise from the over strand.
  int orientation() const { return orientation_; }
  /// Partner slot of an arriving slot under the A (true) or B smoothing.
  int smoothing_partner(int slot, bool a_smoothing) const;

  nlohmann::json to_json() const;

 private:
  PQ over_;
  PQ under_;
  std::int64_t scale_ = 1;
  int orientation_ = 1;
  std::vector<Strand> strands_;
  std::vector<Crossing> crossings_;
  std::vector<HalfEdge> half_edges_;
};

/// Bit i set = A-smoothing at crossing i.
struct State {
  std::uint64_t a_mask = 0;
  int weight_exponent(std::size_t crossing_count) const;
};

enum class LoopKind { kTrivial, kPeripheral, kEssential };

struct LoopClass {
  LoopKind kind = LoopKind::kTrivial;
  PQ homology;  // canonical and primitive when essential
  friend bool operator==(const LoopClass&, const LoopClass&) = default;
};

/// One traced loop: the half-edges it leaves from and its lifted vertices.
struct Loop {
  std::vector<int> half_edges;
  std::vector<ScaledPoint> lift;  // closed polygon, first vertex repeated implicitly
  ScaledPoint total;              // sum of displacements (scale * homology)
};

std::vector<Loop> trace_loops(const Diagram& d, const State& s);
LoopClass classify_loop(const Diagram& d, const Loop& loop);
/// A^{#A-#B} (-A^2-A^-2)^{#trivial} d^{#peripheral} (k a, k b).
MulticurveElement evaluate_state(const Diagram& d, const State& s);

nlohmann::json state_to_json(const Diagram& d, const State& s);

/// Product m * m2 (m on top) in the multicurve basis, summing all 2^c states.
/// threads = 0 uses the hardware concurrency.
MulticurveElement oracle_product(const MulticurveKey& m, const MulticurveKey& m2,
                                 int budget = kDefaultBudget, std::uint64_t seed = 0,
                                 unsigned threads = 0);

/// Product of arbitrary elements by expanding both into multicurves.
MulticurveElement oracle_multiply(const MulticurveElement& x, const MulticurveElement& y,
                                  int budget = kDefaultBudget, std::uint64_t seed = 0,
                                  unsigned threads = 0);
MulticurveElement oracle_multiply(const SkeinElement& x, const SkeinElement& y,
                                  int budget = kDefaultBudget, std::uint64_t seed = 0,
                                  unsigned threads = 0);

}  // namespace skeintorus::oracle

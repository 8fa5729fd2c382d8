#include "skeintorus/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <thread>
#include <tuple>

#include <boost/rational.hpp>

namespace skeintorus::oracle {

namespace {

using Rational = boost::rational<std::int64_t>;
using Wide = __int128;

std::int64_t floor_of(const Rational& x) {
  std::int64_t q = x.numerator() / x.denominator();
  if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
  return q;
}

Rational frac(const Rational& x) { return x - floor_of(x); }

// (u, v) with u*a + v*b = 1 for coprime a, b.
std::pair<std::int64_t, std::int64_t> bezout(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_u = 1, u = 0, old_v = 0, v = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_u, u) = std::make_pair(u, old_u - q * u);
    std::tie(old_v, v) = std::make_pair(v, old_v - q * v);
  }
  if (old_r < 0) return {-old_u, -old_v};
  return {old_u, old_v};
}

struct RationalPoint {
  Rational x, y;
};

// A strand as a straight closed curve through base with primitive direction.
struct StrandGeometry {
  PQ dir;
  RationalPoint base;
  // position along the strand: h(x,y) = alpha x + beta y, alpha a + beta b = 1
  std::int64_t alpha = 0, beta = 0;

  Rational level_of(const RationalPoint& pt) const { return pt.x * dir.q - pt.y * dir.p; }
  Rational param_of(const RationalPoint& pt) const {
    return frac(pt.x * alpha + pt.y * beta - (base.x * alpha + base.y * beta));
  }
};

std::vector<StrandGeometry> build_family(PQ curve, const Rational& theta) {
  const std::int64_t d = gcd_of(curve);
  const PQ dir{curve.p / d, curve.q / d};
  // level b x - a y = 1 at (x0, y0)
  const auto [x0, y0m] = bezout(dir.q, dir.p);  // x0 * b + y0m * a = 1
  const auto [alpha, beta] = bezout(dir.p, dir.q);
  std::vector<StrandGeometry> out;
  for (std::int64_t j = 0; j < d; ++j) {
    const Rational level = (Rational(j) + theta) / d;
    StrandGeometry g;
    g.dir = dir;
    g.base = {level * x0, level * (-y0m)};
    g.alpha = alpha;
    g.beta = beta;
    out.push_back(g);
  }
  return out;
}

struct Offsets {
  Rational over, under;
};

Offsets offsets_for(std::uint64_t seed, int attempt) {
  std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(attempt));
  std::uniform_int_distribution<std::int64_t> over_num(1, 96);
  std::uniform_int_distribution<std::int64_t> under_num(1, 88);
  if (seed == 0 && attempt == 0) return {Rational(29, 97), Rational(37, 89)};
  return {Rational(over_num(rng), 97), Rational(under_num(rng), 89)};
}

int partner_slot(int slot, bool pair_03_12) { return pair_03_12 ? 3 - slot : slot ^ 1; }

Wide cross(Wide ax, Wide ay, Wide bx, Wide by) { return ax * by - ay * bx; }

// Winding number of the closed polygon around (px, py), which must not lie on it.
int winding_number(const std::vector<ScaledPoint>& poly, std::int64_t px, std::int64_t py) {
  int wn = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const ScaledPoint& a = poly[i];
    const ScaledPoint& b = poly[(i + 1) % n];
    const Wide side = cross(Wide(b.x) - a.x, Wide(b.y) - a.y, Wide(px) - a.x, Wide(py) - a.y);
    if (side == 0 && std::min(a.x, b.x) <= px && px <= std::max(a.x, b.x) &&
        std::min(a.y, b.y) <= py && py <= std::max(a.y, b.y)) {
      throw TracingError("lattice point on a traced loop");
    }
    if (a.y <= py) {
      if (b.y > py && side > 0) ++wn;
    } else if (b.y <= py && side < 0) {
      --wn;
    }
  }
  return wn;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Per-state tallies: weight, trivial loops, peripheral loops, essential
// multiplicity, essential class.
using Tally = std::map<std::tuple<int, int, int, int, PQ>, std::int64_t>;

struct Scratch {
  std::vector<char> visited;
};

// Traces loops without storing them; classifies on the fly.
void tally_state(const Diagram& d, std::uint64_t mask, Scratch& scratch, Tally& tally) {
  const auto& hes = d.half_edges();
  const std::size_t n_he = hes.size();
  scratch.visited.assign(n_he, 0);
  const bool positive = d.orientation() > 0;
  int trivial = 0, peripheral = 0, essential = 0;
  PQ essential_class{0, 0};
  std::vector<ScaledPoint> lift;
  for (std::size_t start = 0; start < n_he; ++start) {
    if (scratch.visited[start]) continue;
    std::int64_t tx = 0, ty = 0;
    int cur = static_cast<int>(start);
    do {
      scratch.visited[cur] = 1;
      const HalfEdge& e = hes[cur];
      scratch.visited[e.target] = 1;
      tx += e.displacement.x;
      ty += e.displacement.y;
      const int c = e.target / 4;
      const bool a_smooth = (mask >> c) & 1U;
      cur = 4 * c + partner_slot(e.target % 4, a_smooth == positive);
    } while (cur != static_cast<int>(start));
    Loop loop;
    loop.total = {tx, ty};
    if (tx == 0 && ty == 0) {
      cur = static_cast<int>(start);
      ScaledPoint at = d.crossings()[cur / 4].position;
      do {
        loop.lift.push_back(at);
        const HalfEdge& e = hes[cur];
        at.x += e.displacement.x;
        at.y += e.displacement.y;
        const int c = e.target / 4;
        const bool a_smooth = (mask >> c) & 1U;
        cur = 4 * c + partner_slot(e.target % 4, a_smooth == positive);
      } while (cur != static_cast<int>(start));
    }
    const LoopClass cls = classify_loop(d, loop);
    switch (cls.kind) {
      case LoopKind::kTrivial:
        ++trivial;
        break;
      case LoopKind::kPeripheral:
        ++peripheral;
        break;
      case LoopKind::kEssential:
        if (essential > 0 && cls.homology != essential_class) {
          throw TracingError("essential loops with different slopes in one state");
        }
        essential_class = cls.homology;
        ++essential;
        break;
    }
  }
  const int a_count = std::popcount(mask);
  const int weight = 2 * a_count - static_cast<int>(d.crossings().size());
  ++tally[{weight, trivial, peripheral, essential, essential_class}];
}

MulticurveElement tally_to_element(const Tally& tally, std::uint32_t extra_boundary) {
  MulticurveElement out;
  const LaurentPoly loop = loop_value();
  for (const auto& [k, count] : tally) {
    const auto& [weight, trivial, peripheral, essential, cls] = k;
    const LaurentPoly coeff =
        pow(loop, static_cast<unsigned>(trivial)).shifted(weight);
    out.add_term({static_cast<std::uint32_t>(peripheral) + extra_boundary,
                  PQ{cls.p * essential, cls.q * essential}},
                 coeff, 0, count);
  }
  return out;
}

}  // namespace

Diagram::Diagram(PQ over, PQ under, int budget, std::uint64_t seed)
    : over_(canonicalize(over.p, over.q)), under_(canonicalize(under.p, under.q)) {
  if (over_.is_empty() || under_.is_empty()) {
    throw std::invalid_argument("diagram factors must be non-empty torus links");
  }
  const std::int64_t det = over_.p * under_.q - under_.p * over_.q;
  const std::int64_t crossing_count = det < 0 ? -det : det;
  if (crossing_count > budget || crossing_count > 62) {
    throw BudgetExceeded("crossing number " + std::to_string(crossing_count) +
                         " exceeds budget " + std::to_string(budget));
  }
  const std::int64_t d_over = gcd_of(over_);
  const PQ u{over_.p / d_over, over_.q / d_over};
  const std::int64_t d_under = gcd_of(under_);
  const PQ v{under_.p / d_under, under_.q / d_under};
  orientation_ = (u.p * v.q - u.q * v.p) > 0 ? 1 : -1;

  for (int attempt = 0;; ++attempt) {
    if (attempt > 1000) throw std::logic_error("no admissible strand offsets found");
    const Offsets off = offsets_for(seed, attempt);
    const auto over_family = build_family(over_, off.over);
    const auto under_family = build_family(under_, off.under);

    struct RawCrossing {
      RationalPoint pos;
      int over, under;
      Rational t, u;
    };
    std::vector<RawCrossing> raw;
    if (det != 0) {
      const std::int64_t delta = v.q * u.p - v.p * u.q;  // g(P + t u) = g(P) + t delta
      const std::int64_t n = delta < 0 ? -delta : delta;
      for (std::size_t j = 0; j < over_family.size(); ++j) {
        const auto& fo = over_family[j];
        for (std::size_t k = 0; k < under_family.size(); ++k) {
          const auto& fu = under_family[k];
          const Rational w0 = frac(fu.level_of(fu.base) - fu.level_of(fo.base));
          for (std::int64_t m = 0; m < n; ++m) {
            const Rational t = frac((w0 + m) / delta);
            RationalPoint pt{frac(fo.base.x + t * u.p), frac(fo.base.y + t * u.q)};
            raw.push_back({pt, static_cast<int>(j), static_cast<int>(over_family.size() + k),
                           t, fu.param_of(pt)});
          }
        }
      }
    }
    const bool on_edge = std::any_of(raw.begin(), raw.end(), [](const RawCrossing& c) {
      return c.pos.x.numerator() == 0 || c.pos.y.numerator() == 0;
    });
    if (on_edge) continue;

    // Common denominator for positions and displacements.
    std::int64_t scale = 1;
    auto absorb = [&scale](const Rational& r) { scale = std::lcm(scale, r.denominator()); };
    for (const auto& c : raw) {
      absorb(c.pos.x);
      absorb(c.pos.y);
      absorb(c.t);
      absorb(c.u);
    }
    scale_ = scale;
    auto to_scaled = [scale](const Rational& r) {
      return r.numerator() * (scale / r.denominator());
    };

    strands_.clear();
    crossings_.clear();
    for (std::size_t j = 0; j < over_family.size() + under_family.size(); ++j) {
      const bool is_over = j < over_family.size();
      const auto& g = is_over ? over_family[j] : under_family[j - over_family.size()];
      Strand s;
      s.family = is_over ? 0 : 1;
      s.direction = g.dir;
      const Rational level = g.level_of(g.base);
      s.offset_num = level.numerator();
      s.offset_den = level.denominator();
      strands_.push_back(s);
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
      crossings_.push_back({{to_scaled(raw[i].pos.x), to_scaled(raw[i].pos.y)},
                            raw[i].over, raw[i].under});
    }
    // Order crossings along each strand and link half-edges.
    half_edges_.assign(4 * raw.size(), HalfEdge{});
    for (std::size_t sidx = 0; sidx < strands_.size(); ++sidx) {
      const bool is_over = strands_[sidx].family == 0;
      std::vector<std::pair<Rational, int>> along;
      for (std::size_t i = 0; i < raw.size(); ++i) {
        const int owner = is_over ? raw[i].over : raw[i].under;
        if (owner == static_cast<int>(sidx)) {
          along.emplace_back(is_over ? raw[i].t : raw[i].u, static_cast<int>(i));
        }
      }
      std::sort(along.begin(), along.end());
      for (std::size_t i = 1; i < along.size(); ++i) {
        if (along[i].first == along[i - 1].first) throw std::logic_error("triple point");
      }
      const PQ dir = strands_[sidx].direction;
      const int fwd = is_over ? kOverForward : kUnderForward;
      const int bwd = is_over ? kOverBackward : kUnderBackward;
      for (std::size_t i = 0; i < along.size(); ++i) {
        const std::size_t next = (i + 1) % along.size();
        Rational dt = along[next].first - along[i].first;
        if (next == 0) dt += 1;
        const std::int64_t step = to_scaled(dt);
        const int from = along[i].second;
        const int to = along[next].second;
        half_edges_[4 * from + fwd] = {4 * to + bwd, {step * dir.p, step * dir.q}};
        half_edges_[4 * to + bwd] = {4 * from + fwd, {-step * dir.p, -step * dir.q}};
        strands_[sidx].crossings.push_back(from);
      }
    }
    break;
  }
}

int Diagram::smoothing_partner(int slot, bool a_smoothing) const {
  // With the under strand counterclockwise of the over strand, the A
  // smoothing joins +over to -under and +under to -over.
  return partner_slot(slot, a_smoothing == (orientation_ > 0));
}

nlohmann::json Diagram::to_json() const {
  nlohmann::json j;
  j["over"] = {over_.p, over_.q};
  j["under"] = {under_.p, under_.q};
  j["scale"] = scale_;
  j["orientation"] = orientation_;
  for (const auto& s : strands_) {
    j["strands"].push_back({{"family", s.family == 0 ? "over" : "under"},
                            {"direction", {s.direction.p, s.direction.q}},
                            {"level", {s.offset_num, s.offset_den}},
                            {"crossings", s.crossings}});
  }
  j["crossings"] = nlohmann::json::array();
  for (const auto& c : crossings_) {
    j["crossings"].push_back({{"x", c.position.x},
                              {"y", c.position.y},
                              {"over_strand", c.over_strand},
                              {"under_strand", c.under_strand}});
  }
  return j;
}

int State::weight_exponent(std::size_t crossing_count) const {
  return 2 * std::popcount(a_mask) - static_cast<int>(crossing_count);
}

std::vector<Loop> trace_loops(const Diagram& d, const State& s) {
  const auto& hes = d.half_edges();
  std::vector<char> visited(hes.size(), 0);
  std::vector<Loop> loops;
  for (std::size_t start = 0; start < hes.size(); ++start) {
    if (visited[start]) continue;
    Loop loop;
    int cur = static_cast<int>(start);
    ScaledPoint at = d.crossings()[cur / 4].position;
    do {
      visited[cur] = 1;
      loop.half_edges.push_back(cur);
      loop.lift.push_back(at);
      const HalfEdge& e = hes[cur];
      visited[e.target] = 1;
      at.x += e.displacement.x;
      at.y += e.displacement.y;
      loop.total.x += e.displacement.x;
      loop.total.y += e.displacement.y;
      const int c = e.target / 4;
      cur = 4 * c + d.smoothing_partner(e.target % 4, (s.a_mask >> c) & 1U);
    } while (cur != static_cast<int>(start));
    loops.push_back(std::move(loop));
  }
  return loops;
}

LoopClass classify_loop(const Diagram& d, const Loop& loop) {
  const std::int64_t scale = d.scale();
  if (loop.total.x % scale != 0 || loop.total.y % scale != 0) {
    throw TracingError("loop does not close on the torus");
  }
  const std::int64_t hx = loop.total.x / scale;
  const std::int64_t hy = loop.total.y / scale;
  if (hx != 0 || hy != 0) {
    if (std::gcd(hx, hy) != 1) throw TracingError("non-primitive class for a simple loop");
    return {LoopKind::kEssential, canonicalize(hx, hy)};
  }
  if (loop.lift.empty()) throw TracingError("null-homologous loop without a lift");
  std::int64_t min_x = loop.lift[0].x, max_x = min_x, min_y = loop.lift[0].y, max_y = min_y;
  for (const auto& v : loop.lift) {
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }
  int enclosed = 0;
  for (std::int64_t i = -floor_div(-min_x, scale); i * scale <= max_x; ++i) {
    for (std::int64_t k = -floor_div(-min_y, scale); k * scale <= max_y; ++k) {
      const int wn = winding_number(loop.lift, i * scale, k * scale);
      if (wn < -1 || wn > 1) throw TracingError("non-simple planar lift");
      enclosed += wn != 0;
    }
  }
  if (enclosed > 1) throw TracingError("lift encloses more than one puncture");
  return {enclosed == 0 ? LoopKind::kTrivial : LoopKind::kPeripheral, {0, 0}};
}

MulticurveElement evaluate_state(const Diagram& d, const State& s) {
  Tally tally;
  Scratch scratch;
  tally_state(d, s.a_mask, scratch, tally);
  return tally_to_element(tally, 0);
}

nlohmann::json state_to_json(const Diagram& d, const State& s) {
  nlohmann::json j;
  nlohmann::json choices = nlohmann::json::array();
  for (std::size_t c = 0; c < d.crossings().size(); ++c) {
    choices.push_back(((s.a_mask >> c) & 1U) ? "A" : "B");
  }
  j["smoothings"] = choices;
  j["weight"] = s.weight_exponent(d.crossings().size());
  for (const auto& loop : trace_loops(d, s)) {
    const LoopClass cls = classify_loop(d, loop);
    nlohmann::json l;
    l["kind"] = cls.kind == LoopKind::kTrivial      ? "trivial"
                : cls.kind == LoopKind::kPeripheral ? "peripheral"
                                                    : "essential";
    l["class"] = {cls.homology.p, cls.homology.q};
    for (const auto& v : loop.lift) l["lift"].push_back({v.x, v.y});
    j["loops"].push_back(l);
  }
  return j;
}

MulticurveElement oracle_product(const MulticurveKey& m, const MulticurveKey& m2, int budget,
                                 std::uint64_t seed, unsigned threads) {
  const std::uint32_t boundary = m.boundary_pow + m2.boundary_pow;
  const PQ a = canonicalize(m.curve.p, m.curve.q);
  const PQ b = canonicalize(m2.curve.p, m2.curve.q);
  if (a.is_empty() || b.is_empty() || a.p * b.q - b.p * a.q == 0) {
    MulticurveElement out;
    out.add_term({boundary, canonicalize(a.p + b.p, a.q + b.q)}, 1);
    return out;
  }
  const Diagram diagram(a, b, budget, seed);
  const std::size_t c = diagram.crossings().size();
  const std::uint64_t states = std::uint64_t{1} << c;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, states));
  std::vector<Tally> tallies(threads);
  auto work = [&](unsigned w) {
    Scratch scratch;
    const std::uint64_t lo = states * w / threads;
    const std::uint64_t hi = states * (w + 1) / threads;
    for (std::uint64_t mask = lo; mask < hi; ++mask) tally_state(diagram, mask, scratch, tallies[w]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  Tally total;
  for (const auto& t : tallies) {
    for (const auto& [k, v] : t) total[k] += v;
  }
  return tally_to_element(total, boundary);
}

MulticurveElement oracle_multiply(const MulticurveElement& x, const MulticurveElement& y,
                                  int budget, std::uint64_t seed, unsigned threads) {
  MulticurveElement out;
  std::map<std::pair<PQ, PQ>, MulticurveElement> cache;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      auto it = cache.find({kx.curve, ky.curve});
      if (it == cache.end()) {
        it = cache
                 .emplace(std::make_pair(kx.curve, ky.curve),
                          oracle_product({0, kx.curve}, {0, ky.curve}, budget, seed, threads))
                 .first;
      }
      const LaurentPoly c = cx * cy;
      for (const auto& [k, v] : it->second.terms()) {
        out.add_term({k.boundary_pow + kx.boundary_pow + ky.boundary_pow, k.curve}, v * c);
      }
    }
  }
  return out;
}

MulticurveElement oracle_multiply(const SkeinElement& x, const SkeinElement& y, int budget,
                                  std::uint64_t seed, unsigned threads) {
  return oracle_multiply(to_multicurve(x), to_multicurve(y), budget, seed, threads);
}

}  // namespace skeintorus::oracle

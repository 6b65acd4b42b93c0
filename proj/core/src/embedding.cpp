#include "genus/embedding.hpp"

#include <atomic>
#include <exception>
#include <thread>

namespace genus {

namespace {

int checked_genus(int vertices, int edges, int faces) {
  int chi = vertices - edges + faces;
  if ((2 - chi) % 2 != 0 || chi > 2) {
    throw internal_error("Euler characteristic " + std::to_string(chi) +
                         " is not of the form 2 - 2k with k >= 0");
  }
  return (2 - chi) / 2;
}

// ---------------------------------------------------------------------------
// Enumeration machinery. Every rotation system is traced from scratch; the
// two engines below differ only in how the per-vertex digit of the rotation
// index is turned into a successor lookup.
//
// Digit convention (must match decode_rotation): vertex 0 is the least
// significant digit, radix (deg-1)!, digit 0 = reference order, and the digit
// ranks the lexicographic permutations of the darts after the first.
// ---------------------------------------------------------------------------

// Fast path for max degree <= 3. A degree-3 vertex has exactly two cyclic
// orders -- reference [d0 d1 d2] and reversed [d0 d2 d1] -- so the whole
// index is a bit word with one bit per degree-3 vertex. The face step
// d -> next(twin(d)) becomes two table loads:
//   nxt_[2*twin(d) | bit(vertex(twin(d)))]
// Vertices of degree <= 2 have a single rotation; their darts read a
// constant-zero bit (position 63, and indices stay below 2^62).
class CubicTracer {
 public:
  static bool applicable(const Graph& g) {
    if (g.max_degree() > 3) return false;
    int deg3 = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) == 3) ++deg3;
    }
    return deg3 <= 62;
  }

  explicit CubicTracer(const Graph& g) : dart_n_(static_cast<DartId>(g.dart_count())) {
    std::vector<unsigned> bitpos(g.vertex_count(), 63);
    unsigned next_bit = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) == 3) bitpos[v] = next_bit++;
    }
    nxt_.assign(2 * dart_n_, 0);
    base_.assign(dart_n_, 0);
    btw_.assign(dart_n_, 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto& darts = g.darts_at(v);
      int m = static_cast<int>(darts.size());
      for (int i = 0; i < m; ++i) {
        DartId d = darts[i];
        DartId ref = darts[(i + 1) % m];
        // Reversed cyclic order [d0 d2 d1] for degree 3, else same as
        // reference.
        DartId rev = ref;
        if (m == 3) {
          static constexpr int kReversedNext[3] = {2, 0, 1};
          rev = darts[kReversedNext[i]];
        }
        nxt_[2 * d] = ref;
        nxt_[2 * d + 1] = rev;
      }
    }
    for (DartId d = 0; d < dart_n_; ++d) {
      DartId t = d ^ 1u;
      base_[d] = 2 * t;
      btw_[d] = static_cast<std::uint8_t>(bitpos[g.dart_vertex(t)]);
    }
    stamp_.assign(dart_n_, 0);
  }

  int face_count(std::uint64_t word) {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    const std::uint32_t cur = epoch_;
    int faces = 0;
    for (DartId s = 0; s < dart_n_; ++s) {
      if (stamp_[s] == cur) continue;
      ++faces;
      DartId d = s;
      do {
        stamp_[d] = cur;
        d = nxt_[base_[d] | ((word >> btw_[d]) & 1u)];
      } while (d != s);
    }
    return faces;
  }

 private:
  DartId dart_n_;
  std::vector<DartId> nxt_;
  std::vector<DartId> base_;
  std::vector<std::uint8_t> btw_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

// General path: a mixed-radix odometer over per-vertex digits. Each vertex
// keeps a successor row (indexed by local dart position) for its current
// digit; advancing the odometer rebuilds only the rows of vertices whose
// digit changed.
class GenericTracer {
 public:
  explicit GenericTracer(const Graph& g) : g_(g), dart_n_(static_cast<DartId>(g.dart_count())) {
    int n = g.vertex_count();
    radix_.resize(n);
    digits_.assign(n, 0);
    rows_.resize(n);
    lpos_.assign(dart_n_, 0);
    for (int v = 0; v < n; ++v) {
      const auto& darts = g.darts_at(v);
      std::uint64_t r = 1;
      for (int i = 2; i < static_cast<int>(darts.size()); ++i) r *= static_cast<std::uint64_t>(i);
      radix_[v] = r;
      rows_[v].assign(darts.size(), 0);
      for (std::size_t i = 0; i < darts.size(); ++i) {
        lpos_[darts[i]] = static_cast<DartId>(i);
      }
    }
    vtx_.assign(dart_n_, 0);
    for (DartId d = 0; d < dart_n_; ++d) vtx_[d] = g.dart_vertex(d);
    stamp_.assign(dart_n_, 0);
    set_index(0);
  }

  void set_index(std::uint64_t index) {
    std::uint64_t rest = index;
    for (int v = 0; v < g_.vertex_count(); ++v) {
      digits_[v] = rest % radix_[v];
      rest /= radix_[v];
      rebuild_row(v);
    }
  }

  void advance() {
    for (int v = 0; v < g_.vertex_count(); ++v) {
      if (++digits_[v] < radix_[v]) {
        rebuild_row(v);
        return;
      }
      digits_[v] = 0;
      rebuild_row(v);
    }
  }

  int face_count() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    const std::uint32_t cur = epoch_;
    int faces = 0;
    for (DartId s = 0; s < dart_n_; ++s) {
      if (stamp_[s] == cur) continue;
      ++faces;
      DartId d = s;
      do {
        stamp_[d] = cur;
        DartId t = d ^ 1u;
        d = rows_[vtx_[t]][lpos_[t]];
      } while (d != s);
    }
    return faces;
  }

 private:
  void rebuild_row(int v) {
    const auto& darts = g_.darts_at(v);
    int m = static_cast<int>(darts.size());
    if (m == 0) return;
    // Lexicographic unrank of the tail permutation, as in decode_rotation.
    std::vector<DartId> items(darts.begin() + 1, darts.end());
    std::vector<DartId> order;
    order.reserve(m);
    order.push_back(darts[0]);
    std::uint64_t rank = digits_[v];
    while (!items.empty()) {
      std::uint64_t f = 1;
      for (std::size_t i = 2; i < items.size(); ++i) f *= i;
      std::size_t pick = static_cast<std::size_t>(rank / f);
      rank %= f;
      order.push_back(items[pick]);
      items.erase(items.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    for (int i = 0; i < m; ++i) {
      rows_[v][lpos_[order[i]]] = order[(i + 1) % m];
    }
  }

  const Graph& g_;
  DartId dart_n_;
  std::vector<std::uint64_t> radix_;
  std::vector<std::uint64_t> digits_;
  std::vector<std::vector<DartId>> rows_;
  std::vector<DartId> lpos_;
  std::vector<int> vtx_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

// Raw per-genus counters for [lo, hi). Progress (if any) is reported through
// `tick` roughly every 2^20 indices.
std::vector<std::uint64_t> count_range(const Graph& g, std::uint64_t lo, std::uint64_t hi,
                                       const std::function<void(std::uint64_t)>& tick) {
  const int v_n = g.vertex_count();
  const int e_n = g.edge_count();
  // F >= 1, so genus <= (E - V + 1) / 2 for connected graphs.
  const int max_genus = e_n > 0 ? (e_n - v_n + 1) / 2 + 1 : 1;
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(max_genus) + 1, 0);
  constexpr std::uint64_t kTick = std::uint64_t(1) << 20;

  if (e_n == 0) {
    // Single vertex, no darts: one rotation system, one (spherical) face.
    for (std::uint64_t i = lo; i < hi; ++i) ++acc[0];
    return acc;
  }

  std::uint64_t since_tick = 0;
  auto bump = [&](int faces) {
    int k = checked_genus(v_n, e_n, faces);
    if (k > max_genus) throw internal_error("genus exceeded its Euler bound");
    ++acc[static_cast<std::size_t>(k)];
    if (tick && ++since_tick == kTick) {
      tick(kTick);
      since_tick = 0;
    }
  };

  if (CubicTracer::applicable(g)) {
    CubicTracer tracer(g);
    for (std::uint64_t idx = lo; idx < hi; ++idx) bump(tracer.face_count(idx));
  } else {
    GenericTracer tracer(g);
    tracer.set_index(lo);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      bump(tracer.face_count());
      tracer.advance();
    }
  }
  if (tick && since_tick > 0) tick(since_tick);
  return acc;
}

GenusDistribution to_distribution(const std::vector<std::uint64_t>& raw) {
  GenusDistribution d;
  std::size_t last = raw.size();
  while (last > 0 && raw[last - 1] == 0) --last;
  d.counts.reserve(last);
  for (std::size_t i = 0; i < last; ++i) d.counts.emplace_back(raw[i]);
  return d;
}

}  // namespace

FaceCollection trace_faces(const Graph& g, const RotationSystem& rot) {
  if (!is_valid_rotation(g, rot)) {
    throw validation_error("rotation system does not match graph");
  }
  FaceCollection fc;
  std::vector<char> visited(g.dart_count(), 0);
  // Scanning start darts in ascending order guarantees each orbit is entered
  // at its smallest dart, which fixes both the walk start and face order.
  for (DartId s = 0; s < static_cast<DartId>(g.dart_count()); ++s) {
    if (visited[s]) continue;
    std::vector<DartId> walk;
    DartId d = s;
    do {
      visited[d] = 1;
      walk.push_back(d);
      d = rot.next[g.twin(d)];
    } while (d != s);
    fc.walks.push_back(std::move(walk));
  }
  return fc;
}

int genus_of(const Graph& g, const RotationSystem& rot) {
  if (g.edge_count() == 0) return 0;
  FaceCollection fc = trace_faces(g, rot);
  return checked_genus(g.vertex_count(), g.edge_count(), fc.face_count());
}

BigInt GenusDistribution::total() const {
  BigInt t = 0;
  for (const BigInt& c : counts) t += c;
  return t;
}

BigInt GenusDistribution::count(int k) const {
  if (k < 0 || k >= static_cast<int>(counts.size())) return 0;
  return counts[static_cast<std::size_t>(k)];
}

GenusDistribution& GenusDistribution::operator+=(const GenusDistribution& other) {
  if (other.counts.size() > counts.size()) counts.resize(other.counts.size());
  for (std::size_t i = 0; i < other.counts.size(); ++i) counts[i] += other.counts[i];
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return *this;
}

GenusDistribution distribution_partial(const Graph& g, std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw validation_error("rotation index range is reversed");
  if (BigInt(hi) > rotation_count(g)) {
    throw validation_error("rotation index range exceeds rotation_count");
  }
  return to_distribution(count_range(g, lo, hi, nullptr));
}

GenusDistribution genus_distribution(const Graph& g, const EnumerationOptions& options) {
  BigInt total = rotation_count(g);
  if (!options.force && total > BigInt(options.budget)) {
    throw budget_error("enumeration needs " + total.str() +
                           " rotation systems, over the budget of " +
                           std::to_string(options.budget) + " (use force to override)",
                       total.str());
  }
  if (total > (BigInt(1) << 62)) {
    throw validation_error("rotation space exceeds the enumerable range (2^62)");
  }
  const std::uint64_t count = total.convert_to<std::uint64_t>();

  unsigned workers = options.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::uint64_t> done{0};
  std::function<void(std::uint64_t)> tick;
  if (options.progress) {
    tick = [&](std::uint64_t delta) {
      options.progress(done.fetch_add(delta, std::memory_order_relaxed) + delta, count);
    };
  }

  if (workers == 1 || count < 4096) {
    return to_distribution(count_range(g, 0, count, tick));
  }

  // Contiguous chunks, merged by vector addition: the result cannot depend on
  // the split or on interleaving.
  const std::uint64_t chunk = (count + workers - 1) / workers;
  std::vector<std::vector<std::uint64_t>> partials(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      std::uint64_t lo = std::min(count, w * chunk);
      std::uint64_t hi = std::min(count, lo + chunk);
      try {
        partials[w] = count_range(g, lo, hi, tick);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::size_t width = 0;
  for (const auto& p : partials) width = std::max(width, p.size());
  std::vector<std::uint64_t> sum(width, 0);
  for (const auto& p : partials) {
    for (std::size_t i = 0; i < p.size(); ++i) sum[i] += p[i];
  }
  return to_distribution(sum);
}

}  // namespace genus

#include "planar/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <thread>
#include <utility>

#include "planar/bounds.hpp"
#include "planar/cache.hpp"
#include "planar/coverage.hpp"
#include "planar/symmetry.hpp"

namespace planar {

namespace {

struct Cell {
  int x;
  int y;
  int idx;  // index into the full-rect grid
};

// Traversal positions over `box`, indexed against a grid of width
// `grid_width`. For the restricted search the box is the half rectangle
// while the grid spans the full target.
std::vector<Cell> make_positions(Rect box, int grid_width,
                                 TraversalOrder order) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(box.area()));
  auto push = [&](int x, int y) { cells.push_back({x, y, y * grid_width + x}); };
  if (order == TraversalOrder::kRowwise) {
    for (int y = 0; y <= box.sy; ++y)
      for (int x = 0; x <= box.sx; ++x) push(x, y);
    return cells;
  }
  // Edge-first: row 0 left to right, column 0 bottom to top, row 1, column 1,
  // and so on. Row i contributes x in [i, s_x]; column i contributes y in
  // [i+1, s_y]. Every later position has x or y strictly beyond (x_i, y_i),
  // so the hole-pruning argument carries over unchanged.
  const int n = std::max(box.sx, box.sy);
  for (int i = 0; i <= n; ++i) {
    if (i <= box.sy)
      for (int x = i; x <= box.sx; ++x) push(x, i);
    if (i <= box.sx)
      for (int y = i + 1; y <= box.sy; ++y) push(i, y);
  }
  return cells;
}

struct EngineParams {
  Rect rect;  // full target rectangle (gaps are counted over this)
  const std::vector<Cell>* positions = nullptr;
  int k = 0;
  bool prune_holes = true;
  bool prune_counting = true;
  bool count_only = false;
};

class Engine {
 public:
  explicit Engine(const EngineParams& p) : p_(p), grid_(p.rect) {
    stack_.reserve(p.k + 2);
  }

  void seed(std::span<const Point> pts) {
    for (Point q : pts) push(q);
  }

  void run(int cursor) { extend(cursor); }

  struct Unit {
    std::vector<Point> placed;
    int cursor;
  };

  // Walks the tree like run(), but children `limit` decisions past the
  // starting cursor are emitted as work units instead of being explored.
  void collect(int cursor, int limit, std::vector<Unit>* out) {
    collect_rec(cursor, 0, limit, out);
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t count() const { return count_; }
  std::vector<Basis>& solutions() { return sols_; }

 private:
  void push(Point q) {
    grid_.place(q);
    stack_.push_back(q);
  }
  void pop() {
    grid_.remove(stack_.back());
    stack_.pop_back();
  }

  void emit() {
    ++count_;
    if (!p_.count_only) sols_.push_back(Basis(stack_));
  }

  // Max number of sums the remaining k-j elements can contribute:
  // (j+1) + (j+2) + ... + k.
  std::int64_t counting_cap(int j) const {
    return static_cast<std::int64_t>(p_.k + j + 1) * (p_.k - j) / 2;
  }

  void extend(int cursor) {
    ++nodes_;
    const int j = static_cast<int>(stack_.size());
    if (j == p_.k) {
      if (grid_.gap_count() == 0) emit();
      return;
    }
    if (p_.prune_counting && counting_cap(j) < grid_.gap_count()) return;
    const int next = cursor + 1;
    const int total = static_cast<int>(p_.positions->size());
    if (next >= total) return;
    if (p_.k - j > total - next) return;  // fewer cells left than elements
    const Cell& c = (*p_.positions)[next];
    // Once the walk moves past (x,y), no later element can produce that sum;
    // an uncovered cell forces inclusion.
    if (!p_.prune_holes || grid_.counts()[c.idx] != 0) extend(next);
    push({c.x, c.y});
    extend(next);
    pop();
  }

  void collect_rec(int cursor, int depth, int limit, std::vector<Unit>* out) {
    ++nodes_;
    const int j = static_cast<int>(stack_.size());
    if (j == p_.k) {
      if (grid_.gap_count() == 0) emit();
      return;
    }
    if (p_.prune_counting && counting_cap(j) < grid_.gap_count()) return;
    const int next = cursor + 1;
    const int total = static_cast<int>(p_.positions->size());
    if (next >= total) return;
    if (p_.k - j > total - next) return;
    const Cell& c = (*p_.positions)[next];
    const bool can_skip = !p_.prune_holes || grid_.counts()[c.idx] != 0;
    if (depth + 1 >= limit) {
      if (can_skip) out->push_back({stack_, next});
      push({c.x, c.y});
      out->push_back({stack_, next});
      pop();
      return;
    }
    if (can_skip) collect_rec(next, depth + 1, limit, out);
    push({c.x, c.y});
    collect_rec(next, depth + 1, limit, out);
    pop();
  }

  EngineParams p_;
  CoverageGrid grid_;
  std::vector<Point> stack_;
  std::vector<Basis> sols_;
  std::uint64_t nodes_ = 0;
  std::uint64_t count_ = 0;
};

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Core runner over a prepared traversal. `seed` has already-forced points;
// `seed_cursor` is the index of the last seeded position.
SearchReport run_engine(const SearchConfig& cfg, Rect rect,
                        const std::vector<Cell>& positions,
                        std::span<const Point> seed, int seed_cursor) {
  const auto t0 = std::chrono::steady_clock::now();
  SearchReport report;
  report.k = cfg.k;
  report.rect = rect;
  report.restricted = cfg.restricted;

  EngineParams params;
  params.rect = rect;
  params.positions = &positions;
  params.k = cfg.k;
  params.prune_holes = cfg.prune_holes;
  params.prune_counting = cfg.prune_counting;
  params.count_only = cfg.count_only;

  const int threads = resolve_threads(cfg.threads);
  Engine root(params);
  root.seed(seed);

  if (threads <= 1 || cfg.parallel_depth <= 0) {
    root.run(seed_cursor);
    report.nodes_visited = root.nodes();
    report.solution_count = root.count();
    report.solutions = std::move(root.solutions());
  } else {
    std::vector<Engine::Unit> units;
    root.collect(seed_cursor, cfg.parallel_depth, &units);
    std::vector<std::vector<Basis>> unit_sols(units.size());
    std::vector<std::uint64_t> unit_counts(units.size(), 0);
    std::vector<std::uint64_t> unit_nodes(units.size(), 0);
    std::atomic<std::size_t> cursor{0};
    auto work = [&]() {
      for (;;) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= units.size()) return;
        Engine worker(params);
        worker.seed(units[i].placed);
        worker.run(units[i].cursor);
        unit_sols[i] = std::move(worker.solutions());
        unit_counts[i] = worker.count();
        unit_nodes[i] = worker.nodes();
      }
    };
    std::vector<std::thread> pool;
    const int nw = static_cast<int>(std::min<std::size_t>(
        static_cast<std::size_t>(threads), std::max<std::size_t>(units.size(), 1)));
    pool.reserve(nw);
    for (int t = 0; t < nw; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    report.nodes_visited = root.nodes();
    report.solution_count = root.count();
    report.solutions = std::move(root.solutions());
    for (std::size_t i = 0; i < units.size(); ++i) {
      report.nodes_visited += unit_nodes[i];
      report.solution_count += unit_counts[i];
      for (auto& b : unit_sols[i]) report.solutions.push_back(std::move(b));
    }
  }

  std::sort(report.solutions.begin(), report.solutions.end());
  if (!cfg.count_only) {
    report.unique_count = count_unique(
        report.solutions, rect,
        cfg.restricted ? SymmetryMode::kHalfRect : SymmetryMode::kFullRect);
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

SearchReport transposed_report(SearchReport in, Rect original) {
  SearchReport out = std::move(in);
  out.rect = original;
  for (Basis& b : out.solutions) b = transposed(b);
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

SearchReport empty_report(const SearchConfig& cfg) {
  SearchReport report;
  report.k = cfg.k;
  report.rect = cfg.rect;
  report.restricted = cfg.restricted;
  return report;
}

}  // namespace

SearchReport find_bases(const SearchConfig& cfg) {
  if (cfg.k < 1) throw std::invalid_argument("find_bases: k must be >= 1");
  if (cfg.restricted) {
    throw std::invalid_argument(
        "find_bases enumerates admissible bases; use "
        "find_bases_restricted_direct for restricted ones");
  }
  const Rect rect = cfg.rect;
  if (rect.sx < rect.sy) {
    SearchConfig t = cfg;
    t.rect = rect.transposed();
    return transposed_report(find_bases(t), rect);
  }
  // Infeasible sizes are rejected without searching.
  if (cfg.k < counting_lower_bound(rect) || cfg.k > rect.area()) {
    return empty_report(cfg);
  }

  const auto positions = make_positions(rect, rect.width(), cfg.order);
  std::vector<Point> seed;
  int seed_cursor = 0;
  if (rect.sx >= 1) {
    // Only (0,0)+(1,0) can produce the sum (1,0).
    if (cfg.k < 2) return empty_report(cfg);
    seed = {{0, 0}, {1, 0}};
    seed_cursor = 1;
  } else {
    seed = {{0, 0}};
    seed_cursor = 0;
  }
  return run_engine(cfg, rect, positions, seed, seed_cursor);
}

SearchReport find_bases_restricted_direct(const SearchConfig& cfg) {
  if (cfg.k < 1) throw std::invalid_argument("k must be >= 1");
  const Rect rect = cfg.rect;
  if (!rect.even_dims()) {
    throw std::invalid_argument(
        "restricted search requires even dimensions, got " + to_string(rect));
  }
  if (rect.sx < rect.sy) {
    SearchConfig t = cfg;
    t.rect = rect.transposed();
    return transposed_report(find_bases_restricted_direct(t), rect);
  }
  SearchConfig cfg_r = cfg;
  cfg_r.restricted = true;
  const Rect half = rect.half();
  if (cfg.k < counting_lower_bound(rect) || cfg.k > half.area()) {
    return empty_report(cfg_r);
  }

  const auto positions = make_positions(half, rect.width(), cfg.order);
  std::vector<Point> seed;
  int seed_cursor = 0;
  if (rect.sx >= 1) {
    if (cfg.k < 2) return empty_report(cfg_r);
    seed = {{0, 0}, {1, 0}};
    seed_cursor = 1;
  } else {
    seed = {{0, 0}};
    seed_cursor = 0;
  }
  return run_engine(cfg_r, rect, positions, seed, seed_cursor);
}

MinKResult min_k(Rect rect, bool restricted, const SearchConfig& base,
                 KminCache* cache) {
  SearchConfig cfg = base;
  cfg.rect = rect;
  cfg.restricted = false;
  auto run = [&](int k) {
    cfg.k = k;
    return restricted ? find_bases_restricted_direct(cfg) : find_bases(cfg);
  };
  if (restricted && !rect.even_dims()) {
    throw std::invalid_argument(
        "restricted minimum requires even dimensions, got " + to_string(rect));
  }
  const std::int64_t cells = restricted ? rect.half().area() : rect.area();

  if (cache) {
    if (auto hit = cache->get(rect, restricted)) {
      SearchReport report = run(hit->k);
      if (report.solution_count > 0) return {hit->k, std::move(report)};
      std::fprintf(stderr,
                   "warning: cached k=%d for %s%s yields no solutions; "
                   "recomputing\n",
                   hit->k, to_string(rect).c_str(),
                   restricted ? " (restricted)" : "");
    }
  }

  std::uint64_t nodes = 0;
  for (int k = counting_lower_bound(rect); k <= cells; ++k) {
    SearchReport report = run(k);
    nodes += report.nodes_visited;
    if (report.solution_count > 0) {
      if (cache) cache->put(rect, restricted, {k, nodes, "1"});
      return {k, std::move(report)};
    }
  }
  throw std::logic_error("min_k: no basis found up to the cell count");
}

}  // namespace planar

#include "planar/mim.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "planar/bounds.hpp"
#include "planar/cache.hpp"
#include "planar/coverage.hpp"
#include "planar/symmetry.hpp"

namespace planar {

namespace {

std::vector<Point> mirrored(std::span<const Point> pts, bool mx, bool my,
                            int hx, int hy) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (Point p : pts) {
    out.push_back({mx ? hx - p.x : p.x, my ? hy - p.y : p.y});
  }
  return out;
}

bool strip_covered(const std::vector<Point>& a, const std::vector<Point>& b,
                   Rect strip) {
  CoverageGrid grid(strip);
  for (Point p : a) grid.place(p);
  for (Point p : b) grid.place(p);
  return grid.covers_rect();
}

// One mirrored candidate pair, kept after the strip filter.
struct GluedPair {
  std::vector<Point> first;   // absolute coordinates
  std::vector<Point> second;  // absolute coordinates
};

}  // namespace

std::shared_ptr<const std::vector<Basis>> ComponentListCache::get(
    Rect comp, int k, const SearchConfig& base) {
  const auto key = std::make_tuple(comp.sx, comp.sy, k);
  if (auto it = lists_.find(key); it != lists_.end()) return it->second;
  SearchConfig cfg = base;
  cfg.rect = comp;
  cfg.k = k;
  cfg.restricted = false;
  cfg.count_only = false;
  auto list = std::make_shared<std::vector<Basis>>(
      std::move(find_bases(cfg).solutions));
  lists_.emplace(key, list);
  return list;
}

QuadrantPlan plan_quadrants(Rect rect, const SearchConfig& base,
                            KminCache* cache) {
  if (!rect.even_dims()) {
    throw std::invalid_argument("MIM requires even dimensions, got " +
                                to_string(rect));
  }
  QuadrantPlan plan;
  plan.rect = rect;
  plan.hx = rect.sx / 2;
  plan.hy = rect.sy / 2;
  if (plan.hx < 1 || plan.hy < 1) {
    throw std::invalid_argument(
        "MIM requires h_x, h_y >= 1; use the direct restricted search for " +
        to_string(rect));
  }
  plan.ax = plan.hx / 2;
  plan.ay = plan.hy / 2;
  plan.bx = plan.hx - plan.ax - 1;
  plan.by = plan.hy - plan.ay - 1;
  plan.component[0] = Rect(plan.ax, plan.ay);
  plan.component[1] = Rect(plan.bx, plan.ay);
  plan.component[2] = Rect(plan.bx, plan.by);
  plan.component[3] = Rect(plan.ax, plan.by);
  for (int q = 0; q < 4; ++q) {
    plan.k_min[q] = min_k(plan.component[q], false, base, cache).k;
    plan.cells[q] = plan.component[q].area();
  }
  return plan;
}

bool pair_glue_check(const Basis& a_left, const Basis& a_right, Rect strip) {
  CoverageGrid grid(strip);
  for (Point p : a_left) grid.place(p);
  for (Point p : a_right) {
    if (!a_left.contains(p)) grid.place(p);
  }
  return grid.covers_rect();
}

SearchReport mim_find(int k, Rect rect, const MimOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  const QuadrantPlan plan = plan_quadrants(rect, opts.base, opts.kmin_cache);
  const int hx = plan.hx, hy = plan.hy;

  ComponentListCache local_lists;
  ComponentListCache& lists = opts.lists ? *opts.lists : local_lists;

  SearchReport report;
  report.k = k;
  report.rect = rect;
  report.restricted = true;

  // Strips covered exclusively by the sums of one neighboring pair. Top and
  // right are expressed in mirrored local frames so all four are anchored at
  // the origin.
  const Rect bottom_strip(rect.sx, plan.ay);
  const Rect top_strip(rect.sx, plan.by);
  const Rect left_strip(plan.ax, rect.sy);
  const Rect right_strip(plan.bx, rect.sy);

  for (int k1 = plan.k_min[0];
       k1 <= std::min<std::int64_t>(
                 plan.cells[0],
                 k - plan.k_min[1] - plan.k_min[2] - plan.k_min[3]);
       ++k1) {
    for (int k2 = plan.k_min[1];
         k2 <= std::min<std::int64_t>(
                   plan.cells[1], k - k1 - plan.k_min[2] - plan.k_min[3]);
         ++k2) {
      for (int k3 = plan.k_min[2];
           k3 <= std::min<std::int64_t>(plan.cells[2],
                                        k - k1 - k2 - plan.k_min[3]);
           ++k3) {
        const int k4 = k - k1 - k2 - k3;
        if (k4 < plan.k_min[3] || k4 > plan.cells[3]) continue;

        AllocationStats astat;
        astat.alloc = {k1, k2, k3, k4};

        // Glue the pair with fewer extra elements first; it has fewer
        // candidates and is the more likely to rule the allocation out, in
        // which case the other component lists are never generated.
        const int extra_bottom =
            (k1 - plan.k_min[0]) + (k2 - plan.k_min[1]);
        const int extra_top = (k4 - plan.k_min[3]) + (k3 - plan.k_min[2]);
        const bool bottom_first = extra_bottom <= extra_top;

        auto build_bottom = [&]() {
          auto list_i = lists.get(plan.component[0], k1, opts.base);
          auto list_ii = lists.get(plan.component[1], k2, opts.base);
          std::vector<GluedPair> kept;
          for (const Basis& bi : *list_i) {
            std::vector<Point> a_i(bi.begin(), bi.end());
            for (const Basis& bii : *list_ii) {
              auto a_ii = mirrored(bii.points(), true, false, hx, hy);
              if (!opts.pair_prune || strip_covered(a_i, a_ii, bottom_strip)) {
                kept.push_back({a_i, std::move(a_ii)});
              }
            }
          }
          return kept;
        };
        auto build_top = [&]() {
          auto list_iii = lists.get(plan.component[2], k3, opts.base);
          auto list_iv = lists.get(plan.component[3], k4, opts.base);
          std::vector<GluedPair> kept;
          for (const Basis& biv : *list_iv) {
            // Filter in the y-mirrored frame where the strip sits at the
            // origin; keep absolute coordinates for the glue.
            auto iv_local = std::vector<Point>(biv.begin(), biv.end());
            auto a_iv = mirrored(biv.points(), false, true, hx, hy);
            for (const Basis& biii : *list_iii) {
              auto iii_local_x = mirrored(biii.points(), true, false, hx, hy);
              if (!opts.pair_prune ||
                  strip_covered(iv_local, iii_local_x, top_strip)) {
                kept.push_back(
                    {a_iv, mirrored(biii.points(), true, true, hx, hy)});
              }
            }
          }
          return kept;
        };

        std::vector<GluedPair> first_kept =
            bottom_first ? build_bottom() : build_top();
        astat.first_pairs_kept = first_kept.size();
        if (first_kept.empty()) {
          astat.pruned_after_first_pair = true;
          if (opts.stats) opts.stats->allocations.push_back(astat);
          continue;
        }
        std::vector<GluedPair> second_kept =
            bottom_first ? build_top() : build_bottom();
        astat.second_pairs_kept = second_kept.size();

        const auto& bottom_kept = bottom_first ? first_kept : second_kept;
        const auto& top_kept = bottom_first ? second_kept : first_kept;
        {
          auto list_i = lists.get(plan.component[0], k1, opts.base);
          auto list_ii = lists.get(plan.component[1], k2, opts.base);
          auto list_iii = lists.get(plan.component[2], k3, opts.base);
          auto list_iv = lists.get(plan.component[3], k4, opts.base);
          astat.raw_combinations =
              static_cast<std::uint64_t>(list_i->size()) * list_ii->size() *
              list_iii->size() * list_iv->size();
        }

        // The cross product over component combinations is partitioned by
        // bottom pair; per-index buckets keep the merge deterministic.
        std::vector<std::vector<Basis>> found(bottom_kept.size());
        std::atomic<std::uint64_t> full_checks{0};
        auto glue_row = [&](std::size_t bi) {
          const GluedPair& bp = bottom_kept[bi];
          std::uint64_t checks = 0;
          for (const GluedPair& tp : top_kept) {
            // bp = (A_I, A_II), tp = (A_IV, A_III), absolute coordinates.
            if (opts.pair_prune) {
              // Left pair in place; right pair via the x-mirrored frame.
              if (!strip_covered(bp.first, tp.first, left_strip)) continue;
              auto ii_local = mirrored(bp.second, true, false, hx, hy);
              auto iii_local = mirrored(tp.second, true, false, hx, hy);
              if (!strip_covered(ii_local, iii_local, right_strip)) continue;
            }
            ++checks;
            CoverageGrid grid(rect);
            for (Point p : bp.first) grid.place(p);
            for (Point p : bp.second) grid.place(p);
            for (Point p : tp.first) grid.place(p);
            for (Point p : tp.second) grid.place(p);
            if (grid.covers_rect()) {
              std::vector<Point> pts(grid.support().begin(),
                                     grid.support().end());
              found[bi].push_back(Basis(std::move(pts)));
            }
          }
          full_checks.fetch_add(checks, std::memory_order_relaxed);
        };

        const int threads = opts.base.threads > 0
                                ? opts.base.threads
                                : static_cast<int>(std::max(
                                      1u, std::thread::hardware_concurrency()));
        if (threads > 1 && bottom_kept.size() > 1) {
          std::atomic<std::size_t> next{0};
          auto work = [&]() {
            for (;;) {
              const std::size_t i = next.fetch_add(1);
              if (i >= bottom_kept.size()) return;
              glue_row(i);
            }
          };
          std::vector<std::thread> pool;
          const std::size_t nw = std::min<std::size_t>(
              static_cast<std::size_t>(threads), bottom_kept.size());
          for (std::size_t t = 0; t < nw; ++t) pool.emplace_back(work);
          for (auto& th : pool) th.join();
        } else {
          for (std::size_t bi = 0; bi < bottom_kept.size(); ++bi) glue_row(bi);
        }
        astat.full_checks = full_checks.load();
        for (auto& bucket : found) {
          astat.found += bucket.size();
          for (auto& b : bucket) report.solutions.push_back(std::move(b));
        }
        if (opts.stats) opts.stats->allocations.push_back(astat);
      }
    }
  }

  std::sort(report.solutions.begin(), report.solutions.end());
  report.solution_count = report.solutions.size();
  report.unique_count =
      count_unique(report.solutions, rect, SymmetryMode::kHalfRect);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

MinKResult min_k_restricted(Rect rect, const MimOptions& opts) {
  if (!rect.even_dims()) {
    throw std::invalid_argument(
        "restricted minimum requires even dimensions, got " + to_string(rect));
  }
  // Shapes whose half rectangle is a single row or column cannot be split
  // into four components; enumerate them directly.
  if (rect.sx < 2 || rect.sy < 2) {
    return min_k(rect, true, opts.base, opts.kmin_cache);
  }

  ComponentListCache local_lists;
  MimOptions sweep = opts;
  if (!sweep.lists) sweep.lists = &local_lists;

  const QuadrantPlan plan =
      plan_quadrants(rect, opts.base, opts.kmin_cache);
  int start = plan.k_min_sum();
  if (opts.kmin_cache) {
    if (auto hit = opts.kmin_cache->get(rect, true)) start = hit->k;
  }
  const std::int64_t cells = rect.half().area();
  for (int k = start; k <= cells; ++k) {
    SearchReport report = mim_find(k, rect, sweep);
    if (report.solution_count > 0) {
      if (opts.kmin_cache) {
        opts.kmin_cache->put(rect, true, {k, report.nodes_visited, "1"});
      }
      return {k, std::move(report)};
    }
  }
  throw std::logic_error("min_k_restricted: no solution up to the cell count");
}

}  // namespace planar

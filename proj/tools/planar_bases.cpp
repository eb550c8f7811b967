// Command-line front end: exact searches, the parametric constructions,
// symmetry counting, bound sweeps and CSV table reproduction.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "planar/bounds.hpp"
#include "planar/cache.hpp"
#include "planar/constructions.hpp"
#include "planar/coverage.hpp"
#include "planar/mim.hpp"
#include "planar/render.hpp"
#include "planar/search.hpp"
#include "planar/symmetry.hpp"
#include "planar/tables.hpp"

namespace {

using namespace planar;

struct GlobalOpts {
  int threads = 0;  // 0 = hardware concurrency
  std::string cache_dir;
  std::string order = "edge-first";
};

TraversalOrder parse_order(const std::string& name) {
  if (name == "rowwise") return TraversalOrder::kRowwise;
  if (name == "edge-first") return TraversalOrder::kEdgeFirst;
  throw CLI::ValidationError("--order must be rowwise or edge-first");
}

SearchConfig base_config(const GlobalOpts& g) {
  SearchConfig cfg;
  cfg.threads = g.threads;
  cfg.order = parse_order(g.order);
  return cfg;
}

std::unique_ptr<KminCache> make_cache(const GlobalOpts& g) {
  std::string dir = g.cache_dir;
  if (dir.empty()) dir = KminCache::env_directory();
  if (dir.empty()) return std::make_unique<KminCache>();
  return std::make_unique<KminCache>(dir);
}

void save_solutions(const std::string& path, const SearchReport& report) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write solution file " + path);
  for (const Basis& b : report.solutions) out << solution_line(b) << '\n';
}

void print_report_line(const SearchReport& r) {
  std::cout << "k=" << r.k << " m=" << r.solution_count;
  if (r.solutions.size() == r.solution_count) {  // not in count-only mode
    std::cout << " m_u=" << r.unique_count;
  }
  std::cout << '\n';
}

void print_stats(const SearchReport& r) {
  std::fprintf(stderr, "nodes=%llu wall_seconds=%.3f\n",
               static_cast<unsigned long long>(r.nodes_visited),
               r.wall_seconds);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Basis> read_solution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<Basis> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(parse_basis(line));
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact solver suite for planar additive bases"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--threads", g.threads,
                 "Worker threads (0 = machine parallelism)");
  app.add_option("--cache-dir", g.cache_dir,
                 "Result cache directory (default: $PLANAR_BASES_CACHE_DIR)");
  app.add_option("--order", g.order, "Traversal order: edge-first | rowwise");

  // search
  std::string rect_arg, save_path, points_arg, in_path, format = "none";
  int k_arg = 0;
  bool restricted = false, count_only = false, print_sols = false,
       stats = false, do_verify = false, half_rect = false;

  auto* search = app.add_subcommand("search", "All admissible k-bases");
  search->add_option("--rect", rect_arg, "Target WxH, e.g. 7x7")->required();
  search->add_option("--k", k_arg, "Basis cardinality")->required();
  search->add_flag("--restricted", restricted,
                   "Enumerate restricted bases (direct half-rect search)");
  search->add_flag("--count-only", count_only, "Report m only, store nothing");
  search->add_flag("--print", print_sols, "Print one JSON basis per line");
  search->add_option("--save", save_path, "Write solutions to a file");
  search->add_flag("--stats", stats, "Node and timing stats on stderr");

  auto* min_cmd = app.add_subcommand("min", "Minimal basis size k");
  min_cmd->add_option("--rect", rect_arg)->required();
  min_cmd->add_option("--save", save_path);
  min_cmd->add_flag("--stats", stats);

  auto* mim_cmd = app.add_subcommand("mim", "Restricted k-bases via MIM");
  mim_cmd->add_option("--rect", rect_arg)->required();
  mim_cmd->add_option("--k", k_arg)->required();
  mim_cmd->add_option("--save", save_path);
  mim_cmd->add_flag("--print", print_sols);

  auto* minr_cmd =
      app.add_subcommand("min-restricted", "Minimal restricted size k*");
  minr_cmd->add_option("--rect", rect_arg)->required();
  minr_cmd->add_option("--save", save_path);

  std::string kind;
  int t_x = 1, t_y = 1, sm_sy = 0, sm_t = 1;
  auto* con = app.add_subcommand("construct", "Generate a parametric basis");
  con->add_option("--kind", kind,
                  "l-shaped | boundary | dense-sparse | short-bars | "
                  "stacked-mrose")
      ->required();
  con->add_option("--rect", rect_arg, "Target (l-shaped, boundary)");
  con->add_option("--tx", t_x, "t_x (dense-sparse, short-bars)");
  con->add_option("--ty", t_y, "t_y (dense-sparse, short-bars)");
  con->add_option("--sy", sm_sy, "s_y (stacked-mrose)");
  con->add_option("--t", sm_t, "t (stacked-mrose)");
  con->add_flag("--verify", do_verify, "Check coverage by sumset");
  con->add_option("--format", format, "ascii-grid | json | csv | none");

  auto* ver = app.add_subcommand("verify", "Classify a basis against a rect");
  ver->add_option("--rect", rect_arg)->required();
  ver->add_option("--in", in_path, "File with a JSON basis");
  ver->add_option("--points", points_arg, "Inline points x,y;x,y;...");

  auto* canon = app.add_subcommand("canonical-count",
                                   "Count symmetry-unique bases in a file");
  canon->add_option("--rect", rect_arg)->required();
  canon->add_option("--in", in_path)->required();
  canon->add_flag("--half-rect", half_rect,
                  "Count under half-rect symmetry (restricted solutions)");

  std::string table_name;
  int max_s = 8, max_sx = -1;
  auto* tab = app.add_subcommand("table", "Reproduce a result table as CSV");
  tab->add_option("--name", table_name,
                  "squares | squares-restricted | rects | rects-restricted | "
                  "sy2-restricted")
      ->required();
  tab->add_option("--max-s", max_s, "Largest square side");
  tab->add_option("--max-sx", max_sx, "Largest s_x (rect tables)");

  bool constants = false;
  int height = 1;
  auto* bnd = app.add_subcommand("bounds", "Efficiency bounds");
  bnd->add_flag("--constants", constants,
                "Print the four asymptotic upper-bound constants");
  bnd->add_option("--height", height, "Strip height (1, 2 or 4)");
  bnd->add_flag("--restricted", restricted);
  bnd->add_option("--max-sx", max_sx, "Sweep limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  auto cache = make_cache(g);
  const SearchConfig base = base_config(g);

  if (search->parsed()) {
    SearchConfig cfg = base;
    cfg.rect = parse_rect(rect_arg);
    cfg.k = k_arg;
    cfg.count_only = count_only;
    const SearchReport report =
        restricted ? find_bases_restricted_direct(cfg) : find_bases(cfg);
    print_report_line(report);
    if (stats) print_stats(report);
    if (!save_path.empty()) save_solutions(save_path, report);
    if (print_sols) {
      for (const Basis& b : report.solutions)
        std::cout << solution_line(b) << '\n';
    }
    // a k no search could ever satisfy counts as infeasible input
    const std::int64_t cells =
        restricted ? cfg.rect.half().area() : cfg.rect.area();
    if (k_arg < counting_lower_bound(cfg.rect) || k_arg > cells) {
      std::fprintf(stderr, "note: k=%d is infeasible for %s\n", k_arg,
                   to_string(cfg.rect).c_str());
      return 1;
    }
    return 0;
  }

  if (min_cmd->parsed()) {
    const Rect rect = parse_rect(rect_arg);
    const auto result = min_k(rect, false, base, cache.get());
    print_report_line(result.report);
    if (stats) print_stats(result.report);
    if (!save_path.empty()) save_solutions(save_path, result.report);
    return 0;
  }

  if (mim_cmd->parsed()) {
    MimOptions opts;
    opts.base = base;
    opts.kmin_cache = cache.get();
    const SearchReport report = mim_find(k_arg, parse_rect(rect_arg), opts);
    print_report_line(report);
    if (!save_path.empty()) save_solutions(save_path, report);
    if (print_sols) {
      for (const Basis& b : report.solutions)
        std::cout << solution_line(b) << '\n';
    }
    return 0;
  }

  if (minr_cmd->parsed()) {
    MimOptions opts;
    opts.base = base;
    opts.kmin_cache = cache.get();
    const auto result = min_k_restricted(parse_rect(rect_arg), opts);
    std::cout << "k_star=" << result.k << " m=" << result.report.solution_count
              << " m_u=" << result.report.unique_count << '\n';
    if (!save_path.empty()) save_solutions(save_path, result.report);
    return 0;
  }

  if (con->parsed()) {
    Construction c;
    if (kind == "l-shaped") {
      c = l_shaped(parse_rect(rect_arg));
    } else if (kind == "boundary") {
      c = boundary(parse_rect(rect_arg));
    } else if (kind == "dense-sparse") {
      c = dense_sparse(t_x, t_y);
    } else if (kind == "short-bars") {
      c = short_bars(t_x, t_y);
    } else if (kind == "stacked-mrose") {
      c = stacked_mrose(sm_sy, sm_t);
    } else {
      throw CLI::ValidationError("unknown construction kind '" + kind + "'");
    }
    std::cout << "kind=" << kind << " target=" << to_string(c.target)
              << " k=" << c.basis.size();
    bool verified = true;
    if (do_verify) {
      verified = covers(c.basis, c.target);
      std::cout << (verified ? " VERIFIED" : " FAILED");
    }
    std::cout << '\n';
    if (format == "ascii-grid") {
      std::cout << render_ascii(c.basis, c.target);
    } else if (format == "json") {
      std::cout << render_json(c.basis, c.target) << '\n';
    } else if (format == "csv") {
      std::cout << render_csv(c.basis);
    } else if (format != "none") {
      throw CLI::ValidationError("unknown format '" + format + "'");
    }
    if (do_verify && !verified) return 2;
    return 0;
  }

  if (ver->parsed()) {
    const Rect rect = parse_rect(rect_arg);
    Basis basis;
    if (!in_path.empty()) {
      basis = parse_basis(read_file(in_path));
    } else if (!points_arg.empty()) {
      basis = parse_points_arg(points_arg);
    } else {
      throw CLI::ValidationError("verify needs --in or --points");
    }
    const Classification c = classify(basis, rect);
    const auto grid = sumset(basis, rect);
    std::cout << "k=" << basis.size() << " admissible=" << c.admissible
              << " restricted=" << c.restricted << " is_basis=" << c.is_basis
              << " exact=" << c.exact << " gaps=" << grid.gap_count() << '\n';
    return c.is_basis ? 0 : 1;
  }

  if (canon->parsed()) {
    const Rect rect = parse_rect(rect_arg);
    const auto sols = read_solution_file(in_path);
    const auto mode =
        half_rect ? SymmetryMode::kHalfRect : SymmetryMode::kFullRect;
    std::cout << "m=" << sols.size() << " m_u=" << count_unique(sols, rect, mode)
              << '\n';
    return 0;
  }

  if (tab->parsed()) {
    const int lim = max_sx >= 0 ? max_sx : max_s;
    if (table_name == "squares") {
      std::cout << table_squares(max_s, base, cache.get());
    } else if (table_name == "squares-restricted") {
      std::cout << table_squares_restricted(max_s, base, cache.get());
    } else if (table_name == "rects") {
      std::cout << table_rects(lim, base, cache.get());
    } else if (table_name == "rects-restricted") {
      std::cout << table_rects_restricted(lim, base, cache.get());
    } else if (table_name == "sy2-restricted") {
      std::cout << table_sy2_restricted(lim, base, cache.get());
    } else {
      throw CLI::ValidationError("unknown table '" + table_name + "'");
    }
    return 0;
  }

  if (bnd->parsed()) {
    if (constants) {
      std::printf("height=1 restricted=0 c_bound=%.4f\n",
                  upper_bound_constant(1, false));
      std::printf("height=2 restricted=0 c_bound=%.4f\n",
                  upper_bound_constant(2, false));
      std::printf("height=2 restricted=1 c_bound=%.4f\n",
                  upper_bound_constant(2, true));
      std::printf("height=4 restricted=1 c_bound=%.4f\n",
                  upper_bound_constant(4, true));
      return 0;
    }
    if (max_sx < 0) throw CLI::ValidationError("bounds needs --max-sx");
    const auto rows =
        empirical_bound_check(height, restricted, max_sx, base, cache.get());
    std::cout << "s_x,k,N,c,bound,exceeds\n";
    for (const auto& r : rows) {
      std::printf("%d,%d,%lld,%.6f,%.6f,%d\n", r.s_x, r.k,
                  static_cast<long long>(r.area), r.c, r.bound,
                  r.exceeds ? 1 : 0);
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 2;
  }
}

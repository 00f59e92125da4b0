#include "uglov/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "uglov/canonical.hpp"
#include "uglov/hecke.hpp"

namespace uglov {

namespace {

struct CellResult {
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> messages;
};

struct Context {
  const VerifyOptions& opts;
  std::atomic<long long> visited{0};

  void spend(long long bipartitions) {
    if (visited.fetch_add(bipartitions) + bipartitions > opts.budget)
      throw budget_exceeded(opts.budget);
  }
};

void note(CellResult& r, const std::string& msg) {
  ++r.failures;
  if (r.messages.size() < 8) r.messages.push_back(msg);
}

std::vector<std::vector<Bipartition>> levels_for(Context& ctx, Modulus e,
                                                 const NodeOrder& order, int max_rank) {
  auto levels = enumerate_levels(e, order, max_rank);
  long long total = 0;
  for (const auto& level : levels) total += static_cast<long long>(level.size());
  ctx.spend(total);
  return levels;
}

// Run one cell per (e, window charge) pair, fan out over a bounded pool.
SuiteResult run_window_cells(
    const char* name, Context& ctx,
    const std::function<CellResult(int, Charge)>& cell) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<int, Charge>> cells;
  for (int e = std::max(2, ctx.opts.e_min); e <= ctx.opts.e_max; ++e)
    for (int s0 = 0; s0 < e; ++s0)
      for (int s1 = s0; s1 < e; ++s1) {
        Charge c{s0, s1};
        if (ctx.opts.window && !(c == *ctx.opts.window)) continue;
        cells.emplace_back(e, c);
      }

  SuiteResult out{name, 0, 0, 0.0, {}};
  int jobs = std::max(1, ctx.opts.jobs);
  std::size_t next = 0;
  while (next < cells.size()) {
    std::vector<std::future<CellResult>> batch;
    for (int j = 0; j < jobs && next < cells.size(); ++j, ++next) {
      auto [e, charge] = cells[next];
      batch.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async,
                                 cell, e, charge));
    }
    for (auto& f : batch) {
      CellResult r = f.get();
      out.checks += r.checks;
      out.failures += r.failures;
      for (auto& m : r.messages)
        if (out.messages.size() < 8) out.messages.push_back(std::move(m));
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::string where(int e, Charge c, int n, const Bipartition& bp) {
  return "e=" + std::to_string(e) + " charge=(" + std::to_string(c.s0) + "," +
         std::to_string(c.s1) + ") n=" + std::to_string(n) + " " + to_text(bp);
}

} // namespace

SuiteResult verify_main(const VerifyOptions& opts) {
  Context ctx{opts};
  return run_window_cells("main", ctx, [&](int e, Charge charge) {
    CellResult r;
    Modulus mod = Modulus::finite(e);
    NodeOrder from = NodeOrder::uglov(charge);
    NodeOrder to = NodeOrder::uglov(Charge{charge.s0, charge.s1 + e});
    auto levels = levels_for(ctx, mod, from, opts.n_max);
    for (int n = opts.n_min; n <= opts.n_max; ++n) {
      for (const Bipartition& bp : levels[static_cast<std::size_t>(n)]) {
        ++r.checks;
        if (pair_swap(bp, charge) != relabel_recursive(bp, mod, from, to))
          note(r, "pair_swap != crystal relabel at " + where(e, charge, n, bp));
      }
    }
    return r;
  });
}

SuiteResult verify_flotw(const VerifyOptions& opts) {
  Context ctx{opts};
  return run_window_cells("flotw", ctx, [&](int e, Charge charge) {
    CellResult r;
    Modulus mod = Modulus::finite(e);
    auto levels = levels_for(ctx, mod, NodeOrder::uglov(charge), opts.n_max);
    for (int n = opts.n_min; n <= opts.n_max; ++n) {
      std::set<Bipartition> direct;
      auto all = all_bipartitions(n);
      ctx.spend(static_cast<long long>(all.size()));
      for (const Bipartition& bp : all)
        if (is_flotw(bp, e, charge)) direct.insert(bp);
      const auto& level = levels[static_cast<std::size_t>(n)];
      std::set<Bipartition> bfs(level.begin(), level.end());
      ++r.checks;
      if (bfs != direct)
        note(r, "crystal level != flotw filter at " + where(e, charge, n, Bipartition{}));
    }
    return r;
  });
}

SuiteResult verify_stabilize(const VerifyOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteResult out{"stabilize", 0, 0, 0.0, {}};
  Context ctx{opts};
  auto reduced = [](int v, int e) { return ((v % e) + e) % e; };
  for (int e = std::max(2, opts.e_min); e <= opts.e_max; ++e) {
    Modulus mod = Modulus::finite(e);
    for (int n = opts.n_min; n <= opts.n_max; ++n) {
      for (int base : {0, 1}) {
        for (int gap : {n, n + 1}) {
          Charge c{base, base + gap}; // s1 - s0 > n-1
          auto uglov_set = levels_for(ctx, mod, NodeOrder::uglov(c), n).back();
          auto minus_set =
              levels_for(ctx, mod,
                         NodeOrder::asymptotic_minus(reduced(c.s0, e), reduced(c.s1, e)), n)
                  .back();
          ++out.checks;
          if (uglov_set != minus_set) {
            ++out.failures;
            if (out.messages.size() < 8)
              out.messages.push_back("minus set mismatch at " + where(e, c, n, Bipartition{}));
          }
        }
        for (int gap : {n - e, n + 1 - e}) {
          Charge c{base + gap, base}; // s0 - s1 > n-1-e
          auto uglov_set = levels_for(ctx, mod, NodeOrder::uglov(c), n).back();
          auto plus_set =
              levels_for(ctx, mod,
                         NodeOrder::asymptotic_plus(reduced(c.s0, e), reduced(c.s1, e)), n)
                  .back();
          ++out.checks;
          if (uglov_set != plus_set) {
            ++out.failures;
            if (out.messages.size() < 8)
              out.messages.push_back("plus set mismatch at " + where(e, c, n, Bipartition{}));
          }
        }
      }
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

SuiteResult verify_degree_max(const VerifyOptions& opts) {
  Context ctx{opts};
  return run_window_cells("degree-max", ctx, [&](int e, Charge charge) {
    CellResult r;
    Modulus mod = Modulus::finite(e);
    auto levels = levels_for(ctx, mod, NodeOrder::uglov(charge), opts.n_max);
    for (int n = opts.n_min; n <= opts.n_max; ++n) {
      for (const Bipartition& bp : levels[static_cast<std::size_t>(n)]) {
        ++r.checks;
        try {
          if (top_degree_term(bp, charge) != pair_swap(bp, charge))
            note(r, "top-degree term != pair_swap at " + where(e, charge, n, bp));
        } catch (const error& ex) {
          note(r, std::string(ex.what()) + " at " + where(e, charge, n, bp));
        }
      }
    }
    return r;
  });
}

SuiteResult verify_cardinality(const VerifyOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteResult out{"cardinality", 0, 0, 0.0, {}};
  Context ctx{opts};
  int e_hi = std::min(opts.e_max, 3);
  int n_hi = std::min(opts.n_max, 7);
  for (int e = std::max(2, opts.e_min); e <= e_hi; ++e) {
    Modulus mod = Modulus::finite(e);
    for (int s0 = 0; s0 < e; ++s0) {
      for (int s1 = s0; s1 < e; ++s1) {
        Charge src{s0, s1};
        if (opts.window && !(src == *opts.window)) continue;
        std::vector<ChargeTarget> targets = {
            ChargeTarget::exact(Charge{s0 + e, s1 + e}),
            ChargeTarget::exact(Charge{s1, s0 + e}),
            ChargeTarget::exact(Charge{s0, s1 + e}),
            ChargeTarget::exact(Charge{s0, s1 + 2 * e}),
            ChargeTarget::exact(Charge{s1 - e, s0}),
            ChargeTarget::asymptotic_minus(s0, s1),
            ChargeTarget::asymptotic_plus(s0, s1),
        };
        auto src_levels = levels_for(ctx, mod, NodeOrder::uglov(src), n_hi);
        for (const ChargeTarget& tgt : targets) {
          std::vector<std::vector<Bipartition>> tgt_levels;
          switch (tgt.kind) {
            case ChargeTarget::Kind::exact:
              tgt_levels = levels_for(ctx, mod, NodeOrder::uglov(tgt.charge), n_hi);
              break;
            case ChargeTarget::Kind::asymptotic_minus:
              tgt_levels = levels_for(
                  ctx, mod, NodeOrder::asymptotic_minus(tgt.charge.s0, tgt.charge.s1), n_hi);
              break;
            case ChargeTarget::Kind::asymptotic_plus:
              tgt_levels = levels_for(
                  ctx, mod, NodeOrder::asymptotic_plus(tgt.charge.s0, tgt.charge.s1), n_hi);
              break;
          }
          for (int n = opts.n_min; n <= n_hi; ++n) {
            const auto& src_set = src_levels[static_cast<std::size_t>(n)];
            const auto& tgt_set = tgt_levels[static_cast<std::size_t>(n)];
            ++out.checks;
            if (src_set.size() != tgt_set.size()) {
              ++out.failures;
              if (out.messages.size() < 8)
                out.messages.push_back("cardinality mismatch at " +
                                       where(e, src, n, Bipartition{}));
              continue;
            }
            std::set<Bipartition> image;
            for (const Bipartition& bp : src_set) image.insert(relabel(bp, e, src, tgt));
            ++out.checks;
            if (image != std::set<Bipartition>(tgt_set.begin(), tgt_set.end())) {
              ++out.failures;
              if (out.messages.size() < 8)
                out.messages.push_back("relabel image mismatch at " +
                                       where(e, src, n, Bipartition{}));
            }
          }
        }
      }
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

SuiteResult verify_inverse(const VerifyOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteResult out{"inverse", 0, 0, 0.0, {}};
  Context ctx{opts};
  std::mt19937 rng(opts.seed);
  std::map<std::pair<int, Charge>, std::vector<std::vector<Bipartition>>> cache;
  std::vector<std::pair<int, Charge>> windows;
  for (int e = std::max(2, opts.e_min); e <= opts.e_max; ++e)
    for (int s0 = 0; s0 < e; ++s0)
      for (int s1 = s0; s1 < e; ++s1) {
        Charge c{s0, s1};
        if (opts.window && !(c == *opts.window)) continue;
        windows.emplace_back(e, c);
      }
  if (windows.empty()) {
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
  }
  for (int i = 0; i < opts.samples; ++i) {
    auto [e, charge] = windows[rng() % windows.size()];
    auto key = std::make_pair(e, charge);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, levels_for(ctx, Modulus::finite(e),
                                         NodeOrder::uglov(charge), opts.n_max))
               .first;
    }
    int n = opts.n_min + static_cast<int>(rng() % (opts.n_max - opts.n_min + 1));
    const auto& level = it->second[static_cast<std::size_t>(n)];
    if (level.empty()) continue;
    const Bipartition& bp = level[rng() % level.size()];
    ++out.checks;
    int m = canonical_padding(bp, charge);
    Bipartition up = pair_swap(bp, charge);
    bool ok = up == pair_swap(bp, charge, m + 3);
    ok = ok && pair_swap_inverse(up, charge) == bp;
    ok = ok && pair_swap_inverse(up, charge, canonical_padding(up, charge) + 2) == bp;
    if (!ok) {
      ++out.failures;
      if (out.messages.size() < 8)
        out.messages.push_back("inverse/padding law failed at " + where(e, charge, n, bp));
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

SuiteResult verify_hecke(const VerifyOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteResult out{"hecke", 0, 0, 0.0, {}};
  (void)opts;
  for (int l = 2; l <= 24; l += 2) {
    for (int a = 1; a <= l; ++a) {
      for (int b = 1; b <= l; ++b) {
        ++out.checks;
        bool solvable = false;
        for (int d = 0; d < l; ++d)
          if ((a * d + l / 2 - b) % l == 0) { solvable = true; break; }
        int g = std::gcd(a, l);
        bool degenerate = l / g < 2;
        try {
          BasicSet bs = basic_set_charge(a, b, l);
          bool good = solvable && !degenerate;
          good = good && bs.e == l / g;
          good = good && (a * bs.d + l / 2 - b) % l == 0 && bs.d >= 0 && bs.d < l;
          for (int d = 0; d < bs.d; ++d)
            if ((a * d + l / 2 - b) % l == 0) good = false; // d must be least
          // strict double inequality, cross-multiplied
          long long lhs = static_cast<long long>(a) * (bs.d + bs.p * bs.e);
          long long rhs = static_cast<long long>(a) * (bs.d + (bs.p + 1) * bs.e);
          good = good && lhs < b && b < rhs;
          good = good && bs.charge.s1 == 0 && bs.charge.s0 == bs.d + bs.p * bs.e;
          if (!good) {
            ++out.failures;
            if (out.messages.size() < 8)
              out.messages.push_back("basic set wrong at a=" + std::to_string(a) +
                                     " b=" + std::to_string(b) + " l=" + std::to_string(l));
          }
        } catch (const error&) {
          if (solvable && !degenerate) {
            ++out.failures;
            if (out.messages.size() < 8)
              out.messages.push_back("spurious diagnostic at a=" + std::to_string(a) +
                                     " b=" + std::to_string(b) + " l=" + std::to_string(l));
          }
        }
      }
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::vector<SuiteResult> verify_all(const VerifyOptions& opts) {
  return {verify_main(opts),       verify_flotw(opts),   verify_stabilize(opts),
          verify_degree_max(opts), verify_cardinality(opts), verify_inverse(opts),
          verify_hecke(opts)};
}

std::vector<SuiteResult> run_suites(const std::string& name, const VerifyOptions& opts) {
  if (name == "main") return {verify_main(opts)};
  if (name == "flotw") return {verify_flotw(opts)};
  if (name == "stabilize") return {verify_stabilize(opts)};
  if (name == "degree-max") return {verify_degree_max(opts)};
  if (name == "cardinality") return {verify_cardinality(opts)};
  if (name == "inverse") return {verify_inverse(opts)};
  if (name == "hecke") return {verify_hecke(opts)};
  if (name == "all") return verify_all(opts);
  throw std::invalid_argument("unknown verification suite: " + name);
}

} // namespace uglov

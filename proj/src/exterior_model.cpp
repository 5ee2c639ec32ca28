#include "ellarr/exterior_model.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <stdexcept>
#include <thread>

#include "ellarr/binomial.hpp"
#include "ellarr/errors.hpp"
#include "ellarr/field.hpp"
#include "ellarr/tutte.hpp"

namespace ellarr {

namespace {

SignedCombination normalized(const std::map<Monomial, int>& acc) {
  SignedCombination out;
  for (const auto& [mono, c] : acc)
    if (c) out.push_back({mono, c});
  return out;
}

// ----- fixed-popcount bitmaskery: masks of a given popcount in ascending
// integer order, with combinatorial rank/unrank for column indexing -----

uint64_t mask_rank(uint64_t mask) {
  uint64_t r = 0;
  unsigned i = 1;
  while (mask) {
    unsigned s = static_cast<unsigned>(std::countr_zero(mask));
    mask &= mask - 1;
    r += binom64(s, i++);
  }
  return r;
}

uint64_t mask_unrank(uint64_t r, unsigned bits, unsigned count) {
  uint64_t mask = 0;
  for (unsigned i = count; i >= 1; --i) {
    unsigned s = i - 1;
    while (s + 1 < bits && binom64(s + 1, i) <= r) ++s;
    mask |= uint64_t(1) << s;
    r -= binom64(s, i);
  }
  return mask;
}

// Calls fn(mask) for every `bits`-bit mask of popcount `count`, ascending.
template <typename F>
void for_each_mask(unsigned bits, unsigned count, F&& fn) {
  if (count > bits) return;
  if (count == 0) {
    fn(uint64_t(0));
    return;
  }
  uint64_t v = (uint64_t(1) << count) - 1;
  uint64_t last = v << (bits - count);
  while (true) {
    fn(v);
    if (v == last) break;
    uint64_t t = v | (v - 1);  // Gosper's next-same-popcount mask
    v = (t + 1) |
        (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
  }
}

struct BlockShape {
  int m = 0, slots = 0;
  Bigrade bg;
  uint64_t wcount = 0, xcount = 0, ncols = 0;

  BlockShape(const ModelContext& ctx, Bigrade b) : m(ctx.m), slots(ctx.slots), bg(b) {
    wcount = binom64(m, b.p);
    xcount = binom64(slots, b.q);
    if (xcount && wcount > (uint64_t(1) << 62) / xcount)
      fail(errc::too_large, "bidegree component overflows the column index");
    ncols = wcount * xcount;
  }
  uint64_t id(const Monomial& mo) const {
    return mask_rank(mo.omega) * xcount + mask_rank(mo.xy);
  }
  Monomial mono(uint64_t id) const {
    return {mask_unrank(id / xcount, m, bg.p),
            mask_unrank(id % xcount, slots, bg.q)};
  }
};

// One bidegree block mod one prime: survivor columns (those not divisible by
// a forest pair ω_t x_t / ω_t y_t — such columns are pivots for free) and the
// incremental elimination of everything else.
struct BlockElim {
  BlockShape shape;
  std::vector<uint32_t> survivors;  // ascending global column ids
  uint64_t killed = 0;
  std::unique_ptr<Eliminator> elim;

  uint64_t rank_ideal() const { return killed + elim->rank(); }
  uint64_t e2() const { return survivors.size() - elim->rank(); }

  int32_t compact(uint64_t gid) const {
    auto it = std::lower_bound(survivors.begin(), survivors.end(),
                               static_cast<uint32_t>(gid));
    if (it == survivors.end() || *it != gid) return -1;  // killed column
    return static_cast<int32_t>(it - survivors.begin());
  }

  FpVec project(const SignedCombination& v, const PrimeField& f) const {
    FpVec row;
    row.reserve(v.size());
    for (const auto& [mono, c] : v) {
      int32_t cid = compact(shape.id(mono));
      if (cid < 0) continue;
      uint32_t val = f.from_int(c);
      if (val) row.push_back({static_cast<uint32_t>(cid), val});
    }
    std::sort(row.begin(), row.end(),
              [](const FpEntry& a, const FpEntry& b) { return a.col < b.col; });
    return row;
  }

  std::vector<Monomial> basis_monomials() const {
    std::vector<Monomial> out;
    for (uint32_t cid : elim->free_columns())
      out.push_back(shape.mono(survivors[cid]));
    return out;
  }
};

BlockElim eliminate_block(const ModelContext& ctx, Bigrade bg, uint32_t prime,
                          MemoryGauge* gauge) {
  BlockElim be{BlockShape(ctx, bg)};
  const BlockShape& shape = be.shape;
  if (shape.ncols > (uint64_t(1) << 31))
    fail(errc::too_large, "bidegree component exceeds 2^31 columns");
  be.survivors.reserve(shape.ncols);
  {
    uint32_t gid = 0;
    for_each_mask(shape.m, bg.p, [&](uint64_t w) {
      for_each_mask(shape.slots, bg.q, [&](uint64_t x) {
        if (!ctx.killed({w, x})) be.survivors.push_back(gid);
        ++gid;
      });
    });
  }
  be.killed = shape.ncols - be.survivors.size();

  PrimeField f(prime);
  uint64_t sum_terms = 0, nrels = 0;
  for (const auto& rel : ctx.relations) {
    if (rel.size() < 2) continue;
    int cp = bg.p - rel[0].mono.omega_degree();
    int cq = bg.q - rel[0].mono.xy_degree();
    if (cp < 0 || cq < 0) continue;
    sum_terms += rel.size();
    ++nrels;
  }
  double est_fill = (nrels && !be.survivors.empty())
                        ? double(sum_terms) / double(nrels) /
                              double(be.survivors.size())
                        : 0.0;
  be.elim = make_eliminator(be.survivors.size(), f, gauge, est_fill);

  FpVec row;
  for (const auto& rel : ctx.relations) {
    // single-term relations are exactly the killed columns
    if (rel.size() < 2) continue;
    int cp = bg.p - rel[0].mono.omega_degree();
    int cq = bg.q - rel[0].mono.xy_degree();
    if (cp < 0 || cq < 0) continue;
    for_each_mask(shape.m, cp, [&](uint64_t cw) {
      for_each_mask(shape.slots, cq, [&](uint64_t cx) {
        Monomial mu{cw, cx};
        row.clear();
        for (const auto& [mono, c] : rel) {
          int s = merge_sign(mono, mu);
          if (!s) continue;
          Monomial prod = merged(mono, mu);
          if (ctx.killed(prod)) continue;
          uint32_t val = f.from_int(int64_t(c) * s);
          if (val)
            row.push_back({static_cast<uint32_t>(be.compact(shape.id(prod))),
                           val});
        }
        if (row.empty()) return;
        std::sort(row.begin(), row.end(), [](const FpEntry& a, const FpEntry& b) {
          return a.col < b.col;
        });
        be.elim->insert(row);
      });
    });
  }
  return be;
}

}  // namespace

ModelContext ModelContext::build(const Graph& g) {
  return from_parts(g, spanning_forest(g));
}

ModelContext ModelContext::from_parts(Graph g, OrientedForest f) {
  if (!g.connected())
    fail(errc::disconnected, "the cohomology model needs a connected graph");
  if (g.m() > 60)
    fail(errc::too_large, "edge bitmasks support at most 60 edges");
  ModelContext ctx;
  ctx.g = std::move(g);
  ctx.forest = std::move(f);
  ctx.m = ctx.g.m();
  ctx.k = ctx.forest.size();
  ctx.slots = 2 * ctx.k;
  if (ctx.slots > 62)
    fail(errc::too_large, "forest slot masks support at most 31 forest edges");
  ctx.circuits = enumerate_circuits(ctx.g);
  ctx.relations = build_relations(ctx.g, ctx.forest, ctx.circuits);
  ctx.gf = e2_dimension_gf(ctx.g);
  ctx.kill_pair_.assign(ctx.m, 0);
  for (int e = 0; e < ctx.m; ++e)
    if (ctx.forest.in_forest(e))
      ctx.kill_pair_[e] = uint64_t(3) << (2 * ctx.forest.rank_of[e]);
  return ctx;
}

uint64_t ModelContext::gf_dim(int p, int q) const {
  return gf.in_support(p, q) ? gf.value(p, q) : 0;
}

bool ModelContext::killed(const Monomial& mono) const {
  uint64_t w = mono.omega;
  while (w) {
    int e = std::countr_zero(w);
    w &= w - 1;
    if (kill_pair_[e] & mono.xy) return true;
  }
  return false;
}

SignedCombination ModelContext::d2_image(const Monomial& mono) const {
  std::map<Monomial, int> acc;
  uint64_t w = mono.omega;
  int position = 0;  // 1-based index of ω_e inside the monomial
  while (w) {
    int e = std::countr_zero(w);
    w &= w - 1;
    ++position;
    int leibniz = (position % 2) ? 1 : -1;
    uint64_t rest = mono.omega & ~(uint64_t(1) << e);
    for (auto [fe, sf] : forest.path[e]) {
      for (auto [he, sh] : forest.path[e]) {
        int sx = 2 * forest.rank_of[fe];
        int sy = 2 * forest.rank_of[he] + 1;
        uint64_t pair = (uint64_t(1) << sx) | (uint64_t(1) << sy);
        if (mono.xy & pair) continue;
        int s = leibniz * sf * sh * pair_insert_sign(mono.xy, sx, sy);
        acc[Monomial{rest, mono.xy | pair}] += s;
      }
    }
  }
  return normalized(acc);
}

SignedCombination ModelContext::d2_image(const SignedCombination& v) const {
  std::map<Monomial, int> acc;
  for (const auto& [mono, c] : v)
    for (const auto& [tm, tc] : d2_image(mono)) acc[tm] += c * tc;
  return normalized(acc);
}

std::vector<Monomial> component_monomials(const ModelContext& ctx,
                                          Bigrade bg) {
  BlockShape shape(ctx, bg);
  if (shape.ncols > (uint64_t(1) << 31))
    fail(errc::too_large, "bidegree component exceeds 2^31 columns");
  std::vector<Monomial> out;
  out.reserve(shape.ncols);
  for_each_mask(ctx.m, bg.p, [&](uint64_t w) {
    for_each_mask(ctx.slots, bg.q, [&](uint64_t x) {
      out.push_back({w, x});
    });
  });
  return out;
}

SparseMatrix ideal_component(const ModelContext& ctx, Bigrade bg) {
  BlockShape shape(ctx, bg);
  if (shape.ncols > (uint64_t(1) << 31))
    fail(errc::too_large, "bidegree component exceeds 2^31 columns");
  SparseMatrix mat;
  mat.cols = shape.ncols;
  std::vector<std::pair<uint32_t, int64_t>> row;
  for (const auto& rel : ctx.relations) {
    int cp = bg.p - rel[0].mono.omega_degree();
    int cq = bg.q - rel[0].mono.xy_degree();
    if (cp < 0 || cq < 0) continue;
    for_each_mask(ctx.m, cp, [&](uint64_t cw) {
      for_each_mask(ctx.slots, cq, [&](uint64_t cx) {
        Monomial mu{cw, cx};
        row.clear();
        for (const auto& [mono, c] : rel) {
          int s = merge_sign(mono, mu);
          if (!s) continue;
          row.emplace_back(static_cast<uint32_t>(shape.id(merged(mono, mu))),
                           int64_t(c) * s);
        }
        if (row.empty()) return;
        std::sort(row.begin(), row.end());
        mat.add_row(row);
      });
    });
  }
  return mat;
}

QuotientResult quotient_dimension(const ModelContext& ctx, Bigrade bg,
                                  const RankOptions& opts) {
  uint64_t expected = ctx.gf_dim(bg.p, bg.q);
  auto seq = prime_sequence(opts.seed);
  QuotientResult qr;
  unsigned attempts = std::max(1u, opts.primes) + opts.retry_budget;
  for (unsigned i = 0; i < attempts && i < seq.size(); ++i) {
    uint32_t prime = seq[i];
    qr.rank.primes_used.push_back(prime);
    BlockElim be = eliminate_block(ctx, bg, prime, opts.gauge);
    if (be.e2() == expected) {
      qr.dim = expected;
      qr.rank.rank = be.rank_ideal();
      qr.rank.certified = Certification::gf_certified;
      qr.basis = be.basis_monomials();
      return qr;
    }
  }
  fail(errc::certification_failed,
       "no prime attained the generating-function dimension at (" +
           std::to_string(bg.p) + "," + std::to_string(bg.q) + ")");
}

SparseMatrix d2_block(const ModelContext& ctx, Bigrade bg, uint32_t prime,
                      const RankOptions& opts) {
  PrimeField f(prime);
  BlockElim src = eliminate_block(ctx, bg, prime, opts.gauge);
  if (src.e2() != ctx.gf_dim(bg.p, bg.q))
    fail(errc::certification_failed, "source block missed its certificate");
  auto src_cols = src.elim->free_columns();
  SparseMatrix mat;
  if (bg.p == 0) {  // no ω to differentiate: the zero map
    mat.cols = 0;
    for (size_t i = 0; i < src_cols.size(); ++i) mat.add_row({});
    return mat;
  }
  Bigrade tgt{bg.p - 1, bg.q + 2};
  BlockElim dst = eliminate_block(ctx, tgt, prime, opts.gauge);
  if (dst.e2() != ctx.gf_dim(tgt.p, tgt.q))
    fail(errc::certification_failed, "target block missed its certificate");
  auto dst_free = dst.elim->free_columns();
  std::vector<int32_t> pos(dst.survivors.size(), -1);
  for (size_t i = 0; i < dst_free.size(); ++i)
    pos[dst_free[i]] = static_cast<int32_t>(i);
  mat.cols = dst_free.size();
  for (uint32_t cid : src_cols) {
    Monomial mu = src.shape.mono(src.survivors[cid]);
    FpVec img = dst.elim->reduce(dst.project(ctx.d2_image(mu), f));
    std::vector<std::pair<uint32_t, int64_t>> row;
    row.reserve(img.size());
    for (const auto& e : img)
      row.emplace_back(static_cast<uint32_t>(pos[e.col]), int64_t(e.val));
    mat.add_row(std::move(row));
  }
  return mat;
}

bool in_ideal(const ModelContext& ctx, const SignedCombination& v,
              uint32_t prime, MemoryGauge* gauge) {
  if (v.empty()) return true;
  Bigrade bg{v.front().mono.omega_degree(), v.front().mono.xy_degree()};
  PrimeField f(prime);
  BlockElim be = eliminate_block(ctx, bg, prime, gauge);
  // Killed columns are themselves ideal members, so project() dropping them
  // is reduction by their (structural) pivots.
  return be.elim->reduce(be.project(v, f)).empty();
}

// ------------------------------ E3 engine ------------------------------

namespace {

struct LinePlan {
  int w = 0;
  std::vector<int> ps;        // support p on this line, descending
  std::vector<char> enabled;  // same indexing
  std::vector<uint64_t> ncols;
  bool any_enabled = false;
};

struct LineBlockRun {
  bool enabled = false;
  uint64_t ncols = 0, killed = 0, rank_ideal = 0;
  uint64_t e2 = 0;
  bool e2_ok = false;
  bool rin_measured = false;
  uint64_t rin = 0;  // rank of d2 from the block above (p+1) into this one
  double millis = 0;
};

struct LineRun {
  uint32_t prime = 0;
  std::vector<LineBlockRun> blocks;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

LineRun run_line(const ModelContext& ctx, const LinePlan& plan, uint32_t prime,
                 MemoryGauge* gauge) {
  LineRun run;
  run.prime = prime;
  run.blocks.resize(plan.ps.size());
  PrimeField f(prime);
  std::vector<Monomial> above_basis;
  bool have_above = false;
  for (size_t i = 0; i < plan.ps.size(); ++i) {
    if (!plan.enabled[i]) {
      have_above = false;
      above_basis.clear();
      continue;
    }
    int p = plan.ps[i];
    int q = plan.w - 2 * p;
    auto t0 = std::chrono::steady_clock::now();
    LineBlockRun& br = run.blocks[i];
    br.enabled = true;
    BlockElim be = eliminate_block(ctx, {p, q}, prime, gauge);
    br.ncols = be.shape.ncols;
    br.killed = be.killed;
    br.rank_ideal = be.rank_ideal();
    br.e2 = be.e2();
    br.e2_ok = (br.e2 == ctx.gf_dim(p, q));
    // Own quotient basis must be read off before foreign rows arrive.
    bool feed_below = (i + 1 < plan.ps.size()) && plan.enabled[i + 1];
    std::vector<Monomial> own_basis;
    if (feed_below) own_basis = be.basis_monomials();
    if (have_above) {
      uint64_t before = be.elim->rank();
      for (const Monomial& mu : above_basis)
        be.elim->insert(be.project(ctx.d2_image(mu), f));
      br.rin = be.elim->rank() - before;
      br.rin_measured = true;
    }
    above_basis = std::move(own_basis);
    have_above = feed_below;
    br.millis = ms_since(t0);
  }
  return run;
}

// Rank of the induced d2 into block index j (from j−1), combined over runs:
// a run counts only if both endpoint blocks hit their GF certificates there.
struct PairRank {
  bool known = false;
  uint64_t rank = 0;
  unsigned agreement = 0;
};

PairRank pair_rank(const LinePlan& plan, const std::vector<LineRun>& runs,
                   size_t j) {
  PairRank pr;
  if (j == 0 || j >= plan.ps.size()) return pr;
  if (!plan.enabled[j] || !plan.enabled[j - 1]) return pr;
  for (const LineRun& run : runs) {
    const auto& above = run.blocks[j - 1];
    const auto& here = run.blocks[j];
    if (!here.enabled || !here.rin_measured || !here.e2_ok || !above.e2_ok)
      continue;
    if (!pr.known || here.rin > pr.rank) {
      pr.known = true;
      pr.rank = here.rin;
      pr.agreement = 1;
    } else if (here.rin == pr.rank) {
      ++pr.agreement;
    }
  }
  return pr;
}

}  // namespace

HodgeTable e3_table(const ModelContext& ctx, const EngineOptions& opts,
                    RunReport* report) {
  const int k = ctx.k;
  MemoryGauge gauge(opts.memory_budget);
  auto seq = prime_sequence(opts.seed);
  const unsigned nprimes =
      std::min<unsigned>(std::max(1u, opts.primes), seq.size());

  // Plan all weight lines w = 2p+q.
  std::vector<LinePlan> plans;
  for (int w = 0; w <= 2 * k; ++w) {
    LinePlan plan;
    plan.w = w;
    for (int p = std::min(k, w / 2); p >= 0; --p) {
      int q = w - 2 * p;
      plan.ps.push_back(p);
      uint64_t nc = 0;
      bool on = true;
      uint64_t wc = binom64(ctx.m, p), xc = binom64(ctx.slots, q);
      if (xc && wc > (uint64_t(1) << 62) / xc) {
        on = false;  // absurdly large; only reachable without a cap
        nc = UINT64_MAX;
      } else {
        nc = wc * xc;
      }
      if (opts.component_cap && nc > *opts.component_cap) on = false;
      if (opts.degree_cap && p + q > *opts.degree_cap + 1) on = false;
      plan.ncols.push_back(nc);
      plan.enabled.push_back(on);
      plan.any_enabled |= on;
    }
    plans.push_back(std::move(plan));
  }

  // First pass: every planned line over the initial primes, parallel over
  // (line, prime) jobs.
  std::vector<std::vector<LineRun>> runs(plans.size());
  {
    struct Job {
      size_t line;
      size_t pi;
    };
    std::vector<Job> jobs;
    for (size_t li = 0; li < plans.size(); ++li) {
      if (!plans[li].any_enabled) continue;
      runs[li].resize(nprimes);
      for (size_t pi = 0; pi < nprimes; ++pi) jobs.push_back({li, pi});
    }
    unsigned nthreads = opts.threads
                            ? opts.threads
                            : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<size_t>(nthreads, jobs.size());
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs.size());
    auto worker = [&] {
      for (size_t j; (j = next.fetch_add(1)) < jobs.size();) {
        try {
          runs[jobs[j].line][jobs[j].pi] =
              run_line(ctx, plans[jobs[j].line], seq[jobs[j].pi], &gauge);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      }
    };
    if (nthreads <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  // Certification check per line; retries walk further into the prime pool.
  unsigned total_retries = 0;
  size_t max_prime_index = nprimes;
  for (size_t li = 0; li < plans.size(); ++li) {
    const LinePlan& plan = plans[li];
    if (!plan.any_enabled) continue;
    auto line_ok = [&]() {
      for (size_t i = 0; i < plan.ps.size(); ++i) {
        if (!plan.enabled[i]) continue;
        bool ok = false;
        for (const LineRun& r : runs[li]) ok |= r.blocks[i].e2_ok;
        if (!ok) return false;
        if (i > 0 && plan.enabled[i - 1] && !pair_rank(plan, runs[li], i).known)
          return false;
      }
      return true;
    };
    unsigned used = 0;
    while (!line_ok()) {
      if (used >= opts.retry_budget || nprimes + used >= seq.size())
        fail(errc::certification_failed,
             "weight line " + std::to_string(plan.w) +
                 " failed to certify against the generating function");
      runs[li].push_back(
          run_line(ctx, plan, seq[nprimes + used], &gauge));
      ++used;
      ++total_retries;
    }
    max_prime_index = std::max(max_prime_index, size_t(nprimes) + used);
  }

  // Assembly.
  HodgeTable table(k);
  RunReport rep;
  Certification weakest = Certification::gf_certified;
  auto weaker = [](Certification a, Certification b) {
    return static_cast<int>(a) > static_cast<int>(b) ? a : b;
  };
  for (size_t li = 0; li < plans.size(); ++li) {
    const LinePlan& plan = plans[li];
    for (size_t i = 0; i < plan.ps.size(); ++i) {
      int p = plan.ps[i];
      int q = plan.w - 2 * p;
      BlockReport br;
      br.bg = {p, q};
      br.ncols = plan.ncols[i];
      br.enabled = plan.enabled[i] != 0;
      if (!br.enabled) {
        rep.blocks.push_back(br);
        continue;
      }
      bool have_stats = false;
      for (const LineRun& r : runs[li]) {
        br.millis += r.blocks[i].millis;
        if (r.blocks[i].e2_ok && !have_stats) {
          have_stats = true;
          br.e2 = r.blocks[i].e2;
          br.killed = r.blocks[i].killed;
          br.rank_ideal = r.blocks[i].rank_ideal;
        }
      }
      PairRank out = pair_rank(plan, runs[li], i + 1);
      if (out.known) {
        br.rank_out = out.rank;
        br.rank_out_agreement = out.agreement;
        weakest = weaker(weakest, out.agreement >= 2
                                      ? Certification::multi_prime_agreement
                                      : Certification::single_prime);
      }
      rep.blocks.push_back(br);

      if (opts.degree_cap && p + q > *opts.degree_cap) continue;
      // r_in: from (p+1, q−2) — index i−1 when that block is in support.
      uint64_t rin = 0, rout = 0;
      bool known = true;
      if (i > 0) {
        PairRank in = pair_rank(plan, runs[li], i);
        known &= in.known;
        rin = in.rank;
      }
      if (i + 1 < plan.ps.size()) {
        known &= out.known;
        rout = out.rank;
      }
      if (!known) continue;
      uint64_t gfv = ctx.gf_dim(p, q);
      if (gfv < rin + rout)
        throw std::logic_error("negative E3 dimension — rank bookkeeping bug");
      table.set(p, q, gfv - rin - rout);
    }
  }
  std::sort(rep.blocks.begin(), rep.blocks.end(),
            [](const BlockReport& a, const BlockReport& b) {
              return std::pair(a.bg.p, a.bg.q) < std::pair(b.bg.p, b.bg.q);
            });
  rep.primes_used.assign(seq.begin(), seq.begin() + max_prime_index);
  rep.line_retries = total_retries;
  rep.peak_bytes = gauge.peak();
  rep.weakest = weakest;
  if (report) *report = std::move(rep);
  return table;
}

HodgeTable e3_table(const Graph& g, const EngineOptions& opts,
                    RunReport* report) {
  return e3_table(ModelContext::build(g), opts, report);
}

LaurentPolynomial poincare_elliptic(const Graph& g,
                                    const EngineOptions& opts) {
  return e3_table(g, opts).poincare();
}

}  // namespace ellarr

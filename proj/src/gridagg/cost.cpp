#include "gridagg/cost.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <utility>

#include "gridagg/parallel.h"
#include "gridagg/region.h"
#include "gridagg/sampling.h"
#include "gridagg/solve.h"

namespace gridagg {

namespace {

TieGrouping resolve_grouping(const TieGrouping& g, int num_ties) {
  if (g.group_of.empty() && g.num_groups == 0) return TieGrouping::identity(num_ties);
  require(static_cast<int>(g.group_of.size()) == num_ties, ErrorCode::invalid_argument,
          "grouping assigns {} ties but the model has {}", g.group_of.size(), num_ties);
  require(g.num_groups >= 1, ErrorCode::invalid_argument, "grouping needs at least one group");
  std::vector<char> used(g.num_groups, 0);
  for (int id : g.group_of) {
    require(id >= 0 && id < g.num_groups, ErrorCode::invalid_argument,
            "group id {} outside [0, {})", id, g.num_groups);
    used[id] = 1;
  }
  for (int gi = 0; gi < g.num_groups; ++gi)
    require(used[gi] != 0, ErrorCode::invalid_argument, "group {} has no ties", gi);
  return g;
}

std::vector<int> resolve_counts(const std::vector<int>& counts, int num_groups) {
  if (counts.empty()) {
    int def = num_groups == 1 ? 33 : (num_groups == 2 ? 9 : 5);
    return std::vector<int>(num_groups, def);
  }
  require(static_cast<int>(counts.size()) == num_groups, ErrorCode::invalid_argument,
          "lattice counts list {} dimensions for {} groups", counts.size(), num_groups);
  for (int k : counts)
    require(k >= 2, ErrorCode::invalid_argument,
            "lattice needs at least 2 points per dimension, got {}", k);
  return counts;
}

// Dispatch-cost oracle for one slot: the whole horizon stays feasible, the
// objective covers only this slot's generation and reserve costs, and the
// slot's grouped tie sums are pinned by mutating the pin rows' bounds.
struct SlotCostQp {
  ConicProblem p;
  std::vector<int> pin_rows;
  Vec pin_shift;

  SlotCostQp(const GridCase& grid, const FeasibleRegionHD& region, const BoundarySelectors& sel,
             int slot, const TieGrouping& grouping) {
    p.add_vars(region.n_int, -kInf, kInf);
    for (int r = 0; r < region.rows(); ++r) {
      LinExpr e;
      for (SpMatR::InnerIterator it(region.F, r); it; ++it) e.add(it.col(), it.value());
      p.add_row_le(region.f(r), e);
    }
    add_true_cost(p, grid, region, slot);
    pin_shift = Vec::Zero(grouping.num_groups);
    std::vector<LinExpr> sums(grouping.num_groups);
    for (int i = 0; i < sel.num_ties(); ++i) {
      int gid = grouping.group_of[i];
      int coord = sel.tie_coords[i][slot];
      for (int v = 0; v < region.n_int; ++v) sums[gid].add(v, region.C(coord, v));
      pin_shift(gid) += region.d(coord);
    }
    pin_rows.resize(grouping.num_groups);
    for (int gid = 0; gid < grouping.num_groups; ++gid)
      pin_rows[gid] = p.add_row_eq(0.0, sums[gid]);
  }

  // Minimum slot cost at the grouped setpoint, or nothing when unreachable.
  std::optional<double> operator()(const Vec& setpoint) {
    for (int gid = 0; gid < static_cast<int>(pin_rows.size()); ++gid) {
      double rhs = setpoint(gid) - pin_shift(gid);
      p.rlb[pin_rows[gid]] = rhs;
      p.rub[pin_rows[gid]] = rhs;
    }
    SolveOutcome out = solve(p);
    if (out.status == SolveStatus::optimal) return out.obj;
    if (out.status == SolveStatus::infeasible) return std::nullopt;
    fail(ErrorCode::solver, "cost solve came back {}: {}", to_string(out.status), out.detail);
  }
};

std::vector<CostSample> sample_grid_impl(const GridCase& grid, const FeasibleRegionHD& region,
                                         const BoundarySelectors& sel, const AggregatedModel& M,
                                         int slot, const std::vector<int>& counts,
                                         const TieGrouping& grouping) {
  require(slot >= 0 && slot < M.T, ErrorCode::invalid_argument,
          "slot {} outside the {}-slot horizon", slot, M.T);
  require(sel.T == M.T && sel.tie_ids == M.tie_ids, ErrorCode::invalid_argument,
          "cost sampling needs the model and case to share a tie layout");
  int G = grouping.num_groups;
  Vec lo = Vec::Zero(G);
  Vec hi = Vec::Zero(G);
  for (int i = 0; i < M.num_ties(); ++i) {
    lo(grouping.group_of[i]) += M.envelopes[i].p_lo(slot);
    hi(grouping.group_of[i]) += M.envelopes[i].p_hi(slot);
  }

  SlotCostQp qp(grid, region, sel, slot, grouping);
  std::vector<CostSample> out;
  std::vector<int> idx(G, 0);
  while (true) {
    CostSample s;
    s.slot = slot;
    s.setpoint = Vec(G);
    for (int g = 0; g < G; ++g)
      s.setpoint(g) = lo(g) + idx[g] * (hi(g) - lo(g)) / (counts[g] - 1);
    if (auto cost = qp(s.setpoint)) {
      s.cost = *cost;
      s.feasible = true;
    }
    out.push_back(std::move(s));
    int g = G - 1;
    while (g >= 0 && ++idx[g] == counts[g]) {
      idx[g] = 0;
      --g;
    }
    if (g < 0) break;
  }

  bool any = std::any_of(out.begin(), out.end(), [](const CostSample& s) { return s.feasible; });
  require(any, ErrorCode::infeasible,
          "empty sampling region: none of the {} lattice points at slot {} is reachable",
          out.size(), slot);
  return out;
}

double max_affine_eval(const std::vector<PwlPiece>& pieces, const Vec& x) {
  double best = -kInf;
  for (const PwlPiece& pc : pieces) best = std::max(best, pc.a.dot(x) + pc.b);
  return best;
}

int argmax_piece(const std::vector<PwlPiece>& pieces, const Vec& x) {
  int best = 0;
  double bv = -kInf;
  for (int i = 0; i < static_cast<int>(pieces.size()); ++i) {
    double v = pieces[i].a.dot(x) + pieces[i].b;
    if (v > bv) {
      bv = v;
      best = i;
    }
  }
  return best;
}

double rms_of(const std::vector<PwlPiece>& pieces, const std::vector<Vec>& X,
              const std::vector<double>& Y) {
  double s = 0.0;
  for (size_t i = 0; i < X.size(); ++i) {
    double e = max_affine_eval(pieces, X[i]) - Y[i];
    s += e * e;
  }
  return std::sqrt(s / static_cast<double>(X.size()));
}

// Least squares over the member samples; nothing when they do not affinely
// span the space (the piece would be underdetermined).
std::optional<PwlPiece> fit_piece(const std::vector<Vec>& X, const std::vector<double>& Y,
                                  const std::vector<int>& members) {
  if (members.empty()) return std::nullopt;
  int dim = static_cast<int>(X.front().size());
  Mat A(members.size(), dim + 1);
  Vec y(members.size());
  for (size_t r = 0; r < members.size(); ++r) {
    A.row(static_cast<int>(r)).head(dim) = X[members[r]].transpose();
    A(static_cast<int>(r), dim) = 1.0;
    y(static_cast<int>(r)) = Y[members[r]];
  }
  Eigen::ColPivHouseholderQR<Mat> qr(A);
  if (qr.rank() < dim + 1) return std::nullopt;
  Vec beta = qr.solve(y);
  PwlPiece piece;
  piece.a = beta.head(dim);
  piece.b = beta(dim);
  return piece;
}

std::vector<std::vector<int>> random_partition(int n, int m, std::mt19937_64& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<int>> groups(m);
  for (int i = 0; i < n; ++i)
    groups[static_cast<int>(static_cast<long long>(i) * m / n)].push_back(order[i]);
  return groups;
}

// Grows a piece list toward `m` pieces by splitting the piece with the worst
// total squared residual along its widest coordinate. Deterministic; stops
// early if no piece has enough members to split into two well-posed halves.
std::vector<PwlPiece> expand_warm(std::vector<PwlPiece> pieces, int m, const std::vector<Vec>& X,
                                  const std::vector<double>& Y) {
  int n = static_cast<int>(X.size());
  int dim = static_cast<int>(X.front().size());
  while (static_cast<int>(pieces.size()) < m) {
    std::vector<std::vector<int>> groups(pieces.size());
    for (int i = 0; i < n; ++i) groups[argmax_piece(pieces, X[i])].push_back(i);
    int worst = -1;
    double wv = -1.0;
    for (size_t pi = 0; pi < groups.size(); ++pi) {
      if (static_cast<int>(groups[pi].size()) < 2 * (dim + 1)) continue;
      double s = 0.0;
      for (int i : groups[pi]) {
        double e = pieces[pi].a.dot(X[i]) + pieces[pi].b - Y[i];
        s += e * e;
      }
      if (s > wv) {
        wv = s;
        worst = static_cast<int>(pi);
      }
    }
    if (worst < 0) break;
    std::vector<int>& g = groups[worst];
    int cbest = 0;
    double spread = -1.0;
    for (int c = 0; c < dim; ++c) {
      double clo = kInf, chi = -kInf;
      for (int i : g) {
        clo = std::min(clo, X[i](c));
        chi = std::max(chi, X[i](c));
      }
      if (chi - clo > spread) {
        spread = chi - clo;
        cbest = c;
      }
    }
    std::sort(g.begin(), g.end(), [&](int a, int b) {
      if (X[a](cbest) != X[b](cbest)) return X[a](cbest) < X[b](cbest);
      return a < b;
    });
    std::vector<int> lo_half(g.begin(), g.begin() + g.size() / 2);
    std::vector<int> hi_half(g.begin() + g.size() / 2, g.end());
    auto p1 = fit_piece(X, Y, lo_half);
    auto p2 = fit_piece(X, Y, hi_half);
    if (!p1 || !p2) break;
    pieces[worst] = *p1;
    pieces.push_back(*p2);
  }
  return pieces;
}

}  // namespace

TieGrouping TieGrouping::identity(int num_ties) {
  TieGrouping g;
  g.num_groups = num_ties;
  g.group_of.resize(num_ties);
  std::iota(g.group_of.begin(), g.group_of.end(), 0);
  return g;
}

double PwlSlot::evaluate(const Vec& setpoint) const {
  require(!pieces.empty(), ErrorCode::invalid_argument, "slot {} has no cost pieces", slot);
  require(setpoint.size() == pieces.front().a.size(), ErrorCode::invalid_argument,
          "setpoint has {} dims, the pieces expect {}", setpoint.size(), pieces.front().a.size());
  return max_affine_eval(pieces, setpoint);
}

std::vector<CostSample> sample_cost_grid(const GridCase& c, const AggregatedModel& M, int slot,
                                         const std::vector<int>& counts,
                                         const TieGrouping& grouping) {
  auto rs = assemble_feasible_region(c);
  TieGrouping grp = resolve_grouping(grouping, M.num_ties());
  std::vector<int> cnt = resolve_counts(counts, grp.num_groups);
  return sample_grid_impl(c, rs.first, rs.second, M, slot, cnt, grp);
}

PwlSlot fit_convex_pwl(const std::vector<CostSample>& samples, int pieces, std::uint64_t seed,
                       int restarts, const PwlSlot* warm) {
  require(pieces >= 1, ErrorCode::invalid_argument, "piece count must be positive, got {}",
          pieces);
  require(restarts >= 1, ErrorCode::invalid_argument, "restart count must be positive, got {}",
          restarts);
  std::vector<Vec> X;
  std::vector<double> Y;
  int slot_id = samples.empty() ? 0 : samples.front().slot;
  for (const CostSample& s : samples) {
    if (!s.feasible) continue;
    X.push_back(s.setpoint);
    Y.push_back(s.cost);
  }
  require(!X.empty(), ErrorCode::invalid_argument, "no feasible samples to fit");
  int dim = static_cast<int>(X.front().size());
  for (const Vec& x : X)
    require(x.size() == dim, ErrorCode::invalid_argument, "samples mix {} and {} dimensions", dim,
            x.size());
  int n = static_cast<int>(X.size());
  require(n >= pieces * (dim + 1), ErrorCode::invalid_argument,
          "fitting {} pieces over {} dimensions needs at least {} feasible samples, got {}",
          pieces, dim, pieces * (dim + 1), n);
  for (int c = 0; c < dim; ++c) {
    double clo = kInf, chi = -kInf, scale = 1.0;
    for (const Vec& x : X) {
      clo = std::min(clo, x(c));
      chi = std::max(chi, x(c));
      scale = std::max(scale, std::abs(x(c)));
    }
    require(chi - clo > 1e-9 * scale, ErrorCode::invalid_argument,
            "samples are flat along dimension {}; group or drop that tie before fitting", c);
  }

  std::vector<PwlPiece> best_pieces;
  double best_rms = kInf;
  auto consider = [&](const std::vector<PwlPiece>& ps) {
    if (ps.empty()) return;
    double r = rms_of(ps, X, Y);
    if (r < best_rms) {
      best_rms = r;
      best_pieces = ps;
    }
  };
  auto run_start = [&](std::vector<PwlPiece> ps) {
    if (ps.empty()) return;
    consider(ps);
    std::vector<int> assign(n);
    for (int i = 0; i < n; ++i) assign[i] = argmax_piece(ps, X[i]);
    for (int iter = 0; iter < 100; ++iter) {
      std::vector<std::vector<int>> groups(ps.size());
      for (int i = 0; i < n; ++i) groups[assign[i]].push_back(i);
      std::vector<PwlPiece> next;
      for (const std::vector<int>& g : groups)
        if (auto pc = fit_piece(X, Y, g)) next.push_back(*pc);
      if (next.empty()) return;
      bool dropped = next.size() != ps.size();
      ps = std::move(next);
      consider(ps);
      std::vector<int> na(n);
      for (int i = 0; i < n; ++i) na[i] = argmax_piece(ps, X[i]);
      if (!dropped && na == assign) return;
      assign = std::move(na);
    }
  };

  if (warm != nullptr && !warm->pieces.empty()) {
    bool usable = std::all_of(warm->pieces.begin(), warm->pieces.end(),
                              [&](const PwlPiece& pc) { return pc.a.size() == dim; });
    if (usable) {
      consider(warm->pieces);
      run_start(expand_warm(warm->pieces, pieces, X, Y));
    }
  }
  std::vector<int> everyone(n);
  std::iota(everyone.begin(), everyone.end(), 0);
  if (auto pc = fit_piece(X, Y, everyone)) consider({*pc});
  for (int r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
    std::vector<std::vector<int>> groups = random_partition(n, pieces, rng);
    std::vector<PwlPiece> init;
    for (const std::vector<int>& g : groups)
      if (auto pc = fit_piece(X, Y, g)) init.push_back(*pc);
    run_start(std::move(init));
  }
  require(!best_pieces.empty(), ErrorCode::invalid_argument,
          "samples do not affinely span their {} dimensions; add sample points", dim);

  PwlSlot out;
  out.slot = slot_id;
  out.pieces = std::move(best_pieces);
  out.rms = best_rms;
  out.samples = n;
  if (static_cast<int>(out.pieces.size()) < pieces)
    out.warnings.push_back(fmt::format("kept {} of {} pieces; the rest fit degenerate sample sets",
                                       out.pieces.size(), pieces));
  return out;
}

double evaluate_cost(const PwlCost& cost, int slot, const Vec& grouped_setpoint) {
  for (const PwlSlot& s : cost.slots)
    if (s.slot == slot) return s.evaluate(grouped_setpoint);
  fail(ErrorCode::invalid_argument, "cost model has no slot {}", slot);
}

void add_true_cost(ConicProblem& p, const GridCase& c, const FeasibleRegionHD& region, int slot,
                   int var_offset) {
  std::map<std::string, const GenCost*> cost_of;
  for (const ThermalGen& gen : c.thermal_gens) cost_of[gen.id] = &gen.cost;
  for (int v = 0; v < region.n_int; ++v) {
    const VarLabel& lb = region.var_labels[v];
    if (lb.contingency != -1) continue;
    if (slot >= 0 && lb.slot != slot) continue;
    auto it = cost_of.find(lb.element);
    if (it == cost_of.end()) continue;
    const GenCost& gc = *it->second;
    if (lb.kind == VarKind::gen_power) {
      if (gc.a != 0.0) p.add_obj_quad(var_offset + v, var_offset + v, 2.0 * gc.a);
      p.add_obj(var_offset + v, gc.b);
      p.c0 += gc.c;
    } else if (lb.kind == VarKind::reserve_up) {
      p.add_obj(var_offset + v, gc.price_reserve_up);
    } else if (lb.kind == VarKind::reserve_dn) {
      p.add_obj(var_offset + v, gc.price_reserve_dn);
    }
  }
}

double true_slot_cost(const GridCase& c, const FeasibleRegionHD& region, const Vec& x_int,
                      int slot) {
  require(x_int.size() == region.n_int, ErrorCode::invalid_argument,
          "point has {} coordinates, the region has {}", x_int.size(), region.n_int);
  std::map<std::string, const GenCost*> cost_of;
  for (const ThermalGen& gen : c.thermal_gens) cost_of[gen.id] = &gen.cost;
  double total = 0.0;
  for (int v = 0; v < region.n_int; ++v) {
    const VarLabel& lb = region.var_labels[v];
    if (lb.contingency != -1 || lb.slot != slot) continue;
    auto it = cost_of.find(lb.element);
    if (it == cost_of.end()) continue;
    const GenCost& gc = *it->second;
    if (lb.kind == VarKind::gen_power)
      total += gc.a * x_int(v) * x_int(v) + gc.b * x_int(v) + gc.c;
    else if (lb.kind == VarKind::reserve_up)
      total += gc.price_reserve_up * x_int(v);
    else if (lb.kind == VarKind::reserve_dn)
      total += gc.price_reserve_dn * x_int(v);
  }
  return total;
}

PwlCost fit_cost_model(const GridCase& c, const AggregatedModel& M, const CostFitOptions& opts,
                       std::vector<CostSample>* samples_out) {
  auto rs = assemble_feasible_region(c);
  const FeasibleRegionHD& region = rs.first;
  const BoundarySelectors& sel = rs.second;
  TieGrouping grouping = resolve_grouping(opts.grouping, M.num_ties());
  std::vector<int> counts = resolve_counts(opts.counts, grouping.num_groups);

  PwlCost out;
  out.region_id = M.region_id;
  out.T = M.T;
  out.tie_ids = M.tie_ids;
  out.grouping = grouping;
  out.slots.resize(M.T);
  std::vector<std::vector<CostSample>> per_slot(static_cast<size_t>(M.T));
  parallel_for(M.T, opts.jobs, [&](int t) {
    std::vector<CostSample> samples = sample_grid_impl(c, region, sel, M, t, counts, grouping);
    out.slots[t] = fit_convex_pwl(samples, opts.pieces,
                                  mix_seed(opts.seed, 0x636f7374ULL + static_cast<std::uint64_t>(t)),
                                  opts.restarts);
    if (samples_out) per_slot[static_cast<size_t>(t)] = std::move(samples);
  });
  if (samples_out) {
    samples_out->clear();
    for (auto& v : per_slot)
      for (auto& s : v) samples_out->push_back(std::move(s));
  }
  return out;
}

}  // namespace gridagg

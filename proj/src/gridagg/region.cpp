#include "gridagg/region.h"

#include <algorithm>
#include <map>
#include <optional>

#include "gridagg/ptdf.h"
#include "gridagg/solve.h"

namespace gridagg {

const char* row_family_name(RowFamily family) {
  switch (family) {
    case RowFamily::bus_balance: return "bus_balance";
    case RowFamily::line_limit: return "line_limit";
    case RowFamily::gen_power: return "gen_power";
    case RowFamily::gen_ramp: return "gen_ramp";
    case RowFamily::reserve_cap: return "reserve_cap";
    case RowFamily::reserve_requirement: return "reserve_requirement";
    case RowFamily::renewable_bound: return "renewable_bound";
    case RowFamily::tie_capacity: return "tie_capacity";
    case RowFamily::copy_balance: return "copy_balance";
    case RowFamily::copy_line_limit: return "copy_line_limit";
    case RowFamily::copy_device_bound: return "copy_device_bound";
    case RowFamily::copy_deviation: return "copy_deviation";
    case RowFamily::copy_angle_shift: return "copy_angle_shift";
    case RowFamily::copy_gen_outage: return "copy_gen_outage";
  }
  return "?";
}

const char* var_kind_name(VarKind kind) {
  switch (kind) {
    case VarKind::gen_power: return "gen_power";
    case VarKind::reserve_dn: return "reserve_dn";
    case VarKind::reserve_up: return "reserve_up";
    case VarKind::renewable_power: return "renewable_power";
    case VarKind::bus_angle: return "bus_angle";
    case VarKind::copy_gen_power: return "copy_gen_power";
    case VarKind::copy_renewable_power: return "copy_renewable_power";
    case VarKind::copy_bus_angle: return "copy_bus_angle";
  }
  return "?";
}

Vec FeasibleRegionHD::boundary_of(const Vec& x_int) const {
  require(x_int.size() == n_int, ErrorCode::invalid_argument,
          "boundary_of: expected {} internal coordinates, got {}", n_int, x_int.size());
  return C * x_int + d;
}

Mat BoundarySelectors::S_tie(int i) const {
  require(i >= 0 && i < num_ties(), ErrorCode::invalid_argument, "tie index {} out of range", i);
  Mat S = Mat::Zero(T, n_bd);
  for (int t = 0; t < T; ++t) S(t, tie_coords[i][t]) = 1.0;
  return S;
}

Mat BoundarySelectors::H_bd(int t) const {
  require(t >= 0 && t < T, ErrorCode::invalid_argument, "slot {} out of range", t);
  Mat H = Mat::Zero(per_slot, n_bd);
  for (int k = 0; k < per_slot; ++k) H(k, slot_coords[t][k]) = 1.0;
  return H;
}

BoundarySelectors make_selectors(int T, double dt, std::vector<std::string> tie_ids,
                                 std::vector<int> tie_bus, std::vector<int> angle_bus_ids) {
  require(T >= 1, ErrorCode::invalid_argument, "selector horizon must be >= 1, got {}", T);
  require(dt > 0, ErrorCode::invalid_argument, "slot length must be positive, got {}", dt);
  require(tie_ids.size() == tie_bus.size(), ErrorCode::invalid_argument,
          "{} tie ids but {} tie buses", tie_ids.size(), tie_bus.size());
  BoundarySelectors sel;
  sel.T = T;
  sel.dt = dt;
  sel.tie_ids = std::move(tie_ids);
  sel.tie_bus = std::move(tie_bus);
  sel.angle_bus_ids = std::move(angle_bus_ids);

  const int nt = static_cast<int>(sel.tie_ids.size());
  const int na = static_cast<int>(sel.angle_bus_ids.size());
  sel.per_slot = nt + na;
  sel.n_bd = sel.per_slot * T;
  sel.tie_coords.assign(nt, {});
  sel.slot_coords.assign(T, {});
  for (int t = 0; t < T; ++t) {
    const int base = t * sel.per_slot;
    for (int i = 0; i < nt; ++i) {
      sel.tie_coords[i].push_back(base + i);
      sel.slot_coords[t].push_back(base + i);
    }
    for (int a = 0; a < na; ++a) sel.slot_coords[t].push_back(base + nt + a);
  }
  return sel;
}

BoundarySelectors boundary_layout(const GridCase& c) {
  std::vector<std::string> tie_ids;
  for (const TieLine& tl : c.tie_lines) tie_ids.push_back(tl.id);
  std::sort(tie_ids.begin(), tie_ids.end());
  std::vector<int> tie_bus;
  for (const std::string& id : tie_ids)
    for (const TieLine& tl : c.tie_lines)
      if (tl.id == id) tie_bus.push_back(tl.boundary_bus);
  std::vector<int> angle_bus_ids;
  for (const Bus& b : c.buses)
    if (b.is_boundary_ac) angle_bus_ids.push_back(b.id);
  std::sort(angle_bus_ids.begin(), angle_bus_ids.end());
  return make_selectors(c.T, c.dt, std::move(tie_ids), std::move(tie_bus),
                        std::move(angle_bus_ids));
}

namespace {

// Column layout of x_int: slot-major; within a slot the base block
// [p_tpg | Rd | Ru | p_rgu | theta(non-ref)] precedes one copy block
// [p_tpg_c | p_rgu_c | theta_c(non-ref)] per contingency.
struct IndexMap {
  int T = 0, ng = 0, nw = 0, nth = 0, nc = 0;
  int per_base = 0, per_copy = 0, per_slot = 0;
  int ref = 0;                 // dense index of the reference bus
  std::vector<int> theta_pos;  // dense bus index -> angle position, -1 at ref

  explicit IndexMap(const GridCase& c) {
    T = c.T;
    ng = static_cast<int>(c.thermal_gens.size());
    nw = static_cast<int>(c.renewables.size());
    nc = static_cast<int>(c.contingencies.size());
    ref = c.bus_index(c.ref_bus);
    theta_pos.assign(c.num_buses(), -1);
    int pos = 0;
    for (int b = 0; b < c.num_buses(); ++b)
      if (b != ref) theta_pos[b] = pos++;
    nth = pos;
    per_base = 3 * ng + nw + nth;
    per_copy = ng + nw + nth;
    per_slot = per_base + nc * per_copy;
  }

  int p(int g, int t) const { return t * per_slot + g; }
  int rd(int g, int t) const { return t * per_slot + ng + g; }
  int ru(int g, int t) const { return t * per_slot + 2 * ng + g; }
  int w(int k, int t) const { return t * per_slot + 3 * ng + k; }
  int th(int bus, int t) const { return t * per_slot + 3 * ng + nw + theta_pos[bus]; }
  int copy_base(int cx, int t) const { return t * per_slot + per_base + cx * per_copy; }
  int cp(int cx, int g, int t) const { return copy_base(cx, t) + g; }
  int cw(int cx, int k, int t) const { return copy_base(cx, t) + ng + k; }
  int cth(int cx, int bus, int t) const { return copy_base(cx, t) + ng + nw + theta_pos[bus]; }
  int total() const { return T * per_slot; }
};

using Terms = std::vector<std::pair<int, double>>;

struct RowStore {
  std::vector<Triplet> trips;
  std::vector<double> rhs;
  std::vector<RowLabel> labels;
  int rows = 0;

  void le(const Terms& terms, double ub, const RowLabel& lab) {
    for (const auto& [j, v] : terms)
      if (v != 0.0) trips.emplace_back(rows, j, v);
    rhs.push_back(ub);
    labels.push_back(lab);
    ++rows;
  }
  void eq(const Terms& terms, double val, const RowLabel& lab) {
    le(terms, val, lab);
    Terms neg = terms;
    for (auto& [j, v] : neg) v = -v;
    le(neg, -val, lab);
  }
  // lo <= expr <= hi with infinite ends skipped
  void range(const Terms& terms, double lo, double hi, const RowLabel& lab) {
    if (hi < kInf) le(terms, hi, lab);
    if (lo > -kInf) {
      Terms neg = terms;
      for (auto& [j, v] : neg) v = -v;
      le(neg, -lo, lab);
    }
  }
};

}  // namespace

std::pair<FeasibleRegionHD, BoundarySelectors> assemble_feasible_region(const GridCase& c) {
  BoundarySelectors sel = boundary_layout(c);
  const IndexMap ix(c);
  const int nb = c.num_buses();

  // All network rows are written in MW: B_pu * theta is per-unit injection.
  const Mat Bmw = susceptance_matrix(c) * c.mva_base;

  std::map<std::string, const TieLine*> tie_by_id;
  for (const TieLine& tl : c.tie_lines) tie_by_id[tl.id] = &tl;
  std::vector<int> tie_at_bus(nb, -1);  // dense bus index -> tie layout position
  for (int i = 0; i < sel.num_ties(); ++i)
    tie_at_bus[c.bus_index(tie_by_id[sel.tie_ids[i]]->boundary_bus)] = i;

  std::vector<std::vector<int>> gens_at(nb), rens_at(nb);
  for (int g = 0; g < ix.ng; ++g) gens_at[c.bus_index(c.thermal_gens[g].bus)].push_back(g);
  for (int k = 0; k < ix.nw; ++k) rens_at[c.bus_index(c.renewables[k].bus)].push_back(k);

  FeasibleRegionHD region;
  region.n_bd = sel.n_bd;
  region.n_int = ix.total();

  region.var_labels.resize(region.n_int);
  for (int t = 0; t < c.T; ++t) {
    for (int g = 0; g < ix.ng; ++g) {
      region.var_labels[ix.p(g, t)] = {VarKind::gen_power, t, -1, c.thermal_gens[g].id};
      region.var_labels[ix.rd(g, t)] = {VarKind::reserve_dn, t, -1, c.thermal_gens[g].id};
      region.var_labels[ix.ru(g, t)] = {VarKind::reserve_up, t, -1, c.thermal_gens[g].id};
    }
    for (int k = 0; k < ix.nw; ++k)
      region.var_labels[ix.w(k, t)] = {VarKind::renewable_power, t, -1, c.renewables[k].id};
    for (int b = 0; b < nb; ++b)
      if (b != ix.ref)
        region.var_labels[ix.th(b, t)] = {VarKind::bus_angle, t, -1, std::to_string(c.buses[b].id)};
    for (int cx = 0; cx < ix.nc; ++cx) {
      for (int g = 0; g < ix.ng; ++g)
        region.var_labels[ix.cp(cx, g, t)] = {VarKind::copy_gen_power, t, cx, c.thermal_gens[g].id};
      for (int k = 0; k < ix.nw; ++k)
        region.var_labels[ix.cw(cx, k, t)] = {VarKind::copy_renewable_power, t, cx,
                                              c.renewables[k].id};
      for (int b = 0; b < nb; ++b)
        if (b != ix.ref)
          region.var_labels[ix.cth(cx, b, t)] = {VarKind::copy_bus_angle, t, cx,
                                                 std::to_string(c.buses[b].id)};
    }
  }

  // Net MW injection at dense bus b expressed over slot-t variables: the
  // terms cover devices minus network outflow; `shift` carries the constant
  // -load - B(b,ref)*theta_ref. Bus balance (non-tie bus) reads
  // terms + shift = 0; the tie-power map reads p_tie = terms + shift.
  auto injection_balance = [&](const Mat& B, int b, int t,
                               auto th_of) -> std::pair<Terms, double> {
    Terms terms;
    for (int g : gens_at[b]) terms.emplace_back(ix.p(g, t), 1.0);
    for (int k : rens_at[b]) terms.emplace_back(ix.w(k, t), 1.0);
    for (int b2 = 0; b2 < nb; ++b2) {
      if (B(b, b2) == 0.0) continue;
      if (b2 == ix.ref) continue;
      terms.emplace_back(th_of(b2, t), -B(b, b2));
    }
    const double shift = -c.load(b, t) - B(b, ix.ref) * c.ref_angle(t);
    return {terms, shift};
  };
  auto base_th = [&](int b2, int t) { return ix.th(b2, t); };

  // Boundary map rows.
  region.C = Mat::Zero(region.n_bd, region.n_int);
  region.d = Vec::Zero(region.n_bd);
  region.bd_labels.resize(region.n_bd);
  for (int t = 0; t < c.T; ++t) {
    for (int i = 0; i < sel.num_ties(); ++i) {
      const TieLine& tl = *tie_by_id[sel.tie_ids[i]];
      const int row = sel.slot_coords[t][i];
      auto [terms, shift] = injection_balance(Bmw, c.bus_index(tl.boundary_bus), t, base_th);
      for (const auto& [j, v] : terms) region.C(row, j) += v;
      region.d(row) = shift;
      region.bd_labels[row] = {false, t, tl.id};
    }
    for (int a = 0; a < static_cast<int>(sel.angle_bus_ids.size()); ++a) {
      const int row = sel.slot_coords[t][sel.num_ties() + a];
      const int b = c.bus_index(sel.angle_bus_ids[a]);
      if (b == ix.ref)
        region.d(row) = c.ref_angle(t);
      else
        region.C(row, ix.th(b, t)) = 1.0;
      region.bd_labels[row] = {true, t, std::to_string(sel.angle_bus_ids[a])};
    }
  }

  RowStore rows;

  auto add_line_limits = [&](int t, std::optional<int> skip_line, auto th_of, RowFamily fam,
                             int cx) {
    for (int l = 0; l < static_cast<int>(c.lines.size()); ++l) {
      if (skip_line && *skip_line == l) continue;
      const Line& ln = c.lines[l];
      const double coef = c.mva_base / ln.reactance;
      const int bi = c.bus_index(ln.from), bj = c.bus_index(ln.to);
      Terms terms;
      double shift = 0.0;  // constant part of the MW flow
      if (bi == ix.ref)
        shift += coef * c.ref_angle(t);
      else
        terms.emplace_back(th_of(bi, t), coef);
      if (bj == ix.ref)
        shift -= coef * c.ref_angle(t);
      else
        terms.emplace_back(th_of(bj, t), -coef);
      rows.range(terms, -ln.capacity - shift, ln.capacity - shift, {fam, t, cx, ln.id});
    }
  };

  for (int t = 0; t < c.T; ++t) {
    // Tie capacities bound the boundary expression itself.
    for (int i = 0; i < sel.num_ties(); ++i) {
      const TieLine& tl = *tie_by_id[sel.tie_ids[i]];
      const int row = sel.slot_coords[t][i];
      Terms terms;
      for (int j = 0; j < region.n_int; ++j)
        if (region.C(row, j) != 0.0) terms.emplace_back(j, region.C(row, j));
      rows.range(terms, -tl.capacity - region.d(row), tl.capacity - region.d(row),
                 {RowFamily::tie_capacity, t, -1, tl.id});
    }

    for (int b = 0; b < nb; ++b) {
      if (tie_at_bus[b] >= 0) continue;
      auto [terms, shift] = injection_balance(Bmw, b, t, base_th);
      rows.eq(terms, -shift, {RowFamily::bus_balance, t, -1, std::to_string(c.buses[b].id)});
    }

    add_line_limits(t, std::nullopt, base_th, RowFamily::line_limit, -1);

    for (int g = 0; g < ix.ng; ++g) {
      const ThermalGen& tg = c.thermal_gens[g];
      rows.le({{ix.p(g, t), -1.0}, {ix.rd(g, t), 1.0}}, -tg.p_min,
              {RowFamily::gen_power, t, -1, tg.id});
      rows.le({{ix.p(g, t), 1.0}, {ix.ru(g, t), 1.0}}, tg.p_max,
              {RowFamily::gen_power, t, -1, tg.id});
      rows.range({{ix.rd(g, t), 1.0}}, 0.0, tg.reserve_cap_dn(t),
                 {RowFamily::reserve_cap, t, -1, tg.id});
      rows.range({{ix.ru(g, t), 1.0}}, 0.0, tg.reserve_cap_up(t),
                 {RowFamily::reserve_cap, t, -1, tg.id});
    }

    {
      Terms sum_rd, sum_ru;
      for (int g = 0; g < ix.ng; ++g) {
        sum_rd.emplace_back(ix.rd(g, t), 1.0);
        sum_ru.emplace_back(ix.ru(g, t), 1.0);
      }
      rows.range(sum_rd, c.reserve_req_dn(t), kInf, {RowFamily::reserve_requirement, t, -1, "Rd"});
      rows.range(sum_ru, c.reserve_req_up(t), kInf, {RowFamily::reserve_requirement, t, -1, "Ru"});
    }

    for (int k = 0; k < ix.nw; ++k) {
      const Renewable& rw = c.renewables[k];
      rows.range({{ix.w(k, t), 1.0}}, rw.p_min, rw.forecast_max(t),
                 {RowFamily::renewable_bound, t, -1, rw.id});
    }

    if (t > 0) {
      for (int g = 0; g < ix.ng; ++g) {
        const ThermalGen& tg = c.thermal_gens[g];
        rows.range({{ix.p(g, t), 1.0}, {ix.p(g, t - 1), -1.0}}, -tg.ramp_dn * c.dt,
                   tg.ramp_up * c.dt, {RowFamily::gen_ramp, t - 1, -1, tg.id});
      }
    }

    for (int cx = 0; cx < ix.nc; ++cx) {
      const Contingency& con = c.contingencies[cx];
      std::optional<int> out_line;
      int out_gen = -1;
      if (con.kind == OutageKind::line)
        out_line = c.line_index(con.element);
      else
        out_gen = c.gen_index(con.element);
      const Mat Bc = out_line ? Mat(susceptance_matrix(c, out_line) * c.mva_base) : Bmw;
      auto copy_th = [&](int b2, int tt) { return ix.cth(cx, b2, tt); };

      // Same injection pattern as the base case, over copy variables.
      auto copy_balance = [&](int b, int tt) -> std::pair<Terms, double> {
        Terms terms;
        for (int g : gens_at[b]) terms.emplace_back(ix.cp(cx, g, tt), 1.0);
        for (int k : rens_at[b]) terms.emplace_back(ix.cw(cx, k, tt), 1.0);
        for (int b2 = 0; b2 < nb; ++b2) {
          if (Bc(b, b2) == 0.0 || b2 == ix.ref) continue;
          terms.emplace_back(ix.cth(cx, b2, tt), -Bc(b, b2));
        }
        return {terms, -c.load(b, tt) - Bc(b, ix.ref) * c.ref_angle(tt)};
      };

      for (int b = 0; b < nb; ++b) {
        auto [cterms, cshift] = copy_balance(b, t);
        if (tie_at_bus[b] < 0) {
          rows.eq(cterms, -cshift,
                  {RowFamily::copy_balance, t, cx, std::to_string(c.buses[b].id)});
        } else {
          // The tie keeps its base-case schedule through the contingency:
          // copy-side net injection equals the base-side expression.
          auto [bterms, bshift] = injection_balance(Bmw, b, t, base_th);
          Terms diff = cterms;
          for (auto& [j, v] : bterms) diff.emplace_back(j, -v);
          rows.eq(diff, bshift - cshift,
                  {RowFamily::copy_balance, t, cx, std::to_string(c.buses[b].id)});
        }
      }

      add_line_limits(t, out_line, copy_th, RowFamily::copy_line_limit, cx);

      for (int g = 0; g < ix.ng; ++g) {
        const ThermalGen& tg = c.thermal_gens[g];
        if (g == out_gen) {
          rows.eq({{ix.cp(cx, g, t), 1.0}}, 0.0, {RowFamily::copy_gen_outage, t, cx, tg.id});
          continue;
        }
        rows.range({{ix.cp(cx, g, t), 1.0}}, tg.p_min, tg.p_max,
                   {RowFamily::copy_device_bound, t, cx, tg.id});
        if (tg.contingency_deviation_cap < kInf)
          rows.range({{ix.cp(cx, g, t), 1.0}, {ix.p(g, t), -1.0}}, -tg.contingency_deviation_cap,
                     tg.contingency_deviation_cap, {RowFamily::copy_deviation, t, cx, tg.id});
      }
      for (int k = 0; k < ix.nw; ++k) {
        const Renewable& rw = c.renewables[k];
        rows.range({{ix.cw(cx, k, t), 1.0}}, rw.p_min, rw.forecast_max(t),
                   {RowFamily::copy_device_bound, t, cx, rw.id});
        if (rw.contingency_deviation_cap < kInf)
          rows.range({{ix.cw(cx, k, t), 1.0}, {ix.w(k, t), -1.0}}, -rw.contingency_deviation_cap,
                     rw.contingency_deviation_cap, {RowFamily::copy_deviation, t, cx, rw.id});
      }
      if (con.max_angle_shift < kInf) {
        for (int b = 0; b < nb; ++b) {
          if (b == ix.ref) continue;
          rows.range({{ix.cth(cx, b, t), 1.0}, {ix.th(b, t), -1.0}}, -con.max_angle_shift,
                     con.max_angle_shift,
                     {RowFamily::copy_angle_shift, t, cx, std::to_string(c.buses[b].id)});
        }
      }
    }
  }

  region.F = SpMatR(rows.rows, region.n_int);
  region.F.setFromTriplets(rows.trips.begin(), rows.trips.end());
  region.f = Eigen::Map<Vec>(rows.rhs.data(), rows.rows);
  region.row_labels = std::move(rows.labels);

  // Nonemptiness: one relaxation solve; on failure name the family carrying
  // the heaviest certificate weight.
  ConicProblem q;
  q.add_vars(region.n_int, -kInf, kInf);
  for (int r = 0; r < region.rows(); ++r) {
    LinExpr e;
    for (SpMatR::InnerIterator it(region.F, r); it; ++it) e.add(static_cast<int>(it.col()), it.value());
    q.add_row_le(region.f(r), e);
  }
  FeasibilityResult fr = check_feasibility(q);
  if (!fr.feasible) {
    std::map<std::string, double> weight;
    for (int r = 0; r < region.rows(); ++r)
      if (fr.farkas.size() == region.F.rows() && fr.farkas(r) != 0.0)
        weight[row_family_name(region.row_labels[r].family)] += std::abs(fr.farkas(r));
    std::string worst = "unknown";
    double wmax = -1.0;
    for (const auto& [name, v] : weight)
      if (v > wmax) wmax = v, worst = name;
    fail(ErrorCode::infeasible,
         "region infeasible: no internal dispatch satisfies all constraints "
         "(largest certificate weight on {} rows)",
         worst);
  }

  return {std::move(region), std::move(sel)};
}

RegionCensus region_census(const FeasibleRegionHD& region) {
  RegionCensus census;
  std::map<std::string, int> fam, kind;
  for (const RowLabel& lab : region.row_labels) fam[row_family_name(lab.family)]++;
  for (const VarLabel& lab : region.var_labels) kind[var_kind_name(lab.kind)]++;
  census.row_families.assign(fam.begin(), fam.end());
  census.var_kinds.assign(kind.begin(), kind.end());
  return census;
}

}  // namespace gridagg

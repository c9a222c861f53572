#include "gridagg/coordinate.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "gridagg/json_io.h"
#include "gridagg/region.h"
#include "gridagg/solve.h"

namespace gridagg {

namespace {

// Region view the coupling rows need; shared by the model-based solve and
// the case-based oracle.
struct RegionFace {
  const std::string* id = nullptr;
  int T = 0;
  double dt = 1.0;
  double mva_base = 100.0;
  const std::vector<std::string>* tie_ids = nullptr;
  const std::vector<int>* tie_bus = nullptr;
  const std::vector<int>* angle_bus_ids = nullptr;
};

struct TieEnd {
  int region = -1;
  int tie = -1;    // layout index in the owning region
  int angle = -1;  // angle layout index, AC only
};

struct ResolvedTie {
  const InterTie* def = nullptr;
  TieEnd a, b;
};

TieEnd resolve_end(const std::vector<RegionFace>& faces,
                   const std::map<std::string, int>& region_pos, const InterTie& tl,
                   const std::string& region, const std::string& tie) {
  auto it = region_pos.find(region);
  require(it != region_pos.end(), ErrorCode::invalid_argument,
          "corridor {} references unknown region {}", tl.id, region);
  TieEnd end;
  end.region = it->second;
  const RegionFace& face = faces[end.region];
  for (int i = 0; i < static_cast<int>(face.tie_ids->size()); ++i)
    if ((*face.tie_ids)[i] == tie) end.tie = i;
  require(end.tie >= 0, ErrorCode::invalid_argument,
          "corridor {} references tie {} missing from region {}", tl.id, tie, region);
  if (tl.kind == TieKind::AC) {
    int bus = (*face.tie_bus)[end.tie];
    for (int a = 0; a < static_cast<int>(face.angle_bus_ids->size()); ++a)
      if ((*face.angle_bus_ids)[a] == bus) end.angle = a;
    require(end.angle >= 0, ErrorCode::invalid_argument,
            "corridor {} is AC but region {} exposes no boundary angle for bus {}", tl.id, region,
            bus);
  }
  return end;
}

std::vector<ResolvedTie> resolve_net(const Interconnection& net,
                                     const std::vector<RegionFace>& faces) {
  require(!net.regions.empty(), ErrorCode::invalid_argument, "interconnection lists no regions");
  std::map<std::string, int> region_pos;
  for (int r = 0; r < static_cast<int>(net.regions.size()); ++r)
    require(region_pos.emplace(net.regions[r], r).second, ErrorCode::invalid_argument,
            "region {} is listed twice", net.regions[r]);
  for (const RegionFace& face : faces) {
    require(face.T == faces[0].T, ErrorCode::invalid_argument,
            "regions disagree on the horizon: {} has {} slots, {} has {}", *faces[0].id,
            faces[0].T, *face.id, face.T);
    require(face.dt == faces[0].dt, ErrorCode::invalid_argument,
            "regions disagree on the slot length: {} vs {} hours", faces[0].dt, face.dt);
  }

  std::vector<std::vector<char>> used(faces.size());
  for (size_t r = 0; r < faces.size(); ++r) used[r].assign(faces[r].tie_ids->size(), 0);
  std::vector<ResolvedTie> out;
  for (const InterTie& tl : net.ties) {
    require(tl.capacity >= 0, ErrorCode::invalid_argument, "corridor {} has a negative capacity",
            tl.id);
    require(tl.region_a != tl.region_b, ErrorCode::invalid_argument,
            "corridor {} connects region {} to itself", tl.id, tl.region_a);
    ResolvedTie rt;
    rt.def = &tl;
    rt.a = resolve_end(faces, region_pos, tl, tl.region_a, tl.tie_a);
    rt.b = resolve_end(faces, region_pos, tl, tl.region_b, tl.tie_b);
    if (tl.kind == TieKind::AC) {
      require(tl.reactance > 0, ErrorCode::invalid_argument,
              "AC corridor {} needs a positive reactance", tl.id);
      require(faces[rt.a.region].mva_base == faces[rt.b.region].mva_base,
              ErrorCode::invalid_argument,
              "AC corridor {} couples regions with different MVA bases ({} vs {})", tl.id,
              faces[rt.a.region].mva_base, faces[rt.b.region].mva_base);
    }
    for (const TieEnd& end : {rt.a, rt.b}) {
      require(used[end.region][end.tie] == 0, ErrorCode::invalid_argument,
              "tie {} of region {} appears in more than one corridor",
              (*faces[end.region].tie_ids)[end.tie], net.regions[end.region]);
      used[end.region][end.tie] = 1;
    }
    out.push_back(rt);
  }
  for (size_t r = 0; r < faces.size(); ++r)
    for (size_t i = 0; i < used[r].size(); ++i)
      require(used[r][i] != 0, ErrorCode::invalid_argument,
              "tie {} of region {} is not connected by the interconnection",
              (*faces[r].tie_ids)[i], net.regions[r]);
  return out;
}

// Per-region frame-offset variable base (-1 when the region needs none).
// Regions touched by AC corridors get one offset per slot; one region per
// coupled component stays pinned to the global frame so no free direction
// survives (the net's first region when its component contains it).
std::vector<int> add_frame_offsets(ConicProblem& p, int R, int T,
                                   const std::vector<ResolvedTie>& ties) {
  std::vector<int> parent(R);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<char> has_ac(R, 0);
  for (const ResolvedTie& rt : ties) {
    if (rt.def->kind != TieKind::AC) continue;
    has_ac[rt.a.region] = has_ac[rt.b.region] = 1;
    parent[find(rt.a.region)] = find(rt.b.region);
  }
  std::vector<int> pinned(R, R);
  for (int r = 0; r < R; ++r)
    if (has_ac[r]) pinned[find(r)] = std::min(pinned[find(r)], r);
  std::vector<int> f0(R, -1);
  for (int r = 0; r < R; ++r)
    if (has_ac[r] && pinned[find(r)] != r) f0[r] = p.add_vars(T, -kInf, kInf);
  return f0;
}

constexpr const char* kFamCost = "cost epigraph";
constexpr const char* kFamWindow = "tie power window";
constexpr const char* kFamAngleBox = "boundary angle box";
constexpr const char* kFamCapacity = "tie capacity";
constexpr const char* kFamAnti = "tie power anti-symmetry";
constexpr const char* kFamCoupling = "tie angle coupling";

std::string name_infeasibility(const ConicProblem& p, const std::vector<std::string>& fam) {
  ConicProblem q = p;
  q.cones.clear();
  q.Q.clear();
  std::fill(q.c.begin(), q.c.end(), 0.0);
  q.c0 = 0.0;
  FeasibilityResult fr = check_feasibility(q);
  if (fr.feasible)
    return "infeasible interconnection: the linear rows admit a point, the time-slice "
           "memberships exclude it";
  int worst = -1;
  double wv = 0.0;
  for (int i = 0; i < fr.farkas.size(); ++i) {
    if (std::abs(fr.farkas(i)) > wv) {
      wv = std::abs(fr.farkas(i));
      worst = i;
    }
  }
  if (worst < 0 || worst >= static_cast<int>(fam.size())) return "infeasible interconnection";
  return fmt::format("infeasible interconnection: {} rows carry the infeasibility certificate",
                     fam[worst]);
}

// acc += s * src
void axpy(LinExpr& acc, double s, const LinExpr& src) {
  for (const auto& [idx, coef] : src.terms) acc.add(idx, s * coef);
  acc.constant += s * src.constant;
}

}  // namespace

CoordinationResult coordinate(const std::vector<AggregatedModel>& models,
                              const std::vector<PwlCost>& costs, const Interconnection& net) {
  const int R = static_cast<int>(net.regions.size());
  require(static_cast<int>(models.size()) == R, ErrorCode::invalid_argument,
          "{} models for {} regions", models.size(), R);
  require(costs.size() == models.size(), ErrorCode::invalid_argument, "{} cost models for {} regions",
          costs.size(), R);
  std::vector<const AggregatedModel*> M(R, nullptr);
  std::vector<const PwlCost*> K(R, nullptr);
  for (int r = 0; r < R; ++r) {
    for (const AggregatedModel& m : models)
      if (m.region_id == net.regions[r]) {
        require(M[r] == nullptr, ErrorCode::invalid_argument, "two models claim region {}",
                net.regions[r]);
        M[r] = &m;
      }
    require(M[r] != nullptr, ErrorCode::invalid_argument, "no model for region {}",
            net.regions[r]);
    for (const PwlCost& k : costs)
      if (k.region_id == net.regions[r]) {
        require(K[r] == nullptr, ErrorCode::invalid_argument, "two cost models claim region {}",
                net.regions[r]);
        K[r] = &k;
      }
    require(K[r] != nullptr, ErrorCode::invalid_argument, "no cost model for region {}",
            net.regions[r]);
  }

  std::vector<RegionFace> faces(R);
  std::vector<BoundarySelectors> sels(R);
  for (int r = 0; r < R; ++r) {
    sels[r] = M[r]->selectors();
    faces[r] = {&net.regions[r],  M[r]->T,        M[r]->dt,
                M[r]->mva_base,   &M[r]->tie_ids, &M[r]->tie_bus,
                &M[r]->angle_bus_ids};
  }
  std::vector<ResolvedTie> ties = resolve_net(net, faces);
  const int T = faces[0].T;

  for (int r = 0; r < R; ++r) {
    require(K[r]->T == T && K[r]->tie_ids == M[r]->tie_ids, ErrorCode::invalid_argument,
            "cost model for region {} does not match its aggregated model", net.regions[r]);
    require(static_cast<int>(K[r]->grouping.group_of.size()) == M[r]->num_ties(),
            ErrorCode::invalid_argument, "cost grouping for region {} covers {} ties of {}",
            net.regions[r], K[r]->grouping.group_of.size(), M[r]->num_ties());
    require(static_cast<int>(K[r]->slots.size()) == T, ErrorCode::invalid_argument,
            "cost model for region {} covers {} slots of {}", net.regions[r], K[r]->slots.size(),
            T);
    for (int t = 0; t < T; ++t) {
      const PwlSlot& s = K[r]->slots[t];
      require(s.slot == t, ErrorCode::invalid_argument,
              "cost model for region {} stores slot {} at position {}", net.regions[r], s.slot, t);
      require(!s.pieces.empty(), ErrorCode::invalid_argument,
              "cost model for region {} has no pieces at slot {}", net.regions[r], t);
      for (const PwlPiece& pc : s.pieces)
        require(pc.a.size() == K[r]->grouping.num_groups, ErrorCode::invalid_argument,
                "cost piece dimension {} does not match the {} tie groups of region {}",
                pc.a.size(), K[r]->grouping.num_groups, net.regions[r]);
    }
  }

  ConicProblem p;
  std::vector<std::string> fam;
  auto row = [&](const char* f, double lo, double hi, const LinExpr& e) {
    p.add_row(lo, hi, e);
    fam.emplace_back(f);
  };

  std::vector<int> x0(R), k0(R);
  for (int r = 0; r < R; ++r) {
    x0[r] = p.add_vars(sels[r].n_bd, -kInf, kInf);
    k0[r] = p.add_vars(T, -kInf, kInf);
    for (int t = 0; t < T; ++t) p.add_obj(k0[r] + t, 1.0);
  }
  std::vector<int> f0 = add_frame_offsets(p, R, T, ties);

  for (int r = 0; r < R; ++r) {
    ConvexBody body = M[r]->body();
    for (int i = 0; i < body.poly.rows(); ++i) {
      LinExpr e;
      for (int j = 0; j < body.poly.dim(); ++j) e.add(x0[r] + j, body.poly.A(i, j));
      row(M[r]->row_origin(i).tie >= 0 ? kFamWindow : kFamAngleBox, -kInf, body.poly.b(i), e);
    }
    for (const EllipsoidalSection& sec : body.sections) {
      std::vector<LinExpr> soc;
      soc.emplace_back(LinExpr({}, 1.0));
      const Mat& Ei = sec.ell.E_inv;
      for (int rr = 0; rr < sec.ell.dim(); ++rr) {
        LinExpr e({}, -Ei.row(rr).dot(sec.ell.e));
        for (int cc = 0; cc < sec.ell.dim(); ++cc) e.add(x0[r] + sec.coords[cc], Ei(rr, cc));
        soc.push_back(std::move(e));
      }
      p.add_soc(std::move(soc));
    }
    for (int t = 0; t < T; ++t) {
      for (const PwlPiece& pc : K[r]->slots[t].pieces) {
        LinExpr e = LinExpr::var(k0[r] + t);
        for (int i = 0; i < M[r]->num_ties(); ++i)
          e.add(x0[r] + sels[r].tie_coords[i][t], -pc.a(K[r]->grouping.group_of[i]));
        row(kFamCost, pc.b, kInf, e);
      }
    }
  }

  for (const ResolvedTie& rt : ties) {
    double kc = rt.def->kind == TieKind::AC ? faces[rt.a.region].mva_base / rt.def->reactance : 0;
    for (int t = 0; t < T; ++t) {
      int pa = x0[rt.a.region] + sels[rt.a.region].tie_coords[rt.a.tie][t];
      int pb = x0[rt.b.region] + sels[rt.b.region].tie_coords[rt.b.tie][t];
      row(kFamAnti, 0.0, 0.0, LinExpr({{pa, 1.0}, {pb, 1.0}}));
      row(kFamCapacity, -rt.def->capacity, rt.def->capacity, LinExpr::var(pa));
      if (rt.def->kind == TieKind::AC) {
        const BoundarySelectors& sa = sels[rt.a.region];
        const BoundarySelectors& sb = sels[rt.b.region];
        LinExpr e = LinExpr::var(pa);
        e.add(x0[rt.a.region] + sa.slot_coords[t][sa.num_ties() + rt.a.angle], -kc);
        e.add(x0[rt.b.region] + sb.slot_coords[t][sb.num_ties() + rt.b.angle], kc);
        if (f0[rt.a.region] >= 0) e.add(f0[rt.a.region] + t, -kc);
        if (f0[rt.b.region] >= 0) e.add(f0[rt.b.region] + t, kc);
        row(kFamCoupling, 0.0, 0.0, e);
      }
    }
  }

  SolveOutcome out = solve(p);
  CoordinationResult res;
  if (out.status == SolveStatus::infeasible) {
    res.status = SolveStatus::infeasible;
    res.note = name_infeasibility(p, fam);
    return res;
  }
  require(out.status == SolveStatus::optimal, ErrorCode::solver,
          "coordination solve came back {}: {}", to_string(out.status), out.detail);

  res.status = SolveStatus::optimal;
  res.objective = out.obj;
  for (int r = 0; r < R; ++r) {
    RegionSchedule s;
    s.region_id = net.regions[r];
    s.tie_ids = sels[r].tie_ids;
    s.angle_bus_ids = sels[r].angle_bus_ids;
    s.x_bd = out.x.segment(x0[r], sels[r].n_bd);
    s.tie_power = Mat::Zero(sels[r].num_ties(), T);
    s.angle = Mat::Zero(static_cast<int>(sels[r].angle_bus_ids.size()), T);
    for (int t = 0; t < T; ++t) {
      for (int i = 0; i < sels[r].num_ties(); ++i)
        s.tie_power(i, t) = s.x_bd(sels[r].tie_coords[i][t]);
      for (int a = 0; a < static_cast<int>(sels[r].angle_bus_ids.size()); ++a)
        s.angle(a, t) = s.x_bd(sels[r].slot_coords[t][sels[r].num_ties() + a]);
    }
    s.frame_offset = f0[r] >= 0 ? Vec(out.x.segment(f0[r], T)) : Vec(Vec::Zero(T));
    s.kappa = out.x.segment(k0[r], T);
    require(M[r]->contains(s.x_bd, 1e-6), ErrorCode::internal,
            "coordinated schedule left region {}'s model", net.regions[r]);
    res.schedules.push_back(std::move(s));
  }
  for (const ResolvedTie& rt : ties)
    for (int t = 0; t < T; ++t)
      require(std::abs(res.schedules[rt.a.region].tie_power(rt.a.tie, t) +
                       res.schedules[rt.b.region].tie_power(rt.b.tie, t)) <= 1e-6,
              ErrorCode::internal, "corridor {} lost anti-symmetry at slot {}", rt.def->id, t);
  return res;
}

RegionDispatch disaggregate(const GridCase& c, const AggregatedModel& M, const Vec& x_bd) {
  auto rs = assemble_feasible_region(c);
  const FeasibleRegionHD& region = rs.first;
  const BoundarySelectors& sel = rs.second;
  require(M.T == sel.T && M.tie_ids == sel.tie_ids && M.angle_bus_ids == sel.angle_bus_ids,
          ErrorCode::invalid_argument, "model {} does not describe case {}", M.region_id,
          c.region_id);
  require(x_bd.size() == region.n_bd, ErrorCode::invalid_argument,
          "schedule has {} coordinates, the boundary has {}", x_bd.size(), region.n_bd);
  require(M.contains(x_bd, 1e-6), ErrorCode::invalid_argument,
          "schedule lies outside the aggregated model of region {}", M.region_id);

  ConicProblem p;
  p.add_vars(region.n_int, -kInf, kInf);
  for (int r = 0; r < region.rows(); ++r) {
    LinExpr e;
    for (SpMatR::InnerIterator it(region.F, r); it; ++it) e.add(it.col(), it.value());
    p.add_row_le(region.f(r), e);
  }
  for (int coord = 0; coord < region.n_bd; ++coord) {
    LinExpr e;
    for (int j = 0; j < region.n_int; ++j) e.add(j, region.C(coord, j));
    p.add_row_eq(x_bd(coord) - region.d(coord), e);
  }
  add_true_cost(p, c, region);

  SolveOutcome out = solve(p);
  if (out.status == SolveStatus::infeasible) {
    if (M.verified)
      fail(ErrorCode::internal,
           "soundness defect: region {}'s verified model accepted a schedule its grid cannot "
           "realize; replay with x_bd = {}",
           M.region_id, vec_to_json(x_bd).dump());
    fail(ErrorCode::infeasible,
         "schedule is not realizable; region {}'s model is unverified, so the certificate does "
         "not apply",
         M.region_id);
  }
  require(out.status == SolveStatus::optimal, ErrorCode::solver,
          "disaggregation solve came back {}: {}", to_string(out.status), out.detail);

  RegionDispatch d;
  d.region_id = c.region_id;
  d.x_int = out.x;
  d.cost = out.obj;
  const int T = c.T;
  d.gen_power = Mat::Zero(static_cast<int>(c.thermal_gens.size()), T);
  d.reserve_dn = d.gen_power;
  d.reserve_up = d.gen_power;
  d.renewable = Mat::Zero(static_cast<int>(c.renewables.size()), T);
  std::map<std::string, int> gpos, rpos;
  for (size_t g = 0; g < c.thermal_gens.size(); ++g) gpos[c.thermal_gens[g].id] = static_cast<int>(g);
  for (size_t k = 0; k < c.renewables.size(); ++k) rpos[c.renewables[k].id] = static_cast<int>(k);
  Mat theta = Mat::Zero(c.num_buses(), T);
  for (int t = 0; t < T; ++t) theta(c.bus_index(c.ref_bus), t) = c.ref_angle(t);
  for (int v = 0; v < region.n_int; ++v) {
    const VarLabel& lb = region.var_labels[v];
    if (lb.contingency != -1) continue;
    switch (lb.kind) {
      case VarKind::gen_power: d.gen_power(gpos.at(lb.element), lb.slot) = out.x(v); break;
      case VarKind::reserve_dn: d.reserve_dn(gpos.at(lb.element), lb.slot) = out.x(v); break;
      case VarKind::reserve_up: d.reserve_up(gpos.at(lb.element), lb.slot) = out.x(v); break;
      case VarKind::renewable_power: d.renewable(rpos.at(lb.element), lb.slot) = out.x(v); break;
      case VarKind::bus_angle:
        theta(c.bus_index(std::stoi(lb.element)), lb.slot) = out.x(v);
        break;
      default: break;
    }
  }
  d.line_flow = Mat::Zero(static_cast<int>(c.lines.size()), T);
  for (size_t l = 0; l < c.lines.size(); ++l)
    for (int t = 0; t < T; ++t)
      d.line_flow(static_cast<int>(l), t) =
          c.mva_base *
          (theta(c.bus_index(c.lines[l].from), t) - theta(c.bus_index(c.lines[l].to), t)) /
          c.lines[l].reactance;
  return d;
}

CoordinationResult centralized_solve(const std::vector<GridCase>& cases,
                                     const Interconnection& net, const CentralizedOptions& opts) {
  const int R = static_cast<int>(net.regions.size());
  require(static_cast<int>(cases.size()) == R, ErrorCode::invalid_argument,
          "{} cases for {} regions", cases.size(), R);
  std::vector<const GridCase*> C(R, nullptr);
  for (int r = 0; r < R; ++r) {
    for (const GridCase& c : cases)
      if (c.region_id == net.regions[r]) {
        require(C[r] == nullptr, ErrorCode::invalid_argument, "two cases claim region {}",
                net.regions[r]);
        C[r] = &c;
      }
    require(C[r] != nullptr, ErrorCode::invalid_argument, "no case for region {}",
            net.regions[r]);
  }

  std::vector<FeasibleRegionHD> regions(R);
  std::vector<BoundarySelectors> sels(R);
  std::vector<RegionFace> faces(R);
  long total_vars = 0;
  for (int r = 0; r < R; ++r) {
    auto rs = assemble_feasible_region(*C[r]);
    regions[r] = std::move(rs.first);
    sels[r] = std::move(rs.second);
    total_vars += regions[r].n_int;
    faces[r] = {&net.regions[r],    sels[r].T,         sels[r].dt,
                C[r]->mva_base,     &sels[r].tie_ids,  &sels[r].tie_bus,
                &sels[r].angle_bus_ids};
  }
  require(total_vars <= opts.max_vars, ErrorCode::limit,
          "joint problem has {} variables; the centralized oracle is capped at {}", total_vars,
          opts.max_vars);
  std::vector<ResolvedTie> ties = resolve_net(net, faces);
  const int T = faces[0].T;

  ConicProblem p;
  std::vector<std::string> fam;
  auto row = [&](std::string f, double lo, double hi, const LinExpr& e) {
    p.add_row(lo, hi, e);
    fam.push_back(std::move(f));
  };
  std::vector<int> x0(R);
  for (int r = 0; r < R; ++r) {
    x0[r] = p.add_vars(regions[r].n_int, -kInf, kInf);
    for (int i = 0; i < regions[r].rows(); ++i) {
      LinExpr e;
      for (SpMatR::InnerIterator it(regions[r].F, i); it; ++it) e.add(x0[r] + it.col(), it.value());
      row(fmt::format("{} {}", net.regions[r], row_family_name(regions[r].row_labels[i].family)),
          -kInf, regions[r].f(i), e);
    }
    add_true_cost(p, *C[r], regions[r], -1, x0[r]);
  }
  std::vector<int> f0 = add_frame_offsets(p, R, T, ties);

  // Boundary coordinate as an expression over region r's internal variables.
  auto bexpr = [&](int r, int coord) {
    LinExpr e({}, regions[r].d(coord));
    for (int j = 0; j < regions[r].n_int; ++j) e.add(x0[r] + j, regions[r].C(coord, j));
    return e;
  };

  for (const ResolvedTie& rt : ties) {
    double kc = rt.def->kind == TieKind::AC ? faces[rt.a.region].mva_base / rt.def->reactance : 0;
    const BoundarySelectors& sa = sels[rt.a.region];
    const BoundarySelectors& sb = sels[rt.b.region];
    for (int t = 0; t < T; ++t) {
      LinExpr pa = bexpr(rt.a.region, sa.tie_coords[rt.a.tie][t]);
      LinExpr pb = bexpr(rt.b.region, sb.tie_coords[rt.b.tie][t]);
      LinExpr anti = pa;
      axpy(anti, 1.0, pb);
      row(kFamAnti, 0.0, 0.0, anti);
      row(kFamCapacity, -rt.def->capacity, rt.def->capacity, pa);
      if (rt.def->kind == TieKind::AC) {
        LinExpr e = pa;
        axpy(e, -kc, bexpr(rt.a.region, sa.slot_coords[t][sa.num_ties() + rt.a.angle]));
        axpy(e, kc, bexpr(rt.b.region, sb.slot_coords[t][sb.num_ties() + rt.b.angle]));
        if (f0[rt.a.region] >= 0) e.add(f0[rt.a.region] + t, -kc);
        if (f0[rt.b.region] >= 0) e.add(f0[rt.b.region] + t, kc);
        row(kFamCoupling, 0.0, 0.0, e);
      }
    }
  }

  SolveOutcome out = solve(p, SolveOptions{.time_limit = opts.time_limit});
  CoordinationResult res;
  if (out.status == SolveStatus::infeasible) {
    res.status = SolveStatus::infeasible;
    res.note = name_infeasibility(p, fam);
    return res;
  }
  require(out.status == SolveStatus::optimal, ErrorCode::solver,
          "centralized solve came back {}: {}", to_string(out.status), out.detail);

  res.status = SolveStatus::optimal;
  res.objective = out.obj;
  for (int r = 0; r < R; ++r) {
    Vec x_int = out.x.segment(x0[r], regions[r].n_int);
    RegionSchedule s;
    s.region_id = net.regions[r];
    s.tie_ids = sels[r].tie_ids;
    s.angle_bus_ids = sels[r].angle_bus_ids;
    s.x_bd = regions[r].boundary_of(x_int);
    s.tie_power = Mat::Zero(sels[r].num_ties(), T);
    s.angle = Mat::Zero(static_cast<int>(sels[r].angle_bus_ids.size()), T);
    for (int t = 0; t < T; ++t) {
      for (int i = 0; i < sels[r].num_ties(); ++i)
        s.tie_power(i, t) = s.x_bd(sels[r].tie_coords[i][t]);
      for (int a = 0; a < static_cast<int>(sels[r].angle_bus_ids.size()); ++a)
        s.angle(a, t) = s.x_bd(sels[r].slot_coords[t][sels[r].num_ties() + a]);
    }
    s.frame_offset = f0[r] >= 0 ? Vec(out.x.segment(f0[r], T)) : Vec(Vec::Zero(T));
    s.kappa = Vec(T);
    for (int t = 0; t < T; ++t) s.kappa(t) = true_slot_cost(*C[r], regions[r], x_int, t);
    res.schedules.push_back(std::move(s));
  }
  return res;
}

}  // namespace gridagg

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gridagg/grid_case.h"
#include "gridagg/polytope.h"

namespace gridagg {

// Constraint families making up F x_int <= f. Tests audit that every family
// the case calls for is present, and infeasibility reports name one family.
enum class RowFamily {
  bus_balance,          // nodal balance at non-boundary buses (equality pair)
  line_limit,
  gen_power,            // reserve-backed output bounds
  gen_ramp,
  reserve_cap,
  reserve_requirement,
  renewable_bound,
  tie_capacity,
  copy_balance,         // contingency nodal balance, incl. boundary-bus consistency
  copy_line_limit,
  copy_device_bound,
  copy_deviation,
  copy_angle_shift,
  copy_gen_outage,      // outaged unit pinned to zero (equality pair)
};

const char* row_family_name(RowFamily family);

struct RowLabel {
  RowFamily family{};
  int slot = -1;         // ramp rows carry the earlier of the two slots
  int contingency = -1;  // -1 on base-case rows
  std::string element;   // bus/line/device/tie the row constrains
};

// x_int coordinate kinds. Bus angles are state variables: without them the
// boundary map x_bd = C x_int + d could not resolve how injections split
// across several tie-lines.
enum class VarKind {
  gen_power,
  reserve_dn,
  reserve_up,
  renewable_power,
  bus_angle,             // non-reference buses only
  copy_gen_power,
  copy_renewable_power,
  copy_bus_angle,
};

const char* var_kind_name(VarKind kind);

struct VarLabel {
  VarKind kind{};
  int slot = 0;
  int contingency = -1;
  std::string element;
};

struct BdLabel {
  bool is_angle = false;  // false: tie power, true: AC boundary-bus angle
  int slot = 0;
  std::string element;    // tie id, or bus id as decimal string for angles
};

// {[x_bd; x_int] | x_bd = C x_int + d, F x_int <= f}. Rows of F are plain
// inequalities; equalities appear as +/- row pairs. All rows are in MW or
// rad so tolerances compare across families.
struct FeasibleRegionHD {
  int n_bd = 0;
  int n_int = 0;
  Mat C;     // n_bd x n_int
  Vec d;     // n_bd
  SpMatR F;  // m x n_int
  Vec f;     // m
  std::vector<RowLabel> row_labels;
  std::vector<VarLabel> var_labels;
  std::vector<BdLabel> bd_labels;

  int rows() const { return static_cast<int>(F.rows()); }
  Vec boundary_of(const Vec& x_int) const;  // C x_int + d
  Mat dense_F() const { return Mat(F); }
};

// Boundary layout contract: slot-major; within a slot, tie powers ordered by
// tie id, then AC boundary angles by bus id.
struct BoundarySelectors {
  int T = 0;
  int n_bd = 0;
  int per_slot = 0;
  double dt = 1.0;                             // hours per slot
  std::vector<std::string> tie_ids;            // layout order
  std::vector<int> tie_bus;                    // boundary bus per tie
  std::vector<int> angle_bus_ids;              // layout order
  std::vector<std::vector<int>> tie_coords;    // tie -> T coordinates
  std::vector<std::vector<int>> slot_coords;   // slot -> per_slot coordinates

  int num_ties() const { return static_cast<int>(tie_ids.size()); }
  Mat S_tie(int i) const;  // 0/1, T x n_bd, selects p_tie_i across slots
  Mat H_bd(int t) const;   // 0/1, per_slot x n_bd, selects x_bd_t
};

// tie_ids must already be in layout (sorted) order, tie_bus aligned with it.
BoundarySelectors make_selectors(int T, double dt, std::vector<std::string> tie_ids,
                                 std::vector<int> tie_bus, std::vector<int> angle_bus_ids);

BoundarySelectors boundary_layout(const GridCase& c);

// Builds the full operating region of one case: device, reserve, ramp,
// network, tie-capacity, and N-1 copy constraints. Verifies nonemptiness
// with one feasibility solve; an infeasible case fails naming the constraint
// family with the largest certificate weight.
std::pair<FeasibleRegionHD, BoundarySelectors> assemble_feasible_region(const GridCase& c);

// Per-family row counts and per-kind coordinate counts, for audits.
struct RegionCensus {
  std::vector<std::pair<std::string, int>> row_families;  // name -> count
  std::vector<std::pair<std::string, int>> var_kinds;     // name -> count
};

RegionCensus region_census(const FeasibleRegionHD& region);

}  // namespace gridagg

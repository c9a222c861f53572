# Emits the test corpus. Values are chosen so hand oracles stay exact:
# 1-bus windows, the two-region corner dispatch, and the narrow-total-range
# multi-bus grids whose tie sums live in a thin diagonal band.
import json
import os

HERE = os.path.dirname(os.path.abspath(__file__))


def write(name, doc):
    with open(os.path.join(HERE, name), "w") as f:
        json.dump(doc, f, indent=2)
        f.write("\n")


def case(region_id, T, buses, ref_bus, gens, loads, ties, lines=None, renewables=None,
         reserve_up=None, reserve_dn=None, contingencies=None, dt=1.0):
    doc = {
        "schema": "gridagg-case-v1",
        "region_id": region_id,
        "horizon": T,
        "dt_hours": dt,
        "mva_base": 100.0,
        "buses": buses,
        "ref_bus": ref_bus,
    }
    if lines:
        doc["lines"] = lines
    doc["thermal_gens"] = gens
    if renewables:
        doc["renewables"] = renewables
    doc["loads"] = loads
    doc["tie_lines"] = ties
    if reserve_dn is not None:
        doc["reserve_req_dn"] = reserve_dn
    if reserve_up is not None:
        doc["reserve_req_up"] = reserve_up
    if contingencies:
        doc["contingencies"] = contingencies
    return doc


def bus(i, ac=False):
    b = {"id": i}
    if ac:
        b["is_boundary_ac"] = True
    return b


def gen(gid, b, lo, hi, ramp, a, bb, extra=None):
    g = {"id": gid, "bus": b, "p_min": lo, "p_max": hi, "ramp_dn": ramp, "ramp_up": ramp,
         "cost": {"a": a, "b": bb}}
    if extra:
        g.update(extra)
    return g


def line(lid, f, t, x, cap):
    return {"id": lid, "from": f, "to": t, "reactance": x, "capacity": cap}


def dc_tie(tid, b, cap):
    return {"id": tid, "kind": "DC", "boundary_bus": b, "capacity": cap}


# ---------------------------------------------------------------- 1-bus ----
# p_tie = g - load; [10,50] gen and load 20 puts the window at [-10, 30].
write("case_1bus_t1.json", case(
    "solo", 1,
    [bus(1)], 1,
    [gen("g1", 1, 10, 50, 100, 0.01, 10)],
    [{"bus": 1, "demand": 20}],
    [dc_tie("tie", 1, 100)]))

# Upward reserve of 5 MW must fit under p_max, so the window drops to 25.
write("case_1bus_t1_reserve.json", case(
    "solo_r", 1,
    [bus(1)], 1,
    [gen("g1", 1, 10, 50, 100, 0.01, 10,
         {"cost": {"a": 0.01, "b": 10, "price_reserve_up": 2, "price_reserve_dn": 1}})],
    [{"bus": 1, "demand": 20}],
    [dc_tie("tie", 1, 100)],
    reserve_up=5))

# Ramp-coupled two-slot window: p in [-20, 80] per slot, |p1 - p0| <= 50.
write("case_1bus_t2_ramp.json", case(
    "ramped", 2,
    [bus(1)], 1,
    [gen("g1", 1, 0, 100, 50, 0.02, 15)],
    [{"bus": 1, "demand": 20}],
    [dc_tie("tie", 1, 200)]))

write("case_1bus_t4.json", case(
    "solo4", 4,
    [bus(1)], 1,
    [gen("g1", 1, 10, 50, 15, 0.01, 10)],
    [{"bus": 1, "demand": [20, 25, 30, 25]}],
    [dc_tie("tie", 1, 100)]))

# ------------------------------------------------------ 3-bus AC corner ----
# One AC tie at bus 3; the gen split between buses 1 and 2 moves the
# boundary angle independently of the export, so the (p, theta) slice has
# interior. Window oracle: p in [-40, 40] (tie capacity binds below the
# generation range).
write("case_3bus_ac_t1.json", case(
    "triad", 1,
    [bus(1), bus(2), bus(3, ac=True)], 1,
    [gen("ga", 1, 0, 60, 100, 0.01, 15), gen("gb", 2, 0, 60, 100, 0.01, 18)],
    [{"bus": 1, "demand": 30}, {"bus": 2, "demand": 10}],
    [{"id": "ta", "kind": "AC", "boundary_bus": 3, "reactance": 0.2, "capacity": 40}],
    lines=[line("l12", 1, 2, 0.1, 100), line("l13", 1, 3, 0.1, 100),
           line("l23", 2, 3, 0.1, 100)]))

# ---------------------------------------------------------------- 6-bus ----
# Generation total spans [40, 70] (+ up to 8 MW wind) against 30 MW load, so
# the two tie powers live in a diagonal band: an axis box covers little of
# it, a per-slot ellipsoid much more. Gen ramps are tight enough to couple
# consecutive slots through the total.
def six_bus(region_id, T):
    wind = {1: 6, 2: [6, 8], 4: [6, 8, 6, 5], 8: [6, 8, 6, 5, 6, 8, 6, 5]}[T]
    return case(
        region_id, T,
        [bus(i) for i in range(1, 7)], 1,
        [gen("g1", 1, 15, 25, 5, 0.012, 14),
         gen("g2", 2, 15, 25, 5, 0.015, 16),
         gen("g3", 3, 10, 20, 5, 0.02, 20)],
        [{"bus": 4, "demand": 10}, {"bus": 5, "demand": 10}, {"bus": 6, "demand": 10}],
        [dc_tie("t5", 5, 35), dc_tie("t6", 6, 35)],
        lines=[line("l14", 1, 4, 0.08, 40), line("l25", 2, 5, 0.08, 40),
               line("l36", 3, 6, 0.08, 40), line("l45", 4, 5, 0.06, 60),
               line("l56", 5, 6, 0.06, 60), line("l46", 4, 6, 0.06, 60)],
        renewables=[{"id": "w4", "bus": 4, "forecast_max": wind}],
        contingencies=[{"kind": "line", "element": "l45", "max_angle_shift": 0.5}])


write("case_6bus_2tie_t2.json", six_bus("hex2", 2))
write("case_6bus_2tie_t4.json", six_bus("hex4", 4))
write("case_6bus_2tie_t8.json", six_bus("hex8", 8))

# --------------------------------------------------------------- 14-bus ----
LINES14 = [
    ("l0102", 1, 2, 0.059, 160), ("l0105", 1, 5, 0.223, 100),
    ("l0203", 2, 3, 0.198, 100), ("l0204", 2, 4, 0.176, 100),
    ("l0205", 2, 5, 0.174, 100), ("l0304", 3, 4, 0.171, 100),
    ("l0405", 4, 5, 0.042, 120), ("l0407", 4, 7, 0.209, 80),
    ("l0506", 5, 6, 0.252, 80), ("l0611", 6, 11, 0.199, 60),
    ("l0612", 6, 12, 0.256, 60), ("l0613", 6, 13, 0.130, 80),
    ("l0708", 7, 8, 0.176, 60), ("l0709", 7, 9, 0.110, 80),
    ("l0910", 9, 10, 0.085, 60), ("l0914", 9, 14, 0.270, 60),
    ("l1011", 10, 11, 0.192, 60), ("l1213", 12, 13, 0.200, 40),
    ("l1314", 13, 14, 0.348, 60),
]


def fourteen_bus(region_id, T):
    return case(
        region_id, T,
        [bus(i) for i in range(1, 15)], 1,
        [gen("g1", 1, 25, 40, 8, 0.01, 12),
         gen("g2", 2, 25, 40, 8, 0.012, 15),
         gen("g3", 3, 18, 30, 6, 0.015, 18),
         gen("g6", 6, 12, 20, 5, 0.02, 22),
         gen("g8", 8, 12, 20, 5, 0.02, 24)],
        [{"bus": 4, "demand": 12}, {"bus": 5, "demand": 10}, {"bus": 9, "demand": 12},
         {"bus": 10, "demand": 8}, {"bus": 11, "demand": 6}, {"bus": 12, "demand": 6},
         {"bus": 13, "demand": 10}, {"bus": 14, "demand": 8}],
        [dc_tie("t12", 12, 30), dc_tie("t13", 13, 30), dc_tie("t14", 14, 30)],
        lines=[line(*spec) for spec in LINES14])


write("case_14bus_3tie_t1.json", fourteen_bus("quattuor1", 1))
write("case_14bus_3tie_t4.json", fourteen_bus("quattuor4", 4))
write("case_14bus_3tie_t8.json", fourteen_bus("quattuor8", 8))

# --------------------------------------------------------------- 30-bus ----
lines30 = [line(f"r{i:02d}", i, i + 1, 0.1, 80) for i in range(1, 30)]
lines30.append(line("r30", 30, 1, 0.1, 80))
lines30 += [line("c0115", 1, 15, 0.15, 60), line("c0520", 5, 20, 0.15, 60),
            line("c1025", 10, 25, 0.15, 60), line("c0327", 3, 27, 0.2, 50),
            line("c0822", 8, 22, 0.2, 50)]

write("case_30bus_2tie_t4.json", case(
    "triginta", 4,
    [bus(i) for i in range(1, 31)], 1,
    [gen("g1", 1, 20, 35, 8, 0.01, 12),
     gen("g5", 5, 20, 35, 8, 0.012, 14),
     gen("g10", 10, 15, 30, 6, 0.014, 16),
     gen("g15", 15, 15, 25, 6, 0.016, 18),
     gen("g20", 20, 10, 20, 5, 0.02, 20),
     gen("g25", 25, 10, 20, 5, 0.02, 22)],
    [{"bus": b, "demand": 8} for b in [2, 4, 6, 9, 11, 14, 17, 19, 22, 24, 27, 28]],
    [dc_tie("t29", 29, 40), dc_tie("t30", 30, 40)],
    lines=lines30,
    renewables=[{"id": "w12", "bus": 12, "forecast_max": [10, 12, 10, 8]}]))

# -------------------------------------------------- coordination regions ----
# Marginal costs are ordered west < north < east, so both corridors of the
# three-region chain saturate: 15 MW west->east and 20 MW north->east.
write("case_west_t2.json", case(
    "west", 2,
    [bus(1)], 1,
    [gen("gw", 1, 0, 100, 100, 0.01, 10)],
    [{"bus": 1, "demand": [10, 12]}],
    [dc_tie("xw", 1, 50)]))

write("case_east_t2.json", case(
    "east", 2,
    [bus(1)], 1,
    [gen("ge", 1, 0, 100, 100, 0.01, 30)],
    [{"bus": 1, "demand": [40, 38]}],
    [dc_tie("xe", 1, 50)]))

write("case_east2_t2.json", case(
    "east2", 2,
    [bus(1), bus(2)], 1,
    [gen("ge", 1, 0, 100, 100, 0.01, 30)],
    [{"bus": 1, "demand": [40, 38]}],
    [dc_tie("xe1", 1, 50), dc_tie("xe2", 2, 50)],
    lines=[line("l12", 1, 2, 0.05, 100)]))

write("case_north_t2.json", case(
    "north", 2,
    [bus(1)], 1,
    [gen("gn", 1, 0, 100, 100, 0.01, 20)],
    [{"bus": 1, "demand": 30}],
    [dc_tie("xn", 1, 50)]))

write("net_we.json", {
    "schema": "gridagg-net-v1",
    "regions": ["west", "east"],
    "ties": [{"id": "we", "region_a": "west", "tie_a": "xw",
              "region_b": "east", "tie_b": "xe", "kind": "DC", "capacity": 15}],
})

write("net_three.json", {
    "schema": "gridagg-net-v1",
    "regions": ["west", "east2", "north"],
    "ties": [{"id": "we", "region_a": "west", "tie_a": "xw",
              "region_b": "east2", "tie_b": "xe1", "kind": "DC", "capacity": 15},
             {"id": "en", "region_a": "east2", "tie_a": "xe2",
              "region_b": "north", "tie_b": "xn", "kind": "DC", "capacity": 20}],
})

print("fixtures written to", HERE)

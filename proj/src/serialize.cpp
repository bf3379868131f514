#include "morbit/serialize.hpp"

namespace morbit {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(where + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

std::string str_field(const Json& j, const std::string& key,
                      const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_string()) fail(where, "field '" + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Num parse_num(const Json& j, NumberMode mode) {
  if (j.is_string()) {
    Rat r = parse_rational(j.get<std::string>());
    if (mode == NumberMode::kFloat) return Num(rat_to_double(r));
    return Num(r);
  }
  if (j.is_number_integer()) {
    long long v = j.get<long long>();
    if (mode == NumberMode::kFloat) return Num(static_cast<double>(v));
    return Num(v);
  }
  if (j.is_number_float()) return Num(j.get<double>());
  fail("number", "expected a rational string or a number");
}

Json num_to_json(const Num& n) {
  if (n.exact()) return Json(rat_to_string(n.rat()));
  return Json(n.value());
}

Point parse_point(const Json& j, NumberMode mode, Rng* rng) {
  if (!j.is_object()) fail("point", "expected an object");
  std::string kind = str_field(j, "kind", "point");
  if (kind == "interval") return IntervalPoint{parse_num(field(j, "value", "point"), mode)};
  if (kind == "circle")
    return circle_point(parse_num(field(j, "angle", "point"), mode));
  if (kind == "shift") {
    int m = j.value("alphabet", 2);
    std::string pre = j.value("pre", std::string());
    return ShiftPoint(m, pre, str_field(j, "period", "point"));
  }
  if (kind == "shift_random") {
    if (!rng) fail("point", "shift_random needs a seeded run context");
    int m = j.value("alphabet", 2);
    auto len = field(j, "length", "point").get<long long>();
    if (len < 1) fail("point", "length must be >= 1");
    std::string style = j.value("style", std::string("periodic"));
    if (style == "periodic")
      return random_periodic_shift_point(*rng, m, static_cast<std::size_t>(len));
    if (style == "prefix")
      return random_prefix_shift_point(*rng, m, static_cast<std::size_t>(len));
    fail("point", "unknown shift_random style '" + style + "'");
  }
  fail("point", "unknown kind '" + kind + "'");
}

Json point_to_json(const Point& p) {
  Json j;
  if (const auto* ip = std::get_if<IntervalPoint>(&p)) {
    j["kind"] = "interval";
    j["value"] = num_to_json(ip->value);
  } else if (const auto* cp = std::get_if<CirclePoint>(&p)) {
    j["kind"] = "circle";
    j["angle"] = num_to_json(cp->angle);
  } else {
    const auto& sp = std::get<ShiftPoint>(p);
    j["kind"] = "shift";
    j["pre"] = sp.pre;
    j["period"] = sp.period;
    j["alphabet"] = sp.alphabet;
  }
  return j;
}

System parse_system(const Json& j, NumberMode mode) {
  if (!j.is_object()) fail("system", "expected an object");
  std::string kind = str_field(j, "kind", "system");
  if (kind == "tent") return PiecewiseLinearInterval::tent();
  if (kind == "swap") return PiecewiseLinearInterval::swap_halves();
  if (kind == "valley") return PiecewiseLinearInterval::valley();
  if (kind == "piecewise_linear") {
    std::vector<Rat> bps;
    for (const Json& b : field(j, "breakpoints", "system"))
      bps.push_back(parse_num(b, NumberMode::kExact).rat());
    std::vector<PiecewiseLinearInterval::Piece> pieces;
    for (const Json& p : field(j, "pieces", "system"))
      pieces.push_back({parse_num(field(p, "slope", "system.pieces"),
                                  NumberMode::kExact).rat(),
                        parse_num(field(p, "intercept", "system.pieces"),
                                  NumberMode::kExact).rat()});
    return PiecewiseLinearInterval(std::move(bps), std::move(pieces));
  }
  if (kind == "general_interval")
    return make_general_interval(str_field(j, "name", "system"));
  if (kind == "circle_rotation")
    return CircleRotation{parse_num(field(j, "alpha", "system"), mode)};
  if (kind == "full_shift") return FullShift{j.value("alphabet", 2)};
  fail("system", "unknown kind '" + kind + "'");
}

Json system_to_json(const System& s) {
  Json j;
  j["kind"] = system_kind(s);
  if (const auto* pwl = std::get_if<PiecewiseLinearInterval>(&s)) {
    Json bps = Json::array();
    for (const Rat& b : pwl->breakpoints) bps.push_back(rat_to_string(b));
    j["breakpoints"] = bps;
    Json pieces = Json::array();
    for (const auto& p : pwl->pieces) {
      Json piece;
      piece["slope"] = rat_to_string(p.slope);
      piece["intercept"] = rat_to_string(p.intercept);
      pieces.push_back(piece);
    }
    j["pieces"] = pieces;
  } else if (const auto* gen = std::get_if<GeneralInterval>(&s)) {
    j["name"] = gen->name;
  } else if (const auto* rot = std::get_if<CircleRotation>(&s)) {
    j["alpha"] = num_to_json(rot->alpha);
  } else {
    j["alphabet"] = std::get<FullShift>(s).alphabet;
  }
  return j;
}

DiscreteMeasure parse_measure(const Json& j, NumberMode mode, Rng* rng) {
  if (!j.is_object()) fail("measure", "expected an object");
  std::vector<Point> support;
  for (const Json& p : field(j, "support", "measure"))
    support.push_back(parse_point(p, mode, rng));
  std::vector<Rat> weights;
  for (const Json& w : field(j, "weights", "measure"))
    weights.push_back(parse_num(w, NumberMode::kExact).rat());
  return DiscreteMeasure::make(std::move(support), std::move(weights));
}

Json measure_to_json(const DiscreteMeasure& m) {
  Json j;
  Json support = Json::array();
  for (const Point& p : m.support) support.push_back(point_to_json(p));
  Json weights = Json::array();
  for (const Rat& w : m.weights) weights.push_back(rat_to_string(w));
  j["support"] = support;
  j["weights"] = weights;
  return j;
}

Json plan_to_json(const TransportPlan& plan) {
  Json j;
  j["cost"] = num_to_json(plan.cost);
  Json arcs = Json::array();
  for (const auto& arc : plan.arcs) {
    Json a;
    a["from"] = arc.from;
    a["to"] = arc.to;
    a["mass"] = rat_to_string(arc.mass);
    arcs.push_back(a);
  }
  j["arcs"] = arcs;
  return j;
}

BlockSchedule parse_schedule(const System& s, const Json& j, NumberMode mode,
                             Rng* rng) {
  if (!j.is_object()) fail("schedule", "expected an object");
  BlockSchedule sched;
  std::string sched_mode = j.value("mode", std::string("relaxed"));
  if (sched_mode == "strict")
    sched.strict = true;
  else if (sched_mode != "relaxed")
    fail("schedule", "mode must be 'strict' or 'relaxed'");
  for (const Json& sj : field(j, "stages", "schedule")) {
    ScheduleStage st;
    st.measure = parse_measure(field(sj, "measure", "schedule.stage"), mode, rng);
    for (const Json& p : field(sj, "generic_points", "schedule.stage")) {
      Point pt = parse_point(p, mode, rng);
      require_compatible(s, pt);
      st.generic_points.push_back(pt);
    }
    st.q = field(sj, "q", "schedule.stage").get<long long>();
    st.repeats = sj.value("repeats", 1LL);
    if (sj.contains("eps"))
      st.eps = parse_num(sj["eps"], NumberMode::kExact).rat();
    sched.stages.push_back(std::move(st));
  }
  if (sched.stages.empty()) fail("schedule", "needs at least one stage");
  return sched;
}

PeriodicDecomposition parse_decomposition(const Json& j) {
  if (!j.is_object()) fail("decomposition", "expected an object");
  PeriodicDecomposition d;
  for (const Json& set : field(j, "sets", "decomposition")) {
    std::vector<std::pair<Rat, Rat>> parts;
    for (const Json& part : set) {
      if (!part.is_array() || part.size() != 2)
        fail("decomposition", "each part must be a [lo, hi] pair");
      parts.push_back({parse_num(part[0], NumberMode::kExact).rat(),
                       parse_num(part[1], NumberMode::kExact).rat()});
    }
    d.sets.push_back(IntervalUnion::make(std::move(parts)));
  }
  if (d.sets.empty()) fail("decomposition", "needs at least one set");
  return d;
}

Json decomposition_to_json(const PeriodicDecomposition& d) {
  Json sets = Json::array();
  for (const IntervalUnion& u : d.sets) {
    Json parts = Json::array();
    for (const auto& [lo, hi] : u.parts)
      parts.push_back(Json::array({rat_to_string(lo), rat_to_string(hi)}));
    sets.push_back(parts);
  }
  Json j;
  j["sets"] = sets;
  return j;
}

Json periodic_orbit_to_json(const PeriodicOrbit& orbit) {
  Json j;
  j["base"] = point_to_json(orbit.base);
  j["period"] = orbit.period;
  Json pts = Json::array();
  for (const Point& p : orbit.points) pts.push_back(point_to_json(p));
  j["orbit"] = pts;
  j["measure"] = measure_to_json(orbit.measure);
  return j;
}

namespace {

Json candidate_to_json(const CandidateRecord& c) {
  Json j;
  j["candidate"] = c.description;
  j["n"] = c.n;
  j["cost"] = num_to_json(c.cost);
  return j;
}

Json caps_to_json(const SearchCaps& caps) {
  Json j;
  j["period_cap"] = caps.period_cap;
  j["horizon_cap"] = caps.horizon_cap;
  j["assignment_cap"] = caps.assignment_cap;
  j["rounds"] = caps.rounds;
  return j;
}

}  // namespace

Json density_result_to_json(const DensityResult& r) {
  Json j;
  j["found"] = r.witness.has_value();
  if (r.witness) {
    Json w;
    w["target"] = r.witness->target;
    w["n"] = r.witness->n;
    w["cost"] = num_to_json(r.witness->cost);
    w["orbit"] = periodic_orbit_to_json(r.witness->orbit);
    j["witness"] = w;
  }
  if (r.best) j["best"] = candidate_to_json(*r.best);
  j["candidates_tried"] = r.candidates_tried;
  j["caps"] = caps_to_json(r.caps);
  return j;
}

Json closable_result_to_json(const ClosableResult& r) {
  Json j;
  j["found"] = r.witness.has_value();
  if (r.witness) {
    Json w;
    w["p"] = r.witness->p;
    w["q"] = r.witness->q;
    w["sup_dist"] = num_to_json(r.witness->sup_dist);
    w["orbit"] = periodic_orbit_to_json(r.witness->y);
    j["witness"] = w;
  }
  if (r.best) j["best"] = candidate_to_json(*r.best);
  j["caps"] = caps_to_json(r.caps);
  return j;
}

Json linkable_result_to_json(const LinkableResult& r) {
  Json j;
  j["found"] = r.witness.has_value();
  if (r.witness) {
    Json w;
    w["p1"] = r.witness->p1;
    w["p2"] = r.witness->p2;
    w["q1"] = r.witness->q1;
    w["q2"] = r.witness->q2;
    w["cost"] = num_to_json(r.witness->cost);
    w["orbit"] = periodic_orbit_to_json(r.witness->z);
    j["witness"] = w;
  }
  if (r.best) j["best"] = candidate_to_json(*r.best);
  j["caps"] = caps_to_json(r.caps);
  return j;
}

Json vset_to_json(const MeasureLimitSetEstimate& est) {
  Json j;
  j["checkpoints"] = est.checkpoints;
  Json snaps = Json::array();
  for (const DiscreteMeasure& m : est.snapshots) snaps.push_back(measure_to_json(m));
  j["snapshots"] = snaps;
  Json matrix = Json::array();
  for (const auto& row : est.pairwise_gamma) {
    Json r = Json::array();
    for (const Num& g : row) r.push_back(num_to_json(g));
    matrix.push_back(r);
  }
  j["pairwise_gamma"] = matrix;
  j["coarsen_bins"] = est.coarsen_bins;
  j["coarsen_error"] = num_to_json(est.coarsen_error);
  return j;
}

}  // namespace morbit

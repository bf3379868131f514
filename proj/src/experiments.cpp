#include "morbit/experiments.hpp"

#include <fstream>

#include "morbit/version.hpp"

namespace morbit {

uint64_t fnv1a_hash(const std::string& bytes) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

struct RunContext {
  NumberMode mode = NumberMode::kExact;
  uint64_t seed = 0;
  Rng rng;
  System system = FullShift{2};
  std::string hash_hex;
  std::filesystem::path out_dir;
  Json out_json;         // accumulated JSON report
  std::string json_name; // output file names
  std::string csv_name;
  std::string csv_body;  // header+rows, meta line prepended on write
  int threads = 1;
};

std::string hex_of(uint64_t h) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const Json& need(const Json& j, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) throw Error("config: missing field '" + key + "'");
  return *it;
}

std::vector<long long> parse_horizons(const Json& j) {
  std::vector<long long> out;
  if (j.is_array()) {
    for (const Json& v : j) out.push_back(v.get<long long>());
  } else if (j.is_object()) {
    long long n0 = need(j, "start").get<long long>();
    int count = need(j, "doublings").get<int>();
    out = doubling_horizons(n0, count);
  } else {
    throw Error("config: horizons must be a list or {start, doublings}");
  }
  if (out.empty()) throw Error("config: empty horizon list");
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    if (out[i] >= out[i + 1])
      throw Error("config: horizons must be strictly increasing");
  return out;
}

SearchCaps parse_caps(const Json& cfg) {
  SearchCaps caps;
  if (!cfg.contains("caps")) return caps;
  const Json& j = cfg["caps"];
  caps.period_cap = j.value("period_cap", caps.period_cap);
  caps.horizon_cap = j.value("horizon_cap", caps.horizon_cap);
  caps.assignment_cap = j.value("assignment_cap", caps.assignment_cap);
  caps.rounds = j.value("rounds", caps.rounds);
  return caps;
}

PeriodicSource parse_source(RunContext& ctx, const Json& cfg,
                            const SearchCaps& caps) {
  PeriodicSource src;
  src.shift_closing = cfg.value("shift_closing", false);
  if (!cfg.contains("source")) return src;
  const Json& j = cfg["source"];
  std::string kind = need(j, "kind").get<std::string>();
  if (kind == "interval_periodic") {
    const auto* pwl = std::get_if<PiecewiseLinearInterval>(&ctx.system);
    if (!pwl) throw Error("config.source: interval_periodic needs a piecewise_linear system");
    int pcap = j.value("period_cap", caps.period_cap);
    std::set<std::string> seen;
    for (int p = 1; p <= pcap; ++p)
      for (PeriodicOrbit& orb : interval_periodic_points(*pwl, p))
        if (seen.insert(point_to_string(orb.base)).second)
          src.orbits.push_back(std::move(orb));
  } else if (kind == "shift_necklaces") {
    const auto* sh = std::get_if<FullShift>(&ctx.system);
    if (!sh) throw Error("config.source: shift_necklaces needs a full_shift system");
    int pcap = j.value("period_cap", caps.period_cap);
    std::set<std::string> seen;
    for (PeriodicOrbit& orb : enumerate_shift_periodic(sh->alphabet, pcap))
      if (seen.insert(point_to_string(orb.base)).second)
        src.orbits.push_back(std::move(orb));
  } else if (kind == "explicit") {
    for (const Json& p : need(j, "points"))
      src.orbits.push_back(
          make_periodic_orbit(ctx.system, parse_point(p, ctx.mode, &ctx.rng)));
  } else {
    throw Error("config.source: unknown kind '" + kind + "'");
  }
  return src;
}

void csv_line(std::string& body, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const std::string& c : cells) {
    if (!first) body += ',';
    body += c;
    first = false;
  }
  body += '\n';
}

std::string num_csv(const Num& v) {
  return v.exact() ? format_double(rat_to_double(v.rat())) : format_double(v.value());
}

// ---- kind handlers ------------------------------------------------------

int run_dist(RunContext& ctx, const Json& cfg) {
  std::vector<Point> a, b;
  for (const Json& p : need(cfg, "points_a"))
    a.push_back(parse_point(p, ctx.mode, &ctx.rng));
  for (const Json& p : need(cfg, "points_b"))
    b.push_back(parse_point(p, ctx.mode, &ctx.rng));
  CostMatrix m = cost_matrix(ctx.system, a, b);
  csv_line(ctx.csv_body, {"i", "j", "dist"});
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      csv_line(ctx.csv_body,
               {std::to_string(i), std::to_string(j), num_csv(m.at(i, j))});
      rows.push_back(num_to_json(m.at(i, j)));
    }
  }
  ctx.out_json["rows"] = m.rows;
  ctx.out_json["cols"] = m.cols;
  ctx.out_json["entries"] = rows;
  return kExitOk;
}

int run_ebar(RunContext& ctx, const Json& cfg) {
  Point x = parse_point(need(cfg, "x"), ctx.mode, &ctx.rng);
  Point y = parse_point(need(cfg, "y"), ctx.mode, &ctx.rng);
  std::vector<long long> horizons = parse_horizons(need(cfg, "horizons"));
  int tail = cfg.value("tail_window", 3);
  tail = std::min<int>(tail, static_cast<int>(horizons.size()));
  EbarEstimate est = ebar_estimate(ctx.system, x, y, horizons, tail, {},
                                   ctx.threads);
  csv_line(ctx.csv_body, {"horizon", "value"});
  for (std::size_t i = 0; i < est.horizons.size(); ++i)
    csv_line(ctx.csv_body,
             {std::to_string(est.horizons[i]), num_csv(est.values[i])});
  ctx.out_json["horizons"] = est.horizons;
  Json vals = Json::array();
  for (const Num& v : est.values) vals.push_back(num_to_json(v));
  ctx.out_json["values"] = vals;
  ctx.out_json["tail_window"] = est.tail_window;
  ctx.out_json["limsup_estimate"] = num_to_json(est.limsup_estimate);
  return kExitOk;
}

int run_vset(RunContext& ctx, const Json& cfg) {
  Point x = parse_point(need(cfg, "x"), ctx.mode, &ctx.rng);
  std::vector<long long> checkpoints = parse_horizons(need(cfg, "checkpoints"));
  int bins = cfg.value("coarsen_bins", 64);
  MeasureLimitSetEstimate est = vset_estimate(ctx.system, x, checkpoints, bins);
  csv_line(ctx.csv_body, {"i", "j", "gamma"});
  for (std::size_t i = 0; i < est.checkpoints.size(); ++i)
    for (std::size_t j = 0; j < est.checkpoints.size(); ++j)
      csv_line(ctx.csv_body, {std::to_string(est.checkpoints[i]),
                              std::to_string(est.checkpoints[j]),
                              num_csv(est.pairwise_gamma[i][j])});
  ctx.out_json["vset"] = vset_to_json(est);
  return kExitOk;
}

int run_density(RunContext& ctx, const Json& cfg) {
  std::vector<Point> targets;
  for (const Json& p : need(cfg, "targets"))
    targets.push_back(parse_point(p, ctx.mode, &ctx.rng));
  if (targets.empty()) throw Error("config.targets: empty");
  Num eps = parse_num(need(cfg, "eps"), NumberMode::kExact);
  long long min_horizon = cfg.value("min_horizon", 1LL);
  SearchCaps caps = parse_caps(cfg);
  PeriodicSource src = parse_source(ctx, cfg, caps);
  DensityResult res =
      targets.size() == 1
          ? check_density_ergodic(ctx.system, src, targets[0], eps, min_horizon,
                                  caps)
          : check_density_convex(ctx.system, src, targets, eps, min_horizon,
                                 caps);
  ctx.out_json["eps"] = num_to_json(eps);
  ctx.out_json["min_horizon"] = min_horizon;
  ctx.out_json["result"] = density_result_to_json(res);
  csv_line(ctx.csv_body, {"found", "n", "cost"});
  if (res.witness)
    csv_line(ctx.csv_body, {"1", std::to_string(res.witness->n),
                            num_csv(res.witness->cost)});
  else if (res.best)
    csv_line(ctx.csv_body, {"0", std::to_string(res.best->n),
                            num_csv(res.best->cost)});
  return res.witness ? kExitOk : kExitCapExhausted;
}

int run_closable(RunContext& ctx, const Json& cfg) {
  Point x = parse_point(need(cfg, "x"), ctx.mode, &ctx.rng);
  Num eps = parse_num(need(cfg, "eps"), NumberMode::kExact);
  long long min_n = cfg.value("min_n", 1LL);
  SearchCaps caps = parse_caps(cfg);
  PeriodicSource src = parse_source(ctx, cfg, caps);
  ClosableResult res = check_closable(ctx.system, src, x, eps, min_n, caps);
  ctx.out_json["eps"] = num_to_json(eps);
  ctx.out_json["result"] = closable_result_to_json(res);
  csv_line(ctx.csv_body, {"found", "p", "q", "sup_dist"});
  if (res.witness)
    csv_line(ctx.csv_body,
             {"1", std::to_string(res.witness->p), std::to_string(res.witness->q),
              num_csv(res.witness->sup_dist)});
  else if (res.best)
    csv_line(ctx.csv_body, {"0", "0", std::to_string(res.best->n),
                            num_csv(res.best->cost)});
  return res.witness ? kExitOk : kExitCapExhausted;
}

int run_linkable(RunContext& ctx, const Json& cfg) {
  PeriodicOrbit y1 = make_periodic_orbit(
      ctx.system, parse_point(need(cfg, "y1"), ctx.mode, &ctx.rng));
  PeriodicOrbit y2 = make_periodic_orbit(
      ctx.system, parse_point(need(cfg, "y2"), ctx.mode, &ctx.rng));
  Rat lambda = parse_num(need(cfg, "lambda"), NumberMode::kExact).rat();
  Num eps = parse_num(need(cfg, "eps"), NumberMode::kExact);
  SearchCaps caps = parse_caps(cfg);
  PeriodicSource src = parse_source(ctx, cfg, caps);
  LinkableResult res =
      check_linkable_pair(ctx.system, y1, y2, lambda, eps, src, caps);
  ctx.out_json["lambda"] = rat_to_string(lambda);
  ctx.out_json["eps"] = num_to_json(eps);
  ctx.out_json["result"] = linkable_result_to_json(res);
  csv_line(ctx.csv_body, {"found", "q2", "cost"});
  if (res.witness)
    csv_line(ctx.csv_body, {"1", std::to_string(res.witness->q2),
                            num_csv(res.witness->cost)});
  else if (res.best)
    csv_line(ctx.csv_body,
             {"0", std::to_string(res.best->n), num_csv(res.best->cost)});
  return res.witness ? kExitOk : kExitCapExhausted;
}

int run_aapo(RunContext& ctx, const Json& cfg) {
  BlockSchedule sched =
      parse_schedule(ctx.system, need(cfg, "schedule"), ctx.mode, &ctx.rng);
  ScheduleReport srep = schedule_validate(ctx.system, sched);
  if (!srep.well_formed) throw Error("config.schedule: malformed stages");
  std::vector<long long> q = sched.cumulative();
  long long horizon = cfg.value("horizon", q.back());
  PseudoOrbitSeq seq = build_aapo(ctx.system, sched, horizon);
  Num threshold = cfg.contains("threshold")
                      ? parse_num(cfg["threshold"], NumberMode::kExact)
                      : Num(Rat(1, 50));
  int bins = cfg.value("coarsen_bins", 64);

  // prefix jump averages at stage ends (clamped to the horizon)
  std::vector<long long> marks;
  for (long long qn : q)
    if (qn <= horizon) marks.push_back(qn);
  if (marks.empty() || marks.back() != horizon) marks.push_back(horizon);
  AapoReport arep = is_aapo(ctx.system, seq.points, marks, threshold);

  csv_line(ctx.csv_body, {"horizon", "jump_average"});
  for (std::size_t i = 0; i < marks.size(); ++i)
    csv_line(ctx.csv_body,
             {std::to_string(marks[i]), num_csv(arep.averages[i])});

  Json sr;
  sr["strict_requested"] = sched.strict;
  sr["strict_ok"] = srep.strict_ok;
  sr["violations"] = srep.violations;
  sr["warnings"] = srep.warnings;
  sr["P"] = srep.P;
  sr["Q"] = srep.Q;
  Json eps_list = Json::array();
  for (const Num& e : srep.eps) eps_list.push_back(num_to_json(e));
  sr["eps"] = eps_list;
  Json gaps = Json::array();
  for (const Num& g : srep.generic_gap) gaps.push_back(num_to_json(g));
  sr["generic_gap"] = gaps;
  ctx.out_json["schedule"] = sr;
  ctx.out_json["final_jump_average"] = num_to_json(arep.averages.back());
  ctx.out_json["aapo_verdict"] = arep.verdict;

  // chain realization at each stage end within the horizon
  Json chain = Json::array();
  long long prev_q = 0;
  for (std::size_t n = 0; n < sched.stages.size(); ++n) {
    if (q[n] > horizon) break;
    EmpiricalMeasure prefix{std::vector<Point>(
        seq.points.begin(), seq.points.begin() + q[n])};
    CoarsenedMeasure snap = coarsen(ctx.system, prefix, bins);
    GammaOptions flow_opts;
    flow_opts.method = GammaMethod::kFlow;
    Num g = gamma_discrete(ctx.system, snap.measure, sched.stages[n].measure,
                           flow_opts).value;
    Num bound = Num(2) * srep.eps[n] + Num(Rat(2 * prev_q, q[n]));
    Json row;
    row["stage"] = n + 1;
    row["Q"] = q[n];
    row["gamma_to_target"] = num_to_json(g);
    row["bound"] = num_to_json(bound);
    row["coarsen_error"] = num_to_json(snap.error_bound);
    row["within"] = g < bound + snap.error_bound;
    chain.push_back(row);
    prev_q = q[n];
  }
  ctx.out_json["chain_realization"] = chain;

  if (cfg.value("emit_stream", false)) {
    if (!std::holds_alternative<FullShift>(ctx.system))
      throw Error("config.emit_stream: symbol streams need a full_shift system");
    std::string stream;
    stream.reserve(seq.points.size());
    for (const Point& p : seq.points)
      stream.push_back(std::get<ShiftPoint>(p).at(0));
    std::ofstream out(ctx.out_dir / (ctx.json_name + ".stream"),
                      std::ios::binary);
    out << stream;
    ctx.out_json["stream_file"] = ctx.json_name + ".stream";
  }
  return kExitOk;
}

int run_trace(RunContext& ctx, const Json& cfg) {
  const Json& seq_cfg = need(cfg, "seq");
  std::vector<Point> seq;
  std::string seq_kind = need(seq_cfg, "kind").get<std::string>();
  if (seq_kind == "points") {
    for (const Json& p : need(seq_cfg, "points"))
      seq.push_back(parse_point(p, ctx.mode, &ctx.rng));
  } else if (seq_kind == "orbit") {
    Point x0 = parse_point(need(seq_cfg, "x"), ctx.mode, &ctx.rng);
    seq = orbit(ctx.system, x0, need(seq_cfg, "n").get<long long>());
  } else if (seq_kind == "aapo") {
    BlockSchedule sched = parse_schedule(ctx.system, need(seq_cfg, "schedule"),
                                         ctx.mode, &ctx.rng);
    long long horizon =
        seq_cfg.value("horizon", sched.cumulative().back());
    seq = build_aapo(ctx.system, sched, horizon).points;
  } else {
    throw Error("config.seq: unknown kind '" + seq_kind + "'");
  }
  Point x = parse_point(need(cfg, "x"), ctx.mode, &ctx.rng);
  std::vector<long long> horizons = parse_horizons(need(cfg, "horizons"));
  TraceOptions topts;
  if (cfg.contains("caps")) {
    topts.assignment_cap =
        cfg["caps"].value("assignment_cap", topts.assignment_cap);
    topts.subsample_size =
        cfg["caps"].value("subsample_size", topts.subsample_size);
  }
  topts.subsample_seed = ctx.seed + 1;
  TraceResult res = trace_error(ctx.system, seq, x, horizons, topts, ctx.threads);
  csv_line(ctx.csv_body, {"horizon", "cost", "method"});
  Json rows = Json::array();
  for (std::size_t i = 0; i < res.horizons.size(); ++i) {
    csv_line(ctx.csv_body, {std::to_string(res.horizons[i]),
                            num_csv(res.costs[i]), res.methods[i]});
    Json row;
    row["horizon"] = res.horizons[i];
    row["cost"] = num_to_json(res.costs[i]);
    row["method"] = res.methods[i];
    row["subsampled"] = static_cast<bool>(res.subsampled[i]);
    rows.push_back(row);
  }
  ctx.out_json["trace"] = rows;
  return kExitOk;
}

int run_decomp(RunContext& ctx, const Json& cfg) {
  PeriodicDecomposition d = parse_decomposition(need(cfg, "decomposition"));
  DecompositionReport rep = verify_decomposition(ctx.system, d, ctx.seed + 1);
  Json jr;
  jr["valid"] = rep.valid;
  jr["exact"] = rep.exact;
  jr["covers"] = rep.covers;
  Json mapping = Json::array();
  for (const auto& chk : rep.mapping) {
    Json c;
    Json img = Json::array();
    for (const auto& [lo, hi] : chk.image.parts)
      img.push_back(Json::array({rat_to_string(lo), rat_to_string(hi)}));
    c["image"] = img;
    c["contained"] = chk.contained;
    Json left = Json::array();
    for (const auto& [lo, hi] : chk.leftovers)
      left.push_back(Json::array({rat_to_string(lo), rat_to_string(hi)}));
    c["leftovers"] = left;
    mapping.push_back(c);
  }
  jr["mapping"] = mapping;
  ctx.out_json["decomposition"] = jr;
  csv_line(ctx.csv_body, {"valid", "exact"});
  csv_line(ctx.csv_body, {rep.valid ? "1" : "0", rep.exact ? "1" : "0"});
  if (cfg.contains("lift")) {
    const Json& l = cfg["lift"];
    Point x = parse_point(need(l, "x"), ctx.mode, &ctx.rng);
    Point y = parse_point(need(l, "y"), ctx.mode, &ctx.rng);
    Num v = lift_witness(ctx.system, d, x, y, need(l, "n").get<long long>(),
                         need(l, "k").get<long long>());
    ctx.out_json["lift_cost"] = num_to_json(v);
  }
  return kExitOk;
}

using Handler = int (*)(RunContext&, const Json&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> h = {
      {"dist", run_dist},       {"ebar", run_ebar},
      {"vset", run_vset},       {"density", run_density},
      {"closable", run_closable}, {"linkable", run_linkable},
      {"aapo", run_aapo},       {"trace", run_trace},
      {"decomp", run_decomp},
  };
  return h;
}

Handler find_handler(const std::string& kind) {
  for (const auto& [name, fn] : handlers())
    if (name == kind) return fn;
  throw Error("config: unknown kind '" + kind + "'");
}

RunContext make_context(const Json& config, const RunOptions& opts) {
  RunContext ctx;
  std::string kind = need(config, "kind").get<std::string>();
  std::string mode = config.value("mode", std::string("exact"));
  if (mode == "exact")
    ctx.mode = NumberMode::kExact;
  else if (mode == "float")
    ctx.mode = NumberMode::kFloat;
  else
    throw Error("config: mode must be 'exact' or 'float'");
  if (opts.mode_override) ctx.mode = *opts.mode_override;
  ctx.seed = config.value("seed", 0ULL);
  if (opts.seed_override) ctx.seed = *opts.seed_override;
  ctx.rng.seed(ctx.seed);
  ctx.threads = std::max(1, opts.threads);
  ctx.system = parse_system(need(config, "system"), ctx.mode);
  ctx.out_dir = opts.out_dir;
  Json outputs = config.value("outputs", Json::object());
  ctx.csv_name = outputs.value("csv", kind + ".csv");
  ctx.json_name = outputs.value("json", kind + ".json");
  ctx.hash_hex =
      hex_of(fnv1a_hash(config.dump() + "#" + std::to_string(ctx.seed)));
  return ctx;
}

}  // namespace

void validate_experiment(const Json& config) {
  RunOptions opts;
  RunContext ctx = make_context(config, opts);
  find_handler(need(config, "kind").get<std::string>());
}

int run_experiment(const Json& config, const RunOptions& opts,
                   std::string* message) {
  RunContext ctx = make_context(config, opts);
  std::string kind = need(config, "kind").get<std::string>();
  Handler fn = find_handler(kind);
  int code = fn(ctx, config);
  Json meta;
  meta["version"] = std::string(kVersion);
  meta["config_hash"] = ctx.hash_hex;
  meta["kind"] = kind;
  meta["seed"] = ctx.seed;
  meta["mode"] = ctx.mode == NumberMode::kExact ? "exact" : "float";
  ctx.out_json["meta"] = meta;
  std::filesystem::create_directories(ctx.out_dir);
  {
    std::ofstream out(ctx.out_dir / ctx.json_name, std::ios::binary);
    out << ctx.out_json.dump(2) << "\n";
  }
  {
    std::string head = "# morbit " + std::string(kVersion) +
                       " config_hash=" + ctx.hash_hex + "\n";
    std::ofstream out(ctx.out_dir / ctx.csv_name, std::ios::binary);
    out << head << ctx.csv_body;
  }
  if (message) {
    *message = "wrote " + (ctx.out_dir / ctx.json_name).string() + ", " +
               (ctx.out_dir / ctx.csv_name).string();
  }
  return code;
}

std::vector<std::string> experiment_kinds() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : handlers()) out.push_back(name);
  return out;
}

std::string describe_experiment(const std::string& kind) {
  find_handler(kind);  // validates the name
  std::string common =
      "common fields:\n"
      "  kind: \"" + kind + "\"\n"
      "  system: {kind: tent|swap|valley|piecewise_linear|general_interval|"
      "circle_rotation|full_shift, ...}\n"
      "  mode: \"exact\" | \"float\" (default exact; rationals are \"p/q\" strings)\n"
      "  seed: integer (default 0)\n"
      "  outputs: {csv: name, json: name} (default <kind>.csv / <kind>.json)\n"
      "outputs embed the config hash and library version.\n\n";
  std::string specific;
  if (kind == "dist") {
    specific =
        "fields: points_a [point...], points_b [point...]\n"
        "csv: i,j,dist (pairwise distance matrix in row-major order)\n";
  } else if (kind == "ebar") {
    specific =
        "fields: x point, y point, horizons [n...] or {start, doublings},\n"
        "        tail_window int (default 3)\n"
        "csv: horizon,value; json adds limsup_estimate (max over tail window)\n";
  } else if (kind == "vset") {
    specific =
        "fields: x point, checkpoints [n...], coarsen_bins int (default 64)\n"
        "csv: i,j,gamma between coarsened snapshots; json has snapshots\n";
  } else if (kind == "density") {
    specific =
        "fields: targets [point...] (1 = ergodic form, >1 = stitched convex\n"
        "        form), eps, min_horizon, source {kind:\n"
        "        interval_periodic|shift_necklaces|explicit, ...},\n"
        "        shift_closing bool, caps {period_cap, horizon_cap,\n"
        "        assignment_cap, rounds}\n"
        "csv: found,n,cost; json has the witness orbit or the best candidate\n"
        "exit 3 when the bounded search fails (report still written)\n";
  } else if (kind == "closable") {
    specific =
        "fields: x point, eps, min_n, source, shift_closing, caps\n"
        "csv: found,p,q,sup_dist; exit 3 on bounded-search failure\n";
  } else if (kind == "linkable") {
    specific =
        "fields: y1 point, y2 point (both periodic), lambda \"p/q\", eps,\n"
        "        source, shift_closing, caps\n"
        "csv: found,q2,cost; exit 3 on bounded-search failure\n";
  } else if (kind == "aapo") {
    specific =
        "fields: schedule {mode: strict|relaxed, stages: [{measure,\n"
        "        generic_points, q, repeats, eps?}...]}, horizon?, threshold?,\n"
        "        coarsen_bins?, emit_stream bool (shift systems)\n"
        "csv: horizon,jump_average at stage ends; json has the schedule\n"
        "     report and per-stage chain realization bounds\n";
  } else if (kind == "trace") {
    specific =
        "fields: seq {kind: points|orbit|aapo, ...}, x point, horizons,\n"
        "        caps {assignment_cap, subsample_size}\n"
        "csv: horizon,cost,method\n";
  } else if (kind == "decomp") {
    specific =
        "fields: decomposition {sets: [[[lo,hi]...]...]}, lift {x, y, n, k}?\n"
        "csv: valid,exact; json has images, leftovers, and the lift cost\n";
  }
  return common + specific;
}

}  // namespace morbit

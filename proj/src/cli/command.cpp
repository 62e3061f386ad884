#include "trackzero/cli/command.hpp"

#include "trackzero/cli/report.hpp"
#include "trackzero/cli/svg.hpp"
#include "trackzero/error.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

namespace tz {

namespace {

using report::exact;
using report::Json;
using report::to_json;

const char* const kSuites[] = {"ph", "main", "stability", "invariance", "additivity", "transfer", "algebra", "all"};

class UsageError : public Error {
 public:
  using Error::Error;
};

// Worst outcome seen so far; falsification dominates certification failures.
struct Outcome {
  bool falsified = false;
  bool uncertified = false;
  int code() const { return falsified ? kExitFalsified : uncertified ? kExitCertification : kExitOk; }
};

struct Context {
  Context(const RunConfig& c, Domain d, Box r) : cfg(c), domain(d), region(std::move(r)) {}

  const RunConfig& cfg;
  Domain domain;
  Box region;
  Json certificates = Json::object();
  Outcome outcome;

  unsigned depth(unsigned fallback) const { return cfg.depth ? cfg.depth : fallback; }

  VectorField field(const std::string& text, const char* flag) const {
    if (text.empty()) throw UsageError(std::string("missing ") + flag);
    return parse_field(text, domain);
  }

  std::vector<CatalogEntry> catalog(const std::string& suite) const {
    std::vector<CatalogEntry> all = load_catalog(cfg.catalog.empty() ? TZ_DEFAULT_CATALOG : cfg.catalog);
    std::vector<CatalogEntry> out;
    for (CatalogEntry& e : all)
      if (e.in_suite(suite)) out.push_back(std::move(e));
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return out;
  }
};

unsigned default_depth(const RunConfig& cfg) {
  if (cfg.command == "plot") return 7;
  if (cfg.command != "verify") return 8;
  if (cfg.suite == "ph") return 7;
  if (cfg.suite == "main") return 10;
  if (cfg.suite == "all") return 0;  // each suite keeps its own
  return 8;
}

Box default_region(const RunConfig& cfg, Domain d) {
  if (!cfg.region.empty()) {
    try {
      return parse_region(cfg.region);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  return d == Domain::Torus ? torus_region() : Box::from_corners(-1, -1, 1, 1);
}

Json config_json(const RunConfig& cfg, const Context& ctx) {
  Json j{{"domain", std::string(to_string(ctx.domain))}, {"region", to_json(ctx.region)}};
  if (!cfg.suite.empty()) j["suite"] = cfg.suite;
  if (!cfg.field.empty()) j["field"] = cfg.field;
  if (!cfg.x.empty()) j["x"] = cfg.x;
  if (!cfg.y.empty()) j["y"] = cfg.y;
  if (!cfg.generators.empty()) j["generators"] = cfg.generators;
  j["depth"] = cfg.depth;
  j["trials"] = cfg.trials;
  j["tol"] = cfg.tol;
  j["step"] = cfg.step;
  j["horizon"] = cfg.horizon;
  if (!cfg.catalog.empty()) j["catalog"] = cfg.catalog;
  if (!cfg.svg.empty()) j["svg"] = cfg.svg;
  return j;
}

// Isolation with per-block isolating certificates and indices merged into the block entries.
Json indexed_blocks(Context& ctx, const VectorField& f, const IsolationResult& iso, bool with_index) {
  Json res = to_json(iso);
  Json certs = Json::array();
  for (std::size_t k = 0; k < iso.blocks.size(); ++k) {
    const ZeroBlock& blk = iso.blocks[k];
    if (blk.coarse) {
      ctx.outcome.uncertified = true;
      continue;
    }
    const IsolatingCertificate c = certify_isolating(f, blk);
    certs.push_back(Json{{"block", k}, {"isolating", c.ok}, {"segments_checked", c.segments_checked}});
    if (!c.ok) {
      ctx.outcome.uncertified = true;
      continue;
    }
    if (with_index) {
      const IndexReport r = block_index(f, blk, k);
      Json& b = res["blocks"][k];
      b["index"] = exact(long{r.index});
      b["loops"] = to_json(r)["loops"];
    }
  }
  if (iso.coarse()) ctx.outcome.uncertified = true;
  ctx.certificates["isolating"] = std::move(certs);
  return res;
}

Json cmd_zeros(Context& ctx, bool with_index) {
  const VectorField f = ctx.field(ctx.cfg.field, "--field");
  return indexed_blocks(ctx, f, isolate_zeros(f, ctx.region, ctx.depth(8)), with_index);
}

Json cmd_bracket(Context& ctx) {
  const VectorField y = ctx.field(ctx.cfg.y, "--y"), x = ctx.field(ctx.cfg.x, "--x");
  return Json{{"bracket", lie_bracket(y, x).to_string()}, {"y", y.to_string()}, {"x", x.to_string()}};
}

Json cmd_track(Context& ctx) {
  const VectorField y = ctx.field(ctx.cfg.y, "--y"), x = ctx.field(ctx.cfg.x, "--x");
  const TrackReport r = track_check(y, x);
  if (r.status == TrackStatus::RationalTracking)
    ctx.certificates["denominator_nonvanishing"] = denominator_nonvanishing(r, ctx.region, ctx.domain, ctx.depth(8));
  return to_json(r);
}

Json cmd_dep(Context& ctx) {
  const VectorField x = ctx.field(ctx.cfg.x, "--x"), y = ctx.field(ctx.cfg.y, "--y");
  const DependencyReport r = dep_set(x, y, ctx.region, ctx.depth(8));
  if (r.isolation.coarse()) ctx.outcome.uncertified = true;
  return Json{{"wedge", r.wedge.to_string()},
              {"identically_dependent", r.identically_dependent},
              {"isolation", to_json(r.isolation)}};
}

Json cmd_common(Context& ctx) {
  if (ctx.cfg.generators.empty()) throw UsageError("common needs at least one --generator");
  LieAlgebraSpec spec{"cli", {}};
  Json gens = Json::array();
  for (const std::string& g : ctx.cfg.generators) {
    spec.generators.push_back(parse_field(g, ctx.domain));
    gens.push_back(spec.generators.back().to_string());
  }
  const IsolationResult iso = common_zeros(spec, ctx.region, ctx.depth(8));
  if (iso.coarse()) ctx.outcome.uncertified = true;
  Json res{{"generators", std::move(gens)}, {"isolation", to_json(iso)}};
  if (!ctx.cfg.x.empty()) {
    const IdealReport ideal = ideal_check(ctx.field(ctx.cfg.x, "--x"), spec);
    Json per = Json::array();
    for (const TrackReport& t : ideal.per_generator) per.push_back(to_json(t));
    res["tracking"] = Json{{"all_track", ideal.tracks}, {"per_generator", std::move(per)}};
  }
  return res;
}

Json cmd_plot(Context& ctx) {
  if (ctx.cfg.svg.empty()) throw UsageError("plot needs --svg");
  const VectorField f = ctx.field(ctx.cfg.field, "--field");
  const IsolationResult iso = isolate_zeros(f, ctx.region, ctx.depth(7));
  Json res = indexed_blocks(ctx, f, iso, true);
  std::ofstream svg(ctx.cfg.svg, std::ios::binary);
  if (!svg) throw Error("cannot write " + ctx.cfg.svg);
  svg << render_svg(f, iso);
  if (!svg) throw Error("failed writing " + ctx.cfg.svg);
  return res;
}

// ---- verify suites ----

// Runs `body` per catalog entry, recording certification errors instead of aborting.
template <class Body>
Json over_catalog(Context& ctx, const std::string& suite, Body body) {
  Json entries = Json::array();
  for (const CatalogEntry& e : ctx.catalog(suite)) {
    Json j{{"name", e.name}};
    try {
      j.update(body(e));
    } catch (const CertificationError& ex) {
      ctx.outcome.uncertified = true;
      j["error"] = ex.what();
    }
    entries.push_back(std::move(j));
  }
  return Json{{"entries", std::move(entries)}};
}

void check_expectations(Context& ctx, Json& j, const CatalogEntry& e, const std::vector<int>& indices) {
  bool ok = true;
  if (e.expect_blocks) ok = ok && indices.size() == *e.expect_blocks;
  if (!e.expect_indices.empty()) {
    std::vector<int> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    ok = ok && sorted == e.expect_indices;
  }
  j["expectations_met"] = ok;
  if (!ok) ctx.outcome.uncertified = true;
}

Json ph_one(Context& ctx, const VectorField& f, unsigned depth) {
  const PoincareHopfReport r = poincare_hopf_check(f, depth);
  if (!r.holds()) ctx.outcome.falsified = true;
  return to_json(r);
}

Json verify_ph(Context& ctx) {
  if (!ctx.cfg.field.empty()) return ph_one(ctx, ctx.field(ctx.cfg.field, "--field"), ctx.depth(7));
  return over_catalog(ctx, "ph", [&](const CatalogEntry& e) {
    Json j = ph_one(ctx, e.x, ctx.depth(7));
    std::vector<int> idx;
    for (const auto& b : j["blocks"]) idx.push_back(std::stoi(b["index"].get<std::string>()));
    check_expectations(ctx, j, e, idx);
    return j;
  });
}

Json main_one(Context& ctx, const CatalogEntry& e) {
  const MainTheoremReport r = main_theorem_check(e, ctx.depth(10));
  if (r.falsified()) ctx.outcome.falsified = true;
  Json j = to_json(r);
  std::vector<int> idx;
  for (const IndexReport& b : r.indices) idx.push_back(b.index);
  check_expectations(ctx, j, e, idx);
  return j;
}

Json verify_main(Context& ctx) {
  if (!ctx.cfg.x.empty()) {
    CatalogEntry e;
    e.name = "cli";
    e.domain = ctx.domain;
    e.x = ctx.field(ctx.cfg.x, "--x");
    for (const std::string& g : ctx.cfg.generators) e.trackers.push_back(parse_field(g, ctx.domain));
    if (!ctx.cfg.y.empty()) e.trackers.push_back(parse_field(ctx.cfg.y, ctx.domain));
    if (e.trackers.empty()) throw UsageError("verify main needs --y or --generator");
    e.region = ctx.region;
    return main_one(ctx, e);
  }
  return over_catalog(ctx, "main", [&](const CatalogEntry& e) { return main_one(ctx, e); });
}

Json stability_one(Context& ctx, const VectorField& f, const Box& region) {
  const IsolationResult iso = isolate_zeros(f, region, ctx.depth(8));
  if (iso.coarse()) throw CertificationError("coarse blocks");
  Json blocks = Json::array();
  for (std::size_t k = 0; k < iso.blocks.size(); ++k) {
    const StabilityReport r = stability_test(f, iso.blocks[k], ctx.cfg.trials, ctx.cfg.seed + k);
    if (r.falsified()) ctx.outcome.falsified = true;
    Json j = to_json(r);
    j["block"] = k;
    blocks.push_back(std::move(j));
  }
  return Json{{"blocks", std::move(blocks)}};
}

Json verify_stability(Context& ctx) {
  if (!ctx.cfg.field.empty()) return stability_one(ctx, ctx.field(ctx.cfg.field, "--field"), ctx.region);
  return over_catalog(ctx, "stability", [&](const CatalogEntry& e) { return stability_one(ctx, e.x, e.region); });
}

Json invariance_pair(Context& ctx, const VectorField& x, const VectorField& y, const Box& region) {
  Json out = Json::array();
  for (InvarianceTarget t : {InvarianceTarget::ZeroSet, InvarianceTarget::Dependency}) {
    InvarianceOptions o;
    o.target = t;
    o.tol = ctx.cfg.tol;
    o.step = ctx.cfg.step;
    o.horizon = ctx.cfg.horizon;
    o.depth = ctx.depth(8);
    const InvarianceReport r = invariance_test(x, y, region, o);
    if (!r.passed) ctx.outcome.falsified = true;
    out.push_back(to_json(r));
  }
  return out;
}

Json verify_invariance(Context& ctx) {
  if (!ctx.cfg.x.empty())
    return Json{{"runs", invariance_pair(ctx, ctx.field(ctx.cfg.x, "--x"), ctx.field(ctx.cfg.y, "--y"), ctx.region)}};
  return over_catalog(ctx, "invariance", [&](const CatalogEntry& e) {
    Json runs = Json::array();
    for (std::size_t t = 0; t < e.trackers.size(); ++t)
      runs.push_back(Json{{"tracker", t}, {"results", invariance_pair(ctx, e.x, e.trackers[t], e.region)}});
    return Json{{"runs", std::move(runs)}};
  });
}

Json additivity_one(Context& ctx, const VectorField& f, const Box& region) {
  const RegionIndexReport r = region_index(f, region, ctx.depth(8));
  if (!r.additive) ctx.outcome.falsified = true;
  return to_json(r);
}

Json verify_additivity(Context& ctx) {
  if (!ctx.cfg.field.empty()) return additivity_one(ctx, ctx.field(ctx.cfg.field, "--field"), ctx.region);
  return over_catalog(ctx, "additivity", [&](const CatalogEntry& e) { return additivity_one(ctx, e.x, e.region); });
}

Json transfer_one(Context& ctx, const VectorField& x, const VectorField& y, const Box& region) {
  const IsolationResult iso = isolate_zeros(x, region, ctx.depth(8));
  if (iso.coarse()) throw CertificationError("coarse blocks");
  Json blocks = Json::array();
  for (std::size_t k = 0; k < iso.blocks.size(); ++k)
    for (TransferMode m : {TransferMode::NoNegativeRatio, TransferMode::NoPositiveRatio}) {
      Json j{{"block", k}};
      try {
        const TransferReport r = index_transfer_check(x, y, iso.blocks[k], m);
        if (r.certified && !r.indices_agree) ctx.outcome.falsified = true;
        j.update(to_json(r));
      } catch (const PreconditionError& ex) {
        j["skipped"] = ex.what();
      }
      blocks.push_back(std::move(j));
    }
  return Json{{"blocks", std::move(blocks)}};
}

Json verify_transfer(Context& ctx) {
  if (!ctx.cfg.x.empty())
    return transfer_one(ctx, ctx.field(ctx.cfg.x, "--x"), ctx.field(ctx.cfg.y, "--y"), ctx.region);
  return over_catalog(ctx, "transfer", [&](const CatalogEntry& e) {
    Json per = Json::array();
    for (const VectorField& y : e.trackers) per.push_back(transfer_one(ctx, e.x, y, e.region));
    return Json{{"trackers", std::move(per)}};
  });
}

Json verify_algebra(Context& ctx) {
  const AlgebraReport r = algebra_suite(ctx.cfg.trials, ctx.cfg.seed);
  if (r.falsified()) ctx.outcome.falsified = true;
  return to_json(r);
}

Json cmd_verify(Context& ctx) {
  const std::string& s = ctx.cfg.suite;
  if (s == "ph") return verify_ph(ctx);
  if (s == "main") return verify_main(ctx);
  if (s == "stability") return verify_stability(ctx);
  if (s == "invariance") return verify_invariance(ctx);
  if (s == "additivity") return verify_additivity(ctx);
  if (s == "transfer") return verify_transfer(ctx);
  if (s == "algebra") return verify_algebra(ctx);
  Json all = Json::object();
  for (const char* suite : kSuites) {
    if (std::string(suite) == "all") continue;
    RunConfig sub = ctx.cfg;
    sub.suite = suite;
    sub.field.clear();
    sub.x.clear();
    sub.y.clear();
    Context c{sub, ctx.domain, ctx.region};
    all[suite] = cmd_verify(c);
    ctx.outcome.falsified = ctx.outcome.falsified || c.outcome.falsified;
    ctx.outcome.uncertified = ctx.outcome.uncertified || c.outcome.uncertified;
    if (!c.certificates.empty()) ctx.certificates[suite] = std::move(c.certificates);
  }
  return all;
}

Json dispatch(Context& ctx) {
  const std::string& c = ctx.cfg.command;
  if (c == "zeros") return cmd_zeros(ctx, false);
  if (c == "index") return cmd_zeros(ctx, true);
  if (c == "bracket") return cmd_bracket(ctx);
  if (c == "track") return cmd_track(ctx);
  if (c == "dep") return cmd_dep(ctx);
  if (c == "common") return cmd_common(ctx);
  if (c == "plot") return cmd_plot(ctx);
  return cmd_verify(ctx);
}

void add_shared_options(CLI::App& app, RunConfig& cfg) {
  app.add_option("--field", cfg.field, "vector field \"(e1, e2)\"");
  app.add_option("--x", cfg.x, "field X");
  app.add_option("--y", cfg.y, "field Y");
  app.add_option("--generator", cfg.generators, "generator field (repeatable)");
  app.add_option("--domain", cfg.domain, "plane or torus")->check(CLI::IsMember({"plane", "torus"}));
  app.add_option("--region", cfg.region, "x0,y0,x1,y1");
  app.add_option("--depth", cfg.depth, "subdivision depth")->check(CLI::Range(1u, 20u));
  app.add_option("--seed", cfg.seed, "seed for randomized suites");
  app.add_option("--trials", cfg.trials, "trials for randomized suites");
  app.add_option("--tol", cfg.tol, "invariance tolerance")->check(CLI::PositiveNumber);
  app.add_option("--step", cfg.step, "integrator step")->check(CLI::PositiveNumber);
  app.add_option("--horizon", cfg.horizon, "flow horizon")->check(CLI::NonNegativeNumber);
  app.add_option("--out", cfg.out, "JSON report path");
  app.add_option("--svg", cfg.svg, "SVG output path");
  app.add_option("--catalog", cfg.catalog, "instance catalog");
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Certified zero isolation, indices and tracking checks for planar and toroidal vector fields",
               "trackzero"};
  app.require_subcommand(1);
  app.set_version_flag("--version", TZ_VERSION);
  const std::pair<const char*, const char*> commands[] = {
      {"zeros", "isolate zero blocks"},
      {"index", "isolate zero blocks and compute their indices"},
      {"bracket", "Lie bracket [Y,X]"},
      {"track", "decide whether Y tracks X"},
      {"dep", "dependency set of X and Y"},
      {"common", "common zeros of generators"},
      {"verify", "run a verification suite"},
      {"plot", "SVG phase portrait"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_shared_options(*sub, cfg);
    if (std::string(name) == "verify")
      sub->add_option("suite", cfg.suite, "suite")->required()->check(CLI::IsMember(std::vector<std::string>(
          std::begin(kSuites), std::end(kSuites))));
    sub->callback([&cfg, name = std::string(name)] { cfg.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << TZ_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (cfg.depth == 0) cfg.depth = default_depth(cfg);
  Json doc{{"command", cfg.command}};
  int code = kExitOk;
  try {
    const Domain d = parse_domain(cfg.domain);
    Context ctx{cfg, d, default_region(cfg, d)};
    doc["config"] = config_json(cfg, ctx);
    doc["results"] = dispatch(ctx);
    doc["certificates"] = std::move(ctx.certificates);
    code = ctx.outcome.code();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CertificationError& e) {
    doc["results"] = nullptr;
    doc["error"] = Json{{"kind", "certification"}, {"message", e.what()}};
    code = kExitCertification;
  } catch (const Error& e) {
    doc["results"] = nullptr;
    doc["error"] = Json{{"kind", "failure"}, {"message", e.what()}};
    code = kExitCertification;
  }
  if (!doc.contains("config")) doc["config"] = Json::object();
  if (!doc.contains("certificates")) doc["certificates"] = Json::object();
  doc["seed"] = cfg.seed;
  doc["version"] = TZ_VERSION;
  doc["exit_code"] = code;

  const std::string text = doc.dump(2) + "\n";
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    f << text;
    if (!f) {
      err << "cannot write " << cfg.out << "\n";
      return kExitCertification;
    }
  }
  return code;
}

}  // namespace tz

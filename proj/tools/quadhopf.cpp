#include <algorithm>
#include <atomic>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "quadhopf/bundles/jouanolou.hpp"
#include "quadhopf/hopf/hopf.hpp"
#include "quadhopf/io/io.hpp"
#include "quadhopf/maps/maps.hpp"
#include "quadhopf/sympl/replay.hpp"
#include "quadhopf/symcore/errors.hpp"

using namespace quadhopf;
using io::Json;

namespace {

constexpr int kGreen = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::optional<Domain> field;
  TermOrder order = TermOrder::degrevlex;
  bool json = false;
  unsigned jobs = 1;
  std::uint64_t groebner_cap = GroebnerOptions{}.max_reductions;

  hopf::CatalogOptions catalog_options() const {
    hopf::CatalogOptions o;
    o.domain = field;
    o.order = order;
    o.groebner.max_reductions = groebner_cap;
    return o;
  }
};

/// One block of a verify report.
struct Section {
  std::string id;
  std::string provenance;
  std::vector<Check> checks;

  bool ok() const { return all_ok(checks); }
};

std::vector<Check> prefixed(const std::string& prefix, const std::vector<Check>& checks) {
  std::vector<Check> out;
  for (const auto& c : checks) out.push_back(Check{prefix + c.id, c.status, c.detail});
  return out;
}

std::vector<Check> sorted(std::vector<Check> checks) {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  return checks;
}

Section catalog_section(const std::string& id, const RunConfig& cfg) {
  hopf::CatalogEntry e = hopf::catalog(id, cfg.catalog_options());
  return {id, e.provenance, e.checks};
}

Section sympl_section() {
  sympl::ReductionReplay r = sympl::reduction_replay();
  Section s{"sympl", "symplectic reduction of U in Sp8(k[Q4]) to the Sp2 matrix of the first exotic map", {}};
  for (const auto& step : r.steps) {
    if (step.matches_display) s.checks.push_back(make_check("display." + step.label, *step.matches_display));
  }
  s.checks.push_back(make_check("replay", r.ok, r.failure));
  s.checks.push_back(make_check("verbatim", r.verbatim, r.verbatim ? "final matrix equals the displayed (a b; c d)" : ""));
  return s;
}

Section weight_shift_section() {
  hopf::WeightShiftLog log = hopf::weight_shift_replay();
  Section s{"weight-shift", "weight-shifting construction of the row (a', b') over k[Q4]", {}};
  // the stage number keeps stages in order once checks are sorted by id
  for (std::size_t k = 0; k < log.stages.size(); ++k) {
    const auto& stage = log.stages[k];
    for (auto& c : prefixed(std::to_string(k + 1) + "." + stage.id + ".", stage.checks)) s.checks.push_back(std::move(c));
  }
  return s;
}

Section trivializations_section() {
  hopf::Trivializations t = hopf::trivializations();
  return {"trivializations", "trivializations E, F of the universal rank 2 bundle on Q5 and their transition T",
          t.checks};
}

Section mod2_section() {
  hopf::Mod2Report r = hopf::mod2_degenerations();
  return {"mod2", "both exotic maps reduced over F2", r.checks};
}

Section pi_n_section() {
  Section s{"pi-n", "pi_n: J^n -> Q_2n checked on every chart", {}};
  for (int n = 1; n <= 3; ++n) {
    for (auto& c : prefixed("n" + std::to_string(n) + ".", bundles::verify_pi_n(bundles::pi_n(n)))) {
      s.checks.push_back(std::move(c));
    }
  }
  return s;
}

Section bundle_section(bundles::ExoticMap which, const RunConfig& cfg) {
  bundles::BundleIdempotent b = bundles::build_j3_bundle(which, {cfg.jobs});
  std::string provenance;
  for (const auto& p : b.provenance) provenance += (provenance.empty() ? "" : "; ") + p;
  Section s{"bundle." + std::string(bundles::to_string(which)), provenance, b.checks};
  for (const auto& c : b.charts) {
    for (auto& k : prefixed("chart" + std::to_string(c.chart) + ".", c.checks)) s.checks.push_back(std::move(k));
  }
  return s;
}

/// Runs the tasks on up to `jobs` threads; results keep task order.
std::vector<Section> run_sections(const std::vector<std::pair<std::string, std::function<Section()>>>& tasks,
                                  unsigned jobs) {
  std::vector<Section> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      try {
        out[k] = tasks[k].second();
      } catch (const InvalidArgument&) {
        throw;
      } catch (const std::exception& e) {
        out[k] = Section{tasks[k].first, "", {make_check("error", false, e.what())}};
      }
    }
  };
  if (jobs <= 1 || tasks.size() <= 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, tasks.size()); ++t) {
    pool.emplace_back([&] {
      try {
        worker();
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::string clipped(const std::string& s, std::size_t limit = 160) {
  return s.size() <= limit ? s : s.substr(0, limit) + " ...";
}

int emit_report(const std::vector<Section>& sections, const std::vector<std::string>& skipped, const RunConfig& cfg) {
  std::size_t total = 0, failed = 0;
  bool ok = true;
  for (const auto& s : sections) {
    total += s.checks.size();
    failed += std::count_if(s.checks.begin(), s.checks.end(), [](const Check& c) { return !c.ok(); });
    ok = ok && s.ok();
  }
  if (cfg.json) {
    Json out{{"ok", ok}, {"checks", total}, {"failed", failed}};
    Json list = Json::array();
    for (const auto& s : sections) {
      list.push_back(Json{{"id", s.id}, {"provenance", s.provenance}, {"ok", s.ok()}, {"checks", io::to_json(s.checks)}});
    }
    out["sections"] = std::move(list);
    if (!skipped.empty()) out["skipped"] = skipped;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& s : sections) {
      std::cout << s.id << ": " << (s.ok() ? "pass" : "FAIL") << "\n";
      if (!s.provenance.empty()) std::cout << "  provenance: " << s.provenance << "\n";
      for (const auto& c : sorted(s.checks)) {
        std::cout << "  " << (c.ok() ? std::string(to_string(c.status)) : "FAIL") << "  " << c.id;
        if (!c.detail.empty()) std::cout << "  " << clipped(c.detail);
        std::cout << "\n";
      }
    }
    for (const auto& s : skipped) std::cout << "skipped: " << s << "\n";
    std::cout << "summary: " << sections.size() << " sections, " << total << " checks, " << failed << " failed\n";
  }
  return ok ? kGreen : kFailed;
}

int cmd_verify(const std::string& target, const RunConfig& cfg) {
  using Task = std::pair<std::string, std::function<Section()>>;
  std::vector<Task> tasks;
  std::vector<std::string> skipped;
  const auto& ids = hopf::catalog_ids();
  auto add_catalog = [&](const std::string& id) { tasks.push_back({id, [id, &cfg] { return catalog_section(id, cfg); }}); };
  auto add_bundle = [&](bundles::ExoticMap w) {
    tasks.push_back({"bundle." + std::string(bundles::to_string(w)), [w, &cfg] { return bundle_section(w, cfg); }});
  };
  if (target == "all") {
    for (const auto& id : ids) {
      if (id == "turiel" && cfg.field && !cfg.field->is_gaussian()) {
        skipped.push_back("turiel (coefficients in Q(i), field is " + cfg.field->name() + ")");
        continue;
      }
      add_catalog(id);
    }
    tasks.push_back({"sympl", sympl_section});
    tasks.push_back({"weight-shift", weight_shift_section});
    tasks.push_back({"trivializations", trivializations_section});
    tasks.push_back({"mod2", mod2_section});
    tasks.push_back({"pi-n", pi_n_section});
    add_bundle(bundles::ExoticMap::theorem1);
    add_bundle(bundles::ExoticMap::theorem2);
  } else if (std::find(ids.begin(), ids.end(), target) != ids.end()) {
    add_catalog(target);
  } else if (target == "sympl") {
    tasks.push_back({target, sympl_section});
  } else if (target == "weight-shift") {
    tasks.push_back({target, weight_shift_section});
  } else if (target == "trivializations") {
    tasks.push_back({target, trivializations_section});
  } else if (target == "mod2") {
    tasks.push_back({target, mod2_section});
  } else if (target == "pi-n") {
    tasks.push_back({target, pi_n_section});
  } else if (target == "bundle") {
    add_bundle(bundles::ExoticMap::theorem1);
    add_bundle(bundles::ExoticMap::theorem2);
  } else {
    throw InvalidArgument("unknown verify target '" + target +
                          "' (expected all, a catalog id, sympl, weight-shift, trivializations, mod2, pi-n or bundle)");
  }
  return emit_report(run_sections(tasks, cfg.jobs), skipped, cfg);
}

int cmd_replay(const std::string& which, const std::string& variant, const RunConfig& cfg) {
  if (which == "sympl") {
    sympl::ReductionReplay r = sympl::reduction_replay(variant == "as_printed" ? sympl::ReplayVariant::as_printed
                                                                                : sympl::ReplayVariant::corrected);
    if (cfg.json) {
      std::cout << io::to_json(r).dump(2) << "\n";
    } else {
      for (const auto& s : r.steps) {
        std::cout << s.label << "  " << sympl::to_string(s.kind) << "  " << s.result_hash;
        if (s.matches_display) std::cout << "  display " << (*s.matches_display ? "match" : "MISMATCH");
        std::cout << "\n";
      }
      if (r.final) {
        auto m = r.final->to_strings();
        const char* names[2][2] = {{"a", "b"}, {"c", "d"}};
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) std::cout << names[i][j] << " = " << m[i][j] << "\n";
        }
      }
      if (!r.failure.empty()) std::cout << "failure: " << r.failure << "\n";
      std::cout << "replay sympl: " << (r.ok && r.verbatim ? "pass" : "FAIL") << "\n";
    }
    return r.ok && r.verbatim ? kGreen : kFailed;
  }
  hopf::WeightShiftLog log = hopf::weight_shift_replay();
  if (cfg.json) {
    std::cout << io::to_json(log).dump(2) << "\n";
  } else {
    for (const auto& s : log.stages) {
      std::cout << "stage " << s.id << "  " << (s.ok() ? "pass" : "FAIL") << "  " << s.title << "\n";
      for (const auto& c : sorted(s.checks)) {
        if (!c.ok()) std::cout << "  FAIL  " << c.id << "  " << clipped(c.detail) << "\n";
      }
    }
    if (log.preimage) {
      auto row = log.preimage->to_strings();
      std::cout << "a' = " << row[0][0] << "\n" << "b' = " << row[0][1] << "\n";
    }
    if (!log.failure.empty()) std::cout << "failure: " << log.failure << "\n";
    std::cout << "replay weight-shift: " << (log.ok ? "pass" : "FAIL") << "\n";
  }
  return log.ok ? kGreen : kFailed;
}

int cmd_catalog(const RunConfig& cfg) {
  bool ok = true;
  Json list = Json::array();
  for (const auto& id : hopf::catalog_ids()) {
    hopf::CatalogEntry e;
    if (id == "turiel" && cfg.field && !cfg.field->is_gaussian()) continue;
    e = hopf::catalog(id, cfg.catalog_options());
    ok = ok && e.ok();
    if (cfg.json) {
      list.push_back(io::to_json(e));
    } else {
      std::cout << e.id << "  " << (e.ok() ? "pass" : "FAIL") << "  " << e.provenance << "\n";
    }
  }
  if (cfg.json) std::cout << list.dump(2) << "\n";
  return ok ? kGreen : kFailed;
}

Json checked_record(Json record, const std::vector<Check>& checks, bool& ok) {
  record["checks"] = io::to_json(checks);
  ok = all_ok(checks);
  return record;
}

int cmd_build_gw(const std::string& target, const std::string& text, const RunConfig& cfg) {
  Domain dom = cfg.field ? *cfg.field : Domain::rationals();
  maps::GWClass q = maps::parse_gw_class(text, dom);
  bool ok = false;
  Json out;
  if (target == "q3") {
    Ring r = quadrics::QuadricId(3).ring(cfg.order, dom);
    maps::Q3Endo e = maps::q3_endo(q, r);
    quadrics::Verification v = quadrics::verify_full(e.row);
    Json record = io::to_json(e.row);
    record["class"] = q.describe(dom);
    record["matrix"] = io::to_json(e.matrix);
    out = checked_record(std::move(record), {make_check("verify_full", v.ok, v.ok ? "" : format(v.witness))}, ok);
  } else {
    Ring r = quadrics::QuadricId(2).ring(cfg.order, dom);
    quadrics::Q2Endo e = maps::q2_endo(q, r);
    IdempotentCheck c = e.check();
    Json record{{"target", "Q2"}, {"class", q.describe(dom)}, {"variables", r->variables()}};
    record["projector"] = io::to_json(e.projector);
    record["first_column"] = io::to_json(e.first_column());
    record["provenance"] = "GW-degree endomorphism of Q2 as a trace 1 idempotent";
    out = checked_record(std::move(record),
                         {make_check("idempotent", !c.square, c.square ? format(c.square->difference) : ""),
                          make_check("trace", c.trace_residue.is_zero(), format(c.trace_residue))},
                         ok);
  }
  std::cout << out.dump(2) << "\n";
  return ok ? kGreen : kFailed;
}

int cmd_build_suspend(const std::string& input, int times, const RunConfig& cfg) {
  if (times < 0) throw InvalidArgument("--times must be non-negative");
  hopf::CatalogEntry e = hopf::catalog(input, cfg.catalog_options());
  if (!e.morphism) throw InvalidArgument(input + " has no morphism form");
  quadrics::QuadricMorphism s = maps::suspend(*e.morphism, times);
  std::vector<Check> checks;
  if (s.is_full()) {
    quadrics::Verification v = quadrics::verify_full(s);
    checks.push_back(make_check("verify_full", v.ok, v.ok ? "" : format(v.witness)));
  } else if (s.certificate) {
    checks.push_back(make_check("certificate", s.certificate->verify(),
                                std::to_string(s.certificate->size()) + " cofactor terms"));
  }
  if (checks.empty()) checks.push_back(make_check("certificate", false, "no certificate carried over"));
  if (!e.ok()) checks.push_back(make_check("input", false, input + " does not verify"));
  bool ok = false;
  Json out = checked_record(io::to_json(s), checks, ok);
  std::cout << out.dump(2) << "\n";
  return ok ? kGreen : kFailed;
}

int cmd_bundle(const std::string& which, std::size_t literal_limit, bool json, const RunConfig& cfg) {
  bundles::BundleIdempotent b = bundles::build_j3_bundle(bundles::parse_exotic_map(which), {cfg.jobs, literal_limit});
  if (json) {
    std::cout << io::to_json(b).dump(2) << "\n";
  } else {
    for (const auto& p : b.provenance) std::cout << "provenance: " << p << "\n";
    for (const auto& c : sorted(b.checks)) std::cout << (c.ok() ? "pass" : "FAIL") << "  " << c.id << "\n";
    for (const auto& r : b.charts) {
      for (const auto& c : sorted(r.checks)) {
        std::cout << (c.ok() ? "pass" : "FAIL") << "  chart" << r.chart << "." << c.id;
        if (!c.detail.empty()) std::cout << "  " << clipped(c.detail);
        std::cout << "\n";
      }
    }
    std::cout << "bundle " << which << ": " << (b.ok() ? "pass" : "FAIL") << "\n";
  }
  return b.ok() ? kGreen : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadhopf: exact verifier for maps between split quadrics"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string field, order = "degrevlex";
  RunConfig cfg;
  app.add_option("--field", field, "coefficient field: q, qi or fp:<prime> (default: each map's own)");
  app.add_option("--order", order, "term order for catalog rings: degrevlex or lex");
  app.add_flag("--json", cfg.json, "emit JSON");
  app.add_option("--jobs", cfg.jobs, "parallelism hint")->check(CLI::Range(1u, 64u));
  app.add_option("--groebner-cap", cfg.groebner_cap, "Buchberger reduction budget")->check(CLI::PositiveNumber);

  std::string verify_target;
  auto* verify = app.add_subcommand("verify", "run check suites");
  verify->add_option("target", verify_target, "all, a catalog id, sympl, weight-shift, trivializations, mod2, pi-n, bundle")
      ->required();

  std::string replay_which, replay_variant = "corrected";
  auto* replay = app.add_subcommand("replay", "replay a construction");
  replay->add_option("which", replay_which)->required()->check(CLI::IsMember({"sympl", "weight-shift"}));
  replay->add_option("--variant", replay_variant, "sympl only: corrected or as_printed")
      ->check(CLI::IsMember({"corrected", "as_printed"}));

  auto* catalog = app.add_subcommand("catalog", "list and verify the catalog");

  auto* build = app.add_subcommand("build", "build an object and emit it as JSON");
  build->require_subcommand(1);
  std::string gw_target, gw_class;
  auto* gw = build->add_subcommand("gw-endo", "endomorphism of Q2 or Q3 of a given GW class");
  gw->add_option("--target", gw_target)->required()->check(CLI::IsMember({"q2", "q3"}));
  gw->add_option("--class", gw_class, "e.g. \"<2> - <3>\"")->required();
  std::string suspend_input;
  int suspend_times = 1;
  auto* suspend = build->add_subcommand("suspend", "P1-suspend a catalog map");
  suspend->add_option("--input", suspend_input)->required();
  suspend->add_option("--times", suspend_times);
  std::string build_which;
  std::size_t literal_limit = bundles::BundleOptions{}.literal_limit;
  auto* build_bundle = build->add_subcommand("bundle", "rank 2 idempotent on J^3");
  build_bundle->add_option("--which", build_which)->required()->check(CLI::IsMember({"theorem1", "theorem2"}));
  build_bundle->add_option("--literal-limit", literal_limit);

  auto* bundle = app.add_subcommand("bundle", "Jouanolou bundle commands");
  bundle->require_subcommand(1);
  std::string j3_which;
  auto* j3 = bundle->add_subcommand("build-j3", "rank 2 idempotent on J^3 with chart checks");
  j3->add_option("--which", j3_which)->required()->check(CLI::IsMember({"theorem1", "theorem2"}));
  j3->add_option("--literal-limit", literal_limit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kGreen : kUsage;
  }

  try {
    if (!field.empty()) cfg.field = io::parse_field(field);
    cfg.order = parse_term_order(order);
    if (*verify) return cmd_verify(verify_target, cfg);
    if (*replay) return cmd_replay(replay_which, replay_variant, cfg);
    if (*catalog) return cmd_catalog(cfg);
    if (*gw) return cmd_build_gw(gw_target, gw_class, cfg);
    if (*suspend) return cmd_build_suspend(suspend_input, suspend_times, cfg);
    if (*build_bundle) return cmd_bundle(build_which, literal_limit, true, cfg);
    if (*j3) return cmd_bundle(j3_which, literal_limit, cfg.json, cfg);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

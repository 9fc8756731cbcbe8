// Command-line front end: `audit` runs the property suites, `factor`
// produces verified factorizations of a fixture morphism, `extend`
// pushes a fixture along one of the shipped scalar homomorphisms.
//
// Exit codes: 0 all checks passed, 1 a property or verification failed,
// 2 usage or input error.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include <hilbcat/hilbcat.hpp>

namespace {

using namespace hilbcat;

std::vector<ScalarRing> parse_rings(const std::string& spec) {
  if (spec == "all")
    return {nat_ring(), bool_ring(), int_ring(),
            rat_ring(), gauss_ring(), quad_ring(2)};
  auto r = ScalarRing::from_name(spec);
  if (!r) throw error("unknown ring '" + spec + "'");
  return {*r};
}

std::vector<std::string> parse_suites(const std::string& spec) {
  if (spec == "all") return suite_names();
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), spec) == names.end())
    throw error("unknown suite '" + spec + "'");
  return {spec};
}

uint64_t resolve_seed(const std::optional<uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HILBCAT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw error("bad HILBCAT_SEED value '" + std::string(env) + "'");
    }
  }
  return 42;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw error("cannot write '" + out_path + "'");
  out << text;
}

int run_audit(const std::string& ring_spec, const std::string& suite_spec,
              const GenConfig& cfg, const std::string& out_path,
              unsigned jobs) {
  std::vector<ScalarRing> rings = parse_rings(ring_spec);
  std::vector<std::string> suites = parse_suites(suite_spec);

  struct Task {
    ScalarRing ring;
    std::string suite;
  };
  std::vector<Task> tasks;
  for (const auto& ring : rings)
    for (const auto& suite : suites) tasks.push_back({ring, suite});

  std::vector<std::optional<AuditReport>> results(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      results[i] = run_suite(tasks[i].suite, tasks[i].ring, cfg);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // assembly order is the task order, so the report is deterministic
  // regardless of --jobs
  std::string text;
  nlohmann::json json = nlohmann::json::array();
  bool all_ok = true;
  for (const auto& r : results) {
    text += to_text(*r);
    json.push_back(to_json(*r));
    all_ok = all_ok && r->ok();
  }
  text += std::string("overall: ") + (all_ok ? "OK" : "FAIL") + "\n";
  std::cout << text;
  if (!out_path.empty()) write_output(out_path, json.dump(2) + "\n");
  return all_ok ? 0 : 1;
}

const HMorphism& morphism_or_die(const Fixture& fx, const std::string& name) {
  const HMorphism* f = fx.find_morphism(name);
  if (!f) throw error("no morphism '" + name + "' in fixture");
  return *f;
}

int run_factor(const std::string& path, const std::string& name,
               const std::string& out_path) {
  Fixture fx = parse_fixture(read_file(path));
  const HMorphism& f = morphism_or_die(fx, name);
  std::string t = "morphism " + name + ": " + to_string(f.mat()) + "\n";
  bool ok = true;
  auto show = [&](const char* label, const Factorization& fac) {
    t += std::string(label) + "\n";
    t += "  epi:  " + to_string(fac.epi.mat()) + "\n";
    if (fac.middle) t += "  mid:  " + to_string(fac.middle->mat()) + "\n";
    t += "  mono: " + to_string(fac.mono.mat()) + "\n";
    bool recomposes = fac.composite() == f;
    t += std::string("  recomposes: ") + (recomposes ? "yes" : "NO") + "\n";
    ok = ok && recomposes;
    return recomposes;
  };
  Factorization dem = factor(f, FactorKind::DaggerEpiThenMono);
  show("coisometry-then-mono", dem);
  bool coiso = is_dagger_epi(dem.epi), mono = is_mono(dem.mono);
  t += std::string("  epi is coisometry: ") + (coiso ? "yes" : "NO") + "\n";
  t += std::string("  mono is injective: ") + (mono ? "yes" : "NO") + "\n";
  ok = ok && coiso && mono;

  Factorization etm = factor(f, FactorKind::EpiThenDaggerMono);
  show("epi-then-isometry", etm);
  bool epi = is_epi(etm.epi), iso = is_dagger_mono(etm.mono);
  t += std::string("  epi is surjective: ") + (epi ? "yes" : "NO") + "\n";
  t += std::string("  mono is isometry:  ") + (iso ? "yes" : "NO") + "\n";
  ok = ok && epi && iso;

  Factorization pol = factor(f, FactorKind::PolarTriple);
  show("polar-triple", pol);
  bool mid_iso = is_mono(*pol.middle) && is_epi(*pol.middle);
  t += std::string("  middle is invertible: ") + (mid_iso ? "yes" : "NO") + "\n";
  ok = ok && mid_iso;

  try {
    connecting_iso(factor(f, FactorKind::DaggerEpiThenMono,
                          PivotRule::MaxNumerator),
                   factor(f, FactorKind::DaggerEpiThenMono,
                          PivotRule::FirstNonzero));
    t += "pivot-rule change connected by a unitary: yes\n";
  } catch (const error& e) {
    t += std::string("pivot-rule change connected by a unitary: NO (") +
         e.what() + ")\n";
    ok = false;
  }
  t += std::string("verdict: ") + (ok ? "OK" : "FAIL") + "\n";
  write_output(out_path, t);
  return ok ? 0 : 1;
}

int run_extend(const std::string& path, const std::string& hom_name,
               const std::string& out_path) {
  auto hom = SemiringHom::from_name(hom_name);
  if (!hom) throw error("unknown homomorphism '" + hom_name + "'");
  Fixture fx = parse_fixture(read_file(path));
  ScalarExtension ext{*hom};
  Fixture out;
  for (const auto& [name, obj] : fx.objects)
    out.objects.emplace_back(name, extend_object(ext, obj));
  for (const auto& [name, mor] : fx.morphisms)
    out.morphisms.emplace_back(name, extend_mor(ext, mor));
  write_output(out_path, serialize_fixture(out));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hilbert-module calculator and property auditor"};
  app.require_subcommand(1);

  std::string ring = "all", suite = "all", out_path;
  std::optional<uint64_t> seed_flag;
  GenConfig cfg;
  unsigned jobs = 1;

  CLI::App* audit = app.add_subcommand("audit", "run property suites");
  audit->add_option("--ring", ring, "ring name or 'all'");
  audit->add_option("--suite", suite, "suite name or 'all'");
  audit->add_option("--seed", seed_flag, "generator seed (default: HILBCAT_SEED or 42)");
  audit->add_option("--samples", cfg.samples, "cases per suite")
      ->check(CLI::PositiveNumber);
  audit->add_option("--max-dim", cfg.max_dim, "largest generated dimension")
      ->check(CLI::PositiveNumber);
  audit->add_option("--entry-height", cfg.entry_height,
                    "bound on generated numerators and denominators")
      ->check(CLI::PositiveNumber);
  audit->add_option("--out", out_path, "also write a JSON report here");
  audit->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string fixture_path, morphism_name, hom_name;
  CLI::App* factor_cmd =
      app.add_subcommand("factor", "factor a fixture morphism three ways");
  factor_cmd->add_option("fixture", fixture_path, "fixture file")->required();
  factor_cmd->add_option("--morphism", morphism_name, "morphism name")
      ->required();
  factor_cmd->add_option("--out", out_path, "transcript file (default stdout)");

  CLI::App* extend_cmd =
      app.add_subcommand("extend", "extend a fixture along a scalar hom");
  extend_cmd->add_option("fixture", fixture_path, "fixture file")->required();
  extend_cmd->add_option("--hom", hom_name,
                         "q-to-qi, q-to-qsqrt2 or nat-to-int")
      ->required();
  extend_cmd->add_option("--out", out_path, "output fixture (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, any parse error 2
  }

  try {
    if (audit->parsed()) {
      cfg.seed = resolve_seed(seed_flag);
      return run_audit(ring, suite, cfg, out_path, jobs);
    }
    if (factor_cmd->parsed())
      return run_factor(fixture_path, morphism_name, out_path);
    if (extend_cmd->parsed()) return run_extend(fixture_path, hom_name, out_path);
  } catch (const hilbcat::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

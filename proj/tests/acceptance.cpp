// End-to-end acceptance runner: one line per criterion, pinned sample
// counts and time budgets, exit 0 only when every line passes.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <hilbcat/hilbcat.hpp>

using namespace hilbcat;

namespace {

const std::vector<ScalarRing>& field_rings() {
  static const std::vector<ScalarRing> r = {rat_ring(), gauss_ring(),
                                            quad_ring(2)};
  return r;
}

const std::vector<ScalarRing>& all_rings() {
  static const std::vector<ScalarRing> r = {nat_ring(),  bool_ring(),
                                            int_ring(),  rat_ring(),
                                            gauss_ring(), quad_ring(2)};
  return r;
}

GenConfig config(int samples) {
  GenConfig cfg;
  cfg.samples = samples;
  return cfg;
}

bool run_suites_ok(const std::vector<std::string>& suites,
                   const std::vector<ScalarRing>& rings, int samples,
                   std::string& detail) {
  GenConfig cfg = config(samples);
  for (const auto& ring : rings)
    for (const auto& name : suites) {
      AuditReport r = run_suite(name, ring, cfg);
      if (!r.ok()) {
        detail = to_text(r);
        return false;
      }
    }
  return true;
}

struct Criterion {
  const char* name;
  double budget_seconds;
  bool (*run)(std::string& detail);
};

bool c1_dagger_enrichment(std::string& detail) {
  return run_suites_ok({"dagger-laws"}, field_rings(), 500, detail);
}

bool c2_dagger_kernels(std::string& detail) {
  return run_suites_ok({"dagger-kernel"}, field_rings(), 100, detail);
}

bool c3_factorization(std::string& detail) {
  return run_suites_ok({"factorization", "factorization-uniqueness"},
                       field_rings(), 100, detail);
}

bool c4_hom_embedding(std::string& detail) {
  return run_suites_ok({"hom-embedding", "fullness"}, field_rings(), 100,
                       detail);
}

bool c5_extension(std::string& detail) {
  if (!run_suites_ok({"extension"}, {rat_ring()}, 200, detail)) return false;
  if (!run_suites_ok({"boundedness"}, {rat_ring()}, 100, detail)) return false;
  for (const CMonoid& m : {CMonoid::boolean(), CMonoid::saturating3()})
    if (!non_fullness_demo(m).witness_found) {
      detail = "no non-fullness witness on " + m.name;
      return false;
    }
  return true;
}

bool c6_scalars(std::string& detail) {
  return run_suites_ok({"scalar-laws", "semifield", "field", "char-zero",
                        "zerosumfree", "cancellative"},
                       all_rings(), 500, detail);
}

bool c7_monoidal(std::string& detail) {
  if (!run_suites_ok({"biproduct", "tensor"}, field_rings(), 100, detail))
    return false;
  // exhaustive finite-semimodule tensors for carriers up to 8 elements
  return run_suites_ok({"fsm-tensor"}, {bool_ring()}, 1, detail);
}

bool c8_psd_oracle(std::string& detail) {
  for (const auto& ring : field_rings()) {
    InstanceGenerator gen(42, 3, 5);
    for (int i = 0; i < 100; ++i) {
      HMorphism f = gen.biased_morphism(ring);
      Bound m = find_bound(f);
      Scalar mm = involute(m.value) * m.value;
      Matrix a = mm * f.dom().gram() -
                 conj_transpose(f.mat()) * f.cod().gram() * f.mat();
      if (!is_positive_semidefinite(a)) {
        detail = "found bound not PSD-certified over " + ring.name();
        return false;
      }
      for (int k = 0; k < 1000; ++k) {
        Matrix x = gen.matrix(ring, a.cols(), 1);
        Matrix v = conj_transpose(x) * a * x;
        if (!is_positive(v.at(0, 0))) {
          detail = "sampled vector contradicts PSD verdict over " +
                   ring.name() + " at " + to_string(x);
          return false;
        }
      }
    }
  }
  return true;
}

bool c9_determinism(std::string& detail) {
  auto full_report = [] {
    GenConfig cfg = config(50);
    std::string text;
    for (const auto& ring : all_rings())
      for (const auto& name : suite_names())
        text += to_text(run_suite(name, ring, cfg));
    return text;
  };
  std::string a = full_report();
  std::string b = full_report();
  if (a != b) {
    detail = "reports differ between runs";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"dagger-and-enrichment-laws", 10.0, c1_dagger_enrichment},
      {"dagger-monos-are-dagger-kernels", 10.0, c2_dagger_kernels},
      {"factorizations-and-uniqueness", 20.0, c3_factorization},
      {"hom-embedding-preservation", 10.0, c4_hom_embedding},
      {"scalar-extension-bounds-nonfullness", 20.0, c5_extension},
      {"scalar-semiring-hypotheses", 5.0, c6_scalars},
      {"biproduct-tensor-gram-laws", 10.0, c7_monoidal},
      {"psd-decision-vs-sampling-oracle", 10.0, c8_psd_oracle},
      {"deterministic-reports", 30.0, c9_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool in_budget = secs <= c.budget_seconds;
    bool pass = ok && in_budget;
    std::printf("%s %s (%.2fs / %.0fs)\n", pass ? "PASS" : "FAIL", c.name,
                secs, c.budget_seconds);
    if (!ok && !detail.empty()) std::printf("  %s\n", detail.c_str());
    if (!in_budget) std::printf("  exceeded time budget\n");
    if (!pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

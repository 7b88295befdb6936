#include "curlie/suites.hpp"

#include <algorithm>
#include <random>

#include "curlie/cohomology.hpp"
#include "curlie/errors.hpp"
#include "curlie/structure_maps.hpp"

namespace curlie {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"prop12", "functor", "complexmap", "alpha", "ses", "semisimple", "all"};
  return names;
}

namespace {

void append_checks(Json& checks, const VerificationReport& r) {
  for (const auto& c : r.checks) {
    Json entry = {{"suite", r.suite}, {"name", c.name}, {"degree", c.degree}, {"passed", c.passed}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(entry);
  }
}

/// Folds a sub-report into one check named `label`.
VerificationReport summarize(const std::string& suite, const std::string& label, const VerificationReport& r) {
  VerificationReport out(suite);
  if (r.hypothesis_failed) {
    out.add(label, -1, false, "hypothesis failed: " + r.hypothesis_detail);
    return out;
  }
  std::size_t failed = 0;
  for (const auto& c : r.checks) failed += c.passed ? 0 : 1;
  out.add(label, -1, failed == 0,
          std::to_string(r.checks.size() - failed) + "/" + std::to_string(r.checks.size()) + " degrees hold");
  return out;
}

Json ses_table(const SesReport& ses) {
  Json rows = Json::array();
  for (const auto& r : ses.rows) {
    rows.push_back({{"degree", r.degree},
                    {"dim_H_current", r.dim_current_h},
                    {"dim_Q", r.dim_q},
                    {"dim_H_base", r.dim_base_h},
                    {"m", r.m},
                    {"alpha_surjective", r.alpha_surjective},
                    {"kernel_equals_Q", r.kernel_equals_q},
                    {"dims_exact", r.dims_exact}});
  }
  return rows;
}

std::size_t trials_or(const VerifyOptions& o, std::size_t fallback) { return o.trials.value_or(fallback); }

}  // namespace

VerifyOutcome run_verify(const LieAlgebra& g, const CommAssocAlgebra& s, const Representation& rep,
                         const VerifyOptions& options) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), options.suite) == names.end()) {
    throw ParseError("unknown suite: " + options.suite);
  }
  if (!rep.algebra().same_constants(g)) throw ValidationError("representation is not over the given Lie algebra");
  const bool all = options.suite == "all";
  auto wants = [&](const char* name) { return all || options.suite == name; };

  CurrentCohomology cc(rep, s);
  const auto& maps = cc.maps();
  const std::size_t n = g.dim();
  const std::size_t d = rep.module_dim();

  Json checks = Json::array();
  Json tables = Json::object();
  bool hypothesis_failed = false;
  std::string hypothesis_detail;
  Json skipped = Json::array();

  if (wants("prop12")) {
    append_checks(checks, verify_complex(cc.base()));
    auto cur = verify_complex(cc.current());
    cur.suite = "complex_current";
    append_checks(checks, cur);
    append_checks(checks, verify_restriction_commutes(maps, cc.base(), cc.current()));
  }
  if (wants("functor")) {
    const std::size_t trials = trials_or(options, 100);
    std::uint64_t offset = 0;
    for (std::size_t p = 1; p <= std::min<std::size_t>(2, n); ++p) {
      for (auto c : all_composition_cases()) {
        append_checks(checks, verify_T_composition(maps, c, {d, d, d}, p, trials, options.seed + offset++));
      }
      auto base = maps.base_space(d, p);
      auto tid = maps.lift(CochainMap(base, base, Matrix::identity(base.dim()))).matrix;
      VerificationReport remark("functor");
      remark.add("T(Id)∘T(Id) = T(Id)", static_cast<int>(p), tid * tid == tid);
      append_checks(checks, remark);
    }
  }
  if (wants("complexmap")) {
    const std::size_t trials = trials_or(options, 20);
    std::mt19937_64 rng(options.seed);
    const auto& base = cc.base();
    const auto& cur = cc.current();
    for (std::size_t t = 0; t < trials; ++t) {
      auto f = homotopy_chain_map(base, base, rng);
      append_checks(checks, summarize("complexmap", "homotopy map " + std::to_string(t),
                                      verify_map_of_complexes(maps, f, base, base, cur, cur)));
    }
    for (const Rational& c : {Rational(1), Rational(2), Rational(-1, 2)}) {
      append_checks(checks, summarize("complexmap", "scalar " + to_string(c) + "·Id",
                                      verify_map_of_complexes(maps, scalar_identity(base, c), base, base, cur, cur)));
    }
    append_checks(checks, summarize("complexmap", "zero map",
                                    verify_map_of_complexes(maps, zero_map(base, base), base, base, cur, cur)));
  }
  if (wants("alpha")) {
    append_checks(checks, verify_degree_zero(cc));
    append_checks(checks, verify_alpha_diagram(cc));
    append_checks(checks, verify_zeta_psi(cc));
    std::mt19937_64 rng(options.seed);
    const auto& base = cc.base();
    append_checks(checks, summarize("naturality", "identity", verify_naturality(cc, cc, scalar_identity(base, 1))));
    append_checks(checks, summarize("naturality", "2·Id", verify_naturality(cc, cc, scalar_identity(base, 2))));
    append_checks(checks, summarize("naturality", "null-homotopic",
                                    verify_naturality(cc, cc, homotopy_chain_map(base, base, rng))));
  }
  if (wants("ses")) {
    auto ses = verify_ses(cc);
    append_checks(checks, ses_as_checks(ses));
    tables["ses"] = ses_table(ses);
  }
  if (options.suite == "semisimple" || (all && g.marked_semisimple())) {
    try {
      append_checks(checks, verify_semisimple(cc));
    } catch (const HypothesisFailed& e) {
      if (all) {
        skipped.push_back("semisimple: " + std::string(e.what()));
      } else {
        hypothesis_failed = true;
        hypothesis_detail = e.what();
      }
    }
  }

  bool passed = !hypothesis_failed;
  for (const auto& c : checks) passed = passed && c["passed"].get<bool>();

  VerifyOutcome outcome;
  outcome.report = {
      {"command", {{"name", "verify"}, {"suite", options.suite}, {"seed", options.seed},
                   {"trials", options.trials ? Json(*options.trials) : Json(nullptr)}}},
      {"inputs", {{"g", {{"name", g.name()}, {"digest", digest(to_json(g))}}},
                  {"s", {{"name", s.name()}, {"digest", digest(to_json(s))}}},
                  {"rep", {{"name", rep.name()}, {"digest", digest(to_json(rep))}}}}},
      {"tables", tables},
      {"checks", checks},
      {"hypothesis", {{"failed", hypothesis_failed}, {"detail", hypothesis_detail}}},
      {"skipped", skipped},
      {"passed", passed},
  };
  outcome.status = hypothesis_failed ? kHypothesisFailed : (passed ? kPass : kVerificationFailed);
  return outcome;
}

Json cohomology_table(const Representation& rep, const CommAssocAlgebra* s, std::optional<std::size_t> max_degree) {
  Json rows = Json::array();
  if (s == nullptr) {
    ChevalleyEilenbergComplex complex(rep);
    const std::size_t top = max_degree.value_or(complex.lie_dim());
    for (std::size_t p = 0; p <= top; ++p) rows.push_back({{"degree", p}, {"dim_H", cohomology(complex, p).dim()}});
    return rows;
  }
  CurrentCohomology cc(rep, *s);
  const std::size_t top = std::min(max_degree.value_or(cc.top_degree()), cc.top_degree());
  for (std::size_t p = 0; p <= top; ++p) {
    rows.push_back({{"degree", p},
                    {"dim_H_current", cc.current_h(p).dim()},
                    {"dim_Q", cc.Q_space(p).dim()},
                    {"dim_H_base", cc.base_h(p).dim()}});
  }
  return rows;
}

}  // namespace curlie

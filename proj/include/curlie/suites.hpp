#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curlie/algebra.hpp"
#include "curlie/io.hpp"

namespace curlie {

enum ExitCode : int {
  kPass = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kHypothesisFailed = 3,
};

const std::vector<std::string>& suite_names();

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 42;
  /// Random trials per case; each suite has its own default when unset.
  std::optional<std::size_t> trials;
};

struct VerifyOutcome {
  Json report;
  int status = kPass;
};

/// Runs one verification suite and returns its JSON report (without the
/// timing field) and exit status. Throws ParseError for an unknown suite.
VerifyOutcome run_verify(const LieAlgebra& g, const CommAssocAlgebra& s, const Representation& rep,
                         const VerifyOptions& options);

/// Dimension table of H^p(g;V), and of H^p(g⊗S;V⊗S) and 𝒬^p when s is given.
Json cohomology_table(const Representation& rep, const CommAssocAlgebra* s, std::optional<std::size_t> max_degree);

}  // namespace curlie

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bmdist/oracle.hpp"
#include "report.hpp"

namespace bmdist::app {

struct SuiteOptions {
  OracleOptions oracle;
  std::uint64_t seed = 20240601;
  std::optional<double> tol;  // overrides the tolerance of distance claims
};

const std::vector<std::string>& suite_names();

// Throws DomainError for an unknown suite name.
RunReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace bmdist::app

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmflab/report.hpp"

namespace qmflab {

struct SuiteConfig {
  std::uint64_t seed = 0;
  long pmin = 5;
  long pmax = 101;
  bool full757 = false;
  std::vector<int> weights;  // empty: each suite's default set
  std::size_t spot_checks = 50;
  std::optional<long> probe_p = 23;  // g-probe in the sigma suite; none to skip it
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
Report run_suite(std::string_view name, const SuiteConfig& config = {});

Report run_diagram_suite(const SuiteConfig& config);
Report run_hecke_compat_suite(const SuiteConfig& config);
Report run_manin_eigen_suite(const SuiteConfig& config);
Report run_multiplier_compat_suite(const SuiteConfig& config);
Report run_sigma_suite(const SuiteConfig& config);
Report run_eichler_suite(const SuiteConfig& config);

}  // namespace qmflab

#ifndef QPSTURM_VERIFY_HPP_
#define QPSTURM_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qpsturm {

struct CheckResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string details;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
};

inline constexpr std::uint64_t kDefaultVerifySeed = 20240607;

struct VerifyOptions {
  std::uint64_t seed = kDefaultVerifySeed;  // only the randomized checks read it
};

// Suite names in declaration order; "all" runs them in this order.
const std::vector<std::string>& suite_names();

// Throws InvalidArgument for an unknown name.
SuiteResult run_suite(std::string_view name, const VerifyOptions& options = {});

// A single suite, or every suite for "all".
std::vector<SuiteResult> run_verify(std::string_view name, const VerifyOptions& options = {});

}  // namespace qpsturm

#endif  // QPSTURM_VERIFY_HPP_

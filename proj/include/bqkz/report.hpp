#pragma once

#include <cstdint>
#include <sstream>
#include <string>

#include "json.hpp"

namespace bqkz {

const char* version_string();

/// Outcome of one verification suite.
///
/// Asserted checks decide `pass`; observations are recorded in `details`
/// and never change it.
class Report {
 public:
  Report(std::string suite, int n_max, std::uint64_t seed, int trials, std::string claim);

  /// Records one asserted check; the first failure becomes the counterexample.
  bool check(const std::string& name, bool ok, const nlohmann::json& context = nullptr);
  /// Records a reported-only observation.
  void observe(const std::string& name, const nlohmann::json& value);
  /// Folds a sub-report into this one.
  void merge(const Report& other);
  void set_detail(const std::string& key, const nlohmann::json& value) { details_[key] = value; }

  [[nodiscard]] bool pass() const { return pass_; }
  [[nodiscard]] const std::string& suite() const { return suite_; }
  [[nodiscard]] int checks_run() const { return checks_; }
  [[nodiscard]] const nlohmann::json& counterexample() const { return counterexample_; }
  [[nodiscard]] nlohmann::json to_json() const;

 private:
  std::string suite_;
  int n_max_;
  std::uint64_t seed_;
  int trials_;
  std::string claim_;
  bool pass_ = true;
  int checks_ = 0;
  nlohmann::json counterexample_ = nullptr;
  nlohmann::json details_ = nlohmann::json::object();
};

template <class T>
std::string to_str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace bqkz

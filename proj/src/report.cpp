#include "bqkz/report.hpp"

namespace bqkz {

const char* version_string() { return BQKZ_VERSION; }

Report::Report(std::string suite, int n_max, std::uint64_t seed, int trials, std::string claim)
    : suite_(std::move(suite)), n_max_(n_max), seed_(seed), trials_(trials), claim_(std::move(claim)) {
  details_["checks"] = nlohmann::json::object();
  details_["observations"] = nlohmann::json::object();
}

bool Report::check(const std::string& name, bool ok, const nlohmann::json& context) {
  ++checks_;
  auto& entry = details_["checks"][name];
  if (entry.is_null()) entry = {{"run", 0}, {"failed", 0}};
  entry["run"] = entry["run"].get<int>() + 1;
  if (!ok) {
    entry["failed"] = entry["failed"].get<int>() + 1;
    if (pass_) counterexample_ = {{"check", name}, {"inputs", context}};
    pass_ = false;
  }
  return ok;
}

void Report::observe(const std::string& name, const nlohmann::json& value) { details_["observations"][name] = value; }

void Report::merge(const Report& other) {
  for (const auto& [name, entry] : other.details_.at("checks").items()) {
    auto& mine = details_["checks"][name];
    if (mine.is_null()) mine = {{"run", 0}, {"failed", 0}};
    mine["run"] = mine["run"].get<int>() + entry["run"].get<int>();
    mine["failed"] = mine["failed"].get<int>() + entry["failed"].get<int>();
  }
  for (const auto& [name, value] : other.details_.at("observations").items()) details_["observations"][name] = value;
  checks_ += other.checks_;
  if (!other.pass_ && pass_) counterexample_ = other.counterexample_;
  pass_ = pass_ && other.pass_;
}

nlohmann::json Report::to_json() const {
  return {{"suite", suite_},  {"N", n_max_},       {"seed", seed_},
          {"trials", trials_}, {"pass", pass_},     {"counterexample", counterexample_},
          {"claim", claim_},   {"version", version_string()}, {"details", details_}};
}

}  // namespace bqkz

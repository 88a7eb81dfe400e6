#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "egz/checks.hpp"

namespace egz {

using Json = nlohmann::json;

Json witness_report_json(const WitnessReport& r);
Json constant_report_json(const ConstantReport& r);
Json davenport_report_json(const DavenportReport& r);
Json check_result_json(const CheckResult& r);
Json extremal_form_json(const Group& g, const ExtremalForm& f);
Json product_set_json(const ProductSet& p);

/// One line of the append-only result cache.
struct ResultRecord {
  int schema = 1;
  std::string group;
  std::string op;
  Json params = Json::object();
  Json result = Json::object();
  bool exhaustive = false;
  long long elapsed_ms = 0;
  std::string timestamp;
};

Json record_json(const ResultRecord& r);
std::optional<ResultRecord> record_from_json(const Json& j);
std::string utc_timestamp();

/// JSON-lines result cache. Only exhaustive records are stored; a hit needs
/// an exact (schema, group, op, params) match.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

  const std::filesystem::path& path() const { return path_; }

  std::optional<ResultRecord> lookup(const std::string& group, const std::string& op,
                                     const Json& params) const;
  void append(const ResultRecord& record) const;

  /// --cache flag, else EGZ_CACHE, else egz-cache.jsonl in the working dir.
  static std::filesystem::path default_path();

 private:
  std::filesystem::path path_;
};

}  // namespace egz

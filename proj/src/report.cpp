#include "egz/report.hpp"

#include <ctime>
#include <fstream>

namespace egz {

Json witness_report_json(const WitnessReport& r) {
  return Json{{"group", r.group},
              {"L", r.forbidden_length},
              {"length", r.witness_length},
              {"witness", r.witness.str()},
              {"exhaustive", r.exhaustive},
              {"elapsed_ms", r.elapsed_ms}};
}

Json constant_report_json(const ConstantReport& r) {
  Json j = witness_report_json(r.detail);
  j["invariant"] = r.invariant;
  j["value"] = r.value;
  return j;
}

Json davenport_report_json(const DavenportReport& r) {
  return Json{{"invariant", r.invariant}, {"value", r.value},
              {"witness", r.witness.str()}, {"length", r.witness.length()},
              {"exhaustive", r.exhaustive}, {"elapsed_ms", r.elapsed_ms}};
}

Json check_result_json(const CheckResult& r) {
  Json j{{"check", r.name},
         {"group", r.group},
         {"params", r.params},
         {"status", std::string(check_status_name(r.status))},
         {"detail", r.detail},
         {"elapsed_ms", r.elapsed_ms}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

Json extremal_form_json(const Group& g, const ExtremalForm& f) {
  Json j{{"tag", std::string(form_tag_name(f.tag))},
         {"params", f.params},
         {"shape", f.shape}};
  if (f.uses_presentation()) {
    j["alpha"] = g.name(f.gen_a);
    j["tau"] = g.name(f.gen_b);
  } else {
    j["g"] = g.name(f.gen_a);
    j["h"] = g.name(f.gen_b);
  }
  if (f.tail >= 0) j["tail"] = f.tail;
  return j;
}

Json product_set_json(const ProductSet& p) {
  Json arr = Json::array();
  for (Elem e : p.elements()) arr.push_back(p.group().name(e));
  return arr;
}

Json record_json(const ResultRecord& r) {
  return Json{{"schema", r.schema},   {"group", r.group},
              {"op", r.op},           {"params", r.params},
              {"result", r.result},   {"exhaustive", r.exhaustive},
              {"elapsed_ms", r.elapsed_ms}, {"timestamp", r.timestamp}};
}

std::optional<ResultRecord> record_from_json(const Json& j) {
  if (!j.is_object()) return std::nullopt;
  ResultRecord r;
  try {
    r.schema = j.at("schema").get<int>();
    r.group = j.at("group").get<std::string>();
    r.op = j.at("op").get<std::string>();
    r.params = j.at("params");
    r.result = j.at("result");
    r.exhaustive = j.at("exhaustive").get<bool>();
    r.elapsed_ms = j.at("elapsed_ms").get<long long>();
    r.timestamp = j.value("timestamp", "");
  } catch (const Json::exception&) {
    return std::nullopt;
  }
  return r;
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::optional<ResultRecord> ResultCache::lookup(const std::string& group, const std::string& op,
                                                const Json& params) const {
  std::ifstream in(path_);
  if (!in) return std::nullopt;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json j = Json::parse(line, nullptr, false);
    auto rec = record_from_json(j);
    if (!rec || !rec->exhaustive) continue;
    if (rec->schema == 1 && rec->group == group && rec->op == op && rec->params == params) {
      return rec;
    }
  }
  return std::nullopt;
}

void ResultCache::append(const ResultRecord& record) const {
  if (!record.exhaustive) return;  // budget-dependent values must not poison future runs
  if (path_.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path_.parent_path(), ec);
  }
  std::ofstream out(path_, std::ios::app);
  out << record_json(record).dump() << '\n';
}

std::filesystem::path ResultCache::default_path() {
  if (const char* env = std::getenv("EGZ_CACHE"); env && *env) return env;
  return "egz-cache.jsonl";
}

}  // namespace egz

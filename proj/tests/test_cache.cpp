#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "egz/report.hpp"

using namespace egz;

namespace {

struct TempFile {
  std::filesystem::path path;
  TempFile() {
    path = std::filesystem::temp_directory_path() /
           ("egz-cache-test-" + std::to_string(::getpid()) + ".jsonl");
    std::filesystem::remove(path);
  }
  ~TempFile() { std::filesystem::remove(path); }
};

ResultRecord sample_record(bool exhaustive) {
  ResultRecord r;
  r.group = "dihedral:4";
  r.op = "invariant:s";
  r.params = Json::object();
  r.result = {{"value", 8}, {"witness", "a0^3 a1^3 a0t"}, {"length", 7}, {"L", 4}};
  r.exhaustive = exhaustive;
  r.elapsed_ms = 12;
  r.timestamp = utc_timestamp();
  return r;
}

}  // namespace

TEST_CASE("record JSON round trip") {
  ResultRecord r = sample_record(true);
  auto back = record_from_json(record_json(r));
  REQUIRE(back.has_value());
  CHECK(back->group == r.group);
  CHECK(back->op == r.op);
  CHECK(back->params == r.params);
  CHECK(back->result == r.result);
  CHECK(back->exhaustive == r.exhaustive);
  CHECK(back->elapsed_ms == r.elapsed_ms);

  CHECK_FALSE(record_from_json(Json::array()).has_value());
  CHECK_FALSE(record_from_json(Json{{"schema", 1}}).has_value());
}

TEST_CASE("cache stores exhaustive records only") {
  TempFile tmp;
  ResultCache cache(tmp.path);
  cache.append(sample_record(false));
  CHECK_FALSE(std::filesystem::exists(tmp.path));
  CHECK_FALSE(cache.lookup("dihedral:4", "invariant:s", Json::object()).has_value());

  cache.append(sample_record(true));
  auto hit = cache.lookup("dihedral:4", "invariant:s", Json::object());
  REQUIRE(hit.has_value());
  CHECK(hit->result.at("value") == 8);
}

TEST_CASE("cache hits need an exact key match") {
  TempFile tmp;
  ResultCache cache(tmp.path);
  ResultRecord r = sample_record(true);
  r.op = "enumerate";
  r.params = {{"length", 7}, {"forbidden_length", 4}};
  cache.append(r);

  CHECK(cache.lookup("dihedral:4", "enumerate", r.params).has_value());
  CHECK_FALSE(cache.lookup("dihedral:4", "enumerate", Json{{"length", 7}}).has_value());
  CHECK_FALSE(cache.lookup("dihedral:3", "enumerate", r.params).has_value());
  CHECK_FALSE(cache.lookup("dihedral:4", "invariant:s", r.params).has_value());
}

TEST_CASE("first matching record wins") {
  TempFile tmp;
  ResultCache cache(tmp.path);
  ResultRecord first = sample_record(true);
  first.elapsed_ms = 1;
  ResultRecord second = sample_record(true);
  second.elapsed_ms = 2;
  cache.append(first);
  cache.append(second);
  auto hit = cache.lookup("dihedral:4", "invariant:s", Json::object());
  REQUIRE(hit.has_value());
  CHECK(hit->elapsed_ms == 1);
}

TEST_CASE("malformed lines are skipped") {
  TempFile tmp;
  {
    std::ofstream out(tmp.path);
    out << "not json at all\n";
    out << record_json(sample_record(true)).dump() << "\n";
  }
  ResultCache cache(tmp.path);
  CHECK(cache.lookup("dihedral:4", "invariant:s", Json::object()).has_value());
}

TEST_CASE("report serialization carries the contract fields") {
  Group d4 = Group::make(GroupKind::Dihedral, 4);
  WitnessReport w{d4.descriptor(), 4, Sequence::parse(d4, "a0^3 a1^3 a0t"), 7, true, 3, 100};
  Json j = witness_report_json(w);
  CHECK(j.at("group") == "dihedral:4");
  CHECK(j.at("L") == 4);
  CHECK(j.at("length") == 7);
  CHECK(j.at("witness") == "a0^3 a1^3 a0t");
  CHECK(j.at("exhaustive") == true);
  CHECK(j.contains("elapsed_ms"));
  // the witness literal parses back to the same multiset
  CHECK(Sequence::parse(d4, j.at("witness").get<std::string>()) == w.witness);

  ExtremalForm f{FormTag::T12_1b, 1, 4, {0, 1, 0}, 0, -1};
  Json fj = extremal_form_json(d4, f);
  CHECK(fj.at("tag") == "T1.2.1b");
  CHECK(fj.at("alpha") == "a1");
  CHECK(fj.at("tau") == "a0t");
}

#include <CLI11.hpp>

#include <atomic>
#include <iostream>
#include <string>
#include <thread>

#include "egz/report.hpp"

namespace {

using namespace egz;

struct CommonOpts {
  std::string group;
  bool json = false;
  int ceiling = 64;
  double budget_secs = 600.0;
  int par_depth = 0;
  std::string cache_path;
  bool no_cache = false;
};

void add_search_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--ceiling", o.ceiling, "search length ceiling")->capture_default_str();
  cmd->add_option("--budget-secs", o.budget_secs, "time budget per search, 0 disables")
      ->capture_default_str();
  cmd->add_option("--par-depth", o.par_depth, "DFS split depth for parallel search")
      ->capture_default_str();
  cmd->add_option("--cache", o.cache_path, "result cache file (JSON lines)");
  cmd->add_flag("--no-cache", o.no_cache, "skip reading and writing the result cache");
}

SearchConfig to_config(const CommonOpts& o) {
  SearchConfig cfg;
  cfg.length_ceiling = o.ceiling;
  cfg.budget_ms = static_cast<long long>(o.budget_secs * 1000.0);
  cfg.parallel_depth = o.par_depth;
  return cfg;
}

ResultCache open_cache(const CommonOpts& o) {
  return ResultCache(o.cache_path.empty() ? ResultCache::default_path()
                                           : std::filesystem::path(o.cache_path));
}

Json stdout_record(const ResultRecord& rec) {
  Json j = record_json(rec);
  j.erase("timestamp");
  return j;
}

int run_group_info(const CommonOpts& o) {
  Group g = Group::from_descriptor(o.group);
  if (o.json) {
    Json elems = Json::array();
    for (Elem e = 0; e < g.order(); ++e)
      elems.push_back({{"name", g.name(e)}, {"order", g.element_order(e)}});
    Json j{{"group", g.descriptor()}, {"order", g.order()},     {"exponent", g.exponent()},
           {"max_order", g.max_element_order()},                {"abelian", g.is_abelian()},
           {"identity", g.name(g.identity())},                  {"elements", elems}};
    if (g.kind() != GroupKind::Cyclic) {
      auto h = index2_cyclic_subgroup(g);
      Json hj = Json::array(), cj = Json::array();
      for (Elem e = 0; e < g.order(); ++e)
        ((h.members >> e) & 1 ? hj : cj).push_back(g.name(e));
      j["H"] = hj;
      j["G0"] = cj;
      j["presentations"] = presentations_of(g).size();
    }
    auto comm = commutator_subgroup(g);
    Json commj = Json::array();
    for (Elem e = 0; e < g.order(); ++e)
      if ((comm.members >> e) & 1) commj.push_back(g.name(e));
    j["commutator_subgroup"] = commj;
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "group       " << g.descriptor() << "\n"
            << "order       " << g.order() << "\n"
            << "exponent    " << g.exponent() << "\n"
            << "max order   " << g.max_element_order() << "\n"
            << "abelian     " << (g.is_abelian() ? "yes" : "no") << "\n";
  std::cout << "elements   ";
  for (Elem e = 0; e < g.order(); ++e)
    std::cout << " " << g.name(e) << "(" << g.element_order(e) << ")";
  std::cout << "\n";
  if (g.kind() != GroupKind::Cyclic) {
    auto h = index2_cyclic_subgroup(g);
    std::cout << "H          ";
    for (Elem e = 0; e < g.order(); ++e)
      if ((h.members >> e) & 1) std::cout << " " << g.name(e);
    std::cout << "\nG0         ";
    for (Elem e = 0; e < g.order(); ++e)
      if ((h.complement >> e) & 1) std::cout << " " << g.name(e);
    std::cout << "\npresentations " << presentations_of(g).size() << "\n";
  }
  auto comm = commutator_subgroup(g);
  std::cout << "commutator ";
  for (Elem e = 0; e < g.order(); ++e)
    if ((comm.members >> e) & 1) std::cout << " " << g.name(e);
  std::cout << "\n";
  return 0;
}

int run_seq_products(const CommonOpts& o, const std::string& seq_text, int length, bool all) {
  Group g = Group::from_descriptor(o.group);
  Sequence s = Sequence::parse(g, seq_text);
  ProductSet p = all               ? all_products(s)
                 : length >= 0     ? n_products(s, length)
                                   : full_products(s);
  if (o.json) {
    Json j{{"group", g.descriptor()},
           {"seq", s.str()},
           {"products", product_set_json(p)}};
    if (length >= 0) j["length"] = length;
    if (all) j["all"] = true;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << p.str() << "\n";
  }
  return 0;
}

int run_invariant(const CommonOpts& o, const std::string& which) {
  Group g = Group::from_descriptor(o.group);
  SearchConfig cfg = to_config(o);
  std::string op = "invariant:" + which;
  Json params = Json::object();
  if (which == "s") params["L"] = g.exponent();
  if (which == "E") params["L"] = g.order();
  if (which == "sprime") params["L"] = g.max_element_order();

  ResultCache cache = open_cache(o);
  if (!o.no_cache) {
    if (auto hit = cache.lookup(g.descriptor(), op, params)) {
      if (o.json) {
        std::cout << stdout_record(*hit).dump() << "\n";
      } else {
        std::cout << which << "(" << g.descriptor() << ") = " << hit->result.at("value")
                  << "  [exhaustive, witness: " << hit->result.value("witness", std::string())
                  << ", " << hit->elapsed_ms << " ms]\n";
      }
      return 0;
    }
  }

  ResultRecord rec;
  rec.group = g.descriptor();
  rec.op = op;
  rec.params = params;
  rec.timestamp = utc_timestamp();

  if (which == "d" || which == "D") {
    DavenportReport r = which == "d" ? small_davenport(g, cfg) : large_davenport(g, cfg);
    rec.result = {{"value", r.value}, {"witness", r.witness.str()}, {"length", r.witness.length()}};
    rec.exhaustive = r.exhaustive;
    rec.elapsed_ms = r.elapsed_ms;
  } else {
    ConstantReport r = which == "s"        ? s_constant(g, cfg)
                       : which == "E"      ? e_constant(g, cfg)
                                           : s_prime_lower_bound(g, cfg);
    rec.result = {{"value", r.value},
                  {"witness", r.detail.witness.str()},
                  {"length", r.detail.witness_length},
                  {"L", r.detail.forbidden_length}};
    rec.exhaustive = r.exhaustive;
    rec.elapsed_ms = r.detail.elapsed_ms;
  }

  if (!o.no_cache) cache.append(rec);  // non-exhaustive records are dropped inside
  if (o.json) {
    std::cout << stdout_record(rec).dump() << "\n";
  } else {
    std::cout << which << "(" << g.descriptor() << ") = " << rec.result.at("value")
              << (rec.exhaustive ? "  [exhaustive" : "  [lower bound, search cut off")
              << ", witness: " << rec.result.value("witness", std::string()) << ", "
              << rec.elapsed_ms << " ms]\n";
  }
  return rec.exhaustive ? 0 : 3;
}

int run_enumerate(const CommonOpts& o, int length, int forbidden) {
  Group g = Group::from_descriptor(o.group);
  SearchConfig cfg = to_config(o);
  std::string op = "enumerate";
  Json params{{"length", length}, {"forbidden_length", forbidden}};

  ResultCache cache = open_cache(o);
  if (!o.no_cache) {
    if (auto hit = cache.lookup(g.descriptor(), op, params)) {
      if (o.json) {
        std::cout << stdout_record(*hit).dump() << "\n";
      } else {
        for (const auto& w : hit->result.at("witnesses")) {
          std::cout << w.get<std::string>() << "\n";
        }
      }
      return 0;
    }
  }

  auto res = enumerate_witnesses(g, length, forbidden, cfg);
  ResultRecord rec;
  rec.group = g.descriptor();
  rec.op = op;
  rec.params = params;
  rec.exhaustive = res.exhaustive;
  rec.elapsed_ms = res.elapsed_ms;
  rec.timestamp = utc_timestamp();
  Json arr = Json::array();
  for (const Sequence& s : res.witnesses) arr.push_back(s.str());
  rec.result = {{"witnesses", arr}, {"count", res.witnesses.size()}};

  if (!o.no_cache) cache.append(rec);
  if (o.json) {
    std::cout << stdout_record(rec).dump() << "\n";
  } else {
    for (const Sequence& s : res.witnesses) std::cout << s.str() << "\n";
    if (!res.exhaustive) std::cout << "# search cut off; list may be incomplete\n";
  }
  return res.exhaustive ? 0 : 3;
}

int run_classify(const CommonOpts& o, const std::string& mode_str, const std::string& seq_text) {
  Group g = Group::from_descriptor(o.group);
  Sequence s = Sequence::parse(g, seq_text);
  ExtremalMode mode = mode_str == "s" ? ExtremalMode::SExtremal : ExtremalMode::EExtremal;
  auto form = classify(g, s, mode);
  if (o.json) {
    Json j{{"group", g.descriptor()}, {"seq", s.str()}, {"mode", mode_str}};
    j["form"] = form ? extremal_form_json(g, *form) : Json(nullptr);
    std::cout << j.dump() << "\n";
  } else if (form) {
    std::cout << form_tag_name(form->tag);
    if (form->uses_presentation()) {
      std::cout << "  alpha=" << g.name(form->gen_a) << " tau=" << g.name(form->gen_b);
    } else {
      std::cout << "  g=" << g.name(form->gen_a) << " h=" << g.name(form->gen_b);
    }
    std::cout << "  shape=" << form->shape << "  params=(";
    for (size_t i = 0; i < form->params.size(); ++i)
      std::cout << (i ? "," : "") << form->params[i];
    std::cout << ")";
    if (form->tail >= 0) std::cout << "  tail=" << form->tail;
    std::cout << "\n";
  } else {
    std::cout << "none\n";
  }
  return 0;
}

int run_verify(const CommonOpts& o, const std::string& check_filter, bool stretch) {
  SearchConfig cfg = to_config(o);
  std::vector<SuiteEntry> selected;
  for (SuiteEntry& entry : verification_suite(stretch)) {
    if (!check_filter.empty() && entry.name != check_filter) continue;
    if (!o.group.empty() && entry.group != o.group) continue;
    selected.push_back(std::move(entry));
  }

  // checks are independent tasks; run them concurrently, report in order
  std::vector<CheckResult> results(selected.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= selected.size()) break;
      results[i] = selected[i].run(cfg);
    }
  };
  unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                     static_cast<unsigned>(selected.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  bool any_fail = false, any_inconclusive = false;
  for (const CheckResult& r : results) {
    if (o.json) {
      std::cout << check_result_json(r).dump() << "\n";
    } else {
      std::cout << check_status_name(r.status) << "  " << r.name << "  " << r.group;
      if (!r.params.empty()) std::cout << "  " << r.params;
      if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
      if (r.counterexample) std::cout << "  counterexample: " << *r.counterexample;
      std::cout << "  " << r.elapsed_ms << " ms\n";
    }
    any_fail |= r.status == CheckStatus::Fail;
    any_inconclusive |= r.status == CheckStatus::Inconclusive;
  }
  return any_fail ? 1 : any_inconclusive ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-sum invariants of cyclic, dihedral and dicyclic groups"};
  app.require_subcommand(1);

  CommonOpts opts;

  auto* group_cmd = app.add_subcommand("group", "group queries");
  auto* info = group_cmd->add_subcommand("info", "table, orders, subgroups");
  info->add_option("--group", opts.group, "group descriptor kind:n")->required();
  info->add_flag("--json", opts.json, "JSON output");

  auto* seq_cmd = app.add_subcommand("seq", "sequence queries");
  auto* products = seq_cmd->add_subcommand("products", "product sets of a sequence");
  std::string seq_text;
  int prod_length = -1;
  bool prod_all = false;
  products->add_option("--group", opts.group)->required();
  products->add_option("--seq", seq_text, "sequence literal, e.g. \"a0^3 a1t\"")->required();
  products->add_option("--length", prod_length, "n-products for this subsequence length");
  products->add_flag("--all", prod_all, "union over all non-empty subsequence lengths");
  products->add_flag("--json", opts.json);

  auto* invariant = app.add_subcommand("invariant", "compute d, D, s, E or sprime");
  std::string which;
  invariant->add_option("--group", opts.group)->required();
  invariant->add_option("--invariant", which)
      ->required()
      ->check(CLI::IsMember({"d", "D", "s", "E", "sprime"}));
  invariant->add_flag("--json", opts.json);
  add_search_flags(invariant, opts);

  auto* enumerate = app.add_subcommand("enumerate", "all witnesses of a given length");
  int enum_length = 0, enum_forbidden = 0;
  enumerate->add_option("--group", opts.group)->required();
  enumerate->add_option("--length", enum_length, "witness length")->required();
  enumerate->add_option("--forbidden-length", enum_forbidden, "forbidden product-one length")
      ->required();
  enumerate->add_flag("--json", opts.json);
  add_search_flags(enumerate, opts);

  auto* classify_cmd = app.add_subcommand("classify", "match a sequence against the extremal families");
  std::string mode_str;
  classify_cmd->add_option("--group", opts.group)->required();
  classify_cmd->add_option("--mode", mode_str)->required()->check(CLI::IsMember({"s", "E"}));
  classify_cmd->add_option("--seq", seq_text)->required();
  classify_cmd->add_flag("--json", opts.json);

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::string check_filter;
  bool stretch = false;
  verify->add_option("--group", opts.group, "only checks for this group");
  verify->add_option("--check", check_filter, "only checks with this name");
  verify->add_flag("--stretch", stretch, "include the long-running checks");
  verify->add_flag("--json", opts.json);
  add_search_flags(verify, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (info->parsed()) return run_group_info(opts);
    if (products->parsed()) return run_seq_products(opts, seq_text, prod_length, prod_all);
    if (invariant->parsed()) return run_invariant(opts, which);
    if (enumerate->parsed()) return run_enumerate(opts, enum_length, enum_forbidden);
    if (classify_cmd->parsed()) return run_classify(opts, mode_str, seq_text);
    if (verify->parsed()) return run_verify(opts, check_filter, stretch);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

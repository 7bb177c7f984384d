//  Copyright 2026 The latfix Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "latfix/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "latfix/json_io.hpp"

namespace latfix::cli {

namespace {

using io::json;

struct Invocation {
  Config cfg;
  std::string in_path;   // empty = stdin
  std::string out_path;  // empty = provided stream
  std::istream* in = nullptr;
};

json read_input(const Invocation& inv) {
  if (!inv.in_path.empty()) {
    std::ifstream f(inv.in_path);
    if (!f) fail(Err::Parse, "cannot open input file: " + inv.in_path);
    std::stringstream ss;
    ss << f.rdbuf();
    return io::parse(ss.str());
  }
  std::stringstream ss;
  ss << inv.in->rdbuf();
  return io::parse(ss.str());
}

const json& member(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    fail(Err::Parse, std::string("missing field '") + name + "'");
  return j.at(name);
}

// bundle form {"lattice":..., "<name>":[table]}
LatMap map_member(const json& j, const char* name, const LatticePtr& lat) {
  const json& t = member(j, name);
  if (!t.is_array())
    fail(Err::Parse, std::string("field '") + name + "' must be a table array");
  std::vector<ElemId> tab;
  for (const auto& v : t) tab.push_back(v.get<int>());
  return LatMap(lat, tab);
}

json witness_json(const std::vector<long long>& ids) {
  return json(ids);
}

struct Outcome {
  json report;
  int exit_code = 0;
};

Outcome cmd_lat(const std::string& verb, const json& in, const Config& cfg) {
  LatticePtr lat = io::lattice_from_json(in, cfg);
  json rep;
  if (verb == "check") {
    rep["schema"] = "latfix/report/" + cfg.format_version;
    rep["ok"] = true;
    rep["n"] = lat->size();
    rep["bottom"] = lat->bottom();
    rep["top"] = lat->top();
    return {rep, 0};
  }
  rep["schema"] = "latfix/report/" + cfg.format_version;
  rep["n"] = lat->size();
  rep["flags"] = io::flags_to_json(lat->flags());
  return {rep, 0};
}

Outcome cmd_map_analyze(const json& in, const Config& cfg) {
  LatMap m = io::map_from_json(in, cfg);
  json rep;
  rep["schema"] = "latfix/report/" + cfg.format_version;
  bool graph = is_graph(m);
  rep["graph"] = graph;
  rep["cograph"] = is_cograph(m);
  rep["monotone"] = is_monotone(m);
  rep["fixed_points"] = io::element_set_to_json(fixed_points(m));
  rep["par"] = io::element_set_to_json(par_set(m));
  rep["pyr"] = io::element_set_to_json(pyr_set(m));
  if (auto e = converges(m)) rep["converges_to"] = *e;
  if (auto e = strongly_converges(m)) rep["strongly_converges_to"] = *e;
  if (auto k = nilpotency_index(m, Side::Meet)) rep["meet_nilpotent_K"] = *k;
  if (auto k = nilpotency_index(m, Side::Join)) rep["join_nilpotent_K"] = *k;
  rep["asymptotically_meet_nilpotent"] =
      is_asymptotically_nilpotent(m, Side::Meet);
  rep["asymptotically_join_nilpotent"] =
      is_asymptotically_nilpotent(m, Side::Join);
  if (graph) rep["fixed_point_free"] = is_fixed_point_free(m);
  return {rep, 0};
}

Outcome cmd_map_transform(const std::string& verb, const std::string& closure_type,
                          const json& in, const Config& cfg) {
  LatMap m = io::map_from_json(in, cfg);
  if (verb == "residual") return {io::map_to_json(residual(m), cfg), 0};
  if (verb == "transpose") return {io::map_to_json(transpose(m), cfg), 0};
  ClosureKind kind;
  if (closure_type == "reflexive")
    kind = ClosureKind::Reflexive;
  else if (closure_type == "transitive")
    kind = ClosureKind::Transitive;
  else if (closure_type == "reflexive_transitive")
    kind = ClosureKind::ReflexiveTransitive;
  else
    fail(Err::Parse, "closure --type must be reflexive, transitive or "
                     "reflexive_transitive");
  return {io::map_to_json(closure(m, kind), cfg), 0};
}

Outcome cmd_dep_check(const std::string& kind_name, long long sampled,
                      const json& in, const Config& cfg) {
  LatticePtr lat = io::lattice_from_json(member(in, "lattice"), cfg);
  LatMap phi = map_member(in, "phi", lat);
  LatMap rho = map_member(in, "rho", lat);
  DepKind kind = io::dep_kind_from_string(kind_name);
  json rep;
  rep["schema"] = "latfix/report/" + cfg.format_version;
  rep["kind"] = kind_name;
  if (sampled > 0) {
    rep["mode"] = "sampled";
    rep["samples"] = sampled;
    bool ok = depends_sampled(kind, phi, rho, sampled, cfg.rng_seed);
    rep["depends"] = ok;
    return {rep, ok ? 0 : 1};
  }
  rep["mode"] = "exhaustive";
  auto w = violation_witness(kind, phi, rho, cfg);
  rep["depends"] = !w.has_value();
  if (w) rep["witness"] = {{"x", (*w)[0]}, {"y", (*w)[1]}, {"s", (*w)[2]}};
  return {rep, w ? 1 : 0};
}

Outcome cmd_robert(const std::string& verb, const json& in, const Config& cfg) {
  LatticePtr lat = io::lattice_from_json(member(in, "lattice"), cfg);
  LatMap phi = map_member(in, "phi", lat);
  Certificate cert = [&] {
    if (verb == "certify") {
      DepKind kind =
          io::dep_kind_from_string(member(in, "kind").get<std::string>());
      LatMap rho = map_member(in, "rho", lat);
      ESeq a = io::eseq_from_json(member(in, "witness"), lat);
      return robert_certify(phi, kind, rho, a, cfg);
    }
    if (verb == "cba") {
      LatMap f = map_member(in, "f", lat);
      return robert_cba(phi, f, cfg);
    }
    std::vector<ElemId> steps;
    for (const auto& v : member(in, "steps")) steps.push_back(v.get<int>());
    return sequence_certificate(phi, steps, cfg);
  }();
  return {io::certificate_to_json(cert, cfg), 0};
}

Outcome cmd_feedback(const std::string& verb, const json& in, const Config& cfg) {
  FeedbackReport rep = [&] {
    if (verb == "network") {
      Network net = io::network_from_json(member(in, "network"), cfg);
      std::vector<int> fvs;
      for (const auto& v : member(in, "fvs")) fvs.push_back(v.get<int>());
      return feedback_original(net, fvs, cfg);
    }
    LatticePtr lat = io::lattice_from_json(member(in, "lattice"), cfg);
    LatMap phi = map_member(in, "phi", lat);
    if (verb == "cba") {
      LatMap f = map_member(in, "f", lat);
      return feedback_bound_cba(phi, f, member(in, "t").get<int>(), cfg);
    }
    DepKind kind =
        io::dep_kind_from_string(member(in, "kind").get<std::string>());
    LatMap rho = map_member(in, "rho", lat);
    ESeq a = io::eseq_from_json(member(in, "witness"), lat);
    return feedback_bound(phi, kind, rho, a, cfg);
  }();
  json j;
  j["schema"] = "latfix/report/" + cfg.format_version;
  j["bound"] = rep.bound;
  j["fix_count"] = rep.fix_count;
  j["seed_element"] = rep.seed;
  return {j, 0};
}

Outcome cmd_net(const std::string& verb, const json& in, const Config& cfg) {
  if (verb == "converse") {
    std::vector<int> table;
    for (const auto& v : member(in, "table")) table.push_back(v.get<int>());
    ConverseResult r = converse_construction(table, cfg);
    json j;
    j["schema"] = "latfix/report/" + cfg.format_version;
    j["order"] = r.order.ascending;
    j["K"] = r.K;
    j["e"] = r.e;
    j["phi_on_chain"] = io::map_to_json(r.phi_on_chain, cfg);
    j["f"] = io::map_to_json(r.f, cfg);
    return {j, 0};
  }
  if (verb == "depends") {
    Network net = io::network_from_json(member(in, "network"), cfg);
    Digraph d = io::digraph_from_json(member(in, "digraph"));
    bool ok = depends_on_digraph(net, d);
    json j;
    j["schema"] = "latfix/report/" + cfg.format_version;
    j["depends"] = ok;
    if (!ok) j["interaction_graph"] = io::digraph_to_json(interaction_graph(net), cfg);
    return {j, ok ? 0 : 1};
  }
  Network net = io::network_from_json(in, cfg);
  if (verb == "ig")
    return {io::digraph_to_json(interaction_graph(net), cfg), 0};
  // verb == "robert"
  Certificate cert = robert_original(net, cfg);
  return {io::certificate_to_json(cert, cfg), 0};
}

Outcome cmd_gallery(const std::string& name, int param, const Config& cfg) {
  GalleryObject obj = gallery(name, param, cfg);
  if (std::holds_alternative<LatticePtr>(obj))
    return {io::lattice_to_json(*std::get<LatticePtr>(obj), cfg), 0};
  if (std::holds_alternative<Digraph>(obj))
    return {io::digraph_to_json(std::get<Digraph>(obj), cfg), 0};
  return {io::network_to_json(std::get<Network>(obj), cfg), 0};
}

Outcome cmd_precarious(const json& in, const Config& cfg) {
  LatMap f = io::map_from_json(in, cfg);
  PrecariousReport rep = precarious_analysis(f, cfg);
  json j;
  j["schema"] = "latfix/report/" + cfg.format_version;
  j["fixed_point_free_transpose"] = rep.fpf;
  if (rep.hypodox) {
    j["hypodox"] = io::map_to_json(*rep.hypodox, cfg);
    j["hypodox_fixed_points"] =
        io::element_set_to_json(fixed_points(*rep.hypodox));
  }
  return {j, 0};
}

// command-line flags take precedence over the config file
struct FlagsGiven {
  bool seed = false, lattice_cap = false, triple_cap = false;
};

void apply_env_config(Config& cfg, const FlagsGiven& given) {
  const char* path = std::getenv("LATFIX_CONFIG");
  if (!path || !*path) return;
  std::ifstream f(path);
  if (!f) fail(Err::Parse, std::string("cannot open config file: ") + path);
  std::stringstream ss;
  ss << f.rdbuf();
  json j = io::parse(ss.str());
  if (!given.lattice_cap && j.contains("max_lattice_size"))
    cfg.max_lattice_size = j["max_lattice_size"].get<long long>();
  if (!given.triple_cap && j.contains("max_triple_checks"))
    cfg.max_triple_checks = j["max_triple_checks"].get<long long>();
  if (!given.seed && j.contains("rng_seed"))
    cfg.rng_seed = j["rng_seed"].get<std::uint64_t>();
  if (j.contains("output_path"))
    cfg.output_path = j["output_path"].get<std::string>();
}

void emit(const json& report, const Invocation& inv, std::ostream& out) {
  std::string path = !inv.out_path.empty() ? inv.out_path : inv.cfg.output_path;
  if (!path.empty()) {
    std::ofstream f(path);
    if (!f) fail(Err::Parse, "cannot open output file: " + path);
    f << report.dump(2) << "\n";
  } else {
    out << report.dump(2) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Invocation inv;
  inv.in = &in;

  CLI::App app{"finite-lattice fixed-point certification toolkit"};
  app.require_subcommand(1);
  auto* seed_opt =
      app.add_option("--seed", inv.cfg.rng_seed, "rng seed for sampled paths");
  auto* lat_cap_opt =
      app.add_option("--max-lattice-size", inv.cfg.max_lattice_size,
                     "largest lattice the builders accept");
  auto* triple_cap_opt =
      app.add_option("--max-triple-checks", inv.cfg.max_triple_checks,
                     "budget for exhaustive dependency sweeps");
  app.add_option("--in", inv.in_path, "input JSON file (default: stdin)");
  app.add_option("--out", inv.out_path, "output file (default: stdout)");

  std::string closure_type = "reflexive_transitive";
  std::string dep_kind = "pre-meet";
  long long sampled = 0;
  std::string gallery_name;
  int gallery_param = -1;

  auto* lat = app.add_subcommand("lat", "lattice construction and classification");
  lat->require_subcommand(1);
  lat->add_subcommand("check", "validate a lattice descriptor");
  lat->add_subcommand("classify", "report classification flags");

  auto* map = app.add_subcommand("map", "self-map analysis and transforms");
  map->require_subcommand(1);
  map->add_subcommand("analyze", "graph/monotone/orbit/nilpotence report");
  map->add_subcommand("residual", "upper adjoint of a map");
  map->add_subcommand("transpose", "transpose of a graph (Boolean lattices)");
  auto* clo = map->add_subcommand("closure", "reflexive/transitive closure");
  clo->add_option("--type", closure_type,
                  "reflexive | transitive | reflexive_transitive");

  auto* dep = app.add_subcommand("dep", "dependency relations");
  auto* dep_check = dep->add_subcommand("check", "decide a dependency relation");
  dep_check->add_option("--kind", dep_kind,
                        "pre-meet | pre-join | post-meet | post-join");
  dep_check->add_option("--sampled", sampled,
                        "spot-check this many random triples instead of the "
                        "exhaustive sweep (never used by certificates)");

  auto* rob = app.add_subcommand("robert", "convergence certificates");
  rob->require_subcommand(1);
  rob->add_subcommand("certify", "certificate from a dependency + witness");
  rob->add_subcommand("cba", "Boolean-algebra certificate");
  rob->add_subcommand("sequence", "stepwise nilpotence certificate");

  auto* fb = app.add_subcommand("feedback", "fixed-point count bounds");
  fb->require_subcommand(1);
  fb->add_subcommand("lattice", "bound from a metric witness");
  fb->add_subcommand("cba", "bound from a fixed point-free set");
  fb->add_subcommand("network", "bound from a feedback vertex set");

  auto* net = app.add_subcommand("net", "automata networks");
  net->require_subcommand(1);
  net->add_subcommand("ig", "interaction graph");
  net->add_subcommand("depends", "dependency on a digraph");
  net->add_subcommand("robert", "acyclic-interaction certificate");
  net->add_subcommand("converse", "chain construction for a nilpotent map");

  auto* gal = app.add_subcommand("gallery", "named example instances");
  gal->add_option("name", gallery_name, "instance name")->required();
  gal->add_option("--n", gallery_param, "size parameter");
  gal->add_option("--q", gallery_param, "alphabet parameter");

  app.add_subcommand("precarious", "hypodox analysis of a graph");

  std::vector<std::string> argv_copy = args;
  try {
    std::reverse(argv_copy.begin(), argv_copy.end());
    app.parse(argv_copy);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "argument error: " << e.what() << "\n";
    return 2;
  }

  auto started = std::chrono::steady_clock::now();
  int code = 0;
  try {
    FlagsGiven given;
    given.seed = seed_opt->count() > 0;
    given.lattice_cap = lat_cap_opt->count() > 0;
    given.triple_cap = triple_cap_opt->count() > 0;
    apply_env_config(inv.cfg, given);
    if (!inv.cfg.valid()) fail(Err::Parse, "caps must be positive");

    Outcome o;
    if (app.got_subcommand("lat")) {
      o = cmd_lat(lat->get_subcommands().at(0)->get_name(), read_input(inv),
                  inv.cfg);
    } else if (app.got_subcommand("map")) {
      std::string verb = map->get_subcommands().at(0)->get_name();
      o = verb == "analyze"
              ? cmd_map_analyze(read_input(inv), inv.cfg)
              : cmd_map_transform(verb, closure_type, read_input(inv), inv.cfg);
    } else if (app.got_subcommand("dep")) {
      o = cmd_dep_check(dep_kind, sampled, read_input(inv), inv.cfg);
    } else if (app.got_subcommand("robert")) {
      o = cmd_robert(rob->get_subcommands().at(0)->get_name(), read_input(inv),
                     inv.cfg);
    } else if (app.got_subcommand("feedback")) {
      o = cmd_feedback(fb->get_subcommands().at(0)->get_name(), read_input(inv),
                       inv.cfg);
    } else if (app.got_subcommand("net")) {
      o = cmd_net(net->get_subcommands().at(0)->get_name(), read_input(inv),
                  inv.cfg);
    } else if (app.got_subcommand("gallery")) {
      o = cmd_gallery(gallery_name, gallery_param, inv.cfg);
    } else {
      o = cmd_precarious(read_input(inv), inv.cfg);
    }
    emit(o.report, inv, out);
    code = o.exit_code;
  } catch (const Error& e) {
    json rep;
    rep["schema"] = "latfix/error/" + inv.cfg.format_version;
    rep["error"] = err_name(e.code());
    rep["message"] = e.what();
    if (!e.ids().empty()) rep["witness"] = witness_json(e.ids());
    emit(rep, inv, out);
    code = err_exit_class(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    code = 4;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  err << "elapsed_ms=" << elapsed << "\n";
  return code;
}

}  // namespace latfix::cli

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

#include <sstream>

#include "doctest.h"
#include "latfix/cli.hpp"
#include "latfix/gen.hpp"
#include "latfix/json_io.hpp"

using namespace latfix;
using io::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  json doc;
};

CliResult invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  json doc = out.str().empty() ? json() : json::parse(out.str());
  return {code, out.str(), doc};
}

}  // namespace

TEST_CASE("gallery piped into net ig yields the two-cycle") {
  CliResult net = invoke({"gallery", "liar"});
  REQUIRE(net.code == 0);
  CliResult ig = invoke({"net", "ig"}, net.out);
  REQUIRE(ig.code == 0);
  CHECK(ig.doc["n"] == 2);
  CHECK(ig.doc["arcs"] == json::parse("[[0,1],[1,0]]"));
}

TEST_CASE("reports are deterministic") {
  CliResult a = invoke({"--seed", "9", "gallery", "plus_network", "--q", "3"});
  CliResult b = invoke({"--seed", "9", "gallery", "plus_network", "--q", "3"});
  CHECK(a.out == b.out);
  std::string map_doc =
      R"({"lattice":{"kind":"powerset","ground":2},"table":[0,2,1,3]})";
  CHECK(invoke({"map", "analyze"}, map_doc).out ==
        invoke({"map", "analyze"}, map_doc).out);
}

TEST_CASE("emitted descriptors re-parse to identical values") {
  for (const char* name : {"m3", "n5"}) {
    CliResult first = invoke({"gallery", name});
    CliResult again = invoke({"lat", "classify"}, first.out);
    CHECK(again.code == 0);
    // re-serialize through the library and compare
    LatticePtr lat = io::lattice_from_json(first.doc);
    CHECK(io::lattice_to_json(*lat) == first.doc);
  }
  CliResult net = invoke({"gallery", "hypodox"});
  Network parsed = io::network_from_json(net.doc);
  CHECK(io::network_to_json(parsed) == net.doc);
}

TEST_CASE("exit codes") {
  // 2: malformed input, naming the missing field
  CliResult bad = invoke({"lat", "check"}, "{\"kind\":\"explicit\"}");
  CHECK(bad.code == 2);
  CHECK(bad.doc["error"] == "Parse");
  CHECK(std::string(bad.doc["message"]).find("'n'") != std::string::npos);

  // 2: a cover cycle is a bad poset
  CliResult cyc = invoke({"lat", "check"},
                         R"({"kind":"explicit","n":3,"covers":[[0,1],[1,0]]})");
  CHECK(cyc.code == 2);
  CHECK(cyc.doc["error"] == "NotAPoset");

  // 1: dependency fails, witness triple in the report
  std::string dep_doc = R"({
    "lattice": {"kind":"powerset","ground":2},
    "phi": [2, 0, 3, 1],
    "rho": [0, 0, 0, 0]})";
  CliResult dep = invoke({"dep", "check", "--kind", "pre-meet"}, dep_doc);
  CHECK(dep.code == 1);
  CHECK(dep.doc["depends"] == false);
  CHECK(dep.doc["witness"]["x"] == 0);
  CHECK(dep.doc["witness"]["y"] == 1);
  CHECK(dep.doc["witness"]["s"] == 2);

  // 0: the same map does depend on the two-cycle it reads from
  std::string dep_ok = R"({
    "lattice": {"kind":"powerset","ground":2},
    "phi": [2, 0, 3, 1],
    "rho": [0, 2, 1, 3]})";
  CHECK(invoke({"dep", "check", "--kind", "pre-meet"}, dep_ok).code == 0);

  // 3: sweep budget exceeded
  CliResult capped =
      invoke({"--max-triple-checks", "3", "dep", "check"}, dep_ok);
  CHECK(capped.code == 3);
  CHECK(capped.doc["error"] == "SweepCapExceeded");

  // 3: lattice size cap
  CliResult big = invoke({"--max-lattice-size", "8", "lat", "check"},
                         R"({"kind":"powerset","ground":5})");
  CHECK(big.code == 3);
}

TEST_CASE("robert subcommands over JSON") {
  // build the increment-network instance through the library, then drive
  // the CLI with serialized documents
  Network plus4 = std::get<Network>(gallery("plus_network", 4));
  LatMap phi = plus4.as_latmap();
  LatMap f = residuated_map(phi);
  ESeq wit = canonical_witness(DepKind::PreMeet, f);

  json bundle;
  bundle["lattice"] = io::lattice_to_json(phi.lattice());
  bundle["phi"] = std::vector<int>(phi.table().begin(), phi.table().end());
  bundle["kind"] = "pre-meet";
  bundle["rho"] = std::vector<int>(f.table().begin(), f.table().end());
  bundle["witness"] = {{"prefix", wit.prefix}, {"stable_from", wit.stable_from}};

  CliResult cert = invoke({"robert", "certify"}, bundle.dump());
  REQUIRE(cert.code == 0);
  CHECK(cert.doc["level"] == "nilpotent");
  CHECK(cert.doc["K"] == 3);
  CHECK(cert.doc["e"] == 15);  // (3,3) in mixed radix
  CHECK(cert.doc["verified"]["exhaustive"] == true);

  // the Boolean form needs a Boolean lattice: shift-down map over the
  // power set, depending on its transpose
  LatMap shift = digraph_to_graph(std::get<Digraph>(gallery("backwards_ray", 3)),
                                  Lattice::powerset(4));
  LatMap ray_map = transpose(shift);
  json cba;
  cba["lattice"] = io::lattice_to_json(shift.lattice());
  cba["phi"] = std::vector<int>(shift.table().begin(), shift.table().end());
  cba["f"] = std::vector<int>(ray_map.table().begin(), ray_map.table().end());
  CliResult c2 = invoke({"robert", "cba"}, cba.dump());
  REQUIRE(c2.code == 0);
  CHECK(c2.doc["e"] == 0);
  CHECK(c2.doc["K"] == 4);

  // the liar cannot be certified: the transpose keeps its two-cycle
  LatMap liar = std::get<Network>(gallery("liar")).as_powerset_map();
  LatMap tc = digraph_to_graph(Digraph(2, {{0, 1}, {1, 0}}),
                               liar.lattice_ptr());
  json bad;
  bad["lattice"] = io::lattice_to_json(liar.lattice());
  bad["phi"] = std::vector<int>(liar.table().begin(), liar.table().end());
  bad["f"] = std::vector<int>(tc.table().begin(), tc.table().end());
  CliResult refused = invoke({"robert", "cba"}, bad.dump());
  CHECK(refused.code == 1);
  CHECK(refused.doc["error"] == "TransposeNotNilpotent");
  CHECK(refused.doc.contains("witness"));

  // stepwise certificate
  json seq;
  seq["lattice"] = bundle["lattice"];
  seq["phi"] = bundle["phi"];
  seq["steps"] = {0, 5, 10, 15};  // the diagonal (i,i) staircase
  CliResult c3 = invoke({"robert", "sequence"}, seq.dump());
  REQUIRE(c3.code == 0);
  CHECK(c3.doc["K"] == 3);
  CHECK(c3.doc["e"] == 15);
}

TEST_CASE("feedback subcommands over JSON") {
  CliResult hyp = invoke({"gallery", "hypodox"});
  json fb;
  fb["network"] = hyp.doc;
  fb["fvs"] = {0};
  CliResult rep = invoke({"feedback", "network"}, fb.dump());
  REQUIRE(rep.code == 0);
  CHECK(rep.doc["bound"] == 2);
  CHECK(rep.doc["fix_count"] == 2);

  fb["fvs"] = json::array();
  CliResult notfvs = invoke({"feedback", "network"}, fb.dump());
  CHECK(notfvs.code == 1);
  CHECK(notfvs.doc["error"] == "NotAnFVS");

  // Boolean-lattice form on the hypodox
  LatMap hypodox = std::get<Network>(gallery("hypodox")).as_powerset_map();
  LatMap f = digraph_to_graph(Digraph(2, {{0, 1}, {1, 0}}),
                              hypodox.lattice_ptr());
  json cba;
  cba["lattice"] = io::lattice_to_json(hypodox.lattice());
  cba["phi"] = std::vector<int>(hypodox.table().begin(), hypodox.table().end());
  cba["f"] = std::vector<int>(f.table().begin(), f.table().end());
  cba["t"] = 2;
  CliResult brep = invoke({"feedback", "cba"}, cba.dump());
  REQUIRE(brep.code == 0);
  CHECK(brep.doc["bound"] == 2);
  CHECK(brep.doc["fix_count"] == 2);

  // lattice form with an explicit witness sequence
  json lf;
  lf["lattice"] = cba["lattice"];
  lf["phi"] = cba["phi"];
  lf["kind"] = "pre-meet";
  lf["rho"] = cba["f"];
  lf["witness"] = {{"prefix", {1, 2, 0}}, {"stable_from", 2}};
  CliResult lrep = invoke({"feedback", "lattice"}, lf.dump());
  REQUIRE(lrep.code == 0);
  CHECK(lrep.doc["bound"] == 2);
  CHECK(lrep.doc["fix_count"] == 2);
}

TEST_CASE("map transforms and net converse over JSON") {
  std::string two_cycle_map =
      R"({"lattice":{"kind":"powerset","ground":2},"table":[0,2,1,3]})";
  CliResult t = invoke({"map", "transpose"}, two_cycle_map);
  REQUIRE(t.code == 0);
  CHECK(t.doc["table"] == json::parse("[0,2,1,3]"));  // symmetric

  CliResult r = invoke({"map", "residual"}, two_cycle_map);
  CHECK(r.doc["table"] == json::parse("[0,2,1,3]"));

  // path digraph 0 -> 1 -> 2: transitive closure adds the arc 0 -> 2
  LatMap path = digraph_to_graph(Digraph(3, {{0, 1}, {1, 2}}),
                                 Lattice::powerset(3));
  CliResult c = invoke({"map", "closure", "--type", "transitive"},
                       io::map_to_json(path).dump());
  REQUIRE(c.code == 0);
  LatMap closed = io::map_from_json(c.doc);
  CHECK(graph_to_digraph(closed).arcs ==
        std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}});

  CliResult conv =
      invoke({"net", "converse"}, R"({"table":[1, 2, 2, 1]})");
  REQUIRE(conv.code == 0);
  CHECK(conv.doc["K"] == 2);
  CHECK(conv.doc["e"] == 2);

  CliResult notnil = invoke({"net", "converse"}, R"({"table":[1, 0]})");
  CHECK(notnil.code == 1);
  CHECK(notnil.doc["error"] == "NotNilpotent");
}

TEST_CASE("precarious over JSON") {
  std::string two_cycle_map =
      R"({"lattice":{"kind":"powerset","ground":2},"table":[0,2,1,3]})";
  CliResult rep = invoke({"precarious"}, two_cycle_map);
  REQUIRE(rep.code == 0);
  CHECK(rep.doc["fixed_point_free_transpose"] == false);
  CHECK(rep.doc["hypodox_fixed_points"] == json::parse("[0,3]"));

  std::string acyclic_map =
      R"({"lattice":{"kind":"powerset","ground":2},"table":[0,0,1,1]})";
  CliResult ok = invoke({"precarious"}, acyclic_map);
  CHECK(ok.doc["fixed_point_free_transpose"] == true);
  CHECK_FALSE(ok.doc.contains("hypodox"));
}

TEST_CASE("net depends over JSON") {
  CliResult net = invoke({"gallery", "liar"});
  json bundle;
  bundle["network"] = net.doc;
  bundle["digraph"] = {{"n", 2}, {"arcs", json::parse("[[0,1],[1,0]]")}};
  CHECK(invoke({"net", "depends"}, bundle.dump()).code == 0);
  bundle["digraph"] = {{"n", 2}, {"arcs", json::array()}};
  CliResult no = invoke({"net", "depends"}, bundle.dump());
  CHECK(no.code == 1);
  CHECK(no.doc["depends"] == false);
}

TEST_CASE("dyadic JSON form") {
  Dyadic d = Dyadic::pow2(-5) + Dyadic::pow2(-9);
  json j = io::dyadic_to_json(d);
  CHECK(j["numerator_hex"] == "11");
  CHECK(j["pow2"] == -9);
  CHECK(double(j["approx"]) == doctest::Approx(0.033203125));
}

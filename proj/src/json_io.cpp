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

#include "latfix/json_io.hpp"

namespace latfix::io {

namespace {

std::string schema(const char* type, const Config& cfg) {
  return std::string("latfix/") + type + "/" + cfg.format_version;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    fail(Err::Parse, std::string("missing field '") + name + "'");
  return j.at(name);
}

long long int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer())
    fail(Err::Parse, std::string("field '") + name + "' must be an integer");
  return v.get<long long>();
}

std::vector<ElemId> id_array(const json& v, const char* name) {
  if (!v.is_array())
    fail(Err::Parse, std::string("field '") + name + "' must be an array");
  std::vector<ElemId> out;
  for (const auto& e : v) {
    if (!e.is_number_integer())
      fail(Err::Parse, std::string("field '") + name + "' must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Err::Parse, "malformed JSON input");
  return j;
}

LatticePtr lattice_from_json(const json& j, const Config& cfg) {
  const json& kind = field(j, "kind");
  if (!kind.is_string()) fail(Err::Parse, "field 'kind' must be a string");
  std::string k = kind.get<std::string>();
  if (k == "explicit") {
    int n = static_cast<int>(int_field(j, "n"));
    const json& cov = field(j, "covers");
    if (!cov.is_array()) fail(Err::Parse, "field 'covers' must be an array");
    std::vector<std::pair<int, int>> covers;
    for (const auto& p : cov) {
      if (!p.is_array() || p.size() != 2)
        fail(Err::Parse, "field 'covers' must hold [u,v] pairs");
      covers.push_back({p[0].get<int>(), p[1].get<int>()});
    }
    return Lattice::from_covers(n, covers, cfg);
  }
  if (k == "powerset")
    return Lattice::powerset(static_cast<int>(int_field(j, "ground")), cfg);
  if (k == "chain")
    return Lattice::chain(static_cast<int>(int_field(j, "size")), cfg);
  if (k == "product") {
    const json& fs = field(j, "factors");
    if (!fs.is_array() || fs.empty())
      fail(Err::Parse, "field 'factors' must be a nonempty array");
    std::vector<LatticePtr> factors;
    for (const auto& f : fs) factors.push_back(lattice_from_json(f, cfg));
    return Lattice::product(factors, cfg);
  }
  fail(Err::Parse, "unknown lattice kind '" + k + "'");
}

json lattice_to_json(const Lattice& lat, const Config& cfg) {
  json j;
  j["schema"] = schema("lattice", cfg);
  switch (lat.kind()) {
    case Lattice::Kind::PowerSet:
      j["kind"] = "powerset";
      j["ground"] = lat.ground();
      return j;
    case Lattice::Kind::Chain:
      j["kind"] = "chain";
      j["size"] = lat.size();
      return j;
    case Lattice::Kind::Product: {
      j["kind"] = "product";
      json fs = json::array();
      for (const auto& f : lat.factors()) {
        json fj = lattice_to_json(*f, cfg);
        fj.erase("schema");
        fs.push_back(fj);
      }
      j["factors"] = fs;
      return j;
    }
    case Lattice::Kind::Explicit:
      break;
  }
  j["kind"] = "explicit";
  j["n"] = lat.size();
  json covers = json::array();
  for (int u = 0; u < lat.size(); ++u)
    for (int v = 0; v < lat.size(); ++v) {
      if (u == v || !lat.leq(u, v)) continue;
      bool is_cover = true;
      for (int w = 0; w < lat.size() && is_cover; ++w)
        if (w != u && w != v && lat.leq(u, w) && lat.leq(w, v)) is_cover = false;
      if (is_cover) covers.push_back(json::array({u, v}));
    }
  j["covers"] = covers;
  return j;
}

LatMap map_from_json(const json& j, const Config& cfg) {
  LatticePtr lat = lattice_from_json(field(j, "lattice"), cfg);
  return LatMap(lat, id_array(field(j, "table"), "table"));
}

json map_to_json(const LatMap& m, const Config& cfg) {
  json j;
  j["schema"] = schema("map", cfg);
  json lj = lattice_to_json(m.lattice(), cfg);
  lj.erase("schema");
  j["lattice"] = lj;
  j["table"] = std::vector<int>(m.table().begin(), m.table().end());
  return j;
}

ESeq eseq_from_json(const json& j, LatticePtr lat) {
  std::vector<ElemId> prefix = id_array(field(j, "prefix"), "prefix");
  long long stable = int_field(j, "stable_from");
  if (stable + 1 != static_cast<long long>(prefix.size()))
    fail(Err::Parse, "'stable_from' must equal len(prefix) - 1");
  return ESeq(std::move(lat), std::move(prefix));
}

json eseq_to_json(const ESeq& s, const Config& cfg) {
  json j;
  j["schema"] = schema("sequence", cfg);
  j["prefix"] = s.prefix;
  j["stable_from"] = s.stable_from;
  return j;
}

Digraph digraph_from_json(const json& j) {
  int n = static_cast<int>(int_field(j, "n"));
  const json& arcs = field(j, "arcs");
  if (!arcs.is_array()) fail(Err::Parse, "field 'arcs' must be an array");
  std::vector<std::pair<int, int>> list;
  for (const auto& a : arcs) {
    if (!a.is_array() || a.size() != 2)
      fail(Err::Parse, "field 'arcs' must hold [u,v] pairs");
    list.push_back({a[0].get<int>(), a[1].get<int>()});
  }
  return Digraph(n, list);
}

json digraph_to_json(const Digraph& d, const Config& cfg) {
  json j;
  j["schema"] = schema("digraph", cfg);
  j["n"] = d.n;
  json arcs = json::array();
  for (auto [u, v] : d.arcs) arcs.push_back(json::array({u, v}));
  j["arcs"] = arcs;
  return j;
}

Network network_from_json(const json& j, const Config& cfg) {
  std::vector<ElemId> alpha = id_array(field(j, "alphabets"), "alphabets");
  const json& rules = field(j, "rules");
  if (!rules.is_array()) fail(Err::Parse, "field 'rules' must be an array");
  std::vector<std::vector<int>> tables;
  for (const auto& r : rules) tables.push_back(id_array(r, "rules"));
  std::vector<int> alphabets(alpha.begin(), alpha.end());
  return Network(alphabets, tables, cfg);
}

json network_to_json(const Network& n, const Config& cfg) {
  json j;
  j["schema"] = schema("network", cfg);
  std::vector<int> alphabets;
  for (const auto& c : n.coordinates()) alphabets.push_back(c->size());
  j["alphabets"] = alphabets;
  j["rules"] = n.rules();
  return j;
}

json certificate_to_json(const Certificate& c, const Config& cfg) {
  json j;
  j["schema"] = schema("certificate", cfg);
  j["kind"] = dep_kind_name(c.kind);
  j["level"] = cert_level_name(c.level);
  if (c.K) j["K"] = *c.K;
  j["e"] = c.e;
  j["verified"] = {{"starts", c.starts_checked}, {"exhaustive", c.exhaustive}};
  json w = json::object();
  if (c.witness) {
    w["sequence"] = {{"prefix", c.witness->prefix},
                     {"stable_from", c.witness->stable_from}};
  }
  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx",
                static_cast<unsigned long long>(c.dependency_digest));
  w["dependency_digest"] = digest;
  j["witness"] = w;
  return j;
}

json dyadic_to_json(const Dyadic& d) {
  json j;
  j["numerator_hex"] = d.numerator_hex();
  j["pow2"] = d.exponent();
  j["approx"] = d.to_double();
  return j;
}

json element_set_to_json(const ElementSet& s) {
  return json(s.to_vector());
}

json flags_to_json(const LatticeFlags& f) {
  json j;
  j["distributive"] = f.distributive;
  j["complemented"] = f.complemented;
  j["boolean"] = f.boolean_algebra;
  j["chain"] = f.chain;
  j["frame"] = f.frame;
  j["trivial"] = f.trivial;
  return j;
}

DepKind dep_kind_from_string(const std::string& s) {
  if (s == "pre-meet") return DepKind::PreMeet;
  if (s == "pre-join") return DepKind::PreJoin;
  if (s == "post-meet") return DepKind::PostMeet;
  if (s == "post-join") return DepKind::PostJoin;
  fail(Err::Parse, "unknown dependency kind '" + s +
                       "' (expected pre-meet, pre-join, post-meet, post-join)");
}

}  // namespace latfix::io

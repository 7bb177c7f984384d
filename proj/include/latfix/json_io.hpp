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

#ifndef LATFIX_JSON_IO_HPP_
#define LATFIX_JSON_IO_HPP_

#include <string>

#include "json.hpp"
#include "latfix/autonet.hpp"
#include "latfix/robert.hpp"

// JSON descriptors. Lattices: {"kind":"explicit","n":N,"covers":[[u,v],..]} |
// {"kind":"powerset","ground":G} | {"kind":"chain","size":K} |
// {"kind":"product","factors":[..]}. Maps: {"lattice":<desc>,"table":[..]}.
// Sequences: {"prefix":[..],"stable_from":N}. Digraphs:
// {"n":K,"arcs":[[u,v],..]}. Networks: {"alphabets":[..],"rules":[[..]..]}.
// Emitted documents carry a "schema" version tag.

namespace latfix::io {

using json = nlohmann::ordered_json;

json parse(const std::string& text);

LatticePtr lattice_from_json(const json& j, const Config& cfg = {});
json lattice_to_json(const Lattice& lat, const Config& cfg = {});

LatMap map_from_json(const json& j, const Config& cfg = {});
json map_to_json(const LatMap& m, const Config& cfg = {});

ESeq eseq_from_json(const json& j, LatticePtr lat);
json eseq_to_json(const ESeq& s, const Config& cfg = {});

Digraph digraph_from_json(const json& j);
json digraph_to_json(const Digraph& d, const Config& cfg = {});

Network network_from_json(const json& j, const Config& cfg = {});
json network_to_json(const Network& n, const Config& cfg = {});

json certificate_to_json(const Certificate& c, const Config& cfg = {});
json dyadic_to_json(const Dyadic& d);
json element_set_to_json(const ElementSet& s);
json flags_to_json(const LatticeFlags& f);

DepKind dep_kind_from_string(const std::string& s);

}  // namespace latfix::io

#endif  // LATFIX_JSON_IO_HPP_

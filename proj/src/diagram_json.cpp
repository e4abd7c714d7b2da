// Copyright 2026 The zxkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zxkit/diagram_json.hpp"

#include <fstream>
#include <sstream>

#include "zxkit/errors.hpp"

namespace zxkit {

using nlohmann::json;

namespace {

VertexType type_from_string(const std::string& s) {
  if (s == "Z") return VertexType::Z;
  if (s == "X") return VertexType::X;
  if (s == "H") return VertexType::H;
  if (s == "B") return VertexType::Boundary;
  throw FormatError("unknown vertex kind '" + s + "'");
}

}  // namespace

json diagram_to_json(const Diagram& d) {
  json j;
  j["version"] = 1;
  j["scalar"] = {{"re", d.scalar().value.real()}, {"im", d.scalar().value.imag()}};
  json verts = json::array();
  for (const auto& [v, data] : d.vertices()) {
    json jv = {{"id", v}, {"kind", to_string(data.type)}};
    if (is_spider_type(data.type)) {
      if (data.phase.is_exact())
        jv["phase"] = data.phase.to_string();
      else
        jv["phase"] = data.phase.radians();
    }
    verts.push_back(std::move(jv));
  }
  j["vertices"] = std::move(verts);
  json edges = json::array();
  for (const auto& e : d.edges())
    edges.push_back({{"src", e.a}, {"dst", e.b}, {"mult", e.mult}});
  j["edges"] = std::move(edges);
  j["inputs"] = d.inputs();
  j["outputs"] = d.outputs();
  return j;
}

Diagram diagram_from_json(const json& j) {
  try {
    if (!j.is_object()) throw FormatError("diagram document must be an object");
    if (j.at("version").get<int>() != 1)
      throw FormatError("unsupported diagram version");
    Diagram d;
    std::map<VertexId, Vertex> verts;
    for (const auto& jv : j.at("vertices")) {
      auto id = jv.at("id").get<VertexId>();
      Vertex v{type_from_string(jv.at("kind").get<std::string>()), Phase()};
      if (jv.contains("phase")) {
        const auto& jp = jv.at("phase");
        if (jp.is_string())
          v.phase = Phase::parse(jp.get<std::string>());
        else if (jp.is_number())
          v.phase = Phase::numeric(jp.get<double>());
        else
          throw FormatError("phase must be a string or a number");
      }
      if (!verts.emplace(id, v).second)
        throw FormatError("duplicate vertex id " + std::to_string(id));
    }
    for (const auto& [id, v] : verts) {
      d.reserve_ids(id);
      d.add_vertex(v.type, v.phase);
    }
    for (const auto& je : j.at("edges")) {
      auto mult = je.value("mult", 1u);
      if (mult == 0) throw FormatError("edge multiplicity must be >= 1");
      d.add_edge(je.at("src").get<VertexId>(), je.at("dst").get<VertexId>(), mult);
    }
    d.set_inputs(j.at("inputs").get<std::vector<VertexId>>());
    d.set_outputs(j.at("outputs").get<std::vector<VertexId>>());
    if (j.contains("scalar")) {
      const auto& js = j.at("scalar");
      d.set_scalar(Scalar(Complex(js.at("re").get<double>(), js.at("im").get<double>())));
    }
    d.validate();
    return d;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed diagram document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::string dump_diagram(const Diagram& d, int indent) {
  return diagram_to_json(d).dump(indent);
}

Diagram parse_diagram(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return diagram_from_json(j);
}

Diagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_diagram(ss.str());
}

void save_diagram(const Diagram& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << dump_diagram(d) << "\n";
}

}  // namespace zxkit

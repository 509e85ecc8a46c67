// Copyright 2026 The covplan Authors
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

#include "covplan/scenario_io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace covplan {

ScenarioParseError::ScenarioParseError(std::string source, std::size_t line,
                                       std::string field, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " +
                         (field.empty() ? "" : field + ": ") + message),
      source_(std::move(source)),
      line_(line),
      field_(std::move(field)) {}

namespace {

using nlohmann::json;

// Line of every value in the document, keyed by path ("endpoints[1].source").
class LineIndex {
 public:
  explicit LineIndex(std::string_view text) { scan(text); }

  // Longest recorded prefix of `path`; 0 when nothing matches.
  [[nodiscard]] std::size_t line_of(std::string path) const {
    while (true) {
      if (auto it = lines_.find(path); it != lines_.end()) return it->second;
      const auto cut = path.find_last_of(".[");
      if (cut == std::string::npos || cut == 0) break;
      path.resize(cut);
    }
    if (auto it = lines_.find(path); it != lines_.end()) return it->second;
    return 0;
  }

 private:
  struct Frame {
    bool array;
    std::size_t index = 0;
    std::string key;
    bool expect_key = true;
  };

  [[nodiscard]] std::string path() const {
    std::string out;
    for (const auto& f : frames_) {
      if (f.array) {
        out += "[" + std::to_string(f.index) + "]";
      } else {
        if (!out.empty()) out += ".";
        out += f.key;
      }
    }
    return out;
  }

  void value_at(std::size_t line) { lines_.emplace(path(), line); }

  void scan(std::string_view t) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const char ch = t[i];
      if (ch == '\n') {
        ++line;
      } else if (ch == '"') {
        std::string s;
        for (++i; i < t.size() && t[i] != '"'; ++i) {
          if (t[i] == '\\' && i + 1 < t.size()) ++i;
          s += t[i];
        }
        if (!frames_.empty() && !frames_.back().array && frames_.back().expect_key) {
          frames_.back().key = s;
          frames_.back().expect_key = false;
        } else {
          value_at(line);
        }
      } else if (ch == '{' || ch == '[') {
        value_at(line);
        frames_.push_back(Frame{ch == '[', 0, {}, true});
      } else if (ch == '}' || ch == ']') {
        if (!frames_.empty()) frames_.pop_back();
      } else if (ch == ',') {
        if (!frames_.empty()) {
          if (frames_.back().array) {
            ++frames_.back().index;
          } else {
            frames_.back().expect_key = true;
          }
        }
      } else if (ch == ':' || ch == ' ' || ch == '\t' || ch == '\r') {
        // structural
      } else {
        value_at(line);
        while (i + 1 < t.size() && std::string_view(",]}\n \t\r").find(t[i + 1]) ==
                                       std::string_view::npos) {
          ++i;
        }
      }
    }
  }

  std::vector<Frame> frames_;
  std::map<std::string, std::size_t> lines_;
};

class Reader {
 public:
  Reader(std::string_view text, std::string source) : index_(text), source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    throw ScenarioParseError(source_, index_.line_of(field), field, message);
  }

  void only_keys(const json& obj, const std::string& where,
                 const std::set<std::string>& allowed) const {
    for (const auto& [key, _] : obj.items()) {
      if (!allowed.count(key)) {
        fail(where.empty() ? key : where + "." + key, "unknown key");
      }
    }
  }

  const json& require(const json& obj, const std::string& key, const std::string& where) const {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(where.empty() ? key : where + "." + key, "missing required key");
    return *it;
  }

  int integer(const json& v, const std::string& field) const {
    if (!v.is_number_integer()) fail(field, "expected an integer");
    const auto x = v.get<std::int64_t>();
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
      fail(field, "integer out of range");
    }
    return static_cast<int>(x);
  }

  double number(const json& v, const std::string& field) const {
    if (!v.is_number()) fail(field, "expected a number");
    return v.get<double>();
  }

  Node node(const json& v, const std::string& field) const {
    if (!v.is_array() || v.size() != 2) fail(field, "expected [row, col]");
    return Node{integer(v[0], field + "[0]"), integer(v[1], field + "[1]")};
  }

  const json& array(const json& v, const std::string& field) const {
    if (!v.is_array()) fail(field, "expected an array");
    return v;
  }

  const json& object(const json& v, const std::string& field) const {
    if (!v.is_object()) fail(field, "expected an object");
    return v;
  }

  [[nodiscard]] const std::string& source() const noexcept { return source_; }

 private:
  LineIndex index_;
  std::string source_;
};

std::size_t byte_to_line(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) line += text[i] == '\n' ? 1 : 0;
  return line;
}

json node_json(Node n) { return json::array({n.row, n.col}); }

json config_json(const ScenarioConfig& c) {
  json j = json::object();
  j["rows"] = c.rows;
  j["cols"] = c.cols;
  j["robots"] = c.endpoints.size();
  j["endpoints"] = json::array();
  for (const auto& ep : c.endpoints) {
    j["endpoints"].push_back({{"source", node_json(ep.source)}, {"dest", node_json(ep.dest)}});
  }
  j["obstacles"] = json::array();
  for (const auto& o : c.obstacles) j["obstacles"].push_back(node_json(o));
  json overrides = json::array();
  const Grid grid(c.rows, c.cols);
  for (const auto& [edge, w] : c.weights.overrides) {
    auto [a, b] = grid.edge_nodes(edge);
    overrides.push_back({{"from", node_json(a)}, {"to", node_json(b)}, {"weight", w}});
  }
  j["weights"] = {{"obstacle_edge", c.weights.obstacle_edge},
                  {"normal_edge", c.weights.normal_edge},
                  {"overrides", overrides}};
  if (c.lengths) j["lengths"] = *c.lengths;
  j["alphas"] = c.alphas;
  j["seed"] = c.seed;
  if (!c.description.empty()) j["description"] = c.description;
  return j;
}

}  // namespace

ScenarioConfig parse_scenario(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ScenarioParseError(source, byte_to_line(text, e.byte), "",
                             std::string("malformed JSON: ") + e.what());
  }
  const Reader in(text, source);
  if (!doc.is_object()) in.fail("", "top level must be an object");
  in.only_keys(doc, "",
               {"rows", "cols", "robots", "endpoints", "obstacles", "weights", "lengths",
                "alphas", "seed", "description"});

  ScenarioConfig c;
  c.rows = in.integer(in.require(doc, "rows", ""), "rows");
  c.cols = in.integer(in.require(doc, "cols", ""), "cols");
  const int robots = in.integer(in.require(doc, "robots", ""), "robots");
  if (robots < 1) in.fail("robots", "must be a positive integer");

  const json& eps = in.array(in.require(doc, "endpoints", ""), "endpoints");
  if (eps.size() != static_cast<std::size_t>(robots)) {
    in.fail("endpoints", "expected " + std::to_string(robots) + " entries (one per robot), got " +
                             std::to_string(eps.size()));
  }
  for (std::size_t r = 0; r < eps.size(); ++r) {
    const std::string field = "endpoints[" + std::to_string(r) + "]";
    in.object(eps[r], field);
    in.only_keys(eps[r], field, {"source", "dest"});
    c.endpoints.push_back({in.node(in.require(eps[r], "source", field), field + ".source"),
                           in.node(in.require(eps[r], "dest", field), field + ".dest")});
  }

  if (doc.contains("obstacles")) {
    const json& obs = in.array(doc["obstacles"], "obstacles");
    for (std::size_t i = 0; i < obs.size(); ++i) {
      c.obstacles.push_back(in.node(obs[i], "obstacles[" + std::to_string(i) + "]"));
    }
  }

  std::map<EdgeIndex, std::size_t> override_entry;
  if (doc.contains("weights")) {
    const json& w = in.object(doc["weights"], "weights");
    in.only_keys(w, "weights", {"obstacle_edge", "normal_edge", "overrides"});
    if (w.contains("obstacle_edge")) {
      c.weights.obstacle_edge = in.number(w["obstacle_edge"], "weights.obstacle_edge");
    }
    if (w.contains("normal_edge")) {
      c.weights.normal_edge = in.number(w["normal_edge"], "weights.normal_edge");
    }
    if (w.contains("overrides")) {
      const json& ovs = in.array(w["overrides"], "weights.overrides");
      const bool grid_ok = c.rows >= 1 && c.cols >= 1;
      for (std::size_t i = 0; i < ovs.size(); ++i) {
        const std::string field = "weights.overrides[" + std::to_string(i) + "]";
        in.object(ovs[i], field);
        in.only_keys(ovs[i], field, {"from", "to", "weight"});
        const Node a = in.node(in.require(ovs[i], "from", field), field + ".from");
        const Node b = in.node(in.require(ovs[i], "to", field), field + ".to");
        const double weight = in.number(in.require(ovs[i], "weight", field), field + ".weight");
        if (!grid_ok) in.fail("rows", "must be a positive integer");
        const auto edge = Grid(c.rows, c.cols).find_edge(a, b);
        if (!edge) in.fail(field, "from/to are not adjacent grid nodes");
        if (!c.weights.overrides.emplace(*edge, weight).second) {
          in.fail(field, "duplicate override for edge " + to_string(a) + "-" + to_string(b));
        }
        override_entry[*edge] = i;
      }
    }
  }

  if (doc.contains("lengths")) {
    const json& ls = in.array(doc["lengths"], "lengths");
    std::vector<double> lengths;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      lengths.push_back(in.number(ls[i], "lengths[" + std::to_string(i) + "]"));
    }
    c.lengths = std::move(lengths);
  }

  if (doc.contains("alphas")) {
    const json& as = in.array(doc["alphas"], "alphas");
    if (as.size() != 3) in.fail("alphas", "expected 3 entries [a0, a1, a2]");
    for (std::size_t k = 0; k < 3; ++k) {
      c.alphas[k] = in.number(as[k], "alphas[" + std::to_string(k) + "]");
    }
  }

  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) in.fail("seed", "expected a nonnegative integer");
    c.seed = doc["seed"].get<std::uint64_t>();
  }

  if (doc.contains("description")) {
    if (!doc["description"].is_string()) in.fail("description", "expected a string");
    c.description = doc["description"].get<std::string>();
  }

  try {
    (void)GridScenario(c);
  } catch (const ScenarioError& e) {
    std::string field = e.field();
    const std::string prefix = "weights.overrides[edge ";
    if (field.rfind(prefix, 0) == 0) {
      const auto edge = static_cast<EdgeIndex>(std::stoull(field.substr(prefix.size())));
      if (auto it = override_entry.find(edge); it != override_entry.end()) {
        field = "weights.overrides[" + std::to_string(it->second) + "]";
      }
    }
    const std::string message = std::string(e.what()).substr(e.field().size() + 2);
    in.fail(field, message);
  }
  return c;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ScenarioParseError(path.string(), 0, "", "cannot open file");
  std::ostringstream text;
  text << file.rdbuf();
  return parse_scenario(text.str(), path.string());
}

std::string scenario_to_json(const ScenarioConfig& config) {
  const json j = config_json(config);
  // Fixed human-friendly key order.
  nlohmann::ordered_json out;
  for (const char* key : {"rows", "cols", "robots", "endpoints", "obstacles", "weights",
                          "lengths", "alphas", "seed", "description"}) {
    if (j.contains(key)) out[key] = j[key];
  }
  return out.dump(2) + "\n";
}

std::string scenario_digest(const ScenarioConfig& config) {
  const std::string canonical = config_json(config).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace covplan

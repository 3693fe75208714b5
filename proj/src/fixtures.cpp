#include "walklab/fixtures.hpp"

#include <json.hpp>

namespace walklab {

namespace detail {
const char* fixtures_json_text();
}

namespace {

Fixture parse_fixture(const std::string& name, const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  Graph g(n);
  for (const auto& e : j.at("edges"))
    g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  std::map<std::string, int> marks;
  if (j.contains("marks"))
    for (auto it = j.at("marks").begin(); it != j.at("marks").end(); ++it) {
      int v = it.value().get<int>();
      if (v < 0 || v >= n) throw std::invalid_argument("mark out of range");
      marks[it.key()] = v;
    }
  return Fixture{name, std::move(g), std::move(marks)};
}

const nlohmann::json& registry() {
  static const nlohmann::json data =
      nlohmann::json::parse(detail::fixtures_json_text());
  return data;
}

}  // namespace

int Fixture::mark(const std::string& key) const {
  auto it = marks.find(key);
  if (it == marks.end())
    throw std::invalid_argument("fixture " + name + " has no mark '" + key + "'");
  return it->second;
}

Fixture fixture(const std::string& name) {
  const auto& reg = registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw std::invalid_argument("unknown fixture: " + name);
  return parse_fixture(name, *it);
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (auto it = registry().begin(); it != registry().end(); ++it)
    names.push_back(it.key());
  return names;
}

Fixture fixture_from_json(const std::string& name, const std::string& json_text) {
  return parse_fixture(name, nlohmann::json::parse(json_text));
}

std::string fixture_to_json(const Fixture& f) {
  nlohmann::json j;
  j["n"] = f.graph.n();
  auto edges = nlohmann::json::array();
  for (auto [u, v] : f.graph.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  nlohmann::json marks(nlohmann::json::value_t::object);
  for (const auto& [k, v] : f.marks) marks[k] = v;
  j["marks"] = std::move(marks);
  return j.dump();
}

}  // namespace walklab

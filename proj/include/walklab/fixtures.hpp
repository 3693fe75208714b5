#pragma once

#include <map>
#include <string>
#include <vector>

#include "walklab/graph.hpp"

namespace walklab {

// A named graph with its distinguished vertices, loaded from the versioned
// edge-list data file so every instance is reproducible bit for bit.
struct Fixture {
  std::string name;
  Graph graph;
  std::map<std::string, int> marks;

  int mark(const std::string& key) const;
};

// Registry lookup; throws std::invalid_argument for unknown names.
Fixture fixture(const std::string& name);

std::vector<std::string> fixture_names();

// JSON graph schema {"n":..,"edges":[[u,v],..],"marks":{..}} used both by
// the fixture data file and the CLI.
Fixture fixture_from_json(const std::string& name, const std::string& json_text);
std::string fixture_to_json(const Fixture& f);

}  // namespace walklab

#pragma once

#include <string>

#include "togglekit/labeling.hpp"
#include "togglekit/moon.hpp"

#include "json.hpp"

namespace togglekit {

// Rectangle labelings:
//   {"shape":{"r":R,"s":S},"realm":"PL"|"Birational","values":[["p/q",...],...]}
// Rows are listed i = 1..r, columns j = 1..s; integers may omit "/1".
nlohmann::json labeling_to_json(const Labeling& x);
Labeling labeling_from_json(const nlohmann::json& j);

// Moon polyominoes: {"cells":[[i,j],...]}.
nlohmann::json moon_to_json(const MoonPoly& m);
MoonPoly moon_from_json(const nlohmann::json& j);

// Fillings add {"values":{"i,j":"p/q",...}} to the polyomino object.
nlohmann::json filling_to_json(const Filling& x);
Filling filling_from_json(const nlohmann::json& j);

// File helpers; throw std::runtime_error on unreadable paths and
// std::invalid_argument on malformed documents.
nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace togglekit

#pragma once

#include <string>

#include "json.hpp"
#include "model.hpp"

namespace warrow {

using Json = nlohmann::ordered_json;

Json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

Json gauss_to_json(const GaussCode& g);
GaussCode gauss_from_json(const Json& j);

// Signed Gauss-code strings, one strand per line: [open:|closed:] O1+U2-...
// A bare line is a closed strand.
std::string gauss_to_text(const GaussCode& g);
GaussCode gauss_from_text(const std::string& text);

// Parses either a JSON document (object with a "type" field) or a signed
// Gauss-code string. Exactly one of the outputs is set.
struct ParsedInput {
  std::optional<Presentation> presentation;
  std::optional<GaussCode> gauss;
};
ParsedInput parse_input(const std::string& text);

std::string dump_json(const Json& j);

}  // namespace warrow

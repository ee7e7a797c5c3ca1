#pragma once

#include <json.hpp>
#include <ostream>

#include "twistpoly/families.hpp"
#include "twistpoly/hn.hpp"

namespace twistpoly {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchema = 1;

Json to_json(const Poly& p);
Json to_json(const RatFunc& f);
Json to_json(const QuadExt& x);
Json to_json(const Slope& s);
Json to_json(const StepLabels& s);
Json to_json(const WordAnatomy& a);
Json to_json(const FillingResult& r);

// Envelope with the schema version and a command name.
Json envelope(const char* command);

// Text rendering; large results stream term by term.
void write_filling(std::ostream& os, const FillingResult& r, bool basis_change);

}  // namespace twistpoly

#pragma once

// JSON and CSV forms of the library's values. Indices in files are one-based.
// Floating-point numbers are written with 17 significant digits and the point
// at infinity as the string "inf".

#include <json.hpp>
#include <string>

#include "fmc/assoc.hpp"
#include "fmc/canonical.hpp"
#include "fmc/tree.hpp"

namespace fmc::io {

using Json = nlohmann::ordered_json;

std::string format_double(double v);
// Pretty printer with fixed float formatting; arrays of scalars stay on one
// line.
std::string dump(const Json& j);
Json parse(const std::string& text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

Json to_json(const FTree& t);
FTree tree_from_json(const Json& j);

Json to_json(const Parenthesization& p);
Parenthesization paren_from_json(const Json& j);

Json to_json(const ExclusionRelation& r);
ExclusionRelation exclusion_from_json(const Json& j);

Json to_json(const SetMap& s);
SetMap setmap_from_json(const Json& j);

Json to_json(const Configuration& c);
Configuration configuration_from_json(const Json& j);

Json to_json(const SimplicialPoint& p);
SimplicialPoint simplicial_from_json(const Json& j);

Json to_json(const AmbientPoint& a);
AmbientPoint ambient_from_json(const Json& j);

Json to_json(const StratumPoint& s);
StratumPoint stratum_from_json(const Json& j);

Json to_json(const Verdict& v);

Json to_json(const FacePoset& p);
Json to_json(const FaceParams& p);
FaceParams face_params_from_json(const Json& j);

}  // namespace fmc::io

#ifndef UNITUBE_JSON_IO_HPP
#define UNITUBE_JSON_IO_HPP

#include <json.hpp>

#include "unitube/ar.hpp"
#include "unitube/perpendicular.hpp"

namespace unitube {

using nlohmann::json;

// Site descriptor: {"kind":"loop"|"linear", "base":"cyclic"|"int"|
// "int_pairs_lex"|"finite", "rank":r / "size":n}.  Vertices are numbers,
// or [x, y] pairs on int_pairs_lex bases.  Parse failures raise BadInput.

json site_to_json(const Site& s);
Site site_from_json(const json& j);

json vertex_to_json(const Site& s, const Vertex& v);
Vertex vertex_from_json(const Site& s, const json& j);

json point_to_json(const Site& s, const CoverPoint& p);
CoverPoint point_from_json(const Site& s, const json& j);

// Objects serialize in label form {"socle":v,"top":v,"winding":n} with a
// human-readable "label"; both label and cover form {"a":…,"b":…} parse.
json object_to_json(const IntervalObject& x);
IntervalObject object_from_json(const Site& s, const json& j);

json hom_to_json(const HomSpace& h);
json ar_to_json(const ArData& d);
json chain_to_json(const SubobjectChain& c);
json witness_to_json(const PathWitness& w);
json perp_to_json(const PerpPresentation& pp);

// strict parse wrapper: BadInput instead of nlohmann exceptions
json parse_json(const std::string& text);

}  // namespace unitube

#endif

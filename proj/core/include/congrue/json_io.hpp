#ifndef CONGRUE_JSON_IO_HPP
#define CONGRUE_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "congrue/crt.hpp"
#include "congrue/lattice_gen.hpp"

namespace congrue {

// Numbers cross the JSON boundary as decimal strings: JSON number
// precision must never silently truncate arbitrary-precision values.
// ordered_json keeps field order stable, so output is byte-deterministic.
using Json = nlohmann::ordered_json;

Int int_from_string(const std::string& s);
Rat rat_from_string(const std::string& s);
std::string to_string(const Int& v);
std::string to_string(const Rat& v);

Json to_json(const NewtonPoly& p);
Json to_json(const MonomialPoly& q);
Json to_json(const PnSeries& s);
Json to_json(const PartialMap& pm);
Json to_json(const Partition& p);
Json to_json(const FiniteSemilattice& V);
Json space_to_json(const UltraSpace& S);

NewtonPoly newton_from_json(const Json& j);
MonomialPoly monomial_from_json(const Json& j);
PnSeries series_from_json(const Json& j);
PartialMap partial_map_from_json(const Json& j);
/// List of partitions as block lists over a common carrier; the carrier
/// is the union of all blocks.
std::vector<Partition> partitions_from_json(const Json& j);
FiniteSemilattice semilattice_from_json(const Json& j);
UltraSpace space_from_json(const Json& j, FiniteSemilattice V);

}  // namespace congrue

#endif

#pragma once

#include <nlohmann/json.hpp>

#include "tfgrp/ext.hpp"
#include "tfgrp/lim1.hpp"

namespace tfgrp {

using Json = nlohmann::ordered_json;

// All to_json outputs are canonical (stable key order, minimal forms) and
// round-trip exactly through the matching from_json. Parsers throw
// ParseError on malformed input.

Json int_to_json(const Int& n);
Int json_to_int(const Json& j);

Json rat_to_json(const Rat& q);
Rat json_to_rat(const Json& j);

Json rat_vec_to_json(const RatVec& v);
RatVec json_to_rat_vec(const Json& j);

Json int_vec_to_json(const IntVec& v);
IntVec json_to_int_vec(const Json& j);

Json rat_mat_to_json(const RatMat& m);
RatMat json_to_rat_mat(const Json& j);

Json int_mat_to_json(const IntMat& m);
IntMat json_to_int_mat(const Json& j);

Json lattice_to_json(const Lattice& l);
Lattice json_to_lattice(const Json& j);

Json baer_type_to_json(const BaerType& t);
BaerType json_to_baer_type(const Json& j);

Json type_presentation_to_json(const TypePresentation& g);
TypePresentation json_to_type_presentation(const Json& j);

Json filtration_to_json(const Filtration& f);
Filtration json_to_filtration(const Json& j);

Json cofiltration_to_json(const Cofiltration& c);
Cofiltration json_to_cofiltration(const Json& j);

Json tower_map_to_json(const TowerMap& t);
TowerMap json_to_tower_map(const Json& j);

Json int_tower_to_json(const IntTower& t);
IntTower json_to_int_tower(const Json& j);

Json profinite_to_json(const ProfiniteElement& x);
ProfiniteElement json_to_profinite(const Json& j);

Json padic_to_json(const PadicElement& x);
PadicElement json_to_padic(const Json& j);

Json cocycle_to_json(const TruncatedCocycle& a);
TruncatedCocycle json_to_cocycle(const Json& j);

Json finab_to_json(const FinAbGroup& g);
FinAbGroup json_to_finab(const Json& j);

Json ext_cocycle_to_json(const ExtCocycle& c);
ExtCocycle json_to_ext_cocycle(const Json& j);

Json divisible_type_to_json(const DivisibleType& t);
DivisibleType json_to_divisible_type(const Json& j);

}  // namespace tfgrp

#pragma once

#include "json.hpp"

#include "hallp1/coeff.hpp"
#include "hallp1/drinfeld.hpp"
#include "hallp1/hall_global.hpp"
#include "hallp1/partition.hpp"
#include "hallp1/pbw.hpp"
#include "hallp1/torsion.hpp"

namespace hallp1 {

// Integers are emitted as JSON numbers when they fit in int64 and as decimal
// strings otherwise; parsers accept both.
nlohmann::json int_to_json(const Int& n);
Int int_from_json(const nlohmann::json& j);

// Rational as [num, den], den > 0, gcd(num, den) = 1.
nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);

// {"a": [num, den], "b": [num, den]}
nlohmann::json coeff_to_json(const Coeff& c);
Coeff coeff_from_json(const nlohmann::json& j, long q);

// [3, 1, 1]
nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

// "inf" or the coefficient list of the monic irreducible, constant first.
nlohmann::json point_to_json(const ClosedPoint& x);
ClosedPoint point_from_json(const nlohmann::json& j, long q);

// Sorted list of [point, partition].
nlohmann::json torsion_class_to_json(const TorsionClass& c);
TorsionClass torsion_class_from_json(const nlohmann::json& j, long q);

// List of [class, coeff].
nlohmann::json torsion_element_to_json(const TorsionElement& e);
TorsionElement torsion_element_from_json(const nlohmann::json& j, long q);

// {"bundle": [[n, mult], ...], "torsion": [[point, partition], ...]}
nlohmann::json sheaf_class_to_json(const SheafClass& c);
SheafClass sheaf_class_from_json(const nlohmann::json& j, long q);

// {"terms": [{"class": ..., "coeff": ...}, ...]}
nlohmann::json hall_element_to_json(const HallElement& e);
HallElement hall_element_from_json(const nlohmann::json& j, long q);

// {"c": [[n, mult], ...], "d": [[r, exp], ...]}
nlohmann::json pbw_monomial_to_json(const PBWMonomial& m);
PBWMonomial pbw_monomial_from_json(const nlohmann::json& j);

// {"terms": [{"class": ..., "coeff": ...}, ...]}
nlohmann::json b_element_to_json(const BElement& e, long q);
BElement b_element_from_json(const nlohmann::json& j, long q);

// {"q": ..., "max_total_degree": ..., "checked": ..., "mismatches": [...]}
nlohmann::json iso_report_to_json(const IsoReport& r);

}  // namespace hallp1

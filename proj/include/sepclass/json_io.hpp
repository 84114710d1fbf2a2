#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sepclass/bases.hpp"
#include "sepclass/class_spec.hpp"
#include "sepclass/partition.hpp"
#include "sepclass/series.hpp"
#include "sepclass/theorems.hpp"

namespace sepclass {

// Wire formats. Every malformed document raises InvalidArgument.
//
//   Partition      {"parts":[7,5,3,1]}
//   Overpartition  {"convention":"first"|"last","parts":[{"m":4,"over":true},...]}
//   Decomposition  {"basis":<partition or overpartition>,"padding":[...]}
//   Series         {"trunc":N,"markers":[...],"terms":[{"q":e,"marks":[...],"coeff":"-12"},...]}
//                  terms ascending by (q, marks); "caps" is added only when
//                  some marker cap differs from trunc
//   ClassSpec      {"class":"P","a":1,"b":2,"k":2,"r":1}
//   Report         {"spec":...,"N":...,"routes":[...],"status":"match"|"mismatch",
//                   "first_discrepancy":{"q":e,"marks":[...],"coeffs":{route:"c",...}}|null,
//                   "elapsed_ms":...}

Json to_json(const Partition& p);
Json to_json(const Overpartition& p);
Json to_json(const ClassObject& obj);
Json to_json(const Decomposition& d);
Json to_json(const Series& s);
Json to_json(const ClassSpec& spec);
Json to_json(const VerificationReport& report);

ClassObject class_object_from_json(const Json& j);
Decomposition decomposition_from_json(const Json& j);
Series series_from_json(const Json& j);
ClassSpec class_spec_from_json(const Json& j);

/// Parses a JSON document; syntax errors raise InvalidArgument.
Json parse_json(const std::string& text);

}  // namespace sepclass

#pragma once

// JSON documents (schema 1) for torsion pairs and maximal rigid objects.
//
//   pair:  {"schema":1, "rank":n, "kind":"ray"|"coray",
//           "torsion":{"finite":[...], "corays":[...]},
//           "free":{"finite":[...], "rays":[...]}}
//   rigid: {"schema":1, "rank":n, "kind":"prufer"|"adic", "summands":[...]}
//
// Objects are written in the M[i,j] grammar with normalized indices.

#include <stdexcept>

#include <json.hpp>

#include "tube/torsion.hpp"

namespace tube {

// Structural problems with a document (as opposed to a well-formed document
// describing something that is not a torsion pair).
class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const TorsionPair& tp);
nlohmann::json to_json(const MaxRigid& u);

TorsionPair pair_from_json(const nlohmann::json& doc);
MaxRigid max_rigid_from_json(const nlohmann::json& doc);

}  // namespace tube

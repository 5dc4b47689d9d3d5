// JSON form of a CAD ("eccad-cad/1").  Irrational coordinates are written
// as a defining polynomial with its canonical dyadic isolating interval, so
// output depends only on the values.

#ifndef ECCAD_SERIALIZE_HPP
#define ECCAD_SERIALIZE_HPP

#include <string>
#include <string_view>

#include "json.hpp"

#include "eccad/cad.hpp"

namespace eccad {

inline constexpr const char* kCadFormat = "eccad-cad/1";

nlohmann::json coordinate_to_json(const RealAlgebraic& a);
RealAlgebraic coordinate_from_json(const nlohmann::json& j);

/// `formula` is stored verbatim for reference.
nlohmann::json cad_to_json(const CAD& cad, const std::string& formula = "");
CAD cad_from_json(const nlohmann::json& j);

std::string save_cad(const CAD& cad, const std::string& formula = "");
CAD load_cad(std::string_view text);

}  // namespace eccad

#endif  // ECCAD_SERIALIZE_HPP

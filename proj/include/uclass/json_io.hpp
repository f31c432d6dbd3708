#ifndef UCLASS_JSON_IO_HPP
#define UCLASS_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "uclass/schwarz.hpp"
#include "uclass/series.hpp"

namespace uclass {

nlohmann::json complex_to_json(Complex z);
/// Accepts [re, im] or a bare number.
Complex complex_from_json(const nlohmann::json &j);

/// {"order": N, "coeffs": [[re, im], ...]}
void to_json(nlohmann::json &j, const ComplexSeries &s);
void from_json(const nlohmann::json &j, ComplexSeries &s);

nlohmann::json generator_to_json(const SchwarzGenerator &g);
SchwarzGenerator generator_from_json(const nlohmann::json &j);

/// Serialization with sorted keys, no whitespace and every floating-point
/// number printed with 17 significant digits, so equal documents are
/// byte-identical.
std::string canonical_dump(const nlohmann::json &j, int indent = -1);

} // namespace uclass

#endif

#ifndef STRESSCA_IO_HPP
#define STRESSCA_IO_HPP

#include "stressca/complex.hpp"
#include "stressca/report.hpp"

#include <optional>
#include <string>
#include <utility>

namespace stressca {

/// A complex read from disk, with the optional two-part split used by the cut check.
struct LoadedComplex {
    GeometricComplex complex;
    std::optional<std::pair<AbstractComplex, AbstractComplex>> parts;
};

/// {"ambient_dim", "vertices": [{"id", "coords", "color"?}], "facets", "parts"?}
Json complex_to_json(const GeometricComplex& g,
                     const std::optional<std::pair<AbstractComplex, AbstractComplex>>& parts = std::nullopt);
/// Vertex ids become labels; vertices are indexed in file order.
/// Throws std::invalid_argument on malformed input.
LoadedComplex complex_from_json(const Json& j);

LoadedComplex read_complex_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace stressca

#endif  // STRESSCA_IO_HPP

#pragma once

#include <iosfwd>
#include <string>

#include "surflink/surface_map.hpp"

namespace surflink {

/// JSON schema (see docs/formats.md):
/// {"darts": N, "sigma": [...], "alpha": [...],
///  "over_even_pair": [bool per crossing],
///  "regions": [{"walks": [...], "genus": g}, ...],
///  "marked_curves": {"u": [refined edge ids...], ...}}   (optional)
///
/// Export emits the canonical form; import∘export is the identity on it.
DiagramOnSurface map_from_json(const std::string& text);
DiagramOnSurface map_from_stream(std::istream& in);
std::string map_to_json(const DiagramOnSurface& map, bool pretty = false);

}  // namespace surflink

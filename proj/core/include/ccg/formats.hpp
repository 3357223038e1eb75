#ifndef CCG_FORMATS_HPP
#define CCG_FORMATS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccg/chroma.hpp"
#include "ccg/geometry.hpp"

namespace ccg {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One cuboid as stored on disk: opposite corners plus an optional color.
struct DocCuboid {
  Vec3 min;
  Vec3 max;
  std::optional<int> color;
};

struct ConfigDocument {
  Vec3 dims;
  Freedom freedom = Freedom::F1;
  std::optional<int> declared_chi;
  std::vector<DocCuboid> cuboids;
  std::vector<std::string> warnings;  // normalization notes from parsing

  Configuration to_configuration() const;
  // The stored colors, when every cuboid carries one; nullopt otherwise.
  std::optional<Coloring> stored_coloring() const;
};

// Document from an in-memory configuration, optionally with a coloring
// (length-checked) and a chromatic number to record.
ConfigDocument from_configuration(const Configuration& cfg,
                                  const std::optional<Coloring>& coloring =
                                      std::nullopt,
                                  std::optional<int> chi = std::nullopt);

// Parses a bracketed list of 7-tuples [x1,x2,y1,y2,z1,z2,color], whitespace
// and newline tolerant. Reversed intervals (min > max) are swapped with a
// warning. Throws ParseError on malformed input or an empty list.
ConfigDocument parse_appendix(const std::string& text, const Vec3& dims,
                              Freedom freedom);

// JSON document: {"dims":[a,b,c],"freedom":N,"chi":K?,
//   "cuboids":[{"min":[x,y,z],"max":[x,y,z],"color":k?},...]}.
ConfigDocument parse_json(const std::string& text);
std::string to_json(const ConfigDocument& doc);

// Dispatches on the first non-space byte: '{' is JSON, '[' is the tuple-list
// format (which requires dims and freedom). Explicit dims/freedom must match
// a JSON document's metadata.
ConfigDocument parse_document(const std::string& text,
                              const std::optional<Vec3>& dims,
                              std::optional<Freedom> freedom);

enum class ExportFormat { json, maple, obj };

ExportFormat export_format_from_string(const std::string& name);

// Spreads the cuboids apart along one axis: a coordinate v on that axis maps
// to (gap+1)*v for the lower corner and gap*lower + upper for the upper, so
// sizes are preserved and consecutive layers separate by gap units.
struct ExplodeSpec {
  int axis = 2;
  i64 gap = 4;
};

// maple: the tuple-list format, one cuboid per line (bit-exact round trip
// with parse_appendix for normalized documents). obj: 8 vertices and 12
// triangles per cuboid with a per-color material. Cuboids without stored
// colors fall back to a deterministic palette where one is required.
std::string export_document(const ConfigDocument& doc, ExportFormat format,
                            const std::optional<ExplodeSpec>& explode =
                                std::nullopt);

// Material name for a 1-based color index: the six display colors
// (yellow, red, blue, white, black, green), then color7, color8, ...
std::string color_name(int color);

}  // namespace ccg

#endif

#include "ccg/formats.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <limits>
#include <utility>

#include <json.hpp>

namespace ccg {
namespace {

struct Scanner {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  i64 integer() {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      ++i;
    if (i == digits) fail("expected an integer");
    i64 v = 0;
    auto res = std::from_chars(s.data() + start, s.data() + i, v);
    if (res.ec != std::errc{}) fail("integer out of range");
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(i));
  }
};

const char kAxisNames[] = "xyz";

void normalize_intervals(DocCuboid& c, std::size_t index,
                         std::vector<std::string>& warnings) {
  for (int ax = 0; ax < 3; ++ax) {
    if (c.min[ax] > c.max[ax]) {
      std::swap(c.min[ax], c.max[ax]);
      warnings.push_back("cuboid " + std::to_string(index) + ": " +
                         kAxisNames[ax] + " interval reversed; swapped");
    }
  }
}

int checked_color(i64 v) {
  if (v < 1 || v > std::numeric_limits<int>::max())
    throw ParseError("color must be a positive integer, got " +
                     std::to_string(v));
  return static_cast<int>(v);
}

Vec3 vec_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 3)
    throw ParseError(std::string(what) + " must be an array of 3 integers");
  Vec3 v;
  for (int ax = 0; ax < 3; ++ax) {
    if (!j[static_cast<std::size_t>(ax)].is_number_integer())
      throw ParseError(std::string(what) + " must be an array of 3 integers");
    v[ax] = j[static_cast<std::size_t>(ax)].get<i64>();
  }
  return v;
}

int effective_color(const DocCuboid& c, std::size_t index) {
  return c.color ? *c.color : static_cast<int>(index % 6) + 1;
}

ConfigDocument exploded(ConfigDocument doc, const ExplodeSpec& ex) {
  if (ex.axis < 0 || ex.axis > 2)
    throw std::invalid_argument("explode axis must be x, y or z");
  if (ex.gap < 0)
    throw std::invalid_argument("explode gap must be nonnegative");
  for (DocCuboid& c : doc.cuboids) {
    const i64 lo = c.min[ex.axis], hi = c.max[ex.axis];
    c.min[ex.axis] = (ex.gap + 1) * lo;
    c.max[ex.axis] = ex.gap * lo + hi;
  }
  return doc;
}

std::string to_maple(const ConfigDocument& doc) {
  std::string out = "[";
  for (std::size_t i = 0; i < doc.cuboids.size(); ++i) {
    const DocCuboid& c = doc.cuboids[i];
    if (i) out += ",\n";
    out += "[" + std::to_string(c.min.x) + "," + std::to_string(c.max.x) +
           "," + std::to_string(c.min.y) + "," + std::to_string(c.max.y) +
           "," + std::to_string(c.min.z) + "," + std::to_string(c.max.z) +
           "," + std::to_string(effective_color(c, i)) + "]";
  }
  out += "]\n";
  return out;
}

std::string to_obj(const ConfigDocument& doc) {
  static constexpr int corner[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0},
                                       {0, 1, 0}, {0, 0, 1}, {1, 0, 1},
                                       {1, 1, 1}, {0, 1, 1}};
  static constexpr int tri[12][3] = {
      {0, 2, 1}, {0, 3, 2},   // bottom
      {4, 5, 6}, {4, 6, 7},   // top
      {0, 1, 5}, {0, 5, 4},   // y min
      {3, 7, 6}, {3, 6, 2},   // y max
      {0, 4, 7}, {0, 7, 3},   // x min
      {1, 2, 6}, {1, 6, 5}};  // x max
  std::string out;
  int base = 0;
  for (std::size_t i = 0; i < doc.cuboids.size(); ++i) {
    const DocCuboid& c = doc.cuboids[i];
    out += "o cuboid_" + std::to_string(i + 1) + "\n";
    out += "usemtl " + color_name(effective_color(c, i)) + "\n";
    const i64 xs[2] = {c.min.x, c.max.x};
    const i64 ys[2] = {c.min.y, c.max.y};
    const i64 zs[2] = {c.min.z, c.max.z};
    for (const auto& cr : corner)
      out += "v " + std::to_string(xs[cr[0]]) + " " + std::to_string(ys[cr[1]]) +
             " " + std::to_string(zs[cr[2]]) + "\n";
    for (const auto& t : tri)
      out += "f " + std::to_string(base + t[0] + 1) + " " +
             std::to_string(base + t[1] + 1) + " " +
             std::to_string(base + t[2] + 1) + "\n";
    base += 8;
  }
  return out;
}

}  // namespace

Configuration ConfigDocument::to_configuration() const {
  Configuration cfg;
  cfg.dims = dims;
  cfg.freedom = freedom;
  cfg.cuboids.reserve(cuboids.size());
  for (const DocCuboid& c : cuboids)
    cfg.cuboids.push_back(Cuboid{c.min, c.max - c.min});
  return cfg;
}

std::optional<Coloring> ConfigDocument::stored_coloring() const {
  Coloring col;
  col.reserve(cuboids.size());
  for (const DocCuboid& c : cuboids) {
    if (!c.color) return std::nullopt;
    col.push_back(*c.color);
  }
  return col;
}

ConfigDocument from_configuration(const Configuration& cfg,
                                  const std::optional<Coloring>& coloring,
                                  std::optional<int> chi) {
  if (coloring && coloring->size() != cfg.cuboids.size())
    throw std::invalid_argument("coloring length does not match");
  ConfigDocument doc;
  doc.dims = cfg.dims;
  doc.freedom = cfg.freedom;
  doc.declared_chi = chi;
  doc.cuboids.reserve(cfg.cuboids.size());
  for (std::size_t i = 0; i < cfg.cuboids.size(); ++i) {
    const Cuboid& c = cfg.cuboids[i];
    DocCuboid d;
    d.min = c.root;
    d.max = c.root + c.dims;
    if (coloring) d.color = (*coloring)[i];
    doc.cuboids.push_back(d);
  }
  return doc;
}

ConfigDocument parse_appendix(const std::string& text, const Vec3& dims,
                              Freedom freedom) {
  Scanner sc{text};
  ConfigDocument doc;
  doc.dims = dims;
  doc.freedom = freedom;
  sc.expect('[');
  sc.skip_ws();
  if (sc.eat(']')) throw ParseError("empty cuboid list");
  while (true) {
    sc.expect('[');
    std::array<i64, 7> t{};
    for (int k = 0; k < 7; ++k) {
      if (k && !sc.eat(','))
        sc.fail("tuple has fewer than 7 entries");
      t[static_cast<std::size_t>(k)] = sc.integer();
    }
    if (sc.eat(',')) sc.fail("tuple has more than 7 entries");
    sc.expect(']');
    DocCuboid c;
    c.min = {t[0], t[2], t[4]};
    c.max = {t[1], t[3], t[5]};
    c.color = checked_color(t[6]);
    normalize_intervals(c, doc.cuboids.size(), doc.warnings);
    doc.cuboids.push_back(c);
    if (sc.eat(',')) continue;
    sc.expect(']');
    break;
  }
  sc.skip_ws();
  if (sc.i != text.size()) sc.fail("trailing characters");
  return doc;
}

ConfigDocument parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top level must be an object");
  ConfigDocument doc;
  try {
    doc.dims = vec_from_json(j.at("dims"), "dims");
    if (!j.at("freedom").is_number_integer())
      throw ParseError("freedom must be 1, 2 or 3");
    const int level = j["freedom"].get<int>();
    if (level < 1 || level > 3) throw ParseError("freedom must be 1, 2 or 3");
    doc.freedom = freedom_from_int(level);
    if (j.contains("chi") && !j["chi"].is_null())
      doc.declared_chi = checked_color(j["chi"].get<i64>());
    if (!j.at("cuboids").is_array())
      throw ParseError("cuboids must be an array");
    for (const auto& jc : j["cuboids"]) {
      DocCuboid c;
      c.min = vec_from_json(jc.at("min"), "min");
      c.max = vec_from_json(jc.at("max"), "max");
      if (jc.contains("color") && !jc["color"].is_null())
        c.color = checked_color(jc["color"].get<i64>());
      normalize_intervals(c, doc.cuboids.size(), doc.warnings);
      doc.cuboids.push_back(c);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad document: ") + e.what());
  }
  return doc;
}

std::string to_json(const ConfigDocument& doc) {
  nlohmann::ordered_json j;
  j["dims"] = {doc.dims.x, doc.dims.y, doc.dims.z};
  j["freedom"] = static_cast<int>(doc.freedom);
  if (doc.declared_chi) j["chi"] = *doc.declared_chi;
  j["cuboids"] = nlohmann::ordered_json::array();
  for (const DocCuboid& c : doc.cuboids) {
    nlohmann::ordered_json jc;
    jc["min"] = {c.min.x, c.min.y, c.min.z};
    jc["max"] = {c.max.x, c.max.y, c.max.z};
    if (c.color) jc["color"] = *c.color;
    j["cuboids"].push_back(std::move(jc));
  }
  return j.dump(2) + "\n";
}

ConfigDocument parse_document(const std::string& text,
                              const std::optional<Vec3>& dims,
                              std::optional<Freedom> freedom) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
  if (i == text.size()) throw ParseError("empty input");
  if (text[i] == '{') {
    ConfigDocument doc = parse_json(text);
    if (dims && !(*dims == doc.dims))
      throw ParseError("dims flag conflicts with document metadata");
    if (freedom && *freedom != doc.freedom)
      throw ParseError("freedom flag conflicts with document metadata");
    return doc;
  }
  if (text[i] == '[') {
    if (!dims || !freedom)
      throw ParseError("the tuple-list format needs explicit dims and freedom");
    return parse_appendix(text, *dims, *freedom);
  }
  throw ParseError("unrecognized input (expected '{' or '[')");
}

ExportFormat export_format_from_string(const std::string& name) {
  if (name == "json") return ExportFormat::json;
  if (name == "maple") return ExportFormat::maple;
  if (name == "obj") return ExportFormat::obj;
  throw std::invalid_argument("unknown export format: " + name);
}

std::string export_document(const ConfigDocument& doc, ExportFormat format,
                            const std::optional<ExplodeSpec>& explode) {
  const ConfigDocument& src = doc;
  ConfigDocument tmp;
  if (explode) tmp = exploded(doc, *explode);
  const ConfigDocument& use = explode ? tmp : src;
  switch (format) {
    case ExportFormat::json:
      return to_json(use);
    case ExportFormat::maple:
      return to_maple(use);
    case ExportFormat::obj:
      return to_obj(use);
  }
  throw std::invalid_argument("unknown export format");
}

std::string color_name(int color) {
  static const char* const base[6] = {"yellow", "red",   "blue",
                                      "white",  "black", "green"};
  if (color >= 1 && color <= 6) return base[color - 1];
  return "color" + std::to_string(color);
}

}  // namespace ccg

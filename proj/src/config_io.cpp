#include "birch/config_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace birch {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::size_t parse_count(std::string_view value, std::size_t line, const char* key) {
  try {
    const Rational r = Rational::parse(value);
    if (r.is_integer() && r.sign() > 0 && r.numerator().fits_ulong_p()) {
      return r.numerator().get_ui();
    }
  } catch (const std::invalid_argument&) {
  }
  throw ParseError(std::string(key) + " must be a positive integer, got '" + std::string(value) +
                       "'",
                   line);
}

Configuration build(std::size_t dim, std::vector<Point> points, std::string label) {
  try {
    return Configuration(dim, std::move(points), std::move(label));
  } catch (const InvalidInput& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace

Configuration read_configuration(std::string_view text) {
  std::size_t dim = 0;
  std::string label;
  std::vector<Point> points;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (const auto eq = line.find('='); eq != std::string_view::npos) {
      if (!points.empty()) throw ParseError("header line after the first point", line_no);
      const std::string_view key = trim(line.substr(0, eq));
      const std::string_view value = line.substr(eq + 1);
      if (key == "dim") {
        dim = parse_count(trim(value), line_no, "dim");
      } else if (key == "label") {
        label = std::string(value);
      } else if (key == "version") {
        if (parse_count(trim(value), line_no, "version") != kConfigFormatVersion) {
          throw ParseError("unsupported format version " + std::string(trim(value)), line_no);
        }
      } else {
        throw ParseError("unknown header key '" + std::string(key) + "'", line_no);
      }
      continue;
    }

    if (dim == 0) throw ParseError("point before the dim= header", line_no);
    std::istringstream fields{std::string(line)};
    std::vector<Rational> coords;
    std::string field;
    while (fields >> field) {
      try {
        coords.push_back(Rational::parse(field));
      } catch (const std::exception& e) {
        throw ParseError(e.what(), line_no, coords.size() + 1);
      }
    }
    if (coords.size() != dim) {
      throw ParseError("expected " + std::to_string(dim) + " coordinates, found " +
                           std::to_string(coords.size()),
                       line_no);
    }
    points.emplace_back(std::move(coords));
  }
  if (dim == 0) throw ParseError("missing dim= header", 0);
  return build(dim, std::move(points), std::move(label));
}

std::string write_configuration(const Configuration& X) {
  if (X.label().find('\n') != std::string::npos) {
    throw InvalidInput("configuration labels must be a single line");
  }
  std::ostringstream os;
  os << "version=" << kConfigFormatVersion << '\n' << "dim=" << X.dim() << '\n';
  if (!X.label().empty()) os << "label=" << X.label() << '\n';
  for (const auto& p : X.points()) {
    for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? " " : "") << p[i];
    os << '\n';
  }
  return os.str();
}

Configuration read_configuration_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 0);
  }
  if (!doc.is_object()) throw ParseError("top level must be an object", 0);
  if (doc.contains("version") && doc["version"] != kConfigFormatVersion) {
    throw ParseError("unsupported format version " + doc["version"].dump(), 0);
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0) {
    throw ParseError("\"dim\" must be a positive integer", 0);
  }
  const auto dim = doc["dim"].get<std::size_t>();
  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw ParseError("\"label\" must be a string", 0);
    label = doc["label"].get<std::string>();
  }
  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw ParseError("\"points\" must be an array", 0);
  }

  std::vector<Point> points;
  std::size_t index = 0;
  for (const auto& jp : doc["points"]) {
    ++index;
    if (!jp.is_array() || jp.size() != dim) {
      throw ParseError("point " + std::to_string(index) + " must be an array of " +
                           std::to_string(dim) + " coordinates",
                       index);
    }
    std::vector<Rational> coords;
    for (const auto& jc : jp) {
      const std::size_t field = coords.size() + 1;
      if (jc.is_number_integer()) {
        coords.emplace_back(jc.is_number_unsigned() ? Rational(jc.get<std::uint64_t>())
                                                    : Rational(jc.get<std::int64_t>()));
      } else if (jc.is_string()) {
        try {
          coords.push_back(Rational::parse(trim(jc.get<std::string>())));
        } catch (const std::exception& e) {
          throw ParseError(e.what(), index, field);
        }
      } else {
        throw ParseError("coordinates must be integers or strings (floats are inexact)", index,
                         field);
      }
    }
    points.emplace_back(std::move(coords));
  }
  return build(dim, std::move(points), std::move(label));
}

std::string write_configuration_json(const Configuration& X) {
  nlohmann::json doc;
  doc["version"] = kConfigFormatVersion;
  doc["dim"] = X.dim();
  doc["label"] = X.label();
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : X.points()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : p.coords()) row.push_back(c.str());
    pts.push_back(std::move(row));
  }
  doc["points"] = std::move(pts);
  return doc.dump(2) + "\n";
}

namespace {

bool is_json(const std::filesystem::path& path) { return path.extension() == ".json"; }

}  // namespace

Configuration load_configuration(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return is_json(path) ? read_configuration_json(buf.str()) : read_configuration(buf.str());
}

void save_configuration(const std::filesystem::path& path, const Configuration& X) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
  out << (is_json(path) ? write_configuration_json(X) : write_configuration(X));
  if (!out) throw InvalidInput("failed writing '" + path.string() + "'");
}

}  // namespace birch

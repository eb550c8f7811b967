#include "planar/render.hpp"

#include <stdexcept>

#include <json.hpp>

#include "planar/coverage.hpp"

namespace planar {

std::string render_ascii(const Basis& a, Rect rect) {
  std::string out;
  out.reserve(static_cast<std::size_t>(rect.area()) * 4);
  for (int y = rect.sy; y >= 0; --y) {
    for (int x = 0; x <= rect.sx; ++x) {
      if (x > 0) out += ' ';
      out += a.contains({x, y}) ? "●" : "·";
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Basis& a, Rect rect) {
  nlohmann::ordered_json j;
  j["rect"] = {rect.sx, rect.sy};
  j["k"] = a.size();
  auto pts = nlohmann::ordered_json::array();
  for (Point p : a) pts.push_back({p.x, p.y});
  j["points"] = std::move(pts);
  const Classification c = classify(a, rect);
  j["flags"] = {{"admissible", c.admissible},
                {"restricted", c.restricted},
                {"is_basis", c.is_basis},
                {"exact", c.exact}};
  return j.dump();
}

std::string render_csv(const Basis& a) {
  std::string out;
  for (Point p : a) {
    out += std::to_string(p.x);
    out += ',';
    out += std::to_string(p.y);
    out += '\n';
  }
  return out;
}

std::string solution_line(const Basis& a) {
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (Point p : a) pts.push_back({p.x, p.y});
  return pts.dump();
}

Basis parse_basis(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("invalid basis JSON: ") +
                                e.what());
  }
  const nlohmann::json* arr = nullptr;
  if (j.is_array()) {
    arr = &j;
  } else if (j.is_object() && j.contains("points")) {
    arr = &j.at("points");
  } else {
    throw std::invalid_argument(
        "basis JSON must be [[x,y],...] or an object with a points field");
  }
  std::vector<Point> pts;
  for (const auto& e : *arr) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("basis point must be a two-element array");
    }
    pts.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return Basis(std::move(pts));
}

Basis parse_points_arg(const std::string& text) {
  std::vector<Point> pts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(pos, end - pos);
    const std::size_t comma = item.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("point must look like x,y: '" + item + "'");
    }
    try {
      pts.push_back(
          {std::stoi(item.substr(0, comma)), std::stoi(item.substr(comma + 1))});
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed point '" + item + "'");
    }
    pos = end + 1;
  }
  if (pts.empty()) throw std::invalid_argument("empty point list");
  return Basis(std::move(pts));
}

}  // namespace planar

#include "core/perm_text.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace invfact {

namespace {

[[noreturn]] void parse_fail(const std::string& what, const std::string& token) {
  throw std::invalid_argument(what + " at '" + token + "'");
}

}  // namespace

Permutation parse_images_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("image form must be a JSON array");
  std::vector<Point> images;
  images.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) {
      parse_fail("image entries must be non-negative integers", v.dump());
    }
    images.push_back(v.get<Point>());
  }
  return Permutation(std::move(images));
}

Permutation parse_cycle_string(const std::string& text, bool one_based,
                               std::size_t min_degree) {
  std::vector<Cycle> cycles;
  std::size_t i = 0;
  const std::size_t len = text.size();
  auto skip_ws = [&] {
    while (i < len && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < len) {
    if (text[i] != '(') parse_fail("expected '('", std::string(1, text[i]));
    ++i;
    Cycle cyc;
    skip_ws();
    while (i < len && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        parse_fail("expected a point label", std::string(1, text[i]));
      }
      std::size_t start = i;
      while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      const std::string token = text.substr(start, i - start);
      unsigned long label = 0;
      try {
        label = std::stoul(token);
      } catch (const std::exception&) {
        parse_fail("point label out of range", token);
      }
      if (one_based) {
        if (label == 0) parse_fail("label 0 is invalid with one-based input", token);
        --label;
      }
      cyc.push_back(static_cast<Point>(label));
      skip_ws();
      if (i < len && text[i] == ',') {
        ++i;
        skip_ws();
        if (i >= len || text[i] == ')') parse_fail("expected a point label", ")");
      }
    }
    if (i >= len) parse_fail("unterminated cycle", text.substr(text.rfind('(')));
    ++i;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  std::size_t degree = min_degree;
  for (const Cycle& cyc : cycles) {
    for (Point x : cyc) degree = std::max<std::size_t>(degree, x + 1);
  }
  return Permutation::from_cycles(degree, cycles);
}

std::string format_cycles(const Permutation& p, bool one_based) {
  std::ostringstream out;
  bool any = false;
  for (const Cycle& cyc : cycle_decomposition(p).cycles) {
    if (cyc.size() < 2) continue;
    any = true;
    out << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i != 0) out << ',';
      out << (one_based ? cyc[i] + 1 : cyc[i]);
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::string format_images_json(const Permutation& p) {
  nlohmann::json j = nlohmann::json::array();
  for (Point y : p.images()) j.push_back(y);
  return j.dump();
}

CycleType parse_cycle_type_spec(const std::string& text) {
  std::map<std::size_t, std::size_t> counts;
  std::size_t n = 0;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) parse_fail("expected k:c", item);
    unsigned long k = 0, c = 0;
    try {
      k = std::stoul(item.substr(0, colon));
      c = std::stoul(item.substr(colon + 1));
    } catch (const std::exception&) {
      parse_fail("expected k:c with integer k, c", item);
    }
    if (k == 0) parse_fail("cycle length must be positive", item);
    if (counts.count(k)) parse_fail("duplicate cycle length", item);
    if (c > 0) counts[k] = c;
    n += k * c;
  }
  return CycleType(n, std::move(counts));
}

}  // namespace invfact

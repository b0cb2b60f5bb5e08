#include "json_writer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace menhir::cli {

namespace {

void write_double(std::ostream& os, double x) {
  if (!std::isfinite(x)) {
    os << "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  os << buf;
}

void newline(std::ostream& os, int indent) { os << '\n' << std::string(static_cast<std::size_t>(indent), ' '); }

}  // namespace

void write_json(std::ostream& os, const nlohmann::ordered_json& value, int indent) {
  using json = nlohmann::ordered_json;
  switch (value.type()) {
    case json::value_t::object: {
      if (value.empty()) {
        os << "{}";
        break;
      }
      os << '{';
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) os << ',';
        first = false;
        newline(os, indent + 2);
        os << json(key).dump() << ": ";
        write_json(os, item, indent + 2);
      }
      newline(os, indent);
      os << '}';
      break;
    }
    case json::value_t::array: {
      if (value.empty()) {
        os << "[]";
        break;
      }
      // Arrays of plain numbers (vectors) stay on one line.
      const bool flat = std::all_of(value.begin(), value.end(), [](const json& v) { return v.is_number(); });
      os << '[';
      bool first = true;
      for (const auto& item : value) {
        if (!first) os << (flat ? ", " : ",");
        first = false;
        if (!flat) newline(os, indent + 2);
        write_json(os, item, indent + 2);
      }
      if (!flat) newline(os, indent);
      os << ']';
      break;
    }
    case json::value_t::number_float:
      write_double(os, value.get<double>());
      break;
    default:
      os << value.dump();
      break;
  }
}

}  // namespace menhir::cli

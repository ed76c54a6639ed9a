#include "qw/jsonfmt.hpp"

#include <sstream>

namespace qw {

namespace {

using ojson = nlohmann::ordered_json;

bool contains_object(const ojson& a) {
  for (const auto& e : a) {
    if (e.is_object()) return true;
    if (e.is_array() && contains_object(e)) return true;
  }
  return false;
}

bool inline_array(const ojson& a) {
  return !contains_object(a) && a.dump().size() <= 60;
}

void emit(std::ostringstream& os, const ojson& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string pad_in(static_cast<std::size_t>(indent) + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) os << ",\n";
      first = false;
      os << pad_in << ojson(key).dump() << ": ";
      emit(os, value, indent + 2);
    }
    os << "\n" << pad << "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      os << "[]";
      return;
    }
    if (inline_array(j)) {
      os << j.dump();
      return;
    }
    os << "[\n";
    bool first = true;
    for (const auto& e : j) {
      if (!first) os << ",\n";
      first = false;
      os << pad_in;
      emit(os, e, indent + 2);
    }
    os << "\n" << pad << "]";
  } else {
    os << j.dump();
  }
}

}  // namespace

std::string pretty_json(const ojson& j) {
  std::ostringstream os;
  emit(os, j, 0);
  os << "\n";
  return os.str();
}

}  // namespace qw

#ifndef QW_JSONFMT_HPP
#define QW_JSONFMT_HPP

#include <string>

#include <json.hpp>

namespace qw {

// Canonical fixture formatting: two-space indent, arrays of primitives kept
// on one line. Serialization then parsing is the identity on fixture files.
std::string pretty_json(const nlohmann::ordered_json& j);

}  // namespace qw

#endif

#include "cgeom/subset.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "cgeom/errors.hpp"

namespace cgeom {

bool ground_order_less(SubsetMask a, SubsetMask b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint32_t diff = a.bits ^ b.bits;
  if (diff == 0) return false;
  // Equal cardinality: the set holding the least differing element comes
  // first in the lexicographic order of sorted index lists.
  return (a.bits & (diff & (~diff + 1))) != 0;
}

void check_label(std::string_view label) {
  if (label.empty()) throw InputError("empty element label");
  if (label == "{}") throw InputError("'{}' is reserved for the empty set");
  for (char c : label) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',')
      throw InputError("label '" + std::string(label) + "' contains whitespace or a comma");
  }
}

GroundSet::GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxGroundSize)
    throw InputError("ground set has " + std::to_string(names_.size()) + " elements; at most " +
                     std::to_string(kMaxGroundSize) + " are supported");
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    check_label(n);
    if (!seen.insert(n).second) throw InputError("duplicate element label '" + n + "'");
  }
}

GroundSet GroundSet::numbered(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return GroundSet(std::move(names));
}

std::optional<std::size_t> GroundSet::index_of(std::string_view label) const {
  auto it = std::find(names_.begin(), names_.end(), label);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

SubsetMask GroundSet::parse_set(std::string_view text) const {
  SubsetMask m;
  if (text == "{}") return m;
  if (text.empty()) throw InputError("empty set must be written as {}");
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view label =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    auto idx = index_of(label);
    if (!idx) throw InputError("unknown element '" + std::string(label) + "'");
    if (m.contains(*idx)) throw InputError("element '" + std::string(label) + "' listed twice");
    m |= SubsetMask::singleton(*idx);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return m;
}

std::string GroundSet::format_set(SubsetMask m) const {
  if (m.empty()) return "{}";
  std::string out;
  for (std::size_t i : m.indices()) {
    if (!out.empty()) out += ',';
    out += names_.at(i);
  }
  return out;
}

}  // namespace cgeom

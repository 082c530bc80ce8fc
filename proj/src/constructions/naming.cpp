#include <stdexcept>

#include "cdgs/constructions.hpp"

namespace cdgs {

std::string flat_name(const std::string& base, const std::vector<std::string>& indices) {
  if (indices.empty()) return base;
  std::string out = base + "__";
  for (std::size_t i = 0; i < indices.size(); ++i) out += (i ? "_" : "") + indices[i];
  return out;
}

std::string flat_name(const std::string& base, std::initializer_list<std::size_t> indices) {
  std::vector<std::string> parts;
  for (auto i : indices) parts.push_back(std::to_string(i));
  return flat_name(base, parts);
}

std::string NameRegistry::fresh(const std::string& wanted) {
  std::string name = wanted;
  for (std::size_t n = 1; taken_.contains(name); ++n) name = wanted + "-" + std::to_string(n);
  taken_.insert(name);
  return name;
}

Mode variant_mode(Variant v, std::size_t k) {
  const int n = static_cast<int>(k);
  return Mode::t_and(v == Variant::exactly ? Mode::exactly(n) : Mode::at_most(n));
}

}  // namespace cdgs

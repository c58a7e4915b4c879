#ifndef HYPERSEQ_IDENTITIES_REGISTRY_HPP
#define HYPERSEQ_IDENTITIES_REGISTRY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hyperseq/identities/registry_core.hpp"
#include "hyperseq/identities/registry_float.hpp"
#include "hyperseq/identities/registry_tables.hpp"

namespace hyperseq {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"core", "table1", "table2", "float"};
  return names;
}

/// Every registered identity, built once.
inline const std::vector<Identity>& registry() {
  static const std::vector<Identity> all = [] {
    std::vector<Identity> v;
    rows::register_core(v);
    rows::register_table1(v);
    rows::register_table2(v);
    rows::register_float(v);
    return v;
  }();
  return all;
}

inline const Identity& find_identity(std::string_view id) {
  for (const auto& e : registry())
    if (e.id == id) return e;
  throw LookupError("unknown identity '" + std::string(id) + "'");
}

}  // namespace hyperseq

#endif  // HYPERSEQ_IDENTITIES_REGISTRY_HPP

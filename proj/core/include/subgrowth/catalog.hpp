#pragma once

#include <string>
#include <vector>

#include "subgrowth/groups.hpp"

namespace subgrowth::groups {

/// Data-driven group catalog. Records are validated at load; new groups
/// with known zeta expressions can be added via the config file without
/// code changes.
class Catalog {
 public:
  /// Catalog shipped with the library (Z1..Z4 and Heis(Z)).
  static Catalog builtin();
  /// Parse a versioned JSON catalog file.
  static Catalog load(const std::string& path);
  static Catalog parse(const std::string& json_text);

  const GroupSpec& get(const std::string& name) const;  // throws on unknown
  bool contains(const std::string& name) const;
  std::vector<std::string> names() const;
  int version() const { return version_; }

 private:
  int version_ = 0;
  std::vector<GroupSpec> specs_;
};

}  // namespace subgrowth::groups

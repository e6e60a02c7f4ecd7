#include "subgrowth/orbits.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace subgrowth::orbits {

namespace {

constexpr int kCacheVersion = 1;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string rows_digest(const nlohmann::json& rows) {
  return std::to_string(fnv1a(rows.dump()));
}

}  // namespace

std::string RowCache::path_for(const std::string& group,
                               std::uint64_t coeff_checksum) const {
  std::ostringstream name;
  name << group << "-" << std::hex << coeff_checksum << ".json";
  return (std::filesystem::path(dir_) / name.str()).string();
}

std::vector<OrbitTable> RowCache::load(const std::string& group,
                                       std::uint64_t coeff_checksum) const {
  last_load_rejected_ = false;
  std::ifstream in(path_for(group, coeff_checksum));
  if (!in) return {};
  try {
    nlohmann::json doc = nlohmann::json::parse(in);
    if (doc.at("version").get<int>() != kCacheVersion ||
        doc.at("group").get<std::string>() != group ||
        doc.at("coeff_checksum").get<std::string>() != std::to_string(coeff_checksum) ||
        doc.at("rows_checksum").get<std::string>() != rows_digest(doc.at("rows"))) {
      last_load_rejected_ = true;
      return {};
    }
    std::vector<OrbitTable> rows;
    for (const auto& r : doc.at("rows")) {
      OrbitTable row;
      row.group = group;
      row.n = static_cast<int>(r.size()) - 1;
      for (const auto& cell : r) row.A.emplace_back(cell.get<std::string>());
      rows.push_back(std::move(row));
    }
    // rows must be contiguous from n = 0
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].n != static_cast<int>(i)) {
        last_load_rejected_ = true;
        return {};
      }
    return rows;
  } catch (const std::exception&) {
    last_load_rejected_ = true;
    return {};
  }
}

void RowCache::store(const std::string& group, std::uint64_t coeff_checksum,
                     const std::vector<OrbitTable>& rows) const {
  std::filesystem::create_directories(dir_);
  nlohmann::json jrows = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& a : row.A) r.push_back(a.get_str());
    jrows.push_back(std::move(r));
  }
  nlohmann::json doc;
  doc["version"] = kCacheVersion;
  doc["group"] = group;
  doc["coeff_checksum"] = std::to_string(coeff_checksum);
  doc["rows_checksum"] = rows_digest(jrows);
  doc["rows"] = std::move(jrows);
  std::ofstream out(path_for(group, coeff_checksum));
  out << doc.dump();
}

}  // namespace subgrowth::orbits

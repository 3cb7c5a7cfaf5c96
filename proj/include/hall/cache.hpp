#pragma once

// On-disk Hall tables: one file per (engine, q, grade), versioned and
// checksummed, replaced atomically. Unreadable or mismatched files are
// ignored and rewritten.

#include <atomic>
#include <filesystem>
#include <optional>
#include <string>

#include "hall/repengine.hpp"

namespace hall {

inline constexpr const char* kHallTableVersion = "hall-tables-1";

/// Kind-qualified engine key, e.g. `nil-C2nil`, `brute-K2`.
std::string engine_cache_key(const Engine& e);

std::string serialize_tables(const Engine& e, const DimVector& d, const GradeTables& tables);
/// nullopt on any header, checksum or content mismatch.
std::optional<GradeTables> parse_tables(const Engine& e, const DimVector& d, const std::string& text);

class FileHallStore : public HallTableStore {
 public:
  /// Creates the directory if needed; throws std::invalid_argument if it is not writable.
  explicit FileHallStore(std::filesystem::path dir);

  std::optional<GradeTables> load(const Engine& e, const DimVector& d) override;
  void save(const Engine& e, const DimVector& d, const GradeTables& tables) override;

  std::filesystem::path path_for(const Engine& e, const DimVector& d) const;
  long hits() const { return hits_; }
  long misses() const { return misses_; }
  long rejected() const { return rejected_; }

 private:
  std::filesystem::path dir_;
  std::atomic<long> hits_{0}, misses_{0}, rejected_{0};
};

}  // namespace hall

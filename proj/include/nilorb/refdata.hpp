#pragma once

// Reference tables of nilpotent orbits in the exceptional algebras, loaded
// from the JSON files under data/refdata (format: docs/refdata.md).

#include "nilorb/orbits.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nilorb {

class RefDataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct OrbitRecord {
  TypeRank type;
  std::string label;
  std::vector<std::string> aliases;
  WeightedDynkinDiagram diagram;
  bool reachable = false;
  bool strongly_reachable = false;
  bool rigid = false;
  std::string rigid_source; // reachable-table | bullet-list | not-rigid-inferred
  int dim_ce = 0;
  std::vector<int> ce_weights; // ascending
  std::optional<std::pair<int, int>> bullet_pair; // (dim g_e, dim [g_e, g_e])
};

struct ExceptionRecord {
  TypeRank type;
  std::string label;
  WeightedDynkinDiagram diagram;
  int sheet_rank = 0;
  int dim_ce = 0;
};

class RefData {
public:
  /// Reads G2, F4, E6, E7, E8 and exceptions.json from `dir`; validates counts
  /// and internal consistency.
  static RefData load(const std::filesystem::path& dir);

  /// Types with a table.
  static std::vector<TypeRank> types();

  const std::vector<OrbitRecord>& orbits(const TypeRank& t) const;
  /// Throws RefDataError for an unknown diagram.
  const OrbitRecord& lookup(const TypeRank& t, const WeightedDynkinDiagram& d) const;
  /// Matches the label or any alias; null if none. G2's A1 and ~A1 are
  /// ambiguous between conventions, and resolve to the primary label.
  const OrbitRecord* find_label(const TypeRank& t, const std::string& label) const;
  const std::vector<ExceptionRecord>& exceptions() const { return exceptions_; }

private:
  std::map<std::string, std::vector<OrbitRecord>> orbits_;
  std::vector<ExceptionRecord> exceptions_;
};

/// $NILORB_REFDATA if set, else the directory compiled into the build.
std::filesystem::path default_refdata_dir();

} // namespace nilorb

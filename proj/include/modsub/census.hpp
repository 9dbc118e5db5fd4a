#ifndef MODSUB_CENSUS_HPP
#define MODSUB_CENSUS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "modsub/counting.hpp"
#include "modsub/enumerator.hpp"

namespace modsub {

inline constexpr int kCensusSchemaVersion = 1;

/// Extra fields carried by conjugacy-class records.
struct ClassFields {
  std::uint32_t aut_order = 1;
  std::uint64_t class_size = 1;
  bool chiral = false;

  friend bool operator==(const ClassFields&, const ClassFields&) = default;
};

/// One JSONL line of a census file.
struct CensusRecord {
  int schema_version = kCensusSchemaVersion;
  std::uint32_t mu = 0;
  std::vector<point_t> phi;
  std::vector<point_t> psi;
  std::uint32_t g = 0;
  std::uint32_t e2 = 0;
  std::uint32_t e3 = 0;
  std::uint32_t h = 0;
  std::vector<std::uint32_t> cusp_split;
  std::string canonical_key;
  std::optional<ClassFields> class_fields;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

class CensusFormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

CensusRecord make_record(const RootedClass& rc);
CensusRecord make_record(const ConjClass& c);

/// Single-line JSON, fields in declaration order, no trailing newline.
std::string to_json_line(const CensusRecord& record);
/// Throws CensusFormatError on malformed input.
CensusRecord from_json_line(std::string_view line);

/// Recomputes every derived field from (phi, psi) and compares. Returns the
/// first mismatch as a message, or nullopt when the record is consistent.
std::optional<std::string> check_record(const CensusRecord& record);

void write_jsonl(std::ostream& out, const std::vector<CensusRecord>& records);
/// Reads all lines; with `recompute` each record must also pass check_record.
std::vector<CensusRecord> read_jsonl(std::istream& in, bool recompute = true);

/// Rows of published (index, rooted count, class count) values.
struct GoldenRow {
  std::uint32_t genus = 0;
  std::uint32_t mu = 0;
  BigCount rooted;
  BigCount classes;
  /// False for a class count known to be inconsistent with its rooted count.
  bool classes_authoritative = true;
};

class GoldenTable {
public:
  /// Whitespace-separated "genus mu rooted classes [non-authoritative]" lines;
  /// '#' starts a comment. Throws CensusFormatError.
  static GoldenTable parse(std::string_view text);
  /// The table compiled into the library from data/golden_tables.txt.
  static const GoldenTable& builtin();

  const std::vector<GoldenRow>& rows() const noexcept { return rows_; }
  std::vector<GoldenRow> rows_for_genus(std::uint32_t genus) const;

private:
  std::vector<GoldenRow> rows_;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  /// Not evaluated (non-authoritative reference value); counts as passing.
  bool skipped = false;
  std::string expected;
  std::string actual;
};

struct VerifyConfig {
  std::uint32_t max_index = 24;
  bool include_genus1 = false;
  SearchOptions search;
  /// Search cutoffs; larger indices are formula-only.
  std::uint32_t genus0_search_limit = 24;
  std::uint32_t genus1_search_limit = 18;
};

/// Formula-vs-table for every genus-0 row with mu <= 60, search-vs-formula for
/// 6 | mu <= min(max_index, genus0_search_limit), and, when enabled, genus-1
/// search-vs-table for mu <= min(max_index, genus1_search_limit), skipping
/// non-authoritative class counts.
std::vector<CheckResult> run_verification(const VerifyConfig& config, const GoldenTable& golden);

/// "PASS name" / "FAIL name: expected X, got Y" lines plus a summary line.
void print_report(std::ostream& out, const std::vector<CheckResult>& results);
std::string report_json(const std::vector<CheckResult>& results);

/// Conjugacy classes for (mu, filter), as records sorted by key.
std::vector<CensusRecord> class_census(std::size_t mu, const SearchFilter& filter, const SearchOptions& options = {});
std::vector<CensusRecord> rooted_census(std::size_t mu, const SearchFilter& filter, const SearchOptions& options = {});

/// Cusp splits with multiplicity and chirality, one line each.
void print_class_summary(std::ostream& out, const std::vector<CensusRecord>& classes);

}  // namespace modsub

#endif  // MODSUB_CENSUS_HPP

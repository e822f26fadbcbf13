#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subcode/code.hpp"
#include "subcode/decomposition.hpp"
#include "subcode/lattice.hpp"
#include "subcode/search.hpp"

// JSON documents exchanged with the command-line tool. Every top-level
// document carries "schema": "v1". Field elements are written as their dense
// codes (base-p digits are the polynomial coefficients).
namespace subcode::io {

inline constexpr std::string_view kSchema = "v1";

// Strict parsing rejects word bases that are not already in reduced row
// echelon form; lenient parsing row-reduces whatever spans it is given.
enum class ParseMode { Strict, Lenient };

std::string write_field(const Field& field);
Field read_field(std::string_view text, int max_order = kDefaultMaxFieldOrder);

std::string write_subspace(const Subspace& s);
Subspace read_subspace(std::string_view text, ParseMode mode = ParseMode::Strict);

// {"schema","field","n","words":[{"basis":[[...]]}],"table":[[...]]}; the
// table is omitted when the code has none.
std::string write_code(const SubspaceCode& code, int indent = 2);
SubspaceCode read_code(std::string_view text, ParseMode mode = ParseMode::Strict);

std::string write_search_config(const SearchConfig& config);
SearchConfig read_search_config(std::string_view text);

struct RunConfig {
  std::string command;
  int p = 2;
  int m = 1;
  std::vector<int> modulus;
  int n = 0;
  std::optional<int> k;
  std::string input;
  std::string output;
  bool strict = true;
  int parallel_width = 1;
  double time_budget_s = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::string> checks;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

std::string write_run_config(const RunConfig& config);
RunConfig read_run_config(std::string_view text);

std::string write_check_report(const CheckReport& report);
std::string write_lattice_profile(const LatticeProfile& profile, const std::vector<Subspace>& elements);
std::string describe_profile(const LatticeProfile& profile);
std::string write_decomposition(const SubspaceCode& code, const Decomposition& d);
std::string write_bases(const SubspaceCode& code, const BasisReport& bases);

// Check families the verify command can run.
enum class CheckFamily { Linearity, Closure, Lemmas, Uit, Lattice, Decomposition };

std::vector<CheckFamily> parse_check_selector(std::string_view selector);
std::string_view family_name(CheckFamily family) noexcept;

struct VerifyResult {
  bool passed = true;
  std::vector<std::pair<CheckFamily, CheckReport>> reports;
  std::optional<LatticeProfile> lattice;
  std::vector<std::string> summary;  // one human-readable line per family
  std::string json;
};

// Runs the selected families. Families whose preconditions fail (for example
// the lattice of a code not closed under intersection) are recorded as
// failures with the reason, not thrown.
VerifyResult verify_code(const SubspaceCode& code, const std::vector<CheckFamily>& families);

// Verification stamp stored with each catalog entry.
struct CatalogStatus {
  bool linear = false;
  bool lemmas = false;
  bool closed = false;

  friend bool operator==(const CatalogStatus&, const CatalogStatus&) = default;
};

CatalogStatus compute_status(const SubspaceCode& code);

struct CatalogEntry {
  std::string id;  // 16 hex digits, FNV-1a over the compact code document
  CatalogStatus status;
  SubspaceCode code;
};

std::string content_id(const SubspaceCode& code);
std::string catalog_line(const SubspaceCode& code);
// Appends one line per code; the file is created when missing.
void append_catalog(const std::filesystem::path& path, const std::vector<SubspaceCode>& codes);
// Re-derives every id; with ParseMode::Strict also recomputes the status stamp.
// Any disagreement throws CatalogMismatch naming the line.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path, ParseMode mode = ParseMode::Strict);

std::string write_search_summary(const SearchOutcome& outcome);
std::string write_conjecture_report(const ConjectureReport& report);

}  // namespace subcode::io

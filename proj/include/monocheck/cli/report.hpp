#pragma once

#include "monocheck/families.hpp"
#include "monocheck/monogenity.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace monocheck::cli {

using Timings = std::vector<std::pair<std::string, double>>;  // label, milliseconds

/// Stable schema: input, k, verdict, witness, reasons, conditions, certificates, timings.
nlohmann::json report_json(const MonogenityReport& r, const std::string& input, std::uint64_t k, const Timings& timings = {});
std::string report_text(const MonogenityReport& r, const std::string& input, std::uint64_t k, const Timings& timings = {});

/// Witness prime as text, "-" when absent.
std::string witness_text(const MonogenityReport& r);
/// Reason code, the inconclusive cause, or "-".
std::string reason_text(const MonogenityReport& r);

/// One sweep record: params, k, verdict, witness, reason.
struct FamilyRow {
  std::string params;
  std::uint64_t k;
  std::string verdict;
  std::string witness;
  std::string reason;
};

FamilyRow family_row(const std::string& params, std::uint64_t k, const FamilyOutcome& outcome);
std::string row_tsv(const FamilyRow& row);
nlohmann::json row_json(const FamilyRow& row);

}  // namespace monocheck::cli

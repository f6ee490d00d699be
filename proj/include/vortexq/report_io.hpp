#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "vortexq/classes.hpp"
#include "vortexq/hrr.hpp"
#include "vortexq/oracle.hpp"

namespace vortexq {

enum class OutputFormat { human, json, csv };

OutputFormat parse_format(std::string_view text);

/// Exact numbers are always carried as decimal strings.
nlohmann::json class_to_json(const CohomologyClass& c);
nlohmann::json report_to_json(const DimensionReport& report);
nlohmann::json verification_to_json(const oracle::VerificationReport& report);

/// One grid point of a parameter table.
struct TableRow {
  DimensionReport report;
  bool paths_agree = true;
};

/// Like vortex_dimension, but a route mismatch is recorded instead of thrown.
TableRow evaluate_row(const ModuliParams& p);

nlohmann::json row_to_json(const TableRow& row);
std::string csv_header();
std::string row_to_csv(const TableRow& row);

void write_human(std::ostream& os, const DimensionReport& report);
void write_classes_human(std::ostream& os, const ModuliParams& p);
nlohmann::json classes_to_json(const ModuliParams& p);

/// Canonical serialisation: sorted keys, two-space indent, trailing newline.
std::string dump_json(const nlohmann::json& value);

}  // namespace vortexq

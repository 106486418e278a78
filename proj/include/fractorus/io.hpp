#pragma once
//
// Serialization for fields and reports.
//
// GridField CSV: first line is a JSON comment header
//     # {"dim":1,"m":64,"layout":"row-major","origin":"-pi-exclusive"}
// followed by a column-header row and one `x1,…,xn,value` row per grid point
// in row-major order (last axis fastest).  The coordinate columns are
// informative; ingestion trusts the declared order.
//
// JSON forms use the same layout keys; FourierField coefficients are rows
// [ν₁,…,ν_n, re, im] over the full mode cube.
//
#include <string>
#include <vector>

#include "json.hpp"

#include "fractorus/extension.hpp"
#include "fractorus/fields.hpp"
#include "fractorus/pointwise.hpp"
#include "fractorus/regularity.hpp"

namespace fractorus {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

std::string field_to_csv(const GridField& f);
void write_field_csv(const std::string& path, const GridField& f);
GridField read_field_csv(const std::string& path);

nlohmann::json field_to_json(const GridField& f);
GridField field_from_json(const nlohmann::json& j);

nlohmann::json fourier_to_json(const FourierField& F);
FourierField fourier_from_json(const nlohmann::json& j);

nlohmann::json slice_to_json(const ExtensionSlice& slice);
nlohmann::json trace_report_to_json(const TraceReport& rep);
nlohmann::json seminorm_report_to_json(const SeminormReport& rep);
nlohmann::json limit_scan_to_json(const LimitScanReport& rep);

// Plain numeric table: `columns` CSV header then one row per entry.
std::string table_to_csv(const std::vector<std::string>& columns,
                         const std::vector<std::vector<double>>& rows);

} // namespace fractorus

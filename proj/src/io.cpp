#include "fractorus/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "fractorus/errors.hpp"

namespace fractorus {

namespace {

using nlohmann::json;

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

} // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path);
    out << content;
    if (!out) throw InputError("write failed: " + path);
}

std::string field_to_csv(const GridField& f) {
    f.validate();
    std::ostringstream os;
    os << "# {\"dim\":" << f.spec.dim << ",\"m\":" << f.spec.m
       << ",\"layout\":\"row-major\",\"origin\":\"-pi-exclusive\"}\n";
    for (int d = 0; d < f.spec.dim; ++d) os << 'x' << (d + 1) << ',';
    os << "value\n";
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const auto x = f.spec.point(i);
        for (int d = 0; d < f.spec.dim; ++d) os << format_double(x[d]) << ',';
        os << format_double(f.values[i]) << '\n';
    }
    return os.str();
}

void write_field_csv(const std::string& path, const GridField& f) {
    write_text_file(path, field_to_csv(f));
}

GridField read_field_csv(const std::string& path) {
    std::istringstream in(read_text_file(path));
    std::string line;
    if (!std::getline(in, line) || line.size() < 2 || line[0] != '#')
        throw InputError("field CSV missing '# {...}' header: " + path);
    json header;
    try {
        header = json::parse(line.substr(1));
    } catch (const json::exception& e) {
        throw InputError("field CSV header is not valid JSON: " + std::string(e.what()));
    }
    GridSpec spec;
    spec.dim = header.at("dim").get<int>();
    spec.m = header.at("m").get<int>();
    spec.validate();
    if (header.value("layout", "row-major") != "row-major")
        throw InputError("field CSV: unsupported layout");

    if (!std::getline(in, line)) throw InputError("field CSV truncated: " + path);
    GridField f = GridField::zeros(spec);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        if (!std::getline(in, line))
            throw InputError("field CSV: expected " + std::to_string(f.values.size()) +
                             " rows, got " + std::to_string(i));
        const auto pos = line.find_last_of(',');
        const std::string cell = (pos == std::string::npos) ? line : line.substr(pos + 1);
        try {
            f.values[i] = std::stod(cell);
        } catch (const std::exception&) {
            throw InputError("field CSV: bad value in row " + std::to_string(i + 1));
        }
    }
    return f;
}

nlohmann::json field_to_json(const GridField& f) {
    f.validate();
    return json{{"dim", f.spec.dim},
                {"m", f.spec.m},
                {"layout", "row-major"},
                {"origin", "-pi-exclusive"},
                {"values", f.values}};
}

GridField field_from_json(const nlohmann::json& j) {
    GridSpec spec;
    spec.dim = j.at("dim").get<int>();
    spec.m = j.at("m").get<int>();
    spec.validate();
    GridField f = GridField::zeros(spec);
    const auto& vals = j.at("values");
    if (vals.size() != f.values.size())
        throw InputError("field JSON: values length mismatch");
    for (std::size_t i = 0; i < f.values.size(); ++i) f.values[i] = vals[i].get<double>();
    f.validate();
    return f;
}

nlohmann::json fourier_to_json(const FourierField& F) {
    F.validate();
    json rows = json::array();
    for (std::size_t idx = 0; idx < F.coeffs.size(); ++idx) {
        const auto nu = F.unflatten(idx);
        json row = json::array();
        for (int d = 0; d < F.dim; ++d) row.push_back(nu[d]);
        row.push_back(F.coeffs[idx].real());
        row.push_back(F.coeffs[idx].imag());
        rows.push_back(std::move(row));
    }
    return json{{"dim", F.dim}, {"mode_radius", F.mode_radius}, {"coeffs", rows}};
}

FourierField fourier_from_json(const nlohmann::json& j) {
    FourierField F =
        FourierField::zeros(j.at("dim").get<int>(), j.at("mode_radius").get<int>());
    const auto& rows = j.at("coeffs");
    if (rows.size() != F.coeffs.size())
        throw InputError("fourier JSON: coefficient count mismatch");
    for (const auto& row : rows) {
        if (row.size() != static_cast<std::size_t>(F.dim) + 2)
            throw InputError("fourier JSON: bad row width");
        std::array<int, 3> nu{0, 0, 0};
        for (int d = 0; d < F.dim; ++d) nu[d] = row[d].get<int>();
        F.coeffs[F.flatten(nu)] = {row[F.dim].get<double>(),
                                   row[F.dim + 1].get<double>()};
    }
    F.validate();
    return F;
}

nlohmann::json slice_to_json(const ExtensionSlice& slice) {
    slice.validate();
    json per_y = json::array();
    for (std::size_t j = 0; j < slice.y_grid.size(); ++j) {
        json row = json::array();
        for (std::size_t idx = 0; idx < slice.mode_count(); ++idx) {
            const auto v = slice.at(j, idx);
            row.push_back(json::array({v.real(), v.imag()}));
        }
        per_y.push_back(std::move(row));
    }
    return json{{"gamma", slice.gamma},
                {"y_grid", slice.y_grid},
                {"source", fourier_to_json(slice.source)},
                {"modes", per_y}};
}

nlohmann::json trace_report_to_json(const TraceReport& rep) {
    return json{{"gamma", rep.gamma},
                {"mu", rep.mu},
                {"sup_error", rep.sup_error},
                {"recovered", fourier_to_json(rep.recovered)},
                {"reference", fourier_to_json(rep.reference)},
                {"y_used", rep.y_used},
                {"trace_sup_seq", rep.trace_sup_seq}};
}

nlohmann::json seminorm_report_to_json(const SeminormReport& rep) {
    json j{{"kind", rep.kind}, {"value", rep.value}, {"k_used", rep.k_used}};
    if (rep.beta > 0.0) j["beta"] = rep.beta;
    if (rep.alpha > 0.0) j["alpha"] = rep.alpha;
    if (!rep.t_grid.empty()) {
        j["t_grid"] = rep.t_grid;
        j["argmax_t"] = rep.argmax_t;
    } else {
        j["argmax_x"] = rep.argmax_x;
        j["argmax_h"] = rep.argmax_h;
    }
    return j;
}

nlohmann::json limit_scan_to_json(const LimitScanReport& rep) {
    return json{{"sigmas", rep.sigmas},
                {"sup_errors", rep.sup_errors},
                {"target", rep.target},
                {"monotone", rep.monotone}};
}

std::string table_to_csv(const std::vector<std::string>& columns,
                         const std::vector<std::vector<double>>& rows) {
    std::ostringstream os;
    for (std::size_t c = 0; c < columns.size(); ++c)
        os << columns[c] << (c + 1 < columns.size() ? "," : "");
    os << '\n';
    for (const auto& row : rows) {
        if (row.size() != columns.size())
            throw InputError("table_to_csv: row width mismatch");
        for (std::size_t c = 0; c < row.size(); ++c)
            os << format_double(row[c]) << (c + 1 < row.size() ? "," : "");
        os << '\n';
    }
    return os.str();
}

} // namespace fractorus

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "fractorus/builtins.hpp"
#include "fractorus/io.hpp"
#include "fractorus/spectral.hpp"

using namespace fractorus;
namespace fs = std::filesystem;

namespace {

struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& stem) {
        path = fs::temp_directory_path() / (stem + "-" + std::to_string(::getpid()) + ".tmp");
    }
    ~TempFile() {
        std::error_code ec;
        fs::remove(path, ec);
    }
};

} // namespace

TEST_CASE("field CSV: header format and bit-exact roundtrip") {
    GridSpec s{1, 8};
    GridField f = builtin_field("gauss:0.8", s);
    const std::string csv = field_to_csv(f);
    CHECK(csv.rfind("# {\"dim\":1,\"m\":8,\"layout\":\"row-major\",\"origin\":\"-pi-exclusive\"}\n",
                    0) == 0);
    TempFile tmp("field-roundtrip");
    write_field_csv(tmp.path.string(), f);
    GridField g = read_field_csv(tmp.path.string());
    REQUIRE(g.spec.dim == f.spec.dim);
    REQUIRE(g.spec.m == f.spec.m);
    for (std::size_t i = 0; i < f.values.size(); ++i) CHECK(g.values[i] == f.values[i]);
}

TEST_CASE("field CSV: 2D roundtrip preserves row-major order") {
    GridSpec s{2, 6};
    GridField f = builtin_field("cos_x1_cos_x2", s);
    f.values[7] = 0.1234567890123456789;  // make the order detectable
    TempFile tmp("field-roundtrip-2d");
    write_field_csv(tmp.path.string(), f);
    GridField g = read_field_csv(tmp.path.string());
    for (std::size_t i = 0; i < f.values.size(); ++i) CHECK(g.values[i] == f.values[i]);
}

TEST_CASE("field CSV ingestion: malformed inputs are rejected") {
    GridSpec s{1, 8};
    GridField f = builtin_field("cosx", s);
    const std::string good = field_to_csv(f);

    TempFile tmp("field-bad");
    write_text_file(tmp.path.string(), good.substr(2));  // strip the '# ' marker
    CHECK_THROWS_AS(read_field_csv(tmp.path.string()), InputError);

    write_text_file(tmp.path.string(), "# {oops\n" + good.substr(good.find('\n') + 1));
    CHECK_THROWS_AS(read_field_csv(tmp.path.string()), InputError);

    const auto last_row = good.find_last_of('\n', good.size() - 2);
    write_text_file(tmp.path.string(), good.substr(0, last_row + 1));  // drop one row
    CHECK_THROWS_AS(read_field_csv(tmp.path.string()), InputError);

    std::string bad_cell = good;
    bad_cell.replace(bad_cell.find_last_of(',') + 1, 4, "zzzz");
    write_text_file(tmp.path.string(), bad_cell);
    CHECK_THROWS_AS(read_field_csv(tmp.path.string()), InputError);

    CHECK_THROWS_AS(read_field_csv("/nonexistent/no-such-file.csv"), InputError);
}

TEST_CASE("field JSON: roundtrip through dump/parse and length guard") {
    GridSpec s{2, 4};
    GridField f = builtin_field("gauss:1.5", s);
    nlohmann::json j = nlohmann::json::parse(field_to_json(f).dump());
    GridField g = field_from_json(j);
    REQUIRE(g.spec.dim == 2);
    REQUIRE(g.spec.m == 4);
    for (std::size_t i = 0; i < f.values.size(); ++i) CHECK(g.values[i] == f.values[i]);
    j["values"].erase(j["values"].size() - 1);
    CHECK_THROWS_AS(field_from_json(j), InputError);
}

TEST_CASE("fourier JSON: roundtrip and structural guards") {
    GridSpec s{1, 8};
    FourierField F = to_fourier(builtin_field("gauss:0.8", s));
    nlohmann::json j = nlohmann::json::parse(fourier_to_json(F).dump());
    FourierField G = fourier_from_json(j);
    REQUIRE(G.dim == F.dim);
    REQUIRE(G.mode_radius == F.mode_radius);
    for (std::size_t i = 0; i < F.coeffs.size(); ++i) CHECK(G.coeffs[i] == F.coeffs[i]);

    nlohmann::json bad_row = fourier_to_json(F);
    bad_row["coeffs"][0].erase(bad_row["coeffs"][0].size() - 1);
    CHECK_THROWS_AS(fourier_from_json(bad_row), InputError);

    nlohmann::json bad_count = fourier_to_json(F);
    bad_count["coeffs"].erase(bad_count["coeffs"].size() - 1);
    CHECK_THROWS_AS(fourier_from_json(bad_count), InputError);
}

TEST_CASE("table_to_csv: exact layout and width guard") {
    const std::string csv = table_to_csv({"a", "b"}, {{1.0, 0.5}, {2.0, 0.25}});
    CHECK(csv == "a,b\n1,0.5\n2,0.25\n");
    CHECK_THROWS_AS(table_to_csv({"a", "b"}, {{1.0}}), InputError);
}

TEST_CASE("builtin registry: names, aliases, and rejections") {
    GridSpec s{1, 16};
    for (const std::string& name : builtin_examples()) CHECK(is_builtin_name(name));
    CHECK_FALSE(is_builtin_name("wavelet"));
    CHECK_THROWS_AS(builtin_field("wavelet", s), InputError);

    GridField a = builtin_field("cosx", s);
    GridField b = builtin_field("cos1x", s);
    for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(a.values[i] == b.values[i]);

    CHECK_NOTHROW(builtin_field("cos7x", s));           // m/2 - 1 = 7 is the top mode
    CHECK_THROWS_AS(builtin_field("cos8x", s), InputError);
    CHECK_THROWS_AS(builtin_field("cos0x", s), InputError);
    CHECK_THROWS_AS(builtin_field("gauss:5", s), InputError);
    CHECK_THROWS_AS(builtin_field("gauss:0", s), InputError);
    CHECK_THROWS_AS(builtin_field("cos_x1_cos_x2", s), InputError);  // needs dim >= 2
    GridSpec s2{2, 8};
    CHECK_THROWS_AS(builtin_field("cos_x1_cos_x2_cos_x3", s2), InputError);
    CHECK_NOTHROW(builtin_field("cos_x1_cos_x2", s2));

    // Peak normalization of the periodized Gaussian: 1 at the origin.
    GridField g = builtin_field("gauss:0.8", s);
    double peak = 0.0;
    for (double v : g.values) peak = std::max(peak, v);
    CHECK(peak == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("report serializers: key coverage") {
    TraceReport rep;
    rep.gamma = 0.5;
    rep.mu = -1.0;
    rep.recovered = FourierField::zeros(1, 2);
    rep.reference = FourierField::zeros(1, 2);
    rep.y_used = {1e-4, 2e-4};
    rep.trace_sup_seq = {1e-8, 1e-7};
    nlohmann::json jt = trace_report_to_json(rep);
    for (const char* key :
         {"gamma", "mu", "sup_error", "recovered", "reference", "y_used", "trace_sup_seq"})
        CHECK(jt.contains(key));

    SeminormReport pairs;
    pairs.kind = "zygmund";
    pairs.value = 1.0;
    nlohmann::json jp = seminorm_report_to_json(pairs);
    CHECK(jp.contains("kind"));
    CHECK(jp.contains("value"));
    CHECK(jp.contains("argmax_x"));
    CHECK(jp.contains("argmax_h"));
    CHECK_FALSE(jp.contains("t_grid"));

    SeminormReport semi;
    semi.kind = "heat_lambda";
    semi.value = 0.4;
    semi.beta = 1.0;
    semi.k_used = 1;
    semi.t_grid = {0.1, 1.0};
    semi.argmax_t = 0.5;
    nlohmann::json js = seminorm_report_to_json(semi);
    CHECK(js.contains("beta"));
    CHECK(js.contains("t_grid"));
    CHECK(js.contains("argmax_t"));
    CHECK_FALSE(js.contains("argmax_x"));

    LimitScanReport scan;
    scan.sigmas = {0.5, 0.2};
    scan.sup_errors = {1e-3, 1e-4};
    scan.target = "f-mean";
    scan.monotone = true;
    nlohmann::json jl = limit_scan_to_json(scan);
    for (const char* key : {"sigmas", "sup_errors", "target", "monotone"})
        CHECK(jl.contains(key));
    CHECK(jl["monotone"].get<bool>());
}

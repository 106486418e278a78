#include "fractorus/builtins.hpp"

#include <cmath>

#include "fractorus/errors.hpp"
#include "fractorus/special.hpp"

namespace fractorus {

namespace {

bool parse_cos_mode(const std::string& name, int& k) {
    if (name == "cosx") {  // spelled-out alias for cos1x
        k = 1;
        return true;
    }
    if (name.size() < 5 || name.compare(0, 3, "cos") != 0 || name.back() != 'x')
        return false;
    const std::string digits = name.substr(3, name.size() - 4);
    if (digits.empty()) return false;
    for (char c : digits)
        if (c < '0' || c > '9') return false;
    k = std::stoi(digits);
    return true;
}

bool parse_gauss(const std::string& name, double& w) {
    if (name.compare(0, 6, "gauss:") != 0) return false;
    try {
        std::size_t used = 0;
        w = std::stod(name.substr(6), &used);
        return used == name.size() - 6;
    } catch (const std::exception&) {
        return false;
    }
}

double periodized_gaussian_1d(double x, double w) {
    double acc = 0.0;
    for (int j = -8; j <= 8; ++j) {
        const double d = (x - 2.0 * kPi * j) / w;
        acc += std::exp(-0.5 * d * d);
    }
    return acc;
}

} // namespace

bool is_builtin_name(const std::string& name) {
    int k;
    double w;
    return name == "const" || name == "cos_x1_cos_x2" ||
           name == "cos_x1_cos_x2_cos_x3" || parse_cos_mode(name, k) ||
           parse_gauss(name, w);
}

GridField builtin_field(const std::string& name, const GridSpec& spec) {
    spec.validate();
    GridField f = GridField::zeros(spec);

    if (name == "const") {
        for (double& v : f.values) v = 1.0;
        return f;
    }
    int k = 0;
    if (parse_cos_mode(name, k)) {
        if (k < 1 || k > spec.m / 2 - 1)
            throw InputError("builtin_field: mode " + std::to_string(k) +
                             " not resolvable on an m=" + std::to_string(spec.m) + " grid");
        for (std::size_t i = 0; i < f.values.size(); ++i)
            f.values[i] = std::cos(k * spec.point(i)[0]);
        return f;
    }
    if (name == "cos_x1_cos_x2" || name == "cos_x1_cos_x2_cos_x3") {
        const int want = (name == "cos_x1_cos_x2") ? 2 : 3;
        if (spec.dim < want)
            throw InputError("builtin_field: '" + name + "' needs dim >= " +
                             std::to_string(want));
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            const auto x = spec.point(i);
            double v = std::cos(x[0]) * std::cos(x[1]);
            if (want == 3) v *= std::cos(x[2]);
            f.values[i] = v;
        }
        return f;
    }
    double w = 0.0;
    if (parse_gauss(name, w)) {
        if (!(w > 0.0 && w <= 3.0))
            throw InputError("builtin_field: gauss width must lie in (0,3]");
        const double peak = std::pow(periodized_gaussian_1d(0.0, w), spec.dim);
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            const auto x = spec.point(i);
            double v = 1.0;
            for (int d = 0; d < spec.dim; ++d) v *= periodized_gaussian_1d(x[d], w);
            f.values[i] = v / peak;
        }
        return f;
    }
    throw InputError("builtin_field: unknown field name '" + name +
                     "' (try: const, cos2x, cos_x1_cos_x2, gauss:0.8)");
}

std::vector<std::string> builtin_examples() {
    return {"const", "cosx", "cos2x", "cos_x1_cos_x2", "cos_x1_cos_x2_cos_x3",
            "gauss:0.8"};
}

} // namespace fractorus

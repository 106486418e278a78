// fractorus benchmark — times the OpenMP-parallel code paths against the
// serial ones (every parallel kernel keeps a serial mode for testing) and
// cross-checks that both produce the same numbers.
//
// Usage: fractorus_bench [repetitions]
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fractorus/builtins.hpp"
#include "fractorus/extension.hpp"
#include "fractorus/fields.hpp"
#include "fractorus/parallel.hpp"
#include "fractorus/pointwise.hpp"
#include "fractorus/regularity.hpp"
#include "fractorus/spectral.hpp"

using namespace fractorus;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Case {
    std::string name;
    // Runs the workload once; returns a checksum so results can be compared
    // between the serial and parallel executions.
    std::function<double(bool parallel)> run;
};

} // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 1;

    std::vector<Case> cases;

    {
        const GridSpec spec{2, 32};
        const GridField f = builtin_field("cos_x1_cos_x2", spec);
        cases.push_back({"pointwise plan build (2D, M=32, sigma=0.7)", [=](bool par) {
                             PVConfig cfg;
                             const double delta = choose_delta(f, 0.7, cfg);
                             const PointwisePlan plan = build_pointwise_plan(
                                 spec, 0.7, delta, cfg.taylor_order, cfg.kernel,
                                 /*keep_nodes=*/false, par);
                             double sum = 0.0;
                             for (double s : plan.symbol) sum += s;
                             return sum;
                         }});
    }
    {
        const GridSpec spec{2, 48};
        const GridField f = builtin_field("gauss:0.9", spec);
        cases.push_back({"holder seminorm (2D, M=48, k=1)", [=](bool par) {
                             return holder_seminorm(f, 1, 0.7, par).value;
                         }});
    }
    {
        const GridSpec spec{1, 64};
        const GridField f = builtin_field("gauss:0.8", spec);
        const FourierField F = to_fourier(f);
        cases.push_back({"extension solve + trace (1D, M=64, gamma=0.7)", [=](bool par) {
                             const ExtensionSlice slice =
                                 extension_solve(F, 0.7, default_y_grid(), {}, par);
                             return neumann_trace(slice, {}, par).sup_error;
                         }});
    }
    {
        const GridSpec spec{1, 256};
        const GridField f = builtin_field("gauss:0.5", spec);
        cases.push_back({"heat-route seminorm (1D, M=256, beta=1.2)", [=](bool par) {
                             return heat_lambda_seminorm(f, 1.2, {}, 0, par).value;
                         }});
    }

    std::printf("%-45s %12s %12s %9s %12s\n", "case", "serial [s]", "parallel [s]",
                "speedup", "|result diff|");
    for (const auto& c : cases) {
        double ts = 0.0, tp = 0.0, rs = 0.0, rp = 0.0;
        for (int r = 0; r < reps; ++r) {
            auto t0 = std::chrono::steady_clock::now();
            rs = c.run(false);
            ts += seconds_since(t0);
            t0 = std::chrono::steady_clock::now();
            rp = c.run(true);
            tp += seconds_since(t0);
        }
        ts /= reps;
        tp /= reps;
        std::printf("%-45s %12.4f %12.4f %8.2fx %12.3g\n", c.name.c_str(), ts, tp,
                    ts / tp, std::abs(rs - rp));
    }

    // Plan route vs literal serial reference at a few points (same numbers by
    // construction up to rounding; the reference is the testing baseline).
    {
        const GridSpec spec{1, 64};
        const GridField f = builtin_field("cos3x", spec);
        PVConfig cfg;
        const auto field = frac_lap_pointwise_field(f, 1.3, cfg);
        double worst = 0.0;
        for (std::size_t idx : {std::size_t{5}, std::size_t{31}, std::size_t{60}}) {
            const auto ref = frac_lap_pointwise_reference(f, spec.point(idx), 1.3, cfg);
            worst = std::max(worst, std::abs(ref.value - field.values.values[idx]));
        }
        std::printf("\nplan-vs-reference max |diff| at 3 sample points: %.3g\n", worst);
    }
    return 0;
}

#include "fractorus/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>

namespace fractorus {

namespace {

//----------------------------------------------------------------------------
// Gauss–Kronrod 7/15 rule (the classical QUADPACK pair).
// Nodes are symmetric about 0; only the non-negative half is tabulated.
//----------------------------------------------------------------------------
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
// Gauss-7 weights, matching Kronrod nodes with odd index (1, 3, 5, 7).
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct Segment {
    double a, b;
    double value;      // K15 value
    double err;        // |K15 - G7| based estimate
    bool operator<(const Segment& o) const { return err < o.err; }
};

Segment gk15_scalar(const std::function<double(double)>& f, double a, double b,
                    int& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0, resabs = 0.0;
    for (int j = 0; j < 8; ++j) {
        const double dx = h * kXgk[j];
        double fv;
        if (j == 7) {
            fv = f(c);
            ++evals;
            resk += kWgk[j] * fv;
            resg += kWg[3] * fv;
            resabs += kWgk[j] * std::abs(fv);
        } else {
            const double f1 = f(c - dx);
            const double f2 = f(c + dx);
            evals += 2;
            resk += kWgk[j] * (f1 + f2);
            resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
            if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
        }
    }
    Segment s;
    s.a = a;
    s.b = b;
    s.value = resk * h;
    // QUADPACK-style sharpened estimate: |K-G| scaled, floor at machine noise.
    const double diff = std::abs((resk - resg) * h);
    const double noise = 50.0 * 1e-16 * resabs * std::abs(h);
    s.err = std::max(diff, noise);
    if (diff > 0 && resabs > 0) {
        const double scaled = std::pow(200.0 * diff / (resabs * std::abs(h) + diff), 1.5) *
                              resabs * std::abs(h);
        s.err = std::max(std::min(diff, scaled), noise);
    }
    return s;
}

} // namespace

QuadResult gk_adaptive(const std::function<double(double)>& f, double a, double b,
                       QuadTol tol, int max_intervals,
                       const std::vector<double>& split_points) {
    QuadResult out;
    if (!(b > a)) {
        out.converged = true;
        return out;
    }
    std::vector<double> cuts{a};
    for (double s : split_points)
        if (s > a && s < b) cuts.push_back(s);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());

    std::priority_queue<Segment> heap;
    double total = 0.0, total_err = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Segment s = gk15_scalar(f, cuts[i], cuts[i + 1], out.evaluations);
        total += s.value;
        total_err += s.err;
        heap.push(s);
    }
    int n_seg = static_cast<int>(cuts.size()) - 1;
    while (n_seg < max_intervals) {
        const double target = std::max(tol.abs, tol.rel * std::abs(total));
        if (total_err <= target) break;
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {  // interval at fp resolution
            heap.push(worst);
            break;
        }
        Segment l = gk15_scalar(f, worst.a, mid, out.evaluations);
        Segment r = gk15_scalar(f, mid, worst.b, out.evaluations);
        total += l.value + r.value - worst.value;
        total_err += l.err + r.err - worst.err;
        heap.push(l);
        heap.push(r);
        ++n_seg;
    }
    out.value = total;
    out.est_error = total_err;
    out.converged = total_err <= std::max(tol.abs, tol.rel * std::abs(total));
    return out;
}

namespace {

struct SegmentVec {
    double a, b;
    std::vector<double> value;
    double err;
    bool operator<(const SegmentVec& o) const { return err < o.err; }
};

SegmentVec gk15_vec(const std::function<void(double, std::vector<double>&)>& f,
                    std::size_t dim, double a, double b, int& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    std::vector<double> resk(dim, 0.0), resg(dim, 0.0), buf(dim, 0.0);
    auto add = [&](double x, double wk, double wg) {
        f(x, buf);
        ++evals;
        for (std::size_t i = 0; i < dim; ++i) {
            resk[i] += wk * buf[i];
            if (wg != 0.0) resg[i] += wg * buf[i];
        }
    };
    for (int j = 0; j < 8; ++j) {
        const double dx = h * kXgk[j];
        const double wg = (j % 2 == 1) ? kWg[j / 2] : (j == 7 ? kWg[3] : 0.0);
        if (j == 7) {
            add(c, kWgk[j], wg);
        } else {
            add(c - dx, kWgk[j], wg);
            add(c + dx, kWgk[j], wg);
        }
    }
    SegmentVec s;
    s.a = a;
    s.b = b;
    s.value.resize(dim);
    double err = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        s.value[i] = resk[i] * h;
        err = std::max(err, std::abs((resk[i] - resg[i]) * h));
    }
    s.err = err;
    return s;
}

} // namespace

QuadResultVec gk_adaptive_vec(const std::function<void(double, std::vector<double>&)>& f,
                              std::size_t dim, double a, double b, QuadTol tol,
                              int max_intervals,
                              const std::vector<double>& split_points) {
    QuadResultVec out;
    out.value.assign(dim, 0.0);
    if (!(b > a)) {
        out.converged = true;
        return out;
    }
    std::vector<double> cuts{a};
    for (double s : split_points)
        if (s > a && s < b) cuts.push_back(s);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());

    std::priority_queue<SegmentVec> heap;
    double total_err = 0.0;
    double scale = 0.0;  // sup-norm of the running total, for the relative test
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        SegmentVec s = gk15_vec(f, dim, cuts[i], cuts[i + 1], out.evaluations);
        for (std::size_t k = 0; k < dim; ++k) out.value[k] += s.value[k];
        total_err += s.err;
        heap.push(std::move(s));
    }
    int n_seg = static_cast<int>(cuts.size()) - 1;
    auto sup = [&]() {
        double m = 0.0;
        for (double v : out.value) m = std::max(m, std::abs(v));
        return m;
    };
    while (n_seg < max_intervals) {
        scale = sup();
        if (total_err <= std::max(tol.abs, tol.rel * scale)) break;
        SegmentVec worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            heap.push(std::move(worst));
            break;
        }
        SegmentVec l = gk15_vec(f, dim, worst.a, mid, out.evaluations);
        SegmentVec r = gk15_vec(f, dim, mid, worst.b, out.evaluations);
        for (std::size_t k = 0; k < dim; ++k)
            out.value[k] += l.value[k] + r.value[k] - worst.value[k];
        total_err += l.err + r.err - worst.err;
        heap.push(std::move(l));
        heap.push(std::move(r));
        ++n_seg;
    }
    out.est_error = total_err;
    out.converged = total_err <= std::max(tol.abs, tol.rel * sup());
    return out;
}

//----------------------------------------------------------------------------
// Gauss–Legendre nodes by Newton iteration on P_p (standard three-term
// recurrence); cached per degree.
//----------------------------------------------------------------------------
const GaussLegendre& gauss_legendre(int p) {
    if (p < 1 || p > 200) throw InputError("gauss_legendre: degree out of range [1,200]");
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;

    GaussLegendre gl;
    gl.nodes.resize(p);
    gl.weights.resize(p);
    const double pi = 3.141592653589793238462643383279502884;
    for (int i = 0; i < (p + 1) / 2; ++i) {
        // Chebyshev-like initial guess, then Newton on P_p(x) = 0.
        double x = std::cos(pi * (i + 0.75) / (p + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= p; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = p * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        gl.nodes[i] = -x;
        gl.nodes[p - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        gl.weights[i] = w;
        gl.weights[p - 1 - i] = w;
    }
    if (p % 2 == 1) gl.nodes[p / 2] = 0.0;  // exact symmetry for odd degree
    auto [ins, ok] = cache.emplace(p, std::move(gl));
    (void)ok;
    return ins->second;
}

double gl_fixed(const std::function<double(double)>& f, double a, double b, int p) {
    const GaussLegendre& gl = gauss_legendre(p);
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < p; ++i) acc += gl.weights[i] * f(c + h * gl.nodes[i]);
    return acc * h;
}

} // namespace fractorus

#include "dualspec/quadrature.hpp"

#include "dualspec/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

namespace dualspec {

namespace {

// Abscissae of the 15-point Kronrod rule on [0, 1] (symmetric), QUADPACK qk15.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5 and the centre.
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780, 0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Table {
    std::array<double, 15> x{};
    std::array<double, 15> wk{};
    std::array<double, 15> wg{};
    Table() {
        for (int j = 0; j < 7; ++j) {
            x[j] = -kXgk[j];
            x[14 - j] = kXgk[j];
            wk[j] = wk[14 - j] = kWgk[j];
            const double g = (j % 2 == 1) ? kWg[j / 2] : 0.0;
            wg[j] = wg[14 - j] = g;
        }
        x[7] = 0.0;
        wk[7] = kWgk[7];
        wg[7] = kWg[3];
    }
};

const Table& table() {
    static const Table t;
    return t;
}

struct Panel {
    double a, b;
    double value, error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const Table& t = table();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double k = 0.0, g = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double v = f(mid + half * t.x[i]);
        k += t.wk[i] * v;
        g += t.wg[i] * v;
    }
    return {a, b, k * half, std::abs((k - g) * half)};
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol >= 0.0) || max_panels < 1)
        throw DomainError("quadrature: tolerances must be positive and max_panels >= 1");
}

KronrodTable kronrod15() {
    const Table& t = table();
    return {std::span<const double>(t.x), std::span<const double>(t.wk), std::span<const double>(t.wg)};
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, const QuadratureConfig& config) {
    config.validate();
    if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("quadrature: limits must be finite");
    if (a == b) return {};
    std::priority_queue<Panel> heap;
    Panel first = evaluate_panel(f, a, b);
    double total = first.value;
    double error = first.error;
    heap.push(first);
    int panels = 1;
    while (error > std::max(config.abs_tol, config.rel_tol * std::abs(total))) {
        if (panels >= config.max_panels) throw QuadratureFailure("quadrature: panel budget exhausted");
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = evaluate_panel(f, worst.a, mid);
        Panel right = evaluate_panel(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++panels;
        if (!std::isfinite(total)) throw QuadratureFailure("quadrature: non-finite integrand");
    }
    // Re-sum to shed the drift of incremental updates.
    total = 0.0;
    error = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    return {total, error, panels};
}

SharedRule build_shared_rule(const std::function<void(double, std::span<double>)>& sample, int components, double a,
                             double b, const QuadratureConfig& config) {
    config.validate();
    if (components < 1) throw DomainError("quadrature: need at least one component");
    if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) throw DomainError("quadrature: need finite a < b");

    const Table& t = table();
    const std::size_t m = std::size_t(components);

    struct SharedPanel {
        double a, b, value, error;
        std::vector<double> samples;  // 15 * m
        bool operator<(const SharedPanel& o) const { return error < o.error; }
    };
    std::vector<double> scratch(m);
    auto make = [&](double lo, double hi) {
        SharedPanel p{lo, hi, 0.0, 0.0, std::vector<double>(15 * m)};
        const double half = 0.5 * (hi - lo);
        const double mid = 0.5 * (hi + lo);
        double k = 0.0, g = 0.0;
        for (int i = 0; i < 15; ++i) {
            sample(mid + half * t.x[i], scratch);
            double norm = 0.0;
            for (std::size_t c = 0; c < m; ++c) {
                p.samples[std::size_t(i) * m + c] = scratch[c];
                norm += scratch[c] * scratch[c];
            }
            k += t.wk[i] * norm;
            g += t.wg[i] * norm;
        }
        p.value = k * half;
        p.error = std::abs((k - g) * half);
        return p;
    };

    std::priority_queue<SharedPanel> heap;
    heap.push(make(a, b));
    double total = heap.top().value;
    double error = heap.top().error;
    int panels = 1;
    while (error > std::max(config.abs_tol, config.rel_tol * std::abs(total))) {
        if (panels >= config.max_panels) throw QuadratureFailure("quadrature: panel budget exhausted");
        SharedPanel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        SharedPanel left = make(worst.a, mid);
        SharedPanel right = make(mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(std::move(left));
        heap.push(std::move(right));
        ++panels;
        if (!std::isfinite(total)) throw QuadratureFailure("quadrature: non-finite integrand");
    }

    std::vector<SharedPanel> done;
    done.reserve(heap.size());
    while (!heap.empty()) {
        done.push_back(heap.top());
        heap.pop();
    }
    std::sort(done.begin(), done.end(), [](const SharedPanel& x, const SharedPanel& y) { return x.a < y.a; });

    SharedRule rule;
    rule.components = components;
    const std::size_t n = done.size() * 15;
    rule.nodes.reserve(n);
    rule.weights.reserve(n);
    rule.values.assign(n * m, 0.0);
    double err = 0.0;
    std::size_t idx = 0;
    for (const SharedPanel& p : done) {
        const double half = 0.5 * (p.b - p.a);
        const double mid = 0.5 * (p.b + p.a);
        for (int i = 0; i < 15; ++i, ++idx) {
            rule.nodes.push_back(mid + half * t.x[i]);
            rule.weights.push_back(half * t.wk[i]);
            for (std::size_t c = 0; c < m; ++c) rule.values[c * n + idx] = p.samples[std::size_t(i) * m + c];
        }
        err += p.error;
    }
    rule.error = err;
    return rule;
}

}  // namespace dualspec

#include "heatcolor/diffusion.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace heatcolor {

namespace {

constexpr double kTwoOverSqrtPi = 1.1283791670955126;  // erf'(0)

void check_tau(double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("tau must be > 0");
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
}

void check_shape(const Graph& g, const Matrix& m, const char* what) {
    if (m.rows() != g.num_vertices() || m.cols() < 1) {
        throw std::invalid_argument(std::string(what) + " shape does not match the graph");
    }
}

// df/dS_i = 2 * sum of neighbor rows S_j: each undirected edge contributes
// 2<S_i,S_j> to f, so both endpoints pick up twice the other's row.
Matrix edge_row_sums(const Graph& g, const Matrix& s) {
    Matrix p(s.rows(), s.cols(), 0.0);
    const int k = s.cols();
    for (const auto& [u, v] : g.edges()) {
        for (int c = 0; c < k; ++c) {
            p(u, c) += 2.0 * s(v, c);
            p(v, c) += 2.0 * s(u, c);
        }
    }
    return p;
}

// Pulls df/dS back through the row softmax: dH_ic = S_ic (P_ic - <P_i,S_i>)/alpha.
Matrix softmax_backward(const Matrix& s, const Matrix& p, double alpha) {
    Matrix grad(s.rows(), s.cols());
    for (int i = 0; i < s.rows(); ++i) {
        double dot = 0.0;
        for (int c = 0; c < s.cols(); ++c) dot += p(i, c) * s(i, c);
        for (int c = 0; c < s.cols(); ++c) {
            grad(i, c) = s(i, c) * (p(i, c) - dot) / alpha;
        }
    }
    return grad;
}

struct StepEval {
    Matrix gradient;
    double target = 0.0;
};

// Shared evaluation path of step(), solve() and target_gradient(): one
// target + gradient evaluation at (theta, x) for the configured composition.
StepEval evaluate(const Graph& g, const Matrix& theta, const Matrix& x, double tau,
                  double alpha, Composition composition) {
    StepEval out;
    if (composition == Composition::softmax_of_theta) {
        const Matrix s = row_softmax(theta, alpha);
        out.target = target_value(g, s);
        out.gradient = softmax_backward(s, edge_row_sums(g, s), alpha);
        return out;
    }
    const Matrix smoothed = heat_smooth(theta, x, tau);
    const Matrix s = row_softmax(smoothed, alpha);
    out.target = target_value(g, s);
    Matrix grad = softmax_backward(s, edge_row_sums(g, s), alpha);
    const double inv_width = 1.0 / std::sqrt(2.0 * tau);
    for (int i = 0; i < grad.rows(); ++i) {
        for (int c = 0; c < grad.cols(); ++c) {
            const double z = (theta(i, c) - x(i, c)) * inv_width;
            grad(i, c) *= kTwoOverSqrtPi * std::exp(-z * z) * inv_width;
        }
    }
    out.gradient = std::move(grad);
    return out;
}

int count_clashes(const Graph& g, const std::vector<int>& assignment) {
    int clashes = 0;
    for (const auto& [u, v] : g.edges()) {
        if (assignment[u] == assignment[v]) ++clashes;
    }
    return clashes;
}

Matrix sample_uniform(int n, int k, Rng& rng) {
    Matrix x(n, k);
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c < k; ++c) x(i, c) = uniform01(rng);
    }
    return x;
}

}  // namespace

void validate(const DiffusionConfig& cfg) {
    if (cfg.num_colors < 1) throw std::invalid_argument("num_colors must be >= 1");
    if (cfg.num_iterations < 1) throw std::invalid_argument("num_iterations must be >= 1");
    if (!(cfg.tau_end > 0.0)) throw std::invalid_argument("tau_end must be > 0");
    if (!(cfg.tau_start >= cfg.tau_end)) {
        throw std::invalid_argument("tau_start must be >= tau_end");
    }
    if (!(cfg.softmax_temp > 0.0)) throw std::invalid_argument("softmax_temp must be > 0");
    if (!(cfg.step_size > 0.0)) throw std::invalid_argument("step_size must be > 0");
    if (cfg.num_samples < 1) throw std::invalid_argument("num_samples must be >= 1");
}

Matrix init_theta(int n, int k, const DiffusionConfig& cfg, Rng& rng) {
    if (n < 1 || k < 1) throw std::invalid_argument("init_theta needs n >= 1 and k >= 1");
    if (cfg.theta_init == ThetaInit::constant_half) {
        return Matrix(n, k, 0.5);
    }
    return sample_uniform(n, k, rng);
}

Matrix init_theta(int n, int k, const DiffusionConfig& cfg) {
    Rng rng(cfg.seed);
    return init_theta(n, k, cfg, rng);
}

Matrix heat_smooth(const Matrix& theta, const Matrix& x, double tau) {
    check_tau(tau);
    if (!theta.same_shape(x)) throw std::invalid_argument("theta and x shapes differ");
    const double inv_width = 1.0 / std::sqrt(2.0 * tau);
    Matrix g(theta.rows(), theta.cols());
    for (int i = 0; i < g.rows(); ++i) {
        for (int c = 0; c < g.cols(); ++c) {
            g(i, c) = std::erf((theta(i, c) - x(i, c)) * inv_width);
        }
    }
    return g;
}

Matrix row_softmax(const Matrix& g, double alpha) {
    check_alpha(alpha);
    Matrix s(g.rows(), g.cols());
    for (int i = 0; i < g.rows(); ++i) {
        double max_val = g(i, 0);
        for (int c = 1; c < g.cols(); ++c) max_val = std::max(max_val, g(i, c));
        double sum = 0.0;
        for (int c = 0; c < g.cols(); ++c) {
            s(i, c) = std::exp((g(i, c) - max_val) / alpha);
            sum += s(i, c);
        }
        for (int c = 0; c < g.cols(); ++c) s(i, c) /= sum;
    }
    return s;
}

double target_value(const Graph& g, const Matrix& s) {
    check_shape(g, s, "softmax matrix");
    double f = 0.0;
    for (const auto& [u, v] : g.edges()) {
        double dot = 0.0;
        for (int c = 0; c < s.cols(); ++c) dot += s(u, c) * s(v, c);
        f += 2.0 * dot;
    }
    return f;
}

Matrix target_gradient(const Graph& g, const Matrix& theta, const Matrix& x, double tau,
                       double alpha) {
    check_tau(tau);
    check_alpha(alpha);
    check_shape(g, theta, "theta");
    if (!theta.same_shape(x)) throw std::invalid_argument("theta and x shapes differ");
    return evaluate(g, theta, x, tau, alpha, Composition::smooth_then_softmax).gradient;
}

Matrix softmax_theta_gradient(const Graph& g, const Matrix& theta, double alpha) {
    check_alpha(alpha);
    check_shape(g, theta, "theta");
    return evaluate(g, theta, theta, 1.0, alpha, Composition::softmax_of_theta).gradient;
}

double tau_schedule(const DiffusionConfig& cfg, int t) {
    if (t < 0 || t >= cfg.num_iterations) {
        throw std::invalid_argument("schedule index out of range");
    }
    if (cfg.num_iterations == 1) return cfg.tau_start;
    const double frac = static_cast<double>(t) / static_cast<double>(cfg.num_iterations - 1);
    if (cfg.schedule == TauSchedule::linear) {
        return cfg.tau_start + (cfg.tau_end - cfg.tau_start) * frac;
    }
    return cfg.tau_start * std::pow(cfg.tau_end / cfg.tau_start, frac);
}

namespace {

// Body shared by step() and solve(); reports the averaged sampled target.
double step_inplace(const Graph& g, ThetaState& state, const DiffusionConfig& cfg, Rng& rng) {
    const int n = state.theta.rows();
    const int k = state.theta.cols();
    Matrix grad(n, k, 0.0);
    double target_sum = 0.0;
    const int samples = cfg.composition == Composition::softmax_of_theta ? 1 : cfg.num_samples;
    for (int m = 0; m < samples; ++m) {
        Matrix x;
        if (cfg.composition == Composition::smooth_then_softmax) {
            x = sample_uniform(n, k, rng);
        } else {
            x = state.theta;  // unused by the softmax_of_theta target
        }
        StepEval eval = evaluate(g, state.theta, x, state.tau, cfg.softmax_temp, cfg.composition);
        target_sum += eval.target;
        for (int i = 0; i < n; ++i) {
            for (int c = 0; c < k; ++c) grad(i, c) += eval.gradient(i, c);
        }
    }
    const double scale = cfg.step_size / static_cast<double>(samples);
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c < k; ++c) {
            state.theta(i, c) = std::clamp(state.theta(i, c) - scale * grad(i, c), 0.0, 1.0);
        }
    }
    state.iteration += 1;
    state.tau = tau_schedule(cfg, std::min(state.iteration, cfg.num_iterations - 1));
    return target_sum / static_cast<double>(samples);
}

}  // namespace

ThetaState step(const Graph& g, ThetaState state, const DiffusionConfig& cfg, Rng& rng) {
    validate(cfg);
    check_shape(g, state.theta, "theta");
    check_tau(state.tau);
    step_inplace(g, state, cfg, rng);
    return state;
}

Coloring decode(const Matrix& theta) {
    Coloring c;
    c.k = theta.cols();
    c.assignment.resize(theta.rows());
    for (int i = 0; i < theta.rows(); ++i) {
        int best = 0;
        for (int j = 1; j < theta.cols(); ++j) {
            if (theta(i, j) > theta(i, best)) best = j;
        }
        c.assignment[i] = best;
    }
    return c;
}

SolveResult solve(const Graph& g, const DiffusionConfig& cfg) {
    validate(cfg);
    Rng rng(cfg.seed);

    SolveResult result;
    ThetaState state;
    state.theta = init_theta(g.num_vertices(), cfg.num_colors, cfg, rng);
    state.iteration = 0;
    state.tau = tau_schedule(cfg, 0);

    SolveTrace& trace = result.trace;
    trace.target_values.reserve(cfg.num_iterations);
    trace.clash_counts.reserve(cfg.num_iterations);
    trace.best_clashes = g.num_edges() + 1;
    trace.best_iteration = 0;

    for (int t = 0; t < cfg.num_iterations; ++t) {
        const double target = step_inplace(g, state, cfg, rng);
        trace.target_values.push_back(target);

        Coloring decoded = decode(state.theta);
        const int clashes = count_clashes(g, decoded.assignment);
        trace.clash_counts.push_back(clashes);
        if (clashes < trace.best_clashes) {
            trace.best_clashes = clashes;
            trace.best_iteration = t;
            result.coloring = std::move(decoded);
        }
    }
    result.coloring.solver_tag = "heat";
    result.final_state = std::move(state);
    return result;
}

}  // namespace heatcolor

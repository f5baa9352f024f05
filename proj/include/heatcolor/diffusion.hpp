#pragma once

#include <cstdint>
#include <vector>

#include "heatcolor/coloring.hpp"
#include "heatcolor/graph.hpp"
#include "heatcolor/matrix.hpp"
#include "heatcolor/rng.hpp"

namespace heatcolor {

enum class TauSchedule { linear, geometric };
enum class ThetaInit { uniform, constant_half };

// Which matrix the row softmax is applied to inside the target:
//   smooth_then_softmax — softmax of the erf-smoothed matrix (default);
//   softmax_of_theta    — softmax of theta directly, no smoothing and no
//                         sampling, for comparing the two readings.
enum class Composition { smooth_then_softmax, softmax_of_theta };

struct DiffusionConfig {
    int num_colors = 1;      // width of theta; one column per color
    int num_iterations = 1000;
    double tau_start = 1.0;  // initial diffusion time
    double tau_end = 0.01;   // final diffusion time, > 0
    TauSchedule schedule = TauSchedule::linear;
    double softmax_temp = 1.0;  // alpha
    double step_size = 0.5;     // eta
    int num_samples = 1;        // Monte-Carlo samples per step
    std::uint64_t seed = 0;
    ThetaInit theta_init = ThetaInit::uniform;
    Composition composition = Composition::smooth_then_softmax;
};

// Throws std::invalid_argument on any violated invariant.
void validate(const DiffusionConfig& cfg);

// Solver variable (the "locations"): an n x k matrix with entries kept in
// [0,1] by projection, plus the iteration counter and current diffusion time.
struct ThetaState {
    Matrix theta;
    int iteration = 0;
    double tau = 1.0;
};

struct SolveTrace {
    std::vector<double> target_values;  // sampled target per iteration
    std::vector<int> clash_counts;      // decoded clash count per iteration
    int best_clashes = 0;
    int best_iteration = 0;
};

struct SolveResult {
    Coloring coloring;  // best decoded assignment over all iterations
    SolveTrace trace;
    ThetaState final_state;
};

// Fresh theta of shape n x k; entries in [0,1], deterministic given cfg.seed.
Matrix init_theta(int n, int k, const DiffusionConfig& cfg);
Matrix init_theta(int n, int k, const DiffusionConfig& cfg, Rng& rng);

// G_ij = erf((theta_ij - x_ij) / sqrt(2 tau)); requires tau > 0.
Matrix heat_smooth(const Matrix& theta, const Matrix& x, double tau);

// Row-wise softmax of G/alpha with max subtraction; each row sums to 1.
Matrix row_softmax(const Matrix& g, double alpha);

// f = sum over undirected edges (i,j) of 2 * <S_i, S_j>. The factor 2 comes
// from the symmetric adjacency convention (each edge counted in both
// directions). f >= 0, and f == 0 iff every edge's endpoint rows have
// disjoint support.
double target_value(const Graph& g, const Matrix& s);

// Exact gradient of theta -> target_value(g, row_softmax(heat_smooth(theta,
// x, tau), alpha)), the single-sample estimator of the diffusion gradient.
Matrix target_gradient(const Graph& g, const Matrix& theta, const Matrix& x,
                       double tau, double alpha);

// Exact gradient of theta -> target_value(g, row_softmax(theta, alpha)),
// used by the softmax_of_theta composition.
Matrix softmax_theta_gradient(const Graph& g, const Matrix& theta, double alpha);

// Diffusion time at iteration t (0 <= t < num_iterations): a monotone
// nonincreasing interpolation from tau_start down to tau_end.
double tau_schedule(const DiffusionConfig& cfg, int t);

// One projected-gradient update: sample x uniform over [0,1]^{n x k}
// (averaging num_samples estimates), move theta against the gradient, clip
// to [0,1], advance the iteration counter and diffusion time.
ThetaState step(const Graph& g, ThetaState state, const DiffusionConfig& cfg, Rng& rng);

// Argmax of each row; ties take the lowest color index. Never emits dummy.
Coloring decode(const Matrix& theta);

// Runs num_iterations steps and returns the best decoded coloring seen
// (fewest clashes, earliest iteration winning ties) plus the full trace.
// Deterministic given cfg.seed.
SolveResult solve(const Graph& g, const DiffusionConfig& cfg);

}  // namespace heatcolor

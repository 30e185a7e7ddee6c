#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tnorm/linalg.hpp"
#include "tnorm/spaces.hpp"

namespace tnorm {

/// One Monte Carlo experiment summary. `stderr_est` is the sample standard
/// deviation divided by sqrt(samples). `mode` records how `pass` was decided:
/// "two-sided" (|estimate - target| / target <= tolerance), "one-sided-upper"
/// (estimate <= target within three standard errors) or "median-growth"
/// (estimate strictly above the previous list entry).
struct McReport {
    std::string quantity;
    int k = 0;
    long samples = 0;
    uint64_t seed = 0;
    double estimate = 0.0;
    double stderr_est = 0.0;
    double target = 0.0;
    double tolerance = 0.0;
    std::string mode;
    bool pass = false;
};

/// Mean operator norm of GUE samples per size k; compared two-sided against
/// the asymptotic 2 sqrt(k) at the given tolerance (default 12%). The small-k
/// entries are reported against the same target and may legitimately fail it;
/// the asymptotic claim is only asserted at large k. k <= 64.
std::vector<McReport> gue_opnorm_scaling(const std::vector<int>& k_list, long samples,
                                         uint64_t seed, double tolerance = 0.12,
                                         int threads = 1);

/// Mean trace norm of GUE samples per size k; one-sided bound
/// estimate <= k^{3/2} (the refined semicircle target 8/(3 pi) k^{3/2} is
/// reported as `target` with the bound in `tolerance` slot semantics kept
/// one-sided against k^{3/2}).
std::vector<McReport> gue_tracenorm_scaling(const std::vector<int>& k_list, long samples,
                                            uint64_t seed, int threads = 1);

/// Mean see-saw lower bound on the injective norm over random Gaussian
/// tensors, verified against the explicit bound n^{3/2} sqrt(m) +
/// m^{3/2} sqrt(n). n, m <= 4.
McReport chevet_epsilon_check(int n, int m, long samples, uint64_t seed, int threads = 1);

/// Monte Carlo estimate of E || sum_i g_i T e_i ||_X. When the map is the
/// identity and the space is l1, l2 or one-dimensional l-infinity the exact
/// Gaussian mean is used as a two-sided 2% target; otherwise the report is
/// informational (pass = true, target = estimate).
McReport ell_norm_estimate(const SpaceDescriptor& space, const Matrix& map, long samples,
                           uint64_t seed, int threads = 1);

/// Median of pi_lower / eps_upper over `samples` random tensors per n;
/// asserts strict growth along n_list and the min(n,m) ratio cap. n <= 4.
std::vector<McReport> quantum_ratio_scaling(const std::vector<int>& n_list, long samples,
                                            uint64_t seed, int threads = 1);

/// CSV header and row formatting shared with the CLI.
std::string mc_csv_header();
std::string mc_csv_row(const McReport& r);

}  // namespace tnorm

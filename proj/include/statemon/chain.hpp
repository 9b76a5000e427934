#pragma once

#include <vector>

#include "statemon/matrix.hpp"
#include "statemon/rng.hpp"

namespace statemon {

inline constexpr double kRowSumTol = 1e-9;

/// Ground-truth world model: a finite-state Markov chain plus the loss matrix
/// charged when the monitor predicts state k while the node is in state j.
struct ChainSpec {
    Matrix transition;  // K x K, row-stochastic
    Matrix loss;        // K x K, non-negative, zero diagonal

    int num_states() const { return transition.rows(); }
};

/// Checks the ChainSpec invariants: square matrices of matching size, K >= 2,
/// transition entries in [0,1] with row sums 1 within kRowSumTol, loss entries
/// >= 0 with zero diagonal. Throws RowSumError / NegativeEntryError /
/// DimensionError.
void validate(const ChainSpec& spec);

/// validate() + exact row renormalization. Inputs within tolerance are cleaned
/// up so downstream matrix powers stay stochastic.
ChainSpec make_chain(Matrix transition, Matrix loss);

/// P^n by repeated multiplication.
Matrix n_step_probs(const ChainSpec& spec, int n);

/// Precomputed transition-matrix powers P^1..P^horizon. Policies never look
/// further than the inter-query cap, so the table is built once per chain.
class NStepTable {
  public:
    NStepTable(const ChainSpec& spec, int horizon);

    int horizon() const { return static_cast<int>(powers_.size()); }

    /// P^n for n in [1, horizon]; throws HorizonExceeded outside that range.
    const Matrix& power(int n) const;

  private:
    std::vector<Matrix> powers_;
};

/// Stationary distribution by power iteration from two different starting
/// vectors (uniform and a point mass). Throws NoConvergence if either fails to
/// settle within max_iters or the two limits disagree, which signals a
/// periodic or reducible chain.
std::vector<double> stationary_distribution(const ChainSpec& spec, double tol = 1e-10,
                                            long max_iters = 1000000);

/// One step of the true chain from `current`, by CDF inversion on one uniform
/// draw.
int sample_next(const ChainSpec& spec, int current, Rng& rng);

/// Random row-stochastic matrix: each row is K iid Uniform(0,1) draws
/// normalized to sum 1.
Matrix random_chain(int num_states, Rng& rng);

}  // namespace statemon

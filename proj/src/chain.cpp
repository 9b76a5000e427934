#include "statemon/chain.hpp"

#include <cmath>
#include <string>

#include "statemon/errors.hpp"

namespace statemon {

void validate(const ChainSpec& spec) {
    const int k = spec.transition.rows();
    if (k < 2) throw DimensionError("chain needs at least 2 states, got " + std::to_string(k));
    if (spec.transition.cols() != k)
        throw DimensionError("transition matrix is not square");
    if (spec.loss.rows() != k || spec.loss.cols() != k)
        throw DimensionError("loss matrix does not match transition matrix size");

    for (int i = 0; i < k; ++i) {
        double sum = 0.0;
        for (int j = 0; j < k; ++j) {
            const double p = spec.transition(i, j);
            if (p < 0.0 || p > 1.0)
                throw NegativeEntryError("transition(" + std::to_string(i) + "," + std::to_string(j) +
                                         ") = " + std::to_string(p) + " outside [0,1]");
            sum += p;
        }
        if (std::fabs(sum - 1.0) > kRowSumTol)
            throw RowSumError("transition row " + std::to_string(i) + " sums to " + std::to_string(sum));
    }
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (spec.loss(i, j) < 0.0)
                throw NegativeEntryError("loss(" + std::to_string(i) + "," + std::to_string(j) + ") < 0");
        }
        if (spec.loss(i, i) != 0.0)
            throw NegativeEntryError("loss diagonal entry " + std::to_string(i) + " must be 0");
    }
}

ChainSpec make_chain(Matrix transition, Matrix loss) {
    ChainSpec spec{std::move(transition), std::move(loss)};
    validate(spec);
    for (int i = 0; i < spec.num_states(); ++i) {
        double sum = 0.0;
        for (double p : spec.transition.row(i)) sum += p;
        for (double& p : spec.transition.row(i)) p /= sum;
    }
    return spec;
}

Matrix n_step_probs(const ChainSpec& spec, int n) {
    if (n < 1) throw HorizonExceeded("n_step_probs needs n >= 1");
    Matrix out = spec.transition;
    for (int i = 1; i < n; ++i) out = out * spec.transition;
    return out;
}

NStepTable::NStepTable(const ChainSpec& spec, int horizon) {
    powers_.reserve(horizon);
    powers_.push_back(spec.transition);
    for (int n = 2; n <= horizon; ++n) powers_.push_back(powers_.back() * spec.transition);
}

const Matrix& NStepTable::power(int n) const {
    if (n < 1 || n > horizon())
        throw HorizonExceeded("power " + std::to_string(n) + " outside precomputed horizon " +
                              std::to_string(horizon()));
    return powers_[n - 1];
}

namespace {

// Runs v <- vP until the residual ||vP - v||_inf falls under tol. Returns an
// empty vector on failure.
std::vector<double> power_iterate(const ChainSpec& spec, std::vector<double> v, double tol,
                                  long max_iters) {
    for (long it = 0; it < max_iters; ++it) {
        std::vector<double> next = row_times(v, spec.transition);
        double sum = 0.0;
        for (double x : next) sum += x;
        for (double& x : next) x /= sum;
        double delta = 0.0;
        for (size_t j = 0; j < v.size(); ++j) delta = std::max(delta, std::fabs(next[j] - v[j]));
        if (delta <= tol) return v;
        v = std::move(next);
    }
    return {};
}

}  // namespace

std::vector<double> stationary_distribution(const ChainSpec& spec, double tol, long max_iters) {
    const int k = spec.num_states();
    std::vector<double> uniform(k, 1.0 / k);
    std::vector<double> point(k, 0.0);
    point[0] = 1.0;

    std::vector<double> a = power_iterate(spec, uniform, tol, max_iters);
    if (a.empty()) throw NoConvergence("power iteration did not converge (periodic or reducible chain?)");
    std::vector<double> b = power_iterate(spec, point, tol, max_iters);
    if (b.empty()) throw NoConvergence("power iteration did not converge (periodic or reducible chain?)");

    for (int j = 0; j < k; ++j)
        if (std::fabs(a[j] - b[j]) > 1e-6)
            throw NoConvergence("stationary distribution is not unique (reducible chain)");
    return a;
}

int sample_next(const ChainSpec& spec, int current, Rng& rng) {
    const double u = rng.uniform();
    const auto row = spec.transition.row(current);
    double cum = 0.0;
    int last_positive = 0;
    for (int j = 0; j < static_cast<int>(row.size()); ++j) {
        if (row[j] > 0.0) last_positive = j;
        cum += row[j];
        if (u < cum) return j;
    }
    return last_positive;  // u landed in the roundoff gap below 1
}

Matrix random_chain(int num_states, Rng& rng) {
    Matrix m(num_states, num_states);
    for (int i = 0; i < num_states; ++i) {
        double sum = 0.0;
        for (int j = 0; j < num_states; ++j) {
            m(i, j) = rng.uniform();
            sum += m(i, j);
        }
        if (sum <= 0.0) {
            for (int j = 0; j < num_states; ++j) m(i, j) = 1.0 / num_states;
        } else {
            for (int j = 0; j < num_states; ++j) m(i, j) /= sum;
        }
    }
    return m;
}

}  // namespace statemon

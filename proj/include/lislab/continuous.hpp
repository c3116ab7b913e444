#pragma once
// Continuous (exponential / Brownian) degeneration of the growth model.
//
// A configuration has rows with rates rho+_i, columns with rates rho-_j, an
// optional boundary row of rate a+ and boundary column of rate a- (rate +inf
// means absent), and a Brownian interval of length u appended after the
// columns.  Cell (i,j) carries an exponential weight of mean 1/(rate_i+rate_j)
// (zero when either rate is infinite; the boundary/boundary cell is pinned to
// zero), and every finite-rate row i carries an independent Brownian motion
// with drift -rate_i on the interval.  chi1 is the maximal weight of a
// monotone path through the cells followed by an upward-switching traversal
// of the interval.

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <vector>

namespace lislab {

struct ContinuousParams {
    std::vector<double> rho_plus;   // row rates
    std::vector<double> rho_minus;  // column rates
    double u = 0.0;                 // Brownian interval length
    // Boundary rates; +inf = boundary absent.  JSON: missing or null = +inf.
    double a_plus = std::numeric_limits<double>::infinity();
    double a_minus = std::numeric_limits<double>::infinity();
};

// Checked construction.  Requires u >= 0, finite rho entries, and every cell
// mean positive: rho+_i + rho-_j > 0, a+ + rho-_j > 0, a- + rho+_i > 0.
ContinuousParams make_continuous(std::vector<double> rho_plus, std::vector<double> rho_minus,
                                 double u, double a_plus, double a_minus);

// E[chi1] at boundary rates (a, -a):
//   -u a + sum_j 1/(rho-_j + a) + sum_i 1/(rho+_i - a),
// for -inf(rho-) < a < inf(rho+).  Ignores cp's own boundary rates.
double continuous_mean(double a, const ContinuousParams& cp);

// E[e^{(a+ + a-) chi1}] at boundary rates (a+, a-):
//   e^{u(a-^2 - a+^2)/2} prod_i (rho+_i + a-)/(rho+_i - a+)
//                        prod_j (rho-_j + a+)/(rho-_j - a-).
double continuous_mgf(double a_plus, double a_minus, const ContinuousParams& cp);

// One sample of chi1; the Brownian interval is discretized into grid_k
// increments per row.  Returns -infinity when u > 0 and no finite-rate row
// exists to carry the traversal.
double sample_chi1(const ContinuousParams& cp, int grid_k, uint64_t seed);

// Largest eigenvalue of an n x n Hermitian matrix with density e^{-Tr H^2/2}
// (unit-variance real diagonal, half-variance real/imaginary off-diagonals).
double gue_reference_sample(int n, uint64_t seed);

// Largest eigenvalue of A A^dagger for an n_plus x n_minus matrix of standard
// complex Gaussian entries.
double lue_reference_sample(int n_plus, int n_minus, uint64_t seed);

void to_json(nlohmann::json& j, const ContinuousParams& cp);
void from_json(const nlohmann::json& j, ContinuousParams& cp);

}  // namespace lislab

#pragma once
// Exact distribution of the longest chain via Toeplitz determinants.
//
// The distribution function of lambda1 for an extended configuration is a
// ratio of Toeplitz determinants of the symbol
//   phi(z) = (1 + a+ z) H(z;p+) (1 + a-/z) H(1/z;p-),
// with Pr(lambda1 <= l) = [D_l - a+a- D_{l-1}] / (E(a+;p-) E(a-;p+) H(p+;p-)),
// where D_l is the l x l Toeplitz determinant of phi's Laurent coefficients
// (D_0 = 1, D_{-1} = 0).

#include <string>
#include <vector>

#include "lislab/params.hpp"

namespace lislab {

// Laurent coefficients c_k of phi for |k| <= K.  The stored coefficients are
// those of the rebalanced symbol phi(sz) (s chosen to symmetrize decay), whose
// Toeplitz determinants agree exactly with the original's.
struct LaurentCoeffs {
    std::vector<double> c;  // c[k + K] holds c_k
    int K = 0;

    double at(int k) const { return (k < -K || k > K) ? 0.0 : c[static_cast<size_t>(k + K)]; }
};

// Coefficients for |k| <= K.  Enforces the decay contract
// max(|c_K|, |c_-K|) < 1e-12 |c_0|; throws std::runtime_error suggesting a
// larger K when the tail has not converged.
LaurentCoeffs laurent_coeffs(const ExtendedParams& xp, int K);

// l x l Toeplitz determinant det[c_{i-j}] by row-pivoted elimination.
// Requires 0 <= l <= K + 1; D_0 = 1.
double toeplitz_det(const LaurentCoeffs& coeffs, int l);

struct CdfTable {
    std::vector<double> cdf;  // cdf[l] = Pr(lambda1 <= l), l = 0..L
    ExtendedParams params;
    int K_used = 0;
    bool complete = false;  // true once the last entry was clamped to 1

    // One JSON metadata line, then "l,cdf" rows.
    std::string to_csv() const;
};

// Pr(lambda1 <= l) for a single l.
double cdf_value(const ExtendedParams& xp, int l);

// Table for l = 0..L.  The Laurent half-width starts at L + 20 and doubles
// until the neglected tail is below 1e-14 of c_0.  Values are validated to be
// monotone within 1e-9, clamped into [0,1], and clamped to exactly 1 once
// 1 - cdf < 1e-12.
CdfTable cdf_table(const ExtendedParams& xp, int L);

// Table extended until the distribution is exhausted (cdf clamps to 1).
CdfTable cdf_table_auto(const ExtendedParams& xp, int max_L = 4096);

// Mean and E[(a+a-)^{-lambda1}] read off a complete table.
double table_mean(const CdfTable& table);
double table_mgf(const CdfTable& table);

}  // namespace lislab

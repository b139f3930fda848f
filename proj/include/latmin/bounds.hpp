#pragma once

#include <vector>

#include "latmin/rational.hpp"

namespace latmin::bounds {

// Numeric profile of an embedded curve: degree d, genus g, and the rank
// N = d + 1 - g of the section lattice. Valid profiles satisfy g >= 2 and
// d >= 2g + 1, which forces N >= g + 2 >= 4.
struct CurveProfile {
    long d = 0;
    long g = 0;
    long N = 0;
};

CurveProfile validate_profile(long d, long g);

// f_i for i = 1..N (returned 0-based: result[i-1] = f_i):
//   f_i = i - 1                 if i - 1 <= d - 2g,
//   f_i = i - 1 + alpha         if i - 1 = d - 2g + alpha, 0 <= alpha <= g.
// Always f_1 = 0 and f_N = d.
std::vector<long> f_sequence(const CurveProfile& profile);

// h_{i,k} for i = 1..N, with 2 <= k <= N:
//   h_{i,k} = f_i if i <= k, i = N-1 or i = N,
//   h_{i,k} = f_k if k <= i <= N-2.
std::vector<long> h_sequence(const CurveProfile& profile, long k);

struct BkResult {
    Rational value;
    long argmax = 0; // smallest maximizing i, 1-based as in the h_{i,k} indexing
};

// B_k = max_{i=2..N} h_{i,k}^2 / ((i-1) h_{i,k} - sum_{j<i} h_{j,k}), exact.
BkResult bk(const CurveProfile& profile, long k);

struct BoundTable {
    CurveProfile profile;
    long k = 0;
    std::vector<long> f;
    std::vector<long> h;
    Rational bk;
    long bk_argmax = 0;
};

BoundTable bound_table(const CurveProfile& profile, long k);

// Explicit upper bound for the number of exceptional projection centers of a
// degree-d space curve:
//
//   sum_{d'=2}^{floor(d/2)} binom(N(d') + 2, 3) * d'^3,   N(d') = binom(d'+3, 3).
//
// Each summand is a Bezout count: forms of degree d' on 3-space span a space
// of dimension N(d'), and binom(N+2, 3) * d'^3 is the degree of the Segre
// image of P^3 x P^(N-1) under O(d', 1). The result is clamped below at 1.
BigInt bound_A(long d);

// C = B_k * (N - 2 - k) * ln(a_bound + d), natural log. Requires
// 2 <= k <= N - 2 and a_bound >= 1.
double constant_C(const CurveProfile& profile, long k, const BigInt& a_bound);

struct EffectiveConstants {
    long d = 0;
    BigInt a_bound;
    double c_of_d = 0.0;
};

// Convenience bundle with a_bound defaulting to bound_A(d).
EffectiveConstants effective_constants(const CurveProfile& profile, long k);
EffectiveConstants effective_constants(const CurveProfile& profile, long k,
                                       const BigInt& a_bound);

} // namespace latmin::bounds

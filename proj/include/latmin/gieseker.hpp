#pragma once

#include <cstdint>
#include <vector>

#include "latmin/bounds.hpp"
#include "latmin/rational.hpp"

namespace latmin::gieseker {

// A weight/degree-drop instance: r_1 >= r_2 >= ... >= r_N and a nondecreasing
// drop sequence with e_1 = 0. Scalar is double or Rational; the Rational
// instantiation is exact end to end.
template <class T>
struct GiesekerInstanceT {
    std::vector<T> r;
    std::vector<T> e;
};

using GiesekerInstance = GiesekerInstanceT<double>;

template <class T>
void validate_instance(const std::vector<T>& r, const std::vector<T>& e);

// Chain minimum
//
//   S = min over 1 = i_0 < i_1 < ... < i_l = N of
//       sum_j (r_{i_j} - r_{i_{j+1}}) (e_{i_j} + e_{i_{j+1}})
//
// computed as a shortest path in the complete DAG on 1..N. `chain` holds the
// witness (1-based, starts at 1, ends at N); value ties are broken toward
// shorter chains, then lexicographically smallest.
template <class T>
struct ChainResultT {
    T value{};
    std::vector<int> chain;
};

using ChainResult = ChainResultT<double>;

template <class T>
ChainResultT<T> chain_min_S(const std::vector<T>& r, const std::vector<T>& e);

template <class T>
ChainResultT<T> chain_min_S(const GiesekerInstanceT<T>& inst);

// Independent oracle: exhaustive minimum over all 2^(N-2) chains. Refuses
// N > 15.
template <class T>
T brute_force_S(const std::vector<T>& r, const std::vector<T>& e);

template <class T>
T brute_force_S(const GiesekerInstanceT<T>& inst);

// psi(r) = B_k * sum_j (r_j - r_N) for nonincreasing r.
double psi(const std::vector<double>& r, const Rational& bk);
Rational psi(const std::vector<Rational>& r, const Rational& bk);

// S at the extremal drop sequence e = h_{.,k} against psi with B_k. The drops
// may be taken at h because S is nondecreasing in every e_i. Floating inputs
// get a 1e-9 comparison slack; rational inputs are compared exactly.
struct MorrisonCheck {
    double s_at_h = 0.0;
    double psi = 0.0;
    bool satisfied = false;
};

struct MorrisonCheckExact {
    Rational s_at_h;
    Rational psi;
    bool satisfied = false;
};

MorrisonCheck morrison_check(const bounds::CurveProfile& profile, long k,
                             const std::vector<double>& r);
MorrisonCheckExact morrison_check(const bounds::CurveProfile& profile, long k,
                                  const std::vector<Rational>& r);

// Exhaustive Morrison sweep: every valid (d, g, k) with g in g_list and
// 2g+1 <= d <= d_max, `trials` random nonincreasing rational weight vectors
// each, checked exactly. `min_margin` is the smallest psi - S seen.
struct SweepResult {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    double min_margin = 0.0;
};

SweepResult morrison_sweep(const std::vector<long>& g_list, long d_max, int trials,
                           std::uint64_t seed);

} // namespace latmin::gieseker

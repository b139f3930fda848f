#include "latmin/bounds.hpp"

#include <cmath>
#include <string>

namespace latmin::bounds {

CurveProfile validate_profile(long d, long g) {
    if (g < 2)
        throw DomainError("genus must satisfy g >= 2, got g = " + std::to_string(g));
    if (d < 2 * g + 1)
        throw DomainError("degree must satisfy d >= 2g + 1, got d = " + std::to_string(d) +
                          " with g = " + std::to_string(g));
    CurveProfile p;
    p.d = d;
    p.g = g;
    p.N = d + 1 - g;
    return p;
}

std::vector<long> f_sequence(const CurveProfile& profile) {
    std::vector<long> f(static_cast<std::size_t>(profile.N));
    const long cut = profile.d - 2 * profile.g;
    for (long i = 1; i <= profile.N; ++i) {
        long base = i - 1;
        long alpha = base <= cut ? 0 : base - cut; // 0 <= alpha <= g for valid profiles
        f[static_cast<std::size_t>(i - 1)] = base + alpha;
    }
    return f;
}

std::vector<long> h_sequence(const CurveProfile& profile, long k) {
    if (k < 2 || k > profile.N)
        throw DomainError("k must satisfy 2 <= k <= N = " + std::to_string(profile.N) +
                          ", got k = " + std::to_string(k));
    std::vector<long> f = f_sequence(profile);
    std::vector<long> h(f.size());
    for (long i = 1; i <= profile.N; ++i) {
        bool keep_f = (i <= k) || (i == profile.N - 1) || (i == profile.N);
        h[static_cast<std::size_t>(i - 1)] =
            keep_f ? f[static_cast<std::size_t>(i - 1)] : f[static_cast<std::size_t>(k - 1)];
    }
    return h;
}

BkResult bk(const CurveProfile& profile, long k) {
    std::vector<long> h = h_sequence(profile, k); // validates k
    BkResult best;
    long prefix = 0; // sum_{j < i} h_j
    for (long i = 2; i <= profile.N; ++i) {
        prefix += h[static_cast<std::size_t>(i - 2)];
        const long hi = h[static_cast<std::size_t>(i - 1)];
        const long denom = (i - 1) * hi - prefix;
        if (denom <= 0)
            throw InternalError("nonpositive denominator at i = " + std::to_string(i) +
                                " while computing B_k");
        Rational candidate(hi * hi, denom);
        candidate.canonicalize();
        if (best.argmax == 0 || candidate > best.value) {
            best.value = candidate;
            best.argmax = i;
        }
    }
    return best;
}

BoundTable bound_table(const CurveProfile& profile, long k) {
    BoundTable t;
    t.profile = profile;
    t.k = k;
    t.f = f_sequence(profile);
    t.h = h_sequence(profile, k);
    BkResult r = bk(profile, k);
    t.bk = r.value;
    t.bk_argmax = r.argmax;
    return t;
}

BigInt bound_A(long d) {
    if (d < 3)
        throw DomainError("bound_A requires d >= 3, got d = " + std::to_string(d));
    BigInt total = 0;
    for (long dp = 2; dp <= d / 2; ++dp) {
        BigInt forms = binomial(static_cast<unsigned long>(dp + 3), 3); // N(d')
        BigInt ambient = forms + 2;
        // binom(ambient, 3) over BigInt; ambient may exceed unsigned long
        BigInt segre_deg = ambient * (ambient - 1) * (ambient - 2) / 6;
        total += segre_deg * BigInt(dp) * dp * dp;
    }
    if (total < 1) total = 1; // d = 3: empty sum, still a valid upper bound
    return total;
}

double constant_C(const CurveProfile& profile, long k, const BigInt& a_bound) {
    if (k < 2 || k > profile.N - 2)
        throw DomainError("constant_C requires 2 <= k <= N - 2, got k = " + std::to_string(k) +
                          " with N = " + std::to_string(profile.N));
    if (a_bound < 1)
        throw DomainError("a_bound must be >= 1");
    BkResult r = bk(profile, k);
    BigInt arg = a_bound + profile.d;
    return to_double(r.value) * static_cast<double>(profile.N - 2 - k) * std::log(to_double(arg));
}

EffectiveConstants effective_constants(const CurveProfile& profile, long k) {
    return effective_constants(profile, k, bound_A(profile.d));
}

EffectiveConstants effective_constants(const CurveProfile& profile, long k,
                                       const BigInt& a_bound) {
    EffectiveConstants c;
    c.d = profile.d;
    c.a_bound = a_bound;
    c.c_of_d = constant_C(profile, k, a_bound);
    return c;
}

} // namespace latmin::bounds

#include "latmin/gieseker.hpp"

#include <limits>
#include <string>

#include "latmin/rng.hpp"

namespace latmin::gieseker {

namespace {

template <class T>
T edge_weight(const std::vector<T>& r, const std::vector<T>& e, int a, int b) {
    return (r[static_cast<std::size_t>(a)] - r[static_cast<std::size_t>(b)]) *
           (e[static_cast<std::size_t>(a)] + e[static_cast<std::size_t>(b)]);
}

} // namespace

template <class T>
void validate_instance(const std::vector<T>& r, const std::vector<T>& e) {
    if (r.size() < 2) throw DomainError("instance needs N >= 2");
    if (e.size() != r.size())
        throw DomainError("r and e must have the same length, got " + std::to_string(r.size()) +
                          " and " + std::to_string(e.size()));
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i - 1] < r[i]) throw DomainError("r must be nonincreasing");
    if (!(e.front() == T(0))) throw DomainError("e[1] must be 0");
    for (std::size_t i = 1; i < e.size(); ++i)
        if (e[i] < e[i - 1]) throw DomainError("e must be nondecreasing");
}

template <class T>
ChainResultT<T> chain_min_S(const std::vector<T>& r, const std::vector<T>& e) {
    validate_instance(r, e);
    const int n = static_cast<int>(r.size());

    struct Node {
        T value{};
        std::vector<int> chain; // 1-based indices
        bool reached = false;
    };
    std::vector<Node> best(static_cast<std::size_t>(n));
    best[0].value = T(0);
    best[0].chain = {1};
    best[0].reached = true;

    for (int b = 1; b < n; ++b) {
        Node& target = best[static_cast<std::size_t>(b)];
        for (int a = 0; a < b; ++a) {
            const Node& from = best[static_cast<std::size_t>(a)];
            T candidate = from.value + edge_weight(r, e, a, b);
            bool take = false;
            if (!target.reached) {
                take = true;
            } else if (candidate < target.value) {
                take = true;
            } else if (candidate == target.value) {
                const std::size_t cand_len = from.chain.size() + 1;
                if (cand_len < target.chain.size()) {
                    take = true;
                } else if (cand_len == target.chain.size()) {
                    // same length, both end at b+1: compare prefixes
                    for (std::size_t i = 0; i < from.chain.size(); ++i) {
                        if (from.chain[i] != target.chain[i]) {
                            take = from.chain[i] < target.chain[i];
                            break;
                        }
                    }
                }
            }
            if (take) {
                target.value = candidate;
                target.chain = from.chain;
                target.chain.push_back(b + 1);
                target.reached = true;
            }
        }
    }

    ChainResultT<T> result;
    result.value = best[static_cast<std::size_t>(n - 1)].value;
    result.chain = best[static_cast<std::size_t>(n - 1)].chain;
    return result;
}

template <class T>
ChainResultT<T> chain_min_S(const GiesekerInstanceT<T>& inst) {
    return chain_min_S(inst.r, inst.e);
}

template <class T>
T brute_force_S(const std::vector<T>& r, const std::vector<T>& e) {
    validate_instance(r, e);
    const int n = static_cast<int>(r.size());
    if (n > 15) throw SizeError("brute_force_S enumerates 2^(N-2) chains; N > 15 refused");

    const int middle = n - 2; // nodes 2..N-1 are optional
    T best{};
    bool have = false;
    std::vector<int> chain;
    for (std::uint32_t mask = 0; mask < (1u << middle); ++mask) {
        chain.clear();
        chain.push_back(0);
        for (int j = 0; j < middle; ++j)
            if (mask & (1u << j)) chain.push_back(j + 1);
        chain.push_back(n - 1);
        T total = T(0);
        for (std::size_t j = 0; j + 1 < chain.size(); ++j)
            total = total + edge_weight(r, e, chain[j], chain[j + 1]);
        if (!have || total < best) {
            best = total;
            have = true;
        }
    }
    return best;
}

template <class T>
T brute_force_S(const GiesekerInstanceT<T>& inst) {
    return brute_force_S(inst.r, inst.e);
}

template void validate_instance<double>(const std::vector<double>&, const std::vector<double>&);
template void validate_instance<Rational>(const std::vector<Rational>&,
                                          const std::vector<Rational>&);
template ChainResultT<double> chain_min_S<double>(const std::vector<double>&,
                                                  const std::vector<double>&);
template ChainResultT<Rational> chain_min_S<Rational>(const std::vector<Rational>&,
                                                      const std::vector<Rational>&);
template ChainResultT<double> chain_min_S<double>(const GiesekerInstanceT<double>&);
template ChainResultT<Rational> chain_min_S<Rational>(const GiesekerInstanceT<Rational>&);
template double brute_force_S<double>(const std::vector<double>&, const std::vector<double>&);
template Rational brute_force_S<Rational>(const std::vector<Rational>&,
                                          const std::vector<Rational>&);
template double brute_force_S<double>(const GiesekerInstanceT<double>&);
template Rational brute_force_S<Rational>(const GiesekerInstanceT<Rational>&);

namespace {

template <class T>
void require_nonincreasing(const std::vector<T>& r) {
    if (r.empty()) throw DomainError("empty weight vector");
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i - 1] < r[i]) throw DomainError("r must be nonincreasing");
}

} // namespace

double psi(const std::vector<double>& r, const Rational& bk) {
    require_nonincreasing(r);
    double sum = 0.0;
    for (double x : r) sum += x - r.back();
    return to_double(bk) * sum;
}

Rational psi(const std::vector<Rational>& r, const Rational& bk) {
    require_nonincreasing(r);
    Rational sum = 0;
    for (const Rational& x : r) sum += x - r.back();
    return bk * sum;
}

MorrisonCheck morrison_check(const bounds::CurveProfile& profile, long k,
                             const std::vector<double>& r) {
    if (static_cast<long>(r.size()) != profile.N)
        throw DomainError("weight vector length must equal N = " + std::to_string(profile.N));
    std::vector<long> h = bounds::h_sequence(profile, k);
    std::vector<double> e(h.begin(), h.end());
    MorrisonCheck out;
    out.s_at_h = chain_min_S(r, e).value;
    out.psi = psi(r, bounds::bk(profile, k).value);
    out.satisfied = out.s_at_h <= out.psi + 1e-9;
    return out;
}

MorrisonCheckExact morrison_check(const bounds::CurveProfile& profile, long k,
                                  const std::vector<Rational>& r) {
    if (static_cast<long>(r.size()) != profile.N)
        throw DomainError("weight vector length must equal N = " + std::to_string(profile.N));
    std::vector<long> h = bounds::h_sequence(profile, k);
    std::vector<Rational> e;
    e.reserve(h.size());
    for (long v : h) e.emplace_back(v);
    MorrisonCheckExact out;
    out.s_at_h = chain_min_S(r, e).value;
    out.psi = psi(r, bounds::bk(profile, k).value);
    out.satisfied = out.s_at_h <= out.psi;
    return out;
}

SweepResult morrison_sweep(const std::vector<long>& g_list, long d_max, int trials,
                           std::uint64_t seed) {
    if (g_list.empty() || trials < 1) throw DomainError("sweep needs genera and trials >= 1");
    Rng rng(seed);
    SweepResult result;
    bool have_margin = false;
    for (long g : g_list) {
        for (long d = 2 * g + 1; d <= d_max; ++d) {
            const bounds::CurveProfile profile = bounds::validate_profile(d, g);
            for (long k = 2; k <= profile.N; ++k) {
                for (int t = 0; t < trials; ++t) {
                    std::vector<Rational> r =
                        random_nonincreasing(rng, static_cast<int>(profile.N), 0, 10);
                    MorrisonCheckExact check = morrison_check(profile, k, r);
                    ++result.checked;
                    if (!check.satisfied) ++result.violations;
                    double margin = to_double(check.psi - check.s_at_h);
                    if (!have_margin || margin < result.min_margin) {
                        result.min_margin = margin;
                        have_margin = true;
                    }
                }
            }
        }
    }
    return result;
}

} // namespace latmin::gieseker

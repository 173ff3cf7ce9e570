#ifndef EDGECODE_METRICS_HPP
#define EDGECODE_METRICS_HPP

/// Exact code parameters by enumeration (minimum distance, weight
/// distribution) and the closed-form zero counts / footprint upper bound
/// used to cross-check them.
///
/// Enumeration walks coefficient vectors as base-q digit strings, coefficient
/// 0 most significant. By default only projective representatives are visited
/// (first nonzero coefficient equal to 1); Hamming weight is invariant under
/// scaling, so this is lossless for the distance and recovers the full weight
/// distribution with multiplicity q-1 per class. The message space is split
/// into contiguous index ranges across workers; min/histogram reductions are
/// order-independent and the reported witness is the globally first attaining
/// vector in enumeration order regardless of partitioning.

#include <chrono>
#include <cstdint>
#include <map>
#include <thread>
#include <vector>

#include "torus_code.hpp"

namespace edgecode {

inline constexpr unsigned long long kDefaultMaxMessages = 1ULL << 32;

struct SearchOptions {
    unsigned long long max_messages = kDefaultMaxMessages;
    unsigned workers = 1;
    bool full_enumeration = false; // enumerate all q^n messages instead of projective classes
};

struct DistanceResult {
    unsigned long long distance = 0;
    std::vector<Elem> witness;
    unsigned long long search_space = 0; // candidates examined
    double elapsed_sec = 0.0;
};

struct WeightDistribution {
    std::map<unsigned long long, unsigned long long> counts; // weight -> A_i, including A_0 = 1
    unsigned long long length = 0;
    std::size_t dimension = 0;

    unsigned long long minimum_distance() const {
        for (const auto& [w, a] : counts)
            if (w > 0 && a > 0) return w;
        return 0;
    }
};

namespace detail {

inline unsigned long long checked_pow(unsigned long long base, std::size_t e, unsigned long long limit,
                                      const char* what) {
    unsigned long long n = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (n > limit / base)
            throw SearchTooLarge(std::string(what) + " needs more than " + std::to_string(limit) + " candidates");
        n *= base;
    }
    if (n > limit)
        throw SearchTooLarge(std::string(what) + " needs " + std::to_string(n) + " candidates, limit is " +
                             std::to_string(limit));
    return n;
}

inline std::vector<Elem> message_digits(unsigned long long index, unsigned q, std::size_t n) {
    std::vector<Elem> lambda(n);
    for (std::size_t i = n; i-- > 0;) {
        lambda[i] = static_cast<Elem>(index % q);
        index /= q;
    }
    return lambda;
}

/// Column-major weight evaluation over precomputed generator rows.
inline unsigned long long message_weight(const EdgeCode& code, const std::vector<Elem>& lambda,
                                         const std::vector<std::size_t>& support) {
    const auto& f = code.field();
    const auto& rows = code.rows();
    unsigned long long w = 0;
    for (unsigned long long c = 0; c < code.length(); ++c) {
        Elem acc = 0;
        for (std::size_t i : support) acc = f.add(acc, f.mul(lambda[i], rows[i][c]));
        if (acc != 0) ++w;
    }
    return w;
}

inline bool is_projective_representative(const std::vector<Elem>& lambda) {
    for (Elem x : lambda) {
        if (x == 0) continue;
        return x == 1;
    }
    return false;
}

template <typename Visit>
void scan_range(const EdgeCode& code, unsigned long long lo, unsigned long long hi, bool full, Visit&& visit) {
    const unsigned q = code.field().q();
    const std::size_t n = code.dimension_bound();
    std::vector<std::size_t> support;
    for (unsigned long long idx = lo; idx < hi; ++idx) {
        auto lambda = message_digits(idx, q, n);
        if (!full && !is_projective_representative(lambda)) continue;
        support.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (lambda[i] != 0) support.push_back(i);
        visit(idx, lambda, message_weight(code, lambda, support));
    }
}

} // namespace detail

/// Exact minimum distance with a deterministic witness (first attaining
/// coefficient vector in enumeration order).
inline DistanceResult minimum_distance_exhaustive(const EdgeCode& code, const SearchOptions& opts = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    const unsigned q = code.field().q();
    const std::size_t n = code.dimension_bound();
    const auto total = detail::checked_pow(q, n, opts.max_messages, "distance search");

    struct Partial {
        unsigned long long best_w = ~0ULL;
        unsigned long long best_idx = ~0ULL;
        unsigned long long examined = 0;
    };
    const unsigned workers = std::max(1u, opts.workers);
    std::vector<Partial> parts(workers);
    auto run = [&](unsigned w) {
        const unsigned long long lo = 1 + (total - 1) * w / workers;
        const unsigned long long hi = 1 + (total - 1) * (w + 1) / workers;
        auto& part = parts[w];
        detail::scan_range(code, lo, hi, opts.full_enumeration,
                           [&](unsigned long long idx, const std::vector<Elem>&, unsigned long long weight) {
                               ++part.examined;
                               if (weight < part.best_w || (weight == part.best_w && idx < part.best_idx)) {
                                   part.best_w = weight;
                                   part.best_idx = idx;
                               }
                           });
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    Partial best;
    for (const auto& p : parts) {
        best.examined += p.examined;
        if (p.best_w < best.best_w || (p.best_w == best.best_w && p.best_idx < best.best_idx)) {
            best.best_w = p.best_w;
            best.best_idx = p.best_idx;
        }
    }
    DistanceResult res;
    res.distance = best.best_w;
    res.witness = detail::message_digits(best.best_idx, q, n);
    res.search_space = best.examined;
    res.elapsed_sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

/// Complete weight distribution. With projective collapse each class counts
/// with multiplicity q-1.
inline WeightDistribution weight_distribution(const EdgeCode& code, const SearchOptions& opts = {}) {
    const unsigned q = code.field().q();
    const std::size_t n = code.dimension_bound();
    const auto total = detail::checked_pow(q, n, opts.max_messages, "weight enumeration");

    const unsigned workers = std::max(1u, opts.workers);
    std::vector<std::map<unsigned long long, unsigned long long>> parts(workers);
    auto run = [&](unsigned w) {
        const unsigned long long lo = 1 + (total - 1) * w / workers;
        const unsigned long long hi = 1 + (total - 1) * (w + 1) / workers;
        detail::scan_range(code, lo, hi, opts.full_enumeration,
                           [&](unsigned long long, const std::vector<Elem>&, unsigned long long weight) {
                               parts[w][weight] += opts.full_enumeration ? 1 : q - 1;
                           });
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    WeightDistribution dist;
    dist.length = code.length();
    dist.dimension = n;
    dist.counts[0] = 1;
    for (const auto& p : parts)
        for (const auto& [w, a] : p) dist.counts[w] += a;
    return dist;
}

// ---- closed-form zero counts ----------------------------------------------

inline unsigned long long ipow(unsigned long long b, unsigned e) {
    unsigned long long r = 1;
    while (e--) r *= b;
    return r;
}

/// Zeros of a product of d pairwise variable-disjoint binomials on the torus:
/// (q-1)^s - (q-2)^d (q-1)^{s-d}.
inline unsigned long long zeros_disjoint_binomials(int s, int d, unsigned q) {
    if (q < 3 || d < 0 || d > s) throw BadParams("need q >= 3 and 0 <= d <= s");
    return ipow(q - 1, s) - ipow(q - 2, d) * ipow(q - 1, s - d);
}

/// Zeros of a linear form with r nonzero terms in distinct variables:
/// the alternating sum (q-1)^{s-1} - (q-1)^{s-2} + ... (r-1 terms).
inline unsigned long long zeros_linear_form(int r, int s, unsigned q) {
    if (r < 2 || r > s) throw BadParams("need 2 <= r <= s");
    long long acc = 0;
    for (int i = 1; i <= r - 1; ++i) acc += (i % 2 == 1 ? 1LL : -1LL) * static_cast<long long>(ipow(q - 1, s - i));
    return static_cast<unsigned long long>(acc);
}

/// Zeros of a tree edge polynomial with r monomials: the same alternating sum,
/// 0 when r = 1 (a single monomial never vanishes on the torus).
inline unsigned long long zeros_tree_poly(int r, int s, unsigned q) {
    if (r < 1 || s < 1 || q < 3) throw BadParams("need r >= 1, s >= 1, q >= 3");
    if (r == 1) return 0;
    if (r - 1 > s) throw BadParams("alternating sum exponent would go negative");
    long long acc = 0;
    for (int i = 1; i <= r - 1; ++i) acc += (i % 2 == 1 ? 1LL : -1LL) * static_cast<long long>(ipow(q - 1, s - i));
    return static_cast<unsigned long long>(acc);
}

// ---- footprint bound -------------------------------------------------------

namespace detail {

/// Graded reverse lexicographic order with t_1 > ... > t_s on 0/1 exponent
/// vectors (edges as vertex sets): higher degree wins; at equal degree the
/// monomial whose rightmost differing variable is absent wins.
inline bool grevlex_less(const Edge& a, const Edge& b, int s) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (int v = s; v >= 1; --v) {
        const bool in_a = std::binary_search(a.begin(), a.end(), v);
        const bool in_b = std::binary_search(b.begin(), b.end(), v);
        if (in_a != in_b) return in_a; // a has the rightmost differing variable -> a smaller
    }
    return false;
}

} // namespace detail

/// Upper bound on |V_T(f)| from the leading monomial t^a under grevlex:
/// (q-1)^s - prod_k (q-1-a_k). Throws ZeroPolynomial for f = 0.
inline unsigned long long footprint_bound(const Field& field, const EdgePolynomial& f) {
    const int s = f.hypergraph.s;
    const Edge* lead = nullptr;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (f.coeffs[i] == 0) continue;
        const Edge& e = f.hypergraph.edges[i];
        if (!lead || detail::grevlex_less(*lead, e, s)) lead = &e;
    }
    if (!lead) throw ZeroPolynomial("footprint bound of the zero polynomial");
    const int d = static_cast<int>(lead->size());
    return ipow(field.q() - 1, s) - ipow(field.q() - 2, d) * ipow(field.q() - 1, s - d);
}

} // namespace edgecode

#endif

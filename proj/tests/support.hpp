#pragma once

// Shared test utilities: a deterministic RNG, random geometry generators, and
// arrangement-complete probe grids for pointwise set oracles.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "quaderint/geometry.hpp"

namespace qtest {

using namespace quaderint;

// All randomness goes through raw mt19937_64 draws with modulo mapping, so
// sequences are identical across platforms.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    std::uint64_t next(std::uint64_t bound) { return gen() % bound; }  // [0, bound)
    long next_int(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    bool coin() { return next(2) == 1; }
};

inline Rational random_rational(Rng& rng, long num_range = 8, long max_den = 4) {
    return Rational(Integer(rng.next_int(-num_range, num_range)),
                    Integer(rng.next_int(1, max_den)));
}

inline Interval random_bounded_interval(Rng& rng) {
    Rational a = random_rational(rng), b = random_rational(rng);
    if (a > b) std::swap(a, b);
    return Interval::make(Endpoint::finite(a, rng.coin()), Endpoint::finite(b, rng.coin()));
}

inline Quader random_bounded_quader(Rng& rng, std::size_t dim) {
    std::vector<Interval> fs;
    for (std::size_t i = 0; i < dim; ++i) fs.push_back(random_bounded_interval(rng));
    return Quader(std::move(fs));
}

inline Quader random_nonempty_quader(Rng& rng, std::size_t dim) {
    for (;;) {
        Quader q = random_bounded_quader(rng, dim);
        if (!q.is_empty()) return q;
    }
}

inline Parkettable random_parkettable(Rng& rng, std::size_t dim, std::size_t quaders) {
    Parkettable p(dim);
    for (std::size_t i = 0; i < quaders; ++i)
        p = pk_union(p, pk_from_quader(random_bounded_quader(rng, dim)));
    return p;
}

// Probe values per axis: every finite endpoint, midpoints between neighbors,
// and one value beyond each extreme. Membership in any set assembled from the
// given quaders is constant between consecutive endpoints, so these probes
// decide set equality exactly.
inline std::vector<Rational> axis_probes(const std::vector<const Quader*>& qs, std::size_t axis) {
    std::set<Rational> vals;
    for (const Quader* q : qs) {
        if (q->is_empty()) continue;
        const Interval& f = q->factor(axis);
        if (f.lower().is_finite()) vals.insert(f.lower().value);
        if (f.upper().is_finite()) vals.insert(f.upper().value);
    }
    if (vals.empty()) vals.insert(Rational(0));
    std::vector<Rational> sorted(vals.begin(), vals.end());
    std::vector<Rational> probes;
    probes.push_back(sorted.front() - 1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        probes.push_back(sorted[i]);
        if (i + 1 < sorted.size()) probes.push_back((sorted[i] + sorted[i + 1]) / 2);
    }
    probes.push_back(sorted.back() + 1);
    return probes;
}

// Runs fn on every point of the probe grid spanned by the quaders' endpoints.
template <class Fn>
void for_each_probe(const std::vector<const Quader*>& qs, std::size_t dim, Fn&& fn) {
    std::vector<std::vector<Rational>> axes;
    for (std::size_t a = 0; a < dim; ++a) axes.push_back(axis_probes(qs, a));
    std::vector<std::size_t> idx(dim, 0);
    std::vector<Rational> pt(dim);
    for (;;) {
        for (std::size_t a = 0; a < dim; ++a) pt[a] = axes[a][idx[a]];
        fn(pt);
        std::size_t a = 0;
        while (a < dim && ++idx[a] == axes[a].size()) idx[a++] = 0;
        if (a == dim) break;
    }
}

inline std::vector<const Quader*> collect_pieces(const std::vector<const Parkettable*>& ps) {
    std::vector<const Quader*> out;
    for (const Parkettable* p : ps)
        for (const Quader& q : p->pieces()) out.push_back(&q);
    return out;
}

}  // namespace qtest

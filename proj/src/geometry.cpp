#include "quaderint/geometry.hpp"

#include <algorithm>

namespace quaderint {

int cmp_lower(const Endpoint& a, const Endpoint& b) {
    auto rank = [](const Endpoint& e) {
        return e.kind == Endpoint::Kind::NegInf ? 0 : e.kind == Endpoint::Kind::Finite ? 1 : 2;
    };
    if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
    if (a.kind != Endpoint::Kind::Finite) return 0;
    if (a.value != b.value) return a.value < b.value ? -1 : 1;
    if (a.closed == b.closed) return 0;
    return a.closed ? -1 : 1;  // closed bound starts earlier
}

int cmp_upper(const Endpoint& a, const Endpoint& b) {
    auto rank = [](const Endpoint& e) {
        return e.kind == Endpoint::Kind::NegInf ? 0 : e.kind == Endpoint::Kind::Finite ? 1 : 2;
    };
    if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
    if (a.kind != Endpoint::Kind::Finite) return 0;
    if (a.value != b.value) return a.value < b.value ? -1 : 1;
    if (a.closed == b.closed) return 0;
    return a.closed ? 1 : -1;  // open bound ends earlier
}

Interval Interval::make(Endpoint lo, Endpoint hi) {
    if (lo.kind == Endpoint::Kind::PosInf || hi.kind == Endpoint::Kind::NegInf)
        throw ContractError("interval bounds reversed at infinity");
    bool nonempty;
    if (lo.is_finite() && hi.is_finite()) {
        if (lo.value < hi.value)
            nonempty = true;
        else if (lo.value == hi.value)
            nonempty = lo.closed && hi.closed;
        else
            nonempty = false;
    } else {
        nonempty = true;
    }
    Interval iv;
    if (nonempty) {
        iv.empty_ = false;
        iv.lo_ = std::move(lo);
        iv.hi_ = std::move(hi);
    }
    return iv;
}

Interval Interval::closed(const Rational& a, const Rational& b) {
    return make(Endpoint::finite(a, true), Endpoint::finite(b, true));
}
Interval Interval::open(const Rational& a, const Rational& b) {
    return make(Endpoint::finite(a, false), Endpoint::finite(b, false));
}
Interval Interval::left_open(const Rational& a, const Rational& b) {
    return make(Endpoint::finite(a, false), Endpoint::finite(b, true));
}
Interval Interval::right_open(const Rational& a, const Rational& b) {
    return make(Endpoint::finite(a, true), Endpoint::finite(b, false));
}
Interval Interval::all() { return make(Endpoint::neg_inf(), Endpoint::pos_inf()); }

const Endpoint& Interval::lower() const {
    if (empty_) throw ContractError("empty interval has no bounds");
    return lo_;
}
const Endpoint& Interval::upper() const {
    if (empty_) throw ContractError("empty interval has no bounds");
    return hi_;
}

bool Interval::contains(const Rational& t) const {
    if (empty_) return false;
    if (lo_.is_finite() && (lo_.closed ? t < lo_.value : t <= lo_.value)) return false;
    if (hi_.is_finite() && (hi_.closed ? t > hi_.value : t >= hi_.value)) return false;
    return true;
}

bool Interval::is_bounded() const { return empty_ || (lo_.is_finite() && hi_.is_finite()); }

bool Interval::is_degenerate() const {
    return empty_ || (lo_.is_finite() && hi_.is_finite() && lo_.value == hi_.value);
}

bool Interval::is_open() const {
    return empty_ || ((!lo_.is_finite() || !lo_.closed) && (!hi_.is_finite() || !hi_.closed));
}

bool Interval::is_closed() const {
    return empty_ || ((!lo_.is_finite() || lo_.closed) && (!hi_.is_finite() || hi_.closed));
}

Rational Interval::length() const {
    if (empty_) return Rational(0);
    if (!is_bounded()) throw ContractError("length of unbounded interval");
    return Rational(hi_.value - lo_.value);
}

Interval Interval::closure() const {
    if (empty_) return *this;
    Endpoint lo = lo_, hi = hi_;
    if (lo.is_finite()) lo.closed = true;
    if (hi.is_finite()) hi.closed = true;
    return make(std::move(lo), std::move(hi));
}

bool Interval::subset_of(const Interval& o) const {
    if (empty_) return true;
    if (o.empty_) return false;
    return cmp_lower(lo_, o.lo_) >= 0 && cmp_upper(hi_, o.hi_) <= 0;
}

Interval intersect(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    Endpoint lo = cmp_lower(a.lower(), b.lower()) >= 0 ? a.lower() : b.lower();
    Endpoint hi = cmp_upper(a.upper(), b.upper()) <= 0 ? a.upper() : b.upper();
    return Interval::make(std::move(lo), std::move(hi));
}

Interval interval_hull(const Interval& a, const Interval& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    Endpoint lo = cmp_lower(a.lower(), b.lower()) <= 0 ? a.lower() : b.lower();
    Endpoint hi = cmp_upper(a.upper(), b.upper()) >= 0 ? a.upper() : b.upper();
    return Interval::make(std::move(lo), std::move(hi));
}

Quader::Quader(std::vector<Interval> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw ContractError("quader needs dimension >= 1");
    for (const auto& f : factors_)
        if (f.is_empty()) {
            empty_ = true;
            break;
        }
    if (empty_)
        for (auto& f : factors_) f = Interval::empty();
}

Quader Quader::empty(std::size_t dim) {
    return Quader(std::vector<Interval>(dim, Interval::empty()));
}

Quader Quader::whole_space(std::size_t dim) {
    return Quader(std::vector<Interval>(dim, Interval::all()));
}

bool Quader::is_bounded() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const Interval& f) { return f.is_bounded(); });
}

bool Quader::is_degenerate() const {
    return empty_ || std::any_of(factors_.begin(), factors_.end(),
                                 [](const Interval& f) { return f.is_degenerate(); });
}

bool Quader::is_open() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const Interval& f) { return f.is_open(); });
}

bool Quader::is_closed() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const Interval& f) { return f.is_closed(); });
}

bool Quader::contains(const std::vector<Rational>& x) const {
    if (x.size() != dim()) throw ContractError("point dimension mismatch");
    if (empty_) return false;
    for (std::size_t i = 0; i < dim(); ++i)
        if (!factors_[i].contains(x[i])) return false;
    return true;
}

bool Quader::subset_of(const Quader& o) const {
    if (dim() != o.dim()) throw ContractError("quader dimension mismatch");
    if (empty_) return true;
    if (o.empty_) return false;
    for (std::size_t i = 0; i < dim(); ++i)
        if (!factors_[i].subset_of(o.factors_[i])) return false;
    return true;
}

Quader Quader::closure() const {
    if (empty_) return *this;
    std::vector<Interval> fs;
    fs.reserve(dim());
    for (const Interval& f : factors_) fs.push_back(f.closure());
    return Quader(std::move(fs));
}

Quader intersect_quader(const Quader& a, const Quader& b) {
    if (a.dim() != b.dim()) throw ContractError("quader dimension mismatch");
    std::vector<Interval> fs;
    fs.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) fs.push_back(intersect(a.factor(i), b.factor(i)));
    return Quader(std::move(fs));
}

bool quader_disjoint(const Quader& a, const Quader& b) {
    return intersect_quader(a, b).is_empty();
}

Quader bounding_quader(const Quader& a, const Quader& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    if (a.dim() != b.dim()) throw ContractError("quader dimension mismatch");
    std::vector<Interval> fs;
    fs.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        fs.push_back(interval_hull(a.factor(i), b.factor(i)).closure());
    return Quader(std::move(fs));
}

Quader slice_quader(const Quader& q, std::size_t from, std::size_t count) {
    if (from + count > q.dim()) throw ContractError("quader slice out of range");
    std::vector<Interval> fs(q.factors().begin() + static_cast<std::ptrdiff_t>(from),
                             q.factors().begin() + static_cast<std::ptrdiff_t>(from + count));
    return Quader(std::move(fs));
}

Quader concat_quader(const Quader& a, const Quader& b) {
    if (a.is_empty() || b.is_empty()) return Quader::empty(a.dim() + b.dim());
    std::vector<Interval> fs = a.factors();
    fs.insert(fs.end(), b.factors().begin(), b.factors().end());
    return Quader(std::move(fs));
}

namespace {

// The two 1-d complement pieces of outer around nonempty inner: everything up
// to inf(inner), and everything from sup(inner) on.
std::pair<Interval, Interval> flank(const Interval& inner, const Interval& outer) {
    Interval left, right;
    if (inner.lower().is_finite())
        left = Interval::make(outer.lower(),
                              Endpoint::finite(inner.lower().value, !inner.lower().closed));
    if (inner.upper().is_finite())
        right = Interval::make(Endpoint::finite(inner.upper().value, !inner.upper().closed),
                               outer.upper());
    return {std::move(left), std::move(right)};
}

Quader append_factor(const Quader& q, const Interval& iv) {
    std::vector<Interval> fs = q.factors();
    fs.push_back(iv);
    return Quader(std::move(fs));
}

Quader drop_last_factor(const Quader& q) {
    std::vector<Interval> fs(q.factors().begin(), q.factors().end() - 1);
    return Quader(std::move(fs));
}

// Ordered pieces including empty ones; piece 0 is inner. Preconditions: same
// dimension, both nonempty, inner subset of outer.
std::vector<Quader> split_full(const Quader& inner, const Quader& outer) {
    std::size_t n = inner.dim();
    if (n == 1) {
        auto [left, right] = flank(inner.factor(0), outer.factor(0));
        return {inner, Quader({left}), Quader({right})};
    }
    auto sub = split_full(drop_last_factor(inner), drop_last_factor(outer));
    const Interval& jn = inner.factor(n - 1);
    auto [left, right] = flank(jn, outer.factor(n - 1));
    std::vector<Quader> out;
    out.reserve(sub.size() + 2);
    for (const Quader& q : sub) out.push_back(append_factor(q, jn));
    // Remaining slab of the last axis, over the full outer base.
    Quader outer_base = drop_last_factor(outer);
    out.push_back(append_factor(outer_base, left));
    out.push_back(append_factor(outer_base, right));
    return out;
}

}  // namespace

std::vector<Quader> split_around(const Quader& inner, const Quader& outer) {
    if (inner.dim() != outer.dim()) throw ContractError("quader dimension mismatch");
    if (!inner.subset_of(outer)) throw ContractError("split_around: inner not inside outer");
    if (outer.is_empty()) return {};
    if (inner.is_empty()) return {outer};
    auto full = split_full(inner, outer);
    std::vector<Quader> out;
    out.reserve(full.size());
    for (auto& q : full)
        if (!q.is_empty()) out.push_back(std::move(q));
    return out;
}

Parkettable::Parkettable(std::size_t dim, std::vector<Quader> pieces, bool verify) : dim_(dim) {
    for (auto& q : pieces) {
        if (q.dim() != dim_) throw ContractError("parkettable piece dimension mismatch");
        if (q.is_empty()) continue;
        pieces_.push_back(std::move(q));
    }
    if (verify) {
        for (const auto& q : pieces_)
            if (!q.is_bounded()) throw ContractError("parkettable piece must be bounded");
        for (std::size_t i = 0; i < pieces_.size(); ++i)
            for (std::size_t j = i + 1; j < pieces_.size(); ++j)
                if (!quader_disjoint(pieces_[i], pieces_[j]))
                    throw ContractError("parkettable pieces must be pairwise disjoint");
    }
}

bool Parkettable::contains(const std::vector<Rational>& x) const {
    return std::any_of(pieces_.begin(), pieces_.end(),
                       [&](const Quader& q) { return q.contains(x); });
}

Quader Parkettable::bounding_box() const {
    if (pieces_.empty()) return Quader::empty(dim_);
    Quader box = pieces_[0];
    for (std::size_t i = 1; i < pieces_.size(); ++i) box = bounding_quader(box, pieces_[i]);
    // closed hull
    std::vector<Interval> fs;
    fs.reserve(dim_);
    for (const auto& f : box.factors()) fs.push_back(f.closure());
    return Quader(std::move(fs));
}

Parkettable pk_from_quader(const Quader& q) { return Parkettable(q.dim(), {q}); }

Parkettable pk_intersect(const Parkettable& a, const Parkettable& b) {
    if (a.dim() != b.dim()) throw ContractError("parkettable dimension mismatch");
    std::vector<Quader> out;
    for (const Quader& p : a.pieces())
        for (const Quader& q : b.pieces()) {
            Quader c = intersect_quader(p, q);
            if (!c.is_empty()) out.push_back(std::move(c));
        }
    return Parkettable(a.dim(), std::move(out), false);
}

Parkettable pk_diff(const Parkettable& a, const Parkettable& b) {
    if (a.dim() != b.dim()) throw ContractError("parkettable dimension mismatch");
    std::vector<Quader> cur = a.pieces();
    for (const Quader& q : b.pieces()) {
        std::vector<Quader> next;
        for (const Quader& piece : cur) {
            Quader c = intersect_quader(piece, q);
            if (c.is_empty()) {
                next.push_back(piece);
                continue;
            }
            auto parts = split_around(c, piece);
            next.insert(next.end(), std::make_move_iterator(parts.begin() + 1),
                        std::make_move_iterator(parts.end()));
        }
        cur = std::move(next);
    }
    return Parkettable(a.dim(), std::move(cur), false);
}

Parkettable pk_union(const Parkettable& a, const Parkettable& b) {
    if (a.dim() != b.dim()) throw ContractError("parkettable dimension mismatch");
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    Quader r = bounding_quader(a.bounding_box(), b.bounding_box());
    Parkettable whole = pk_from_quader(r);
    Parkettable outside = pk_intersect(pk_diff(whole, a), pk_diff(whole, b));
    return pk_diff(whole, outside);
}

bool pk_set_equal(const Parkettable& a, const Parkettable& b) {
    return pk_diff(a, b).is_empty() && pk_diff(b, a).is_empty();
}

Refinement common_refinement(const std::vector<std::vector<Quader>>& families) {
    std::size_t dim = 0;
    bool have_dim = false;
    for (const auto& fam : families)
        for (const auto& q : fam) {
            if (have_dim && q.dim() != dim) throw ContractError("refinement dimension mismatch");
            dim = q.dim();
            have_dim = true;
        }
    if (!have_dim) throw ContractError("refinement needs at least one quader");

    for (const auto& fam : families) {
        for (const auto& q : fam)
            if (!q.is_bounded()) throw ContractError("refinement quader must be bounded");
        for (std::size_t i = 0; i < fam.size(); ++i)
            for (std::size_t j = i + 1; j < fam.size(); ++j)
                if (!quader_disjoint(fam[i], fam[j]))
                    throw ContractError("refinement family must be internally disjoint");
    }

    struct Atom {
        Quader q;
        std::vector<std::pair<std::size_t, std::size_t>> owners;
    };
    std::vector<Atom> atoms;
    for (std::size_t f = 0; f < families.size(); ++f)
        for (std::size_t j = 0; j < families[f].size(); ++j) {
            const Quader& q = families[f][j];
            if (q.is_empty()) continue;
            std::vector<Atom> next;
            std::vector<Quader> rest{q};
            for (auto& a : atoms) {
                Quader c = intersect_quader(a.q, q);
                if (c.is_empty()) {
                    next.push_back(std::move(a));
                    continue;
                }
                auto parts = split_around(c, a.q);
                for (std::size_t t = 1; t < parts.size(); ++t)
                    next.push_back({std::move(parts[t]), a.owners});
                auto owners = std::move(a.owners);
                owners.emplace_back(f, j);
                next.push_back({std::move(c), std::move(owners)});
                std::vector<Quader> nrest;
                for (auto& r : rest) {
                    Quader rc = intersect_quader(r, a.q);
                    if (rc.is_empty()) {
                        nrest.push_back(std::move(r));
                        continue;
                    }
                    auto rparts = split_around(rc, r);
                    for (std::size_t t = 1; t < rparts.size(); ++t)
                        nrest.push_back(std::move(rparts[t]));
                }
                rest = std::move(nrest);
            }
            for (auto& r : rest) next.push_back({std::move(r), {{f, j}}});
            atoms = std::move(next);
        }

    Refinement out;
    std::vector<Quader> pieces;
    pieces.reserve(atoms.size());
    out.owners.reserve(atoms.size());
    out.certificate.resize(families.size());
    for (std::size_t f = 0; f < families.size(); ++f) out.certificate[f].resize(families[f].size());
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        pieces.push_back(atoms[i].q);
        out.owners.push_back(atoms[i].owners);
        for (auto [f, j] : atoms[i].owners) out.certificate[f][j].push_back(i);
    }
    out.pieces = Parkettable(dim, std::move(pieces), false);
    return out;
}

}  // namespace quaderint

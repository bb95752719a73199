#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "quaderint/rational.hpp"

namespace quaderint {

// One end of an interval. Infinite endpoints are never closed and carry value 0
// so that defaulted equality works.
struct Endpoint {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    Rational value{};
    bool closed = false;

    static Endpoint neg_inf() { return {Kind::NegInf, Rational(0), false}; }
    static Endpoint pos_inf() { return {Kind::PosInf, Rational(0), false}; }
    static Endpoint finite(Rational v, bool closed) {
        return {Kind::Finite, std::move(v), closed};
    }
    bool is_finite() const { return kind == Kind::Finite; }
    bool operator==(const Endpoint&) const = default;
};

// Orders positions of lower bounds: larger = starts later = tighter.
// At equal finite values a closed bound starts earlier than an open one.
int cmp_lower(const Endpoint& a, const Endpoint& b);
// Orders positions of upper bounds: smaller = ends earlier = tighter.
int cmp_upper(const Endpoint& a, const Endpoint& b);

// Nonempty intervals satisfy lower < upper, or lower == upper with both ends
// closed (a single point). The empty interval is canonical (flag, no bounds).
class Interval {
public:
    Interval() = default;  // empty
    static Interval empty() { return Interval(); }
    static Interval make(Endpoint lo, Endpoint hi);
    static Interval closed(const Rational& a, const Rational& b);
    static Interval open(const Rational& a, const Rational& b);
    static Interval left_open(const Rational& a, const Rational& b);   // ]a,b]
    static Interval right_open(const Rational& a, const Rational& b);  // [a,b[
    static Interval point(const Rational& a) { return closed(a, a); }
    static Interval all();  // the real line

    bool is_empty() const { return empty_; }
    const Endpoint& lower() const;
    const Endpoint& upper() const;
    bool contains(const Rational& t) const;
    bool is_bounded() const;
    bool is_degenerate() const;  // empty or a single point
    bool is_open() const;        // no closed finite endpoint (empty counts)
    bool is_closed() const;      // no open finite endpoint (empty counts)
    Rational length() const;     // sup - inf; 0 for empty; requires boundedness
    Interval closure() const;
    bool subset_of(const Interval& o) const;
    bool operator==(const Interval&) const = default;

private:
    bool empty_ = true;
    Endpoint lo_{}, hi_{};
};

Interval intersect(const Interval& a, const Interval& b);
// Smallest interval containing both (exact for hulls of overlapping/adjacent
// pieces; in general just a superset certificate).
Interval interval_hull(const Interval& a, const Interval& b);

// Product of n >= 1 intervals. Empty iff some factor is empty; the empty
// quader of each dimension is canonical (all factors empty).
class Quader {
public:
    explicit Quader(std::vector<Interval> factors);
    static Quader empty(std::size_t dim);
    static Quader whole_space(std::size_t dim);

    std::size_t dim() const { return factors_.size(); }
    const Interval& factor(std::size_t i) const { return factors_[i]; }
    const std::vector<Interval>& factors() const { return factors_; }
    bool is_empty() const { return empty_; }
    bool is_bounded() const;
    bool is_degenerate() const;  // empty or some factor degenerate
    bool is_open() const;
    bool is_closed() const;
    bool contains(const std::vector<Rational>& x) const;
    bool subset_of(const Quader& o) const;
    Quader closure() const;  // componentwise closure; empty stays empty
    bool operator==(const Quader&) const = default;

private:
    std::vector<Interval> factors_;
    bool empty_ = false;
};

Quader intersect_quader(const Quader& a, const Quader& b);
bool quader_disjoint(const Quader& a, const Quader& b);
// Componentwise closed hull [min inf, max sup]; both nonempty and bounded.
Quader bounding_quader(const Quader& a, const Quader& b);
// Factors [from, from+count) as a quader of dimension count.
Quader slice_quader(const Quader& q, std::size_t from, std::size_t count);
Quader concat_quader(const Quader& a, const Quader& b);

// Splits outer into inner plus at most 2n complements. Piece 0 is inner (when
// nonempty); every prefix union of the returned list is again a quader; pieces
// are pairwise disjoint and empty ones are dropped.
std::vector<Quader> split_around(const Quader& inner, const Quader& outer);

// Finite union of pairwise disjoint nonempty bounded quaders. Not canonical:
// equality of sets is pk_set_equal, not ==.
class Parkettable {
public:
    Parkettable() = default;  // dimension 0: only useful as a placeholder
    explicit Parkettable(std::size_t dim) : dim_(dim) {}
    Parkettable(std::size_t dim, std::vector<Quader> pieces, bool verify = true);

    std::size_t dim() const { return dim_; }
    const std::vector<Quader>& pieces() const { return pieces_; }
    bool is_empty() const { return pieces_.empty(); }
    bool contains(const std::vector<Rational>& x) const;
    // Closed componentwise hull; the empty quader when the set is empty.
    Quader bounding_box() const;

private:
    std::size_t dim_ = 0;
    std::vector<Quader> pieces_;
};

Parkettable pk_from_quader(const Quader& q);
Parkettable pk_intersect(const Parkettable& a, const Parkettable& b);
Parkettable pk_diff(const Parkettable& a, const Parkettable& b);
// Via complement inside a bounding quader: R \ ((R\a) ∩ (R\b)).
Parkettable pk_union(const Parkettable& a, const Parkettable& b);
bool pk_set_equal(const Parkettable& a, const Parkettable& b);

// Disjointification of several internally disjoint quader families. Every
// input quader is exactly the union of the certified atom indices.
struct Refinement {
    Parkettable pieces;
    // certificate[f][j] = indices into pieces whose union is families[f][j]
    std::vector<std::vector<std::vector<std::size_t>>> certificate;
    // owners[i] = (family, index) pairs whose quader contains pieces[i]
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> owners;
};
Refinement common_refinement(const std::vector<std::vector<Quader>>& families);

}  // namespace quaderint

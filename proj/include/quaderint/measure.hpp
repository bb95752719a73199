#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "quaderint/geometry.hpp"

namespace quaderint {

// Piecewise affine nondecreasing weight for Stieltjes measures: affine pieces
// value(t) = a + b*t with slope b >= 0 between consecutive breakpoints, plus an
// explicit function value at each breakpoint. Monotonicity requires
// left limit <= value <= right limit at every breakpoint.
class StieltjesWeight {
public:
    struct Piece {
        Rational a, b;  // a + b*t
        Rational at(const Rational& t) const { return a + b * t; }
    };

    StieltjesWeight(std::vector<Rational> breaks, std::vector<Piece> pieces,
                    std::vector<Rational> at_breaks);
    static StieltjesWeight identity();
    // 0 below c, 1 at and above c.
    static StieltjesWeight heaviside(const Rational& c);

    const std::vector<Rational>& breaks() const { return breaks_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    const std::vector<Rational>& at_breaks() const { return at_breaks_; }

    Rational value_at(const Rational& t) const;
    // (limit from the left, limit from the right)
    std::pair<Rational, Rational> one_sided_limits(const Rational& t) const;
    // Measure of a bounded interval via one-sided limits:
    //   open end a  -> g(a+),  closed end a -> g(a-)  (lower end)
    //   open end b  -> g(b-),  closed end b -> g(b+)  (upper end)
    Rational eval_interval(const Interval& iv) const;

    bool operator==(const StieltjesWeight&) const;

private:
    // index of the affine piece governing the open interval left of/right of t
    const Piece& piece_left_of(const Rational& t) const;
    const Piece& piece_right_of(const Rational& t) const;

    std::vector<Rational> breaks_;    // strictly increasing
    std::vector<Piece> pieces_;       // breaks_.size() + 1 entries
    std::vector<Rational> at_breaks_; // one value per breakpoint
};

// Box measures: exact rational content of bounded quaders. Additive over
// disjoint decompositions, monotone, and regular (open witnesses exist).
class BoxMeasure {
public:
    enum class Kind { Volume, Discrete, Stieltjes, Product };

    static BoxMeasure volume(std::size_t dim);
    // At least one point; pairwise distinct points with strictly positive
    // masses.
    static BoxMeasure discrete(std::vector<std::vector<Rational>> points,
                               std::vector<Rational> masses);
    static BoxMeasure dirac(std::vector<Rational> point);
    static BoxMeasure stieltjes(StieltjesWeight w);
    static BoxMeasure product(BoxMeasure left, BoxMeasure right);

    Kind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::vector<Rational>>& points() const;
    const std::vector<Rational>& masses() const;
    const StieltjesWeight& weight() const;
    const BoxMeasure& left() const;
    const BoxMeasure& right() const;

    // Requires matching dimension and a bounded quader (empty is fine).
    Rational eval_quader(const Quader& q) const;
    Rational eval_parkettable(const Parkettable& p) const;
    // Open quader containing q with measure at most eval(q) + eps; eps > 0.
    Quader regularity_witness(const Quader& q, const Rational& eps) const;

    bool operator==(const BoxMeasure& o) const;

private:
    BoxMeasure() = default;

    Kind kind_ = Kind::Volume;
    std::size_t dim_ = 1;
    std::vector<std::vector<Rational>> points_;
    std::vector<Rational> masses_;
    std::shared_ptr<const StieltjesWeight> weight_;
    std::shared_ptr<const BoxMeasure> left_, right_;
};

}  // namespace quaderint

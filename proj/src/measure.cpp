#include "quaderint/measure.hpp"

#include <algorithm>

namespace quaderint {

StieltjesWeight::StieltjesWeight(std::vector<Rational> breaks, std::vector<Piece> pieces,
                                 std::vector<Rational> at_breaks)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)), at_breaks_(std::move(at_breaks)) {
    if (pieces_.size() != breaks_.size() + 1)
        throw ContractError("stieltjes weight needs one affine piece more than breakpoints");
    if (at_breaks_.size() != breaks_.size())
        throw ContractError("stieltjes weight needs one value per breakpoint");
    for (std::size_t i = 1; i < breaks_.size(); ++i)
        if (!(breaks_[i - 1] < breaks_[i]))
            throw ContractError("stieltjes breakpoints must be strictly increasing");
    for (const auto& p : pieces_)
        if (p.b < 0) throw ContractError("stieltjes piece slope must be nonnegative");
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        Rational left = pieces_[i].at(breaks_[i]);
        Rational right = pieces_[i + 1].at(breaks_[i]);
        if (!(left <= at_breaks_[i] && at_breaks_[i] <= right))
            throw ContractError("stieltjes weight not monotone at a breakpoint");
    }
}

StieltjesWeight StieltjesWeight::identity() {
    return StieltjesWeight({}, {{Rational(0), Rational(1)}}, {});
}

StieltjesWeight StieltjesWeight::heaviside(const Rational& c) {
    return StieltjesWeight({c}, {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}},
                           {Rational(1)});
}

const StieltjesWeight::Piece& StieltjesWeight::piece_left_of(const Rational& t) const {
    std::size_t idx = static_cast<std::size_t>(
        std::lower_bound(breaks_.begin(), breaks_.end(), t) - breaks_.begin());
    return pieces_[idx];  // number of breakpoints strictly below t
}

const StieltjesWeight::Piece& StieltjesWeight::piece_right_of(const Rational& t) const {
    std::size_t idx = static_cast<std::size_t>(
        std::upper_bound(breaks_.begin(), breaks_.end(), t) - breaks_.begin());
    return pieces_[idx];  // number of breakpoints at or below t
}

Rational StieltjesWeight::value_at(const Rational& t) const {
    auto it = std::lower_bound(breaks_.begin(), breaks_.end(), t);
    if (it != breaks_.end() && *it == t)
        return at_breaks_[static_cast<std::size_t>(it - breaks_.begin())];
    return piece_left_of(t).at(t);
}

std::pair<Rational, Rational> StieltjesWeight::one_sided_limits(const Rational& t) const {
    return {piece_left_of(t).at(t), piece_right_of(t).at(t)};
}

Rational StieltjesWeight::eval_interval(const Interval& iv) const {
    if (iv.is_empty()) return Rational(0);
    if (!iv.is_bounded()) throw ContractError("stieltjes measure of unbounded interval");
    const Rational& a = iv.lower().value;
    const Rational& b = iv.upper().value;
    Rational lo_val = iv.lower().closed ? piece_left_of(a).at(a) : piece_right_of(a).at(a);
    Rational hi_val = iv.upper().closed ? piece_right_of(b).at(b) : piece_left_of(b).at(b);
    return hi_val - lo_val;
}

bool StieltjesWeight::operator==(const StieltjesWeight& o) const {
    if (breaks_ != o.breaks_ || at_breaks_ != o.at_breaks_) return false;
    if (pieces_.size() != o.pieces_.size()) return false;
    for (std::size_t i = 0; i < pieces_.size(); ++i)
        if (pieces_[i].a != o.pieces_[i].a || pieces_[i].b != o.pieces_[i].b) return false;
    return true;
}

BoxMeasure BoxMeasure::volume(std::size_t dim) {
    if (dim == 0) throw ContractError("measure needs dimension >= 1");
    BoxMeasure m;
    m.kind_ = Kind::Volume;
    m.dim_ = dim;
    return m;
}

BoxMeasure BoxMeasure::discrete(std::vector<std::vector<Rational>> points,
                                std::vector<Rational> masses) {
    if (points.empty()) throw ContractError("discrete measure needs at least one point");
    if (points.size() != masses.size())
        throw ContractError("discrete measure needs one mass per point");
    std::size_t dim = points[0].size();
    if (dim == 0) throw ContractError("measure needs dimension >= 1");
    for (const auto& p : points)
        if (p.size() != dim) throw ContractError("discrete measure points of mixed dimension");
    for (const auto& m : masses)
        if (!(m > 0)) throw ContractError("discrete measure masses must be positive");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw ContractError("discrete measure points must differ");
    BoxMeasure m;
    m.kind_ = Kind::Discrete;
    m.dim_ = dim;
    m.points_ = std::move(points);
    m.masses_ = std::move(masses);
    return m;
}

BoxMeasure BoxMeasure::dirac(std::vector<Rational> point) {
    return discrete({std::move(point)}, {Rational(1)});
}

BoxMeasure BoxMeasure::stieltjes(StieltjesWeight w) {
    BoxMeasure m;
    m.kind_ = Kind::Stieltjes;
    m.dim_ = 1;
    m.weight_ = std::make_shared<StieltjesWeight>(std::move(w));
    return m;
}

BoxMeasure BoxMeasure::product(BoxMeasure left, BoxMeasure right) {
    BoxMeasure m;
    m.kind_ = Kind::Product;
    m.dim_ = left.dim_ + right.dim_;
    m.left_ = std::make_shared<BoxMeasure>(std::move(left));
    m.right_ = std::make_shared<BoxMeasure>(std::move(right));
    return m;
}

const std::vector<std::vector<Rational>>& BoxMeasure::points() const {
    if (kind_ != Kind::Discrete) throw ContractError("not a discrete measure");
    return points_;
}
const std::vector<Rational>& BoxMeasure::masses() const {
    if (kind_ != Kind::Discrete) throw ContractError("not a discrete measure");
    return masses_;
}
const StieltjesWeight& BoxMeasure::weight() const {
    if (kind_ != Kind::Stieltjes) throw ContractError("not a stieltjes measure");
    return *weight_;
}
const BoxMeasure& BoxMeasure::left() const {
    if (kind_ != Kind::Product) throw ContractError("not a product measure");
    return *left_;
}
const BoxMeasure& BoxMeasure::right() const {
    if (kind_ != Kind::Product) throw ContractError("not a product measure");
    return *right_;
}

Rational BoxMeasure::eval_quader(const Quader& q) const {
    if (q.dim() != dim_) throw ContractError("measure/quader dimension mismatch");
    if (q.is_empty()) return Rational(0);
    if (!q.is_bounded()) throw ContractError("measure of unbounded quader");
    switch (kind_) {
        case Kind::Volume: {
            Rational v(1);
            for (const auto& f : q.factors()) v *= f.length();
            return v;
        }
        case Kind::Discrete: {
            Rational v(0);
            for (std::size_t i = 0; i < points_.size(); ++i)
                if (q.contains(points_[i])) v += masses_[i];
            return v;
        }
        case Kind::Stieltjes:
            return weight_->eval_interval(q.factor(0));
        case Kind::Product:
            return left_->eval_quader(slice_quader(q, 0, left_->dim_)) *
                   right_->eval_quader(slice_quader(q, left_->dim_, right_->dim_));
    }
    throw ContractError("unreachable");
}

Rational BoxMeasure::eval_parkettable(const Parkettable& p) const {
    if (p.dim() != dim_) throw ContractError("measure/parkettable dimension mismatch");
    Rational v(0);
    for (const Quader& q : p.pieces()) v += eval_quader(q);
    return v;
}

namespace {

// Open enlargement of one bounded interval: closed ends move out by delta and
// open up; open ends stay put.
Interval stretch_closed_ends(const Interval& iv, const Rational& delta_lo,
                             const Rational& delta_hi) {
    Endpoint lo = iv.lower(), hi = iv.upper();
    if (lo.closed) lo = Endpoint::finite(lo.value - delta_lo, false);
    if (hi.closed) hi = Endpoint::finite(hi.value + delta_hi, false);
    return Interval::make(lo, hi);
}

}  // namespace

Quader BoxMeasure::regularity_witness(const Quader& q, const Rational& eps) const {
    if (!(eps > 0)) throw ContractError("regularity witness needs eps > 0");
    if (q.dim() != dim_) throw ContractError("measure/quader dimension mismatch");
    if (!q.is_bounded()) throw ContractError("regularity witness of unbounded quader");

    switch (kind_) {
        case Kind::Volume: {
            if (q.is_empty()) {
                Rational t(1);
                while (rat_pow(t, static_cast<unsigned>(dim_)) > eps) t /= 2;
                return Quader(std::vector<Interval>(dim_, Interval::open(Rational(0), t)));
            }
            Rational base = eval_quader(q);
            Rational t(1);
            auto enlarged = [&](const Rational& tt) {
                Rational v(1);
                for (const auto& f : q.factors()) v *= f.length() + 2 * tt;
                return v;
            };
            while (enlarged(t) > base + eps) t /= 2;
            std::vector<Interval> fs;
            for (const auto& f : q.factors())
                fs.push_back(Interval::open(f.lower().value - t, f.upper().value + t));
            return Quader(std::move(fs));
        }
        case Kind::Discrete: {
            if (q.is_empty()) {
                Rational c(0);
                for (const auto& p : points_)
                    for (const auto& x : p) c = std::max(c, x);
                c += 1;
                return Quader(std::vector<Interval>(dim_, Interval::open(c, c + 1)));
            }
            // smallest positive distance from any mass point coordinate to any
            // finite endpoint; half of it keeps the margins point-free
            Rational delta(1);
            for (const auto& p : points_)
                for (std::size_t i = 0; i < dim_; ++i)
                    for (const Rational& e :
                         {q.factor(i).lower().value, q.factor(i).upper().value}) {
                        Rational d = rat_abs(p[i] - e);
                        if (d > 0 && d < delta) delta = d;
                    }
            delta /= 2;
            std::vector<Interval> fs;
            for (const auto& f : q.factors()) fs.push_back(stretch_closed_ends(f, delta, delta));
            return Quader(std::move(fs));
        }
        case Kind::Stieltjes: {
            const StieltjesWeight& w = *weight_;
            const auto& breaks = w.breaks();
            if (q.is_empty()) {
                Rational s = (breaks.empty() ? Rational(0) : breaks.back()) + 1;
                Rational slope = w.pieces().back().b;
                Rational delta(1);
                while (slope * delta > eps) delta /= 2;
                return Quader({Interval::open(s, s + delta)});
            }
            const Interval& f = q.factor(0);
            // shrink the margin until the mass it adds, measured via one-sided
            // limits (so jumps inside the margin are accounted for), fits
            auto margin = [&](const Rational& e, bool below) {
                auto added = [&](const Rational& d) {
                    return below ? w.one_sided_limits(e).first - w.one_sided_limits(e - d).second
                                 : w.one_sided_limits(e + d).first - w.one_sided_limits(e).second;
                };
                Rational delta(1);
                while (added(delta) > eps / 2) delta /= 2;
                return delta;
            };
            Rational dlo = f.lower().closed ? margin(f.lower().value, true) : Rational(0);
            Rational dhi = f.upper().closed ? margin(f.upper().value, false) : Rational(0);
            return Quader({stretch_closed_ends(f, dlo, dhi)});
        }
        case Kind::Product: {
            Quader ql = q.is_empty() ? Quader::empty(left_->dim_) : slice_quader(q, 0, left_->dim_);
            Quader qr =
                q.is_empty() ? Quader::empty(right_->dim_) : slice_quader(q, left_->dim_, right_->dim_);
            Rational base = eval_quader(q);
            Rational sub = eps;
            for (;;) {
                sub /= 2;
                Quader wl = left_->regularity_witness(ql, sub);
                Quader wr = right_->regularity_witness(qr, sub);
                Quader w = concat_quader(wl, wr);
                if (eval_quader(w) <= base + eps) return w;
            }
        }
    }
    throw ContractError("unreachable");
}

bool BoxMeasure::operator==(const BoxMeasure& o) const {
    if (kind_ != o.kind_ || dim_ != o.dim_) return false;
    switch (kind_) {
        case Kind::Volume:
            return true;
        case Kind::Discrete:
            return points_ == o.points_ && masses_ == o.masses_;
        case Kind::Stieltjes:
            return *weight_ == *o.weight_;
        case Kind::Product:
            return *left_ == *o.left_ && *right_ == *o.right_;
    }
    return false;
}

}  // namespace quaderint

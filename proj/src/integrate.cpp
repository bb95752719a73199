#include "quaderint/integrate.hpp"

#include <algorithm>
#include <iterator>
#include <memory>
#include <string>

namespace quaderint {

namespace {

// ---- compensated summation -------------------------------------------------

struct Kahan {
    double s = 0, c = 0;
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

// ---- exact polynomial helpers ----------------------------------------------

using Poly = std::vector<Rational>;  // coefficient of t^i at index i

Poly normalized(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(Integer(i)));
    return d;
}

Rational poly_eval_exact(const Poly& p, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// Coarse bound on |p'| over [lo, hi].
Rational slope_bound(const Poly& p, const Rational& lo, const Rational& hi) {
    Rational m = std::max({rat_abs(lo), rat_abs(hi), Rational(1)});
    Rational acc(0);
    for (std::size_t i = 1; i < p.size(); ++i)
        acc += Rational(Integer(i)) * rat_abs(p[i]) * rat_pow(m, static_cast<unsigned>(i - 1));
    return acc;
}

struct RootBox {
    Rational lo, hi;
};

// Enclosures of every real root of q, each of width at most 2^-80 (wider only
// for the conservative "derivative wobble" boxes, which are themselves tiny).
std::vector<RootBox> root_enclosures(const Poly& q_in) {
    Poly q = normalized(q_in);
    if (q.size() <= 1) return {};
    if (q.size() == 2) {
        Rational r = -q[0] / q[1];
        return {{r, r}};
    }
    Rational mx(0);
    for (std::size_t i = 0; i + 1 < q.size(); ++i) mx = std::max(mx, rat_abs(q[i] / q.back()));
    const Rational big = mx + 1;  // Cauchy bound: all roots lie in ]-big, big[
    const Rational neg_big = -big;

    std::vector<RootBox> out;
    std::vector<Rational> edges{neg_big};
    for (const auto& rb : root_enclosures(derivative(q))) {
        Rational lo = std::max(rb.lo, neg_big), hi = std::min(rb.hi, big);
        if (lo > hi) continue;
        // q may wiggle inside the enclosure; keep it as a possible root zone
        // whenever the safe value range straddles zero
        Rational pl = poly_eval_exact(q, lo), ph = poly_eval_exact(q, hi);
        Rational pen = slope_bound(q, lo, hi) * (hi - lo);
        if (std::min(pl, ph) - pen <= 0 && 0 <= std::max(pl, ph) + pen) out.push_back({lo, hi});
        edges.push_back(lo);
        edges.push_back(hi);
    }
    edges.push_back(big);

    const Rational width = pow2(-80);
    for (std::size_t i = 0; i + 1 < edges.size(); i += 2) {
        Rational l = edges[i], r = edges[i + 1];
        if (!(l < r)) continue;  // q is monotone on [l, r]
        Rational ql = poly_eval_exact(q, l), qr = poly_eval_exact(q, r);
        if (ql == 0) out.push_back({l, l});
        if (qr == 0) out.push_back({r, r});
        if ((ql < 0 && qr > 0) || (ql > 0 && qr < 0)) {
            Rational lo = l, hi = r;
            bool left_neg = ql < 0;
            while (hi - lo > width) {
                Rational mid = (lo + hi) / 2;
                Rational qm = poly_eval_exact(q, mid);
                if (qm == 0) {
                    lo = hi = mid;
                    break;
                }
                if ((qm < 0) == left_neg)
                    lo = mid;
                else
                    hi = mid;
            }
            out.push_back({lo, hi});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RootBox& a, const RootBox& b) { return a.lo < b.lo; });
    return out;
}

struct CritZone {
    Rational lo, hi;    // enclosure of a critical point
    Rational vlo, vhi;  // safe bounds of p over the enclosure
};

struct PolyAxis {
    Poly coeffs;
    std::vector<CritZone> crits;
};

PolyAxis make_poly_axis(Poly coeffs) {
    PolyAxis ax;
    ax.coeffs = normalized(std::move(coeffs));
    for (const auto& rb : root_enclosures(derivative(ax.coeffs))) {
        CritZone z;
        z.lo = rb.lo;
        z.hi = rb.hi;
        Rational pl = poly_eval_exact(ax.coeffs, rb.lo);
        if (rb.lo == rb.hi) {
            z.vlo = z.vhi = pl;
        } else {
            Rational ph = poly_eval_exact(ax.coeffs, rb.hi);
            Rational pen = slope_bound(ax.coeffs, rb.lo, rb.hi) * (rb.hi - rb.lo);
            z.vlo = std::min(pl, ph) - pen;
            z.vhi = std::max(pl, ph) + pen;
        }
        ax.crits.push_back(std::move(z));
    }
    return ax;
}

// Exact min/max of the candidate values: interval endpoints plus critical
// zones overlapping [a, b].
std::pair<Rational, Rational> poly_axis_bounds(const PolyAxis& ax, const Rational& a,
                                               const Rational& b) {
    Rational lo = poly_eval_exact(ax.coeffs, a), hi = lo;
    auto take = [&](const Rational& vlo, const Rational& vhi) {
        if (vlo < lo) lo = vlo;
        if (vhi > hi) hi = vhi;
    };
    if (b != a) {
        Rational vb = poly_eval_exact(ax.coeffs, b);
        take(vb, vb);
    }
    for (const auto& z : ax.crits)
        if (z.lo <= b && a <= z.hi) take(z.vlo, z.vhi);
    return {lo, hi};
}

void check_closed_bounded(const Quader& q, const char* what) {
    if (q.is_empty() || !q.is_bounded() || !q.is_closed())
        throw ContractError(std::string(what) + " needs a nonempty closed bounded quader");
}

// ---- grid iteration ---------------------------------------------------------

constexpr std::size_t kMaxCells = std::size_t(1) << 22;

template <class Fn>
void for_each_cell(const std::vector<std::vector<Interval>>& axes, Fn&& fn) {
    std::size_t dim = axes.size();
    std::vector<std::size_t> idx(dim, 0);
    std::vector<Interval> fs(dim);
    for (;;) {
        for (std::size_t a = 0; a < dim; ++a) fs[a] = axes[a][idx[a]];
        fn(Quader(fs));
        std::size_t a = dim;
        while (a > 0 && ++idx[a - 1] == axes[a - 1].size()) idx[--a] = 0;
        if (a == 0) break;
    }
}

// Equal dyadic subdivision of a closed bounded nondegenerate quader; per axis
// the first cell is closed, the rest are left-open, so the cells partition the
// domain exactly.
std::vector<std::vector<Interval>> partition_axes(const Quader& domain, int depth) {
    check_closed_bounded(domain, "bracket domain");
    if (domain.is_degenerate()) throw ContractError("bracket domain must be nondegenerate");
    if (depth < 0) throw ContractError("depth must be nonnegative");
    std::size_t n = domain.dim();
    if (static_cast<std::size_t>(depth) * n > 22)
        throw ContractError("bracket partition too fine");
    std::vector<std::vector<Interval>> axes(n);
    Rational scale = pow2(-depth);
    for (std::size_t a = 0; a < n; ++a) {
        const Rational& lo = domain.factor(a).lower().value;
        Rational step = domain.factor(a).length() * scale;
        std::size_t cells = std::size_t(1) << depth;
        axes[a].reserve(cells);
        Rational left = lo;
        for (std::size_t j = 0; j < cells; ++j) {
            Rational right = lo + step * Rational(Integer(j + 1));
            axes[a].push_back(j == 0 ? Interval::closed(left, right)
                                     : Interval::left_open(left, right));
            left = right;
        }
    }
    return axes;
}

std::vector<Quader> subtract_quader(std::vector<Quader> pieces, const Quader& q) {
    std::vector<Quader> out;
    for (auto& piece : pieces) {
        Quader c = intersect_quader(piece, q);
        if (c.is_empty()) {
            out.push_back(std::move(piece));
            continue;
        }
        auto parts = split_around(c, piece);
        out.insert(out.end(), std::make_move_iterator(parts.begin() + 1),
                   std::make_move_iterator(parts.end()));
    }
    return out;
}

}  // namespace

// ---- oracles -----------------------------------------------------------------

BoundedOracle oracle_poly(std::vector<Rational> coeffs) {
    auto ax = std::make_shared<PolyAxis>(make_poly_axis(std::move(coeffs)));
    BoundedOracle o;
    o.dim = 1;
    o.eval = [ax](const std::vector<Rational>& x) {
        if (x.size() != 1) throw ContractError("point dimension mismatch");
        return to_double(poly_eval_exact(ax->coeffs, x[0]));
    };
    o.bounds_on = [ax](const Quader& q) {
        if (q.dim() != 1) throw ContractError("oracle dimension mismatch");
        check_closed_bounded(q, "oracle cell");
        auto [lo, hi] = poly_axis_bounds(*ax, q.factor(0).lower().value,
                                         q.factor(0).upper().value);
        return std::pair<double, double>(to_double(lo), to_double(hi));
    };
    return o;
}

BoundedOracle oracle_poly_product(std::vector<std::vector<Rational>> axis_coeffs) {
    if (axis_coeffs.empty()) throw ContractError("product oracle needs at least one axis");
    auto axes = std::make_shared<std::vector<PolyAxis>>();
    for (auto& c : axis_coeffs) axes->push_back(make_poly_axis(std::move(c)));
    BoundedOracle o;
    o.dim = axes->size();
    o.eval = [axes](const std::vector<Rational>& x) {
        if (x.size() != axes->size()) throw ContractError("point dimension mismatch");
        double v = 1;
        for (std::size_t a = 0; a < axes->size(); ++a)
            v *= to_double(poly_eval_exact((*axes)[a].coeffs, x[a]));
        return v;
    };
    o.bounds_on = [axes](const Quader& q) {
        if (q.dim() != axes->size()) throw ContractError("oracle dimension mismatch");
        check_closed_bounded(q, "oracle cell");
        double lo = 1, hi = 1;
        for (std::size_t a = 0; a < axes->size(); ++a) {
            auto [rl, rh] = poly_axis_bounds((*axes)[a], q.factor(a).lower().value,
                                             q.factor(a).upper().value);
            double l = to_double(rl), h = to_double(rh);
            double cands[4] = {lo * l, lo * h, hi * l, hi * h};
            lo = *std::min_element(cands, cands + 4);
            hi = *std::max_element(cands, cands + 4);
        }
        return std::pair<double, double>(lo, hi);
    };
    return o;
}

BoundedOracle oracle_indicator(Quader q) {
    auto target = std::make_shared<Quader>(std::move(q));
    BoundedOracle o;
    o.dim = target->dim();
    o.eval = [target](const std::vector<Rational>& x) {
        return target->contains(x) ? 1.0 : 0.0;
    };
    o.bounds_on = [target](const Quader& cell) {
        check_closed_bounded(cell, "oracle cell");
        if (intersect_quader(cell, *target).is_empty()) return std::pair<double, double>(0, 0);
        if (cell.subset_of(*target)) return std::pair<double, double>(1, 1);
        return std::pair<double, double>(0, 1);
    };
    return o;
}

BoundedOracle oracle_piecewise_monotone(std::function<double(double)> f,
                                        std::vector<Rational> breaks) {
    std::sort(breaks.begin(), breaks.end());
    auto shared_f = std::make_shared<std::function<double(double)>>(std::move(f));
    auto shared_b = std::make_shared<std::vector<Rational>>(std::move(breaks));
    BoundedOracle o;
    o.dim = 1;
    o.eval = [shared_f](const std::vector<Rational>& x) {
        if (x.size() != 1) throw ContractError("point dimension mismatch");
        return (*shared_f)(to_double(x[0]));
    };
    o.bounds_on = [shared_f, shared_b](const Quader& q) {
        if (q.dim() != 1) throw ContractError("oracle dimension mismatch");
        check_closed_bounded(q, "oracle cell");
        const Rational& a = q.factor(0).lower().value;
        const Rational& b = q.factor(0).upper().value;
        // monotone on each closed piece, so piece-clipped endpoints carry
        // the extrema
        double lo = (*shared_f)(to_double(a)), hi = lo;
        auto visit = [&](const Rational& t) {
            double v = (*shared_f)(to_double(t));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        };
        visit(b);
        for (const Rational& c : *shared_b)
            if (a <= c && c <= b) visit(c);
        return std::pair<double, double>(lo, hi);
    };
    return o;
}

// ---- brackets and integrals ---------------------------------------------------

Bracket riemann_bracket(const BoundedOracle& f, const Quader& domain, int depth) {
    if (f.dim != domain.dim()) throw ContractError("oracle/domain dimension mismatch");
    auto axes = partition_axes(domain, depth);
    Rational cell_volume(1);
    for (const auto& ax : axes) cell_volume *= ax[0].length();
    double w = to_double(cell_volume);
    Kahan lo, hi;
    for_each_cell(axes, [&](const Quader& cell) {
        auto [l, u] = f.bounds_on(cell.closure());
        lo.add(l * w);
        hi.add(u * w);
    });
    return {depth, lo.s, hi.s};
}

std::pair<StepFunction, StepFunction> bracket_steps(const BoundedOracle& f, const Quader& domain,
                                                    int depth) {
    if (f.dim != domain.dim()) throw ContractError("oracle/domain dimension mismatch");
    auto axes = partition_axes(domain, depth);
    std::vector<StepFunction::Term> lo_terms, hi_terms;
    for_each_cell(axes, [&](const Quader& cell) {
        auto [l, u] = f.bounds_on(cell.closure());
        lo_terms.emplace_back(cell, StepValue(rational_from_double(l)));
        hi_terms.emplace_back(cell, StepValue(rational_from_double(u)));
    });
    return {StepFunction(domain, std::move(lo_terms), false),
            StepFunction(domain, std::move(hi_terms), false)};
}

Approximation integrate_continuous(const BoundedOracle& f, const Quader& domain,
                                   const BoxMeasure& m, int depth) {
    if (f.dim != domain.dim()) throw ContractError("oracle/domain dimension mismatch");
    if (m.dim() != domain.dim()) throw ContractError("measure/domain dimension mismatch");
    auto axes = partition_axes(domain, depth);
    Kahan lo, hi;
    for_each_cell(axes, [&](const Quader& cell) {
        double w = to_double(m.eval_quader(cell));
        if (w == 0) return;
        auto [l, u] = f.bounds_on(cell.closure());
        lo.add(l * w);
        hi.add(u * w);
    });
    return {(lo.s + hi.s) / 2, (hi.s - lo.s) / 2};
}

Approximation integrate_discrete(const BoundedOracle& f, const BoxMeasure& discrete,
                                 double tail_bound) {
    if (discrete.kind() != BoxMeasure::Kind::Discrete)
        throw ContractError("integrate_discrete needs a discrete measure");
    if (f.dim != discrete.dim()) throw ContractError("oracle/measure dimension mismatch");
    if (tail_bound < 0) throw ContractError("tail bound must be nonnegative");
    Kahan sum;
    const auto& pts = discrete.points();
    const auto& ms = discrete.masses();
    for (std::size_t i = 0; i < pts.size(); ++i) sum.add(to_double(ms[i]) * f.eval(pts[i]));
    return {sum.s, tail_bound};
}

Approximation stieltjes_integral(const BoundedOracle& f, const StieltjesWeight& g,
                                 const Rational& a, const Rational& b, int depth) {
    if (f.dim != 1) throw ContractError("stieltjes integral needs a univariate oracle");
    if (!(a < b)) throw ContractError("stieltjes integral needs a < b");
    Kahan value;
    double halfwidth = 0;
    for (const Rational& c : g.breaks()) {
        if (c < a || b < c) continue;
        auto [left, right] = g.one_sided_limits(c);
        Rational jump = right - left;
        if (jump != 0) value.add(to_double(jump) * f.eval({c}));
    }
    const auto& breaks = g.breaks();
    for (std::size_t i = 0; i < g.pieces().size(); ++i) {
        const Rational& slope = g.pieces()[i].b;
        if (slope == 0) continue;
        Rational l = i == 0 ? a : std::max(a, breaks[i - 1]);
        Rational r = i == breaks.size() ? b : std::min(b, breaks[i]);
        if (!(l < r)) continue;
        Approximation part = integrate_continuous(f, Quader({Interval::closed(l, r)}),
                                                  BoxMeasure::volume(1), depth);
        double s = to_double(slope);
        value.add(s * part.value);
        halfwidth += s * part.halfwidth;
    }
    return {value.s, halfwidth};
}

StepFunction fine_step(const BoundedOracle& f, const Parkettable& m_dom, int depth) {
    if (m_dom.dim() == 0) throw ContractError("fine_step needs dimension >= 1");
    if (f.dim != m_dom.dim()) throw ContractError("oracle/domain dimension mismatch");
    if (depth < 0) throw ContractError("depth must be nonnegative");
    if (m_dom.is_empty()) throw ContractError("fine_step needs a nonempty domain");
    Quader ambient = Quader::whole_space(m_dom.dim());
    Quader box = m_dom.bounding_box();
    Rational h = pow2(-depth);
    std::size_t n = m_dom.dim();
    std::vector<std::vector<Interval>> axes(n);
    std::size_t total = 1;
    for (std::size_t a = 0; a < n; ++a) {
        const Rational& lo = box.factor(a).lower().value;
        Rational width = box.factor(a).length();
        Integer count = floor_rat(width / h) + 1;
        if (count > 4096) throw ContractError("fine_step grid too large");
        std::size_t cells = count.convert_to<std::size_t>();
        total *= cells;
        if (total > kMaxCells) throw ContractError("fine_step grid too large");
        Rational left = lo;
        for (std::size_t j = 0; j < cells; ++j) {
            axes[a].push_back(Interval::right_open(left, left + h));
            left += h;
        }
    }

    std::vector<StepFunction::Term> terms;
    for_each_cell(axes, [&](const Quader& cell) {
        const Quader* first = nullptr;
        for (const Quader& piece : m_dom.pieces()) {
            if (!intersect_quader(cell, piece).is_empty()) {
                first = &piece;
                break;
            }
        }
        if (!first) return;
        Quader r = intersect_quader(cell, *first);
        std::vector<Rational> sample;
        sample.reserve(n);
        for (std::size_t a = 0; a < n; ++a) sample.push_back(r.factor(a).lower().value);
        StepValue v(rational_from_double(f.eval(sample)));
        for (const Quader& piece : m_dom.pieces()) {
            Quader part = intersect_quader(cell, piece);
            if (!part.is_empty()) terms.emplace_back(std::move(part), v);
        }
    });
    return StepFunction(std::move(ambient), std::move(terms), false);
}

StepValue fubini_step(const StepFunction& t, const BoxMeasure& m1, const BoxMeasure& m2) {
    std::size_t n1 = m1.dim(), n2 = m2.dim();
    if (t.ambient().dim() != n1 + n2)
        throw ContractError("fubini: ambient dimension must split into the two measures");
    Quader amb1 = slice_quader(t.ambient(), 0, n1);
    StepFunction inner = StepFunction::zero(amb1);
    for (const auto& [q, v] : t.terms()) {
        StepValue c = v * StepValue(m2.eval_quader(slice_quader(q, n1, n2)));
        if (c.is_zero()) continue;
        inner = sf_add(inner, StepFunction(amb1, {{slice_quader(q, 0, n1), c}}, false));
    }
    return sf_integral(inner, m1);
}

StepFunction sf_swap_blocks(const StepFunction& t, std::size_t n1) {
    std::size_t n = t.ambient().dim();
    if (n1 > n) throw ContractError("swap block larger than dimension");
    auto swap_q = [&](const Quader& q) {
        return concat_quader(slice_quader(q, n1, n - n1), slice_quader(q, 0, n1));
    };
    std::vector<StepFunction::Term> terms;
    for (const auto& [q, v] : t.terms()) terms.emplace_back(swap_q(q), v);
    return StepFunction(swap_q(t.ambient()), std::move(terms), false);
}

// ---- jordan content -----------------------------------------------------------

namespace {

// Absolute dyadic index ranges [first, last] per axis covering all cells that
// can touch [lo, hi]; for the inner content only cells inside matter, so the
// touching margins are skipped there.
struct GridRange {
    std::vector<Integer> first;
    std::vector<std::size_t> count;
};

GridRange grid_range(const Quader& box, int depth, bool touching) {
    GridRange r;
    std::size_t total = 1;
    for (std::size_t a = 0; a < box.dim(); ++a) {
        Rational lo = box.factor(a).lower().value * pow2(depth);
        Rational hi = box.factor(a).upper().value * pow2(depth);
        Integer first = touching ? ceil_rat(lo) - 1 : floor_rat(lo);
        Integer last = touching ? floor_rat(hi) : ceil_rat(hi) - 1;
        Integer count = last - first + 1;
        if (count < 0) count = 0;
        if (count > 1 << 22) throw ContractError("jordan grid too large");
        r.first.push_back(first);
        std::size_t c = count.convert_to<std::size_t>();
        r.count.push_back(c);
        total *= c;
        if (total > kMaxCells) throw ContractError("jordan grid too large");
    }
    return r;
}

template <class Keep>
Rational grid_measure(const Quader& box, int depth, const BoxMeasure& m, bool touching,
                      Keep&& keep) {
    GridRange range = grid_range(box, depth, touching);
    std::size_t n = box.dim();
    Rational h = pow2(-depth);
    for (std::size_t a = 0; a < n; ++a)
        if (range.count[a] == 0) return Rational(0);

    // collect kept closed cells, merging runs along the last axis
    std::vector<Quader> merged;
    std::vector<std::size_t> idx(n, 0);
    std::vector<Interval> fs(n);
    Rational run_start, run_end;
    bool in_run = false;
    auto flush = [&](const std::vector<Interval>& prefix_fs) {
        if (!in_run) return;
        std::vector<Interval> cf(prefix_fs.begin(), prefix_fs.end() - 1);
        cf.push_back(Interval::closed(run_start, run_end));
        merged.push_back(Quader(std::move(cf)));
        in_run = false;
    };
    for (;;) {
        for (std::size_t a = 0; a < n; ++a) {
            Rational left = Rational(range.first[a] + Integer(idx[a])) * h;
            fs[a] = Interval::closed(left, left + h);
        }
        Quader cell(fs);
        if (keep(cell)) {
            const Rational& lo = cell.factor(n - 1).lower().value;
            const Rational& hi = cell.factor(n - 1).upper().value;
            if (in_run && run_end == lo) {
                run_end = hi;
            } else {
                flush(fs);
                run_start = lo;
                run_end = hi;
                in_run = true;
            }
        } else {
            flush(fs);
        }
        // advance, last axis fastest
        std::size_t a = n;
        while (a > 0 && ++idx[a - 1] == range.count[a - 1]) idx[--a] = 0;
        if (a != n) flush(fs);  // prefix changed (or finished)
        if (a == 0) break;
    }

    // the merged closed boxes may share faces: disjointify before measuring
    std::vector<Quader> disjoint;
    Rational total(0);
    for (const Quader& boxq : merged) {
        std::vector<Quader> parts{boxq};
        for (const Quader& d : disjoint) {
            parts = subtract_quader(std::move(parts), d);
            if (parts.empty()) break;
        }
        for (auto& p : parts) {
            total += m.eval_quader(p);
            disjoint.push_back(std::move(p));
        }
    }
    return total;
}

}  // namespace

Rational jordan_inner(const std::vector<Quader>& open_quaders, int depth, const BoxMeasure& m) {
    if (depth < 0) throw ContractError("depth must be nonnegative");
    std::vector<Quader> us;
    for (const Quader& q : open_quaders) {
        if (q.is_empty()) continue;
        if (!q.is_open() || !q.is_bounded())
            throw ContractError("jordan_inner needs open bounded quaders");
        if (q.dim() != m.dim()) throw ContractError("jordan dimension mismatch");
        us.push_back(q);
    }
    if (us.empty()) return Rational(0);
    Quader box = us[0];
    for (std::size_t i = 1; i < us.size(); ++i) box = bounding_quader(box, us[i]);

    return grid_measure(box, depth, m, false, [&](const Quader& cell) {
        std::vector<Quader> rem{cell};
        for (const Quader& u : us) {
            rem = subtract_quader(std::move(rem), u);
            if (rem.empty()) return true;
        }
        return rem.empty();
    });
}

Rational jordan_outer(const Parkettable& closed_set, int depth, const BoxMeasure& m) {
    if (depth < 0) throw ContractError("depth must be nonnegative");
    if (closed_set.dim() != m.dim()) throw ContractError("jordan dimension mismatch");
    for (const Quader& q : closed_set.pieces())
        if (!q.is_closed()) throw ContractError("jordan_outer needs closed quaders");
    if (closed_set.is_empty()) return Rational(0);
    Quader box = closed_set.bounding_box();

    return grid_measure(box, depth, m, true, [&](const Quader& cell) {
        for (const Quader& piece : closed_set.pieces())
            if (!intersect_quader(cell, piece).is_empty()) return true;
        return false;
    });
}

bool nullset_check(const Parkettable& p, const BoxMeasure& m) {
    return m.eval_parkettable(p) == 0;
}

Parkettable svc_stage(int stage) {
    if (stage < 0 || stage > 14) throw ContractError("svc stage must be between 0 and 14");
    std::vector<std::pair<Rational, Rational>> pieces{{Rational(0), Rational(1)}};
    for (int i = 1; i <= stage; ++i) {
        Rational half = pow2(-2 * i - 1);  // half of 4^-i
        std::vector<std::pair<Rational, Rational>> next;
        next.reserve(pieces.size() * 2);
        for (const auto& [a, b] : pieces) {
            Rational c = (a + b) / 2;
            next.emplace_back(a, c - half);
            next.emplace_back(c + half, b);
        }
        pieces = std::move(next);
    }
    std::vector<Quader> qs;
    qs.reserve(pieces.size());
    for (const auto& [a, b] : pieces) qs.push_back(Quader({Interval::closed(a, b)}));
    return Parkettable(1, std::move(qs), false);
}

}  // namespace quaderint

#include "quaderint/stepfn.hpp"

#include <algorithm>

namespace quaderint {

StepFunction::StepFunction(Quader ambient, std::vector<Term> terms, bool verify)
    : ambient_(std::move(ambient)) {
    if (ambient_.is_empty()) throw ContractError("step function ambient must be nonempty");
    for (auto& [q, v] : terms) {
        if (q.dim() != ambient_.dim()) throw ContractError("term dimension mismatch");
        if (q.is_empty() || v.is_zero()) continue;
        terms_.emplace_back(std::move(q), std::move(v));
    }
    if (verify) {
        for (const auto& [q, v] : terms_) {
            if (!q.is_bounded()) throw ContractError("step function term must be bounded");
            if (!q.subset_of(ambient_)) throw ContractError("term outside the ambient quader");
        }
        for (std::size_t i = 0; i < terms_.size(); ++i)
            for (std::size_t j = i + 1; j < terms_.size(); ++j)
                if (!quader_disjoint(terms_[i].first, terms_[j].first))
                    throw ContractError("step function terms must be pairwise disjoint");
    }
}

StepFunction StepFunction::indicator(const Quader& q, Quader ambient) {
    return StepFunction(std::move(ambient), {{q, StepValue::one()}});
}

bool StepFunction::is_real() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.second.is_real(); });
}

StepValue StepFunction::evaluate(const std::vector<Rational>& x) const {
    if (!ambient_.contains(x)) throw ContractError("evaluation point outside the ambient quader");
    for (const auto& [q, v] : terms_)
        if (q.contains(x)) return v;
    return StepValue::zero();
}

namespace {

template <class F>
StepFunction pointwise(const StepFunction& a, const StepFunction& b, F&& f) {
    if (!(a.ambient() == b.ambient())) throw ContractError("step function ambient mismatch");
    if (a.terms().empty() && b.terms().empty()) return StepFunction::zero(a.ambient());
    std::vector<std::vector<Quader>> fams(2);
    for (const auto& [q, v] : a.terms()) fams[0].push_back(q);
    for (const auto& [q, v] : b.terms()) fams[1].push_back(q);
    Refinement ref = common_refinement(fams);
    std::vector<StepFunction::Term> terms;
    const auto& atoms = ref.pieces.pieces();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        StepValue va, vb;
        for (auto [fam, j] : ref.owners[i])
            (fam == 0 ? va : vb) = (fam == 0 ? a.terms()[j].second : b.terms()[j].second);
        StepValue v = f(va, vb);
        if (!v.is_zero()) terms.emplace_back(atoms[i], std::move(v));
    }
    return StepFunction(a.ambient(), std::move(terms), false);
}

template <class F>
StepFunction map_values(const StepFunction& t, F&& f) {
    std::vector<StepFunction::Term> terms;
    for (const auto& [q, v] : t.terms()) {
        StepValue w = f(v);
        if (!w.is_zero()) terms.emplace_back(q, std::move(w));
    }
    return StepFunction(t.ambient(), std::move(terms), false);
}

void require_real(const StepFunction& t, const char* op) {
    if (!t.is_real()) throw ContractError(std::string(op) + " needs a real-valued step function");
}

}  // namespace

StepFunction sf_add(const StepFunction& a, const StepFunction& b) {
    return pointwise(a, b, [](const StepValue& x, const StepValue& y) { return x + y; });
}

StepFunction sf_scale(const StepValue& lambda, const StepFunction& t) {
    return map_values(t, [&](const StepValue& v) { return lambda * v; });
}

StepFunction sf_mul(const StepFunction& a, const StepFunction& b) {
    return pointwise(a, b, [](const StepValue& x, const StepValue& y) { return x * y; });
}

StepFunction sf_sup(const StepFunction& a, const StepFunction& b) {
    require_real(a, "sup");
    require_real(b, "sup");
    return pointwise(a, b, [](const StepValue& x, const StepValue& y) {
        return x.re >= y.re ? x : y;
    });
}

StepFunction sf_inf(const StepFunction& a, const StepFunction& b) {
    require_real(a, "inf");
    require_real(b, "inf");
    return pointwise(a, b, [](const StepValue& x, const StepValue& y) {
        return x.re <= y.re ? x : y;
    });
}

StepFunction sf_abs(const StepFunction& t) {
    require_real(t, "abs");
    return map_values(t, [](const StepValue& v) { return StepValue(rat_abs(v.re)); });
}

StepFunction sf_pos_part(const StepFunction& t) {
    require_real(t, "pos_part");
    return map_values(t, [](const StepValue& v) {
        return v.re > 0 ? v : StepValue::zero();
    });
}

StepFunction sf_neg_part(const StepFunction& t) {
    require_real(t, "neg_part");
    return map_values(t, [](const StepValue& v) {
        return v.re < 0 ? StepValue(-v.re) : StepValue::zero();
    });
}

StepFunction sf_conj(const StepFunction& t) {
    return map_values(t, [](const StepValue& v) { return v.conj(); });
}

StepFunction sf_compose(const std::vector<std::pair<StepValue, StepValue>>& psi,
                        const StepFunction& t) {
    auto lookup = [&](const StepValue& v) -> const StepValue& {
        for (const auto& [from, to] : psi)
            if (from == v) return to;
        throw ContractError("compose: psi missing a value of the step function");
    };
    if (!lookup(StepValue::zero()).is_zero())
        throw ContractError("compose: psi must map 0 to 0");
    return map_values(t, [&](const StepValue& v) { return lookup(v); });
}

StepFunction sf_restrict(const StepFunction& t, const Quader& sub) {
    if (sub.is_empty()) throw ContractError("restriction to the empty set");
    if (!sub.subset_of(t.ambient())) throw ContractError("restriction target not inside ambient");
    std::vector<StepFunction::Term> terms;
    for (const auto& [q, v] : t.terms()) {
        Quader c = intersect_quader(q, sub);
        if (!c.is_empty()) terms.emplace_back(std::move(c), v);
    }
    return StepFunction(sub, std::move(terms), false);
}

StepFunction sf_extend_hat(const StepFunction& t) {
    return StepFunction(Quader::whole_space(t.ambient().dim()), t.terms(), false);
}

StepValue sf_integral(const StepFunction& t, const BoxMeasure& m) {
    if (m.dim() != t.ambient().dim()) throw ContractError("measure/step function dimension mismatch");
    StepValue acc;
    for (const auto& [q, v] : t.terms()) {
        Rational w = m.eval_quader(q);
        acc.re += v.re * w;
        acc.im += v.im * w;
    }
    return acc;
}

bool sf_equal(const StepFunction& a, const StepFunction& b) {
    if (!(a.ambient() == b.ambient())) return false;
    return sf_add(a, sf_scale(StepValue(Rational(-1)), b)).terms().empty();
}

}  // namespace quaderint

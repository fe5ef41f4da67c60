#include <bvd/lambda.hpp>

namespace bvd {

std::optional<Term> reduce_step(const Term& m)
{
    switch (m.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const: return std::nullopt;
    case Term::Kind::Lam:
        if (auto b = reduce_step(m.body()))
            return Term::lam(m.name(), std::move(*b));
        return std::nullopt;
    case Term::Kind::App:
        if (m.fn().kind() == Term::Kind::Lam)
            return substitute(m.fn().body(), m.fn().name(), m.arg());
        if (auto f = reduce_step(m.fn()))
            return Term::app(std::move(*f), m.arg());
        if (auto a = reduce_step(m.arg()))
            return Term::app(m.fn(), std::move(*a));
        return std::nullopt;
    }
    return std::nullopt;
}

NormalizeResult normalize(const Term& m, std::uint64_t max_steps)
{
    NormalizeResult r;
    Term cur = m;
    for (;;) {
        auto next = reduce_step(cur);
        if (!next) {
            r.normal_form = cur;
            return r;
        }
        if (r.steps == max_steps)
            return r;
        ++r.steps;
        cur = std::move(*next);
    }
}

TheoryVerdict theory_equal(const Term& m, const Term& n, std::uint64_t max_steps)
{
    auto a = normalize(m, max_steps);
    if (!a.normal_form)
        return TheoryVerdict::Inconclusive;
    auto b = normalize(n, max_steps);
    if (!b.normal_form)
        return TheoryVerdict::Inconclusive;
    return alpha_equal(*a.normal_form, *b.normal_form) ? TheoryVerdict::Equal
                                                       : TheoryVerdict::UnequalNormalForms;
}

const char* to_string(TheoryVerdict v)
{
    switch (v) {
    case TheoryVerdict::Equal: return "equal";
    case TheoryVerdict::UnequalNormalForms: return "unequal_normal_forms";
    case TheoryVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

} // namespace bvd

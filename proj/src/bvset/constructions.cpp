#include <bvd/bvset.hpp>

#include <map>

namespace bvd {

namespace {

Universe& same_universe(const AValuedSet& a, const AValuedSet& b)
{
    if (!a.valid() || !b.valid())
        throw DomainError("null A-set handle");
    if (&a.universe() != &b.universe())
        throw DomainError("A-sets belong to different universes");
    return a.universe();
}

} // namespace

AValuedSet singleton(const AValuedSet& x)
{
    Universe& u = same_universe(x, x);
    return u.make({{x, u.algebra().top()}});
}

AValuedSet unordered_pair(const AValuedSet& x, const AValuedSet& y)
{
    Universe& u = same_universe(x, y);
    return u.make({{x, u.algebra().top()}, {y, u.algebra().top()}});
}

AValuedSet ordered_pair(const AValuedSet& x, const AValuedSet& y)
{
    return unordered_pair(singleton(x), unordered_pair(x, y));
}

AValuedSet product(const AValuedSet& X, const AValuedSet& Y)
{
    Universe& u = same_universe(X, Y);
    std::vector<std::pair<AValuedSet, AlgebraElement>> entries;
    for (auto& x : X.domain()) {
        auto in_x = u.truth(TruthKind::Membership, x, X);
        for (auto& y : Y.domain())
            entries.emplace_back(ordered_pair(x, y), in_x & u.truth(TruthKind::Membership, y, Y));
    }
    return u.make(std::move(entries));
}

AValuedSet power_set(const AValuedSet& X, std::size_t budget)
{
    Universe& u = same_universe(X, X);
    std::size_t bits = 0;
    std::vector<std::vector<std::size_t>> choices;
    for (std::size_t i = 0; i < X.size(); ++i) {
        choices.push_back(X.value_atoms(i).indices());
        bits += choices.back().size();
    }
    if (bits >= 63 || (uint64_t{1} << bits) > budget)
        throw BudgetError("power set needs 2^" + std::to_string(bits) +
                          " entries, budget is " + std::to_string(budget));
    std::vector<std::pair<AValuedSet, AtomSet>> entries;
    std::size_t atoms = u.algebra().atom_count();
    for (uint64_t m = 0; m < (uint64_t{1} << bits); ++m) {
        std::vector<std::pair<AValuedSet, AtomSet>> sub;
        uint64_t rest = m;
        for (std::size_t i = 0; i < X.size(); ++i) {
            AtomSet v(atoms);
            for (auto a : choices[i]) {
                if (rest & 1)
                    v.set(a);
                rest >>= 1;
            }
            sub.emplace_back(X.key(i), std::move(v));
        }
        entries.emplace_back(u.make_raw(std::move(sub)), AtomSet(atoms, true));
    }
    return u.make_raw(std::move(entries));
}

AValuedSet separation(const AValuedSet& X,
                      const std::function<AlgebraElement(const AValuedSet&)>& phi)
{
    Universe& u = same_universe(X, X);
    std::vector<std::pair<AValuedSet, AlgebraElement>> entries;
    for (std::size_t i = 0; i < X.size(); ++i)
        entries.emplace_back(X.key(i), X.value(i) & phi(X.key(i)));
    return u.make(std::move(entries));
}

AValuedSet check_embed(Universe& u, const HfSet& s)
{
    std::vector<std::pair<AValuedSet, AlgebraElement>> entries;
    for (auto& x : s.elements())
        entries.emplace_back(check_embed(u, x), u.algebra().top());
    return u.make(std::move(entries));
}

std::optional<HfSet> as_check(const AValuedSet& X)
{
    std::vector<HfSet> elems;
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (!X.value_atoms(i).all())
            return std::nullopt;
        auto k = as_check(X.key(i));
        if (!k)
            return std::nullopt;
        elems.push_back(std::move(*k));
    }
    return HfSet(std::move(elems));
}

AValuedSet fin_power_set(const AValuedSet& X, std::size_t budget)
{
    auto y = as_check(X);
    if (!y)
        throw DomainError("fin_power_set needs a check-embedded set");
    if (y->size() >= 63 || (uint64_t{1} << y->size()) > budget)
        throw BudgetError("finite power set exceeds budget");
    return check_embed(X.universe(), y->power_set());
}

AValuedSet fin_power_set_by_separation(const AValuedSet& X, std::size_t budget)
{
    Universe& u = X.universe();
    if (X.size() >= 63 || (uint64_t{1} << X.size()) > budget)
        throw BudgetError("finite power set exceeds budget");
    // images of maps n -> dom X, n <= |dom X|, are exactly the subsets of dom X
    std::vector<AValuedSet> images;
    for (uint64_t m = 0; m < (uint64_t{1} << X.size()); ++m) {
        std::vector<std::pair<AValuedSet, AlgebraElement>> e;
        for (std::size_t i = 0; i < X.size(); ++i)
            if (m >> i & 1)
                e.emplace_back(X.key(i), u.algebra().top());
        images.push_back(u.make(std::move(e)));
    }
    auto finite = [&](const AValuedSet& S) {
        AtomSet r(u.algebra().atom_count());
        for (auto& im : images)
            r |= u.truth_atoms(TruthKind::Equality, S, im);
        return u.algebra().element(std::move(r));
    };
    return separation(power_set(X, budget), finite);
}

} // namespace bvd

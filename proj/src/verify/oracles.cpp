#include "verify/oracles.hpp"

namespace bvd::verify {

HfSet project(const AValuedSet& x, std::size_t atom)
{
    std::vector<HfSet> elems;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x.value_atoms(i).test(atom))
            elems.push_back(project(x.key(i), atom));
    return HfSet(std::move(elems));
}

AtomSet naive_truth(TruthKind kind, const AValuedSet& a, const AValuedSet& b)
{
    std::size_t n = a.universe().algebra().atom_count();
    AtomSet r(n);
    for (std::size_t p = 0; p < n; ++p) {
        HfSet x = project(a, p), y = project(b, p);
        bool v = kind == TruthKind::Membership ? y.contains(x)
                 : kind == TruthKind::Subset   ? x.subset_of(y)
                                               : x == y;
        r.set(p, v);
    }
    return r;
}

std::vector<AValuedSet> small_asets(Universe& u)
{
    auto values = u.algebra().all_elements();
    auto next = [&](const std::vector<AValuedSet>& keys) {
        std::vector<AValuedSet> out{u.empty()};
        for (std::size_t i = 0; i < keys.size(); ++i)
            for (auto& v : values)
                out.push_back(u.make_raw({{keys[i], v.atoms()}}));
        for (std::size_t i = 0; i < keys.size(); ++i)
            for (std::size_t j = i + 1; j < keys.size(); ++j)
                for (auto& v : values)
                    for (auto& w : values)
                        out.push_back(u.make_raw({{keys[i], v.atoms()}, {keys[j], w.atoms()}}));
        return out;
    };
    return next(next({u.empty()}));
}

bool classical_delta0(const Delta0& phi, const HfEnv& env)
{
    auto term = [&](const D0Term& t) -> HfSet {
        if (!t.is_var()) {
            auto c = as_check(t.constant);
            if (!c)
                throw DomainError("classical evaluation needs check-embedded constants");
            return *c;
        }
        auto it = env.find(t.var);
        if (it == env.end())
            throw DomainError("unbound variable " + t.var);
        return it->second;
    };
    using K = Delta0::Kind;
    switch (phi.kind()) {
    case K::True: return true;
    case K::False: return false;
    case K::Eq: return term(phi.lhs()) == term(phi.rhs());
    case K::Mem: return term(phi.rhs()).contains(term(phi.lhs()));
    case K::Not: return !classical_delta0(phi.left(), env);
    case K::And: return classical_delta0(phi.left(), env) && classical_delta0(phi.right(), env);
    case K::Or: return classical_delta0(phi.left(), env) || classical_delta0(phi.right(), env);
    case K::Implies:
        return !classical_delta0(phi.left(), env) || classical_delta0(phi.right(), env);
    case K::Iff: return classical_delta0(phi.left(), env) == classical_delta0(phi.right(), env);
    case K::Forall:
    case K::Exists: {
        bool all = phi.kind() == K::Forall;
        HfSet bound = term(phi.rhs());
        for (auto& x : bound.elements()) {
            HfEnv e = env;
            e[phi.var()] = x;
            if (classical_delta0(phi.left(), e) != all)
                return !all;
        }
        return all;
    }
    }
    return false;
}

namespace {

struct Gen {
    std::mt19937_64& rng;
    Universe& u;
    const std::vector<HfSet>& pool;
    unsigned counter = 0;

    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

    D0Term term(const std::vector<std::string>& vars)
    {
        if (!vars.empty() && pick(3) != 0)
            return D0Term::variable(vars[pick(vars.size())]);
        return D0Term::of(check_embed(u, pool[pick(pool.size())]));
    }

    Delta0 formula(unsigned depth, std::vector<std::string>& vars)
    {
        using K = Delta0::Kind;
        unsigned choice = depth == 0 ? pick(2) : pick(7);
        switch (choice) {
        case 0: return Delta0::eq(term(vars), term(vars));
        case 1: return Delta0::mem(term(vars), term(vars));
        case 2: return Delta0::negate(formula(depth - 1, vars));
        case 3:
        case 4: {
            static const K ops[] = {K::And, K::Or, K::Implies, K::Iff};
            K op = ops[pick(4)];
            Delta0 a = formula(depth - 1, vars);
            return Delta0::binary(op, a, formula(depth - 1, vars));
        }
        default: {
            D0Term bound = term(vars);
            std::string v = "v" + std::to_string(counter++);
            vars.push_back(v);
            Delta0 body = formula(depth - 1, vars);
            vars.pop_back();
            return choice == 5 ? Delta0::forall(v, bound, body) : Delta0::exists(v, bound, body);
        }
        }
    }
};

} // namespace

Delta0 random_delta0(std::mt19937_64& rng, Universe& u, const std::vector<HfSet>& pool,
                     unsigned max_depth)
{
    Gen g{rng, u, pool};
    std::vector<std::string> vars;
    return g.formula(max_depth, vars);
}

Rational naive_agreement(const std::vector<unsigned>& f, unsigned k, int direction)
{
    std::size_t atoms = std::size_t{1} << (2 * k), hits = 0;
    unsigned here = direction == 1 ? 0 : k, there = direction == 1 ? k : 0;
    for (std::size_t x = 0; x < atoms; ++x) {
        bool ok = true;
        for (unsigned n = 0; n < k && ok; ++n)
            ok = ((x >> (here + n)) & 1u) == ((x >> (there + f[n])) & 1u);
        hits += ok;
    }
    Rational r(static_cast<unsigned long>(hits), static_cast<unsigned long>(atoms));
    r.canonicalize();
    return r;
}

ElemSet naive_step(const std::vector<Step>& f, const ElemSet& X)
{
    std::vector<EElem> out;
    for (auto& s : f) {
        bool inside = true;
        for (auto& d : s.domain)
            inside = inside && std::find(X.begin(), X.end(), d) != X.end();
        if (inside)
            out.insert(out.end(), s.image.begin(), s.image.end());
    }
    return make_set(out);
}

std::vector<EElem> elems_up_to_rank(unsigned r)
{
    std::vector<EElem> level{EElem::base()};
    for (unsigned i = 0; i < r; ++i) {
        std::vector<EElem> next{EElem::base()};
        std::size_t n = level.size();
        for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
            std::vector<EElem> k;
            for (std::size_t j = 0; j < n; ++j)
                if ((m >> j) & 1u)
                    k.push_back(level[j]);
            for (auto& q : level)
                next.push_back(EElem::pair(k, q));
        }
        level = make_set(next);
    }
    return level;
}

ElemSet random_elem_set(std::mt19937_64& rng, const std::vector<EElem>& pool,
                        std::size_t max_size)
{
    std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_size)(rng);
    std::vector<EElem> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
    return make_set(out);
}

RandomSubset<unsigned> random_rv(std::mt19937_64& rng, const SampleSpace& s, unsigned universe)
{
    RandomSubset<unsigned> a{&s, std::vector<std::vector<unsigned>>(s.atom_count())};
    for (auto& v : a.values)
        for (unsigned y = 0; y < universe; ++y)
            if (rng() & 1u)
                v.push_back(y);
    return a;
}

} // namespace bvd::verify

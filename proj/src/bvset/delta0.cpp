#include <bvd/delta0.hpp>

#include <algorithm>

namespace bvd {

Delta0 Delta0::truth(bool v)
{
    return Delta0(std::make_shared<Node>(Node{v ? Kind::True : Kind::False, {}, {}, {}, {}, {}}));
}

Delta0 Delta0::eq(D0Term a, D0Term b)
{
    return Delta0(std::make_shared<Node>(Node{Kind::Eq, std::move(a), std::move(b), {}, {}, {}}));
}

Delta0 Delta0::mem(D0Term a, D0Term b)
{
    return Delta0(std::make_shared<Node>(Node{Kind::Mem, std::move(a), std::move(b), {}, {}, {}}));
}

Delta0 Delta0::negate(Delta0 a)
{
    return Delta0(std::make_shared<Node>(
        Node{Kind::Not, {}, {}, {}, std::make_shared<const Delta0>(std::move(a)), {}}));
}

Delta0 Delta0::binary(Kind k, Delta0 a, Delta0 b)
{
    if (k != Kind::And && k != Kind::Or && k != Kind::Implies && k != Kind::Iff)
        throw DomainError("not a binary connective");
    return Delta0(std::make_shared<Node>(Node{k, {}, {}, {},
                                              std::make_shared<const Delta0>(std::move(a)),
                                              std::make_shared<const Delta0>(std::move(b))}));
}

Delta0 Delta0::forall(std::string var, D0Term bound, Delta0 body)
{
    return Delta0(std::make_shared<Node>(Node{Kind::Forall, {}, std::move(bound), std::move(var),
                                              std::make_shared<const Delta0>(std::move(body)), {}}));
}

Delta0 Delta0::exists(std::string var, D0Term bound, Delta0 body)
{
    return Delta0(std::make_shared<Node>(Node{Kind::Exists, {}, std::move(bound), std::move(var),
                                              std::make_shared<const Delta0>(std::move(body)), {}}));
}

std::set<std::string> Delta0::free_vars() const
{
    std::set<std::string> out;
    auto term = [&](const D0Term& t) {
        if (t.is_var())
            out.insert(t.var);
    };
    switch (kind()) {
    case Kind::True:
    case Kind::False: break;
    case Kind::Eq:
    case Kind::Mem:
        term(lhs());
        term(rhs());
        break;
    case Kind::Not: out = left().free_vars(); break;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff: {
        out = left().free_vars();
        auto r = right().free_vars();
        out.insert(r.begin(), r.end());
        break;
    }
    case Kind::Forall:
    case Kind::Exists:
        out = left().free_vars();
        out.erase(var());
        term(rhs());
        break;
    }
    return out;
}

std::string Delta0::to_string() const
{
    auto term = [](const D0Term& t) { return t.is_var() ? t.var : t.constant.to_string(); };
    switch (kind()) {
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Eq: return term(lhs()) + " = " + term(rhs());
    case Kind::Mem: return term(lhs()) + " in " + term(rhs());
    case Kind::Not: return "~(" + left().to_string() + ")";
    case Kind::And: return "(" + left().to_string() + " & " + right().to_string() + ")";
    case Kind::Or: return "(" + left().to_string() + " | " + right().to_string() + ")";
    case Kind::Implies: return "(" + left().to_string() + " => " + right().to_string() + ")";
    case Kind::Iff: return "(" + left().to_string() + " <=> " + right().to_string() + ")";
    case Kind::Forall:
        return "(forall " + var() + " in " + term(rhs()) + ". " + left().to_string() + ")";
    case Kind::Exists:
        return "(exists " + var() + " in " + term(rhs()) + ". " + left().to_string() + ")";
    }
    return "?";
}

namespace {

AValuedSet resolve(Universe& u, const D0Term& t, const Env& env)
{
    if (!t.is_var()) {
        if (&t.constant.universe() != &u)
            throw DomainError("formula constant from a different universe");
        return t.constant;
    }
    auto it = env.find(t.var);
    if (it == env.end())
        throw DomainError("unbound variable '" + t.var + "'");
    return it->second;
}

AtomSet eval(Universe& u, const Delta0& f, Env& env)
{
    using K = Delta0::Kind;
    std::size_t n = u.algebra().atom_count();
    switch (f.kind()) {
    case K::True: return AtomSet(n, true);
    case K::False: return AtomSet(n);
    case K::Eq:
        return u.truth_atoms(TruthKind::Equality, resolve(u, f.lhs(), env), resolve(u, f.rhs(), env));
    case K::Mem:
        return u.truth_atoms(TruthKind::Membership, resolve(u, f.lhs(), env),
                             resolve(u, f.rhs(), env));
    case K::Not: return ~eval(u, f.left(), env);
    case K::And: return eval(u, f.left(), env) & eval(u, f.right(), env);
    case K::Or: return eval(u, f.left(), env) | eval(u, f.right(), env);
    case K::Implies: return ~eval(u, f.left(), env) | eval(u, f.right(), env);
    case K::Iff: {
        AtomSet a = eval(u, f.left(), env), b = eval(u, f.right(), env);
        return (~a | b) & (~b | a);
    }
    case K::Forall:
    case K::Exists: {
        AValuedSet X = resolve(u, f.rhs(), env);
        bool all = f.kind() == K::Forall;
        AtomSet r(n, all);
        std::optional<AValuedSet> saved;
        if (auto it = env.find(f.var()); it != env.end())
            saved = it->second;
        for (std::size_t i = 0; i < X.size(); ++i) {
            AValuedSet t = X.key(i);
            AtomSet guard = u.truth_atoms(TruthKind::Membership, t, X);
            env[f.var()] = t;
            AtomSet body = eval(u, f.left(), env);
            if (all)
                r &= ~guard | body;
            else
                r |= guard & body;
        }
        if (saved)
            env[f.var()] = *saved;
        else
            env.erase(f.var());
        return r;
    }
    }
    throw DomainError("unknown formula node");
}

} // namespace

AlgebraElement eval_delta0(Universe& u, const Delta0& phi, const Env& env)
{
    Env scratch = env;
    return u.algebra().element(eval(u, phi, scratch));
}

AValuedSet separation(const AValuedSet& X, const Delta0& phi, const std::string& var,
                      const Env& env)
{
    for (auto& v : phi.free_vars())
        if (v != var && !env.count(v))
            throw DomainError("unbound free variable '" + v + "' in separation formula");
    Universe& u = X.universe();
    return separation(X, [&](const AValuedSet& t) {
        Env e = env;
        e[var] = t;
        return eval_delta0(u, phi, e);
    });
}

Witness maximizing_witness(const AValuedSet& X, const Delta0& phi, const std::string& var,
                           const Env& env)
{
    for (auto& v : phi.free_vars())
        if (v != var && !env.count(v))
            throw DomainError("unbound free variable '" + v + "' in witness formula");
    Universe& u = X.universe();
    auto dom = X.domain();
    std::sort(dom.begin(), dom.end(),
              [](const AValuedSet& a, const AValuedSet& b) { return structural_compare(a, b) < 0; });
    std::vector<std::pair<AValuedSet, AtomSet>> weights;
    AtomSet used(u.algebra().atom_count());
    for (auto& t : dom) {
        Env e = env;
        e[var] = t;
        AtomSet v = u.truth_atoms(TruthKind::Membership, t, X) & eval_delta0(u, phi, e).atoms();
        v &= ~used;
        used |= v;
        if (!v.none())
            weights.emplace_back(t, v);
    }
    // x(s) = join_i a_i & ||s in t_i|| over s in the union of dom t_i
    std::vector<AValuedSet> keys;
    for (auto& [t, a] : weights)
        for (auto& s : t.domain())
            keys.push_back(s);
    std::vector<std::pair<AValuedSet, AtomSet>> entries;
    for (auto& s : keys) {
        AtomSet v(u.algebra().atom_count());
        for (auto& [t, a] : weights)
            v |= a & u.truth_atoms(TruthKind::Membership, s, t);
        entries.emplace_back(s, v);
    }
    AValuedSet x = u.make_raw(std::move(entries));
    Env e = env;
    e[var] = x;
    AlgebraElement value = u.truth(TruthKind::Membership, x, X) & eval_delta0(u, phi, e);
    return {x, value};
}

} // namespace bvd

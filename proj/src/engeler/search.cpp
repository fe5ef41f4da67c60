#include <bvd/engeler.hpp>

#include <algorithm>
#include <tuple>

namespace bvd {

struct SemanticSet::Impl {
    Term term;
    Valuation rho;
};

SemPtr SemanticSet::finite(ElemSet s)
{
    auto p = std::shared_ptr<SemanticSet>(new SemanticSet());
    p->kind_ = Kind::Finite;
    p->elems_ = make_set(std::move(s));
    return p;
}

SemPtr SemanticSet::term(Term m, const Valuation& rho)
{
    for (auto& x : m.free_vars())
        if (!rho.lookup(x))
            throw DomainError("unbound free variable '" + x + "'");
    auto p = std::shared_ptr<SemanticSet>(new SemanticSet());
    p->kind_ = Kind::TermDen;
    p->impl_ = std::make_shared<Impl>(Impl{std::move(m), rho});
    return p;
}

SemPtr SemanticSet::oracle(std::map<unsigned, bool> window, unsigned fuel_inner, EElem t_star)
{
    auto p = std::shared_ptr<SemanticSet>(new SemanticSet());
    p->kind_ = Kind::Oracle;
    p->window_ = std::move(window);
    p->fuel_inner_ = fuel_inner;
    p->t_star_ = t_star;
    return p;
}

Valuation Valuation::bind(const std::string& name, SemPtr value) const
{
    return Valuation(std::make_shared<const Node>(Node{name, std::move(value), head_}));
}

const SemanticSet* Valuation::lookup(const std::string& name) const
{
    for (auto* n = head_.get(); n; n = n->next.get())
        if (n->name == name)
            return n->value.get();
    return nullptr;
}

SemPtr Valuation::lookup_ptr(const std::string& name) const
{
    for (auto* n = head_.get(); n; n = n->next.get())
        if (n->name == name)
            return n->value;
    return nullptr;
}

const std::vector<ElemSet>& enumeration_domains()
{
    static const std::vector<ElemSet> doms = [] {
        EElem b = EElem::base();
        std::vector<EElem> pool{b, EElem::pair({}, b), EElem::pair({b}, b)};
        std::vector<ElemSet> out{{}};
        for (std::size_t i = 0; i < pool.size(); ++i)
            out.push_back(make_set({pool[i]}));
        for (std::size_t i = 0; i < pool.size(); ++i)
            for (std::size_t j = i + 1; j < pool.size(); ++j)
                out.push_back(make_set({pool[i], pool[j]}));
        return out;
    }();
    return doms;
}

namespace {

struct ArgNode {
    SemPtr value;
    std::shared_ptr<const ArgNode> next;
};
using Args = std::shared_ptr<const ArgNode>;

Verdict and3(Verdict a, Verdict b)
{
    if (a == Verdict::No || b == Verdict::No)
        return Verdict::No;
    if (a == Verdict::Unknown || b == Verdict::Unknown)
        return Verdict::Unknown;
    return Verdict::Yes;
}

const Term& church_term(Church kind, unsigned n)
{
    static std::mutex mu;
    static std::map<std::pair<int, unsigned>, Term> cache;
    std::lock_guard lk(mu);
    auto key = std::make_pair(static_cast<int>(kind), n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, church(kind, n)).first;
    return it->second;
}

// t* in [[Num_n]] . A for closed argument terms, shared across queries
struct NumeralCache {
    std::mutex mu;
    std::map<std::tuple<unsigned, const void*, int, uint32_t>, std::pair<Term, Verdict>> map;
};

NumeralCache& numeral_cache()
{
    static NumeralCache c;
    return c;
}

} // namespace

class Search {
public:
    explicit Search(std::vector<std::string>* trace) : trace_(trace) {}

    Verdict term(const Term& t, const Valuation& env, Args args, const EElem& goal, int fuel,
                 int depth)
    {
        if (fuel <= 0)
            return Verdict::Unknown;
        const Term* cur = &t;
        while (cur->kind() == Term::Kind::App) {
            args = std::make_shared<const ArgNode>(
                ArgNode{SemanticSet::term(cur->arg(), env), std::move(args)});
            cur = &cur->fn();
        }
        switch (cur->kind()) {
        case Term::Kind::Lam:
            if (args) {
                note(depth, "beta " + cur->name() + " := " + describe(*args->value));
                return term(cur->body(), env.bind(cur->name(), args->value), args->next, goal,
                            fuel - 1, depth + 1);
            }
            if (goal.is_base())
                return Verdict::No;
            note(depth, "abstract " + cur->name() + " := " + to_string(goal.children()) +
                            ", goal " + goal.result().to_string());
            return term(cur->body(), env.bind(cur->name(), SemanticSet::finite(goal.children())),
                        nullptr, goal.result(), fuel - 1, depth + 1);
        case Term::Kind::Var: {
            SemPtr s = env.lookup_ptr(cur->name());
            if (!s)
                throw DomainError("unbound free variable '" + cur->name() + "'");
            note(depth, "variable " + cur->name());
            return sem(*s, args, goal, fuel, depth + 1);
        }
        case Term::Kind::Const:
            note(depth, "constant " + cur->name());
            return sem(*cur->value(), args, goal, fuel, depth + 1);
        case Term::Kind::App: break;
        }
        return Verdict::Unknown;
    }

    Verdict sem(const SemanticSet& s, const Args& args, const EElem& goal, int fuel, int depth)
    {
        switch (s.kind_) {
        case SemanticSet::Kind::Finite: {
            if (!args) {
                bool in = contains(s.elems_, goal);
                if (in)
                    note(depth, goal.to_string() + " in " + to_string(s.elems_));
                return in ? Verdict::Yes : Verdict::No;
            }
            if (fuel <= 0)
                return Verdict::Unknown;
            std::vector<const SemanticSet*> argv;
            for (auto* a = args.get(); a; a = a->next.get())
                argv.push_back(a->value.get());
            Verdict best = Verdict::No;
            for (auto& p : s.elems_) {
                std::vector<const ElemSet*> ks;
                EElem r = p;
                bool ok = true;
                for (std::size_t i = 0; i < argv.size() && ok; ++i) {
                    if (r.is_base()) {
                        ok = false;
                        break;
                    }
                    ks.push_back(&r.children());
                    r = r.result();
                }
                if (!ok || r != goal)
                    continue;
                std::size_t mark = trace_ ? trace_->size() : 0;
                note(depth, "use " + p.to_string());
                Verdict v = Verdict::Yes;
                for (std::size_t i = 0; i < ks.size() && v != Verdict::No; ++i)
                    for (auto& k : *ks[i]) {
                        v = and3(v, member(*argv[i], k, fuel - 1, depth + 1));
                        if (v == Verdict::No)
                            break;
                    }
                if (v == Verdict::Yes)
                    return v;
                if (trace_)
                    trace_->resize(mark);
                if (v == Verdict::Unknown)
                    best = Verdict::Unknown;
            }
            return best;
        }
        case SemanticSet::Kind::TermDen:
            if (!args)
                return member(s, goal, fuel, depth);
            return term(s.impl_->term, s.impl_->rho, args, goal, fuel, depth);
        case SemanticSet::Kind::Oracle: {
            if (!args)
                return member(s, goal, fuel, depth);
            return oracle(s, args->value, args->next, goal, fuel, depth);
        }
        }
        return Verdict::Unknown;
    }

    // argument-free membership, through the fuel-indexed cache
    Verdict member(const SemanticSet& s, const EElem& goal, int fuel, int depth)
    {
        if (s.kind_ == SemanticSet::Kind::Finite)
            return sem(s, nullptr, goal, fuel, depth);
        if (fuel <= 0)
            return Verdict::Unknown;
        unsigned f = static_cast<unsigned>(fuel);
        if (!trace_) {
            std::lock_guard lk(s.cache_mu_);
            auto it = s.cache_.find(goal.id());
            if (it != s.cache_.end()) {
                auto& c = it->second;
                if (f >= c.yes_at)
                    return Verdict::Yes;
                if (f >= c.no_at)
                    return Verdict::No;
                if (fuel <= c.unknown_to)
                    return Verdict::Unknown;
            }
        }
        Verdict v;
        if (s.kind_ == SemanticSet::Kind::TermDen)
            v = term(s.impl_->term, s.impl_->rho, nullptr, goal, fuel, depth);
        else
            v = oracle_pair(s, goal, fuel, depth);
        std::lock_guard lk(s.cache_mu_);
        auto& c = s.cache_[goal.id()];
        if (v == Verdict::Yes)
            c.yes_at = std::min(c.yes_at, f);
        else if (v == Verdict::No)
            c.no_at = std::min(c.no_at, f);
        else
            c.unknown_to = std::max(c.unknown_to, fuel);
        return v;
    }

    Verdict numeral_test(const SemanticSet& d, unsigned n, const SemPtr& arg, int fuel, int depth)
    {
        int f = std::min(fuel - 1, static_cast<int>(d.fuel_inner_));
        const Term& num = church_term(Church::Num, n);
        Args a = std::make_shared<const ArgNode>(ArgNode{arg, nullptr});
        bool closed = arg->kind_ == SemanticSet::Kind::TermDen && arg->impl_->term.is_closed();
        if (!closed || trace_)
            return term(num, Valuation(), a, d.t_star_, f, depth);
        auto& c = numeral_cache();
        auto key = std::make_tuple(n, arg->impl_->term.node_id(), f, d.t_star_.id());
        {
            std::lock_guard lk(c.mu);
            if (auto it = c.map.find(key); it != c.map.end())
                return it->second.second;
        }
        Verdict v = term(num, Valuation(), a, d.t_star_, f, depth);
        std::lock_guard lk(c.mu);
        c.map.emplace(key, std::make_pair(arg->impl_->term, v));
        return v;
    }

    const Term& chi(bool bit) { return church_term(bit ? Church::True : Church::False, 0); }

    Verdict oracle(const SemanticSet& s, const SemPtr& a1, const Args& rest, const EElem& goal,
                   int fuel, int depth)
    {
        if (fuel <= 0)
            return Verdict::Unknown;
        Verdict best = Verdict::No;
        for (auto& [n, bit] : s.window_) {
            std::size_t mark = trace_ ? trace_->size() : 0;
            note(depth, "oracle at " + std::to_string(n) + " -> " + (bit ? "true" : "false"));
            Verdict v = numeral_test(s, n, a1, fuel, depth + 1);
            if (v != Verdict::No)
                v = and3(v, term(chi(bit), Valuation(), rest, goal, fuel - 1, depth + 1));
            if (v == Verdict::Yes)
                return v;
            if (trace_)
                trace_->resize(mark);
            if (v == Verdict::Unknown)
                best = Verdict::Unknown;
        }
        return best;
    }

    Verdict oracle_pair(const SemanticSet& s, const EElem& goal, int fuel, int depth)
    {
        if (goal.is_base())
            return Verdict::No;
        return oracle(s, SemanticSet::finite(goal.children()), nullptr, goal.result(), fuel, depth);
    }

    // ------------------------------------------------------------ enumeration

    ElemSet enum_term(const Term& t, const Valuation& env, Args args, int fuel)
    {
        if (fuel <= 0)
            return {};
        const Term* cur = &t;
        while (cur->kind() == Term::Kind::App) {
            args = std::make_shared<const ArgNode>(
                ArgNode{SemanticSet::term(cur->arg(), env), std::move(args)});
            cur = &cur->fn();
        }
        switch (cur->kind()) {
        case Term::Kind::Lam: {
            if (args)
                return enum_term(cur->body(), env.bind(cur->name(), args->value), args->next,
                                 fuel - 1);
            std::vector<EElem> out;
            for (auto& K : enumeration_domains())
                for (auto& q : enum_term(cur->body(), env.bind(cur->name(), SemanticSet::finite(K)),
                                         nullptr, fuel - 1))
                    out.push_back(EElem::pair(K, q));
            return make_set(std::move(out));
        }
        case Term::Kind::Var: {
            SemPtr s = env.lookup_ptr(cur->name());
            if (!s)
                throw DomainError("unbound free variable '" + cur->name() + "'");
            return enum_sem(*s, args, fuel);
        }
        case Term::Kind::Const: return enum_sem(*cur->value(), args, fuel);
        case Term::Kind::App: break;
        }
        return {};
    }

    ElemSet enum_sem(const SemanticSet& s, const Args& args, int fuel)
    {
        if (fuel <= 0)
            return {};
        switch (s.kind_) {
        case SemanticSet::Kind::Finite: {
            if (!args)
                return s.elems_;
            std::vector<const SemanticSet*> argv;
            for (auto* a = args.get(); a; a = a->next.get())
                argv.push_back(a->value.get());
            std::vector<EElem> out;
            for (auto& p : s.elems_) {
                EElem r = p;
                bool ok = true;
                for (std::size_t i = 0; i < argv.size() && ok; ++i) {
                    if (r.is_base()) {
                        ok = false;
                        break;
                    }
                    for (auto& k : r.children())
                        if (member(*argv[i], k, fuel - 1, 0) != Verdict::Yes) {
                            ok = false;
                            break;
                        }
                    if (ok)
                        r = r.result();
                }
                if (ok)
                    out.push_back(r);
            }
            return make_set(std::move(out));
        }
        case SemanticSet::Kind::TermDen: return enum_term(s.impl_->term, s.impl_->rho, args, fuel);
        case SemanticSet::Kind::Oracle: {
            std::vector<EElem> out;
            for (auto& [n, bit] : s.window_) {
                if (args) {
                    if (numeral_test(s, n, args->value, fuel, 0) == Verdict::Yes)
                        for (auto& q : enum_term(chi(bit), Valuation(), args->next, fuel - 1))
                            out.push_back(q);
                    continue;
                }
                for (auto& K : enumeration_domains())
                    if (numeral_test(s, n, SemanticSet::finite(K), fuel, 0) ==
                        Verdict::Yes)
                        for (auto& q : enum_term(chi(bit), Valuation(), nullptr, fuel - 1))
                            out.push_back(EElem::pair(K, q));
            }
            return make_set(std::move(out));
        }
        }
        return {};
    }

private:
    void note(int depth, const std::string& line)
    {
        if (trace_)
            trace_->push_back(std::string(2 * depth, ' ') + line);
    }
    static std::string describe(const SemanticSet& s)
    {
        switch (s.kind_) {
        case SemanticSet::Kind::Finite: return to_string(s.elems_);
        case SemanticSet::Kind::TermDen: return "[[" + s.impl_->term.to_string() + "]]";
        case SemanticSet::Kind::Oracle: return "oracle";
        }
        return "?";
    }

    std::vector<std::string>* trace_;
};

Verdict SemanticSet::contains(const EElem& e, unsigned fuel) const
{
    if (fuel == 0)
        return Verdict::Unknown;
    return Search(nullptr).sem(*this, nullptr, e, static_cast<int>(fuel), 0);
}

ElemSet SemanticSet::enumerate(unsigned fuel) const
{
    return Search(nullptr).enum_sem(*this, nullptr, static_cast<int>(fuel));
}

MemberResult denote_member(const Term& m, const Valuation& rho, const EElem& e, unsigned fuel,
                           bool want_trace)
{
    for (auto& x : m.free_vars())
        if (!rho.lookup(x))
            throw DomainError("unbound free variable '" + x + "'");
    MemberResult r;
    Search s(want_trace ? &r.trace : nullptr);
    r.verdict = s.term(m, rho, nullptr, e, static_cast<int>(fuel), 0);
    if (r.verdict != Verdict::Yes)
        r.trace.clear();
    return r;
}

ElemSet denote_enumerate(const Term& m, const Valuation& rho, unsigned fuel)
{
    for (auto& x : m.free_vars())
        if (!rho.lookup(x))
            throw DomainError("unbound free variable '" + x + "'");
    return Search(nullptr).enum_term(m, rho, nullptr, static_cast<int>(fuel));
}

SemPtr oracle_set(std::map<unsigned, bool> window, unsigned fuel_inner)
{
    return SemanticSet::oracle(std::move(window), fuel_inner, witnesses().t_star);
}

} // namespace bvd

#include <bvd/lambda.hpp>

#include <map>
#include <vector>

namespace bvd {

Term Term::var(std::string name)
{
    std::set<std::string> fv{name};
    return Term(std::make_shared<Node>(Node{Kind::Var, std::move(name), {}, {}, {}, 1, std::move(fv)}));
}

Term Term::lam(std::string name, Term body)
{
    auto fv = body.free_vars();
    fv.erase(name);
    std::size_t size = body.size() + 1;
    return Term(std::make_shared<Node>(Node{Kind::Lam, std::move(name),
                                            std::make_shared<const Term>(std::move(body)), {}, {},
                                            size, std::move(fv)}));
}

Term Term::app(Term fn, Term arg)
{
    auto fv = fn.free_vars();
    fv.insert(arg.free_vars().begin(), arg.free_vars().end());
    std::size_t size = fn.size() + arg.size() + 1;
    return Term(std::make_shared<Node>(Node{Kind::App, {}, std::make_shared<const Term>(std::move(fn)),
                                            std::make_shared<const Term>(std::move(arg)), {}, size,
                                            std::move(fv)}));
}

Term Term::constant(std::string label, std::shared_ptr<const SemanticSet> value)
{
    return Term(std::make_shared<Node>(
        Node{Kind::Const, std::move(label), {}, {}, std::move(value), 1, {}}));
}

namespace {

void print(const Term& t, std::string& out)
{
    switch (t.kind()) {
    case Term::Kind::Var: out += t.name(); return;
    case Term::Kind::Const: out += "$" + t.name(); return;
    case Term::Kind::Lam:
        out += "\\" + t.name() + ". ";
        print(t.body(), out);
        return;
    case Term::Kind::App: {
        bool pf = t.fn().kind() == Term::Kind::Lam;
        bool pa = t.arg().kind() == Term::Kind::Lam || t.arg().kind() == Term::Kind::App;
        if (pf)
            out += "(";
        print(t.fn(), out);
        out += pf ? ") " : " ";
        if (pa)
            out += "(";
        print(t.arg(), out);
        if (pa)
            out += ")";
        return;
    }
    }
}

struct Scope {
    std::map<std::string, std::vector<std::size_t>> depth;
    std::size_t level = 0;
    void push(const std::string& x) { depth[x].push_back(level++); }
    void pop(const std::string& x)
    {
        depth[x].pop_back();
        --level;
    }
    // de Bruijn level of the binder, or -1 when free
    long lookup(const std::string& x) const
    {
        auto it = depth.find(x);
        return it == depth.end() || it->second.empty() ? -1 : static_cast<long>(it->second.back());
    }
};

bool alpha(const Term& a, const Term& b, Scope& sa, Scope& sb)
{
    if (a.same_node(b) && sa.level == sb.level && a.is_closed())
        return true;
    if (a.kind() != b.kind())
        return false;
    switch (a.kind()) {
    case Term::Kind::Var: {
        long la = sa.lookup(a.name()), lb = sb.lookup(b.name());
        if (la < 0 && lb < 0)
            return a.name() == b.name();
        return la == lb;
    }
    case Term::Kind::Const: return a.name() == b.name() && a.value() == b.value();
    case Term::Kind::Lam: {
        sa.push(a.name());
        sb.push(b.name());
        bool r = alpha(a.body(), b.body(), sa, sb);
        sa.pop(a.name());
        sb.pop(b.name());
        return r;
    }
    case Term::Kind::App: return alpha(a.fn(), b.fn(), sa, sb) && alpha(a.arg(), b.arg(), sa, sb);
    }
    return false;
}

std::string fresh(const std::string& base, const std::set<std::string>& avoid1,
                  const std::set<std::string>& avoid2)
{
    std::string n = base;
    do
        n += "'";
    while (avoid1.count(n) || avoid2.count(n));
    return n;
}

} // namespace

std::string Term::to_string() const
{
    std::string out;
    print(*this, out);
    return out;
}

bool alpha_equal(const Term& a, const Term& b)
{
    Scope sa, sb;
    return alpha(a, b, sa, sb);
}

Term substitute(const Term& m, const std::string& x, const Term& n)
{
    if (!m.free_vars().count(x))
        return m;
    switch (m.kind()) {
    case Term::Kind::Var: return n;
    case Term::Kind::Const: return m;
    case Term::Kind::App: return Term::app(substitute(m.fn(), x, n), substitute(m.arg(), x, n));
    case Term::Kind::Lam: {
        const std::string& y = m.name();
        if (!n.free_vars().count(y))
            return Term::lam(y, substitute(m.body(), x, n));
        std::set<std::string> avoid = m.body().free_vars();
        avoid.insert(x);
        std::string y2 = fresh(y, avoid, n.free_vars());
        Term body = substitute(m.body(), y, Term::var(y2));
        return Term::lam(y2, substitute(body, x, n));
    }
    }
    return m;
}

std::optional<unsigned> as_numeral(const Term& m)
{
    if (m.kind() != Term::Kind::Lam || m.body().kind() != Term::Kind::Lam)
        return std::nullopt;
    const std::string& f = m.name();
    const std::string& x = m.body().name();
    if (f == x)
        return std::nullopt;
    unsigned n = 0;
    const Term* t = &m.body().body();
    while (t->kind() == Term::Kind::App) {
        if (t->fn().kind() != Term::Kind::Var || t->fn().name() != f)
            return std::nullopt;
        t = &t->arg();
        ++n;
    }
    if (t->kind() != Term::Kind::Var || t->name() != x)
        return std::nullopt;
    return n;
}

} // namespace bvd

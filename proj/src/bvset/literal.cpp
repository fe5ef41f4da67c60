#include <bvd/delta0.hpp>

#include <cctype>

namespace bvd {

namespace {

class Lexer {
public:
    Lexer(Universe& u, const std::string& t) : u_(u), t_(t) {}

    void ws()
    {
        while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_])))
            ++p_;
    }
    bool at_end()
    {
        ws();
        return p_ >= t_.size();
    }
    bool peek(const std::string& s)
    {
        ws();
        return t_.compare(p_, s.size(), s) == 0;
    }
    bool accept(const std::string& s)
    {
        if (!peek(s))
            return false;
        // keywords must not run into an identifier
        if (std::isalpha(static_cast<unsigned char>(s[0])) && p_ + s.size() < t_.size() &&
            ident_char(t_[p_ + s.size()]))
            return false;
        p_ += s.size();
        return true;
    }
    void expect(const std::string& s)
    {
        if (!accept(s))
            throw ParseError("expected '" + s + "'", p_);
    }
    static bool ident_char(char c)
    {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    }
    std::string ident()
    {
        ws();
        std::size_t s = p_;
        if (p_ >= t_.size() || !(std::isalpha(static_cast<unsigned char>(t_[p_])) || t_[p_] == '_'))
            throw ParseError("expected identifier", p_);
        while (p_ < t_.size() && ident_char(t_[p_]))
            ++p_;
        std::string id = t_.substr(s, p_ - s);
        static const char* reserved[] = {"forall", "exists", "in", "true", "false", "chk", "top", "bot"};
        for (auto* r : reserved)
            if (id == r)
                throw ParseError("unexpected keyword '" + id + "'", s);
        return id;
    }

    AlgebraElement elem()
    {
        ws();
        std::size_t s = p_;
        if (accept("top"))
            return u_.algebra().top();
        if (accept("bot"))
            return u_.algebra().bottom();
        expect("[");
        auto e = t_.find(']', p_);
        if (e == std::string::npos)
            throw ParseError("unterminated element", s);
        std::string body = t_.substr(s, e + 1 - s);
        p_ = e + 1;
        try {
            return parse_element(u_.algebra(), body);
        } catch (const DomainError& err) {
            throw ParseError(err.what(), s);
        }
    }

    HfSet hf()
    {
        ws();
        expect("{");
        std::vector<HfSet> v;
        if (!accept("}")) {
            do
                v.push_back(hf());
            while (accept(","));
            expect("}");
        }
        return HfSet(std::move(v));
    }

    AValuedSet aset()
    {
        if (accept("chk"))
            return check_embed(u_, hf());
        expect("{");
        std::vector<std::pair<AValuedSet, AlgebraElement>> entries;
        if (!accept("}")) {
            do {
                AValuedSet k = aset();
                expect("->");
                entries.emplace_back(k, elem());
            } while (accept(","));
            expect("}");
        }
        try {
            return u_.make(std::move(entries));
        } catch (const DomainError& err) {
            throw ParseError(err.what(), p_);
        }
    }

    D0Term term()
    {
        if (peek("{") || peek("chk"))
            return D0Term::of(aset());
        return D0Term::variable(ident());
    }

    Delta0 formula() { return iff(); }

    Delta0 iff()
    {
        Delta0 a = imp();
        while (accept("<=>"))
            a = Delta0::binary(Delta0::Kind::Iff, a, imp());
        return a;
    }
    Delta0 imp()
    {
        Delta0 a = disj();
        if (accept("=>"))
            return Delta0::binary(Delta0::Kind::Implies, a, imp());
        return a;
    }
    Delta0 disj()
    {
        Delta0 a = conj();
        while (accept("|"))
            a = Delta0::binary(Delta0::Kind::Or, a, conj());
        return a;
    }
    Delta0 conj()
    {
        Delta0 a = unary();
        while (accept("&"))
            a = Delta0::binary(Delta0::Kind::And, a, unary());
        return a;
    }
    Delta0 unary()
    {
        if (accept("~"))
            return Delta0::negate(unary());
        bool all = accept("forall");
        if (all || accept("exists")) {
            std::string v = ident();
            expect("in");
            D0Term bound = term();
            expect(".");
            Delta0 body = formula();
            return all ? Delta0::forall(v, bound, body) : Delta0::exists(v, bound, body);
        }
        if (accept("true"))
            return Delta0::truth(true);
        if (accept("false"))
            return Delta0::truth(false);
        if (accept("(")) {
            Delta0 f = formula();
            expect(")");
            return f;
        }
        D0Term a = term();
        if (accept("="))
            return Delta0::eq(a, term());
        if (accept("in"))
            return Delta0::mem(a, term());
        throw ParseError("expected '=' or 'in'", p_);
    }

    std::size_t pos() const { return p_; }

private:
    Universe& u_;
    const std::string& t_;
    std::size_t p_ = 0;
};

} // namespace

AValuedSet parse_aset(Universe& u, const std::string& text)
{
    Lexer lx(u, text);
    AValuedSet s = lx.aset();
    if (!lx.at_end())
        throw ParseError("trailing input", lx.pos());
    return s;
}

Delta0 parse_delta0(Universe& u, const std::string& text)
{
    Lexer lx(u, text);
    Delta0 f = lx.formula();
    if (!lx.at_end())
        throw ParseError("trailing input", lx.pos());
    return f;
}

} // namespace bvd

#include <vector>
#include <bvd/lambda.hpp>

#include <cctype>

namespace bvd {

namespace {

class Parser {
public:
    explicit Parser(const std::string& t) : t_(t) {}

    Term top()
    {
        Term m = term();
        ws();
        if (p_ != t_.size())
            throw ParseError("unexpected '" + std::string(1, t_[p_]) + "'", p_);
        return m;
    }

private:
    void ws()
    {
        while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_])))
            ++p_;
    }
    bool lambda()
    {
        ws();
        if (p_ < t_.size() && t_[p_] == '\\') {
            ++p_;
            return true;
        }
        if (t_.compare(p_, 2, "\xce\xbb") == 0) {
            p_ += 2;
            return true;
        }
        return false;
    }
    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c)
    {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    }
    std::string word()
    {
        std::size_t s = p_;
        while (p_ < t_.size() && ident_char(t_[p_]))
            ++p_;
        return t_.substr(s, p_ - s);
    }
    std::string binder()
    {
        ws();
        std::size_t s = p_;
        if (p_ >= t_.size() || !ident_start(t_[p_]))
            throw ParseError("expected variable", p_);
        std::string w = word();
        if (sugar(w))
            throw ParseError("'" + w + "' cannot be bound", s);
        return w;
    }
    static bool sugar(const std::string& w)
    {
        return w == "true" || w == "false" || w == "if" || w == "succ" || w == "pred" ||
               w == "iszero" || (w.rfind("num_", 0) == 0 && w.size() > 4);
    }

    Term term()
    {
        if (lambda()) {
            std::vector<std::string> xs{binder()};
            for (;;) {
                ws();
                if (p_ < t_.size() && t_[p_] == '.')
                    break;
                if (p_ >= t_.size() || !ident_start(t_[p_]))
                    throw ParseError("expected '.'", p_);
                xs.push_back(binder());
            }
            ++p_;
            Term body = term();
            for (auto it = xs.rbegin(); it != xs.rend(); ++it)
                body = Term::lam(*it, body);
            return body;
        }
        std::optional<Term> head;
        for (;;) {
            ws();
            if (p_ >= t_.size() || t_[p_] == ')')
                break;
            std::size_t s = p_;
            if (lambda()) {
                p_ = s;
                Term l = term();
                head = head ? Term::app(*head, l) : l;
                break;
            }
            Term a = atom();
            head = head ? Term::app(*head, a) : a;
        }
        if (!head)
            throw ParseError("expected term", p_);
        return *head;
    }

    Term atom()
    {
        ws();
        std::size_t s = p_;
        char c = t_[p_];
        if (c == '(') {
            ++p_;
            Term m = term();
            ws();
            if (p_ >= t_.size() || t_[p_] != ')')
                throw ParseError("expected ')'", p_);
            ++p_;
            return m;
        }
        if (c == '#') {
            ++p_;
            std::size_t d = p_;
            while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_])))
                ++p_;
            if (d == p_ || p_ - d > 4)
                throw ParseError("bad numeral", s);
            return church(Church::Numeral, std::stoul(t_.substr(d, p_ - d)));
        }
        if (!ident_start(c))
            throw ParseError("unexpected '" + std::string(1, c) + "'", s);
        std::string w = word();
        if (w == "true")
            return church(Church::True);
        if (w == "false")
            return church(Church::False);
        if (w == "if")
            return church(Church::If);
        if (w == "succ")
            return church(Church::Succ);
        if (w == "pred")
            return church(Church::Pred);
        if (w == "iszero")
            return church(Church::IsZero);
        if (w.rfind("num_", 0) == 0 && w.size() > 4) {
            auto digits = w.substr(4);
            if (digits.size() > 4 || digits.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("bad num_m index", s);
            return church(Church::Num, std::stoul(digits));
        }
        return Term::var(w);
    }

    const std::string& t_;
    std::size_t p_ = 0;
};

} // namespace

Term parse_term(const std::string& text) { return Parser(text).top(); }

} // namespace bvd

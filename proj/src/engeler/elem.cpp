#include <bvd/engeler.hpp>

#include <algorithm>
#include <cctype>
#include <deque>
#include <shared_mutex>
#include <unordered_set>

namespace bvd {

namespace detail {
struct ENode {
    uint32_t id;
    unsigned rank;
    bool base;
    std::vector<EElem> children;
    const ENode* result;
    std::size_t hash;
};
} // namespace detail

using detail::ENode;

namespace {

struct Store {
    struct Hash {
        std::size_t operator()(const ENode* n) const { return n->hash; }
    };
    struct Eq {
        bool operator()(const ENode* a, const ENode* b) const
        {
            return a->base == b->base && a->result == b->result && a->children == b->children;
        }
    };
    std::shared_mutex mu;
    std::deque<ENode> nodes;
    std::unordered_set<const ENode*, Hash, Eq> index;

    Store() { nodes.push_back(ENode{0, 0, true, {}, nullptr, 0x5bd1e995}); }

    const ENode* intern(ENode n)
    {
        {
            std::shared_lock lk(mu);
            if (auto it = index.find(&n); it != index.end())
                return *it;
        }
        std::unique_lock lk(mu);
        if (auto it = index.find(&n); it != index.end())
            return *it;
        n.id = static_cast<uint32_t>(nodes.size());
        nodes.push_back(std::move(n));
        index.insert(&nodes.back());
        return &nodes.back();
    }
};

Store& store()
{
    static Store s;
    return s;
}

} // namespace

EElem::EElem() : n_(&store().nodes.front()) {}

EElem EElem::pair(std::vector<EElem> children, EElem result)
{
    children = make_set(std::move(children));
    ENode n{0, result.rank() + 1, false, std::move(children), result.n_, 0};
    std::size_t h = 0xcbf29ce484222325ull ^ (result.id() * 0x9e3779b97f4a7c15ull);
    for (auto& c : n.children) {
        n.rank = std::max(n.rank, c.rank() + 1);
        h = (h ^ c.id()) * 0x100000001b3ull;
    }
    n.hash = h;
    return EElem(store().intern(std::move(n)));
}

bool EElem::is_base() const { return n_->base; }
const std::vector<EElem>& EElem::children() const { return n_->children; }
EElem EElem::result() const
{
    if (n_->base)
        throw DomainError("base element has no result");
    return EElem(n_->result);
}
unsigned EElem::rank() const { return n_->rank; }
uint32_t EElem::id() const { return n_->id; }

std::strong_ordering EElem::operator<=>(const EElem& o) const
{
    if (n_ == o.n_)
        return std::strong_ordering::equal;
    if (auto c = n_->rank <=> o.n_->rank; c != 0)
        return c;
    if (n_->base != o.n_->base)
        return n_->base ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = n_->children.size() <=> o.n_->children.size(); c != 0)
        return c;
    for (std::size_t i = 0; i < n_->children.size(); ++i)
        if (auto c = n_->children[i] <=> o.n_->children[i]; c != 0)
            return c;
    return EElem(n_->result) <=> EElem(o.n_->result);
}

std::string EElem::to_string() const
{
    if (is_base())
        return "*";
    std::string s = "([";
    for (std::size_t i = 0; i < children().size(); ++i) {
        if (i)
            s += ",";
        s += children()[i].to_string();
    }
    return s + "]," + result().to_string() + ")";
}

namespace {

struct ElemParser {
    const std::string& t;
    std::size_t p = 0;

    void ws()
    {
        while (p < t.size() && std::isspace(static_cast<unsigned char>(t[p])))
            ++p;
    }
    void expect(char c)
    {
        ws();
        if (p >= t.size() || t[p] != c)
            throw ParseError(std::string("expected '") + c + "'", p);
        ++p;
    }
    bool accept(char c)
    {
        ws();
        if (p < t.size() && t[p] == c) {
            ++p;
            return true;
        }
        return false;
    }
    EElem elem()
    {
        if (accept('*'))
            return EElem::base();
        expect('(');
        expect('[');
        std::vector<EElem> kids;
        if (!accept(']')) {
            do
                kids.push_back(elem());
            while (accept(','));
            expect(']');
        }
        expect(',');
        EElem r = elem();
        expect(')');
        return EElem::pair(std::move(kids), r);
    }
    void done()
    {
        ws();
        if (p != t.size())
            throw ParseError("trailing input", p);
    }
};

} // namespace

EElem EElem::parse(const std::string& text)
{
    ElemParser ps{text};
    EElem e = ps.elem();
    ps.done();
    return e;
}

ElemSet parse_set(const std::string& text)
{
    ElemParser ps{text};
    ps.expect('{');
    std::vector<EElem> v;
    if (!ps.accept('}')) {
        do
            v.push_back(ps.elem());
        while (ps.accept(','));
        ps.expect('}');
    }
    ps.done();
    return make_set(std::move(v));
}

ElemSet make_set(std::vector<EElem> elems)
{
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return elems;
}

bool contains(const ElemSet& s, const EElem& e) { return std::binary_search(s.begin(), s.end(), e); }

bool subset(const ElemSet& a, const ElemSet& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ElemSet set_union(const ElemSet& a, const ElemSet& b)
{
    ElemSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string to_string(const ElemSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ", ";
        out += s[i].to_string();
    }
    return out + "}";
}

ElemSet apply_fin(const ElemSet& F, const ElemSet& X)
{
    std::vector<EElem> out;
    for (auto& p : F)
        if (!p.is_base() && subset(p.children(), X))
            out.push_back(p.result());
    return make_set(std::move(out));
}

ElemSet eval_step(const std::vector<Step>& f, const ElemSet& X)
{
    ElemSet out;
    for (auto& s : f)
        if (subset(s.domain, X))
            out = set_union(out, s.image);
    return out;
}

ElemSet lam_step(const std::vector<Step>& f)
{
    // closure of the step domains under binary union
    std::vector<ElemSet> doms;
    for (auto& s : f)
        if (std::find(doms.begin(), doms.end(), s.domain) == doms.end())
            doms.push_back(s.domain);
    for (std::size_t i = 0; i < doms.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            ElemSet u = set_union(doms[i], doms[j]);
            if (std::find(doms.begin(), doms.end(), u) == doms.end())
                doms.push_back(u);
        }
    std::vector<EElem> out;
    for (auto& K : doms)
        for (auto& q : eval_step(f, K))
            out.push_back(EElem::pair(K, q));
    return make_set(std::move(out));
}

bool way_below(const ElemSet& S, const ElemSet& T) { return subset(S, T); }

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

} // namespace bvd

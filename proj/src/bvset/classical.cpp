#include <bvd/classical.hpp>
#include <bvd/errors.hpp>

#include <algorithm>
#include <cctype>

namespace bvd {

HfSet::HfSet(std::vector<HfSet> elems) : elems_(std::move(elems))
{
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    for (auto& e : elems_)
        rank_ = std::max(rank_, e.rank_ + 1);
}

std::strong_ordering HfSet::operator<=>(const HfSet& o) const
{
    if (auto c = rank_ <=> o.rank_; c != 0)
        return c;
    if (auto c = elems_.size() <=> o.elems_.size(); c != 0)
        return c;
    for (std::size_t i = 0; i < elems_.size(); ++i)
        if (auto c = elems_[i] <=> o.elems_[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

bool HfSet::contains(const HfSet& x) const
{
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool HfSet::subset_of(const HfSet& o) const
{
    return std::includes(o.elems_.begin(), o.elems_.end(), elems_.begin(), elems_.end());
}

HfSet HfSet::with(const HfSet& x) const
{
    auto v = elems_;
    v.push_back(x);
    return HfSet(std::move(v));
}

HfSet HfSet::power_set() const
{
    if (elems_.size() > 16)
        throw BudgetError("power set of a set with more than 16 elements");
    std::vector<HfSet> subsets;
    for (unsigned long m = 0; m < (1ul << elems_.size()); ++m) {
        std::vector<HfSet> s;
        for (std::size_t i = 0; i < elems_.size(); ++i)
            if (m >> i & 1)
                s.push_back(elems_[i]);
        subsets.emplace_back(std::move(s));
    }
    return HfSet(std::move(subsets));
}

HfSet HfSet::von_neumann(unsigned n)
{
    HfSet s;
    for (unsigned i = 0; i < n; ++i)
        s = s.with(s);
    return s;
}

HfSet HfSet::ackermann(unsigned long n)
{
    std::vector<HfSet> v;
    for (unsigned i = 0; i < 64; ++i)
        if (n >> i & 1)
            v.push_back(ackermann(i));
    return HfSet(std::move(v));
}

std::vector<HfSet> HfSet::all_of_rank_below(unsigned r)
{
    if (r > 4)
        throw BudgetError("rank bound too large to enumerate");
    // V_r has 2^^r elements; ackermann coding enumerates it
    unsigned long count = 0;
    for (unsigned i = 0; i < r; ++i)
        count = 1ul << count;
    std::vector<HfSet> out;
    for (unsigned long n = 0; n < count; ++n)
        out.push_back(ackermann(n));
    std::sort(out.begin(), out.end());
    return out;
}

std::string HfSet::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i)
            s += ",";
        s += elems_[i].to_string();
    }
    return s + "}";
}

namespace {

struct HfParser {
    const std::string& t;
    std::size_t p = 0;

    void ws()
    {
        while (p < t.size() && std::isspace(static_cast<unsigned char>(t[p])))
            ++p;
    }
    HfSet set()
    {
        ws();
        if (p >= t.size() || t[p] != '{')
            throw ParseError("expected '{'", p);
        ++p;
        std::vector<HfSet> v;
        ws();
        if (p < t.size() && t[p] == '}') {
            ++p;
            return HfSet();
        }
        for (;;) {
            v.push_back(set());
            ws();
            if (p < t.size() && t[p] == ',') {
                ++p;
                continue;
            }
            if (p < t.size() && t[p] == '}') {
                ++p;
                return HfSet(std::move(v));
            }
            throw ParseError("expected ',' or '}'", p);
        }
    }
};

} // namespace

HfSet HfSet::parse(const std::string& text)
{
    HfParser ps{text};
    HfSet s = ps.set();
    ps.ws();
    if (ps.p != text.size())
        throw ParseError("trailing input", ps.p);
    return s;
}

} // namespace bvd

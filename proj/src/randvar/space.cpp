#include <bvd/randvar.hpp>

#include <set>
#include <sstream>

namespace bvd {

SampleSpace::SampleSpace(unsigned k, unsigned max_k)
    : k_(k), alg_(Algebra::uniform(k >= 1 && k <= max_k ? std::size_t{1} << (2 * k) : 1))
{
    if (k < 1 || k > max_k)
        throw DomainError("bits must be in 1.." + std::to_string(max_k) + ", got " +
                          std::to_string(k));
}

bool SampleSpace::bit(std::size_t atom, int side, unsigned n) const
{
    if ((side != 1 && side != 2) || n >= k_)
        throw DomainError("no coin " + std::to_string(side) + "," + std::to_string(n));
    return (atom >> (side == 1 ? n : k_ + n)) & 1u;
}

AlgebraElement SampleSpace::event(int side, unsigned n, bool b) const
{
    if ((side != 1 && side != 2) || n >= k_)
        throw DomainError("no coin " + std::to_string(side) + "," + std::to_string(n));
    unsigned pos = side == 1 ? n : k_ + n;
    std::size_t size = atom_count();
    AtomSet r(size);
    if (size < 64) {
        for (std::size_t x = 0; x < size; ++x)
            r.set(x, ((x >> pos) & 1u) == b);
        return alg_.element(std::move(r));
    }
    uint64_t* w = r.words();
    uint64_t low = 0;
    if (pos < 6)
        for (unsigned j = 0; j < 64; ++j)
            if ((j >> pos) & 1u)
                low |= uint64_t{1} << j;
    for (std::size_t i = 0; i < r.word_count(); ++i) {
        uint64_t v = pos < 6 ? low : (((i >> (pos - 6)) & 1u) ? ~uint64_t{0} : 0);
        w[i] = b ? v : ~v;
    }
    return alg_.element(std::move(r));
}

std::string SampleSpace::prefix(std::size_t atom, int side) const
{
    std::string s;
    for (unsigned n = 0; n < k_; ++n)
        s += bit(atom, side, n) ? '1' : '0';
    return s;
}

RandomSubset<EElem> rv_apply(const RandomSubset<EElem>& a, const RandomSubset<EElem>& b)
{
    if (a.space != b.space || !a.space)
        throw DomainError("random subsets over different spaces");
    RandomSubset<EElem> r{a.space, {}};
    r.values.reserve(a.values.size());
    for (std::size_t x = 0; x < a.values.size(); ++x)
        r.values.push_back(apply_fin(a.values[x], b.values[x]));
    return r;
}

AValuedSubset<EElem> avs_apply(const AValuedSubset<EElem>& f, const AValuedSubset<EElem>& x,
                               const Algebra& alg)
{
    AValuedSubset<EElem> out;
    AtomSet none(alg.atom_count());
    for (auto& [e, fa] : f) {
        if (e.is_base())
            continue;
        AtomSet v = fa;
        for (auto& k : e.children()) {
            auto it = x.find(k);
            v &= it == x.end() ? none : it->second;
        }
        if (v.none())
            continue;
        auto [it, fresh] = out.try_emplace(e.result(), v);
        if (!fresh)
            it->second |= v;
    }
    return out;
}

AlgebraElement random_set_value(const SampleSpace& space, int side, unsigned n)
{
    return space.event(side, n, true);
}

RandomSets random_sets(const SampleSpace& space)
{
    RandomSets r;
    for (unsigned n = 0; n < space.bits(); ++n) {
        r.s1.emplace(n, space.event(1, n, true).atoms());
        r.s2.emplace(n, space.event(2, n, true).atoms());
    }
    return r;
}

static void check_map(const std::vector<unsigned>& f, const SampleSpace& space)
{
    if (f.size() != space.bits())
        throw DomainError("map must be defined on all " + std::to_string(space.bits()) +
                          " indices, got " + std::to_string(f.size()));
    for (std::size_t n = 0; n < f.size(); ++n)
        if (f[n] >= space.bits())
            throw DomainError("f(" + std::to_string(n) + ") = " + std::to_string(f[n]) +
                              " is outside the window");
}

static AlgebraElement agreement_on(const std::vector<unsigned>& f,
                                   const std::vector<unsigned>& window, const SampleSpace& space,
                                   int direction)
{
    if (direction != 1 && direction != 2)
        throw DomainError("direction must be 1 or 2");
    int here = direction == 1 ? 1 : 2, there = direction == 1 ? 2 : 1;
    AlgebraElement r = space.algebra().top();
    for (unsigned n : window)
        r = r & iff(space.event(here, n, true), space.event(there, f[n], true));
    return r;
}

AlgebraElement agreement_event(const std::vector<unsigned>& f, const SampleSpace& space,
                               int direction)
{
    check_map(f, space);
    std::vector<unsigned> all(f.size());
    for (unsigned n = 0; n < all.size(); ++n)
        all[n] = n;
    return agreement_on(f, all, space, direction);
}

Rational agreement_measure(const std::vector<unsigned>& f, const std::vector<unsigned>& injective,
                           const SampleSpace& space, int direction)
{
    check_map(f, space);
    std::set<unsigned> seen_n, seen_f;
    for (unsigned n : injective) {
        if (n >= f.size())
            throw DomainError("index " + std::to_string(n) + " is outside the window");
        if (!seen_n.insert(n).second)
            throw DomainError("index " + std::to_string(n) + " repeated");
        if (!seen_f.insert(f[n]).second)
            throw DomainError("f is not injective on the given indices");
    }
    Rational full = agreement_event(f, space, direction).measure();
    Rational part = agreement_on(f, injective, space, direction).measure();
    Rational closed(1);
    for (std::size_t i = 0; i < injective.size(); ++i)
        closed /= 2;
    if (part != closed || full > part)
        throw std::logic_error("agreement measure disagrees with the closed form");
    return full;
}

std::vector<unsigned> parse_map(const std::string& text, unsigned k)
{
    std::vector<std::optional<unsigned>> f(k);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected n:m in map", 0);
        unsigned long n, m;
        try {
            std::size_t p1, p2;
            n = std::stoul(item.substr(0, colon), &p1);
            m = std::stoul(item.substr(colon + 1), &p2);
            if (p1 != colon || colon + 1 + p2 != item.size())
                throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("bad map entry '" + item + "'", 0);
        }
        if (n >= k)
            throw DomainError("map index " + std::to_string(n) + " is outside the window");
        if (f[n])
            throw DomainError("map index " + std::to_string(n) + " given twice");
        f[n] = static_cast<unsigned>(m);
    }
    std::vector<unsigned> out;
    for (unsigned n = 0; n < k; ++n) {
        if (!f[n])
            throw DomainError("map is missing index " + std::to_string(n));
        out.push_back(*f[n]);
    }
    return out;
}

std::vector<unsigned> injective_window(const std::vector<unsigned>& f)
{
    std::set<unsigned> seen;
    std::vector<unsigned> out;
    for (unsigned n = 0; n < f.size(); ++n)
        if (seen.insert(f[n]).second)
            out.push_back(n);
    return out;
}

APoset l0_poset(const SampleSpace& space, const std::vector<RandomSubset<unsigned>>& carrier)
{
    APoset p{space.algebra(), {}, {}};
    for (std::size_t i = 0; i < carrier.size(); ++i)
        p.labels.push_back("s" + std::to_string(i));
    for (auto& a : carrier)
        for (auto& b : carrier)
            p.leq.push_back(rv_order_event(OrderKind::Leq, a, b).atoms());
    return p;
}

static std::size_t l0_count(const SampleSpace& space, unsigned universe)
{
    if (universe > 4)
        throw DomainError("universe too large for an explicit setoid");
    std::size_t per = std::size_t{1} << universe, total = 1;
    for (std::size_t x = 0; x < space.atom_count(); ++x) {
        total *= per;
        if (total > 4096)
            throw DomainError("explicit L0 setoid would exceed 4096 elements");
    }
    return total;
}

RandomSubset<unsigned> l0_element(const SampleSpace& space, unsigned universe, std::size_t index)
{
    std::size_t per = std::size_t{1} << universe;
    RandomSubset<unsigned> a{&space, std::vector<std::vector<unsigned>>(space.atom_count())};
    for (std::size_t x = 0; x < space.atom_count(); ++x) {
        std::size_t mask = index % per;
        index /= per;
        for (unsigned y = 0; y < universe; ++y)
            if ((mask >> y) & 1u)
                a.values[x].push_back(y);
    }
    return a;
}

Setoid l0_setoid(const SampleSpace& space, unsigned universe)
{
    std::size_t total = l0_count(space, universe);
    std::size_t per = std::size_t{1} << universe;
    std::size_t atoms = space.atom_count();
    auto digit = [=](std::size_t index, std::size_t x) {
        for (std::size_t i = 0; i < x; ++i)
            index /= per;
        return index % per;
    };
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < total; ++i) {
        std::string s = "<";
        for (std::size_t x = 0; x < atoms; ++x) {
            if (x)
                s += '|';
            std::size_t m = digit(i, x);
            s += '{';
            bool first = true;
            for (unsigned y = 0; y < universe; ++y)
                if ((m >> y) & 1u) {
                    s += (first ? "" : ",") + std::to_string(y);
                    first = false;
                }
            s += '}';
        }
        labels.push_back(s + ">");
    }
    auto gluer = [=](std::span<const GlueItem> fam) {
        std::size_t out = 0, scale = 1;
        for (std::size_t x = 0; x < atoms; ++x, scale *= per)
            for (auto& g : fam)
                if (g.a.atoms().test(x)) {
                    out += digit(g.x, x) * scale;
                    break;
                }
        return out;
    };
    return Setoid::from_function(
        space.algebra(), std::move(labels),
        [=](std::size_t i, std::size_t j) {
            AtomSet r(atoms);
            for (std::size_t x = 0; x < atoms; ++x)
                r.set(x, digit(i, x) == digit(j, x));
            return r;
        },
        gluer);
}

} // namespace bvd

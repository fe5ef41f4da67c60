#include <bvd/randvar.hpp>

#include <json.hpp>

#include <random>

namespace bvd {

namespace {

struct Expr {
    std::string src;
    Term term;
};

Term app(Term f, Term a) { return Term::app(std::move(f), std::move(a)); }

std::string paren(const std::string& s)
{
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

constexpr std::size_t max_candidates = 50000;

} // namespace

std::vector<KleeneCandidateTerm> kleene_candidates(unsigned k, unsigned size)
{
    // by_size[s] holds the E and B expressions of size exactly s
    std::vector<std::vector<Expr>> es(size + 1), bs(size + 1);
    std::size_t total = 0;
    auto push = [&](std::vector<Expr>& v, Expr e) {
        if (++total > max_candidates)
            throw DomainError("more than " + std::to_string(max_candidates) +
                              " candidate terms; lower --size");
        v.push_back(std::move(e));
    };
    for (unsigned s = 1; s <= size; ++s) {
        if (s == 1) {
            push(es[1], {"m", Term::var("m")});
            for (unsigned c = 0; c < k; ++c)
                push(es[1], {"#" + std::to_string(c), church(Church::Numeral, c)});
            continue;
        }
        for (auto& e : es[s - 1]) {
            push(es[s], {"succ " + paren(e.src), app(church(Church::Succ), e.term)});
            push(es[s], {"pred " + paren(e.src), app(church(Church::Pred), e.term)});
        }
        for (auto& e : es[s - 1]) {
            push(bs[s], {"iszero " + paren(e.src), app(church(Church::IsZero), e.term)});
            for (unsigned j = 0; j < k; ++j)
                push(bs[s], {"num_" + std::to_string(j) + " " + paren(e.src),
                             app(church(Church::Num, j), e.term)});
        }
        for (unsigned sb = 2; sb + 2 < s; ++sb)
            for (unsigned s1 = 1; sb + s1 + 1 < s; ++s1) {
                unsigned s2 = s - 1 - sb - s1;
                for (auto& b : bs[sb])
                    for (auto& x : es[s1])
                        for (auto& y : es[s2])
                            push(es[s], {"if " + paren(b.src) + " " + paren(x.src) + " " +
                                             paren(y.src),
                                         app(app(app(church(Church::If), b.term), x.term),
                                             y.term)});
            }
    }
    std::vector<KleeneCandidateTerm> out;
    for (unsigned s = 1; s <= size; ++s)
        for (auto& e : es[s])
            out.push_back({"\\m. " + e.src, Term::lam("m", e.term)});
    return out;
}

Verdict oracle_bit(const SampleSpace& space, std::size_t atom, int side, unsigned n,
                   unsigned fuel, unsigned fuel_inner)
{
    std::map<unsigned, bool> window;
    for (unsigned m = 0; m < space.bits(); ++m)
        window[m] = space.bit(atom, side, m);
    auto d = oracle_set(window, fuel_inner);
    Term q = Term::app(Term::constant("d", d), church(Church::Numeral, n));
    bool b = space.bit(atom, side, n);
    auto& w = witnesses();
    Verdict hit = denote_member(q, {}, b ? w.t_star : w.f_star, fuel).verdict;
    Verdict miss = denote_member(q, {}, b ? w.f_star : w.t_star, fuel).verdict;
    if (hit == Verdict::No || miss == Verdict::Yes)
        return Verdict::No;
    return hit;
}

KleeneReport kleene_post(const SampleSpace& space, unsigned size, unsigned fuel,
                         unsigned long seed, unsigned long steps)
{
    if (fuel == 0 || steps == 0)
        throw DomainError("budgets must be positive");
    unsigned k = space.bits();
    KleeneReport r;
    r.k = k;
    r.seed = seed;
    r.size = size;
    r.fuel = fuel;
    r.witness_constants_version = witnesses().version;

    std::vector<std::pair<std::string, std::vector<unsigned>>> kept;
    for (auto& c : kleene_candidates(k, size)) {
        std::vector<unsigned> f;
        bool total = true;
        for (unsigned n = 0; n < k && total; ++n) {
            auto res = normalize(Term::app(c.term, church(Church::Numeral, n)), steps);
            if (!res.normal_form)
                throw DomainError("candidate " + c.source + " on #" + std::to_string(n) +
                                  " is inconclusive after " + std::to_string(steps) +
                                  " steps; raise the step budget");
            auto v = as_numeral(*res.normal_form);
            if (!v)
                total = false;
            else
                f.push_back(*v);
        }
        if (!total)
            continue;
        bool inside = std::all_of(f.begin(), f.end(), [&](unsigned v) { return v < k; });
        if (inside)
            kept.emplace_back(c.source, f);
        else
            r.discarded.push_back({c.source, f});
    }

    AlgebraElement all = space.algebra().bottom();
    std::vector<AlgebraElement> events;
    for (auto& [src, f] : kept)
        for (int dir = 1; dir <= 2; ++dir) {
            AlgebraElement ev = agreement_event(f, space, dir);
            Rational m = agreement_measure(f, injective_window(f), space, dir);
            if (m >= 1)
                throw std::logic_error("agreement measure " + to_string(m) + " for " + src);
            r.candidates.push_back({src, f, dir, m, 0});
            events.push_back(ev);
            all = all | ev;
        }
    r.union_measure = all.measure();
    if (r.union_measure >= 1)
        throw DomainError("no atom survives " + std::to_string(r.candidates.size()) +
                          " agreement events; raise --bits or lower --size");
    r.chosen_atom = (~all).atoms().first();
    r.t1_prefix = space.prefix(r.chosen_atom, 1);
    r.t2_prefix = space.prefix(r.chosen_atom, 2);

    for (auto& c : r.candidates) {
        int here = c.direction, there = 3 - c.direction;
        unsigned n = 0;
        while (n < k &&
               space.bit(r.chosen_atom, here, n) == space.bit(r.chosen_atom, there, c.induced_f[n]))
            ++n;
        if (n == k)
            throw std::logic_error("surviving atom agrees with " + c.term);
        c.disagreement_index = n;
    }

    // witness tests on the chosen atom and a few seeded atoms
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> atoms{r.chosen_atom};
    std::uniform_int_distribution<std::size_t> pick(0, space.atom_count() - 1);
    for (int i = 0; i < 4; ++i)
        atoms.push_back(pick(rng));
    unsigned inner = witnesses().oracle_fuel_inner;
    for (std::size_t x : atoms)
        for (int side = 1; side <= 2; ++side)
            for (unsigned n = 0; n < k; ++n) {
                Verdict v = oracle_bit(space, x, side, n, fuel, inner);
                if (v == Verdict::Unknown)
                    throw DomainError("oracle witness test inconclusive at fuel " +
                                      std::to_string(fuel) + "; raise --fuel");
                if (v == Verdict::No)
                    throw std::logic_error("oracle witness test contradicts atom " +
                                           std::to_string(x));
            }
    r.spot_checked_atoms = atoms;
    return r;
}

std::string KleeneReport::to_json() const
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["k"] = k;
    j["seed"] = seed;
    j["size"] = size;
    auto cands = ordered_json::array();
    for (auto& c : candidates)
        cands.push_back({{"term", c.term},
                         {"induced_f", c.induced_f},
                         {"direction", c.direction},
                         {"measure", to_string(c.measure)},
                         {"measure_num", c.measure.get_num().get_si()},
                         {"measure_den", c.measure.get_den().get_si()},
                         {"disagreement_index", c.disagreement_index}});
    j["candidates"] = cands;
    auto disc = ordered_json::array();
    for (auto& d : discarded)
        disc.push_back({{"term", d.term}, {"induced_f", d.induced_f}});
    j["discarded"] = disc;
    j["union_measure"] = to_string(union_measure);
    j["chosen_atom"] = chosen_atom;
    j["T1_prefix"] = t1_prefix;
    j["T2_prefix"] = t2_prefix;
    j["fuel"] = fuel;
    j["spot_checked_atoms"] = spot_checked_atoms;
    j["witness_constants_version"] = witness_constants_version;
    j["note"] = "finite bit window; candidates come from a size-bounded term grammar";
    return j.dump(2);
}

} // namespace bvd

#include <bvd/engeler.hpp>

#include "witness_data.hpp"

#include <json.hpp>

namespace bvd {

namespace {

using json = nlohmann::ordered_json;

const char* const corpus_terms[] = {"#0", "#1", "#2", "#3", "true", "false", "\\x. x", "\\x. \\y. x"};

std::vector<EElem> rank_two_elements()
{
    EElem b = EElem::base();
    std::vector<EElem> r1{b, EElem::pair({}, b), EElem::pair({b}, b)};
    std::vector<EElem> all = r1;
    for (unsigned m = 0; m < 8; ++m) {
        std::vector<EElem> k;
        for (unsigned i = 0; i < 3; ++i)
            if (m >> i & 1)
                k.push_back(r1[i]);
        for (auto& q : r1)
            all.push_back(EElem::pair(k, q));
    }
    return make_set(std::move(all));
}

Verdict query(const Term& m, const EElem& e, unsigned fuel)
{
    return denote_member(m, Valuation(), e, fuel).verdict;
}

// least fuel at which the verdict is no longer Unknown, or 0 past the cap
unsigned settle_fuel(const Term& m, const EElem& e, unsigned cap)
{
    if (query(m, e, cap) == Verdict::Unknown)
        return 0;
    unsigned lo = 1, hi = cap;
    while (lo < hi) {
        unsigned mid = (lo + hi) / 2;
        if (query(m, e, mid) == Verdict::Unknown)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

Term numeral_query(unsigned m, unsigned n)
{
    return Term::app(church(Church::Num, m), church(Church::Numeral, n));
}

} // namespace

WitnessConstants compute_witnesses(int version)
{
    WitnessConstants w;
    w.version = version;
    w.scan_fuel = 8;
    Term t = church(Church::True), f = church(Church::False);
    bool have_t = false, have_f = false;
    for (auto& e : rank_two_elements()) {
        Verdict in_t = query(t, e, w.scan_fuel), in_f = query(f, e, w.scan_fuel);
        if (!have_t && in_t == Verdict::Yes && in_f == Verdict::No) {
            w.t_star = e;
            have_t = true;
        }
        if (!have_f && in_f == Verdict::Yes && in_t == Verdict::No) {
            w.f_star = e;
            have_f = true;
        }
    }
    if (!have_t || !have_f)
        throw DomainError("no rank-2 witnesses separate true and false");

    // chain a_0 = *, a_{i+1} = ([a_i],*); #n sends {a_0} to {a_n} through the steps ([a_i],a_{i+1})
    std::vector<EElem> chain{EElem::base()};
    for (unsigned i = 0; i < 6; ++i)
        chain.push_back(EElem::pair({chain.back()}, EElem::base()));
    for (unsigned n = 0; n <= 5; ++n) {
        std::vector<EElem> steps;
        for (unsigned i = 0; i < n; ++i)
            steps.push_back(EElem::pair({chain[i]}, chain[i + 1]));
        EElem wn = EElem::pair(steps, EElem::pair({chain[0]}, chain[n]));
        w.numeral_fingerprints.push_back(wn);
        for (unsigned m = 0; m <= 5; ++m) {
            unsigned s = settle_fuel(church(Church::Numeral, m), wn, 64);
            if (s == 0)
                throw DomainError("fingerprint query did not settle");
            Verdict v = query(church(Church::Numeral, m), wn, s);
            if ((v == Verdict::Yes) != (m == n))
                throw DomainError("fingerprint of #" + std::to_string(n) + " is not discriminating");
            w.fingerprint_fuel = std::max(w.fingerprint_fuel, s);
        }
    }

    for (unsigned m = 0; m <= 5; ++m)
        for (unsigned n = 0; n <= 5; ++n) {
            Term q = numeral_query(m, n);
            for (const EElem& e : {w.t_star, w.f_star}) {
                unsigned s = settle_fuel(q, e, 4096);
                if (s == 0)
                    throw DomainError("numeral query did not settle within 4096");
                w.numeral_fuel = std::max(w.numeral_fuel, s);
            }
        }
    w.oracle_fuel_inner = w.numeral_fuel;

    // d . #n for alternating windows over 0..5
    for (int parity = 0; parity < 2; ++parity) {
        std::map<unsigned, bool> window;
        for (unsigned n = 0; n <= 5; ++n)
            window[n] = (n + parity) % 2 == 0;
        auto d = SemanticSet::oracle(window, w.oracle_fuel_inner, w.t_star);
        for (unsigned n = 0; n <= 5; ++n) {
            Term q = Term::app(Term::constant("d", d), church(Church::Numeral, n));
            for (const EElem& e : {w.t_star, w.f_star}) {
                unsigned s = settle_fuel(q, e, 4096);
                if (s == 0)
                    throw DomainError("oracle query did not settle within 4096");
                w.oracle_fuel = std::max(w.oracle_fuel, s);
            }
        }
    }

    for (const char* src : corpus_terms) {
        Term m = parse_term(src);
        ElemSet all = denote_enumerate(m, Valuation(), 6);
        for (std::size_t i = 0; i < all.size() && i < 3; ++i) {
            unsigned fuel = 1;
            while (query(m, all[i], fuel) != Verdict::Yes)
                ++fuel;
            w.corpus.push_back({src, all[i], fuel});
        }
    }
    return w;
}

std::string witnesses_to_json(const WitnessConstants& w)
{
    json j;
    j["version"] = w.version;
    j["enumeration_pool"] = "subsets of size <= 2 of {*, ([],*), ([*],*)}";
    j["t_star"] = w.t_star.to_string();
    j["f_star"] = w.f_star.to_string();
    j["scan_fuel"] = w.scan_fuel;
    json fp = json::array();
    for (std::size_t n = 0; n < w.numeral_fingerprints.size(); ++n)
        fp.push_back({{"n", n}, {"elem", w.numeral_fingerprints[n].to_string()}});
    j["numeral_fingerprints"] = fp;
    j["fingerprint_fuel"] = w.fingerprint_fuel;
    j["numeral_fuel"] = w.numeral_fuel;
    j["oracle_fuel_inner"] = w.oracle_fuel_inner;
    j["oracle_fuel"] = w.oracle_fuel;
    json corpus = json::array();
    for (auto& c : w.corpus)
        corpus.push_back({{"term", c.term}, {"elem", c.elem.to_string()}, {"fuel", c.fuel}});
    j["corpus"] = corpus;
    return j.dump(2) + "\n";
}

WitnessConstants witnesses_from_json(const std::string& text)
{
    WitnessConstants w;
    try {
        json j = json::parse(text);
        w.version = j.at("version").get<int>();
        if (w.version == 0)
            throw DomainError("witness constants have not been generated");
        w.t_star = EElem::parse(j.at("t_star").get<std::string>());
        w.f_star = EElem::parse(j.at("f_star").get<std::string>());
        w.scan_fuel = j.at("scan_fuel").get<unsigned>();
        for (auto& fp : j.at("numeral_fingerprints"))
            w.numeral_fingerprints.push_back(EElem::parse(fp.at("elem").get<std::string>()));
        w.fingerprint_fuel = j.at("fingerprint_fuel").get<unsigned>();
        w.numeral_fuel = j.at("numeral_fuel").get<unsigned>();
        w.oracle_fuel_inner = j.at("oracle_fuel_inner").get<unsigned>();
        w.oracle_fuel = j.at("oracle_fuel").get<unsigned>();
        for (auto& c : j.at("corpus"))
            w.corpus.push_back({c.at("term").get<std::string>(),
                                EElem::parse(c.at("elem").get<std::string>()),
                                c.at("fuel").get<unsigned>()});
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad witness constants: ") + e.what());
    }
    return w;
}

const WitnessConstants& witnesses()
{
    static const WitnessConstants w = witnesses_from_json(generated::witness_json);
    return w;
}

} // namespace bvd

#include <bvd/engeler.hpp>

#include <doctest.h>

#include <random>

using namespace bvd;

namespace {

EElem E(const std::string& s) { return EElem::parse(s); }
ElemSet S(const std::string& s) { return parse_set(s); }
Term P(const std::string& s) { return parse_term(s); }

// direct reading of the application formula
ElemSet naive_apply(const ElemSet& F, const ElemSet& X)
{
    std::vector<EElem> out;
    for (auto& f : F) {
        if (f.is_base())
            continue;
        bool inside = true;
        for (auto& k : f.children())
            inside = inside && std::find(X.begin(), X.end(), k) != X.end();
        if (inside)
            out.push_back(f.result());
    }
    return make_set(out);
}

std::vector<EElem> pool()
{
    return {E("*"), E("([],*)"), E("([*],*)"), E("([],([],*))"), E("([([],*)],*)"),
            E("([*,([],*)],*)")};
}

ElemSet random_subset(std::mt19937& g, const std::vector<EElem>& from, unsigned max)
{
    std::vector<EElem> v;
    unsigned n = g() % (max + 1);
    for (unsigned i = 0; i < n; ++i)
        v.push_back(from[g() % from.size()]);
    return make_set(v);
}

} // namespace

TEST_CASE("elements")
{
    EElem b = EElem::base();
    CHECK(b.is_base());
    CHECK(b.rank() == 0);
    EElem p = EElem::pair({b, b}, b);
    CHECK(p.children().size() == 1);
    CHECK(p.rank() == 1);
    CHECK(p == E("([*],*)"));
    CHECK(EElem::pair({E("([],*)"), b}, b) == EElem::pair({b, E("([],*)")}, b));
    CHECK(E(p.to_string()) == p);
    CHECK(b < p);
    CHECK_THROWS_AS(E("(*"), ParseError);
    CHECK(to_string(S("{*, ([*],*)}")) == "{*, ([*],*)}");
}

TEST_CASE("apply_fin")
{
    CHECK(apply_fin({}, S("{*}")).empty());
    CHECK(apply_fin(S("{([*],*)}"), S("{*}")) == S("{*}"));
    CHECK(apply_fin(S("{([*],*)}"), {}).empty());
    CHECK(apply_fin(S("{([],([],*))}"), {}) == S("{([],*)}"));

    std::mt19937 g(4);
    auto from = pool();
    for (int i = 0; i < 500; ++i) {
        ElemSet F = random_subset(g, from, 5), X1 = random_subset(g, from, 3),
                X2 = random_subset(g, from, 3);
        CHECK(apply_fin(F, X1) == naive_apply(F, X1));
        ElemSet X12 = set_union(X1, X2);
        CHECK(subset(set_union(apply_fin(F, X1), apply_fin(F, X2)), apply_fin(F, X12)));
        CHECK(subset(apply_fin(F, X1), apply_fin(set_union(F, X2), X12)));
    }
}

TEST_CASE("lam_step and retraction")
{
    CHECK(lam_step({}).empty());
    CHECK(contains(lam_step({{S("{*}"), S("{*}")}}), E("([*],*)")));

    std::mt19937 g(9);
    auto from = pool();
    for (int i = 0; i < 200; ++i) {
        std::vector<Step> f;
        unsigned n = 1 + g() % 3;
        for (unsigned j = 0; j < n; ++j)
            f.push_back({random_subset(g, from, 2), random_subset(g, from, 2)});
        ElemSet F = lam_step(f);
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            ElemSet X;
            for (unsigned j = 0; j < n; ++j)
                if ((mask >> j) & 1u)
                    X = set_union(X, f[j].domain);
            CHECK(apply_fin(F, X) == eval_step(f, X));
        }
    }
}

TEST_CASE("way below agrees with directed covers")
{
    for (unsigned ny = 0; ny <= 4; ++ny) {
        unsigned subsets = 1u << ny;
        std::vector<uint32_t> below_all(subsets, (1u << subsets) - 1);
        // a family is a bitmask over the subsets of Y
        for (uint64_t fam = 1; fam < (uint64_t{1} << subsets); ++fam) {
            bool directed = true;
            unsigned sup = 0;
            for (unsigned a = 0; a < subsets && directed; ++a) {
                if (!((fam >> a) & 1u))
                    continue;
                sup |= a;
                for (unsigned b = 0; b < subsets && directed; ++b) {
                    if (!((fam >> b) & 1u))
                        continue;
                    bool bound = false;
                    for (unsigned c = 0; c < subsets && !bound; ++c)
                        bound = ((fam >> c) & 1u) && (a & c) == a && (b & c) == b;
                    directed = bound;
                }
            }
            if (!directed)
                continue;
            uint32_t ok = 0;
            for (unsigned s = 0; s < subsets; ++s)
                for (unsigned d = 0; d < subsets; ++d)
                    if (((fam >> d) & 1u) && (s & d) == s)
                        ok |= 1u << s;
            for (unsigned t = 0; t < subsets; ++t)
                if ((sup & t) == t)
                    below_all[t] &= ok;
        }
        std::vector<EElem> ys{E("*"), E("([],*)"), E("([*],*)"), E("([],([],*))")};
        auto as_set = [&](unsigned m) {
            std::vector<EElem> v;
            for (unsigned i = 0; i < ny; ++i)
                if ((m >> i) & 1u)
                    v.push_back(ys[i]);
            return make_set(v);
        };
        for (unsigned s = 0; s < subsets; ++s)
            for (unsigned t = 0; t < subsets; ++t)
                CHECK(way_below(as_set(s), as_set(t)) == bool((below_all[t] >> s) & 1u));
    }
    CHECK(way_below({}, S("{*}")));
    CHECK(way_below(S("{*}"), S("{*, ([],*)}")));
    CHECK(!way_below(S("{*}"), S("{([],*)}")));
}

TEST_CASE("denote_member")
{
    Valuation rho;
    auto r = denote_member(P("\\x. x"), rho, E("([*],*)"), 2);
    CHECK(r.verdict == Verdict::Yes);
    r = denote_member(P("\\x. \\y. x"), rho, E("([*],([],*))"), 3, true);
    CHECK(r.verdict == Verdict::Yes);
    CHECK(!r.trace.empty());
    CHECK(denote_member(P("\\x. x"), rho, E("([*],*)"), 0).verdict == Verdict::Unknown);
    CHECK(denote_member(P("#2"), rho, E("([*],*)"), 0).verdict == Verdict::Unknown);
    CHECK_THROWS_AS(denote_member(P("x"), rho, E("*"), 3), DomainError);
    // base is never in a lambda
    CHECK(denote_member(P("\\x. x"), rho, E("*"), 3).verdict != Verdict::Yes);
    CHECK(denote_member(P("\\x. x"), rho, E("([],*)"), 5).verdict != Verdict::Yes);

    Valuation env = rho.bind("v", SemanticSet::finite(S("{*, ([*],*)}")));
    CHECK(denote_member(P("v"), env, E("*"), 1).verdict == Verdict::Yes);
    CHECK(denote_member(P("v v"), env, E("*"), 4).verdict == Verdict::Yes);
    CHECK(denote_member(P("(\\x. x) v"), env, E("([*],*)"), 4).verdict == Verdict::Yes);

    auto& w = witnesses();
    CHECK(denote_member(P("true"), rho, w.t_star, w.scan_fuel).verdict == Verdict::Yes);
    CHECK(denote_member(P("false"), rho, w.f_star, w.scan_fuel).verdict == Verdict::Yes);
    CHECK(denote_member(P("true"), rho, w.f_star, w.scan_fuel).verdict != Verdict::Yes);
    CHECK(denote_member(P("false"), rho, w.t_star, w.scan_fuel).verdict != Verdict::Yes);
}

TEST_CASE("denote_member is monotone in fuel")
{
    Valuation rho;
    std::vector<EElem> elems{E("*"), E("([*],*)"), E("([],([*],*))"), E("([*],([],*))"),
                             E("([],([],*))"), E("([([*],*)],([*],*))")};
    for (const char* t : {"\\x. x", "\\x. \\y. x", "\\x. \\y. y", "#1", "(\\z. z) #0", "succ #0"})
        for (auto& e : elems) {
            bool yes = false;
            for (unsigned fuel = 0; fuel <= 8; ++fuel) {
                bool now = denote_member(P(t), rho, e, fuel).verdict == Verdict::Yes;
                CHECK((!yes || now));
                yes = now;
            }
        }
}

TEST_CASE("denote_enumerate")
{
    Valuation rho;
    ElemSet s = S("{*, ([*],*), ([],([],*))}");
    Term c = Term::constant("c", SemanticSet::finite(s));
    CHECK(denote_enumerate(c, rho, 1) == s);
    CHECK(denote_enumerate(c, rho, 5) == s);

    for (const char* t : {"\\x. x", "#0", "#1", "true", "\\x. \\y. x", "(\\z. z) #0"}) {
        ElemSet prev;
        for (unsigned fuel = 0; fuel <= 5; ++fuel) {
            ElemSet cur = denote_enumerate(P(t), rho, fuel);
            CHECK(subset(prev, cur));
            for (auto& e : cur)
                CHECK(denote_member(P(t), rho, e, fuel + 4).verdict == Verdict::Yes);
            prev = cur;
        }
    }

    ElemSet zero = denote_enumerate(P("#0"), rho, 6), one = denote_enumerate(P("#1"), rho, 6);
    CHECK(!zero.empty());
    CHECK(!one.empty());
    CHECK(!subset(zero, one));
    CHECK(!subset(one, zero));
    CHECK(!enumeration_domains().empty());
}

TEST_CASE("numeral oracles")
{
    auto& w = witnesses();
    Valuation rho;
    auto den = [&](std::map<unsigned, bool> chi, unsigned n, const EElem& e) {
        Term d = Term::constant("d", oracle_set(chi, w.oracle_fuel_inner));
        return denote_member(Term::app(d, church(Church::Numeral, n)), rho, e, w.oracle_fuel).verdict;
    };
    CHECK(den({{0, true}}, 0, w.t_star) == Verdict::Yes);
    CHECK(den({{0, true}, {1, false}}, 1, w.f_star) == Verdict::Yes);
    CHECK(den({{0, true}, {1, false}}, 1, w.t_star) != Verdict::Yes);
    CHECK(den({{0, true}, {1, false}}, 0, w.f_star) != Verdict::Yes);
    auto empty = oracle_set({}, w.oracle_fuel_inner);
    for (unsigned fuel : {0u, 1u, 4u, 9u})
        CHECK(empty->enumerate(fuel).empty());
    CHECK(den({}, 0, w.t_star) != Verdict::Yes);
}

TEST_CASE("witness constants")
{
    auto& w = witnesses();
    CHECK(w.version >= 1);
    CHECK(w.t_star != w.f_star);
    CHECK(w.numeral_fingerprints.size() == 6);
    Valuation rho;
    for (std::size_t n = 0; n < w.numeral_fingerprints.size(); ++n)
        CHECK(denote_member(church(Church::Numeral, unsigned(n)), rho, w.numeral_fingerprints[n],
                            w.fingerprint_fuel)
                  .verdict == Verdict::Yes);
    for (auto& c : w.corpus) {
        CHECK(denote_member(P(c.term), rho, c.elem, c.fuel).verdict == Verdict::Yes);
        if (c.fuel > 0)
            CHECK(denote_member(P(c.term), rho, c.elem, c.fuel - 1).verdict != Verdict::Yes);
    }
    auto back = witnesses_from_json(witnesses_to_json(w));
    CHECK(back.t_star == w.t_star);
    CHECK(back.oracle_fuel == w.oracle_fuel);
    CHECK(back.corpus.size() == w.corpus.size());
}

#include <bvd/randvar.hpp>

#include "verify/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace bvd;

namespace {

Rational Q(long n, long d) { return Rational(n, d); }

// direct count of atoms where both sides agree under f
Rational brute_agreement(const std::vector<unsigned>& f, const SampleSpace& sp, int dir)
{
    std::size_t hits = 0;
    for (std::size_t x = 0; x < sp.atom_count(); ++x) {
        bool ok = true;
        for (unsigned n = 0; n < f.size() && ok; ++n)
            ok = dir == 1 ? sp.bit(x, 1, n) == sp.bit(x, 2, f[n]) : sp.bit(x, 2, n) == sp.bit(x, 1, f[n]);
        hits += ok;
    }
    Rational r(long(hits), long(sp.atom_count()));
    r.canonicalize();
    return r;
}

} // namespace

TEST_CASE("sample space")
{
    SampleSpace s1(1);
    CHECK(s1.atom_count() == 4);
    for (std::size_t x = 0; x < 4; ++x)
        CHECK(s1.algebra().atom(x).measure() == Q(1, 4));
    CHECK(s1.event(1, 0, true).measure() == Q(1, 2));
    CHECK((s1.event(1, 0, true) & s1.event(2, 0, true)).measure() == Q(1, 4));
    CHECK_THROWS_AS(SampleSpace(0), DomainError);
    CHECK_THROWS_AS(SampleSpace(13), DomainError);
    CHECK_THROWS_AS(s1.event(1, 1, true), DomainError);

    SampleSpace s3(3);
    for (std::size_t x = 0; x < s3.atom_count(); x += 7)
        for (unsigned n = 0; n < 3; ++n) {
            CHECK(s3.bit(x, 1, n) == bool((x >> n) & 1u));
            CHECK(s3.bit(x, 2, n) == bool((x >> (3 + n)) & 1u));
            CHECK(s3.event(2, n, s3.bit(x, 2, n)).atoms().test(x));
        }
    CHECK(s3.prefix(0, 1) == "000");
}

TEST_CASE("order events")
{
    SampleSpace sp(1);
    auto a = RandomSubset<unsigned>::constant(sp, {0, 1});
    CHECK(rv_order_event(OrderKind::Eq, a, a).is_top());
    auto b = a;
    b.values[2] = {0};
    auto le = rv_order_event(OrderKind::Leq, a, b);
    CHECK(le == ~sp.algebra().atom(2));
    CHECK(rv_order_event(OrderKind::Leq, b, a).is_top());
    SampleSpace other(1);
    auto c = RandomSubset<unsigned>::constant(other, {0});
    CHECK_THROWS_AS(rv_order_event(OrderKind::Eq, a, c), DomainError);
}

TEST_CASE("gx")
{
    SampleSpace sp(1);
    auto K = RandomSubset<unsigned>::constant(sp, {1, 3});
    auto g = gx(K);
    CHECK(g.size() == 2);
    CHECK(g.at(1).all());
    CHECK(g.at(3).all());
    CHECK(gx_inv(g, sp) == K);

    RandomSubset<unsigned> a{&sp, {{0}, {}, {}, {}}};
    auto ga = gx(a);
    CHECK(ga.at(0) == sp.algebra().atom(0).atoms());
    CHECK(!ga.count(1));
    CHECK(gx_inv(AValuedSubset<unsigned>{}, sp) == RandomSubset<unsigned>::constant(sp, {}));

    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
        auto x = verify::random_rv(rng, sp, 6), y = verify::random_rv(rng, sp, 6);
        CHECK(avs_subset(gx(x), gx(y), sp.algebra()) == rv_order_event(OrderKind::Leq, x, y));
        CHECK(gx_inv(gx(x), sp) == x);
    }
}

TEST_CASE("application homomorphism")
{
    SampleSpace sp(1);
    auto empty = RandomSubset<EElem>::constant(sp, {});
    ElemSet F = parse_set("{([*],*), ([],([],*)), ([*,([],*)],([*],*))}");
    ElemSet X = parse_set("{*, ([],*)}");
    auto KF = RandomSubset<EElem>::constant(sp, F), KX = RandomSubset<EElem>::constant(sp, X);
    CHECK(rv_apply(empty, KX) == empty);
    CHECK(rv_apply(KF, KX) == RandomSubset<EElem>::constant(sp, apply_fin(F, X)));

    std::vector<EElem> pool{EElem::parse("*"), EElem::parse("([],*)"), EElem::parse("([*],*)"),
                            EElem::parse("([*],([],*))"), EElem::parse("([([],*)],*)")};
    std::mt19937 rng(8);
    auto rand_rv = [&]() {
        RandomSubset<EElem> r{&sp, std::vector<std::vector<EElem>>(sp.atom_count())};
        for (auto& v : r.values) {
            for (auto& e : pool)
                if (rng() % 2)
                    v.push_back(e);
            v = make_set(v);
        }
        return r;
    };
    for (int i = 0; i < 100; ++i) {
        auto a = rand_rv(), b = rand_rv();
        CHECK(gx(rv_apply(a, b)) == avs_apply(gx(a), gx(b), sp.algebra()));
    }
}

TEST_CASE("random sets")
{
    SampleSpace sp(2);
    auto rs = random_sets(sp);
    auto& alg = sp.algebra();
    CHECK(alg.element(rs.s1.at(0)).measure() == Q(1, 2));
    CHECK((alg.element(rs.s1.at(1)) & alg.element(rs.s2.at(1))).measure() == Q(1, 4));
    CHECK((alg.element(rs.s1.at(0)) & alg.element(rs.s1.at(1))).measure() == Q(1, 4));
    CHECK(random_set_value(sp, 2, 1) == sp.event(2, 1, true));
    CHECK_THROWS_AS(random_set_value(sp, 1, 2), DomainError);
}

TEST_CASE("agreement measure")
{
    SampleSpace s3(3);
    CHECK(agreement_measure({0, 1, 2}, {0, 1, 2}, s3) == Q(1, 8));
    CHECK(agreement_measure({2, 2, 2}, {0}, s3) == Q(1, 8));
    CHECK(agreement_measure({2, 2, 2}, {0}, s3, 2) == Q(1, 8));
    SampleSpace s1(1);
    CHECK(agreement_measure({0}, {0}, s1) == Q(1, 2));
    CHECK_THROWS_AS(agreement_measure({0, 3, 1}, {0}, s3), DomainError);
    CHECK_THROWS_AS(agreement_measure({0, 0, 1}, {0, 1, 2}, s3), DomainError);

    std::mt19937 rng(12);
    for (unsigned k = 1; k <= 5; ++k) {
        SampleSpace sp(k);
        for (int i = 0; i < 20; ++i) {
            std::vector<unsigned> f(k);
            for (auto& v : f)
                v = rng() % k;
            auto win = injective_window(f);
            for (int dir : {1, 2}) {
                Rational m = agreement_measure(f, win, sp, dir);
                CHECK(m == brute_agreement(f, sp, dir));
                CHECK(agreement_event(f, sp, dir).measure() == m);
                CHECK(m <= Rational(1, 1L << win.size()));
            }
        }
    }

    CHECK(parse_map("0:1,1:0", 2) == std::vector<unsigned>{1, 0});
    CHECK(parse_map("0:2,1:0", 2) == std::vector<unsigned>{2, 0});
    CHECK_THROWS_AS(agreement_measure(parse_map("0:2,1:0", 2), {1}, SampleSpace(2)), DomainError);
    CHECK_THROWS_AS(parse_map("0:1", 2), DomainError);
    CHECK_THROWS_AS(parse_map("0-1", 2), ParseError);
    CHECK(injective_window({1, 1, 0}).size() == 2);
}

TEST_CASE("L0 setoid")
{
    SampleSpace sp(1);
    Setoid s = l0_setoid(sp, 1);
    CHECK(s.size() == 16);
    CHECK(s.complete());
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j)
            CHECK(s.eq(i, j) == rv_order_event(OrderKind::Eq, l0_element(sp, 1, i), l0_element(sp, 1, j)));
    auto& alg = sp.algebra();
    std::vector<GlueItem> fam{{alg.element({0, 1}), 3}, {alg.element({2}), 9}, {alg.element({3}), 0}};
    std::size_t x = glue(s, fam);
    for (auto& item : fam)
        CHECK(item.a <= s.eq(item.x, x));
    CHECK(!s.violation());
}

TEST_CASE("kleene-post")
{
    SampleSpace s1(1);
    auto r = kleene_post(s1, 1, witnesses().oracle_fuel, 1);
    REQUIRE(!r.candidates.empty());
    for (auto& c : r.candidates)
        CHECK(c.induced_f == std::vector<unsigned>{0});
    CHECK(r.union_measure == Q(1, 2));
    std::size_t survivors = 0;
    for (std::size_t x = 0; x < 4; ++x)
        survivors += s1.bit(x, 1, 0) != s1.bit(x, 2, 0);
    CHECK(survivors == 2);
    CHECK(s1.bit(r.chosen_atom, 1, 0) != s1.bit(r.chosen_atom, 2, 0));

    auto e = kleene_post(s1, 0, witnesses().oracle_fuel, 1);
    CHECK(e.candidates.empty());
    CHECK(e.union_measure == Q(0, 1));
    CHECK(e.chosen_atom == 0);
    CHECK(e.t1_prefix == "0");
    CHECK(kleene_candidates(4, 0).empty());
    CHECK(kleene_candidates(4, 3).size() == 35);

    SampleSpace s2(2);
    auto a = kleene_post(s2, 2, witnesses().oracle_fuel, 5);
    auto b = kleene_post(s2, 2, witnesses().oracle_fuel, 5);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.union_measure < Q(1, 1));
    for (auto& c : a.candidates) {
        CHECK(c.measure <= Q(1, 2));
        CHECK(c.disagreement_index < 2);
    }
}

TEST_CASE("oracle bits reproduce every atom")
{
    auto& w = witnesses();
    for (unsigned k : {1u, 2u}) {
        SampleSpace sp(k);
        for (std::size_t x = 0; x < sp.atom_count(); ++x)
            for (int side : {1, 2})
                for (unsigned n = 0; n < k; ++n)
                    CHECK(oracle_bit(sp, x, side, n, w.oracle_fuel, w.oracle_fuel_inner) == Verdict::Yes);
    }
}

#include <bvd/lambda.hpp>

#include <doctest.h>

#include <map>
#include <random>
#include <variant>
#include <vector>

using namespace bvd;

namespace {

Term P(const std::string& s) { return parse_term(s); }

bool eq_nf(const Term& m, const Term& n) { return theory_equal(m, n, 100000) == TheoryVerdict::Equal; }

// locally nameless: bound variables become de Bruijn indices, free ones keep their names
std::string nameless(const Term& t, std::vector<std::string>& scope)
{
    switch (t.kind()) {
    case Term::Kind::Var:
        for (std::size_t i = scope.size(); i-- > 0;)
            if (scope[i] == t.name())
                return std::to_string(scope.size() - 1 - i);
        return t.name();
    case Term::Kind::Lam: {
        scope.push_back(t.name());
        std::string r = "(L " + nameless(t.body(), scope) + ")";
        scope.pop_back();
        return r;
    }
    case Term::Kind::App:
        return "(" + nameless(t.fn(), scope) + " " + nameless(t.arg(), scope) + ")";
    case Term::Kind::Const:
        return "'" + t.name();
    }
    return {};
}

std::string nameless(const Term& t)
{
    std::vector<std::string> scope;
    return nameless(t, scope);
}

// de Bruijn tree for the substitution oracle
struct DB {
    int kind; // 0 bound, 1 free, 2 lam, 3 app
    int index = 0;
    std::string name;
    std::vector<DB> kids;
};

DB to_db(const Term& t, std::vector<std::string>& scope)
{
    switch (t.kind()) {
    case Term::Kind::Var:
        for (std::size_t i = scope.size(); i-- > 0;)
            if (scope[i] == t.name())
                return {0, int(scope.size() - 1 - i), {}, {}};
        return {1, 0, t.name(), {}};
    case Term::Kind::Lam: {
        scope.push_back(t.name());
        DB b = to_db(t.body(), scope);
        scope.pop_back();
        return {2, 0, {}, {b}};
    }
    default: {
        DB f = to_db(t.fn(), scope), a = to_db(t.arg(), scope);
        return {3, 0, {}, {f, a}};
    }
    }
}

// replaces free x by n; bound indices in n are never shifted since n is locally closed
DB db_subst(const DB& m, const std::string& x, const DB& n)
{
    if (m.kind == 1)
        return m.name == x ? n : m;
    if (m.kind == 0)
        return m;
    DB r = m;
    for (auto& k : r.kids)
        k = db_subst(k, x, n);
    return r;
}

std::string db_string(const DB& d)
{
    switch (d.kind) {
    case 0: return std::to_string(d.index);
    case 1: return d.name;
    case 2: return "(L " + db_string(d.kids[0]) + ")";
    default: return "(" + db_string(d.kids[0]) + " " + db_string(d.kids[1]) + ")";
    }
}

Term random_term(std::mt19937& g, int depth, std::vector<std::string>& names)
{
    static const char* pool[] = {"x", "y", "z"};
    int c = depth <= 0 ? 0 : int(g() % 3);
    if (c == 0)
        return Term::var(pool[g() % 3]);
    if (c == 1) {
        std::string v = pool[g() % 3];
        return Term::lam(v, random_term(g, depth - 1, names));
    }
    Term f = random_term(g, depth - 1, names);
    return Term::app(f, random_term(g, depth - 1, names));
}

Term plus() { return P("\\m. \\n. \\f. \\x. m f (n f x)"); }
Term times() { return P("\\m. \\n. \\f. m (n f)"); }

} // namespace

TEST_CASE("parse")
{
    Term t = P("\\x. x");
    CHECK(t.kind() == Term::Kind::Lam);
    CHECK(t.name() == "x");
    CHECK(t.body().kind() == Term::Kind::Var);
    CHECK(alpha_equal(P("#2"), P("\\f. \\x. f (f x)")));
    CHECK(alpha_equal(P("#0"), P("\\a. \\b. b")));
    CHECK_THROWS_AS(P("\\x. \\x"), ParseError);
    CHECK_THROWS_AS(P("(x"), ParseError);
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("x )"), ParseError);
    // left associative application
    Term a = P("x y z");
    CHECK(a.fn().kind() == Term::Kind::App);
    CHECK(a.arg().name() == "z");
    CHECK(P("\\x. y x").free_vars() == std::set<std::string>{"y"});
    CHECK(P("true").is_closed());
    CHECK(alpha_equal(P("num_0"), church(Church::IsZero)));
}

TEST_CASE("print and parse round trip")
{
    std::mt19937 g(11);
    std::vector<std::string> names;
    for (int i = 0; i < 300; ++i) {
        Term t = random_term(g, 5, names);
        Term back = P(t.to_string());
        CHECK(alpha_equal(t, back));
        CHECK(nameless(t) == nameless(back));
    }
    for (const char* s : {"#3", "succ", "pred", "iszero", "num_3", "if", "\\x. \\y. x y (\\z. z)"})
        CHECK(alpha_equal(P(s), P(P(s).to_string())));
}

TEST_CASE("alpha equality")
{
    CHECK(alpha_equal(P("\\x. x"), P("\\y. y")));
    CHECK(!alpha_equal(P("\\x. y"), P("\\y. y")));
    CHECK(!alpha_equal(P("\\x. \\y. x"), P("\\x. \\y. y")));
    CHECK(alpha_equal(P("\\x. \\y. x y"), P("\\y. \\x. y x")));
}

TEST_CASE("substitution")
{
    Term r = substitute(P("\\y. x"), "x", P("y"));
    REQUIRE(r.kind() == Term::Kind::Lam);
    CHECK(r.name() != "y");
    CHECK(r.body().kind() == Term::Kind::Var);
    CHECK(r.body().name() == "y");
    CHECK(alpha_equal(substitute(P("x"), "x", P("#3")), P("#3")));
    CHECK(alpha_equal(substitute(P("(\\x. x) x"), "x", P("#0")), P("(\\x. x) #0")));
    // deterministic
    CHECK(substitute(P("\\y. x"), "x", P("y")).to_string() ==
          substitute(P("\\y. x"), "x", P("y")).to_string());
}

TEST_CASE("substitution agrees with a locally nameless oracle")
{
    std::mt19937 g(5);
    std::vector<std::string> names;
    for (int i = 0; i < 500; ++i) {
        Term m = random_term(g, 5, names), n = random_term(g, 3, names);
        std::vector<std::string> s1, s2;
        DB expect = db_subst(to_db(m, s1), "x", to_db(n, s2));
        CHECK(nameless(substitute(m, "x", n)) == db_string(expect));
    }
}

TEST_CASE("normalize")
{
    auto r = normalize(P("(\\x. x) y"), 10);
    REQUIRE(r.normal_form);
    CHECK(alpha_equal(*r.normal_form, P("y")));
    CHECK(r.steps == 1);
    r = normalize(P("succ #2"), 1000);
    REQUIRE(r.normal_form);
    CHECK(as_numeral(*r.normal_form) == 3u);
    r = normalize(P("pred #0"), 1000);
    REQUIRE(r.normal_form);
    CHECK(as_numeral(*r.normal_form) == 0u);
    r = normalize(P("(\\x. x x) (\\x. x x)"), 50);
    CHECK(!r.normal_form);
    CHECK(r.steps == 50);
    r = normalize(P("\\z. z"), 0);
    CHECK(r.normal_form);
    CHECK(r.steps == 0);
    // leftmost outermost discards the divergent argument
    r = normalize(P("(\\x. \\y. y) ((\\x. x x) (\\x. x x))"), 10);
    REQUIRE(r.normal_form);
    CHECK(alpha_equal(*r.normal_form, P("\\y. y")));
    CHECK(!reduce_step(P("\\x. x")));
    // determinism
    CHECK(normalize(P("pred #4"), 1000).normal_form->to_string() ==
          normalize(P("pred #4"), 1000).normal_form->to_string());
}

TEST_CASE("church encodings")
{
    CHECK(eq_nf(P("if true a b"), P("a")));
    CHECK(eq_nf(P("if false a b"), P("b")));
    CHECK(eq_nf(P("iszero #0"), P("true")));
    CHECK(eq_nf(P("iszero #3"), P("false")));
    CHECK(eq_nf(P("num_2 #2"), P("true")));
    CHECK(eq_nf(P("num_2 #5"), P("false")));
    CHECK(alpha_equal(church(Church::Numeral, 2), P("#2")));
    CHECK(church(Church::Num, 4).is_closed());
    CHECK(as_numeral(P("#7")) == 7u);
    CHECK(!as_numeral(P("true")));
    CHECK(as_numeral(P("#0")) == 0u);
    // true is not the numeral 0
    CHECK(!alpha_equal(P("true"), P("#0")));

    for (unsigned n = 0; n <= 8; ++n) {
        CHECK(eq_nf(P("succ #" + std::to_string(n)), church(Church::Numeral, n + 1)));
        CHECK(eq_nf(P("pred #" + std::to_string(n + 1)), church(Church::Numeral, n)));
        CHECK(eq_nf(P("iszero #" + std::to_string(n)), P(n == 0 ? "true" : "false")));
    }
    for (unsigned m = 0; m <= 5; ++m)
        for (unsigned n = 0; n <= 5; ++n)
            CHECK(eq_nf(Term::app(church(Church::Num, m), church(Church::Numeral, n)),
                        P(m == n ? "true" : "false")));
}

TEST_CASE("church arithmetic")
{
    for (unsigned a = 0; a <= 6; ++a)
        for (unsigned b = 0; b <= 6; ++b) {
            Term ca = church(Church::Numeral, a), cb = church(Church::Numeral, b);
            auto s = normalize(Term::app(Term::app(plus(), ca), cb), 10000);
            REQUIRE(s.normal_form);
            CHECK(as_numeral(*s.normal_form) == a + b);
            auto t = normalize(Term::app(Term::app(times(), ca), cb), 10000);
            REQUIRE(t.normal_form);
            CHECK(as_numeral(*t.normal_form) == a * b);
        }
}

TEST_CASE("theory equality")
{
    CHECK(theory_equal(P("#2"), P("succ #1"), 1000) == TheoryVerdict::Equal);
    CHECK(theory_equal(P("true"), P("false"), 1000) == TheoryVerdict::UnequalNormalForms);
    Term omega = P("(\\x. x x) (\\x. x x)");
    CHECK(theory_equal(omega, omega, 1000) == TheoryVerdict::Inconclusive);
    CHECK(std::string(to_string(TheoryVerdict::Equal)).size() > 0);
}

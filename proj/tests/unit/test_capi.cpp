#include <bvd/bvd.h>

#include <doctest.h>
#include <json.hpp>

#include <string>

namespace {

struct Ctx {
    bvd_context* c = bvd_context_new();
    ~Ctx() { bvd_context_free(c); }
};

std::string take(char* s)
{
    std::string r = s ? s : "";
    bvd_string_free(s);
    return r;
}

bvd_term* parse(bvd_context* c, const char* text)
{
    bvd_term* t = nullptr;
    REQUIRE(bvd_term_parse(c, text, &t) == BVD_OK);
    return t;
}

} // namespace

TEST_CASE("c api terms")
{
    Ctx ctx;
    CHECK(std::string(bvd_last_error(ctx.c)).empty());
    bvd_term* t = nullptr;
    CHECK(bvd_term_parse(ctx.c, "\\x. \\x", &t) == BVD_ERR_PARSE);
    CHECK(t == nullptr);
    CHECK(!std::string(bvd_last_error(ctx.c)).empty());
    CHECK(bvd_term_parse(ctx.c, nullptr, &t) == BVD_ERR_USAGE);
    CHECK(bvd_term_parse(nullptr, "x", &t) == BVD_ERR_USAGE);

    t = parse(ctx.c, "succ #2");
    CHECK(std::string(bvd_last_error(ctx.c)).empty());
    size_t size = 0;
    CHECK(bvd_term_size(ctx.c, t, &size) == BVD_OK);
    CHECK(size > 1);
    bvd_term* nf = nullptr;
    uint64_t steps = 0;
    CHECK(bvd_normalize(ctx.c, t, 1000, &nf, &steps) == BVD_OK);
    CHECK(steps > 0);
    bvd_term* three = parse(ctx.c, "#3");
    int verdict = -1;
    CHECK(bvd_theory_equal(ctx.c, nf, three, 1000, &verdict) == BVD_OK);
    CHECK(verdict == BVD_EQUAL);
    char* printed = nullptr;
    CHECK(bvd_term_print(ctx.c, nf, &printed) == BVD_OK);
    bvd_term* back = parse(ctx.c, take(printed).c_str());
    CHECK(bvd_theory_equal(ctx.c, back, three, 0, &verdict) == BVD_OK);
    CHECK(verdict == BVD_EQUAL);

    bvd_term* omega = parse(ctx.c, "(\\x. x x) (\\x. x x)");
    bvd_term* none = nullptr;
    CHECK(bvd_normalize(ctx.c, omega, 20, &none, &steps) == BVD_ERR_BUDGET);
    CHECK(none == nullptr);
    CHECK(bvd_theory_equal(ctx.c, omega, omega, 20, &verdict) == BVD_OK);
    CHECK(verdict == BVD_INCONCLUSIVE);

    for (bvd_term* x : {t, nf, three, back, omega})
        bvd_term_free(x);
    bvd_term_free(nullptr);
}

TEST_CASE("c api denotations")
{
    Ctx ctx;
    bvd_term* id = parse(ctx.c, "\\x. x");
    int verdict = -1;
    char* trace = nullptr;
    CHECK(bvd_denote_member(ctx.c, id, "([*],*)", 2, &verdict, &trace) == BVD_OK);
    CHECK(verdict == BVD_YES);
    CHECK(!take(trace).empty());
    CHECK(bvd_denote_member(ctx.c, id, "([*],*)", 0, &verdict, nullptr) == BVD_OK);
    CHECK(verdict == BVD_UNKNOWN);
    CHECK(bvd_denote_member(ctx.c, id, "([*,*", 2, &verdict, nullptr) == BVD_ERR_PARSE);
    char* set = nullptr;
    CHECK(bvd_denote_enumerate(ctx.c, id, 3, &set) == BVD_OK);
    CHECK(take(set).find("([*],*)") != std::string::npos);
    bvd_term* open = parse(ctx.c, "y");
    CHECK(bvd_denote_member(ctx.c, open, "*", 2, &verdict, nullptr) == BVD_ERR_DOMAIN);
    bvd_term_free(id);
    bvd_term_free(open);

    char* json = nullptr;
    CHECK(bvd_witness_constants(ctx.c, &json) == BVD_OK);
    auto w = nlohmann::json::parse(take(json));
    CHECK(w["t_star"] == "([*],([],*))");
}

TEST_CASE("c api truth values")
{
    Ctx ctx;
    char *el = nullptr, *m = nullptr;
    CHECK(bvd_truth(ctx.c, "2:uniform", "exists x in {chk{} -> [0]}. x = chk{}", &el, &m) == BVD_OK);
    CHECK(take(el) == "[0]");
    CHECK(take(m) == "1/2");
    CHECK(bvd_truth(ctx.c, "2", "chk{} in chk{}", &el, &m) == BVD_OK);
    CHECK(take(el) == "bot");
    CHECK(m == nullptr);
    CHECK(bvd_truth(ctx.c, "2:1/2,1/3", "true", &el, &m) == BVD_ERR_DOMAIN);
    CHECK(bvd_truth(ctx.c, "2", "chk{} = ", &el, &m) == BVD_ERR_PARSE);
    CHECK(bvd_truth(ctx.c, "two", "true", &el, &m) == BVD_ERR_PARSE);
}

TEST_CASE("c api random variables")
{
    Ctx ctx;
    char* out = nullptr;
    CHECK(bvd_gx(ctx.c, 1, R"({"values": [[0], [], [], []]})", &out) == BVD_OK);
    auto g = nlohmann::json::parse(take(out));
    CHECK(!g.empty());
    CHECK(bvd_gx(ctx.c, 1, R"({"values": [[0]]})", &out) == BVD_ERR_DOMAIN);
    CHECK(bvd_gx(ctx.c, 1, "{", &out) == BVD_ERR_PARSE);

    CHECK(bvd_independence(ctx.c, 3, "0:0,1:1,2:2", &out) == BVD_OK);
    CHECK(take(out) == "1/8");
    CHECK(bvd_independence(ctx.c, 2, "0:0,1:5", &out) == BVD_ERR_DOMAIN);
    CHECK(bvd_independence(ctx.c, 2, "0;0", &out) == BVD_ERR_PARSE);
    CHECK(bvd_independence(ctx.c, 40, "0:0", &out) == BVD_ERR_DOMAIN);

    CHECK(bvd_kleene_post(ctx.c, 2, 2, 120, 3, 100000, &out) == BVD_OK);
    auto r = nlohmann::json::parse(take(out));
    CHECK(r["k"] == 2);
    CHECK(r.contains("T1_prefix"));
    CHECK(r["T1_prefix"].get<std::string>().size() == 2);
    CHECK(bvd_kleene_post(ctx.c, 2, 2, 120, 3, 100000, nullptr) == BVD_ERR_USAGE);
}

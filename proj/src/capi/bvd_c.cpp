#include <bvd/bvd.h>

#include <bvd/delta0.hpp>
#include <bvd/engeler.hpp>
#include <bvd/randvar.hpp>

#include "verify/acceptance.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>

struct bvd_context {
    std::string error;
};

struct bvd_term {
    bvd::Term term;
};

namespace {

char* dup(const std::string& s)
{
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p)
        std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class F>
int guard(bvd_context* ctx, F&& f)
{
    if (!ctx)
        return BVD_ERR_USAGE;
    ctx->error.clear();
    try {
        return f();
    } catch (const bvd::Error& e) {
        ctx->error = e.what();
        switch (e.kind()) {
        case bvd::ErrorKind::Budget: return BVD_ERR_BUDGET;
        case bvd::ErrorKind::Parse: return BVD_ERR_PARSE;
        case bvd::ErrorKind::Domain: return BVD_ERR_DOMAIN;
        }
        return BVD_ERR_DOMAIN;
    } catch (const nlohmann::json::exception& e) {
        ctx->error = e.what();
        return BVD_ERR_PARSE;
    } catch (const std::bad_alloc&) {
        ctx->error = "out of memory";
        return BVD_ERR_INTERNAL;
    } catch (const std::exception& e) {
        ctx->error = std::string("internal error: ") + e.what();
        return BVD_ERR_INTERNAL;
    }
}

int usage(bvd_context* ctx, const char* what)
{
    ctx->error = what;
    return BVD_ERR_USAGE;
}

} // namespace

extern "C" {

bvd_context* bvd_context_new(void) { return new (std::nothrow) bvd_context; }
void bvd_context_free(bvd_context* ctx) { delete ctx; }
const char* bvd_last_error(const bvd_context* ctx) { return ctx ? ctx->error.c_str() : ""; }
void bvd_string_free(char* s) { std::free(s); }

int bvd_term_parse(bvd_context* ctx, const char* text, bvd_term** out)
{
    return guard(ctx, [&]() -> int {
        if (!text || !out)
            return usage(ctx, "null argument");
        *out = new bvd_term{bvd::parse_term(text)};
        return BVD_OK;
    });
}

void bvd_term_free(bvd_term* t) { delete t; }

int bvd_term_print(bvd_context* ctx, const bvd_term* t, char** out)
{
    return guard(ctx, [&]() -> int {
        if (!t || !out)
            return usage(ctx, "null argument");
        *out = dup(t->term.to_string());
        return BVD_OK;
    });
}

int bvd_term_size(bvd_context* ctx, const bvd_term* t, size_t* out)
{
    return guard(ctx, [&]() -> int {
        if (!t || !out)
            return usage(ctx, "null argument");
        *out = t->term.size();
        return BVD_OK;
    });
}

int bvd_normalize(bvd_context* ctx, const bvd_term* t, uint64_t max_steps, bvd_term** out,
                  uint64_t* steps)
{
    return guard(ctx, [&]() -> int {
        if (!t || !out)
            return usage(ctx, "null argument");
        auto r = bvd::normalize(t->term, max_steps);
        if (steps)
            *steps = r.steps;
        if (!r.normal_form) {
            ctx->error = "no normal form within " + std::to_string(max_steps) + " steps";
            return BVD_ERR_BUDGET;
        }
        *out = new bvd_term{*r.normal_form};
        return BVD_OK;
    });
}

int bvd_theory_equal(bvd_context* ctx, const bvd_term* a, const bvd_term* b, uint64_t max_steps,
                     int* verdict)
{
    return guard(ctx, [&]() -> int {
        if (!a || !b || !verdict)
            return usage(ctx, "null argument");
        *verdict = static_cast<int>(bvd::theory_equal(a->term, b->term, max_steps));
        return BVD_OK;
    });
}

int bvd_denote_member(bvd_context* ctx, const bvd_term* t, const char* element, unsigned fuel,
                      int* verdict, char** trace)
{
    return guard(ctx, [&]() -> int {
        if (!t || !element || !verdict)
            return usage(ctx, "null argument");
        auto e = bvd::EElem::parse(element);
        auto r = bvd::denote_member(t->term, {}, e, fuel, trace != nullptr);
        *verdict = static_cast<int>(r.verdict);
        if (trace) {
            std::string s;
            for (auto& line : r.trace)
                s += line + "\n";
            *trace = dup(s);
        }
        return BVD_OK;
    });
}

int bvd_denote_enumerate(bvd_context* ctx, const bvd_term* t, unsigned fuel, char** out)
{
    return guard(ctx, [&]() -> int {
        if (!t || !out)
            return usage(ctx, "null argument");
        *out = dup(bvd::to_string(bvd::denote_enumerate(t->term, {}, fuel)));
        return BVD_OK;
    });
}

int bvd_truth(bvd_context* ctx, const char* algebra, const char* formula, char** element,
              char** measure)
{
    return guard(ctx, [&]() -> int {
        if (!algebra || !formula || !element)
            return usage(ctx, "null argument");
        bvd::Universe u(bvd::parse_algebra(algebra));
        auto phi = bvd::parse_delta0(u, formula);
        auto v = bvd::eval_delta0(u, phi, {});
        *element = dup(v.to_string());
        if (measure)
            *measure = u.algebra().has_measure() ? dup(bvd::to_string(v.measure())) : nullptr;
        return BVD_OK;
    });
}

int bvd_gx(bvd_context* ctx, unsigned k, const char* rv_json, char** out)
{
    return guard(ctx, [&]() -> int {
        if (!rv_json || !out)
            return usage(ctx, "null argument");
        bvd::SampleSpace space(k);
        auto j = nlohmann::json::parse(rv_json);
        auto& vals = j.at("values");
        if (!vals.is_array() || vals.size() != space.atom_count())
            throw bvd::DomainError("expected " + std::to_string(space.atom_count()) +
                                   " atom values, got " +
                                   std::to_string(vals.is_array() ? vals.size() : 0));
        bvd::RandomSubset<unsigned> a{&space, {}};
        for (auto& v : vals) {
            std::vector<unsigned> xs = v.get<std::vector<unsigned>>();
            std::sort(xs.begin(), xs.end());
            xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
            a.values.push_back(std::move(xs));
        }
        auto g = bvd::gx(a);
        if (!(bvd::gx_inv(g, space) == a))
            throw std::logic_error("gx round trip failed");
        nlohmann::ordered_json r;
        r["k"] = k;
        auto entries = nlohmann::ordered_json::array();
        for (auto& [y, atoms] : g) {
            auto e = space.algebra().element(atoms);
            entries.push_back({{"y", y},
                               {"atoms", atoms.indices()},
                               {"measure", bvd::to_string(e.measure())}});
        }
        r["entries"] = entries;
        *out = dup(r.dump(2));
        return BVD_OK;
    });
}

int bvd_independence(bvd_context* ctx, unsigned k, const char* map, char** measure)
{
    return guard(ctx, [&]() -> int {
        if (!map || !measure)
            return usage(ctx, "null argument");
        bvd::SampleSpace space(k);
        auto f = bvd::parse_map(map, k);
        *measure = dup(bvd::to_string(bvd::agreement_measure(f, bvd::injective_window(f), space)));
        return BVD_OK;
    });
}

int bvd_kleene_post(bvd_context* ctx, unsigned k, unsigned size, unsigned fuel,
                    unsigned long seed, uint64_t steps, char** report_json)
{
    return guard(ctx, [&]() -> int {
        if (!report_json)
            return usage(ctx, "null argument");
        bvd::SampleSpace space(k);
        *report_json = dup(bvd::kleene_post(space, size, fuel, seed, steps).to_json());
        return BVD_OK;
    });
}

int bvd_witness_constants(bvd_context* ctx, char** json)
{
    return guard(ctx, [&]() -> int {
        if (!json)
            return usage(ctx, "null argument");
        *json = dup(bvd::witnesses_to_json(bvd::witnesses()));
        return BVD_OK;
    });
}

int bvd_selftest(bvd_context* ctx, bvd_selftest_callback cb, void* user, int* all_pass)
{
    return guard(ctx, [&]() -> int {
        bool all = true;
        bvd::verify::run_acceptance([&](const bvd::verify::CriterionResult& r) {
            all = all && r.pass;
            if (cb)
                cb(user, r.id, r.pass ? 1 : 0, bvd::verify::format_result(r).c_str());
        });
        if (all_pass)
            *all_pass = all ? 1 : 0;
        return BVD_OK;
    });
}

} // extern "C"

// bvd: command line front end over the C API.
#include <bvd/bvd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

using json = nlohmann::ordered_json;

struct Ctx {
    bvd_context* c = bvd_context_new();
    ~Ctx() { bvd_context_free(c); }
};

struct Str {
    char* p = nullptr;
    ~Str() { bvd_string_free(p); }
    std::string get() const { return p ? p : ""; }
};

struct TermHandle {
    bvd_term* t = nullptr;
    ~TermHandle() { bvd_term_free(t); }
};

struct Failure {
    int status;
    std::string message;
};

void check(const Ctx& ctx, int status)
{
    if (status != BVD_OK)
        throw Failure{status, bvd_last_error(ctx.c)};
}

const char* verdict_name(int v)
{
    return v == BVD_YES ? "Yes" : v == BVD_NO ? "No" : "Unknown";
}

struct Defaults {
    uint64_t steps = 10000;
    unsigned fuel = 8;
    unsigned size = 3;
    unsigned long seed = 0;
    uint64_t kleene_steps = 100000;
    unsigned kleene_fuel = 0; // 0: the calibrated oracle fuel
};

Defaults load_config(const std::string& path)
{
    Defaults d;
    if (path.empty())
        return d;
    std::ifstream in(path);
    if (!in)
        throw CLI::ValidationError("--config", "cannot read " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
        if (j.contains("steps"))
            d.steps = j["steps"].get<uint64_t>();
        if (j.contains("fuel"))
            d.fuel = j["fuel"].get<unsigned>();
        if (j.contains("size"))
            d.size = j["size"].get<unsigned>();
        if (j.contains("seed"))
            d.seed = j["seed"].get<unsigned long>();
        if (j.contains("kleene_steps"))
            d.kleene_steps = j["kleene_steps"].get<uint64_t>();
        if (j.contains("kleene_fuel"))
            d.kleene_fuel = j["kleene_fuel"].get<unsigned>();
    } catch (const nlohmann::json::exception& e) {
        throw CLI::ValidationError("--config", e.what());
    }
    return d;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Boolean-valued domain theory toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    std::string config;
    app.add_flag("--json", as_json, "structured output");
    app.add_option("--config", config, "JSON file with default fuel, steps, size and seed")
        ->check(CLI::ExistingFile);

    std::string term, element, algebra, formula, rv, map;
    std::optional<uint64_t> steps;
    std::optional<unsigned> fuel, size, bits, space;
    std::optional<unsigned long> seed;
    bool trace = false;

    auto* parse = app.add_subcommand("parse", "parse and print a lambda term");
    parse->add_option("term", term)->required();

    auto* norm = app.add_subcommand("normalize", "leftmost-outermost normal form");
    norm->add_option("term", term)->required();
    norm->add_option("--steps", steps, "beta step budget")->check(CLI::PositiveNumber);

    auto* denote = app.add_subcommand("denote", "membership in the graph-model denotation");
    denote->add_option("term", term)->required();
    denote->add_option("--element", element, "element such as ([*],*); omit to enumerate");
    denote->add_option("--fuel", fuel, "search depth")->check(CLI::NonNegativeNumber);
    denote->add_flag("--trace", trace, "print the derivation of a Yes");

    auto* truth = app.add_subcommand("truth", "Boolean truth value of a closed formula");
    truth->add_option("--algebra", algebra, "atom count with optional weights")->required();
    truth->add_option("--formula", formula)->required();

    auto* gx = app.add_subcommand("gx", "random subset to A-valued subset");
    gx->add_option("--space", space, "bits per side")->required()->check(CLI::Range(1, 12));
    gx->add_option("--rv", rv, "JSON file {\"values\": [[...] per atom]}")
        ->required()
        ->check(CLI::ExistingFile);

    auto* indep = app.add_subcommand("independence", "measure of S1 = f^-1(S2)");
    indep->add_option("--bits", bits)->required()->check(CLI::Range(1, 12));
    indep->add_option("--map", map, "n:f(n) pairs, comma separated")->required();

    auto* kp = app.add_subcommand("kleene-post", "incomparable oracle prefixes at window scale");
    kp->add_option("--bits", bits)->required()->check(CLI::Range(1, 12));
    kp->add_option("--size", size, "candidate term size")->check(CLI::NonNegativeNumber);
    kp->add_option("--fuel", fuel, "oracle witness fuel")->check(CLI::PositiveNumber);
    kp->add_option("--seed", seed, "spot check seed");
    kp->add_option("--steps", steps, "normalization budget per candidate")
        ->check(CLI::PositiveNumber);

    auto* self = app.add_subcommand("selftest", "run the acceptance criteria");

    Defaults d;
    try {
        app.parse(argc, argv);
        d = load_config(config);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    Ctx ctx;
    if (!ctx.c) {
        std::cerr << "error: out of memory\n";
        return 1;
    }
    try {
        auto parse_term = [&](TermHandle& h) { check(ctx, bvd_term_parse(ctx.c, term.c_str(), &h.t)); };
        if (*parse) {
            TermHandle h;
            parse_term(h);
            Str s;
            size_t n = 0;
            check(ctx, bvd_term_print(ctx.c, h.t, &s.p));
            check(ctx, bvd_term_size(ctx.c, h.t, &n));
            if (as_json)
                std::cout << json{{"term", s.get()}, {"size", n}}.dump(2) << "\n";
            else
                std::cout << s.get() << "\n";
        } else if (*norm) {
            TermHandle h, nf;
            parse_term(h);
            uint64_t used = 0, budget = steps.value_or(d.steps);
            int st = bvd_normalize(ctx.c, h.t, budget, &nf.t, &used);
            if (st == BVD_ERR_BUDGET && as_json) {
                std::cout << json{{"normal_form", nullptr}, {"steps", used}}.dump(2) << "\n";
                return 1;
            }
            check(ctx, st);
            Str s;
            check(ctx, bvd_term_print(ctx.c, nf.t, &s.p));
            if (as_json)
                std::cout << json{{"normal_form", s.get()}, {"steps", used}}.dump(2) << "\n";
            else
                std::cout << s.get() << "\nsteps: " << used << "\n";
        } else if (*denote) {
            TermHandle h;
            parse_term(h);
            unsigned f = fuel.value_or(d.fuel);
            if (element.empty()) {
                Str s;
                check(ctx, bvd_denote_enumerate(ctx.c, h.t, f, &s.p));
                if (as_json)
                    std::cout << json{{"fuel", f}, {"elements", s.get()}}.dump(2) << "\n";
                else
                    std::cout << s.get() << "\n";
            } else {
                int v = 0;
                Str tr;
                check(ctx, bvd_denote_member(ctx.c, h.t, element.c_str(), f, &v,
                                             trace || as_json ? &tr.p : nullptr));
                if (as_json) {
                    json j{{"verdict", verdict_name(v)}, {"fuel", f}};
                    if (trace) {
                        std::vector<std::string> lines;
                        std::istringstream in(tr.get());
                        for (std::string l; std::getline(in, l);)
                            lines.push_back(l);
                        j["trace"] = lines;
                    }
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << verdict_name(v) << "\n";
                    if (trace)
                        std::cout << tr.get();
                }
            }
        } else if (*truth) {
            Str e, m;
            check(ctx, bvd_truth(ctx.c, algebra.c_str(), formula.c_str(), &e.p, &m.p));
            if (as_json) {
                json j{{"value", e.get()}};
                j["measure"] = m.p ? json(m.get()) : json(nullptr);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << e.get() << "\n";
                if (m.p)
                    std::cout << "measure: " << m.get() << "\n";
            }
        } else if (*gx) {
            Str s;
            check(ctx, bvd_gx(ctx.c, *space, read_file(rv).c_str(), &s.p));
            if (as_json) {
                std::cout << s.get() << "\n";
            } else {
                auto j = json::parse(s.get());
                for (auto& e : j["entries"]) {
                    std::cout << e["y"].get<unsigned>() << ": [";
                    bool first = true;
                    for (auto& a : e["atoms"]) {
                        std::cout << (first ? "" : ",") << a.get<std::size_t>();
                        first = false;
                    }
                    std::cout << "] measure " << e["measure"].get<std::string>() << "\n";
                }
            }
        } else if (*indep) {
            Str m;
            check(ctx, bvd_independence(ctx.c, *bits, map.c_str(), &m.p));
            if (as_json)
                std::cout << json{{"bits", *bits}, {"map", map}, {"measure", m.get()}}.dump(2)
                          << "\n";
            else
                std::cout << m.get() << "\n";
        } else if (*kp) {
            unsigned f = fuel.value_or(d.kleene_fuel);
            if (f == 0) {
                Str w;
                check(ctx, bvd_witness_constants(ctx.c, &w.p));
                f = json::parse(w.get())["oracle_fuel"].get<unsigned>();
            }
            Str r;
            check(ctx, bvd_kleene_post(ctx.c, *bits, size.value_or(d.size), f,
                                       seed.value_or(d.seed), steps.value_or(d.kleene_steps),
                                       &r.p));
            if (as_json) {
                std::cout << r.get() << "\n";
            } else {
                auto j = json::parse(r.get());
                std::cout << "T1 " << j["T1_prefix"].get<std::string>() << "\nT2 "
                          << j["T2_prefix"].get<std::string>() << "\nunion measure "
                          << j["union_measure"].get<std::string>() << "\nchosen atom "
                          << j["chosen_atom"].get<std::size_t>() << "\n";
                for (auto& c : j["candidates"])
                    std::cout << "  " << c["term"].get<std::string>() << " dir "
                              << c["direction"].get<int>() << " measure "
                              << c["measure"].get<std::string>() << " differs at "
                              << c["disagreement_index"].get<unsigned>() << "\n";
                std::cout << j["discarded"].size() << " candidates leave the window\n";
            }
        } else if (*self) {
            int all = 0;
            check(ctx, bvd_selftest(
                           ctx.c,
                           [](void*, int, int, const char* line) { std::cout << line << std::endl; },
                           nullptr, &all));
            return all ? 0 : 1;
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.status == BVD_ERR_USAGE ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#pragma once

#include <bvd/errors.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>

namespace bvd {

class SemanticSet; // engeler.hpp

class Term {
public:
    enum class Kind { Var, Lam, App, Const };

    static Term var(std::string name);
    static Term lam(std::string name, Term body);
    static Term app(Term fn, Term arg);
    static Term constant(std::string label, std::shared_ptr<const SemanticSet> value);

    Kind kind() const { return n_->kind; }
    // variable name, binder name or constant label
    const std::string& name() const { return n_->name; }
    const Term& body() const { return *n_->a; }
    const Term& fn() const { return *n_->a; }
    const Term& arg() const { return *n_->b; }
    const std::shared_ptr<const SemanticSet>& value() const { return n_->value; }

    std::size_t size() const { return n_->size; }
    const std::set<std::string>& free_vars() const { return n_->fv; }
    bool is_closed() const { return n_->fv.empty(); }
    bool same_node(const Term& o) const { return n_ == o.n_; }
    const void* node_id() const { return n_.get(); }

    std::string to_string() const;

private:
    struct Node {
        Kind kind;
        std::string name;
        std::shared_ptr<const Term> a, b;
        std::shared_ptr<const SemanticSet> value;
        std::size_t size;
        std::set<std::string> fv;
    };
    explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

bool alpha_equal(const Term& a, const Term& b);

// M[x := N], renaming binders that would capture free variables of N
Term substitute(const Term& m, const std::string& x, const Term& n);

// \x. M, juxtaposition, parentheses, #n, true, false, if, succ, pred, iszero, num_m
Term parse_term(const std::string& text);

enum class Church { Numeral, True, False, If, Succ, Pred, IsZero, Num };
Term church(Church kind, unsigned n = 0);

struct NormalizeResult {
    std::optional<Term> normal_form; // empty when the budget ran out
    std::uint64_t steps = 0;
};

// one leftmost-outermost beta step, or nullopt for a normal form
std::optional<Term> reduce_step(const Term& m);
NormalizeResult normalize(const Term& m, std::uint64_t max_steps);

enum class TheoryVerdict { Equal, UnequalNormalForms, Inconclusive };
TheoryVerdict theory_equal(const Term& m, const Term& n, std::uint64_t max_steps);
const char* to_string(TheoryVerdict v);

// the numeral n if m is alpha-equal to #n
std::optional<unsigned> as_numeral(const Term& m);

} // namespace bvd

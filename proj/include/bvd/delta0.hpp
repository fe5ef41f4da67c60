#pragma once

#include <bvd/bvset.hpp>

#include <map>
#include <memory>
#include <set>
#include <string>

namespace bvd {

// variable or constant A-set
struct D0Term {
    std::string var;
    AValuedSet constant;

    static D0Term variable(std::string name) { return {std::move(name), {}}; }
    static D0Term of(AValuedSet s) { return {{}, s}; }
    bool is_var() const { return !constant.valid(); }
};

class Delta0 {
public:
    enum class Kind { True, False, Eq, Mem, Not, And, Or, Implies, Iff, Forall, Exists };

    static Delta0 truth(bool v);
    static Delta0 eq(D0Term a, D0Term b);
    static Delta0 mem(D0Term a, D0Term b);
    static Delta0 negate(Delta0 a);
    static Delta0 binary(Kind k, Delta0 a, Delta0 b);
    static Delta0 forall(std::string var, D0Term bound, Delta0 body);
    static Delta0 exists(std::string var, D0Term bound, Delta0 body);

    Kind kind() const { return n_->kind; }
    const D0Term& lhs() const { return n_->lhs; }
    const D0Term& rhs() const { return n_->rhs; }
    const std::string& var() const { return n_->var; }
    const Delta0& left() const { return *n_->a; }
    const Delta0& right() const { return *n_->b; }

    std::set<std::string> free_vars() const;
    std::string to_string() const;

private:
    struct Node {
        Kind kind;
        D0Term lhs, rhs; // atoms; rhs is the bound of a quantifier
        std::string var;
        std::shared_ptr<const Delta0> a, b;
    };
    explicit Delta0(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

using Env = std::map<std::string, AValuedSet>;

AlgebraElement eval_delta0(Universe& u, const Delta0& phi, const Env& env);

// {x in X | phi(x)}; phi may mention only `var` and names bound in env
AValuedSet separation(const AValuedSet& X, const Delta0& phi, const std::string& var,
                      const Env& env = {});

struct Witness {
    AValuedSet x;
    AlgebraElement value; // ||x in X|| & ||phi(x)||, equal to ||exists x in X. phi||
};
// mixture of dom X weighted by disjointified values, earlier entries in structural order first
Witness maximizing_witness(const AValuedSet& X, const Delta0& phi, const std::string& var,
                           const Env& env = {});

// forall x in T. phi | exists x in T. phi | phi <=> phi | phi => phi | & | ~ | a = b | a in b
Delta0 parse_delta0(Universe& u, const std::string& text);

} // namespace bvd

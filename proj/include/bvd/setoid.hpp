#pragma once

#include <bvd/bvset.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bvd {

struct GlueItem {
    AlgebraElement a;
    std::size_t x;
};

// Finite A-setoid over carrier indices 0..size-1. Cheap to copy; copies share state.
class Setoid {
public:
    // returns the carrier index of the glued element; only called on a valid disjoint family
    using Gluer = std::function<std::size_t(std::span<const GlueItem>)>;

    Setoid(Algebra alg, std::vector<std::string> labels, std::vector<AtomSet> eq_table,
           Gluer gluer = {});
    static Setoid from_function(Algebra alg, std::vector<std::string> labels,
                                const std::function<AtomSet(std::size_t, std::size_t)>& eq,
                                Gluer gluer = {});

    const Algebra& algebra() const { return s_->alg; }
    std::size_t size() const { return s_->labels.size(); }
    const std::string& label(std::size_t i) const { return s_->labels.at(i); }
    AlgebraElement eq(std::size_t i, std::size_t j) const;
    const AtomSet& eq_atoms(std::size_t i, std::size_t j) const;
    AlgebraElement extent(std::size_t i) const { return eq(i, i); }
    bool complete() const { return static_cast<bool>(s_->gluer); }
    const Gluer& gluer() const { return s_->gluer; }

    // first failing symmetry or transitivity instance
    std::optional<std::string> violation() const;

    bool operator==(const Setoid& o) const { return s_ == o.s_; }

private:
    struct State {
        Algebra alg;
        std::vector<std::string> labels;
        std::vector<AtomSet> eq;
        Gluer gluer;
    };
    std::shared_ptr<const State> s_;
};

// disjoint family form; checks preconditions and the contract a_i <= ||x_i = x||
std::size_t glue(const Setoid& s, std::span<const GlueItem> family);
// compatible family form (a_i & a_j <= ||x_i = x_j||), reduced to the disjoint form
std::size_t glue_compatible(const Setoid& s, std::span<const GlueItem> family);

struct OidSetoid {
    Setoid setoid;
    std::vector<AValuedSet> carrier;
    std::size_t index_of(const AValuedSet& x) const;
};

OidSetoid oid(const AValuedSet& X);
// Oid(P^A(X)), flagged complete with the entrywise-join gluer
OidSetoid oid_power_set(const AValuedSet& X, std::size_t budget);

// carrier index of (i, j) is i * t.size() + j
Setoid product(const Setoid& s, const Setoid& t);

// e(S)(x) = ||x in S||
std::vector<AlgebraElement> subset_predicate(const OidSetoid& X, const AValuedSet& S);
std::optional<std::string> predicate_violation(const Setoid& X,
                                               std::span<const AlgebraElement> pred);

// X x Y -> A, row major
struct Relation {
    Setoid source, target;
    std::vector<AlgebraElement> values;
    const AlgebraElement& at(std::size_t x, std::size_t y) const
    {
        return values.at(x * target.size() + y);
    }
    bool operator==(const Relation& o) const { return values == o.values; }
};

Relation identity_relation(const Setoid& X);
// (iii) single-valued and (iv) total; the relation must also be a predicate on X x Y
std::optional<std::string> functional_violation(const Relation& R);

struct SetoidHom {
    Setoid source, target;
    std::vector<std::size_t> map;
};

SetoidHom make_hom(const Setoid& source, const Setoid& target, std::vector<std::size_t> map);
AlgebraElement hom_distance(const SetoidHom& f, const SetoidHom& g);
bool hom_equivalent(const SetoidHom& f, const SetoidHom& g);
Relation graph(const SetoidHom& f);
SetoidHom relation_to_function(const Relation& R);

struct APoset {
    Algebra alg;
    std::vector<std::string> labels;
    std::vector<AtomSet> leq; // row major
    AlgebraElement at(std::size_t i, std::size_t j) const
    {
        return alg.element(leq.at(i * labels.size() + j));
    }
};

std::optional<std::string> poset_violation(const APoset& P);
Setoid poset_to_setoid(const APoset& P, Setoid::Gluer gluer = {});
// checks ||x1 <= x2|| <= ||f x1 <= f x2||, then the setoid hom condition
SetoidHom monotone_hom(const APoset& P, const Setoid& ps, const APoset& Q, const Setoid& qs,
                       std::vector<std::size_t> map);

} // namespace bvd

#pragma once

#include <bvd/algebra.hpp>
#include <bvd/classical.hpp>

#include <deque>
#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace bvd {

class Universe;

namespace detail {
struct ANode {
    uint32_t id;
    uint32_t rank;
    std::vector<const ANode*> keys; // sorted by id
    std::vector<AtomSet> values;
    std::size_t hash;
};
} // namespace detail

// Handle to an interned A-valued set. Equal handles <=> structurally equal sets.
class AValuedSet {
public:
    AValuedSet() = default;

    bool valid() const { return node_ != nullptr; }
    Universe& universe() const { return *u_; }
    uint32_t id() const { return node_->id; }
    uint32_t rank() const { return node_->rank; }
    std::size_t size() const { return node_->keys.size(); }

    AValuedSet key(std::size_t i) const { return {u_, node_->keys[i]}; }
    AlgebraElement value(std::size_t i) const;
    const AtomSet& value_atoms(std::size_t i) const { return node_->values[i]; }
    std::vector<AValuedSet> domain() const;
    // X(t); bottom when t is not in dom X
    AlgebraElement at(const AValuedSet& t) const;

    std::string to_string() const;

    bool operator==(const AValuedSet& o) const { return node_ == o.node_; }
    bool operator!=(const AValuedSet& o) const { return node_ != o.node_; }

private:
    AValuedSet(Universe* u, const detail::ANode* n) : u_(u), node_(n) {}
    Universe* u_ = nullptr;
    const detail::ANode* node_ = nullptr;
    friend class Universe;
};

// total structural order, used for "least" choices
std::strong_ordering structural_compare(const AValuedSet& a, const AValuedSet& b);

struct AValuedSetHash {
    std::size_t operator()(const AValuedSet& s) const { return s.id(); }
};

enum class TruthKind { Membership, Subset, Equality };

// Owns the interned A-sets over one algebra plus the truth memo.
// Interning and memo insertion are serialized, lookups may run concurrently.
class Universe {
public:
    explicit Universe(Algebra alg, unsigned max_rank = 8);
    Universe(const Universe&) = delete;
    Universe& operator=(const Universe&) = delete;

    const Algebra& algebra() const { return alg_; }
    unsigned max_rank() const { return max_rank_; }
    std::size_t node_count() const;

    AValuedSet empty();
    // duplicate keys are merged by join
    AValuedSet make(std::vector<std::pair<AValuedSet, AlgebraElement>> entries);
    AValuedSet make_raw(std::vector<std::pair<AValuedSet, AtomSet>> entries);

    AlgebraElement truth(TruthKind kind, const AValuedSet& lhs, const AValuedSet& rhs);
    AtomSet truth_atoms(TruthKind kind, const AValuedSet& lhs, const AValuedSet& rhs);

private:
    friend class AValuedSet;
    void own(const AValuedSet& s) const;
    AtomSet mem(const detail::ANode* x, const detail::ANode* X);
    AtomSet sub(const detail::ANode* X, const detail::ANode* Y);
    AtomSet eq(const detail::ANode* x, const detail::ANode* y);

    struct NodeHash {
        std::size_t operator()(const detail::ANode* n) const { return n->hash; }
    };
    struct NodeEq {
        bool operator()(const detail::ANode* a, const detail::ANode* b) const
        {
            return a->keys == b->keys && a->values == b->values;
        }
    };

    Algebra alg_;
    unsigned max_rank_;
    mutable std::shared_mutex intern_mu_;
    std::deque<detail::ANode> nodes_;
    std::unordered_set<const detail::ANode*, NodeHash, NodeEq> index_;
    mutable std::shared_mutex memo_mu_;
    std::unordered_map<uint64_t, AtomSet> memo_;
};

AlgebraElement truth(TruthKind kind, const AValuedSet& lhs, const AValuedSet& rhs);

// constructions
AValuedSet singleton(const AValuedSet& x);
AValuedSet unordered_pair(const AValuedSet& x, const AValuedSet& y);
AValuedSet ordered_pair(const AValuedSet& x, const AValuedSet& y);
AValuedSet product(const AValuedSet& X, const AValuedSet& Y);
AValuedSet power_set(const AValuedSet& X, std::size_t budget);
AValuedSet separation(const AValuedSet& X,
                      const std::function<AlgebraElement(const AValuedSet&)>& phi);
AValuedSet check_embed(Universe& u, const HfSet& s);
// Y if X is hereditarily the check of Y
std::optional<HfSet> as_check(const AValuedSet& X);
AValuedSet fin_power_set(const AValuedSet& X, std::size_t budget);
// {S in P^A(X) | S finite}, finiteness as a join over images of maps n -> dom X
AValuedSet fin_power_set_by_separation(const AValuedSet& X, std::size_t budget);

// text syntax: {chk{} -> [0], {} -> top} , chk{{},{{}}}
AValuedSet parse_aset(Universe& u, const std::string& text);

} // namespace bvd

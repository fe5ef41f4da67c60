#include <bvd/bvset.hpp>

#include <algorithm>

namespace bvd {

using detail::ANode;

AlgebraElement AValuedSet::value(std::size_t i) const
{
    return u_->algebra().element(node_->values[i]);
}

std::vector<AValuedSet> AValuedSet::domain() const
{
    std::vector<AValuedSet> out;
    for (auto* k : node_->keys)
        out.push_back({u_, k});
    return out;
}

AlgebraElement AValuedSet::at(const AValuedSet& t) const
{
    u_->own(t);
    auto it = std::lower_bound(node_->keys.begin(), node_->keys.end(), t.node_,
                               [](const ANode* a, const ANode* b) { return a->id < b->id; });
    if (it != node_->keys.end() && *it == t.node_)
        return value(it - node_->keys.begin());
    return u_->algebra().bottom();
}

std::string AValuedSet::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < size(); ++i) {
        if (i)
            s += ", ";
        s += key(i).to_string() + " -> " + value(i).to_string();
    }
    return s + "}";
}

std::strong_ordering structural_compare(const AValuedSet& a, const AValuedSet& b)
{
    if (a == b)
        return std::strong_ordering::equal;
    if (auto c = a.rank() <=> b.rank(); c != 0)
        return c;
    if (auto c = a.size() <=> b.size(); c != 0)
        return c;
    // compare entries in structural key order
    auto sorted = [](const AValuedSet& s) {
        std::vector<std::size_t> idx(s.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
            return structural_compare(s.key(x), s.key(y)) < 0;
        });
        return idx;
    };
    auto ia = sorted(a), ib = sorted(b);
    for (std::size_t i = 0; i < ia.size(); ++i) {
        if (auto c = structural_compare(a.key(ia[i]), b.key(ib[i])); c != 0)
            return c;
        if (auto c = a.value_atoms(ia[i]) <=> b.value_atoms(ib[i]); c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

Universe::Universe(Algebra alg, unsigned max_rank) : alg_(std::move(alg)), max_rank_(max_rank) {}

std::size_t Universe::node_count() const
{
    std::shared_lock lk(intern_mu_);
    return nodes_.size();
}

void Universe::own(const AValuedSet& s) const
{
    if (!s.valid())
        throw DomainError("null A-set handle");
    if (s.u_ != this)
        throw DomainError("A-sets belong to different universes");
}

AValuedSet Universe::empty() { return make_raw({}); }

AValuedSet Universe::make(std::vector<std::pair<AValuedSet, AlgebraElement>> entries)
{
    std::vector<std::pair<AValuedSet, AtomSet>> raw;
    raw.reserve(entries.size());
    for (auto& [k, v] : entries) {
        if (v.algebra() != alg_)
            throw DomainError("entry value from a different algebra");
        raw.emplace_back(k, v.atoms());
    }
    return make_raw(std::move(raw));
}

AValuedSet Universe::make_raw(std::vector<std::pair<AValuedSet, AtomSet>> entries)
{
    for (auto& [k, v] : entries) {
        own(k);
        if (v.size() != alg_.atom_count())
            throw DomainError("entry value from a different algebra");
    }
    std::sort(entries.begin(), entries.end(),
              [](auto& a, auto& b) { return a.first.id() < b.first.id(); });
    ANode n{};
    for (auto& [k, v] : entries) {
        if (!n.keys.empty() && n.keys.back() == k.node_) {
            n.values.back() |= v;
            continue;
        }
        n.keys.push_back(k.node_);
        n.values.push_back(v);
        n.rank = std::max(n.rank, k.rank() + 1);
    }
    if (n.rank > max_rank_)
        throw DomainError("A-set rank " + std::to_string(n.rank) + " exceeds max rank " +
                          std::to_string(max_rank_));
    std::size_t h = 0x84222325u;
    for (std::size_t i = 0; i < n.keys.size(); ++i)
        h = (h * 0x100000001b3ull) ^ (n.keys[i]->id * 0x9e3779b97f4a7c15ull) ^ n.values[i].hash();
    n.hash = h;
    {
        std::shared_lock lk(intern_mu_);
        if (auto it = index_.find(&n); it != index_.end())
            return {this, *it};
    }
    std::unique_lock lk(intern_mu_);
    if (auto it = index_.find(&n); it != index_.end())
        return {this, *it};
    if (nodes_.size() >= (1u << 30))
        throw BudgetError("A-set universe is full");
    n.id = static_cast<uint32_t>(nodes_.size());
    nodes_.push_back(std::move(n));
    index_.insert(&nodes_.back());
    return {this, &nodes_.back()};
}

AtomSet Universe::mem(const ANode* x, const ANode* X)
{
    uint64_t key = (uint64_t{0} << 60) | (uint64_t{x->id} << 30) | X->id;
    {
        std::shared_lock lk(memo_mu_);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
    }
    AtomSet r(alg_.atom_count());
    for (std::size_t i = 0; i < X->keys.size() && !r.all(); ++i) {
        if (X->values[i].none())
            continue;
        r |= eq(x, X->keys[i]) & X->values[i];
    }
    std::unique_lock lk(memo_mu_);
    memo_.emplace(key, r);
    return r;
}

AtomSet Universe::sub(const ANode* X, const ANode* Y)
{
    uint64_t key = (uint64_t{1} << 60) | (uint64_t{X->id} << 30) | Y->id;
    {
        std::shared_lock lk(memo_mu_);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
    }
    AtomSet r(alg_.atom_count(), true);
    for (std::size_t i = 0; i < X->keys.size() && !r.none(); ++i) {
        if (X->values[i].none())
            continue;
        r &= ~X->values[i] | mem(X->keys[i], Y);
    }
    std::unique_lock lk(memo_mu_);
    memo_.emplace(key, r);
    return r;
}

AtomSet Universe::eq(const ANode* x, const ANode* y)
{
    if (x->id > y->id)
        std::swap(x, y);
    uint64_t key = (uint64_t{2} << 60) | (uint64_t{x->id} << 30) | y->id;
    {
        std::shared_lock lk(memo_mu_);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
    }
    AtomSet r = sub(x, y);
    if (!r.none())
        r &= sub(y, x);
    std::unique_lock lk(memo_mu_);
    memo_.emplace(key, r);
    return r;
}

AtomSet Universe::truth_atoms(TruthKind kind, const AValuedSet& lhs, const AValuedSet& rhs)
{
    own(lhs);
    own(rhs);
    switch (kind) {
    case TruthKind::Membership: return mem(lhs.node_, rhs.node_);
    case TruthKind::Subset: return sub(lhs.node_, rhs.node_);
    case TruthKind::Equality: return eq(lhs.node_, rhs.node_);
    }
    throw DomainError("unknown truth kind");
}

AlgebraElement Universe::truth(TruthKind kind, const AValuedSet& lhs, const AValuedSet& rhs)
{
    return alg_.element(truth_atoms(kind, lhs, rhs));
}

AlgebraElement truth(TruthKind kind, const AValuedSet& lhs, const AValuedSet& rhs)
{
    if (!lhs.valid())
        throw DomainError("null A-set handle");
    return lhs.universe().truth(kind, lhs, rhs);
}

} // namespace bvd

#include <bvd/setoid.hpp>

#include <map>

namespace bvd {

Setoid::Setoid(Algebra alg, std::vector<std::string> labels, std::vector<AtomSet> eq_table,
               Gluer gluer)
{
    if (eq_table.size() != labels.size() * labels.size())
        throw DomainError("equality table has wrong size");
    for (auto& e : eq_table)
        if (e.size() != alg.atom_count())
            throw DomainError("equality value from a different algebra");
    s_ = std::make_shared<State>(
        State{std::move(alg), std::move(labels), std::move(eq_table), std::move(gluer)});
}

Setoid Setoid::from_function(Algebra alg, std::vector<std::string> labels,
                             const std::function<AtomSet(std::size_t, std::size_t)>& eq,
                             Gluer gluer)
{
    std::size_t n = labels.size();
    std::vector<AtomSet> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table[i * n + j] = eq(i, j);
    return Setoid(std::move(alg), std::move(labels), std::move(table), std::move(gluer));
}

const AtomSet& Setoid::eq_atoms(std::size_t i, std::size_t j) const
{
    if (i >= size() || j >= size())
        throw DomainError("carrier index out of range");
    return s_->eq[i * size() + j];
}

AlgebraElement Setoid::eq(std::size_t i, std::size_t j) const
{
    return s_->alg.element(eq_atoms(i, j));
}

std::optional<std::string> Setoid::violation() const
{
    std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (eq_atoms(i, j) != eq_atoms(j, i))
                return "symmetry fails at (" + label(i) + ", " + label(j) + ")";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            AtomSet ij = eq_atoms(i, j);
            if (ij.none())
                continue;
            for (std::size_t k = 0; k < n; ++k)
                if (!(ij & eq_atoms(j, k)).subset_of(eq_atoms(i, k)))
                    return "transitivity fails at (" + label(i) + ", " + label(j) + ", " +
                           label(k) + ")";
        }
    return std::nullopt;
}

std::size_t glue(const Setoid& s, std::span<const GlueItem> family)
{
    if (!s.complete())
        throw DomainError("setoid is not flagged complete");
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].x >= s.size())
            throw DomainError("carrier index out of range");
        if (!(family[i].a <= s.extent(family[i].x)))
            throw DomainError("family member " + std::to_string(i) + " exceeds its extent");
        for (std::size_t j = 0; j < i; ++j)
            if (!(family[i].a & family[j].a).is_bottom())
                throw DomainError("family is not pairwise disjoint (members " +
                                  std::to_string(j) + ", " + std::to_string(i) + ")");
    }
    std::size_t x = s.gluer()(family);
    for (auto& item : family)
        if (!(item.a <= s.eq(item.x, x)))
            throw DomainError("gluing contract violated");
    return x;
}

std::size_t glue_compatible(const Setoid& s, std::span<const GlueItem> family)
{
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!((family[i].a & family[j].a) <= s.eq(family[i].x, family[j].x)))
                throw DomainError("family is not compatible (members " + std::to_string(j) +
                                  ", " + std::to_string(i) + ")");
    std::vector<GlueItem> disjoint;
    AlgebraElement seen = s.algebra().bottom();
    for (auto& item : family) {
        disjoint.push_back({item.a & ~seen, item.x});
        seen = seen | item.a;
    }
    std::size_t x = glue(s, disjoint);
    for (auto& item : family)
        if (!(item.a <= s.eq(item.x, x)))
            throw DomainError("gluing contract violated");
    return x;
}

std::size_t OidSetoid::index_of(const AValuedSet& x) const
{
    for (std::size_t i = 0; i < carrier.size(); ++i)
        if (carrier[i] == x)
            return i;
    throw DomainError("element is not in the carrier");
}

namespace {

OidSetoid make_oid(const AValuedSet& X)
{
    Universe& u = X.universe();
    OidSetoid out{Setoid(u.algebra(), {}, {}), X.domain()};
    std::vector<std::string> labels;
    std::vector<AtomSet> in;
    for (auto& x : out.carrier) {
        labels.push_back(x.to_string());
        in.push_back(u.truth_atoms(TruthKind::Membership, x, X));
    }
    out.setoid = Setoid::from_function(
        u.algebra(), std::move(labels),
        [&](std::size_t i, std::size_t j) {
            return in[i] & in[j] &
                   u.truth_atoms(TruthKind::Equality, out.carrier[i], out.carrier[j]);
        });
    return out;
}

} // namespace

OidSetoid oid(const AValuedSet& X) { return make_oid(X); }

OidSetoid oid_power_set(const AValuedSet& X, std::size_t budget)
{
    AValuedSet P = power_set(X, budget);
    OidSetoid out = make_oid(P);
    // the gluer closes over the base set X, not P
    auto carrier = out.carrier;
    auto index = std::make_shared<std::map<uint32_t, std::size_t>>();
    for (std::size_t i = 0; i < carrier.size(); ++i)
        (*index)[carrier[i].id()] = i;
    Setoid::Gluer gluer = [X, carrier, index](std::span<const GlueItem> family) -> std::size_t {
        Universe& u = X.universe();
        std::vector<std::pair<AValuedSet, AtomSet>> entries;
        for (std::size_t t = 0; t < X.size(); ++t) {
            AtomSet v(u.algebra().atom_count());
            for (auto& item : family)
                v |= item.a.atoms() & carrier[item.x].at(X.key(t)).atoms();
            entries.emplace_back(X.key(t), std::move(v));
        }
        AValuedSet x = u.make_raw(std::move(entries));
        auto it = index->find(x.id());
        if (it == index->end())
            throw DomainError("glued element left the carrier");
        return it->second;
    };
    std::size_t n = carrier.size();
    std::vector<std::string> labels;
    std::vector<AtomSet> table;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(out.setoid.label(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table.push_back(out.setoid.eq_atoms(i, j));
    out.setoid = Setoid(X.universe().algebra(), std::move(labels), std::move(table), gluer);
    return out;
}

Setoid product(const Setoid& s, const Setoid& t)
{
    if (s.algebra() != t.algebra())
        throw DomainError("setoids over different algebras");
    std::size_t m = t.size();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < m; ++j)
            labels.push_back("(" + s.label(i) + ", " + t.label(j) + ")");
    Setoid::Gluer gluer;
    if (s.complete() && t.complete())
        gluer = [s, t, m](std::span<const GlueItem> family) {
            std::vector<GlueItem> left, right;
            for (auto& item : family) {
                left.push_back({item.a, item.x / m});
                right.push_back({item.a, item.x % m});
            }
            return glue(s, left) * m + glue(t, right);
        };
    return Setoid::from_function(
        s.algebra(), std::move(labels),
        [&](std::size_t a, std::size_t b) {
            return s.eq_atoms(a / m, b / m) & t.eq_atoms(a % m, b % m);
        },
        std::move(gluer));
}

std::vector<AlgebraElement> subset_predicate(const OidSetoid& X, const AValuedSet& S)
{
    std::vector<AlgebraElement> out;
    for (auto& x : X.carrier)
        out.push_back(truth(TruthKind::Membership, x, S));
    return out;
}

std::optional<std::string> predicate_violation(const Setoid& X,
                                               std::span<const AlgebraElement> pred)
{
    if (pred.size() != X.size())
        throw DomainError("predicate size does not match carrier");
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (!(pred[i] <= X.extent(i)))
            return "S(x) exceeds extent at " + X.label(i);
        for (std::size_t j = 0; j < X.size(); ++j)
            if (!(X.eq(i, j) <= iff(pred[i], pred[j])))
                return "S does not respect equality at (" + X.label(i) + ", " + X.label(j) + ")";
    }
    return std::nullopt;
}

Relation identity_relation(const Setoid& X)
{
    Relation r{X, X, {}};
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = 0; j < X.size(); ++j)
            r.values.push_back(X.eq(i, j));
    return r;
}

std::optional<std::string> functional_violation(const Relation& R)
{
    const Setoid &X = R.source, &Y = R.target;
    if (R.values.size() != X.size() * Y.size())
        throw DomainError("relation size does not match setoids");
    if (auto v = predicate_violation(product(X, Y), R.values))
        return "not a predicate on X x Y: " + *v;
    const Algebra& alg = X.algebra();
    for (std::size_t x = 0; x < X.size(); ++x) {
        AlgebraElement total = alg.bottom();
        for (std::size_t y1 = 0; y1 < Y.size(); ++y1) {
            total = total | R.at(x, y1);
            for (std::size_t y2 = 0; y2 < Y.size(); ++y2)
                if (!((R.at(x, y1) & R.at(x, y2)) <= Y.eq(y1, y2)))
                    return "not single-valued at x=" + X.label(x) + ": (" + Y.label(y1) + ", " +
                           Y.label(y2) + ")";
        }
        if (!(X.extent(x) <= total))
            return "not total at x=" + X.label(x);
    }
    return std::nullopt;
}

SetoidHom make_hom(const Setoid& source, const Setoid& target, std::vector<std::size_t> map)
{
    if (source.algebra() != target.algebra())
        throw DomainError("setoids over different algebras");
    if (map.size() != source.size())
        throw DomainError("map size does not match source carrier");
    for (auto y : map)
        if (y >= target.size())
            throw DomainError("map leaves the target carrier");
    for (std::size_t i = 0; i < source.size(); ++i)
        for (std::size_t j = 0; j < source.size(); ++j)
            if (!(source.eq(i, j) <= target.eq(map[i], map[j])))
                throw DomainError("map does not respect equality at (" + source.label(i) + ", " +
                                  source.label(j) + ")");
    return {source, target, std::move(map)};
}

AlgebraElement hom_distance(const SetoidHom& f, const SetoidHom& g)
{
    if (!(f.source == g.source) || !(f.target == g.target))
        throw DomainError("homs have different source or target");
    AlgebraElement r = f.source.algebra().top();
    for (std::size_t x = 0; x < f.source.size(); ++x)
        r = r & implies(f.source.extent(x), f.target.eq(f.map[x], g.map[x]));
    return r;
}

bool hom_equivalent(const SetoidHom& f, const SetoidHom& g) { return hom_distance(f, g).is_top(); }

Relation graph(const SetoidHom& f)
{
    Relation r{f.source, f.target, {}};
    for (std::size_t x = 0; x < f.source.size(); ++x)
        for (std::size_t y = 0; y < f.target.size(); ++y)
            r.values.push_back(f.source.extent(x) & f.target.eq(f.map[x], y));
    return r;
}

SetoidHom relation_to_function(const Relation& R)
{
    if (!R.target.complete())
        throw DomainError("target setoid is not flagged complete");
    if (auto v = functional_violation(R))
        throw DomainError("relation is not functional: " + *v);
    std::vector<std::size_t> map;
    for (std::size_t x = 0; x < R.source.size(); ++x) {
        std::vector<GlueItem> family;
        for (std::size_t y = 0; y < R.target.size(); ++y)
            if (!R.at(x, y).is_bottom())
                family.push_back({R.at(x, y), y});
        map.push_back(glue_compatible(R.target, family));
    }
    return make_hom(R.source, R.target, std::move(map));
}

std::optional<std::string> poset_violation(const APoset& P)
{
    std::size_t n = P.labels.size();
    if (P.leq.size() != n * n)
        throw DomainError("order table has wrong size");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const AtomSet& ab = P.leq[a * n + b];
            if (!ab.subset_of(P.leq[a * n + a] & P.leq[b * n + b]))
                return "order value exceeds extents at (" + P.labels[a] + ", " + P.labels[b] + ")";
            for (std::size_t c = 0; c < n; ++c)
                if (!(ab & P.leq[b * n + c]).subset_of(P.leq[a * n + c]))
                    return "transitivity fails at (" + P.labels[a] + ", " + P.labels[b] + ", " +
                           P.labels[c] + ")";
        }
    return std::nullopt;
}

Setoid poset_to_setoid(const APoset& P, Setoid::Gluer gluer)
{
    if (auto v = poset_violation(P))
        throw DomainError("not an A-poset: " + *v);
    std::size_t n = P.labels.size();
    return Setoid::from_function(
        P.alg, P.labels,
        [&](std::size_t i, std::size_t j) { return P.leq[i * n + j] & P.leq[j * n + i]; },
        std::move(gluer));
}

SetoidHom monotone_hom(const APoset& P, const Setoid& ps, const APoset& Q, const Setoid& qs,
                       std::vector<std::size_t> map)
{
    std::size_t n = P.labels.size(), m = Q.labels.size();
    if (map.size() != n)
        throw DomainError("map size does not match source carrier");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (map[i] >= m || map[j] >= m)
                throw DomainError("map leaves the target carrier");
            if (!P.leq[i * n + j].subset_of(Q.leq[map[i] * m + map[j]]))
                throw DomainError("map is not A-monotone at (" + P.labels[i] + ", " +
                                  P.labels[j] + ")");
        }
    return make_hom(ps, qs, std::move(map));
}

} // namespace bvd

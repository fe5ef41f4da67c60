#pragma once

#include <bvd/engeler.hpp>
#include <bvd/setoid.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bvd {

// 2^k x 2^k coin flips. Atom x carries side-1 bit n at bit n of x and side-2 bit n at bit k+n.
class SampleSpace {
public:
    explicit SampleSpace(unsigned k, unsigned max_k = 12);

    unsigned bits() const { return k_; }
    std::size_t atom_count() const { return std::size_t{1} << (2 * k_); }
    const Algebra& algebra() const { return alg_; }

    bool bit(std::size_t atom, int side, unsigned n) const;
    // D_{side,n,b}
    AlgebraElement event(int side, unsigned n, bool b) const;
    std::string prefix(std::size_t atom, int side) const;

private:
    unsigned k_;
    Algebra alg_;
};

template <class T>
struct RandomSubset {
    const SampleSpace* space = nullptr;
    std::vector<std::vector<T>> values; // per atom, sorted and unique

    static RandomSubset constant(const SampleSpace& s, std::vector<T> v)
    {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return {&s, std::vector<std::vector<T>>(s.atom_count(), v)};
    }
    bool operator==(const RandomSubset& o) const { return space == o.space && values == o.values; }
};

// support map; bottom values are never stored
template <class T>
using AValuedSubset = std::map<T, AtomSet>;

enum class OrderKind { Leq, Eq };

template <class T>
AlgebraElement rv_order_event(OrderKind kind, const RandomSubset<T>& a, const RandomSubset<T>& b)
{
    if (a.space != b.space || !a.space)
        throw DomainError("random subsets over different spaces");
    AtomSet r(a.space->atom_count());
    for (std::size_t x = 0; x < r.size(); ++x) {
        auto& u = a.values[x];
        auto& v = b.values[x];
        bool le = std::includes(v.begin(), v.end(), u.begin(), u.end());
        if (kind == OrderKind::Eq)
            le = u == v;
        r.set(x, le);
    }
    return a.space->algebra().element(std::move(r));
}

template <class T>
AValuedSubset<T> gx(const RandomSubset<T>& a)
{
    AValuedSubset<T> out;
    std::size_t n = a.space->atom_count();
    for (std::size_t x = 0; x < n; ++x)
        for (auto& y : a.values[x]) {
            auto it = out.try_emplace(y, n).first;
            it->second.set(x);
        }
    return out;
}

template <class T>
RandomSubset<T> gx_inv(const AValuedSubset<T>& s, const SampleSpace& space)
{
    RandomSubset<T> a{&space, std::vector<std::vector<T>>(space.atom_count())};
    for (auto& [y, atoms] : s) {
        if (atoms.size() != space.atom_count())
            throw DomainError("A-valued subset over a different algebra");
        for (std::size_t x = atoms.first(); x < atoms.size(); x = atoms.next(x + 1))
            a.values[x].push_back(y);
    }
    return a;
}

// ||S <= T|| for A-valued subsets of a check set: meet over y of S(y) => T(y)
template <class T>
AlgebraElement avs_subset(const AValuedSubset<T>& s, const AValuedSubset<T>& t, const Algebra& alg)
{
    AtomSet r(alg.atom_count(), true);
    for (auto& [y, atoms] : s) {
        auto it = t.find(y);
        r &= it == t.end() ? ~atoms : (~atoms | it->second);
    }
    return alg.element(std::move(r));
}

RandomSubset<EElem> rv_apply(const RandomSubset<EElem>& a, const RandomSubset<EElem>& b);
// (F.X)(q) = join over (K,q) in supp F of F((K,q)) & meet_{k in K} X(k)
AValuedSubset<EElem> avs_apply(const AValuedSubset<EElem>& f, const AValuedSubset<EElem>& x,
                               const Algebra& alg);

struct RandomSets {
    AValuedSubset<unsigned> s1, s2;
};
RandomSets random_sets(const SampleSpace& space);
AlgebraElement random_set_value(const SampleSpace& space, int side, unsigned n);

// direction 1: S1 = f^-1(S2); direction 2: S2 = f^-1(S1)
AlgebraElement agreement_event(const std::vector<unsigned>& f, const SampleSpace& space,
                               int direction = 1);
// exact measure over the whole window; cross-checked against 2^-|I| on the window I
Rational agreement_measure(const std::vector<unsigned>& f, const std::vector<unsigned>& injective,
                           const SampleSpace& space, int direction = 1);
// "0:1,1:0" -> f; greedy largest injective window
std::vector<unsigned> parse_map(const std::string& text, unsigned k);
std::vector<unsigned> injective_window(const std::vector<unsigned>& f);

// L0 order on a list of random subsets
APoset l0_poset(const SampleSpace& space, const std::vector<RandomSubset<unsigned>>& carrier);
// all random subsets of {0..u-1}, complete; index = sum over atoms of mask * (2^u)^atom
Setoid l0_setoid(const SampleSpace& space, unsigned universe);
RandomSubset<unsigned> l0_element(const SampleSpace& space, unsigned universe, std::size_t index);

struct KleeneCandidate {
    std::string term;
    std::vector<unsigned> induced_f;
    int direction;
    Rational measure;
    unsigned disagreement_index;
};

struct KleeneDiscard {
    std::string term;
    std::vector<unsigned> induced_f; // values at or past k leave the window
};

struct KleeneReport {
    unsigned k;
    unsigned long seed;
    unsigned size;
    unsigned fuel;
    std::vector<KleeneCandidate> candidates;
    std::vector<KleeneDiscard> discarded;
    Rational union_measure;
    std::size_t chosen_atom;
    std::string t1_prefix, t2_prefix;
    std::vector<std::size_t> spot_checked_atoms;
    int witness_constants_version;
    std::string to_json() const;
};

struct KleeneCandidateTerm {
    std::string source; // sugar syntax
    Term term;
};
// lambda m. E for E of size <= s over m, #c, succ, pred, if, iszero, num_j
std::vector<KleeneCandidateTerm> kleene_candidates(unsigned k, unsigned size);

// per-atom witness test: t*/f* in d.[[#n]] against the atom's bits
Verdict oracle_bit(const SampleSpace& space, std::size_t atom, int side, unsigned n,
                   unsigned fuel, unsigned fuel_inner);

KleeneReport kleene_post(const SampleSpace& space, unsigned size, unsigned fuel,
                         unsigned long seed, unsigned long steps = 100000);

} // namespace bvd

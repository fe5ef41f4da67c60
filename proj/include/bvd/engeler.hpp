#pragma once

#include <bvd/lambda.hpp>

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace bvd {

namespace detail {
struct ENode;
}

// Element of E: base `*` or a pair (K, q). Interned, so == is structural equality.
class EElem {
public:
    EElem(); // base
    static EElem base() { return EElem(); }
    static EElem pair(std::vector<EElem> children, EElem result);

    bool is_base() const;
    const std::vector<EElem>& children() const;
    EElem result() const;
    unsigned rank() const;
    uint32_t id() const;

    std::string to_string() const;
    static EElem parse(const std::string& text);

    bool operator==(const EElem& o) const { return n_ == o.n_; }
    bool operator!=(const EElem& o) const { return n_ != o.n_; }
    // rank, base before pair, |K|, K lexicographically, result
    std::strong_ordering operator<=>(const EElem& o) const;

private:
    explicit EElem(const detail::ENode* n) : n_(n) {}
    const detail::ENode* n_;
};

struct EElemHash {
    std::size_t operator()(const EElem& e) const { return e.id(); }
};

// sorted, duplicate free
using ElemSet = std::vector<EElem>;
ElemSet make_set(std::vector<EElem> elems);
bool contains(const ElemSet& s, const EElem& e);
bool subset(const ElemSet& a, const ElemSet& b);
ElemSet set_union(const ElemSet& a, const ElemSet& b);
std::string to_string(const ElemSet& s);
// "{*, ([*],*)}"
ElemSet parse_set(const std::string& text);

ElemSet apply_fin(const ElemSet& F, const ElemSet& X);

struct Step {
    ElemSet domain, image;
};
// step function f(X) = union of image_i over domain_i <= X
ElemSet eval_step(const std::vector<Step>& f, const ElemSet& X);
ElemSet lam_step(const std::vector<Step>& f);

bool way_below(const ElemSet& S, const ElemSet& T);

enum class Verdict { Yes, No, Unknown };
const char* to_string(Verdict v);

class Valuation;

// A subset of E given finitely, by a term denotation or as a numeral oracle.
class SemanticSet {
public:
    enum class Kind { Finite, TermDen, Oracle };

    static std::shared_ptr<const SemanticSet> finite(ElemSet s);
    static std::shared_ptr<const SemanticSet> term(Term m, const Valuation& rho);
    // d = {(K,q) | n in window, t_star in [[Num_n]].K, q in [[true or false]]}
    static std::shared_ptr<const SemanticSet> oracle(std::map<unsigned, bool> window,
                                                     unsigned fuel_inner, EElem t_star);

    Kind kind() const { return kind_; }
    const ElemSet& elements() const { return elems_; }
    const std::map<unsigned, bool>& window() const { return window_; }
    unsigned fuel_inner() const { return fuel_inner_; }

    Verdict contains(const EElem& e, unsigned fuel) const;
    ElemSet enumerate(unsigned fuel) const;

    struct Impl;

private:
    SemanticSet() = default;
    Kind kind_ = Kind::Finite;
    ElemSet elems_;
    std::shared_ptr<const Impl> impl_; // closure for TermDen
    std::map<unsigned, bool> window_;
    unsigned fuel_inner_ = 0;
    EElem t_star_;

    // fuel-indexed answers for argument-free membership
    struct CacheEntry {
        unsigned yes_at = ~0u, no_at = ~0u;
        int unknown_to = -1;
    };
    mutable std::mutex cache_mu_;
    mutable std::unordered_map<uint32_t, CacheEntry> cache_;

    friend class Search;
    friend class SearchAccess;
};

using SemPtr = std::shared_ptr<const SemanticSet>;

// persistent name -> SemanticSet map
class Valuation {
public:
    Valuation() = default;
    Valuation bind(const std::string& name, SemPtr value) const;
    const SemanticSet* lookup(const std::string& name) const;
    SemPtr lookup_ptr(const std::string& name) const;
    bool empty() const { return !head_; }

    struct Node {
        std::string name;
        SemPtr value;
        std::shared_ptr<const Node> next;
    };

private:
    explicit Valuation(std::shared_ptr<const Node> h) : head_(std::move(h)) {}
    std::shared_ptr<const Node> head_;
    friend class Search;
};

struct MemberResult {
    Verdict verdict = Verdict::Unknown;
    std::vector<std::string> trace; // derivation of a Yes, one rule per line
};

MemberResult denote_member(const Term& m, const Valuation& rho, const EElem& e, unsigned fuel,
                           bool want_trace = false);
ElemSet denote_enumerate(const Term& m, const Valuation& rho, unsigned fuel);

// candidate K for lambda enumeration: subsets of size <= 2 of {*, ([],*), ([*],*)}
const std::vector<ElemSet>& enumeration_domains();

// t* in [[true]] \ [[false]], f* in [[false]] \ [[true]] and per-numeral fingerprints
struct CorpusEntry {
    std::string term;
    EElem elem;
    unsigned fuel; // least fuel giving Yes
};

struct WitnessConstants {
    int version = 0;
    EElem t_star, f_star;
    unsigned scan_fuel = 0;
    std::vector<EElem> numeral_fingerprints; // index n
    unsigned fingerprint_fuel = 0;
    unsigned numeral_fuel = 0; // num_m #n queries, m, n <= 5
    unsigned oracle_fuel_inner = 0;
    unsigned oracle_fuel = 0;
    std::vector<CorpusEntry> corpus;
};

// constants embedded at build time
const WitnessConstants& witnesses();
WitnessConstants compute_witnesses(int version);
std::string witnesses_to_json(const WitnessConstants& w);
WitnessConstants witnesses_from_json(const std::string& text);

// the oracle of a finite window, using the embedded witnesses
SemPtr oracle_set(std::map<unsigned, bool> window, unsigned fuel_inner);

} // namespace bvd

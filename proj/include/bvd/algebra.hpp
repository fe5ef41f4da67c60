#pragma once

#include <bvd/errors.hpp>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bvd {

using Rational = mpq_class;

// always num/den, lowest terms
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

// Set of atom indices below a fixed size. One inline word up to 64 atoms.
class AtomSet {
public:
    AtomSet() = default;
    explicit AtomSet(std::size_t size, bool full = false);

    std::size_t size() const { return size_; }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true);
    std::size_t count() const;
    bool none() const;
    bool all() const;

    AtomSet& operator&=(const AtomSet& o);
    AtomSet& operator|=(const AtomSet& o);
    AtomSet operator&(const AtomSet& o) const { AtomSet r = *this; return r &= o; }
    AtomSet operator|(const AtomSet& o) const { AtomSet r = *this; return r |= o; }
    AtomSet operator~() const;
    bool subset_of(const AtomSet& o) const;

    bool operator==(const AtomSet& o) const { return size_ == o.size_ && words_ == o.words_; }
    std::strong_ordering operator<=>(const AtomSet& o) const;

    // index of least set bit at or after i, or size()
    std::size_t next(std::size_t i) const;
    std::size_t first() const { return next(0); }
    std::vector<std::size_t> indices() const;
    std::size_t hash() const;

    const uint64_t* words() const { return words_.data(); }
    std::size_t word_count() const { return words_.size(); }
    uint64_t* words() { return words_.data(); }

private:
    void trim();
    std::size_t size_ = 0;
    boost::container::small_vector<uint64_t, 1> words_;
};

class AlgebraElement;

class Algebra {
public:
    // weights, if present, must be positive and sum to 1
    static Algebra make(std::size_t atom_count,
                        std::optional<std::vector<Rational>> weights = std::nullopt);
    static Algebra uniform(std::size_t atom_count);

    std::size_t atom_count() const;
    bool has_measure() const;
    const std::vector<Rational>& weights() const;

    AlgebraElement top() const;
    AlgebraElement bottom() const;
    AlgebraElement atom(std::size_t i) const;
    AlgebraElement element(AtomSet atoms) const;
    AlgebraElement element(std::initializer_list<std::size_t> atoms) const;
    std::vector<AlgebraElement> all_elements() const; // atom_count <= 20

    Rational measure(const AtomSet& atoms) const;

    bool operator==(const Algebra& o) const { return impl_ == o.impl_; }
    bool operator!=(const Algebra& o) const { return impl_ != o.impl_; }

    struct Impl;

private:
    explicit Algebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
    friend class AlgebraElement;
};

class AlgebraElement {
public:
    AlgebraElement(Algebra alg, AtomSet atoms);

    const Algebra& algebra() const { return alg_; }
    const AtomSet& atoms() const { return atoms_; }
    bool is_top() const { return atoms_.all(); }
    bool is_bottom() const { return atoms_.none(); }

    AlgebraElement operator&(const AlgebraElement& o) const;
    AlgebraElement operator|(const AlgebraElement& o) const;
    AlgebraElement operator~() const;
    bool operator<=(const AlgebraElement& o) const;
    bool operator==(const AlgebraElement& o) const;

    Rational measure() const;
    std::string to_string() const; // "top", "bot" or "[0,2]"

private:
    void same(const AlgebraElement& o) const;
    Algebra alg_;
    AtomSet atoms_;
};

AlgebraElement implies(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement iff(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement big_meet(const Algebra& alg, std::span<const AlgebraElement> family);
AlgebraElement big_join(const Algebra& alg, std::span<const AlgebraElement> family);

enum class AlgOp { Meet, Join, Not, Implies, Iff, BigMeet, BigJoin };
// uniform entry point; binary ops take exactly two args, not one
AlgebraElement alg_eval(const Algebra& alg, AlgOp op, std::span<const AlgebraElement> args);

AlgebraElement parse_element(const Algebra& alg, const std::string& text);
// "4" or "4:1/2,1/4,1/8,1/8" or "4:uniform"
Algebra parse_algebra(const std::string& text);

} // namespace bvd

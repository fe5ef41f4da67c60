#pragma once

#include <compare>
#include <string>
#include <vector>

namespace bvd {

// Hereditarily finite classical set; elements kept sorted and unique.
class HfSet {
public:
    HfSet() = default;
    explicit HfSet(std::vector<HfSet> elems);

    const std::vector<HfSet>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    unsigned rank() const { return rank_; }

    bool contains(const HfSet& x) const;
    bool subset_of(const HfSet& o) const;
    HfSet with(const HfSet& x) const;

    HfSet power_set() const;

    static HfSet von_neumann(unsigned n);
    // bit i of n set  <=>  ackermann(i) is an element
    static HfSet ackermann(unsigned long n);
    static std::vector<HfSet> all_of_rank_below(unsigned r); // r <= 4

    std::string to_string() const;
    static HfSet parse(const std::string& text);

    bool operator==(const HfSet& o) const { return elems_ == o.elems_; }
    std::strong_ordering operator<=>(const HfSet& o) const;

private:
    std::vector<HfSet> elems_;
    unsigned rank_ = 0;
};

} // namespace bvd

#pragma once

// Independent reference evaluators used by the tests and the acceptance run.

#include <bvd/bvset.hpp>
#include <bvd/classical.hpp>
#include <bvd/delta0.hpp>
#include <bvd/engeler.hpp>
#include <bvd/randvar.hpp>

#include <map>
#include <random>

namespace bvd::verify {

// the classical set seen at one atom
HfSet project(const AValuedSet& x, std::size_t atom);
// truth value assembled atom by atom from classical projections
AtomSet naive_truth(TruthKind kind, const AValuedSet& a, const AValuedSet& b);

// every A-set of rank <= 2 with at most 2 entries per domain, bottom values included
std::vector<AValuedSet> small_asets(Universe& u);

using HfEnv = std::map<std::string, HfSet>;
bool classical_delta0(const Delta0& phi, const HfEnv& env);
// depth <= max_depth over constants from pool
Delta0 random_delta0(std::mt19937_64& rng, Universe& u, const std::vector<HfSet>& pool,
                     unsigned max_depth);

// atom count over all 4^k atoms
Rational naive_agreement(const std::vector<unsigned>& f, unsigned k, int direction);

// union of images over domains contained in X
ElemSet naive_step(const std::vector<Step>& f, const ElemSet& X);
// {x | x = * or rank <= r}
std::vector<EElem> elems_up_to_rank(unsigned r);
ElemSet random_elem_set(std::mt19937_64& rng, const std::vector<EElem>& pool,
                        std::size_t max_size);

// fresh random subset with values drawn from {0..universe-1}
RandomSubset<unsigned> random_rv(std::mt19937_64& rng, const SampleSpace& s, unsigned universe);

} // namespace bvd::verify

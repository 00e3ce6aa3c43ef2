/**
 * Bounded search for triviality of a finitely presented group: Tietze
 * elimination of generators followed by Todd-Coxeter enumeration of the
 * cosets of a subgroup (by default the trivial one).
 *
 * Both stages are deterministic and bounded; the search answers Unknown
 * rather than running past its limits.
 */
#ifndef STRATIFOLD_GROUP_SEARCH_HPP
#define STRATIFOLD_GROUP_SEARCH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stratifold/presentation.hpp"

namespace stratifold {

struct SearchLimits
{
    std::size_t max_cosets = 100000;
    std::size_t max_tietze_steps = 10000;
};

/// Free and cyclic reduction of every relator, dropping empty relators and
/// exact duplicates; then repeated elimination of a generator occurring
/// exactly once in some relator (shortest such relator first).
GroupPresentation tietze_simplify(const GroupPresentation& p, std::size_t max_steps,
                                  std::size_t* steps_used = nullptr);

/// Index of the subgroup generated by `subgroup` (the group order for the
/// trivial subgroup), or nullopt when the enumeration exceeds max_cosets.
std::optional<std::size_t> coset_enumerate(const GroupPresentation& p, std::size_t max_cosets,
                                           const std::vector<Word>& subgroup = {});

enum class Triviality
{
    Trivial,
    Nontrivial,
    Unknown
};

struct TrivialityResult
{
    Triviality answer = Triviality::Unknown;
    std::string detail;
};

/// True when adding g^k (for some generator g and 2 <= k <= 6) yields a
/// finite group whose order exceeds that of its abelianization; such a
/// group is not a quotient of Z.
bool has_nonabelian_finite_quotient(const GroupPresentation& p, const SearchLimits& limits = {});

/// True when Tietze elimination leaves one generator and no relators, or
/// when the abelianization is Z and one generator has index 1.
bool presents_infinite_cyclic(const GroupPresentation& p, const SearchLimits& limits = {});

TrivialityResult decide_trivial(const GroupPresentation& p, const SearchLimits& limits = {});

}  // namespace stratifold

#endif

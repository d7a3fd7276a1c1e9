#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fquandle/core.hpp"

namespace fq {

/// A mapping array between two FTables.
struct Morphism {
    int source_order = 0;
    int target_order = 0;
    std::vector<int> map;

    bool operator==(const Morphism&) const = default;
};

/// True iff map satisfies phi(x*y) = phi(x)*phi(y) and phi(f(x)) = f(phi(x))
/// for all pairs (the second is the diagonal consequence of the first,
/// asserted explicitly).  Throws input_error on size mismatch or
/// out-of-range entries.
bool is_homomorphism(const FTable& src, const FTable& dst, const std::vector<int>& map);

/// All bijective self-homomorphisms of t, found by backtracking over
/// partial maps with early pruning, sorted lexicographically by map array.
std::vector<Morphism> automorphism_group(const FTable& t);

/// The twist a*_phi b = phi(a*b).  phi must be an automorphism of t
/// (checked; throws input_error with a witness otherwise).
FTable twist(const FTable& t, const Morphism& phi);

/// Lexicographically-first bijective homomorphism a -> b, if any.
std::optional<Morphism> find_isomorphism(const FTable& a, const FTable& b);

/// Searches all phi in automorphism_group(a); if twist(a, phi) is
/// isomorphic to b via psi, returns (phi, psi).
std::optional<std::pair<Morphism, Morphism>> twisted_isomorphic(const FTable& a, const FTable& b);

/// Lexicographically smallest flattened table over all n! relabelings.
/// Relabeling by sigma sends entry (i,j) to sigma(table[sigma^-1 i][sigma^-1 j]).
/// Requires n <= 8.
FTable canonical_form(const FTable& t);

/// Applies a relabeling permutation sigma to t.
FTable relabel(const FTable& t, const std::vector<int>& sigma);

}  // namespace fq

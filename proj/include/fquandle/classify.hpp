#pragma once

#include <vector>

#include "fquandle/core.hpp"

namespace fq {

/// Default enumeration cap; order 6 requires an explicit higher cap (the CLI
/// exposes a flag and an environment-variable override).
inline constexpr int kDefaultOrderCap = 5;
inline constexpr int kMaxOrderCap = 6;

struct CatalogClass {
    std::vector<int> members;    ///< indices into Catalog::tables
    bool contains_quandle = false;  ///< f bijective (class invariant)
    bool is_latin = false;          ///< class invariant under twist/iso
    bool is_group_like = false;     ///< some member iso to an abelian group's addition table
};

/// Full census at one order: canonical isomorphism-class representatives
/// plus the twisted-isomorphism partition and per-class flags.
struct Catalog {
    int order = 0;
    std::vector<FTable> tables;  ///< pairwise non-isomorphic canonical forms, sorted
    int iso_class_count = 0;
    int twisted_class_count = 0;
    std::vector<CatalogClass> classes;
};

/// Every n x n table satisfying shelf axiom I, rack axiom II and quandle
/// axiom III, by diagonal-first backtracking with axiom-I propagation and
/// axiom-II column pruning.  Output sorted lexicographically.  Throws
/// input_error when n exceeds `cap` (or the hard cap of 6).
std::vector<FTable> enumerate_all(int n, int cap = kDefaultOrderCap);

/// Census with both partitions; "class contains a quandle" is decided by
/// "f is bijective" (bijectivity of f is constant across a twisted class).
Catalog classify(int n, int cap = kDefaultOrderCap);

/// Retains only classes whose members all have non-bijective f.
Catalog filter_no_quandle(const Catalog& c);

/// True iff the diagonal of t is a permutation.
bool f_bijective(const FTable& t);

/// Addition tables of the abelian groups of order n (Z_n, plus Z_2 x Z_2
/// when n = 4; those are all for n <= 7).
std::vector<FTable> abelian_group_tables(int n);

}  // namespace fq

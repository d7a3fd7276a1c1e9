#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fquandle/core.hpp"

namespace fq {

/// A group presentation: generator_count generators, relators as words of
/// signed generator indices (+ (i+1) for g_i, -(i+1) for g_i^{-1}).
struct Presentation {
    int generator_count = 0;
    std::vector<std::vector<int>> relators;
    /// Per-relator flag: the word freely reduces to the empty word.
    std::vector<bool> freely_trivial;
    /// Every relator has zero exponent sum in every generator (i.e. all
    /// relators die in the abelianization).
    bool all_relators_abelian_trivial = false;
};

/// The enveloping-group presentation G_X = F(X) / <x*y = f(y) x y^{-1}>:
/// n generators and n^2 relators, each the word (x*y) . y . x^{-1} . f(y)^{-1}.
/// Requires rack validation.
Presentation enveloping_presentation(const FTable& t);

/// Freely reduces a word (cancels adjacent g g^{-1} pairs).
std::vector<int> free_reduce(std::vector<int> word);

/// Text export in a computational-group-theory style:
///   F := FreeGroup(n);
///   rels := [ ... ];
std::string presentation_text(const Presentation& p);

/// Quotients by the relation x ~ x' iff exists y with x*y = f(x') and
/// y*x = f(y), closed reflexively, symmetrically and transitively, then
/// repeats until the result passes crossed validation.  Returns the crossed
/// set and the iteration count.  Throws input_error with a witness if the
/// induced operation is ill-defined on classes.
std::pair<FTable, int> quotient_crossed_set(const FTable& t);

}  // namespace fq

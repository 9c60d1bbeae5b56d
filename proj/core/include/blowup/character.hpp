#pragma once

#include <vector>

#include "blowup/laurent.hpp"
#include "blowup/marked.hpp"

namespace blowup {

// Variable sets for equivariant characters: {"t1","t2"} for a single
// Ext^1 block, {"t1","t2","e1",...,"er"} for a full tangent character.
std::vector<std::string> characterVars(int rank);

// ch Hom(S_A, S_B) = sum over (s,s') of t1^{col(s)-col(s')} t2^{row(s)-row(s')}.
LaurentPoly homMarkedCharacter(const std::vector<Box>& sa, const std::vector<Box>& sb);

enum class ExtMethod { Relevant, Subtraction };

// Character of Ext^1 between two rank-1 fixed points, in t1, t2.
// Relevant sums over the pairwise relevant boxes; Subtraction takes the
// unrestricted sums minus homMarkedCharacter. Both agree; Subtraction throws
// InternalInconsistency if a coefficient goes negative.
LaurentPoly ext1Character(const MarkedDiagram& a, const MarkedDiagram& b,
                          ExtMethod method = ExtMethod::Relevant);

// Full tangent character of a fixed point, in t1, t2, e1..er. The (alpha,
// beta) block carries e_beta e_alpha^{-1}.
LaurentPoly tangentCharacter(const FixedPoint& f);

// Tangent dimension: evaluation at all variables = 1.
long dimensionOf(const LaurentPoly& character);

// Number of weight spaces that are negative for the one-parameter subgroup
// ordering (t2 first, then e1..er, then t1). Half the cohomological degree
// of the fixed point's cell.
long morseIndex(const LaurentPoly& character, int rank);

}  // namespace blowup

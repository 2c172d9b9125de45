#pragma once

// Cluster characters.
//
// chi(M) = sum over submodules V of x^{-g(V)} x^{-g(D(M/V))}, with g(D(U))
// read off as (C^T)^{-1} dim U.  Three independent routes are provided: the
// submodule sum for thin modules, knitting the frieze along the AR quiver,
// and the projective/injective recursions, which work for any acyclic quiver
// (the Kronecker quiver included).

#include <map>
#include <span>

#include "quiverlab/laurent.hpp"
#include "quiverlab/repmod.hpp"

namespace quiverlab {

using CharacterTable = std::map<ModuleDesc, LaurentPoly>;

// Submodule sum for the thin representation on support s (identity maps on
// every in-support arrow) of an acyclic quiver.
LaurentPoly char_thin(const Quiver& q, Support s);

// chi of an interval module, or x_i for P_i[1].
LaurentPoly char_submodule(const TypeAQuiver& q, const ModuleDesc& m);

// All indecomposables and shifted projectives via char_submodule.
CharacterTable char_table(const TypeAQuiver& q);

// Knits chi(A) chi(C) = chi(B) + 1 over the AR quiver starting from the frame
// x_1..x_n; the shifted projectives must come back to the initial variables.
CharacterTable char_frieze(const TypeAQuiver& q);

// chi(P_i) = chi(rad P_i) x^{-g(D S_i)} + x_i^{-1}, rad P_i = sum of P_j over
// arrows i -> j.  Throws RecursionUngrounded on a cyclic quiver.
LaurentPoly char_projective(const Quiver& q, int i);
// chi(I_i) = chi(I_i / S_i) x^{-g(S_i)} + x_i^{-1}.
LaurentPoly char_injective(const Quiver& q, int i);

// Product of the summands' characters; the empty sum gives 1.
LaurentPoly char_direct_sum(const TypeAQuiver& q, std::span<const ModuleDesc> summands);
LaurentPoly char_direct_sum(std::size_t nvars, std::span<const LaurentPoly> factors);

// Number of submodules of the interval m with dimension vector e.
int gr_euler(const TypeAQuiver& q, const ModuleDesc& m, const DimVector& e);

}  // namespace quiverlab

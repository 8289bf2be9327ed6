#pragma once

#include <vector>

#include "pfaffcubic/poly.hpp"

namespace pfaffcubic {

/// Reduced Groebner basis (monic, autoreduced, sorted by ascending leading
/// monomial) of the ideal generated by gens. Buchberger's algorithm with the
/// sugar selection strategy and Gebauer-Moeller pair elimination.
std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& gens,
                                      const MonomialOrder& order = MonomialOrder::degrevlex());

/// Full normal form of f modulo a Groebner basis for the same order.
MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                 const MonomialOrder& order = MonomialOrder::degrevlex());

Monomial leading_monomial(const MultiPoly& f, const MonomialOrder& order);

/// Post-hoc check: every S-polynomial of the basis reduces to zero.
bool is_groebner_basis(const std::vector<MultiPoly>& basis,
                       const MonomialOrder& order = MonomialOrder::degrevlex());

}  // namespace pfaffcubic

#ifndef FLAGPAR_SRC_REALFORM_INTERNAL_HPP
#define FLAGPAR_SRC_REALFORM_INTERNAL_HPP

#include "flagpar/realform.hpp"

namespace flagpar::detail {

std::int64_t herm_partner(const RealStructure& rs, std::int64_t i);
std::int64_t j_partner(const RealStructure& rs, std::int64_t i);
/// Applies a permutation of {0..period-1} inside each block of `period`
/// consecutive indices up to region_end (everywhere when absent).
CutSet permute_blocks(const CutSet& s, std::int64_t period, const std::vector<std::int64_t>& perm,
                      std::optional<std::int64_t> region_end);
CutSet herm_image(const RealStructure& rs, const CutSet& s);
MatG herm_matrix(const RealStructure& rs, const Window& w);

/// Operator matrices (coefficients times the transposed Gram).
MatSpace<Rational> to_operators(const DualSystem& sys, const Window& w, const MatSpace<Rational>& coeffs);
/// Indices touched by the rows or columns of a space of matrices.
std::vector<Index> support(const Window& w, const MatSpace<GaussianQ>& s);

}  // namespace flagpar::detail

#endif  // FLAGPAR_SRC_REALFORM_INTERNAL_HPP

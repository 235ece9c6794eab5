#pragma once

// Birational RSK on [r] x [s] built from partial inverse rowmotions,
//     RSK = ρ⁻¹_{[r-m]x[s-m]} ∘ ... ∘ ρ⁻¹_{[r-1]x[s-1]} ∘ φ⁻¹,  m = min(r,s) - 1,
// the file-toggle procedure that computes the same map, the Greene identity
//     Π_{t<k} RSK(x)_{i-t,j-t} = w^(k)_{[i]x[j]}(x)   (i = r or j = s),
// and the recovery of x from the chain sums over [r] x [u,v] and [u,v] x [s].

#include <map>
#include <span>
#include <utility>

#include "rowmotion/dynamics.hpp"
#include "rowmotion/lgv.hpp"
#include "rowmotion/report.hpp"

namespace rowmotion {

/// RSK(x) is again a labeling of the same rectangle.
using RskImage = Labeling;

RskImage birational_rsk(const Labeling& x,
                        const ToggleAlgebra& alg = ToggleAlgebra::birational());

/// Scans the canonical linear extension: y_p = x_p ⊗ (⊕ of y below p), then
/// toggles every already-assigned cell below p in the same file, highest first.
RskImage rsk_procedure(const Labeling& x,
                       const ToggleAlgebra& alg = ToggleAlgebra::birational());
/// Same scan along an arbitrary linear extension.
RskImage rsk_procedure(const Labeling& x, const ToggleAlgebra& alg,
                       std::span<const Cell> extension);

/// φ ∘ ρ_{[r-1]x[s-1]} ∘ ... ∘ ρ_{[r-m]x[s-m]}. Throws DomainError on entries
/// outside the algebra's carrier.
Labeling rsk_inverse(const RskImage& image,
                     const ToggleAlgebra& alg = ToggleAlgebra::birational());

/// ⊗ of image_{i-t,j-t} for 0 <= t < k; cells that fall off the rectangle
/// contribute the identity. Throws DomainError unless (i, j) is a border cell
/// and 1 <= k <= min(i, j) + 1.
Rational greene_product(const RskImage& image, const Cell& border, int k,
                        const ToggleAlgebra& alg = ToggleAlgebra::birational());

/// Border cells (i = r or j = s) in row-major order.
std::vector<Cell> border_cells(const Rect& rect);

/// Compares greene_product(RSK(x)) with w^(k)_{[i]x[j]} read off `minors`
/// for every border cell and 1 <= k <= min(i, j) + 1 with k <= j. RSK is
/// computed with `alg`. With `oracle` set, the right side is also compared
/// against path enumeration.
CheckReport greene_check(const Labeling& x, const ToggleAlgebra& alg,
                         const MinorArray& minors, bool oracle);
/// Birational algebra, the labeling's own minors, oracle when r, s <= 3.
CheckReport greene_check(const Labeling& x);

/// Σ_t RSK(x)_{i-t,j-t} = max over k-path families of Σ x, in the tropical
/// algebra, with the right side from the enumeration oracle.
CheckReport tropical_greene_check(const Labeling& x,
                                  const ToggleAlgebra& alg = ToggleAlgebra::tropical());

/// Chain sums w^(1) over [u,v] x [s] ("rows") and [r] x [u,v] ("cols"),
/// keyed by (u, v).
struct ChainSumProfile {
  Rect rect;
  std::map<std::pair<int, int>, Rational> rows;
  std::map<std::pair<int, int>, Rational> cols;

  friend bool operator==(const ChainSumProfile&, const ChainSumProfile&) = default;
};

ChainSumProfile chain_sum_profile(const Labeling& x);

/// w^(k)_{[r]x[j]} as det(w^(1)_{[r]x[a, j-k+b]})_{a,b <= k}, entries with
/// a > j-k+b being 0.
Rational column_family_weight(const ChainSumProfile& profile, int j, int k);
/// w^(k)_{[i]x[s]} as det(w^(1)_{[a, i-k+b]x[s]})_{a,b <= k}.
Rational row_family_weight(const ChainSumProfile& profile, int i, int k);

/// Rebuilds RSK(x) from the profile by Greene quotients, inverts it, and
/// confirms that the result reproduces the profile. Throws DomainError when
/// the profile is inconsistent.
Labeling reconstruct_from_chain_sums(const ChainSumProfile& profile);

/// With x̃ = φ∘ρ⁻¹∘φ⁻¹(x): w^(k)_{[r]x[u,v]}(x) = w^(k)_{[r]x[u-1,v-1]}(x̃) for
/// 1 < u <= v <= s, and the same on transposed labelings.
CheckReport chain_shift_check(const Labeling& x);

/// Recomputes RSK(x̃)_ij off the file j - i = s - r from shifted chain sums of
/// x alone and compares with the direct computation.
CheckReport chain_shift_rsk_check(const Labeling& x);

}  // namespace rowmotion

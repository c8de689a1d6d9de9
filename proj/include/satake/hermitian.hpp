#pragma once

// Hermitian matrices over F_{q²}((π)), norm equations, the representation
// s = g ᵗḡ, unitary points over truncated rings, and the transfer b′.

#include <functional>
#include <map>

#include "satake/hecke.hpp"
#include "satake/localmodel.hpp"

namespace sph {

/// Throws std::invalid_argument unless ctx has even degree and ᵗs̄ = s to precision.
void validate_hermitian(const SeriesMatrix& s);
bool is_hermitian(const SeriesMatrix& s);

/// w with w·w̄ ≡ u mod π^M for a unit u with coefficients in the index-2 subfield.
TruncSeries norm_solve(const TruncSeries& u, int precision);

/// g with g·ᵗḡ ≡ s mod π^M. Throws OddDiscriminant when val det s is odd.
SeriesMatrix represent_hermitian(const SeriesMatrix& s, int precision);

/// Visit every h over F_{q²}[π]/π^M with h·ᵗh̄ = 1 (entries are polynomials of degree < M).
void unitary_enumerate(int n, const FqCtxPtr& ctx, int levels, const std::function<void(const SeriesMatrix&)>& visit);
std::int64_t unitary_count(int n, const FqCtxPtr& ctx, int levels);
/// |U(n, q)| · q^{n²(M-1)} with q² = |ctx|.
std::int64_t unitary_expected_count(int n, std::int64_t q, int levels);

/// Multiplicity of each Cartan type among lattices L ⊂ O_2^n that are self-dual for s^{-1}.
/// Empty for non-integral s or odd val det s. s is truncated to `precision` first.
std::map<NPartition, std::int64_t> bprime_profile(const SeriesMatrix& s, int precision = TruncSeries::kExact);

/// b′(f)(s) = Σ_L f(L) over the self-dual lattices of bprime_profile. f must have r = 2.
ValueScalar bprime(const HeckeElem& f, const SeriesMatrix& s, int precision = TruncSeries::kExact);
ValueScalar pair_profile(const HeckeElem& f, const std::map<NPartition, std::int64_t>& profile);

}  // namespace sph

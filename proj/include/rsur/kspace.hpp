#pragma once

#include <span>
#include <vector>

#include "rsur/amplitude.hpp"
#include "rsur/grid.hpp"
#include "rsur/types.hpp"

namespace rsur {

/// Nodes with k_perp <= kAxisTolerance * |k| are treated as lying on the kz-axis.
inline constexpr double kAxisTolerance = 1e-12;

/// Helicity polarization vector e(k); satisfies i k x e = |k| e, e.k = 0,
/// e*.e = 1 and e(-k) = conj(e(k)). Throws AxisSingularityError on the kz-axis.
CVec3 polarization(const WaveVector& k);

/// F~(k, t) = e(k) f_+(k) exp(-ikt) + conj(e(k)) conj(f_-(-k)) exp(ikt) on `kgrid`.
FieldGrid synthesize_kspace(const HelicityAmplitudePair& amps, const Grid3& kgrid, double t = 0.0);

/// Unitary transforms with the symmetric (2 pi)^(-3/2) convention
///   F(r) = (2 pi)^(-3/2) int d^3k exp(i k.r) F~(k).
/// The single-argument forms target the default partner grid (Grid3::reciprocal).
FieldGrid fourier_to_position(const FieldGrid& field_k);
FieldGrid fourier_to_position(const FieldGrid& field_k, const Grid3& rgrid);
FieldGrid fourier_to_kspace(const FieldGrid& field_r);
FieldGrid fourier_to_kspace(const FieldGrid& field_r, const Grid3& kgrid);

/// Shifted DFT between Fourier-partner grids for `components` interleaved
/// complex components per node; sign -1 goes r -> k, +1 goes k -> r.
std::vector<cplx> shifted_dft(std::span<const cplx> in, const Grid3& from, const Grid3& to, std::size_t components,
                              int sign);

/// N = int d^3k (|f_+|^2 + |f_-|^2), by quadrature over the amplitudes' support.
double norm(const HelicityAmplitudePair& amps);

/// N = sum over nodes of F*.F dV. Throws DegenerateNormError for a zero field.
double norm(const FieldGrid& field);

/// i k x F~ on a wavevector-space grid (the curl, in Fourier space).
FieldGrid spectral_curl(const FieldGrid& field_k);

/// ||k . F~|| / ||k|| ||F~||: zero for a transverse (divergence-free) field.
double transversality_residual(const FieldGrid& field_k);

}  // namespace rsur

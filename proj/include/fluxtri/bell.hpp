/**
 * @file bell.hpp
 * @brief Correlation and Bell operators for two and three qubits, and multi-start
 *        optimization of Bell violations over measurement directions.
 */
#pragma once

#include <cstdint>
#include <optional>

#include "fluxtri/entangle.hpp"
#include "fluxtri/qmath.hpp"

namespace fluxtri {

/// Measurement directions a, a', b, b' (and c, c' for three qubits).
struct BellVectors {
  Direction a, a_p, b, b_p;
  std::optional<Direction> c, c_p;

  int qubits() const { return c ? 3 : 2; }
};

struct BellResult {
  BellVectors vectors;
  double value = 0.0;
  int starts_used = 0;
  std::uint64_t seed = 0;
};

/// m(a, b, c) = (a.sigma)(x)(b.sigma)(x)(c.sigma) as a single weight-1 setting.
DecomposedObservable correlation_operator(const Direction& a, const Direction& b,
                                          const Direction& c);

/// m(a,b,c') + m(a,b',c) + m(a',b,c) - m(a',b',c'); requires three-qubit vectors.
DecomposedObservable bell_operator(const BellVectors& v);

/// sx sx sz + sx sz sx + sz sx sx - sz sz sz.
DecomposedObservable mermin_ghzbar();

/// m(a,b) + m(a,b') + m(a',b) - m(a',b'); requires two-qubit vectors.
DecomposedObservable chsh_operator(const BellVectors& v);

/// Directions of the tabulated optimum for the W state (normalized to unit length).
BellVectors table1_vectors();

/// Bell operator for |psi_max^L>: the tabulated W operator conjugated by the local transform.
DecomposedObservable mermin_wbar();

/// Directions giving 2 sqrt(2) on the singlet.
BellVectors singlet_chsh_vectors();

/// Multi-start Nelder-Mead over spherical angles of all directions. Starts are drawn
/// sequentially from a seeded mt19937_64; ties resolve to the lowest start index.
BellResult optimize_bell(const PureState& state, int n_qubits, int starts = 64,
                         std::uint64_t seed = 42);

}  // namespace fluxtri

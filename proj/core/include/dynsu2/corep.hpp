#pragma once

#include "dynsu2/coalgebra.hpp"
#include "dynsu2/formulas.hpp"

namespace dynsu2 {

struct IndexOutOfRange : std::runtime_error {
  explicit IndexOutOfRange(const std::string& w) : std::runtime_error(w) {}
};
struct RankDeficient : std::runtime_error {
  explicit RankDeficient(const std::string& w) : std::runtime_error(w) {}
};

enum class MatBackend { Combinatorial, Factored };

/// Matrix element t^N_{kj} of the corepresentation V_N, cached per
/// (N, backend, mode).  The factored backend requires SL2 mode.
const AlgElement& matelem(int N, int k, int j, MatBackend backend = MatBackend::Factored,
                          Mode mode = Mode::SL2);

/// Normalizing function Gamma^N_k (in the named variable).
Scalar gamma_corep(int N, int k, const std::string& var = "lambda");

/// The commuting block P of t^N_{kj} = gamma^{j-k} delta^{N-k-j} P as a
/// polynomial in Xi (valid for k <= j, k + j <= N).  The diagonal
/// matelem_block(2k, k, k) is the spherical element driving the Haar
/// moments.
XiPoly matelem_block(int N, int k, int j);

enum class CgBackend { W, Phi };

/// Corepresentation Clebsch-Gordan coefficient C^{MN,M+N-2s}_{jk,j+k-s}
/// as a Scalar in `var`.  Zero when the grading constraint fails.
Scalar cg(int M, int N, int s, int j, int k, CgBackend backend = CgBackend::Phi,
          const std::string& var = "lambda");
Scalar zconst(int M, int N, int s);

/// Exact row-rank of the coefficient matrix of `rows` over the basis
/// monomials, evaluated at a sampled point (retrying on poles).
int coeff_rank(const std::vector<AlgElement>& rows, uint64_t seed);

}  // namespace dynsu2

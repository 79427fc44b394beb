#pragma once

#include "dynsu2/corep.hpp"

namespace dynsu2 {

/// Finitely supported vector sum g_k(lambda) e_k in H^omega; e_k has weight
/// omega + 2k.  The omega parameter enters coefficients as q^omega.
struct RepVector {
  std::string omega = "omega";
  std::map<int, Scalar> c;
  static RepVector basis(int k, std::string omega = "omega");
  void insert(int k, const Scalar& s);
};

/// pi^omega(x) v through the generator action table.
RepVector act(const AlgElement& x, const RepVector& v);
/// pi^omega applied to a free word (letters and interleaved coefficients),
/// without normalizing first; the well-definedness checks compare both sides
/// of the defining relations this way.
RepVector act_word(const GenWord& w, const RepVector& v);
bool repvec_equal(const RepVector&, const RepVector&, int trials, uint64_t seed);

enum class TfunBackend { QRacah, AskeyWilson };
/// T^{omega N}_{kjm} as a Scalar in (lambda, omega).
Scalar tfun(int N, int k, int j, int m, TfunBackend backend = TfunBackend::QRacah);
/// Normalizing function Gamma^omega_k(lambda).
Scalar gamma_rep(int k);

/// Element of H^{omega1} (x)- H^{omega2} with all coefficients attached to
/// the right slot (functions of lambda; omega1, omega2 parameters).
struct TensorRepVector {
  std::string w1 = "omega1", w2 = "omega2";
  std::map<std::pair<int, int>, Scalar> c;
  void insert(int k1, int k2, const Scalar& s);
  static TensorRepVector basis(int k1, int k2);
};

TensorRepVector tensor_act(const AlgElement& x, const TensorRepVector& v);
TensorRepVector trv_scale(const TensorRepVector& v, const Scalar& g);
bool trv_equal(const TensorRepVector&, const TensorRepVector&, int trials, uint64_t seed);

/// Xi eigenvector v(y;p) of the tensor-product representation.
TensorRepVector eigvec(int y, int p);

enum class CgDynBackend { Racah, Alt, Third };
/// Dynamical CG coefficient C^{w1+w2+2s, w1 w2}_{k,lm} (l + m = s + k).
Scalar cg_dyn(int s, int k, int l, int m, CgDynBackend backend = CgDynBackend::Racah);
/// Image C e_k = phi_k v(s; s+k) of the decomposition intertwiner.
TensorRepVector dyn_intertwiner_image(int s, int k);

}  // namespace dynsu2

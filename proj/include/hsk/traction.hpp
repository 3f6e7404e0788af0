#pragma once

/// Traction, hypertraction and edge-force mappings induced by a stress /
/// hyperstress pair, and the reconstructions going the other way: the two
/// directions carry the same mechanical information.

#include <functional>

#include "hsk/fields.hpp"
#include "hsk/geometry.hpp"
#include "hsk/tensor.hpp"

namespace hsk {

using NormalMap = std::function<Vec3d(const Vec3d& n)>;
using TractionMap = std::function<Vec3d(const Vec3d& x, const Vec3d& n)>;
using EdgeMap = std::function<Vec3d(const EdgeFrame&)>;

struct TractionSample {
  Vec3d x;
  Vec3d n;
  Vec3d traction;
  Vec3d hypertraction;
};

struct EdgeForceSample {
  Vec3d x;
  EdgeFrame frame;
  Vec3d force;
};

/// t = T n for a simple (first-gradient) continuum.
Vec3d simple_traction(const Mat3d& stress, const Vec3d& n);

/// Cauchy stress from its traction map: sum_i t(n_i) (x) n_i over any
/// orthonormal triple. Recovers the stress exactly and basis-independently
/// when the map comes from a tensor.
Mat3d simple_stress_from_tractions(const NormalMap& t_map, const Basisd& basis);

/// Traction on the flat surface through x oriented by n:
/// (T - div H) n - sdiv((H n) restricted to the surface).
Vec3d surface_traction(const Tensor2Field& stress, const HyperstressField& hyperstress,
                       const Vec3d& x, const Vec3d& n);

/// Diffused hypertraction h = (H n) n = H[n (x) n].
Vec3d surface_hypertraction(const Tensor3Symd& hyperstress, const Vec3d& n);

/// Edge force f = H[n' (x) m' + n'' (x) m''].
Vec3d edge_force(const Tensor3Symd& hyperstress, const EdgeFrame& edge);

/// Hyperstress from its hypertraction and edge-force maps evaluated on the
/// three coordinate planes and coordinate edges of an orthonormal basis:
///   H = sum_j h(b_j) (x) b_j (x) b_j
///     + 1/2 sum_{j<k} f(E_jk) (x) (b_j (x) b_k + b_k (x) b_j).
/// Exact and basis-independent when the maps derive from a hyperstress.
Tensor3Symd reconstruct_hyperstress(const NormalMap& h_map, const EdgeMap& f_map,
                                    const Basisd& basis);

/// T - div H at x from the traction map plus the surface-divergence terms,
/// which depend on the hyperstress as a field:
///   sum_i (t(x, n_i) + sdiv((H n_i) restricted)) (x) n_i.
Mat3d reconstruct_Ttilde(const TractionMap& t_map, const HyperstressField& hyperstress,
                         const Vec3d& x, const Basisd& basis);

/// T(x) = (T - div H)(x) + div H(x).
Mat3d reconstruct_T(const Mat3d& t_tilde, const HyperstressField& hyperstress, const Vec3d& x);

}  // namespace hsk

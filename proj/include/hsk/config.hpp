#pragma once

namespace hsk {

/// Central numeric tolerances. Every validation and default residual bound
/// in the library reads from this one record.
struct Tolerances {
  double rotation_orthogonality = 1e-12;  // Q'Q = I and det Q = 1 at construction
  double unit_vector = 1e-12;             // |n| = 1 checks on normals
  double frame = 1e-12;                   // edge-frame unit/orthogonality/coplanarity
  double face_planarity = 1e-10;          // vertex distance from the face plane
  double skew = 1e-13;                    // W + W' = 0 at construction
  double packing = 1e-12;                 // right-pair symmetry when packing full tensors
  double balance_default = 1e-10;         // default residual bound for balance checks
};

inline constexpr Tolerances kTol{};

/// Default residual tolerance for verification runs. Starts from
/// Tolerances::balance_default; the environment variable HSK_DEFAULT_TOL,
/// when set to a positive number, overrides it.
double default_tolerance();

}  // namespace hsk

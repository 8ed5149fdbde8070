#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieball/groups.hpp"
#include "lieball/linalg.hpp"
#include "lieball/maps.hpp"

namespace lieball {

/// One normalizing move F -> post o F o pre. Either side may be absent.
struct NormalizationStep {
  std::string kind;  // "origin", "takagi", "i-rotation", "basis-extension", "phase", "o2-rotation", "sign-flip", "zn-phase"
  std::string note;
  std::optional<Automorphism> pre;
  std::optional<Automorphism> post;
};

enum class CaseTag { Rational, Irrational };

struct CanonicalForm {
  int n = 0;
  CaseTag tag = CaseTag::Irrational;
  double theta_raw = 0.0;  // in [0, pi/2]
  double beta = 0.0;       // folded into [0, pi/4); 0 for the rational case
  double margin = 0.0;     // |theta_raw - pi/4|
  ComplexMatrix u_final;   // the normalized unitary
  double final_residual = 0.0;  // ||u_final - U(theta_raw)||_max
  std::vector<NormalizationStep> steps;

  /// Representative family: "RIVflip" (riv_flipped) for the rational class, "Itheta" for the irrational one.
  std::string final_class() const;
};

/// The matrix with (z, s) = F U: blockdiag(I_{n-1}, [[i sin t, cos t], [cos t, i sin t]]).
ComplexMatrix canonical_unitary(int n, double theta);

/// (z, sum f_j^2 / 2) = f U for an isometry f: UnitBall(n) -> TypeIV(n+1), f(0) = 0.
/// Errors: NotIsometry, NotNormalized, RecoveryFailed.
struct ExtractOptions {
  double tol = 1e-9;
  int order = 4;
  int probes = 16;
  std::uint64_t seed = 0;
};
struct ExtractResult {
  ComplexMatrix u;
  double probe_residual = 0.0;
  double kernel_residual = 0.0;
};
ExtractResult extract_unitary(const HoloMap& f, const ExtractOptions& opt = {});

/// Errors: NotUnitary, StructureViolation.
CanonicalForm normalize_unitary(const ComplexMatrix& u, double tol = 1e-8);

/// Solution of (z, sum f^2 / 2) = f U(theta) with s(0) = 0.
/// theta in [0, pi/2]; theta = pi/4 solves the linear case. Errors: ParameterOutOfRange.
HoloMap reconstruct_map(int n, double theta);

struct WitnessPair {
  ComplexMatrix b;  // U(n,1) acting on [z, s]
  RealMatrix t;     // O(n+1, 2)
};

/// Errors: ParameterOutOfRange (theta outside [0, pi/4)).
WitnessPair equivalence_witness(int n, double theta);

/// Max projective discrepancy between lift(I_0(z/s)) T and lift(I_theta(w)),
/// (w, 1) ~ (z, s) B, over `samples` seeded points.
double witness_intertwining_residual(const WitnessPair& w, int n, double theta, int samples, std::uint64_t seed);

struct Classification {
  CanonicalForm form;
  std::optional<WitnessPair> witness;
  ExtractResult extraction;
};

Classification classify_map(const HoloMap& f, const ExtractOptions& opt = {});

/// post_k o ... o post_1 o f o pre_1 o ... o pre_k.
HoloMap replay(const HoloMap& f, const std::vector<NormalizationStep>& steps);

}  // namespace lieball

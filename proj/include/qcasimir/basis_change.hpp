#pragma once

#include <string>
#include <vector>

#include "qcasimir/epoly.hpp"
#include "qcasimir/group_algebra.hpp"
#include "qcasimir/matrix.hpp"
#include "qcasimir/root_system.hpp"

namespace qcasimir {

using Partition = std::vector<int>;

/// Conjugate partition; zeros in the input are ignored.
Partition conjugate(const Partition& lam);

/// The weight sum lam_i eps_i. Throws PartitionTooLong beyond n parts.
Weight partition_weight(const RootSystem& rs, const Partition& lam);

/// A polynomial in E_1..E_n standing for the exterior-power characters.
struct EBasisExpr {
  EPoly poly;
  /// Records how indices outside 1..n were folded.
  std::string reduction_convention;
};

/// e_r as an E-symbol expression: e_0 = 1, e_r = 0 for r < 0 or r > d,
/// e_r = e_{d-r} for n < r <= d.
EPoly e_symbol(const RootSystem& rs, int r);

/// The Jacobi-Trudi matrices, before the determinant and the halving:
/// (e_{l'_i-i+j} + e_{l'_i-i-j+2}) for B/D and (e_{l'_i-i+j} - e_{l'_i-i-j}) for C.
Matrix<GAElem> jt_matrix_ga(const RootSystem& rs, const Partition& lam);
Matrix<EPoly> jt_matrix_e(const RootSystem& rs, const Partition& lam);

/// The hook-form matrix for (k-r, 1^r): first row e_{r+j} + e_{r-j+2}
/// (B/D) or e_{r+j} - e_{r-j} (C), then rows (.., 1, e_1, e_2, ..) with unit
/// subdiagonal. Its determinant is chi of the hook without halving.
Matrix<EPoly> hook_matrix_e(const RootSystem& rs, int k, int r);

/// Jacobi-Trudi determinant with exterior-power characters as entries,
/// halved in types B and D. Throws PartitionTooLong or HalvingFailed.
GAElem jt_character_ga(const RootSystem& rs, const Partition& lam);

/// The same determinant over the E-symbols.
EBasisExpr jt_character_e(const RootSystem& rs, const Partition& lam);

/// Ch G_{n,k} (1 <= k <= n) written in E_1..E_n; in type D the pair of
/// characters at k = n, r = n-1 is folded to E_n.
EBasisExpr g_in_e_basis(const RootSystem& rs, int k);

/// (-1)^{k+1} sum_{r<k} q^{c_n-1-2r}, the expected E_k coefficient of g_k.
QLaurent expected_leading_coefficient(const RootSystem& rs, int k);

/// One step of the change of basis:
/// E_k = G_k / s_k + q_num(G_1..G_{k-1}) / prod(q_den_factors),
/// so that c_k = 1/s_k.
struct TriangularStep {
  int k = 0;
  QLaurent s;
  EPoly q_num;
  std::vector<QLaurent> q_den_factors;

  QLaurent q_den() const;
};

struct TriangularSolution {
  LieType type = LieType::B;
  int rank = 0;
  std::vector<TriangularStep> steps;
};

/// Solves k = 1..n by induction and verifies each step by substituting the
/// g_j back (symbolic round trip). Throws SingularLeadingCoefficient or
/// CertificateFailed.
TriangularSolution triangular_solve(const RootSystem& rs);

/// True when E_k = c_k g_k + Q_k(g) holds after substitution, as polynomials in E.
bool round_trip_holds(const RootSystem& rs, const TriangularStep& step);

/// (d g_i / d E_j) over the E-symbols.
Matrix<EPoly> jacobian(const RootSystem& rs);

/// How far the solve must reach for the generating set: n-1 (B), n (C), n-2 (D).
int required_solve_range(const RootSystem& rs);

struct CertificateCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExtraGenerator {
  std::string name;
  Weight weight;
  GAElem character;
};

struct GenerationCertificate {
  LieType type = LieType::B;
  int rank = 0;
  int solved_range = 0;
  std::vector<ExtraGenerator> extra_generators;
  std::vector<CertificateCheck> checks;

  bool passed() const;
};

/// Runs every check and reports it; never throws on a failed identity.
GenerationCertificate certify(const RootSystem& rs);

/// As certify, but throws CertificateFailed naming the first failing check.
GenerationCertificate generation_certificate(const RootSystem& rs);

/// Symbol names "E1".."En" and "G1".."Gn".
std::vector<std::string> e_names(int n);
std::vector<std::string> g_names(int n);

}  // namespace qcasimir

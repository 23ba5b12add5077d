#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lie4/lie_algebra.hpp"
#include "lie4/linalg.hpp"
#include "lie4/models.hpp"
#include "lie4/polynomial.hpp"

namespace lie4::classification {

// Indeterminate indices into the 18-variable polynomial ring.
inline constexpr int A1 = 0, A2 = 1, A3 = 2, A4 = 3, A5 = 4, A6 = 5;
inline constexpr int B1 = 6, B2 = 7, B3 = 8, B4 = 9, B5 = 10, B6 = 11;
inline constexpr int C1 = 12, C2 = 13, C3 = 14, C4 = 15, C5 = 16, C6 = 17;

/// Condition systems derived from first principles on the symbolic ansatz:
/// d Omega = 0 (4 polynomials), d^2 e^i = 0 (12), J-invariance of the Ricci
/// tensor (6), and vanishing of the Nijenhuis tensor (4 linear relations,
/// validated to span the same space as the derived tensor components).
struct ConditionSystems {
  std::array<Poly, 4> d_omega;
  std::array<Poly, 12> jacobi;
  std::array<Poly, 6> ricci_inv;
  std::array<Poly, 4> integrability;

  std::vector<const Poly*> all22() const {
    std::vector<const Poly*> v;
    for (const auto& p : d_omega) v.push_back(&p);
    for (const auto& p : jacobi) v.push_back(&p);
    for (const auto& p : ricci_inv) v.push_back(&p);
    return v;
  }
};

/// Derives (and caches) the condition systems. Never transcribed from the
/// text; the printed systems are compared against these in
/// compare_with_printed().
const ConditionSystems& derive_conditions();

/// One line of the derived-vs-printed comparison report.
struct ComparisonLine {
  std::string system;    // "dOmega", "jacobi", "ricci"
  int index;             // position in the printed list
  bool matched;          // printed line is a rational multiple of a derived one
  bool ambiguous_print;  // the printed line wraps with missing operators
  std::string note;
};

std::vector<ComparisonLine> compare_with_printed();

/// A solution branch: substitution for all 18 indeterminates, free
/// parameters, and denominators that must stay nonzero.
struct Branch {
  int id = 0;
  std::array<RatFunc, kPolyVars> subs;
  std::vector<int> free_vars;
  std::vector<Poly> nondegeneracy;
};

const std::vector<Branch>& branches();
const Branch& branch(int id);  // id in 1..17

struct BranchCertificate {
  int id = 0;
  int residual_count = 0;  // number of nonzero residual polynomials (of 22)
  bool all_zero = false;
  bool integrable = false;
  std::optional<int> reduction_target;
  std::optional<Mat4<Rational>> basis_change;
};

/// Substitutes the branch into all 22 derived conditions; every residual
/// must be the zero polynomial after clearing denominators.
BranchCertificate verify_branch(const Branch& b);

/// Evaluates a branch at concrete values of its free parameters.
std::array<Rational, kPolyVars> branch_point(int id, const std::map<int, Rational>& free_values);
LieAlgebra4<Rational> branch_algebra(int id, const std::map<int, Rational>& free_values);

struct ReductionCertificate {
  std::string name;
  int source_id = 0;
  int target_id = 0;
  Mat4<Rational> coframe_map = identity_mat4<Rational>();  // f^i = sum_j M[i][j] e^j
  bool map_is_isometry = false;
  bool coframes_match = false;
  bool ok = false;
  std::string note;
};

/// Certifies the case reductions: 14 -> 5 and 17 -> 16 via the printed basis
/// changes, the specialization 5 -> 11 (b5 = -b2/2) and 16 -> 5 (a5 = 0,
/// composed with the 14 -> 5 change).
std::vector<ReductionCertificate> verify_reductions();

struct G49Certificate {
  Rational s, t;
  bool brackets_match = false;     // f-basis satisfies the g_{4,9}(1/2) equations
  bool gram_is_scalar = false;     // Gram matrix of {f_i} is gram_diag * Id
  Rational gram_diag;              // = t^2/(t^2+s^2)^2
  Rational homothety;              // = (t^2+s^2)^2/t^2
  std::array<std::string, 4> f_basis;
  bool ok = false;
};

/// Theorem-2.3-style normalization of the family member (s, t), t != 0.
/// Exact over the quadratic extension Q(sqrt(s^2+t^2)).
G49Certificate normalize_to_g49(const Rational& s, const Rational& t);

/// Action of ad_{e4} on the Heisenberg commutator of branch 16, verified
/// symbolically: eta = (a4^2+a5^2)/(2 a4) = mu/2 = -nu, delta = a = k = 0,
/// b = a5/a4.
struct DerivationConstants {
  RatFunc eta, mu, nu, b;
  bool deltas_vanish = false;   // delta = a = k = 0
  bool matches_printed = false;
};
DerivationConstants derivation_constants();

struct IsoCertificate {
  Mat4<Rational> phi;  // columns: images of f_1..f_4 in the e-basis
  bool equivariant = false;
  bool derived_series_agree = false;
  bool traces_correspond = false;
  bool ok = false;
};

/// Constructs and verifies an explicit isomorphism g_{4,9}(1/2) -> R^2 x| sol_2.
IsoCertificate g49_vs_r2sol2();

struct KECertificate {
  int case_id = 0;
  std::string params;
  bool jacobi_zero = false;
  bool d_omega_zero = false;
  bool nijenhuis_zero = false;
  bool einstein = false;
  bool ricci_value_matches = false;
  std::string printed_ricci;
  bool ok = false;
};

/// The Kahler-Einstein branches (cases 2, 3, 4, 8, 9, 12, 13 with their
/// extra conditions), each verified symbolically where the conditions are
/// rational and at exact sample points where they are not (case 9).
std::vector<KECertificate> ke_branches();

/// Equivalences among the KE branches: case 4 = case 3 at a6 = 0, and the
/// case-12 basis change with the identification a4 = -b2, a6 = b6, which
/// lands exactly on the case-3 display.
std::vector<ReductionCertificate> verify_ke_equivalences();

/// The witness rho(e1,e1) - rho(e3,e3) = 3(t^2+s^2)^2/(2t^2) > 0.
Rational never_einstein_witness(const Rational& s, const Rational& t);

/// Same witness as a symbolic identity on branch 16.
bool never_einstein_symbolic();

}  // namespace lie4::classification

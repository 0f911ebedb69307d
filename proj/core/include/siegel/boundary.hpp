#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "siegel/contraction.hpp"

// Boundary-going sequences (Z_{1,n}, Z_{2,n}) indexed by the sign pattern of
// the limiting eigenvalues of T, evaluation of mu* and disk-model limits along
// them, and the 21-case verdict taxonomy.

namespace siegel::boundary {

using geo::BallPoint;
using geo::SiegelPoint;
using mat::cplx;
using mat::Mat2;
using mat::RealSym2;
using mat::Rotation2;

// Signs of the limiting eigenvalues of T: ++, +0, +-, 00, 0-, --.
enum class SignPattern { PP = 0, P0 = 1, PM = 2, OO = 3, OM = 4, MM = 5 };

std::string_view to_string(SignPattern p);
SignPattern parse_pattern(std::string_view text);  // SchemaError on bad input

// Unordered pair of patterns; 21 distinct values.
struct CaseId {
  SignPattern a, b;  // canonical: a <= b
  CaseId(SignPattern x, SignPattern y)
      : a(x <= y ? x : y), b(x <= y ? y : x) {}
  bool operator==(const CaseId& o) const { return a == o.a && b == o.b; }
  std::string str() const;
  static std::vector<CaseId> all();
  static CaseId parse(std::string_view text);  // "++,+-"
};

enum class Form { Identity, DiagForm, CornerForm };
enum class Verdict { Identity, DiagForm, CornerForm, Impossible, Inconclusive };
std::string_view to_string(Verdict v);

// Static verdict table. `witness_attains` marks cases whose catalogued
// witness drives mu* to 1; the {+0,+-} entry keeps its diagonal form in the
// table but no sequence realizes it, see witness_spec.
struct TaxonomyEntry {
  bool impossible = false;
  bool allows_identity = false;
  bool allows_diag = false;
  bool allows_corner = false;
  bool real_limit = false;      // common limit sits on the real boundary
  bool witness_attains = false;
};
TaxonomyEntry expected_verdict(const CaseId& id);

// Power-law schedule c * n^e (identically zero when c == 0).
struct Schedule {
  double coef = 0.0;
  double expo = 0.0;
  double operator()(double n) const { return coef == 0.0 ? 0.0 : coef * std::pow(n, expo); }
  static Schedule constant(double c) { return {c, 0.0}; }
};

// Eigenbases, eigenvalue schedules, S-parameters (in the T-eigenbasis, with
// the off-diagonal coupling R(t2,eps)/R(t1,eps) applied to the top-right
// entry automatically) and epsilon schedules for the two points.
struct SequenceSpec {
  CaseId id{SignPattern::PP, SignPattern::PP};
  Rotation2 v1, v2;
  Schedule t1, t2;            // eigenvalues of T_1 (in v1's column order)
  Schedule tau1, tau2;        // eigenvalues of T_2
  Schedule s11, s21, s22;     // point 1: diagonal entries and free lower-left
  Schedule g11, g21, g22;     // point 2
  Schedule eps1, eps2;
  // Test hook: raw S matrices that bypass the coupling (may break X symmetry).
  std::optional<std::pair<Mat2, Mat2>> raw_s;
};

// Z = eps^{-2}(R(T,eps) S + i R(T,eps)^2) for each point. Scale-invariant in
// (S, T, eps), so specs need not be Schatten-normalized. Throws AsymmetricX
// when a raw S produces a non-symmetric X.
std::pair<SiegelPoint, SiegelPoint> build_sequence(const SequenceSpec& spec, double n);

// Catalogued witness; throws InfeasibleCase for impossible cases.
SequenceSpec witness_spec(const CaseId& id);

// Random spec within the sign patterns of an impossible case; throws
// NotImpossibleCase otherwise.
SequenceSpec falsifier_sample(const CaseId& id, std::uint64_t seed);

struct FormMatch {
  bool matched = false;
  cplx alpha{};               // DiagForm: V^t W V = diag(1, alpha)
  bool at_infinity = false;   // CornerForm with I - V^t W V singular
  cplx z{};                   // CornerForm: free upper-half-plane entry
  double r = 0.0, p = 0.0;    // CornerForm: shared corner data
};

// Structural matcher for the three limit forms, in the basis V.
FormMatch match_form(const BallPoint& w, Form expected, const Rotation2& v, double tol);

struct TracePoint {
  double n = 0.0;
  double mu_star = 0.0;
  double w1_gap = 0.0, w2_gap = 0.0, wa_gap = 0.0;  // Cauchy gaps vs previous point
  bool ok = true;
  std::string note;
};

struct CaseReport {
  CaseId id{SignPattern::PP, SignPattern::PP};
  double p = 1.0;
  std::vector<TracePoint> trace;
  std::optional<BallPoint> w1, w2, wa;  // at the largest n
  double mu_final = 0.0;
  bool converged = false;               // Cauchy gaps of mu* and all W's below tol
  Verdict verdict = Verdict::Inconclusive;
  FormMatch m1, m2, ma;
  double form_tol = 1e-3;
};

// Evaluates the sequence along the schedule and classifies the limits.
// Per-n numeric failures are recorded in the trace, not fatal.
CaseReport run_case(const SequenceSpec& spec, const std::vector<double>& schedule, double p,
                    double form_tol = 1e-3, double converge_tol = 1e-4);

// n = 2^1 .. 2^20.
std::vector<double> default_schedule();

// Residuals of the averaged-point relations at a single n (all relative).
struct LimitRelations {
  double ta = 0.0;        // T_a^2 vs (T_1^2 + T_2^2)/2
  double sa = 0.0;        // S_a^t S_a vs (S_1^t S_1 + S_2^t S_2)/2
  double botha = 0.0;     // combined Gram relation
  double tformula = 0.0;  // T_a vs the two-term R expression (exact identity)
  double eps_ratio_a1 = 0.0;  // |eps_a / eps_1 - 1|
  double eps_ratio_12 = 0.0;  // |eps_1 / eps_2 - 1|
};
LimitRelations limit_relations(const SequenceSpec& spec, double n, double p);

}  // namespace siegel::boundary

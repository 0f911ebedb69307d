#include "siegel/boundary.hpp"

#include <cmath>

#include "siegel/rng.hpp"

namespace siegel::boundary {

using geo::polar;
using geo::PolarData;
using geo::r_matrix;
using geo::r_scalar;
using mat::CMat;

std::string_view to_string(SignPattern p) {
  switch (p) {
    case SignPattern::PP: return "++";
    case SignPattern::P0: return "+0";
    case SignPattern::PM: return "+-";
    case SignPattern::OO: return "00";
    case SignPattern::OM: return "0-";
    case SignPattern::MM: return "--";
  }
  return "??";
}

SignPattern parse_pattern(std::string_view text) {
  if (text == "++") return SignPattern::PP;
  if (text == "+0") return SignPattern::P0;
  if (text == "+-") return SignPattern::PM;
  if (text == "00") return SignPattern::OO;
  if (text == "0-") return SignPattern::OM;
  if (text == "--") return SignPattern::MM;
  throw SchemaError("unknown sign pattern: " + std::string(text));
}

std::string CaseId::str() const {
  return std::string(to_string(a)) + "," + std::string(to_string(b));
}

std::vector<CaseId> CaseId::all() {
  std::vector<CaseId> out;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j)
      out.emplace_back(static_cast<SignPattern>(i), static_cast<SignPattern>(j));
  return out;
}

CaseId CaseId::parse(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw SchemaError("case id must be '<pat>,<pat>'");
  return CaseId(parse_pattern(text.substr(0, comma)), parse_pattern(text.substr(comma + 1)));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Identity: return "identity";
    case Verdict::DiagForm: return "diag-form";
    case Verdict::CornerForm: return "corner-form";
    case Verdict::Impossible: return "impossible";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "??";
}

TaxonomyEntry expected_verdict(const CaseId& id) {
  using SP = SignPattern;
  const auto is = [&](SP x, SP y) { return id == CaseId(x, y); };

  TaxonomyEntry e;
  if (is(SP::PP, SP::PP)) {
    e.allows_identity = true;
    e.witness_attains = true;
  } else if (id.a == SP::PP) {
    e.impossible = true;                       // ++ paired with anything else
  } else if (is(SP::P0, SP::P0)) {
    e.allows_identity = e.allows_diag = true;
    e.witness_attains = true;
  } else if (is(SP::P0, SP::PM)) {
    e.allows_diag = true;                      // diagonal form, but no sequence realizes it
    e.witness_attains = false;
  } else if (is(SP::P0, SP::OO)) {
    e.allows_diag = true;
    e.witness_attains = true;
  } else if (is(SP::P0, SP::OM) || is(SP::P0, SP::MM)) {
    e.impossible = true;
  } else if (is(SP::PM, SP::PM)) {
    e.allows_diag = true;
    e.witness_attains = true;
  } else if (is(SP::PM, SP::OO) || is(SP::PM, SP::OM) || is(SP::PM, SP::MM)) {
    e.impossible = true;
  } else if (is(SP::OO, SP::OO)) {
    e.allows_identity = e.allows_diag = true;
    e.witness_attains = true;
  } else if (is(SP::OO, SP::OM) || is(SP::OO, SP::MM)) {
    e.impossible = true;
  } else if (is(SP::OM, SP::OM)) {
    e.allows_identity = e.allows_corner = true;
    e.witness_attains = true;
  } else if (is(SP::OM, SP::MM)) {
    e.impossible = true;
  } else {  // (MM, MM)
    e.allows_identity = true;
    e.real_limit = true;
    e.witness_attains = true;
  }
  return e;
}

namespace {

SiegelPoint build_point(const Rotation2& v, double e1, double e2, double eps,
                        double p11, double p21, double p22,
                        const std::optional<Mat2>& raw_s) {
  if (!(eps > 0.0)) throw Error("build_sequence: epsilon schedule must be positive");
  const double r1 = r_scalar(e1, eps);
  const double r2 = r_scalar(e2, eps);

  // A non-trivial eigenbasis mixes the scales of the two directions inside
  // single matrix entries; once the Y-eigenvalue ratio passes ~1e12 the small
  // direction drowns in the rounding of the big one and every downstream
  // quantity turns to noise. Diagonal builds keep the scales in separate
  // slots and stay exact at any depth, so only mixed builds are guarded.
  const bool mixed = std::abs(v.s) > 1e-15;
  const double cond = std::pow(std::max(r1, r2) / std::min(r1, r2), 2.0);
  if (mixed && !(cond < 1e12))
    throw Error("build_sequence: conditioning beyond binary64 for a mixed eigenbasis");

  const RealSym2 t = v.conjugate_diag(e1, e2);

  Mat2 s;
  if (raw_s) {
    s = *raw_s;
  } else {
    const double coupled = r2 * p21 / r1;  // keeps R(T,eps) S symmetric
    const Mat2 vm(v);
    s = vm * Mat2{p11, coupled, p21, p22} * vm.transpose();
  }

  const RealSym2 rt = r_matrix(t, eps);
  const Mat2 x_raw = (Mat2(rt) * s) * (1.0 / (eps * eps));
  const double scale = std::max(1.0, x_raw.frob());
  if (x_raw.asym() > 1e-9 * scale)
    throw AsymmetricX("build_sequence: X not symmetric (S violates the coupling)");
  const RealSym2 x = x_raw.symmetric_part();

  const Mat2 y_half = Mat2(rt) * (1.0 / eps);
  const Mat2 y_full = y_half * y_half;
  const RealSym2 y = y_full.symmetric_part();
  return SiegelPoint::interior(x, y, 0.0);
}

}  // namespace

std::pair<SiegelPoint, SiegelPoint> build_sequence(const SequenceSpec& spec, double n) {
  if (!(n > 0.0)) throw Error("build_sequence: n must be positive");
  const std::optional<Mat2> raw1 =
      spec.raw_s ? std::optional<Mat2>(spec.raw_s->first) : std::nullopt;
  const std::optional<Mat2> raw2 =
      spec.raw_s ? std::optional<Mat2>(spec.raw_s->second) : std::nullopt;
  SiegelPoint z1 = build_point(spec.v1, spec.t1(n), spec.t2(n), spec.eps1(n),
                               spec.s11(n), spec.s21(n), spec.s22(n), raw1);
  SiegelPoint z2 = build_point(spec.v2, spec.tau1(n), spec.tau2(n), spec.eps2(n),
                               spec.g11(n), spec.g21(n), spec.g22(n), raw2);
  return {z1, z2};
}

SequenceSpec witness_spec(const CaseId& id) {
  const TaxonomyEntry tax = expected_verdict(id);
  if (tax.impossible)
    throw InfeasibleCase("witness_spec: case " + id.str() + " is impossible");

  using SP = SignPattern;
  SequenceSpec s;
  s.id = id;
  const auto is = [&](SP x, SP y) { return id == CaseId(x, y); };
  const auto identical = [&](Rotation2 v, Schedule t1, Schedule t2, Schedule s11, Schedule s21,
                             Schedule s22) {
    s.v1 = s.v2 = v;
    s.t1 = s.tau1 = t1;
    s.t2 = s.tau2 = t2;
    s.s11 = s.g11 = s11;
    s.s21 = s.g21 = s21;
    s.s22 = s.g22 = s22;
    s.eps1 = s.eps2 = Schedule{1.0, -1.0};
  };

  if (is(SP::PP, SP::PP)) {
    identical(Rotation2::from_angle(0.4), Schedule::constant(1.5), Schedule::constant(0.7),
              Schedule::constant(0.3), Schedule::constant(0.2), Schedule::constant(-0.4));
  } else if (is(SP::P0, SP::P0)) {
    // Non-invertible branch: s22 -> 0 at the same rate as t2 and eps, giving
    // the diagonal form with alpha = (1+i)/(1+i sqrt 5).
    identical(Rotation2::from_angle(0.5), Schedule::constant(1.0), Schedule{1.0, -1.0},
              Schedule::constant(0.8), Schedule::constant(0.0), Schedule{1.0, -1.0});
  } else if (is(SP::PM, SP::PM)) {
    // Diagonal frame: the two directions separate at rate eps^{-4}, beyond
    // what a mixed basis can carry in binary64.
    identical(Rotation2{}, Schedule::constant(1.2), Schedule::constant(-0.8),
              Schedule::constant(0.5), Schedule::constant(0.3), Schedule::constant(0.7));
  } else if (is(SP::OO, SP::OO)) {
    identical(Rotation2::from_angle(0.9), Schedule{}, Schedule{},
              Schedule::constant(1.0), Schedule::constant(0.0), Schedule{1.0, -1.0});
  } else if (is(SP::OM, SP::OM)) {
    // Rates chosen to land the free corner entry on z = 0.3 phi + i phi^2.
    identical(Rotation2{}, Schedule{1.0, -1.0}, Schedule::constant(-1.0),
              Schedule{0.3, -1.0}, Schedule::constant(0.4), Schedule::constant(0.6));
  } else if (is(SP::MM, SP::MM)) {
    identical(Rotation2::from_angle(0.2), Schedule::constant(-0.6), Schedule::constant(-1.4),
              Schedule::constant(0.5), Schedule::constant(0.3), Schedule::constant(-0.4));
  } else if (is(SP::P0, SP::OO)) {
    // Cross pair sharing the eigenbasis. Point 1 escapes with one positive
    // T-direction and a rank-one S limit; point 2 carries the same Gram in
    // the limit through a constant lower-left entry.
    const double s11 = 0.8, t1 = 1.0;
    const double g21 = std::sqrt(s11 * s11 + t1 * t1);  // matches the Gram corner
    const double phi = 0.5 * (1.0 + std::sqrt(5.0));    // R(1, 1)
    s.v1 = s.v2 = Rotation2{};
    s.t1 = Schedule::constant(t1);
    s.t2 = Schedule{1.0, -4.0};
    s.tau1 = Schedule{1.0, -1.0};
    s.tau2 = Schedule{1.0, -2.0};
    s.eps1 = s.eps2 = Schedule{1.0, -4.0};
    s.s11 = Schedule::constant(s11);
    s.s21 = Schedule{g21 * phi, -2.0};
    s.s22 = Schedule{1.0, -4.0};
    s.g11 = Schedule{s11 / t1, -1.0};
    s.g21 = Schedule::constant(g21);
    s.g22 = Schedule{1.0 / phi, -2.0};
  } else if (is(SP::P0, SP::PM)) {
    // The tabulated diagonal form has no realizing sequence: the limit range
    // condition forces a real intertwiner M with M T_1 = T_2, impossible for
    // rank-1 T_1 against invertible T_2. This spec satisfies the limit Gram
    // equality with a shared eigenbasis; mu* plateaus strictly below 1.
    s.v1 = s.v2 = Rotation2{};
    s.t1 = Schedule::constant(1.0);
    s.t2 = Schedule{1.0, -1.0};
    s.tau1 = Schedule::constant(1.0);
    s.tau2 = Schedule::constant(-0.6);
    s.eps1 = s.eps2 = Schedule{1.0, -1.0};
    s.s11 = Schedule::constant(0.8);
    s.s21 = Schedule::constant(0.0);
    s.s22 = Schedule::constant(1.0);
    s.g11 = Schedule::constant(0.8);
    s.g21 = Schedule::constant(0.0);
    s.g22 = Schedule::constant(0.8);  // 0.8^2 + 0.6^2 = 1.0^2
  }
  return s;
}

SequenceSpec falsifier_sample(const CaseId& id, std::uint64_t seed) {
  const TaxonomyEntry tax = expected_verdict(id);
  if (!tax.impossible)
    throw NotImpossibleCase("falsifier_sample: case " + id.str() + " is not impossible");

  rng::Xoshiro256pp g(seed);
  const auto eig_schedule = [&](SignPattern p, bool first) -> Schedule {
    const double mag = g.uniform(0.5, 2.0);
    switch (p) {
      case SignPattern::PP: return Schedule::constant(mag);
      case SignPattern::P0: return first ? Schedule::constant(mag)
                                         : Schedule{g.uniform(0.2, 1.5) * (g.uniform() < 0.5 ? -1.0 : 1.0),
                                                    -g.uniform(0.5, 1.5)};
      case SignPattern::PM: return first ? Schedule::constant(mag) : Schedule::constant(-mag);
      case SignPattern::OO:
      case SignPattern::OM: {
        const Schedule dec{g.uniform(0.2, 1.5) * (g.uniform() < 0.5 ? -1.0 : 1.0),
                           -g.uniform(0.5, 1.5)};
        if (p == SignPattern::OO) return dec;
        return first ? dec : Schedule::constant(-mag);
      }
      case SignPattern::MM: return Schedule::constant(-mag);
    }
    return {};
  };

  SequenceSpec s;
  s.id = id;
  s.v1 = rng::sample_rotation(g);
  s.v2 = rng::sample_rotation(g);
  s.t1 = eig_schedule(id.a, true);
  s.t2 = eig_schedule(id.a, false);
  s.tau1 = eig_schedule(id.b, true);
  s.tau2 = eig_schedule(id.b, false);
  s.s11 = Schedule::constant(g.uniform(-1.0, 1.0));
  s.s21 = Schedule::constant(g.uniform(-1.0, 1.0));
  s.s22 = Schedule::constant(g.uniform(-1.0, 1.0));
  s.g11 = Schedule::constant(g.uniform(-1.0, 1.0));
  s.g21 = Schedule::constant(g.uniform(-1.0, 1.0));
  s.g22 = Schedule::constant(g.uniform(-1.0, 1.0));
  s.eps1 = Schedule{1.0, -g.uniform(1.0, 2.0)};
  s.eps2 = Schedule{1.0, -g.uniform(1.0, 2.0)};
  return s;
}

FormMatch match_form(const BallPoint& w, Form expected, const Rotation2& v, double tol) {
  FormMatch m;
  const CMat id2 = CMat::identity(2);
  const Mat2 vm(v);
  const CMat wv = CMat(vm.transpose()) * w.w() * CMat(vm);

  switch (expected) {
    case Form::Identity: {
      m.matched = (w.w() - id2).frob() < tol;
      return m;
    }
    case Form::DiagForm: {
      const double off = std::max(std::abs(wv(0, 1)), std::abs(wv(1, 0)));
      const cplx alpha = wv(1, 1);
      m.matched = std::abs(wv(0, 0) - 1.0) < tol && off < tol && std::abs(alpha) <= 1.0 + tol;
      m.alpha = alpha;
      return m;
    }
    case Form::CornerForm: {
      CMat inv(2, 2);
      if (!(id2 - wv).try_inv2(inv, 1e-10)) {
        // z = i infinity: W_V = diag(1, (p - i)/(p + i)).
        m.at_infinity = true;
        const double off = std::max(std::abs(wv(0, 1)), std::abs(wv(1, 0)));
        const cplx alpha = wv(1, 1);
        m.matched = std::abs(wv(0, 0) - 1.0) < tol && off < tol &&
                    std::abs(std::abs(alpha) - 1.0) < tol;
        if (m.matched && std::abs(1.0 - alpha) > tol) {
          const cplx pv = cplx(0.0, 1.0) * (1.0 + alpha) / (1.0 - alpha);
          m.p = pv.real();
        }
        return m;
      }
      const CMat zc = cplx(0.0, 1.0) * ((id2 + wv) * inv);  // half-space preimage
      const double scale = 1.0 + zc.max_abs();
      const bool off_real = std::abs(zc(0, 1).imag()) < tol * scale &&
                            std::abs(zc(1, 0).imag()) < tol * scale;
      const bool off_sym = std::abs(zc(0, 1) - zc(1, 0)) < tol * scale;
      const bool corner_real = std::abs(zc(1, 1).imag()) < tol * scale;
      const bool upper = zc(0, 0).imag() > -tol * scale;
      m.matched = off_real && off_sym && corner_real && upper;
      m.z = zc(0, 0);
      m.r = 0.5 * (zc(0, 1).real() + zc(1, 0).real());
      m.p = zc(1, 1).real();
      return m;
    }
  }
  return m;
}

std::vector<double> default_schedule() {
  std::vector<double> s;
  for (int k = 1; k <= 20; ++k) s.push_back(std::pow(2.0, k));
  return s;
}

CaseReport run_case(const SequenceSpec& spec, const std::vector<double>& schedule, double p,
                    double form_tol, double converge_tol) {
  if (schedule.size() < 4) throw Error("run_case: schedule needs at least 4 points");
  for (size_t i = 1; i < schedule.size(); ++i)
    if (!(schedule[i] > schedule[i - 1])) throw Error("run_case: schedule must increase");

  CaseReport rep;
  rep.id = spec.id;
  rep.p = p;
  rep.form_tol = form_tol;

  double prev_mu = std::numeric_limits<double>::quiet_NaN();

  for (double n : schedule) {
    TracePoint tp;
    tp.n = n;
    try {
      const auto [z1, z2] = build_sequence(spec, n);
      const auto rep_mu = contraction::mu_star(z1, z2, p);
      const BallPoint w1 = geo::to_ball(z1);
      const BallPoint w2 = geo::to_ball(z2);
      const BallPoint wa = geo::to_ball(SiegelPoint::midpoint(z1, z2));

      tp.mu_star = rep_mu.mu_star;
      tp.w1_gap = rep.w1 ? (w1.w() - rep.w1->w()).frob() : 0.0;
      tp.w2_gap = rep.w2 ? (w2.w() - rep.w2->w()).frob() : 0.0;
      tp.wa_gap = rep.wa ? (wa.w() - rep.wa->w()).frob() : 0.0;

      prev_mu = rep.w1 ? rep.mu_final : std::numeric_limits<double>::quiet_NaN();
      rep.mu_final = rep_mu.mu_star;
      rep.w1 = w1;
      rep.w2 = w2;
      rep.wa = wa;
    } catch (const Error& e) {
      tp.ok = false;
      tp.note = e.what();
    }
    rep.trace.push_back(tp);
  }

  if (!rep.w1 || !rep.w2 || !rep.wa) {
    rep.verdict = Verdict::Inconclusive;
    return rep;
  }

  const TracePoint& last = rep.trace.back();
  const bool mu_cauchy = std::isfinite(prev_mu)
                             ? std::abs(rep.mu_final - prev_mu) < converge_tol
                             : false;
  rep.converged = last.ok && mu_cauchy && last.w1_gap < converge_tol &&
                  last.w2_gap < converge_tol && last.wa_gap < converge_tol;

  const TaxonomyEntry tax = expected_verdict(spec.id);
  if (rep.mu_final <= 1.0 - 1e-6) {
    rep.verdict = Verdict::Impossible;
    return rep;
  }
  if (!rep.converged) {
    rep.verdict = Verdict::Inconclusive;
    return rep;
  }

  const auto try_form = [&](Form f) {
    rep.m1 = match_form(*rep.w1, f, spec.v1, form_tol);
    rep.m2 = match_form(*rep.w2, f, spec.v1, form_tol);
    rep.ma = match_form(*rep.wa, f, spec.v1, form_tol);
    return rep.m1.matched && rep.m2.matched && rep.ma.matched;
  };

  if (tax.allows_identity && try_form(Form::Identity)) {
    rep.verdict = Verdict::Identity;
  } else if (tax.allows_diag && try_form(Form::DiagForm)) {
    rep.verdict = Verdict::DiagForm;
  } else if (tax.allows_corner && try_form(Form::CornerForm)) {
    rep.verdict = Verdict::CornerForm;
  } else if (tax.allows_identity &&
             (rep.w1->w() - rep.w2->w()).frob() < form_tol &&
             (rep.w1->w() - rep.wa->w()).frob() < form_tol) {
    rep.verdict = Verdict::Identity;  // common limit away from I (real boundary)
  } else {
    rep.verdict = Verdict::Inconclusive;
  }
  return rep;
}

LimitRelations limit_relations(const SequenceSpec& spec, double n, double p) {
  const auto [z1, z2] = build_sequence(spec, n);
  const SiegelPoint mid = SiegelPoint::midpoint(z1, z2);
  const PolarData p1 = polar(z1, p);
  const PolarData p2 = polar(z2, p);
  const PolarData pa = polar(mid, p);

  LimitRelations out;
  const auto rel = [](const Mat2& lhs, const Mat2& rhs) {
    return (lhs - rhs).frob() / (1.0 + std::max(lhs.frob(), rhs.frob()));
  };

  const Mat2 t1(p1.t), t2(p2.t), ta(pa.t);
  out.ta = rel(ta * ta, (t1 * t1 + t2 * t2) * 0.5);
  out.sa = rel(pa.s.transpose() * pa.s,
               (p1.s.transpose() * p1.s + p2.s.transpose() * p2.s) * 0.5);

  const auto gram = [](const PolarData& pd) {
    const CMat m = pd.s_plus_it();
    return m.adjoint() * m;
  };
  const CMat bg = gram(pa) - 0.5 * (gram(p1) + gram(p2));
  out.botha = bg.frob() / (1.0 + gram(pa).frob());

  // T_a against the two-term R expression.
  const Mat2 r1(r_matrix(p1.t, p1.eps));
  const Mat2 r2(r_matrix(p2.t, p2.eps));
  const double k1 = (pa.eps / p1.eps) * (pa.eps / p1.eps);
  const double k2 = (pa.eps / p2.eps) * (pa.eps / p2.eps);
  const RealSym2 inner = ((r1 * r1) * k1 + (r2 * r2) * k2).symmetric_part();
  const Mat2 formula = Mat2(geo::sqrt_psd(inner)) * (1.0 / std::sqrt(2.0)) -
                       Mat2(geo::inv_sqrt_pd(inner)) * (std::sqrt(2.0) * pa.eps * pa.eps);
  out.tformula = rel(ta, formula);

  out.eps_ratio_a1 = std::abs(pa.eps / p1.eps - 1.0);
  out.eps_ratio_12 = std::abs(p1.eps / p2.eps - 1.0);
  return out;
}

}  // namespace siegel::boundary

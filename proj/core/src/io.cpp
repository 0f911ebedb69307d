#include "siegel/io.hpp"

#include <cstdio>

namespace siegel::io {

using mat::RealSym2;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

RealSym2 parse_sym(const json& m, const char* name) {
  if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() ||
      m[0].size() != 2 || m[1].size() != 2)
    throw SchemaError(std::string("point schema: ") + name + " must be a 2x2 array");
  double e[4];
  int k = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const json& v = m[i][j];
      if (!v.is_number()) throw SchemaError(std::string("point schema: ") + name + " entries must be numbers");
      e[k++] = v.get<double>();
    }
  if (std::abs(e[1] - e[2]) > 1e-12)
    throw AsymmetryError(std::string("point schema: ") + name + " asymmetric beyond 1e-12");
  return RealSym2{e[0], 0.5 * (e[1] + e[2]), e[3]};
}

json sym_to_json(const RealSym2& m) {
  return json::array({json::array({m.xx, m.xy}), json::array({m.xy, m.yy})});
}

}  // namespace

geo::SiegelPoint parse_point(const json& payload) {
  if (!payload.is_object() || !payload.contains("X") || !payload.contains("Y"))
    throw SchemaError("point schema: expected object with X and Y");
  const RealSym2 x = parse_sym(payload.at("X"), "X");
  const RealSym2 y = parse_sym(payload.at("Y"), "Y");
  if (y.min_eig() < -1e-12) throw NotPSD("point schema: Y has eigenvalue below -1e-12");
  if (y.min_eig() > geo::kInteriorTol) return geo::SiegelPoint::interior(x, y);
  return geo::SiegelPoint::closure(x, y);
}

geo::SiegelPoint parse_point_text(const std::string& text) {
  json payload;
  try {
    payload = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("point schema: invalid JSON: ") + e.what());
  }
  return parse_point(payload);
}

json point_to_json(const geo::SiegelPoint& z) {
  return json{{"X", sym_to_json(z.x())}, {"Y", sym_to_json(z.y())}};
}

json report_to_json(const contraction::ContractionReport& rep) {
  return json{{"mu_star", rep.mu_star},
              {"mu_raw", rep.mu_raw},
              {"r1", rep.r1},
              {"r2", rep.r2},
              {"range_residual", rep.range_residual},
              {"eq_residual", rep.eq_residual}};
}

namespace {

json cmat_to_json(const mat::CMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

json match_to_json(const boundary::FormMatch& m) {
  json out{{"matched", m.matched}};
  out["alpha"] = json::array({m.alpha.real(), m.alpha.imag()});
  out["at_infinity"] = m.at_infinity;
  out["z"] = json::array({m.z.real(), m.z.imag()});
  out["r"] = m.r;
  out["p"] = m.p;
  return out;
}

}  // namespace

json report_to_json(const boundary::CaseReport& rep) {
  json trace = json::array();
  for (const auto& tp : rep.trace) {
    trace.push_back(json{{"n", tp.n},
                         {"mu_star", tp.mu_star},
                         {"w1_dist", tp.w1_gap},
                         {"w2_dist", tp.w2_gap},
                         {"wa_dist", tp.wa_gap},
                         {"ok", tp.ok},
                         {"note", tp.note}});
  }
  json out{{"case", rep.id.str()},
           {"p", rep.p},
           {"mu_final", rep.mu_final},
           {"converged", rep.converged},
           {"verdict", std::string(boundary::to_string(rep.verdict))},
           {"form_tol", rep.form_tol},
           {"trace", trace}};
  if (rep.w1) out["W1"] = cmat_to_json(rep.w1->w());
  if (rep.w2) out["W2"] = cmat_to_json(rep.w2->w());
  if (rep.wa) out["Wa"] = cmat_to_json(rep.wa->w());
  out["match_w1"] = match_to_json(rep.m1);
  out["match_w2"] = match_to_json(rep.m2);
  out["match_wa"] = match_to_json(rep.ma);
  return out;
}

json report_to_json(const fixedset::ScanReport& rep) {
  json per = json::array();
  for (const auto& pt : rep.per_lambda)
    per.push_back(json{{"lambda", pt.lambda}, {"min_residual", pt.min_residual}});
  return json{{"seed", rep.seed},
              {"sample_count", rep.sample_count},
              {"per_lambda", per},
              {"global_min", rep.global_min},
              {"argmin_lambda", rep.argmin_lambda},
              {"argmin_sample", rep.argmin_sample},
              {"fixed_point_residual", rep.fixed_point_residual}};
}

std::string trace_to_csv(const boundary::CaseReport& rep) {
  std::string out = "n,mu_star,w1_dist,w2_dist,wa_dist\n";
  for (const auto& tp : rep.trace) {
    out += g17(tp.n);
    out += ',';
    out += g17(tp.mu_star);
    out += ',';
    out += g17(tp.w1_gap);
    out += ',';
    out += g17(tp.w2_gap);
    out += ',';
    out += g17(tp.wa_gap);
    out += '\n';
  }
  return out;
}

}  // namespace siegel::io

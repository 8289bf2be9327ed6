#include "pfaffcubic/json_io.hpp"

#include "pfaffcubic/errors.hpp"

namespace pfaffcubic {

namespace {

Json points_json(const std::vector<Point>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

}  // namespace

Json to_json(const Point& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(c.to_string());
  return out;
}

Json to_json(const LineP& l) { return Json::array({to_json(l.a), to_json(l.b)}); }

Json to_json(const std::vector<MultiPoly>& forms) {
  Json out = Json::array();
  for (const auto& f : forms) out.push_back(f.to_string());
  return out;
}

Json to_json(const PolyMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).is_zero() ? "0" : m(i, j).to_string());
    out.push_back(row);
  }
  return out;
}

Json to_json(const SegreReport& r) {
  Json out;
  out["field"] = r.field.name();
  out["kind"] = to_string(r.kind);
  if (r.reduced_modulo) out["reduced_modulo"] = r.reduced_modulo;
  out["singular_hilbert"] = r.singular_hilbert;
  Json points = Json::array(), ranks = Json::array();
  for (const auto& p : r.points) {
    points.push_back({{"point", to_json(p.point)}, {"rank", p.rank}, {"label", p.label}});
    ranks.push_back(p.rank);
  }
  switch (r.kind) {
    case SegreKind::Smooth:
      break;
    case SegreKind::IsolatedDoublePoints:
      out["geometric_points"] = r.geometric_points;
      break;
    case SegreKind::DoubleCurve:
      if (r.curve_kind) out["curve_kind"] = to_string(*r.curve_kind);
      if (r.type) out["type"] = static_cast<int>(*r.type);
      out["curve_degree"] = r.curve_degree;
      out["curve_ideal"] = to_json(r.curve_ideal);
      out["extra_points"] = r.extra_points;
      break;
    case SegreKind::Cone:
      out["apex"] = points_json(r.apex);
      break;
    case SegreKind::NonNormalPlane:
      out["plane_ideal"] = to_json(r.plane_ideal);
      break;
    case SegreKind::NonIntegral:
      if (r.factors) {
        out["linear_factor"] = r.factors->linear.to_string();
        out["quadric_factor"] = r.factors->quadric.to_string();
        out["factor_method"] = r.factors->method;
      }
      break;
  }
  out["points"] = points;
  out["ranks"] = ranks;
  return out;
}

Json to_json(const SliceReport& r) {
  Json out;
  out["hyperplane"] = r.hyperplane.to_string();
  out["geometric_points"] = r.geometric_points;
  out["scheme_degree"] = r.scheme_degree;
  out["all_rational"] = r.all_rational;
  Json points = Json::array();
  for (const auto& p : r.points) {
    points.push_back({{"point", to_json(p.point)}, {"rank", p.rank}, {"milnor", p.milnor}, {"label", p.label}});
  }
  out["points"] = points;
  return out;
}

Json to_json(const PfaffianCertificate& c) {
  Json out;
  out["field"] = c.field.name();
  out["F"] = c.cubic.to_string();
  out["strategy"] = to_string(c.strategy);
  out["lambda"] = c.lambda.to_string();
  out["M"] = to_json(c.matrix.matrix());
  Json w = Json::object();
  for (const auto& x : c.witnesses) w[x.name] = x.values;
  out["witnesses"] = w;
  Json checks = Json::object();
  for (const auto& [name, ok] : c.checks) checks[name] = ok;
  out["checks"] = checks;
  out["seed"] = c.seed;
  out["retries"] = c.attempts;
  out["verified"] = c.verified;
  return out;
}

Json to_json(const QuinticResult& r, std::uint64_t seed) {
  const auto& q = r.quartic;
  const auto& s = r.scroll;
  Json out;
  out["field"] = r.curve.field().name();
  out["seed"] = seed;
  out["attempts"] = r.attempts;
  out["hyperplane"] = q.hyperplane.to_string();
  out["hyperplanes_tried"] = q.hyperplanes_tried;
  out["residual_to"] = to_json(q.residual_to);
  out["line"] = to_json(q.l);
  out["line_leaving_hyperplane"] = to_json(q.l_prime);
  out["conic"] = {{"plane", to_json(q.conic_plane)}, {"quadric", q.conic.to_string()}};
  out["attachment_points"] = points_json({q.x1, q.x2});
  out["quartic_ideal"] = to_json(q.ideal.generators());
  out["scroll"] = {{"ideal", to_json(s.ideal.generators())},
                   {"directrix", to_json(s.directrix)},
                   {"curve_anchors", points_json({s.x1, s.x2, s.x3})},
                   {"directrix_anchors", points_json({s.y1, s.y2, s.y3})}};
  out["quintic_ideal"] = to_json(r.curve.degree_piece(2));
  out["hilbert_polynomial"] = hilbert(r.curve).polynomial_string();
  return out;
}

CertificateCore certificate_from_json(const Json& j) {
  try {
    CertificateCore out;
    out.field = FieldSpec::parse(j.at("field").get<std::string>());
    out.cubic = parse_polynomial(j.at("F").get<std::string>(), 5, out.field);
    const auto& rows = j.at("M");
    const std::size_t n = rows.size();
    PolyMatrix m(out.field, 5, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw ParseError(0, "matrix row " + std::to_string(i) + " has the wrong length");
      for (std::size_t k = 0; k < n; ++k) m(i, k) = parse_polynomial(rows[i][k].get<std::string>(), 5, out.field);
    }
    out.matrix = SkewLinearMatrix(m);
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("certificate JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace pfaffcubic

// cubicpf: classify cubic threefolds and build Pfaffian representations.
//
// Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
// 3 search exhausted (retry with another seed or field).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pfaffcubic/errors.hpp"
#include "pfaffcubic/json_io.hpp"

using namespace pfaffcubic;

namespace {

constexpr int kOk = 0, kVerification = 1, kUsage = 2, kExhausted = 3;

struct RunConfig {
  std::string field = "p:13";
  std::uint64_t seed = 0;
  int retries = 8;
  int d_max = kDefaultHilbertDegree;
  bool json = false;
  int jobs = 1;
};

// Whole file (or stdin for "-") with '#' comments removed.
std::string read_input(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    buf << in.rdbuf();
  }
  std::string out, line;
  while (std::getline(buf, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    out += line + "\n";
  }
  return out;
}

std::string trim_newlines(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  std::string out;
  for (char c : s) out += c == '\n' ? ' ' : c;
  return out;
}

std::string point_text(const Point& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ":" : "") + p[i].to_string();
  return s + "]";
}

void print_forms(const std::string& label, const std::vector<MultiPoly>& forms) {
  std::cout << label << ":\n";
  for (const auto& f : forms) std::cout << "  " << f.to_string() << "\n";
}

int cmd_classify(const RunConfig& cfg, const std::string& path, bool slice) {
  const FieldSpec f = FieldSpec::parse(cfg.field);
  const auto x = CubicThreefold::parse(trim_newlines(read_input(path)), f);
  const SegreReport r = classify(x, cfg.seed, cfg.d_max);
  std::optional<SliceReport> s;
  if (slice) {
    Rng rng(cfg.seed);
    s = random_slice(x, rng);
  }
  if (cfg.json) {
    Json j = to_json(r);
    if (s) j["slice"] = to_json(*s);
    std::cout << dump(j);
    return kOk;
  }
  std::cout << "field: " << r.field.name() << "\n";
  if (r.reduced_modulo) std::cout << "analysed modulo " << r.reduced_modulo << "\n";
  std::cout << "kind: " << to_string(r.kind) << "\n";
  std::cout << "singular scheme Hilbert polynomial: " << r.singular_hilbert << "\n";
  switch (r.kind) {
    case SegreKind::Smooth:
      break;
    case SegreKind::IsolatedDoublePoints:
      std::cout << "double points over the closure: " << r.geometric_points << "\n";
      break;
    case SegreKind::DoubleCurve:
      if (r.curve_kind) std::cout << "curve: " << to_string(*r.curve_kind) << "\n";
      if (r.type) std::cout << "type: " << static_cast<int>(*r.type) << "\n";
      std::cout << "curve degree: " << r.curve_degree << "\n";
      print_forms("curve ideal", r.curve_ideal);
      if (r.extra_points) std::cout << "further double points: " << r.extra_points << "\n";
      break;
    case SegreKind::Cone:
      std::cout << "apex:";
      for (const auto& p : r.apex) std::cout << " " << point_text(p);
      std::cout << "\n";
      break;
    case SegreKind::NonNormalPlane:
      print_forms("double plane", r.plane_ideal);
      break;
    case SegreKind::NonIntegral:
      if (r.factors) std::cout << "F = (" << r.factors->linear.to_string() << ") * (" << r.factors->quadric.to_string() << ")\n";
      break;
  }
  for (const auto& p : r.points) std::cout << "point " << point_text(p.point) << " rank " << p.rank << " " << p.label << "\n";
  if (s) {
    std::cout << "slice " << s->hyperplane.to_string() << ": " << s->geometric_points << " singular points";
    for (const auto& p : s->points) std::cout << " " << p.label;
    std::cout << "\n";
  }
  return kOk;
}

int cmd_pfaffianize(const RunConfig& cfg, const std::string& path) {
  const FieldSpec f = FieldSpec::parse(cfg.field);
  const PfaffianCertificate c =
      pfaffianize_text(trim_newlines(read_input(path)), f, {cfg.seed, cfg.retries, cfg.d_max, cfg.jobs});
  if (cfg.json) {
    std::cout << dump(to_json(c));
    return c.verified ? kOk : kVerification;
  }
  std::cout << "field: " << c.field.name() << "\n";
  std::cout << "F = " << c.cubic.to_string() << "\n";
  std::cout << "strategy: " << to_string(c.strategy) << "\n";
  std::cout << "lambda: " << c.lambda.to_string() << "\n";
  std::cout << "M =\n";
  for (const auto& row : to_json(c.matrix.matrix())) {
    std::string line;
    for (const auto& e : row) line += (line.empty() ? "  " : "; ") + e.get<std::string>();
    std::cout << line << "\n";
  }
  for (const auto& [name, ok] : c.checks) std::cout << "check " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
  std::cout << "seed " << c.seed << ", attempts " << c.attempts << "\n";
  return c.verified ? kOk : kVerification;
}

int cmd_verify(const RunConfig& cfg, const std::string& matrix_path, const std::string& cubic_path,
               const std::string& certificate) {
  FieldSpec f = FieldSpec::parse(cfg.field);
  SkewLinearMatrix m;
  MultiPoly fx;
  if (!certificate.empty()) {
    Json j;
    try {
      j = Json::parse(read_input(certificate));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(0, e.what());
    }
    const CertificateCore core = certificate_from_json(j);
    f = core.field;
    m = core.matrix;
    fx = core.cubic;
  } else {
    if (matrix_path.empty() || cubic_path.empty()) throw CLI::ValidationError("verify needs MATRIX and CUBIC, or --certificate");
    m = SkewLinearMatrix(parse_matrix(read_input(matrix_path), 5, f));
    fx = parse_polynomial(trim_newlines(read_input(cubic_path)), 5, f);
  }
  if (m.size() % 2) throw DomainError("a Pfaffian needs an even-sized matrix, got " + std::to_string(m.size()));
  const VerifyResult v = verify(m, fx);
  if (cfg.json) {
    Json j;
    j["field"] = f.name();
    j["ok"] = v.ok;
    if (v.ok) j["lambda"] = v.lambda.to_string();
    j["pfaffian"] = v.pfaffian.to_string();
    std::cout << dump(j);
  } else {
    std::cout << (v.ok ? "ok" : "not proportional") << "\n";
    if (v.ok) std::cout << "lambda: " << v.lambda.to_string() << "\n";
    std::cout << "Pf(M) = " << v.pfaffian.to_string() << "\n";
  }
  return v.ok ? kOk : kVerification;
}

RootConfig rA1_config(int r) {
  RootConfig c;
  for (const auto& root : roots()) {
    bool ok = true;
    for (const auto& s : c.roots) ok = ok && pair(root, s) == 0;
    if (ok) c.roots.push_back(root);
    if (static_cast<int>(c.roots.size()) == r) return c;
  }
  throw SearchExhausted("no " + std::to_string(r) + " orthogonal roots");
}

int cmd_lattice(const RunConfig& cfg, const std::string& action, const std::string& config,
                const std::vector<std::string>& given) {
  const auto list = [&](const std::vector<LatticeClass>& cs) {
    if (cfg.json) {
      Json j = Json::array();
      for (const auto& c : cs) j.push_back(c.c);
      std::cout << dump(j);
    } else {
      for (const auto& c : cs) std::cout << c.to_string() << "\n";
    }
    return kOk;
  };
  if (action == "minus-one") return list(minus_one_classes());
  if (action == "roots") return list(roots());
  // find-e
  RootConfig rc;
  if (!given.empty()) {
    for (const auto& g : given) rc.roots.push_back(LatticeClass::parse(g));
  } else if (config == "A1" || config == "2A1" || config == "3A1") {
    rc = rA1_config(config == "A1" ? 1 : config[0] - '0');
  } else {
    throw CLI::ValidationError("--config must be A1, 2A1 or 3A1");
  }
  const LatticeClass e = find_disjoint_e(rc);
  const LatticeClass d = quintic_class(rc.roots.front(), e);
  const LatticeClass k = LatticeClass::canonical();
  std::vector<int> pe, pd;
  for (const auto& r : rc.roots) {
    pe.push_back(pair(e, r));
    pd.push_back(pair(d, r));
  }
  if (cfg.json) {
    Json j;
    j["config"] = rc.ade_type();
    Json rs = Json::array();
    for (const auto& r : rc.roots) rs.push_back(r.c);
    j["roots"] = rs;
    j["E"] = e.c;
    j["E.R"] = pe;
    j["D"] = d.c;
    j["D.D"] = pair(d, d);
    j["D.-K"] = pair(d, -k);
    j["D.R"] = pd;
    std::cout << dump(j);
    return kOk;
  }
  std::cout << "configuration: " << rc.ade_type() << "\n";
  for (std::size_t i = 0; i < rc.roots.size(); ++i) {
    std::cout << "R" << i + 1 << " = " << rc.roots[i].to_string() << "  E.R" << i + 1 << " = " << pe[i]
              << "  D.R" << i + 1 << " = " << pd[i] << "\n";
  }
  std::cout << "E = " << e.to_string() << "\n";
  std::cout << "D = R1 - K + 2E = " << d.to_string() << "  D^2 = " << pair(d, d) << "  D.(-K) = " << pair(d, -k)
            << "\n";
  return kOk;
}

int cmd_curve(const RunConfig& cfg, const std::string& path) {
  const FieldSpec f = FieldSpec::parse(cfg.field);
  const auto x = CubicThreefold::parse(trim_newlines(read_input(path)), f);
  const QuinticResult r = forge_quintic(x, cfg.seed, cfg.retries, cfg.d_max, cfg.jobs);
  const Json j = to_json(r, cfg.seed);
  if (cfg.json) {
    std::cout << dump(j);
    return kOk;
  }
  std::cout << "field: " << f.name() << "\n";
  std::cout << "hyperplane: " << j["hyperplane"].get<std::string>() << " (section " << r.quartic.hyperplanes_tried
            << ", attempt " << r.attempts << ")\n";
  std::cout << "line l: " << point_text(r.quartic.l.a) << " " << point_text(r.quartic.l.b) << "\n";
  std::cout << "line l': " << point_text(r.quartic.l_prime.a) << " " << point_text(r.quartic.l_prime.b) << "\n";
  print_forms("conic", [&] {
    auto c = r.quartic.conic_plane;
    c.push_back(r.quartic.conic);
    return c;
  }());
  print_forms("scroll", r.scroll.ideal.generators());
  print_forms("quintic", r.curve.degree_piece(2));
  std::cout << "Hilbert polynomial: " << j["hilbert_polynomial"].get<std::string>() << "\n";
  return kOk;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
    case ErrorKind::Domain:
    case ErrorKind::FieldLimitation:
      return kUsage;
    case ErrorKind::SearchExhausted:
    case ErrorKind::Undetermined:
      return kExhausted;
    case ErrorKind::Verification:
      return kVerification;
  }
  return kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segre classification and Pfaffian representations of cubic threefolds"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--field", cfg.field, "q or p:<prime>")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for every random choice")->capture_default_str();
  app.add_option("--retries", cfg.retries, "attempts per field before moving up the prime ladder")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--dmax", cfg.d_max, "degree bound for Hilbert functions")->capture_default_str()->check(CLI::Range(4, 40));
  app.add_flag("--json", cfg.json, "print JSON");
  app.add_option("--jobs", cfg.jobs, "worker threads for exhaustive scans")->capture_default_str()->check(CLI::Range(1, 64));

  std::string input, matrix, cubic_file, certificate, action, config;
  std::vector<std::string> given;
  bool slice = false;

  auto* classify_cmd = app.add_subcommand("classify", "Segre type of the singular locus");
  classify_cmd->add_option("CUBIC", input, "file with the cubic form, - for stdin")->required();
  classify_cmd->add_flag("--slice", slice, "also report the singularities of a random hyperplane section");

  auto* pf_cmd = app.add_subcommand("pfaffianize", "build and verify a 6x6 skew matrix with Pf(M) = F");
  pf_cmd->add_option("CUBIC", input, "file with the cubic form, - for stdin")->required();

  auto* verify_cmd = app.add_subcommand("verify", "check Pf(M) = lambda F");
  verify_cmd->add_option("MATRIX", matrix, "matrix file, one row per line, entries separated by ;");
  verify_cmd->add_option("CUBIC", cubic_file, "file with the cubic form");
  verify_cmd->add_option("--certificate", certificate, "certificate JSON written by pfaffianize --json");

  auto* lattice_cmd = app.add_subcommand("lattice", "Picard lattice of the cubic surface");
  lattice_cmd->add_option("ACTION", action, "minus-one, roots or find-e")
      ->required()
      ->check(CLI::IsMember({"minus-one", "roots", "find-e"}));
  lattice_cmd->add_option("--config", config, "A1, 2A1 or 3A1 for find-e")->default_val("A1");
  lattice_cmd->add_option("--root", given, "explicit roots for find-e, e.g. (0,1,-1,0,0,0,0)");

  auto* curve_cmd = app.add_subcommand("curve", "residual elliptic quintic and its witnesses");
  curve_cmd->add_option("CUBIC", input, "file with the cubic form, - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(cfg, input, slice);
    if (*pf_cmd) return cmd_pfaffianize(cfg, input);
    if (*verify_cmd) return cmd_verify(cfg, matrix, cubic_file, certificate);
    if (*lattice_cmd) return cmd_lattice(cfg, action, config, given);
    if (*curve_cmd) return cmd_curve(cfg, input);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  }
  return kUsage;
}

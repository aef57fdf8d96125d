#include "cgv/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cgv/baselocus.hpp"
#include "cgv/divisor.hpp"
#include "cgv/genus.hpp"
#include "cgv/parser.hpp"
#include "cgv/tangent.hpp"

namespace cgv {
namespace {

using Json = nlohmann::ordered_json;
using Checks = std::vector<CheckReport>;

std::string join(const std::vector<std::string>& parts, std::string_view sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string points_text(const std::vector<ProjPoint>& points) {
  std::vector<ProjPoint> sorted = points;
  std::sort(sorted.begin(), sorted.end(),
            [](const ProjPoint& a, const ProjPoint& b) { return point_to_string(a) > point_to_string(b); });
  std::vector<std::string> parts;
  for (const auto& p : sorted) parts.push_back(point_to_string(p));
  return parts.empty() ? "none" : join(parts);
}

std::string m_text(const std::optional<NFElem>& m) { return m ? "m = " + m->to_string() : "m symbolic"; }

// sigma --------------------------------------------------------------------

Checks sigma_checks(const RunConfig&) {
  const CoordMap s = CoordMap::sigma();
  const CoordMap s2 = s.power(2);
  Checks out;
  out.push_back(make_report("sigma.order", std::to_string(s.order()),
                            PaperClaim{"4", "Please note that it is of order $4$"},
                            {"sigma = " + s.to_string(), "sigma^2 = " + s2.to_string(),
                             "sigma^3 = " + s.power(3).to_string()}));
  out.push_back(make_report("sigma.involution", std::to_string(s2.order()),
                            PaperClaim{"2", "therefore $\\sigma^2$ is an involution"}, {"sigma^2 = " + s2.to_string()}));
  for (const auto& line : {line_r(), line_r_prime()}) {
    auto report = fixed_line_check(s2, line);
    report.check_id = "sigma.fixed-line." + line.name();
    out.push_back(std::move(report));
  }
  return out;
}

// cubics -------------------------------------------------------------------

Checks cubic_checks(const RunConfig&) {
  const auto& family = cubic_family();
  Checks out;
  std::vector<std::string> notes{std::string(kBracketReading)};
  for (std::size_t i = 0; i < 4; ++i) {
    notes.push_back("C" + std::to_string(i) + " = " + std::string(var_name(family.cofactors[i])) + " * Q" +
                    std::to_string(i) + ", Q" + std::to_string(i) + " = " + family.quadrics[i].to_string());
  }
  out.push_back(make_report("cubics.factorization", "holds", PaperClaim{"holds", "(3r-2)[X+mY+r^2Z]T"},
                            std::move(notes)));

  const CoordMap s = CoordMap::sigma();
  std::vector<std::string> images;
  bool permutes = true;
  std::vector<bool> hit(4, false);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto j = find_in_family(apply_map(family.cubics[i], s), family.cubics);
    if (!j || hit[*j]) {
      permutes = false;
      images.push_back("C" + std::to_string(i) + " o sigma = (not a family member)");
      continue;
    }
    hit[*j] = true;
    images.push_back("C" + std::to_string(i) + " o sigma = C" + std::to_string(*j));
  }
  out.push_back(make_report("cubics.sigma-permutation", permutes ? "permutes C0..C3" : "does not permute C0..C3",
                            std::nullopt, std::move(images)));
  return out;
}

// base locus ---------------------------------------------------------------

CheckReport reduction_check() {
  // 9r^6 - 12r^5 + 4r^4 + 6r^3 + 11r^2 - 25r + 10, coefficients low to high.
  const UPoly<BigRational> printed_sum{10, -25, 11, 6, 4, -12, 9};
  const UPoly<BigRational> expansion_line{-10, -25, 11, 6, 4, -12, 9};
  const NFElem value = nf_reduce(printed_sum);
  return make_report("base-locus.m-coefficient", value.to_string(),
                     PaperClaim{"0", "m(9r^3+9r^2-9)=0"},
                     {"reduce(9r^6 - 12r^5 + 4r^4 + 6r^3 + 11r^2 - 25r + 10) = " + value.to_string(),
                      "the expansion line with constant -10 reduces to " + nf_reduce(expansion_line).to_string()});
}

CheckReport coprime_check() {
  const UPoly<BigRational> f{10, 4, -20};
  const auto g = gcd(f, minimal_polynomial());
  return make_report("base-locus.coprime", g.degree() == 0 ? "1" : g.to_string("x"),
                     PaperClaim{"1", "it is relatively prime to $r^3+r^2-1$"},
                     {"gcd(-20x^2 + 4x + 10, x^3 + x^2 - 1), monic",
                      "this certifies the printed constant is nonzero; it is not the determinant (see det check)"});
}

Checks base_locus_checks(const RunConfig& config) {
  const auto m = config.m_value();
  Checks out;
  out.push_back(reduction_check());
  out.push_back(coprime_check());

  const auto sys = single_hyperplane_system(Var::T);
  const bool equal = sys.matrix == printed_hyperplane_matrix();
  out.push_back(make_report("base-locus.T.matrix", equal ? "equals printed" : "differs from printed",
                            PaperClaim{"equals printed", "which can be written in the matrix form"},
                            {"computed " + sys.matrix.to_string(), "basis X*Y, Y*Z, Z*X; rows from Q1, Q2, Q3",
                             "row 1 is the restricted bracket of Q1 (Q1 restricted = (3r-2) * row 1)"}));
  out.push_back(single_hyperplane_det_analysis(Var::T).report);

  // Triple-hyperplane strata.
  std::vector<ProjPoint> triple_points;
  std::vector<std::string> triple_notes;
  bool triple_decided = true;
  for (std::size_t idx = 0; idx < 16; ++idx) {
    const auto s = Stratum::from_index(idx);
    if (s.quadric_indices().size() != 1) continue;
    const auto res = classify_stratum(s, m);
    triple_decided = triple_decided && res.kind != StratumKind::inconclusive;
    triple_points.insert(triple_points.end(), res.points.begin(), res.points.end());
    triple_notes.push_back(s.label() + ": " + res.summary() + "; " + join(res.identities, "; "));
  }
  out.push_back(make_report("base-locus.triple-hyperplane", points_text(triple_points),
                            PaperClaim{"[1:0:0:0], [0:1:0:0], [0:0:1:0], [0:0:0:1]",
                                       "this intersection is $[0:0:1:0]$"},
                            std::move(triple_notes), triple_decided));

  // Double-hyperplane strata.
  std::vector<std::string> double_notes{m_text(m)};
  bool only_reference = true;
  bool uniform = true;
  for (std::size_t idx = 0; idx < 16; ++idx) {
    const auto s = Stratum::from_index(idx);
    if (s.quadric_indices().size() != 2) continue;
    const auto res = classify_stratum(s, m);
    only_reference = only_reference && res.kind != StratumKind::inconclusive &&
                     res.kind != StratumKind::non_reference_points;
    uniform = uniform && res.uniform_in_m;
    double_notes.push_back(s.label() + ": " + res.summary() + "; " + join(res.identities, "; "));
  }
  if (!uniform) double_notes.push_back("some restriction has a coefficient that vanishes for special m");
  out.push_back(make_report("base-locus.double-hyperplane", only_reference ? "reference points only" : "undetermined",
                            PaperClaim{"reference points only", "either $Y=0$ or $Z=0$"}, std::move(double_notes),
                            only_reference && (uniform || m.has_value())));

  // Single-hyperplane strata via the monomial kernel.
  for (Var h : {Var::T, Var::X, Var::Y, Var::Z}) {
    const auto res = monomial_kernel_lift(h, m);
    std::vector<std::string> notes{m_text(m), "points: " + points_text(res.points)};
    notes.insert(notes.end(), res.identities.begin(), res.identities.end());
    const std::string computed = res.kind == StratumKind::non_reference_points ? "non-reference points"
                                 : res.kind == StratumKind::inconclusive    ? "undetermined"
                                                                            : "reference points only";
    const PaperClaim claim =
        h == Var::T ? PaperClaim{"reference points only",
                                 "So the intersection of $T=0$ with $Q_1\\cap Q_2\\cap Q_3$ is $[0:1:0:0]$ and "
                                 "$[0:0:1:0]$ and $[1:0:0:0]$"}
                    : PaperClaim{"reference points only", "Similarly we can check that the other intersections"};
    const bool decided = res.kind != StratumKind::inconclusive && (m.has_value() || res.uniform_in_m);
    out.push_back(make_report("base-locus.kernel-lift." + std::string(var_name(h)), computed, claim,
                              std::move(notes), decided));
  }

  const auto analysis = analyze_base_locus(m);
  std::vector<std::string> strata_notes{m_text(m)};
  for (std::size_t idx = 0; idx < 16; ++idx) {
    strata_notes.push_back(Stratum::from_index(idx).label() + ": " + analysis.strata[idx].summary());
  }
  strata_notes.push_back("points found: " + points_text(analysis.points));
  strata_notes.push_back(
      "Q0 Q1 Q2 Q3 stratum: linear independence of the quadrics does not determine their common zeros");
  strata_notes.push_back(
      "the codimension-2 step for 3K_V is a cited assumption (\"codimension of the base locus of $3K_V$ must be "
      "$2$\"), not recomputed");
  const std::string computed = analysis.verdict == Agreement::confirmed ? "exactly the reference points"
                               : analysis.verdict == Agreement::refuted ? "extra base points"
                                                                        : "undetermined";
  out.push_back(make_report("base-locus.aggregate", computed,
                            PaperClaim{"exactly the reference points", "has four reference points as four base points"},
                            std::move(strata_notes), analysis.verdict != Agreement::indeterminate));
  return out;
}

Checks independence_checks(const RunConfig& config) { return quadric_independence(config.m_value()).reports; }

// tangent ------------------------------------------------------------------

Checks tangent_checks(const RunConfig& config) {
  Checks out;
  for (std::size_t i = 0; i < 3; ++i) out.push_back(printed_tangent_check(i));
  out.push_back(pairwise_independence(0, 1));
  out.push_back(pairwise_independence(0, 2));
  out.push_back(pairwise_independence(1, 2));
  out.push_back(lambda_replay());
  out.push_back(reference_point_rank());
  auto survey = rank_survey(config.survey, config.seed, config.m_or_default());
  if (!config.m) survey.report.notes.push_back("no m given: surveyed at m = 1");
  out.push_back(std::move(survey.report));
  return out;
}

// genus and pencil ---------------------------------------------------------

Checks pencil_checks(const RunConfig& config) {
  const NFElem m = config.m_or_default();
  Checks out = witness_pencil_analysis(m);
  out.push_back(z4_witness_report(config.bound, m));
  if (const auto w = z4_witness_search(config.bound, m)) out.push_back(cubic_one_root_probe(w->lambda, w->mu, m));
  out.push_back(cubic_one_root_probe(BinaryForm::from_poly(parse_poly("X^3-X*Y^2")),
                                     "pencil.cubic-probe.three-roots"));
  out.push_back(quintuple_root_check());
  out.push_back(three_two_root_check());
  if (!config.m) {
    for (auto& r : out) {
      if (r.check_id == "pencil.z4-witness" || r.check_id == "pencil.cubic-probe.member") {
        r.notes.push_back("no m given: evaluated at m = 1");
      }
    }
  }
  return out;
}

using Group = std::function<Checks(const RunConfig&)>;

const std::vector<std::pair<std::string_view, Group>>& groups() {
  static const std::vector<std::pair<std::string_view, Group>> kGroups{
      {"sigma", sigma_checks},
      {"cubics", cubic_checks},
      {"base-locus", base_locus_checks},
      {"quadric-independence", independence_checks},
      {"tangent", tangent_checks},
      {"divisors", [](const RunConfig&) { return divisor_reports(); }},
      {"genus", [](const RunConfig&) { return genus_reports(); }},
      {"pencil", pencil_checks},
  };
  return kGroups;
}

Json check_to_json(const CheckReport& c) {
  Json j;
  j["check_id"] = c.check_id;
  j["computed"] = c.computed;
  j["paper_claim"] = c.paper_claim ? Json{{"value", c.paper_claim->value}, {"citation", c.paper_claim->citation}}
                                   : Json(nullptr);
  j["agreement"] = std::string(to_string(c.agreement));
  j["notes"] = c.notes;
  j["elapsed_ms"] = std::to_string(c.elapsed_ms);
  return j;
}

CheckReport check_from_json(const Json& j) {
  CheckReport c;
  c.check_id = j.at("check_id").get<std::string>();
  c.computed = j.at("computed").get<std::string>();
  if (!j.at("paper_claim").is_null()) {
    c.paper_claim = PaperClaim{j.at("paper_claim").at("value").get<std::string>(),
                               j.at("paper_claim").at("citation").get<std::string>()};
  }
  c.agreement = agreement_from_string(j.at("agreement").get<std::string>());
  c.notes = j.at("notes").get<std::vector<std::string>>();
  c.elapsed_ms = std::stoll(j.at("elapsed_ms").get<std::string>());
  return c;
}

}  // namespace

std::optional<NFElem> RunConfig::m_value() const {
  if (!m) return std::nullopt;
  MPoly value;
  try {
    value = parse_poly(*m);
  } catch (const ParseError& e) {
    throw ConfigError("bad --m expression: " + std::string(e.what()));
  }
  if (!value.is_constant()) throw ConfigError("--m must be an element of Q(r), got " + value.to_string());
  return value.constant_term();
}

NFElem RunConfig::m_or_default() const { return m_value().value_or(NFElem(1)); }

void RunConfig::validate() const {
  if (survey < 1) throw ConfigError("--survey must be >= 1");
  if (bound < 1) throw ConfigError("--bound must be >= 1");
  (void)m_value();
}

SuiteReport run_suite(std::string_view name, const RunConfig& config) {
  const bool all = name == "all";
  if (!all && std::none_of(std::begin(kSuiteNames), std::end(kSuiteNames),
                           [&](std::string_view s) { return s == name; })) {
    throw ConfigError("unknown suite '" + std::string(name) + "'");
  }
  config.validate();
  SuiteReport out;
  out.suite = std::string(name);
  if (const auto m = config.m_value()) out.m = m->to_string();
  out.seed = std::to_string(config.seed);
  out.survey = std::to_string(config.survey);
  out.bound = std::to_string(config.bound);
  for (const auto& [group, run] : groups()) {
    if (!all && group != name) continue;
    const auto start = std::chrono::steady_clock::now();
    try {
      Checks checks = run(config);
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      for (auto& c : checks) {
        if (config.timing) c.elapsed_ms = ms.count();
        out.checks.push_back(std::move(c));
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      out.errors.push_back(std::string(group) + ": " + e.what());
    }
  }
  for (const auto& c : out.checks) {
    switch (c.agreement) {
      case Agreement::confirmed:
        ++out.summary.confirmed;
        break;
      case Agreement::refuted:
        ++out.summary.refuted;
        break;
      case Agreement::indeterminate:
        ++out.summary.indeterminate;
        break;
    }
  }
  out.summary.errors = out.errors.size();
  return out;
}

int exit_code(const SuiteReport& report) { return report.errors.empty() ? 0 : 1; }

std::string to_json(const SuiteReport& report) {
  Json j;
  j["suite"] = report.suite;
  j["config"] = Json{{"m", report.m ? Json(*report.m) : Json(nullptr)},
                     {"seed", report.seed},
                     {"survey", report.survey},
                     {"bound", report.bound}};
  j["checks"] = Json::array();
  for (const auto& c : report.checks) j["checks"].push_back(check_to_json(c));
  j["errors"] = report.errors;
  j["summary"] = Json{{"confirmed", std::to_string(report.summary.confirmed)},
                      {"refuted", std::to_string(report.summary.refuted)},
                      {"indeterminate", std::to_string(report.summary.indeterminate)},
                      {"errors", std::to_string(report.summary.errors)}};
  return j.dump(2) + "\n";
}

SuiteReport suite_report_from_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    SuiteReport out;
    out.suite = j.at("suite").get<std::string>();
    const auto& cfg = j.at("config");
    if (!cfg.at("m").is_null()) out.m = cfg.at("m").get<std::string>();
    out.seed = cfg.at("seed").get<std::string>();
    out.survey = cfg.at("survey").get<std::string>();
    out.bound = cfg.at("bound").get<std::string>();
    for (const auto& c : j.at("checks")) out.checks.push_back(check_from_json(c));
    if (j.contains("errors")) out.errors = j.at("errors").get<std::vector<std::string>>();
    const auto& s = j.at("summary");
    out.summary.confirmed = std::stoul(s.at("confirmed").get<std::string>());
    out.summary.refuted = std::stoul(s.at("refuted").get<std::string>());
    out.summary.indeterminate = std::stoul(s.at("indeterminate").get<std::string>());
    out.summary.errors = std::stoul(s.at("errors").get<std::string>());
    return out;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const SuiteReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << " (m = " << report.m.value_or("symbolic") << ", seed = " << report.seed
     << ", survey = " << report.survey << ", bound = " << report.bound << ")\n";
  for (const auto& c : report.checks) {
    os << "\n[" << to_string(c.agreement) << "] " << c.check_id << ": " << c.computed << "\n";
    if (c.paper_claim) os << "    claim: " << c.paper_claim->value << "  <" << c.paper_claim->citation << ">\n";
    for (const auto& n : c.notes) os << "    - " << n << "\n";
    if (c.elapsed_ms != 0) os << "    elapsed: " << c.elapsed_ms << " ms\n";
  }
  for (const auto& e : report.errors) os << "\n[error] " << e << "\n";
  os << "\nsummary: " << report.summary.confirmed << " confirmed, " << report.summary.refuted << " refuted, "
     << report.summary.indeterminate << " indeterminate, " << report.summary.errors << " errors\n";
  return os.str();
}

std::string eval_expr(std::string_view text) { return parse_poly(text).to_string(); }

}  // namespace cgv

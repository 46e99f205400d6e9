#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "haefliger/calculus.hpp"
#include "haefliger/gauss_code.hpp"
#include "haefliger/generator.hpp"
#include "haefliger/io.hpp"

namespace haefliger::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Human, Json };

struct Context {
  Format format = Format::Human;
  std::uint64_t seed = 1;
  std::ostream* out = nullptr;
};

std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("HAEFLIGER_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "HAEFLIGER_SEED must be an unsigned integer");
    }
  }
  return 1;
}

ProjectionAxis parse_axis(const std::vector<double>& v) {
  if (v.size() != 3) throw Error(ErrorKind::ParseError, "--axis takes three numbers");
  return ProjectionAxis::normalized({v[0], v[1], v[2]});
}

/// Emits `report` as compact JSON, or `human` in human mode.
void emit(const Context& ctx, const json& report, const std::string& human) {
  if (ctx.format == Format::Json)
    *ctx.out << report.dump() << "\n";
  else
    *ctx.out << human << "\n";
}

void write_file(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  f << j.dump(2) << "\n";
}

int lk_in_context(const PolyCurve& a, const PolyCurve& b, const std::vector<double>& axis, const Context& ctx) {
  if (!axis.empty()) return linking_number_pl(a, b, parse_axis(axis));
  return linking_number_any_axis(a, b, ProjectionAxis{}, ctx.seed);
}

TriplePattern parse_pattern(const std::string& s) {
  static const std::map<std::string, TriplePattern> names{{"all_distinct", TriplePattern::AllDistinct},
                                                          {"i_eq_j", TriplePattern::IEqJ},
                                                          {"p_eq_i", TriplePattern::PEqI},
                                                          {"j_eq_p", TriplePattern::JEqP},
                                                          {"all_equal", TriplePattern::AllEqual}};
  auto it = names.find(s);
  if (it == names.end()) throw Error(ErrorKind::ParseError, "unknown triple point pattern '" + s + "'");
  return it->second;
}

json int_list(const std::vector<int>& v) {
  json a = json::array();
  for (int x : v) a.push_back(x);
  return a;
}

}  // namespace

int exit_code(ErrorKind kind) { return 10 + static_cast<int>(kind); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crossing-change calculus for the Haefliger invariant"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  ctx.out = &out;
  std::string format = "human";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}));

  std::string path;
  std::vector<double> axis;

  auto* lk = app.add_subcommand("lk", "Linking numbers of the components of a curve file");
  lk->add_option("curves", path, "Curve JSON file")->required();
  lk->add_option("--axis", axis, "Projection axis x y z")->expected(3)->delimiter(',');
  int quadrature = 0;
  lk->add_option("--quadrature", quadrature, "Also report the Gauss integral with this many subdivisions");

  auto* writhe = app.add_subcommand("writhe", "Writhe of one component of a curve file");
  writhe->add_option("curves", path, "Curve JSON file")->required();
  writhe->add_option("--axis", axis, "Projection axis x y z")->expected(3)->delimiter(',');
  std::size_t component = 0;
  writhe->add_option("--component", component, "Component index");

  auto* delta_h = app.add_subcommand("delta-h", "H(f) - H(f_S) for a crossing diagram");
  delta_h->add_option("diagram", path, "Diagram JSON file")->required();
  std::vector<int> switches;
  delta_h->add_option("--switch", switches, "Crossing to change (repeatable or comma separated)")->delimiter(',');
  std::string formula = "reduced";
  delta_h->add_option("--formula", formula, "full, reduced or both")->check(CLI::IsMember({"full", "reduced", "both"}));

  auto* vfinite = app.add_subcommand("vfinite", "Alternating sum over crossing changes");
  vfinite->add_option("diagram", path, "Diagram JSON file")->required();
  std::vector<int> crossings;
  vfinite->add_option("--crossings", crossings, "Crossings A (comma separated)")->required()->delimiter(',');
  std::string h0_text = "0";
  vfinite->add_option("--h0", h0_text, "Base value H(f), n or n/d");

  auto* ejump = app.add_subcommand("e-jump", "Jump of E across a codimension-one event");
  std::string kind;
  ejump->add_option("--kind", kind)->required()->check(CLI::IsMember({"definite", "indefinite", "triple"}));
  int k = 1;
  HomotopyEvent event;
  std::string pattern = "all_distinct";
  ejump->add_option("--k", k);
  ejump->add_option("--index", event.index);
  ejump->add_flag("--joins", event.joins_components);
  ejump->add_option("--lk00", event.lk00);
  ejump->add_option("--lk11", event.lk11);
  ejump->add_option("--pattern", pattern);
  ejump->add_option("--sign", event.sign);

  auto* generator = app.add_subcommand("generator", "Haefliger's generator: diagram, curves and verification");
  int gen_k = 1;
  std::string alpha = "4", beta = "1", curves_out;
  int resolution = 64;
  bool verify = false;
  generator->add_option("--k", gen_k);
  generator->add_option("--alpha", alpha);
  generator->add_option("--beta", beta);
  generator->add_option("--resolution", resolution);
  generator->add_option("--curves-out", curves_out, "Write the k=1 double point curves here");
  generator->add_flag("--verify", verify, "Run the k=1 linking verification");

  auto* v2cmd = app.add_subcommand("v2", "Casson invariant of a Gauss code");
  std::string code;
  v2cmd->add_option("code", code, "Extended Gauss code, e.g. O1+U2+O3+U1+O2+U3+");
  v2cmd->add_option("--file", path, "Read the code from a file");
  bool verbose = false;
  v2cmd->add_flag("--verbose", verbose);

  auto* jacobian = app.add_subcommand("jacobian", "Determinant of the Dirac-pole Jacobian");
  int jac_k = 1;
  jacobian->add_option("--k", jac_k)->required();

  auto* murai = app.add_subcommand("murai-ohba", "Single-crossing unknotting certificate for a 2-component link");
  murai->add_option("curves", path, "Curve JSON file with two components")->required();
  murai->add_option("--axis", axis, "Projection axis x y z")->expected(3)->delimiter(',');

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code_ = app.exit(e, out, err);
    return code_ == 0 ? 0 : 2;
  }

  try {
    ctx.format = format == "json" ? Format::Json : Format::Human;
    ctx.seed = seed_from_env();

    if (lk->parsed()) {
      const auto curves = io::curves_from_json(io::read_json_file(path));
      if (curves.size() < 2) throw Error(ErrorKind::ParseError, "need at least two components");
      if (curves.size() == 2) {
        const int value = lk_in_context(curves[0], curves[1], axis, ctx);
        json report = {{"lk", value}};
        std::string human = std::to_string(value);
        if (quadrature > 0) {
          const double q = gauss_linking_quadrature(curves[0], curves[1], quadrature);
          report["quadrature"] = q;
          std::ostringstream s;
          s << value << " (quadrature " << std::setprecision(12) << q << ")";
          human = s.str();
        }
        emit(ctx, report, human);
      } else {
        json matrix = json::array();
        std::ostringstream human;
        for (std::size_t a = 0; a < curves.size(); ++a) {
          json row = json::array();
          for (std::size_t b = 0; b < curves.size(); ++b) {
            const int value = a == b ? 0 : lk_in_context(curves[a], curves[b], axis, ctx);
            row.push_back(value);
            human << (b ? " " : "") << value;
          }
          matrix.push_back(row);
          if (a + 1 < curves.size()) human << "\n";
        }
        emit(ctx, {{"matrix", matrix}}, human.str());
      }
    } else if (writhe->parsed()) {
      const auto curves = io::curves_from_json(io::read_json_file(path));
      if (component >= curves.size()) throw Error(ErrorKind::IndexOutOfRange, "no such component");
      const ProjectionAxis ax = axis.empty() ? ProjectionAxis{} : parse_axis(axis);
      const int w = writhe_pl(curves[component], ax);
      emit(ctx, {{"writhe", w}}, std::to_string(w));
    } else if (delta_h->parsed()) {
      const CrossingDiagram d = io::diagram_from_json(io::read_json_file(path));
      const CrossingSet s(switches.begin(), switches.end());
      if (formula == "both") {
        const Rational full = delta_h_full(d, s), reduced = delta_h_reduced(d, s);
        emit(ctx, {{"full", io::rational_to_json(full)}, {"reduced", io::rational_to_json(reduced)}},
             "full " + to_string(full) + "\nreduced " + to_string(reduced));
      } else {
        const Rational r = formula == "full" ? delta_h_full(d, s) : delta_h_reduced(d, s);
        emit(ctx, io::rational_to_json(r), io::rational_to_json(r).dump());
      }
    } else if (vfinite->parsed()) {
      const CrossingDiagram d = io::diagram_from_json(io::read_json_file(path));
      const AlternatingSum sum = v_alternating(parse_rational(h0_text), d, crossings);
      json terms = json::array();
      std::ostringstream human;
      for (const auto& t : sum.terms) {
        terms.push_back({{"subset", int_list(t.subset)}, {"value", io::rational_to_json(t.value)}});
        human << "{";
        for (std::size_t i = 0; i < t.subset.size(); ++i) human << (i ? "," : "") << t.subset[i];
        human << "} " << to_string(t.value) << "\n";
      }
      human << "V = " << to_string(sum.value);
      emit(ctx, {{"value", io::rational_to_json(sum.value)}, {"terms", terms}}, human.str());
    } else if (ejump->parsed()) {
      event.kind = kind == "definite"     ? EventKind::DefiniteTangency
                   : kind == "indefinite" ? EventKind::IndefiniteTangency
                                          : EventKind::TriplePoint;
      event.pattern = parse_pattern(pattern);
      const Rational r = e_jump(event, k);
      emit(ctx, io::rational_to_json(r), io::rational_to_json(r).dump());
    } else if (generator->parsed()) {
      BorromeanParams params{parse_rational(alpha), parse_rational(beta), gen_k};
      if (verify) {
        const GeneratorReport rep = verify_generator(params, resolution, ctx.seed);
        json matrix = json::array();
        for (const auto& row : rep.linking) matrix.push_back(row);
        json singles = json::array();
        for (const auto& r : rep.single_switch) singles.push_back(io::rational_to_json(r));
        emit(ctx,
             {{"h", io::rational_to_json(rep.h)},
              {"nonzero_pairs", rep.nonzero_pairs},
              {"hopf_sign", rep.global_sign},
              {"linking", matrix},
              {"single_switch", singles}},
             "H = " + to_string(rep.h) + " (" + std::to_string(rep.nonzero_pairs) + " linked pairs, sign " +
                 std::to_string(rep.global_sign) + ")");
      } else {
        const CrossingDiagram d = generator_diagram(gen_k);
        if (!curves_out.empty()) {
          std::vector<PolyCurve> curves;
          for (auto& c : generator_double_point_curves(params, resolution)) curves.push_back(c.curve);
          write_file(curves_out, io::curves_to_json(curves));
        }
        *ctx.out << io::diagram_to_json(d).dump(ctx.format == Format::Json ? -1 : 2) << "\n";
      }
    } else if (v2cmd->parsed()) {
      if (!path.empty()) {
        std::ifstream f(path);
        if (!f) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
        std::stringstream buffer;
        buffer << f.rdbuf();
        code = buffer.str();
      }
      const GaussDiagramK g = parse_gauss_code(code);
      const std::int64_t value = v2(g);
      if (!verbose) {
        emit(ctx, {{"v2", value}}, std::to_string(value));
      } else {
        const auto desc = descending_set(g);
        const GaussDiagramK gd = switch_crossings(g, desc);
        std::vector<int> desc_list(desc.begin(), desc.end());
        std::ostringstream human;
        human << "v2 " << value << "\nx_pairing " << x_pairing(g) << "\nx_pairing_descending " << x_pairing(gd)
              << "\ndescending_set";
        for (int l : desc_list) human << " " << l;
        emit(ctx,
             {{"v2", value},
              {"x_pairing", x_pairing(g)},
              {"x_pairing_descending", x_pairing(gd)},
              {"descending_set", int_list(desc_list)}},
             human.str());
      }
    } else if (jacobian->parsed()) {
      const std::int64_t det = jacobian_det(jac_k);
      emit(ctx, {{"det", det}, {"size", 16 * jac_k - 4}}, std::to_string(det));
    } else if (murai->parsed()) {
      const auto curves = io::curves_from_json(io::read_json_file(path));
      if (curves.size() != 2) throw Error(ErrorKind::ParseError, "need exactly two components");
      const ProjectionAxis ax = axis.empty() ? ProjectionAxis{} : parse_axis(axis);
      const MuraiOhbaCertificate cert = murai_ohba_certificate(curves[0], curves[1], ax);
      emit(ctx,
           {{"delta_h", io::rational_to_json(cert.delta_h)},
            {"lk", cert.link_lk},
            {"switched", int_list({cert.switched.begin(), cert.switched.end()})},
            {"diagram", io::diagram_to_json(cert.diagram)}},
           "delta_h " + to_string(cert.delta_h) + " (lk " + std::to_string(cert.link_lk) + ", switch crossing 1)");
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace haefliger::cli

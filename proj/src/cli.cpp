#include "shellrange/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "shellrange/errors.hpp"
#include "shellrange/io.hpp"
#include "shellrange/oracle.hpp"

namespace shellrange {

namespace {

constexpr int kDefaultEmitPoints = 256;

std::string shortest(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

Model spatial_of(Model m) {
  if (m == Model::PH2) throw ModelDimensionMismatch("the shell has no half-space model here; use bck or pck");
  return m == Model::PCK2 ? Model::PCK3 : Model::BCK3;
}

// Points of the range boundary, or the eigenpoints for point cases.
std::vector<HPoint> emitted_points(const RangeDescriptor& d, int n, Model model) {
  if (d.kind == RangeCase::PointOrdinary || d.kind == RangeCase::PointAsymptotic) {
    std::vector<HPoint> pts;
    for (const auto& f : d.foci) pts.push_back(transcribe(f, model));
    return pts;
  }
  return boundary_polyline(d, n, model);
}

void write_csv(const std::vector<HPoint>& pts, std::ostream& out) {
  out << "model,x,z,is_asymptotic\n";
  for (const auto& p : pts) {
    out << to_string(p.model) << ',';
    if (p.at_infinity) {
      out << "inf,inf";
    } else {
      out << shortest(p.x) << ',' << shortest(p.z);
    }
    out << ',' << (is_asymptotic(p) ? 1 : 0) << '\n';
  }
}

// BCK disk onto a 1000x1000 canvas, z upward.
double svg_x(double x) { return 500.0 + 450.0 * x; }
double svg_y(double z) { return 500.0 - 450.0 * z; }

void write_svg(const RangeDescriptor& d, int n, std::ostream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
         "viewBox=\"0 0 1000 1000\">\n";
  out << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  out << "<circle cx=\"500\" cy=\"500\" r=\"450\" fill=\"#f2f2f2\" stroke=\"black\" "
         "stroke-width=\"2\"/>\n";
  const auto pts = emitted_points(d, n, Model::BCK2);
  if (pts.size() >= 2 && d.kind != RangeCase::PointOrdinary && d.kind != RangeCase::PointAsymptotic) {
    out << "<path d=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) {
      out << (k == 0 ? "M " : " L ") << shortest(svg_x(pts[k].x)) << ' ' << shortest(svg_y(pts[k].z));
    }
    if (is_non_normal_case(d.kind)) out << " Z";
    out << "\" fill=\"" << (is_non_normal_case(d.kind) ? "#9ecae1" : "none")
        << "\" stroke=\"#08519c\" stroke-width=\"2\"/>\n";
  }
  for (const auto& f : d.foci) {
    const bool asym = is_asymptotic(f);
    out << "<circle cx=\"" << shortest(svg_x(f.x)) << "\" cy=\"" << shortest(svg_y(f.z))
        << "\" r=\"6\" fill=\"" << (asym ? "white" : "#cb181d") << "\" stroke=\"#cb181d\" "
        << "stroke-width=\"2\" class=\"" << (asym ? "asymptotic" : "focus") << "\"/>\n";
  }
  if (d.vertex) {
    out << "<circle cx=\"" << shortest(svg_x(d.vertex->x)) << "\" cy=\"" << shortest(svg_y(d.vertex->z))
        << "\" r=\"4\" fill=\"black\" class=\"vertex\"/>\n";
  }
  out << "</svg>\n";
}

int emit(const RunConfig& cfg, const Mat2C& a, std::ostream& out) {
  const RangeDescriptor d = conformal_range(a);
  const int n = cfg.samples_given ? static_cast<int>(cfg.samples) : kDefaultEmitPoints;
  switch (cfg.format) {
    case OutputFormat::Csv:
      write_csv(emitted_points(d, n, cfg.model), out);
      break;
    case OutputFormat::Svg:
      write_svg(d, n, out);
      break;
    case OutputFormat::Json: {
      Json pts = Json::array(), asym = Json::array();
      for (const auto& p : emitted_points(d, n, cfg.model)) {
        pts.push_back(point_to_json(p));
        asym.push_back(is_asymptotic(p));
      }
      Json j{{"model", std::string(to_string(cfg.model))},
             {"case", std::string(to_string(d.kind))},
             {"points", pts},
             {"is_asymptotic", asym}};
      out << j.dump(2) << '\n';
      break;
    }
  }
  return 0;
}

int verify(const RunConfig& cfg, const Mat2C& a, std::ostream& out) {
  const RangeDescriptor range = conformal_range(a);
  const SampleCloud rc = sample(a, Target::ConformalRange2D, cfg.model, cfg.samples, cfg.seed);
  const Report rr = verify_membership(rc, range, cfg.tolerance);

  const Model shell_model = cfg.model == Model::PCK2 ? Model::PCK3 : Model::BCK3;
  const ShellDescriptor shell = dw_shell(a);
  const SampleCloud sc = sample(a, Target::Shell3D, shell_model, cfg.samples, cfg.seed);
  const Report sr = verify_membership(sc, shell, cfg.tolerance);

  const bool pass = rr.pass && sr.pass;
  Json j{{"samples", cfg.samples},
         {"seed", cfg.seed},
         {"tolerance", cfg.tolerance},
         {"max_violation", ext_real_to_json(std::max(rr.max_violation, sr.max_violation))},
         {"pass", pass},
         {"conformal_range", report_to_json(rr)},
         {"shell", report_to_json(sr)}};
  out << j.dump(2) << '\n';
  return pass ? 0 : 2;
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string matrix_text(const std::string& arg) {
  if (arg == "-") return read_all(std::cin);
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) throw std::runtime_error("cannot open " + arg.substr(1));
    return read_all(f);
  }
  return arg;
}

}  // namespace

int run(const RunConfig& cfg, const Mat2C& a, std::ostream& out) {
  if (cfg.samples < 1) throw std::invalid_argument("--samples must be at least 1");
  if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("--tolerance must be positive");
  if (cfg.format != OutputFormat::Json && cfg.subcommand != Subcommand::Emit) {
    throw std::invalid_argument("csv and svg output are only available for emit");
  }
  switch (cfg.subcommand) {
    case Subcommand::Classify:
      out << classification_to_json(a).dump(2) << '\n';
      return 0;
    case Subcommand::Range:
      out << range_to_json(conformal_range(a), cfg.model).dump(2) << '\n';
      return 0;
    case Subcommand::Shell:
      out << shell_to_json(dw_shell(a), spatial_of(cfg.model)).dump(2) << '\n';
      return 0;
    case Subcommand::NR:
      out << numerical_range_to_json(numerical_range(a)).dump(2) << '\n';
      return 0;
    case Subcommand::Verify:
      return verify(cfg, a, out);
    case Subcommand::Emit:
      return emit(cfg, a, out);
  }
  return 1;
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Conformal range, Davis-Wielandt shell and numerical range of 2x2 complex matrices"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("SHELLRANGE_TOLERANCE")) {
    try {
      cfg.tolerance = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "error: SHELLRANGE_TOLERANCE is not a number\n";
      return 1;
    }
  }
  std::string model = "bck";
  std::string format = "json";
  std::string out_path;
  std::string matrix_arg;

  app.add_option("--model", model, "hyperbolic model for emitted points")
      ->check(CLI::IsMember({"bck", "pck", "ph"}))
      ->capture_default_str();
  auto* samples = app.add_option("--samples", cfg.samples, "number of samples or polyline points")
                      ->check(CLI::PositiveNumber)
                      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
  app.add_option("--tolerance", cfg.tolerance, "verification tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "svg"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "output file (default stdout)");

  const std::pair<const char*, const char*> subs[] = {
      {"classify", "spectral class, invariants and canonical representative"},
      {"range", "conformal range descriptor"},
      {"shell", "Davis-Wielandt shell descriptor"},
      {"nr", "numerical range descriptor"},
      {"verify", "sample the ranges and check descriptor membership"},
      {"emit", "boundary polyline as json, csv or svg"},
  };
  for (const auto& [name, help] : subs) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("matrix", matrix_arg,
                    "\"a11,a12;a21,a22\", a JSON document, @file or - for stdin")
        ->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  if (sub == "classify") cfg.subcommand = Subcommand::Classify;
  else if (sub == "range") cfg.subcommand = Subcommand::Range;
  else if (sub == "shell") cfg.subcommand = Subcommand::Shell;
  else if (sub == "nr") cfg.subcommand = Subcommand::NR;
  else if (sub == "verify") cfg.subcommand = Subcommand::Verify;
  else cfg.subcommand = Subcommand::Emit;
  cfg.samples_given = samples->count() > 0;
  cfg.model = model_from_string(model);
  cfg.format = format == "csv" ? OutputFormat::Csv : format == "svg" ? OutputFormat::Svg : OutputFormat::Json;
  if (!out_path.empty()) cfg.output_path = out_path;

  try {
    const Mat2C a = parse_matrix(matrix_text(matrix_arg));
    std::ostringstream doc;
    const int code = run(cfg, a, doc);
    if (cfg.output_path) {
      std::ofstream f(*cfg.output_path);
      if (!f) throw std::runtime_error("cannot write " + *cfg.output_path);
      f << doc.str();
    } else {
      std::cout << doc.str();
    }
    return code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace shellrange

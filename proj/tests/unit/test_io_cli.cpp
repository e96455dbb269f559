#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "generators.hpp"
#include "shellrange/cli.hpp"
#include "shellrange/errors.hpp"
#include "shellrange/io.hpp"

using namespace shellrange;
using shellrange::testing::Gen;
using shellrange::testing::kAllClasses;

namespace {

const Complex I1{0.0, 1.0};

bool same(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

bool same_point(const HPoint& p, const HPoint& q) {
  return p.model == q.model && p.at_infinity == q.at_infinity && p.x == q.x && p.y == q.y && p.z == q.z;
}

void check_equal(const RangeDescriptor& a, const RangeDescriptor& b) {
  CHECK(a.kind == b.kind);
  CHECK(a.spectral_class == b.spectral_class);
  CHECK(a.eigenvalues == b.eigenvalues);
  REQUIRE(a.foci.size() == b.foci.size());
  for (std::size_t i = 0; i < a.foci.size(); ++i) CHECK(same_point(a.foci[i], b.foci[i]));
  CHECK(a.vertex.has_value() == b.vertex.has_value());
  if (a.vertex && b.vertex) CHECK(same_point(*a.vertex, *b.vertex));
  CHECK(same(a.sPlus, b.sPlus));
  CHECK(same(a.sMinus, b.sMinus));
  CHECK(same(a.sF, b.sF));
  CHECK(a.chiPlus == b.chiPlus);
  CHECK(a.chiMinus == b.chiMinus);
  CHECK(a.chiE == b.chiE);
  CHECK(a.touch_height == b.touch_height);
  CHECK(a.conic.Gc == b.conic.Gc);
  CHECK(a.conic.rank == b.conic.rank);
  CHECK(a.conic.primal.has_value() == b.conic.primal.has_value());
  if (a.conic.primal && b.conic.primal) CHECK(*a.conic.primal == *b.conic.primal);
}

struct Argv {
  std::vector<std::string> store;
  std::vector<char*> ptrs;
  explicit Argv(std::initializer_list<std::string> args) : store(args) {
    for (auto& s : store) ptrs.push_back(s.data());
  }
  int argc() { return static_cast<int>(ptrs.size()); }
  char** argv() { return ptrs.data(); }
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("inline matrices") {
  CHECK(parse_matrix("0,1;0,0") == make_mat(0, 1, 0, 0));
  CHECK(parse_matrix("1i,2;0,-1i") == make_mat(I1, 2, 0, -I1));
  CHECK(parse_matrix(" i , -i ; 1+2i , 1e-3-4i ") == make_mat(I1, -I1, Complex(1, 2), Complex(1e-3, -4)));
  CHECK(parse_matrix("-2.5,+3;.5i,1E2") == make_mat(-2.5, 3, Complex(0, 0.5), 100));
  CHECK(parse_matrix("0.1,0;0,0")(0, 0).real() == 0.1);
}

TEST_CASE("JSON matrices") {
  const Mat2C s = parse_matrix(R"({"matrix": [[[0,0],[0.5,0]],[[0,0],[0,0.8660254037844386]]]})");
  CHECK(s == make_mat(0, 0.5, 0, Complex(0, 0.8660254037844386)));
  CHECK(classify(s) == SpectralClass::SemiReal);
  CHECK(canonical_representative(s).beta == doctest::Approx(M_PI / 3).epsilon(1e-12));
}

TEST_CASE("parse errors carry positions") {
  auto position_of = [](const std::string& text) -> long {
    try {
      parse_matrix(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("1,2;3") == 5);
  CHECK(position_of("1,2;3,x") == 6);
  CHECK(position_of("1,2,3;4,5") == 3);
  CHECK(position_of("1,2;3,4;5,6") == 7);
  CHECK(position_of("1,2i3;3,4") == 4);
  CHECK(position_of("") == 0);
  CHECK(position_of("1,;3,4") == 2);
  CHECK(position_of(R"({"matrix": [[)") >= 0);
  CHECK_THROWS_AS(parse_matrix(R"({"matrix": [[1,2],[3,4]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1,2;3,1e999"), NonFiniteEntry);
  CHECK_THROWS_AS(parse_matrix("1,nan;3,4"), NonFiniteEntry);
  CHECK_THROWS_AS(parse_matrix("1,inf;3,4"), NonFiniteEntry);
  CHECK_THROWS_AS(parse_matrix(R"({"matrix": [[[1e999,0],[0,0]],[[0,0],[0,0]]]})"), NonFiniteEntry);
}

TEST_CASE("extended reals") {
  CHECK(ext_real_to_json(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(ext_real_to_json(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(std::isinf(ext_real_from_json("inf")));
  CHECK(ext_real_from_json(Json(0.1)) == 0.1);
}

TEST_CASE("range descriptors round trip") {
  Gen g(71);
  for (int k = 0; k < 280; ++k) {
    const RangeDescriptor d = conformal_range(g.of_class(kAllClasses[k % 7], k % 2 == 0));
    const Json j = range_to_json(d);
    check_equal(range_from_json(Json::parse(j.dump())), d);
    // other models round trip through transcription
    for (Model m : {Model::PCK2, Model::PH2}) {
      const RangeDescriptor e = range_from_json(Json::parse(range_to_json(d, m).dump()));
      for (std::size_t i = 0; i < d.foci.size(); ++i) {
        CHECK(std::hypot(e.foci[i].x - d.foci[i].x, e.foci[i].z - d.foci[i].z) < 1e-12);
      }
    }
  }
}

TEST_CASE("shell and numerical range descriptors round trip") {
  Gen g(72);
  for (int k = 0; k < 280; ++k) {
    const Mat2C a = g.of_class(kAllClasses[k % 7], k % 2 == 0);
    const ShellDescriptor s = dw_shell(a);
    const ShellDescriptor s2 = shell_from_json(Json::parse(shell_to_json(s).dump()));
    CHECK(s2.kind == s.kind);
    CHECK(same(s2.radius, s.radius));
    CHECK(s2.touch_height == s.touch_height);
    CHECK(s2.dual_quadric.G == s.dual_quadric.G);
    CHECK(s2.dual_quadric.rank == s.dual_quadric.rank);
    REQUIRE(s2.asymptotic_points.size() == s.asymptotic_points.size());
    for (std::size_t i = 0; i < s.asymptotic_points.size(); ++i) {
      CHECK(s2.asymptotic_points[i].value == s.asymptotic_points[i].value);
    }
    CHECK(s2.primal_bck.has_value() == s.primal_bck.has_value());
    if (s.primal_bck) CHECK(*s2.primal_bck == *s.primal_bck);

    const NumericalRangeDescriptor n = numerical_range(a);
    const NumericalRangeDescriptor n2 = numerical_range_from_json(Json::parse(numerical_range_to_json(n).dump()));
    CHECK(n2.foci == n.foci);
    CHECK(n2.sPlusE == n.sPlusE);
    CHECK(n2.sMinusE == n.sMinusE);
    CHECK(n2.sFE == n.sFE);
  }
}

TEST_CASE("run emits documents") {
  RunConfig cfg;
  std::ostringstream out;
  cfg.subcommand = Subcommand::Range;
  CHECK(run(cfg, make_mat(I1, 2, 0, -I1), out) == 0);
  Json j = Json::parse(out.str());
  CHECK(j["case"] == "circle");
  CHECK(j["foci"] == Json::parse("[[0.0, 0.0]]"));
  CHECK(j["s_minus"].get<double>() == doctest::Approx(0.8813735870).epsilon(1e-10));

  out.str("");
  cfg.subcommand = Subcommand::Classify;
  CHECK(run(cfg, Mat2C::Zero(), out) == 0);
  j = Json::parse(out.str());
  CHECK(j["class"] == "real-parabolic");
  CHECK(j["triple_ratio"] == Json::parse("[0, 0, 0]"));
  CHECK(j.contains("invariants"));
  CHECK(j.contains("canonical_rep"));
  CHECK(j.contains("eigendistance"));

  out.str("");
  cfg.subcommand = Subcommand::Shell;
  CHECK(run(cfg, make_mat(0, 1, 0, 0), out) == 0);
  j = Json::parse(out.str());
  CHECK(j["case"] == "horosphere");
  CHECK(j["radius"] == "inf");

  cfg.model = Model::PH2;
  CHECK_THROWS_AS(run(cfg, make_mat(0, 1, 0, 0), out), ModelDimensionMismatch);
}

TEST_CASE("verify exit codes") {
  RunConfig cfg;
  cfg.subcommand = Subcommand::Verify;
  cfg.samples = 100000;
  cfg.seed = 7;
  std::ostringstream out;
  CHECK(run(cfg, make_mat(0, 1, 0, 0), out) == 0);
  const Json j = Json::parse(out.str());
  CHECK(j["pass"] == true);
  CHECK(j["samples"] == 100000);
  CHECK(j.contains("max_violation"));
}

TEST_CASE("csv polylines satisfy the conic") {
  Gen g(73);
  for (int k = 0; k < 35; ++k) {
    const Mat2C a = g.of_class(kAllClasses[k % 7], false);
    const RangeDescriptor d = conformal_range(a);
    for (Model m : {Model::BCK2, Model::PCK2, Model::PH2}) {
      RunConfig cfg;
      cfg.subcommand = Subcommand::Emit;
      cfg.format = OutputFormat::Csv;
      cfg.model = m;
      std::ostringstream out;
      REQUIRE(run(cfg, a, out) == 0);
      std::istringstream in(out.str());
      std::string line;
      std::getline(in, line);
      CHECK(line == "model,x,z,is_asymptotic");
      int rows = 0;
      while (std::getline(in, line)) {
        std::stringstream row(line);
        std::string model, xs, zs, asym;
        std::getline(row, model, ',');
        std::getline(row, xs, ',');
        std::getline(row, zs, ',');
        std::getline(row, asym, ',');
        CHECK(model == std::string(to_string(m)));
        ++rows;
        if (xs == "inf") continue;
        const HPoint p = transcribe(HPoint::planar(m, std::stod(xs), std::stod(zs)), Model::BCK2);
        CHECK(std::abs(conic_value(d.conic, p)) < 1e-9);
      }
      CHECK(rows == 256);
    }
  }
}

TEST_CASE("svg figure") {
  RunConfig cfg;
  cfg.subcommand = Subcommand::Emit;
  cfg.format = OutputFormat::Svg;
  std::ostringstream out;
  CHECK(run(cfg, make_mat(0, 1, 0, 0), out) == 0);
  const std::string svg = out.str();
  CHECK(svg.find("viewBox=\"0 0 1000 1000\"") != std::string::npos);
  CHECK(svg.find("<path") != std::string::npos);
  CHECK(svg.find("class=\"asymptotic\"") != std::string::npos);
  // asymptotic focus (0, -1) sits at the bottom of the disk
  CHECK(svg.find("cx=\"500\" cy=\"950\"") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (auto sub : {Subcommand::Classify, Subcommand::Range, Subcommand::Shell, Subcommand::NR, Subcommand::Verify,
                   Subcommand::Emit}) {
    RunConfig cfg;
    cfg.subcommand = sub;
    cfg.samples = 3000;
    cfg.seed = 5;
    std::ostringstream a, b;
    const Mat2C m = make_mat(Complex(0.2, 0.3), 1.5, Complex(0, -0.4), Complex(-1, 0.7));
    run(cfg, m, a);
    run(cfg, m, b);
    CHECK(a.str() == b.str());
  }
}

TEST_CASE("command line") {
  const std::string path = "test_io_cli_out.json";
  {
    Argv args{"shellrange", "range", "--model", "bck", "--out", path, "1i,2;0,-1i"};
    CHECK(cli_main(args.argc(), args.argv()) == 0);
    CHECK(Json::parse(slurp(path))["case"] == "circle");
  }
  {
    Argv args{"shellrange", "verify", "--samples", "1000", "--seed", "7", "--tolerance", "1e-8", "--out", path, "0,1;0,0"};
    CHECK(cli_main(args.argc(), args.argv()) == 0);
  }
  {
    Argv args{"shellrange", "classify", "--out", path, "1,2;3"};
    CHECK(cli_main(args.argc(), args.argv()) == 1);
  }
  {
    Argv args{"shellrange", "classify", "--model", "xyz", "0,0;0,0"};
    CHECK(cli_main(args.argc(), args.argv()) == 1);
  }
  {
    Argv args{"shellrange", "shell", "--model", "ph", "0,1;0,0"};
    CHECK(cli_main(args.argc(), args.argv()) == 1);
  }
  {
    Argv args{"shellrange", "range", "--format", "svg", "0,1;0,0"};
    CHECK(cli_main(args.argc(), args.argv()) == 1);
  }
  {
    // boundary samples carry rounding above this tolerance, so verification fails
    Argv args{"shellrange", "verify", "--samples", "2000", "--tolerance", "1e-300", "--out", path, "1,2;0,-1"};
    CHECK(cli_main(args.argc(), args.argv()) == 2);
    CHECK(Json::parse(slurp(path))["pass"] == false);
  }
  {
    ::setenv("SHELLRANGE_TOLERANCE", "1e-3", 1);
    Argv args{"shellrange", "verify", "--samples", "100", "--out", path, "0,1;0,0"};
    CHECK(cli_main(args.argc(), args.argv()) == 0);
    CHECK(Json::parse(slurp(path))["tolerance"] == 1e-3);
    ::unsetenv("SHELLRANGE_TOLERANCE");
  }
  {
    std::ofstream(path) << R"({"matrix": [[[0,0],[1,0]],[[0,0],[0,0]]]})";
    const std::string out2 = "test_io_cli_out2.json";
    Argv args{"shellrange", "classify", "--out", out2, "@" + path};
    CHECK(cli_main(args.argc(), args.argv()) == 0);
    CHECK(Json::parse(slurp(out2))["class"] == "real-parabolic");
    std::remove(out2.c_str());
  }
  std::remove(path.c_str());
}

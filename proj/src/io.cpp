#include "shellrange/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <vector>

#include "shellrange/errors.hpp"

namespace shellrange {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Input with whitespace removed; `origin` maps back to the caller's offsets.
struct Compact {
  std::string text;
  std::vector<std::size_t> origin;

  std::size_t where(std::size_t k) const {
    return k < origin.size() ? origin[k] : (origin.empty() ? 0 : origin.back() + 1);
  }
};

Compact compact(std::string_view s) {
  Compact c;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (std::isspace(static_cast<unsigned char>(s[k]))) continue;
    c.text.push_back(s[k]);
    c.origin.push_back(k);
  }
  return c;
}

class LiteralParser {
 public:
  LiteralParser(const Compact& c, std::size_t begin, std::size_t end)
      : c_(c), k_(begin), end_(end) {}

  Complex parse() {
    if (k_ >= end_) fail("empty matrix entry");
    double re = 0.0, im = 0.0;
    bool have_re = false, have_im = false;
    bool first = true;
    while (k_ < end_) {
      double sign = 1.0;
      const char ch = c_.text[k_];
      if (ch == '+' || ch == '-') {
        sign = ch == '-' ? -1.0 : 1.0;
        ++k_;
      } else if (!first) {
        fail("expected '+' or '-' between real and imaginary parts");
      }
      if (k_ >= end_) fail("dangling sign");
      bool imaginary = false;
      double value = 1.0;
      if (non_finite_word()) {
        throw NonFiniteEntry("matrix entry is not finite at position " + std::to_string(c_.where(k_)));
      }
      if (c_.text[k_] == 'i') {
        imaginary = true;
        ++k_;
      } else {
        value = number();
        if (k_ < end_ && c_.text[k_] == 'i') {
          imaginary = true;
          ++k_;
        }
      }
      if (imaginary) {
        if (have_im) fail("two imaginary parts");
        im = sign * value;
        have_im = true;
      } else {
        if (have_re || have_im) fail("real part must come first and only once");
        re = sign * value;
        have_re = true;
      }
      first = false;
    }
    return {re, im};
  }

 private:
  bool non_finite_word() const {
    auto lower = [&](std::size_t k) {
      return k < end_ ? static_cast<char>(std::tolower(static_cast<unsigned char>(c_.text[k]))) : '\0';
    };
    const char a = lower(k_), b = lower(k_ + 1), c = lower(k_ + 2);
    return (a == 'i' && b == 'n' && c == 'f') || (a == 'n' && b == 'a' && c == 'n');
  }

  double number() {
    const char* b = c_.text.data() + k_;
    const char* e = c_.text.data() + end_;
    if (!(std::isdigit(static_cast<unsigned char>(*b)) || *b == '.')) {
      if (std::isalpha(static_cast<unsigned char>(*b))) {
        double probe = 0.0;
        auto r = std::from_chars(b, e, probe);
        if (r.ec == std::errc() && !std::isfinite(probe)) {
          throw NonFiniteEntry("matrix entry is not finite at position " +
                               std::to_string(c_.where(k_)));
        }
      }
      fail("expected a number");
    }
    double v = 0.0;
    auto r = std::from_chars(b, e, v);
    if (r.ec == std::errc::result_out_of_range) {
      throw NonFiniteEntry("matrix entry overflows at position " +
                           std::to_string(c_.where(k_)));
    }
    if (r.ec != std::errc()) fail("malformed number");
    k_ += static_cast<std::size_t>(r.ptr - b);
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, c_.where(k_)); }

  const Compact& c_;
  std::size_t k_;
  std::size_t end_;
};

Mat2C parse_inline(std::string_view text) {
  const Compact c = compact(text);
  if (c.text.empty()) throw ParseError("empty matrix", 0);
  std::vector<std::size_t> rows{0};
  for (std::size_t k = 0; k < c.text.size(); ++k) {
    if (c.text[k] == ';') rows.push_back(k + 1);
  }
  if (rows.size() != 2) {
    throw ParseError("expected two rows separated by ';'", c.where(rows.size() > 2 ? rows[2] - 1 : c.text.size()));
  }
  Mat2C m;
  for (int r = 0; r < 2; ++r) {
    const std::size_t begin = rows[r];
    const std::size_t end = r == 0 ? rows[1] - 1 : c.text.size();
    std::vector<std::size_t> cols{begin};
    for (std::size_t k = begin; k < end; ++k) {
      if (c.text[k] == ',') cols.push_back(k + 1);
    }
    if (cols.size() != 2) {
      throw ParseError("expected two entries separated by ','", c.where(cols.size() > 2 ? cols[2] - 1 : end));
    }
    for (int col = 0; col < 2; ++col) {
      const std::size_t eb = cols[col];
      const std::size_t ee = col == 0 ? cols[1] - 1 : end;
      m(r, col) = LiteralParser(c, eb, ee).parse();
    }
  }
  return m;
}

double finite_number(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string("expected a number for ") + what, 0);
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw NonFiniteEntry(std::string("non-finite ") + what);
  return v;
}

Mat2C parse_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  } catch (const nlohmann::json::out_of_range& e) {
    throw NonFiniteEntry(std::string("JSON number out of range: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix")) {
    throw ParseError("JSON input needs a \"matrix\" member", 0);
  }
  const Json& m = doc["matrix"];
  if (!m.is_array() || m.size() != 2) throw ParseError("\"matrix\" must have two rows", 0);
  Mat2C out;
  for (int r = 0; r < 2; ++r) {
    if (!m[r].is_array() || m[r].size() != 2) {
      throw ParseError("each matrix row must have two entries", 0);
    }
    for (int c = 0; c < 2; ++c) {
      const Json& e = m[r][c];
      if (!e.is_array() || e.size() != 2) {
        throw ParseError("each entry must be a [re, im] pair", 0);
      }
      out(r, c) = Complex(finite_number(e[0], "real part"), finite_number(e[1], "imaginary part"));
    }
  }
  return out;
}

template <typename Mat>
Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

template <typename Mat>
Mat matrix_from_json(const Json& j) {
  Mat m;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) m(r, c) = j.at(r).at(c).get<double>();
  }
  return m;
}

std::string model_name(Model m) {
  switch (m) {
    case Model::BCK2: return "bck";
    case Model::PCK2: return "pck";
    case Model::PH2: return "ph";
    case Model::BCK3: return "bck3";
    case Model::PCK3: return "pck3";
  }
  return "bck";
}

Model planar(Model m) {
  switch (m) {
    case Model::BCK3: return Model::BCK2;
    case Model::PCK3: return Model::PCK2;
    default: return m;
  }
}

Model spatial(Model m) {
  switch (m) {
    case Model::BCK2: return Model::BCK3;
    case Model::PCK2: return Model::PCK3;
    case Model::PH2:
      throw ModelDimensionMismatch("the half-plane model has no spatial counterpart here");
    default: return m;
  }
}

}  // namespace

Mat2C parse_matrix(std::string_view text) {
  std::size_t k = 0;
  while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
  if (k < text.size() && text[k] == '{') return parse_json(text);
  return parse_inline(text);
}

Model model_from_string(std::string_view s) {
  if (s == "bck" || s == "bck2") return Model::BCK2;
  if (s == "pck" || s == "pck2") return Model::PCK2;
  if (s == "ph" || s == "ph2") return Model::PH2;
  if (s == "bck3") return Model::BCK3;
  if (s == "pck3") return Model::PCK3;
  throw std::invalid_argument("unknown model: " + std::string(s));
}

Json ext_real_to_json(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return nullptr;
  return v;
}

double ext_real_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    throw std::invalid_argument("unexpected string for an extended real: " + s);
  }
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

Json point_to_json(const HPoint& p) {
  if (p.at_infinity) return "inf";
  if (dimension(p.model) == 3) return Json::array({p.x, p.y, p.z});
  return Json::array({p.x, p.z});
}

HPoint point_from_json(const Json& j, Model model) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw std::invalid_argument("bad point");
    return HPoint::infinity(model);
  }
  if (dimension(model) == 3) {
    return HPoint::spatial(model, j.at(0).get<double>(), j.at(1).get<double>(),
                           j.at(2).get<double>());
  }
  return HPoint::planar(model, j.at(0).get<double>(), j.at(1).get<double>());
}

Json range_to_json(const RangeDescriptor& d, Model model) {
  model = planar(model);
  Json j;
  j["kind"] = "conformal-range";
  j["model"] = model_name(model);
  j["case"] = std::string(to_string(d.kind));
  j["class"] = std::string(to_string(d.spectral_class));
  j["normal"] = !is_non_normal_case(d.kind);
  j["eigenvalues"] = Json::array({complex_to_json(d.eigenvalues[0]), complex_to_json(d.eigenvalues[1])});
  Json foci = Json::array();
  Json asym = Json::array();
  for (const auto& f : d.foci) {
    foci.push_back(point_to_json(transcribe(f, model)));
    asym.push_back(is_asymptotic(f));
  }
  j["foci"] = foci;
  j["foci_asymptotic"] = asym;
  j["vertex"] = d.vertex ? point_to_json(transcribe(*d.vertex, model)) : Json(nullptr);
  j["s_plus"] = ext_real_to_json(d.sPlus);
  j["s_minus"] = ext_real_to_json(d.sMinus);
  j["s_f"] = ext_real_to_json(d.sF);
  j["chi_plus"] = d.chiPlus;
  j["chi_minus"] = d.chiMinus;
  j["chi_e"] = d.chiE;
  j["touch_height"] = d.touch_height;
  j["touch_height_bck"] = d.touch_height_bck();
  j["dual_conic"] = matrix_to_json(d.conic.Gc);
  j["primal_conic"] = d.conic.primal ? matrix_to_json(*d.conic.primal) : Json(nullptr);
  j["conic_rank"] = d.conic.rank;
  return j;
}

RangeDescriptor range_from_json(const Json& j) {
  const Model model = planar(model_from_string(j.at("model").get<std::string>()));
  RangeDescriptor d;
  d.kind = range_case_from_string(j.at("case").get<std::string>());
  d.spectral_class = spectral_class_from_string(j.at("class").get<std::string>());
  d.eigenvalues = {complex_from_json(j.at("eigenvalues").at(0)),
                   complex_from_json(j.at("eigenvalues").at(1))};
  for (const auto& f : j.at("foci")) {
    d.foci.push_back(transcribe(point_from_json(f, model), Model::BCK2));
  }
  if (!j.at("vertex").is_null()) {
    d.vertex = transcribe(point_from_json(j.at("vertex"), model), Model::BCK2);
  }
  d.sPlus = ext_real_from_json(j.at("s_plus"));
  d.sMinus = ext_real_from_json(j.at("s_minus"));
  d.sF = ext_real_from_json(j.at("s_f"));
  d.chiPlus = j.at("chi_plus").get<double>();
  d.chiMinus = j.at("chi_minus").get<double>();
  d.chiE = j.at("chi_e").get<double>();
  d.touch_height = j.at("touch_height").get<double>();
  d.conic.Gc = matrix_from_json<Eigen::Matrix3d>(j.at("dual_conic"));
  if (!j.at("primal_conic").is_null()) {
    d.conic.primal = matrix_from_json<Eigen::Matrix3d>(j.at("primal_conic"));
  }
  d.conic.rank = j.at("conic_rank").get<int>();
  return d;
}

Json shell_to_json(const ShellDescriptor& d, Model model) {
  model = spatial(model);
  Json j;
  j["kind"] = "shell";
  j["model"] = model_name(model);
  j["case"] = std::string(to_string(d.kind));
  Json pts = Json::array(), emb = Json::array();
  for (const auto& p : d.asymptotic_points) {
    pts.push_back(complex_to_json(p.value));
    emb.push_back(point_to_json(embed(p, model)));
  }
  j["asymptotic_points"] = pts;
  j["asymptotic_points_model"] = emb;
  j["radius"] = ext_real_to_json(d.radius);
  j["touch_height"] = d.touch_height;
  j["dual_quadric"] = matrix_to_json(d.dual_quadric.G);
  j["dual_quadric_rank"] = d.dual_quadric.rank;
  j["primal_quadric_bck"] = d.primal_bck ? matrix_to_json(*d.primal_bck) : Json(nullptr);
  return j;
}

ShellDescriptor shell_from_json(const Json& j) {
  ShellDescriptor d;
  d.kind = shell_case_from_string(j.at("case").get<std::string>());
  for (const auto& p : j.at("asymptotic_points")) d.asymptotic_points.push_back({complex_from_json(p)});
  d.radius = ext_real_from_json(j.at("radius"));
  d.touch_height = j.at("touch_height").get<double>();
  d.dual_quadric.G = matrix_from_json<Eigen::Matrix4d>(j.at("dual_quadric"));
  d.dual_quadric.rank = j.at("dual_quadric_rank").get<int>();
  if (!j.at("primal_quadric_bck").is_null()) {
    d.primal_bck = matrix_from_json<Eigen::Matrix4d>(j.at("primal_quadric_bck"));
  }
  return d;
}

Json numerical_range_to_json(const NumericalRangeDescriptor& d) {
  Json j;
  j["kind"] = "numerical-range";
  j["foci"] = Json::array({complex_to_json(d.foci[0]), complex_to_json(d.foci[1])});
  j["s_plus_e"] = d.sPlusE;
  j["s_minus_e"] = d.sMinusE;
  j["s_f_e"] = d.sFE;
  return j;
}

NumericalRangeDescriptor numerical_range_from_json(const Json& j) {
  NumericalRangeDescriptor d;
  d.foci = {complex_from_json(j.at("foci").at(0)), complex_from_json(j.at("foci").at(1))};
  d.sPlusE = j.at("s_plus_e").get<double>();
  d.sMinusE = j.at("s_minus_e").get<double>();
  d.sFE = j.at("s_f_e").get<double>();
  return d;
}

Json canonical_rep_to_json(const CanonicalRep& r) {
  Json j;
  switch (r.kind) {
    case CanonicalRep::Kind::Zero:
      j["kind"] = "zero";
      break;
    case CanonicalRep::Kind::S:
      j["kind"] = "S";
      j["beta"] = r.beta;
      break;
    case CanonicalRep::Kind::L:
      j["kind"] = "L";
      j["alpha"] = r.alpha;
      j["t"] = r.t;
      j["sign"] = r.sign > 0 ? "+" : "-";
      break;
  }
  return j;
}

Json classification_to_json(const Mat2C& a) {
  const Spectrum s = analyze(a);
  const TripleRatio tr = triple_ratio(s.inv);
  const CharacteristicValues cv = characteristic_values(tr);
  const SemiAxes ax = semi_axes(s.inv);
  Json j;
  j["class"] = std::string(to_string(s.cls));
  j["normal"] = s.normal;
  j["invariants"] = {{"U", s.inv.U},
                     {"D", complex_to_json(s.inv.D)},
                     {"absD", s.inv.absD},
                     {"E", s.inv.E}};
  j["eigenvalues"] = Json::array({complex_to_json(s.lambda1), complex_to_json(s.lambda2)});
  j["canonical_rep"] = canonical_rep_to_json(canonical_representative(s));
  j["triple_ratio"] = Json::array({tr.chi1, tr.chi2, tr.chi3});
  j["characteristic_values"] = {{"chi_plus", cv.chiPlus},
                                {"chi_minus", cv.chiMinus},
                                {"chi_e", cv.chiE},
                                {"s_plus", ext_real_to_json(cv.sPlus)},
                                {"s_minus", ext_real_to_json(cv.sMinus)},
                                {"s_e", ext_real_to_json(cv.sE)}};
  j["semi_axes"] = {{"s_plus", ext_real_to_json(ax.sPlus)},
                    {"s_minus", ext_real_to_json(ax.sMinus)},
                    {"s_f", ext_real_to_json(ax.sF)}};
  j["eigendistance"] = ext_real_to_json(eigendistance(s.inv));
  return j;
}

Json report_to_json(const Report& r) {
  return {{"samples", r.count},
          {"skipped", r.skipped},
          {"max_violation", ext_real_to_json(r.max_violation)},
          {"max_conic_violation", ext_real_to_json(r.max_conic_violation)},
          {"max_synthetic_violation", ext_real_to_json(r.max_synthetic_violation)},
          {"pass", r.pass}};
}

}  // namespace shellrange

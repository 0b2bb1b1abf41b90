#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "commands.hpp"

namespace polyknot::cli {
namespace {

struct Curve {
  std::vector<double> t;
  std::vector<std::vector<double>> mid;     // per component
  std::vector<std::vector<double>> radius;  // per component
  bool exact = true;
};

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<int> pick_components(const PlotOptions& o, int dimension) {
  std::vector<int> comps = o.components;
  if (comps.empty()) {
    for (int i = 1; i <= dimension; ++i) comps.push_back(i);
  }
  for (int c : comps) {
    if (c < 1 || c > dimension) throw UsageError("--components: " + std::to_string(c) + " is outside 1.." + std::to_string(dimension));
  }
  if (o.format == "svg" && comps.size() != 2) throw UsageError("svg output needs exactly two --components");
  return comps;
}

Curve sample(const PolynomialKnot& knot, const std::vector<int>& comps, const Rational& a, const Rational& b, int n) {
  Curve c;
  c.exact = knot.table().is_exact();
  c.mid.assign(comps.size(), {});
  c.radius.assign(comps.size(), {});
  for (int k = 0; k < n; ++k) {
    Rational t = a + (b - a) * k / (n - 1);
    std::vector<Scalar> x = evaluate(knot, Scalar(t));
    c.t.push_back(t.get_d());
    for (std::size_t m = 0; m < comps.size(); ++m) {
      const Scalar& v = x[comps[m] - 1];
      c.mid[m].push_back(v.to_double());
      c.radius[m].push_back(v.radius_double());
    }
  }
  return c;
}

std::string csv(const Curve& c, const std::vector<int>& comps) {
  std::ostringstream os;
  os << "t";
  for (int i : comps) {
    os << ",x" << i;
    if (!c.exact) os << ",x" << i << "_pm";
  }
  os << "\n";
  for (std::size_t k = 0; k < c.t.size(); ++k) {
    os << g17(c.t[k]);
    for (std::size_t m = 0; m < comps.size(); ++m) {
      os << "," << g17(c.mid[m][k]);
      if (!c.exact) os << "," << g17(c.radius[m][k]);
    }
    os << "\n";
  }
  return os.str();
}

std::string svg(const Curve& c, const std::vector<int>& comps) {
  constexpr double kSize = 512, kMargin = 16;
  const auto& xs = c.mid[0];
  const auto& ys = c.mid[1];
  auto [xlo, xhi] = std::minmax_element(xs.begin(), xs.end());
  auto [ylo, yhi] = std::minmax_element(ys.begin(), ys.end());
  double span = std::max({*xhi - *xlo, *yhi - *ylo, 1e-300});
  double scale = (kSize - 2 * kMargin) / span;
  double cx = (*xlo + *xhi) / 2, cy = (*ylo + *yhi) / 2;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\" viewBox=\"0 0 "
     << kSize << " " << kSize << "\">\n"
     << "  <title>components " << comps[0] << " and " << comps[1] << "</title>\n"
     << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
  char buf[64];
  for (std::size_t k = 0; k < xs.size(); ++k) {
    double px = kSize / 2 + (xs[k] - cx) * scale;
    double py = kSize / 2 - (ys[k] - cy) * scale;
    std::snprintf(buf, sizeof buf, "%s%.3f,%.3f", k ? " " : "", px, py);
    os << buf;
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

std::string render(const PolynomialKnot& knot, const PlotOptions& o, const Rational& a, const Rational& b) {
  std::vector<int> comps = pick_components(o, knot.dimension());
  Curve c = sample(knot, comps, a, b, o.samples);
  return o.format == "svg" ? svg(c, comps) : csv(c, comps);
}

}  // namespace

int cmd_plot(const PlotOptions& o, std::ostream& out, std::ostream&) {
  Rational a = number_flag(o.range.at(0), "--range");
  Rational b = number_flag(o.range.at(1), "--range");
  if (a >= b) throw UsageError("--range needs a < b");

  std::string text = load(o.path);
  bool is_trace = text.find("\"samples\"") != std::string::npos;
  if (!is_trace) {
    emit(render(parse_knot(text), o, a, b), o.out, out);
    return kOk;
  }

  HomotopyTrace trace = parse_trace(text);
  if (o.out.empty()) throw UsageError("trace input needs --out <directory>");
  std::filesystem::path dir(o.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::InvalidArgument, "cannot create " + dir.string() + ": " + ec.message());

  std::vector<std::string> frames;
  for (const TraceSample& s : trace.samples) {
    const auto* knot = std::get_if<PolynomialKnot>(&s.state);
    frames.push_back(render(knot ? *knot : embed_linear(std::get<SequencePoint>(s.state)), o, a, b));
  }
  int width = std::max(4, static_cast<int>(std::to_string(frames.size()).size()));
  for (std::size_t i = 0; i < frames.size(); ++i) {
    std::string index = std::to_string(i);
    index.insert(0, width - index.size(), '0');
    write_text_file_atomic((dir / ("frame_" + index + "." + o.format)).string(), frames[i]);
  }
  out << "wrote " << frames.size() << " frames to " << dir.string() << "\n";
  return kOk;
}

}  // namespace polyknot::cli

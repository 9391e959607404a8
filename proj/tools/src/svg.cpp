#include "ippp_cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace ippp_cli {

namespace {

constexpr double kPanelW = 360.0, kPanelH = 300.0, kPanelTop = 70.0;
constexpr double kPanelX[3] = {60.0, 470.0, 880.0};
constexpr const char* kPalette[6] = {"#1f77b4", "#d62728", "#2ca02c",
                                     "#9467bd", "#ff7f0e", "#8c564b"};

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

struct Panel {
  std::string title;
  bool log_scale;
  // One value series per run, paired with the shared cum_steps abscissa.
  std::vector<std::vector<double>> ys;
};

double clamp_log(double v) { return std::log10(std::max(v, 1e-16)); }

}  // namespace

void write_benchmark_svg(const std::string& path,
                         const std::vector<NamedTrace>& runs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open svg file: " + path);

  std::vector<std::vector<double>> xs;
  Panel panels[3] = {{"objective", false, {}},
                     {"infeasibility F", true, {}},
                     {"stationarity S", true, {}}};
  for (const NamedTrace& run : runs) {
    std::vector<double> x, obj, f, s;
    for (const ippp::OuterRecord& r : run.trace->rows) {
      x.push_back(static_cast<double>(r.cum_steps));
      obj.push_back(r.objective);
      f.push_back(r.F);
      s.push_back(r.S);
    }
    xs.push_back(std::move(x));
    panels[0].ys.push_back(std::move(obj));
    panels[1].ys.push_back(std::move(f));
    panels[2].ys.push_back(std::move(s));
  }

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1290\" "
         "height=\"430\" viewBox=\"0 0 1290 430\">\n"
         "<rect x=\"0\" y=\"0\" width=\"1290\" height=\"430\" "
         "fill=\"white\"/>\n";

  // Legend.
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const double lx = 60.0 + 220.0 * static_cast<double>(i % 5);
    const double ly = 20.0 + 16.0 * static_cast<double>(i / 5);
    out << "<rect x=\"" << lx << "\" y=\"" << ly - 9 << "\" width=\"12\" "
        << "height=\"12\" fill=\"" << kPalette[i % 6] << "\"/>\n"
        << "<text x=\"" << lx + 16 << "\" y=\"" << ly + 1
        << "\" font-size=\"12\" font-family=\"sans-serif\">"
        << escape_xml(runs[i].label) << "</text>\n";
  }

  double x_max = 1.0;
  for (const auto& x : xs)
    if (!x.empty()) x_max = std::max(x_max, x.back());

  for (int pi = 0; pi < 3; ++pi) {
    const Panel& panel = panels[pi];
    const double px = kPanelX[pi];

    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& ys : panel.ys) {
      for (double v : ys) {
        const double t = panel.log_scale ? clamp_log(v) : v;
        lo = std::min(lo, t);
        hi = std::max(hi, t);
      }
    }
    if (!(lo < hi)) {
      lo = std::isfinite(lo) ? lo - 1.0 : -1.0;
      hi = lo + 2.0;
    }

    out << "<rect x=\"" << px << "\" y=\"" << kPanelTop << "\" width=\""
        << kPanelW << "\" height=\"" << kPanelH
        << "\" fill=\"none\" stroke=\"#444444\"/>\n"
        << "<text x=\"" << px + kPanelW / 2 << "\" y=\"" << kPanelTop - 10
        << "\" font-size=\"14\" font-family=\"sans-serif\" "
           "text-anchor=\"middle\">"
        << escape_xml(panel.title) << "</text>\n"
        << "<text x=\"" << px << "\" y=\"" << kPanelTop + kPanelH + 16
        << "\" font-size=\"11\" font-family=\"sans-serif\">0</text>\n"
        << "<text x=\"" << px + kPanelW << "\" y=\""
        << kPanelTop + kPanelH + 16
        << "\" font-size=\"11\" font-family=\"sans-serif\" "
           "text-anchor=\"end\">"
        << fmt(x_max) << " steps</text>\n"
        << "<text x=\"" << px + 4 << "\" y=\"" << kPanelTop + 12
        << "\" font-size=\"11\" font-family=\"sans-serif\">"
        << (panel.log_scale ? "1e" + fmt(hi) : fmt(hi)) << "</text>\n"
        << "<text x=\"" << px + 4 << "\" y=\"" << kPanelTop + kPanelH - 4
        << "\" font-size=\"11\" font-family=\"sans-serif\">"
        << (panel.log_scale ? "1e" + fmt(lo) : fmt(lo)) << "</text>\n";

    for (std::size_t run = 0; run < panel.ys.size(); ++run) {
      const auto& ys = panel.ys[run];
      const auto& x = xs[run];
      if (ys.empty()) continue;
      out << "<polyline fill=\"none\" stroke=\"" << kPalette[run % 6]
          << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < ys.size(); ++i) {
        const double t = panel.log_scale ? clamp_log(ys[i]) : ys[i];
        const double sx = px + kPanelW * (x[i] / x_max);
        const double sy =
            kPanelTop + kPanelH * (1.0 - (t - lo) / (hi - lo));
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.2f,%.2f ", sx, sy);
        out << buf;
      }
      out << "\"/>\n";
    }
  }

  out << "</svg>\n";
  out.flush();
  if (!out) throw std::runtime_error("failed writing svg file: " + path);
}

}  // namespace ippp_cli

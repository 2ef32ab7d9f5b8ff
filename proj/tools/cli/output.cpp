#include "output.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace qbsim::cli {

namespace {

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string e16(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Piecewise-linear approximation of the viridis colormap.
std::string color(double u) {
  static constexpr std::array<std::array<double, 3>, 5> stops = {{
      {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};
  u = std::clamp(std::isfinite(u) ? u : 0.0, 0.0, 1.0);
  const double s = u * (stops.size() - 1);
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(s), stops.size() - 2);
  const double f = s - static_cast<double>(k);
  char buf[24];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                static_cast<int>(std::lround(stops[k][0] + f * (stops[k + 1][0] - stops[k][0]))),
                static_cast<int>(std::lround(stops[k][1] + f * (stops[k + 1][1] - stops[k][1]))),
                static_cast<int>(std::lround(stops[k][2] + f * (stops[k + 1][2] - stops[k][2]))));
  return buf;
}

constexpr double kWidth = 720, kHeight = 520;
constexpr double kLeft = 80, kTop = 50, kPlotW = 520, kPlotH = 390;

void frame(std::ostringstream& os, const std::string& title, const std::string& xlabel, const std::string& ylabel,
           double xmin, double xmax, double ymin, double ymax) {
  os << "<text x=\"" << px(kLeft + kPlotW / 2) << "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">"
     << xml_escape(title) << "</text>\n";
  os << "<rect x=\"" << px(kLeft) << "\" y=\"" << px(kTop) << "\" width=\"" << px(kPlotW) << "\" height=\""
     << px(kPlotH) << "\" fill=\"none\" stroke=\"#000\"/>\n";
  const double yb = kTop + kPlotH;
  os << "<text x=\"" << px(kLeft) << "\" y=\"" << px(yb + 18) << "\" text-anchor=\"middle\" font-size=\"12\">"
     << short_num(xmin) << "</text>\n";
  os << "<text x=\"" << px(kLeft + kPlotW) << "\" y=\"" << px(yb + 18)
     << "\" text-anchor=\"middle\" font-size=\"12\">" << short_num(xmax) << "</text>\n";
  os << "<text x=\"" << px(kLeft + kPlotW / 2) << "\" y=\"" << px(yb + 40)
     << "\" text-anchor=\"middle\" font-size=\"14\">" << xml_escape(xlabel) << "</text>\n";
  os << "<text x=\"" << px(kLeft - 6) << "\" y=\"" << px(yb) << "\" text-anchor=\"end\" font-size=\"12\">"
     << short_num(ymin) << "</text>\n";
  os << "<text x=\"" << px(kLeft - 6) << "\" y=\"" << px(kTop + 10) << "\" text-anchor=\"end\" font-size=\"12\">"
     << short_num(ymax) << "</text>\n";
  os << "<text x=\"20\" y=\"" << px(kTop + kPlotH / 2) << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 "
     << px(kTop + kPlotH / 2) << ")\">" << xml_escape(ylabel) << "</text>\n";
}

}  // namespace

void write_csv(std::ostream& os, const SweepResult& r, const std::vector<std::string>& extra_comments) {
  const SweepConfig& c = r.config;
  os << "# tool=qbsim\n";
  os << "# version=" << r.tool_version << '\n';
  for (const auto& line : extra_comments) os << "# " << line << '\n';
  os << "# metric=" << to_string(c.metric) << '\n';
  for (const char* key : {"j", "gamma", "delta", "dz", "gz", "b", "theta", "temperature", "omega"}) {
    os << "# " << key << '=' << g17(get_param(c.base, key)) << '\n';
  }
  os << "# charge_axis=" << to_string(c.base.axis) << '\n';
  os << "# exchange=" << to_string(c.base.exchange) << '\n';
  os << "# t_min=" << g17(c.t_min) << '\n';
  os << "# t_max=" << g17(c.t_max) << '\n';
  os << "# omega_t=" << g17(c.omega_t) << '\n';
  auto axis = [&](const char* tag, const Axis& a) {
    os << "# " << tag << '=' << a.name << '\n';
    os << "# " << tag << "_min=" << g17(a.min) << '\n';
    os << "# " << tag << "_max=" << g17(a.max) << '\n';
    os << "# " << tag << "_steps=" << a.steps << '\n';
  };
  axis("axis1", c.axis1);
  if (c.axis2) axis("axis2", *c.axis2);
  os << "axis1,axis2,value\n";
  for (std::size_t i = 0; i < r.axis1.size(); ++i) {
    if (r.axis2.empty()) {
      os << e16(r.axis1[i]) << ",," << e16(r.at(i)) << '\n';
      continue;
    }
    for (std::size_t j = 0; j < r.axis2.size(); ++j) {
      os << e16(r.axis1[i]) << ',' << e16(r.axis2[j]) << ',' << e16(r.at(i, j)) << '\n';
    }
  }
}

std::string render_svg(const SweepResult& r, const std::string& title) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  const auto [vmin_it, vmax_it] = std::minmax_element(r.values.begin(), r.values.end());
  const double vmin = r.values.empty() ? 0.0 : *vmin_it;
  const double vmax = r.values.empty() ? 1.0 : *vmax_it;
  const double span = vmax > vmin ? vmax - vmin : 1.0;
  const double xmin = r.axis1.front(), xmax = r.axis1.back();
  const double xspan = xmax != xmin ? xmax - xmin : 1.0;

  if (!r.axis2.empty()) {
    const double ymin = r.axis2.front(), ymax = r.axis2.back();
    const double cw = kPlotW / static_cast<double>(r.axis1.size());
    const double ch = kPlotH / static_cast<double>(r.axis2.size());
    for (std::size_t i = 0; i < r.axis1.size(); ++i) {
      for (std::size_t j = 0; j < r.axis2.size(); ++j) {
        const double x = kLeft + cw * static_cast<double>(i);
        const double y = kTop + kPlotH - ch * static_cast<double>(j + 1);
        os << "<rect x=\"" << px(x) << "\" y=\"" << px(y) << "\" width=\"" << px(cw + 0.5) << "\" height=\""
           << px(ch + 0.5) << "\" fill=\"" << color((r.at(i, j) - vmin) / span) << "\"/>\n";
      }
    }
    frame(os, title, r.config.axis1.name, r.config.axis2->name, xmin, xmax, ymin, ymax);
    // colour bar
    const double bx = kLeft + kPlotW + 30;
    constexpr int kBands = 64;
    for (int k = 0; k < kBands; ++k) {
      const double y = kTop + kPlotH - kPlotH * (k + 1) / kBands;
      os << "<rect x=\"" << px(bx) << "\" y=\"" << px(y) << "\" width=\"20\" height=\"" << px(kPlotH / kBands + 0.5)
         << "\" fill=\"" << color((k + 0.5) / kBands) << "\"/>\n";
    }
    os << "<text x=\"" << px(bx + 26) << "\" y=\"" << px(kTop + 10) << "\" font-size=\"12\">" << short_num(vmax)
       << "</text>\n";
    os << "<text x=\"" << px(bx + 26) << "\" y=\"" << px(kTop + kPlotH) << "\" font-size=\"12\">"
       << short_num(vmin) << "</text>\n";
  } else {
    os << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < r.axis1.size(); ++i) {
      const double x = kLeft + kPlotW * (r.axis1[i] - xmin) / xspan;
      const double y = kTop + kPlotH - kPlotH * (r.at(i) - vmin) / span;
      os << (i ? " " : "") << px(x) << ',' << px(y);
    }
    os << "\"/>\n";
    frame(os, title, r.config.axis1.name, std::string(to_string(r.config.metric)), xmin, xmax, vmin, vmax);
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace qbsim::cli

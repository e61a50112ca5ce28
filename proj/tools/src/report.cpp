#include "swipt/bench/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "swipt/errors.hpp"

namespace swipt::bench {

namespace {

std::string optional_number(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

nlohmann::json interleave(const CVector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    a.push_back(v(i).real());
    a.push_back(v(i).imag());
  }
  return a;
}

std::vector<Series> series_by_method(const std::vector<PointResult>& rows, bool x_is_energy, bool y_is_rate) {
  std::map<MethodChoice, Series> by;
  for (const auto& r : rows) {
    if (r.status != PointStatus::Ok && r.status != PointStatus::Partial) continue;
    Series& s = by[r.method];
    s.name = to_string(r.method);
    s.xy.emplace_back(x_is_energy ? r.energy : r.x, y_is_rate ? r.rate : r.energy);
  }
  std::vector<Series> out;
  for (auto& [m, s] : by) out.push_back(std::move(s));
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text, std::vector<std::filesystem::path>& list) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot write " + path.string());
  os << text;
  list.push_back(path);
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

void write_re_region_csv(std::ostream& os, const std::vector<PointResult>& rows) {
  os << "constraint_value,method,rate_bps_hz,energy_w,status,gamma_star\n";
  for (const auto& r : rows) {
    os << format_number(r.x) << ',' << to_string(r.method) << ',' << format_number(r.rate) << ','
       << format_number(r.energy) << ',' << to_string(r.status) << ',' << optional_number(r.gamma_star) << '\n';
  }
}

void write_er_activation_csv(std::ostream& os, const std::vector<PointResult>& rows, Problem problem) {
  os << "k_active,method,objective,status\n";
  for (const auto& r : rows) {
    os << static_cast<int>(r.x) << ',' << to_string(r.method) << ','
       << format_number(problem == Problem::P1 ? r.rate : r.energy) << ',' << to_string(r.status) << '\n';
  }
}

void write_outer_curve_csv(std::ostream& os, const std::vector<CurveSample>& curve) {
  os << "gamma,objective,status\n";
  for (const auto& s : curve) {
    os << format_number(s.gamma) << ',' << optional_number(s.value) << ','
       << (s.maximizer ? "maximizer" : s.value ? "ok" : "infeasible") << '\n';
  }
}

void write_oracle_csv(std::ostream& os, const std::vector<OracleRow>& rows) {
  os << "realization,problem,solver_objective,oracle_objective,rel_diff,status\n";
  for (const auto& r : rows) {
    os << r.realization << ',' << (r.problem == Problem::P1 ? "p1" : "p2") << ',' << optional_number(r.solver) << ','
       << optional_number(r.oracle) << ',' << format_number(r.rel_diff) << ',' << r.status << '\n';
  }
}

void write_beams_json(std::ostream& os, const std::vector<PointResult>& rows) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json rec;
    rec["x"] = r.x;
    rec["method"] = to_string(r.method);
    rec["realization"] = r.realization;
    rec["status"] = to_string(r.status);
    if (!r.detail.empty()) rec["detail"] = r.detail;
    if (r.solution) {
      rec["v0"] = interleave(r.solution->v0);
      nlohmann::json ws = nlohmann::json::array();
      for (const auto& w : r.solution->w) ws.push_back(interleave(w));
      rec["w"] = ws;
    }
    doc.push_back(rec);
  }
  os << doc.dump(1) << '\n';
}

std::string render_svg(const std::string& title, const std::string& x_label, const std::string& y_label,
                       const std::vector<Series>& series) {
  const double width = 640, height = 420, left = 70, right = 150, top = 40, bottom = 50;
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.xy) {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (x0 > x1) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 - x0 <= 0) x1 = x0 + 1;
  if (y1 - y0 <= 0) y1 = y0 + 1;
  const double pw = width - left - right, ph = height - top - bottom;
  auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return top + ph - (y - y0) / (y1 - y0) * ph; };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

  std::string svg;
  auto add = [&](const std::string& s) { svg += s; };
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%g\" height=\"%g\" font-family=\"sans-serif\" "
                "font-size=\"12\">\n",
                width, height);
  add(buf);
  std::snprintf(buf, sizeof(buf), "<rect x=\"%g\" y=\"%g\" width=\"%g\" height=\"%g\" fill=\"none\" stroke=\"#000\"/>\n",
                left, top, pw, ph);
  add(buf);
  add("<text x=\"" + format_number(left + pw / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" +
      escape_xml(title) + "</text>\n");
  add("<text x=\"" + format_number(left + pw / 2) + "\" y=\"" + format_number(height - 10) +
      "\" text-anchor=\"middle\">" + escape_xml(x_label) + "</text>\n");
  add("<text x=\"16\" y=\"" + format_number(top + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
      format_number(top + ph / 2) + ")\">" + escape_xml(y_label) + "</text>\n");
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4, yv = y0 + (y1 - y0) * i / 4;
    std::snprintf(buf, sizeof(buf), "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">%.4g</text>\n", px(xv),
                  top + ph + 16, xv);
    add(buf);
    std::snprintf(buf, sizeof(buf), "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\">%.4g</text>\n", left - 6,
                  py(yv) + 4, yv);
    add(buf);
  }
  for (size_t i = 0; i < series.size(); ++i) {
    const char* color = colors[i % 6];
    std::string pts;
    for (const auto& [x, y] : series[i].xy) {
      std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px(x), py(y));
      pts += buf;
    }
    add(std::string("<polyline fill=\"none\" stroke=\"") + color + "\" stroke-width=\"1.5\" points=\"" + pts +
        "\"/>\n");
    for (const auto& [x, y] : series[i].xy) {
      std::snprintf(buf, sizeof(buf), "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2.5\" fill=\"%s\"/>\n", px(x), py(y), color);
      add(buf);
    }
    const double ly = top + 14 + 18.0 * static_cast<double>(i);
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"%s\" stroke-width=\"2\"/>"
                  "<text x=\"%g\" y=\"%g\">",
                  left + pw + 12, ly, left + pw + 32, ly, color, left + pw + 38, ly + 4);
    add(buf);
    add(escape_xml(series[i].name) + "</text>\n");
  }
  add("</svg>\n");
  return svg;
}

std::vector<std::filesystem::path> write_outputs(const RunOutput& run, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  std::ostringstream csv;
  switch (run.kind) {
    case ExperimentKind::ReRegionP1:
    case ExperimentKind::ReRegionP2: {
      const bool p1 = run.kind == ExperimentKind::ReRegionP1;
      write_re_region_csv(csv, run.summary);
      write_file(dir / "re_region.csv", csv.str(), written);
      write_file(dir / "re_region.svg",
                 render_svg(p1 ? "R-E region, per-ER energy targets" : "R-E region, secrecy-rate targets",
                            p1 ? "per-ER harvested energy (W)" : "weighted harvested energy (W)",
                            "secrecy rate (bps/Hz)", series_by_method(run.summary, true, true)),
                 written);
      break;
    }
    case ExperimentKind::ErActivationP1:
    case ExperimentKind::ErActivationP2: {
      const bool p1 = run.kind == ExperimentKind::ErActivationP1;
      write_er_activation_csv(csv, run.summary, p1 ? Problem::P1 : Problem::P2);
      write_file(dir / "er_activation.csv", csv.str(), written);
      write_file(dir / "er_activation.svg",
                 render_svg(p1 ? "Secrecy rate vs active ERs" : "Harvested energy vs active ERs", "active ERs",
                            p1 ? "secrecy rate (bps/Hz)" : "weighted harvested energy (W)",
                            series_by_method(run.summary, false, p1)),
                 written);
      break;
    }
    case ExperimentKind::OuterCurveP1:
    case ExperimentKind::OuterCurveP2: {
      write_outer_curve_csv(csv, run.curve);
      write_file(dir / "outer_curve.csv", csv.str(), written);
      Series s{"objective", {}};
      for (const auto& c : run.curve) {
        if (c.value && !c.maximizer && c.gamma > 0.0) s.xy.emplace_back(std::log10(c.gamma), *c.value);
      }
      const bool p1 = run.kind == ExperimentKind::OuterCurveP1;
      write_file(dir / "outer_curve.svg",
                 render_svg(p1 ? "Outer objective over the eavesdropper SINR cap" : "Outer objective over the IR SINR",
                            "log10 gamma", p1 ? "log2((1 + g1) / (1 + gamma))" : "g2 (W)", {s}),
                 written);
      break;
    }
    case ExperimentKind::SingleSolve: {
      write_re_region_csv(csv, run.summary);
      write_file(dir / "solve.csv", csv.str(), written);
      break;
    }
    case ExperimentKind::OracleCheck: {
      write_oracle_csv(csv, run.oracle);
      write_file(dir / "oracle_check.csv", csv.str(), written);
      break;
    }
  }
  if (!run.points.empty() && run.kind != ExperimentKind::OuterCurveP1 && run.kind != ExperimentKind::OuterCurveP2) {
    std::ostringstream beams;
    write_beams_json(beams, run.points);
    write_file(dir / "beams.json", beams.str(), written);
  }
  return written;
}

}  // namespace swipt::bench

// Copyright 2026 The casteljau Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <casteljau/decasteljau.hpp>
#include <casteljau/exactnum.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace casteljau {

// Thrown for unreadable input files; the CLI maps it to a usage error.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}
inline std::string format_number(const Rational& v) { return v.str(); }
inline std::string format_number(const BigInt& v) { return v.str(); }

template <class S>
S parse_scalar(const std::string& field) {
  const Rational r = Rational::parse(field);
  if constexpr (ScalarTraits<S>::exact)
    return r;
  else
    return r.to_double();
}

inline std::vector<std::string> split_fields(const std::string& line, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, sep)) {
    const auto b = cur.find_first_not_of(" \t\r");
    const auto e = cur.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return out;
}

template <class S>
std::vector<S> parse_list(const std::string& csv) {
  std::vector<S> out;
  for (const auto& f : split_fields(csv))
    if (!f.empty()) out.push_back(parse_scalar<S>(f));
  return out;
}

// One point per line; '#' starts a comment; a non-numeric first line is a header.
template <class S>
std::vector<Point<S>> read_points_csv(std::istream& in) {
  std::vector<Point<S>> pts;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Point<S> p;
    try {
      p = parse_list<S>(line);
    } catch (const DomainError&) {
      if (first) {
        first = false;
        continue;
      }
      throw;
    }
    first = false;
    if (!pts.empty() && p.size() != pts.front().size())
      throw DomainError("csv: rows differ in dimension");
    pts.push_back(std::move(p));
  }
  return pts;
}

template <class S>
std::vector<Point<S>> read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_points_csv<S>(in);
}

template <class S>
void write_points_csv(std::ostream& out, const std::vector<Point<S>>& pts) {
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << format_number(p[i]);
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// SVG: Bezier pieces as cubic path elements.

namespace detail {

inline double chord_distance(const Point<double>& p, const Point<double>& a,
                             const Point<double>& b) {
  const double dx = b[0] - a[0], dy = b[1] - a[1];
  const double len = std::hypot(dx, dy);
  if (len == 0) return std::hypot(p[0] - a[0], p[1] - a[1]);
  return std::fabs((p[0] - a[0]) * dy - (p[1] - a[1]) * dx) / len;
}

inline std::vector<Point<double>> elevate(const std::vector<Point<double>>& b) {
  const std::size_t n = b.size() - 1;
  std::vector<Point<double>> e{b.front()};
  for (std::size_t i = 1; i <= n; ++i) {
    const double a = static_cast<double>(i) / static_cast<double>(n + 1);
    e.push_back(lerp(b[i], b[i - 1], a));
  }
  e.push_back(b.back());
  return e;
}

inline void cubic_pieces(const ControlPolygon<double>& poly, double flatness, int depth,
                         std::vector<std::vector<Point<double>>>& out) {
  auto b = poly.points;
  if (b.size() <= 4) {
    while (b.size() < 4) b = elevate(b);
    out.push_back(b);
    return;
  }
  double dev = 0;
  for (std::size_t i = 1; i + 1 < b.size(); ++i)
    dev = std::max(dev, chord_distance(b[i], b.front(), b.back()));
  if (dev <= flatness || depth > 24) {
    // end tangents kept, interior approximated
    const double k = static_cast<double>(b.size() - 1) / 3.0;
    Point<double> c1{b[0][0] + k * (b[1][0] - b[0][0]), b[0][1] + k * (b[1][1] - b[0][1])};
    const auto& e = b.back();
    const auto& f = b[b.size() - 2];
    Point<double> c2{e[0] + k * (f[0] - e[0]), e[1] + k * (f[1] - e[1])};
    out.push_back({b.front(), c1, c2, e});
    return;
  }
  auto [l, r] = subdivide(poly, (poly.t0 + poly.t1) / 2);
  cubic_pieces(l, flatness, depth + 1, out);
  cubic_pieces(r, flatness, depth + 1, out);
}

}  // namespace detail

struct SvgLayer {
  std::string name;
  std::vector<Point<double>> points;  // drawn as markers
  std::string color = "black";
};

inline void write_svg(std::ostream& out, const std::vector<ControlPolygon<double>>& curve,
                      const std::vector<SvgLayer>& layers, double flatness = 1e-3) {
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  auto grow = [&](const Point<double>& p) {
    if (p.size() < 2) throw DomainError("svg: points need two coordinates");
    lo_x = std::min(lo_x, p[0]);
    hi_x = std::max(hi_x, p[0]);
    lo_y = std::min(lo_y, p[1]);
    hi_y = std::max(hi_y, p[1]);
  };
  for (const auto& seg : curve)
    for (const auto& p : seg.points) grow(p);
  for (const auto& l : layers)
    for (const auto& p : l.points) grow(p);
  if (lo_x > hi_x) lo_x = hi_x = lo_y = hi_y = 0;
  const double pad = 0.05 * std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double w = hi_x - lo_x + 2 * pad, h = hi_y - lo_y + 2 * pad;
  const double r = 0.006 * std::max(w, h);
  auto X = [&](double x) { return format_number(x); };
  auto Y = [&](double y) { return format_number(-y); };  // y up

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << X(lo_x - pad) << ' '
      << format_number(-(hi_y + pad)) << ' ' << format_number(w) << ' ' << format_number(h)
      << "\">\n";
  if (!curve.empty()) {
    std::vector<std::vector<Point<double>>> pieces;
    for (const auto& seg : curve) detail::cubic_pieces(seg, flatness, 0, pieces);
    out << "<path fill=\"none\" stroke=\"black\" stroke-width=\"" << format_number(r / 2)
        << "\" d=\"";
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const auto& c = pieces[i];
      if (i == 0) out << "M " << X(c[0][0]) << ' ' << Y(c[0][1]) << ' ';
      out << "C";
      for (std::size_t k = 1; k < 4; ++k) out << ' ' << X(c[k][0]) << ' ' << Y(c[k][1]);
      out << ' ';
    }
    out << "\"/>\n";
  }
  for (const auto& l : layers) {
    out << "<g id=\"" << l.name << "\" fill=\"" << l.color << "\">\n";
    for (const auto& p : l.points)
      out << "<circle cx=\"" << X(p[0]) << "\" cy=\"" << Y(p[1]) << "\" r=\"" << format_number(r)
          << "\"/>\n";
    out << "</g>\n";
  }
  out << "</svg>\n";
}

}  // namespace casteljau

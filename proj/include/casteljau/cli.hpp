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

#include <casteljau/blossom.hpp>
#include <casteljau/decasteljau.hpp>
#include <casteljau/exactnum.hpp>
#include <casteljau/intersect.hpp>
#include <casteljau/io.hpp>
#include <casteljau/numtheory.hpp>
#include <casteljau/polygon_golden.hpp>
#include <casteljau/quaternions.hpp>
#include <casteljau/smoothing.hpp>
#include <casteljau/tolerance.hpp>
#include <casteljau/vincent.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#ifndef CASTELJAU_GOLDEN_DIR
#define CASTELJAU_GOLDEN_DIR "golden"
#endif

namespace casteljau::cli {

enum ExitCode { kOk = 0, kDomain = 1, kUsage = 2 };

// ---------------------------------------------------------------------------
// Paper tables as deterministic text, one section per golden file.

inline std::string section_table3() {
  std::ostringstream os;
  const auto e = euclid(99, 70);
  os << "n:";
  os << " 99 70";
  for (const auto& r : e.remainders) os << ' ' << r;
  os << "\nq:";
  for (const auto& q : e.quotients.quotients) os << ' ' << q;
  // one more quotient of sqrt(2) continues the table
  ContinuedFraction cf = e.quotients;
  cf.quotients.push_back(2);
  const auto cv = convergents(cf);
  os << "\nS: 0 1";
  for (const auto& c : cv) os << ' ' << c.S;
  os << "\nD: 1 0";
  for (const auto& c : cv) os << ' ' << c.D;
  os << "\nDD:";
  for (std::size_t i = 0; i + 1 < cv.size(); ++i) os << ' ' << cv[i].D * cv[i + 1].D;
  os << '\n';
  return os.str();
}

inline std::string section_smoothing_533() {
  std::ostringstream os;
  const Characteristic ch = characteristic(5, 3, 3);
  os << "H\n" << h_matrix(ch).str();
  int k = 1;
  for (const auto& K : knot_insertion_chain(ch)) os << "K" << k++ << '\n' << K.str();
  const auto C = smoothing_matrix(ch);
  os << "C\n" << C.str();
  os << "affine " << C.rows_affine() << " centro " << C.centro_symmetric() << '\n';
  return os.str();
}

inline void shift_table(std::ostream& os, const IntPolynomial& p, int rows) {
  int i = 0;
  for (const auto& r : shift_rows(p, rows)) {
    os << i++;
    for (int k = 0; k <= p.degree(); ++k) os << ' ' << r.coeff(k);
    os << '\n';
  }
}

inline std::string section_vincent() {
  std::ostringstream os;
  os << "example 1a\n";
  shift_table(os, {1, -2, -1, 1}, 2);
  os << "example 1b\n";
  shift_table(os, reciprocal_transform(taylor_shift({1, -2, -1, 1}, 1)), 2);
  os << "example 1c\n";
  shift_table(os, {-1, -4, -3, 1}, 5);
  os << "example 2\n";
  shift_table(os, {1, -5, 6, -1}, 6);
  os << "backward\n";
  for (const auto& r : backward_table({1, -2, -1, 1}, 4, {BigInt(13)})) {
    os << r.variable << ": " << r.equation.str(r.variable) << " | ";
    os << (r.quotient ? r.variable + " = " + r.quotient->str() + " + 1/next" : std::string("-"));
    os << " | P " << r.P.str(r.variable) << " | Q " << r.Q.str(r.variable) << " | P+Q "
       << r.PQ.str(r.variable) << '\n';
  }
  return os.str();
}

inline std::string section_golden() {
  std::ostringstream os;
  os << "M\n" << golden_power(3, 1).str() << "M^2\n" << golden_power(3, 2).str();
  os << "M^6\n" << golden_power(3, 6).str() << "ratios k=6:";
  for (const auto& r : diagonal_ratios(3, 6)) os << ' ' << r;
  os << "\nstorage\n";
  const auto tab = storage_table(4);
  for (std::size_t r = 0; r < tab.rows.size(); ++r) {
    os << tab.row_labels[r] << ':';
    for (const auto& v : tab.rows[r]) os << ' ' << v;
    os << '\n';
  }
  os << "char " << characteristic_poly(storage_cycle_matrix()).str("x") << '\n';
  return os.str();
}

inline std::string section_dh() {
  std::ostringstream os;
  const auto dh = dh_blocks(3);
  for (std::size_t k = 0; k < dh.H.size(); ++k) os << "H_" << k << '\n' << dh.H[k].str();
  for (std::size_t k = 1; k < dh.D.size(); ++k) os << "D_" << k << '\n' << dh.D[k].str();
  return os.str();
}

inline std::string section_meneard() {
  std::ostringstream os;
  for (unsigned n = 1; n <= 3; ++n) os << meneard(n).str() << '\n';
  return os.str();
}

inline std::vector<std::pair<std::string, std::string>> paper_sections() {
  return {{"table3.txt", section_table3()},       {"smoothing_533.txt", section_smoothing_533()},
          {"vincent.txt", section_vincent()},     {"golden.txt", section_golden()},
          {"dh_blocks.txt", section_dh()},        {"meneard.txt", section_meneard()}};
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// First differing line, or nullopt on a match.
inline std::optional<std::string> first_diff(const std::string& want, const std::string& got) {
  if (want == got) return std::nullopt;
  std::istringstream a(want), b(got);
  std::string la, lb;
  for (int line = 1;; ++line) {
    const bool ha = static_cast<bool>(std::getline(a, la));
    const bool hb = static_cast<bool>(std::getline(b, lb));
    if (!ha && !hb) return "trailing whitespace differs";
    if (la != lb || ha != hb)
      return "line " + std::to_string(line) + ": golden '" + (ha ? la : "<eof>") + "' vs '" +
             (hb ? lb : "<eof>") + "'";
  }
}

// ---------------------------------------------------------------------------

template <class S>
void print_point(std::ostream& out, const Point<S>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << format_number(p[i]);
  out << '\n';
}

template <class S>
ControlPolygon<S> load_polygon(const std::string& path, int degree) {
  ControlPolygon<S> poly{read_points_file<S>(path), S(0), S(1)};
  if (degree >= 0 && static_cast<int>(poly.points.size()) != degree + 1)
    throw DomainError("expected " + std::to_string(degree + 1) + " control points, got " +
                      std::to_string(poly.points.size()));
  return poly;
}

template <class S>
int cmd_eval(std::ostream& out, const std::string& pts, int degree, const std::string& t) {
  auto poly = load_polygon<S>(pts, degree);
  print_point(out, eval(poly, parse_scalar<S>(t)));
  return kOk;
}

template <class S>
int cmd_subdivide(std::ostream& out, const std::string& pts, int degree, const std::string& t) {
  auto poly = load_polygon<S>(pts, degree);
  auto [l, r] = subdivide(poly, parse_scalar<S>(t));
  out << "# left\n";
  write_points_csv(out, l.points);
  out << "# right\n";
  write_points_csv(out, r.points);
  return kOk;
}

template <class S>
int cmd_blossom(std::ostream& out, const std::string& pts, const std::string& args) {
  auto poly = load_polygon<S>(pts, -1);
  const auto a = parse_list<S>(args);
  out << "# pole kind: " << to_string(pole_classify(a)) << '\n';
  print_point(out, blossom_eval(poly, a));
  return kOk;
}

template <class S>
int cmd_smooth(std::ostream& out, const Characteristic& ch, const std::string& samples,
               const std::string& svg, double flatness) {
  const auto pts = read_points_file<S>(samples);
  const auto segs = smooth<S>(ch, pts);
  out << "# " << ch.str() << " segments " << segs.size() << '\n';
  for (std::size_t k = 0; k < segs.size(); ++k) {
    out << "# segment " << k << " [" << format_number(segs[k].t0) << ","
        << format_number(segs[k].t1) << "]\n";
    write_points_csv(out, segs[k].points);
  }
  if (!svg.empty()) {
    std::vector<ControlPolygon<double>> curve;
    std::vector<Point<double>> poles;
    for (const auto& s : segs) {
      ControlPolygon<double> c;
      c.t0 = as_double(s.t0);
      c.t1 = as_double(s.t1);
      for (const auto& p : s.points) {
        Point<double> q;
        for (const auto& v : p) q.push_back(as_double(v));
        c.points.push_back(q);
        poles.push_back(q);
      }
      curve.push_back(std::move(c));
    }
    std::vector<Point<double>> sp;
    for (const auto& p : pts) {
      Point<double> q;
      for (const auto& v : p) q.push_back(as_double(v));
      sp.push_back(q);
    }
    std::ofstream f(svg);
    if (!f) throw InputError("cannot write " + svg);
    write_svg(f, curve, {{"samples", sp, "red"}, {"c-poles", poles, "blue"}}, flatness);
  }
  return kOk;
}

inline std::array<double, 3> parse3(const std::string& s) {
  auto v = parse_list<double>(s);
  if (v.size() == 2) v.push_back(1.0);
  if (v.size() != 3) throw DomainError("expected two or three coordinates: " + s);
  return {v[0], v[1], v[2]};
}

inline Matrix<double> parse_conic(const std::string& s) {
  auto v = parse_list<double>(s);
  if (v.size() != 6) throw DomainError("conic needs six coefficients a,b,c,d,e,f");
  return conic(v[0], v[1], v[2], v[3], v[4], v[5]);
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"casteljau: curves, smoothing and algebra tools"};
  app.require_subcommand(1);
  bool exact = false;
  app.add_flag("--exact", exact, "route arithmetic through rationals");

  // eval / subdivide
  std::string points, tparam = "0.5";
  int degree = -1;
  auto* ev = app.add_subcommand("eval", "evaluate a Bezier curve");
  ev->add_option("--points", points, "control point CSV")->required();
  ev->add_option("--degree", degree, "expected degree");
  ev->add_option("--t", tparam, "parameter in [0,1]");
  ev->add_flag("--exact", exact);
  auto* sd = app.add_subcommand("subdivide", "split a Bezier curve");
  sd->add_option("--points", points, "control point CSV")->required();
  sd->add_option("--degree", degree, "expected degree");
  sd->add_option("--t", tparam, "split parameter in (0,1)");
  sd->add_flag("--exact", exact);

  // blossom
  std::string bargs;
  auto* bl = app.add_subcommand("blossom", "evaluate the polar form");
  bl->add_option("--points", points, "control point CSV")->required();
  bl->add_option("--args", bargs, "comma separated arguments")->required();
  bl->add_flag("--exact", exact);

  // smooth
  int sn = 0, sc = 0, sr = 0, sq = 0, ss = 0;
  std::string samples, svg;
  double flatness = 1e-3;
  auto* sm = app.add_subcommand("smooth", "fit a spline to samples");
  sm->add_option("--samples", samples, "sample CSV")->required();
  sm->add_option("--n", sn, "segment degree");
  sm->add_option("--c", sc, "continuity order");
  sm->add_option("--r", sr, "restitution degree");
  sm->add_option("--q", sq, "configuration sample count");
  sm->add_option("--s", ss, "configuration segment count");
  sm->add_option("--svg", svg, "write an SVG overlay");
  sm->add_option("--flatness", flatness, "SVG flatness tolerance");
  sm->add_flag("--exact", exact);

  // tol
  double d0 = 0, d1 = 0, rho = 1, radius = 0, budget = 0;
  std::string variant = to_string(kDefaultDeviation);
  auto* tl = app.add_subcommand("tol", "machining deviation report");
  tl->add_option("--d0", d0, "tendency at the start")->required();
  tl->add_option("--d1", d1, "tendency at the end")->required();
  tl->add_option("--variant", variant, "sum-twice-root | diff-twice-root | sum-root")
      ->check(CLI::IsMember({"sum-twice-root", "diff-twice-root", "sum-root"}));
  tl->add_option("--rho", rho, "step ratio for extrapolation");
  tl->add_option("--radius", radius, "cutter radius for the geodesic term");
  tl->add_option("--budget", budget, "total tolerance");

  // intersect
  std::string fconic, gconic, start;
  std::size_t cycles = 3;
  auto* is = app.add_subcommand("intersect", "intersect two conics");
  is->add_option("--f", fconic, "a,b,c,d,e,f")->required();
  is->add_option("--g", gconic, "a,b,c,d,e,f")->required();
  is->add_option("--start", start, "x,y[,w]")->required();
  is->add_option("--cycles", cycles, "iteration cycles");

  // roots
  std::string coeffs, strategy = "scan";
  std::size_t depth = 20;
  auto* rt = app.add_subcommand("roots", "isolate real roots of an integer polynomial");
  rt->add_option("--coeffs", coeffs, "coefficients, constant term first")->required();
  rt->add_option("--depth", depth, "continued fraction quotients");
  rt->add_option("--strategy", strategy, "scan | tree");

  // golden
  int gn = 3;
  unsigned gk = 6;
  auto* gd = app.add_subcommand("golden", "golden matrix powers");
  gd->add_option("--n", gn, "order");
  gd->add_option("--k", gk, "power");

  // euclid
  std::string evalues;
  std::size_t esteps = 30;
  auto* eu = app.add_subcommand("euclid", "generalised Euclidean algorithm");
  eu->add_option("--values", evalues, "positive values")->required();
  eu->add_option("--steps", esteps, "maximum steps");
  eu->add_flag("--exact", exact);

  // quat rotate
  std::string qv, vv;
  auto* qt = app.add_subcommand("quat", "quaternion tools");
  qt->require_subcommand(1);
  auto* qr = qt->add_subcommand("rotate", "rotate a vector");
  qr->add_option("--q", qv, "d,a,b,c")->required();
  qr->add_option("--v", vv, "x,y,z")->required();
  qr->add_flag("--exact", exact);

  // meneard
  unsigned mn = 1;
  auto* mc = app.add_subcommand("meneard", "cube identities");
  mc->add_option("--n", mn, "index >= 1");

  // reproduce-paper
  std::string golden_dir = CASTELJAU_GOLDEN_DIR, report;
  bool update = false;
  auto* rp = app.add_subcommand("reproduce-paper", "regenerate tables and diff with golden files");
  rp->add_option("--golden-dir", golden_dir, "golden file directory");
  rp->add_option("--report", report, "write the full report here");
  rp->add_flag("--update", update, "rewrite golden files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (ev->parsed())
      return exact ? cmd_eval<Rational>(out, points, degree, tparam)
                   : cmd_eval<double>(out, points, degree, tparam);
    if (sd->parsed())
      return exact ? cmd_subdivide<Rational>(out, points, degree, tparam)
                   : cmd_subdivide<double>(out, points, degree, tparam);
    if (bl->parsed())
      return exact ? cmd_blossom<Rational>(out, points, bargs) : cmd_blossom<double>(out, points, bargs);
    if (sm->parsed()) {
      Characteristic ch;
      if (sq > 0 || ss > 0) {
        if (sn || sc || sr) {
          err << "smooth: give either --n --c --r or --q --s\n";
          return kUsage;
        }
        ch = configuration(sq, ss);
      } else {
        if (sn == 0) {
          err << "smooth: missing --n --c --r or --q --s\n";
          return kUsage;
        }
        ch = characteristic(sn, sc, sr);
      }
      ch.validate();
      return exact ? cmd_smooth<Rational>(out, ch, samples, svg, flatness)
                   : cmd_smooth<double>(out, ch, samples, svg, flatness);
    }
    if (tl->parsed()) {
      const TendencyPair t{d0, d1};
      const auto v = parse_deviation_variant(variant);
      out << "variant " << to_string(v) << '\n';
      out << "max_deviation " << format_number(max_deviation(t, v)) << '\n';
      out << "normal_deviation " << format_number(normal_deviation(t)) << '\n';
      const auto ex = extrapolate_tendencies(t, rho);
      out << "extrapolated " << format_number(ex.d0) << ' ' << format_number(ex.d1) << '\n';
      if (radius > 0) {
        const double g = geodesic_deviation(t, radius);
        out << "geodesic_deviation " << format_number(g) << '\n';
        if (budget > 0)
          out << "budget " << (budget_ok(normal_deviation(t), g, budget) ? "ok" : "exceeded")
              << '\n';
      }
      return kOk;
    }
    if (is->parsed()) {
      const auto F = parse_conic(fconic), G = parse_conic(gconic);
      const auto res = intersect_iterate(F, G, parse3(start), cycles);
      out << "step x y w residual_f residual_g\n";
      for (std::size_t i = 0; i < res.points.size(); ++i) {
        const auto& p = res.points[i];
        out << i << ' ' << format_number(p[0]) << ' ' << format_number(p[1]) << ' '
            << format_number(p[2]) << ' ' << format_number(conic_residual(F, p)) << ' '
            << format_number(conic_residual(G, p)) << '\n';
      }
      static const char* names[] = {"converged", "not-converged", "degenerate"};
      out << "status " << names[static_cast<int>(res.status)] << '\n';
      return res.status == IterateStatus::degenerate ? kDomain : kOk;
    }
    if (rt->parsed()) {
      IsolationStrategy st;
      if (strategy == "scan")
        st = IsolationStrategy::linear_scan;
      else if (strategy == "tree")
        st = IsolationStrategy::bisection_tree;
      else {
        err << "roots: unknown strategy " << strategy << '\n';
        return kUsage;
      }
      IntPolynomial p;
      try {
        p = parse_int_polynomial(coeffs);
      } catch (const DomainError& e) {
        throw InputError(std::string("--coeffs: ") + e.what());
      }
      out << "polynomial " << p.str("x") << '\n';
      for (const auto& r : isolate_real_roots(p, depth, st)) {
        if (r.exact) {
          out << "root " << r.value << " exact\n";
          continue;
        }
        out << "interval (" << r.lo << ", " << (r.hi ? r.hi->str() : std::string("inf")) << ")";
        out << " cf " << (r.negative ? "-[" : "[");
        for (std::size_t i = 0; i < r.cf.quotients.size(); ++i)
          out << (i ? (i == 1 ? "; " : ", ") : "") << r.cf.quotients[i];
        out << "] approx " << format_number(r.approx) << '\n';
      }
      return kOk;
    }
    if (gd->parsed()) {
      if (gn < 2) throw DomainError("golden: n must be >= 2");
      const auto n = static_cast<std::size_t>(gn);
      out << "M^" << gk << '\n' << golden_power(n, gk).str();
      if (gk >= 1) {
        const auto ratios = diagonal_ratios(n, gk);
        const auto trig = trig_diagonals(n);
        out << "i ratio float trig diff\n";
        for (std::size_t i = 0; i < n; ++i) {
          const double f = ratios[i].to_double();
          out << i + 1 << ' ' << ratios[i] << ' ' << format_number(f) << ' '
              << format_number(trig[i]) << ' ' << format_number(f - trig[i]) << '\n';
        }
      }
      return kOk;
    }
    if (eu->parsed()) {
      auto dump = [&](const auto& tr) {
        out << "step minuend subtrahend count\n";
        for (std::size_t i = 0; i < tr.steps.size(); ++i) {
          const auto& s = tr.steps[i];
          out << i + 1 << ' ' << s.minuend_label << ' ' << s.subtrahend_label << ' ' << s.count
              << (s.vanished ? " vanished" : "") << '\n';
        }
        if (tr.period)
          out << "period " << *tr.period << " scale " << format_number(*tr.period_scale) << '\n';
        if (tr.gcd) out << "gcd " << format_number(*tr.gcd) << '\n';
      };
      if (exact)
        dump(generalized_euclid(parse_list<Rational>(evalues), esteps));
      else
        dump(generalized_euclid(parse_list<double>(evalues), esteps));
      return kOk;
    }
    if (qr->parsed()) {
      auto go = [&](auto tag) {
        using S = decltype(tag);
        const auto q = parse_list<S>(qv);
        const auto v = parse_list<S>(vv);
        if (q.size() != 4 || v.size() != 3) throw DomainError("quat rotate: need --q d,a,b,c and --v x,y,z");
        const Quat<S> Q{q[0], q[1], q[2], q[3]};
        const auto w = rotate(Q, {v[0], v[1], v[2]});
        out << "rotated " << format_number(w[0]) << ',' << format_number(w[1]) << ','
            << format_number(w[2]) << '\n';
        const auto R = rotation(Q);
        for (std::size_t i = 1; i < 4; ++i) {
          for (std::size_t j = 1; j < 4; ++j) out << (j > 1 ? " " : "") << format_number(R(i, j));
          out << '\n';
        }
      };
      if (exact)
        go(Rational());
      else
        go(0.0);
      return kOk;
    }
    if (mc->parsed()) {
      const auto id = meneard(mn);
      out << id.str() << '\n';
      out << "verified " << (id.holds() ? "yes" : "no") << '\n';
      out << "three cubes " << id.L1 << "^3 = " << id.R1 << "^3 + " << id.L2 << "^3 + " << id.R2
          << "^3 " << (id.three_cubes() ? "yes" : "no") << '\n';
      return kOk;
    }
    if (rp->parsed()) {
      namespace fs = std::filesystem;
      const auto sections = paper_sections();
      std::ostringstream full;
      for (const auto& [name, text] : sections) full << "== " << name << '\n' << text;
      if (!report.empty()) {
        std::ofstream f(report);
        if (!f) throw InputError("cannot write " + report);
        f << full.str();
      }
      if (update) {
        fs::create_directories(golden_dir);
        for (const auto& [name, text] : sections) {
          std::ofstream f(fs::path(golden_dir) / name, std::ios::binary);
          f << text;
        }
        out << "golden files written to " << golden_dir << '\n';
        return kOk;
      }
      int bad = 0;
      for (const auto& [name, text] : sections) {
        const auto path = fs::path(golden_dir) / name;
        if (!fs::exists(path)) {
          out << name << ": missing golden file\n";
          ++bad;
          continue;
        }
        if (auto d = first_diff(read_file(path), text)) {
          out << name << ": DIFF " << *d << '\n';
          ++bad;
        } else {
          out << name << ": match\n";
        }
      }
      return bad ? kDomain : kOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace casteljau::cli

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kn/autgrp.hpp"
#include "kn/axioms.hpp"
#include "kn/centroid.hpp"
#include "kn/error.hpp"
#include "kn/loop.hpp"
#include "kn/parse.hpp"
#include "kn/probes.hpp"
#include "kn/serialize.hpp"
#include "kn/superconf.hpp"
#include "kn/tables.hpp"

namespace {

struct Options {
  std::string format = "md";
  std::uint64_t seed = 1;
  int window = 2;
  int dmax = 2;
  int n = 3;
  std::string twist = "id";
  std::string part = "odd";
  std::string matrix;
  std::string ring = "laurent";
  int steps = 4;
  int count = 20;
  int margin = 1;
  std::string scale = "-2*i";
};

void progress(const std::string& msg) { std::cerr << "[knverify] " << msg << std::endl; }

// Prints the document and the summary; returns the exit code.
int emit(const Options& o, const kn::Report& r, const std::function<std::string()>& json,
         const std::function<std::string()>& md) {
  std::string summary = kn::summary_line(r);
  if (o.format == "json") {
    std::cout << json() << std::endl;
    std::cerr << summary << std::endl;
  } else {
    std::string doc = md();
    std::cout << doc;
    if (doc.find(summary) == std::string::npos) std::cout << "\n" << summary << "\n";
    std::cout.flush();
  }
  return r.passed() ? 0 : 1;
}

int emit(const Options& o, const kn::Report& r) {
  return emit(o, r, [&] { return kn::to_json(r); }, [&] { return kn::to_markdown(r); });
}

void check_n(int n, int lo) {
  if (n < lo || n > 3) throw kn::InvalidArgument("--n must be in [" + std::to_string(lo) + ", 3]");
}

kn::OrthMatrix read_matrix(const std::string& path, const kn::DRing& ring) {
  std::ifstream in(path);
  if (!in) throw kn::ParseError("cannot open matrix file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw kn::ParseError("matrix file is not JSON: " + std::string(e.what()));
  }
  if (!j.is_array() || j.empty()) throw kn::ParseError("matrix file must hold a non-empty 2-D array");
  auto n = static_cast<Eigen::Index>(j.size());
  kn::RingMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw kn::ParseError("matrix must be square");
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto& e = row[static_cast<std::size_t>(k)];
      std::string text = e.is_string() ? e.get<std::string>() : e.dump();
      m(i, k) = kn::parse_ring_elem(text, ring);
    }
  }
  return kn::OrthMatrix(m, ring);
}

int run_axioms(const Options& o) {
  check_n(o.n, 1);
  kn::DRing ring = kn::parse_ring(o.ring);
  kn::AxiomOptions opts;
  opts.dmax = o.dmax;
  opts.exponents.clear();
  for (int e = -o.window; e <= o.window; ++e) opts.exponents.emplace_back(e);
  opts.progress = progress;
  progress("axioms for K_" + std::to_string(o.n) + " over " + ring.to_string());
  return emit(o, kn::check_axioms(o.n, ring, opts));
}

int run_aut_check(const Options& o) {
  kn::DRing ring = kn::parse_ring(o.ring);
  kn::Report r;
  if (!o.matrix.empty()) {
    kn::OrthMatrix a = read_matrix(o.matrix, ring);
    progress("phi_A for A = " + a.to_string());
    r = kn::orthogonal_suite({{a, a}});
    r.title = "phi_A for A = " + a.to_string();
  } else {
    check_n(o.n, 1);
    progress(std::to_string(o.count) + " random pairs, seed " + std::to_string(o.seed));
    r = kn::orthogonal_suite(o.n, ring, o.seed, o.count);
  }
  return emit(o, r);
}

int run_omega(const Options& o) {
  check_n(o.n, 1);
  kn::DRing ring = kn::parse_ring(o.ring);
  kn::ConformalAut w = kn::omega(o.n, ring);
  kn::Report r = kn::verify_automorphism(w);
  r.title = "omega_" + std::to_string(o.n) + " over " + ring.to_string();
  r.add("order-two").expect(kn::compose_aut(w, w) == kn::ConformalAut::identity(o.n, ring), "omega o omega != id");
  r.add("graded").expect(w.graded(), "omega has d-terms");
  for (kn::Mask m = 0; m < (kn::Mask(1) << o.n); ++m)
    r.info.emplace_back("omega(" + kn::mask_name(m) + ")", w.images[m].to_string());
  return emit(o, r);
}

int run_loop_check(const Options& o) {
  check_n(o.n, 1);
  kn::SuperconformalAlgebra alg(o.n, kn::parse_twist(o.twist));
  const kn::LoopAlgebra& loop = alg.loop();
  progress("closure, window " + std::to_string(o.window));
  kn::Report r = kn::closure_check(loop, o.window);
  r.title = "loop algebra L(K_" + std::to_string(o.n) + ", " + o.twist + "), window " + std::to_string(o.window);
  progress("trivialization");
  r.append(kn::trivialization_check(loop, o.window));
  progress("finite generation");
  r.append(kn::fin_check(loop, o.window, o.dmax));
  return emit(o, r);
}

int run_table(const Options& o) {
  check_n(o.n, 1);
  kn::SuperconformalAlgebra alg(o.n, kn::parse_twist(o.twist));
  progress("bracket table for " + alg.name());
  kn::BracketTable t = kn::bracket_table(alg, o.window);
  return emit(o, t.report, [&] { return kn::to_json(t); }, [&] { return kn::to_markdown(t); });
}

int run_spectrum(const Options& o) {
  check_n(o.n, 1);
  kn::SuperconformalAlgebra alg(o.n, kn::parse_twist(o.twist));
  kn::Spectrum s = kn::l0_spectrum(alg, kn::parse_part(o.part), o.window);
  kn::Report r = kn::spectrum_report(alg, s);
  return emit(o, r, [&] { return kn::to_json(s); },
              [&] { return kn::to_markdown(s) + "\n" + kn::to_markdown(r); });
}

int run_rigidity(const Options& o) {
  if (o.n != 3) throw kn::InvalidArgument("rigidity probes are defined for --n 3");
  kn::SuperconformalAlgebra alg(3, kn::parse_twist(o.twist));
  progress("witnesses, " + std::to_string(o.steps) + " steps");
  kn::Report r = kn::rigidity_report(alg, o.steps);
  progress("g_0 structure");
  r.append(kn::g0_structure(alg));
  return emit(o, r);
}

int run_curr_so3(const Options& o) {
  return emit(o, kn::curr_so3_check(kn::parse_scalar(o.scale)));
}

int run_centroid(const Options& o) {
  check_n(o.n, 1);
  kn::Twist tw = kn::parse_twist(o.twist);
  progress("centroid system, window " + std::to_string(o.window));
  kn::CentroidResult c = kn::centroid_solve(o.n, tw, o.window, o.margin);
  return emit(o, c.report, [&] { return kn::to_json(c); }, [&] { return kn::to_markdown(c); });
}

int run_counterexample(const Options& o) {
  kn::CounterexampleResult c = kn::dual_number_counterexample();
  kn::Report r = c.report;
  r.title = "non-graded automorphism " + c.phi.label + " over the dual numbers";
  r.add("not-graded").expect(!c.graded, "the map is graded");
  for (std::size_t m = 0; m < c.phi.images.size(); ++m)
    r.info.emplace_back("phi(" + kn::mask_name(static_cast<kn::Mask>(m)) + ")", c.phi.images[m].to_string());
  r.info.emplace_back("automorphism", c.automorphism ? "pass" : "fail");
  r.info.emplace_back("graded", c.graded ? "true" : "false");
  return emit(o, r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the conformal superalgebras K_N and their superconformal algebras"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "md"}));
  };
  auto with_n = [&](CLI::App* s) { s->add_option("--n", o.n, "Number of odd generators (1-3)"); };
  auto with_twist = [&](CLI::App* s) {
    s->add_option("--twist", o.twist, "Twist: id or omega");
  };
  auto with_ring = [&](CLI::App* s) {
    s->add_option("--ring", o.ring, "Differential ring: laurent, laurent(m), dual");
  };

  CLI::App* ax = app.add_subcommand("axioms", "Conformal superalgebra axioms for K_N");
  common(ax), with_n(ax), with_ring(ax);
  ax->add_option("--window", o.window, "Exponent bound");
  ax->add_option("--dmax", o.dmax, "Largest d-power of the test atoms");

  CLI::App* au = app.add_subcommand("aut-check", "phi_A for orthogonal A");
  common(au), with_n(au), with_ring(au);
  au->add_option("--matrix", o.matrix, "JSON file with a 2-D array of ring elements");
  au->add_option("--seed", o.seed, "Seed for random matrices");
  au->add_option("--count", o.count, "Number of random pairs");

  CLI::App* om = app.add_subcommand("omega", "The twist omega_N");
  common(om), with_n(om), with_ring(om);

  CLI::App* lc = app.add_subcommand("loop-check", "Closure, trivialization and finite generation of L(K_N, sigma)");
  common(lc), with_n(lc), with_twist(lc);
  lc->add_option("--window", o.window, "Exponent bound");
  lc->add_option("--dmax", o.dmax, "Largest d-power for finite generation");

  CLI::App* tb = app.add_subcommand("table", "Bracket table of named atoms");
  common(tb), with_n(tb), with_twist(tb);
  tb->add_option("--window", o.window, "Subscript bound");

  CLI::App* sp = app.add_subcommand("spectrum", "ad L_0 eigenvalues on named atoms");
  common(sp), with_n(sp), with_twist(sp);
  sp->add_option("--part", o.part, "even or odd");
  sp->add_option("--window", o.window, "Subscript bound");

  CLI::App* rg = app.add_subcommand("rigidity", "Local finiteness witnesses and g_0 structure (N = 3)");
  common(rg), with_n(rg), with_twist(rg);
  rg->add_option("--steps", o.steps, "Number of ad iterations");

  CLI::App* cs = app.add_subcommand("curr-so3", "The current subalgebra spanned by scaled xi_j xi_l in K_3");
  common(cs);
  cs->add_option("--scale", o.scale, "Scalar c in B_i = c xi_j xi_l");

  CLI::App* ce = app.add_subcommand("centroid", "Solve for the centroid on a finite window");
  common(ce), with_n(ce), with_twist(ce);
  ce->add_option("--window", o.window, "Exponent bound (default 3)");
  ce->add_option("--margin", o.margin, "Largest t-shift of the unknown map");

  CLI::App* cx = app.add_subcommand("counterexample", "Non-graded automorphism over the dual numbers");
  common(cx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (ce->parsed() && ce->count("--window") == 0) o.window = 3;

  try {
    if (ax->parsed()) return run_axioms(o);
    if (au->parsed()) return run_aut_check(o);
    if (om->parsed()) return run_omega(o);
    if (lc->parsed()) return run_loop_check(o);
    if (tb->parsed()) return run_table(o);
    if (sp->parsed()) return run_spectrum(o);
    if (rg->parsed()) return run_rigidity(o);
    if (cs->parsed()) return run_curr_so3(o);
    if (ce->parsed()) return run_centroid(o);
    if (cx->parsed()) return run_counterexample(o);
  } catch (const kn::Error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 2;
}

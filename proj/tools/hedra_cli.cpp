// Command-line surface: enumeration counts, f-vectors, GKZ/flip-graph/OFF
// exports, Farey tessellation renderings, circle-map algebra, and the
// verification battery.
//
// Exit codes: 0 success, 1 verification or runtime failure, 2 usage error,
// 3 capacity exceeded.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hedra/dyadic.hpp"
#include "hedra/errors.hpp"
#include "hedra/facelattice.hpp"
#include "hedra/farey.hpp"
#include "hedra/rational.hpp"
#include "hedra/secondary.hpp"
#include "hedra/thompson.hpp"
#include "hedra/triangulation.hpp"
#include "hedra/verify.hpp"

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed while writing " + path);
}

hedra::DiscModel parse_model(const std::string& name) {
  if (name == "poincare") return hedra::DiscModel::Poincare;
  if (name == "klein") return hedra::DiscModel::Klein;
  throw std::invalid_argument("unknown disc model: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact combinatorics of polygon triangulations, associahedra and "
      "cyclohedra, Farey tessellations, and dyadic PL circle maps"};
  app.require_subcommand(1);

  // enumerate
  auto* cmd_enumerate = app.add_subcommand(
      "enumerate", "Count the (centrally symmetric) triangulations of an n-gon");
  int en_n = 0;
  bool en_sym = false;
  std::string en_json;
  cmd_enumerate->add_option("--n", en_n, "polygon size")->required();
  cmd_enumerate->add_flag("--symmetric", en_sym,
                          "restrict to centrally symmetric triangulations");
  cmd_enumerate->add_option("--json", en_json,
                            "also write the full list as JSON to this file");

  // fvector
  auto* cmd_fvector = app.add_subcommand(
      "fvector", "f-vector of the associahedron or cyclohedron of an n-gon");
  int fv_n = 0;
  bool fv_sym = false;
  cmd_fvector->add_option("--n", fv_n, "polygon size")->required();
  cmd_fvector->add_flag("--symmetric", fv_sym, "use the cyclohedron");

  // gkz
  auto* cmd_gkz = app.add_subcommand(
      "gkz", "Write the GKZ vertex coordinates of the secondary polytope");
  int gkz_n = 0;
  bool gkz_sym = false;
  std::string gkz_out;
  cmd_gkz->add_option("--n", gkz_n, "polygon size")->required();
  cmd_gkz->add_flag("--symmetric", gkz_sym,
                    "restrict to centrally symmetric triangulations");
  cmd_gkz->add_option("--out", gkz_out, "output JSON file")->required();

  // flipgraph
  auto* cmd_flipgraph =
      app.add_subcommand("flipgraph", "Write the flip graph in DOT format");
  int fg_n = 0;
  bool fg_sym = false;
  std::string fg_dot;
  cmd_flipgraph->add_option("--n", fg_n, "polygon size")->required();
  cmd_flipgraph->add_flag("--symmetric", fg_sym,
                          "use symmetric triangulations and orbit flips");
  cmd_flipgraph->add_option("--dot", fg_dot, "output DOT file")->required();

  // farey
  auto* cmd_farey = app.add_subcommand(
      "farey", "Enumerate and render rational or dyadic Farey tessellations");
  bool fa_dyadic = false;
  int fa_depth = 0, fa_max_den = 0;
  std::string fa_lo = "0", fa_hi = "1", fa_model = "poincare";
  std::string fa_svg, fa_json;
  bool fa_halfplane = false;
  cmd_farey->add_flag("--dyadic", fa_dyadic,
                      "use the dyadic tessellation instead of the rational one");
  cmd_farey->add_option("--depth", fa_depth,
                        "maximum interval depth (dyadic mode)");
  cmd_farey->add_option("--max-den", fa_max_den,
                        "maximum denominator (rational mode)");
  cmd_farey->add_option("--lo", fa_lo, "lower seed endpoint (rational mode)");
  cmd_farey->add_option("--hi", fa_hi, "upper seed endpoint (rational mode)");
  cmd_farey->add_option("--model", fa_model,
                        "disc model for SVG output: poincare or klein");
  cmd_farey->add_flag("--halfplane", fa_halfplane,
                      "render the rational SVG in the half-plane instead");
  cmd_farey->add_option("--svg", fa_svg, "write an SVG rendering here");
  cmd_farey->add_option("--json", fa_json, "write the arc list as JSON here");

  // thompson
  auto* cmd_thompson = app.add_subcommand(
      "thompson", "Algebra of dyadic PL circle maps (partition-pair elements)");
  cmd_thompson->require_subcommand(1);
  auto* th_compose = cmd_thompson->add_subcommand(
      "compose", "Compose two elements (--elem applied after --with)");
  std::string tc_elem, tc_with;
  th_compose->add_option("--elem", tc_elem, "outer element")->required();
  th_compose->add_option("--with", tc_with, "inner element")->required();
  auto* th_eval = cmd_thompson->add_subcommand(
      "eval", "Evaluate an element at a dyadic circle point");
  std::string te_elem, te_at;
  th_eval->add_option("--elem", te_elem, "element")->required();
  th_eval->add_option("--at", te_at, "dyadic argument, e.g. 3/8")->required();
  auto* th_order = cmd_thompson->add_subcommand(
      "order", "Smallest power equal to the identity, up to a cap");
  std::string to_elem;
  int to_cap = 64;
  th_order->add_option("--elem", to_elem, "element")->required();
  th_order->add_option("--cap", to_cap, "largest power to try (default 64)");
  auto* th_quotient = cmd_thompson->add_subcommand(
      "quotient",
      "Descend an element commuting with the half-rotation to the "
      "half-length circle");
  std::string tq_elem;
  th_quotient->add_option("--elem", tq_elem, "element")->required();

  // act
  auto* cmd_act = app.add_subcommand(
      "act", "Apply a circle map to a tessellation vertex");
  std::string act_elem, act_vertex;
  cmd_act->add_option("--elem", act_elem, "element")->required();
  cmd_act->add_option("--vertex", act_vertex, "stage vertex as JSON")
      ->required();

  // verify
  auto* cmd_verify = app.add_subcommand(
      "verify", "Run the verification criteria and print PASS/FAIL lines");
  std::string verify_suite;
  cmd_verify->add_option(
      "--suite", verify_suite,
      "criterion subset: triangulations, facelattice, secondary, farey, "
      "thompson, or a single id");

  // off
  auto* cmd_off = app.add_subcommand(
      "off", "Write the 3-dimensional polytope as an OFF model");
  int off_n = 0;
  bool off_sym = false;
  std::string off_out;
  cmd_off->add_option("--n", off_n, "polygon size (6, or 8 with --symmetric)")
      ->required();
  cmd_off->add_flag("--symmetric", off_sym, "use the cyclohedron");
  cmd_off->add_option("--out", off_out, "output OFF file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_enumerate) {
      std::vector<hedra::PartialTriangulation> list =
          en_sym ? hedra::enumerate_symmetric_triangulations(en_n)
                 : hedra::enumerate_triangulations(en_n);
      std::cout << list.size() << "\n";
      if (!en_json.empty()) {
        std::ostringstream doc;
        doc << "{\"count\":" << list.size() << ",\"n\":" << en_n
            << ",\"symmetric\":" << (en_sym ? "true" : "false")
            << ",\"triangulations\":[";
        for (std::size_t i = 0; i < list.size(); ++i) {
          if (i) doc << ',';
          doc << list[i].to_json();
        }
        doc << "]}\n";
        write_file(en_json, doc.str());
      }
    } else if (*cmd_fvector) {
      hedra::FVector fv = hedra::f_vector(fv_n, fv_sym);
      for (std::size_t i = 0; i < fv.counts.size(); ++i)
        std::cout << (i ? " " : "") << fv.counts[i];
      std::cout << "\n";
    } else if (*cmd_gkz) {
      write_file(gkz_out, hedra::gkz_json(gkz_n, gkz_sym));
    } else if (*cmd_flipgraph) {
      write_file(fg_dot, hedra::flip_graph(fg_n, fg_sym).to_dot());
    } else if (*cmd_farey) {
      if (fa_dyadic) {
        if (cmd_farey->count("--max-den") || fa_halfplane)
          throw std::invalid_argument(
              "--dyadic uses --depth and renders only in the disc");
        if (!cmd_farey->count("--depth"))
          throw std::invalid_argument("--dyadic requires --depth");
        auto arcs = hedra::enumerate_dyadic_arcs(fa_depth);
        std::cout << arcs.size() << "\n";
        if (!fa_svg.empty())
          write_file(fa_svg,
                     hedra::svg_dyadic_disc(arcs, parse_model(fa_model)));
        if (!fa_json.empty())
          write_file(fa_json, hedra::arcs_json(arcs, fa_depth));
      } else {
        if (!cmd_farey->count("--max-den"))
          throw std::invalid_argument("rational mode requires --max-den");
        if (cmd_farey->count("--depth"))
          throw std::invalid_argument("--depth applies only with --dyadic");
        hedra::Rational lo = hedra::Rational::parse(fa_lo);
        hedra::Rational hi = hedra::Rational::parse(fa_hi);
        auto arcs = hedra::enumerate_rational_arcs(fa_max_den, lo, hi);
        std::cout << arcs.size() << "\n";
        if (!fa_svg.empty())
          write_file(fa_svg,
                     fa_halfplane
                         ? hedra::svg_rational_halfplane(arcs)
                         : hedra::svg_rational_disc(arcs,
                                                    parse_model(fa_model)));
        if (!fa_json.empty())
          write_file(fa_json, hedra::arcs_json(arcs, fa_max_den, lo, hi));
      }
    } else if (*cmd_thompson) {
      if (*th_compose) {
        std::cout << hedra::compose(hedra::PLCircleMap::parse(tc_elem),
                                    hedra::PLCircleMap::parse(tc_with))
                         .to_string()
                  << "\n";
      } else if (*th_eval) {
        std::cout << hedra::evaluate(hedra::PLCircleMap::parse(te_elem),
                                     hedra::Dyadic::parse(te_at))
                         .to_string()
                  << "\n";
      } else if (*th_order) {
        std::optional<int> d =
            hedra::order(hedra::PLCircleMap::parse(to_elem), to_cap);
        std::cout << (d ? std::to_string(*d) : std::string("none")) << "\n";
      } else if (*th_quotient) {
        std::cout << hedra::quotient_mod_tau(hedra::PLCircleMap::parse(tq_elem))
                         .to_string()
                  << "\n";
      }
    } else if (*cmd_act) {
      hedra::StageVertex image =
          hedra::act_on_vertex(hedra::PLCircleMap::parse(act_elem),
                               hedra::StageVertex::from_json(act_vertex));
      std::cout << image.to_json() << "\n";
    } else if (*cmd_verify) {
      std::optional<std::string> suite;
      if (cmd_verify->count("--suite")) suite = verify_suite;
      return hedra::run_verification(std::cout, suite) == 0 ? 0 : 1;
    } else if (*cmd_off) {
      write_file(off_out, hedra::off_3d(off_n, off_sym));
    }
  } catch (const hedra::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include <hexforce/cli.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <hexforce/bounds.hpp>
#include <hexforce/ecut.hpp>
#include <hexforce/families.hpp>
#include <hexforce/forcing.hpp>
#include <hexforce/hexgrid.hpp>
#include <hexforce/render.hpp>

namespace hexforce::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorKind::SyntaxError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream outf(path, std::ios::binary);
  if (!outf || !(outf << text))
    fail(ErrorKind::SyntaxError, "cannot write '" + path + "'");
}

// Writes to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    write_file(path, text);
}

HexSystem load_system(const std::string& path) { return parse_hexsys(read_file(path)); }

struct SpecArgs {
  std::string family;
  int p = 0;
  int q = 0;
  FamilySpec spec() const { return {parse_family(family), p, q}; }
};

void add_spec_options(CLI::App* cmd, SpecArgs& a) {
  cmd->add_option("family", a.family, "parallelogram, hexagon, oblate or prolate")->required();
  cmd->add_option("-p", a.p, "first size parameter")->required();
  cmd->add_option("-q", a.q, "second size parameter (not used by hexagon)");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complete forcing sets of hexagonal systems", "hexforce"};
  app.require_subcommand(1);

  SpecArgs gen_args;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "write a family member as a HEXSYS file");
  add_spec_options(gen, gen_args);
  gen->add_option("-o,--output", gen_out, "output file (default: stdout)");

  std::string cf_in, cf_out;
  int cf_limit = 14;
  auto* cf = app.add_subcommand("cf", "exact complete forcing number with a witness");
  cf->add_option("file", cf_in, "HEXSYS file")->required();
  cf->add_option("-o,--output", cf_out, "witness edge-set file (default: stdout)");
  cf->add_option("--limit", cf_limit, "refuse systems with more hexagons")->capture_default_str();

  std::string ver_in, ver_set;
  bool ver_oracle = false;
  auto* verify = app.add_subcommand("verify", "check a complete forcing set");
  verify->add_option("file", ver_in, "HEXSYS file")->required();
  verify->add_option("--set", ver_set, "edge-set file")->required();
  verify->add_flag("--oracle", ver_oracle, "cross-check against all perfect matchings");

  std::string bnd_in;
  auto* bounds = app.add_subcommand("bounds", "lower and upper bounds report");
  bounds->add_option("file", bnd_in, "HEXSYS file")->required();

  SpecArgs con_args;
  std::string con_out;
  bool con_cuts = false;
  auto* construct = app.add_subcommand("construct", "optimal complete forcing set of a family member");
  add_spec_options(construct, con_args);
  construct->add_option("-o,--output", con_out, "output file (default: stdout)");
  construct->add_flag("--cuts", con_cuts, "write the set as its list of cuts");

  SpecArgs cer_args;
  auto* certify_cmd = app.add_subcommand("certify", "optimality certificate of a construction");
  add_spec_options(certify_cmd, cer_args);

  std::string dec_in, dec_prefix;
  auto* decompose = app.add_subcommand("decompose", "split into normal components");
  decompose->add_option("file", dec_in, "HEXSYS file")->required();
  decompose->add_option("-o,--output", dec_prefix, "prefix of the component files")->required();

  std::string viz_in, viz_set, viz_svg, viz_dot;
  auto* viz = app.add_subcommand("viz", "SVG drawing and DOT dual graph");
  viz->add_option("file", viz_in, "HEXSYS file")->required();
  viz->add_option("--set", viz_set, "edge-set file to highlight");
  viz->add_option("--svg", viz_svg, "SVG output file");
  viz->add_option("--dot", viz_dot, "DOT output file");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gen) {
      FamilyInstance inst = generate(gen_args.spec());
      emit(gen_out, serialize(inst.hs), out);
      return kExitOk;
    }
    if (*cf) {
      HexSystem hs = load_system(cf_in);
      if (hs.num_hexagons() > cf_limit) {
        err << "error: " << hs.num_hexagons() << " hexagons exceed the limit of " << cf_limit
            << "\n";
        return kExitLimit;
      }
      MinForcingResult r = min_complete_forcing(hs, std::max(cf_limit, 0));
      out << "cf = " << r.cardinality << "\n";
      emit(cf_out, format_edge_set(hs, r.witness), out);
      return kExitOk;
    }
    if (*verify) {
      HexSystem hs = load_system(ver_in);
      EdgeSet s = parse_edge_set(hs, read_file(ver_set));
      auto witness = find_unhit_frame(hs, s);
      if (ver_oracle && is_complete_forcing_set_def(hs, s) != !witness) {
        err << "error: the nice-cycle test and the definition disagree\n";
        return kExitLimit;
      }
      if (!witness) {
        out << "PASS\n";
        return kExitOk;
      }
      out << "FAIL\ncounterexample frame:\n" << format_edge_set(hs, witness->frame);
      return kExitFailed;
    }
    if (*bounds) {
      out << format_report(bounds_report(load_system(bnd_in)));
      return kExitOk;
    }
    if (*construct) {
      FamilyInstance inst = generate(con_args.spec());
      Construction c = construct_cfs(con_args.spec());
      emit(con_out, con_cuts ? format_cut_list(inst.hs, c.cuts) : format_edge_set(inst.hs, c.edges),
           out);
      return kExitOk;
    }
    if (*certify_cmd) {
      Certificate c = certify(cer_args.spec());
      out << format_certificate(c);
      return c.optimal ? kExitOk : kExitFailed;
    }
    if (*decompose) {
      std::vector<HexSystem> comps = normal_components(load_system(dec_in));
      for (std::size_t i = 0; i < comps.size(); ++i) {
        std::string path = dec_prefix + "_" + std::to_string(i + 1) + ".hex";
        write_file(path, serialize(comps[i]));
        out << path << " (" << comps[i].num_hexagons() << " hexagons)\n";
      }
      return kExitOk;
    }
    if (*viz) {
      HexSystem hs = load_system(viz_in);
      std::optional<EdgeSet> hl;
      if (!viz_set.empty())
        hl = parse_edge_set(hs, read_file(viz_set));
      if (!viz_dot.empty())
        write_file(viz_dot, render_dot(hs));
      if (!viz_svg.empty() || viz_dot.empty())
        emit(viz_svg, render_svg(hs, hl), out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    bool limit = e.kind() == ErrorKind::LimitExceeded || e.kind() == ErrorKind::Internal;
    return limit ? kExitLimit : kExitInput;
  }
  return kExitInput;
}

} // namespace hexforce::cli

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pwl/emit.hpp"
#include "pwl/generate.hpp"
#include "pwl/instance.hpp"
#include "pwl/pwl_api.hpp"
#include "pwl/verify.hpp"

namespace {

using namespace pwl;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path);
  out << content;
}

Sos2Method method_or_throw(const std::string& name) {
  auto m = parse_method(name);
  if (!m) throw Error(Errc::UnknownMethod, "unknown method: " + name);
  return *m;
}

Model model_for_instance(const PWLInstance& inst, Sos2Method method, Sos2Method method_y) {
  Model model;
  if (inst.type == PWLInstance::Type::Univariate) {
    const UnivariatePWL& pwl = inst.univariate;
    int x = model.add_variable("x", VarKind::Continuous, pwl.breakpoints.front(),
                               pwl.breakpoints.back());
    int z = add_univariate_pwl(model, x, pwl, method);
    model.objective.add(z, 1);
  } else {
    const GridTriangulation& gt = inst.bivariate;
    int x1 = model.add_variable("x1", VarKind::Continuous, gt.xbreaks.front(), gt.xbreaks.back());
    int x2 = model.add_variable("x2", VarKind::Continuous, gt.ybreaks.front(), gt.ybreaks.back());
    int z = add_bivariate_pwl(model, x1, x2, gt, method, method_y);
    model.objective.add(z, 1);
  }
  model.objective.compact();
  return model;
}

std::vector<std::vector<int>> sos2_family(int d) {
  std::vector<std::vector<int>> family;
  for (int i = 0; i < d; ++i) family.push_back({i, i + 1});
  return family;
}

std::string metric_string(const Rational& q) {
  DecimalString dec = decimal_string(q);
  std::string out = rational_string(q);
  if (dec.exact && !is_integral(q)) out += " (" + dec.text + ")";
  return out;
}

int run_emit(const std::string& input, const std::string& method, const std::string& method_y,
             const std::string& format, const std::string& out_path) {
  PWLInstance inst = parse_instance(read_file(input));
  Model model = model_for_instance(inst, method_or_throw(method),
                                   method_or_throw(method_y.empty() ? method : method_y));
  std::vector<std::string> warnings;
  std::string text = format == "lp" ? emit_lp(model, &warnings) : emit_mps(model, &warnings);
  for (const std::string& w : warnings) std::cerr << w << "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  return kExitOk;
}

int run_verify(const std::string& input, const std::string& method_name_str,
               const std::string& method_y, const std::string& checks_csv) {
  PWLInstance inst = parse_instance(read_file(input));
  Sos2Method method = method_or_throw(method_name_str);

  std::vector<std::string> checks;
  std::stringstream ss(checks_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) checks.push_back(item);
  }
  if (checks.empty()) checks = {"ideal", "sharp", "faces", "cover"};

  bool all_pass = true;
  auto report_line = [&](const std::string& name, const CheckReport& rep) {
    std::cout << (rep.pass ? "PASS" : "FAIL") << " " << name << ": " << rep.detail << "\n";
    all_pass = all_pass && rep.pass;
  };

  if (inst.type == PWLInstance::Type::Univariate) {
    const int d = inst.univariate.pieces();
    if (method == Sos2Method::Mc || method == Sos2Method::Inc) {
      throw Error(Errc::UnknownMethod, "verify supports the lambda-space methods");
    }
    FormulationFragment frag = build_sos2_fragment(method, d);
    for (const std::string& c : checks) {
      if (c == "ideal") report_line("ideal", check_ideal(frag));
      else if (c == "sharp") report_line("sharp", check_sharp_lambda(frag));
      else if (c == "faces") report_line("faces", check_face_union(frag, sos2_family(d)));
      else if (c == "cover") {
        if (method == Sos2Method::LogIb) {
          report_line("cover", check_biclique_representation(d + 1, sos2_family(d),
                                                             build_logib_cover(d)));
        } else {
          std::cout << "SKIP cover: only defined for logib\n";
        }
      } else {
        throw Error(Errc::UnknownMethod, "unknown check: " + c);
      }
    }
  } else {
    const GridTriangulation& gt = inst.bivariate;
    Sos2Method my = method_or_throw(method_y.empty() ? method_name_str : method_y);
    BicliqueCover cover = six_stencil_cover(gt);
    TriangleFamily family = triangles(gt);
    std::vector<std::pair<int, int>> coords((gt.d1() + 1) * (gt.d2() + 1));
    for (int j = 0; j <= gt.d2(); ++j) {
      for (int i = 0; i <= gt.d1(); ++i) coords[gridpoint_id(i, j, gt.d1())] = {i, j};
    }
    FormulationFragment frag = build_bivariate(gt, method, my, cover);
    for (const std::string& c : checks) {
      if (c == "cover") {
        report_line("cover", check_biclique_representation(cover.ground_size, family, cover,
                                                           /*relaxed=*/true, &coords));
      } else if (c == "ideal") {
        report_line("ideal", check_ideal(frag));
      } else if (c == "sharp") {
        report_line("sharp", check_sharp_lambda(frag));
      } else if (c == "faces") {
        report_line("faces", check_face_union(frag, family));
      } else {
        throw Error(Errc::UnknownMethod, "unknown check: " + c);
      }
    }
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

BranchSpec parse_branch(const std::string& text) {
  auto le = text.find("<=");
  auto ge = text.find(">=");
  std::size_t split = le != std::string::npos ? le : ge;
  if (split == std::string::npos) {
    throw Error(Errc::ParseError, "branch must look like y1<=0 or y1>=1");
  }
  std::string var = text.substr(0, split);
  std::string bound = text.substr(split + 2);
  if (var.empty() || var[0] != 'y') {
    throw Error(Errc::ParseError, "branch variable must be an aux variable yK");
  }
  BranchSpec spec;
  spec.aux_index = std::stoi(var.substr(1)) - 1;
  spec.dir = le != std::string::npos ? Sense::Le : Sense::Ge;
  spec.bound = parse_rational(bound);
  return spec;
}

int run_analyze(const std::string& input, const std::string& method_name_str,
                const std::string& branch_text, bool table) {
  PWLInstance inst = parse_instance(read_file(input));
  if (inst.type != PWLInstance::Type::Univariate) {
    throw Error(Errc::Unsupported, "analyze handles univariate instances");
  }
  Sos2Method method = method_or_throw(method_name_str);
  const UnivariatePWL& pwl = inst.univariate;

  BranchMetrics base = branching_metrics(pwl, method, std::nullopt);
  std::cout << "unbranched: volume=" << metric_string(base.volume)
            << " strengthened=" << metric_string(base.proportion) << "\n";

  if (table) {
    FormulationFragment frag = build_sos2_fragment(method, pwl.pieces());
    for (std::size_t k = 0; k < frag.aux_vars.size() && k < 1; ++k) {
      const FragVar& v = frag.aux_vars[k];
      for (Rational t = v.lb; t < v.ub; t += 1) {
        for (Sense dir : {Sense::Le, Sense::Ge}) {
          BranchSpec spec;
          spec.aux_index = static_cast<int>(k);
          spec.dir = dir;
          spec.bound = dir == Sense::Le ? t : t + 1;
          BranchMetrics m = branching_metrics(pwl, method, spec);
          std::cout << "y" << k + 1 << (dir == Sense::Le ? "<=" : ">=")
                    << rational_string(spec.bound) << ": volume=" << metric_string(m.volume)
                    << " strengthened=" << metric_string(m.proportion) << "\n";
        }
      }
    }
    return kExitOk;
  }

  if (branch_text.empty()) return kExitOk;
  BranchMetrics m = branching_metrics(pwl, method, parse_branch(branch_text));
  std::cout << branch_text << ": volume=" << metric_string(m.volume)
            << " strengthened=" << metric_string(m.proportion) << "\n";
  return kExitOk;
}

int run_encode(const std::string& code_name, int r, int d) {
  CodeMatrix code;
  if (code_name == "brgc") code = brgc(r);
  else if (code_name == "zzi") code = zigzag_integer(r);
  else if (code_name == "zzb") code = zigzag_binary(r);
  else throw Error(Errc::UnknownMethod, "unknown code family: " + code_name);
  if (d > 0) code = truncate(code, d);
  for (int i = 0; i < code.d(); ++i) {
    for (int j = 0; j < code.r(); ++j) {
      if (j) std::cout << "\t";
      std::cout << code.entries(i, j);
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int run_gen(const std::string& family, int segments, std::uint64_t seed, bool drop,
            const std::string& method, const std::string& method_y, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::string> warnings;
  if (family == "transport-univariate") {
    TransportInstance inst = gen_transport_univariate(10, 10, segments, seed, drop);
    Model model = transport_model(inst, method_or_throw(method));
    write_file(out_dir + "/model_" + method + ".mps", emit_mps(model, &warnings));
    // Instance summary with exact data for reproducibility checks.
    std::ostringstream meta;
    meta << "family transport-univariate segments " << segments << " seed " << seed
         << " drop " << (drop ? 1 : 0) << "\n";
    for (std::size_t a = 0; a < inst.arc_costs.size(); ++a) {
      meta << "arc " << a + 1 << " breakpoints";
      for (const Rational& t : inst.arc_costs[a].breakpoints) meta << " " << rational_string(t);
      meta << " values";
      for (const Rational& f : inst.arc_costs[a].values) meta << " " << rational_string(f);
      meta << "\n";
    }
    write_file(out_dir + "/instance.txt", meta.str());
  } else if (family == "bivariate-grid") {
    BivariateGridInstance inst = gen_bivariate_grid(segments, seed, drop);
    Sos2Method mx = method_or_throw(method);
    Sos2Method my = method_or_throw(method_y.empty() ? method : method_y);
    Model model = bivariate_grid_model(inst, mx, my);
    write_file(out_dir + "/model_" + method + ".mps", emit_mps(model, &warnings));
    std::ostringstream meta;
    meta << "family bivariate-grid grid " << segments << " seed " << seed << " drop "
         << (drop ? 1 : 0) << " terms " << inst.term_grids.size() << "\n";
    for (std::size_t t = 0; t < inst.term_grids.size(); ++t) {
      PWLInstance wrapper;
      wrapper.type = PWLInstance::Type::Bivariate;
      wrapper.bivariate = inst.term_grids[t];
      meta << "term " << t + 1 << " arcs " << inst.term_arcs[t].first + 1 << " "
           << inst.term_arcs[t].second + 1 << "\n"
           << instance_to_json(wrapper);
    }
    write_file(out_dir + "/instance.txt", meta.str());
  } else {
    throw Error(Errc::UnknownMethod, "unknown family: " + family);
  }
  for (const std::string& w : warnings) std::cerr << w << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MIP formulation generator and verifier for piecewise linear functions"};
  app.require_subcommand(1);

  std::string input, method, method_y, format = "lp", out_path, checks, branch_text;
  std::string code_name, family;
  int r = 0, d = 0, segments = 8;
  std::uint64_t seed = 1;
  bool table = false, drop = false;

  CLI::App* emit = app.add_subcommand("emit", "write a model as LP or MPS");
  emit->add_option("--input", input)->required();
  emit->add_option("--method", method)->required();
  emit->add_option("--method-y", method_y);
  emit->add_option("--format", format)->check(CLI::IsMember({"lp", "mps"}));
  emit->add_option("--out", out_path);

  CLI::App* verify = app.add_subcommand("verify", "certify structural properties");
  verify->add_option("--input", input)->required();
  verify->add_option("--method", method)->required();
  verify->add_option("--method-y", method_y);
  verify->add_option("--checks", checks);

  CLI::App* analyze = app.add_subcommand("analyze", "post-branching relaxation metrics");
  analyze->add_option("--input", input)->required();
  analyze->add_option("--method", method)->required();
  analyze->add_option("--branch", branch_text);
  analyze->add_flag("--table", table);

  CLI::App* encode = app.add_subcommand("encode", "print an encoding row per line");
  encode->add_option("--code", code_name)->required()->check(CLI::IsMember({"brgc", "zzi", "zzb"}));
  encode->add_option("--r", r)->required();
  encode->add_option("--d", d);

  CLI::App* gen = app.add_subcommand("gen", "seeded benchmark instance generation");
  gen->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"transport-univariate", "bivariate-grid"}));
  gen->add_option("--segments", segments);
  gen->add_option("--seed", seed);
  gen->add_flag("--drop", drop);
  gen->add_option("--method", method);
  gen->add_option("--method-y", method_y);
  gen->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (emit->parsed()) return run_emit(input, method, method_y, format, out_path);
    if (verify->parsed()) return run_verify(input, method, method_y, checks);
    if (analyze->parsed()) return run_analyze(input, method, branch_text, table);
    if (encode->parsed()) return run_encode(code_name, r, d);
    if (gen->parsed()) {
      return run_gen(family, segments, seed, drop, method.empty() ? "log" : method, method_y,
                     out_path);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

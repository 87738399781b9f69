#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "codework/canonical.hpp"
#include "codework/classify.hpp"
#include "codework/code.hpp"
#include "codework/exact_cover.hpp"
#include "codework/lengthening.hpp"
#include "codework/switching.hpp"
#include "codework/symmetry.hpp"
#include "codework/text_io.hpp"

namespace codework::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  unsigned jobs = 1;
  std::string format = "code";

  std::vector<std::string> inputs;
  std::string output;
  std::string word_a, word_b;
  int coord = 0;
  int value = 0;
  int component = -1;
  std::vector<int> members;
  bool dedupe = false;
  std::size_t budget = 100;
  int target = 15;
  bool count_flag = false;
  int length = 0;
  int depth = 2;
  bool extensions = false;
  int appended = 2;
  bool all = false;
  std::uint64_t cap = 0;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Code load_code(const Options& opt, const std::string& path) {
  if (opt.format == "orbit") return read_orbit_file(path).expand();
  return read_code_file(path);
}

void emit_code(const Options& opt, std::ostream& out, const Code& code,
               const std::vector<std::string>& comments = {}) {
  if (opt.output.empty() || opt.output == "-") {
    write_code(out, code, comments);
  } else {
    write_code_file(opt.output, code, comments);
  }
}

std::string optimal_verdict(const CodeParams& p) {
  if (!p.d || *p.d != 3) return "unknown";
  try {
    return yes_no(p.M == max_code_size(p.n, 3));
  } catch (const CodeError&) {
    return "unknown";
  }
}

int cmd_dist(const Options& opt, std::ostream& out) {
  out << distance(Codeword::parse(opt.word_a), Codeword::parse(opt.word_b)) << '\n';
  return kExitOk;
}

int cmd_check(const Options& opt, std::ostream& out) {
  for (const auto& path : opt.inputs) {
    const Code code = load_code(opt, path);
    const CodeParams p = params(code);
    out << p.str() << " perfect=" << yes_no(is_perfect(code)) << " optimal=" << optimal_verdict(p) << '\n';
  }
  return kExitOk;
}

int cmd_shorten(const Options& opt, std::ostream& out) {
  emit_code(opt, out, shorten(load_code(opt, opt.inputs.at(0)), opt.coord, opt.value));
  return kExitOk;
}

int cmd_components(const Options& opt, std::ostream& out) {
  const SwitchingGraph g = switching_graph(load_code(opt, opt.inputs.at(0)), opt.coord);
  out << "# coord=" << g.coord << " d=" << g.distance << " components=" << g.components.size() << '\n';
  for (std::size_t k = 0; k < g.components.size(); ++k) {
    out << "component " << k << " size " << g.components[k].size() << ':';
    for (int i : g.components[k]) out << ' ' << i;
    out << '\n';
  }
  return kExitOk;
}

int cmd_switch(const Options& opt, std::ostream& out) {
  const Code code = load_code(opt, opt.inputs.at(0));
  if (!opt.members.empty()) {
    emit_code(opt, out, switch_code(code, opt.coord, opt.members));
  } else {
    if (opt.component < 0) throw CodeError("switch: give --component or --members");
    emit_code(opt, out, switch_code(switching_graph(code, opt.coord), static_cast<std::size_t>(opt.component)));
  }
  return kExitOk;
}

int cmd_neighbors(const Options& opt, std::ostream& out) {
  const auto neighbors = switch_neighbors(load_code(opt, opt.inputs.at(0)), opt.dedupe);
  if (!opt.output.empty()) fs::create_directories(opt.output);
  for (const auto& nb : neighbors) {
    out << "coord=" << nb.coord << " component=" << nb.component << ' ' << params(nb.code).str();
    if (!opt.output.empty()) {
      const fs::path file = fs::path(opt.output) /
                            ("neighbor-" + std::to_string(nb.coord) + "-" + std::to_string(nb.component) + ".code");
      write_code_file(file, nb.code);
      out << ' ' << file.string();
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_class(const Options& opt, std::ostream& out) {
  const SwitchingClass cls = switching_class(load_code(opt, opt.inputs.at(0)), opt.budget, opt.jobs);
  if (!opt.output.empty()) fs::create_directories(opt.output);
  for (const auto& m : cls.members) {
    const std::string digest = digest_hex(code_digest(m.form.form));
    std::string file = "-";
    if (!opt.output.empty()) {
      file = (fs::path(opt.output) / (digest + ".code")).string();
      write_code_file(file, m.representative);
    }
    out << digest << "  " << file << "  " << automorphism_group(m.form.form).order << '\n';
  }
  out << "# classes=" << cls.members.size() << " exhausted=" << yes_no(cls.exhausted) << '\n';
  return kExitOk;
}

int cmd_canon(const Options& opt, std::ostream& out) {
  const CanonicalForm cf = canonical_form(load_code(opt, opt.inputs.at(0)));
  emit_code(opt, out, cf.form,
            {"digest " + digest_hex(code_digest(cf.form)), "transporter " + cf.transporter.str()});
  return kExitOk;
}

int cmd_aut(const Options& opt, std::ostream& out) {
  const AutomorphismGroup g = automorphism_group(load_code(opt, opt.inputs.at(0)));
  out << "order=" << g.order << " exact=" << yes_no(g.exact) << '\n';
  for (const auto& gen : g.generators) out << "gen: " << gen.str() << '\n';
  return kExitOk;
}

int cmd_equiv(const Options& opt, std::ostream& out) {
  const Code a = load_code(opt, opt.inputs.at(0));
  const Code b = load_code(opt, opt.inputs.at(1));
  const auto witness = equivalence_witness(a, b);
  if (witness) {
    out << "equivalent=yes witness=" << witness->str() << '\n';
  } else {
    out << "equivalent=no\n";
  }
  return kExitOk;
}

int cmd_expand(const Options& opt, std::ostream& out) {
  const OrbitSpec spec = read_orbit_file(opt.inputs.at(0));
  const Group group = spec.group();
  const Code code = expand_orbits(group, spec.representatives);
  std::ostringstream sizes;
  for (std::size_t s : orbit_sizes(group, spec.representatives)) sizes << (sizes.tellp() ? " " : "") << s;
  emit_code(opt, out, code,
            {"expanded from " + fs::path(opt.inputs.at(0)).filename().string(),
             "group order " + std::to_string(group.order()) + ", orbit sizes " + sizes.str()});
  return kExitOk;
}

int cmd_extend(const Options& opt, std::ostream& out, bool always_count) {
  for (const auto& path : opt.inputs) {
    const Code code = load_code(opt, path);
    const int i = opt.target - code.length();
    out << "EXTENDS i=" << i << " E=";
    if (always_count || opt.count_flag) {
      out << count_extensions(code, i) << '\n';
    } else {
      out << (is_shortened_perfect(code, i) ? ">=1" : "0") << '\n';
    }
  }
  return kExitOk;
}

int cmd_enum_perfect(const Options& opt, std::ostream& out) {
  const auto codes = enumerate_perfect(opt.length);
  out << "# " << codes.size() << " perfect codes of length " << opt.length << '\n';
  if (!opt.output.empty()) fs::create_directories(opt.output);
  for (std::size_t k = 0; k < codes.size(); ++k) {
    for (std::size_t i = 0; i < codes[k].size(); ++i) out << (i ? " " : "") << codes[k].word(i).str();
    out << '\n';
    if (!opt.output.empty()) {
      write_code_file(fs::path(opt.output) / ("perfect-" + std::to_string(k) + ".code"), codes[k]);
    }
  }
  return kExitOk;
}

int cmd_classify(const Options& opt, std::ostream& out) {
  if (opt.output.empty()) throw CodeError("classify: --output directory is required");
  std::vector<Code> seeds;
  for (const auto& path : opt.inputs) seeds.push_back(load_code(opt, path));
  ClassifyOptions copts;
  copts.jobs = opt.jobs;
  if (const char* scratch = std::getenv("CODEWORK_SCRATCH"); scratch && *scratch) copts.checkpoint_dir = scratch;
  auto records = classify_shortenings(seeds, opt.depth, copts);
  if (opt.extensions) populate_extension_counts(records, opt.appended, opt.jobs);
  write_class_inventory(opt.output, records);
  out << "classes=" << records.size() << " inventory=" << (fs::path(opt.output) / "inventory.txt").string() << '\n';
  return kExitOk;
}

int cmd_count_identity(const Options& opt, std::ostream& out) {
  const fs::path inventory = opt.inputs.at(0);
  const auto lines = read_inventory_file(inventory);
  if (lines.empty()) throw CodeError(inventory.string() + ": empty inventory");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;
  for (const auto& l : lines) {
    if (!l.extension_count) throw CodeError(inventory.string() + ": inventory lacks extension counts");
    terms.emplace_back(l.aut_order, *l.extension_count);
  }
  const int n = read_code_file(inventory.parent_path() / lines.front().representative_path).length();
  const std::uint64_t lhs = counting_sum(terms, n);
  const int target = n + opt.appended;
  if (target != 3 && target != 7) {
    throw CodeError("number of perfect codes of length " + std::to_string(target) + " unavailable");
  }
  const std::uint64_t rhs = enumerate_perfect(target).size();
  out << "lhs=" << lhs << " rhs=" << rhs << " equal=" << yes_no(lhs == rhs) << '\n';
  return kExitOk;
}

int cmd_solve_cover(const Options& opt, std::ostream& out) {
  const ExactCoverInstance inst = read_cover_file(opt.inputs.at(0));
  if (opt.count_flag) {
    out << "count=" << count(inst) << '\n';
    return kExitOk;
  }
  CoverLimits limits;
  limits.max_solutions = opt.all ? opt.cap : (opt.cap ? opt.cap : 1);
  const CoverStats stats = search_covers(inst, limits, [&](std::span<const int> rows) {
    out << "rows:";
    for (int r : rows) out << ' ' << r;
    out << '\n';
    return true;
  });
  const bool exhausted = stats.complete && (limits.max_solutions == 0 || stats.solutions < limits.max_solutions);
  out << "solutions=" << stats.solutions << " complete=" << yes_no(exhausted) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for binary one-error-correcting codes", "codework"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--jobs,-j", opt.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  std::map<CLI::App*, std::function<int()>> handlers;
  auto add = [&](const std::string& name, const std::string& help, std::function<int()> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    handlers[sub] = std::move(fn);
    return sub;
  };
  auto code_inputs = [&](CLI::App* sub, bool many) {
    sub->add_option("--format", opt.format, "Input format")->check(CLI::IsMember({"code", "orbit"}));
    auto* o = sub->add_option("files", opt.inputs, "Input code files")->required();
    if (!many) o->expected(1);
  };
  auto output = [&](CLI::App* sub) { sub->add_option("-o,--output", opt.output, "Output path"); };

  auto* dist = add("dist", "Hamming distance of two words", [&] { return cmd_dist(opt, out); });
  dist->add_option("u", opt.word_a)->required();
  dist->add_option("v", opt.word_b)->required();

  code_inputs(add("check", "Print (n,M,d) with perfect/optimal verdicts", [&] { return cmd_check(opt, out); }), true);

  auto* sh = add("shorten", "Shorten at one coordinate", [&] { return cmd_shorten(opt, out); });
  code_inputs(sh, false);
  output(sh);
  sh->add_option("--coord", opt.coord)->required();
  sh->add_option("--value", opt.value)->required()->check(CLI::Range(0, 1));

  auto* comp = add("components", "Switching graph components", [&] { return cmd_components(opt, out); });
  code_inputs(comp, false);
  comp->add_option("--coord", opt.coord)->required();

  auto* sw = add("switch", "Switch one component", [&] { return cmd_switch(opt, out); });
  code_inputs(sw, false);
  output(sw);
  sw->add_option("--coord", opt.coord)->required();
  sw->add_option("--component", opt.component, "Component number as listed by 'components'");
  sw->add_option("--members", opt.members, "Codeword indices forming the component")->delimiter(',');

  auto* nb = add("neighbors", "All switches of a code", [&] { return cmd_neighbors(opt, out); });
  code_inputs(nb, false);
  nb->add_flag("--dedupe", opt.dedupe, "Keep one neighbor per equivalence class");
  nb->add_option("-o,--output", opt.output, "Directory for neighbor code files");

  auto* cl = add("class", "Explore the switching class", [&] { return cmd_class(opt, out); });
  code_inputs(cl, false);
  cl->add_option("--budget", opt.budget, "Maximum number of classes")->check(CLI::PositiveNumber);
  cl->add_option("-o,--output", opt.output, "Directory for representative files");

  auto* canon = add("canon", "Canonical form", [&] { return cmd_canon(opt, out); });
  code_inputs(canon, false);
  output(canon);

  code_inputs(add("aut", "Automorphism group", [&] { return cmd_aut(opt, out); }), false);

  auto* eq = add("equiv", "Equivalence test", [&] { return cmd_equiv(opt, out); });
  eq->add_option("--format", opt.format)->check(CLI::IsMember({"code", "orbit"}));
  eq->add_option("files", opt.inputs)->required()->expected(2);

  auto* ex = add("expand", "Expand an orbit file to a code", [&] { return cmd_expand(opt, out); });
  ex->add_option("file", opt.inputs)->required()->expected(1);
  output(ex);

  auto* ext = add("extend", "Is the code a shortened perfect code?", [&] { return cmd_extend(opt, out, false); });
  code_inputs(ext, true);
  ext->add_option("--target", opt.target, "Perfect code length")->check(CLI::IsMember({3, 7, 15}));
  ext->add_flag("--count", opt.count_flag, "Report the exact number of extensions");

  auto* ce = add("count-ext", "Count extensions to perfect codes", [&] { return cmd_extend(opt, out, true); });
  code_inputs(ce, true);
  ce->add_option("--target", opt.target)->check(CLI::IsMember({3, 7, 15}));

  auto* ep = add("enum-perfect", "All perfect codes of length 3 or 7", [&] { return cmd_enum_perfect(opt, out); });
  ep->add_option("n", opt.length)->required();
  ep->add_option("-o,--output", opt.output, "Directory for code files");

  auto* cf = add("classify", "Classify shortenings", [&] { return cmd_classify(opt, out); });
  code_inputs(cf, true);
  cf->add_option("--depth", opt.depth)->check(CLI::PositiveNumber);
  cf->add_flag("--extensions", opt.extensions, "Compute extension counts E");
  cf->add_option("--appended", opt.appended, "Coordinates to append when counting E");
  cf->add_option("-o,--output", opt.output, "Inventory directory")->required();

  auto* ci = add("count-identity", "Check the orbit counting identity", [&] { return cmd_count_identity(opt, out); });
  ci->add_option("inventory", opt.inputs)->required()->expected(1);
  ci->add_option("--appended", opt.appended);

  auto* sc = add("solve-cover", "Solve an exact cover instance", [&] { return cmd_solve_cover(opt, out); });
  sc->add_option("file", opt.inputs)->required()->expected(1);
  sc->add_flag("--all", opt.all, "Enumerate all solutions");
  sc->add_flag("--count", opt.count_flag, "Only count solutions");
  sc->add_option("--cap", opt.cap, "Stop after this many solutions");

  std::vector<std::string> argv_storage{"codework"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (auto* sub : app.get_subcommands()) return handlers.at(sub)();
  } catch (const CodeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace codework::cli

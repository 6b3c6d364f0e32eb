#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "voalab/checks.hpp"
#include "voalab/parser.hpp"
#include "voalab/report.hpp"
#include "voalab/sectors.hpp"
#include "voalab/structure.hpp"
#include "voalab/vertex.hpp"

using namespace voalab;

namespace {

int cmd_verify(bool all, const std::vector<std::string>& selection, int jobs, const Config& cfg,
               const std::string& report_path, const std::string& format) {
  std::vector<std::string> sel = selection;
  if (all || sel.empty()) sel = {"all"};
  const Report rep = run_checks(select_checks(sel), cfg, jobs);
  std::cout << report_text(rep);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw std::runtime_error("cannot write " + report_path);
    out << (format == "json" ? report_json(rep) : report_text(rep));
  }
  return rep.fail == 0 ? 0 : 1;
}

int cmd_list(const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& c : check_registry())
      j.push_back({{"id", c.id}, {"criterion", c.criterion}, {"heavy", c.heavy}, {"description", c.description},
                   {"topics", c.topics}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& c : check_registry()) {
    std::string topics;
    for (const auto& t : c.topics) topics += (topics.empty() ? "" : ",") + t;
    std::cout << c.id << "  [" << c.criterion << "] " << (c.heavy ? "(heavy) " : "") << c.description
              << (topics.empty() ? "" : "  {" + topics + "}") << "\n";
  }
  return 0;
}

std::vector<VirasoroWord> words_for(int weight, const std::vector<std::string>& bases) {
  std::vector<VirasoroWord> words;
  for (const auto& b : bases) {
    WordBase base;
    int w0;
    if (b == "vacuum") base = WordBase::Vacuum, w0 = 0;
    else if (b == "u9") base = WordBase::U9, w0 = 9;
    else if (b == "u16") base = WordBase::U16, w0 = 16;
    else throw std::invalid_argument("unknown base '" + b + "' (vacuum, u9, u16)");
    if (weight < w0) continue;
    const auto ws = vacuum_words(weight, base);
    words.insert(words.end(), ws.begin(), ws.end());
  }
  return words;
}

void print_table(const std::string& name, const std::string& format) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  if (name == "vplus") {
    for (const auto& r : vplus_module_table()) {
      if (format == "json") {
        j.push_back({{"module", r.module}, {"display_only", r.display_only}, {"top", r.top_vector},
                     {"omega", r.omega.to_string()}, {"E", r.E.to_string()}, {"J", r.J.to_string()}});
      } else {
        std::cout << r.module << "\t" << r.omega.to_string() << "\t" << r.E.to_string() << "\t" << r.J.to_string()
                  << (r.display_only ? "\t(display only)" : "\t" + r.top_vector) << "\n";
      }
    }
  } else if (name == "irreducibles") {
    for (const auto& d : module_catalog()) {
      if (format == "json") {
        j.push_back({{"name", d.name}, {"realization", d.realization}, {"lowest_weight", d.lowest_weight.get_str()},
                     {"verified", d.verified}});
      } else {
        std::cout << d.name << "\t" << d.lowest_weight.get_str() << "\t" << (d.verified ? "verified" : "unverified")
                  << "\t" << d.realization << "\n";
      }
    }
  } else if (name == "twisted") {
    for (const auto& t : twisted_top_vectors()) {
      if (format == "json")
        j.push_back({{"label", t.label}, {"weight", t.weight.get_str()}, {"vector", t.vec.to_string()}});
      else
        std::cout << t.label << "\t" << t.weight.get_str() << "\t" << t.vec.to_string() << "\n";
    }
  } else {
    throw std::invalid_argument("unknown table '" + name + "' (irreducibles, vplus, twisted)");
  }
  if (format == "json") std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the rank-one lattice vertex algebra V_L2 and its orbifolds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  Config cfg;
  bool all = false;
  std::vector<std::string> selection;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string report_path, format = "text";
  auto* verify = app.add_subcommand("verify", "run registered checks; exit code 1 if any check fails");
  verify->add_flag("--all", all, "run every check (default)");
  verify->add_option("--check", selection, "check id, topic tag or criterion:N (repeatable)");
  verify->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--max-weight", cfg.max_weight, "character truncation order")->check(CLI::Range(4, 60));
  verify->add_option("--eigen-weight", cfg.eigen_weight, "sigma-eigenspace checks up to this weight")
      ->check(CLI::Range(0, 20));
  verify->add_option("--twisted-weight", cfg.twisted_weight, "twisted grading checks up to this weight")
      ->check(CLI::Range(0, 6));
  verify->add_option("--seed", cfg.seed, "seed for the property checks");
  verify->add_option("--report", report_path, "write the report to a file");
  verify->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));

  auto* list = app.add_subcommand("list", "list registered checks");
  list->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::string u_expr, v_expr, n_expr = "0";
  auto* mode = app.add_subcommand("mode", "print u_n v");
  mode->add_option("--u", u_expr, "state expression")->required();
  mode->add_option("--n", n_expr, "mode index (integer)")->required();
  mode->add_option("--v", v_expr, "state expression")->required();

  auto* pr = app.add_subcommand("pair", "print the invariant form (u, v)");
  pr->add_option("--u", u_expr, "state expression")->required();
  pr->add_option("--v", v_expr, "state expression")->required();

  auto* sig = app.add_subcommand("sigma", "print sigma(v)");
  sig->add_option("--v", v_expr, "state expression")->required();

  std::string target;
  int weight = 0;
  std::vector<std::string> bases = {"vacuum", "u16"};
  auto* dec = app.add_subcommand("decompose", "coordinates of a state over Virasoro words");
  dec->add_option("--target", target, "state expression")->required();
  dec->add_option("--weight", weight, "weight of the target")->required()->check(CLI::Range(0, 30));
  dec->add_option("--bases", bases, "word bases among vacuum, u9, u16")->delimiter(',');

  std::string object;
  int order = 24;
  auto* chr = app.add_subcommand("char", "graded dimension of an object");
  chr->add_option("--object", object, "one of: " + [] {
    std::string s;
    for (const auto& o : char_object_examples()) s += (s.empty() ? "" : ", ") + o;
    return s;
  }())->required();
  chr->add_option("--max-weight", order, "truncation order")->check(CLI::Range(0, 200));

  std::string table_name;
  auto* tbl = app.add_subcommand("table", "print a module table");
  tbl->add_option("--name", table_name, "irreducibles, vplus or twisted")->required();
  tbl->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(all, selection, jobs, cfg, report_path, format);
    if (*list) return cmd_list(format);
    if (*mode) {
      const Rational n = parse_rational(n_expr);
      if (n.get_den() != 1) throw std::invalid_argument("mode index must be an integer");
      std::cout << mode_apply(parse_state_expr(u_expr), n, parse_state_expr(v_expr)).to_string() << "\n";
    }
    if (*pr) std::cout << pair(parse_state_expr(u_expr), parse_state_expr(v_expr)).to_string() << "\n";
    if (*sig) std::cout << sigma(parse_state_expr(v_expr)).to_string() << "\n";
    if (*dec) {
      const State t = parse_state_expr(target);
      const DecompositionResult d = decompose_over(t, words_for(weight, bases));
      for (const auto& [w, c] : d.coefficients)
        if (!c.is_zero()) std::cout << c.to_string() << "\t" << w.to_string() << "\n";
      std::cout << "rank " << d.rank << " of " << d.columns << " words; residual "
                << (d.residual.is_zero() ? "0" : d.residual.to_string()) << "\n";
      return d.residual.is_zero() ? 0 : 1;
    }
    if (*chr) std::cout << graded_dim(object, order).to_string() << "\n";
    if (*tbl) print_table(table_name, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

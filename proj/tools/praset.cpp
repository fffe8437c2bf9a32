// praset: solves prioritized extended logic programs, explains why an answer
// set is or is not preferred, and checks selection principles over fixture
// and generated corpora.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "praset/praset.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw praset::error("cannot open program file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw praset::error("cannot write file: " + path);
  out << content;
}

// Resolves an --as selector: a 1-based index into the solve listing, or a
// comma-separated set of objective literals matching an answer set exactly.
std::size_t select_answer_set(const praset::Program& p, const praset::Analysis& a,
                              const std::string& selector) {
  bool numeric = !selector.empty();
  for (char c : selector) numeric = numeric && c >= '0' && c <= '9';
  if (numeric) {
    std::size_t idx = static_cast<std::size_t>(std::stoul(selector));
    if (idx >= 1 && idx <= a.sets.size()) return idx - 1;
    throw praset::unknown_answer_set_error(selector);
  }
  praset::Mask want = 0;
  std::size_t pos = 0;
  while (pos < selector.size()) {
    std::size_t comma = selector.find(',', pos);
    std::string tok = selector.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw praset::unknown_answer_set_error(selector);
    tok = tok.substr(b, e - b + 1);
    bool neg = !tok.empty() && tok[0] == '-';
    int atom = p.atom_id(neg ? tok.substr(1) : tok);
    if (atom < 0) throw praset::unknown_answer_set_error(selector);
    want |= praset::bit(praset::ObjLit::make(atom, neg));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  for (std::size_t i = 0; i < a.sets.size(); ++i)
    if (a.sets[i].pos == want) return i;
  throw praset::unknown_answer_set_error(selector);
}

struct NamedProgram {
  std::string id;
  std::string text;
  praset::Program prog;
};

int run_solve(const std::string& file, bool json, bool total) {
  std::string text = read_file(file);
  praset::Program p = praset::parse_program(text);
  praset::Analysis a = praset::analyze(p);
  if (json)
    std::cout << praset::solve_json(p, a, text, total).dump(2) << "\n";
  else
    std::cout << praset::solve_text(p, a, total);
  return 0;
}

int run_explain(const std::string& file, const std::string& selector, const std::string& dot) {
  std::string text = read_file(file);
  praset::Program p = praset::parse_program(text);
  praset::Analysis a = praset::analyze(p);
  std::size_t which = select_answer_set(p, a, selector);
  std::cout << praset::explain_text(p, a, which);
  if (!dot.empty()) write_file(dot, praset::dot_graph(p, a));
  return 0;
}

std::vector<praset::Principle> parse_principles(const std::string& spec) {
  std::vector<praset::Principle> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    std::string tok = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (tok == "I" || tok == "i")
      out.push_back(praset::Principle::I);
    else if (tok == "III" || tok == "iii")
      out.push_back(praset::Principle::III);
    else if (tok == "IV" || tok == "iv")
      out.push_back(praset::Principle::IV);
    else if (tok == "theorem" || tok == "Theorem")
      out.push_back(praset::Principle::Theorem);
    else
      throw praset::error("unknown principle: " + tok);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int run_check(const std::string& file, const std::string& corpus, int random_n,
              std::uint64_t seed, int atoms, bool json, const std::string& principles,
              const std::string& dump) {
  std::vector<NamedProgram> programs;
  bool generated = random_n > 0;
  if (!file.empty()) {
    std::string text = read_file(file);
    programs.push_back({fs::path(file).stem().string(), text, praset::parse_program(text)});
  } else if (!corpus.empty()) {
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(corpus))
      if (entry.path().extension() == ".lp") paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());
    for (const std::string& path : paths) {
      std::string text = read_file(path);
      programs.push_back({fs::path(path).stem().string(), text, praset::parse_program(text)});
    }
  } else if (generated) {
    std::string dir = dump.empty() ? "praset-corpus" : dump;
    fs::create_directories(dir);
    for (int i = 0; i < random_n; ++i) {
      praset::Program p = praset::random_program(seed, i, atoms);
      std::string id = "random-" + std::to_string(i + 1);
      std::string text = praset::render_program(p);
      write_file((fs::path(dir) / (id + ".lp")).string(), text);
      programs.push_back({id, text, std::move(p)});
    }
  } else {
    throw praset::error("check needs a FILE, --corpus, or --random");
  }

  std::vector<praset::Principle> selected = parse_principles(principles);
  std::vector<praset::PrincipleReport> reports;
  for (const NamedProgram& np : programs) {
    praset::Analysis a = praset::analyze(np.prog);
    for (praset::Principle pr : selected) {
      switch (pr) {
        case praset::Principle::I:
          reports.push_back(praset::check_principle_I(np.prog, a, np.id));
          break;
        case praset::Principle::III:
          reports.push_back(praset::check_principle_III(np.prog, a, np.id));
          break;
        case praset::Principle::IV:
          reports.push_back(praset::check_principle_IV(np.prog, a, np.id));
          break;
        case praset::Principle::Theorem:
          reports.push_back(praset::check_theorem_subset(np.prog, a, np.id));
          break;
      }
    }
  }

  if (json) {
    std::vector<std::pair<std::string, std::string>> texts;
    if (generated)
      for (const NamedProgram& np : programs) texts.emplace_back(np.id, np.text);
    std::cout << praset::check_json(reports, texts).dump(2) << "\n";
  } else {
    for (const praset::PrincipleReport& r : reports) std::cout << praset::check_text_line(r) << "\n";
  }

  bool failed = false;
  for (const praset::PrincipleReport& r : reports) {
    if (r.pass) continue;
    failed = true;
    std::string witness;
    for (const NamedProgram& np : programs)
      if (np.id == r.program) witness = np.text;
    witness += "% principle " + std::string(praset::principle_name(r.principle)) + ": FAIL\n";
    for (const std::string& w : r.witness) witness += "% " + w + "\n";
    write_file("praset-witness-" + r.program + ".lp", witness);
  }
  return failed ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prioritized answer set solver and principle checker"};
  app.require_subcommand(1);

  std::string solve_file;
  bool solve_json_flag = false, solve_total = false;
  CLI::App* solve = app.add_subcommand("solve", "compute answer sets and preferred answer sets");
  solve->add_option("FILE", solve_file, "program file")->required();
  solve->add_flag("--json", solve_json_flag, "machine-readable report");
  solve->add_flag("--total", solve_total, "also show default-negated halves");

  std::string explain_file, explain_as, explain_dot;
  CLI::App* explain =
      app.add_subcommand("explain", "show derivations and blocking for one answer set");
  explain->add_option("FILE", explain_file, "program file")->required();
  explain->add_option("--as", explain_as, "answer set: 1-based index or literal set \"a,b\"")
      ->required();
  explain->add_option("--dot", explain_dot, "write the attack graph to this DOT file");

  std::string check_file, check_corpus, check_dump;
  std::string check_principles = "III,IV,theorem";
  int check_random = 0, check_atoms = 6;
  std::uint64_t check_seed = 0;
  bool check_json_flag = false;
  CLI::App* check = app.add_subcommand(
      "check", "verify selection principles on a program, a corpus, or generated instances");
  check->add_option("FILE", check_file, "single program file");
  check->add_option("--corpus", check_corpus, "directory of .lp programs");
  check->add_option("--random", check_random,
                    "generate this many programs (acyclic preferences, <=3 body literals)");
  check->add_option("--seed", check_seed, "generator seed");
  check->add_option("--atoms", check_atoms, "atom bound for generated programs");
  check->add_flag("--json", check_json_flag, "machine-readable report");
  check->add_option("--principles", check_principles,
                    "comma list out of I,III,IV,theorem (default III,IV,theorem)");
  check->add_option("--dump", check_dump, "directory for generated programs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return run_solve(solve_file, solve_json_flag, solve_total);
    if (*explain) return run_explain(explain_file, explain_as, explain_dot);
    return run_check(check_file, check_corpus, check_random, check_seed, check_atoms,
                     check_json_flag, check_principles, check_dump);
  } catch (const praset::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const praset::duplicate_rule_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const praset::unknown_rule_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const praset::preference_cycle_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const praset::resource_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

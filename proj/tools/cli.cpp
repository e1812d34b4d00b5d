#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qutrit/approx.hpp"
#include "qutrit/errors.hpp"
#include "qutrit/modred.hpp"
#include "qutrit/nform.hpp"
#include "qutrit/synth.hpp"
#include "qutrit/verify.hpp"

namespace qutrit::cli {

nlohmann::ordered_json matrix_to_json(const ScaledUnitary& m) {
  nlohmann::ordered_json j;
  auto num = nlohmann::ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int k = 0; k < 3; ++k) row.push_back(to_decimal_strings(m(i, k)));
    num.push_back(std::move(row));
  }
  j["num"] = std::move(num);
  j["pi_exp"] = m.pi_exp();
  return j;
}

ScaledUnitary matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("pi_exp"))
    throw InvalidInput("matrix JSON needs \"num\" and \"pi_exp\"");
  const auto& num = j["num"];
  if (!num.is_array() || num.size() != 3) throw InvalidInput("\"num\" must be a 3x3 array");
  if (!j["pi_exp"].is_number_integer() || j["pi_exp"].get<long long>() < 0)
    throw InvalidInput("\"pi_exp\" must be a nonnegative integer");
  CycMatrix m;
  for (int i = 0; i < 3; ++i) {
    if (!num[i].is_array() || num[i].size() != 3) throw InvalidInput("\"num\" must be a 3x3 array");
    for (int k = 0; k < 3; ++k) {
      const auto& entry = num[i][k];
      if (!entry.is_array() || entry.size() != CycInt::kDegree)
        throw InvalidInput("each entry must be an array of 6 coefficients");
      std::vector<std::string> digits;
      for (const auto& c : entry) {
        if (c.is_string())
          digits.push_back(c.get<std::string>());
        else if (c.is_number_integer())
          digits.push_back(std::to_string(c.get<long long>()));
        else
          throw InvalidInput("coefficients must be decimal strings or integers");
      }
      m[i][k] = from_decimal_strings(digits);
    }
  }
  const int e = j["pi_exp"].get<int>();
  bool zero = true;
  for (const auto& row : m)
    for (const auto& x : row) zero = zero && x.is_zero();
  if (zero) throw InvalidInput("matrix is zero");
  ScaledUnitary g(std::move(m), e);
  if (!g.is_unitary()) throw InvalidInput("matrix is not unitary over Z[xi, 1/3]");
  return g;
}

ScaledUnitary read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  return matrix_from_json(j);
}

namespace {

std::string letter_name(std::size_t position, int index) {
  if (position % 2 == 0) {
    static const char* names[] = {"1", "H", "HS", "HS^2"};
    return names[index];
  }
  return "D(" + std::to_string(index / 6) + "," + std::to_string(index % 6) + ")";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact synthesis and normal forms for the qutrit Clifford+D gate set"};
  app.name("qutrit");
  app.require_subcommand(1);

  VerifyOptions vopts;
  bool vjson = false;
  auto* verify = app.add_subcommand("verify", "Reproduction suite");
  verify->require_subcommand(1);
  auto* verify_run = verify->add_subcommand("run", "Run the checks; exit 0 iff all pass");
  verify_run->add_option("--filter", vopts.filter, "Check id prefix");
  verify_run->add_flag("--json", vjson, "JSON report");
  verify_run->add_option("--seed", vopts.seed, "Seed for sampled checks")->capture_default_str();
  verify_run->add_option("--samples", vopts.level_gap_samples, "Words in the level-gap check")->capture_default_str();
  verify_run->add_option("--roundtrips", vopts.roundtrip_samples, "Words in the round-trip checks")
      ->capture_default_str();
  auto* verify_list = verify->add_subcommand("list", "Print the check ids");

  std::string synth_in, synth_out;
  auto* synth = app.add_subcommand("synth", "Write a matrix as a gate word");
  synth->add_option("--in", synth_in, "Matrix JSON file")->required();
  synth->add_option("--out", synth_out, "Write the word here instead of stdout");

  std::string eval_word;
  auto* eval = app.add_subcommand("eval", "Evaluate a gate word to canonical matrix JSON");
  eval->add_option("--word", eval_word, "Tokens H, S, T, D(a,b,c;s1,s2,s3)")->required();

  std::string nform_in;
  int count_r = 0;
  auto* nform = app.add_subcommand("nform", "Bass-Serre normal form");
  nform->require_subcommand(0, 1);
  auto* nform_in_opt = nform->add_option("--in", nform_in, "Matrix JSON file");
  auto* nform_count = nform->add_subcommand("count", "Number of elements of Bass-Serre length r");
  nform_count->add_option("--r", count_r, "Length")->required()->check(CLI::NonNegativeNumber);

  std::string group_name;
  auto* gates = app.add_subcommand("gates", "Finite subgroups");
  gates->require_subcommand(1);
  auto* gates_dump = gates->add_subcommand("dump", "Print a subgroup as a JSON array of matrices");
  gates_dump->add_option("--group", group_name, "C0, C1, C2, C3 or CD")
      ->required()
      ->check(CLI::IsMember({"C0", "C1", "C2", "C3", "CD"}));

  std::string gate_name;
  int prime = 0;
  auto* modred = app.add_subcommand("modred", "Reduce a gate modulo a prime above 19");
  modred->add_option("--gate", gate_name, "H, S or T (S is reduced as S/xi)")
      ->required()
      ->check(CLI::IsMember({"H", "S", "T"}));
  modred->add_option("--prime", prime, "0, 1 or 2 (xi -> 4, 16, 9)")->required()->check(CLI::Range(0, 2));

  CoverOptions copts;
  std::string probe_out;
  auto* approx = app.add_subcommand("approx", "Covering probe");
  approx->require_subcommand(1);
  auto* probe = approx->add_subcommand("probe", "Nearest ball elements to Haar-random targets");
  probe->add_option("--targets", copts.n_targets, "Number of targets")->capture_default_str()->check(CLI::NonNegativeNumber);
  probe->add_option("--rmax", copts.r_max, "Largest Bass-Serre radius")->capture_default_str()->check(CLI::NonNegativeNumber);
  probe->add_option("--seed", copts.seed, "Seed")->capture_default_str();
  probe->add_option("--out", probe_out, "CSV path")->required();
  probe->add_flag("--joint", copts.joint, "Add the joint PU(3)^3 distance column");
  probe->add_flag("--allow-large", copts.allow_large, "Permit rmax > 3 (streamed scan)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qutrit: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (verify_run->parsed()) {
      const auto results = run_all(vopts);
      out << (vjson ? format_json(results, vopts) : format_text(results));
      return all_passed(results) ? kExitOk : kExitData;
    }
    if (verify_list->parsed()) {
      for (const auto& id : check_ids()) out << id << '\n';
      return kExitOk;
    }
    if (synth->parsed()) {
      const Synthesizer s;
      const std::string word = to_string(s.synthesize(canonicalize(read_matrix_file(synth_in))));
      if (synth_out.empty()) {
        out << word << '\n';
      } else {
        std::ofstream f(synth_out);
        if (!(f << word << '\n')) throw InvalidInput("cannot write " + synth_out);
      }
      return kExitOk;
    }
    if (eval->parsed()) {
      out << matrix_to_json(canonicalize(evaluate(parse_word(eval_word))).rep()).dump() << '\n';
      return kExitOk;
    }
    if (nform_count->parsed()) {
      out << count_words(count_r) << '\n';
      return kExitOk;
    }
    if (nform->parsed()) {
      if (nform_in_opt->count() == 0) {
        err << "qutrit nform: --in is required unless the count subcommand is used\n";
        return kExitUsage;
      }
      const Synthesizer s;
      const NormalFormEngine engine(s);
      const NormalForm nf = engine.normal_form(canonicalize(read_matrix_file(nform_in)));
      nlohmann::ordered_json j;
      j["c0"] = matrix_to_json(nf.c0.rep());
      auto letters = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < nf.letters.size(); ++i) letters.push_back(letter_name(i, nf.letters[i]));
      j["letters"] = std::move(letters);
      j["bs_length"] = nf.length();
      j["word"] = to_string(engine.to_word(nf));
      out << j.dump(2) << '\n';
      return kExitOk;
    }
    if (gates_dump->parsed()) {
      const auto& group = Catalog::standard().group(parse_group_label(group_name));
      auto arr = nlohmann::ordered_json::array();
      for (const auto& e : group.elements) arr.push_back(matrix_to_json(e.rep()));
      out << arr.dump() << '\n';
      return kExitOk;
    }
    if (modred->parsed()) {
      ScaledUnitary g = Catalog::standard().hadamard();
      if (gate_name == "S") g = su_normalize(gate_matrix(GateToken::s()));
      if (gate_name == "T") g = su_normalize(gate_matrix(GateToken::t()));
      out << reduce(g, prime).to_string();
      return kExitOk;
    }
    if (probe->parsed()) {
      const Synthesizer s;
      const NormalFormEngine engine(s);
      const CoverReport report = covering_probe(engine, copts);
      std::ofstream f(probe_out, std::ios::binary);
      write_csv(report, f);
      if (!f) throw InvalidInput("cannot write " + probe_out);
      out << summary(report);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "qutrit: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "qutrit: internal error: " << e.what() << '\n';
    return kExitData;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace qutrit::cli

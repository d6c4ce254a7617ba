#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>

#include "posadd/fooling.hpp"
#include "posadd/io.hpp"
#include "posadd/positional.hpp"
#include "posadd/sum.hpp"
#include "posadd/witnesses.hpp"

namespace posadd {

namespace {

void write_automaton(const std::string& path, const Nfa& nfa, std::ostream& out) {
  if (path.empty())
    print_automaton(out, nfa);
  else
    save_automaton(path, nfa);
}

void warn_if_not_canonical(const Nfa& nfa, const std::string& side, bool msd,
                           std::ostream& err) {
  Nfa lsd = msd ? reverse(nfa) : nfa;
  if (auto bad = find_word_ending_in_zero(lsd)) {
    Word shown = *bad;
    if (msd) std::reverse(shown.begin(), shown.end());
    err << "warning: " << side << " operand language is not canonical (accepts "
        << format_word(shown) << ")\n";
  }
}

/// Default construction rule: the merged form when both operands have one
/// state, unless disabled.
SumNfa build_default(const Nfa& a, const Nfa& b, bool one_state_opt) {
  if (one_state_opt && a.state_count() == 1 && b.state_count() == 1)
    return build_sum_one_state(a, b);
  return build_sum_nfa(a, b);
}

struct SumCheck {
  std::size_t construction_count = 0;
  OracleResult oracle;
  std::optional<Word> mismatch;
  bool mismatch_in_construction = false;

  bool ok() const { return !mismatch.has_value(); }
};

SumCheck check_sum_language(const Nfa& built, const Nfa& a, const Nfa& b, int max_len) {
  SumCheck result;
  std::set<Word> constructed = enumerate_accepted(built, max_len);
  result.construction_count = constructed.size();
  result.oracle = sum_language_oracle(a, b, max_len);
  const std::set<Word>& expected = result.oracle.words;
  auto ic = constructed.begin();
  auto ie = expected.begin();
  while (ic != constructed.end() || ie != expected.end()) {
    if (ie == expected.end() || (ic != constructed.end() && *ic < *ie)) {
      result.mismatch = *ic;
      result.mismatch_in_construction = true;
      break;
    }
    if (ic == constructed.end() || *ie < *ic) {
      result.mismatch = *ie;
      result.mismatch_in_construction = false;
      break;
    }
    ++ic;
    ++ie;
  }
  return result;
}

void print_check(std::ostream& out, const SumCheck& check) {
  out << "construction words: " << check.construction_count << "\n";
  out << "oracle words: " << check.oracle.words.size() << " (operands "
      << check.oracle.operand_counts.first << " x " << check.oracle.operand_counts.second
      << ")\n";
  if (check.ok())
    out << "OK\n";
  else
    out << "MISMATCH " << format_word(*check.mismatch) << " in "
        << (check.mismatch_in_construction ? "construction" : "oracle") << " only\n";
}

/// One verification cell of the table: the witness instance for (m, n), its
/// construction, and the matching fooling set. Cells with n = 1 < m use the
/// mirrored instance (addition commutes, and the fooling family needs its
/// second parameter to be at least 2).
struct TableInstance {
  Nfa a;
  Nfa b;
  SumNfa built;
  std::vector<FoolingPair> pairs;
};

TableInstance make_table_instance(int k, int m, int n) {
  if (m == 1 && n == 1) {
    Nfa a = one_state_witness_a(k);
    Nfa b = one_state_witness_b(k);
    SumNfa built = build_sum_one_state(a, b);
    return {std::move(a), std::move(b), std::move(built), gen_fooling_one_state(k)};
  }
  int am = n >= 2 ? m : 1;
  int bn = n >= 2 ? n : m;
  Nfa a = witness_a(k, am);
  Nfa b = witness_b(k, bn);
  SumNfa built = build_sum_nfa(a, b);
  return {std::move(a), std::move(b), std::move(built), gen_fooling_addition(k, am, bn)};
}

int cmd_witness(const std::string& family, int k, std::optional<int> m,
                std::optional<int> n, const std::string& out_path, std::ostream& out) {
  Nfa nfa = [&] {
    if (family == "a") {
      if (!m) throw InputError("witness family a needs --m");
      return witness_a(k, *m);
    }
    if (family == "b") {
      if (!n) throw InputError("witness family b needs --n");
      return witness_b(k, *n);
    }
    if (family == "unary") {
      if (!m) throw InputError("witness family unary needs --m");
      return unary_witness(k, *m);
    }
    if (family == "one-a") return one_state_witness_a(k);
    if (family == "one-b") return one_state_witness_b(k);
    throw InputError("unknown witness family '" + family + "'");
  }();
  write_automaton(out_path, nfa, out);
  return 0;
}

int cmd_sum(const std::string& left_path, const std::string& right_path,
            const std::string& out_path, bool msd, bool no_opt, bool trim_result,
            std::ostream& out, std::ostream& err) {
  Nfa left = load_automaton(left_path);
  Nfa right = load_automaton(right_path);
  warn_if_not_canonical(left, "left", msd, err);
  warn_if_not_canonical(right, "right", msd, err);

  Nfa a = msd ? reverse(left) : left;
  Nfa b = msd ? reverse(right) : right;
  SumNfa built = build_default(a, b, !no_opt);
  SumCensus census = built.census();
  err << "census: pair=" << census.pair << " only_a=" << census.only_a
      << " only_b=" << census.only_b << " merged=" << census.merged_carry
      << " accept=" << census.accept << "\n";

  Nfa result = built.nfa;
  if (msd) result = reverse(result);
  if (trim_result) result = trim(result);
  err << "states: " << result.state_count() << "\n";
  write_automaton(out_path, result, out);
  return 0;
}

int cmd_table(int k, int max_m, int max_n, bool verify, int max_len, std::ostream& out) {
  bool all_ok = true;
  out << (verify ? "# m n states check fool\n" : "# m n states\n");
  for (int m = 1; m <= max_m; ++m) {
    for (int n = 1; n <= max_n; ++n) {
      out << m << " " << n << " " << bound_states(m, n);
      if (verify) {
        TableInstance inst = make_table_instance(k, m, n);
        bool check_ok = check_sum_language(inst.built.nfa, inst.a, inst.b, max_len).ok();
        FoolingVerdict verdict = verify_fooling(inst.pairs, inst.built.nfa);
        bool fool_ok = verdict.certified() &&
                       verdict.bound == inst.built.nfa.state_count() &&
                       verdict.bound == bound_states(m, n);
        out << " " << (check_ok ? "PASS" : "FAIL") << " " << (fool_ok ? "PASS" : "FAIL");
        all_ok = all_ok && check_ok && fool_ok;
      }
      out << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Automata for positional addition of regular number sets"};
  app.name("posadd");
  app.require_subcommand(1);

  // witness
  auto* witness = app.add_subcommand("witness", "Generate a witness automaton");
  std::string family, witness_out;
  int witness_k = 0;
  std::optional<int> opt_m, opt_n;
  witness->add_option("--family", family, "a|b|unary|one-a|one-b")->required();
  witness->add_option("--k", witness_k, "base")->required();
  witness->add_option("--m", opt_m, "size parameter for families a and unary");
  witness->add_option("--n", opt_n, "size parameter for family b");
  witness->add_option("-o,--output", witness_out, "output file")->required();

  // sum
  auto* sum = app.add_subcommand("sum", "Build the sum automaton of two operands");
  std::string sum_left, sum_right, sum_out;
  bool sum_msd = false, sum_no_opt = false, sum_trim = false;
  sum->add_option("left", sum_left, "left operand file")->required();
  sum->add_option("right", sum_right, "right operand file")->required();
  sum->add_option("-o,--output", sum_out, "output file (default: stdout)");
  sum->add_flag("--msd", sum_msd, "operands and result in MSD-first notation");
  sum->add_flag("--no-one-state-opt", sum_no_opt,
                "keep the general construction for one-state operands");
  sum->add_flag("--trim", sum_trim, "drop useless states from the result");

  // member
  auto* member = app.add_subcommand("member", "Test whether a word is accepted");
  std::string member_file, member_word;
  member->add_option("file", member_file, "automaton file")->required();
  member->add_option("word", member_word, "word (`eps` or comma-separated digits)")
      ->required();

  // check-sum
  auto* check = app.add_subcommand(
      "check-sum", "Compare the sum construction against the brute-force oracle");
  std::string check_left, check_right;
  int check_max_len = 6;
  check->add_option("left", check_left, "left operand file")->required();
  check->add_option("right", check_right, "right operand file")->required();
  check->add_option("--max-len", check_max_len, "word length cutoff (default 6)");

  // fool-gen
  auto* fool_gen = app.add_subcommand("fool-gen", "Generate a fooling set");
  int fg_k = 0;
  std::optional<int> fg_m, fg_n, fg_unary;
  bool fg_one_state = false;
  std::string fg_out;
  fool_gen->add_option("--k", fg_k, "base")->required();
  fool_gen->add_option("--m", fg_m, "operand A state count");
  fool_gen->add_option("--n", fg_n, "operand B state count");
  fool_gen->add_flag("--one-state", fg_one_state, "the 6-pair one-state set");
  fool_gen->add_option("--unary", fg_unary, "the n-pair unary set");
  fool_gen->add_option("-o,--output", fg_out, "output file")->required();

  // fool-verify
  auto* fool_verify = app.add_subcommand("fool-verify", "Verify a fooling set");
  std::string fv_lang, fv_pairs;
  fool_verify->add_option("language", fv_lang, "automaton file")->required();
  fool_verify->add_option("pairs", fv_pairs, "pairs file")->required();

  // table
  auto* table = app.add_subcommand("table", "Print worst-case sum NFA sizes");
  int table_k = 0, table_max_m = 0, table_max_n = 0, table_max_len = 6;
  bool table_verify = false;
  table->add_option("--k", table_k, "base")->required();
  table->add_option("--max-m", table_max_m, "largest m")->required();
  table->add_option("--max-n", table_max_n, "largest n")->required();
  table->add_flag("--verify", table_verify, "build and verify every instance");
  table->add_option("--max-len", table_max_len, "verification length cutoff (default 6)");

  // dot
  auto* dot = app.add_subcommand("dot", "Export an automaton as a Graphviz digraph");
  std::string dot_file;
  dot->add_option("file", dot_file, "automaton file")->required();

  // reverse
  auto* rev = app.add_subcommand("reverse", "Reverse the language of an automaton");
  std::string rev_file, rev_out;
  rev->add_option("file", rev_file, "automaton file")->required();
  rev->add_option("-o,--output", rev_out, "output file")->required();

  // restrict
  auto* restrict_cmd = app.add_subcommand("restrict", "Drop transitions on other digits");
  std::string restrict_file, restrict_out;
  std::vector<int> restrict_digits;
  restrict_cmd->add_option("file", restrict_file, "automaton file")->required();
  restrict_cmd->add_option("--digits", restrict_digits, "digits to keep")
      ->required()
      ->delimiter(',');
  restrict_cmd->add_option("-o,--output", restrict_out, "output file")->required();

  // equiv
  auto* equiv = app.add_subcommand("equiv", "Test two automata for language equality");
  std::string equiv_left, equiv_right;
  equiv->add_option("left", equiv_left, "automaton file")->required();
  equiv->add_option("right", equiv_right, "automaton file")->required();

  std::vector<const char*> argv;
  argv.push_back("posadd");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (*witness)
      return cmd_witness(family, witness_k, opt_m, opt_n, witness_out, out);

    if (*sum)
      return cmd_sum(sum_left, sum_right, sum_out, sum_msd, sum_no_opt, sum_trim, out, err);

    if (*member) {
      bool in = accepts(load_automaton(member_file), parse_word(member_word));
      out << (in ? "true" : "false") << "\n";
      return in ? 0 : 1;
    }

    if (*check) {
      Nfa a = load_automaton(check_left);
      Nfa b = load_automaton(check_right);
      SumNfa built = build_default(a, b, true);
      SumCheck result = check_sum_language(built.nfa, a, b, check_max_len);
      print_check(out, result);
      return result.ok() ? 0 : 1;
    }

    if (*fool_gen) {
      int modes = (fg_m || fg_n ? 1 : 0) + (fg_one_state ? 1 : 0) + (fg_unary ? 1 : 0);
      if (modes != 1)
        throw InputError("fool-gen needs exactly one of --m/--n, --one-state, --unary");
      std::vector<FoolingPair> pairs;
      if (fg_one_state) {
        pairs = gen_fooling_one_state(fg_k);
      } else if (fg_unary) {
        if (fg_k < 2) throw InputError("unary fooling set requires base k >= 2");
        pairs = gen_fooling_unary(*fg_unary);
      } else {
        if (!fg_m || !fg_n) throw InputError("fool-gen needs both --m and --n");
        pairs = gen_fooling_addition(fg_k, *fg_m, *fg_n);
      }
      std::ofstream file(fg_out);
      if (!file) throw InputError("cannot write pairs file: " + fg_out);
      print_pairs(file, pairs);
      return 0;
    }

    if (*fool_verify) {
      FoolingVerdict verdict =
          verify_fooling(load_pairs(fv_pairs), load_automaton(fv_lang));
      out << verdict.describe() << "\n";
      return verdict.certified() ? 0 : 1;
    }

    if (*table)
      return cmd_table(table_k, table_max_m, table_max_n, table_verify, table_max_len, out);

    if (*dot) {
      print_dot(out, load_automaton(dot_file));
      return 0;
    }

    if (*rev) {
      write_automaton(rev_out, reverse(load_automaton(rev_file)), out);
      return 0;
    }

    if (*restrict_cmd) {
      std::set<Digit> digits(restrict_digits.begin(), restrict_digits.end());
      write_automaton(restrict_out, restrict_alphabet(load_automaton(restrict_file), digits),
                      out);
      return 0;
    }

    if (*equiv) {
      bool same = equivalent(load_automaton(equiv_left), load_automaton(equiv_right));
      out << (same ? "true" : "false") << "\n";
      return same ? 0 : 1;
    }

    err << "error: no subcommand given\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    // prints help to `out` for --help, the error message to `err` otherwise
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace posadd

#include "posadd/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace posadd {

namespace {

// The text format caps the base; the library itself has no such limit.
constexpr int kMaxSerializedBase = 36;

void check_serializable_base(int k) {
  if (k > kMaxSerializedBase)
    throw InputError("base " + std::to_string(k) + " exceeds the serialization cap of " +
                     std::to_string(kMaxSerializedBase));
}

int parse_int(const std::string& token, const std::string& context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw InputError(context + ": expected an integer, got '" + token + "'");
  return value;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

Nfa parse_automaton(std::istream& in) {
  std::optional<int> k, states, initial;
  std::optional<std::vector<int>> accepting;
  std::vector<Transition> trans;
  std::map<int, std::string> labels;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string where = "line " + std::to_string(line_no);
    std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0][0] == '#') {
      // `# label <state> <text>` comments carry display labels.
      if (tokens.size() >= 4 && tokens[0] == "#" && tokens[1] == "label") {
        int state = 0;
        auto [ptr, ec] = std::from_chars(tokens[2].data(),
                                         tokens[2].data() + tokens[2].size(), state);
        if (ec == std::errc{} && ptr == tokens[2].data() + tokens[2].size()) {
          std::string text = tokens[3];
          for (std::size_t i = 4; i < tokens.size(); ++i) text += " " + tokens[i];
          labels[state] = text;
        }
      }
      continue;
    }
    const std::string& keyword = tokens[0];
    auto expect_arity = [&](std::size_t want) {
      if (tokens.size() != want)
        throw InputError(where + ": '" + keyword + "' takes " + std::to_string(want - 1) +
                         " value(s)");
    };
    if (keyword == "k") {
      expect_arity(2);
      if (k) throw InputError(where + ": duplicate 'k' line");
      k = parse_int(tokens[1], where);
    } else if (keyword == "states") {
      expect_arity(2);
      if (states) throw InputError(where + ": duplicate 'states' line");
      states = parse_int(tokens[1], where);
    } else if (keyword == "initial") {
      expect_arity(2);
      if (initial) throw InputError(where + ": duplicate 'initial' line");
      initial = parse_int(tokens[1], where);
    } else if (keyword == "accepting") {
      if (accepting) throw InputError(where + ": duplicate 'accepting' line");
      std::vector<int> acc;
      for (std::size_t i = 1; i < tokens.size(); ++i) acc.push_back(parse_int(tokens[i], where));
      accepting = std::move(acc);
    } else if (keyword == "trans") {
      expect_arity(4);
      trans.push_back({parse_int(tokens[1], where), parse_int(tokens[2], where),
                       parse_int(tokens[3], where)});
    } else {
      throw InputError(where + ": unknown keyword '" + keyword + "'");
    }
  }
  if (!k) throw InputError("automaton file is missing the 'k' line");
  check_serializable_base(*k);
  if (!states) throw InputError("automaton file is missing the 'states' line");
  if (!initial) throw InputError("automaton file is missing the 'initial' line");
  if (!accepting) throw InputError("automaton file is missing the 'accepting' line");

  std::vector<std::string> label_list;
  if (!labels.empty()) {
    label_list.assign(static_cast<std::size_t>(std::max(*states, 0)), "");
    for (const auto& [state, text] : labels) {
      if (state < 0 || state >= *states)
        throw InputError("label state " + std::to_string(state) + " out of range");
      label_list[state] = text;
    }
  }
  return Nfa(*k, *states, *initial, std::move(*accepting), std::move(trans),
             std::move(label_list));
}

Nfa load_automaton(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open automaton file: " + path);
  try {
    return parse_automaton(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void print_automaton(std::ostream& out, const Nfa& nfa) {
  check_serializable_base(nfa.k());
  out << "k " << nfa.k() << "\n";
  out << "states " << nfa.state_count() << "\n";
  out << "initial " << nfa.initial() << "\n";
  out << "accepting";
  for (int f : nfa.accepting()) out << " " << f;
  out << "\n";
  for (std::size_t s = 0; s < nfa.labels().size(); ++s)
    if (!nfa.labels()[s].empty()) out << "# label " << s << " " << nfa.labels()[s] << "\n";
  for (const Transition& t : nfa.transitions())
    out << "trans " << t.src << " " << t.digit << " " << t.dst << "\n";
}

void save_automaton(const std::string& path, const Nfa& nfa) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write automaton file: " + path);
  print_automaton(out, nfa);
}

std::string format_word(const Word& w) {
  if (w.empty()) return "eps";
  std::string text;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) text += ',';
    text += std::to_string(w[i]);
  }
  return text;
}

Word parse_word(const std::string& text) {
  if (text == "eps") return {};
  if (text.empty()) throw InputError("empty word text; use 'eps' for the empty word");
  Word w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    w.push_back(parse_int(part, "word '" + text + "'"));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return w;
}

std::vector<FoolingPair> parse_pairs(std::istream& in) {
  std::vector<FoolingPair> pairs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
    std::size_t sep = trimmed.find(';');
    if (sep == std::string::npos)
      throw InputError("line " + std::to_string(line_no) +
                       ": expected '<word>;<word>', got '" + trimmed + "'");
    pairs.push_back({parse_word(trimmed.substr(0, sep)), parse_word(trimmed.substr(sep + 1))});
  }
  return pairs;
}

std::vector<FoolingPair> load_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open pairs file: " + path);
  try {
    return parse_pairs(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void print_pairs(std::ostream& out, const std::vector<FoolingPair>& pairs) {
  for (const FoolingPair& p : pairs)
    out << format_word(p.x) << ";" << format_word(p.y) << "\n";
}

namespace {

enum class LabelGroup { Pair, OnlyA, OnlyB, Accept, Merged, Plain };

LabelGroup classify_label(const std::string& label) {
  if (label == "q_acc") return LabelGroup::Accept;
  if (label == "q_01") return LabelGroup::Merged;
  if (label.starts_with("(A,")) return LabelGroup::OnlyA;
  if (label.starts_with("(B,")) return LabelGroup::OnlyB;
  if (label.starts_with("(")) return LabelGroup::Pair;
  return LabelGroup::Plain;
}

const char* group_color(LabelGroup g) {
  switch (g) {
    case LabelGroup::Pair: return "#cfe2ff";
    case LabelGroup::OnlyA: return "#d1e7c4";
    case LabelGroup::OnlyB: return "#ffe9a8";
    case LabelGroup::Accept: return "#f4c7c3";
    case LabelGroup::Merged: return "#e2d4f0";
    case LabelGroup::Plain: return "";
  }
  return "";
}

}  // namespace

void print_dot(std::ostream& out, const Nfa& nfa) {
  out << "digraph automaton {\n";
  out << "  rankdir=LR;\n";
  out << "  __start [shape=none, label=\"\"];\n";
  const bool labelled = !nfa.labels().empty();
  for (int s = 0; s < nfa.state_count(); ++s) {
    std::string display = labelled && !nfa.labels()[s].empty() ? nfa.labels()[s]
                                                               : std::to_string(s);
    out << "  q" << s << " [label=\"" << display << "\", shape="
        << (nfa.is_accepting(s) ? "doublecircle" : "circle");
    LabelGroup group = labelled ? classify_label(display) : LabelGroup::Plain;
    std::string style = "filled";
    // carry-1 states are drawn dashed
    if (display.ends_with(",1)") || group == LabelGroup::Merged) style += ",dashed";
    if (group != LabelGroup::Plain)
      out << ", style=\"" << style << "\", fillcolor=\"" << group_color(group) << "\"";
    out << "];\n";
  }
  out << "  __start -> q" << nfa.initial() << ";\n";
  std::map<std::pair<int, int>, std::string> edges;
  for (const Transition& t : nfa.transitions()) {
    std::string& label = edges[{t.src, t.dst}];
    if (!label.empty()) label += ",";
    label += std::to_string(t.digit);
  }
  for (const auto& [edge, label] : edges)
    out << "  q" << edge.first << " -> q" << edge.second << " [label=\"" << label
        << "\"];\n";
  out << "}\n";
}

}  // namespace posadd

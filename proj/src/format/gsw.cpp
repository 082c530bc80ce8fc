#include "cdgs/gsw.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace cdgs {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Splits a line on whitespace and drops the comment. On rule lines a lone
// `;` followed by `succ` or `fail` separates fields instead.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (is_space(line[i])) {
      ++i;
      continue;
    }
    if (line[i] == ';') {
      std::size_t j = i + 1;
      while (j < line.size() && is_space(line[j])) ++j;
      std::size_t e = j;
      while (e < line.size() && !is_space(line[e]) && line[e] != ';') ++e;
      const auto word = line.substr(j, e - j);
      const bool separator = !out.empty() && out.front().text == "rule" && (word == "succ" || word == "fail");
      if (!separator) break;
      out.push_back({";", i + 1});
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i]) && line[i] != ';') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

enum class Kind { cdgs, hcdgs, programmed };

class Parser {
 public:
  AnyGrammar run(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no_;
      auto tokens = tokenize(line);
      if (!tokens.empty()) handle(tokens, line);
      if (end == text.size()) break;
      start = end + 1;
    }
    if (!kind_) fail(line_no_, 1, "missing 'grammar' header");
    if (in_component_) fail(line_no_, 1, "unterminated component block");
    if (axiom_.empty()) fail(line_no_, 1, "missing 'axiom' line");
    return finish();
  }

 private:
  [[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& msg) const {
    throw ParseError(line, column, msg);
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const { fail(line_no_, t.column, msg); }

  void handle(const std::vector<Token>& t, std::string_view line) {
    const std::string& head = t[0].text;
    if (!kind_) {
      if (head != "grammar") fail(t[0], "expected 'grammar <name> <kind>' header");
      if (t.size() != 3) fail(t[0], "header takes a name and a kind");
      name_ = t[1].text;
      if (t[2].text == "cdgs")
        kind_ = Kind::cdgs;
      else if (t[2].text == "hcdgs")
        kind_ = Kind::hcdgs;
      else if (t[2].text == "programmed")
        kind_ = Kind::programmed;
      else
        fail(t[2], "unknown grammar kind '" + t[2].text + "' (cdgs, hcdgs or programmed)");
      return;
    }
    if (in_component_) {
      const bool is_rule = t.size() > 1 && t[1].text == "->";
      if (is_rule) {
        rules_.push_back(rule_of(t, 0));
      } else if (head == "end") {
        arity(t, 1);
        if (*kind_ == Kind::hcdgs && !component_mode_) fail(t[0], "hcdgs component without a mode line");
        components_.push_back({std::move(rules_), component_mode_.value_or(Mode::star())});
        rules_.clear();
        component_mode_.reset();
        in_component_ = false;
      } else if (head == "mode") {
        if (*kind_ != Kind::hcdgs) fail(t[0], "per-component modes are only allowed in hcdgs files");
        if (component_mode_) fail(t[0], "duplicate mode line");
        component_mode_ = mode_of(t, line);
      } else {
        fail(t[0], "expected a rule 'LHS -> RHS', a mode line or 'end'");
      }
      return;
    }
    if (head == "grammar") fail(t[0], "duplicate header");
    if (head == "lambda-free") {
      arity(t, 2);
      if (t[1].text != "yes" && t[1].text != "no") fail(t[1], "expected yes or no");
      lambda_free_ = t[1].text == "yes";
    } else if (head == "nonterminals" || head == "terminals") {
      auto& seen = head == "nonterminals" ? seen_nonterminals_ : seen_terminals_;
      if (seen) fail(t[0], "duplicate '" + head + "' line");
      seen = true;
      auto& list = head == "nonterminals" ? nonterminals_ : terminals_;
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (t[i].text == "#" || t[i].text == "->") fail(t[i], "reserved token '" + t[i].text + "' used as a symbol");
        list.push_back(t[i].text);
      }
    } else if (head == "axiom") {
      arity(t, 2);
      if (!axiom_.empty()) fail(t[0], "duplicate 'axiom' line");
      axiom_ = t[1].text;
    } else if (head == "mode") {
      if (*kind_ != Kind::cdgs) fail(t[0], "a uniform mode line is only allowed in cdgs files");
      if (mode_) fail(t[0], "duplicate mode line");
      mode_ = mode_of(t, line);
    } else if (head == "component") {
      if (*kind_ == Kind::programmed) fail(t[0], "programmed grammars have labeled rules, not components");
      arity(t, 1);
      in_component_ = true;
    } else if (head == "rule") {
      if (*kind_ != Kind::programmed) fail(t[0], "labeled rules are only allowed in programmed files");
      labeled_rule(t);
    } else if (head == "nsf-counts") {
      if (*kind_ != Kind::programmed) fail(t[0], "nsf-counts are only allowed in programmed files");
      arity(t, 1);
      counts_.emplace();
    } else if (head == "counts") {
      if (!counts_) fail(t[0], "'counts' before 'nsf-counts'");
      if (t.size() < 2) fail(t[0], "counts line needs a label");
      auto& entry = (*counts_)[t[1].text];
      for (std::size_t i = 2; i < t.size(); ++i) {
        const auto eq = t[i].text.find('=');
        if (eq == std::string::npos || eq == 0) fail(t[i], "expected SYMBOL=COUNT");
        const std::string num = t[i].text.substr(eq + 1);
        if (num.empty() || num.size() > 9 || num.find_first_not_of("0123456789") != std::string::npos)
          fail(t[i], "count must be a non-negative integer");
        entry[t[i].text.substr(0, eq)] = std::stoi(num);
      }
    } else if (head == "end") {
      fail(t[0], "'end' outside a component block");
    } else {
      fail(t[0], "unexpected '" + head + "'");
    }
  }

  void arity(const std::vector<Token>& t, std::size_t n) const {
    if (t.size() != n) fail(t[n < t.size() ? n : 0], "'" + t[0].text + "' takes " + std::to_string(n - 1) + " argument(s)");
  }

  Mode mode_of(const std::vector<Token>& t, std::string_view line) const {
    if (t.size() < 2) fail(t[0], "mode line needs a mode");
    std::string_view rest = line.substr(t[1].column - 1);
    if (const auto semi = rest.find(';'); semi != std::string_view::npos) rest = rest.substr(0, semi);
    try {
      return parse_mode(rest);
    } catch (const std::invalid_argument& e) {
      fail(t[1], e.what());
    }
  }

  Symbol symbol_of(const Token& t) const {
    if (nonterminal_set_.contains(t.text)) return nt(t.text);
    if (terminal_set_.contains(t.text)) return term(t.text);
    fail(t, "undeclared symbol '" + t.text + "'");
  }

  void alphabets_ready(const Token& at) {
    if (!seen_nonterminals_ || !seen_terminals_) fail(at, "rules must follow the 'nonterminals' and 'terminals' lines");
    if (!sets_ready_) {
      sets_ready_ = true;
      nonterminal_set_.insert(nonterminals_.begin(), nonterminals_.end());
      terminal_set_.insert(terminals_.begin(), terminals_.end());
    }
  }

  // LHS -> x y ... (or #) starting at t[from]; stops at a `;` token
  Rule rule_of(const std::vector<Token>& t, std::size_t from, std::size_t* stop = nullptr) {
    alphabets_ready(t[from]);
    if (t.size() < from + 3 || t[from + 1].text != "->") fail(t[from], "expected 'LHS -> RHS'");
    Rule r{t[from].text, {}};
    if (!nonterminal_set_.contains(r.lhs)) fail(t[from], "left-hand side '" + r.lhs + "' is not a declared nonterminal");
    std::size_t i = from + 2;
    const std::size_t body = i;
    for (; i < t.size() && t[i].text != ";"; ++i) {
      if (t[i].text == "#") {
        if (i != body || (i + 1 < t.size() && t[i + 1].text != ";")) fail(t[i], "'#' must be the whole right-hand side");
        continue;
      }
      if (t[i].text == "->") fail(t[i], "unexpected '->'");
      r.rhs.push_back(symbol_of(t[i]));
    }
    if (i == body) fail(t[from + 1], "empty right-hand side (write # for the empty word)");
    if (stop)
      *stop = i;
    else if (i != t.size())
      fail(t[i], "unexpected ';'");
    return r;
  }

  // rule LABEL : LHS -> RHS ; succ L... ; fail L...
  void labeled_rule(const std::vector<Token>& t) {
    if (t.size() < 6 || t[2].text != ":") fail(t[0], "expected 'rule LABEL : LHS -> RHS ; succ ... ; fail ...'");
    ProgrammedRule pr;
    pr.label = t[1].text;
    std::size_t i = 0;
    pr.rule = rule_of(t, 3, &i);
    bool succ = false, fail_field = false;
    while (i < t.size()) {
      ++i;  // the separator
      if (i >= t.size()) fail(t[i - 1], "dangling ';'");
      const Token& field = t[i++];
      auto& into = field.text == "succ" ? pr.success : pr.failure;
      bool& seen = field.text == "succ" ? succ : fail_field;
      if (seen) fail(field, "duplicate '" + field.text + "' field");
      seen = true;
      for (; i < t.size() && t[i].text != ";"; ++i) into.push_back(t[i].text);
    }
    programmed_.push_back(std::move(pr));
  }

  AnyGrammar finish() {
    AnyGrammar out;
    switch (*kind_) {
      case Kind::cdgs: {
        CdSystem g;
        g.name = name_;
        g.nonterminals = nonterminals_;
        g.terminals = terminals_;
        g.axiom = axiom_;
        for (auto& c : components_) g.components.push_back(std::move(c.rules));
        g.lambda_free = lambda_free_;
        g.mode = mode_;
        require_valid(validate(g), "grammar file");
        out = std::move(g);
        break;
      }
      case Kind::hcdgs: {
        HcdSystem g;
        g.name = name_;
        g.nonterminals = nonterminals_;
        g.terminals = terminals_;
        g.axiom = axiom_;
        g.components = std::move(components_);
        g.lambda_free = lambda_free_;
        require_valid(validate(g), "grammar file");
        out = std::move(g);
        break;
      }
      case Kind::programmed: {
        ProgrammedGrammar g;
        g.name = name_;
        g.nonterminals = nonterminals_;
        g.terminals = terminals_;
        g.axiom = axiom_;
        g.rules = std::move(programmed_);
        g.lambda_free = lambda_free_;
        g.nsf_counts = std::move(counts_);
        require_valid(validate(g), "grammar file");
        out = std::move(g);
        break;
      }
    }
    return out;
  }

  std::size_t line_no_ = 0;
  std::optional<Kind> kind_;
  std::string name_;
  bool lambda_free_ = true;
  bool seen_nonterminals_ = false, seen_terminals_ = false;
  std::vector<std::string> nonterminals_, terminals_;
  std::set<std::string> nonterminal_set_, terminal_set_;
  bool sets_ready_ = false;
  std::string axiom_;
  std::optional<Mode> mode_;
  bool in_component_ = false;
  RuleSet rules_;
  std::optional<Mode> component_mode_;
  std::vector<HcdComponent> components_;
  std::vector<ProgrammedRule> programmed_;
  std::optional<NsfCounts> counts_;
};

void write_list(std::ostream& out, const char* head, const std::vector<std::string>& items) {
  out << head;
  for (const auto& s : items) out << ' ' << s;
  out << '\n';
}

void write_rule(std::ostream& out, const Rule& r) {
  out << r.lhs << " ->";
  if (r.rhs.empty()) out << " #";
  for (const auto& s : r.rhs) out << ' ' << s.name;
}

template <class G>
void write_head(std::ostream& out, const G& g, const char* kind) {
  out << "grammar " << g.name << ' ' << kind << '\n';
  out << "lambda-free " << (g.lambda_free ? "yes" : "no") << '\n';
  write_list(out, "nonterminals", g.nonterminals);
  write_list(out, "terminals", g.terminals);
  out << "axiom " << g.axiom << '\n';
}

}  // namespace

AnyGrammar parse_grammar(std::string_view text) { return Parser{}.run(text); }

std::string serialize(const AnyGrammar& any) {
  std::ostringstream out;
  if (const auto* g = std::get_if<CdSystem>(&any)) {
    write_head(out, *g, "cdgs");
    if (g->mode) out << "mode " << g->mode->to_string() << '\n';
    for (const auto& c : g->components) {
      out << "component\n";
      for (const auto& r : c) {
        out << "  ";
        write_rule(out, r);
        out << '\n';
      }
      out << "end\n";
    }
  } else if (const auto* h = std::get_if<HcdSystem>(&any)) {
    write_head(out, *h, "hcdgs");
    for (const auto& c : h->components) {
      out << "component\n  mode " << c.mode.to_string() << '\n';
      for (const auto& r : c.rules) {
        out << "  ";
        write_rule(out, r);
        out << '\n';
      }
      out << "end\n";
    }
  } else {
    const auto& p = std::get<ProgrammedGrammar>(any);
    write_head(out, p, "programmed");
    for (const auto& r : p.rules) {
      out << "rule " << r.label << " : ";
      write_rule(out, r.rule);
      out << " ; succ";
      for (const auto& l : r.success) out << ' ' << l;
      out << " ; fail";
      for (const auto& l : r.failure) out << ' ' << l;
      out << '\n';
    }
    if (p.nsf_counts) {
      out << "nsf-counts\n";
      for (const auto& [label, counts] : *p.nsf_counts) {
        out << "counts " << label;
        for (const auto& [sym, n] : counts) out << ' ' << sym << '=' << n;
        out << '\n';
      }
    }
  }
  return out.str();
}

AnyGrammar load_grammar(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_grammar(buf.str());
}

void save_grammar(const std::string& path, const AnyGrammar& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize(g);
}

}  // namespace cdgs

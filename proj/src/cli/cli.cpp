#include "cdgs/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <optional>

#include "cdgs/constructions.hpp"
#include "cdgs/gsw.hpp"

namespace cdgs::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string file, file_b, out_file, name, mode, word, variant = "exactly";
  std::vector<std::string> words;
  std::size_t max_len = 8, max_inner = 0, k = 0, n = 0, factor = 1, m = 0, depth = 256;
  std::optional<std::size_t> max_form;
  bool strict = false, verbatim = false;
};

std::optional<Mode> mode_option(const Options& o) {
  if (o.mode.empty()) return std::nullopt;
  return parse_mode(o.mode);
}

Bounds bounds_of(const Options& o) {
  Bounds b = Bounds::words(o.max_len, o.max_form, o.max_inner ? std::optional<std::size_t>(o.max_inner) : std::nullopt);
  b.check();
  return b;
}

// The grammar as it should be enumerated, with --mode applied.
AnyGrammar with_mode(AnyGrammar g, const std::optional<Mode>& f) {
  if (!f) {
    if (const auto* cd = std::get_if<CdSystem>(&g); cd && !cd->mode)
      throw UsageError("cdgs file declares no mode; pass --mode");
    return g;
  }
  if (auto* cd = std::get_if<CdSystem>(&g)) {
    cd->mode = *f;
  } else if (auto* h = std::get_if<HcdSystem>(&g)) {
    for (auto& c : h->components) c.mode = *f;
  } else {
    throw UsageError("--mode does not apply to programmed grammars");
  }
  return g;
}

BoundedLanguage language(const AnyGrammar& g, const Bounds& b) {
  if (const auto* cd = std::get_if<CdSystem>(&g)) return enumerate_cd(*cd, b);
  return enumerate(g, b);
}

int warn_truncated(bool truncated, const Options& o, std::ostream& err) {
  if (!truncated) return ok;
  err << "warning: search truncated by --max-form-len or --max-inner-steps; the listing may be incomplete\n";
  return o.strict ? Status::truncated : ok;
}

template <class G>
const G& expect(const AnyGrammar& g, const char* what) {
  if (const auto* p = std::get_if<G>(&g)) return *p;
  throw UsageError(std::string("transform expects a ") + what + " grammar");
}

Variant variant_of(const Options& o) {
  if (o.variant == "exactly" || o.variant == "=") return Variant::exactly;
  if (o.variant == "at-most" || o.variant == "at_most" || o.variant == "<=") return Variant::at_most;
  throw UsageError("--variant must be exactly or at-most");
}

std::size_t need(std::size_t v, const char* flag) {
  if (v == 0) throw UsageError(std::string("this transform needs ") + flag + " (a positive integer)");
  return v;
}

AnyGrammar source(const Options& o) {
  if (o.file.empty()) throw UsageError("transform " + o.name + " needs an input file");
  return load_grammar(o.file);
}

AnyGrammar transform(const Options& o) {
  const std::string& t = o.name;
  if (t == "finite-to-cd1") {
    if (o.words.empty()) throw UsageError("finite-to-cd1 needs at least one --word");
    WordSet ws;
    for (const auto& w : o.words) ws.insert(parse_word(w));
    return finite_to_cd1(ws, need(o.k, "--k"), variant_of(o));
  }
  if (t == "linear-to-cd2") return linear_to_cd2(expect<CdSystem>(source(o), "cdgs"), variant_of(o));
  if (t == "cf-to-cd2") return cf_indexk_to_cd2(expect<CdSystem>(source(o), "cdgs"), need(o.k, "--k"), variant_of(o));
  if (t == "cd-to-programmed") {
    const auto g = expect<CdSystem>(source(o), "cdgs");
    std::size_t k = o.k;
    if (k == 0 && g.mode && g.mode->kind() == ModeKind::t_and) k = static_cast<std::size_t>(g.mode->k());
    return cd_to_programmed(g, need(k, "--k"), variant_of(o));
  }
  if (t == "prolong") return prolong(expect<CdSystem>(source(o), "cdgs"), need(o.factor, "--factor"));
  if (t == "nsf-to-cdgs") {
    const auto f = mode_option(o);
    if (!f) throw UsageError("nsf-to-cdgs needs --mode");
    return nsf_programmed_to_cdgs(expect<ProgrammedGrammar>(source(o), "programmed"), need(o.m, "--m"), *f,
                                  NsfOptions{o.depth, o.max_form.value_or(NsfOptions{}.max_form_len)});
  }
  if (t == "example1") return build_example1(need(o.k, "--k"));
  if (t == "snk") return build_snk_cdgs(need(o.n, "--n"), need(o.k, "--k"), variant_of(o), o.verbatim);
  if (t == "anbnambm") return build_anbnambm();
  if (t == "s3") return build_s3_cd3(o.verbatim);
  throw UsageError("unknown transform '" + t + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for CD grammar systems, hybrid modes and programmed grammars", "gsw"};
  app.require_subcommand(1);
  Options o;

  auto bounded = [&](CLI::App* s) {
    s->add_option("--max-len", o.max_len, "Longest word enumerated")->required();
    s->add_option("--max-form-len", o.max_form, "Longest sentential form explored (default: --max-len)");
    s->add_option("--max-inner-steps", o.max_inner, "Cap on steps inside one component activation");
    s->add_flag("--strict", o.strict, "Exit 3 when a bound truncated the search");
  };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the words of the bounded language");
  enumerate_cmd->add_option("file", o.file)->required();
  enumerate_cmd->add_option("--mode", o.mode, "Override the mode of every component");
  bounded(enumerate_cmd);

  auto* transform_cmd = app.add_subcommand("transform", "Apply a construction and write the result");
  transform_cmd->add_option("name", o.name,
                            "finite-to-cd1, linear-to-cd2, cf-to-cd2, cd-to-programmed, prolong, nsf-to-cdgs, "
                            "example1, snk, anbnambm, s3")
      ->required();
  transform_cmd->add_option("file", o.file);
  transform_cmd->add_option("-o,--output", o.out_file, "Output file (default: stdout)");
  transform_cmd->add_option("--k", o.k);
  transform_cmd->add_option("--n", o.n);
  transform_cmd->add_option("--m", o.m);
  transform_cmd->add_option("--factor", o.factor);
  transform_cmd->add_option("--variant", o.variant, "exactly or at-most");
  transform_cmd->add_option("--mode", o.mode, "Target mode of nsf-to-cdgs");
  transform_cmd->add_option("--word", o.words, "Word of finite-to-cd1 (repeatable)");
  transform_cmd->add_option("--depth", o.depth, "NSF check depth for nsf-to-cdgs");
  transform_cmd->add_option("--max-form-len", o.max_form, "NSF check form length for nsf-to-cdgs");
  transform_cmd->add_flag("--verbatim", o.verbatim, "snk, s3: unrepaired rule sets (see README)");

  auto* equiv_cmd = app.add_subcommand("check-equiv", "Compare two bounded languages");
  equiv_cmd->add_option("file_a", o.file)->required();
  equiv_cmd->add_option("file_b", o.file_b)->required();
  bounded(equiv_cmd);

  auto* index_cmd = app.add_subcommand("index", "Minimal index of a word");
  index_cmd->add_option("file", o.file)->required();
  index_cmd->add_option("--word", o.word)->required();
  index_cmd->add_option("--mode", o.mode, "Override the mode of every component");
  bounded(index_cmd);

  auto* nsf_cmd = app.add_subcommand("nsf-check", "Check the separation-form properties");
  nsf_cmd->add_option("file", o.file)->required();
  nsf_cmd->add_option("--depth", o.depth, "Derivation steps explored")->default_val(256);
  nsf_cmd->add_option("--max-form-len", o.max_form, "Longest form explored");

  std::vector<const char*> argv{"gsw"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return bad_input;
  }

  try {
    if (enumerate_cmd->parsed()) {
      const auto g = with_mode(load_grammar(o.file), mode_option(o));
      const auto lang = language(g, bounds_of(o));
      for (const auto& w : lang.words) out << format_word(w) << '\n';
      return warn_truncated(lang.truncated, o, err);
    }
    if (transform_cmd->parsed()) {
      const auto g = transform(o);
      if (o.out_file.empty())
        out << serialize(g);
      else
        save_grammar(o.out_file, g);
      return ok;
    }
    if (equiv_cmd->parsed()) {
      const auto b = bounds_of(o);
      const auto la = language(with_mode(load_grammar(o.file), std::nullopt), b);
      const auto lb = language(with_mode(load_grammar(o.file_b), std::nullopt), b);
      const auto report = bounded_equal(la, lb);
      for (const auto& l : report.lines()) out << l << '\n';
      const int t = warn_truncated(la.truncated || lb.truncated, o, err);
      if (!report.equal) return differs;
      return t;
    }
    if (index_cmd->parsed()) {
      const auto g = with_mode(load_grammar(o.file), mode_option(o));
      std::vector<std::string> terminals;
      std::visit([&](const auto& x) { terminals = x.terminals; }, g);
      const auto r = word_index(g, parse_word(o.word, terminals), bounds_of(o));
      if (r.index)
        out << *r.index << '\n';
      else
        out << "UNKNOWN\n";
      return warn_truncated(r.truncated, o, err);
    }
    if (nsf_cmd->parsed()) {
      const auto g = load_grammar(o.file);
      const auto* pg = std::get_if<ProgrammedGrammar>(&g);
      if (!pg) throw UsageError("nsf-check expects a programmed grammar");
      const auto report = nsf_check(*pg, NsfOptions{o.depth, o.max_form.value_or(NsfOptions{}.max_form_len)});
      for (const auto& l : report.lines()) out << l << '\n';
      return report.holds() ? ok : differs;
    }
  } catch (const ParseError& e) {
    err << (o.file.empty() ? std::string("gsw") : o.file) << ": " << e.what() << '\n';
    return bad_input;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return bad_input;
  }
  return bad_input;
}

}  // namespace cdgs::cli

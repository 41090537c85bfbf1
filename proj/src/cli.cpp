#include "modcube/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "modcube/axioms.hpp"
#include "modcube/error.hpp"
#include "modcube/kripke.hpp"
#include "modcube/paste.hpp"
#include "modcube/sym.hpp"

namespace modcube {

using Json = nlohmann::ordered_json;

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\n");
  const auto e = s.find_last_not_of(" \t\n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// Splits "x,y" at the top-level comma.
std::pair<std::string, std::string> split_args(const std::string& s, std::size_t base) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[' || s[i] == '{') ++depth;
    if (s[i] == ')' || s[i] == ']' || s[i] == '}') --depth;
    if (s[i] == ',' && depth == 0) return {s.substr(0, i), s.substr(i + 1)};
  }
  throw ParseError(base, "expected two arguments separated by ','");
}

LawComposite parse_expr(const std::string& raw, const CategoryMode& mode, std::size_t base) {
  const std::string s = trim(raw);
  auto bracketed = [&](const std::string& head) -> std::optional<std::string> {
    if (s.rfind(head + "[", 0) != 0) return std::nullopt;
    if (s.back() != ']') throw ParseError(base + s.size(), "expected ']'");
    return s.substr(head.size() + 1, s.size() - head.size() - 2);
  };
  if (s.rfind("h(", 0) == 0 || s.rfind("v(", 0) == 0) {
    if (s.back() != ')') throw ParseError(base + s.size(), "expected ')'");
    const auto [x, y] = split_args(s.substr(2, s.size() - 3), base + 2);
    const LawComposite a = parse_expr(x, mode, base + 2);
    const LawComposite b = parse_expr(y, mode, base + 3 + x.size());
    return s[0] == 'h' ? compose_h(a, b) : compose_v(a, b);
  }
  if (auto inner = bracketed("unit"))
    return special_cell(SpecialKind::LeftUnit, mode, parse_index(*inner, mode.arity));
  if (auto inner = bracketed("runit"))
    return special_cell(SpecialKind::RightUnit, mode, parse_index(*inner, mode.arity));
  if (s.rfind("d[", 0) == 0 || s.rfind("d_{", 0) == 0)
    return as_composite(parse_law(s, mode));
  throw ParseError(base, "expected d[I;J], unit[I], runit[J], h(x,y) or v(x,y)");
}

struct ModeArgs {
  std::string mode = "dcmd";
  unsigned arity = 3;

  void attach(CLI::App* sub, bool mode_required = true) {
    auto* opt = sub->add_option("--mode", mode, "dcmd, sdcmd, dmnd, sdmnd, ent or sent")
                    ->check(CLI::IsMember({"dcmd", "sdcmd", "dmnd", "sdmnd", "ent", "sent"},
                                          CLI::ignore_case));
    if (mode_required) opt->required();
    sub->add_option("--arity", arity, "number of axes")->capture_default_str();
  }
  CategoryMode get() const { return CategoryMode(*parse_mode_kind(mode), arity); }
};

Json step_json(const Step& s) {
  return Json{{"rule", s.rule}, {"index", s.index}, {"offset", s.offset},
              {"forward", s.forward}};
}

std::string word_of(const PermutationWord& w) { return w.empty() ? "[]" : render(w); }

int cmd_normalize(const std::string& text, std::optional<unsigned> arity, std::ostream& out) {
  out << std::visit([](const auto& t) { return render(t); }, parse_any(text, arity)) << "\n";
  return 0;
}

int cmd_compose(const CategoryMode& mode, const std::string& x, const std::string& y,
                std::optional<unsigned> dir, const std::string& op, bool json,
                std::ostream& out) {
  if (dir) {
    const LawCell r = compose_dir(parse_law(x, mode), parse_law(y, mode), *dir);
    if (json)
      out << Json{{"label", render(r)}, {"kind", to_string(r.kind)}}.dump(2) << "\n";
    else
      out << render(r) << "\n";
    return 0;
  }
  if (op != "h" && op != "v")
    throw CLI::ValidationError("compose", "give --dir K or --op h|v");
  const LawComposite a = as_composite(parse_law(x, mode));
  const LawComposite b = as_composite(parse_law(y, mode));
  const LawComposite r = op == "h" ? compose_h(a, b) : compose_v(a, b);
  if (json) {
    out << Json{{"label", render(r.label)}, {"kind", to_string(r.label.kind)},
                {"term", render(r.term)}}
               .dump(2)
        << "\n";
  } else {
    out << render(r.label) << "\n" << "term: " << render(r.term) << "\n";
  }
  return 0;
}

int cmd_transpose(const CategoryMode& mode, const std::string& word, const std::string& law,
                  std::ostream& out) {
  const LawCell d = parse_law(law, mode);
  const LawCell r = act_word(parse_word(word), d);
  out << render(r) << "\n";
  if (r.kind != d.kind)
    out << "kind changed: " << to_string(d.kind) << " -> " << to_string(r.kind) << "\n";
  return 0;
}

int cmd_derive(const CategoryMode& mode, unsigned depth, bool json, std::ostream& out) {
  const auto axioms = generate(mode, depth);
  if (json) {
    Json list = Json::array();
    for (const auto& ax : axioms) {
      Json layers = Json::array();
      for (const auto& l : ax.witness.term.layers())
        layers.push_back(Json{{"pos", l.pos}, {"gen", render(l.gen)}});
      Json origins = Json::array();
      for (const auto& o : ax.witness.origins)
        origins.push_back(Json{{"law", render(o.law)}, {"seed", render(o.seed)},
                               {"word", render(o.word)}});
      Json geach = nullptr;
      if (ax.geach)
        geach = Json::array({render_side(ax.geach->a), render_side(ax.geach->b),
                             render_side(ax.geach->c), render_side(ax.geach->d)});
      list.push_back(Json{{"sentence", render(ax.sentence)},
                          {"geach", geach},
                          {"family", to_string(ax.family)},
                          {"witness", Json{{"term", render(ax.witness.term)},
                                           {"layers", layers},
                                           {"origins", origins}}}});
    }
    out << list.dump(2) << "\n";
    return 0;
  }
  for (const auto& ax : axioms) {
    out << render(ax.sentence) << "  [" << to_string(ax.family);
    if (ax.geach) out << " " << render(*ax.geach);
    out << "]  by " << render(ax.witness.term);
    for (const auto& o : ax.witness.origins)
      out << "; " << render(o.law) << " = " << word_of(o.word) << "(" << render(o.seed) << ")";
    out << "\n";
  }
  return 0;
}

int cmd_verify(const CategoryMode& mode, const std::string& expr, unsigned bound,
               const std::string& kind, bool json, std::ostream& out, std::ostream& err) {
  const LawComposite c = parse_law_expr(expr, mode);
  if (!kind.empty()) {
    const auto k = parse_law_kind(kind);
    if (!k) throw CLI::ValidationError("--kind", "expected box, dia, diabox or boxdia");
    if (*k != c.label.kind)
      throw Error(ErrorKind::ShapeMismatch, render(c.label) + " has kind " +
                                                to_string(c.label.kind) + ", not " + kind);
  }
  const Report rep = verify_law(c, bound);
  if (json) {
    Json diagrams = Json::array();
    for (const auto& d : rep.diagrams) {
      Json path = Json::array();
      for (const auto& s : d.verdict.path) path.push_back(step_json(s));
      diagrams.push_back(Json{{"name", d.name},
                              {"lhs", render(d.diagram.lhs)},
                              {"rhs", render(d.diagram.rhs)},
                              {"proven", d.verdict.equal},
                              {"rule_steps", d.verdict.rule_steps},
                              {"explored", d.verdict.explored},
                              {"path", path}});
    }
    out << Json{{"label", render(c.label)},     {"kind", to_string(rep.kind)},
                {"term", render(c.term)},       {"bound", bound},
                {"proven", rep.all_equal()},    {"diagrams", diagrams}}
               .dump(2)
        << "\n";
  } else {
    out << render(c.label) << " (" << to_string(rep.kind) << ") realized by "
        << render(c.term) << "\n";
    for (const auto& d : rep.diagrams) {
      out << "  " << d.name << ": ";
      if (d.verdict.equal)
        out << "proven in " << d.verdict.rule_steps << " rule steps\n";
      else
        out << "NotProven within bound " << bound << "\n";
    }
    out << (rep.all_equal() ? "all diagrams proven" : "some diagrams not proven") << "\n";
  }
  if (!rep.all_equal()) {
    err << "verify: some diagrams were not proven within bound " << bound << "\n";
    return 1;
  }
  return 0;
}

std::string world_list(WorldSet s, unsigned worlds) {
  std::string out = "{";
  bool first = true;
  for (unsigned w = 0; w < worlds; ++w)
    if ((s >> w) & 1u) {
      if (!first) out += ",";
      out += std::to_string(w);
      first = false;
    }
  return out + "}";
}

int cmd_kripke(const std::string& axiom, unsigned max_worlds, const std::string& frame_path,
               std::optional<std::uint64_t> samples, std::uint64_t seed, bool json,
               std::ostream& out) {
  const AxiomSentence ax = parse_axiom(axiom);
  if (!frame_path.empty()) {
    std::ifstream in(frame_path);
    if (!in) throw Error(ErrorKind::Io, "cannot read " + frame_path);
    std::stringstream buf;
    buf << in.rdbuf();
    const Frame fr = frame_from_json(buf.str());
    std::optional<std::pair<Valuation, unsigned>> bad;
    for (Valuation v = 0; !bad; ++v) {
      const WorldSet miss = extension(ax.lhs, fr, v) & ~extension(ax.rhs, fr, v) & fr.all();
      for (unsigned w = 0; w < fr.worlds; ++w)
        if ((miss >> w) & 1u) {
          bad = std::make_pair(v, w);
          break;
        }
      if (v == fr.all()) break;
    }
    const auto g = sentence_to_geach(ax);
    if (json) {
      Json j{{"axiom", render(ax)}, {"valid", !bad}};
      if (g) j["geach_condition"] = geach_condition(fr, *g);
      if (bad) j["falsified"] = Json{{"valuation", bad->first}, {"world", bad->second}};
      out << j.dump(2) << "\n";
    } else {
      out << render(ax) << ": " << (bad ? "not valid" : "valid") << " on the frame\n";
      if (g) out << "geach condition: " << (geach_condition(fr, *g) ? "holds" : "fails") << "\n";
      if (bad)
        out << "fails at world " << bad->second << " with A true at "
            << world_list(bad->first, fr.worlds) << "\n";
    }
    return 0;
  }
  if (samples) {
    const auto g = sentence_to_geach(ax);
    if (!g) throw Error(ErrorKind::ShapeMismatch, render(ax) + " has no Geach form");
    const std::uint64_t v =
        sampled_soundness_violations(*g, max_worlds, relations_needed(ax), *samples, seed);
    if (json)
      out << Json{{"axiom", render(ax)}, {"worlds", max_worlds}, {"samples", *samples},
                  {"seed", seed}, {"violations", v}}
                 .dump(2)
          << "\n";
    else
      out << render(ax) << ": " << v << " soundness violations in " << *samples
          << " frames with " << max_worlds << " worlds (seed " << seed << ")\n";
    return 0;
  }
  const auto cm = countermodel_search(ax, max_worlds);
  if (json) {
    Json j{{"axiom", render(ax)}, {"max_worlds", max_worlds}};
    if (cm)
      j["countermodel"] = Json{{"frame", Json::parse(frame_to_json(cm->frame))},
                               {"valuation", cm->valuation},
                               {"world", cm->world}};
    else
      j["countermodel"] = nullptr;
    out << j.dump(2) << "\n";
  } else if (cm) {
    out << "countermodel: " << frame_to_json(cm->frame) << "\n"
        << "A true at " << world_list(cm->valuation, cm->frame.worlds) << ", fails at world "
        << cm->world << "\n";
  } else {
    out << "no countermodel with at most " << max_worlds << " worlds\n";
  }
  return 0;
}

int cmd_diff(const CategoryMode& mode, unsigned depth, bool json, std::ostream& out) {
  const DiscrepancyReport rep = diff_against_paper(mode, depth);
  if (json) {
    Json entries = Json::array();
    for (const auto& e : rep.entries)
      entries.push_back(Json{{"label", e.label},   {"family", to_string(e.family)},
                             {"flagged", e.flagged}, {"reason", e.reason},
                             {"expected", e.expected}, {"missing", e.missing}});
    out << Json{{"mode", to_string(rep.mode)},   {"arity", rep.arity},
                {"matched", rep.matched},        {"flagged", rep.flagged},
                {"entries", entries},            {"paper_only", rep.paper_only},
                {"engine_only", rep.engine_only}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << to_string(rep.mode) << " arity " << rep.arity << ": " << rep.matched << "/"
      << rep.entries.size() << " matched, " << rep.flagged << " flagged, "
      << rep.paper_only.size() << " paper-only, " << rep.engine_only.size()
      << " engine-only\n";
  for (const auto& e : rep.entries) {
    out << "  [" << (e.flagged ? "FLAG" : e.missing.empty() ? "match" : "MISSING") << "] "
        << e.label << ":";
    for (std::size_t i = 0; i < e.expected.size(); ++i)
      out << (i ? "; " : " ") << e.expected[i];
    out << "\n";
    if (e.flagged) out << "    " << e.reason << "\n";
    for (const auto& m : e.missing) out << "    missing: " << m << "\n";
  }
  return 0;
}

}  // namespace

LawComposite parse_law_expr(const std::string& text, const CategoryMode& mode) {
  return parse_expr(text, mode, 0);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Derivation engine for incestual multimodal axioms", "modcube"};
  app.require_subcommand(1);
  bool json = false;

  auto* normalize = app.add_subcommand("normalize", "Normalize an index, formula or axiom");
  std::string norm_text;
  std::optional<unsigned> norm_arity;
  normalize->add_option("text", norm_text)->required();
  normalize->add_option("--arity", norm_arity, "reject atoms >= arity");

  auto* compose = app.add_subcommand("compose", "Compose two law cells");
  ModeArgs compose_mode;
  compose_mode.attach(compose);
  std::string cx, cy, cop;
  std::optional<unsigned> cdir;
  compose->add_option("first", cx)->required();
  compose->add_option("second", cy)->required();
  compose->add_option("--dir", cdir, "directed composition along an axis");
  compose->add_option("--op", cop, "h (horizontal) or v (vertical)");
  compose->add_flag("--json", json);

  auto* transpose = app.add_subcommand("transpose", "Act on a law cell by a permutation word");
  ModeArgs transpose_mode;
  transpose_mode.attach(transpose);
  std::string tword, tlaw;
  transpose->add_option("word", tword, "e.g. s1,s2,s1")->required();
  transpose->add_option("law", tlaw, "e.g. d[2;(1;1)]")->required();

  auto* derive = app.add_subcommand("derive", "List derivable axioms with witnesses");
  ModeArgs derive_mode;
  derive_mode.attach(derive);
  unsigned depth = 2;
  derive->add_option("--depth", depth, "generator layers per witness")->capture_default_str();
  derive->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify", "Check the defining diagrams of a law");
  ModeArgs verify_mode;
  verify_mode.attach(verify);
  std::string vexpr, vkind;
  unsigned bound = 12;
  verify->add_option("expr", vexpr, "d[I;J], unit[I], runit[J], h(x,y), v(x,y)")->required();
  verify->add_option("--bound", bound, "rule steps per diagram")->capture_default_str();
  verify->add_option("--kind", vkind, "assert the law kind (box, dia, diabox, boxdia)");
  verify->add_flag("--json", json);

  auto* kripke = app.add_subcommand("kripke", "Countermodels and frame checks");
  std::string kaxiom, kframe;
  unsigned max_worlds = 3;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
  kripke->add_option("--axiom", kaxiom)->required();
  kripke->add_option("--max-worlds", max_worlds)->capture_default_str();
  kripke->add_option("--frame", kframe, "JSON frame file to check instead of searching");
  kripke->add_option("--sample", samples, "sample random frames for Geach soundness");
  kripke->add_option("--seed", seed)->capture_default_str();
  kripke->add_flag("--json", json);

  auto* diff = app.add_subcommand("diff", "Compare derived axioms with the published boxes");
  ModeArgs diff_mode;
  diff_mode.attach(diff);
  unsigned diff_depth = 2;
  diff->add_option("--depth", diff_depth)->capture_default_str();
  diff->add_flag("--json", json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*normalize) return cmd_normalize(norm_text, norm_arity, out);
    if (*compose)
      return cmd_compose(compose_mode.get(), cx, cy, cdir, cop, json, out);
    if (*transpose) return cmd_transpose(transpose_mode.get(), tword, tlaw, out);
    if (*derive) return cmd_derive(derive_mode.get(), depth, json, out);
    if (*verify) return cmd_verify(verify_mode.get(), vexpr, bound, vkind, json, out, err);
    if (*kripke) return cmd_kripke(kaxiom, max_worlds, kframe, samples, seed, json, out);
    if (*diff) return cmd_diff(diff_mode.get(), diff_depth, json, out);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace modcube

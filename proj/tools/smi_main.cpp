#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "smi/bar.hpp"
#include "smi/parse.hpp"

using nlohmann::json;
using namespace smi;

namespace {

struct Options {
  bool json_out = false;
  bool strict = false;
  unsigned long seed = 0;  // reserved for reproducibility of sampled output
};

int domain_status(const Options& opt, bool decided) {
  return decided || !opt.strict ? 0 : 1;
}

void emit(const Options& opt, const json& j, const std::string& plain) {
  if (opt.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << plain << "\n";
}

std::string canon_status_str(CanonStatus s) {
  switch (s) {
    case CanonStatus::Some: return "some";
    case CanonStatus::None: return "none";
    case CanonStatus::Undecided: return "undecided";
  }
  return "?";
}

std::string equal_status_str(EqualStatus s) {
  switch (s) {
    case EqualStatus::EqualByCoherence: return "EQUAL";
    case EqualStatus::NotParallel: return "NOT-PARALLEL";
    case EqualStatus::Unknown: return "UNKNOWN";
  }
  return "?";
}

json tuple_json(const TupleObject& t) {
  json cells = json::array();
  for (const StrictObject& c : t.cells) cells.push_back(c.str());
  return json{{"shape", t.shape.sizes}, {"n", t.shape.n}, {"m", t.shape.m}, {"cells", cells}};
}

std::string tuple_plain(const TupleObject& t) {
  std::string out = "(";
  for (size_t i = 0; i < t.cells.size(); ++i) {
    if (i) out += ", ";
    out += t.cells[i].str();
  }
  return out + ")";
}

json witness_json(const OmegaWitness& w) {
  json cells = json::array();
  for (const StTerm& c : w.cells) cells.push_back(c.str());
  return json{{"source", tuple_json(w.source)}, {"target", tuple_json(w.target)},
              {"cells", cells}};
}

Shape make_shape(int n, int m, const std::vector<int>& sizes) {
  Shape s{n, m, sizes};
  if (n < 0 || m < 0 || n + m < 1 || sizes.size() != static_cast<size_t>(n + m))
    throw ShapeMismatch("shape needs n+m sizes");
  for (int k : sizes)
    if (k < 1) throw ShapeMismatch("initial sizes must be positive");
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic engine for doubly monoidal intermuting structures"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_out, "emit machine readable output");
  app.add_flag("--strict", opt.strict, "exit 1 on NONE/UNKNOWN/UNDECIDED results");
  app.add_option("--seed", opt.seed, "seed for sampled diagnostics (reserved)");

  std::string arg1, arg2, arg3;
  bool explain = false;

  auto* cmd_nu = app.add_subcommand("nu", "unit-eliminated form of a formula");
  cmd_nu->add_option("formula", arg1)->required();

  auto* cmd_purity = app.add_subcommand("purity", "bot/top purity of a formula");
  cmd_purity->add_option("formula", arg1)->required();

  auto* cmd_canon_sai = app.add_subcommand("canon-sai", "canonical unit-free arrow");
  cmd_canon_sai->add_option("source", arg1)->required();
  cmd_canon_sai->add_option("target", arg2)->required();

  auto* cmd_canon = app.add_subcommand("canon-arrow", "canonical arrow between strict objects");
  cmd_canon->add_option("source", arg1)->required();
  cmd_canon->add_option("target", arg2)->required();

  auto* cmd_equal = app.add_subcommand("equal", "equality of two arrow terms by coherence");
  cmd_equal->add_option("f", arg1)->required();
  cmd_equal->add_option("g", arg2)->required();
  cmd_equal->add_flag("--explain", explain, "print the endpoint evidence");

  auto* cmd_develop = app.add_subcommand("develop", "single-head factorization of a term");
  cmd_develop->add_option("term", arg1)->required();

  auto* cmd_ck = app.add_subcommand("ck-count", "number of intermutation generators");
  cmd_ck->add_option("term", arg1)->required();

  auto* cmd_ur = app.add_subcommand("unit-reduce", "unit-free form of a pure-endpoint term");
  cmd_ur->add_option("term", arg1)->required();

  auto* cmd_simp = app.add_subcommand("simp", "simplicial map utilities");
  auto* simp_compose = cmd_simp->add_subcommand("compose", "compose two maps (g after f)");
  simp_compose->add_option("f", arg1)->required();
  simp_compose->add_option("g", arg2)->required();
  auto* simp_hj = cmd_simp->add_subcommand("hj", "partial map of a simplex map");
  simp_hj->add_option("f", arg1)->required();
  auto* simp_render = cmd_simp->add_subcommand("render", "ascii diagram of a map");
  simp_render->add_option("f", arg1)->required();

  auto* cmd_oracle = app.add_subcommand("oracle", "exhaustive search oracles");
  auto* oracle_reach = cmd_oracle->add_subcommand("reach", "single-head reachability");
  oracle_reach->add_option("source", arg1)->required();
  oracle_reach->add_option("target", arg2)->required();
  size_t limit = 200000;
  oracle_reach->add_option("--limit", limit, "node limit");

  int bn = 0, bm = 0;
  std::vector<int> bshape;
  auto* cmd_bar = app.add_subcommand("bar", "iterated bar construction");
  auto* bar_eval_cmd = cmd_bar->add_subcommand("eval", "evaluate a product map on fresh letters");
  bar_eval_cmd->add_option("--n", bn)->required();
  bar_eval_cmd->add_option("--m", bm)->required();
  bar_eval_cmd->add_option("--shape", bshape)->required()->delimiter(',');
  bar_eval_cmd->add_option("--maps", arg1, "product map, e.g. \"<d(1)@2 ; s(0)@1>\"")->required();
  auto* bar_omega = cmd_bar->add_subcommand("omega", "mediating witness of a composable pair");
  bar_omega->add_option("--n", bn)->required();
  bar_omega->add_option("--m", bm)->required();
  bar_omega->add_option("--shape", bshape)->required()->delimiter(',');
  bar_omega->add_option("f", arg1)->required();
  bar_omega->add_option("g", arg2)->required();
  auto* bar_lax = cmd_bar->add_subcommand("laxcheck", "associativity square of the witnesses");
  bar_lax->add_option("--n", bn)->required();
  bar_lax->add_option("--m", bm)->required();
  bar_lax->add_option("--shape", bshape)->required()->delimiter(',');
  bar_lax->add_option("f", arg1)->required();
  bar_lax->add_option("g", arg2)->required();
  bar_lax->add_option("h", arg3)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_nu->parsed()) {
      Formula f = nu(parse_formula(arg1));
      emit(opt, json{{"formula", f.str()}}, f.str());
      return 0;
    }
    if (cmd_purity->parsed()) {
      Purity p = purity(parse_formula(arg1));
      emit(opt, json{{"bot_pure", p.bot_pure}, {"top_pure", p.top_pure}},
           std::string("bot_pure=") + (p.bot_pure ? "true" : "false") +
               " top_pure=" + (p.top_pure ? "true" : "false"));
      return 0;
    }
    if (cmd_canon_sai->parsed()) {
      FormMultiset x = to_form_multiset(parse_formula(arg1));
      FormMultiset y = to_form_multiset(parse_formula(arg2));
      auto t = canonical_sai_arrow(x, y);
      if (t)
        emit(opt, json{{"status", "some"}, {"term", t->str()}}, t->str());
      else
        emit(opt, json{{"status", "none"}}, "NONE");
      return domain_status(opt, t.has_value());
    }
    if (cmd_canon->parsed()) {
      StrictObject a = to_strict_object(parse_formula(arg1));
      StrictObject b = to_strict_object(parse_formula(arg2));
      CanonResult r = canonical_arrow(a, b);
      json j{{"status", canon_status_str(r.status)}};
      if (r.term) j["term"] = r.term->str();
      emit(opt, j,
           r.status == CanonStatus::Some   ? r.term->str()
           : r.status == CanonStatus::None ? "NONE"
                                           : "UNDECIDED");
      return domain_status(opt, r.status == CanonStatus::Some);
    }
    if (cmd_equal->parsed()) {
      StTerm f = strictify(parse_term(arg1));
      StTerm g = strictify(parse_term(arg2));
      EqualReport r = equal_arrows(f, g);
      std::string plain = equal_status_str(r.status);
      if (explain) plain += "\n" + r.reason;
      emit(opt, json{{"status", equal_status_str(r.status)}, {"reason", r.reason}}, plain);
      return domain_status(opt, r.status == EqualStatus::EqualByCoherence);
    }
    if (cmd_develop->parsed()) {
      MTerm t = parse_term(arg1);
      typecheck(t);
      json arr = json::array();
      std::string plain;
      for (const MTerm& f : develop(t)) {
        arr.push_back(f.str());
        plain += f.str() + "\n";
      }
      if (!plain.empty()) plain.pop_back();
      emit(opt, json{{"factors", arr}}, plain.empty() ? "(identity)" : plain);
      return 0;
    }
    if (cmd_ck->parsed()) {
      MTerm t = parse_term(arg1);
      size_t n = ck_count(t);
      emit(opt, json{{"count", n}}, std::to_string(n));
      return 0;
    }
    if (cmd_ur->parsed()) {
      StTerm t = strictify(parse_term(arg1));
      StTerm r = unit_reduce(t);
      emit(opt, json{{"term", r.str()}}, r.str());
      return 0;
    }
    if (simp_compose->parsed()) {
      SimplexMap f = parse_simplex(arg1);
      SimplexMap g = parse_simplex(arg2);
      SimplexMap c = compose_simplex(g, f);
      emit(opt, json{{"map", c.str()}}, c.str());
      return 0;
    }
    if (simp_hj->parsed()) {
      PartialMonotoneMap h = hj(parse_simplex(arg1));
      emit(opt, json{{"map", h.str()}}, h.str());
      return 0;
    }
    if (simp_render->parsed()) {
      std::string r = render_ascii(parse_simplex(arg1));
      emit(opt, json{{"render", r}}, r);
      return 0;
    }
    if (oracle_reach->parsed()) {
      FormMultiset x = to_form_multiset(parse_formula(arg1));
      FormMultiset y = to_form_multiset(parse_formula(arg2));
      ReachReport r = reachability_oracle(x, y, limit);
      json lens = json::array();
      std::string plain = std::string("exists=") + (r.exists ? "true" : "false") + " lengths={";
      bool first = true;
      for (size_t l : r.all_path_lengths) {
        lens.push_back(l);
        if (!first) plain += ",";
        plain += std::to_string(l);
        first = false;
      }
      plain += "}";
      emit(opt, json{{"exists", r.exists}, {"all_path_lengths", lens}}, plain);
      return domain_status(opt, r.exists);
    }
    if (bar_eval_cmd->parsed() || bar_omega->parsed() || bar_lax->parsed()) {
      Shape shape = make_shape(bn, bm, bshape);
      TupleObject letters = fresh_letters(shape);
      if (bar_eval_cmd->parsed()) {
        TupleObject out = bar_eval(parse_product_map(arg1), letters);
        emit(opt, tuple_json(out), tuple_plain(out));
        return 0;
      }
      ProductMap f = parse_product_map(arg1);
      ProductMap g = parse_product_map(arg2);
      if (bar_omega->parsed()) {
        OmegaWitness w = omega(f, g, letters);
        std::string plain = "source: " + tuple_plain(w.source) + "\ntarget: " +
                            tuple_plain(w.target) + "\ncells:";
        for (const StTerm& c : w.cells) plain += "\n  " + c.str();
        emit(opt, witness_json(w), plain);
        return 0;
      }
      ProductMap h = parse_product_map(arg3);
      LaxReport r = lax_check(f, g, h, letters);
      json cells = json::array();
      for (const LaxCellEvidence& e : r.cells)
        cells.push_back(json{{"cell", e.cell}, {"status", equal_status_str(e.status)}});
      emit(opt,
           json{{"commutes", r.commutes},
                {"intermediates_coherent", r.all_intermediates_coherent},
                {"cells", cells},
                {"detail", r.detail}},
           r.commutes ? "COMMUTES (all cells equal by coherence)"
                      : "FAILS: " + r.detail);
      return domain_status(opt, r.commutes);
    }
  } catch (const SyntaxError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

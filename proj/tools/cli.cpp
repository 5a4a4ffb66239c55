#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "foldcat/certify.hpp"
#include "foldcat/errors.hpp"
#include "foldcat/freecat.hpp"
#include "foldcat/operads.hpp"
#include "foldcat/structure.hpp"

namespace foldcat::cli {

namespace {

using nlohmann::json;

struct Outcome {
  int exit_code = 0;
  std::string verdict = "ok";
  std::string text;                    // human-readable report
  std::vector<std::string> witnesses;  // replayable counterexamples
  std::uint64_t seed = 0;
  bool has_seed = false;
};

Collection load_collection_file(const std::string& path,
                                std::shared_ptr<const Structure> s) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open collection file: " + path);
  return load_collection(in, std::move(s));
}

std::pair<int, int> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw ValidationError("expected a pair like 2,3: " + text);
  const int p = std::stoi(text.substr(0, comma));
  const int q = std::stoi(text.substr(comma + 1));
  if (p < 1 || q <= p) throw ValidationError("pair must satisfy 1 <= p < q");
  return {p, q};
}

std::vector<std::uint64_t> parse_starts(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ValidationError("empty entry in starts list");
    out.push_back(std::stoull(item));
  }
  if (out.empty()) throw ValidationError("starts list is empty");
  return out;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

void emit(const Outcome& o, const std::string& command, bool as_json, std::ostream& out) {
  if (!as_json) {
    out << o.text;
    return;
  }
  json j;
  j["command"] = command;
  j["verdict"] = o.verdict;
  j["witnesses"] = o.witnesses;
  if (o.has_seed) j["seed"] = o.seed;
  j["output"] = o.text;
  out << j.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ordered-carrier monoidal structures, interchange certification and operads"};
  app.require_subcommand(0, 1);
  bool as_json = false;
  bool describe_all = false;
  app.add_flag("--json", as_json, "machine-readable report");
  app.add_flag("--describe", describe_all, "print every registered structure's product table");

  // Object texts carry brackets, so positionals are scalar strings; vector
  // positionals would trigger CLI11's own bracket expansion.

  // product
  std::string st_name = "nat";
  int op_index = 1;
  std::string op_a, op_b;
  auto* product = app.add_subcommand("product", "apply one product to two objects");
  product->add_option("--structure", st_name)->required();
  product->add_option("--op", op_index)->required();
  product->add_option("A", op_a)->required();
  product->add_option("B", op_b)->required();

  // compare
  auto* compare = app.add_subcommand("compare", "order two objects");
  std::string cmp_structure = "nat";
  std::string expect;
  std::string cmp_a, cmp_b;
  compare->add_option("--structure", cmp_structure)->required();
  compare->add_option("--expect", expect)->check(CLI::IsMember({"leq"}));
  compare->add_option("A", cmp_a)->required();
  compare->add_option("B", cmp_b)->required();

  // interchange
  auto* interchange = app.add_subcommand("interchange", "check eta^{ij} on a tuple or a seeded sweep");
  std::string ic_structure;
  int ic_i = 1, ic_j = 2;
  int ic_trials = 0;
  std::uint64_t ic_seed = 42;
  std::string ic_a, ic_b, ic_c, ic_d;
  interchange->add_option("--structure", ic_structure)->required();
  interchange->add_option("--i", ic_i)->required();
  interchange->add_option("--j", ic_j)->required();
  interchange->add_option("--trials", ic_trials);
  interchange->add_option("--seed", ic_seed);
  interchange->add_option("A", ic_a);
  interchange->add_option("B", ic_b);
  interchange->add_option("C", ic_c);
  interchange->add_option("D", ic_d);

  // certify
  auto* certify = app.add_subcommand("certify", "sample-based certification of the structure axioms");
  std::string ct_structure;
  int ct_trials = 1000;
  std::uint64_t ct_seed = 42;
  certify->add_option("--structure", ct_structure)->required();
  certify->add_option("--trials", ct_trials);
  certify->add_option("--seed", ct_seed);

  // free-hom
  auto* freehom = app.add_subcommand("free-hom", "decide hom existence in the free category");
  int fh_n = 9;
  bool fh_strict = false;
  std::string fh_a, fh_b;
  freehom->add_option("--n", fh_n);
  freehom->add_flag("--strict-paper-rule", fh_strict);
  freehom->add_option("exprA", fh_a)->required();
  freehom->add_option("exprB", fh_b)->required();

  // gen-nat
  auto* gennat = app.add_subcommand("gen-nat", "minimal integer operad from starting terms");
  std::string gn_starts = "0,1";
  int gn_terms = 10;
  bool gn_closed = false;
  gennat->add_option("--starts", gn_starts)->required();
  gennat->add_option("--terms", gn_terms)->required();
  gennat->add_flag("--closed-form", gn_closed);

  // gen-diagram
  auto* gendiag = app.add_subcommand("gen-diagram", "minimal diagram operad from a seed diagram");
  std::string gd_seed = "[1]";
  int gd_terms = 10;
  bool gd_closed = false;
  gendiag->add_option("--seed-diagram", gd_seed)->required();
  gendiag->add_option("--terms", gd_terms)->required();
  gendiag->add_flag("--closed-form-box", gd_closed);

  // verify-operad
  auto* verify = app.add_subcommand("verify-operad", "check the composition inequalities of a collection");
  std::string vo_file;
  std::vector<std::string> vo_pairs;
  int vo_arity = 8;
  std::string vo_structure;
  std::uint64_t vo_seed = 42;
  verify->add_option("--file", vo_file)->required();
  verify->add_option("--pairs", vo_pairs)->required();
  verify->add_option("--max-arity", vo_arity);
  verify->add_option("--structure", vo_structure);
  verify->add_option("--seed", vo_seed);

  // tensor
  auto* tensor = app.add_subcommand("tensor", "fibrewise product of two operad files");
  std::string tn_left, tn_right, tn_structure;
  int tn_index = 1, tn_m = 2;
  tensor->add_option("--left", tn_left)->required();
  tensor->add_option("--right", tn_right)->required();
  tensor->add_option("--index", tn_index)->required();
  tensor->add_option("--m", tn_m);
  tensor->add_option("--structure", tn_structure);

  // algebra
  auto* algebra = app.add_subcommand("algebra", "check an object as an algebra of an operad");
  std::string al_file, al_object, al_structure;
  std::vector<std::string> al_pairs;
  int al_arity = 8;
  std::uint64_t al_seed = 42;
  algebra->add_option("--operad", al_file)->required();
  algebra->add_option("--object", al_object)->required();
  algebra->add_option("--pairs", al_pairs)->required();
  algebra->add_option("--max-arity", al_arity);
  algebra->add_option("--structure", al_structure);
  algebra->add_option("--seed", al_seed);

  // render
  auto* render = app.add_subcommand("render", "draw a diagram with unit boxes");
  std::string rd_text;
  render->add_option("diagram", rd_text)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::stringstream capture;
    app.exit(e, capture, capture);
    (e.get_exit_code() == 0 ? out : err) << capture.str();
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  Outcome o;
  std::string command = "help";
  try {
    if (describe_all && app.get_subcommands().empty()) {
      command = "describe";
      for (const auto& name : default_structure_names())
        o.text += describe(*make_structure(name));
    } else if (product->parsed()) {
      command = "product";
      auto s = make_structure(st_name);
      if (op_index < 1 || op_index > s->dims())
        throw ValidationError("product index out of range 1.." + std::to_string(s->dims()));
      const Obj a = s->parse_object(op_a);
      const Obj b = s->parse_object(op_b);
      o.text = s->print_object(s->product(op_index, a, b)) + "\n";
    } else if (compare->parsed()) {
      command = "compare";
      auto s = make_structure(cmp_structure);
      const Obj a = s->parse_object(cmp_a);
      const Obj b = s->parse_object(cmp_b);
      const auto c = s->compare(a, b);
      const std::string ord = c < 0 ? "LT" : (c > 0 ? "GT" : "EQ");
      o.text = ord + "\n";
      if (expect == "leq" && c > 0) {
        o.exit_code = 1;
        o.verdict = "violated";
        o.witnesses.push_back(cmp_a + " > " + cmp_b);
      }
    } else if (interchange->parsed()) {
      command = "interchange";
      auto s = make_structure(ic_structure);
      const int given = static_cast<int>(interchange->count("A") + interchange->count("B") +
                                         interchange->count("C") + interchange->count("D"));
      if (given != 0 && given != 4)
        throw ValidationError("single-shot mode needs exactly four objects");
      if (given == 4) {
        const Obj a = s->parse_object(ic_a);
        const Obj b = s->parse_object(ic_b);
        const Obj c = s->parse_object(ic_c);
        const Obj d = s->parse_object(ic_d);
        const Obj lhs = s->product(ic_i, s->product(ic_j, a, b), s->product(ic_j, c, d));
        const Obj rhs = s->product(ic_j, s->product(ic_i, a, c), s->product(ic_i, b, d));
        const bool ok = leq(*s, lhs, rhs);
        o.text = "lhs: " + s->print_object(lhs) + "\nrhs: " + s->print_object(rhs) + "\n" +
                 (ok ? "holds\n" : "VIOLATED\n");
        if (!ok) {
          o.exit_code = 1;
          o.verdict = "violated";
          o.witnesses.push_back(s->print_object(lhs) + " > " + s->print_object(rhs));
        }
      } else {
        const int trials = ic_trials > 0 ? ic_trials : 1000;
        o.seed = ic_seed;
        o.has_seed = true;
        bool ok = true;
        for (int t = 0; t < trials && ok; ++t) {
          SplitMix64 rng = SplitMix64::for_trial(ic_seed, static_cast<std::uint64_t>(t));
          SampleBounds bounds;
          const Obj a = s->sample(rng, bounds);
          const Obj b = s->sample(rng, bounds);
          const Obj c = s->sample(rng, bounds);
          const Obj d = s->sample(rng, bounds);
          if (!interchange_holds(*s, ic_i, ic_j, a, b, c, d)) {
            ok = false;
            o.exit_code = 1;
            o.verdict = "violated";
            const std::string replay =
                "interchange --structure " + s->name() + " --i " + std::to_string(ic_i) +
                " --j " + std::to_string(ic_j) + " " + quoted(s->print_object(a)) + " " +
                quoted(s->print_object(b)) + " " + quoted(s->print_object(c)) + " " +
                quoted(s->print_object(d));
            o.witnesses.push_back(replay);
            o.text = "violation at trial " + std::to_string(t) + "\nreplay: " + replay + "\n";
          }
        }
        if (ok)
          o.text = "ok: trials=" + std::to_string(trials) +
                   " seed=" + std::to_string(ic_seed) + "\n";
      }
    } else if (certify->parsed()) {
      command = "certify";
      auto s = make_structure(ct_structure);
      CertOptions options;
      options.trials = ct_trials;
      options.seed = ct_seed;
      const CertReport report = certify_structure(*s, options);
      o.text = format_report(report);
      o.seed = ct_seed;
      o.has_seed = true;
      if (!report.passed()) {
        o.exit_code = 1;
        o.verdict = "failed";
        for (const auto& f : report.failures)
          if (!f.replay.empty()) o.witnesses.push_back(f.replay);
      }
    } else if (freehom->parsed()) {
      command = "free-hom";
      const Expr a = parse_expr(fh_a, fh_n);
      const Expr b = parse_expr(fh_b, fh_n);
      const bool exists = morphism_exists(a, b, fh_strict);
      o.text = std::string("hom: ") + (exists ? "yes" : "no") + "\ncount: " +
               (exists ? "1" : "0") + "\n";
      if (!exists) {
        const std::string w = morphism_witness(a, b, fh_strict);
        o.text += "violating pair: " + w + "\n";
        o.exit_code = 1;
        o.verdict = "no-morphism";
        o.witnesses.push_back(w);
      }
    } else if (gennat->parsed()) {
      command = "gen-nat";
      const auto starts = parse_starts(gn_starts);
      if (gn_terms < 1) throw ValidationError("--terms must be >= 1");
      std::string line;
      if (gn_closed) {
        for (int n = 1; n <= gn_terms; ++n)
          line += (n > 1 ? " " : "") + std::to_string(closed_form_nat(starts, n));
      } else {
        MinimalNatOperad gen(starts);
        for (int n = 1; n <= gn_terms; ++n)
          line += (n > 1 ? " " : "") + std::to_string(gen.term(n));
      }
      o.text = line + "\n";
    } else if (gendiag->parsed()) {
      command = "gen-diagram";
      if (gd_terms < 1) throw ValidationError("--terms must be >= 1");
      const Diagram seed = parse_diagram(gd_seed, 1);
      if (gd_closed) {
        if (!(seed == parse_diagram("[1]", 1)))
          throw ValidationError("--closed-form-box applies to the single-box seed [1]");
        auto s = make_structure("yd1");
        o.text = "structure: yd1\n0: empty\n";
        for (int n = 1; n <= gd_terms; ++n)
          o.text += std::to_string(n) + ": " + to_text(closed_form_single_box(n)) + "\n";
      } else {
        const Collection c = generate_minimal_diagram(seed, gd_terms);
        o.text = save_collection(c);
      }
    } else if (verify->parsed()) {
      command = "verify-operad";
      auto s = vo_structure.empty() ? nullptr : make_structure(vo_structure);
      const Collection c = load_collection_file(vo_file, s);
      VerifyOptions options;
      options.seed = vo_seed;
      o.seed = vo_seed;
      o.has_seed = true;
      bool all_valid = true;
      for (const auto& pair_text : vo_pairs) {
        const auto [p, q] = parse_pair(pair_text);
        const OperadReport report = verify_operad(c, p, q, vo_arity, options);
        o.text += format_report(report);
        if (!report.valid()) {
          all_valid = false;
          for (const auto& w : report.witnesses) o.witnesses.push_back(witness_text(w));
        }
      }
      if (!all_valid) {
        o.exit_code = 1;
        o.verdict = "invalid";
      }
    } else if (tensor->parsed()) {
      command = "tensor";
      auto s = tn_structure.empty() ? nullptr : make_structure(tn_structure);
      const Collection left = load_collection_file(tn_left, s);
      const Collection right = load_collection_file(tn_right, left.structure_ptr());
      const Collection prod = tensor_operads(left, right, tn_index, tn_m);
      o.text = save_collection(prod);
    } else if (algebra->parsed()) {
      command = "algebra";
      auto s = al_structure.empty() ? nullptr : make_structure(al_structure);
      const Collection c = load_collection_file(al_file, s);
      const BottomObj a = al_object == "empty"
                              ? BottomObj::empty()
                              : BottomObj(c.structure().parse_object(al_object));
      VerifyOptions options;
      options.seed = al_seed;
      o.seed = al_seed;
      o.has_seed = true;
      bool all_valid = true;
      for (const auto& pair_text : al_pairs) {
        const auto [p, q] = parse_pair(pair_text);
        const AlgebraReport report = verify_algebra(c, a, p, q, al_arity, options);
        o.text += format_report(report);
        if (!report.valid()) {
          all_valid = false;
          for (const auto& f : report.failures) o.witnesses.push_back(f);
        }
      }
      if (!all_valid) {
        o.exit_code = 1;
        o.verdict = "invalid";
      }
    } else if (render->parsed()) {
      command = "render";
      const int depth = std::max(infer_bracket_depth(rd_text), 1);
      if (depth > 2) throw ValidationError("rendering supports dimension <= 2 only");
      o.text = render_ascii(parse_diagram(rd_text, depth));
    } else {
      std::stringstream help;
      help << app.help();
      o.text = help.str();
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  emit(o, command, as_json, out);
  return o.exit_code;
}

}  // namespace foldcat::cli

#include "cohen/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <variant>

#include "cohen/brunnian.hpp"
#include "cohen/combing.hpp"
#include "cohen/delta.hpp"
#include "cohen/errors.hpp"
#include "cohen/expression.hpp"
#include "cohen/lifting.hpp"
#include "cohen/limits.hpp"
#include "cohen/surface.hpp"

namespace cohen {

namespace {

using nlohmann::json;

struct Report {
  std::string command;
  json inputs = json::object();
  json result;
  json witnesses = json::array();
  int status = kExitTrue;

  void witness(const std::string& label, json value) {
    witnesses.push_back({{"label", label}, {"value", std::move(value)}});
  }
};

/// Refusal raised by a handler; turns into exit status 1 with witnesses.
struct Refusal {
  std::string reason;
};

struct Options {
  int n = 0;
  bool json_out = false;
  bool verify = false;
  std::size_t budget = 0;
  std::vector<std::string> exprs;
  // Raw positionals. Plain strings: CLI11 would read "[x,y]" as a list.
  std::string first, second;
  int i = 0, j = 0;
  std::string blocks;
  std::string verb;
};

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + std::to_string(v[k]);
  return out;
}

int need_n(const Options& o) {
  if (o.n < 1) throw CLI::ValidationError("-n", "strand count required (-n <strands>)");
  return o.n;
}

BraidWord braid_arg(const std::string& text, int n) { return to_braid(parse(text, n), n); }

PureAWord aword_arg(const std::string& text, int n) {
  auto w = to_aword(parse(text, n), n);
  if (!w) throw PreconditionError("expected a word in the a<i>.<j> generators: " + text);
  return *w;
}

/// Parsed as an A-word when possible, otherwise as a braid.
std::variant<PureAWord, BraidWord> any_arg(const std::string& text, int n) {
  Expr e = parse(text, n);
  if (auto w = to_aword(e, n)) return *w;
  return to_braid(e, n);
}

json faces_json(const std::vector<BraidWord>& faces) {
  json out = json::array();
  for (const auto& f : faces) out.push_back(f.to_string());
  return out;
}

void cmd_eq(const Options& o, Report& r) {
  const int n = need_n(o);
  const bool eq = braids_equal(braid_arg(o.exprs.at(0), n), braid_arg(o.exprs.at(1), n));
  r.result = eq;
  r.status = eq ? kExitTrue : kExitFalse;
}

void cmd_perm(const Options& o, Report& r) {
  r.result = perm_of(braid_arg(o.exprs.at(0), need_n(o))).to_string();
}

void cmd_pure(const Options& o, Report& r) {
  const BraidWord b = braid_arg(o.exprs.at(0), need_n(o));
  r.result = is_pure(b);
  r.witness("permutation", perm_of(b).to_string());
  r.status = is_pure(b) ? kExitTrue : kExitFalse;
}

void cmd_del(const Options& o, Report& r) {
  r.inputs["i"] = o.i;
  r.result = delete_strand(braid_arg(o.exprs.at(0), need_n(o)), o.i).to_string();
}

void cmd_ins(const Options& o, Report& r) {
  r.inputs["i"] = o.i;
  r.result = insert_strand(braid_arg(o.exprs.at(0), need_n(o)), o.i).to_string();
}

void cmd_cohen(const Options& o, Report& r) {
  const FaceReport fr = face_report(braid_arg(o.exprs.at(0), need_n(o)));
  r.result = !fr.violation;
  if (!fr.violation) {
    if (!fr.faces.empty()) r.witness("common_face", fr.faces.front().to_string());
    return;
  }
  r.status = kExitFalse;
  r.witness("violation", {fr.violation->first, fr.violation->second});
  r.witness("faces", faces_json(fr.faces));
}

void cmd_brunnian(const Options& o, Report& r) {
  const BraidWord b = braid_arg(o.exprs.at(0), need_n(o));
  std::vector<int> bad;
  for (int i = 1; i <= b.strands() && b.strands() >= 2; ++i)
    if (!is_trivial(delete_strand(b, i))) bad.push_back(i);
  r.result = bad.empty();
  if (!bad.empty()) {
    r.status = kExitFalse;
    r.witness("nontrivial_faces", bad);
  }
}

std::vector<std::vector<int>> parse_blocks(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::stringstream ss(text);
  std::string block;
  while (std::getline(ss, block, ';')) {
    std::vector<int> cur;
    std::stringstream bs(block);
    std::string item;
    while (std::getline(bs, item, ',')) {
      try {
        std::size_t used = 0;
        cur.push_back(std::stoi(item, &used));
        if (item.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw CLI::ValidationError("--blocks", "bad strand '" + item + "'");
      }
    }
    blocks.push_back(std::move(cur));
  }
  return blocks;
}

void cmd_gcohen(const Options& o, Report& r) {
  const int n = need_n(o);
  r.inputs["blocks"] = o.blocks;
  const bool ok = is_generalized_cohen(braid_arg(o.exprs.at(0), n),
                                       StrandPartition(n, parse_blocks(o.blocks)));
  r.result = ok;
  r.status = ok ? kExitTrue : kExitFalse;
}

void cmd_unary(const Options& o, Report& r) {
  const BraidWord b = braid_arg(o.exprs.at(0), need_n(o));
  const bool ok = is_unary(b);
  r.result = ok;
  r.witness("permutation", perm_of(b).to_string());
  if (ok)
    r.witness("beta0", unary_factor(b).to_string());
  else
    r.status = kExitFalse;
}

void cmd_comb(const Options& o, Report& r) {
  const int n = need_n(o);
  const CombedForm c = comb(aword_arg(o.exprs.at(0), n));
  json comps = json::object();
  for (int k = 2; k <= n; ++k) comps["u" + std::to_string(k)] = c.component(k).to_string();
  r.result = comps;
}

void require_brunnian_arg(const PureAWord& w) {
  for (int i = 1; i <= w.strands() && w.strands() >= 2; ++i)
    if (!pure_trivial(face_on_aword(w, i)))
      throw Refusal{"input is not Brunnian: face d" + std::to_string(i) + " = " +
                    face_on_aword(w, i).to_string()};
}

void cmd_lift(const Options& o, Report& r) {
  const PureAWord w = aword_arg(o.exprs.at(0), need_n(o));
  require_brunnian_arg(w);
  r.result = tilde_lift(w.word()).to_string();
}

void cmd_tau(const Options& o, Report& r) {
  r.inputs["m"] = o.i;
  r.inputs["k"] = o.j;
  const PureAWord w = aword_arg(o.exprs.at(0), o.i);
  require_brunnian_arg(w);
  r.result = tau(o.i, o.j, w.word()).to_string();
}

void cmd_bigt(const Options& o, Report& r) {
  r.inputs["m"] = o.i;
  r.inputs["n"] = o.j;
  const PureAWord w = aword_arg(o.exprs.at(0), o.i);
  require_brunnian_arg(w);
  r.result = big_t(o.i, o.j, w.word()).to_string();
}

void cmd_hopf(const Options& o, Report& r) {
  const int k = o.i, n = o.j;
  r.inputs["k"] = k;
  r.inputs["n"] = n;
  auto arg = any_arg(o.exprs.at(0), k);
  if (auto* w = std::get_if<PureAWord>(&arg)) {
    require_brunnian_arg(*w);
    r.result = james_hopf(k, n, *w).to_string();
  } else {
    const BraidWord& b = std::get<BraidWord>(arg);
    if (!is_brunnian(b)) throw Refusal{"input is not Brunnian"};
    r.result = james_hopf(k, n, b).to_string();
  }
}

void cmd_decompose(const Options& o, Report& r) {
  const int n = need_n(o);
  auto arg = any_arg(o.exprs.at(0), n);
  json deltas = json::array();
  if (auto* w = std::get_if<PureAWord>(&arg)) {
    const PureFaceReport fr = face_report(*w);
    if (fr.violation)
      throw Refusal{"not Cohen: d" + std::to_string(fr.violation->first) + " != d" +
                    std::to_string(fr.violation->second)};
    for (const auto& d : hopf_decompose(*w)) deltas.push_back(d.to_string());
  } else {
    const BraidWord& b = std::get<BraidWord>(arg);
    if (!is_pure(b)) throw Refusal{"not pure: permutation " + perm_of(b).to_string()};
    const FaceReport fr = face_report(b);
    if (fr.violation)
      throw Refusal{"not Cohen: d" + std::to_string(fr.violation->first) + " != d" +
                    std::to_string(fr.violation->second)};
    for (const auto& d : hopf_decompose(b)) deltas.push_back(d.to_string());
  }
  r.result = deltas;
}

void cmd_solve(const Options& o, Report& r) {
  const int n = need_n(o);
  if (n < 2) throw CLI::ValidationError("-n", "solve needs n >= 2");
  const BraidWord alpha = braid_arg(o.exprs.at(0), n - 1);
  const SolveResult s = solve_cohen_system(alpha, n);
  if (!s.solved()) {
    r.status = kExitFalse;
    r.result = nullptr;
    r.witness("violation", {s.violation->first, s.violation->second});
    r.witness("faces", faces_json(s.faces));
    return;
  }
  r.result = s.beta->to_string();
  r.witness("faces_checked", n);
}

json element_list(const FiniteGroupModel& m, const std::vector<int>& v) {
  json out = json::array();
  for (int g : v) out.push_back(m.label(g));
  return out;
}

void cmd_rp2(const Options& o, Report& r) {
  r.inputs["verb"] = o.verb;
  auto m = build_p2_rp2();
  const auto cohen = enumerate_cohen(*m);
  const auto brun = enumerate_brunnian(*m);
  if (o.verb == "enumerate") {
    r.result = {{"cohen", element_list(*m, cohen)}, {"brunnian", element_list(*m, brun)}};
    r.witness("model", m->to_json());
    return;
  }
  const int ru = m->element("ru");
  const bool cyclic = cohen.size() == 4 && m->element_order(ru) == 4;
  const auto survivors = surviving_face_assignments();
  const bool unique = symmetry_classes(survivors) == 1;
  const bool h = h_element_check(*m, m->element("r"), m->element("u"));
  const bool ok = brun.size() == 2 && cyclic && unique && h && rp2_claims_hold(*m);
  r.result = ok;
  r.witness("brunnian_order", brun.size());
  r.witness("cohen_cyclic_generated_by_ru", cyclic);
  r.witness("face_assignment_classes", symmetry_classes(survivors));
  r.witness("h_is_cohen", h);
  r.status = ok ? kExitTrue : kExitFalse;
}

void emit(const Report& r, bool as_json, std::ostream& out) {
  if (as_json) {
    json j;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["result"] = r.result;
    j["witnesses"] = r.witnesses;
    out << j.dump(2) << '\n';
    return;
  }
  if (r.result.is_string())
    out << r.result.get<std::string>() << '\n';
  else if (r.result.is_object()) {
    for (const auto& [k, v] : r.result.items())
      out << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  } else if (r.result.is_array()) {
    int k = 1;
    for (const auto& v : r.result)
      out << k++ << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  } else if (!r.result.is_null()) {
    out << r.result.dump() << '\n';
  }
  for (const auto& w : r.witnesses) {
    const json& v = w["value"];
    out << w["label"].get<std::string>() << ": "
        << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braid computations: faces, Cohen and Brunnian braids, lifts, solver",
               "cohenbraid"};
  app.require_subcommand(1);
  Options o;
  app.add_option("-n", o.n, "Strand count of the expression");
  app.add_flag("--json", o.json_out, "Machine-readable output");
  app.add_flag("--verify", o.verify, "Check every rewrite rule against the Artin action");
  app.add_option("--budget", o.budget, "Syllable budget for free words and combed components");

  using Handler = void (*)(const Options&, Report&);
  std::vector<std::pair<CLI::App*, Handler>> subs;
  auto sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    subs.emplace_back(s, h);
    return s;
  };
  auto expr = [&](CLI::App* s, int count) {
    s->add_option("expr", o.first, "Braid expression")->required();
    if (count == 2) s->add_option("other", o.second, "Second braid expression")->required();
  };

  expr(sub("eq", "Equality of two braids", cmd_eq), 2);
  expr(sub("perm", "Permutation of a braid", cmd_perm), 1);
  expr(sub("pure", "Is the braid pure", cmd_pure), 1);
  for (auto [name, h] : {std::pair{"del", cmd_del}, std::pair{"ins", cmd_ins}}) {
    CLI::App* s = sub(name, name == std::string("del") ? "Delete strand i" : "Insert strand i", h);
    s->add_option("i", o.i, "Strand index")->required();
    expr(s, 1);
  }
  expr(sub("cohen", "Are all faces equal", cmd_cohen), 1);
  expr(sub("brunnian", "Are all faces trivial", cmd_brunnian), 1);
  {
    CLI::App* s = sub("gcohen", "Faces agree within each block", cmd_gcohen);
    s->add_option("--blocks", o.blocks, "Blocks such as 1,2;3,4")->required();
    expr(s, 1);
  }
  expr(sub("unary", "Unary braid test and factor", cmd_unary), 1);
  expr(sub("comb", "Combed normal form of an A-word", cmd_comb), 1);
  expr(sub("lift", "Lift of a Brunnian U_n word to P_{n+1}", cmd_lift), 1);
  {
    CLI::App* s = sub("tau", "tau_{m,k} of a Brunnian U_m word", cmd_tau);
    s->add_option("m", o.i)->required();
    s->add_option("k", o.j)->required();
    expr(s, 1);
  }
  {
    CLI::App* s = sub("bigT", "T_{m,n} of a Brunnian U_m word", cmd_bigt);
    s->add_option("m", o.i)->required();
    s->add_option("n", o.j)->required();
    expr(s, 1);
  }
  {
    CLI::App* s = sub("hopf", "James-Hopf H_{k,n} of a Brunnian braid on k strands", cmd_hopf);
    s->add_option("k", o.i)->required();
    s->add_option("n", o.j)->required();
    expr(s, 1);
  }
  expr(sub("decompose", "delta_k decomposition of a pure Cohen braid", cmd_decompose), 1);
  expr(sub("solve", "Solve d_1 b = ... = d_n b = alpha, alpha on n-1 strands", cmd_solve), 1);
  {
    CLI::App* s = sub("rp2", "Finite model of P_2(RP^2)", cmd_rp2);
    s->add_option("verb", o.verb)->required()->check(CLI::IsMember({"enumerate", "verify"}));
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitTrue;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (!o.first.empty()) o.exprs.push_back(o.first);
  if (!o.second.empty()) o.exprs.push_back(o.second);

  ScopedLimits limits;
  set_verify_mode(o.verify);
  if (o.budget > 0) {
    set_word_budget(o.budget);
    set_comb_budget(o.budget);
  }

  Report r;
  try {
    for (auto& [s, h] : subs) {
      if (!s->parsed()) continue;
      r.command = s->get_name();
      if (o.n > 0) r.inputs["n"] = o.n;
      if (!o.exprs.empty()) r.inputs["expr"] = o.exprs.size() == 1 ? json(o.exprs[0]) : json(o.exprs);
      h(o, r);
    }
  } catch (const Refusal& f) {
    r.status = kExitFalse;
    r.result = nullptr;
    r.witness("refusal", f.reason);
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  emit(r, o.json_out, out);
  return r.status;
}

}  // namespace cohen

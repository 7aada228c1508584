#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>

#include "ordinal/compare.hpp"
#include "ordinal/expr.hpp"
#include "ordinal/kernel.hpp"
#include "ordinal/mlseq.hpp"
#include "ordinal/oracle.hpp"
#include "ordinal/trees.hpp"

namespace ordcli {

namespace {

using namespace ordinal;

struct CmpArgs {
  std::string a, b;
  std::uint64_t width = 64;
  std::uint64_t depth = 512;
  bool kernel = false;
  bool emit_cert = false;
};

struct Relation {
  const char* label;
  Judgment judgment;
  TriBool value;
  std::optional<Cert> cert;
};

void emit_cert(std::ostream& out, const Relation& r) {
  out << "cert " << r.label << "\n";
  if (!r.cert) {
    out << "  none\n";
    return;
  }
  try {
    std::string text = serialize(*r.cert);
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      out << "  " << text.substr(start, end - start) << "\n";
      start = end + 1;
    }
  } catch (const KernelError&) {
    out << "  infinitary (not serializable)\n";
  }
}

int cmd_cmp(const CmpArgs& args, std::ostream& out) {
  const Name a = parse_name(args.a);
  const Name b = parse_name(args.b);
  const Fuel fuel{args.width, args.depth};
  Evaluator ev(fuel);
  Relation le_r{"le", Judgment(Rel::Le, a, {b}), {}, {}};
  Relation ge_r{"ge", Judgment(Rel::Le, b, {a}), {}, {}};
  Relation lt_r{"lt", Judgment(Rel::Lt, a, {b}), {}, {}};
  Relation gt_r{"gt", Judgment(Rel::Lt, b, {a}), {}, {}};
  Relation* rels[] = {&le_r, &ge_r, &lt_r, &gt_r};
  for (Relation* r : rels) r->value = ev.decide(r->judgment);

  if (args.kernel) {
    for (Relation* r : rels) {
      if (!r->value.is_unknown()) continue;
      if (auto c = prove(r->judgment)) {
        r->value = TriBool::yes();
        r->cert = std::move(c);
      }
    }
    // Consequences valid in every F-order: lt gives le, and a strict
    // inequality excludes the reverse non-strict one.
    if (lt_r.value.is_true()) le_r.value = TriBool::yes();
    if (gt_r.value.is_true()) ge_r.value = TriBool::yes();
    if (le_r.value.is_true()) gt_r.value = TriBool::no();
    if (ge_r.value.is_true()) lt_r.value = TriBool::no();
    if (lt_r.value.is_true()) ge_r.value = TriBool::no();
    if (gt_r.value.is_true()) le_r.value = TriBool::no();
  }
  const TriBool eq = le_r.value && ge_r.value;

  out << "le " << le_r.value.to_string() << "\n";
  out << "ge " << ge_r.value.to_string() << "\n";
  out << "lt " << lt_r.value.to_string() << "\n";
  out << "gt " << gt_r.value.to_string() << "\n";
  out << "eq " << eq.to_string() << "\n";

  std::string verdict = "unknown";
  if (eq.is_true()) {
    verdict = "eq";
  } else if (lt_r.value.is_true() || (le_r.value.is_true() && ge_r.value.is_false())) {
    verdict = "lt";
  } else if (gt_r.value.is_true() || (ge_r.value.is_true() && le_r.value.is_false())) {
    verdict = "gt";
  }
  out << "verdict " << verdict << "\n";

  if (args.emit_cert) {
    for (Relation* r : rels) {
      if (!r->value.is_true()) continue;
      if (!r->cert) r->cert = certify(r->judgment, fuel);
      emit_cert(out, *r);
    }
  }
  return verdict == "unknown" ? kUnknown : kOk;
}

int cmd_tree(const std::string& expr, std::uint64_t mu_bound, std::ostream& out) {
  const Name a = parse_name(expr);
  for (const NodePath& p : enumerate(a, mu_bound)) out << to_string(p) << "\n";
  return kOk;
}

int cmd_eval(const std::string& expr, std::ostream& out) {
  const Expr e = parse(expr);
  const Name a = lower(e);
  out << "expr " << print(e) << "\n";
  out << "name " << to_string(a) << "\n";
  if (a.is_finitary()) out << "value " << a.height() << "\n";
  return kOk;
}

int cmd_ml_prove(const std::string& text, bool emit, std::ostream& out) {
  const Sequent s = lower(parse_atoms(text));
  auto c = ml_prove(s);
  out << "derivable " << (c ? "true" : "false") << "\n";
  if (emit && c) {
    // Leaves first, one node per line.
    std::function<void(const MlCert&, const std::string&)> walk = [&](const MlCert& n,
                                                                      const std::string& path) {
      for (std::size_t i = 0; i < n->premises.size(); ++i) {
        walk(n->premises[i], path + "/" + std::to_string(i));
      }
      std::string rule = n->rule == MlRule::R1 ? "R1[" + std::to_string(n->n) + "]" : "R2";
      out << path << " " << rule << " {" << n->conclusion.to_string() << "} on "
          << n->principal.to_string() << "\n";
    };
    walk(*c, "root");
  }
  return kOk;
}

int cmd_check_laws(std::uint64_t seed, std::uint64_t cases, std::uint32_t size,
                   std::ostream& out) {
  oracle::BatteryOptions opts;
  opts.seed = seed;
  opts.cases = cases;
  opts.max_depth = size;
  const oracle::BatteryReport report = oracle::full_battery(opts);
  if (const oracle::LawResult* bad = report.first_failure()) {
    out << "FAIL " << bad->name << ": " << bad->counterexample << "\n";
    return kViolation;
  }
  out << "PASS " << report.passed() << "/" << report.checks() << "\n";
  return kOk;
}

struct DemoArgs {
  std::string which;
  std::string prefix = "001";
  std::string tail = "opaque";
  std::uint64_t width = 64;
};

std::vector<std::uint64_t> demo_samples(std::size_t prefix_len) {
  std::vector<std::uint64_t> s;
  for (std::uint64_t i = 0; i <= prefix_len + 1; ++i) s.push_back(i);
  s.push_back(prefix_len + 8);
  return s;
}

int demo_lpo(const DemoArgs& d, const BitSeq& u, std::ostream& out) {
  for (std::size_t i = 1; i < u.prefix.size(); ++i) {
    if (u.prefix[i] < u.prefix[i - 1]) throw InvalidArgument("lpo prefix must be nondecreasing");
  }
  const LpoNames n = eps_lpo(u);
  const bool constant = u.tail == BitSeq::Tail::ConstLast;
  out << "sequence " << d.prefix << " tail " << d.tail << "\n";
  out << "condition " << (constant ? "true" : "undecided") << "\n";
  out << "engine: " << lt(n.eps, {n.eps_prime}, Fuel{d.width, 512}).to_string() << "\n";
  const VerifyReport r =
      ml_verify(ml_lpo_cert(u), VerifyPolicy::spot_check(demo_samples(u.prefix.size())));
  out << "ml: " << (r.ok ? "provable" : "not verified") << "\n";
  return kOk;
}

int demo_llpo(const DemoArgs& d, const BitSeq& v, std::ostream& out) {
  const auto ones = std::count(v.prefix.begin(), v.prefix.end(), 1);
  if (ones > 1) throw InvalidArgument("llpo prefix may contain at most one 1");
  const bool constant = v.tail == BitSeq::Tail::ConstLast;
  if (!v.prefix.empty() && v.prefix.back() == 1) {
    throw InvalidArgument("llpo prefix must not end in 1 (the tail repeats it)");
  }
  const LlpoNames n = eps_llpo(v);
  const Fuel fuel{d.width, 512};
  out << "sequence " << d.prefix << " tail " << d.tail << "\n";
  if (constant) {
    auto it = std::find(v.prefix.begin(), v.prefix.end(), 1);
    const bool none = it == v.prefix.end();
    const auto k = static_cast<std::uint64_t>(it - v.prefix.begin());
    out << "condition even " << (none || k % 2 == 0 ? "true" : "false") << "\n";
    out << "condition odd " << (none || k % 2 == 1 ? "true" : "false") << "\n";
  } else {
    out << "condition even undecided\n";
    out << "condition odd undecided\n";
  }
  out << "engine even: " << le(n.eps, {n.eps_even}, fuel).to_string() << "\n";
  out << "engine odd: " << le(n.eps, {n.eps_odd}, fuel).to_string() << "\n";
  // The round-robin sup of the halves lists v_0, v_1, ... in order.
  const Name s = sup_finite({n.eps_even, n.eps_odd});
  std::optional<Cert> c;
  try {
    c = le_intro(n.eps, {s}, [s](std::uint64_t i) { return subordinal_lt(s, i); });
  } catch (const KernelError&) {
  }
  const bool ok = c && verify(*c, VerifyPolicy::spot_check(demo_samples(v.prefix.size()))).ok;
  out << "kernel sup: " << (ok ? "certified" : "not certified") << "\n";
  return kOk;
}

int cmd_demo(const DemoArgs& d, std::ostream& out) {
  BitSeq::Tail tail;
  if (d.tail == "const") {
    tail = BitSeq::Tail::ConstLast;
  } else if (d.tail == "opaque") {
    tail = BitSeq::Tail::Opaque;
  } else {
    throw InvalidArgument("tail must be const or opaque");
  }
  const BitSeq seq = BitSeq::parse(d.prefix, tail);
  if (d.which == "llpo") return demo_llpo(d, seq, out);
  return demo_lpo(d, seq, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructive ordinal names: comparison, arithmetic, certificates", "ord"};
  app.require_subcommand(1);

  CmpArgs cmp;
  auto* c_cmp = app.add_subcommand("cmp", "Compare two expressions");
  c_cmp->add_option("A", cmp.a)->required();
  c_cmp->add_option("B", cmp.b)->required();
  c_cmp->add_option("--width", cmp.width, "Indices enumerated per infinite family")
      ->capture_default_str();
  c_cmp->add_option("--depth", cmp.depth, "Recursion depth guard")->capture_default_str();
  c_cmp->add_flag("--kernel", cmp.kernel, "Try certificate search on unknown relations");
  c_cmp->add_flag("--emit-cert", cmp.emit_cert, "Print certificates of true relations");

  std::string tree_expr;
  std::uint64_t mu_bound = 4;
  auto* c_tree = app.add_subcommand("tree", "List tree nodes up to a mu bound");
  c_tree->add_option("EXPR", tree_expr)->required();
  c_tree->add_option("--mu-bound", mu_bound)->capture_default_str();

  std::string eval_expr;
  auto* c_eval = app.add_subcommand("eval", "Evaluate an expression");
  c_eval->add_option("EXPR", eval_expr)->required();

  std::string sequent;
  bool ml_emit = false;
  auto* c_ml = app.add_subcommand("ml-prove", "Decide a finitary sequent");
  c_ml->add_option("SEQUENT", sequent)->required();
  c_ml->add_flag("--emit-cert", ml_emit, "Print the derivation");

  std::uint64_t seed = 0, cases = 200;
  std::uint32_t size = 4;
  auto* c_laws = app.add_subcommand("check-laws", "Run the finitary law battery");
  c_laws->add_option("--seed", seed)->capture_default_str();
  c_laws->add_option("--cases", cases)->capture_default_str();
  c_laws->add_option("--size", size, "Maximum name depth")->capture_default_str();

  DemoArgs demo;
  auto* c_demo = app.add_subcommand("demo", "Omniscience examples");
  c_demo->add_option("WHICH", demo.which)
      ->required()
      ->check(CLI::IsMember({"lpo", "llpo", "ml-lpo"}));
  c_demo->add_option("--prefix", demo.prefix)->capture_default_str();
  c_demo->add_option("--tail", demo.tail)
      ->check(CLI::IsMember({"const", "opaque"}))
      ->capture_default_str();
  c_demo->add_option("--width", demo.width)->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*c_cmp) return cmd_cmp(cmp, out);
    if (*c_tree) return cmd_tree(tree_expr, mu_bound, out);
    if (*c_eval) return cmd_eval(eval_expr, out);
    if (*c_ml) return cmd_ml_prove(sequent, ml_emit, out);
    if (*c_laws) return cmd_check_laws(seed, cases, size, out);
    if (*c_demo) return cmd_demo(demo, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace ordcli
